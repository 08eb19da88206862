use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "d0 = {d0} exceeds 3d/2 for d = {d} (e = {e} < 0); swap x0 and x1, i.e. use d0' = 3d - d0 = {swapped}"
    )]
    Normalization {
        d: i64,
        d0: i64,
        e: i64,
        swapped: i64,
    },

    #[error("bundle parameters must be nonnegative, got d = {d}, d0 = {d0}")]
    NegativeParameter { d: i64, d0: i64 },

    #[error("bundle parameters d = {d}, d0 = {d0} exceed the supported bound 1000000")]
    ParameterTooLarge { d: i64, d0: i64 },

    #[error("unknown coordinate label {0:?}; expected one of t0, t1, x0, x1, y, z")]
    UnknownCoordinate(String),

    #[error("X({d};{d0}) does not exist: 4*d0 < d")]
    NotExistent { d: i64, d0: i64 },

    #[error("plurigenus is only available for 1 <= m <= 10, got m = {0}")]
    PlurigenusRange(i64),

    #[error("flip analysis is only defined for d in {{2, 3, 4}}, got d = {0}")]
    FlipRange(i64),

    #[error("table basket does not satisfy orbifold Riemann-Roch for d = {d}: computed {computed}, stored {stored}")]
    FlipInconsistent {
        d: i64,
        computed: crate::Rational,
        stored: crate::Rational,
    },

    #[error("weights {weights:?} mod {r} are not of isolated (1,-1,b) form")]
    NotIsolatedQuotient { r: i64, weights: [i64; 3] },

    #[error("invalid quotient singularity 1/{r}(1,-1,{b})")]
    InvalidQuotient { r: i64, b: i64 },

    #[error("a < e: outside Kobayashi-Chen-Hu range; inverse of X({d};{d0}) (a = {a}, e = {e})")]
    KobayashiRange { a: i64, e: i64, d: i64, d0: i64 },

    #[error("kobayashi parameters must satisfy a >= 0 and e >= 0, got a = {a}, e = {e}")]
    KobayashiNegative { a: i64, e: i64 },

    #[error("p_g = {0} is not of the form 3d - 2 with d >= 3")]
    GeometricGenusForm(i64),

    #[error("N = {0} < 0: not a simple fibration")]
    NegativeN(i64),

    #[error(
        "chi(omega_X) = {chi_omega} from the characteristic sheaves, but p_g - q2 + q1 - 1 = {supplied}"
    )]
    InconsistentInvariants { chi_omega: i64, supplied: i64 },

    #[error("deg E5 = {stored} but deg E1 + deg E2 = {expected}")]
    InconsistentDegE5 { stored: i64, expected: i64 },

    #[error("q1 = {q1} but a fibration over a genus {genus} curve has q1 = {genus}")]
    IrregularityMismatch { q1: i64, genus: i64 },

    #[error("h^0 and h^1 of E1 (x) omega_B are not determined by degrees over genus {genus}")]
    Undetermined { genus: i64 },

    #[error("split of E1 into degrees ({0}, {1}) does not sum to deg E1 = {2}")]
    InconsistentSplit(i64, i64, i64),

    #[error("genus of the base must be nonnegative, got {0}")]
    NegativeGenus(i64),

    #[error("weights and degree lists have different lengths ({weights} vs {degrees})")]
    LengthMismatch { weights: usize, degrees: usize },

    #[error("weights must be positive")]
    NonPositiveWeight,
}

/// Errors raised by the textual and JSON decoders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid integer {0:?}")]
    InvalidInteger(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("integer overflow")]
    Overflow,

    #[error("invalid divisor class {0:?}; expected e.g. \"H-2F\", \"10H-20F\" or \"3,-5\"")]
    InvalidClass(String),

    #[error("invalid bundle parameters {0:?}; expected \"d;d0\", \"d,d0\" or \"X(d;d0)\"")]
    InvalidParams(String),

    #[error(transparent)]
    Params(#[from] Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
