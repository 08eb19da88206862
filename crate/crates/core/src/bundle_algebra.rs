//! Degree arithmetic for simple fibrations in `(1,2)`-surfaces over a curve
//! `B` of genus `b`.
//!
//! `E1`, `E2`, `E5` are the sheaves of new generators of the relative
//! canonical algebra in degrees 1, 2, 5 (ranks 2, 1, 1), with
//! `E5 = det E1 ⊗ E2`. Everything here is a consequence of their degrees.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::toric_model::{canonical_class_f, BundleParams, DivisorClass, WeightMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FibrationDataRepr")]
pub struct FibrationData {
    genus_b: i64,
    deg_e1: i64,
    deg_e2: i64,
    deg_e5: i64,
    split_e1: Option<(i64, i64)>,
}

#[derive(Deserialize)]
struct FibrationDataRepr {
    genus_b: i64,
    deg_e1: i64,
    deg_e2: i64,
    deg_e5: Option<i64>,
    split_e1: Option<(i64, i64)>,
}

impl TryFrom<FibrationDataRepr> for FibrationData {
    type Error = Error;

    fn try_from(repr: FibrationDataRepr) -> Result<Self> {
        let data = FibrationData::new(repr.genus_b, repr.deg_e1, repr.deg_e2)?;
        if let Some(deg_e5) = repr.deg_e5 {
            if deg_e5 != data.deg_e5 {
                return Err(Error::InconsistentDegE5 {
                    stored: deg_e5,
                    expected: data.deg_e5,
                });
            }
        }
        match repr.split_e1 {
            Some((first, second)) => data.with_split(first, second),
            None => Ok(data),
        }
    }
}

impl FibrationData {
    pub fn new(genus_b: i64, deg_e1: i64, deg_e2: i64) -> Result<Self> {
        if genus_b < 0 {
            return Err(Error::NegativeGenus(genus_b));
        }
        Ok(FibrationData {
            genus_b,
            deg_e1,
            deg_e2,
            deg_e5: deg_e1 + deg_e2,
            split_e1: None,
        })
    }

    /// Records `E1 = O(first) ⊕ O(second)`.
    pub fn with_split(self, first: i64, second: i64) -> Result<Self> {
        if first + second != self.deg_e1 {
            return Err(Error::InconsistentSplit(first, second, self.deg_e1));
        }
        Ok(FibrationData {
            split_e1: Some((first, second)),
            ..self
        })
    }

    /// Gorenstein data of `X(d;d0)` over `P^1`: `E1 = O(d0) ⊕ O(3d - d0)`,
    /// `E2 = O(2d)`.
    pub fn gorenstein(params: BundleParams) -> Self {
        let (d, d0) = (params.d(), params.d0());
        FibrationData::new(0, 3 * d, 2 * d)
            .and_then(|data| data.with_split(d0, 3 * d - d0))
            .expect("Gorenstein degrees are consistent")
    }

    pub fn genus_b(&self) -> i64 {
        self.genus_b
    }

    pub fn deg_e1(&self) -> i64 {
        self.deg_e1
    }

    pub fn deg_e2(&self) -> i64 {
        self.deg_e2
    }

    pub fn deg_e5(&self) -> i64 {
        self.deg_e5
    }

    pub fn split_e1(&self) -> Option<(i64, i64)> {
        self.split_e1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NInvariant {
    pub value: i64,
    /// `false` when `N < 0`: no simple fibration has these degrees.
    pub simple: bool,
}

/// `N = 3 deg E2 - 2 deg E1`.
pub fn n_invariant(data: &FibrationData) -> NInvariant {
    let value = 3 * data.deg_e2 - 2 * data.deg_e1;
    NInvariant {
        value,
        simple: value >= 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiInvariants {
    #[serde(rename = "chi_OB")]
    pub chi_ob: i64,
    #[serde(rename = "chi_E1")]
    pub chi_e1: i64,
    pub chi_omega: i64,
    #[serde(rename = "K3")]
    pub k3: Rational,
}

pub fn chi_invariants(data: &FibrationData) -> Result<ChiInvariants> {
    let n = n_invariant(data);
    if !n.simple {
        return Err(Error::NegativeN(n.value));
    }
    let chi_ob = 1 - data.genus_b;
    let chi_e1 = data.deg_e1 + 2 * chi_ob;
    let chi_omega = chi_e1 - 5 * chi_ob;
    let k3 = Rational::new(4 * chi_omega, 3) - 2 * chi_ob + Rational::new(n.value, 6);
    Ok(ChiInvariants {
        chi_ob,
        chi_e1,
        chi_omega,
        k3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoetherCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub gap: Rational,
    pub equality: bool,
}

/// Compares `K^3` with `(4(p_g - q2) - 10(1 - q1)) / 3`. The gap is `N/6`.
pub fn noether_check(data: &FibrationData, p_g: i64, q1: i64, q2: i64) -> Result<NoetherCheck> {
    let chi = chi_invariants(data)?;
    if q1 != data.genus_b {
        return Err(Error::IrregularityMismatch {
            q1,
            genus: data.genus_b,
        });
    }
    let supplied = p_g - q2 + q1 - 1;
    if chi.chi_omega != supplied {
        return Err(Error::InconsistentInvariants {
            chi_omega: chi.chi_omega,
            supplied,
        });
    }
    let lhs = chi.k3;
    let rhs = Rational::new(4 * (p_g - q2) - 10 * (1 - q1), 3);
    let gap = lhs - rhs;
    let n = n_invariant(data).value;
    assert_eq!(gap, Rational::new(n, 6));
    Ok(NoetherCheck {
        lhs,
        rhs,
        gap,
        equality: n == 0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleCohomology {
    pub h0: i64,
    pub h1: i64,
}

/// `h^0, h^1` of a degree-`degree` line bundle on a genus-`genus` curve, when
/// the degree alone determines them.
pub fn line_bundle_cohomology(genus: i64, degree: i64) -> Result<LineBundleCohomology> {
    if genus == 0 {
        return Ok(LineBundleCohomology {
            h0: (degree + 1).max(0),
            h1: (-degree - 1).max(0),
        });
    }
    if degree > 2 * genus - 2 {
        Ok(LineBundleCohomology {
            h0: degree + 1 - genus,
            h1: 0,
        })
    } else if degree < 0 {
        Ok(LineBundleCohomology {
            h0: 0,
            h1: genus - 1 - degree,
        })
    } else {
        Err(Error::Undetermined { genus })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCohomology {
    pub p_g: i64,
    pub q2: i64,
}

/// `p_g = h^0(E1 ⊗ ω_B)` and `q2 = h^1(E1 ⊗ ω_B)` for a split `E1`.
pub fn split_cohomology(data: &FibrationData) -> Result<SplitCohomology> {
    let (first, second) = data.split_e1.ok_or(Error::Undetermined {
        genus: data.genus_b,
    })?;
    let canonical_degree = 2 * data.genus_b - 2;
    let parts =
        [first, second].map(|delta| line_bundle_cohomology(data.genus_b, delta + canonical_degree));
    let [a, b] = parts;
    let (a, b) = (a?, b?);
    Ok(SplitCohomology {
        p_g: a.h0 + b.h0,
        q2: a.h1 + b.h1,
    })
}

/// Negative-degree pieces, which semipositivity of `E1` and `E2` rules out.
pub fn semipositivity_warnings(data: &FibrationData) -> Vec<String> {
    let mut warnings = Vec::new();
    if let Some((first, second)) = data.split_e1 {
        for (i, delta) in [first, second].into_iter().enumerate() {
            if delta < 0 {
                warnings.push(format!("E1 summand {i} has negative degree {delta}"));
            }
        }
    } else if data.deg_e1 < 0 {
        warnings.push(format!("deg E1 = {} < 0", data.deg_e1));
    }
    if data.deg_e2 < 0 {
        warnings.push(format!("deg E2 = {} < 0", data.deg_e2));
    }
    warnings
}

/// Weight matrix of `P_B(O(d0') ⊕ O(d1') ⊕ O(d2') ⊕ O(d5'))` with fibre
/// weights `(1,1,2,5)`.
pub fn split_bundle_weight_matrix(d0: i64, d1: i64, d2: i64, d5: i64) -> WeightMatrix {
    WeightMatrix {
        rows: [[1, 1, -d0, -d1, -d2, -d5], WeightMatrix::FIBRE_ROW],
    }
}

/// Degrees after tensoring the weighted algebra by `O(shift)`.
pub fn twist_degrees(degrees: [i64; 4], shift: i64) -> [i64; 4] {
    let [d0, d1, d2, d5] = degrees;
    [d0 + shift, d1 + shift, d2 + 2 * shift, d5 + 5 * shift]
}

/// `(d0, 3d - d0, 2d, 5d)`.
pub fn untwisted_degrees(params: BundleParams) -> [i64; 4] {
    let (d, d0) = (params.d(), params.d0());
    [d0, 3 * d - d0, 2 * d, 5 * d]
}

/// `(d0 - d, 2d - d0, 0, 0)`.
pub fn normalized_degrees(params: BundleParams) -> [i64; 4] {
    twist_degrees(untwisted_degrees(params), -params.d())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeDualising {
    pub taut_twist: i64,
    pub base_twist: i64,
}

/// `ω_{F/B} = O_F(-sum a_k) ⊗ π^* det`, with one weight per rank-one summand.
pub fn relative_dualising_degree(
    weights: &[i64],
    char_degrees: &[i64],
) -> Result<RelativeDualising> {
    if weights.len() != char_degrees.len() {
        return Err(Error::LengthMismatch {
            weights: weights.len(),
            degrees: char_degrees.len(),
        });
    }
    if weights.iter().any(|&w| w <= 0) {
        return Err(Error::NonPositiveWeight);
    }
    Ok(RelativeDualising {
        taut_twist: -weights.iter().sum::<i64>(),
        base_twist: char_degrees.iter().sum(),
    })
}

/// `ω_{F/B}` as a class on `F(d;d0)`, from the normalized presentation where
/// `O(1) = H - dF`.
pub fn relative_dualising_class(params: BundleParams) -> DivisorClass {
    let rel = relative_dualising_degree(&[1, 1, 2, 5], &normalized_degrees(params))
        .expect("fibre weights are positive");
    let class =
        rel.taut_twist * DivisorClass::new(1, -params.d()) + rel.base_twist * DivisorClass::F;
    assert_eq!(class, canonical_class_f(params) + 2 * DivisorClass::F);
    class
}
