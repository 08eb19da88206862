//! The toric 4-fold `F(d;d0)`: a `P(1,1,2,5)`-bundle over `P^1`.
//!
//! `F(d;d0)` is the quotient of `C^6` (coordinates `t0, t1, x0, x1, y, z`) by
//! the `(C*)^2` action with weight matrix
//!
//! ```text
//!   t0  t1  x0      x1       y  z
//!    1   1  d - d0  d0 - 2d  0  0
//!    0   0  1       1        2  5
//! ```
//!
//! Its class group has rank two, generated by the fibre class `F` (the divisor
//! of `t0`) and `H` (the divisor of `t0^d0 x0`). Everything here works on that
//! rank-two lattice: divisor classes are pairs `(a, b)` meaning `aH + bF`, and
//! the quartic intersection form is determined by `H^4 = d/2`, `H^3F = 1/10`
//! and `F^2 = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::linear_system::enumerate_monomials;
use crate::rational::Rational;

/// The pair `(d, d0)` labelling `F(d;d0)` and its family `X(d;d0)`.
///
/// Construction enforces the normalization `e = 3d - 2d0 >= 0` together with
/// `d, d0 >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BundleParams {
    d: i64,
    d0: i64,
}

impl BundleParams {
    /// Keeps every intersection number and monomial weight well inside `i64`.
    pub const MAX_D: i64 = 1_000_000;

    pub fn new(d: i64, d0: i64) -> Result<Self> {
        if d < 0 || d0 < 0 {
            return Err(Error::NegativeParameter { d, d0 });
        }
        if d > Self::MAX_D || d0 > Self::MAX_D {
            return Err(Error::ParameterTooLarge { d, d0 });
        }
        let e = 3 * d - 2 * d0;
        if e < 0 {
            return Err(Error::Normalization {
                d,
                d0,
                e,
                swapped: 3 * d - d0,
            });
        }
        Ok(BundleParams { d, d0 })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn d0(&self) -> i64 {
        self.d0
    }

    /// `e = 3d - 2d0`, the degree of the Hirzebruch surface `D_y ∩ D_z`.
    pub fn e(&self) -> i64 {
        3 * self.d - 2 * self.d0
    }

    pub fn min_d(&self) -> i64 {
        self.d.min(self.d0)
    }

    /// Every valid `(d, d0)` with `d` in the given range, `d0` ascending.
    pub fn sweep(d_range: std::ops::RangeInclusive<i64>) -> impl Iterator<Item = BundleParams> {
        d_range.flat_map(|d| (0..=(3 * d) / 2).map(move |d0| BundleParams { d, d0 }))
    }
}

impl fmt::Display for BundleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({};{})", self.d, self.d0)
    }
}

impl FromStr for BundleParams {
    type Err = ParseError;

    /// Accepts `d;d0`, `d,d0`, `X(d;d0)` or `F(d;d0)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || ParseError::InvalidParams(s.to_string());
        let mut body = s.trim();
        for prefix in ["X(", "F(", "("] {
            if let Some(rest) = body.strip_prefix(prefix) {
                body = rest.strip_suffix(')').ok_or_else(invalid)?;
                break;
            }
        }
        let (d, d0) = body
            .split_once(';')
            .or_else(|| body.split_once(','))
            .ok_or_else(invalid)?;
        let d = d.trim().parse::<i64>().map_err(|_| invalid())?;
        let d0 = d0.trim().parse::<i64>().map_err(|_| invalid())?;
        Ok(BundleParams::new(d, d0)?)
    }
}

impl<'de> Deserialize<'de> for BundleParams {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            d: i64,
            d0: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        BundleParams::new(raw.d, raw.d0).map_err(serde::de::Error::custom)
    }
}

/// The six homogeneous coordinates of `F(d;d0)`, in weight-matrix column order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Coordinate {
    #[serde(rename = "t0")]
    T0,
    #[serde(rename = "t1")]
    T1,
    #[serde(rename = "x0")]
    X0,
    #[serde(rename = "x1")]
    X1,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "z")]
    Z,
}

impl Coordinate {
    pub const ALL: [Coordinate; 6] = [
        Coordinate::T0,
        Coordinate::T1,
        Coordinate::X0,
        Coordinate::X1,
        Coordinate::Y,
        Coordinate::Z,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Coordinate::T0 => "t0",
            Coordinate::T1 => "t1",
            Coordinate::X0 => "x0",
            Coordinate::X1 => "x1",
            Coordinate::Y => "y",
            Coordinate::Z => "z",
        }
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Coordinate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Coordinate::ALL
            .into_iter()
            .find(|c| c.label() == s.trim())
            .ok_or_else(|| Error::UnknownCoordinate(s.to_string()))
    }
}

/// The class `aH + bF` in `Cl(F) = Z^2`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { a: 0, b: 0 };
    pub const H: DivisorClass = DivisorClass { a: 1, b: 0 };
    pub const F: DivisorClass = DivisorClass { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        DivisorClass { a, b }
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.a, -self.b)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * rhs.a, self * rhs.b)
    }
}

impl std::iter::Sum for DivisorClass {
    fn sum<I: Iterator<Item = DivisorClass>>(iter: I) -> Self {
        iter.fold(DivisorClass::ZERO, |acc, c| acc + c)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(f: &mut fmt::Formatter<'_>, coeff: i64, sym: &str, first: bool) -> fmt::Result {
            let sign = if coeff < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            match coeff.unsigned_abs() {
                1 => write!(f, "{sign}{sym}"),
                n => write!(f, "{sign}{n}{sym}"),
            }
        }
        match (self.a, self.b) {
            (0, 0) => f.write_str("0"),
            (a, 0) => term(f, a, "H", true),
            (0, b) => term(f, b, "F", true),
            (a, b) => {
                term(f, a, "H", true)?;
                term(f, b, "F", false)
            }
        }
    }
}

impl FromStr for DivisorClass {
    type Err = ParseError;

    /// Parses `aH+bF` style expressions (`H-2F`, `10H-20F`, `-F`, `0`) or a
    /// bare pair `a,b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || ParseError::InvalidClass(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(invalid());
        }
        if let Some((a, b)) = compact.split_once(',') {
            let a = a.parse::<i64>().map_err(|_| invalid())?;
            let b = b.parse::<i64>().map_err(|_| invalid())?;
            return Ok(DivisorClass::new(a, b));
        }
        if compact == "0" {
            return Ok(DivisorClass::ZERO);
        }

        let mut class = DivisorClass::ZERO;
        let (mut seen_h, mut seen_f) = (false, false);
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if rest.len() == compact.len() => (false, rest),
                _ => return Err(invalid()),
            };
            let symbol_at = body.find(['H', 'F']).ok_or_else(invalid)?;
            let digits = &body[..symbol_at];
            let coeff = if digits.is_empty() {
                if negative {
                    -1
                } else {
                    1
                }
            } else {
                if !digits.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(invalid());
                }
                let signed = if negative {
                    format!("-{digits}")
                } else {
                    digits.to_string()
                };
                signed.parse::<i64>().map_err(|_| invalid())?
            };
            match &body[symbol_at..symbol_at + 1] {
                "H" if !seen_h => {
                    seen_h = true;
                    class.a = coeff;
                }
                "F" if !seen_f => {
                    seen_f = true;
                    class.b = coeff;
                }
                _ => return Err(invalid()),
            }
            rest = &body[symbol_at + 1..];
        }
        Ok(class)
    }
}

/// A 2x6 integer weight matrix with columns `(t0, t1, x0, x1, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightMatrix {
    pub rows: [[i64; 6]; 2],
}

impl WeightMatrix {
    pub const LABELS: [&'static str; 6] = ["t0", "t1", "x0", "x1", "y", "z"];
    pub const FIBRE_ROW: [i64; 6] = [0, 0, 1, 1, 2, 5];

    pub fn column(&self, coord: Coordinate) -> (i64, i64) {
        let i = coord as usize;
        (self.rows[0][i], self.rows[1][i])
    }

    /// Adds `k` times the fibre row to the first row. This is the change of
    /// presentation induced by twisting the weighted symmetric algebra by
    /// `O(-k)`; the toric variety is unchanged.
    pub fn shift_first_row(&self, k: i64) -> WeightMatrix {
        let mut rows = self.rows;
        for (r0, r1) in rows[0].iter_mut().zip(self.rows[1]) {
            *r0 += k * r1;
        }
        WeightMatrix { rows }
    }

    /// The shift `k` with `self.shift_first_row(k) == other`, if the second
    /// rows agree and one exists.
    pub fn row_shift_to(&self, other: &WeightMatrix) -> Option<i64> {
        if self.rows[1] != other.rows[1] {
            return None;
        }
        // z has fibre weight 5 and no base weight in either normal form, but in
        // general the pivot is any column with nonzero fibre weight.
        let pivot = self.rows[1].iter().position(|&w| w != 0)?;
        let diff = other.rows[0][pivot] - self.rows[0][pivot];
        if diff % self.rows[1][pivot] != 0 {
            return None;
        }
        let k = diff / self.rows[1][pivot];
        (self.shift_first_row(k) == *other).then_some(k)
    }
}

impl fmt::Display for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .chain(Self::LABELS.iter().map(|l| l.len()))
            .max()
            .unwrap_or(1);
        let line = |cells: Vec<String>| {
            cells
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(
            f,
            "{}",
            line(Self::LABELS.iter().map(|s| s.to_string()).collect())
        )?;
        writeln!(
            f,
            "{}",
            line(self.rows[0].iter().map(|v| v.to_string()).collect())
        )?;
        write!(
            f,
            "{}",
            line(self.rows[1].iter().map(|v| v.to_string()).collect())
        )
    }
}

/// Distinguished torus-invariant curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpecialCurve {
    /// `D_x1 ∩ D_y ∩ D_z`, where the general member is singular when `d0 < d`.
    S0,
    /// `D_x0 ∩ D_x1 ∩ D_z`, the curve of `1/2(1,1,1)` points of `F`.
    S2,
    /// `D_x0 ∩ D_x1 ∩ D_y`, the curve of `1/5(1,1,2)` points of `F`.
    S5,
    /// `X ∩ D_x0 ∩ D_x1`, the base curve of `|K_X|`.
    Gamma,
}

impl SpecialCurve {
    pub const ALL: [SpecialCurve; 4] = [
        SpecialCurve::S0,
        SpecialCurve::S2,
        SpecialCurve::S5,
        SpecialCurve::Gamma,
    ];

    /// The torus-invariant divisors cut out by the curve; `Gamma` is cut out
    /// by two of them together with the hypersurface `X`.
    pub fn divisors(self) -> &'static [Coordinate] {
        use Coordinate::*;
        match self {
            SpecialCurve::S0 => &[X1, Y, Z],
            SpecialCurve::S2 => &[X0, X1, Z],
            SpecialCurve::S5 => &[X0, X1, Y],
            SpecialCurve::Gamma => &[X0, X1],
        }
    }
}

impl fmt::Display for SpecialCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialCurve::S0 => "s0",
            SpecialCurve::S2 => "s2",
            SpecialCurve::S5 => "s5",
            SpecialCurve::Gamma => "Gamma",
        })
    }
}

pub fn weight_matrix(params: BundleParams) -> WeightMatrix {
    let (d, d0) = (params.d(), params.d0());
    WeightMatrix {
        rows: [[1, 1, d - d0, d0 - 2 * d, 0, 0], WeightMatrix::FIBRE_ROW],
    }
}

/// Class of the torus-invariant divisor `D_coord`.
pub fn coordinate_divisor_class(coord: Coordinate, params: BundleParams) -> DivisorClass {
    let (d, d0) = (params.d(), params.d0());
    match coord {
        Coordinate::T0 | Coordinate::T1 => DivisorClass::F,
        Coordinate::X0 => DivisorClass::new(1, -d0),
        Coordinate::X1 => DivisorClass::new(1, d0 - 3 * d),
        Coordinate::Y => DivisorClass::new(2, -2 * d),
        Coordinate::Z => DivisorClass::new(5, -5 * d),
    }
}

/// `K_F = -9H + (10d - 2)F`.
pub fn canonical_class_f(params: BundleParams) -> DivisorClass {
    DivisorClass::new(-9, 10 * params.d() - 2)
}

/// The class `10(H - dF)` of the hypersurfaces `X(d;d0)`.
pub fn hypersurface_class(params: BundleParams) -> DivisorClass {
    DivisorClass::new(10, -10 * params.d())
}

/// The tautological class `O_F(1) = H - dF`.
pub fn tautological_class(params: BundleParams) -> DivisorClass {
    DivisorClass::new(1, -params.d())
}

/// `c1 c2 c3 c4` on `F(d;d0)`, by multilinear expansion with `H^4 = d/2`,
/// `H^3F = 1/10` and every monomial containing `F^2` equal to zero.
pub fn quartic_intersection(classes: [DivisorClass; 4], params: BundleParams) -> Rational {
    let h4 = Rational::new(params.d(), 2);
    let h3f = Rational::new(1, 10);
    let all_h: i64 = classes.iter().map(|c| c.a).product();
    let one_f: i64 = (0..4)
        .map(|j| {
            classes[j].b
                * classes
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, c)| c.a)
                    .product::<i64>()
        })
        .sum();
    h4 * all_h + h3f * one_f
}

/// Intersection of `c` with the torus-invariant curve `D_p ∩ D_q ∩ D_r`.
pub fn torus_curve_intersection(
    c: DivisorClass,
    curve: [Coordinate; 3],
    params: BundleParams,
) -> Rational {
    let [p, q, r] = curve.map(|coord| coordinate_divisor_class(coord, params));
    quartic_intersection([c, p, q, r], params)
}

pub fn curve_intersection(c: DivisorClass, curve: SpecialCurve, params: BundleParams) -> Rational {
    match curve {
        SpecialCurve::Gamma => {
            let x0 = coordinate_divisor_class(Coordinate::X0, params);
            let x1 = coordinate_divisor_class(Coordinate::X1, params);
            quartic_intersection([c, x0, x1, hypersurface_class(params)], params)
        }
        _ => {
            let divs = curve.divisors();
            torus_curve_intersection(c, [divs[0], divs[1], divs[2]], params)
        }
    }
}

/// `aH + bF` is nef iff `a >= 0` and `b >= -a min(d, d0)`.
pub fn is_nef(c: DivisorClass, params: BundleParams) -> bool {
    c.a >= 0 && c.b as i128 >= -(c.a as i128) * params.min_d() as i128
}

/// `aH + bF` is ample iff `a > 0` and `b > -a min(d, d0)`.
pub fn is_ample(c: DivisorClass, params: BundleParams) -> bool {
    c.a > 0 && c.b as i128 > -(c.a as i128) * params.min_d() as i128
}

/// `h^0(F, O(aH + bF))`, counted as sections of the pushforward to `P^1`:
/// each fibre monomial of weighted degree `a` contributes
/// `h^0(P^1, O(w + b)) = max(0, w + b + 1)`, where `w` is its base weight.
pub fn h0_class(c: DivisorClass, params: BundleParams) -> i64 {
    if c.a < 0 {
        return 0;
    }
    enumerate_monomials(c.a as u32)
        .iter()
        .map(|m| (m.base_weight(params) + c.b + 1).max(0))
        .sum()
}
