//! Numerical invariants of the general member `X(d;d0)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear_system::enumerate_monomials;
use crate::rational::Rational;
use crate::singularities::classify_general_member;
use crate::toric_model::{
    curve_intersection, h0_class, hypersurface_class, is_ample, is_nef, quartic_intersection,
    BundleParams, DivisorClass, SpecialCurve,
};

/// `K_X = (H - 2F)|_X`.
pub const CANONICAL_RESTRICTION: DivisorClass = DivisorClass::new(1, -2);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CanonicalImage {
    /// `F_e` embedded by `|(d0 - 2) l + fibre|`.
    Hirzebruch {
        e: i64,
        section_multiple: i64,
    },
    /// Cone over the rational normal curve of degree `e`.
    Cone {
        degree: i64,
    },
    /// Canonical model `X_{2,10} ⊂ P(1^4,2,5)`; quadric rank 4 or 3.
    QuadricComplete {
        quadric_rank: u8,
    },
    Degenerate,
}

impl fmt::Display for CanonicalImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalImage::Hirzebruch {
                e,
                section_multiple,
            } => {
                write!(f, "F_{e} by |{section_multiple}l+fibre|")
            }
            CanonicalImage::Cone { degree } => write!(f, "cone over RNC of degree {degree}"),
            CanonicalImage::QuadricComplete { quadric_rank } => {
                write!(f, "X_2,10 with quadric of rank {quadric_rank}")
            }
            CanonicalImage::Degenerate => f.write_str("degenerate"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KodairaDimension {
    NegativeInfinity,
    Zero,
    Three,
}

impl fmt::Display for KodairaDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KodairaDimension::NegativeInfinity => "-inf",
            KodairaDimension::Zero => "0",
            KodairaDimension::Three => "3",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantSet {
    pub p_g: i64,
    pub q1: i64,
    pub q2: i64,
    #[serde(rename = "chi_O")]
    pub chi_o: i64,
    #[serde(rename = "K3")]
    pub k3: Rational,
    pub e: i64,
    pub canonical_image: CanonicalImage,
    pub on_noether_line: bool,
    #[serde(rename = "K_ample")]
    pub k_ample: bool,
    #[serde(rename = "K_nef")]
    pub k_nef: bool,
    pub mori_dream_general: bool,
    /// `X(0;0) = P^1 x S_10`.
    pub product: bool,
    pub kodaira_dimension: KodairaDimension,
}

fn canonical_image(params: BundleParams) -> CanonicalImage {
    let (d, d0) = (params.d(), params.d0());
    match (d, d0) {
        (2, 3) => CanonicalImage::QuadricComplete { quadric_rank: 4 },
        (2, 2) => CanonicalImage::QuadricComplete { quadric_rank: 3 },
        _ if params.min_d() >= 3 => CanonicalImage::Hirzebruch {
            e: params.e(),
            section_multiple: d0 - 2,
        },
        (_, 2) => CanonicalImage::Cone { degree: params.e() },
        _ => CanonicalImage::Degenerate,
    }
}

pub fn invariants(params: BundleParams) -> Result<InvariantSet> {
    if !classify_general_member(params).exists() {
        return Err(Error::NotExistent {
            d: params.d(),
            d0: params.d0(),
        });
    }
    let product = (params.d(), params.d0()) == (0, 0);
    let k = CANONICAL_RESTRICTION;
    let p_g = h0_class(k, params);
    let q1 = 0;
    let q2 = if product { 2 } else { 0 };
    let chi_o = 1 - q1 + q2 - p_g;
    let k3 = quartic_intersection([hypersurface_class(params), k, k, k], params);
    let kodaira_dimension = match params.d() {
        0 => KodairaDimension::NegativeInfinity,
        1 => KodairaDimension::Zero,
        _ => KodairaDimension::Three,
    };
    Ok(InvariantSet {
        p_g,
        q1,
        q2,
        chi_o,
        k3,
        e: params.e(),
        canonical_image: canonical_image(params),
        on_noether_line: k3 * 3 == Rational::from(4 * p_g - 10),
        k_ample: is_ample(k, params),
        k_nef: is_nef(k, params),
        mori_dream_general: params.d() >= params.d0(),
        product,
        kodaira_dimension,
    })
}

/// `P_m = h^0(mK_X)` for `1 <= m <= 10`, from `h^0(F, m(H - 2F))` minus the
/// sections vanishing on `X`, which only exist at `m = 10`.
pub fn plurigenus(params: BundleParams, m: i64) -> Result<i64> {
    if !(1..=10).contains(&m) {
        return Err(Error::PlurigenusRange(m));
    }
    let ambient = h0_class(DivisorClass::new(m, -2 * m), params);
    let through_x = if m == 10 {
        h0_class(DivisorClass::new(0, 10 * params.d() - 20), params)
    } else {
        0
    };
    Ok(ambient - through_x)
}

/// `1/r (1, -1, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuotientSingularity {
    pub r: i64,
    pub b: i64,
}

impl QuotientSingularity {
    pub fn new(r: i64, b: i64) -> Result<Self> {
        if r < 2 || b < 1 || b >= r || b.gcd(&r) != 1 {
            return Err(Error::InvalidQuotient { r, b });
        }
        Ok(QuotientSingularity { r, b })
    }

    /// `b(r - b) / 2r`.
    pub fn contribution(&self) -> Rational {
        Rational::new(self.b * (self.r - self.b), 2 * self.r)
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{},{})", self.r, self.r - 1, self.b)
    }
}

/// Rewrites `1/r (w1, w2, w3)` as `1/r (1, -1, b)`.
///
/// The unit is `w_i^{-1} mod r` for the first invertible `w_i` whose rescaled
/// triple contains both `1` and `r - 1`; the remaining entry is `b`.
pub fn basket_normalize(r: i64, weights: [i64; 3]) -> Result<QuotientSingularity> {
    let err = Error::NotIsolatedQuotient { r, weights };
    if r < 2 {
        return Err(err);
    }
    for &w in &weights {
        let ext = w.rem_euclid(r).extended_gcd(&r);
        if ext.gcd != 1 {
            continue;
        }
        let unit = ext.x.rem_euclid(r);
        let mut scaled: Vec<i64> = weights.iter().map(|x| (x * unit).rem_euclid(r)).collect();
        for target in [1, r - 1] {
            match scaled.iter().position(|&x| x == target) {
                Some(i) => {
                    scaled.swap_remove(i);
                }
                None => break,
            }
        }
        if scaled.len() == 1 {
            if let Ok(q) = QuotientSingularity::new(r, scaled[0]) {
                return Ok(q);
            }
        }
    }
    Err(err)
}

/// `K^3 = 2 (P_2 + 3 chi - sum b(r - b)/2r)`.
#[allow(non_snake_case)]
pub fn orbifold_rr_K3(p2: i64, chi_o: i64, basket: &[QuotientSingularity]) -> Rational {
    let correction: Rational = basket.iter().map(QuotientSingularity::contribution).sum();
    (Rational::from(p2 + 3 * chi_o) - correction) * 2
}

/// The flip of `X(d;1)` along `s0`, `d ∈ {2, 3, 4}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipRecord {
    pub params: BundleParams,
    #[serde(rename = "K_dot_s0")]
    pub k_dot_s0: i64,
    pub p_g: i64,
    pub basket: Vec<QuotientSingularity>,
    #[serde(rename = "K3_plus")]
    pub k3_plus: Rational,
    #[serde(rename = "P2")]
    pub p2: i64,
    /// Generators of the nef cone of the flipped ambient toric variety.
    pub nef_cone_fplus: [DivisorClass; 2],
}

struct FlipTableRow {
    d: i64,
    basket: &'static [(i64, [i64; 3])],
    k3_plus: (i64, i64),
}

const FLIP_TABLE: [FlipTableRow; 3] = [
    FlipTableRow {
        d: 2,
        basket: &[(2, [1, 1, 1]), (2, [1, 1, 1]), (4, [1, 3, 3])],
        k3_plus: (9, 4),
    },
    FlipTableRow {
        d: 3,
        basket: &[(2, [1, 1, 1]), (7, [3, 4, 6])],
        k3_plus: (85, 14),
    },
    FlipTableRow {
        d: 4,
        basket: &[(2, [1, 1, 1]), (3, [1, 2, 2]), (5, [1, 4, 4])],
        k3_plus: (301, 30),
    },
];

pub fn flip_analysis(d: i64) -> Result<FlipRecord> {
    let row = FLIP_TABLE
        .iter()
        .find(|row| row.d == d)
        .ok_or(Error::FlipRange(d))?;
    let params = BundleParams::new(d, 1)?;
    let invariants = invariants(params)?;
    let k_dot_s0 = curve_intersection(CANONICAL_RESTRICTION, SpecialCurve::S0, params)
        .to_integer()
        .expect("K.s0 is an integer");
    assert_eq!(k_dot_s0, params.d0() - 2);
    let basket = row
        .basket
        .iter()
        .map(|&(r, w)| basket_normalize(r, w))
        .collect::<Result<Vec<_>>>()?;
    let p2 = plurigenus(params, 2)?;
    let stored = Rational::new(row.k3_plus.0, row.k3_plus.1);
    let computed = orbifold_rr_K3(p2, invariants.chi_o, &basket);
    if computed != stored {
        return Err(Error::FlipInconsistent {
            d,
            computed,
            stored,
        });
    }
    Ok(FlipRecord {
        params,
        k_dot_s0,
        p_g: invariants.p_g,
        basket,
        k3_plus: stored,
        p2,
        nef_cone_fplus: [DivisorClass::new(1, -1), DivisorClass::new(1, -d)],
    })
}

/// `(a, e) ↦ (d, d0) = (2a - e, 2d - a)`, defined for `a >= e >= 0`.
pub fn kobayashi_translate(a: i64, e: i64) -> Result<BundleParams> {
    if a < 0 || e < 0 {
        return Err(Error::KobayashiNegative { a, e });
    }
    let d = 2 * a - e;
    let d0 = 2 * d - a;
    if a < e {
        return Err(Error::KobayashiRange { a, e, d, d0 });
    }
    BundleParams::new(d, d0)
}

/// `(d, d0) ↦ (a, e) = (2d - d0, 3d - 2d0)`.
pub fn kobayashi_params(params: BundleParams) -> (i64, i64) {
    (2 * params.d() - params.d0(), params.e())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliComponents {
    pub d: i64,
    pub components: u8,
    /// Smooth representative `X(d; 7d/8)` of the second component.
    pub second_component: Option<BundleParams>,
}

impl fmt::Display for ModuliComponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.second_component {
            Some(second) => write!(f, "{} components; second: {second}", self.components),
            None => write!(f, "{} component", self.components),
        }
    }
}

pub fn moduli_components(p_g: i64) -> Result<ModuliComponents> {
    if p_g < 7 || (p_g + 2) % 3 != 0 {
        return Err(Error::GeometricGenusForm(p_g));
    }
    let d = (p_g + 2) / 3;
    let second_component = if d % 8 == 0 {
        Some(BundleParams::new(d, 7 * d / 8)?)
    } else {
        None
    };
    Ok(ModuliComponents {
        d,
        components: if second_component.is_some() { 2 } else { 1 },
        second_component,
    })
}

/// Whether the scrollar degeneration `X(d;d0+1) ⇝ X(d;d0)` reaches every
/// member: each degree-10 monomial without `z` keeps a coefficient of
/// nonnegative degree after the coordinate change, i.e.
/// `2(deg c - a1 e) = (a0 + a1)(d - e) >= 0`.
pub fn deformation_feasible(params: BundleParams) -> bool {
    let (d, e) = (params.d(), params.e());
    let feasible = enumerate_monomials(10)
        .iter()
        .filter(|m| m.a5 == 0)
        .all(|m| {
            let (a0, a1) = (m.a0 as i64, m.a1 as i64);
            let shifted = 2 * (crate::linear_system::coefficient_degree_e_form(m, params) - a1 * e);
            assert_eq!(shifted, (a0 + a1) * (d - e));
            shifted >= 0
        });
    assert_eq!(feasible, e <= d);
    feasible
}

/// Rank of the degree-`n` part of the relative canonical ring of a simple
/// fibration: generators in degrees 1, 1, 2, 5 and one relation in degree 10.
pub fn canonical_ring_rank(n: u64) -> u64 {
    match n {
        0 => 1,
        1 => 2,
        _ => 3 + n * (n - 1) / 2,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceBasics {
    pub amplitude: i64,
    pub p_g: u64,
}

/// Number of monomials of weighted degree `degree`.
pub fn count_weighted_monomials(weights: &[i64], degree: i64) -> u64 {
    if degree < 0 {
        return 0;
    }
    let mut counts = vec![0u64; degree as usize + 1];
    counts[0] = 1;
    for &w in weights {
        let w = w as usize;
        for k in w..counts.len() {
            counts[k] += counts[k - w];
        }
    }
    counts[degree as usize]
}

/// Adjunction on a degree-`degree` hypersurface in `P(weights)`:
/// `K = O(degree - sum weights)`, and `p_g` counts monomials of that degree.
pub fn wps_hypersurface_basics(weights: &[i64], degree: i64) -> Result<HypersurfaceBasics> {
    if weights.is_empty() || degree <= 0 || weights.iter().any(|&w| w <= 0) {
        return Err(Error::NonPositiveWeight);
    }
    let amplitude = degree - weights.iter().sum::<i64>();
    Ok(HypersurfaceBasics {
        amplitude,
        p_g: count_weighted_monomials(weights, amplitude),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(d: i64, d0: i64) -> BundleParams {
        BundleParams::new(d, d0).unwrap()
    }

    #[test]
    fn main_examples() {
        let x87 = invariants(p(8, 7)).unwrap();
        assert_eq!((x87.p_g, x87.k3), (22, Rational::from(26)));
        assert!(x87.on_noether_line && x87.k_ample && x87.mori_dream_general);
        assert!(!invariants(p(8, 9)).unwrap().mori_dream_general);

        let x23 = invariants(p(2, 3)).unwrap();
        assert_eq!((x23.p_g, x23.k3), (4, Rational::from(2)));
        assert!(x23.k_nef && !x23.k_ample);
        assert_eq!(
            x23.canonical_image,
            CanonicalImage::QuadricComplete { quadric_rank: 4 }
        );

        let x82 = invariants(p(8, 2)).unwrap();
        assert_eq!((x82.p_g, x82.k3, x82.e), (22, Rational::from(26), 20));
        assert_eq!(x82.canonical_image, CanonicalImage::Cone { degree: 20 });
        assert_eq!(x82.chi_o, -21);

        assert!(matches!(
            invariants(p(5, 1)),
            Err(Error::NotExistent { .. })
        ));
    }

    #[test]
    fn low_cases() {
        let x00 = invariants(p(0, 0)).unwrap();
        assert!(x00.product);
        assert_eq!((x00.p_g, x00.q2, x00.chi_o), (0, 2, 3));
        assert_eq!(x00.k3, Rational::from(-6));
        assert_eq!(x00.kodaira_dimension, KodairaDimension::NegativeInfinity);

        let x11 = invariants(p(1, 1)).unwrap();
        assert_eq!(x11.kodaira_dimension, KodairaDimension::Zero);
        assert_eq!(x11.canonical_image, CanonicalImage::Degenerate);

        let x21 = invariants(p(2, 1)).unwrap();
        assert_eq!((x21.p_g, x21.chi_o), (4, -3));
        assert!(!x21.k_nef);
        assert_eq!(
            invariants(p(5, 7)).unwrap().canonical_image,
            CanonicalImage::Hirzebruch {
                e: 1,
                section_multiple: 5
            }
        );
    }

    #[test]
    fn plurigenus_examples() {
        assert_eq!(plurigenus(p(2, 1), 2).unwrap(), 11);
        assert_eq!(plurigenus(p(3, 1), 2).unwrap(), 22);
        assert_eq!(plurigenus(p(4, 1), 2).unwrap(), 33);
        assert!(plurigenus(p(4, 1), 0).is_err());
        assert!(plurigenus(p(4, 1), 11).is_err());
        for params in BundleParams::sweep(1..=30) {
            if classify_general_member(params).exists() {
                assert_eq!(
                    plurigenus(params, 1).unwrap(),
                    3 * params.d() - 2,
                    "{params}"
                );
            }
        }
    }

    #[test]
    fn plurigenera_grow() {
        for params in [p(8, 7), p(6, 5), p(3, 3)] {
            let values: Vec<i64> = (1..=10).map(|m| plurigenus(params, m).unwrap()).collect();
            assert!(
                values.windows(2).all(|w| w[0] < w[1]),
                "{params}: {values:?}"
            );
        }
    }

    #[test]
    fn basket_examples() {
        let q = basket_normalize(4, [1, 3, 3]).unwrap();
        assert_eq!(q, QuotientSingularity { r: 4, b: 3 });
        assert_eq!(q.contribution(), Rational::new(3, 8));
        assert_eq!(
            basket_normalize(7, [3, 4, 6]).unwrap(),
            QuotientSingularity { r: 7, b: 2 }
        );
        let half = basket_normalize(2, [1, 1, 1]).unwrap();
        assert_eq!((half.b, half.contribution()), (1, Rational::new(1, 4)));
        assert_eq!(
            basket_normalize(5, [1, 1, 2]),
            Err(Error::NotIsolatedQuotient {
                r: 5,
                weights: [1, 1, 2]
            })
        );
        assert!(basket_normalize(4, [2, 2, 1]).is_err());
        assert!(basket_normalize(1, [1, 1, 1]).is_err());
    }

    #[test]
    fn orbifold_rr_examples() {
        let b = |v: &[(i64, i64)]| -> Vec<_> {
            v.iter()
                .map(|&(r, b)| QuotientSingularity::new(r, b).unwrap())
                .collect()
        };
        assert_eq!(
            orbifold_rr_K3(11, -3, &b(&[(2, 1), (2, 1), (4, 3)])),
            Rational::new(9, 4)
        );
        assert_eq!(
            orbifold_rr_K3(22, -6, &b(&[(2, 1), (7, 2)])),
            Rational::new(85, 14)
        );
        assert_eq!(
            orbifold_rr_K3(33, -9, &b(&[(2, 1), (3, 2), (5, 4)])),
            Rational::new(301, 30)
        );
    }

    #[test]
    fn flip_rows() {
        let expected = [
            (2, 4, (9, 4), 3),
            (3, 7, (85, 14), 2),
            (4, 10, (301, 30), 3),
        ];
        for (d, p_g, (num, den), basket_len) in expected {
            let rec = flip_analysis(d).unwrap();
            assert_eq!(rec.p_g, p_g);
            assert_eq!(rec.k3_plus, Rational::new(num, den));
            assert_eq!(rec.basket.len(), basket_len);
            assert_eq!(rec.k_dot_s0, -1);
            assert_eq!(
                rec.nef_cone_fplus,
                [DivisorClass::new(1, -1), DivisorClass::new(1, -d)]
            );
        }
        assert_eq!(flip_analysis(5), Err(Error::FlipRange(5)));
    }

    #[test]
    fn rr_solves_for_integral_p2() {
        for row in &FLIP_TABLE {
            let rec = flip_analysis(row.d).unwrap();
            let correction: Rational = rec
                .basket
                .iter()
                .map(QuotientSingularity::contribution)
                .sum();
            let chi = 1 - rec.p_g;
            let p2 = rec.k3_plus / 2 - Rational::from(3 * chi) + correction;
            assert_eq!(p2.to_integer(), Some(rec.p2));
        }
    }

    #[test]
    fn kobayashi_examples() {
        assert!(matches!(
            kobayashi_translate(9, 10),
            Err(Error::KobayashiRange { d: 8, d0: 7, .. })
        ));
        assert_eq!(
            kobayashi_translate(9, 10).unwrap_err().to_string(),
            "a < e: outside Kobayashi-Chen-Hu range; inverse of X(8;7) (a = 9, e = 10)"
        );
        assert_eq!(kobayashi_params(p(8, 7)), (9, 10));
        assert_eq!(kobayashi_translate(0, 0).unwrap(), p(0, 0));
        assert!(kobayashi_translate(-1, 0).is_err());
    }

    #[test]
    fn moduli_examples() {
        let m = moduli_components(22).unwrap();
        assert_eq!(
            (m.d, m.components, m.second_component),
            (8, 2, Some(p(8, 7)))
        );
        assert_eq!(m.to_string(), "2 components; second: X(8;7)");
        assert_eq!(moduli_components(7).unwrap().components, 1);
        assert_eq!(moduli_components(8), Err(Error::GeometricGenusForm(8)));
        assert!(moduli_components(4).is_err());
    }

    #[test]
    fn deformation_examples() {
        assert!(!deformation_feasible(p(8, 7)));
        assert!(deformation_feasible(p(5, 5)));
        for d in 0..=40 {
            assert!(deformation_feasible(p(d, d)));
        }
        for params in BundleParams::sweep(0..=40) {
            assert_eq!(deformation_feasible(params), params.e() <= params.d());
        }
    }

    #[test]
    fn ring_rank_examples() {
        assert_eq!(canonical_ring_rank(1), 2);
        assert_eq!(canonical_ring_rank(5), 13);
        assert_eq!(canonical_ring_rank(10), 48);
        for n in 0..=50u64 {
            let generators = enumerate_monomials(n as u32).len() as u64;
            let relations = n
                .checked_sub(10)
                .map_or(0, |k| enumerate_monomials(k as u32).len() as u64);
            assert_eq!(canonical_ring_rank(n), generators - relations, "n = {n}");
        }
    }

    #[test]
    fn hypersurface_examples() {
        assert_eq!(
            wps_hypersurface_basics(&[1, 1, 4, 6, 15], 30).unwrap(),
            HypersurfaceBasics {
                amplitude: 3,
                p_g: 4
            }
        );
        assert_eq!(
            wps_hypersurface_basics(&[1, 1, 2, 5], 10).unwrap(),
            HypersurfaceBasics {
                amplitude: 1,
                p_g: 2
            }
        );
        assert_eq!(
            wps_hypersurface_basics(&[1, 1, 1, 1, 1], 5).unwrap(),
            HypersurfaceBasics {
                amplitude: 0,
                p_g: 1
            }
        );
        assert_eq!(wps_hypersurface_basics(&[1, 1, 1, 1, 1], 4).unwrap().p_g, 0);
        assert!(wps_hypersurface_basics(&[1, 0, 1], 4).is_err());
    }

    proptest! {
        #[test]
        fn normalize_is_stable(r in 2i64..60, b in 1i64..60) {
            prop_assume!(b < r && b.gcd(&r) == 1);
            let q = basket_normalize(r, [1, r - 1, b]).unwrap();
            prop_assert_eq!(q, QuotientSingularity { r, b });
        }

        #[test]
        fn kobayashi_roundtrip(a in 0i64..=100, e in 0i64..=100) {
            prop_assume!(a >= e);
            let params = kobayashi_translate(a, e).unwrap();
            prop_assert_eq!(kobayashi_params(params), (a, e));
            prop_assert_eq!(6 * a - 3 * e - 2, 3 * params.d() - 2);
            prop_assert!(params.e() <= params.d());
        }
    }
}
