//! Fibre monomials, coefficient degrees and the support of the general member
//! of `|10(H - dF)|`.
//!
//! A member of `|m(H - dF)|` is `sum c(t0,t1) x0^a0 x1^a1 y^a2 z^a5` over the
//! fibre monomials of weighted degree `a0 + a1 + 2a2 + 5a5 = m`, where each
//! coefficient is a binary form of a fixed degree. A negative degree forces the
//! coefficient to vanish; the general member has every other coefficient
//! nonzero, so all classification happens on supports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::toric_model::{h0_class, hypersurface_class, BundleParams, SpecialCurve};

/// The exponent vector of `x0^a0 x1^a1 y^a2 z^a5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FibreMonomial {
    pub a0: u32,
    pub a1: u32,
    pub a2: u32,
    pub a5: u32,
}

impl FibreMonomial {
    pub const fn new(a0: u32, a1: u32, a2: u32, a5: u32) -> Self {
        FibreMonomial { a0, a1, a2, a5 }
    }

    /// Weighted degree for the fibre weights `(1, 1, 2, 5)`.
    pub fn degree(&self) -> u32 {
        self.a0 + self.a1 + 2 * self.a2 + 5 * self.a5
    }

    /// The twist `w` of the line bundle on `P^1` carrying this monomial in the
    /// pushforward: `w = a0 d0 + a1 (3d - d0) + 2 a2 d + 5 a5 d`.
    pub fn base_weight(&self, params: BundleParams) -> i64 {
        let (d, d0) = (params.d(), params.d0());
        self.a0 as i64 * d0
            + self.a1 as i64 * (3 * d - d0)
            + 2 * self.a2 as i64 * d
            + 5 * self.a5 as i64 * d
    }
}

impl fmt::Display for FibreMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            ("x0", self.a0),
            ("x1", self.a1),
            ("y", self.a2),
            ("z", self.a5),
        ]
        .into_iter()
        .filter(|&(_, e)| e > 0)
        .map(|(v, e)| {
            if e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A fibre monomial together with the degree of its coefficient form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub monomial: FibreMonomial,
    pub degree: i64,
}

/// Every fibre monomial of weighted degree `m`, ordered by `a5` descending,
/// then `a2` descending, then `a1` ascending. The order is part of the
/// output format.
pub fn enumerate_monomials(m: u32) -> Vec<FibreMonomial> {
    let mut out = Vec::new();
    for a5 in (0..=m / 5).rev() {
        let rest5 = m - 5 * a5;
        for a2 in (0..=rest5 / 2).rev() {
            let rest2 = rest5 - 2 * a2;
            for a1 in 0..=rest2 {
                out.push(FibreMonomial::new(rest2 - a1, a1, a2, a5));
            }
        }
    }
    out
}

/// `-a0 (d - d0) - a1 (d0 - 2d)`.
pub fn coefficient_degree_d0_form(m: &FibreMonomial, params: BundleParams) -> i64 {
    let (d, d0) = (params.d(), params.d0());
    -(m.a0 as i64) * (d - d0) - (m.a1 as i64) * (d0 - 2 * d)
}

/// `((a0 + a1) d + (a1 - a0) e) / 2`; the numerator is always even.
pub fn coefficient_degree_e_form(m: &FibreMonomial, params: BundleParams) -> i64 {
    let (a0, a1) = (m.a0 as i64, m.a1 as i64);
    let twice = (a0 + a1) * params.d() + (a1 - a0) * params.e();
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

/// Coefficient degrees of every monomial of `|m(H - dF)|`.
///
/// The degree is `w - m d` with `w` the base weight. Because `y` and `z` carry
/// no base weight in the normalized presentation, this agrees with both closed
/// forms in `a0, a1` for every `m`; the agreement is checked on every entry.
pub fn coefficient_profile(params: BundleParams, m: u32) -> Vec<CoefficientEntry> {
    enumerate_monomials(m)
        .into_iter()
        .map(|monomial| {
            let degree = monomial.base_weight(params) - m as i64 * params.d();
            assert_eq!(degree, coefficient_degree_d0_form(&monomial, params));
            assert_eq!(degree, coefficient_degree_e_form(&monomial, params));
            CoefficientEntry { monomial, degree }
        })
        .collect()
}

pub const Z_SQUARED: FibreMonomial = FibreMonomial::new(0, 0, 0, 2);
pub const Y_FIFTH: FibreMonomial = FibreMonomial::new(0, 0, 5, 0);

/// Support of the general member after normalizing to
/// `z^2 + y^5 + sum_{a2 != 5} c x0^a0 x1^a1 y^a2`: the coefficients of `z^2`
/// and `y^5` are scaled to one and the terms linear in `z` are removed by
/// completing the square.
pub fn normal_form_support(params: BundleParams) -> Vec<FibreMonomial> {
    coefficient_profile(params, 10)
        .into_iter()
        .filter(|entry| {
            let m = entry.monomial;
            m == Z_SQUARED || m == Y_FIFTH || (m.a5 == 0 && m.a2 != 5 && entry.degree >= 0)
        })
        .map(|entry| entry.monomial)
        .collect()
}

/// Base loci of `|X|` on `F` and of `|K_X|` on the general `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseLocus {
    /// `None` when `|10(H - dF)|` is base point free.
    pub family_base: Option<SpecialCurve>,
    /// Base curve of the canonical system, when known.
    pub canonical_base: Option<SpecialCurve>,
}

pub fn base_locus(params: BundleParams) -> BaseLocus {
    let family_base = (params.d0() < params.d()).then_some(SpecialCurve::S0);
    let canonical_base =
        (params.min_d() >= 3 || (params.d(), params.d0()) == (2, 3)).then_some(SpecialCurve::Gamma);
    BaseLocus {
        family_base,
        canonical_base,
    }
}

/// Projective dimension of `|10(H - dF)|`, counted from the coefficient profile.
pub fn family_dimension(params: BundleParams) -> i64 {
    coefficient_profile(params, 10)
        .iter()
        .map(|entry| (entry.degree + 1).max(0))
        .sum::<i64>()
        - 1
}

/// Same quantity through `h^0` of the class on `F`; kept as the second route.
pub fn family_dimension_via_h0(params: BundleParams) -> i64 {
    h0_class(hypersurface_class(params), params) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: i64, d0: i64) -> BundleParams {
        BundleParams::new(d, d0).unwrap()
    }

    /// Independent enumeration over a box, filtered by weighted degree.
    fn brute_force_count(m: u32) -> usize {
        let mut n = 0;
        for a0 in 0..=m {
            for a1 in 0..=m {
                for a2 in 0..=m {
                    for a5 in 0..=m {
                        if a0 + a1 + 2 * a2 + 5 * a5 == m {
                            n += 1;
                        }
                    }
                }
            }
        }
        n
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(
            enumerate_monomials(1),
            vec![
                FibreMonomial::new(1, 0, 0, 0),
                FibreMonomial::new(0, 1, 0, 0)
            ]
        );
        assert_eq!(enumerate_monomials(10).len(), 49);
        assert_eq!(enumerate_monomials(5).len(), 13);
        assert_eq!(enumerate_monomials(0), vec![FibreMonomial::new(0, 0, 0, 0)]);
        for m in 0..=25 {
            let list = enumerate_monomials(m);
            assert_eq!(list.len(), brute_force_count(m), "m = {m}");
            assert!(list.iter().all(|x| x.degree() == m));
            let mut dedup = list.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), list.len());
        }
    }

    #[test]
    fn ordering_is_fixed() {
        let list = enumerate_monomials(10);
        assert_eq!(list[0], Z_SQUARED);
        assert_eq!(list[13], Y_FIFTH);
        assert_eq!(list.last(), Some(&FibreMonomial::new(0, 10, 0, 0)));
    }

    #[test]
    fn profile_examples() {
        let find = |params, mon: FibreMonomial| {
            coefficient_profile(params, 10)
                .into_iter()
                .find(|e| e.monomial == mon)
                .unwrap()
                .degree
        };
        assert_eq!(find(p(8, 7), FibreMonomial::new(9, 1, 0, 0)), 0);
        for d in 1..=30 {
            for d0 in 0..d {
                if 3 * d - 2 * d0 < 0 {
                    continue;
                }
                assert_eq!(
                    find(p(d, d0), FibreMonomial::new(10, 0, 0, 0)),
                    -10 * (d - d0)
                );
            }
            for d0 in 0..=(3 * d) / 2 {
                assert_eq!(find(p(d, d0), FibreMonomial::new(7, 3, 0, 0)), 4 * d0 - d);
            }
        }
        assert_eq!(find(p(4, 4), Z_SQUARED), 0);
        assert_eq!(find(p(4, 1), Y_FIFTH), 0);
    }

    #[test]
    fn degrees_decrease_in_a0() {
        for params in BundleParams::sweep(0..=20) {
            let profile = coefficient_profile(params, 10);
            for x in &profile {
                for y in &profile {
                    let same_rest =
                        x.monomial.a2 == y.monomial.a2 && x.monomial.a5 == y.monomial.a5;
                    if same_rest && x.monomial.a0 > y.monomial.a0 {
                        assert!(x.degree <= y.degree);
                    }
                }
            }
        }
    }

    #[test]
    fn support_examples() {
        let general = normal_form_support(p(5, 6));
        assert_eq!(general.len(), 37);
        assert!(general.contains(&Z_SQUARED) && general.contains(&Y_FIFTH));

        let s = normal_form_support(p(8, 7));
        assert!(s.contains(&FibreMonomial::new(9, 1, 0, 0)));
        assert!(!s.iter().any(|m| m.a1 == 0 && m.a2 < 5 && m.a5 == 0));

        assert!(!normal_form_support(p(2, 1)).contains(&FibreMonomial::new(9, 1, 0, 0)));

        for params in BundleParams::sweep(0..=30) {
            let s = normal_form_support(params);
            assert!(s.contains(&Z_SQUARED) && s.contains(&Y_FIFTH));
            assert!(s.iter().all(|m| m.a5 == 0 || *m == Z_SQUARED));
            if params.d0() >= params.d() {
                assert_eq!(s.len(), 37);
            }
        }
    }

    #[test]
    fn base_loci() {
        assert_eq!(base_locus(p(5, 5)).family_base, None);
        assert_eq!(base_locus(p(8, 7)).family_base, Some(SpecialCurve::S0));
        assert_eq!(base_locus(p(2, 1)).family_base, Some(SpecialCurve::S0));
        assert_eq!(
            base_locus(p(5, 4)).canonical_base,
            Some(SpecialCurve::Gamma)
        );
        assert_eq!(base_locus(p(5, 2)).canonical_base, None);
    }

    #[test]
    fn family_dimension_two_routes() {
        assert_eq!(family_dimension(p(0, 0)), 48);
        assert_eq!(family_dimension(p(2, 3)), family_dimension_via_h0(p(2, 3)));
        for params in BundleParams::sweep(0..=40) {
            assert_eq!(
                family_dimension(params),
                family_dimension_via_h0(params),
                "{params}"
            );
        }
    }

    #[test]
    fn display() {
        assert_eq!(FibreMonomial::new(9, 1, 0, 0).to_string(), "x0^9*x1");
        assert_eq!(Z_SQUARED.to_string(), "z^2");
        assert_eq!(FibreMonomial::new(0, 0, 0, 0).to_string(), "1");
    }
}
