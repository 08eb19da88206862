//! Singularities of the general member `X(d;d0)`.
//!
//! The general member can only be singular along the section
//! `s0 = D_x1 ∩ D_y ∩ D_z`. Near a point of `s0` the fibre has local
//! coordinates `x = x1/x0`, `y = y/x0^2`, `z = z/x0^5`, and a fibre monomial
//! `x0^a0 x1^a1 y^a2` becomes `x^a1 y^a2`. A surface germ is Du Val when, for
//! each of the weightings `1/2(1,1,0)`, `1/3(1,1,1)`, `1/4(2,1,1)`,
//! `1/6(3,2,1)` in every assignment to the coordinates, its equation has a
//! monomial of weight `< 1`. The test here runs on monomial supports in these
//! fixed coordinates.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linear_system::{normal_form_support, Y_FIFTH, Z_SQUARED};
use crate::rational::Rational;
use crate::toric_model::BundleParams;

/// `1/r (w_1, w_2, w_3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightSystem {
    pub r: u32,
    pub weights: [u32; 3],
}

impl WeightSystem {
    pub const DU_VAL: [WeightSystem; 4] = [
        WeightSystem {
            r: 2,
            weights: [1, 1, 0],
        },
        WeightSystem {
            r: 3,
            weights: [1, 1, 1],
        },
        WeightSystem {
            r: 4,
            weights: [2, 1, 1],
        },
        WeightSystem {
            r: 6,
            weights: [3, 2, 1],
        },
    ];

    /// `1/4(2,1,1)` with the weight 2 on `z`: the weighting that detects the
    /// existence boundary `4 d0 >= d`.
    pub const QUARTER: WeightSystem = WeightSystem {
        r: 4,
        weights: [2, 1, 1],
    };
    pub const QUARTER_Z_HEAVY: Assignment = Assignment([1, 2, 0]);
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.weights;
        write!(f, "1/{}({a},{b},{c})", self.r)
    }
}

/// A permutation `[i_x, i_y, i_z]`: coordinate `x` receives weight
/// `weights[i_x]`, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment(pub [usize; 3]);

impl Assignment {
    pub const ALL: [Assignment; 6] = [
        Assignment([0, 1, 2]),
        Assignment([0, 2, 1]),
        Assignment([1, 0, 2]),
        Assignment([1, 2, 0]),
        Assignment([2, 0, 1]),
        Assignment([2, 1, 0]),
    ];
}

/// Exponents of `x^p y^q z^r` in the local fibre coordinates at `s0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LocalMonomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl LocalMonomial {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        LocalMonomial { x, y, z }
    }

    pub fn weight(&self, system: WeightSystem, assignment: Assignment) -> Rational {
        let [ix, iy, iz] = assignment.0;
        let w = &system.weights;
        let total = self.x * w[ix] + self.y * w[iy] + self.z * w[iz];
        Rational::new(total as i64, system.r as i64)
    }
}

impl fmt::Display for LocalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("x", self.x), ("y", self.y), ("z", self.z)]
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

/// Singularities of the general member of `|10(H - dF)|` on `F(d;d0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SingularityClassification {
    /// No member has canonical singularities (`4 d0 < d`).
    NotExistent,
    Smooth,
    /// `count = 8 d0 - 7 d` isolated terminal points on `s0`.
    TerminalPoints {
        count: i64,
    },
    /// Canonical singularities along `s0`, with `4 d0 - d` dissident points.
    CanonicalCurve {
        dissident_count: i64,
    },
}

impl SingularityClassification {
    pub fn exists(&self) -> bool {
        !matches!(self, SingularityClassification::NotExistent)
    }

    pub fn label(&self) -> &'static str {
        match self {
            SingularityClassification::NotExistent => "NotExistent",
            SingularityClassification::Smooth => "Smooth",
            SingularityClassification::TerminalPoints { .. } => "TerminalPoints",
            SingularityClassification::CanonicalCurve { .. } => "CanonicalCurve",
        }
    }

    /// Terminal point count or dissident count; `None` for the other variants.
    pub fn count(&self) -> Option<i64> {
        match *self {
            SingularityClassification::TerminalPoints { count } => Some(count),
            SingularityClassification::CanonicalCurve { dissident_count } => Some(dissident_count),
            _ => None,
        }
    }
}

impl fmt::Display for SingularityClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.count() {
            Some(n) => write!(f, "{}({n})", self.label()),
            None => f.write_str(self.label()),
        }
    }
}

/// Local support of the normal form at a general point of `s0`.
pub fn local_support_at_s0(params: BundleParams) -> BTreeSet<LocalMonomial> {
    normal_form_support(params)
        .into_iter()
        .map(|m| {
            if m == Z_SQUARED {
                LocalMonomial::new(0, 0, 2)
            } else if m == Y_FIFTH {
                LocalMonomial::new(0, 5, 0)
            } else {
                LocalMonomial::new(m.a1, m.a2, 0)
            }
        })
        .collect()
}

pub fn weight_below_one_exists(
    support: &BTreeSet<LocalMonomial>,
    system: WeightSystem,
    assignment: Assignment,
) -> bool {
    support
        .iter()
        .any(|m| m.weight(system, assignment) < Rational::ONE)
}

/// The monomial Du Val criterion: every weighting, in every assignment, sees a
/// monomial of weight `< 1`.
pub fn duval_test(support: &BTreeSet<LocalMonomial>) -> bool {
    WeightSystem::DU_VAL.iter().all(|&system| {
        Assignment::ALL
            .iter()
            .all(|&assignment| weight_below_one_exists(support, system, assignment))
    })
}

/// The existence boundary read off the weight test on the local support.
pub fn exists_by_weight_test(params: BundleParams) -> bool {
    let support = local_support_at_s0(params);
    let full = duval_test(&support);
    let quarter = weight_below_one_exists(
        &support,
        WeightSystem::QUARTER,
        WeightSystem::QUARTER_Z_HEAVY,
    );
    assert_eq!(full, quarter, "weight tests disagree at {params}");
    full
}

pub fn classify_general_member(params: BundleParams) -> SingularityClassification {
    let (d, d0) = (params.d(), params.d0());
    let closed_form_exists = 4 * d0 >= d;
    assert_eq!(
        exists_by_weight_test(params),
        closed_form_exists,
        "weight test and 4*d0 >= d disagree at {params}"
    );
    if !closed_form_exists {
        SingularityClassification::NotExistent
    } else if d0 >= d || 8 * d0 == 7 * d {
        SingularityClassification::Smooth
    } else if 8 * d0 > 7 * d {
        SingularityClassification::TerminalPoints {
            count: 8 * d0 - 7 * d,
        }
    } else {
        SingularityClassification::CanonicalCurve {
            dissident_count: 4 * d0 - d,
        }
    }
}

/// The same trichotomy phrased through `e = 3d - 2d0`.
pub fn classify_by_e(params: BundleParams) -> SingularityClassification {
    let (d, e) = (params.d(), params.e());
    if 2 * e > 5 * d {
        SingularityClassification::NotExistent
    } else if e <= d || 4 * e == 5 * d {
        SingularityClassification::Smooth
    } else if 4 * e < 5 * d {
        SingularityClassification::TerminalPoints {
            count: 5 * d - 4 * e,
        }
    } else {
        SingularityClassification::CanonicalCurve {
            dissident_count: 5 * d - 2 * e,
        }
    }
}

/// `t^k x^p y^q z^r` near a dissident point, `t` a local parameter on the base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChartMonomial {
    pub t: u32,
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl ChartMonomial {
    pub const fn new(t: u32, x: u32, y: u32, z: u32) -> Self {
        ChartMonomial { t, x, y, z }
    }
}

impl fmt::Display for ChartMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("t", self.t), ("x", self.x), ("y", self.y), ("z", self.z)]
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

/// Weights of the chart `z = t^5 z'`, `y = t^2 y'`, `x = t^3 x'` and the power
/// of `t` the equation must be divisible by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupWeights {
    pub z: u32,
    pub y: u32,
    pub x: u32,
    pub t: u32,
    pub target: u32,
}

impl BlowupWeights {
    pub const DISSIDENT: BlowupWeights = BlowupWeights {
        z: 5,
        y: 2,
        x: 3,
        t: 1,
        target: 10,
    };

    pub fn weight(&self, m: &ChartMonomial) -> u32 {
        self.t * m.t + self.x * m.x + self.y * m.y + self.z * m.z
    }
}

/// The worst local equation at a dissident point: `z^2 + y^5 + t x^3`.
pub fn dissident_germ() -> BTreeSet<ChartMonomial> {
    [
        ChartMonomial::new(0, 0, 0, 2),
        ChartMonomial::new(0, 0, 5, 0),
        ChartMonomial::new(1, 3, 0, 0),
    ]
    .into_iter()
    .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartCheck {
    /// Monomials whose weight differs from the target, with that weight.
    pub offending: Vec<(ChartMonomial, u32)>,
    /// Strict transform support in `(x', y', z')`, when the check passes.
    pub strict_transform: Option<BTreeSet<LocalMonomial>>,
}

impl ChartCheck {
    pub fn exact(&self) -> bool {
        self.offending.is_empty()
    }
}

/// Checks that the weighted substitution divides the equation by exactly
/// `t^target`, i.e. every support monomial has weight `target`.
pub fn crepant_chart_check(
    weights: BlowupWeights,
    support: &BTreeSet<ChartMonomial>,
) -> ChartCheck {
    let offending: Vec<_> = support
        .iter()
        .map(|m| (*m, weights.weight(m)))
        .filter(|&(_, w)| w != weights.target)
        .collect();
    let strict_transform = offending.is_empty().then(|| {
        support
            .iter()
            .map(|m| LocalMonomial::new(m.x, m.y, m.z))
            .collect()
    });
    ChartCheck {
        offending,
        strict_transform,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: i64, d0: i64) -> BundleParams {
        BundleParams::new(d, d0).unwrap()
    }

    fn set(ms: &[(u32, u32, u32)]) -> BTreeSet<LocalMonomial> {
        ms.iter()
            .map(|&(x, y, z)| LocalMonomial::new(x, y, z))
            .collect()
    }

    #[test]
    fn local_support_examples() {
        let s = local_support_at_s0(p(8, 3));
        for m in [(0, 0, 2), (0, 5, 0), (3, 0, 0)] {
            assert!(s.contains(&LocalMonomial::new(m.0, m.1, m.2)));
        }
        assert!(local_support_at_s0(p(8, 7)).contains(&LocalMonomial::new(1, 0, 0)));
        let thin = local_support_at_s0(p(9, 2));
        assert!(thin.iter().all(|m| m.z > 0 || m.x + m.y >= 4));
    }

    #[test]
    fn weight_examples() {
        let basic = set(&[(0, 0, 2), (0, 5, 0), (3, 0, 0)]);
        let third = WeightSystem {
            r: 3,
            weights: [1, 1, 1],
        };
        for a in Assignment::ALL {
            assert!(weight_below_one_exists(&basic, third, a));
        }
        let no_x = set(&[(0, 0, 2), (0, 5, 0)]);
        assert!(!weight_below_one_exists(
            &no_x,
            WeightSystem::QUARTER,
            WeightSystem::QUARTER_Z_HEAVY
        ));
        let constant = set(&[(0, 0, 0)]);
        for s in WeightSystem::DU_VAL {
            for a in Assignment::ALL {
                assert!(weight_below_one_exists(&constant, s, a));
            }
        }
    }

    #[test]
    fn z_heavy_assignment() {
        let z = LocalMonomial::new(0, 0, 1);
        assert_eq!(
            z.weight(WeightSystem::QUARTER, WeightSystem::QUARTER_Z_HEAVY),
            Rational::new(1, 2)
        );
        let x = LocalMonomial::new(1, 0, 0);
        assert_eq!(
            x.weight(WeightSystem::QUARTER, WeightSystem::QUARTER_Z_HEAVY),
            Rational::new(1, 4)
        );
    }

    #[test]
    fn duval_examples() {
        assert!(duval_test(&set(&[(0, 0, 2), (0, 5, 0), (3, 0, 0)])));
        assert!(!duval_test(&set(&[(0, 0, 2), (0, 5, 0)])));
        assert!(duval_test(&set(&[(1, 0, 0)])));
        assert!(!duval_test(&BTreeSet::new()));
    }

    #[test]
    fn classification_examples() {
        use SingularityClassification::*;
        assert_eq!(classify_general_member(p(8, 7)), Smooth);
        assert_eq!(
            classify_general_member(p(16, 15)),
            TerminalPoints { count: 8 }
        );
        assert_eq!(
            classify_general_member(p(3, 1)),
            CanonicalCurve { dissident_count: 1 }
        );
        assert_eq!(classify_general_member(p(5, 1)), NotExistent);
        assert_eq!(classify_general_member(p(0, 0)), Smooth);
        assert_eq!(classify_by_e(p(8, 7)), Smooth);
        assert_eq!(
            classify_by_e(p(8, 2)),
            CanonicalCurve { dissident_count: 0 }
        );
    }

    #[test]
    fn boundaries_pinned() {
        use SingularityClassification::*;
        for k in 1..=25 {
            assert_eq!(classify_general_member(p(8 * k, 7 * k)), Smooth);
            assert!(matches!(
                classify_general_member(p(8 * k, 7 * k - 1)),
                CanonicalCurve { .. }
            ));
            assert_eq!(
                classify_general_member(p(8 * k, 7 * k + 1)),
                if k == 1 {
                    Smooth
                } else {
                    TerminalPoints { count: 8 }
                }
            );
            assert_eq!(
                classify_general_member(p(4 * k, k)),
                CanonicalCurve { dissident_count: 0 }
            );
            assert_eq!(classify_general_member(p(4 * k + 1, k)), NotExistent);
            assert_eq!(classify_general_member(p(k, k)), Smooth);
        }
    }

    #[test]
    fn two_routes_agree() {
        for params in BundleParams::sweep(0..=120) {
            let c = classify_general_member(params);
            assert_eq!(c, classify_by_e(params), "{params}");
            if let Some(n) = c.count() {
                assert!(n >= 0);
            }
            if let SingularityClassification::TerminalPoints { count } = c {
                assert!(count > 0);
            }
        }
    }

    #[test]
    fn crepant_chart() {
        let ok = crepant_chart_check(BlowupWeights::DISSIDENT, &dissident_germ());
        assert!(ok.exact());
        let transform = ok.strict_transform.unwrap();
        assert_eq!(transform, set(&[(0, 0, 2), (0, 5, 0), (3, 0, 0)]));
        assert!(duval_test(&transform));

        let no_t: BTreeSet<_> = [
            ChartMonomial::new(0, 0, 0, 2),
            ChartMonomial::new(0, 0, 5, 0),
            ChartMonomial::new(0, 3, 0, 0),
        ]
        .into_iter()
        .collect();
        let bad = crepant_chart_check(BlowupWeights::DISSIDENT, &no_t);
        assert!(!bad.exact());
        assert_eq!(bad.offending, vec![(ChartMonomial::new(0, 3, 0, 0), 9)]);
        assert!(bad.strict_transform.is_none());

        assert!(crepant_chart_check(BlowupWeights::DISSIDENT, &BTreeSet::new()).exact());
    }
}
