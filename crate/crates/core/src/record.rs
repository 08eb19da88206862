//! Serializable summaries shared by the command-line front end and the tests.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::{
    flip_analysis, invariants, kobayashi_params, FlipRecord, InvariantSet, KodairaDimension,
};
use crate::linear_system::{
    base_locus, coefficient_profile, family_dimension, normal_form_support, BaseLocus,
    CoefficientEntry, FibreMonomial,
};
use crate::rational::Rational;
use crate::singularities::{classify_general_member, SingularityClassification};
use crate::toric_model::{weight_matrix, BundleParams, WeightMatrix};

/// Everything known about one `X(d;d0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub params: BundleParams,
    pub classification: SingularityClassification,
    /// Omitted when `X(d;d0)` does not exist or is not of general type.
    pub invariants: Option<InvariantSet>,
    pub kodaira_dimension: Option<KodairaDimension>,
    pub flip: Option<FlipRecord>,
    /// `(a, e)`, present when `e <= d`.
    pub kobayashi: Option<(i64, i64)>,
    pub weight_matrix: WeightMatrix,
    pub normal_form_support: Vec<FibreMonomial>,
    pub coefficient_profile: Vec<CoefficientEntry>,
    pub base_locus: BaseLocus,
    pub family_dimension: i64,
}

impl OutputRecord {
    pub fn build(params: BundleParams) -> Result<Self> {
        let classification = classify_general_member(params);
        let full = if classification.exists() {
            Some(invariants(params)?)
        } else {
            None
        };
        let kodaira_dimension = full.map(|inv| inv.kodaira_dimension);
        let general_type = kodaira_dimension == Some(KodairaDimension::Three);
        let flip = if params.d0() == 1 && (2..=4).contains(&params.d()) {
            Some(flip_analysis(params.d())?)
        } else {
            None
        };
        let kobayashi = (params.e() <= params.d()).then(|| kobayashi_params(params));
        Ok(OutputRecord {
            params,
            classification,
            invariants: full.filter(|_| general_type),
            kodaira_dimension,
            flip,
            kobayashi,
            weight_matrix: weight_matrix(params),
            normal_form_support: normal_form_support(params),
            coefficient_profile: coefficient_profile(params, 10),
            base_locus: base_locus(params),
            family_dimension: family_dimension(params),
        })
    }
}

/// One line of a parameter sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: i64,
    pub d0: i64,
    pub e: i64,
    pub classification: SingularityClassification,
    pub invariants: Option<InvariantSet>,
}

impl SweepRow {
    pub fn build(params: BundleParams) -> Self {
        let classification = classify_general_member(params);
        SweepRow {
            d: params.d(),
            d0: params.d0(),
            e: params.e(),
            classification,
            invariants: invariants(params).ok(),
        }
    }

    pub fn k3(&self) -> Option<Rational> {
        self.invariants.map(|inv| inv.k3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear_system::FibreMonomial;

    fn p(d: i64, d0: i64) -> BundleParams {
        BundleParams::new(d, d0).unwrap()
    }

    #[test]
    fn inspect_examples() {
        let x87 = OutputRecord::build(p(8, 7)).unwrap();
        assert!(x87
            .normal_form_support
            .contains(&FibreMonomial::new(9, 1, 0, 0)));
        assert_eq!(x87.invariants.unwrap().p_g, 22);
        assert_eq!(x87.kobayashi, None);

        let x11 = OutputRecord::build(p(1, 1)).unwrap();
        assert_eq!(x11.kodaira_dimension, Some(KodairaDimension::Zero));
        assert!(x11.invariants.is_none());

        let x51 = OutputRecord::build(p(5, 1)).unwrap();
        assert_eq!(x51.classification, SingularityClassification::NotExistent);
        assert!(x51.invariants.is_none() && x51.kodaira_dimension.is_none());

        assert!(OutputRecord::build(p(3, 1)).unwrap().flip.is_some());
    }

    #[test]
    fn json_roundtrip() {
        for params in BundleParams::sweep(0..=12) {
            let record = OutputRecord::build(params).unwrap();
            let json = serde_json::to_string(&record).unwrap();
            let back: OutputRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(back, record);
            let row = SweepRow::build(params);
            let back: SweepRow =
                serde_json::from_str(&serde_json::to_string(&row).unwrap()).unwrap();
            assert_eq!(back, row);
        }
    }
}
