//! Bundle parameter decoder: `d;d0`, `d,d0`, `X(d;d0)`, `F(d;d0)`. Accepted
//! parameters are normalized and small enough for every downstream computation.

#![no_main]

use libfuzzer_sys::fuzz_target;
use noether_core::singularities::{classify_by_e, classify_general_member};
use noether_core::BundleParams;

fuzz_target!(|data: &str| {
    if let Ok(params) = data.parse::<BundleParams>() {
        assert!(params.e() >= 0 && params.d0() >= 0);
        assert_eq!(params.to_string().parse::<BundleParams>().unwrap(), params);
        assert_eq!(classify_general_member(params), classify_by_e(params));
    }
});
