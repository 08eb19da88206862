//! Rational decoder: `p` or `p/q`. Accepted values must survive a text and a
//! JSON round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use noether_core::Rational;

fuzz_target!(|data: &str| {
    if let Ok(value) = data.parse::<Rational>() {
        assert!(value.denom() > 0);
        assert_eq!(value.to_string().parse::<Rational>().unwrap(), value);
        let json = serde_json::to_string(&value).unwrap();
        assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), value);
    }
});
