//! Divisor class decoder: `aH+bF` expressions and `a,b` pairs.

#![no_main]

use libfuzzer_sys::fuzz_target;
use noether_core::DivisorClass;

fuzz_target!(|data: &str| {
    if let Ok(class) = data.parse::<DivisorClass>() {
        let text = class.to_string();
        assert_eq!(text.parse::<DivisorClass>().unwrap(), class, "{text}");
    }
});
