//! The fuzz corpus seeds and arbitrary strings run through the same decoder
//! checks as the fuzz targets, on the stable toolchain.

use std::fs;
use std::path::PathBuf;

use noether_core::record::OutputRecord;
use noether_core::{BundleParams, DivisorClass, Rational};
use proptest::prelude::*;

fn check_rational(text: &str) -> bool {
    match text.parse::<Rational>() {
        Ok(value) => {
            assert!(value.denom() > 0);
            assert_eq!(value.to_string().parse::<Rational>().unwrap(), value);
            let json = serde_json::to_string(&value).unwrap();
            assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), value);
            true
        }
        Err(_) => false,
    }
}

fn check_class(text: &str) -> bool {
    match text.parse::<DivisorClass>() {
        Ok(class) => {
            assert_eq!(class.to_string().parse::<DivisorClass>().unwrap(), class);
            true
        }
        Err(_) => false,
    }
}

fn check_params(text: &str) -> bool {
    match text.parse::<BundleParams>() {
        Ok(params) => {
            assert!(params.e() >= 0);
            assert_eq!(params.to_string().parse::<BundleParams>().unwrap(), params);
            true
        }
        Err(_) => false,
    }
}

fn check_record(bytes: &[u8]) -> bool {
    match serde_json::from_slice::<OutputRecord>(bytes) {
        Ok(record) => {
            let again: OutputRecord =
                serde_json::from_slice(&serde_json::to_vec(&record).unwrap()).unwrap();
            assert_eq!(again, record);
            true
        }
        Err(_) => false,
    }
}

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| entry.unwrap().path())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|path| {
            (
                path.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read(&path).unwrap(),
            )
        })
        .collect()
}

#[test]
fn corpus_seeds_decode_as_expected() {
    let rejected = ["zero_den", "needs_swap"];
    for (target, check) in [
        ("parse_rational", check_rational as fn(&str) -> bool),
        ("parse_divisor_class", check_class),
        ("parse_params", check_params),
    ] {
        let seeds = seeds(target);
        assert!(!seeds.is_empty(), "{target}");
        for (name, bytes) in seeds {
            let accepted = check(std::str::from_utf8(&bytes).unwrap());
            assert_eq!(
                accepted,
                !rejected.contains(&name.as_str()),
                "{target}/{name}"
            );
        }
    }
    for (name, bytes) in seeds("decode_output_record") {
        assert!(check_record(&bytes), "{name}");
    }
}

proptest! {
    #[test]
    fn arbitrary_text_never_panics(text in "\\PC{0,24}") {
        check_rational(&text);
        check_class(&text);
        check_params(&text);
        check_record(text.as_bytes());
    }

    #[test]
    fn structured_text_never_panics(
        text in "[-+]?[0-9]{0,20}(/[-+]?[0-9]{0,20})?|[-+]?[0-9]{0,20}H?[-+]?[0-9]{0,20}F?|X\\([0-9]{0,8}[;,][0-9]{0,8}\\)"
    ) {
        check_rational(&text);
        check_class(&text);
        check_params(&text);
    }
}
