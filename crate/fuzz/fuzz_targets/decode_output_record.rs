//! JSON decoder for inspection records, as read back by downstream tools.

#![no_main]

use libfuzzer_sys::fuzz_target;
use noether_core::record::OutputRecord;

fuzz_target!(|data: &[u8]| {
    if let Ok(record) = serde_json::from_slice::<OutputRecord>(data) {
        let json = serde_json::to_vec(&record).unwrap();
        let again: OutputRecord = serde_json::from_slice(&json).unwrap();
        assert_eq!(again, record);
    }
});
