#![no_main]

use libfuzzer_sys::fuzz_target;
use ytl_core::combinatorics::DPartition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(l) = text.parse::<DPartition>() {
        assert!(l.d() >= 1);
        let json = serde_json::to_string(&l).unwrap();
        assert_eq!(serde_json::from_str::<DPartition>(&json).unwrap(), l);
    }
    let _ = serde_json::from_slice::<DPartition>(data);
});
