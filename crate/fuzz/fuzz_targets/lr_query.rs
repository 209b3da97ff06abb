#![no_main]

use libfuzzer_sys::fuzz_target;
use ytl_core::lr_rule::{lr_product, LrQuery};

fuzz_target!(|data: &[u8]| {
    let Ok(q) = serde_json::from_slice::<LrQuery>(data) else {
        return;
    };
    if q.lambda.size() + q.mu.size() > 10 || q.nu.size() > 10 {
        return;
    }
    let c = q.coefficient();
    let swapped = LrQuery::new(q.mu.clone(), q.lambda.clone(), q.nu.clone()).coefficient();
    assert_eq!(c, swapped);
    assert_eq!(lr_product(&q.lambda, &q.mu).get(&q.nu).copied().unwrap_or(0), c);
});
