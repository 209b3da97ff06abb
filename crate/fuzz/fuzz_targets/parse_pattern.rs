#![no_main]

use libfuzzer_sys::fuzz_target;
use ytl_core::ytl_basis::{monomial_set, CyclePattern};

// First byte picks n; the rest is either JSON pairs or the `i:k` text form.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let n = 1 + first as usize % 12;
    let parsed = match serde_json::from_slice::<Vec<(usize, usize)>>(rest) {
        Ok(pairs) => CyclePattern::new(n, pairs),
        Err(_) => match std::str::from_utf8(rest) {
            Ok(text) => CyclePattern::parse(n, text),
            Err(_) => return,
        },
    };
    if let Ok(g) = parsed {
        assert_eq!(CyclePattern::parse(n, &g.to_string()).unwrap(), g);
        assert!(g.weight() <= g.degree());
        if g.is_temperley_lieb() && n <= 8 {
            let set = monomial_set(2, &g).unwrap();
            assert!(!set.is_empty());
        }
    }
});
