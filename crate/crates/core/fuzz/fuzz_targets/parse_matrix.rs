#![no_main]
use libfuzzer_sys::fuzz_target;
use swscan::SubstitutionMatrix;

fuzz_target!(|text: &str| {
    if let Ok(m) = SubstitutionMatrix::parse(text) {
        assert_eq!(m.rows.len(), m.symbols.len());
        // duplicate symbols are rejected here, not in parse
        let _ = m.into_scheme(-1, 5, 2);
    }
});
