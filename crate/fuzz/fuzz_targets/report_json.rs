#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert_git::codec::{from_json, to_json, QuotientJson};

// Any accepted report re-serializes to a fixed point.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = from_json::<QuotientJson>(text) {
        let once = to_json(&report);
        let back: QuotientJson = from_json(&once).expect("emitted report parses");
        assert_eq!(back, report);
        assert_eq!(to_json(&back), once);
    }
});
