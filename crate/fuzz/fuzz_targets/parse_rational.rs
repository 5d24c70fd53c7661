#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert_git::codec::{format_rational, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_rational(text) {
        assert!(*q.denom() > 0);
        assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
});
