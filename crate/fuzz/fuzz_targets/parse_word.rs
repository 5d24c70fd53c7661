#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert_git::codec::{format_word, parse_word};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(word) = parse_word(text) {
        assert!(word.iter().all(|&i| i >= 1));
        assert_eq!(parse_word(&format_word(&word)).unwrap(), word);
    }
});
