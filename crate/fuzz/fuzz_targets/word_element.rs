#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert_git::codec::parse_word;
use schubert_git::{RootSystem, TypeLabel, WeylElement};

// Words decode to group elements whose normal form spells the same element.
fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(word) = parse_word(text) else { return };
    if word.len() > 64 {
        return;
    }
    let (label, rank) = match selector % 6 {
        0 => (TypeLabel::A, 4),
        1 => (TypeLabel::B, 3),
        2 => (TypeLabel::C, 4),
        3 => (TypeLabel::D, 5),
        4 => (TypeLabel::E6, 6),
        _ => (TypeLabel::E7, 7),
    };
    let sys = RootSystem::new(label, rank).unwrap();
    let Ok(w) = WeylElement::from_word(&sys, &word) else { return };
    assert!(w.length() <= word.len());
    let normal = w.normal_word(&sys);
    assert_eq!(normal.len(), w.length());
    assert_eq!(WeylElement::from_word(&sys, &normal).unwrap(), w);
});
