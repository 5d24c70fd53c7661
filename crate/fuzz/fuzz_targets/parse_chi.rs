#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert_git::codec::parse_chi;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(chi) = parse_chi(text) {
        let joined = chi.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(parse_chi(&joined).unwrap(), chi);
    }
});
