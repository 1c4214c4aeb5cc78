#![no_main]

use invdmod::json::{parse_reductive, reductive_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((g, c)) = parse_reductive(text) {
        let (g2, c2) = parse_reductive(&reductive_to_json(&g, &c)).unwrap();
        assert_eq!(g2, g);
        assert_eq!(c2, c);
    }
});
