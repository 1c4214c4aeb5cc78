#![no_main]

use invdmod::json::{glr_to_json, parse_glr};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_glr(text) {
        assert_eq!(parse_glr(&glr_to_json(&s)).unwrap(), s);
    }
});
