#![no_main]

use invdmod::json::{monodromy_class_to_json, parse_monodromy_class};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_monodromy_class(text) {
        assert_eq!(parse_monodromy_class(&monodromy_class_to_json(&m)).unwrap(), m);
    }
});
