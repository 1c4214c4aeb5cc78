#![no_main]

use invdmod::json::{parse_rep_class, rep_class_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_rep_class(text) {
        assert_eq!(parse_rep_class(&rep_class_to_json(&v)).unwrap(), v);
        assert_eq!(v.dual().dual(), v);
    }
});
