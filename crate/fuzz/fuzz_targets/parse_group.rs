#![no_main]

use invdmod::json::{group_to_json, parse_group};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_group(text) {
        assert_eq!(parse_group(&group_to_json(&g)).unwrap(), g);
    }
});
