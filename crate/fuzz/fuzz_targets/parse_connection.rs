#![no_main]

use invdmod::json::{connection_to_json, parse_connection};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = parse_connection(text) {
        assert_eq!(parse_connection(&connection_to_json(&c)).unwrap(), c);
        let _ = invdmod::torusconn::check_flat(&c);
    }
});
