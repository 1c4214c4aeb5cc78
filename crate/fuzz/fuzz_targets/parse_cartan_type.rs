#![no_main]

use invdmod::json::parse_cartan_type;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = parse_cartan_type(text) {
        assert_eq!(parse_cartan_type(&t.to_string()).unwrap(), t);
    }
});
