#![no_main]

use invdmod::json::{laurent_matrix_to_json, parse_laurent_matrix};
use invdmod::limits::DEFAULT_MAX_DEGREE;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_laurent_matrix(text, DEFAULT_MAX_DEGREE) {
        assert_eq!(parse_laurent_matrix(&laurent_matrix_to_json(&m), DEFAULT_MAX_DEGREE).unwrap(), m);
    }
});
