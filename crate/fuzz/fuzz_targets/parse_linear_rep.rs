#![no_main]

use invdmod::json::{linear_rep_to_json, parse_linear_rep};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(rho) = parse_linear_rep(text) {
        let again = parse_linear_rep(&linear_rep_to_json(&rho)).unwrap();
        assert_eq!(again.matrices(), rho.matrices());
    }
});
