#![no_main]

use libfuzzer_sys::fuzz_target;
use primcone::t1class::parse_t1_row;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_t1_row(s);
    }
});
