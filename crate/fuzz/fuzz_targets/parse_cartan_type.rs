#![no_main]

use libfuzzer_sys::fuzz_target;
use primcone::rootdata::parse_cartan_type;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_cartan_type(s);
    }
});
