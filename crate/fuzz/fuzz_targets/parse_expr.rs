#![no_main]

use libfuzzer_sys::fuzz_target;
use primcone::symbolic::parse_expr;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(e) = parse_expr(s) {
            let _ = e.eval(4);
        }
    }
});
