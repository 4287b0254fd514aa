#![no_main]

use libfuzzer_sys::fuzz_target;
use parametric_mst::rational::{format_rational, parse_rational};

fuzz_target!(|data: &[u8]| {
    // Digit strings parse into bigints whose cost grows with length; a cap
    // keeps iterations fast without narrowing the interesting state space.
    if data.len() > 256 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_rational(s) {
        let printed = format_rational(&r);
        assert_eq!(parse_rational(&printed).expect("own output parses"), r);
    }
});
