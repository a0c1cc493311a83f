//! The degree parser must never panic, and anything it accepts must
//! round-trip through the display form.

#![no_main]

use std::str::FromStr;

use cotangent::MultiDegree;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(parsed) = MultiDegree::from_str(text) {
        let printed = parsed.to_string();
        let inner = printed.trim_start_matches('[').trim_end_matches(']');
        let reparsed = MultiDegree::from_str(inner).expect("display form parses");
        assert_eq!(reparsed, parsed);
    }
});
