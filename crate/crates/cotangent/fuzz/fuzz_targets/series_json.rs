//! The series codec must never panic on arbitrary input, and accepted
//! input must canonicalize idempotently.

#![no_main]

use cotangent::SeriesJson;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(parsed) = SeriesJson::parse(text) {
        let canonical = parsed.to_canonical_string();
        let reparsed = SeriesJson::parse(&canonical).expect("canonical output parses");
        assert_eq!(reparsed.to_canonical_string(), canonical);
    }
});
