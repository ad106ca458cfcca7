#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::measure::{parse_measure, write_measure};

fuzz_target!(|text: &str| {
    if let Ok(mu) = parse_measure(text) {
        assert_eq!(parse_measure(&write_measure(&mu)).unwrap(), mu);
    }
});
