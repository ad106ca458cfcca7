#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::colored::{parse_cds, write_cds};

fuzz_target!(|text: &str| {
    if let Ok(d) = parse_cds(text) {
        assert_eq!(parse_cds(&write_cds(&d)).unwrap(), d);
    }
});
