#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::transport::{parse_beta, write_beta};

fuzz_target!(|text: &str| {
    if let Ok(beta) = parse_beta(text) {
        assert_eq!(parse_beta(&write_beta(&beta)).unwrap(), beta);
    }
});
