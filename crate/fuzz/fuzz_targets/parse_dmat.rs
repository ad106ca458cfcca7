#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::transport::{parse_dmat, write_dmat};

fuzz_target!(|text: &str| {
    if let Ok(a) = parse_dmat(text) {
        assert_eq!(parse_dmat(&write_dmat(&a)).unwrap(), a);
    }
});
