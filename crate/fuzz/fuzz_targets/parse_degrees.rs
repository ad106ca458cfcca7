#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::graph::DegreeSequence;

fuzz_target!(|text: &str| {
    if let Ok(ell) = DegreeSequence::parse(text) {
        assert_eq!(DegreeSequence::parse(&ell.to_text()).unwrap(), ell);
    }
});
