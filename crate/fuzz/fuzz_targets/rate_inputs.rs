#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::entropy::RateInputs;

fuzz_target!(|text: &str| {
    if let Ok(inputs) = RateInputs::parse(text) {
        let _ = inputs.mean_degree();
    }
});
