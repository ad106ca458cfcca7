#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::sampler::SamplerConfig;

fuzz_target!(|text: &str| {
    let _ = SamplerConfig::parse(text);
});
