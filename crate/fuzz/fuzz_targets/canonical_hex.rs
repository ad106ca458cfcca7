#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::graph::CanonicalClass;

fuzz_target!(|text: &str| {
    if let Ok(class) = CanonicalClass::from_hex(text) {
        // Only canonical codes are accepted, so re-encoding is lossless.
        let again = CanonicalClass::from_hex(&class.to_hex()).unwrap();
        assert_eq!(again, class);
        assert_eq!(class.to_hex(), text.to_ascii_lowercase());
    }
});
