#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc::graph::{infer_alphabets, parse_graph, write_graph};

fuzz_target!(|text: &str| {
    let Ok(alphabets) = infer_alphabets(text) else { return };
    if let Ok(g) = parse_graph(text, &alphabets) {
        let again = parse_graph(&write_graph(&g, &alphabets), &alphabets).expect("written graph parses");
        assert_eq!(g, again);
    }
});
