//! Every checked-in fuzz seed must be accepted by its parser and survive the
//! same round trip the fuzz target checks.

use std::fs;
use std::path::PathBuf;

use lwc::colored::{parse_cds, write_cds};
use lwc::entropy::RateInputs;
use lwc::graph::{infer_alphabets, parse_graph, write_graph, CanonicalClass, DegreeSequence};
use lwc::measure::{parse_measure, write_measure};
use lwc::sampler::SamplerConfig;
use lwc::transport::{parse_beta, parse_dmat, write_beta, write_dmat};

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap().to_string_lossy().starts_with("seed-"))
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn graph_seeds() {
    for (p, text) in seeds("parse_graph") {
        let alphabets = infer_alphabets(&text).unwrap();
        let g = parse_graph(&text, &alphabets).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(parse_graph(&write_graph(&g, &alphabets), &alphabets).unwrap(), g);
    }
}

#[test]
fn measure_and_hex_seeds() {
    for (p, text) in seeds("parse_measure") {
        let mu = parse_measure(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(parse_measure(&write_measure(&mu)).unwrap(), mu);
    }
    for (p, text) in seeds("canonical_hex") {
        let class = CanonicalClass::from_hex(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(class.to_hex(), text);
    }
}

#[test]
fn cds_seeds() {
    for (p, text) in seeds("parse_cds") {
        let d = parse_cds(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(parse_cds(&write_cds(&d)).unwrap(), d);
    }
}

#[test]
fn degree_and_transport_seeds() {
    for (p, text) in seeds("parse_degrees") {
        let ell = DegreeSequence::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(DegreeSequence::parse(&ell.to_text()).unwrap(), ell);
    }
    for (p, text) in seeds("parse_dmat") {
        let a = parse_dmat(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(parse_dmat(&write_dmat(&a)).unwrap(), a);
    }
    for (p, text) in seeds("parse_beta") {
        let b = parse_beta(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(parse_beta(&write_beta(&b)).unwrap(), b);
    }
}

#[test]
fn config_and_rate_seeds() {
    for (p, text) in seeds("sampler_config") {
        SamplerConfig::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
    for (p, text) in seeds("rate_inputs") {
        RateInputs::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
}
