//! Random generation of graphs with a given degree sequence.
//!
//! Uniform simple graphs come from configuration-model pairings rejected
//! until simple: every simple graph with degrees `ℓ` arises from exactly
//! `Π ℓ_i!` pairings, so conditioning on simplicity leaves the uniform law.

mod config;
mod counts;
mod generators;
mod mixture;

pub use config::{Model, SamplerConfig};
pub use counts::{CountVectors, ModelParams};
pub use generators::{random_girth_graph, random_marked_graph};
pub use mixture::{mixture_identity_check, MixtureReport, MixtureViolation};

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::graph::{DegreeSequence, MarkedEdge, MarkedGraph};
use crate::{Error, Result, Rng};

pub const DEFAULT_MAX_ATTEMPTS: u64 = 1_000_000;

/// One uniform pairing of half-edges, or `None` if it has a loop or a
/// repeated edge.
fn try_pairing(ell: &DegreeSequence, rng: &mut Rng) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = ell
        .as_slice()
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat(v).take(d))
        .collect();
    stubs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = stubs
        .chunks_exact(2)
        .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
        .collect();
    if edges.iter().any(|&(u, v)| u == v) {
        return None;
    }
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(edges)
}

/// Uniform simple graph with degrees `ell`, unmarked.
pub fn sample_uniform_graph(ell: &DegreeSequence, rng: &mut Rng, max_attempts: u64) -> Result<MarkedGraph> {
    if !ell.is_graphical() {
        return Err(Error::NonGraphical);
    }
    for _ in 0..max_attempts {
        if let Some(edges) = try_pairing(ell, rng) {
            return MarkedGraph::unmarked(ell.len(), &edges);
        }
    }
    Err(Error::AttemptsExhausted { attempts: max_attempts })
}

/// Uniform graph with i.i.d. `ϑ` vertex marks and i.i.d. `χ` marks on every
/// oriented edge.
pub fn sample_iid_marked(
    ell: &DegreeSequence,
    params: &ModelParams,
    rng: &mut Rng,
    max_attempts: u64,
) -> Result<MarkedGraph> {
    let g = sample_uniform_graph(ell, rng, max_attempts)?;
    let theta = params.theta_sampler();
    let xi = params.xi_sampler();
    let tau: Vec<u16> = (0..g.n()).map(|_| rng.sample(&theta) as u16).collect();
    let edges: Vec<MarkedEdge> = g
        .edges()
        .map(|e| {
            let a = rng.sample(&xi) as u16;
            let b = rng.sample(&xi) as u16;
            MarkedEdge::new(e.u, e.v, a, b)
        })
        .collect();
    MarkedGraph::new(tau, edges)
}

/// Uniform element of the marked class with degrees `ell` and count vectors
/// `cv`: a uniform graph, a uniform arrangement of the vertex-mark multiset,
/// a uniform arrangement of the unordered edge-mark pairs over the edges and
/// a fair orientation for every pair with distinct marks.
pub fn sample_uniform_marked(
    ell: &DegreeSequence,
    cv: &CountVectors,
    rng: &mut Rng,
    max_attempts: u64,
) -> Result<MarkedGraph> {
    cv.check_instance(ell)?;
    let g = sample_uniform_graph(ell, rng, max_attempts)?;
    let mut tau = cv.vertex_mark_multiset();
    tau.shuffle(rng);
    let mut pairs = cv.edge_pair_multiset();
    pairs.shuffle(rng);
    let edges: Vec<MarkedEdge> = g
        .edges()
        .zip(pairs)
        .map(|(e, (x, y))| {
            if x != y && rng.gen::<bool>() {
                MarkedEdge::new(e.u, e.v, y, x)
            } else {
                MarkedEdge::new(e.u, e.v, x, y)
            }
        })
        .collect();
    MarkedGraph::new(tau, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::seeded_rng;
    use std::collections::HashMap;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn forced_instances() {
        let mut rng = seeded_rng(1);
        let g = sample_uniform_graph(&seq(&[1, 1]), &mut rng, 100).unwrap();
        assert!(g.has_edge(0, 1));
        let g = sample_uniform_graph(&seq(&[2, 2, 2]), &mut rng, 1000).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn non_graphical_rejected() {
        let mut rng = seeded_rng(1);
        assert_eq!(sample_uniform_graph(&seq(&[3, 3, 1, 1]), &mut rng, 10).err(), Some(Error::NonGraphical));
    }

    #[test]
    fn exhausted_attempts_are_reported() {
        let mut rng = seeded_rng(3);
        let err = sample_uniform_graph(&seq(&[4, 4, 4, 4, 4]), &mut rng, 0).err();
        assert_eq!(err, Some(Error::AttemptsExhausted { attempts: 0 }));
    }

    #[test]
    fn perfect_matchings_are_balanced() {
        let mut rng = seeded_rng(7);
        let mut counts: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
        for _ in 0..3000 {
            let g = sample_uniform_graph(&seq(&[1, 1, 1, 1]), &mut rng, 1000).unwrap();
            let edges: Vec<_> = g.edges().map(|e| (e.u, e.v)).collect();
            *counts.entry(edges).or_default() += 1;
        }
        assert_eq!(counts.len(), 3);
        assert!(counts.values().all(|&c| (850..1150).contains(&c)));
    }

    #[test]
    fn marked_sampler_hits_counts() {
        let mut rng = seeded_rng(11);
        let ell = seq(&[2, 2, 2, 1, 1]);
        let cv = CountVectors::new(vec![3, 2], vec![vec![1, 2], vec![2, 1]]).unwrap();
        for _ in 0..50 {
            let g = sample_uniform_marked(&ell, &cv, &mut rng, 10_000).unwrap();
            assert_eq!(g.degrees(), ell.as_slice());
            assert_eq!(CountVectors::from_graph(&g, 2, 2), cv);
        }
    }

    #[test]
    fn iid_marks_use_params() {
        let mut rng = seeded_rng(5);
        let params = ModelParams::new(vec![ratio(1, 1), ratio(0, 1)], vec![ratio(0, 1), ratio(1, 1)]).unwrap();
        let g = sample_iid_marked(&seq(&[1, 1, 2]), &params, &mut rng, 100).unwrap();
        assert!(g.vertex_marks().iter().all(|&t| t == 0));
        assert!(g.edges().all(|e| e.xi_uv == 1 && e.xi_vu == 1));
    }
}
