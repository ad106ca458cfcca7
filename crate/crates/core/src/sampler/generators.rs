//! Non-uniform generators used to build test corpora and experiment inputs.

use rand::Rng as _;

use crate::graph::{Mark, MarkedEdge, MarkedGraph};
use crate::Rng;

/// A random marked graph with maximum degree `max_degree`, built by adding
/// random edges until about `density · n · max_degree / 2` edges are placed
/// or attempts run out. Marks are uniform over `theta` and `xi` symbols.
pub fn random_marked_graph(
    rng: &mut Rng,
    n: usize,
    max_degree: usize,
    theta: usize,
    xi: usize,
    density: f64,
) -> MarkedGraph {
    build(rng, n, max_degree, theta, xi, density, None)
}

/// Like [`random_marked_graph`], but never closes a cycle of length
/// `≤ girth_above`, so the result has girth `> girth_above`.
pub fn random_girth_graph(
    rng: &mut Rng,
    n: usize,
    max_degree: usize,
    girth_above: usize,
    theta: usize,
    xi: usize,
    density: f64,
) -> MarkedGraph {
    build(rng, n, max_degree, theta, xi, density, Some(girth_above))
}

fn build(
    rng: &mut Rng,
    n: usize,
    max_degree: usize,
    theta: usize,
    xi: usize,
    density: f64,
    girth_above: Option<usize>,
) -> MarkedGraph {
    let theta = theta.max(1);
    let xi = xi.max(1);
    let target = ((n * max_degree) as f64 * density / 2.0).floor() as usize;
    let mut g = MarkedGraph::empty(n);
    let mut edges: Vec<MarkedEdge> = Vec::new();
    let mut degree = vec![0usize; n];
    if n >= 2 {
        let mut budget = 20 * target + 100;
        while edges.len() < target && budget > 0 {
            budget -= 1;
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || degree[u] >= max_degree || degree[v] >= max_degree || g.has_edge(u, v) {
                continue;
            }
            if let Some(h) = girth_above {
                // The new cycle would have length dist(u, v) + 1.
                let dist = g.distances_from(u, Some(h.saturating_sub(1)));
                if dist[v].is_some() {
                    continue;
                }
            }
            degree[u] += 1;
            degree[v] += 1;
            edges.push(MarkedEdge::new(u, v, rng.gen_range(0..xi) as Mark, rng.gen_range(0..xi) as Mark));
            g = MarkedGraph::new(vec![0; n], edges.iter().copied()).expect("edges are kept simple");
        }
    }
    let tau = (0..n).map(|_| rng.gen_range(0..theta) as Mark).collect();
    MarkedGraph::new(tau, edges).expect("edges are kept simple")
}
