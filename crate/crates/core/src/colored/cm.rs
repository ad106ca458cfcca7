use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::multigraph::{Arc, ColorblindMultigraph, ColoredMultigraph};
use super::sequence::ColoredDegreeSequence;
use crate::stats::wilson_interval;
use crate::{stream_rng, Result, Rng};

/// One draw of `CM(D)`: for every color pair `c < c̄` a uniform bijection
/// between the half-edges of color `c` and those of color `c̄`, and for every
/// diagonal color a uniform perfect matching of its half-edges.
pub fn sample_cm(d: &ColoredDegreeSequence, rng: &mut Rng) -> Result<ColoredMultigraph> {
    let d = ColoredDegreeSequence::new(d.colors().clone(), d.rows().to_vec())?;
    let cs = d.colors();
    let half_edges = |c| -> Vec<usize> {
        (0..d.n()).flat_map(|v| std::iter::repeat(v).take(d.get(v, c) as usize)).collect()
    };
    let mut arcs = Vec::new();
    for c in d.present_colors() {
        if cs.is_diagonal(c) {
            let mut w = half_edges(c);
            w.shuffle(rng);
            for pair in w.chunks_exact(2) {
                arcs.push(Arc { from: pair[0], to: pair[1], color: c });
                arcs.push(Arc { from: pair[1], to: pair[0], color: c });
            }
        } else if cs.is_lower(c) {
            // Totals of c and c̄ agree, so both sides have the same size.
            let conj = cs.conjugate(c);
            let w = half_edges(c);
            let mut partners = half_edges(conj);
            partners.shuffle(rng);
            for (&u, &v) in w.iter().zip(&partners) {
                arcs.push(Arc { from: u, to: v, color: c });
                arcs.push(Arc { from: v, to: u, color: conj });
            }
        }
    }
    ColoredMultigraph::from_arcs(d.n(), cs.clone(), arcs)
}

/// Whether the simple graph `cb` has a cycle of length `≤ h`.
pub fn girth_at_most(cb: &ColorblindMultigraph, h: usize) -> bool {
    let n = cb.n;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in cb.omega.keys() {
        adj[u].push(v);
    }
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        let mut touched = vec![s];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut found = false;
        'bfs: while let Some(u) = queue.pop_front() {
            // A cycle through s found from depth ≥ h/2 is longer than h.
            if 2 * dist[u] + 1 > h {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w && dist[u] + dist[w] < h {
                    found = true;
                    break 'bfs;
                }
            }
        }
        for v in touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        if found {
            return true;
        }
    }
    false
}

/// `g ∈ 𝒢(D, h)`: the colorblind multigraph is simple and has no cycle of
/// length at most `h`.
pub fn is_colored_graph(g: &ColoredMultigraph, h: usize) -> bool {
    let cb = g.colorblind();
    cb.is_simple() && !girth_at_most(&cb, h)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaEstimate {
    pub trials: u64,
    pub successes: u64,
    pub estimate: f64,
    /// Wilson 95% interval.
    pub ci: (f64, f64),
}

impl AlphaEstimate {
    pub fn overlaps(&self, other: &Self) -> bool {
        self.ci.0 <= other.ci.1 && other.ci.0 <= self.ci.1
    }
}

/// Monte Carlo estimate of `P(CM(D) ∈ 𝒢(D, h))`. Trial `t` uses stream `t`
/// of `seed`, so the result does not depend on the thread count.
pub fn estimate_alpha_h(d: &ColoredDegreeSequence, h: usize, trials: u64, seed: u64) -> Result<AlphaEstimate> {
    let d = ColoredDegreeSequence::new(d.colors().clone(), d.rows().to_vec())?;
    let successes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream_rng(seed, t);
            sample_cm(&d, &mut rng).map(|g| u64::from(is_colored_graph(&g, h)))
        })
        .sum::<Result<u64>>()?;
    let ci = wilson_interval(successes, trials);
    let estimate = if trials == 0 { 0.0 } else { successes as f64 / trials as f64 };
    Ok(AlphaEstimate { trials, successes, estimate, ci })
}
