//! Exhaustive enumeration of labeled graph classes on a handful of vertices.
//!
//! Graphs with a given degree sequence are produced by backtracking over the
//! edge slots `{i, j}` in lexicographic order. Marked classes are the product
//! of a graph with every vertex-mark word in `Θ^n` and every oriented
//! edge-mark word in `Ξ^{2|E|}` that match the prescribed counts; words are
//! generated and filtered, never counted by formula.

mod counting;

pub(crate) use counting::ln_big;
pub use counting::{count_ball_restricted, count_nk, finite_entropy_estimate, type_class_size};

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::graph::{DegreeSequence, Mark, MarkedEdge, MarkedGraph};
use crate::sampler::CountVectors;
use crate::{Error, Result};

/// Largest instance the enumerators accept unless configured otherwise.
pub const DEFAULT_CAP: usize = 8;

/// Size limits for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_theta: usize,
    pub max_xi: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_n: DEFAULT_CAP, max_theta: 4, max_xi: 4 }
    }
}

impl Limits {
    fn check(&self, n: usize, theta: usize, xi: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded { n, cap: self.max_n });
        }
        if theta > self.max_theta {
            return Err(Error::CapExceeded { n: theta, cap: self.max_theta });
        }
        if xi > self.max_xi {
            return Err(Error::CapExceeded { n: xi, cap: self.max_xi });
        }
        Ok(())
    }
}

/// What was enumerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub degrees: DegreeSequence,
    pub counts: Option<CountVectors>,
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub instance: Instance,
    pub count: BigUint,
    /// The members, when requested.
    pub members: Option<Vec<MarkedGraph>>,
}

/// All simple graphs on `[n]` with degrees `ell`, as sorted edge lists, in
/// lexicographic order of the edge sets.
pub fn graph_edge_sets(ell: &DegreeSequence, limits: &Limits) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = ell.len();
    limits.check(n, 1, 1)?;
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut remaining: Vec<usize> = ell.as_slice().to_vec();
    let mut chosen = Vec::new();
    backtrack(&slots, 0, &mut remaining, &mut chosen, &mut out);
    Ok(out)
}

fn backtrack(
    slots: &[(usize, usize)],
    next: usize,
    remaining: &mut [usize],
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if remaining.iter().all(|&r| r == 0) {
        out.push(chosen.clone());
        return;
    }
    if next == slots.len() {
        return;
    }
    let (i, j) = slots[next];
    // Vertex i has no later slot that involves a smaller partner, so once we
    // move past its last slot its demand must already be met.
    if i > 0 && slots[next - 1].0 != i && remaining[i - 1] != 0 {
        return;
    }
    if remaining[i] > 0 && remaining[j] > 0 {
        remaining[i] -= 1;
        remaining[j] -= 1;
        chosen.push((i, j));
        backtrack(slots, next + 1, remaining, chosen, out);
        chosen.pop();
        remaining[i] += 1;
        remaining[j] += 1;
    }
    backtrack(slots, next + 1, remaining, chosen, out);
}

/// The class `𝒢(ℓ)`.
pub fn enumerate_graphs(ell: &DegreeSequence) -> Result<EnumerationResult> {
    enumerate_graphs_with(ell, &Limits::default())
}

pub fn enumerate_graphs_with(ell: &DegreeSequence, limits: &Limits) -> Result<EnumerationResult> {
    let sets = graph_edge_sets(ell, limits)?;
    let members = sets
        .iter()
        .map(|edges| MarkedGraph::unmarked(ell.len(), edges))
        .collect::<Result<Vec<_>>>()?;
    Ok(EnumerationResult {
        instance: Instance { degrees: ell.clone(), counts: None },
        count: BigUint::from(members.len()),
        members: Some(members),
    })
}

/// Every word of length `len` over `k` symbols, in lexicographic order.
fn words(k: usize, len: usize) -> impl Iterator<Item = Vec<Mark>> {
    let total = (k as u64).checked_pow(len as u32).expect("word space fits in u64");
    (0..total).map(move |mut idx| {
        let mut w = vec![0 as Mark; len];
        for slot in w.iter_mut().rev() {
            *slot = (idx % k as u64) as Mark;
            idx /= k as u64;
        }
        w
    })
}

fn vertex_words(cv: &CountVectors, n: usize) -> Vec<Vec<Mark>> {
    words(cv.theta_len(), n)
        .filter(|w| {
            let mut c = vec![0u64; cv.theta_len()];
            for &t in w {
                c[t as usize] += 1;
            }
            c == cv.u()
        })
        .collect()
}

/// Oriented edge-mark words `(ξ(u,v), ξ(v,u))` per edge matching `m`.
fn edge_words(cv: &CountVectors, edges: usize) -> impl Iterator<Item = Vec<Mark>> + '_ {
    let k = cv.xi_len();
    words(k, 2 * edges).filter(move |w| {
        let mut m = vec![vec![0u64; k]; k];
        for pair in w.chunks_exact(2) {
            let (x, y) = (pair[0] as usize, pair[1] as usize);
            m[x][y] += 1;
            if x != y {
                m[y][x] += 1;
            }
        }
        m == cv.m()
    })
}

fn marked(edges: &[(usize, usize)], tau: &[Mark], xi: &[Mark]) -> MarkedGraph {
    let list = edges
        .iter()
        .zip(xi.chunks_exact(2))
        .map(|(&(u, v), p)| MarkedEdge::new(u, v, p[0], p[1]));
    MarkedGraph::new(tau.to_vec(), list).expect("enumerated graphs are simple")
}

/// The class `Ḡ(ℓ)_{m,u}`. Members are only materialized when `collect` is set.
pub fn enumerate_marked(ell: &DegreeSequence, cv: &CountVectors, collect: bool) -> Result<EnumerationResult> {
    enumerate_marked_with(ell, cv, collect, &Limits::default())
}

pub fn enumerate_marked_with(
    ell: &DegreeSequence,
    cv: &CountVectors,
    collect: bool,
    limits: &Limits,
) -> Result<EnumerationResult> {
    let n = ell.len();
    limits.check(n, cv.theta_len(), cv.xi_len())?;
    let instance = Instance { degrees: ell.clone(), counts: Some(cv.clone()) };
    if cv.check_instance(ell).is_err() {
        return Ok(EnumerationResult { instance, count: BigUint::zero(), members: collect.then(Vec::new) });
    }
    let graphs = graph_edge_sets(ell, limits)?;
    let taus = vertex_words(cv, n);
    if collect {
        let mut members = Vec::new();
        for edges in &graphs {
            for xi in edge_words(cv, edges.len()) {
                for tau in &taus {
                    members.push(marked(edges, tau, &xi));
                }
            }
        }
        return Ok(EnumerationResult { instance, count: BigUint::from(members.len()), members: Some(members) });
    }
    let count: BigUint = graphs
        .par_iter()
        .map(|edges| BigUint::from(edge_words(cv, edges.len()).count()) * BigUint::from(taus.len()))
        .sum();
    Ok(EnumerationResult { instance, count, members: None })
}

/// Calls `f` on every member of `Ḡ(ℓ)_{m,u}`, in enumeration order.
pub fn visit_marked(
    ell: &DegreeSequence,
    cv: &CountVectors,
    limits: &Limits,
    mut f: impl FnMut(&MarkedGraph),
) -> Result<()> {
    let n = ell.len();
    limits.check(n, cv.theta_len(), cv.xi_len())?;
    if cv.check_instance(ell).is_err() {
        return Ok(());
    }
    let taus = vertex_words(cv, n);
    for edges in graph_edge_sets(ell, limits)? {
        for xi in edge_words(cv, edges.len()) {
            for tau in &taus {
                f(&marked(&edges, tau, &xi));
            }
        }
    }
    Ok(())
}

/// Calls `f` on every marked graph with degrees `ell` and marks drawn from
/// alphabets of sizes `theta` and `xi`, without count constraints.
pub fn visit_all_marked(
    ell: &DegreeSequence,
    theta: usize,
    xi: usize,
    limits: &Limits,
    mut f: impl FnMut(&MarkedGraph),
) -> Result<()> {
    let n = ell.len();
    limits.check(n, theta, xi)?;
    let taus: Vec<Vec<Mark>> = words(theta, n).collect();
    for edges in graph_edge_sets(ell, limits)? {
        for xs in words(xi, 2 * edges.len()) {
            for tau in &taus {
                f(&marked(&edges, tau, &xs));
            }
        }
    }
    Ok(())
}
