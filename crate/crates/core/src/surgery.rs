//! Degree surgery: given a marked graph `γ` and a target degree sequence `ℓ`,
//! build a graph with degrees exactly `ℓ` whose depth-`k` neighborhoods agree
//! with those of `γ` at all but a few vertices.
//!
//! The pipeline colors `γ` by depth-`(k−1)` edge types, fixes the colored
//! degrees with the column transport, samples a colored configuration model
//! with girth above `2k + 1` by rejection, and forgets colors back to marks.

use rayon::prelude::*;

use crate::colored::{color_graph, is_colored_graph, mcb, sample_cm};
use crate::graph::{canonicalize, DegreeSequence, MarkedGraph};
use crate::transport::modify_colored_degrees;
use crate::{Error, Result, Rng};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryReport {
    pub n: usize,
    pub k: usize,
    /// Vertices `i` with `[Γ̃, i]_k ≠ [γ, i]_k` under the identity labeling.
    pub modified_vertices: usize,
    pub degree_exact: bool,
    /// Configuration-model samples drawn, including the accepted one.
    pub attempts: u64,
    /// Vertices whose colored degree was changed by the transport.
    pub changed_vertices: Vec<usize>,
    /// Vertices within distance `k` of a changed vertex in either graph.
    pub touched_region: usize,
    pub transport_bound: u64,
    /// `transport_bound` times the size of a depth-`k` ball at maximum degree.
    pub propagated_bound: u64,
}

/// Largest possible ball of radius `k` when degrees are at most `delta`.
pub fn ball_size_bound(delta: u64, k: usize) -> u64 {
    let mut total = 1u64;
    let mut layer = delta;
    for _ in 0..k {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(delta.saturating_sub(1));
    }
    total
}

pub fn modify_graph(
    gamma: &MarkedGraph,
    ell: &DegreeSequence,
    k: usize,
    rng: &mut Rng,
    max_attempts: u64,
) -> Result<(MarkedGraph, SurgeryReport)> {
    if k == 0 {
        return Err(Error::invalid("surgery depth k must be at least 1"));
    }
    if ell.len() != gamma.n() {
        return Err(Error::invalid(format!("graph has {} vertices but {} degrees were given", gamma.n(), ell.len())));
    }
    let (colored, _) = color_graph(gamma, k)?;
    let modified = modify_colored_degrees(&colored.colored_degrees(), ell)?;

    let girth = 2 * k + 1;
    let mut attempts = 0;
    let out = loop {
        if attempts >= max_attempts {
            return Err(Error::AttemptsExhausted { attempts });
        }
        attempts += 1;
        let h = sample_cm(&modified.sequence, rng)?;
        if is_colored_graph(&h, girth) {
            break if h.arcs().is_empty() {
                MarkedGraph::empty(gamma.n()).with_vertex_marks(gamma.vertex_marks().to_vec())?
            } else {
                mcb(gamma.vertex_marks(), &h)?
            };
        }
    };

    let degree_exact = out.degrees().iter().zip(ell.as_slice()).all(|(a, b)| a == b);
    if !degree_exact {
        return Err(Error::Infeasible("reconstructed graph misses the target degrees".into()));
    }
    let modified_vertices = (0..gamma.n())
        .into_par_iter()
        .filter(|&v| canonicalize(&gamma.ball(v, k), Some(k)) != canonicalize(&out.ball(v, k), Some(k)))
        .count();

    let mut touched = vec![false; gamma.n()];
    for g in [gamma, &out] {
        for &c in &modified.changed_vertices {
            for (v, d) in g.distances_from(c, Some(k)).into_iter().enumerate() {
                if d.is_some() {
                    touched[v] = true;
                }
            }
        }
    }
    let delta = gamma.max_degree().max(ell.max_degree()) as u64;
    let report = SurgeryReport {
        n: gamma.n(),
        k,
        modified_vertices,
        degree_exact,
        attempts,
        touched_region: touched.iter().filter(|&&t| t).count(),
        transport_bound: modified.bound,
        propagated_bound: modified.bound.saturating_mul(ball_size_bound(delta, k)),
        changed_vertices: modified.changed_vertices,
    };
    Ok((out, report))
}

impl SurgeryReport {
    /// `key=value` lines.
    pub fn to_text(&self) -> String {
        let changed: Vec<String> = self.changed_vertices.iter().map(|v| (v + 1).to_string()).collect();
        format!(
            "n={}\nk={}\nmodified_vertices={}\ndegree_exact={}\nattempts={}\nchanged_vertices={}\ntouched_region={}\ntransport_bound={}\npropagated_bound={}\n",
            self.n,
            self.k,
            self.modified_vertices,
            self.degree_exact,
            self.attempts,
            changed.join(","),
            self.touched_region,
            self.transport_bound,
            self.propagated_bound
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::random_girth_graph;

    #[test]
    fn ball_sizes() {
        assert_eq!(ball_size_bound(3, 0), 1);
        assert_eq!(ball_size_bound(3, 1), 4);
        assert_eq!(ball_size_bound(3, 2), 10);
        assert_eq!(ball_size_bound(1, 3), 2);
    }

    #[test]
    fn exact_degrees_preserve_neighborhoods() {
        let mut rng = crate::seeded_rng(3);
        let gamma = random_girth_graph(&mut rng, 60, 3, 3, 2, 2, 0.9);
        let ell = DegreeSequence::new(gamma.degrees()).unwrap();
        let (out, report) = modify_graph(&gamma, &ell, 1, &mut rng, 100_000).unwrap();
        assert!(report.degree_exact);
        assert!(report.changed_vertices.is_empty());
        assert_eq!(report.modified_vertices, 0);
        assert_eq!(out.degrees(), gamma.degrees());
        assert!(out.vertex_marks().iter().zip(gamma.vertex_marks()).all(|(a, b)| a == b));
    }

    #[test]
    fn edgeless_graph() {
        let gamma = MarkedGraph::empty(4);
        let ell = DegreeSequence::new(vec![0; 4]).unwrap();
        let (out, report) = modify_graph(&gamma, &ell, 1, &mut crate::seeded_rng(0), 10).unwrap();
        assert_eq!(out.edge_count(), 0);
        assert_eq!(report.modified_vertices, 0);
    }
}
