use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{s_vector, shannon_entropy, AverageDegreeVector};
use crate::enumerate::{ln_big, type_class_size};
use crate::sampler::CountVectors;

/// `|𝒢_{m⃗,u⃗}|` on `n` vertices: an edge set of size `‖m⃗‖₁`, a vertex-mark
/// sequence of type `u⃗`, an assignment of unordered mark pairs of type
/// `m⃗_≤` to the edges, and an orientation for each off-diagonal pair.
pub fn marked_class_size(n: usize, cv: &CountVectors) -> BigUint {
    if cv.vertex_total() != n as u64 {
        return BigUint::zero();
    }
    let slots = (n * n.saturating_sub(1) / 2) as u64;
    let edges = cv.edge_total();
    if edges > slots {
        return BigUint::zero();
    }
    let leq: Vec<u64> = cv.m_leq().into_iter().map(|(_, c)| c).collect();
    type_class_size(&[edges, slots - edges])
        * type_class_size(cv.u())
        * type_class_size(&leq)
        * (BigUint::one() << cv.off_diagonal_total())
}

/// `‖m⃗‖₁ log n + n H(Q) + n s(d⃗)`, the leading terms of `log |𝒢_{m⃗,u⃗}|`.
pub fn log_class_size_formula(n: usize, edges: u64, q: &[f64], dvec: &AverageDegreeVector) -> f64 {
    let n = n as f64;
    edges as f64 * n.ln() + n * shannon_entropy(q) + n * s_vector(dvec)
}

/// `|log |𝒢_{m⃗,u⃗}| − formula| / n`.
pub fn growth_gap(n: usize, cv: &CountVectors, q: &[f64], dvec: &AverageDegreeVector) -> f64 {
    let exact = ln_big(&marked_class_size(n, cv));
    (exact - log_class_size_formula(n, cv.edge_total(), q, dvec)).abs() / n as f64
}
