//! Closed-form rate-function ingredients.
//!
//! Natural logarithms throughout. Laws on `Ξ²_≤` are flat vectors indexed by
//! [`leq_pairs`]; average-degree vectors are full `|Ξ| × |Ξ|` matrices.

mod adapted;
mod growth;
mod inputs;
mod rates;
mod stats;

pub use adapted::{check_adapted, AdaptedReport};
pub use growth::{growth_gap, log_class_size_formula, marked_class_size};
pub use inputs::{Provenance, RateInputs};
pub use rates::{degree_law, rate_i_dq, rate_i_pdq, rate_lambda, rate_lambda_at};
pub use stats::{measure_degree_stats, DegreeStats};

use crate::{Error, Result};

/// Tolerance for comparisons between floating point inputs.
pub const TOLERANCE: f64 = 1e-9;

/// `−Σ q log q` with `0 log 0 = 0`.
pub fn shannon_entropy(q: &[f64]) -> f64 {
    -q.iter().filter(|&&x| x > 0.0).map(|&x| x * x.ln()).sum::<f64>()
}

/// `s(d) = d/2 − (d/2) log d`, and `s(0) = 0`.
pub fn s_value(d: f64) -> f64 {
    if d > 0.0 {
        d / 2.0 - d / 2.0 * d.ln()
    } else {
        0.0
    }
}

/// `H(a | b)`; `+∞` unless `a` is absolutely continuous with respect to `b`.
pub fn relative_entropy(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "relative entropy needs a common index set");
    let mut total = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        if x > 0.0 {
            if y <= 0.0 {
                return f64::INFINITY;
            }
            total += x * (x / y).ln();
        }
    }
    total
}

/// Pairs `(x, x')` with `x ≤ x'`, lexicographic.
pub fn leq_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|x| (x..k).map(move |y| (x, y))).collect()
}

/// Law of `X_≤ = (min, max)` of two independent draws from `χ`.
pub fn chi2_leq(chi: &[f64]) -> Vec<f64> {
    leq_pairs(chi.len())
        .into_iter()
        .map(|(x, y)| if x == y { chi[x] * chi[x] } else { 2.0 * chi[x] * chi[y] })
        .collect()
}

/// Spreads a law on `Ξ²_≤` symmetrically over `Ξ × Ξ`.
pub fn alpha_plus(alpha: &[f64], k: usize) -> Result<Vec<Vec<f64>>> {
    let pairs = leq_pairs(k);
    if alpha.len() != pairs.len() {
        return Err(Error::invalid(format!("expected {} entries for {k} marks, found {}", pairs.len(), alpha.len())));
    }
    let mut out = vec![vec![0.0; k]; k];
    for (&(x, y), &a) in pairs.iter().zip(alpha) {
        if x == y {
            out[x][x] = a;
        } else {
            out[x][y] = a / 2.0;
            out[y][x] = a / 2.0;
        }
    }
    Ok(out)
}

/// `v_≤(x, x') = v(x, x') + v(x', x)` for `x < x'`, diagonal kept.
pub fn leq_view(v: &[Vec<f64>]) -> Vec<f64> {
    leq_pairs(v.len())
        .into_iter()
        .map(|(x, y)| if x == y { v[x][x] } else { v[x][y] + v[y][x] })
        .collect()
}

/// `ψ(α, β) = (d/2) H(α | χ²_≤) + H(β | ϑ)`.
pub fn sanov_rate(alpha: &[f64], beta: &[f64], d: f64, chi: &[f64], vartheta: &[f64]) -> f64 {
    d / 2.0 * relative_entropy(alpha, &chi2_leq(chi)) + relative_entropy(beta, vartheta)
}

/// A symmetric nonnegative matrix `d_{x,x'}` with positive total.
#[derive(Debug, Clone, PartialEq)]
pub struct AverageDegreeVector {
    d: Vec<Vec<f64>>,
}

impl AverageDegreeVector {
    pub fn new(d: Vec<Vec<f64>>) -> Result<Self> {
        let k = d.len();
        if d.iter().any(|r| r.len() != k) {
            return Err(Error::invalid("average-degree vector must be square"));
        }
        for x in 0..k {
            for y in 0..k {
                if !(d[x][y] >= 0.0) || !d[x][y].is_finite() {
                    return Err(Error::invalid("average degrees must be finite and nonnegative"));
                }
                if (d[x][y] - d[y][x]).abs() > TOLERANCE {
                    return Err(Error::invalid("average-degree vector must be symmetric"));
                }
            }
        }
        let v = Self { d };
        if v.total() <= 0.0 {
            return Err(Error::invalid("average-degree vector must have positive total"));
        }
        Ok(v)
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.d
    }

    pub fn total(&self) -> f64 {
        self.d.iter().flatten().sum()
    }

    pub fn leq(&self) -> Vec<f64> {
        leq_view(&self.d)
    }
}

/// `s(d⃗) = Σ_{x,x'} s(d_{x,x'})` over all ordered pairs.
pub fn s_vector(d: &AverageDegreeVector) -> f64 {
    d.matrix().iter().flatten().map(|&x| s_value(x)).sum()
}
