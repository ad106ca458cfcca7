use std::collections::BTreeMap;

use num_traits::Zero;

use super::inputs::RateInputs;
use super::stats::measure_degree_stats;
use super::{leq_pairs, s_vector, sanov_rate, shannon_entropy, AverageDegreeVector, TOLERANCE};
use crate::measure::{project_unmarked, truncate_measure, LocalMeasure};
use crate::rational::{to_f64, Rational};
use crate::{Error, Result};

/// `I_{d⃗,Q}(μ) = H(Q) + s(d⃗) − Σ`, given the entropy value `Σ`.
pub fn rate_i_dq(sigma: f64, dvec: &AverageDegreeVector, q: &[f64]) -> Result<f64> {
    let upper = shannon_entropy(q) + s_vector(dvec);
    if sigma > upper + TOLERANCE {
        return Err(Error::RangeViolation(format!("Sigma = {sigma} exceeds s(d) + H(Q) = {upper}")));
    }
    if sigma == f64::NEG_INFINITY {
        return Ok(f64::INFINITY);
    }
    Ok(upper - sigma)
}

/// Law of the root degree under `μ`, read off the unmarked depth-1 projection.
pub fn degree_law(mu: &LocalMeasure) -> Result<BTreeMap<u64, Rational>> {
    let mut law: BTreeMap<u64, Rational> = BTreeMap::new();
    for (class, w) in project_unmarked(&truncate_measure(mu, 1)).atoms() {
        let g = class.decode()?;
        *law.entry(g.graph().degree(g.root()) as u64).or_insert_with(Rational::zero) += w;
    }
    Ok(law)
}

/// `I_{P,d⃗,Q}(ρ)`: `J₁(P) + I_{d⃗,Q}(ρ)` when the root-degree law of `ρ` is
/// `P`, otherwise `+∞`.
pub fn rate_i_pdq(
    j1: f64,
    sigma: f64,
    dvec: &AverageDegreeVector,
    q: &[f64],
    rho: &LocalMeasure,
    p: &BTreeMap<u64, Rational>,
) -> Result<f64> {
    let mut p = p.clone();
    p.retain(|_, w| !w.is_zero());
    if degree_law(rho)? != p {
        return Ok(f64::INFINITY);
    }
    Ok(j1 + rate_i_dq(sigma, dvec, q)?)
}

/// `λ_P(μ)`. Finite only when `deg(μ) = d` exactly.
pub fn rate_lambda(inputs: &RateInputs, mu: &LocalMeasure) -> Result<f64> {
    let stats = measure_degree_stats(mu, inputs.vartheta.len(), inputs.chi.len())?;
    let d = inputs.mean_degree();
    if stats.deg != d {
        return Ok(f64::INFINITY);
    }
    if d.is_zero() {
        return Err(Error::invalid("mean degree must be positive"));
    }
    let alpha: Vec<Rational> = stats.deg_leq.iter().map(|x| x / &d).collect();
    evaluate(inputs, mu, &d, &stats.dvec, &stats.pi, &alpha)
}

/// `I_{P,dα₊,β}(μ) + ψ(α, β)` for a given `(α, β)`. The first term is `+∞`
/// unless `dα₊ = deg⃗(μ)` and `β = Π⃗(μ)`, so the infimum over `(α, β)` is
/// attained at the point used by [`rate_lambda`].
pub fn rate_lambda_at(inputs: &RateInputs, mu: &LocalMeasure, alpha: &[Rational], beta: &[Rational]) -> Result<f64> {
    let k = inputs.chi.len();
    let pairs = leq_pairs(k);
    if alpha.len() != pairs.len() || beta.len() != inputs.vartheta.len() {
        return Err(Error::invalid("alpha or beta has the wrong length"));
    }
    let d = inputs.mean_degree();
    let mut dvec = vec![vec![Rational::zero(); k]; k];
    let two = Rational::from_integer(2.into());
    for (&(x, y), a) in pairs.iter().zip(alpha) {
        if x == y {
            dvec[x][x] = &d * a;
        } else {
            dvec[x][y] = &d * a / &two;
            dvec[y][x] = dvec[x][y].clone();
        }
    }
    let stats = measure_degree_stats(mu, inputs.vartheta.len(), k)?;
    if stats.dvec != dvec || stats.pi != beta {
        return Ok(f64::INFINITY);
    }
    evaluate(inputs, mu, &d, &dvec, beta, alpha)
}

fn evaluate(
    inputs: &RateInputs,
    mu: &LocalMeasure,
    d: &Rational,
    dvec: &[Vec<Rational>],
    beta: &[Rational],
    alpha: &[Rational],
) -> Result<f64> {
    let f = |v: &[Rational]| v.iter().map(to_f64).collect::<Vec<f64>>();
    let dvec = AverageDegreeVector::new(dvec.iter().map(|r| f(r)).collect())?;
    let beta = f(beta);
    let i = rate_i_pdq(inputs.j1, inputs.sigma, &dvec, &beta, mu, &inputs.p)?;
    let psi = sanov_rate(&f(alpha), &beta, to_f64(d), &f(&inputs.chi), &f(&inputs.vartheta));
    Ok(i + psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::s_value;
    use crate::graph::{MarkedEdge, MarkedGraph};
    use crate::measure::empirical_distribution;
    use crate::rational::ratio;
    use std::f64::consts::LN_2;

    fn dvec1(x: f64) -> AverageDegreeVector {
        AverageDegreeVector::new(vec![vec![x]]).unwrap()
    }

    #[test]
    fn i_dq() {
        let q = [0.5, 0.5];
        let max = LN_2 + s_value(2.0);
        assert!(rate_i_dq(max, &dvec1(2.0), &q).unwrap().abs() < 1e-12);
        assert_eq!(rate_i_dq(f64::NEG_INFINITY, &dvec1(2.0), &q).unwrap(), f64::INFINITY);
        assert!((rate_i_dq(max - 1.0, &dvec1(2.0), &q).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(rate_i_dq(max + 0.1, &dvec1(2.0), &q), Err(Error::RangeViolation(_))));
    }

    /// A 4-cycle with uniform marks on two vertex symbols and one edge symbol.
    fn cycle_inputs(sigma: f64) -> (RateInputs, LocalMeasure) {
        let edges = (0..4).map(|i| MarkedEdge::new(i, (i + 1) % 4, 0, 0));
        let g = MarkedGraph::new(vec![0, 1, 0, 1], edges).unwrap();
        let text = format!("P = 2:1\nvartheta = 1/2,1/2\nchi = 1\nSigma = {sigma}\nJ1 = 0.1\nprovenance = supplied\n");
        (RateInputs::parse(&text).unwrap(), empirical_distribution(&g).unwrap())
    }

    #[test]
    fn lambda_reduces_to_i() {
        let sigma = LN_2 + s_value(2.0) - 0.3;
        let (inputs, mu) = cycle_inputs(sigma);
        let lambda = rate_lambda(&inputs, &mu).unwrap();
        let i = rate_i_pdq(0.1, sigma, &dvec1(2.0), &[0.5, 0.5], &mu, &inputs.p).unwrap();
        assert_eq!(lambda, i);
        assert!((lambda - 0.4).abs() < 1e-12);
    }

    #[test]
    fn lambda_infinite_off_degree() {
        let (mut inputs, mu) = cycle_inputs(0.0);
        inputs.p = [(3u64, ratio(1, 1))].into_iter().collect();
        assert_eq!(rate_lambda(&inputs, &mu).unwrap(), f64::INFINITY);
    }

    #[test]
    fn projection_mismatch() {
        let (inputs, mu) = cycle_inputs(0.0);
        let p = [(1u64, ratio(1, 2)), (3, ratio(1, 2))].into_iter().collect();
        assert_eq!(rate_i_pdq(0.0, 0.0, &dvec1(2.0), &[0.5, 0.5], &mu, &p).unwrap(), f64::INFINITY);
        let law = degree_law(&mu).unwrap();
        assert_eq!(law, inputs.p);
    }

    #[test]
    fn lambda_monotone_in_sigma() {
        let (a, mu) = cycle_inputs(-1.0);
        let (b, _) = cycle_inputs(0.5);
        assert!(rate_lambda(&a, &mu).unwrap() >= rate_lambda(&b, &mu).unwrap());
    }

    #[test]
    fn forced_point() {
        let (inputs, mu) = cycle_inputs(0.2);
        let at = rate_lambda_at(&inputs, &mu, &[ratio(1, 1)], &[ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(at, rate_lambda(&inputs, &mu).unwrap());
        let off = rate_lambda_at(&inputs, &mu, &[ratio(1, 1)], &[ratio(1, 3), ratio(2, 3)]).unwrap();
        assert_eq!(off, f64::INFINITY);
    }
}
