use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::{visit_marked, Limits};
use crate::graph::{DegreeSequence, MarkedGraph};
use crate::measure::{
    empirical_distribution, empirical_distribution_truncated, levy_prokhorov, project_unmarked,
    truncate_measure, write_measure, LocalMeasure,
};
use crate::rational::Rational;
use crate::sampler::CountVectors;
use crate::Result;

/// The multinomial coefficient `(Σc)! / Π c_i!`.
pub fn type_class_size(counts: &[u64]) -> BigUint {
    let mut out = BigUint::from(1u32);
    let mut total = 0u64;
    for &c in counts {
        // Multiply in C(total + c, c) one factor at a time.
        for i in 1..=c {
            total += 1;
            out = out * BigUint::from(total) / BigUint::from(i);
        }
    }
    out
}

/// Members of `Ḡ(ℓ)_{m,u}` whose empirical distribution is within
/// Lévy–Prokhorov distance `< eps` of `mu`, optionally also requiring the
/// unmarked depth-1 law `U(π(G))_1` to equal `constraint`.
pub fn count_ball_restricted(
    ell: &DegreeSequence,
    cv: &CountVectors,
    mu: &LocalMeasure,
    eps: &Rational,
    constraint: Option<&LocalMeasure>,
    limits: &Limits,
) -> Result<BigUint> {
    let mut cache: HashMap<String, bool> = HashMap::new();
    let mut count = BigUint::zero();
    let mut failure = None;
    visit_marked(ell, cv, limits, |g| {
        if failure.is_some() {
            return;
        }
        let u = match empirical_distribution(g) {
            Ok(u) => u,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        let key = write_measure(&u);
        let inside = *cache.entry(key).or_insert_with(|| {
            let close = &levy_prokhorov(&u, mu) < eps;
            close && constraint.map_or(true, |p| &project_unmarked(&truncate_measure(&u, 1)) == p)
        });
        if inside {
            count += 1u32;
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// `(log count − ‖m‖₁ log n) / n` for the ball count; `−∞` when empty.
pub fn finite_entropy_estimate(
    ell: &DegreeSequence,
    cv: &CountVectors,
    mu: &LocalMeasure,
    eps: &Rational,
    limits: &Limits,
) -> Result<f64> {
    let count = count_ball_restricted(ell, cv, mu, eps, None, limits)?;
    Ok(entropy_term(&count, cv.edge_total(), ell.len()))
}

pub(crate) fn entropy_term(count: &BigUint, edges: u64, n: usize) -> f64 {
    if count.is_zero() {
        return f64::NEG_INFINITY;
    }
    (ln_big(count) - edges as f64 * (n as f64).ln()) / n as f64
}

/// Natural log of a big integer without overflowing `f64`.
pub(crate) fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().expect("fits in f64").ln() + shift as f64 * std::f64::consts::LN_2
}

/// `N_k`: members of `Ḡ(ℓ)_{m,u}`, with `ℓ` the degrees of `reference`, whose
/// depth-`k` empirical law equals that of `reference`.
pub fn count_nk(reference: &MarkedGraph, cv: &CountVectors, k: usize, limits: &Limits) -> Result<BigUint> {
    let ell = DegreeSequence::new(reference.degrees())?;
    let target = empirical_distribution_truncated(reference, k)?;
    let mut count = BigUint::zero();
    let mut failure = None;
    visit_marked(&ell, cv, limits, |g| match empirical_distribution_truncated(g, k) {
        Ok(u) if u == target => count += 1u32,
        Ok(_) => {}
        Err(e) => failure = Some(e),
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_marked;
    use crate::graph::MarkedEdge;
    use crate::rational::{integer, ratio};

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    /// Enumerates all words with the given letter counts.
    fn words_with_counts(counts: &[u64]) -> usize {
        let len: u64 = counts.iter().sum();
        let k = counts.len() as u64;
        (0..k.pow(len as u32))
            .filter(|&w| {
                let mut c = vec![0u64; counts.len()];
                let mut w = w;
                for _ in 0..len {
                    c[(w % k) as usize] += 1;
                    w /= k;
                }
                c == counts
            })
            .count()
    }

    #[test]
    fn multinomials() {
        assert_eq!(type_class_size(&[5]), BigUint::from(1u32));
        assert_eq!(type_class_size(&[2, 2]), BigUint::from(6u32));
        assert_eq!(type_class_size(&[]), BigUint::from(1u32));
        for counts in [&[1, 2, 3][..], &[4, 0, 2], &[3, 3, 3], &[2, 5]] {
            assert_eq!(type_class_size(counts), BigUint::from(words_with_counts(counts)));
        }
    }

    fn instance() -> (DegreeSequence, CountVectors) {
        (seq(&[2, 1, 1, 2]), CountVectors::new(vec![2, 2], vec![vec![1, 1], vec![1, 1]]).unwrap())
    }

    #[test]
    fn huge_ball_counts_everything() {
        let (ell, cv) = instance();
        let total = enumerate_marked(&ell, &cv, false).unwrap().count;
        let g = MarkedGraph::unmarked(1, &[]).unwrap();
        let mu = empirical_distribution(&g).unwrap();
        let limits = Limits::default();
        assert_eq!(count_ball_restricted(&ell, &cv, &mu, &integer(2), None, &limits).unwrap(), total);
        let est = finite_entropy_estimate(&ell, &cv, &mu, &integer(2), &limits).unwrap();
        let direct = entropy_term(&total, cv.edge_total(), ell.len());
        assert_eq!(est, direct);
        // A single isolated vertex is never within distance 1/2 of these graphs.
        assert!(count_ball_restricted(&ell, &cv, &mu, &ratio(1, 2), None, &limits).unwrap().is_zero());
        let e = finite_entropy_estimate(&ell, &cv, &mu, &ratio(1, 100), &limits).unwrap();
        assert_eq!(e, f64::NEG_INFINITY);
    }

    #[test]
    fn single_edge_counts() {
        // Four members: two vertex labelings times two orientations of the
        // edge marks. Root marks alone cannot tell them apart.
        let g = MarkedGraph::new(vec![0, 1], [MarkedEdge::new(0, 1, 0, 1)]).unwrap();
        let cv = CountVectors::from_graph(&g, 2, 2);
        let limits = Limits::default();
        let n1 = count_nk(&g, &cv, 1, &limits).unwrap();
        // At depth 1 the law matches when the vertex marked 0 sends mark 0.
        assert_eq!(n1, BigUint::from(2u32));
        let n0 = count_nk(&g, &cv, 0, &limits).unwrap();
        assert_eq!(n0, BigUint::from(4u32));
    }

    #[test]
    fn unique_realization() {
        let g = MarkedGraph::new(vec![1, 1, 0], [MarkedEdge::new(0, 1, 1, 1)]).unwrap();
        let cv = CountVectors::from_graph(&g, 2, 2);
        let ell = DegreeSequence::new(g.degrees()).unwrap();
        // The mark-0 vertex can be any of the three, but only the isolated
        // one reproduces the depth-1 law.
        assert_eq!(enumerate_marked(&ell, &cv, false).unwrap().count, BigUint::from(3u32));
        assert_eq!(count_nk(&g, &cv, 0, &Limits::default()).unwrap(), BigUint::from(3u32));
        for k in 1..3 {
            assert_eq!(count_nk(&g, &cv, k, &Limits::default()).unwrap(), BigUint::from(1u32));
        }
    }

    #[test]
    fn nk_is_nonincreasing() {
        let g = MarkedGraph::new(
            vec![0, 1, 0, 1],
            [MarkedEdge::new(0, 1, 0, 1), MarkedEdge::new(1, 2, 0, 0), MarkedEdge::new(2, 3, 1, 1)],
        )
        .unwrap();
        let cv = CountVectors::from_graph(&g, 2, 2);
        let limits = Limits::default();
        let counts: Vec<BigUint> = (0..4).map(|k| count_nk(&g, &cv, k, &limits).unwrap()).collect();
        assert!(counts.windows(2).all(|w| w[1] <= w[0]), "{counts:?}");
        assert!(counts[3] >= BigUint::from(1u32));
    }
}
