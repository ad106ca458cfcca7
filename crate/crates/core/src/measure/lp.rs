//! Exact Lévy–Prokhorov and total variation distances.
//!
//! For finitely supported measures the open `ε`-neighborhood of a set only
//! changes when `ε` crosses a pairwise atom distance. Between two consecutive
//! distances `t < t'` the condition holds for `ε ∈ (t, t']` iff the transport
//! deficiency `D(t)` (largest `μ(A) − ν(A^t)` with closed `t`-neighborhoods)
//! is at most `ε`. Hall's theorem turns `D(t)` into `1 − maxflow` on the
//! bipartite graph of pairs at distance `≤ t`, so
//! `d_LP = min_t max(t, D(t))` over `t ∈ {0} ∪ {pairwise distances}`.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::LocalMeasure;
use crate::graph::{CanonicalClass, RadiusProfile};
use crate::rational::Rational;
use crate::{Error, Result};

fn profile(c: &CanonicalClass) -> RadiusProfile {
    RadiusProfile::new(&c.decode().expect("measure atoms are valid codes"))
}

/// Local distances between the atoms of `mu` (rows) and `nu` (columns), in
/// atom order.
pub fn atom_distances(mu: &LocalMeasure, nu: &LocalMeasure) -> Vec<Vec<Rational>> {
    let pa: Vec<RadiusProfile> = mu.atoms().keys().map(profile).collect();
    let pb: Vec<RadiusProfile> = nu.atoms().keys().map(profile).collect();
    pa.par_iter().map(|a| pb.iter().map(|b| a.distance(b)).collect()).collect()
}

/// `max_A μ(A) − ν(A^t)` with closed neighborhoods, via maximum flow.
pub fn deficiency(mu: &[Rational], nu: &[Rational], dist: &[Vec<Rational>], t: &Rational) -> Rational {
    let flow = max_flow(mu, nu, |i, j| &dist[i][j] <= t);
    let total: Rational = mu.iter().sum();
    total - flow
}

/// Edmonds–Karp on source → μ atoms → ν atoms → sink.
fn max_flow(mu: &[Rational], nu: &[Rational], admissible: impl Fn(usize, usize) -> bool) -> Rational {
    let (a, b) = (mu.len(), nu.len());
    let n = a + b + 2;
    let (s, t) = (a + b, a + b + 1);
    // Dense residual capacities; `None` means unbounded.
    let mut cap: Vec<Vec<Option<Rational>>> = vec![vec![Some(Rational::zero()); n]; n];
    for i in 0..a {
        cap[s][i] = Some(mu[i].clone());
        for j in 0..b {
            if admissible(i, j) {
                cap[i][a + j] = None;
            }
        }
    }
    for j in 0..b {
        cap[a + j][t] = Some(nu[j].clone());
    }
    let positive = |c: &Option<Rational>| c.as_ref().map_or(true, |x| x > &Rational::zero());
    let mut total = Rational::zero();
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for v in 0..n {
                if prev[v] == usize::MAX && positive(&cap[u][v]) {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return total;
        }
        let mut bottleneck: Option<Rational> = None;
        let mut v = t;
        while v != s {
            let u = prev[v];
            if let Some(c) = &cap[u][v] {
                if bottleneck.as_ref().map_or(true, |b| c < b) {
                    bottleneck = Some(c.clone());
                }
            }
            v = u;
        }
        let push = bottleneck.expect("source and sink edges are bounded");
        let mut v = t;
        while v != s {
            let u = prev[v];
            if let Some(c) = &mut cap[u][v] {
                *c -= &push;
            }
            if let Some(c) = &mut cap[v][u] {
                *c += &push;
            }
            v = u;
        }
        total += push;
    }
}

fn weights(mu: &LocalMeasure) -> Vec<Rational> {
    mu.atoms().values().cloned().collect()
}

/// Exact Lévy–Prokhorov distance.
pub fn levy_prokhorov(mu: &LocalMeasure, nu: &LocalMeasure) -> Rational {
    levy_prokhorov_with(mu, nu, &atom_distances(mu, nu))
}

fn levy_prokhorov_with(mu: &LocalMeasure, nu: &LocalMeasure, dist: &[Vec<Rational>]) -> Rational {
    let (wm, wn) = (weights(mu), weights(nu));
    let mut thresholds: BTreeSet<Rational> = dist.iter().flatten().cloned().collect();
    thresholds.insert(Rational::zero());
    let mut best = Rational::one();
    for t in thresholds {
        if t >= best {
            break;
        }
        let d = deficiency(&wm, &wn, dist, &t);
        let candidate = if d > t { d } else { t };
        if candidate < best {
            best = candidate;
        }
    }
    best
}

/// Reference implementation that enumerates every subset of atoms. Limited to
/// supports of at most 16 atoms per side.
pub fn levy_prokhorov_brute_force(mu: &LocalMeasure, nu: &LocalMeasure) -> Result<Rational> {
    if mu.len() > 16 || nu.len() > 16 {
        return Err(Error::CapExceeded { n: mu.len().max(nu.len()), cap: 16 });
    }
    let dist = atom_distances(mu, nu);
    let transposed: Vec<Vec<Rational>> =
        (0..nu.len()).map(|j| (0..mu.len()).map(|i| dist[i][j].clone()).collect()).collect();
    let (wm, wn) = (weights(mu), weights(nu));
    // Worst `μ(A) − ν(A^t)` over every subset `A` of the support of `μ`.
    let worst = |w: &[Rational], other: &[Rational], d: &[Vec<Rational>], t: &Rational| {
        let mut worst = Rational::zero();
        for mask in 1u32..(1 << w.len()) {
            let inside = |i: usize| mask & (1 << i) != 0;
            let mass: Rational = (0..w.len()).filter(|&i| inside(i)).map(|i| &w[i]).sum();
            let near: Rational = (0..other.len())
                .filter(|&j| (0..w.len()).any(|i| inside(i) && &d[i][j] <= t))
                .map(|j| &other[j])
                .sum();
            let gap = mass - near;
            if gap > worst {
                worst = gap;
            }
        }
        worst
    };
    let mut candidates: BTreeSet<Rational> = dist.iter().flatten().cloned().collect();
    candidates.insert(Rational::zero());
    let thresholds = candidates.clone();
    for t in &thresholds {
        candidates.insert(worst(&wm, &wn, &dist, t));
        candidates.insert(worst(&wn, &wm, &transposed, t));
    }
    // The distance is the smallest candidate `c` such that every `ε` slightly
    // above `c` satisfies both inequalities.
    for c in candidates {
        let a = worst(&wm, &wn, &dist, &c);
        let b = worst(&wn, &wm, &transposed, &c);
        if a <= c && b <= c {
            return Ok(c);
        }
    }
    Ok(Rational::one())
}

/// `½ Σ |μ(x) − ν(x)|`.
pub fn total_variation(mu: &LocalMeasure, nu: &LocalMeasure) -> Rational {
    let keys: BTreeSet<&CanonicalClass> = mu.atoms().keys().chain(nu.atoms().keys()).collect();
    let sum: Rational = keys
        .into_iter()
        .map(|k| {
            let d = mu.weight(k) - nu.weight(k);
            if d < Rational::zero() {
                -d
            } else {
                d
            }
        })
        .sum();
    sum / Rational::from_integer(2.into())
}

/// Outcome of checking `d_LP(f♯μ, f♯ν) ≤ α · d_LP(μ, ν)` over a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LipschitzReport {
    pub pairs_checked: usize,
    /// Largest observed `d_LP(f♯μ, f♯ν) / d_LP(μ, ν)` over pairs with `μ ≠ ν`.
    pub max_ratio: Rational,
    /// Atoms on which `f` itself is not `α`-Lipschitz.
    pub atom_violation: Option<(CanonicalClass, CanonicalClass)>,
    /// Indices of a measure pair violating the bound.
    pub measure_violation: Option<(usize, usize)>,
}

impl LipschitzReport {
    pub fn holds(&self) -> bool {
        self.atom_violation.is_none() && self.measure_violation.is_none()
    }
}

/// Checks the pushforward bound for every pair of measures in `corpus`, after
/// verifying that `f` is `alpha`-Lipschitz on all corpus atoms.
pub fn pushforward_lipschitz_check(
    f: impl Fn(&CanonicalClass) -> CanonicalClass + Sync,
    alpha: &Rational,
    corpus: &[LocalMeasure],
) -> LipschitzReport {
    let atoms: Vec<CanonicalClass> = corpus
        .iter()
        .flat_map(|m| m.atoms().keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let profiles: Vec<RadiusProfile> = atoms.par_iter().map(profile).collect();
    let images: Vec<RadiusProfile> = atoms.par_iter().map(|c| profile(&f(c))).collect();
    let atom_violation = (0..atoms.len())
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..atoms.len()).map(move |j| (i, j)))
        .find_first(|&(i, j)| images[i].distance(&images[j]) > alpha * profiles[i].distance(&profiles[j]))
        .map(|(i, j)| (atoms[i].clone(), atoms[j].clone()));

    let pushed: Vec<LocalMeasure> = corpus.iter().map(|m| m.pushforward(&f)).collect();
    let pairs: Vec<(usize, usize)> =
        (0..corpus.len()).flat_map(|i| (i + 1..corpus.len()).map(move |j| (i, j))).collect();
    let results: Vec<((usize, usize), Rational, Rational)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            (
                (i, j),
                levy_prokhorov(&corpus[i], &corpus[j]),
                levy_prokhorov(&pushed[i], &pushed[j]),
            )
        })
        .collect();
    let mut max_ratio = Rational::zero();
    let mut measure_violation = None;
    for (pair, before, after) in results {
        if after > alpha * &before && measure_violation.is_none() {
            measure_violation = Some(pair);
        }
        if !before.is_zero() {
            let r = after / before;
            if r > max_ratio {
                max_ratio = r;
            }
        }
    }
    LipschitzReport { pairs_checked: pairs.len(), max_ratio, atom_violation, measure_violation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonicalize, MarkedGraph, RootedMarkedGraph};
    use crate::measure::empirical_distribution;
    use crate::rational::ratio;

    fn path(n: usize) -> RootedMarkedGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        RootedMarkedGraph::new(MarkedGraph::unmarked(n, &edges).unwrap(), 0).unwrap()
    }

    fn dirac(n: usize) -> LocalMeasure {
        LocalMeasure::dirac(canonicalize(&path(n), None))
    }

    #[test]
    fn equal_measures_are_at_zero() {
        let mu = empirical_distribution(path(5).graph()).unwrap();
        assert!(levy_prokhorov(&mu, &mu).is_zero());
    }

    #[test]
    fn diracs_match_atom_distance() {
        // Paths of 2 and 4 vertices rooted at an end first differ at radius 2.
        assert_eq!(levy_prokhorov(&dirac(2), &dirac(4)), ratio(1, 3));
        assert_eq!(levy_prokhorov(&dirac(1), &dirac(2)), ratio(1, 2));
    }

    #[test]
    fn mass_split_case() {
        // μ = δ_a, ν = ½δ_a + ½δ_b with d(a, b) = 1: the answer is ½.
        let a = canonicalize(&RootedMarkedGraph::single(0), None);
        let b = canonicalize(&RootedMarkedGraph::single(1), None);
        let mu = LocalMeasure::dirac(a.clone());
        let nu = LocalMeasure::new([(a, ratio(1, 2)), (b, ratio(1, 2))]).unwrap();
        assert_eq!(levy_prokhorov(&mu, &nu), ratio(1, 2));
        assert_eq!(levy_prokhorov_brute_force(&mu, &nu).unwrap(), ratio(1, 2));
        assert_eq!(total_variation(&mu, &nu), ratio(1, 2));
    }

    #[test]
    fn flow_matches_brute_force_on_paths() {
        let mu = empirical_distribution(path(6).graph()).unwrap();
        let nu = empirical_distribution(path(3).graph()).unwrap();
        assert_eq!(levy_prokhorov(&mu, &nu), levy_prokhorov_brute_force(&mu, &nu).unwrap());
        assert_eq!(levy_prokhorov(&mu, &nu), levy_prokhorov(&nu, &mu));
    }

    #[test]
    fn identity_is_one_lipschitz() {
        let corpus: Vec<LocalMeasure> = (1..5).map(|n| empirical_distribution(path(n).graph()).unwrap()).collect();
        let report = pushforward_lipschitz_check(|c| c.clone(), &Rational::one(), &corpus);
        assert!(report.holds());
        assert!(report.max_ratio <= Rational::one());
        assert_eq!(report.pairs_checked, 6);
    }
}
