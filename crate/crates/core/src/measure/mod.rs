//! Finitely supported probability measures on rooted marked graphs.

mod io;
mod lp;
mod unimodular;

pub use io::{parse_measure, write_measure};
pub use lp::{
    atom_distances, deficiency, levy_prokhorov, levy_prokhorov_brute_force,
    pushforward_lipschitz_check, total_variation, LipschitzReport,
};
pub use unimodular::{check_unimodular, DoublyRootedOccurrence, UnimodularityReport};

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::graph::{canonicalize, CanonicalClass, MarkedGraph};
use crate::rational::{ratio, Rational};
use crate::{Error, Result};

/// A probability measure with finitely many atoms and exact weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalMeasure {
    atoms: BTreeMap<CanonicalClass, Rational>,
}

impl LocalMeasure {
    /// Builds a measure from weighted atoms, merging repeats. Weights must be
    /// positive and sum to one.
    pub fn new(atoms: impl IntoIterator<Item = (CanonicalClass, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<CanonicalClass, Rational> = BTreeMap::new();
        for (class, w) in atoms {
            if w <= Rational::zero() {
                return Err(Error::invalid("atom weights must be positive"));
            }
            *map.entry(class).or_insert_with(Rational::zero) += w;
        }
        let total: Rational = map.values().sum();
        if !total.is_one() {
            return Err(Error::invalid(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { atoms: map })
    }

    pub fn dirac(class: CanonicalClass) -> Self {
        Self { atoms: BTreeMap::from([(class, Rational::one())]) }
    }

    /// Convex combination `Σ λ_i μ_i`.
    pub fn mixture(parts: &[(Rational, &LocalMeasure)]) -> Result<Self> {
        let atoms = parts
            .iter()
            .filter(|(lambda, _)| !lambda.is_zero())
            .flat_map(|(lambda, mu)| mu.atoms.iter().map(move |(c, w)| (c.clone(), lambda * w)));
        Self::new(atoms)
    }

    pub fn atoms(&self) -> &BTreeMap<CanonicalClass, Rational> {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn weight(&self, class: &CanonicalClass) -> Rational {
        self.atoms.get(class).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_mass(&self) -> Rational {
        self.atoms.values().sum()
    }

    /// Image measure under `f`.
    pub fn pushforward(&self, f: impl Fn(&CanonicalClass) -> CanonicalClass) -> Self {
        let mut map: BTreeMap<CanonicalClass, Rational> = BTreeMap::new();
        for (c, w) in &self.atoms {
            *map.entry(f(c)).or_insert_with(Rational::zero) += w;
        }
        Self { atoms: map }
    }
}

/// `U(G) = (1/n) Σ_v δ_[G(v), v]` where `G(v)` is the component of `v`.
pub fn empirical_distribution(g: &MarkedGraph) -> Result<LocalMeasure> {
    empirical(g, None)
}

/// The empirical distribution of depth-`k` neighborhoods, built directly from
/// the balls rather than by truncating component classes.
pub fn empirical_distribution_truncated(g: &MarkedGraph, k: usize) -> Result<LocalMeasure> {
    empirical(g, Some(k))
}

fn empirical(g: &MarkedGraph, depth: Option<usize>) -> Result<LocalMeasure> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid("empirical distribution of an empty graph"));
    }
    let classes: Vec<CanonicalClass> = (0..n)
        .into_par_iter()
        .map(|v| match depth {
            Some(k) => canonicalize(&g.ball(v, k), Some(k)),
            None => canonicalize(&g.rooted_component(v), None),
        })
        .collect();
    let unit = ratio(1, n as i64);
    LocalMeasure::new(classes.into_iter().map(|c| (c, unit.clone())))
}

/// Pushforward under depth-`k` truncation.
pub fn truncate_measure(mu: &LocalMeasure, k: usize) -> LocalMeasure {
    mu.pushforward(|c| {
        let g = c.decode().expect("measure atoms are valid codes");
        canonicalize(&g, Some(k))
    })
}

/// Pushforward under forgetting all vertex and edge marks.
pub fn project_unmarked(mu: &LocalMeasure) -> LocalMeasure {
    mu.pushforward(|c| {
        let g = c.decode().expect("measure atoms are valid codes");
        canonicalize(&g.forget_marks(), c.depth())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{MarkedEdge, RootedMarkedGraph};

    fn path(n: usize) -> MarkedGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        MarkedGraph::unmarked(n, &edges).unwrap()
    }

    #[test]
    fn single_edge_has_one_atom() {
        let g = MarkedGraph::new(vec![0, 0], [MarkedEdge::new(0, 1, 1, 1)]).unwrap();
        let mu = empirical_distribution(&g).unwrap();
        assert_eq!(mu.len(), 1);
        assert_eq!(mu.total_mass(), Rational::one());
    }

    #[test]
    fn path_three_weights() {
        let g = path(3);
        let mu = empirical_distribution(&g).unwrap();
        let end = canonicalize(&g.rooted_component(0), None);
        let center = canonicalize(&g.rooted_component(1), None);
        assert_eq!(mu.weight(&end), ratio(2, 3));
        assert_eq!(mu.weight(&center), ratio(1, 3));
    }

    #[test]
    fn truncated_path_three() {
        let mu = truncate_measure(&empirical_distribution(&path(3)).unwrap(), 1);
        let leaf1 = canonicalize(&path(2).rooted_component(0), None);
        let leaf2 = canonicalize(&path(3).rooted_component(1), None);
        assert_eq!(mu.weight(&leaf1), ratio(2, 3));
        assert_eq!(mu.weight(&leaf2), ratio(1, 3));
    }

    #[test]
    fn singletons_survive_truncation() {
        let g = MarkedGraph::new(vec![0, 1, 1], []).unwrap();
        let mu = empirical_distribution(&g).unwrap();
        assert_eq!(truncate_measure(&mu, 0), mu);
        assert_eq!(truncate_measure(&mu, 3), mu);
    }

    #[test]
    fn projection_merges_marked_atoms() {
        let a = canonicalize(&RootedMarkedGraph::single(0), None);
        let b = canonicalize(&RootedMarkedGraph::single(1), None);
        let mu = LocalMeasure::new([(a.clone(), ratio(1, 4)), (b, ratio(3, 4))]).unwrap();
        let p = project_unmarked(&mu);
        assert_eq!(p, LocalMeasure::dirac(a));
    }

    #[test]
    fn rejects_bad_weights() {
        let a = canonicalize(&RootedMarkedGraph::single(0), None);
        assert!(LocalMeasure::new([(a.clone(), ratio(1, 2))]).is_err());
        assert!(LocalMeasure::new([(a.clone(), ratio(3, 2)), (a, ratio(-1, 2))]).is_err());
    }
}
