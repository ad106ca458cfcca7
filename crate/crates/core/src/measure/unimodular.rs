//! Mass-transport balance for finitely supported measures.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::LocalMeasure;
use crate::graph::{canonicalize_doubly_rooted, CanonicalClass};
use crate::rational::Rational;

/// A doubly rooted class together with an aggregated weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublyRootedOccurrence {
    pub class: CanonicalClass,
    pub weight: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularityReport {
    pub unimodular: bool,
    /// First doubly rooted class whose outgoing mass (root first) differs from
    /// its incoming mass (root second), with both masses.
    pub witness: Option<(DoublyRootedOccurrence, DoublyRootedOccurrence)>,
    /// Number of distinct doubly rooted classes compared.
    pub classes: usize,
}

/// Compares `∫ Σ_v 1[G, o, v] dμ` with `∫ Σ_v 1[G, v, o] dμ` class by class.
/// Indicators of doubly rooted classes generate every nonnegative test
/// function on a finite support, so equality of the two aggregate measures is
/// exactly the mass-transport identity.
pub fn check_unimodular(mu: &LocalMeasure) -> UnimodularityReport {
    let mut out: BTreeMap<CanonicalClass, Rational> = BTreeMap::new();
    let mut inward: BTreeMap<CanonicalClass, Rational> = BTreeMap::new();
    for (class, w) in mu.atoms() {
        let g = class.decode().expect("measure atoms are valid codes");
        let (o, graph) = (g.root(), g.graph());
        for v in 0..graph.n() {
            *out.entry(canonicalize_doubly_rooted(graph, o, v)).or_insert_with(Rational::zero) += w;
            *inward.entry(canonicalize_doubly_rooted(graph, v, o)).or_insert_with(Rational::zero) += w;
        }
    }
    let keys: BTreeSet<&CanonicalClass> = out.keys().chain(inward.keys()).collect();
    let classes = keys.len();
    let witness = keys.into_iter().find_map(|k| {
        let a = out.get(k).cloned().unwrap_or_else(Rational::zero);
        let b = inward.get(k).cloned().unwrap_or_else(Rational::zero);
        (a != b).then(|| {
            (
                DoublyRootedOccurrence { class: k.clone(), weight: a },
                DoublyRootedOccurrence { class: k.clone(), weight: b },
            )
        })
    });
    UnimodularityReport { unimodular: witness.is_none(), witness, classes }
}
