use std::collections::BTreeMap;

use super::colors::{Color, ColorSet};
use super::sequence::ColoredDegreeSequence;
use crate::graph::MarkedGraph;
use crate::{Error, Result};

/// A directed colored edge `from → to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub color: Color,
}

/// A colored multigraph on `[n]`, stored as a sorted multiset of arcs. The
/// multiplicity `ω_c(u, v)` is the number of arcs `u → v` of color `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredMultigraph {
    n: usize,
    colors: ColorSet,
    arcs: Vec<Arc>,
}

impl ColoredMultigraph {
    /// Builds a multigraph from arcs. Only ranges are checked here; see
    /// [`ColoredMultigraph::check_axioms`].
    pub fn from_arcs(n: usize, colors: ColorSet, mut arcs: Vec<Arc>) -> Result<Self> {
        for a in &arcs {
            if a.from >= n || a.to >= n {
                return Err(Error::invalid(format!("arc {} → {} leaves [n]", a.from, a.to)));
            }
            if !colors.contains(a.color) {
                return Err(Error::invalid(format!("unknown color {}", a.color)));
            }
        }
        arcs.sort_unstable();
        Ok(Self { n, colors, arcs })
    }

    /// Adds both arcs of an edge: `u → v` with color `c` and `v → u` with `c̄`.
    pub fn from_edges(n: usize, colors: ColorSet, edges: &[(usize, usize, Color)]) -> Result<Self> {
        let arcs = edges
            .iter()
            .flat_map(|&(u, v, c)| {
                [Arc { from: u, to: v, color: c }, Arc { from: v, to: u, color: colors.conjugate(c) }]
            })
            .collect();
        Self::from_arcs(n, colors, arcs)
    }

    pub fn empty(n: usize, colors: ColorSet) -> Self {
        Self { n, colors, arcs: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &ColorSet {
        &self.colors
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// `ω_c(u, v)`.
    pub fn omega(&self, c: Color, u: usize, v: usize) -> usize {
        let probe = Arc { from: u, to: v, color: c };
        let lo = self.arcs.partition_point(|a| a < &probe);
        let hi = self.arcs.partition_point(|a| a <= &probe);
        hi - lo
    }

    /// Checks `ω_c(u, v) = ω_c̄(v, u)` for all arcs and evenness of diagonal
    /// loops.
    pub fn check_axioms(&self) -> Result<()> {
        let mut count: BTreeMap<Arc, usize> = BTreeMap::new();
        for a in &self.arcs {
            *count.entry(*a).or_default() += 1;
        }
        for (a, &k) in &count {
            let mirror = Arc { from: a.to, to: a.from, color: self.colors.conjugate(a.color) };
            if count.get(&mirror).copied().unwrap_or(0) != k {
                return Err(Error::InconsistentColors { u: a.from, v: a.to });
            }
            if a.from == a.to && self.colors.is_diagonal(a.color) && k % 2 != 0 {
                return Err(Error::invalid(format!("odd diagonal loop at {}", a.from)));
            }
        }
        Ok(())
    }

    /// `D_c(v) = Σ_w ω_c(v, w)` for every color present at `v`.
    pub fn colored_degree_of(&self, v: usize) -> BTreeMap<Color, u64> {
        let lo = self.arcs.partition_point(|a| a.from < v);
        let hi = self.arcs.partition_point(|a| a.from <= v);
        let mut row = BTreeMap::new();
        for a in &self.arcs[lo..hi] {
            *row.entry(a.color).or_insert(0) += 1;
        }
        row
    }

    pub fn colored_degrees(&self) -> ColoredDegreeSequence {
        let rows = (0..self.n).map(|v| self.colored_degree_of(v)).collect();
        ColoredDegreeSequence::from_rows_unchecked(self.colors.clone(), rows)
    }

    /// `CB(G)`: `ω̄(u, v) = Σ_c ω_c(u, v)`.
    pub fn colorblind(&self) -> ColorblindMultigraph {
        let mut omega: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for a in &self.arcs {
            *omega.entry((a.from, a.to)).or_default() += 1;
        }
        ColorblindMultigraph { n: self.n, omega }
    }
}

/// An uncolored multigraph given by directed multiplicities `ω̄(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorblindMultigraph {
    pub n: usize,
    pub omega: BTreeMap<(usize, usize), usize>,
}

impl ColorblindMultigraph {
    pub fn omega(&self, u: usize, v: usize) -> usize {
        self.omega.get(&(u, v)).copied().unwrap_or(0)
    }

    /// No loops and no multiple edges.
    pub fn is_simple(&self) -> bool {
        self.omega.iter().all(|(&(u, v), &k)| u != v && k == 1)
    }

    /// The simple graph, unmarked, if `self` is simple.
    pub fn to_graph(&self) -> Option<MarkedGraph> {
        if !self.is_simple() {
            return None;
        }
        let edges: Vec<(usize, usize)> =
            self.omega.keys().filter(|(u, v)| u < v).copied().collect();
        MarkedGraph::unmarked(self.n, &edges).ok()
    }
}
