//! The local metric on rooted marked graphs.
//!
//! `d(a, b) = 1 / (1 + r)` where `r` is the smallest radius at which the
//! truncations differ, and `0` when they agree at every radius. Marks are
//! compared exactly.

use super::canon::{canonicalize, CanonicalClass};
use super::marked::RootedMarkedGraph;
use crate::rational::{ratio, Rational};
use num_traits::Zero;

/// Canonical codes of every truncation of a rooted graph, from radius 0 up to
/// its height. Beyond the height the truncation is the graph itself.
#[derive(Debug, Clone)]
pub struct RadiusProfile {
    codes: Vec<CanonicalClass>,
}

impl RadiusProfile {
    pub fn new(g: &RootedMarkedGraph) -> Self {
        let h = g.height();
        Self { codes: (0..=h).map(|r| canonicalize(g, Some(r))).collect() }
    }

    pub fn height(&self) -> usize {
        self.codes.len() - 1
    }

    /// Code of the truncation at radius `r`, ignoring the stored depth.
    pub fn at(&self, r: usize) -> &CanonicalClass {
        &self.codes[r.min(self.height())]
    }

    /// Smallest radius where the two profiles differ, if any.
    pub fn first_disagreement(&self, other: &Self) -> Option<usize> {
        let top = self.height().max(other.height());
        if self.at(top) == other.at(top) {
            return None;
        }
        // Agreement is downward closed, so binary search for the boundary.
        let (mut lo, mut hi) = (0usize, top);
        if self.at(0) != other.at(0) {
            return Some(0);
        }
        // Invariant: agree at lo, disagree at hi.
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.at(mid) == other.at(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(hi)
    }

    pub fn distance(&self, other: &Self) -> Rational {
        distance_from_radius(self.first_disagreement(other))
    }
}

/// `1 / (1 + r)`, or zero when there is no disagreement.
pub fn distance_from_radius(r: Option<usize>) -> Rational {
    match r {
        Some(r) => ratio(1, r as i64 + 1),
        None => Rational::zero(),
    }
}

/// Smallest radius at which the truncations of `a` and `b` are not isomorphic.
pub fn first_disagreement(a: &RootedMarkedGraph, b: &RootedMarkedGraph) -> Option<usize> {
    RadiusProfile::new(a).first_disagreement(&RadiusProfile::new(b))
}

pub fn local_distance(a: &RootedMarkedGraph, b: &RootedMarkedGraph) -> Rational {
    distance_from_radius(first_disagreement(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{MarkedEdge, MarkedGraph};

    fn path(n: usize) -> RootedMarkedGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        RootedMarkedGraph::new(MarkedGraph::unmarked(n, &edges).unwrap(), 0).unwrap()
    }

    #[test]
    fn identical_graphs_are_at_zero() {
        assert!(local_distance(&path(4), &path(4)).is_zero());
    }

    #[test]
    fn different_root_marks_give_one() {
        let a = RootedMarkedGraph::single(0);
        let b = RootedMarkedGraph::single(1);
        assert_eq!(local_distance(&a, &b), ratio(1, 1));
    }

    #[test]
    fn paths_of_different_length() {
        // Paths from an endpoint agree up to radius n - 1 of the shorter one.
        assert_eq!(first_disagreement(&path(3), &path(5)), Some(3));
        assert_eq!(local_distance(&path(3), &path(5)), ratio(1, 4));
    }

    #[test]
    fn edge_mark_difference_deep_in_tree() {
        let make = |x: u16| {
            let edges = [
                MarkedEdge::new(0, 1, 0, 0),
                MarkedEdge::new(1, 2, 0, 0),
                MarkedEdge::new(2, 3, x, 0),
            ];
            RootedMarkedGraph::new(MarkedGraph::new(vec![0; 4], edges).unwrap(), 0).unwrap()
        };
        assert_eq!(local_distance(&make(0), &make(1)), ratio(1, 4));
    }

    #[test]
    fn linear_scan_matches_binary_search() {
        for a in 1..7 {
            for b in 1..7 {
                let (pa, pb) = (RadiusProfile::new(&path(a)), RadiusProfile::new(&path(b)));
                let top = pa.height().max(pb.height());
                let linear = (0..=top).find(|&r| pa.at(r) != pb.at(r));
                assert_eq!(pa.first_disagreement(&pb), linear);
            }
        }
    }
}
