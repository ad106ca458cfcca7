use rand::distributions::WeightedIndex;

use crate::graph::{DegreeSequence, Mark, MarkedGraph};
use crate::rational::{is_probability_vector, to_f64, Rational};
use crate::{Error, Result};

/// Vertex-mark counts `u` (indexed by Θ) and edge-mark counts `m` (a
/// symmetric Ξ × Ξ matrix, `m(x, x')` = number of edges whose two
/// orientation marks are `{x, x'}`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountVectors {
    u: Vec<u64>,
    m: Vec<Vec<u64>>,
}

impl CountVectors {
    pub fn new(u: Vec<u64>, m: Vec<Vec<u64>>) -> Result<Self> {
        if u.is_empty() || m.is_empty() {
            return Err(Error::invalid("count vectors need nonempty alphabets"));
        }
        let k = m.len();
        if m.iter().any(|row| row.len() != k) {
            return Err(Error::invalid("edge counts must form a square matrix"));
        }
        for x in 0..k {
            for y in 0..x {
                if m[x][y] != m[y][x] {
                    return Err(Error::invalid(format!("edge counts not symmetric at ({x}, {y})")));
                }
            }
        }
        Ok(Self { u, m })
    }

    /// Builds the counts from the upper-triangular view `m_≤`.
    pub fn from_leq(u: Vec<u64>, xi: usize, leq: &[((Mark, Mark), u64)]) -> Result<Self> {
        let mut m = vec![vec![0u64; xi]; xi];
        for &((x, y), c) in leq {
            let (x, y) = (x as usize, y as usize);
            if x > y || y >= xi {
                return Err(Error::invalid(format!("bad edge-mark pair ({x}, {y})")));
            }
            m[x][y] += c;
            if x != y {
                m[y][x] += c;
            }
        }
        Self::new(u, m)
    }

    pub fn from_graph(g: &MarkedGraph, theta: usize, xi: usize) -> Self {
        let mut u = vec![0u64; theta];
        for &t in g.vertex_marks() {
            u[t as usize] += 1;
        }
        let mut m = vec![vec![0u64; xi]; xi];
        for e in g.edges() {
            let (x, y) = (e.xi_uv as usize, e.xi_vu as usize);
            m[x][y] += 1;
            if x != y {
                m[y][x] += 1;
            }
        }
        Self { u, m }
    }

    pub fn u(&self) -> &[u64] {
        &self.u
    }

    pub fn m(&self) -> &[Vec<u64>] {
        &self.m
    }

    pub fn theta_len(&self) -> usize {
        self.u.len()
    }

    pub fn xi_len(&self) -> usize {
        self.m.len()
    }

    /// `m_≤`: the counts on pairs `x ≤ x'`, in lexicographic order.
    pub fn m_leq(&self) -> Vec<((Mark, Mark), u64)> {
        let k = self.m.len();
        (0..k)
            .flat_map(|x| (x..k).map(move |y| (x, y)))
            .map(|(x, y)| ((x as Mark, y as Mark), self.m[x][y]))
            .collect()
    }

    /// `‖u‖₁`.
    pub fn vertex_total(&self) -> u64 {
        self.u.iter().sum()
    }

    /// `‖m‖₁ = Σ_{x ≤ x'} m(x, x')`, the number of edges.
    pub fn edge_total(&self) -> u64 {
        self.m_leq().iter().map(|&(_, c)| c).sum()
    }

    /// `Σ_{x < x'} m(x, x')`.
    pub fn off_diagonal_total(&self) -> u64 {
        self.m_leq().iter().filter(|((x, y), _)| x != y).map(|&(_, c)| c).sum()
    }

    /// Checks `‖u‖₁ = n` and `‖m‖₁ = Σℓ / 2`.
    pub fn check_instance(&self, ell: &DegreeSequence) -> Result<()> {
        if self.vertex_total() != ell.len() as u64 {
            return Err(Error::CountMismatch(format!(
                "vertex counts sum to {}, expected {}",
                self.vertex_total(),
                ell.len()
            )));
        }
        if self.edge_total() != ell.edge_count() as u64 {
            return Err(Error::CountMismatch(format!(
                "edge counts sum to {}, expected {}",
                self.edge_total(),
                ell.edge_count()
            )));
        }
        Ok(())
    }

    /// The vertex marks as a sorted multiset.
    pub fn vertex_mark_multiset(&self) -> Vec<Mark> {
        self.u
            .iter()
            .enumerate()
            .flat_map(|(t, &c)| std::iter::repeat(t as Mark).take(c as usize))
            .collect()
    }

    /// The unordered edge-mark pairs `(x, x')`, `x ≤ x'`, as a sorted multiset.
    pub fn edge_pair_multiset(&self) -> Vec<(Mark, Mark)> {
        self.m_leq()
            .into_iter()
            .flat_map(|(p, c)| std::iter::repeat(p).take(c as usize))
            .collect()
    }
}

/// The vertex-mark law `ϑ` and the edge-mark law `χ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelParams {
    vartheta: Vec<Rational>,
    chi: Vec<Rational>,
}

impl ModelParams {
    pub fn new(vartheta: Vec<Rational>, chi: Vec<Rational>) -> Result<Self> {
        for (name, v) in [("vartheta", &vartheta), ("chi", &chi)] {
            if v.is_empty() || !is_probability_vector(v) {
                return Err(Error::invalid(format!("{name} is not a probability vector")));
            }
        }
        Ok(Self { vartheta, chi })
    }

    pub fn vartheta(&self) -> &[Rational] {
        &self.vartheta
    }

    pub fn chi(&self) -> &[Rational] {
        &self.chi
    }

    pub(crate) fn theta_sampler(&self) -> WeightedIndex<f64> {
        WeightedIndex::new(self.vartheta.iter().map(to_f64)).expect("validated probability vector")
    }

    pub(crate) fn xi_sampler(&self) -> WeightedIndex<f64> {
        WeightedIndex::new(self.chi.iter().map(to_f64)).expect("validated probability vector")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MarkedEdge;

    #[test]
    fn norms_and_views() {
        let cv = CountVectors::new(vec![2, 1], vec![vec![1, 2], vec![2, 0]]).unwrap();
        assert_eq!(cv.edge_total(), 3);
        assert_eq!(cv.off_diagonal_total(), 2);
        assert_eq!(cv.m_leq(), vec![((0, 0), 1), ((0, 1), 2), ((1, 1), 0)]);
        assert_eq!(CountVectors::from_leq(vec![2, 1], 2, &cv.m_leq()).unwrap(), cv);
        assert_eq!(cv.edge_pair_multiset(), vec![(0, 0), (0, 1), (0, 1)]);
    }

    #[test]
    fn asymmetric_counts_rejected() {
        assert!(CountVectors::new(vec![1], vec![vec![0, 1], vec![0, 0]]).is_err());
    }

    #[test]
    fn from_graph_counts_each_edge_once() {
        let g = MarkedGraph::new(
            vec![0, 1, 1],
            [MarkedEdge::new(0, 1, 0, 1), MarkedEdge::new(1, 2, 1, 0), MarkedEdge::new(0, 2, 1, 1)],
        )
        .unwrap();
        let cv = CountVectors::from_graph(&g, 2, 2);
        assert_eq!(cv.u(), &[1, 2]);
        assert_eq!(cv.m(), &[vec![0, 2], vec![2, 1]]);
        assert_eq!(cv.edge_total(), 3);
    }
}
