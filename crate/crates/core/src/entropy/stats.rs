use crate::measure::LocalMeasure;
use crate::rational::{to_f64, Rational};
use crate::{Error, Result};
use num_traits::Zero;

/// Exact degree statistics of a local measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    /// `deg^{x,x'}(μ)`: expected number of neighbors `v` of the root with
    /// `ξ(v, o) = x` and `ξ(o, v) = x'`.
    pub dvec: Vec<Vec<Rational>>,
    /// `deg(μ)`.
    pub deg: Rational,
    /// `Π_θ(μ)`, the law of the root mark.
    pub pi: Vec<Rational>,
    /// `deg_≤`, indexed like [`super::leq_pairs`].
    pub deg_leq: Vec<Rational>,
}

impl DegreeStats {
    pub fn dvec_f64(&self) -> Vec<Vec<f64>> {
        self.dvec.iter().map(|r| r.iter().map(to_f64).collect()).collect()
    }

    pub fn pi_f64(&self) -> Vec<f64> {
        self.pi.iter().map(to_f64).collect()
    }
}

pub fn measure_degree_stats(mu: &LocalMeasure, theta_len: usize, xi_len: usize) -> Result<DegreeStats> {
    let mut dvec = vec![vec![Rational::zero(); xi_len]; xi_len];
    let mut pi = vec![Rational::zero(); theta_len];
    for (class, w) in mu.atoms() {
        let g = class.decode()?;
        let (graph, o) = (g.graph(), g.root());
        let theta = graph.tau(o) as usize;
        if theta >= theta_len {
            return Err(Error::invalid(format!("root mark {theta} outside a vertex alphabet of size {theta_len}")));
        }
        pi[theta] += w;
        for nb in graph.neighbors(o) {
            let (x, y) = (nb.in_mark as usize, nb.out_mark as usize);
            if x >= xi_len || y >= xi_len {
                return Err(Error::invalid(format!("edge mark outside an alphabet of size {xi_len}")));
            }
            dvec[x][y] += w;
        }
    }
    let deg = dvec.iter().flatten().sum();
    let deg_leq = super::leq_pairs(xi_len)
        .into_iter()
        .map(|(x, y)| if x == y { dvec[x][x].clone() } else { &dvec[x][y] + &dvec[y][x] })
        .collect();
    Ok(DegreeStats { dvec, deg, pi, deg_leq })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonicalize, MarkedEdge, MarkedGraph, RootedMarkedGraph};
    use crate::measure::empirical_distribution;
    use crate::rational::{integer, ratio};
    use crate::sampler::random_marked_graph;

    #[test]
    fn isolated_root() {
        let mu = LocalMeasure::dirac(canonicalize(&RootedMarkedGraph::single(1), None));
        let s = measure_degree_stats(&mu, 2, 2).unwrap();
        assert!(s.deg.is_zero());
        assert_eq!(s.pi, vec![integer(0), integer(1)]);
    }

    #[test]
    fn single_marked_edge() {
        let g = MarkedGraph::new(vec![0, 0], vec![MarkedEdge { u: 0, v: 1, xi_uv: 0, xi_vu: 1 }]).unwrap();
        let s = measure_degree_stats(&empirical_distribution(&g).unwrap(), 1, 2).unwrap();
        assert_eq!(s.deg, integer(1));
        assert_eq!(s.dvec[1][0], ratio(1, 2));
        assert_eq!(s.dvec[0][1], ratio(1, 2));
        assert_eq!(s.deg_leq, vec![integer(0), integer(1), integer(0)]);
    }

    #[test]
    fn handshake() {
        let mut rng = crate::seeded_rng(5);
        for _ in 0..20 {
            let g = random_marked_graph(&mut rng, 12, 4, 2, 2, 0.6);
            let s = measure_degree_stats(&empirical_distribution(&g).unwrap(), 2, 2).unwrap();
            assert_eq!(s.deg, ratio(2 * g.edge_count() as i64, 12));
        }
    }
}
