use std::collections::VecDeque;

use super::marks::Mark;
use crate::{Error, Result};

/// One side of an edge as seen from a vertex `u`: the neighbor, the mark
/// `ξ(u, vertex)` and the mark `ξ(vertex, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Neighbor {
    pub vertex: usize,
    pub out_mark: Mark,
    pub in_mark: Mark,
}

/// An undirected edge `{u, v}` with its two orientation marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedEdge {
    pub u: usize,
    pub v: usize,
    /// `ξ(u, v)`
    pub xi_uv: Mark,
    /// `ξ(v, u)`
    pub xi_vu: Mark,
}

impl MarkedEdge {
    pub fn new(u: usize, v: usize, xi_uv: Mark, xi_vu: Mark) -> Self {
        Self { u, v, xi_uv, xi_vu }
    }

    pub fn plain(u: usize, v: usize) -> Self {
        Self::new(u, v, 0, 0)
    }

    /// The same edge with `u < v`.
    pub fn normalized(self) -> Self {
        if self.u <= self.v {
            self
        } else {
            Self { u: self.v, v: self.u, xi_uv: self.xi_vu, xi_vu: self.xi_uv }
        }
    }
}

/// A finite simple graph on `0..n` with a mark per vertex and a mark per
/// edge orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedGraph {
    tau: Vec<Mark>,
    adj: Vec<Vec<Neighbor>>,
}

impl MarkedGraph {
    pub fn new(tau: Vec<Mark>, edges: impl IntoIterator<Item = MarkedEdge>) -> Result<Self> {
        let n = tau.len();
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            if e.u >= n || e.v >= n {
                return Err(Error::invalid(format!("edge {{{}, {}}} out of range", e.u, e.v)));
            }
            if e.u == e.v {
                return Err(Error::invalid(format!("self-loop at {}", e.u)));
            }
            adj[e.u].push(Neighbor { vertex: e.v, out_mark: e.xi_uv, in_mark: e.xi_vu });
            adj[e.v].push(Neighbor { vertex: e.u, out_mark: e.xi_vu, in_mark: e.xi_uv });
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0].vertex == w[1].vertex) {
                return Err(Error::invalid(format!("duplicate edge at vertex {u}")));
            }
        }
        Ok(Self { tau, adj })
    }

    /// An unmarked graph (all marks are symbol 0).
    pub fn unmarked(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(vec![0; n], edges.iter().map(|&(u, v)| MarkedEdge::plain(u, v)))
    }

    pub fn empty(n: usize) -> Self {
        Self { tau: vec![0; n], adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.tau.len()
    }

    pub fn tau(&self, v: usize) -> Mark {
        self.tau[v]
    }

    pub fn vertex_marks(&self) -> &[Mark] {
        &self.tau
    }

    pub fn neighbors(&self, v: usize) -> &[Neighbor] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = MarkedEdge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |nb| nb.vertex > u)
                .map(move |nb| MarkedEdge::new(u, nb.vertex, nb.out_mark, nb.in_mark))
        })
    }

    fn find(&self, u: usize, v: usize) -> Option<&Neighbor> {
        self.adj[u]
            .binary_search_by_key(&v, |nb| nb.vertex)
            .ok()
            .map(|i| &self.adj[u][i])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.find(u, v).is_some()
    }

    /// `ξ(u, v)`, if `{u, v}` is an edge.
    pub fn xi(&self, u: usize, v: usize) -> Option<Mark> {
        self.find(u, v).map(|nb| nb.out_mark)
    }

    /// `deg^{x,x'}(o)`: neighbors `v` with `ξ(v, o) = x` and `ξ(o, v) = x'`.
    pub fn color_degree(&self, o: usize, x: Mark, x_prime: Mark) -> usize {
        self.adj[o]
            .iter()
            .filter(|nb| nb.in_mark == x && nb.out_mark == x_prime)
            .count()
    }

    pub fn with_vertex_marks(&self, tau: Vec<Mark>) -> Result<Self> {
        if tau.len() != self.n() {
            return Err(Error::invalid("vertex mark vector has the wrong length"));
        }
        Ok(Self { tau, adj: self.adj.clone() })
    }

    /// The same graph with every mark replaced by symbol 0.
    pub fn forget_marks(&self) -> Self {
        let adj = self
            .adj
            .iter()
            .map(|list| {
                list.iter()
                    .map(|nb| Neighbor { vertex: nb.vertex, out_mark: 0, in_mark: 0 })
                    .collect()
            })
            .collect();
        Self { tau: vec![0; self.n()], adj }
    }

    /// BFS distances from `root`, exploring at most `limit` layers.
    pub fn distances_from(&self, root: usize, limit: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            if limit.is_some_and(|l| du >= l) {
                continue;
            }
            for nb in &self.adj[u] {
                if dist[nb.vertex].is_none() {
                    dist[nb.vertex] = Some(du + 1);
                    queue.push_back(nb.vertex);
                }
            }
        }
        dist
    }

    /// Component label of every vertex, labels numbered by first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut next = 0;
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for nb in &self.adj[u] {
                    if comp[nb.vertex] == usize::MAX {
                        comp[nb.vertex] = next;
                        stack.push(nb.vertex);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().iter().all(|&c| c == 0)
    }

    /// The subgraph induced on `vertices`, relabeled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let tau = vertices.iter().map(|&v| self.tau[v]).collect();
        let mut adj: Vec<Vec<Neighbor>> = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for nb in &self.adj[v] {
                let j = index[nb.vertex];
                if j != usize::MAX {
                    adj[i].push(Neighbor { vertex: j, ..*nb });
                }
            }
            adj[i].sort_unstable();
        }
        Self { tau, adj }
    }

    /// The component of `v`, rooted at `v`.
    pub fn rooted_component(&self, v: usize) -> RootedMarkedGraph {
        let dist = self.distances_from(v, None);
        let vertices = bfs_order(&dist);
        RootedMarkedGraph { graph: self.induced(&vertices), root: 0 }
    }

    /// The ball of radius `r` around `v`, rooted at `v`.
    pub fn ball(&self, v: usize, r: usize) -> RootedMarkedGraph {
        let dist = self.distances_from(v, Some(r));
        let vertices = bfs_order(&dist);
        RootedMarkedGraph { graph: self.induced(&vertices), root: 0 }
    }

    /// A copy without the edge `{u, v}`.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.adj[u].retain(|nb| nb.vertex != v);
        g.adj[v].retain(|nb| nb.vertex != u);
        g
    }
}

/// Vertices with a finite distance, ordered by (distance, id).
fn bfs_order(dist: &[Option<usize>]) -> Vec<usize> {
    let mut vertices: Vec<usize> = (0..dist.len()).filter(|&v| dist[v].is_some()).collect();
    vertices.sort_by_key(|&v| (dist[v], v));
    vertices
}

/// A connected marked graph with a distinguished root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedMarkedGraph {
    graph: MarkedGraph,
    root: usize,
}

impl RootedMarkedGraph {
    pub fn new(graph: MarkedGraph, root: usize) -> Result<Self> {
        if root >= graph.n() {
            return Err(Error::invalid(format!("root {root} is not a vertex")));
        }
        if !graph.is_connected() {
            return Err(Error::invalid("rooted graph must be connected"));
        }
        Ok(Self { graph, root })
    }

    /// A single vertex with mark `theta`.
    pub fn single(theta: Mark) -> Self {
        Self { graph: MarkedGraph { tau: vec![theta], adj: vec![Vec::new()] }, root: 0 }
    }

    pub fn graph(&self) -> &MarkedGraph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn into_parts(self) -> (MarkedGraph, usize) {
        (self.graph, self.root)
    }

    /// Largest distance from the root.
    pub fn height(&self) -> usize {
        self.graph
            .distances_from(self.root, None)
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0)
    }

    pub fn forget_marks(&self) -> Self {
        Self { graph: self.graph.forget_marks(), root: self.root }
    }
}

/// The marked subgraph induced by vertices within distance `r` of the root,
/// rooted at the same vertex (which becomes vertex 0).
pub fn truncate(g: &RootedMarkedGraph, r: usize) -> RootedMarkedGraph {
    g.graph.ball(g.root, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng as _;

    fn path3() -> MarkedGraph {
        MarkedGraph::new(
            vec![0, 1, 0],
            [MarkedEdge::new(0, 1, 1, 0), MarkedEdge::new(1, 2, 0, 1)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(MarkedGraph::unmarked(2, &[(0, 0)]).is_err());
        assert!(MarkedGraph::unmarked(2, &[(0, 1), (1, 0)]).is_err());
        assert!(MarkedGraph::unmarked(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn marks_on_both_orientations() {
        let g = path3();
        assert_eq!(g.xi(0, 1), Some(1));
        assert_eq!(g.xi(1, 0), Some(0));
        assert_eq!(g.xi(0, 2), None);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![
            MarkedEdge::new(0, 1, 1, 0),
            MarkedEdge::new(1, 2, 0, 1)
        ]);
    }

    #[test]
    fn truncate_single_vertex() {
        let g = RootedMarkedGraph::single(3);
        assert_eq!(truncate(&g, 0), g);
        assert_eq!(truncate(&g, 5), g);
    }

    #[test]
    fn truncate_path_keeps_marks() {
        let g = RootedMarkedGraph::new(path3(), 0).unwrap();
        let t = truncate(&g, 1);
        assert_eq!(t.graph().n(), 2);
        assert_eq!(t.graph().vertex_marks(), &[0, 1]);
        assert_eq!(t.graph().xi(0, 1), Some(1));
        assert_eq!(t.graph().xi(1, 0), Some(0));
    }

    #[test]
    fn truncate_idempotent() {
        let mut rng = crate::seeded_rng(4);
        for _ in 0..20 {
            let g = crate::sampler::random_marked_graph(&mut rng, 15, 3, 2, 2, 0.6);
            let root = rng.gen_range(0..g.n());
            let rg = g.rooted_component(root);
            let t2 = truncate(&rg, 2);
            assert_eq!(
                crate::graph::canonicalize(&truncate(&t2, 3), None),
                crate::graph::canonicalize(&t2, None)
            );
        }
    }

    #[test]
    fn truncate_matches_independent_bfs() {
        let mut rng = crate::seeded_rng(11);
        for _ in 0..30 {
            let g = crate::sampler::random_marked_graph(&mut rng, 30, 4, 2, 2, 0.8);
            let root = rng.gen_range(0..30);
            let rooted = g.rooted_component(root);
            let t = truncate(&rooted, 2);
            // Independent layer-by-layer BFS over an adjacency matrix.
            let n = g.n();
            let mut seen = vec![false; n];
            seen[root] = true;
            let mut frontier = vec![root];
            for _ in 0..2 {
                let mut next = Vec::new();
                for &u in &frontier {
                    for w in 0..n {
                        if !seen[w] && g.has_edge(u, w) {
                            seen[w] = true;
                            next.push(w);
                        }
                    }
                }
                frontier = next;
            }
            let ball: Vec<usize> = (0..n).filter(|&v| seen[v]).collect();
            assert_eq!(t.graph().n(), ball.len());
            let induced_edges = ball
                .iter()
                .flat_map(|&a| ball.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| a < b && g.has_edge(a, b))
                .count();
            assert_eq!(t.graph().edge_count(), induced_edges);
            assert!(t.graph().max_degree() <= g.max_degree());
        }
    }

    #[test]
    fn color_degree_cases() {
        let g = MarkedGraph::empty(1);
        assert_eq!(g.color_degree(0, 0, 0), 0);
        // ξ(v,u) = a = 0, ξ(u,v) = b = 1 with u = 0, v = 1.
        let g = MarkedGraph::new(vec![0, 0], [MarkedEdge::new(0, 1, 1, 0)]).unwrap();
        assert_eq!(g.color_degree(0, 0, 1), 1);
        assert_eq!(g.color_degree(0, 1, 0), 0);
    }

    #[test]
    fn color_degrees_sum_to_degree() {
        let mut rng = crate::seeded_rng(7);
        for _ in 0..20 {
            let g = crate::sampler::random_marked_graph(&mut rng, 20, 5, 2, 3, 0.7);
            for o in 0..g.n() {
                let total: usize = (0..3)
                    .flat_map(|x| (0..3).map(move |y| (x, y)))
                    .map(|(x, y)| g.color_degree(o, x, y))
                    .sum();
                assert_eq!(total, g.degree(o));
            }
        }
    }
}
