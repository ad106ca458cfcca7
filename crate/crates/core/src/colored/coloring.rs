use std::collections::BTreeMap;

use super::colors::{ColorSet, EdgeType};
use super::multigraph::ColoredMultigraph;
use crate::graph::{canonicalize, Mark, MarkedEdge, MarkedGraph};
use crate::{Error, Result};

/// `G[u, v]_{k−1}`: the mark `ξ(u, v)` and the depth-`(k−1)` class of `v` in
/// its component after deleting the edge `{u, v}`.
pub fn edge_type(g: &MarkedGraph, u: usize, v: usize, k: usize) -> Result<EdgeType> {
    let mark = g.xi(u, v).ok_or_else(|| Error::invalid(format!("{u} and {v} are not adjacent")))?;
    if k == 0 {
        return Err(Error::invalid("coloring depth must be at least 1"));
    }
    let side = g.without_edge(u, v).ball(v, k - 1);
    Ok(EdgeType { mark, class: canonicalize(&side, Some(k - 1)) })
}

/// `C(G)`: each edge `{u, v}` becomes the arc `u → v` with color
/// `(G[u, v]_{k−1}, G[v, u]_{k−1})` and the conjugate arc `v → u`. The base
/// set is every edge type that occurs, sorted.
pub fn color_graph(g: &MarkedGraph, k: usize) -> Result<(ColoredMultigraph, ColorSet)> {
    let mut types: Vec<(usize, usize, EdgeType, EdgeType)> = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        types.push((e.u, e.v, edge_type(g, e.u, e.v, k)?, edge_type(g, e.v, e.u, k)?));
    }
    let mut base: Vec<EdgeType> = types.iter().flat_map(|(_, _, a, b)| [a.clone(), b.clone()]).collect();
    base.sort();
    base.dedup();
    if base.is_empty() {
        // No edges: any nonempty base will do.
        let cs = ColorSet::new(1)?;
        return Ok((ColoredMultigraph::empty(g.n(), cs.clone()), cs));
    }
    let cs = ColorSet::labeled(base)?;
    let edges: Vec<(usize, usize, u32)> = types
        .iter()
        .map(|(u, v, a, b)| {
            let i = cs.index_of(a).expect("type is in the base");
            let j = cs.index_of(b).expect("type is in the base");
            (*u, *v, cs.color(i, j))
        })
        .collect();
    let colored = ColoredMultigraph::from_edges(g.n(), cs.clone(), &edges)?;
    Ok((colored, cs))
}

/// `MCB_τ(H)`: vertex marks from `tau`, and for each edge whose arc `u → v`
/// has color `((ξ, t), (ξ', t'))`, marks `ξ(u, v) = ξ` and `ξ(v, u) = ξ'`.
pub fn mcb(tau: &[Mark], h: &ColoredMultigraph) -> Result<MarkedGraph> {
    if tau.len() != h.n() {
        return Err(Error::invalid("one vertex mark per vertex is required"));
    }
    let cs = h.colors();
    let labels = cs
        .labels()
        .ok_or_else(|| Error::invalid("colors carry no edge-mark labels"))?;
    let mut by_pair: BTreeMap<(usize, usize), (Vec<u32>, Vec<u32>)> = BTreeMap::new();
    for a in h.arcs() {
        if a.from == a.to {
            return Err(Error::invalid(format!("loop at vertex {}", a.from)));
        }
        let key = (a.from.min(a.to), a.from.max(a.to));
        let entry = by_pair.entry(key).or_default();
        if a.from < a.to {
            entry.0.push(a.color);
        } else {
            entry.1.push(a.color);
        }
    }
    let mut edges = Vec::with_capacity(by_pair.len());
    for ((u, v), (forward, backward)) in by_pair {
        match (forward.as_slice(), backward.as_slice()) {
            ([c], [d]) if cs.conjugate(*c) == *d => {
                let (i, j) = cs.pair(*c);
                edges.push(MarkedEdge::new(u, v, labels[i].mark, labels[j].mark));
            }
            ([_], [_]) | ([_], []) | ([], [_]) => return Err(Error::InconsistentColors { u, v }),
            _ => return Err(Error::invalid(format!("multiple edges between {u} and {v}"))),
        }
    }
    MarkedGraph::new(tau.to_vec(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::{is_colored_graph, Arc};
    use crate::sampler::random_marked_graph;
    use crate::seeded_rng;

    #[test]
    fn single_edge() {
        let g = MarkedGraph::new(vec![0, 1], [MarkedEdge::new(0, 1, 2, 3)]).unwrap();
        let (h, cs) = color_graph(&g, 1).unwrap();
        assert_eq!(cs.base_len(), 2);
        assert_eq!(h.arcs().len(), 2);
        let a = h.arcs()[0];
        let b = h.arcs()[1];
        assert_eq!(cs.conjugate(a.color), b.color);
        assert_eq!(mcb(g.vertex_marks(), &h).unwrap(), g);
    }

    #[test]
    fn round_trip_on_random_graphs() {
        let mut rng = seeded_rng(12);
        for k in 1..=3 {
            for _ in 0..20 {
                let g = random_marked_graph(&mut rng, 25, 4, 2, 3, 0.7);
                let (h, _) = color_graph(&g, k).unwrap();
                h.check_axioms().unwrap();
                assert!(is_colored_graph(&h, 2));
                assert_eq!(h.colorblind().to_graph().unwrap(), g.forget_marks());
                assert_eq!(mcb(g.vertex_marks(), &h).unwrap(), g);
            }
        }
    }

    #[test]
    fn marked_cycle_uses_one_conjugate_pair() {
        let n = 7;
        let edges = (0..n).map(|i| MarkedEdge::new(i, (i + 1) % n, 0, 1));
        let g = MarkedGraph::new(vec![0; n], edges).unwrap();
        for k in 1..4 {
            let (h, cs) = color_graph(&g, k).unwrap();
            let mut used: Vec<u32> = h.arcs().iter().map(|a| a.color).collect();
            used.sort();
            used.dedup();
            assert_eq!(used.len(), 2);
            assert_eq!(cs.conjugate(used[0]), used[1]);
        }
    }

    #[test]
    fn inconsistent_arcs_are_rejected() {
        let g = MarkedGraph::new(vec![0, 0], [MarkedEdge::new(0, 1, 0, 1)]).unwrap();
        let (_, cs) = color_graph(&g, 1).unwrap();
        let bad = ColoredMultigraph::from_arcs(
            2,
            cs.clone(),
            vec![Arc { from: 0, to: 1, color: cs.color(0, 1) }, Arc { from: 1, to: 0, color: cs.color(0, 1) }],
        )
        .unwrap();
        assert_eq!(mcb(&[0, 0], &bad).err(), Some(Error::InconsistentColors { u: 0, v: 1 }));
    }
}
