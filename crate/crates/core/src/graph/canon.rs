//! Canonical codes for rooted (and doubly rooted) marked graphs.
//!
//! A code is the byte encoding of the graph under a canonical labeling, so it
//! can be decoded back into a representative. Trees are labeled by sorting
//! subtrees recursively; every other graph goes through
//! individualization-refinement with automorphism pruning, keeping the
//! lexicographically smallest leaf encoding.

use std::cmp::Ordering;
use std::fmt;

use super::marked::{truncate, MarkedEdge, MarkedGraph, RootedMarkedGraph};
use super::marks::Mark;
use crate::{Error, Result};

const TAG_TREE: u8 = b'T';
const TAG_GRAPH: u8 = b'G';
const TAG_DOUBLE: u8 = b'D';

/// Which labeling scheme produced a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeKind {
    Tree,
    Graph,
    DoublyRooted,
}

/// The isomorphism class of a rooted marked graph, as a canonical byte code.
///
/// Equality, ordering and hashing only look at the code; `depth` records the
/// truncation radius used to build it, if any.
#[derive(Clone)]
pub struct CanonicalClass {
    code: Vec<u8>,
    depth: Option<usize>,
}

impl PartialEq for CanonicalClass {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}

impl Eq for CanonicalClass {}

impl PartialOrd for CanonicalClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.cmp(&other.code)
    }
}

impl std::hash::Hash for CanonicalClass {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.code.hash(state)
    }
}

impl fmt::Debug for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalClass({}", self.to_hex())?;
        if let Some(d) = self.depth {
            write!(f, ", depth {d}")?;
        }
        write!(f, ")")
    }
}

impl CanonicalClass {
    pub fn code(&self) -> &[u8] {
        &self.code
    }

    pub fn depth(&self) -> Option<usize> {
        self.depth
    }

    pub fn kind(&self) -> CodeKind {
        match self.code.first() {
            Some(&TAG_TREE) => CodeKind::Tree,
            Some(&TAG_DOUBLE) => CodeKind::DoublyRooted,
            _ => CodeKind::Graph,
        }
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.code)
    }

    /// Parses and validates a hex code. Only rooted codes are accepted.
    pub fn from_hex(s: &str) -> Result<Self> {
        let code = hex::decode(s).map_err(|e| Error::invalid(format!("bad hex code: {e}")))?;
        let class = Self { code, depth: None };
        let graph = class.decode()?;
        // Reject codes that decode but are not in canonical form.
        if canonicalize(&graph, None) != class {
            return Err(Error::invalid("code is not canonical"));
        }
        Ok(class)
    }

    /// The canonical representative, rooted at vertex 0.
    pub fn decode(&self) -> Result<RootedMarkedGraph> {
        let (graph, roots) = decode_bytes(&self.code)?;
        if roots.1.is_some() {
            return Err(Error::invalid("doubly rooted code has no single root"));
        }
        RootedMarkedGraph::new(graph, roots.0)
    }

    /// Decodes any code into the graph and its root(s).
    pub fn decode_with_roots(&self) -> Result<(MarkedGraph, usize, Option<usize>)> {
        let (graph, (a, b)) = decode_bytes(&self.code)?;
        Ok((graph, a, b))
    }
}

/// Canonical class of `g`, truncated first to `depth` if given.
pub fn canonicalize(g: &RootedMarkedGraph, depth: Option<usize>) -> CanonicalClass {
    let code = match depth {
        Some(r) => rooted_code(&truncate(g, r)),
        None => rooted_code(g),
    };
    CanonicalClass { code, depth }
}

/// Canonical class of `[G, first, second]` where `G` is the component of
/// `graph` containing both vertices.
pub fn canonicalize_doubly_rooted(graph: &MarkedGraph, first: usize, second: usize) -> CanonicalClass {
    let comp = graph.rooted_component(first);
    // Locate `second` inside the relabeled component.
    let dist = graph.distances_from(first, None);
    let mut order: Vec<usize> = (0..graph.n()).filter(|&v| dist[v].is_some()).collect();
    order.sort_by_key(|&v| (dist[v], v));
    let second = order
        .iter()
        .position(|&v| v == second)
        .expect("second root must lie in the component of the first");
    let g = comp.graph();
    let roots: Vec<usize> = if second == 0 { vec![0] } else { vec![0, second] };
    let labeling = search_labeling(g, &roots);
    let mut code = vec![TAG_DOUBLE, u8::from(second == 0)];
    encode_into(g, &labeling, &mut code);
    CanonicalClass { code, depth: None }
}

fn rooted_code(g: &RootedMarkedGraph) -> Vec<u8> {
    let graph = g.graph();
    if graph.edge_count() + 1 == graph.n() {
        let labeling = tree_labeling(graph, g.root());
        let mut code = vec![TAG_TREE];
        encode_into(graph, &labeling, &mut code);
        code
    } else {
        let labeling = search_labeling(graph, &[g.root()]);
        let mut code = vec![TAG_GRAPH];
        encode_into(graph, &labeling, &mut code);
        code
    }
}

/// Appends the encoding of `g` relabeled by `label` (vertex → new id).
fn encode_into(g: &MarkedGraph, label: &[usize], out: &mut Vec<u8>) {
    let n = g.n();
    let mut inverse = vec![0usize; n];
    for (v, &l) in label.iter().enumerate() {
        inverse[l] = v;
    }
    out.extend_from_slice(&(n as u32).to_be_bytes());
    for &v in &inverse {
        out.extend_from_slice(&g.tau(v).to_be_bytes());
    }
    let mut edges: Vec<(u32, u32, Mark, Mark)> = g
        .edges()
        .map(|e| {
            let (a, b) = (label[e.u] as u32, label[e.v] as u32);
            if a < b {
                (a, b, e.xi_uv, e.xi_vu)
            } else {
                (b, a, e.xi_vu, e.xi_uv)
            }
        })
        .collect();
    edges.sort_unstable();
    out.extend_from_slice(&(edges.len() as u32).to_be_bytes());
    for (a, b, x, y) in edges {
        out.extend_from_slice(&a.to_be_bytes());
        out.extend_from_slice(&b.to_be_bytes());
        out.extend_from_slice(&x.to_be_bytes());
        out.extend_from_slice(&y.to_be_bytes());
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn take<const N: usize>(&mut self) -> Result<[u8; N]> {
        let end = self.pos.checked_add(N).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| Error::invalid("truncated code"))?;
        let mut out = [0u8; N];
        out.copy_from_slice(&self.bytes[self.pos..end]);
        self.pos = end;
        Ok(out)
    }

    fn u32(&mut self) -> Result<u32> {
        self.take::<4>().map(u32::from_be_bytes)
    }

    fn u16(&mut self) -> Result<u16> {
        self.take::<2>().map(u16::from_be_bytes)
    }
}

fn decode_bytes(code: &[u8]) -> Result<(MarkedGraph, (usize, Option<usize>))> {
    let (&tag, rest) = code.split_first().ok_or_else(|| Error::invalid("empty code"))?;
    let (rest, double_same) = match tag {
        TAG_TREE | TAG_GRAPH => (rest, None),
        TAG_DOUBLE => {
            let (&flag, rest) = rest.split_first().ok_or_else(|| Error::invalid("truncated code"))?;
            if flag > 1 {
                return Err(Error::invalid("bad doubly rooted flag"));
            }
            (rest, Some(flag == 1))
        }
        _ => return Err(Error::invalid("unknown code tag")),
    };
    let mut r = Reader { bytes: rest, pos: 0 };
    let n = r.u32()? as usize;
    // Each vertex needs two bytes, so a sane n is bounded by the input length.
    if n == 0 || n > rest.len() / 2 {
        return Err(Error::invalid("bad vertex count"));
    }
    let tau = (0..n).map(|_| r.u16()).collect::<Result<Vec<_>>>()?;
    let m = r.u32()? as usize;
    if m > rest.len() / 12 {
        return Err(Error::invalid("bad edge count"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut prev = None;
    for _ in 0..m {
        let (a, b) = (r.u32()? as usize, r.u32()? as usize);
        let (x, y) = (r.u16()?, r.u16()?);
        if a >= b || b >= n {
            return Err(Error::invalid("bad edge in code"));
        }
        if prev.is_some_and(|p| p >= (a, b)) {
            return Err(Error::invalid("edges in code are not sorted"));
        }
        prev = Some((a, b));
        edges.push(MarkedEdge::new(a, b, x, y));
    }
    if r.pos != rest.len() {
        return Err(Error::invalid("trailing bytes in code"));
    }
    if tag == TAG_TREE && m + 1 != n {
        return Err(Error::invalid("tree code with wrong edge count"));
    }
    if tag == TAG_GRAPH && m + 1 == n {
        return Err(Error::invalid("graph code for a tree"));
    }
    let graph = MarkedGraph::new(tau, edges)?;
    if !graph.is_connected() {
        return Err(Error::invalid("code describes a disconnected graph"));
    }
    let roots = match double_same {
        None => (0, None),
        Some(true) => (0, None),
        Some(false) if n >= 2 => (0, Some(1)),
        Some(false) => return Err(Error::invalid("doubly rooted code needs two vertices")),
    };
    Ok((graph, roots))
}

/// Preorder labeling of a tree with children sorted by
/// `(ξ(parent, child), ξ(child, parent), subtree signature)`.
fn tree_labeling(g: &MarkedGraph, root: usize) -> Vec<usize> {
    let n = g.n();
    let dist = g.distances_from(root, None);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dist[v]));
    let mut parent = vec![usize::MAX; n];
    for v in 0..n {
        for nb in g.neighbors(v) {
            if dist[nb.vertex] == dist[v].map(|d| d + 1) {
                parent[nb.vertex] = v;
            }
        }
    }
    let mut signature: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<(Mark, Mark, usize)>> = vec![Vec::new(); n];
    for &v in &order {
        let mut kids: Vec<(Mark, Mark, usize)> = g
            .neighbors(v)
            .iter()
            .filter(|nb| parent[nb.vertex] == v)
            .map(|nb| (nb.out_mark, nb.in_mark, nb.vertex))
            .collect();
        kids.sort_by(|a, b| (a.0, a.1, &signature[a.2]).cmp(&(b.0, b.1, &signature[b.2])));
        let mut sig = Vec::new();
        sig.extend_from_slice(&g.tau(v).to_be_bytes());
        sig.push(b'(');
        for &(x, y, c) in &kids {
            sig.extend_from_slice(&x.to_be_bytes());
            sig.extend_from_slice(&y.to_be_bytes());
            sig.extend_from_slice(&signature[c]);
        }
        sig.push(b')');
        signature[v] = sig;
        children[v] = kids;
    }
    let mut label = vec![0usize; n];
    let mut next = 0;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        label[v] = next;
        next += 1;
        for &(_, _, c) in children[v].iter().rev() {
            stack.push(c);
        }
    }
    label
}

/// Equitable refinement: repeatedly split color classes by the multiset of
/// `(ξ out, ξ in, neighbor color)`. New colors are ranks of the signatures, so
/// the result only depends on the colored graph up to isomorphism.
fn refine(g: &MarkedGraph, colors: &mut Vec<u32>) {
    let n = g.n();
    let mut classes = count_classes(colors);
    loop {
        let sigs: Vec<(u32, Vec<(Mark, Mark, u32)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(Mark, Mark, u32)> = g
                    .neighbors(v)
                    .iter()
                    .map(|nb| (nb.out_mark, nb.in_mark, colors[nb.vertex]))
                    .collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        *colors = rank(&sigs);
        let now = count_classes(colors);
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

fn rank<T: Ord>(keys: &[T]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut out = vec![0u32; keys.len()];
    let mut current = 0u32;
    for w in 0..idx.len() {
        if w > 0 && keys[idx[w]] != keys[idx[w - 1]] {
            current += 1;
        }
        out[idx[w]] = current;
    }
    out
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let target = colors[v];
    let keys: Vec<(u32, u8)> = colors
        .iter()
        .enumerate()
        .map(|(w, &c)| (c, u8::from(c == target && w != v)))
        .collect();
    rank(&keys)
}

struct Search<'a> {
    g: &'a MarkedGraph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

/// Canonical labeling by individualization-refinement. `roots` are placed in
/// the first cells, in the given order.
fn search_labeling(g: &MarkedGraph, roots: &[usize]) -> Vec<usize> {
    let n = g.n();
    let dist = g.distances_from(roots[0], None);
    let keys: Vec<(usize, Option<usize>, Mark)> = (0..n)
        .map(|v| {
            let r = roots.iter().position(|&x| x == v).unwrap_or(roots.len());
            (r, dist[v], g.tau(v))
        })
        .collect();
    let mut colors = rank(&keys);
    refine(g, &mut colors);
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    search.explore(colors, &mut Vec::new());
    search.best.expect("search visits at least one leaf").1
}

impl Search<'_> {
    fn explore(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let n = self.g.n();
        let cells = count_classes(&colors);
        if cells == n {
            self.leaf(colors.iter().map(|&c| c as usize).collect());
            return;
        }
        // First non-singleton cell.
        let mut size = vec![0usize; cells];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).unwrap() as u32;
        let candidates: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() {
                let orbit = self.orbits_fixing(prefix);
                if explored.iter().any(|&w| find(&orbit, w) == find(&orbit, v)) {
                    continue;
                }
            }
            let mut child = individualize(&colors, v);
            refine(self.g, &mut child);
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, label: Vec<usize>) {
        let mut code = Vec::new();
        encode_into(self.g, &label, &mut code);
        match &self.best {
            None => self.best = Some((code, label)),
            Some((best, best_label)) => match code.cmp(best) {
                Ordering::Less => self.best = Some((code, label)),
                Ordering::Equal => {
                    let mut inverse = vec![0usize; label.len()];
                    for (v, &l) in best_label.iter().enumerate() {
                        inverse[l] = v;
                    }
                    let perm: Vec<usize> = label.iter().map(|&l| inverse[l]).collect();
                    if perm.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(perm);
                    }
                }
                Ordering::Greater => {}
            },
        }
    }

    /// Union-find parents of the orbits of the automorphisms found so far that
    /// fix every vertex of `prefix`.
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.g.n()).collect();
        for perm in &self.automorphisms {
            if prefix.iter().all(|&p| perm[p] == p) {
                for (v, &w) in perm.iter().enumerate() {
                    let (a, b) = (find(&parent, v), find(&parent, w));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        parent
    }
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MarkedEdge;

    fn rooted(n: usize, edges: &[(usize, usize)], root: usize) -> RootedMarkedGraph {
        RootedMarkedGraph::new(MarkedGraph::unmarked(n, edges).unwrap(), root).unwrap()
    }

    #[test]
    fn relabeled_marked_stars_agree() {
        let star = |leaves: [usize; 3]| {
            let tau = {
                let mut t = vec![0; 4];
                t[leaves[0]] = 1;
                t[leaves[1]] = 2;
                t
            };
            let edges = leaves.iter().map(|&l| MarkedEdge::new(0, l, 1, 0));
            RootedMarkedGraph::new(MarkedGraph::new(tau, edges).unwrap(), 0).unwrap()
        };
        assert_eq!(canonicalize(&star([1, 2, 3]), None), canonicalize(&star([3, 1, 2]), None));
    }

    #[test]
    fn star_and_path_differ() {
        let star = rooted(4, &[(0, 1), (0, 2), (0, 3)], 1);
        let path = rooted(4, &[(0, 1), (1, 2), (2, 3)], 0);
        assert_ne!(canonicalize(&star, None), canonicalize(&path, None));
    }

    #[test]
    fn roundtrip_decode() {
        let g = rooted(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)], 3);
        let c = canonicalize(&g, None);
        let back = c.decode().unwrap();
        assert_eq!(canonicalize(&back, None), c);
        assert_eq!(CanonicalClass::from_hex(&c.to_hex()).unwrap(), c);
    }

    #[test]
    fn non_canonical_hex_rejected() {
        // Cherry rooted at its center. Marking the first leaf makes it sort
        // after the unmarked one, so the tweaked code is decodable but not
        // canonical.
        let g = rooted(3, &[(0, 1), (0, 2)], 0);
        let c = canonicalize(&g, None);
        let mut code = c.code().to_vec();
        let first_leaf = 1 + 4 + 2;
        code[first_leaf + 1] = 1;
        let tweaked = hex::encode(&code);
        assert!(CanonicalClass::from_hex(&tweaked).is_err());
    }

    #[test]
    fn garbage_codes_rejected() {
        for s in ["", "zz", "54", "5400000001", "47ffffffff0000"] {
            assert!(CanonicalClass::from_hex(s).is_err(), "{s}");
        }
    }

    #[test]
    fn doubly_rooted_orientation_matters() {
        // Path with two edges: (end, center) vs (center, end).
        let g = MarkedGraph::unmarked(3, &[(0, 1), (1, 2)]).unwrap();
        let a = canonicalize_doubly_rooted(&g, 0, 1);
        let b = canonicalize_doubly_rooted(&g, 1, 0);
        let c = canonicalize_doubly_rooted(&g, 2, 1);
        assert_ne!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.kind(), CodeKind::DoublyRooted);
        let (_, r0, r1) = a.decode_with_roots().unwrap();
        assert_eq!((r0, r1), (0, Some(1)));
    }

    #[test]
    fn symmetric_graphs_terminate() {
        // Cycle, prism and a vertex with many pendant paths.
        let cycle: Vec<(usize, usize)> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
        let c1 = canonicalize(&rooted(12, &cycle, 0), None);
        let c2 = canonicalize(&rooted(12, &cycle, 7), None);
        assert_eq!(c1, c2);
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        for i in 0..8 {
            edges.push((0, 3 + 2 * i));
            edges.push((3 + 2 * i, 4 + 2 * i));
        }
        let g = rooted(19, &edges, 1);
        assert_eq!(canonicalize(&g, None).decode().unwrap().graph().n(), 19);
    }
}
