//! Text format for marked graphs.
//!
//! ```text
//! graph 3
//! v 1 a
//! v 2 a
//! v 3 b
//! e 1 2 x y
//! e 2 3 x x
//! ```
//!
//! Vertex ids are 1-based. `e u v p q` sets `ξ(u, v) = p` and `ξ(v, u) = q`.

use super::marked::{MarkedEdge, MarkedGraph};
use super::marks::{Mark, MarkAlphabets};
use crate::text::{content_lines, header, parse_num};
use crate::{Error, Result};

/// Parses a graph whose mark symbols come from `alphabets`.
pub fn parse_graph(text: &str, alphabets: &MarkAlphabets) -> Result<MarkedGraph> {
    let mut lines = content_lines(text);
    let (_, n) = header(&mut lines, "graph")?;
    let mut tau: Vec<Option<Mark>> = vec![None; n];
    let mut edges = Vec::new();
    let mut last_line = 1;
    for (line, tokens) in lines {
        last_line = line;
        let vertex = |token: &str| -> Result<usize> {
            let id: usize = parse_num(line, token, "a vertex id")?;
            if id == 0 || id > n {
                return Err(Error::parse(line, format!("vertex id {id} outside 1..={n}")));
            }
            Ok(id - 1)
        };
        let theta = |s: &str| {
            alphabets
                .theta_index(s)
                .ok_or_else(|| Error::parse(line, format!("unknown vertex mark {s:?}")))
        };
        let xi = |s: &str| {
            alphabets
                .xi_index(s)
                .ok_or_else(|| Error::parse(line, format!("unknown edge mark {s:?}")))
        };
        match tokens.as_slice() {
            ["v", id, mark] => {
                let v = vertex(id)?;
                if tau[v].replace(theta(mark)?).is_some() {
                    return Err(Error::parse(line, format!("vertex {id} declared twice")));
                }
            }
            ["e", u, v, p, q] => {
                let (u, v) = (vertex(u)?, vertex(v)?);
                edges.push((line, MarkedEdge::new(u, v, xi(p)?, xi(q)?)));
            }
            _ => return Err(Error::parse(line, "expected `v <id> <mark>` or `e <u> <v> <mark> <mark>`")),
        }
    }
    let tau = tau
        .into_iter()
        .enumerate()
        .map(|(v, t)| t.ok_or_else(|| Error::parse(last_line, format!("vertex {} has no mark", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    // Re-run edge validation one at a time so errors point at a line.
    let mut seen = std::collections::HashSet::new();
    for (line, e) in &edges {
        if e.u == e.v {
            return Err(Error::parse(*line, "self-loop"));
        }
        if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
            return Err(Error::parse(*line, "duplicate edge"));
        }
    }
    MarkedGraph::new(tau, edges.into_iter().map(|(_, e)| e))
}

/// Alphabets listing the symbols used in `text`, in order of first use.
pub fn infer_alphabets(text: &str) -> Result<MarkAlphabets> {
    let mut theta: Vec<String> = Vec::new();
    let mut xi: Vec<String> = Vec::new();
    let push = |list: &mut Vec<String>, s: &str| {
        if !list.iter().any(|t| t == s) {
            list.push(s.to_string());
        }
    };
    for (_, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["v", _, mark] => push(&mut theta, mark),
            ["e", _, _, p, q] => {
                push(&mut xi, p);
                push(&mut xi, q);
            }
            _ => {}
        }
    }
    if theta.is_empty() {
        theta.push("o".into());
    }
    if xi.is_empty() {
        xi.push("o".into());
    }
    MarkAlphabets::new(theta, xi)
}

pub fn write_graph(g: &MarkedGraph, alphabets: &MarkAlphabets) -> String {
    let mut out = format!("graph {}\n", g.n());
    for v in 0..g.n() {
        out.push_str(&format!("v {} {}\n", v + 1, alphabets.theta()[g.tau(v) as usize]));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "e {} {} {} {}\n",
            e.u + 1,
            e.v + 1,
            alphabets.xi()[e.xi_uv as usize],
            alphabets.xi()[e.xi_vu as usize]
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "graph 3\nv 1 a\nv 2 a\nv 3 b\ne 1 2 x y\ne 2 3 x x\n";
        let alpha = infer_alphabets(text).unwrap();
        let g = parse_graph(text, &alpha).unwrap();
        assert_eq!(g.xi(0, 1), Some(0));
        assert_eq!(g.xi(1, 0), Some(1));
        assert_eq!(write_graph(&g, &alpha), text);
    }

    #[test]
    fn reversed_edge_line_is_normalized() {
        let alpha = MarkAlphabets::new(["a"], ["x", "y"]).unwrap();
        let g = parse_graph("graph 2\nv 1 a\nv 2 a\ne 2 1 x y\n", &alpha).unwrap();
        assert_eq!(g.xi(1, 0), Some(0));
        assert_eq!(write_graph(&g, &alpha), "graph 2\nv 1 a\nv 2 a\ne 1 2 y x\n");
    }

    #[test]
    fn rejects_bad_input() {
        let alpha = MarkAlphabets::new(["a"], ["x"]).unwrap();
        for text in [
            "",
            "graph\n",
            "graph 2\nv 1 a\n",
            "graph 2\nv 1 a\nv 2 a\nv 2 a\n",
            "graph 2\nv 1 a\nv 3 a\n",
            "graph 2\nv 1 a\nv 2 b\n",
            "graph 2\nv 1 a\nv 2 a\ne 1 1 x x\n",
            "graph 2\nv 1 a\nv 2 a\ne 1 2 x x\ne 2 1 x x\n",
            "graph 2\nv 1 a\nv 2 a\ne 1 2 x\n",
        ] {
            assert!(parse_graph(text, &alpha).is_err(), "{text:?}");
        }
    }
}
