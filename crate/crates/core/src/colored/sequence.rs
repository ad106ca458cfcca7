use std::collections::{BTreeMap, BTreeSet};

use super::colors::{Color, ColorSet, EdgeType};
use crate::graph::CanonicalClass;
use crate::text::{content_lines, parse_num};
use crate::{Error, Result};

/// Per-vertex colored degrees `D_c(v)`, stored sparsely (no zero entries).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDegreeSequence {
    colors: ColorSet,
    rows: Vec<BTreeMap<Color, u64>>,
}

impl ColoredDegreeSequence {
    /// Validates membership in `𝒟_n`: with `S = Σ_v D(v)`, `S_c = S_c̄` for
    /// every color and `S_c` is even on diagonal colors.
    pub fn new(colors: ColorSet, rows: Vec<BTreeMap<Color, u64>>) -> Result<Self> {
        let d = Self::from_rows_unchecked(colors, rows);
        for row in &d.rows {
            if let Some(&c) = row.keys().find(|&&c| !d.colors.contains(c)) {
                return Err(Error::InvalidSequence(format!("unknown color {c}")));
            }
        }
        let s = d.totals();
        for (&c, &total) in &s {
            let conj = d.colors.conjugate(c);
            if d.colors.is_diagonal(c) {
                if total % 2 != 0 {
                    return Err(Error::InvalidSequence(format!("diagonal color {c} has odd total {total}")));
                }
            } else if s.get(&conj).copied().unwrap_or(0) != total {
                return Err(Error::InvalidSequence(format!("colors {c} and {conj} have different totals")));
            }
        }
        Ok(d)
    }

    pub(crate) fn from_rows_unchecked(colors: ColorSet, mut rows: Vec<BTreeMap<Color, u64>>) -> Self {
        for row in &mut rows {
            row.retain(|_, k| *k > 0);
        }
        Self { colors, rows }
    }

    pub fn zeros(n: usize, colors: ColorSet) -> Self {
        Self { colors, rows: vec![BTreeMap::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn colors(&self) -> &ColorSet {
        &self.colors
    }

    pub fn row(&self, v: usize) -> &BTreeMap<Color, u64> {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[BTreeMap<Color, u64>] {
        &self.rows
    }

    pub fn get(&self, v: usize, c: Color) -> u64 {
        self.rows[v].get(&c).copied().unwrap_or(0)
    }

    /// `S = Σ_v D(v)`.
    pub fn totals(&self) -> BTreeMap<Color, u64> {
        let mut s = BTreeMap::new();
        for row in &self.rows {
            for (&c, &k) in row {
                *s.entry(c).or_insert(0) += k;
            }
        }
        s
    }

    /// `Σ_c D_c(v)`, the degree of `v` in the colorblind graph.
    pub fn degree(&self, v: usize) -> u64 {
        self.rows[v].values().sum()
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Colors with a nonzero entry somewhere.
    pub fn present_colors(&self) -> BTreeSet<Color> {
        self.rows.iter().flat_map(|r| r.keys().copied()).collect()
    }
}

/// Parses the colored degree sequence format:
///
/// ```text
/// cds <n> <color-lines>
/// base <L>
/// label <i> <edge-mark> <class-hex>      (optional, all or none)
/// color <id> <i> <j> <conjugate-id>
/// d <vertex> <color>:<count> ...         (one line per vertex, 1-based)
/// ```
pub fn parse_cds(text: &str) -> Result<ColoredDegreeSequence> {
    let mut lines = content_lines(text);
    let (head, tokens) = lines.next().ok_or_else(|| Error::parse(1, "missing `cds` header"))?;
    let ["cds", n, k] = tokens.as_slice() else {
        return Err(Error::parse(head, "expected `cds <n> <color-lines>`"));
    };
    let n: usize = parse_num(head, n, "a vertex count")?;
    let table_len: usize = parse_num(head, k, "a color count")?;
    let (line, tokens) = lines.next().ok_or_else(|| Error::parse(head, "missing `base` line"))?;
    let ["base", base] = tokens.as_slice() else {
        return Err(Error::parse(line, "expected `base <L>`"));
    };
    let base: usize = parse_num(line, base, "a base size")?;
    let mut labels: Vec<Option<EdgeType>> = Vec::new();
    let mut colors: Option<ColorSet> = None;
    let mut table: BTreeSet<Color> = BTreeSet::new();
    let mut rows: Vec<Option<BTreeMap<Color, u64>>> = vec![None; n];
    let mut last = line;
    for (line, tokens) in lines {
        last = line;
        match tokens.as_slice() {
            ["label", i, mark, hex] => {
                if colors.is_some() {
                    return Err(Error::parse(line, "labels must precede the color table"));
                }
                let i: usize = parse_num(line, i, "a base index")?;
                if i >= base {
                    return Err(Error::parse(line, "label index out of range"));
                }
                let mark = parse_num(line, mark, "an edge mark")?;
                let class = CanonicalClass::from_hex(hex).map_err(|e| Error::parse(line, e.to_string()))?;
                labels.resize(base, None);
                if labels[i].replace(EdgeType { mark, class }).is_some() {
                    return Err(Error::parse(line, "label given twice"));
                }
            }
            ["color", id, i, j, conj] => {
                let cs = match &colors {
                    Some(cs) => cs,
                    None => colors.insert(make_colors(base, &labels).map_err(|e| Error::parse(line, e.to_string()))?),
                };
                let id: Color = parse_num(line, id, "a color id")?;
                let i: usize = parse_num(line, i, "a base index")?;
                let j: usize = parse_num(line, j, "a base index")?;
                let conj: Color = parse_num(line, conj, "a color id")?;
                if i >= base || j >= base || cs.color(i, j) != id || cs.conjugate(id) != conj {
                    return Err(Error::parse(line, "color entry is inconsistent with the base"));
                }
                if !table.insert(id) {
                    return Err(Error::parse(line, "color listed twice"));
                }
            }
            ["d", v, entries @ ..] => {
                if colors.is_none() {
                    colors = Some(make_colors(base, &labels).map_err(|e| Error::parse(line, e.to_string()))?);
                }
                let v: usize = parse_num(line, v, "a vertex id")?;
                if v == 0 || v > n {
                    return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
                }
                let mut row = BTreeMap::new();
                for entry in entries {
                    let (c, k) = entry
                        .split_once(':')
                        .ok_or_else(|| Error::parse(line, "expected `<color>:<count>`"))?;
                    let c: Color = parse_num(line, c, "a color id")?;
                    let k: u64 = parse_num(line, k, "a count")?;
                    if !table.contains(&c) {
                        return Err(Error::parse(line, format!("color {c} is not in the table")));
                    }
                    if row.insert(c, k).is_some() {
                        return Err(Error::parse(line, format!("color {c} repeated")));
                    }
                }
                if rows[v - 1].replace(row).is_some() {
                    return Err(Error::parse(line, format!("vertex {v} given twice")));
                }
            }
            _ => return Err(Error::parse(line, "expected a `label`, `color` or `d` line")),
        }
    }
    if table.len() != table_len {
        return Err(Error::parse(head, format!("header announces {table_len} colors, table has {}", table.len())));
    }
    let colors = match colors {
        Some(c) => c,
        None => make_colors(base, &labels).map_err(|e| Error::parse(last, e.to_string()))?,
    };
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::parse(last, format!("vertex {} has no row", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    ColoredDegreeSequence::new(colors, rows)
}

fn make_colors(base: usize, labels: &[Option<EdgeType>]) -> Result<ColorSet> {
    if labels.is_empty() {
        return ColorSet::new(base);
    }
    let labels: Option<Vec<EdgeType>> = labels.iter().cloned().collect();
    let labels = labels.ok_or_else(|| Error::invalid("labels must cover the whole base"))?;
    ColorSet::labeled(labels)
}

pub fn write_cds(d: &ColoredDegreeSequence) -> String {
    let cs = d.colors();
    let mut table: BTreeSet<Color> = BTreeSet::new();
    for c in d.present_colors() {
        table.insert(c);
        table.insert(cs.conjugate(c));
    }
    let mut out = format!("cds {} {}\nbase {}\n", d.n(), table.len(), cs.base_len());
    if let Some(labels) = cs.labels() {
        for (i, t) in labels.iter().enumerate() {
            out.push_str(&format!("label {} {} {}\n", i, t.mark, t.class.to_hex()));
        }
    }
    for &c in &table {
        let (i, j) = cs.pair(c);
        out.push_str(&format!("color {} {} {} {}\n", c, i, j, cs.conjugate(c)));
    }
    for (v, row) in d.rows().iter().enumerate() {
        out.push_str(&format!("d {}", v + 1));
        for (c, k) in row {
            out.push_str(&format!(" {c}:{k}"));
        }
        out.push('\n');
    }
    out
}
