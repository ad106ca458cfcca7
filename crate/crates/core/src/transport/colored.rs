use std::collections::BTreeMap;

use super::matrix::{DegreeMatrix, TargetDegrees};
use super::solve::{transport_general, TransportOutcome};
use crate::colored::{Color, ColorSet, ColoredDegreeSequence};
use crate::graph::DegreeSequence;
use crate::{Error, Result};

/// Which color each matrix row stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorRows {
    pub p: usize,
    pub m: usize,
    pub rows: Vec<Color>,
}

/// Diagonal colors occurring in `D` become the first `p` rows (in color
/// order); each occurring pair `(c, c̄)` with `c` lower becomes two adjacent
/// rows. Columns are vertices.
pub fn colored_to_matrix(d: &ColoredDegreeSequence) -> Result<(DegreeMatrix, ColorRows)> {
    let cs = d.colors();
    let present = d.present_colors();
    let diagonal: Vec<Color> = present.iter().copied().filter(|&c| cs.is_diagonal(c)).collect();
    let mut lower: Vec<Color> = present
        .iter()
        .filter(|&&c| !cs.is_diagonal(c))
        .map(|&c| if cs.is_lower(c) { c } else { cs.conjugate(c) })
        .collect();
    lower.sort_unstable();
    lower.dedup();
    let mut order = diagonal.clone();
    for &c in &lower {
        order.push(c);
        order.push(cs.conjugate(c));
    }
    let rows: Vec<Vec<u64>> = order.iter().map(|&c| (0..d.n()).map(|v| d.get(v, c)).collect()).collect();
    let a = DegreeMatrix::from_parts(diagonal.len(), lower.len(), d.n(), rows);
    a.check_membership()?;
    Ok((a, ColorRows { p: diagonal.len(), m: lower.len(), rows: order }))
}

/// Inverse of [`colored_to_matrix`].
pub fn matrix_to_colored(a: &DegreeMatrix, map: &ColorRows, colors: &ColorSet) -> Result<ColoredDegreeSequence> {
    if a.rows().len() != map.rows.len() || a.p() != map.p || a.m() != map.m {
        return Err(Error::invalid("row map does not match the matrix shape"));
    }
    let mut rows = vec![BTreeMap::new(); a.n()];
    for (i, &c) in map.rows.iter().enumerate() {
        for (v, row) in rows.iter_mut().enumerate() {
            let k = a.get(i, v);
            if k > 0 {
                row.insert(c, k);
            }
        }
    }
    ColoredDegreeSequence::new(colors.clone(), rows)
}

/// Result of [`modify_colored_degrees`].
#[derive(Debug, Clone)]
pub struct ModifiedDegrees {
    pub sequence: ColoredDegreeSequence,
    /// Vertices whose colored degree changed.
    pub changed_vertices: Vec<usize>,
    pub bound: u64,
}

/// Adjusts `D` so that every vertex `i` has total degree `ℓ_i`.
pub fn modify_colored_degrees(d: &ColoredDegreeSequence, ell: &DegreeSequence) -> Result<ModifiedDegrees> {
    if d.n() != ell.len() {
        return Err(Error::invalid(format!("{} vertices in D but {} degrees", d.n(), ell.len())));
    }
    let (a, map) = colored_to_matrix(d)?;
    let beta = TargetDegrees::new(ell.as_slice().iter().map(|&x| x as u64).collect())?;
    let TransportOutcome { matrix, changed_columns, bound, .. } = transport_general(&a, &beta)?;
    let sequence = matrix_to_colored(&matrix, &map, d.colors())?;
    Ok(ModifiedDegrees { sequence, changed_vertices: changed_columns, bound })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(rows: Vec<Vec<(Color, u64)>>) -> ColoredDegreeSequence {
        let cs = ColorSet::new(2).unwrap();
        ColoredDegreeSequence::new(cs, rows.into_iter().map(|r| r.into_iter().collect()).collect()).unwrap()
    }

    #[test]
    fn zero_sequence() {
        let d = ColoredDegreeSequence::zeros(3, ColorSet::new(2).unwrap());
        let (a, map) = colored_to_matrix(&d).unwrap();
        assert_eq!(a.rows().len(), 0);
        assert_eq!(a.column_degrees(), vec![0, 0, 0]);
        assert_eq!(matrix_to_colored(&a, &map, d.colors()).unwrap(), d);
    }

    #[test]
    fn round_trip_one_diagonal_one_pair() {
        // colors over base 2: 0 = (0,0), 1 = (0,1), 2 = (1,0), 3 = (1,1)
        let d = seq(vec![vec![(0, 1), (1, 1)], vec![(0, 1), (2, 1)]]);
        let (a, map) = colored_to_matrix(&d).unwrap();
        assert_eq!((a.p(), a.m(), a.n()), (1, 1, 2));
        assert_eq!(map.rows, vec![0, 1, 2]);
        assert_eq!(matrix_to_colored(&a, &map, d.colors()).unwrap(), d);
    }

    #[test]
    fn compatible_is_unchanged() {
        let d = seq(vec![vec![(0, 1), (1, 1)], vec![(0, 1), (2, 1)]]);
        let out = modify_colored_degrees(&d, &DegreeSequence::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(out.sequence, d);
        assert!(out.changed_vertices.is_empty());
    }

    #[test]
    fn single_vertex_mismatch() {
        // a 4-cycle in color 0 plus a pendant pair; vertex 0 is asked for one more edge
        let d = seq(vec![
            vec![(0, 2)],
            vec![(0, 2)],
            vec![(0, 2)],
            vec![(0, 2), (1, 1)],
            vec![(2, 1)],
        ]);
        let ell = DegreeSequence::new(vec![3, 2, 2, 3, 2]).unwrap();
        let out = modify_colored_degrees(&d, &ell).unwrap();
        assert_eq!(out.sequence.degrees(), vec![3, 2, 2, 3, 2]);
        assert!(out.changed_vertices.len() as u64 <= out.bound);
    }
}
