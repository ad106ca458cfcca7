use crate::{Error, Result};

/// A `(p + 2m) × n` nonnegative integer matrix whose first `p` rows have even
/// sums and whose rows `p + 2i`, `p + 2i + 1` have equal sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrix {
    p: usize,
    m: usize,
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl DegreeMatrix {
    pub fn new(p: usize, m: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.len() != p + 2 * m {
            return Err(Error::invalid(format!("expected {} rows, found {}", p + 2 * m, rows.len())));
        }
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("rows have different lengths"));
        }
        let a = Self { p, m, n, rows };
        a.check_membership()?;
        Ok(a)
    }

    /// An all-zero matrix of the given shape.
    pub fn zeros(p: usize, m: usize, n: usize) -> Self {
        Self { p, m, n, rows: vec![vec![0; n]; p + 2 * m] }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        self.rows[i].iter().sum()
    }

    /// `deg A`, the column sums.
    pub fn column_degrees(&self) -> Vec<u64> {
        (0..self.n).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect()
    }

    pub fn max_entry(&self) -> u64 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Checks both defining constraints.
    pub fn check_membership(&self) -> Result<()> {
        for i in 0..self.p {
            if self.row_sum(i) % 2 != 0 {
                return Err(Error::invalid(format!("diagonal row {} has an odd sum", i + 1)));
            }
        }
        for k in 0..self.m {
            let (a, b) = (self.p + 2 * k, self.p + 2 * k + 1);
            if self.row_sum(a) != self.row_sum(b) {
                return Err(Error::invalid(format!("conjugate rows {} and {} have different sums", a + 1, b + 1)));
            }
        }
        Ok(())
    }

    /// Columns where `self` and `other` differ.
    pub fn changed_columns(&self, other: &Self) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| self.rows.iter().zip(&other.rows).any(|(a, b)| a[j] != b[j]))
            .collect()
    }

    /// The rows `range` as a matrix of their own.
    pub(crate) fn sub(&self, first: usize, count: usize, p: usize, m: usize) -> Self {
        Self { p, m, n: self.n, rows: self.rows[first..first + count].to_vec() }
    }

    pub(crate) fn from_parts(p: usize, m: usize, n: usize, rows: Vec<Vec<u64>>) -> Self {
        Self { p, m, n, rows }
    }
}

/// Target column sums `β` with an even total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetDegrees {
    beta: Vec<u64>,
}

impl TargetDegrees {
    pub fn new(beta: Vec<u64>) -> Result<Self> {
        if beta.iter().sum::<u64>() % 2 != 0 {
            return Err(Error::invalid("target degrees have an odd sum"));
        }
        Ok(Self { beta })
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.beta
    }

    pub fn len(&self) -> usize {
        self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    /// The bound `M`.
    pub fn max(&self) -> u64 {
        self.beta.iter().copied().max().unwrap_or(0)
    }
}
