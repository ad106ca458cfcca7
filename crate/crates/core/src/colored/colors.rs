use crate::graph::{CanonicalClass, Mark};
use crate::{Error, Result};

/// Index of a color `(i, j)` in `F × F`, namely `i · |F| + j`.
pub type Color = u32;

/// An element of the base set of `C(G)` colors: an edge mark and the class of
/// the far endpoint's side of the edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeType {
    pub mark: Mark,
    pub class: CanonicalClass,
}

/// The colors `F × F` over a base set of size `L`, optionally labeled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSet {
    base: usize,
    labels: Option<Vec<EdgeType>>,
}

impl ColorSet {
    /// Unlabeled colors over a base set of size `base`.
    pub fn new(base: usize) -> Result<Self> {
        if base == 0 || base.checked_mul(base).map_or(true, |c| c > Color::MAX as usize) {
            return Err(Error::invalid(format!("bad color base size {base}")));
        }
        Ok(Self { base, labels: None })
    }

    /// Colors over a sorted, duplicate-free list of edge types.
    pub fn labeled(labels: Vec<EdgeType>) -> Result<Self> {
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("edge types must be sorted and distinct"));
        }
        let mut set = Self::new(labels.len())?;
        set.labels = Some(labels);
        Ok(set)
    }

    pub fn base_len(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.base * self.base
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> Option<&[EdgeType]> {
        self.labels.as_deref()
    }

    pub fn color(&self, i: usize, j: usize) -> Color {
        debug_assert!(i < self.base && j < self.base);
        (i * self.base + j) as Color
    }

    /// The pair `(i, j)` of base indices of `c`.
    pub fn pair(&self, c: Color) -> (usize, usize) {
        let c = c as usize;
        (c / self.base, c % self.base)
    }

    pub fn conjugate(&self, c: Color) -> Color {
        let (i, j) = self.pair(c);
        self.color(j, i)
    }

    /// `c ∈ C_=`.
    pub fn is_diagonal(&self, c: Color) -> bool {
        let (i, j) = self.pair(c);
        i == j
    }

    /// `c ∈ C_<`.
    pub fn is_lower(&self, c: Color) -> bool {
        let (i, j) = self.pair(c);
        i < j
    }

    pub fn contains(&self, c: Color) -> bool {
        (c as usize) < self.len()
    }

    pub fn index_of(&self, t: &EdgeType) -> Option<usize> {
        self.labels.as_ref()?.binary_search(t).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_is_an_involution() {
        let cs = ColorSet::new(4).unwrap();
        for c in 0..cs.len() as Color {
            assert_eq!(cs.conjugate(cs.conjugate(c)), c);
            assert_eq!(cs.conjugate(c) == c, cs.is_diagonal(c));
            assert_eq!(cs.is_lower(c), !cs.is_diagonal(c) && !cs.is_lower(cs.conjugate(c)));
        }
    }

    #[test]
    fn bad_sizes() {
        assert!(ColorSet::new(0).is_err());
        assert!(ColorSet::new(1 << 20).is_err());
    }
}
