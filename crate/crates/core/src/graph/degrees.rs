use crate::{Error, Result};

/// A degree sequence `(ℓ_1, …, ℓ_n)` with even sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    ell: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(ell: Vec<usize>) -> Result<Self> {
        if ell.iter().sum::<usize>() % 2 != 0 {
            return Err(Error::invalid("degree sum is odd"));
        }
        Ok(Self { ell })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.ell
    }

    pub fn len(&self) -> usize {
        self.ell.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ell.is_empty()
    }

    /// The bound `L`, i.e. the largest entry.
    pub fn max_degree(&self) -> usize {
        self.ell.iter().copied().max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.ell.iter().sum::<usize>() / 2
    }

    /// Erdős–Gallai test.
    pub fn is_graphical(&self) -> bool {
        let mut d = self.ell.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        let n = d.len();
        let mut prefix = 0usize;
        for k in 1..=n {
            prefix += d[k - 1];
            let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
            if prefix > k * (k - 1) + tail {
                return false;
            }
        }
        true
    }

    /// Parses whitespace- or comma-separated integers, with an optional
    /// leading `degrees <n>` header.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let mut expected = None;
        if tokens.first() == Some(&"degrees") {
            let n: usize = tokens
                .get(1)
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(1, "expected `degrees <n>`"))?;
            expected = Some(n);
            tokens.drain(..2);
        }
        let ell = tokens
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(1, format!("bad degree {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if let Some(n) = expected {
            if n != ell.len() {
                return Err(Error::parse(1, format!("header says {n} degrees, found {}", ell.len())));
            }
        }
        Self::new(ell)
    }

    pub fn to_text(&self) -> String {
        let body: Vec<String> = self.ell.iter().map(|d| d.to_string()).collect();
        format!("degrees {}\n{}\n", self.ell.len(), body.join(" "))
    }
}
