use crate::{Error, Result};

/// Index of a mark symbol in its alphabet. The alphabet order is the mark order.
pub type Mark = u16;

/// The vertex-mark alphabet Θ and the edge-mark alphabet Ξ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkAlphabets {
    theta: Vec<String>,
    xi: Vec<String>,
}

impl MarkAlphabets {
    pub fn new<S: Into<String>>(
        theta: impl IntoIterator<Item = S>,
        xi: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let theta: Vec<String> = theta.into_iter().map(Into::into).collect();
        let xi: Vec<String> = xi.into_iter().map(Into::into).collect();
        for (name, list) in [("vertex", &theta), ("edge", &xi)] {
            if list.is_empty() {
                return Err(Error::invalid(format!("{name} mark alphabet is empty")));
            }
            if list.len() > Mark::MAX as usize {
                return Err(Error::invalid(format!("{name} mark alphabet is too large")));
            }
            for (i, s) in list.iter().enumerate() {
                if s.is_empty() || s.chars().any(char::is_whitespace) {
                    return Err(Error::invalid(format!("bad {name} mark symbol {s:?}")));
                }
                if list[..i].contains(s) {
                    return Err(Error::invalid(format!("duplicate {name} mark symbol {s:?}")));
                }
            }
        }
        Ok(Self { theta, xi })
    }

    /// Single-symbol alphabets, i.e. unmarked graphs.
    pub fn unmarked() -> Self {
        Self { theta: vec!["o".into()], xi: vec!["o".into()] }
    }

    /// Alphabets `t0..t{theta-1}` and `x0..x{xi-1}`.
    pub fn numbered(theta: usize, xi: usize) -> Self {
        Self {
            theta: (0..theta.max(1)).map(|i| format!("t{i}")).collect(),
            xi: (0..xi.max(1)).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn theta(&self) -> &[String] {
        &self.theta
    }

    pub fn xi(&self) -> &[String] {
        &self.xi
    }

    pub fn theta_index(&self, symbol: &str) -> Option<Mark> {
        self.theta.iter().position(|s| s == symbol).map(|i| i as Mark)
    }

    pub fn xi_index(&self, symbol: &str) -> Option<Mark> {
        self.xi.iter().position(|s| s == symbol).map(|i| i as Mark)
    }
}
