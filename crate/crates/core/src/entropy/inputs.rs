//! Rate-function inputs:
//!
//! ```text
//! P = 1:1/2, 2:1/2          # degree law, degree:probability
//! Q = 1/2,1/2               # optional law on vertex marks
//! vartheta = 1/2,1/2
//! chi = 1/3,2/3
//! dvec = 1/2,1/4;1/4,0      # optional rows of d_{x,x'}
//! Sigma = -0.25             # or -inf
//! J1 = -0.5
//! provenance = supplied     # or: estimate
//! ```

use std::collections::BTreeMap;

use crate::rational::{self, is_probability_vector, Rational};
use crate::text::{key_values, list, parse_num};
use crate::{Error, Result};

/// Where `Σ` and `J₁` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Supplied,
    /// A finite-`n` estimate from the enumeration oracle.
    Estimate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RateInputs {
    pub p: BTreeMap<u64, Rational>,
    pub q: Option<Vec<Rational>>,
    pub vartheta: Vec<Rational>,
    pub chi: Vec<Rational>,
    pub dvec: Option<Vec<Vec<Rational>>>,
    pub sigma: f64,
    pub j1: f64,
    pub provenance: Provenance,
}

const KEYS: &[&str] = &["P", "Q", "vartheta", "chi", "dvec", "Sigma", "J1", "provenance"];

fn law(line: usize, value: &str, what: &str) -> Result<Vec<Rational>> {
    let v = list(value)
        .into_iter()
        .map(rational::parse)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::parse(line, e.to_string()))?;
    if !is_probability_vector(&v) || v.is_empty() {
        return Err(Error::parse(line, format!("{what} is not a probability vector")));
    }
    Ok(v)
}

fn real(line: usize, value: &str, what: &str) -> Result<f64> {
    let x = match value {
        "-inf" => f64::NEG_INFINITY,
        _ => parse_num::<f64>(line, value, what)?,
    };
    if x.is_nan() || x == f64::INFINITY {
        return Err(Error::parse(line, format!("{what} must be a real number or -inf")));
    }
    Ok(x)
}

impl RateInputs {
    pub fn parse(text: &str) -> Result<Self> {
        let entries = key_values(text, KEYS)?;
        let need = |k: &str| entries.get(k).copied().ok_or_else(|| Error::parse(0, format!("missing key {k:?}")));

        let (line, value) = need("P")?;
        let mut p = BTreeMap::new();
        for item in list(value) {
            let (deg, prob) = item
                .split_once(':')
                .ok_or_else(|| Error::parse(line, "expected degree:probability"))?;
            let deg: u64 = parse_num(line, deg.trim(), "a degree")?;
            let prob = rational::parse(prob.trim()).map_err(|e| Error::parse(line, e.to_string()))?;
            if p.insert(deg, prob).is_some() {
                return Err(Error::parse(line, format!("degree {deg} listed twice")));
            }
        }
        if !is_probability_vector(&p.values().cloned().collect::<Vec<_>>()) || p.is_empty() {
            return Err(Error::parse(line, "P is not a probability vector"));
        }
        let q = entries.get("Q").map(|&(l, v)| law(l, v, "Q")).transpose()?;
        let (l, v) = need("vartheta")?;
        let vartheta = law(l, v, "vartheta")?;
        let (l, v) = need("chi")?;
        let chi = law(l, v, "chi")?;
        let dvec = match entries.get("dvec") {
            None => None,
            Some(&(l, v)) => {
                let rows = v
                    .split(';')
                    .map(|r| list(r).into_iter().map(rational::parse).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::parse(l, e.to_string()))?;
                let k = rows.len();
                if rows.iter().any(|r| r.len() != k) {
                    return Err(Error::parse(l, "dvec must be square"));
                }
                for x in 0..k {
                    for y in 0..k {
                        if rows[x][y] != rows[y][x] || rows[x][y] < Rational::default() {
                            return Err(Error::parse(l, "dvec must be symmetric and nonnegative"));
                        }
                    }
                }
                Some(rows)
            }
        };
        let (l, v) = need("Sigma")?;
        let sigma = real(l, v, "Sigma")?;
        let (l, v) = need("J1")?;
        let j1 = real(l, v, "J1")?;
        let provenance = match need("provenance")? {
            (_, "supplied") => Provenance::Supplied,
            (_, "estimate") => Provenance::Estimate,
            (l, other) => return Err(Error::parse(l, format!("unknown provenance {other:?}"))),
        };
        Ok(Self { p, q, vartheta, chi, dvec, sigma, j1, provenance })
    }

    /// `d = Σ ℓ P(ℓ)`.
    pub fn mean_degree(&self) -> Rational {
        self.p.iter().map(|(&l, w)| w * Rational::from_integer(l.into())).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    const SAMPLE: &str = "P = 1:1/2, 3:1/2\nvartheta = 1/2,1/2\nchi = 1\nSigma = -inf\nJ1 = 0.25\nprovenance = supplied\n";

    #[test]
    fn parses() {
        let r = RateInputs::parse(SAMPLE).unwrap();
        assert_eq!(r.mean_degree(), ratio(2, 1));
        assert_eq!(r.sigma, f64::NEG_INFINITY);
        assert_eq!(r.provenance, Provenance::Supplied);
        assert!(r.q.is_none());
    }

    #[test]
    fn provenance_is_mandatory() {
        let text = SAMPLE.replace("provenance = supplied\n", "");
        assert!(RateInputs::parse(&text).is_err());
        assert!(RateInputs::parse(&SAMPLE.replace("supplied", "guess")).is_err());
    }

    #[test]
    fn rejects_bad_laws() {
        assert!(RateInputs::parse(&SAMPLE.replace("chi = 1", "chi = 1/2")).is_err());
        assert!(RateInputs::parse(&SAMPLE.replace("3:1/2", "1:1/2")).is_err());
        assert!(RateInputs::parse(&SAMPLE.replace("J1 = 0.25", "J1 = nan")).is_err());
        let with_d = format!("{SAMPLE}dvec = 1,1/2;1/3,0\n");
        assert!(RateInputs::parse(&with_d).is_err());
    }
}
