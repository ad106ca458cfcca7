//! `key = value` configuration for sampling experiments.
//!
//! ```text
//! # comments and blank lines are ignored
//! model = marked            # uniform | iid | marked
//! degrees = 2,2,1,1         # or: degrees_file = path/to/degrees.txt
//! theta = a,b
//! xi = x,y
//! vartheta = 1/2,1/2        # iid model
//! chi = 1/3,2/3             # iid model
//! u = 2,2                   # marked model, counts per vertex mark
//! m = 1,1,0                 # marked model, counts on pairs x ≤ x' in order
//! seed = 42
//! trials = 1000
//! max_attempts = 1000000
//! ```

use super::counts::{CountVectors, ModelParams};
use super::DEFAULT_MAX_ATTEMPTS;
use crate::graph::{DegreeSequence, MarkAlphabets};
use crate::rational::{self, Rational};
use crate::text::{key_values, list, parse_num};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Uniform,
    Iid,
    Marked,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplerConfig {
    pub model: Model,
    pub degrees: Option<DegreeSequence>,
    pub degrees_file: Option<String>,
    pub alphabets: MarkAlphabets,
    pub params: Option<ModelParams>,
    pub counts: Option<CountVectors>,
    pub seed: Option<u64>,
    pub trials: u64,
    pub max_attempts: u64,
}

const KEYS: &[&str] = &[
    "model", "degrees", "degrees_file", "theta", "xi", "vartheta", "chi", "u", "m", "seed", "trials",
    "max_attempts",
];

impl SamplerConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let entries = key_values(text, KEYS)?;
        let get = |k: &str| entries.get(k).copied();
        let model = match get("model") {
            None => Model::Uniform,
            Some((_, "uniform")) => Model::Uniform,
            Some((_, "iid")) => Model::Iid,
            Some((_, "marked")) => Model::Marked,
            Some((line, other)) => return Err(Error::parse(line, format!("unknown model {other:?}"))),
        };
        let degrees = match get("degrees") {
            Some((line, v)) => Some(DegreeSequence::parse(v).map_err(|e| Error::parse(line, e.to_string()))?),
            None => None,
        };
        let degrees_file = get("degrees_file").map(|(_, v)| v.to_string());
        if degrees.is_some() == degrees_file.is_some() {
            return Err(Error::parse(1, "give exactly one of `degrees` and `degrees_file`"));
        }
        let theta = get("theta").map(|(_, v)| list(v)).unwrap_or_else(|| vec!["o"]);
        let xi = get("xi").map(|(_, v)| list(v)).unwrap_or_else(|| vec!["o"]);
        let alphabets = MarkAlphabets::new(theta, xi)?;
        let rationals = |k: &str| -> Result<Option<Vec<Rational>>> {
            match get(k) {
                None => Ok(None),
                Some((line, v)) => list(v)
                    .into_iter()
                    .map(|t| rational::parse(t).map_err(|e| Error::parse(line, e.to_string())))
                    .collect::<Result<Vec<_>>>()
                    .map(Some),
            }
        };
        let integers = |k: &str| -> Result<Option<Vec<u64>>> {
            match get(k) {
                None => Ok(None),
                Some((line, v)) => list(v)
                    .into_iter()
                    .map(|t| parse_num(line, t, "a count"))
                    .collect::<Result<Vec<_>>>()
                    .map(Some),
            }
        };
        let params = match (rationals("vartheta")?, rationals("chi")?) {
            (Some(v), Some(c)) => {
                if v.len() != alphabets.theta().len() || c.len() != alphabets.xi().len() {
                    return Err(Error::invalid("vartheta and chi must match the alphabets"));
                }
                Some(ModelParams::new(v, c)?)
            }
            (None, None) => None,
            _ => return Err(Error::invalid("give both vartheta and chi")),
        };
        let counts = match (integers("u")?, integers("m")?) {
            (Some(u), Some(m)) => {
                let k = alphabets.xi().len();
                if u.len() != alphabets.theta().len() || m.len() != k * (k + 1) / 2 {
                    return Err(Error::invalid("u and m must match the alphabets"));
                }
                let pairs: Vec<(u16, u16)> =
                    (0..k).flat_map(|x| (x..k).map(move |y| (x as u16, y as u16))).collect();
                let leq: Vec<((u16, u16), u64)> = pairs.into_iter().zip(m).collect();
                Some(CountVectors::from_leq(u, k, &leq)?)
            }
            (None, None) => None,
            _ => return Err(Error::invalid("give both u and m")),
        };
        match model {
            Model::Iid if params.is_none() => return Err(Error::invalid("the iid model needs vartheta and chi")),
            Model::Marked if counts.is_none() => return Err(Error::invalid("the marked model needs u and m")),
            _ => {}
        }
        let number = |k: &str| -> Result<Option<u64>> {
            get(k).map(|(line, v)| parse_num(line, v, "an integer")).transpose()
        };
        Ok(Self {
            model,
            degrees,
            degrees_file,
            alphabets,
            params,
            counts,
            seed: number("seed")?,
            trials: number("trials")?.unwrap_or(1),
            max_attempts: number("max_attempts")?.unwrap_or(DEFAULT_MAX_ATTEMPTS),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_config() {
        let text = "model = marked\ndegrees = 2,2,1,1\ntheta = a,b\nxi = x,y\nu = 2,2\nm = 1,1,0\nseed = 7\ntrials = 10\n";
        let c = SamplerConfig::parse(text).unwrap();
        assert_eq!(c.model, Model::Marked);
        assert_eq!(c.seed, Some(7));
        assert_eq!(c.trials, 10);
        assert_eq!(c.counts.unwrap().edge_total(), 2);
        assert_eq!(c.max_attempts, DEFAULT_MAX_ATTEMPTS);
    }

    #[test]
    fn errors() {
        for text in [
            "degrees = 1,1\nbogus = 3\n",
            "degrees = 1,1\ndegrees = 1,1\n",
            "seed = 1\n",
            "degrees = 1,1\nmodel = iid\n",
            "degrees = 1,1\nmodel = weird\n",
            "degrees = 1,1\nvartheta = 1\n",
            "degrees = 1,1\ntheta = a,b\nvartheta = 1\nchi = 1\n",
            "degrees = 1,1\nseed = x\n",
            "degrees = 1\n",
        ] {
            assert!(SamplerConfig::parse(text).is_err(), "{text:?}");
        }
    }
}
