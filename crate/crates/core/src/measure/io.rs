//! Text format for measures: a `measure <count>` header followed by
//! `atom <num>/<den> <hex code>` lines in code order.

use super::LocalMeasure;
use crate::graph::CanonicalClass;
use crate::rational;
use crate::text::{content_lines, header};
use crate::{Error, Result};

pub fn parse_measure(text: &str) -> Result<LocalMeasure> {
    let mut lines = content_lines(text);
    let (head, count) = header(&mut lines, "measure")?;
    let mut atoms = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (line, tokens) in lines {
        let ["atom", w, code] = tokens.as_slice() else {
            return Err(Error::parse(line, "expected `atom <num>/<den> <hex>`"));
        };
        let w = rational::parse(w).map_err(|e| Error::parse(line, e.to_string()))?;
        let class = CanonicalClass::from_hex(code).map_err(|e| Error::parse(line, e.to_string()))?;
        if !seen.insert(class.clone()) {
            return Err(Error::parse(line, "repeated atom"));
        }
        atoms.push((class, w));
    }
    if atoms.len() != count {
        return Err(Error::parse(head, format!("header announces {count} atoms, found {}", atoms.len())));
    }
    LocalMeasure::new(atoms)
}

pub fn write_measure(mu: &LocalMeasure) -> String {
    let mut out = format!("measure {}\n", mu.len());
    for (class, w) in mu.atoms() {
        out.push_str(&format!("atom {}/{} {}\n", w.numer(), w.denom(), class.to_hex()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MarkedGraph;
    use crate::measure::empirical_distribution;

    #[test]
    fn roundtrip() {
        let g = MarkedGraph::unmarked(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let mu = empirical_distribution(&g).unwrap();
        let text = write_measure(&mu);
        assert_eq!(parse_measure(&text).unwrap(), mu);
        assert!(text.starts_with("measure 3\n"));
    }

    #[test]
    fn rejects_bad_input() {
        for text in ["", "measure 1\n", "measure 1\natom 1/2 54\n", "measure 0\n", "measure 1\natom 1 zz\n"] {
            assert!(parse_measure(text).is_err(), "{text:?}");
        }
    }
}
