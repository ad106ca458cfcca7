use super::matrix::{DegreeMatrix, TargetDegrees};
use crate::text::{content_lines, parse_num};
use crate::{Error, Result};

/// Parses `dmat <p> <m> <n>` followed by `p + 2m` rows of `n` integers.
pub fn parse_dmat(text: &str) -> Result<DegreeMatrix> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    if head.len() != 4 || head[0] != "dmat" {
        return Err(Error::parse(line, "expected `dmat <p> <m> <n>`"));
    }
    let p: usize = parse_num(line, head[1], "p")?;
    let m: usize = parse_num(line, head[2], "m")?;
    let n: usize = parse_num(line, head[3], "n")?;
    let want = p.checked_add(m.checked_mul(2).ok_or_else(|| Error::parse(line, "m too large"))?)
        .ok_or_else(|| Error::parse(line, "p too large"))?;
    let mut rows = Vec::new();
    for (line, toks) in lines {
        if rows.len() == want {
            return Err(Error::parse(line, "more rows than the header declares"));
        }
        if toks.len() != n {
            return Err(Error::parse(line, format!("expected {n} entries, found {}", toks.len())));
        }
        rows.push(toks.iter().map(|t| parse_num(line, t, "entry")).collect::<Result<Vec<u64>>>()?);
    }
    if rows.len() != want {
        return Err(Error::parse(0, format!("expected {want} rows, found {}", rows.len())));
    }
    if want == 0 {
        return Ok(DegreeMatrix::zeros(p, m, n));
    }
    DegreeMatrix::new(p, m, rows)
}

pub fn write_dmat(a: &DegreeMatrix) -> String {
    let mut out = format!("dmat {} {} {}\n", a.p(), a.m(), a.n());
    for row in a.rows() {
        out.push_str(&join(row));
    }
    out
}

/// Parses `beta <n>` followed by one row of `n` integers.
pub fn parse_beta(text: &str) -> Result<TargetDegrees> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    if head.len() != 2 || head[0] != "beta" {
        return Err(Error::parse(line, "expected `beta <n>`"));
    }
    let n: usize = parse_num(line, head[1], "n")?;
    let row = match lines.next() {
        Some((line, toks)) => {
            if toks.len() != n {
                return Err(Error::parse(line, format!("expected {n} entries, found {}", toks.len())));
            }
            toks.iter().map(|t| parse_num(line, t, "entry")).collect::<Result<Vec<u64>>>()?
        }
        None if n == 0 => Vec::new(),
        None => return Err(Error::parse(line, "missing target row")),
    };
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content"));
    }
    TargetDegrees::new(row)
}

pub fn write_beta(beta: &TargetDegrees) -> String {
    format!("beta {}\n{}", beta.len(), join(beta.as_slice()))
}

fn join(xs: &[u64]) -> String {
    let mut s = xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "dmat 1 1 3\n2 0 2\n1 2 0\n0 1 2\n";
        let a = parse_dmat(text).unwrap();
        assert_eq!(write_dmat(&a), text);
        let b = parse_beta("# target\nbeta 3\n1 2 4\n").unwrap_err();
        assert!(matches!(b, Error::InvalidInput(_)));
        let b = parse_beta("beta 2\n2 4\n").unwrap();
        assert_eq!(write_beta(&b), "beta 2\n2 4\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_dmat("dmat 1 0 2\n1 2\n").is_err());
        assert!(parse_dmat("dmat 1 0 2\n2 2\n2 2\n").is_err());
        assert!(parse_dmat("dmat 99999999999999999999 0 1\n").is_err());
        assert!(parse_beta("beta 2\n1\n").is_err());
        assert!(parse_beta("").is_err());
    }
}
