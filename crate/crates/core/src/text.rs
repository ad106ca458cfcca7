//! Shared helpers for the line-oriented text formats.

use std::collections::BTreeMap;

use crate::{Error, Result};

/// Non-empty, non-comment lines split on whitespace, with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {token:?}")))
}

/// Checks a `<keyword> <count>` header line and returns the count.
pub(crate) fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    keyword: &str,
) -> Result<(usize, usize)> {
    let (line, tokens) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing `{keyword}` header")))?;
    if tokens.len() != 2 || tokens[0] != keyword {
        return Err(Error::parse(line, format!("expected `{keyword} <count>`")));
    }
    Ok((line, parse_num(line, tokens[1], "a count")?))
}

/// Collects `key = value` lines, rejecting unknown and repeated keys.
pub(crate) fn key_values<'a>(text: &'a str, keys: &[&str]) -> Result<BTreeMap<&'a str, (usize, &'a str)>> {
    let mut entries = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::parse(i + 1, "expected `key = value`"))?;
        let key = key.trim();
        if !keys.contains(&key) {
            return Err(Error::parse(i + 1, format!("unknown key {key:?}")));
        }
        if entries.insert(key, (i + 1, value.trim())).is_some() {
            return Err(Error::parse(i + 1, format!("key {key:?} given twice")));
        }
    }
    Ok(entries)
}

/// Comma-separated items, trimmed, empty items dropped.
pub(crate) fn list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}
