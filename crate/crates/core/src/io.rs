//! Facet files: `n <N>` on the first line, then one facet per line as
//! space-separated 1-based vertices. `#` starts a comment line. The empty
//! facet of `{∅}` is written as `{}`.

use std::fmt::Write as _;
use std::path::Path;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

const EMPTY_FACET: &str = "{}";

pub fn write_facets(c: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", c.n());
    for f in c.facets() {
        if f.is_empty() {
            out.push_str(EMPTY_FACET);
        } else {
            let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&labels.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next();
    let header_line = header.map_or(1, |(line, _)| line);
    let n = parse_header(header)?;
    let mut facets = Vec::new();
    for (line, l) in lines {
        if l == EMPTY_FACET {
            facets.push(VertexSet::EMPTY);
            continue;
        }
        let nums = parse_numbers(line, l)?;
        if let Some(&bad) = nums.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::parse(
                line,
                format!("vertex {bad} is outside 1..={n}"),
            ));
        }
        facets.push(VertexSet::from_vertices(nums));
    }
    if facets.is_empty() {
        return Err(Error::parse(header_line, "no facets listed"));
    }
    SimplicialComplex::new(n, facets).map_err(|e| Error::parse(header_line, e.to_string()))
}

pub fn read_facets(path: &Path) -> Result<SimplicialComplex> {
    parse_facets(&std::fs::read_to_string(path)?)
}

pub(crate) fn parse_header(header: Option<(usize, &str)>) -> Result<usize> {
    let Some((line, l)) = header else {
        return Err(Error::parse(1, "missing `n <N>` header"));
    };
    let mut parts = l.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(count), None) => {
            let n: usize = count
                .parse()
                .map_err(|_| Error::parse(line, format!("bad vertex count `{count}`")))?;
            if n > crate::vertex_set::MAX_VERTICES {
                return Err(Error::parse(line, format!("n = {n} exceeds 64")));
            }
            Ok(n)
        }
        _ => Err(Error::parse(line, "expected header `n <N>`")),
    }
}

pub(crate) fn parse_numbers(line: usize, l: &str) -> Result<Vec<usize>> {
    l.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("expected a vertex label, found `{tok}`")))
        })
        .collect()
}

/// Space-separated listing used in diagnostics: `{1,4} {2,5}`.
pub fn format_sets(sets: &[VertexSet]) -> String {
    let mut out = String::new();
    for (i, s) in sets.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{s}").unwrap();
    }
    out
}
