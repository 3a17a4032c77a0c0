//! Line-oriented text formats. Ids in files are 1-based; blank lines and
//! anything after `#` are ignored.
//!
//! ```text
//! poset 3          bigraph 2 3        ple: 1 3 2        rect: 1,2 | 1
//! 1 < 2            1 1                ple: 2 1          diff: 2,1 | 1,2 | 2,1
//! 2 < 3            2 3
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::diffgraph::{BipartiteGraph, CoverFamily, CoverMember};
use crate::generators::ElementMap;
use crate::poset::Poset;
use crate::realizer::{LocalRealizer, Ple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-empty content lines with their 1-based line numbers.
fn content(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn id(tok: &str, line: usize, n: usize) -> Result<usize, ParseError> {
    match tok.parse::<usize>() {
        Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
        Ok(v) => err(line, format!("id {v} outside 1..={n}")),
        Err(_) => err(line, format!("expected an id, found {tok:?}")),
    }
}

fn count(tok: Option<&str>, line: usize) -> Result<usize, ParseError> {
    match tok.map(str::parse::<usize>) {
        Some(Ok(v)) => Ok(v),
        _ => err(line, "expected a size"),
    }
}

pub fn parse_poset(text: &str) -> Result<Poset, ParseError> {
    let mut lines = content(text);
    let Some((hline, header)) = lines.next() else {
        return err(1, "missing `poset <n>` header");
    };
    let mut parts = header.split_whitespace();
    if parts.next() != Some("poset") {
        return err(hline, "expected `poset <n>` header");
    }
    let n = count(parts.next(), hline)?;
    if parts.next().is_some() {
        return err(hline, "trailing tokens after header");
    }
    let mut rels = Vec::new();
    for (line, s) in lines {
        let Some((a, b)) = s.split_once('<') else {
            return err(line, "expected `<i> < <j>`");
        };
        rels.push((id(a.trim(), line, n)?, id(b.trim(), line, n)?));
    }
    Poset::new(n, &rels).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

/// Header plus the cover relations.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.len());
    for (a, b) in p.covers() {
        let _ = writeln!(out, "{} < {}", a + 1, b + 1);
    }
    out
}

/// Like [`write_poset`], with element labels listed as comments.
pub fn write_poset_labeled(p: &Poset, map: &ElementMap) -> String {
    let mut out = format!("poset {}\n", p.len());
    for (i, label) in map.labels().iter().enumerate() {
        let _ = writeln!(out, "# {} = {label}", i + 1);
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "{} < {}", a + 1, b + 1);
    }
    out
}

/// Ples of a realizer file; ids are checked against `1..=n`.
pub fn parse_ples(text: &str, n: usize) -> Result<Vec<Ple>, ParseError> {
    let mut ples = Vec::new();
    for (line, s) in content(text) {
        let Some(rest) = s.strip_prefix("ple:") else {
            return err(line, "expected `ple: <ids>`");
        };
        let seq = rest
            .split_whitespace()
            .map(|t| id(t, line, n))
            .collect::<Result<Vec<_>, _>>()?;
        let mut seen = vec![false; n];
        for &x in &seq {
            if std::mem::replace(&mut seen[x], true) {
                return err(line, format!("element {} repeated", x + 1));
            }
        }
        ples.push(Ple::new(seq));
    }
    Ok(ples)
}

pub fn parse_realizer(text: &str, n: usize) -> Result<LocalRealizer, ParseError> {
    let ples = parse_ples(text, n)?;
    LocalRealizer::new(n, ples).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

pub fn write_ples(ples: &[Ple]) -> String {
    let mut out = String::new();
    for ple in ples {
        out.push_str("ple:");
        for x in ple.elements() {
            let _ = write!(out, " {}", x + 1);
        }
        out.push('\n');
    }
    out
}

pub fn write_realizer(r: &LocalRealizer) -> String {
    write_ples(r.ples())
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut lines = content(text);
    let Some((hline, header)) = lines.next() else {
        return err(1, "missing `bigraph <a> <b>` header");
    };
    let mut parts = header.split_whitespace();
    if parts.next() != Some("bigraph") {
        return err(hline, "expected `bigraph <a> <b>` header");
    }
    let rows = count(parts.next(), hline)?;
    let cols = count(parts.next(), hline)?;
    if parts.next().is_some() {
        return err(hline, "trailing tokens after header");
    }
    let mut edges = Vec::new();
    for (line, s) in lines {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let [u, w] = toks[..] else {
            return err(line, "expected `<u> <w>`");
        };
        edges.push((id(u, line, rows)?, id(w, line, cols)?));
    }
    Ok(BipartiteGraph::new(rows, cols, &edges).expect("ids already checked"))
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut out = format!("bigraph {} {}\n", g.rows(), g.cols());
    for (r, c) in g.edges() {
        let _ = writeln!(out, "{} {}", r + 1, c + 1);
    }
    out
}

fn id_list(s: &str, line: usize) -> Result<Vec<usize>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| id(t.trim(), line, usize::MAX)).collect()
}

fn num_list(s: &str, line: usize) -> Result<Vec<usize>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .or_else(|_| err(line, format!("expected a degree, found {:?}", t.trim())))
        })
        .collect()
}

/// Cover members; vertex ranges are checked by the verifier, not here.
pub fn parse_cover(text: &str) -> Result<CoverFamily, ParseError> {
    let mut members = Vec::new();
    for (line, s) in content(text) {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let fields: Vec<&str> = rest.split('|').collect();
        let member = match (kind.trim(), fields.len()) {
            ("rect", 2) => CoverMember::rect(id_list(fields[0], line)?, id_list(fields[1], line)?),
            ("diff", 3) => CoverMember::diff(
                id_list(fields[0], line)?,
                id_list(fields[1], line)?,
                num_list(fields[2], line)?,
            ),
            _ => return err(line, "expected `rect: rows | cols` or `diff: rows | cols | degrees`"),
        };
        members.push(member);
    }
    Ok(CoverFamily::new(members))
}

pub fn write_cover(f: &CoverFamily) -> String {
    let mut out = String::new();
    for m in &f.members {
        let _ = writeln!(out, "{m}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::standard_example;

    #[test]
    fn poset_round_trip() {
        let (s3, map) = standard_example(3);
        assert_eq!(parse_poset(&write_poset(&s3)).unwrap(), s3);
        assert_eq!(parse_poset(&write_poset_labeled(&s3, &map)).unwrap(), s3);
        let text = "# chain\nposet 3\n1 < 2\n\n2 < 3 # closure adds 1 < 3\n";
        assert_eq!(parse_poset(text).unwrap(), Poset::chain(3));
    }

    #[test]
    fn poset_errors() {
        assert_eq!(parse_poset("poset 2\n1 < 3\n").unwrap_err().line, 2);
        assert_eq!(parse_poset("chain 2\n").unwrap_err().line, 1);
        assert!(parse_poset("poset 2\n1 < 2\n2 < 1\n").is_err());
        assert!(parse_poset("").is_err());
    }

    #[test]
    fn realizer_round_trip() {
        let r = parse_realizer("ple: 1 2\nple: 2 1\n", 2).unwrap();
        assert_eq!(r.mu(), 2);
        assert_eq!(write_realizer(&r), "ple: 1 2\nple: 2 1\n");
        assert!(parse_realizer("ple: 1 1\n", 2).is_err());
        assert!(parse_realizer("ple: 3\n", 2).is_err());
        assert!(parse_realizer("1 2\n", 2).is_err());
    }

    #[test]
    fn graph_and_cover_round_trip() {
        let text = "bigraph 2 3\n1 1\n2 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), text);
        assert!(parse_graph("bigraph 1 1\n1 2\n").is_err());

        let cover = "rect: 1,2,3 | 1\ndiff: 2,1 | 1,2 | 2,1\n";
        assert_eq!(write_cover(&parse_cover(cover).unwrap()), cover);
        assert!(parse_cover("rect: 1 | 2 | 3\n").is_err());
        assert!(parse_cover("diff: 1 | 1 | x\n").is_err());
    }
}
