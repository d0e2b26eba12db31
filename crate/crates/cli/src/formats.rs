//! Point-set files.
//!
//! ```text
//! # comment
//! k 2
//! point 0 0
//! point 1/2 3/4        # (1/2, 3/4·√2)
//! ```
//!
//! The `raw m` variant lists unnormalized points `a b c d` meaning
//! `(a + b√m, c + d√m)`.

use std::fmt::Write;

use thiserror::Error;

use ratdist::arith::{fmt_rat, parse_rat, Rat, SqfInt, QF};
use ratdist::geom::{NPt, NormalizedSet, Pt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

pub(crate) fn format_err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PointFile {
    Normalized(NormalizedSet),
    Raw { m: SqfInt, points: Vec<Pt> },
}

/// Non-empty lines with comments removed, numbered from 1.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn rat_at(line: usize, s: &str) -> Result<Rat, FormatError> {
    parse_rat(s).map_err(|e| FormatError { line, message: e.to_string() })
}

fn sqf_at(line: usize, s: &str) -> Result<SqfInt, FormatError> {
    let v: u64 = s.parse().map_err(|_| FormatError { line, message: format!("bad field parameter {s:?}") })?;
    SqfInt::new(v).map_err(|e| FormatError { line, message: e.to_string() })
}

pub fn parse_point_file(text: &str) -> Result<PointFile, FormatError> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return format_err(1, "missing header");
    };
    let words: Vec<&str> = header.split_whitespace().collect();
    let (raw, k) = match words.as_slice() {
        ["k", v] => (false, sqf_at(hl, v)?),
        ["raw", v] => (true, sqf_at(hl, v)?),
        _ => return format_err(hl, format!("expected 'k <n>' or 'raw <m>', found {header:?}")),
    };
    let mut npts = Vec::new();
    let mut pts = Vec::new();
    for (ln, l) in lines {
        let words: Vec<&str> = l.split_whitespace().collect();
        match (words.as_slice(), raw) {
            (["point", a, b], false) => npts.push(NPt::new(rat_at(ln, a)?, rat_at(ln, b)?)),
            (["point", a, b, c, d], true) => {
                let x = QF::new(k, rat_at(ln, a)?, rat_at(ln, b)?);
                let y = QF::new(k, rat_at(ln, c)?, rat_at(ln, d)?);
                pts.push(Pt { x, y });
            }
            _ => {
                let want = if raw { "point a b c d" } else { "point r1 r2" };
                return format_err(ln, format!("expected '{want}', found {l:?}"));
            }
        }
    }
    Ok(if raw { PointFile::Raw { m: k, points: pts } } else { PointFile::Normalized(NormalizedSet::new(k, npts)) })
}

/// A file that must hold a normalized set.
pub fn parse_normalized(text: &str) -> Result<NormalizedSet, FormatError> {
    match parse_point_file(text)? {
        PointFile::Normalized(s) => Ok(s),
        PointFile::Raw { .. } => format_err(1, "expected a normalized 'k' file, found a 'raw' file"),
    }
}

pub fn write_point_set(s: &NormalizedSet) -> String {
    let mut out = format!("k {}\n", s.k);
    for p in &s.points {
        writeln!(out, "point {} {}", fmt_rat(&p.r1), fmt_rat(&p.r2)).expect("string write");
    }
    out
}

pub fn write_raw(m: SqfInt, points: &[Pt]) -> String {
    let mut out = format!("raw {m}\n");
    for p in points {
        writeln!(
            out,
            "point {} {} {} {}",
            fmt_rat(p.x.a()),
            fmt_rat(p.x.b()),
            fmt_rat(p.y.a()),
            fmt_rat(p.y.b())
        )
        .expect("string write");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let text = "# a set\nk 3\npoint 0 0\npoint 1 0\npoint 1/2 1/2  # equilateral\n";
        let s = parse_normalized(text).unwrap();
        assert_eq!(s.len(), 3);
        let printed = write_point_set(&s);
        assert_eq!(printed, "k 3\npoint 0 0\npoint 1 0\npoint 1/2 1/2\n");
        assert_eq!(parse_normalized(&printed).unwrap(), s);
        let raw = "raw 2\npoint 1 1 0 0\npoint 0 0 -1/2 3\n";
        let PointFile::Raw { m, points } = parse_point_file(raw).unwrap() else { panic!() };
        assert_eq!(write_raw(m, &points), raw);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_point_file("k 4\n").unwrap_err().line, 1);
        assert_eq!(parse_point_file("k 1\npoint 1\n").unwrap_err().line, 2);
        assert!(parse_point_file("").is_err());
        assert!(parse_point_file("k 1\npoint 1 0 0 0\n").is_err());
    }
}
