//! Plain-text polytope files.
//!
//! ```text
//! # unit square in slack form
//! 4 2 4          # n m V
//! A
//! 1 0 1 0
//! 0 1 0 1
//! b
//! 1 1
//! vertices
//! 0 0 1 1
//! 0 1 1 0
//! 1 0 0 1
//! 1 1 0 0
//! ```
//!
//! Tokens are whitespace separated and `#` starts a comment running to the
//! end of the line. Rationals are an optionally signed integer or `p/q`
//! with `q > 0`. Sections appear in the order header, `A`, `b`, `vertices`.
//! [`write`] emits rationals in lowest terms, one matrix row per line.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::polytope::Polytope;

struct Tokens<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let mut items = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("");
            items.extend(content.split_whitespace().map(|t| (i + 1, t)));
        }
        let last_line = text.lines().count().max(1);
        Self {
            items,
            pos: 0,
            last_line,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let item = self.items.get(self.pos).copied().ok_or_else(|| Error::Syntax {
            line: self.last_line,
            message: format!("unexpected end of file, expected {what}"),
        })?;
        self.pos += 1;
        Ok(item)
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let (line, t) = self.next(&format!("section {word:?}"))?;
        if t == word {
            Ok(())
        } else {
            Err(Error::Syntax {
                line,
                message: format!("expected section {word:?}, found {t:?}"),
            })
        }
    }

    fn count(&mut self, what: &str) -> Result<usize> {
        let (line, t) = self.next(what)?;
        t.parse().map_err(|_| Error::Syntax {
            line,
            message: format!("expected {what} as a non-negative integer, found {t:?}"),
        })
    }

    fn rational(&mut self, what: &str) -> Result<Rational> {
        let (line, t) = self.next(what)?;
        parse_rational(t).ok_or_else(|| Error::MalformedRational {
            line,
            token: t.to_string(),
        })
    }

    fn rows(&mut self, rows: usize, cols: usize, what: &str) -> Result<Vec<Vec<Rational>>> {
        (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|_| self.rational(&format!("{what} row {r}")))
                    .collect()
            })
            .collect()
    }
}

/// Parses `[+-]digits` or `[+-]digits/digits` with a positive denominator.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let integer = |s: &str| -> Option<BigInt> {
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    match token.split_once('/') {
        None => integer(token).map(Rational::from_integer),
        Some((p, q)) => {
            if !q.bytes().all(|c| c.is_ascii_digit()) {
                return None;
            }
            let (p, q) = (integer(p)?, integer(q)?);
            if q.is_zero() || q.is_negative() {
                return None;
            }
            Some(Rational::new(p, q))
        }
    }
}

/// Parses and validates a polytope file.
pub fn parse(text: &str) -> Result<Polytope> {
    let mut t = Tokens::new(text);
    let n = t.count("n")?;
    let m = t.count("m")?;
    let v = t.count("V")?;
    t.keyword("A")?;
    let a = t.rows(m, n, "A")?;
    t.keyword("b")?;
    let b = t.rows(1, m, "b")?.pop().unwrap_or_default();
    t.keyword("vertices")?;
    let vertices = t.rows(v, n, "vertex")?;
    if let Some(&(line, tok)) = t.items.get(t.pos) {
        return Err(Error::Syntax {
            line,
            message: format!("trailing token {tok:?} after {v} vertices"),
        });
    }
    if v == 0 {
        return Err(Error::NoVertices);
    }
    Polytope::new(a, b, vertices)
}

/// Renders a polytope in the file format; `parse(&write(p)) == p`.
pub fn write(p: &Polytope) -> String {
    let row = |r: &[Rational]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", p.n(), p.m(), p.vertex_count());
    out.push_str("A\n");
    for r in p.a() {
        let _ = writeln!(out, "{}", row(r));
    }
    out.push_str("b\n");
    if p.m() > 0 {
        let _ = writeln!(out, "{}", row(p.b()));
    }
    out.push_str("vertices\n");
    for v in p.vertices() {
        let _ = writeln!(out, "{}", row(v));
    }
    out
}
