//! The ideal file format.
//!
//! ```text
//! # comments run to end of line
//! vars: 3
//! gens:
//! 2 2 1
//! 1 2 2
//! ```
//!
//! Generators may instead be written as monomials (`x1^2*x2^2*x3`), but not
//! both ways in one file.

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Syntax {
    Vector,
    Monomial,
}

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Validation(format!("line {line}: {msg}"))
}

fn parse_vector(line: usize, s: &str, n: usize) -> Result<Vec<u32>> {
    let v = s
        .split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|_| err(line, format!("bad exponent '{t}'"))))
        .collect::<Result<Vec<u32>>>()?;
    if v.len() != n {
        return Err(err(line, format!("expected {n} exponents, found {}", v.len())));
    }
    Ok(v)
}

fn parse_monomial(line: usize, s: &str, n: usize) -> Result<Vec<u32>> {
    let mut v = vec![0u32; n];
    for factor in s.split('*').map(str::trim) {
        let (var, exp) = match factor.split_once('^') {
            Some((a, b)) => (a.trim(), b.trim().parse::<u32>().map_err(|_| err(line, format!("bad exponent in '{factor}'")))?),
            None => (factor, 1),
        };
        let idx = var
            .strip_prefix('x')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| (1..=n).contains(&k))
            .ok_or_else(|| err(line, format!("unknown variable '{var}' (expected x1..x{n})")))?;
        v[idx - 1] += exp;
    }
    Ok(v)
}

/// Parse an ideal file; the result is minimalized.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (k, head) = lines.next().ok_or_else(|| Error::validation("empty ideal file"))?;
    let n = head
        .strip_prefix("vars:")
        .ok_or_else(|| err(k, "expected 'vars: n'"))?
        .trim()
        .parse::<usize>()
        .map_err(|_| err(k, "variable count is not a nonnegative integer"))?;
    let (k, gens_line) = lines.next().ok_or_else(|| Error::validation("missing 'gens:' line"))?;
    if gens_line != "gens:" {
        return Err(err(k, "expected 'gens:'"));
    }
    let mut syntax = None;
    let mut raw = Vec::new();
    for (k, l) in lines {
        let this = if l.contains('x') { Syntax::Monomial } else { Syntax::Vector };
        if *syntax.get_or_insert(this) != this {
            return Err(err(k, "mixes monomial and exponent-vector generators"));
        }
        let v = match this {
            Syntax::Vector => parse_vector(k, l, n)?,
            Syntax::Monomial => parse_monomial(k, l, n)?,
        };
        if v.iter().all(|&e| e == 0) {
            return Err(err(k, "generator is 1 (unit ideal)"));
        }
        raw.push(ExponentVector::new(v).map_err(|e| err(k, e))?);
    }
    MonomialIdeal::minimalize(raw, n)
}

/// Serialize in canonical generator order.
pub fn write_ideal(ideal: &MonomialIdeal, syntax: Syntax) -> String {
    let mut s = format!("vars: {}\ngens:\n", ideal.n_vars());
    for u in ideal.generators() {
        match syntax {
            Syntax::Vector => {
                let parts: Vec<String> = u.entries().iter().map(u32::to_string).collect();
                s.push_str(&parts.join(" "));
            }
            Syntax::Monomial => s.push_str(&MonomialIdeal::monomial_string(u, "x")),
        }
        s.push('\n');
    }
    s
}
