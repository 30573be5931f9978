//! Base description files.
//!
//! ```text
//! [field]
//! minpoly = -13, 0, 1        # constant term first
//! root_interval = 3, 4       # exact decimals or fractions
//!
//! [base]
//! period = 2
//! beta.1 = 1/2, 1/2          # coordinates in 1, θ, ..., θ^(d-1)
//! beta.2 = 5/6, 1/6
//! ```
//!
//! A symbolic base replaces `[base]` by `[symbolic]` with `t.1 = 2010`,
//! ... and needs no `[field]`. Without `[field]`, `[base]` coordinates are
//! rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::literal::parse_digit_string;
use crate::algebraic::{FieldElement, RationalPolynomial, RealAlgebraicField};
use crate::bases::AlternateBase;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseFileError {
    /// 1-based line, 0 when the problem is not tied to a line.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for BaseFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for BaseFileError {}

fn err(line: usize, message: impl Into<String>) -> BaseFileError {
    BaseFileError {
        line,
        message: message.into(),
    }
}

type Section = BTreeMap<String, (usize, String)>;

/// Parsed but unvalidated contents of a base file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BaseFile {
    sections: BTreeMap<String, Section>,
}

impl BaseFile {
    pub fn parse(text: &str) -> Result<Self, BaseFileError> {
        let mut sections: BTreeMap<String, Section> = BTreeMap::new();
        let mut current: Option<String> = None;
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split(['#', ';']).next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let name = name.trim().to_string();
                if !matches!(name.as_str(), "field" | "base" | "symbolic") {
                    return Err(err(line_no, format!("unknown section [{name}]")));
                }
                if sections.contains_key(&name) {
                    return Err(err(line_no, format!("duplicate section [{name}]")));
                }
                sections.insert(name.clone(), Section::new());
                current = Some(name);
                continue;
            }
            let Some(section) = current.as_ref() else {
                return Err(err(line_no, "key outside of a section"));
            };
            let Some((key, value)) = line.split_once('=') else {
                return Err(err(line_no, "expected key = value"));
            };
            let key = key.trim().to_string();
            let entries = sections.get_mut(section).unwrap();
            if entries.contains_key(&key) {
                return Err(err(line_no, format!("duplicate key {key}")));
            }
            entries.insert(key, (line_no, value.trim().to_string()));
        }
        Ok(Self { sections })
    }

    pub fn build(&self) -> Result<AlternateBase, BaseFileError> {
        match (self.sections.get("base"), self.sections.get("symbolic")) {
            (Some(_), Some(_)) => Err(err(0, "both [base] and [symbolic] present")),
            (None, None) => Err(err(0, "missing [base] or [symbolic] section")),
            (Some(base), None) => self.build_explicit(base),
            (None, Some(sym)) => build_symbolic(sym),
        }
    }

    fn build_explicit(&self, base: &Section) -> Result<AlternateBase, BaseFileError> {
        let field = match self.sections.get("field") {
            None => RealAlgebraicField::rationals(),
            Some(f) => {
                let (line, minpoly) = required(f, "minpoly")?;
                let coeffs = parse_list(minpoly, *line)?;
                let (line, interval) = required(f, "root_interval")?;
                let ends = parse_list(interval, *line)?;
                let [lo, hi]: [BigRational; 2] = ends
                    .try_into()
                    .map_err(|_| err(*line, "root_interval needs two endpoints"))?;
                RealAlgebraicField::new(RationalPolynomial::new(coeffs), lo, hi)
                    .map_err(|e| err(*line, e.to_string()))?
            }
        };
        let p = period(base)?;
        let mut betas = Vec::with_capacity(p);
        for i in 1..=p {
            let (line, text) = required(base, &format!("beta.{i}"))?;
            let coords = parse_list(text, *line)?;
            let beta = FieldElement::new(&field, coords).map_err(|e| err(*line, e.to_string()))?;
            betas.push(beta);
        }
        check_extra(base, p, "beta")?;
        AlternateBase::new_explicit(&field, betas).map_err(|e| err(0, e.to_string()))
    }
}

fn build_symbolic(sym: &Section) -> Result<AlternateBase, BaseFileError> {
    let p = period(sym)?;
    let mut t = Vec::with_capacity(p);
    for i in 1..=p {
        let (line, text) = required(sym, &format!("t.{i}"))?;
        t.push(parse_digit_string(text).map_err(|e| err(*line, e.to_string()))?);
    }
    check_extra(sym, p, "t")?;
    AlternateBase::new_symbolic(t).map_err(|e| err(0, e.to_string()))
}

fn required<'a>(s: &'a Section, key: &str) -> Result<&'a (usize, String), BaseFileError> {
    s.get(key)
        .ok_or_else(|| err(0, format!("missing key {key}")))
}

fn period(s: &Section) -> Result<usize, BaseFileError> {
    let (line, text) = required(s, "period")?;
    match text.parse::<usize>() {
        Ok(p) if p >= 1 => Ok(p),
        _ => Err(err(*line, format!("invalid period {text:?}"))),
    }
}

fn check_extra(s: &Section, p: usize, prefix: &str) -> Result<(), BaseFileError> {
    for (key, (line, _)) in s {
        let known = key == "period"
            || key
                .strip_prefix(prefix)
                .and_then(|k| k.strip_prefix('.'))
                .and_then(|k| k.parse::<usize>().ok())
                .is_some_and(|i| (1..=p).contains(&i));
        if !known {
            return Err(err(*line, format!("unexpected key {key}")));
        }
    }
    Ok(())
}

/// Comma-separated exact numbers, optionally in brackets.
fn parse_list(text: &str, line: usize) -> Result<Vec<BigRational>, BaseFileError> {
    let inner = text.trim();
    let inner = inner
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(inner);
    inner
        .split(',')
        .map(|s| parse_rational(s.trim()).map_err(|m| err(line, m)))
        .collect()
}

/// Integers, fractions `a/b` and decimals `-1.25`, all exact.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let bad = || format!("invalid number {text:?}");
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(format!("zero denominator in {text:?}"));
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let v = BigRational::new(digits, scale);
    Ok(if neg { -v } else { v })
}

/// Reads and validates a base description.
pub fn parse_base_file(text: &str) -> Result<AlternateBase, BaseFileError> {
    BaseFile::parse(text)?.build()
}
