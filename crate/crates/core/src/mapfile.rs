//! Line-oriented mapping-spec files.
//!
//! ```text
//! harmonic-map v1 N=<degree>
//! a <n> <re> <im>
//! b <n> <re> <im>
//! ```
//!
//! `a` lines set coefficients of `h`, `b` lines those of `g`. Omitted
//! coefficients are zero, and a `(letter, n)` pair may appear at most once.
//! Blank lines and lines starting with `#` are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::map::HarmonicMap;
use crate::series::PowerSeries;

const MAGIC: &str = "harmonic-map";
const VERSION: &str = "v1";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line_no: usize, line: &str) -> Result<usize> {
    let mut fields = line.split_whitespace();
    if fields.next() != Some(MAGIC) {
        return Err(parse_error(
            line_no,
            format!("expected `{MAGIC} {VERSION} N=<int>` header"),
        ));
    }
    match fields.next() {
        Some(VERSION) => {}
        Some(other) => {
            return Err(parse_error(
                line_no,
                format!("unsupported version `{other}`"),
            ))
        }
        None => return Err(parse_error(line_no, "missing version")),
    }
    let degree = fields
        .next()
        .and_then(|f| f.strip_prefix("N="))
        .ok_or_else(|| parse_error(line_no, "missing `N=<int>`"))?;
    let degree = degree
        .parse::<usize>()
        .map_err(|e| parse_error(line_no, format!("bad truncation degree `{degree}`: {e}")))?;
    if let Some(extra) = fields.next() {
        return Err(parse_error(
            line_no,
            format!("unexpected token `{extra}` in header"),
        ));
    }
    Ok(degree)
}

fn parse_real(line_no: usize, token: &str, what: &str) -> Result<f64> {
    let value = token
        .parse::<f64>()
        .map_err(|_| parse_error(line_no, format!("bad {what} `{token}`")))?;
    if !value.is_finite() {
        return Err(parse_error(line_no, format!("non-finite {what} `{token}`")));
    }
    Ok(value)
}

/// Parses a mapping-spec document. `label` becomes the map's provenance string.
pub fn parse_map(text: &str, label: &str) -> Result<HarmonicMap> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "empty mapping-spec file"))?;
    let degree = parse_header(header_no, header)?;

    let mut h = PowerSeries::zero(degree);
    let mut g = PowerSeries::zero(degree);
    let mut seen = HashSet::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(parse_error(
                line_no,
                format!(
                    "expected `<a|b> <n> <re> <im>`, found {} fields",
                    fields.len()
                ),
            ));
        }
        let letter = match fields[0] {
            "a" => 'a',
            "b" => 'b',
            other => return Err(parse_error(line_no, format!("unknown series `{other}`"))),
        };
        let n = fields[1]
            .parse::<usize>()
            .map_err(|_| parse_error(line_no, format!("bad index `{}`", fields[1])))?;
        if n > degree {
            return Err(parse_error(
                line_no,
                format!("index {n} exceeds truncation degree {degree}"),
            ));
        }
        if !seen.insert((letter, n)) {
            return Err(parse_error(
                line_no,
                format!("duplicate coefficient {letter} {n}"),
            ));
        }
        let value = Complex64::new(
            parse_real(line_no, fields[2], "real part")?,
            parse_real(line_no, fields[3], "imaginary part")?,
        );
        match letter {
            'a' => h.set_coeff(n, value),
            _ => g.set_coeff(n, value),
        }
    }
    Ok(HarmonicMap::new(h, g, label))
}

/// Serializes the nonzero coefficients; floats use the shortest round-trip form.
pub fn write_map(f: &HarmonicMap) -> String {
    let mut out = format!("{MAGIC} {VERSION} N={}\n", f.degree());
    if !f.label.is_empty() {
        let _ = writeln!(out, "# {}", f.label);
    }
    for (letter, series) in [('a', &f.h), ('b', &f.g)] {
        for (n, c) in series.coeffs().iter().enumerate() {
            if c.re != 0.0 || c.im != 0.0 {
                let _ = writeln!(out, "{letter} {n} {:?} {:?}", c.re, c.im);
            }
        }
    }
    out
}
