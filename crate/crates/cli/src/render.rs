//! Output rendering: plain text, CSV, JSON and LaTeX.
//!
//! Rationals always print decimal-free (`5/2`, never `2.5`); floats appear
//! only in `matrix` output. All output is a pure function of the run
//! configuration, so identical invocations are byte-identical.

use clap::ValueEnum;
use serde::Serialize;

use rpq_core::{Rational, UPoly, ZPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Latex,
}

pub fn rat_str(r: &Rational) -> String {
    r.to_string()
}

/// `5/2` as a LaTeX fraction, integers as-is.
pub fn rat_latex(r: &Rational) -> String {
    if r.denom() == &1.into() {
        r.numer().to_string()
    } else if r.numer() < &0.into() {
        format!("-\\tfrac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Human polynomial string: `1 + 5/2 z + z^2`.
pub fn zpoly_plain(poly: &ZPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let one = Rational::from_integer(1.into());
    let mut out = String::new();
    for (k, c) in poly.terms() {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let unit = *c == one;
        match (k, unit) {
            (0, _) => out.push_str(&rat_str(c)),
            (1, true) => out.push('z'),
            (1, false) => out.push_str(&format!("{} z", rat_str(c))),
            (_, true) => out.push_str(&format!("z^{k}")),
            (_, false) => out.push_str(&format!("{} z^{k}", rat_str(c))),
        }
    }
    out
}

pub fn zpoly_latex(poly: &ZPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let one = Rational::from_integer(1.into());
    let mut out = String::new();
    for (k, c) in poly.terms() {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let unit = *c == one;
        match (k, unit) {
            (0, _) => out.push_str(&rat_latex(c)),
            (1, true) => out.push('z'),
            (1, false) => out.push_str(&format!("{} z", rat_latex(c))),
            (_, true) => out.push_str(&format!("z^{{{k}}}")),
            (_, false) => out.push_str(&format!("{} z^{{{k}}}", rat_latex(c))),
        }
    }
    out
}

/// Cosine-form string: `2cos2θ + 5/2` from descending `(m, c)` pairs,
/// where each `m > 0` entry stands for `c * 2cos(m θ)`.
pub fn cosine_plain(pairs: &[(i64, Rational)]) -> String {
    if pairs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in pairs {
        let negative = c < &Rational::from_integer(0.into());
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if *m == 0 {
            out.push_str(&rat_str(&magnitude));
            continue;
        }
        let doubled = &magnitude + &magnitude;
        let angle = if *m == 1 {
            "cosθ".to_string()
        } else {
            format!("cos{m}θ")
        };
        if doubled == Rational::from_integer(1.into()) {
            out.push_str(&angle);
        } else {
            out.push_str(&format!("{}{}", rat_str(&doubled), angle));
        }
    }
    out
}

/// Cosine-form LaTeX: `2\cos2\theta + \tfrac{5}{2}`.
pub fn cosine_latex(pairs: &[(i64, Rational)]) -> String {
    if pairs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in pairs {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if *m == 0 {
            out.push_str(&rat_latex(c));
            continue;
        }
        let doubled = c + c;
        let angle = if *m == 1 {
            "\\cos\\theta".to_string()
        } else {
            format!("\\cos{m}\\theta")
        };
        if doubled == Rational::from_integer(1.into()) {
            out.push_str(&angle);
        } else {
            out.push_str(&format!("{}{}", rat_latex(&doubled), angle));
        }
    }
    out
}

/// The Laurent terms of a u-polynomial as `[m, "c"]` pairs, ascending m.
pub fn upoly_pairs(h: &UPoly) -> Vec<(i64, String)> {
    h.terms().map(|(m, c)| (m, rat_str(c))).collect()
}

/// One CSV line from fields (no quoting: every field this tool emits is a
/// rational literal, an integer or a bare identifier).
pub fn csv_line(fields: &[String]) -> String {
    fields.join(",")
}

/// A LaTeX tabular environment from a header and rows.
pub fn latex_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let spec = "r".repeat(header.len());
    out.push_str(&format!("\\begin{{tabular}}{{{spec}}}\n"));
    out.push_str(&format!("{} \\\\\n\\hline\n", header.join(" & ")));
    for row in rows {
        out.push_str(&format!("{} \\\\\n", row.join(" & ")));
    }
    out.push_str("\\end{tabular}");
    out
}

/// Serialize any JSON payload deterministically (struct field order).
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("JSON serialization cannot fail")
}
