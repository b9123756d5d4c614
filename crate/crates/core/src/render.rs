//! Output formats for formulas, tables and Bernoulli numbers.

use std::fmt::Write;

use clap::ValueEnum;
use num_rational::Ratio;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{format_rational, parse_rational, ArithError};
use crate::poly::Polynomial;
use crate::scalar::ExactInteger;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
    Csv,
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("malformed formula JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Coefficient(#[from] ArithError),
    #[error("terms must be listed by strictly decreasing power with nonzero coefficients")]
    NonCanonicalTerms,
}

/// `{"power": k, "coefficient": "p/q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub power: usize,
    pub coefficient: String,
}

/// `{"r": r, "terms": [...]}` with terms in descending power.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaRecord {
    pub r: usize,
    pub terms: Vec<TermRecord>,
}

impl FormulaRecord {
    pub fn from_polynomial<I: ExactInteger>(r: usize, poly: &Polynomial<Ratio<I>>) -> Self {
        FormulaRecord {
            r,
            terms: poly
                .terms_descending()
                .map(|(power, c)| TermRecord {
                    power,
                    coefficient: format_rational(c),
                })
                .collect(),
        }
    }

    /// Rebuilds the polynomial, rejecting anything this crate would not emit
    /// (unsorted or repeated powers, zero coefficients).
    pub fn to_polynomial<I: ExactInteger>(&self) -> Result<Polynomial<Ratio<I>>, RenderError> {
        let sorted = self.terms.windows(2).all(|w| w[0].power > w[1].power);
        if !sorted {
            return Err(RenderError::NonCanonicalTerms);
        }
        let mut poly = Polynomial::zero();
        for term in &self.terms {
            let c: Ratio<I> = parse_rational(&term.coefficient)?;
            if num_traits::Zero::is_zero(&c) {
                return Err(RenderError::NonCanonicalTerms);
            }
            poly = poly.with_coeff(term.power, c);
        }
        Ok(poly)
    }
}

pub fn formula_json<I: ExactInteger>(r: usize, poly: &Polynomial<Ratio<I>>) -> String {
    serde_json::to_string(&FormulaRecord::from_polynomial(r, poly)).expect("plain data serializes")
}

pub fn parse_formula_json<I: ExactInteger>(s: &str) -> Result<(usize, Polynomial<Ratio<I>>), RenderError> {
    let record: FormulaRecord = serde_json::from_str(s)?;
    let poly = record.to_polynomial()?;
    Ok((record.r, poly))
}

fn latex_magnitude<I: ExactInteger>(c: &Ratio<I>) -> String {
    let c = c.abs();
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn latex_rational<I: ExactInteger>(c: &Ratio<I>) -> String {
    let sign = if c.is_negative() { "-" } else { "" };
    format!("{sign}{}", latex_magnitude(c))
}

/// e.g. `\frac{1}{5}N^{5} + \frac{1}{2}N^{4} + \frac{1}{3}N^{3} - \frac{1}{30}N`.
pub fn formula_latex<I: ExactInteger>(poly: &Polynomial<Ratio<I>>) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (power, c)) in poly.terms_descending().enumerate() {
        out.push_str(match (idx, c.is_negative()) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let unit = c.abs().is_one();
        if power == 0 || !unit {
            out.push_str(&latex_magnitude(c));
        }
        match power {
            0 => {}
            1 => out.push('N'),
            k => write!(out, "N^{{{k}}}").unwrap(),
        }
    }
    out
}

pub fn formula_csv<I: ExactInteger>(poly: &Polynomial<Ratio<I>>) -> String {
    let mut out = String::from("power,coefficient\n");
    for (power, c) in poly.terms_descending() {
        writeln!(out, "{power},{}", format_rational(c)).unwrap();
    }
    out
}

pub fn render_formula<I: ExactInteger>(r: usize, poly: &Polynomial<Ratio<I>>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => format!("{poly}\n"),
        OutputFormat::Latex => format!("{}\n", formula_latex(poly)),
        OutputFormat::Json => format!("{}\n", formula_json(r, poly)),
        OutputFormat::Csv => formula_csv(poly),
    }
}

/// All of `S(N; 0..=r_max)`, one per line (or row).
pub fn render_table<I: ExactInteger>(sums: &[Polynomial<Ratio<I>>], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (r, poly) in sums.iter().enumerate() {
                writeln!(out, "S(N;{r}) = {poly}").unwrap();
            }
        }
        OutputFormat::Latex => {
            for (r, poly) in sums.iter().enumerate() {
                writeln!(out, "\\sum_{{n=1}}^{{N}} n^{{{r}}} = {} \\\\", formula_latex(poly)).unwrap();
            }
        }
        OutputFormat::Json => {
            let records: Vec<_> = sums
                .iter()
                .enumerate()
                .map(|(r, poly)| FormulaRecord::from_polynomial(r, poly))
                .collect();
            out = serde_json::to_string(&records).expect("plain data serializes");
            out.push('\n');
        }
        OutputFormat::Csv => {
            out.push_str("r,power,coefficient\n");
            for (r, poly) in sums.iter().enumerate() {
                for (power, c) in poly.terms_descending() {
                    writeln!(out, "{r},{power},{}", format_rational(c)).unwrap();
                }
            }
        }
    }
    out
}

#[derive(Serialize)]
struct BernoulliRecord {
    j: usize,
    value: String,
}

#[derive(Serialize)]
struct BernoulliTable {
    convention: &'static str,
    values: Vec<BernoulliRecord>,
}

/// `B_0..` in the requested format. Text and CSV share the `j,p/q` rows;
/// CSV adds a header line.
pub fn render_bernoulli<I: ExactInteger>(values: &[Ratio<I>], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            if format == OutputFormat::Csv {
                out.push_str("j,value\n");
            }
            for (j, b) in values.iter().enumerate() {
                writeln!(out, "{j},{}", format_rational(b)).unwrap();
            }
        }
        OutputFormat::Latex => {
            for (j, b) in values.iter().enumerate() {
                writeln!(out, "B_{{{j}}} = {} \\\\", latex_rational(b)).unwrap();
            }
        }
        OutputFormat::Json => {
            let table = BernoulliTable {
                convention: "B1=-1/2",
                values: values
                    .iter()
                    .enumerate()
                    .map(|(j, b)| BernoulliRecord {
                        j,
                        value: format_rational(b),
                    })
                    .collect(),
            };
            out = serde_json::to_string(&table).expect("plain data serializes");
            out.push('\n');
        }
    }
    out
}
