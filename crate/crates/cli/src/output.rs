//! Report types and their JSON, CSV and text renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use vroots_core::poly::Rational;

use crate::error::CliResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One virtual root. `lo` and `hi` are exact rationals; `decimal` is for
/// reading only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub key: String,
    pub lo: String,
    pub hi: String,
    pub defining: String,
    pub provenance: usize,
    pub decimal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_nonempty: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_nonempty: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootsReport {
    pub degree: usize,
    pub family: &'static str,
    pub entries: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_d: Option<usize>,
}

impl RootsReport {
    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => json(self),
            Format::Csv => self.csv(),
            Format::Text => Ok(self.text()),
        }
    }

    fn has_sets(&self) -> bool {
        self.entries.iter().any(|e| e.f_nonempty.is_some())
    }

    fn csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["key", "lo", "hi", "defining", "provenance", "decimal"];
        if self.has_sets() {
            header.extend(["f_nonempty", "u_nonempty"]);
        }
        w.write_record(&header)?;
        for e in &self.entries {
            let mut rec = vec![
                e.key.clone(),
                e.lo.clone(),
                e.hi.clone(),
                e.defining.clone(),
                e.provenance.to_string(),
                e.decimal.clone(),
            ];
            if self.has_sets() {
                rec.push(flag(e.f_nonempty));
                rec.push(flag(e.u_nonempty));
            }
            w.write_record(&rec)?;
        }
        finish_csv(w)
    }

    fn text(&self) -> String {
        let name = if self.family == "rth" { "r-th" } else { "Thom" };
        let mut out = format!("degree {}, {name} virtual roots\n", self.degree);
        let kw = self.entries.iter().map(|e| e.key.len()).max().unwrap_or(0);
        let dw = self.entries.iter().map(|e| e.decimal.len()).max().unwrap_or(0);
        for e in &self.entries {
            let _ = write!(
                out,
                "{:>kw$}  {:>dw$}  level {}  [{}, {}]  {}",
                e.key, e.decimal, e.provenance, e.lo, e.hi, e.defining
            );
            if let (Some(f), Some(u)) = (e.f_nonempty, e.u_nonempty) {
                let _ = write!(out, "  F {}  U {}", yes_no(f), yes_no(u));
            }
            out.push('\n');
        }
        if let (Some(n), Some(s)) = (self.distinct_count, self.s_d) {
            let _ = writeln!(out, "distinct values: {n} (s(d) = {s})");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub x: String,
    pub j: usize,
    pub lo: String,
    pub hi: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub degree: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["x", "j", "lo", "hi"])?;
                for r in &self.rows {
                    w.write_record([&r.x, &r.j.to_string(), &r.lo, &r.hi])?;
                }
                finish_csv(w)
            }
            Format::Text => Ok(self
                .rows
                .iter()
                .map(|r| format!("{} {} {} {}\n", r.x, r.j, r.lo, r.hi))
                .collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModulusReport {
    pub m: String,
    pub epsilon: String,
    pub d: usize,
    pub omega: String,
    pub decimal: String,
}

impl ModulusReport {
    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["m", "epsilon", "d", "omega", "decimal"])?;
                w.write_record([&self.m, &self.epsilon, &self.d.to_string(), &self.omega, &self.decimal])?;
                finish_csv(w)
            }
            Format::Text => Ok(format!("{}\n", self.omega)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub polynomial: String,
    pub degree: usize,
    pub seed: u64,
    pub passed: bool,
    pub items: Vec<CheckLine>,
}

impl CheckSummary {
    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["check", "passed", "violations"])?;
                for item in &self.items {
                    w.write_record([
                        item.name.as_str(),
                        &item.passed.to_string(),
                        &item.violations.len().to_string(),
                    ])?;
                }
                finish_csv(w)
            }
            Format::Text => {
                let mut out = String::new();
                for item in &self.items {
                    let tag = if item.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{tag} {}", item.name);
                    for v in &item.violations {
                        let _ = writeln!(out, "    {v}");
                    }
                }
                let _ = writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" });
                Ok(out)
            }
        }
    }
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn flag(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "nonempty"
    } else {
        "empty"
    }
}

/// `10^-digits`.
pub fn ten_to_minus(digits: u32) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(10).pow(digits))
}

/// Largest decimal with `digits` places that is `<= q`.
pub fn floor_decimal(q: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let n = (q * Rational::from_integer(scale)).floor().to_integer();
    scaled_to_string(n, digits)
}

/// Smallest decimal with `digits` places that is `>= q`.
pub fn ceil_decimal(q: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let n = (q * Rational::from_integer(scale)).ceil().to_integer();
    scaled_to_string(n, digits)
}

/// Reads back a decimal written by this module, such as `-2.95`.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() || !(whole.chars().chain(frac.chars())).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = format!("{whole}{frac}").parse().ok()?;
    let q = Rational::new(n, BigInt::from(10).pow(frac.len() as u32));
    Some(if neg { -q } else { q })
}

/// `n / 10^digits` in positional notation without trailing zeros.
fn scaled_to_string(n: BigInt, digits: u32) -> String {
    if n.is_zero() {
        return "0".into();
    }
    let neg = n.is_negative();
    let s = format!("{:0>width$}", n.abs().to_string(), width = digits as usize + 1);
    let (whole, frac) = s.split_at(s.len() - digits as usize);
    let frac = frac.trim_end_matches('0');
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(whole);
    if !frac.is_empty() {
        out.push('.');
        out.push_str(frac);
    }
    out
}
