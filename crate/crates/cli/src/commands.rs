//! The six subcommands. Each returns the rendered output; `main` decides
//! where it goes.

use rayon::prelude::*;
use vroots_core::analysis::{modulus as omega, thom_table};
use vroots_core::check::check_polynomial;
use vroots_core::poly::{int, Poly, Rational};
use vroots_core::realalg::{decimal_string, RealAlgebraic};
use vroots_core::vroots::{all_rth_roots, f_nonempty, thom_rho, u_nonempty, SignList};
use vroots_core::{Error, VirtualRoot};

use crate::bipoly::BiPoly;
use crate::error::{CliError, CliResult};
use crate::output::{
    ceil_decimal, floor_decimal, ten_to_minus, CheckLine, CheckSummary, Entry, Format,
    ModulusReport, RootsReport, SweepReport, SweepRow,
};
use crate::parse::{parse_bivariate, parse_poly, parse_rational};

/// Largest accepted `--precision`.
pub const MAX_PRECISION: u32 = 1000;

fn check_precision(precision: u32) -> CliResult<()> {
    if precision > MAX_PRECISION {
        return Err(CliError::Precondition(format!(
            "precision {precision} exceeds {MAX_PRECISION}"
        )));
    }
    Ok(())
}

fn monic(expr: &str) -> CliResult<Poly> {
    let p = parse_poly(expr)?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }
    if !p.is_monic() {
        return Err(Error::NotMonic.into());
    }
    if p.deg() == 0 {
        return Err(Error::BadDegree(0).into());
    }
    Ok(p)
}

fn entry(v: &VirtualRoot, precision: u32) -> Entry {
    let (lo, hi) = v.value.enclosure(&ten_to_minus(precision));
    Entry {
        key: v.key.to_string(),
        lo: lo.to_string(),
        hi: hi.to_string(),
        defining: v.value.defining().to_string(),
        provenance: v.level,
        decimal: v.value.to_decimal(precision),
        f_nonempty: None,
        u_nonempty: None,
    }
}

/// Every `ρ_{d,j}(P)`, `j = 1..d`.
pub fn roots(expr: &str, format: Format, precision: u32) -> CliResult<String> {
    check_precision(precision)?;
    let p = monic(expr)?;
    let entries = all_rth_roots(&p)?
        .iter()
        .map(|v| entry(v, precision))
        .collect();
    RootsReport {
        degree: p.deg(),
        family: "rth",
        entries,
        distinct_count: None,
        s_d: None,
    }
    .render(format)
}

/// Reads a code for degree `d`: either the tail `σ_1..σ_{d-1}` or the full
/// code starting with `+`.
pub fn sigma_for_degree(s: &str, d: usize) -> CliResult<SignList> {
    let n = s
        .chars()
        .filter(|c| !matches!(c, '[' | ']' | ',' | ' '))
        .count();
    let sigma = if n + 1 == d {
        SignList::from_tail(s)?
    } else if n == d {
        SignList::parse(s)?
    } else {
        return Err(Error::SignListLength {
            expected: d - 1,
            got: n,
        }
        .into());
    };
    Ok(sigma)
}

/// `ρ_σ(P)` with the nonemptiness of `F_σ` and `U_σ` for `P^{[d-1]}`.
pub fn thom(expr: &str, sigma: &str, format: Format, precision: u32) -> CliResult<String> {
    check_precision(precision)?;
    let p = monic(expr)?;
    let d = p.deg();
    let sigma = sigma_for_degree(sigma, d)?;
    let v = thom_rho(&p, &sigma)?;
    let dp = p.normalized_derivative(d - 1)?;
    let mut e = entry(&v, precision);
    e.f_nonempty = Some(f_nonempty(&dp, &sigma)?);
    e.u_nonempty = Some(u_nonempty(&dp, &sigma)?);
    RootsReport {
        degree: d,
        family: "thom",
        entries: vec![e],
        distinct_count: None,
        s_d: None,
    }
    .render(format)
}

/// All `2^{d-1}` Thom virtual roots with the distinct count.
pub fn table(expr: &str, format: Format, precision: u32) -> CliResult<String> {
    check_precision(precision)?;
    let p = monic(expr)?;
    let t = thom_table(&p)?;
    let entries = t
        .rows
        .iter()
        .map(|row| {
            let mut e = entry(&row.root, precision);
            e.f_nonempty = Some(row.f_nonempty);
            e.u_nonempty = Some(row.u_nonempty);
            e
        })
        .collect();
    RootsReport {
        degree: t.degree,
        family: "thom",
        entries,
        distinct_count: Some(t.distinct_count),
        s_d: Some(t.s_d()),
    }
    .render(format)
}

/// `steps` equally spaced samples from `lo` to `hi`; a single sample at
/// `lo` when `steps = 1`.
pub fn sample_points(lo: &Rational, hi: &Rational, steps: usize) -> CliResult<Vec<Rational>> {
    if steps == 0 {
        return Err(CliError::Precondition("steps must be at least 1".into()));
    }
    if lo > hi {
        return Err(CliError::Precondition(format!("empty range [{lo}, {hi}]")));
    }
    if steps == 1 {
        return Ok(vec![lo.clone()]);
    }
    let step = (hi - lo) / int(steps as i64 - 1);
    Ok((0..steps).map(|i| lo + &step * int(i as i64)).collect())
}

/// Enclosures of `ρ_{d,j}(P(x, ·))` at each sample. Decimal endpoints are
/// rounded outward, and the rounded interval is still narrower than
/// `10^-precision`.
pub fn sweep_rows(p: &BiPoly, xs: &[Rational], precision: u32) -> CliResult<Vec<SweepRow>> {
    if !p.is_y_monic() {
        return Err(CliError::Precondition(
            "sweep needs a polynomial monic in y".into(),
        ));
    }
    check_precision(precision)?;
    let width = ten_to_minus(precision + 1);
    let digits = precision + 2;
    let columns: Vec<Vec<SweepRow>> = xs
        .par_iter()
        .map(|x| {
            let slice = p.at_x(x);
            let label = decimal_label(x, digits);
            Ok(all_rth_roots(&slice)?
                .iter()
                .map(|v| {
                    let (lo, hi) = v.value.enclosure(&width);
                    SweepRow {
                        x: label.clone(),
                        j: match v.key {
                            vroots_core::RootKey::Rank(j) => j,
                            vroots_core::RootKey::Code(_) => unreachable!("r-th roots are ranked"),
                        },
                        lo: floor_decimal(&lo, digits),
                        hi: ceil_decimal(&hi, digits),
                    }
                })
                .collect())
        })
        .collect::<CliResult<_>>()?;
    // `collect` keeps sample order and each column is already sorted by j.
    Ok(columns.into_iter().flatten().collect())
}

fn decimal_label(x: &Rational, digits: u32) -> String {
    let s = decimal_string(x, digits);
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" { "0".into() } else { t.into() }
    } else {
        s
    }
}

pub fn sweep(
    expr: &str,
    x_lo: &str,
    x_hi: &str,
    steps: usize,
    format: Format,
    precision: u32,
) -> CliResult<String> {
    let p = parse_bivariate(expr)?;
    let lo = parse_rational(x_lo)?;
    let hi = parse_rational(x_hi)?;
    let xs = sample_points(&lo, &hi, steps)?;
    let rows = sweep_rows(&p, &xs, precision)?;
    SweepReport {
        degree: p.y_degree(),
        rows,
    }
    .render(format)
}

pub fn modulus(m: &str, eps: &str, d: usize, format: Format, precision: u32) -> CliResult<String> {
    check_precision(precision)?;
    let mq = parse_rational(m)?;
    let eq = parse_rational(eps)?;
    let w = omega(&mq, &eq, d)?;
    ModulusReport {
        m: mq.to_string(),
        epsilon: eq.to_string(),
        d,
        omega: w.to_string(),
        decimal: RealAlgebraic::from_rational(w.clone()).to_decimal(precision),
    }
    .render(format)
}

/// The rendered report and whether every check passed.
pub fn check(expr: &str, seed: u64, format: Format) -> CliResult<(String, bool)> {
    let p = monic(expr)?;
    let report = check_polynomial(&p, seed)?;
    let summary = CheckSummary {
        polynomial: p.to_string(),
        degree: p.deg(),
        seed,
        passed: report.passed(),
        items: report
            .items
            .iter()
            .map(|i| CheckLine {
                name: i.name.to_string(),
                passed: i.passed(),
                violations: i.violations.clone(),
            })
            .collect(),
    };
    Ok((summary.render(format)?, summary.passed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::output::parse_decimal;
    use serde_json::Value;
    use vroots_core::poly::rat;

    fn json(s: CliResult<String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn roots_examples() {
        let v = json(roots("x^2+1", Format::Json, 9));
        assert_eq!(v["degree"], 2);
        assert_eq!(v["family"], "rth");
        let e = v["entries"].as_array().unwrap();
        assert_eq!(e.len(), 2);
        for x in e {
            assert_eq!(x["lo"], "0");
            assert_eq!(x["hi"], "0");
            assert_eq!(x["provenance"], 1);
        }

        let v = json(roots("(x-1)*(x-2)", Format::Json, 9));
        let e = v["entries"].as_array().unwrap();
        assert_eq!((e[0]["lo"].as_str(), e[1]["lo"].as_str()), (Some("1"), Some("2")));
        assert_eq!(e[0]["provenance"], 2);

        // One actual root, two values from lower derivative levels.
        let v = json(roots("x^3+3*x+2", Format::Json, 9));
        let levels: Vec<u64> = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["provenance"].as_u64().unwrap())
            .collect();
        assert_eq!(levels.iter().filter(|&&l| l == 3).count(), 1);
        assert_eq!(levels.len(), 3);
    }

    #[test]
    fn roots_errors() {
        assert_eq!(roots("2*x^2+1", Format::Json, 9).unwrap_err().exit_code(), 3);
        assert_eq!(roots("x^2+", Format::Json, 9).unwrap_err().exit_code(), 2);
        assert_eq!(roots("1.5*x", Format::Json, 9).unwrap_err().exit_code(), 2);
        assert_eq!(roots("3", Format::Json, 9).unwrap_err().exit_code(), 3);
        assert_eq!(roots("x*y", Format::Json, 9).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn enclosure_width_follows_precision() {
        let v = json(roots("x^2-2", Format::Json, 12));
        let e = &v["entries"][1];
        let lo = parse_rational(e["lo"].as_str().unwrap()).unwrap();
        let hi = parse_rational(e["hi"].as_str().unwrap()).unwrap();
        assert!(&hi - &lo < ten_to_minus(12));
        assert!(&lo * &lo < int(2) && &hi * &hi > int(2));
        assert_eq!(e["decimal"], "1.414213562373");
    }

    #[test]
    fn thom_examples() {
        for code in ["+", "++", "[+,+]"] {
            let v = json(thom("x^2-2", code, Format::Json, 9));
            let e = &v["entries"][0];
            assert_eq!(e["key"], "++");
            assert_eq!(e["decimal"], "1.414213562");
            assert!(e.get("f_nonempty").is_some() && e.get("u_nonempty").is_some());
        }
        let err = thom("x^3-2", "+", Format::Json, 9).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert_eq!(thom("x^2-2", "+*", Format::Json, 9).unwrap_err().exit_code(), 3);
        assert_eq!(thom("x^2-2", "-+", Format::Json, 9).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn table_examples() {
        let v = json(table("x^2+1", Format::Json, 9));
        assert_eq!(v["distinct_count"], 1);
        assert_eq!(v["s_d"], 2);
        assert_eq!(v["entries"].as_array().unwrap().len(), 2);

        let w = vroots_core::fixtures::witness(3).unwrap().to_string();
        let v = json(table(&w, Format::Json, 9));
        assert_eq!(v["distinct_count"], 4);
        assert_eq!(v["s_d"], vroots_core::analysis::s_of(3));
        let keys: Vec<&str> = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["key"].as_str().unwrap())
            .collect();
        assert_eq!(keys, ["+-+", "+--", "++-", "+++"]);
    }

    #[test]
    fn sweep_slices() {
        let e41 = "((x-1)^2+(y+1)^2-2)*((x+1)^2+(y-1)^2-2)";
        let csv = sweep(e41, "0", "0", 1, Format::Csv, 9).unwrap();
        assert_eq!(csv, "x,j,lo,hi\n0,1,-2,-2\n0,2,0,0\n0,3,0,0\n0,4,2,2\n");

        let csv = sweep(e41, "3", "3", 1, Format::Csv, 9).unwrap();
        assert_eq!(csv.lines().count(), 5);
        for line in csv.lines().skip(1) {
            let f: Vec<&str> = line.split(',').collect();
            let lo = parse_decimal(f[2]).unwrap();
            let hi = parse_decimal(f[3]).unwrap();
            assert!(lo <= hi && &hi - &lo < ten_to_minus(9), "{line}");
        }

        let xs = sample_points(&int(-3), &int(3), 121).unwrap();
        assert_eq!(xs.len(), 121);
        assert_eq!(xs[1], rat(-59, 20));
        assert_eq!(xs[120], int(3));
        assert_eq!(sample_points(&int(1), &int(2), 1).unwrap(), vec![int(1)]);
        assert!(sample_points(&int(1), &int(2), 0).is_err());
        assert!(sample_points(&int(2), &int(1), 3).is_err());

        assert_eq!(sweep("2*y^2+x", "0", "1", 2, Format::Csv, 9).unwrap_err().exit_code(), 3);
        assert_eq!(sweep("x^2", "0", "1", 2, Format::Csv, 9).unwrap_err().exit_code(), 3);
        assert_eq!(sweep("y^2+x", "0.5", "1", 2, Format::Csv, 9).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn decimal_labels() {
        assert_eq!(decimal_label(&rat(-59, 20), 11), "-2.95");
        assert_eq!(decimal_label(&int(0), 11), "0");
        assert_eq!(decimal_label(&rat(1, 3), 4), "0.3333");
        assert_eq!(decimal_label(&rat(-1, 100000), 2), "0");
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(modulus("1", "1/2", 1, Format::Text, 9).unwrap(), "1/2\n");
        let v = json(modulus("1", "1/10", 2, Format::Json, 9));
        // 2 (1/10 / 18)^2
        assert_eq!(v["omega"], "1/16200");
        assert_eq!(modulus("1/2", "1", 1, Format::Text, 9).unwrap_err().exit_code(), 3);
        assert_eq!(modulus("1", "0", 1, Format::Text, 9).unwrap_err().exit_code(), 3);
        assert_eq!(modulus("1", "1", 0, Format::Text, 9).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn check_examples() {
        for e in ["(x-1)*(x-2)*(x-3)", "x^4+1"] {
            let (text, ok) = check(e, 0, Format::Text).unwrap();
            assert!(ok, "{text}");
            assert_eq!(text.lines().last(), Some("PASS"));
        }
    }
}
