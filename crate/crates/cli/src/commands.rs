//! Command implementations. Each returns the text to emit; the binary only
//! routes it to stdout or a file.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use w2chi_core::graph::{equivariant_euler_fg, omega2_cell_by_enumeration};
use w2chi_core::identities::{self, IdentityReport};
use w2chi_core::pipeline::{chi_fg, compare_with_closed, UTrunc};
use w2chi_core::series::{PLaurent, Q, Z};
use w2chi_core::weight2::{
    chi2_mg_series, is_unstable, laurent_series, omega2_closed, sign_pattern_violations,
    sign_sequence, Weight2Config,
};

use crate::args::{Format, LaurentKind, Suite};
use crate::error::{CliError, CliResult};
use crate::records::{write_csv, write_json, Basis, Coeff, OutputRecord};
use crate::render::render_table;

/// First genus of the period-four sign check.
pub const SIGN_CHECK_START: u32 = 23;

/// All `(g, n)` cells with `g ≤ max_genus`, `n ≤ max_points`, sorted.
pub fn omega2_records(max_genus: u32, max_points: u32, basis: Basis) -> CliResult<Vec<OutputRecord>> {
    let om = omega2_closed(&Weight2Config::new(max_genus, max_points))?;
    let mut out = Vec::new();
    for g in 0..=max_genus {
        for n in 0..=max_points {
            out.push(OutputRecord::from_cell(g, n, &om.cell(g, n), basis)?);
        }
    }
    Ok(out)
}

pub fn encode_records(records: &[OutputRecord], format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Text => render_table(records),
        Format::Json => {
            let mut buf = Vec::new();
            write_json(records, &mut buf)?;
            String::from_utf8(buf).expect("serde_json emits UTF-8")
        }
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(records, &mut buf)?;
            String::from_utf8(buf).expect("csv of UTF-8 fields")
        }
    })
}

pub fn cmd_omega2(max_genus: u32, max_points: u32, basis: Basis, format: Format) -> CliResult<String> {
    encode_records(&omega2_records(max_genus, max_points, basis)?, format)
}

/// `log(1 + |x|)` for plotting; exact digits are kept in the `chi2` column.
pub fn log1p_abs(x: &Z) -> f64 {
    let digits = x.to_string();
    let digits = digits.trim_start_matches('-');
    if digits.len() <= 15 {
        let v: f64 = digits.parse().expect("decimal digits");
        return v.ln_1p();
    }
    // mantissa from the leading digits, exponent from the length
    let lead: f64 = digits[..17].parse().expect("decimal digits");
    lead.ln() + (digits.len() - 17) as f64 * std::f64::consts::LN_10
}

/// One row of the `M_g` table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiMgRow {
    pub g: u32,
    pub chi2: Coeff,
    pub sign: i8,
    /// Decimal `log(1 + |chi2|)`, for plotting only.
    pub log1p_abs: f64,
}

pub fn chi_mg_rows(max_genus: u32) -> CliResult<Vec<ChiMgRow>> {
    let values = chi2_mg_series(max_genus)?;
    let signs = sign_sequence(&values);
    Ok(values
        .iter()
        .zip(signs)
        .enumerate()
        .map(|(g, (v, s))| ChiMgRow {
            g: g as u32,
            chi2: Coeff(Q::from_integer(v.clone())),
            sign: s,
            log1p_abs: log1p_abs(v),
        })
        .collect())
}

/// Summary of the period-four sign check on `23 ≤ g ≤ max_genus`.
pub fn sign_summary(max_genus: u32) -> CliResult<String> {
    if max_genus < SIGN_CHECK_START {
        return Ok(format!(
            "sign pattern: nothing to check below g = {SIGN_CHECK_START}"
        ));
    }
    let values = chi2_mg_series(max_genus)?;
    let bad = sign_pattern_violations(&values, SIGN_CHECK_START, max_genus);
    Ok(if bad.is_empty() {
        format!(
            "sign pattern (-,-,+,+) for g = 0,1,2,3 mod 4 holds for {SIGN_CHECK_START} <= g <= {max_genus}"
        )
    } else {
        format!("sign pattern fails at g = {bad:?}")
    })
}

pub fn cmd_chi_mg(max_genus: u32, format: Format) -> CliResult<String> {
    let rows = chi_mg_rows(max_genus)?;
    Ok(match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["g", "chi2", "sign", "log1p_abs"])?;
            for r in &rows {
                w.write_record([
                    r.g.to_string(),
                    r.chi2.to_string(),
                    r.sign.to_string(),
                    format!("{:.6}", r.log1p_abs),
                ])?;
            }
            let buf = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            String::from_utf8(buf).expect("csv of UTF-8 fields")
        }
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Text => {
            let width = rows.iter().map(|r| r.chi2.to_string().len()).max().unwrap_or(4).max(4);
            let mut s = format!("{:>4}  {:>width$}  sign  log1p_abs\n", "g", "chi2");
            for r in &rows {
                writeln!(s, "{:>4}  {:>width$}  {:>4}  {:.6}", r.g, r.chi2.to_string(), r.sign, r.log1p_abs)
                    .expect("write to string");
            }
            s
        }
    })
}

pub fn laurent_poly(what: LaurentKind, genus: u32) -> CliResult<PLaurent> {
    if genus == 0 {
        return Err(CliError::Usage("the Laurent polynomials start at genus 1".into()));
    }
    let ac = laurent_series(genus);
    Ok(match what {
        LaurentKind::A => ac.a(genus).clone(),
        LaurentKind::C => ac.c(genus).clone(),
    })
}

pub fn cmd_laurent(what: LaurentKind, genus: u32) -> CliResult<String> {
    Ok(format!("{}\n", laurent_poly(what, genus)?))
}

fn report(name: &str, failure: Option<String>, detail: String) -> IdentityReport {
    IdentityReport {
        name: name.to_string(),
        passed: failure.is_none(),
        detail: failure.unwrap_or(detail),
    }
}

/// Pipeline against the closed form, cell by cell.
pub fn pipeline_checks(max_genus: u32, max_points: u32) -> CliResult<Vec<IdentityReport>> {
    let diff = compare_with_closed(&Weight2Config::new(max_genus, max_points))?;
    Ok(vec![report(
        "pipeline-vs-closed",
        diff,
        format!("g <= {max_genus}, n <= {max_points}"),
    )])
}

/// Largest `2g + n` the graph enumeration is asked to handle.
pub const ORACLE_COMPLEXITY: u32 = 6;

/// Brute-force enumeration against the closed form on every stable cell
/// with `2g + n ≤ 6` inside the bounds, and the legless graph complex
/// against its product formula.
pub fn oracle_checks(max_genus: u32, max_points: u32) -> CliResult<Vec<IdentityReport>> {
    let om = omega2_closed(&Weight2Config::new(max_genus, max_points))?;
    let mut out = Vec::new();
    for g in 0..=max_genus {
        for n in 0..=max_points {
            if is_unstable(g, n) || 2 * g + n > ORACLE_COMPLEXITY {
                continue;
            }
            let brute = omega2_cell_by_enumeration(g, n)?;
            let failure = (!(&brute - &om.cell(g, n)).is_zero())
                .then(|| format!("enumeration gives {brute}, closed form {}", om.cell(g, n)));
            out.push(report(&format!("graphs-cell-{g}-{n}"), failure, "exact".into()));
        }
    }
    let (c_max, r_max) = (3u32, 5u32);
    let f = chi_fg(&UTrunc::new(c_max as i32, r_max))?;
    let mut failure = None;
    'outer: for c in 0..=c_max {
        for r in 0..=(2 * c).min(r_max) {
            let brute = equivariant_euler_fg(c, r)?;
            if !(&brute - &f.coeff(c as i32, 0).weight_part(r)).is_zero() {
                failure = Some(format!("complexity {c}, {r} legs"));
                break 'outer;
            }
        }
    }
    out.push(report(
        "legless-graphs-vs-product",
        failure,
        format!("complexity <= {c_max}, legs <= {r_max}"),
    ));
    Ok(out)
}

pub fn run_suite(suite: Suite, max_genus: u32, max_points: u32) -> CliResult<Vec<IdentityReport>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        out.extend(identities::run_all()?);
    }
    if matches!(suite, Suite::Pipeline | Suite::All) {
        out.extend(pipeline_checks(max_genus, max_points)?);
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        out.extend(oracle_checks(max_genus, max_points)?);
    }
    Ok(out)
}

/// Renders reports one per line; `Err` if any failed, carrying the text.
pub fn cmd_verify(suite: Suite, max_genus: u32, max_points: u32) -> CliResult<String> {
    let reports = run_suite(suite, max_genus, max_points)?;
    let mut s = String::new();
    for r in &reports {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        writeln!(s, "{tag} {} ({})", r.name, r.detail).expect("write to string");
    }
    match reports.iter().find(|r| !r.passed) {
        None => Ok(s),
        Some(r) => Err(CliError::Verification(format!("{s}first failure: {}: {}", r.name, r.detail))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_rendering() {
        assert!((log1p_abs(&Z::from(-1)) - 2f64.ln()).abs() < 1e-12);
        let big: Z = "60477318015911247931156".parse().unwrap();
        let exact = 60477318015911247931156f64.ln();
        assert!((log1p_abs(&big) - exact).abs() < 1e-9);
    }

    #[test]
    fn genus_zero_laurent_is_rejected() {
        assert_eq!(laurent_poly(LaurentKind::A, 0).unwrap_err().exit_code(), 2);
    }
}
