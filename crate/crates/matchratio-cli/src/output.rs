//! Renderers for the text, JSON, and CSV output formats.
//!
//! Text decimals use 12 significant digits; JSON decimals are full-precision
//! `{:.16e}` strings so output is stable across platforms. Exact rationals
//! always render as `p/q`.

use matchratio::exact::InvariantReport;
use matchratio::exact::SizeProfile;
use matchratio::recurrence::{
    AsymptoticMethod, AsymptoticResult, ConvergenceReport, VerifyReport,
};
use matchratio::render::{decimal_full, rational_str, rational_to_f64, significant};
use matchratio::sweep::{ComparisonRow, SweepSummary};
use matchratio::Graph;
use num::BigRational;
use serde_json::{json, Value};
use std::fmt::Write;

const TEXT_SIG: usize = 12;

fn dec(x: f64) -> String {
    significant(x, TEXT_SIG)
}

fn ratio_dec(x: &BigRational) -> String {
    dec(rational_to_f64(x))
}

/// `{"rational": "p/q", "decimal": "d.dddddddddddddddde-e"}`.
fn ratio_json(x: &BigRational) -> Value {
    json!({
        "rational": rational_str(x),
        "decimal": decimal_full(rational_to_f64(x)),
    })
}

/// Profile as `[[size, count], ...]`; counts are decimal strings since they
/// overflow every native integer type.
fn profile_json(p: &SizeProfile) -> Value {
    Value::Array(
        p.iter()
            .map(|(k, c)| json!([k, c.to_string()]))
            .collect(),
    )
}

pub fn invariants_text(g: &Graph, r: &InvariantReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph: {} vertices, {} edges", r.order, g.size());
    let _ = writeln!(out, "nu (maximum matching size): {}", r.nu);
    let _ = writeln!(out, "maximal profile: {}", r.profile);
    let _ = writeln!(out, "T0 = {}, T1 = {}", r.t0, r.t1);
    let _ = writeln!(out, "T0_ord = {}, T1_ord = {}", r.t0_ord, r.t1_ord);
    let _ = writeln!(out, "T0_ARW = {}, T1_ARW = {}", r.t0_arw, r.t1_arw);
    let _ = writeln!(
        out,
        "mu (expected greedy size) = {} = {}",
        rational_str(&r.mu),
        ratio_dec(&r.mu)
    );
    let rows = [
        ("I    ", &r.i_avg),
        ("I_ord", &r.i_ord),
        ("I_DF ", &r.i_df),
        ("I_ARW", &r.i_arw),
    ];
    for (name, value) in rows {
        let _ = writeln!(
            out,
            "{name} = {:<12} = {}",
            rational_str(value),
            ratio_dec(value)
        );
    }
    out
}

pub fn invariants_json(g: &Graph, r: &InvariantReport) -> Value {
    json!({
        "order": r.order,
        "size": g.size(),
        "nu": r.nu,
        "profile": profile_json(&r.profile),
        "t0": r.t0.to_string(),
        "t1": r.t1.to_string(),
        "t0_ord": r.t0_ord.to_string(),
        "t1_ord": r.t1_ord.to_string(),
        "t0_arw": r.t0_arw.to_string(),
        "t1_arw": r.t1_arw.to_string(),
        "mu": ratio_json(&r.mu),
        "i_avg": ratio_json(&r.i_avg),
        "i_ord": ratio_json(&r.i_ord),
        "i_df": ratio_json(&r.i_df),
        "i_arw": ratio_json(&r.i_arw),
    })
}

fn method_detail(result: &AsymptoticResult) -> String {
    match &result.method {
        AsymptoticMethod::DominantRoot(cert) => {
            let mut out = String::new();
            let _ = writeln!(out, "depth: {}", cert.depth);
            let _ = writeln!(out, "alpha: {:?}", cert.alpha);
            let _ = writeln!(out, "beta:  {:?}", cert.beta);
            let _ = writeln!(
                out,
                "dominant root: {} (gap {}, residual {})",
                dec(cert.root),
                dec(cert.gap),
                dec(cert.residual)
            );
            let _ = writeln!(
                out,
                "base condition: {} over {} base terms",
                dec(cert.base_condition),
                cert.n_min
            );
            out
        }
        AsymptoticMethod::PathDelegate { root } => {
            format!("delegates to the path limit (root {})\n", dec(*root))
        }
        AsymptoticMethod::ExactlyOne => String::from("ratio is exactly 1 in the limit\n"),
    }
}

pub fn asymptote_text(result: &AsymptoticResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: {}", result.family);
    let _ = writeln!(out, "method: {}", result.method.name());
    let _ = writeln!(out, "limit:  {}", dec(result.limit));
    if let Some(cf) = &result.closed_form {
        let _ = writeln!(out, "closed form: {cf}");
    }
    let _ = writeln!(
        out,
        "growth: nu grows by {} per index step",
        rational_str(&result.growth)
    );
    out.push_str(&method_detail(result));
    out
}

pub fn asymptote_json(result: &AsymptoticResult) -> Value {
    let mut object = json!({
        "family": result.family.label(),
        "method": result.method.name(),
        "limit": decimal_full(result.limit),
        "closed_form": result.closed_form,
        "growth": rational_str(&result.growth),
    });
    match &result.method {
        AsymptoticMethod::DominantRoot(cert) => {
            object["certificate"] = json!({
                "depth": cert.depth,
                "alpha": cert.alpha,
                "beta": cert.beta,
                "root": decimal_full(cert.root),
                "gap": decimal_full(cert.gap),
                "residual": decimal_full(cert.residual),
                "base_condition": decimal_full(cert.base_condition),
                "n_min": cert.n_min,
            });
        }
        AsymptoticMethod::PathDelegate { root } => {
            object["root"] = json!(decimal_full(*root));
        }
        AsymptoticMethod::ExactlyOne => {}
    }
    object
}

pub const ASYMPTOTE_CSV_HEADER: &str =
    "family,method,limit,growth,closed_form,root,gap,residual,base_condition";

pub fn asymptote_csv(results: &[AsymptoticResult]) -> String {
    let mut out = String::from(ASYMPTOTE_CSV_HEADER);
    out.push('\n');
    for r in results {
        let (root, gap, residual, base) = match &r.method {
            AsymptoticMethod::DominantRoot(c) => (
                dec(c.root),
                dec(c.gap),
                dec(c.residual),
                dec(c.base_condition),
            ),
            AsymptoticMethod::PathDelegate { root } => {
                (dec(*root), String::new(), String::new(), String::new())
            }
            AsymptoticMethod::ExactlyOne => {
                (String::new(), String::new(), String::new(), String::new())
            }
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{root},{gap},{residual},{base}",
            r.family,
            r.method.name(),
            dec(r.limit),
            rational_str(&r.growth),
            r.closed_form.as_deref().unwrap_or(""),
        );
    }
    out
}

pub fn converge_text(report: &ConvergenceReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "family: {}, limit {}",
        report.family,
        dec(report.limit)
    );
    let _ = writeln!(out, "{:>6} {:>5}  {:<18} {:<18} gap", "n", "nu", "ratio", "value");
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{:>6} {:>5}  {:<18} {:<18} {}",
            row.n,
            row.nu,
            rational_str(&row.ratio),
            dec(row.value),
            dec(row.gap)
        );
    }
    let _ = writeln!(
        out,
        "gap non-increasing: {}",
        if report.gap_monotone { "yes" } else { "no" }
    );
    out
}

pub fn converge_json(report: &ConvergenceReport) -> Value {
    json!({
        "family": report.family.label(),
        "limit": decimal_full(report.limit),
        "gap_monotone": report.gap_monotone,
        "rows": report.rows.iter().map(|row| json!({
            "n": row.n,
            "nu": row.nu,
            "ratio": rational_str(&row.ratio),
            "value": decimal_full(row.value),
            "gap": decimal_full(row.gap),
        })).collect::<Vec<_>>(),
    })
}

pub fn converge_csv(report: &ConvergenceReport) -> String {
    let mut out = String::from("n,nu,ratio,value,gap\n");
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.n,
            row.nu,
            rational_str(&row.ratio),
            dec(row.value),
            dec(row.gap)
        );
    }
    out
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: {}", report.family);
    let _ = writeln!(out, "{:>6} {:>6} {:>5}  status", "n", "order", "nu");
    for row in &report.rows {
        let status = if row.matches {
            String::from("ok")
        } else {
            format!(
                "MISMATCH: recurrence {} (nu {}), enumeration {} (nu {})",
                row.expected,
                row.nu_formula,
                row.enumerated,
                row.enumerated.max_size()
            )
        };
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:>5}  {status}",
            row.n, row.order, row.nu_formula
        );
    }
    if report.mismatches == 0 {
        let _ = writeln!(out, "PASS: all {} members match enumeration", report.rows.len());
    } else {
        let _ = writeln!(
            out,
            "FAIL: {} of {} members disagree with enumeration",
            report.mismatches,
            report.rows.len()
        );
    }
    out
}

pub fn verify_json(report: &VerifyReport) -> Value {
    json!({
        "family": report.family.label(),
        "mismatches": report.mismatches,
        "pass": report.mismatches == 0,
        "rows": report.rows.iter().map(|row| json!({
            "n": row.n,
            "order": row.order,
            "nu": row.nu_formula,
            "expected": profile_json(&row.expected),
            "enumerated": profile_json(&row.enumerated),
            "matches": row.matches,
        })).collect::<Vec<_>>(),
    })
}

pub fn verify_csv(report: &VerifyReport) -> String {
    let mut out = String::from("n,order,nu,matches\n");
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.n, row.order, row.nu_formula, row.matches
        );
    }
    out
}

pub fn sweep_summary_text(summary: &SweepSummary) -> String {
    let list = |codes: &[String]| {
        if codes.is_empty() {
            String::new()
        } else {
            format!(" ({})", codes.join(", "))
        }
    };
    format!(
        "classes: {}\nI_DF > I_ord: {}{}\nI_DF < I: {}{}\n",
        summary.classes,
        summary.df_above_ord.len(),
        list(&summary.df_above_ord),
        summary.df_below_avg.len(),
        list(&summary.df_below_avg),
    )
}

pub fn sweep_json(rows: &[ComparisonRow], summary: &SweepSummary) -> Value {
    json!({
        "rows": rows.iter().map(|r| json!({
            "graph6": r.graph6,
            "n": r.order,
            "m": r.size,
            "nu": r.nu,
            "i_avg": ratio_json(&r.i_avg),
            "i_ord": ratio_json(&r.i_ord),
            "i_df": ratio_json(&r.i_df),
            "i_arw": ratio_json(&r.i_arw),
        })).collect::<Vec<_>>(),
        "summary": {
            "classes": summary.classes,
            "df_above_ord": summary.df_above_ord,
            "df_below_avg": summary.df_below_avg,
        },
    })
}

pub fn report_text(results: &[AsymptoticResult]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<32} {:<14} {:<16} closed form",
        "family", "method", "limit"
    );
    for r in results {
        let _ = writeln!(
            out,
            "{:<32} {:<14} {:<16} {}",
            r.family.label(),
            r.method.name(),
            dec(r.limit),
            r.closed_form.as_deref().unwrap_or("-")
        );
    }
    let low = results.iter().map(|r| r.limit).fold(f64::INFINITY, f64::min);
    let high = results.iter().map(|r| r.limit).fold(0.0, f64::max);
    let _ = writeln!(
        out,
        "{} families; limits range {} to {}",
        results.len(),
        dec(low),
        dec(high)
    );
    out
}

pub fn report_json(results: &[AsymptoticResult]) -> Value {
    json!({
        "families": results.iter().map(asymptote_json).collect::<Vec<_>>(),
    })
}
