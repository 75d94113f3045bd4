//! Deterministic JSON serialization of check reports.
//!
//! Keys are written in a fixed order and every float carries 17
//! significant digits, so identical runs produce identical bytes.

use super::{CheckReport, Point, Sample};
use num_complex::Complex64;
use std::fmt::Write;

/// Scientific notation with 17 significant digits; non-finite values are `null`.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".to_string()
    }
}

fn string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization")
}

fn complex(z: Complex64) -> String {
    format!("[{}, {}]", format_float(z.re), format_float(z.im))
}

fn point(p: &Point) -> String {
    let mut parts = Vec::new();
    if let Some(x) = p.x {
        parts.push(format!("\"x\": {}", format_float(x)));
    }
    if let Some(s) = p.s {
        parts.push(format!("\"s\": {}", complex(s)));
    }
    if let Some(k) = p.k {
        parts.push(format!("\"k\": {k}"));
    }
    format!("{{{}}}", parts.join(", "))
}

fn sample(out: &mut String, s: &Sample) {
    let _ = write!(
        out,
        "{{\"point\": {}, \"lhs\": {}, \"rhs\": {}, \"residual\": {}, \"lhs_bound\": {}, \"rhs_bound\": {}, \"tolerance\": {}, \"passed\": {}}}",
        point(&s.point),
        complex(s.lhs),
        complex(s.rhs),
        format_float(s.residual),
        format_float(s.lhs_bound),
        format_float(s.rhs_bound),
        format_float(s.tolerance),
        s.passed()
    );
}

fn report(out: &mut String, r: &CheckReport) {
    let _ = write!(out, "    {{\n      \"id\": {},\n", string(&r.id));
    let f = r.function.as_deref().map(string).unwrap_or_else(|| "null".into());
    let _ = writeln!(out, "      \"function\": {f},");
    out.push_str("      \"samples\": [");
    for (i, s) in r.samples.iter().enumerate() {
        out.push_str(if i == 0 { "\n        " } else { ",\n        " });
        sample(out, s);
    }
    out.push_str(if r.samples.is_empty() { "],\n" } else { "\n      ],\n" });
    let _ = writeln!(out, "      \"passed\": {},", r.passed);
    let notes: Vec<String> = r.notes.iter().map(|n| string(n)).collect();
    let _ = writeln!(out, "      \"notes\": [{}],", notes.join(", "));
    match &r.timestamps {
        Some(t) => {
            let _ = writeln!(
                out,
                "      \"timestamps\": {{\"started_unix\": {}, \"elapsed_seconds\": {}}}",
                format_float(t.started_unix),
                format_float(t.elapsed_seconds)
            );
        }
        None => out.push_str("      \"timestamps\": null\n"),
    }
    out.push_str("    }");
}

/// One JSON document for a suite run.
pub fn suite_json(reports: &[CheckReport]) -> String {
    let passed = reports.iter().filter(|r| r.passed).count();
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\n  \"total\": {},\n  \"passed\": {},\n  \"failed\": {},\n  \"reports\": [",
        reports.len(),
        passed,
        reports.len() - passed
    );
    for (i, r) in reports.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        report(&mut out, r);
    }
    out.push_str(if reports.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    out
}
