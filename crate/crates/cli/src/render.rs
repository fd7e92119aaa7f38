//! Plain-text rendering helpers.

use std::fmt::Write;

use frontal::{FiniteHilbertAlgebra, Report, Subset, UnaryMap};

pub fn labels(alg: &FiniteHilbertAlgebra) -> Vec<String> {
    alg.elements().map(|i| alg.label(i)).collect()
}

pub fn set(names: &[String], s: &Subset) -> String {
    let inner: Vec<&str> = s.iter().map(|i| names[i].as_str()).collect();
    format!("{{{}}}", inner.join(", "))
}

pub fn map(from: &[String], to: &[String], m: &[usize]) -> String {
    let parts: Vec<String> = m.iter().enumerate().map(|(i, &v)| format!("{} -> {}", from[i], to[v])).collect();
    format!("({})", parts.join(", "))
}

pub fn unary(names: &[String], t: &UnaryMap) -> String {
    map(names, names, t.as_slice())
}

/// A square table with row and column headers.
pub fn table(title: &str, names: &[String], cell: impl Fn(usize, usize) -> usize) -> String {
    let width = names.iter().map(String::len).max().unwrap_or(1).max(title.len());
    let mut out = String::new();
    let _ = write!(out, "{title:>width$} |");
    for n in names {
        let _ = write!(out, " {n:>width$}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}", "-".repeat((width + 1) * (names.len() + 1) + 1));
    for (i, row) in names.iter().enumerate() {
        let _ = write!(out, "{row:>width$} |");
        for j in 0..names.len() {
            let _ = write!(out, " {:>width$}", names[cell(i, j)]);
        }
        out.push('\n');
    }
    out
}

pub fn report(names: &[String], r: &Report) -> String {
    let mut out = String::new();
    if r.passes() {
        let _ = writeln!(out, "{}: PASS", r.subject);
    } else {
        let _ = writeln!(out, "{}: FAIL", r.subject);
        for v in &r.violations {
            let w: Vec<&str> = v.witness.iter().map(|&i| names[i].as_str()).collect();
            let _ = writeln!(out, "  {} fails at ({})", v.law, w.join(", "));
        }
    }
    out
}

pub fn report_json(names: &[String], r: &Report) -> serde_json::Value {
    serde_json::json!({
        "subject": r.subject,
        "passes": r.passes(),
        "violations": r.violations.iter().map(|v| serde_json::json!({
            "law": v.law,
            "description": v.law.to_string(),
            "witness": v.witness,
            "witness_labels": v.witness.iter().map(|&i| names[i].clone()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}
