//! Text, CSV, LaTeX and JSON rendering of tables, evaluations and
//! verification reports.
//!
//! Output is deterministic by construction: polynomial terms are emitted in
//! graded-lexicographic order, JSON objects have sorted keys (`serde_json`'s
//! default `BTreeMap` backing), and nothing wall-clock-dependent is ever
//! written. Two identical invocations must produce byte-identical documents.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::bipoly::BiPoly;
use crate::families::{FamilySpec, PolyTable};
use crate::identities::{AlphaParam, ReductionReport, Status, VerifyReport};
use crate::rational::Rational;

/// Output document format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Latex,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<OutputFormat> {
        match s {
            "text" => Some(OutputFormat::Text),
            "json" => Some(OutputFormat::Json),
            "csv" => Some(OutputFormat::Csv),
            "latex" => Some(OutputFormat::Latex),
            _ => None,
        }
    }
}

/// A polynomial as an ordered JSON list of `{"c": "p/q", "e1": .., "e2": ..}`.
pub fn poly_json(p: &BiPoly) -> Value {
    Value::Array(
        p.ordered_terms()
            .into_iter()
            .map(|((e1, e2), c)| {
                json!({
                    "e1": e1,
                    "e2": e2,
                    "c": c.to_string(),
                })
            })
            .collect(),
    )
}

/// LaTeX form of a polynomial, graded-lex order, `x_1`/`x_2` variables.
pub fn poly_latex(p: &BiPoly) -> String {
    let terms = p.ordered_terms();
    if terms.is_empty() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, ((e1, e2), c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let vars = latex_monomial(e1, e2);
        if vars.is_empty() {
            out.push_str(&latex_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&vars);
        } else {
            let _ = write!(out, "{} {}", latex_rational(&mag), vars);
        }
    }
    out
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn latex_monomial(e1: u32, e2: u32) -> String {
    let mut parts = Vec::new();
    match e1 {
        0 => {}
        1 => parts.push("x_1".to_owned()),
        _ => parts.push(format!("x_1^{{{e1}}}")),
    }
    match e2 {
        0 => {}
        1 => parts.push("x_2".to_owned()),
        _ => parts.push(format!("x_2^{{{e2}}}")),
    }
    parts.join(" ")
}

fn spec_json(spec: &FamilySpec) -> Value {
    json!({
        "family": spec.kind.name(),
        "alpha": spec.alpha,
        "lambda": spec.lambda.to_string(),
        "eta": spec.eta,
        "delta": spec.delta,
    })
}

fn spec_text(spec: &FamilySpec) -> String {
    let mut s = format!("family={}", spec.kind.name());
    if spec.kind.uses_alpha() {
        let _ = write!(s, " alpha={}", spec.alpha);
    }
    if spec.kind.uses_lambda() {
        let _ = write!(s, " lambda={}", spec.lambda);
    }
    if spec.kind.uses_eta_delta() {
        let _ = write!(s, " eta={} delta={}", spec.eta, spec.delta);
    }
    s
}

/// Renders a family table in the requested format.
pub fn render_table(table: &PolyTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = format!("# table {}\n", spec_text(&table.spec));
            for (n, poly) in &table.rows {
                let _ = writeln!(out, "{n}: {poly}");
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,value\n");
            for (n, poly) in &table.rows {
                let _ = writeln!(out, "{n},{poly}");
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{array}{rl}\n");
            for (n, poly) in &table.rows {
                let _ = writeln!(out, "{n} & {} \\\\", poly_latex(poly));
            }
            out.push_str("\\end{array}\n");
            out
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|(n, poly)| {
                    json!({
                        "n": n,
                        "value": poly_json(poly),
                    })
                })
                .collect();
            let doc = json!({
                "spec": spec_json(&table.spec),
                "rows": rows,
            });
            pretty(&doc)
        }
    }
}

/// Renders a point evaluation in the requested format.
pub fn render_eval(
    spec: &FamilySpec,
    n: usize,
    x1: &Rational,
    x2: &Rational,
    value: &Rational,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Text => format!("{value}\n"),
        OutputFormat::Csv => format!("n,x1,x2,value\n{n},{x1},{x2},{value}\n"),
        OutputFormat::Latex => format!("{}\n", latex_rational(value)),
        OutputFormat::Json => {
            let doc = json!({
                "spec": spec_json(spec),
                "n": n,
                "x1": x1.to_string(),
                "x2": x2.to_string(),
                "value": value.to_string(),
            });
            pretty(&doc)
        }
    }
}

fn alpha_json(alpha: &AlphaParam) -> Vec<(&'static str, Value)> {
    match alpha {
        AlphaParam::Single(a) => vec![("alpha", json!(a))],
        AlphaParam::Pair(a1, a2) => vec![("alpha1", json!(a1)), ("alpha2", json!(a2))],
    }
}

fn verify_report_json(r: &VerifyReport) -> Value {
    let mut params = Map::new();
    for (k, v) in alpha_json(&r.point.alpha) {
        params.insert(k.to_owned(), v);
    }
    params.insert("lambda".to_owned(), json!(r.point.lambda.to_string()));
    params.insert("eta".to_owned(), json!(r.point.eta));
    params.insert("delta".to_owned(), json!(r.point.delta));

    let mut obj = Map::new();
    obj.insert("theorem".to_owned(), json!(r.theorem.name()));
    obj.insert("params".to_owned(), Value::Object(params));
    obj.insert("status".to_owned(), json!(r.status.name()));
    if let Some(note) = &r.note {
        obj.insert("note".to_owned(), json!(note));
    }
    if let Some(f) = &r.first_failure {
        obj.insert(
            "first_failure".to_owned(),
            json!({"n": f.n, "lhs": f.lhs, "rhs": f.rhs}),
        );
    }
    Value::Object(obj)
}

fn summary_counts(statuses: impl Iterator<Item = Status>) -> (usize, usize, usize) {
    let mut pass = 0;
    let mut fail = 0;
    let mut skip = 0;
    for s in statuses {
        match s {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Skip => skip += 1,
        }
    }
    (pass, fail, skip)
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// Renders theorem verification reports in the requested format.
pub fn render_verify(reports: &[VerifyReport], n_max: usize, format: OutputFormat) -> String {
    let (pass, fail, skip) = summary_counts(reports.iter().map(|r| r.status));
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for r in reports {
                let _ = write!(
                    out,
                    "{} {}: {}",
                    r.theorem,
                    r.point,
                    r.status.name().to_uppercase()
                );
                if let Some(note) = &r.note {
                    let _ = write!(out, " ({note})");
                }
                out.push('\n');
                if let Some(f) = &r.first_failure {
                    let _ = writeln!(out, "    first failure at n={}", f.n);
                    let _ = writeln!(out, "    lhs: {}", f.lhs);
                    let _ = writeln!(out, "    rhs: {}", f.rhs);
                }
            }
            let _ = writeln!(
                out,
                "pass={pass} fail={fail} skip={skip} total={}",
                reports.len()
            );
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("theorem,alpha1,alpha2,lambda,eta,delta,nmax,status,note\n");
            for r in reports {
                let (a1, a2) = match &r.point.alpha {
                    AlphaParam::Single(a) => (a.to_string(), String::new()),
                    AlphaParam::Pair(a1, a2) => (a1.to_string(), a2.to_string()),
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.theorem,
                    a1,
                    a2,
                    r.point.lambda,
                    r.point.eta,
                    r.point.delta,
                    r.n_max,
                    r.status.name(),
                    csv_quote(r.note.as_deref().unwrap_or("")),
                );
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{tabular}{lll}\n");
            out.push_str("theorem & parameters & status \\\\\n");
            for r in reports {
                let params = match &r.point.alpha {
                    AlphaParam::Single(a) => format!(
                        "$\\alpha={a}, \\lambda={}, \\eta={}, \\delta={}$",
                        latex_rational(&r.point.lambda),
                        r.point.eta,
                        r.point.delta
                    ),
                    AlphaParam::Pair(a1, a2) => format!(
                        "$\\alpha_1={a1}, \\alpha_2={a2}, \\lambda={}, \\eta={}, \\delta={}$",
                        latex_rational(&r.point.lambda),
                        r.point.eta,
                        r.point.delta
                    ),
                };
                let _ = writeln!(out, "{} & {} & {} \\\\", r.theorem, params, r.status.name());
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        OutputFormat::Json => {
            let doc = json!({
                "nmax": n_max,
                "reports": reports.iter().map(verify_report_json).collect::<Vec<_>>(),
                "summary": {"pass": pass, "fail": fail, "skip": skip},
            });
            pretty(&doc)
        }
    }
}

fn reduction_report_json(r: &ReductionReport) -> Value {
    let mut obj = Map::new();
    obj.insert("check".to_owned(), json!(r.check.name()));
    obj.insert(
        "params".to_owned(),
        json!({
            "alpha": r.alpha,
            "lambda": r.lambda.to_string(),
            "eta": r.eta,
            "delta": r.delta,
        }),
    );
    obj.insert("status".to_owned(), json!(r.status.name()));
    if let Some(note) = &r.note {
        obj.insert("note".to_owned(), json!(note));
    }
    if let Some(f) = &r.first_failure {
        obj.insert(
            "first_failure".to_owned(),
            json!({"n": f.n, "lhs": f.lhs, "rhs": f.rhs}),
        );
    }
    Value::Object(obj)
}

/// Renders reduction-check reports in the requested format.
pub fn render_reductions(
    reports: &[ReductionReport],
    n_max: usize,
    format: OutputFormat,
) -> String {
    let (pass, fail, skip) = summary_counts(reports.iter().map(|r| r.status));
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for r in reports {
                let _ = write!(
                    out,
                    "{} alpha={} lambda={} eta={} delta={}: {}",
                    r.check,
                    r.alpha,
                    r.lambda,
                    r.eta,
                    r.delta,
                    r.status.name().to_uppercase()
                );
                if let Some(note) = &r.note {
                    let _ = write!(out, " ({note})");
                }
                out.push('\n');
                if let Some(f) = &r.first_failure {
                    let _ = writeln!(out, "    first failure at n={}", f.n);
                    let _ = writeln!(out, "    lhs: {}", f.lhs);
                    let _ = writeln!(out, "    rhs: {}", f.rhs);
                }
            }
            let _ = writeln!(
                out,
                "pass={pass} fail={fail} skip={skip} total={}",
                reports.len()
            );
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("check,alpha,lambda,eta,delta,nmax,status,note\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.check,
                    r.alpha,
                    r.lambda,
                    r.eta,
                    r.delta,
                    r.n_max,
                    r.status.name(),
                    csv_quote(r.note.as_deref().unwrap_or("")),
                );
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{tabular}{lll}\n");
            out.push_str("check & parameters & status \\\\\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "{} & $\\alpha={}, \\lambda={}, \\eta={}, \\delta={}$ & {} \\\\",
                    r.check,
                    r.alpha,
                    latex_rational(&r.lambda),
                    r.eta,
                    r.delta,
                    r.status.name()
                );
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        OutputFormat::Json => {
            let doc = json!({
                "nmax": n_max,
                "reports": reports.iter().map(reduction_report_json).collect::<Vec<_>>(),
                "summary": {"pass": pass, "fail": fail, "skip": skip},
            });
            pretty(&doc)
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_table, FamilyKind};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn table_csv_bell_numbers() {
        let spec = FamilySpec::new(FamilyKind::BellNumber);
        let table = build_table(&spec, 5).unwrap();
        let csv = render_table(&table, OutputFormat::Csv);
        assert_eq!(csv, "n,value\n0,1\n1,1\n2,2\n3,5\n4,15\n5,52\n");
    }

    #[test]
    fn table_text_header_hides_irrelevant_params() {
        let spec = FamilySpec::new(FamilyKind::BellNumber);
        let table = build_table(&spec, 1).unwrap();
        let text = render_table(&table, OutputFormat::Text);
        assert!(text.starts_with("# table family=bell-number\n"));
        assert!(!text.contains("lambda"));
    }

    #[test]
    fn poly_json_is_ordered() {
        let p = BiPoly::from_terms([
            ((0, 1), q("1")),
            ((2, 0), q("1")),
            ((1, 1), q("2")),
            ((0, 2), q("1")),
        ]);
        let v = poly_json(&p);
        let arr = v.as_array().unwrap();
        let e1s: Vec<u64> = arr.iter().map(|t| t["e1"].as_u64().unwrap()).collect();
        let e2s: Vec<u64> = arr.iter().map(|t| t["e2"].as_u64().unwrap()).collect();
        assert_eq!(e1s, vec![2, 1, 0, 0]);
        assert_eq!(e2s, vec![0, 1, 2, 1]);
        assert_eq!(arr[1]["c"], "2");
    }

    #[test]
    fn latex_poly_rendering() {
        let p = BiPoly::from_terms([((2, 0), q("1")), ((1, 0), q("-1")), ((0, 0), q("1/6"))]);
        assert_eq!(poly_latex(&p), "x_1^{2} - x_1 + \\frac{1}{6}");
        assert_eq!(poly_latex(&BiPoly::zero()), "0");
    }

    #[test]
    fn eval_formats() {
        let spec = FamilySpec::new(FamilyKind::BellBivariate);
        let text = render_eval(
            &spec,
            1,
            &q("1/2"),
            &q("1/3"),
            &q("5/6"),
            OutputFormat::Text,
        );
        assert_eq!(text, "5/6\n");
        let csv = render_eval(&spec, 1, &q("1/2"), &q("1/3"), &q("5/6"), OutputFormat::Csv);
        assert_eq!(csv, "n,x1,x2,value\n1,1/2,1/3,5/6\n");
    }
}
