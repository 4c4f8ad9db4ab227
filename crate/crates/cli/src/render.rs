//! Output rendering: CSV with a fixed schema, a field-for-field JSON
//! mirror, Markdown tables, and the `--trace` report.
//!
//! The CSV schema is stable:
//!
//! ```text
//! m,N,a,b,g_C,g_D,g_new,delta_C,delta_D,K2_res,euler,blowdowns,K2_min,class,quick_k3,extra
//! ```
//!
//! with the exponent tuples rendered as hyphen-joined integers
//! (`1-9-9-9`). JSON output uses exactly the same field names and tuple
//! rendering; `class` is `K3` or `general-type`.

use clap::ValueEnum;
use pqsurf::minmodel::{BlowdownOutcome, ChainScope, ComponentGraph};
use pqsurf::{SurfaceModel, SurfaceRecord};
use serde_json::{json, Value};
use std::fmt::Write as _;

/// Catalog output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Fixed-schema comma-separated values.
    Csv,
    /// Array (or single object) mirroring the CSV fields.
    Json,
    /// GitHub-style pipe table.
    Md,
}

/// The fixed CSV column list.
pub const CSV_HEADER: &str =
    "m,N,a,b,g_C,g_D,g_new,delta_C,delta_D,K2_res,euler,blowdowns,K2_min,class,quick_k3,extra";

/// `[1, 9, 9, 9]` -> `1-9-9-9`.
pub fn hyphenated(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("-")
}

fn csv_row(r: &SurfaceRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.m,
        r.point_count(),
        hyphenated(&r.a),
        hyphenated(&r.b),
        r.g_c,
        r.g_d,
        r.g_new,
        r.delta_c,
        r.delta_d,
        r.k2_resolution,
        r.euler,
        r.blowdowns,
        r.k2_minimal,
        r.classification,
        r.quick_k3,
        r.extra
    )
}

fn json_record(r: &SurfaceRecord) -> Value {
    json!({
        "m": r.m,
        "N": r.point_count(),
        "a": hyphenated(&r.a),
        "b": hyphenated(&r.b),
        "g_C": r.g_c,
        "g_D": r.g_d,
        "g_new": r.g_new,
        "delta_C": r.delta_c,
        "delta_D": r.delta_d,
        "K2_res": r.k2_resolution,
        "euler": r.euler,
        "blowdowns": r.blowdowns,
        "K2_min": r.k2_minimal,
        "class": r.classification.to_string(),
        "quick_k3": r.quick_k3,
        "extra": r.extra,
    })
}

fn md_header() -> String {
    let cols: Vec<&str> = CSV_HEADER.split(',').collect();
    format!(
        "| {} |\n|{}|",
        cols.join(" | "),
        cols.iter().map(|_| " --- ").collect::<Vec<_>>().join("|")
    )
}

fn md_row(r: &SurfaceRecord) -> String {
    format!("| {} |", csv_row(r).replace(',', " | "))
}

/// Render a whole catalog in the chosen format (CSV and Markdown get a
/// header; JSON is a pretty-printed array).
pub fn render_records(records: &[SurfaceRecord], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            for r in records {
                out.push('\n');
                out.push_str(&csv_row(r));
            }
            out.push('\n');
            out
        }
        Format::Json => {
            let array = Value::Array(records.iter().map(json_record).collect());
            let mut out = serde_json::to_string_pretty(&array).expect("static schema");
            out.push('\n');
            out
        }
        Format::Md => {
            let mut out = md_header();
            for r in records {
                out.push('\n');
                out.push_str(&md_row(r));
            }
            out.push('\n');
            out
        }
    }
}

/// Render a single record: one-row CSV/Markdown table, or one JSON
/// object.
pub fn render_one(record: &SurfaceRecord, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out =
                serde_json::to_string_pretty(&json_record(record)).expect("static schema");
            out.push('\n');
            out
        }
        _ => render_records(std::slice::from_ref(record), format),
    }
}

/// One-line census of a catalog.
pub fn summary(records: &[SurfaceRecord]) -> String {
    let k3 = records
        .iter()
        .filter(|r| r.classification == pqsurf::Classification::K3)
        .count();
    let general = records.len() - k3;
    let extra = records.iter().filter(|r| r.extra).count();
    format!(
        "{} records: {} K3, {} general type, {} outside the reference catalog",
        records.len(),
        k3,
        general,
        extra
    )
}

/// The `--trace` report: singular points, component ledger, and the full
/// blow-down log.
pub fn render_trace(model: &SurfaceModel) -> pqsurf::Result<String> {
    let mut out = String::new();
    let push = |out: &mut String, line: &str| {
        out.push_str(line);
        out.push('\n');
    };

    push(&mut out, "singular points:");
    if model.singular.is_empty() {
        push(&mut out, "  (none)");
    }
    for sp in &model.singular {
        push(
            &mut out,
            &format!(
                "  Y{} x Z{}: {} point{} of type ({}, {})",
                sp.i + 1,
                sp.j + 1,
                sp.count,
                if sp.count == 1 { "" } else { "s" },
                sp.n,
                sp.q
            ),
        );
    }
    for sc in &model.smooth {
        push(
            &mut out,
            &format!(
                "  Y{} x Z{}: {} smooth crossing{}",
                sc.i + 1,
                sc.j + 1,
                sc.count,
                if sc.count == 1 { "" } else { "s" }
            ),
        );
    }

    push(&mut out, "components:");
    for (name, list) in [("Y", &model.y), ("Z", &model.z)] {
        for (idx, part) in list.iter().enumerate() {
            push(
                &mut out,
                &format!(
                    "  {name}{}: genus {}, canonical coefficient {}, self-intersection {}",
                    idx + 1,
                    part.genus,
                    part.coeff,
                    part.self_int
                ),
            );
        }
    }

    let graph = ComponentGraph::build(model, ChainScope::Attached)?;
    let outcome: BlowdownOutcome = graph.blow_down_all();
    push(
        &mut out,
        &format!("blow-down ({} vertices in the contraction graph):", graph.len()),
    );
    for (idx, step) in outcome.steps.iter().enumerate() {
        let mut line = format!("  {}. contract {}", idx + 1, step.contracted);
        if !step.dropped.is_empty() {
            let names: Vec<String> =
                step.dropped.iter().map(|d| d.to_string()).collect();
            let _ = write!(line, " (drops {})", names.join(", "));
        }
        push(&mut out, &line);
    }
    push(
        &mut out,
        &format!(
            "  result: {} contractions, {} curves dropped, {} vertices remain",
            outcome.contractions, outcome.dropped, outcome.residual
        ),
    );
    Ok(out)
}
