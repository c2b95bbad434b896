//! Text, CSV and JSON renderers. Fractions stay decimal except in tables.

use std::fmt::Write as _;

use hdqkd_core::analysis::format_percent;
use hdqkd_core::experiment::CellResult;
use hdqkd_core::gates::PropertyReport;
use hdqkd_core::protocols::{Protocol, ProtocolSpec};

use crate::document::{AggregateRecord, ResultDocument};
use crate::CliResult;

fn opt_percent(x: Option<f64>) -> String {
    x.map(format_percent).unwrap_or_else(|| "-".into())
}

fn opt_decimal(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

const TABLE_HEADER: [&str; 6] = ["", "Key Size", "QBER", "Alice Knowledge", "Bob Knowledge", "Matches"];

fn table_cells(label: &str, a: &AggregateRecord) -> [String; 6] {
    [
        label.to_string(),
        format!("{:.1} ({})", a.key_size, format_percent(a.sift_fraction)),
        format_percent(a.qber),
        opt_percent(a.alice_knowledge),
        opt_percent(a.bob_knowledge),
        format_percent(a.matches),
    ]
}

fn layout(rows: &[[String; 6]]) -> String {
    let header = TABLE_HEADER.map(String::from);
    let mut widths = [0usize; 6];
    for row in std::iter::once(&header).chain(rows) {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(rows) {
        let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    out
}

pub fn document_table(doc: &ResultDocument) -> String {
    let c = &doc.config;
    let mut out = format!(
        "{} | {:?} | eve {:?} | {} trials x {} raw bits | seed {}\n",
        c.protocol, c.scenario, c.eve, c.trials, c.raw_bits, c.seed
    );
    out.push_str(&layout(&[table_cells("Aggregate", &doc.aggregate)]));
    out
}

pub fn document_json(doc: &ResultDocument) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

pub fn document_csv(doc: &ResultDocument) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "trial",
        "key_size",
        "sift_fraction",
        "qber",
        "alice_knowledge",
        "bob_knowledge",
        "matches",
        "empty_key",
    ])?;
    for t in &doc.trials {
        w.write_record([
            t.trial.to_string(),
            t.key_size.to_string(),
            t.sift_fraction.to_string(),
            t.qber.to_string(),
            opt_decimal(t.alice_knowledge),
            opt_decimal(t.bob_knowledge),
            t.matches.to_string(),
            t.empty_key.to_string(),
        ])?;
    }
    let a = &doc.aggregate;
    w.write_record([
        "mean".to_string(),
        a.key_size.to_string(),
        a.sift_fraction.to_string(),
        a.qber.to_string(),
        opt_decimal(a.alice_knowledge),
        opt_decimal(a.bob_knowledge),
        a.matches.to_string(),
        String::new(),
    ])?;
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// One protocol's results table, one row per grid cell.
pub fn protocol_table_csv(cells: &[CellResult]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["row", "key_size", "sift_fraction", "qber", "alice_knowledge", "bob_knowledge", "matches"])?;
    for cell in cells {
        let a = AggregateRecord::from(&cell.aggregate);
        w.write_record([
            cell.config.row_label(),
            a.key_size.to_string(),
            a.sift_fraction.to_string(),
            a.qber.to_string(),
            opt_decimal(a.alice_knowledge),
            opt_decimal(a.bob_knowledge),
            a.matches.to_string(),
        ])?;
    }
    finish(w)
}

pub fn protocol_table_text(protocol: Protocol, cells: &[CellResult]) -> String {
    let rows: Vec<[String; 6]> = cells
        .iter()
        .map(|c| table_cells(&c.config.row_label(), &AggregateRecord::from(&c.aggregate)))
        .collect();
    format!("{}\n{}", protocol.label(), layout(&rows))
}

/// Mean QBER with an eavesdropper present, as (protocol, scenario, qber) rows.
pub fn qber_figure_csv(grid: &[(Protocol, Vec<CellResult>)]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["protocol", "scenario", "qber"])?;
    for (protocol, cells) in grid {
        for cell in cells.iter().filter(|c| c.config.eve != hdqkd_core::protocols::EveModel::None) {
            w.write_record([
                protocol.label().to_string(),
                cell.config.scenario.label().to_string(),
                cell.aggregate.mean_qber.to_string(),
            ])?;
        }
    }
    finish(w)
}

pub fn property_report(report: &PropertyReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = if c.ok() { "PASS" } else { "FAIL" };
        let note = if c.expected { "" } else { " (negative fixture)" };
        writeln!(out, "{status} {:<14} {}{note}: {}", c.gate, c.property, c.detail).unwrap();
    }
    let failed = report.checks.iter().filter(|c| !c.ok()).count();
    writeln!(out, "{} checks, {} failed", report.checks.len(), failed).unwrap();
    out
}

pub fn hypothesis_table() -> String {
    let mut out = String::from("protocol  d_ab  b  d_e\n");
    for p in Protocol::ALL {
        let s = ProtocolSpec::of(p);
        writeln!(out, "{:<8}  {:<4}  {}  {}", p.label(), s.d_ab, s.bases, s.d_e).unwrap();
    }
    out
}
