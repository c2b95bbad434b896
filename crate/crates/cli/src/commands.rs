use std::fs;
use std::io::Write;
use std::path::Path;

use hdqkd_core::experiment::{run_cell, run_grid, CellConfig};
use hdqkd_core::gates::{catalog, run_property_suite, GateDump};

use crate::args::{Format, ReproduceArgs, RunArgs, ValidateArgs};
use crate::document::ResultDocument;
use crate::render;
use crate::{CliError, CliResult};

fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn build_document(args: &RunArgs) -> CliResult<ResultDocument> {
    let config = CellConfig {
        protocol: args.protocol.into(),
        scenario: args.scenario.into(),
        eve: args.eve.into(),
        trials: args.trials,
        raw_bits: args.raw_bits,
        seed: args.seed,
    };
    Ok(ResultDocument::from_cell(&run_cell(&config)?))
}

pub fn run(args: &RunArgs) -> CliResult<()> {
    let doc = build_document(args)?;
    let text = match args.format {
        Format::Table => render::document_table(&doc),
        Format::Csv => render::document_csv(&doc)?,
        Format::Json => render::document_json(&doc)?,
    };
    emit(&text, args.out.as_deref())
}

pub fn validate_gates(args: &ValidateArgs) -> CliResult<()> {
    let report = run_property_suite(args.samples, args.seed)?;
    if let Some(path) = &args.dump {
        let dump: Vec<GateDump> = catalog().iter().map(GateDump::from).collect();
        let mut s = serde_json::to_string_pretty(&dump)?;
        s.push('\n');
        fs::write(path, s)?;
    }
    emit(&render::property_report(&report), args.out.as_deref())?;
    if report.all_ok() {
        Ok(())
    } else {
        let failed: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.ok())
            .map(|c| format!("{}/{}", c.gate, c.property))
            .collect();
        Err(CliError::Validation(failed.join(", ")))
    }
}

pub fn reproduce_paper(args: &ReproduceArgs) -> CliResult<()> {
    let grid = run_grid(args.seed)?;
    fs::create_dir_all(&args.out_dir)?;
    for (protocol, cells) in &grid {
        let path = args.out_dir.join(format!("{}.csv", protocol.slug()));
        fs::write(&path, render::protocol_table_csv(cells)?)?;
        println!("{}", render::protocol_table_text(*protocol, cells));
    }
    fs::write(args.out_dir.join("qber_figure.csv"), render::qber_figure_csv(&grid)?)?;
    println!("wrote tables and figure data to {}", args.out_dir.display());
    Ok(())
}

pub fn hypothesis_table() -> CliResult<()> {
    emit(&render::hypothesis_table(), None)
}
