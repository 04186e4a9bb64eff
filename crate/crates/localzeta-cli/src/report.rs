//! Report records and their serialization.

use crate::config::Format;
use serde::Serialize;
use std::fs;
use std::io;
use std::path::Path;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Record {
    pub suite: String,
    pub case_id: String,
    pub inputs: serde_json::Value,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

/// A plain table written alongside the report.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub file: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn write_report(dir: &Path, format: Format, records: &[Record]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(records).map_err(io::Error::other)?;
            s.push('\n');
            fs::write(dir.join("report.json"), s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_path(dir.join("report.csv"))?;
            w.write_record(["suite", "case_id", "inputs", "expected", "got", "pass"])?;
            for r in records {
                w.write_record([
                    r.suite.as_str(),
                    r.case_id.as_str(),
                    &r.inputs.to_string(),
                    r.expected.as_str(),
                    r.got.as_str(),
                    if r.pass { "true" } else { "false" },
                ])?;
            }
            w.flush()
        }
    }
}

pub fn write_table(dir: &Path, t: &Table) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut w = csv::Writer::from_path(dir.join(&t.file))?;
    write_rows(&mut w, t)?;
    w.flush()
}

pub fn write_rows<W: io::Write>(w: &mut csv::Writer<W>, t: &Table) -> io::Result<()> {
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row)?;
    }
    Ok(())
}
