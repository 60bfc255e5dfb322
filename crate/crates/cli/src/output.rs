use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// A titled grid of cells, rendered aligned or as CSV.
#[derive(Debug, Clone)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, headers: &[&str]) -> Self {
        Self {
            title: title.to_string(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// What an analysis command produced: a JSON payload plus a human view of it.
#[derive(Debug)]
pub struct Report {
    pub payload: Value,
    pub fields: Vec<(String, String)>,
    pub tables: Vec<Table>,
}

impl Report {
    pub fn new(payload: impl Serialize) -> Self {
        Self {
            payload: serde_json::to_value(payload).expect("payloads serialize"),
            fields: Vec::new(),
            tables: Vec::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl ToString) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn table(mut self, table: Table) -> Self {
        self.tables.push(table);
        self
    }
}

/// The `--format json` envelope around every analysis payload.
#[derive(Debug, Serialize)]
pub struct OutputRecord<'a> {
    pub command: &'a [String],
    pub input_digest: String,
    pub payload: &'a Value,
    pub wall_ms: u64,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn render(
    out: &mut impl Write,
    format: Format,
    report: &Report,
    command: &[String],
    input_digest: String,
    wall_ms: u64,
) -> io::Result<()> {
    match format {
        Format::Json => {
            let record = OutputRecord {
                command,
                input_digest,
                payload: &report.payload,
                wall_ms,
            };
            serde_json::to_writer_pretty(&mut *out, &record)?;
            writeln!(out)
        }
        Format::Table => render_table(out, report),
        Format::Csv => render_csv(out, report),
    }
}

fn render_table(out: &mut impl Write, report: &Report) -> io::Result<()> {
    for (key, value) in &report.fields {
        writeln!(out, "{key}: {value}")?;
    }
    for table in &report.tables {
        writeln!(out)?;
        writeln!(out, "{}", table.title)?;
        let mut widths: Vec<usize> = table.headers.iter().map(String::len).collect();
        for row in &table.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(&table.headers))?;
        writeln!(
            out,
            "{}",
            line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>())
        )?;
        for row in &table.rows {
            writeln!(out, "{}", line(row))?;
        }
    }
    Ok(())
}

fn render_csv(out: &mut impl Write, report: &Report) -> io::Result<()> {
    let mut first = true;
    if !report.fields.is_empty() {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record(["key", "value"])?;
        for (key, value) in &report.fields {
            w.write_record([key, value])?;
        }
        w.flush()?;
        first = false;
    }
    for table in &report.tables {
        if !first {
            writeln!(out)?;
        }
        first = false;
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record(&table.headers)?;
        for row in &table.rows {
            w.write_record(row)?;
        }
        w.flush()?;
    }
    Ok(())
}
