use std::fs;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use hodelta::report::{format_fixed, round_half_even, CsvTable};
use serde_json::{Map, Value};

use crate::Failure;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(PartialEq)]
enum Shape {
    /// Single row shown as `key = value` lines.
    Record,
    Table,
}

pub struct Output {
    stem: String,
    table: CsvTable,
    shape: Shape,
    integer_columns: Vec<String>,
    scientific_columns: Vec<String>,
    labels: Vec<(String, String)>,
    notes: Vec<String>,
    warnings: Vec<String>,
}

impl Output {
    fn new(stem: &str, table: CsvTable, shape: Shape) -> Self {
        Output {
            stem: stem.to_string(),
            table,
            shape,
            integer_columns: Vec::new(),
            scientific_columns: Vec::new(),
            labels: Vec::new(),
            notes: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn record(stem: &str, table: CsvTable) -> Self {
        Output::new(stem, table, Shape::Record)
    }

    pub fn table(stem: &str, table: CsvTable) -> Self {
        Output::new(stem, table, Shape::Table)
    }

    pub fn with_integer_columns(mut self, cols: &[&str]) -> Self {
        self.integer_columns
            .extend(cols.iter().map(|c| c.to_string()));
        self
    }

    pub fn with_scientific_columns(mut self, cols: &[&str]) -> Self {
        self.scientific_columns
            .extend(cols.iter().map(|c| c.to_string()));
        self
    }

    /// Extra string field, shown in text and JSON output.
    pub fn with_label(mut self, key: &str, value: &str) -> Self {
        self.labels.push((key.to_string(), value.to_string()));
        self
    }

    /// Text-mode trailer line.
    pub fn with_note(mut self, note: String) -> Self {
        self.notes.push(note);
        self
    }

    /// Always printed to stderr.
    pub fn with_warning(mut self, warning: String) -> Self {
        self.warnings.push(warning);
        self
    }

    fn is_integer(&self, col: usize) -> bool {
        self.integer_columns.contains(&self.table.headers[col])
    }

    fn is_scientific(&self, col: usize) -> bool {
        self.scientific_columns.contains(&self.table.headers[col])
    }

    fn cell(&self, col: usize, value: Option<f64>, full: bool) -> String {
        match value {
            None => String::new(),
            Some(v) if self.is_integer(col) => format!("{}", v as i64),
            Some(v) if full => format!("{v:?}"),
            Some(v) if self.is_scientific(col) => format!("{v:.3e}"),
            Some(v) => format_fixed(v, self.table.decimals),
        }
    }

    fn json_number(&self, col: usize, value: Option<f64>, full: bool) -> Value {
        match value {
            None => Value::Null,
            Some(v) if self.is_integer(col) => Value::from(v as i64),
            Some(v) if full || self.is_scientific(col) => Value::from(v),
            Some(v) => Value::from(round_half_even(v, self.table.decimals)),
        }
    }

    fn render_text(&self, full: bool) -> String {
        let mut s = String::new();
        if self.shape == Shape::Record {
            for (k, v) in &self.labels {
                s.push_str(&format!("{k} = {v}\n"));
            }
            for row in &self.table.rows {
                for (i, (h, v)) in self.table.headers.iter().zip(row).enumerate() {
                    if v.is_some() {
                        s.push_str(&format!("{h} = {}\n", self.cell(i, *v, full)));
                    }
                }
            }
        } else {
            let cells: Vec<Vec<String>> = self
                .table
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .map(|(i, v)| self.cell(i, *v, full))
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = self
                .table
                .headers
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    cells
                        .iter()
                        .map(|r| r[i].len())
                        .chain([h.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |items: Vec<&str>| {
                let padded: Vec<String> = items
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            s.push_str(&line(
                self.table.headers.iter().map(String::as_str).collect(),
            ));
            for r in &cells {
                s.push_str(&line(r.iter().map(String::as_str).collect()));
            }
        }
        for n in &self.notes {
            s.push_str(n);
            s.push('\n');
        }
        s
    }

    fn render_csv(&self, full: bool) -> Result<String, Failure> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let fail = |e: csv::Error| Failure(e.to_string());
        w.write_record(&self.table.headers).map_err(fail)?;
        for row in &self.table.rows {
            w.write_record(row.iter().enumerate().map(|(i, v)| self.cell(i, *v, full)))
                .map_err(fail)?;
        }
        let bytes = w.into_inner().map_err(|e| Failure(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Failure(e.to_string()))
    }

    fn render_json(&self, full: bool) -> Result<String, Failure> {
        let objects: Vec<Value> = self
            .table
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                for (k, v) in &self.labels {
                    m.insert(k.clone(), Value::from(v.as_str()));
                }
                for (i, (h, v)) in self.table.headers.iter().zip(row).enumerate() {
                    m.insert(h.clone(), self.json_number(i, *v, full));
                }
                Value::Object(m)
            })
            .collect();
        let value = match (&self.shape, objects.as_slice()) {
            (Shape::Record, [one]) => one.clone(),
            _ => Value::Array(objects),
        };
        let mut s = serde_json::to_string_pretty(&value).map_err(|e| Failure(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn render(&self, format: Format, full: bool) -> Result<String, Failure> {
        match format {
            Format::Text => Ok(self.render_text(full)),
            Format::Csv => self.render_csv(full),
            Format::Json => self.render_json(full),
        }
    }

    pub fn emit(&self, format: Format, full: bool, out_dir: Option<&Path>) -> Result<(), Failure> {
        for w in &self.warnings {
            eprintln!("warning: {w}");
        }
        let body = self.render(format, full)?;
        match out_dir {
            Some(dir) => {
                fs::create_dir_all(dir)?;
                let path = dir.join(format!("{}.{}", self.stem, format.extension()));
                fs::write(&path, body)?;
                eprintln!("wrote {}", path.display());
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(body.as_bytes())?;
            }
        }
        Ok(())
    }
}
