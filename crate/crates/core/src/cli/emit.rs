// Copyright 2026 The qparrondo Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Record emission as CSV or JSON lines, and the matching readers.
//!
//! A record is any flat serde struct. Its CSV header is the field order of
//! the struct. Reals go out with 17 significant digits in scientific
//! notation, which round-trips every `f64` exactly; integers, booleans and
//! strings are written verbatim and `None` as an empty cell. JSON lines use
//! the same field names with one object per line.
//!
//! The CSV reader infers cell types from their text, so string fields must
//! not hold values that read as numbers or booleans.

use std::io::{BufRead, Read, Write};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Jsonl,
}

#[derive(Debug, thiserror::Error)]
pub enum EmitError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A flat row type. `Default` supplies the header.
pub trait Record: Serialize + DeserializeOwned + Default {}

impl<T: Serialize + DeserializeOwned + Default> Record for T {}

pub fn header<T: Record>() -> Vec<String> {
    match serde_json::to_value(T::default()) {
        Ok(Value::Object(map)) => map.keys().cloned().collect(),
        _ => Vec::new(),
    }
}

fn format_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) if n.is_f64() => format!("{:.16e}", n.as_f64().unwrap_or(f64::NAN)),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn parse_cell(cell: &str) -> Value {
    if cell.is_empty() {
        return Value::Null;
    }
    match cell {
        "true" => return Value::Bool(true),
        "false" => return Value::Bool(false),
        _ => {}
    }
    let looks_real = cell.contains(['.', 'e', 'E']);
    if !looks_real {
        if let Ok(u) = cell.parse::<u64>() {
            return Value::Number(u.into());
        }
        if let Ok(i) = cell.parse::<i64>() {
            return Value::Number(i.into());
        }
    }
    if let Some(n) = cell.parse::<f64>().ok().and_then(Number::from_f64) {
        return Value::Number(n);
    }
    Value::String(cell.to_string())
}

/// Streams records of one type to a writer.
pub struct RecordWriter<W: Write> {
    format: Format,
    header: Vec<String>,
    csv: Option<csv::Writer<W>>,
    raw: Option<W>,
}

impl<W: Write> RecordWriter<W> {
    /// Writes the CSV header immediately, so an empty stream still has one line.
    pub fn new<T: Record>(out: W, format: Format) -> Result<Self, EmitError> {
        let header = header::<T>();
        match format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
                w.write_record(&header)?;
                Ok(RecordWriter {
                    format,
                    header,
                    csv: Some(w),
                    raw: None,
                })
            }
            Format::Jsonl => Ok(RecordWriter {
                format,
                header,
                csv: None,
                raw: Some(out),
            }),
        }
    }

    pub fn write<T: Record>(&mut self, record: &T) -> Result<(), EmitError> {
        match self.format {
            Format::Csv => {
                let value = serde_json::to_value(record)?;
                let row: Vec<String> = self
                    .header
                    .iter()
                    .map(|k| value.get(k).map(format_cell).unwrap_or_default())
                    .collect();
                if let Some(w) = self.csv.as_mut() {
                    w.write_record(&row)?;
                }
            }
            Format::Jsonl => {
                if let Some(w) = self.raw.as_mut() {
                    serde_json::to_writer(&mut *w, record)?;
                    w.write_all(b"\n")?;
                }
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<(), EmitError> {
        if let Some(mut w) = self.csv {
            w.flush()?;
        }
        if let Some(mut w) = self.raw {
            w.flush()?;
        }
        Ok(())
    }
}

/// Write all `records` in `format`.
pub fn emit<T: Record, W: Write>(records: &[T], format: Format, out: W) -> Result<(), EmitError> {
    let mut w = RecordWriter::new::<T>(out, format)?;
    for r in records {
        w.write(r)?;
    }
    w.finish()
}

/// Read back records written by [`emit`].
pub fn read_records<T: Record, R: Read>(input: R, format: Format) -> Result<Vec<T>, EmitError> {
    match format {
        Format::Jsonl => {
            let mut out = Vec::new();
            for (i, line) in std::io::BufReader::new(input).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                out.push(serde_json::from_str(&line).map_err(|e| EmitError::Parse {
                    line: i + 1,
                    msg: e.to_string(),
                })?);
            }
            Ok(out)
        }
        Format::Csv => {
            let mut reader = csv::Reader::from_reader(input);
            let header = reader.headers()?.clone();
            let mut out = Vec::new();
            for (i, row) in reader.records().enumerate() {
                let row = row?;
                let map: Map<String, Value> = header
                    .iter()
                    .zip(row.iter())
                    .map(|(k, v)| (k.to_string(), parse_cell(v)))
                    .collect();
                out.push(serde_json::from_value(Value::Object(map)).map_err(|e| EmitError::Parse {
                    line: i + 2,
                    msg: e.to_string(),
                })?);
            }
            Ok(out)
        }
    }
}
