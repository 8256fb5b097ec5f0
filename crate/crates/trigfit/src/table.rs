//! CSV ingestion for `series,time,value` tables and the matching writer.
//!
//! Missing values are an empty field or `NA`. Times must be strictly
//! increasing within a series; duplicate (series, time) pairs are rejected.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::path::Path;

use trigfit_core::RawSeries;

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: expected header `series,time,value`, found `{found}`")]
    BadHeader { line: u64, found: String },
    #[error("line {line}: {reason}")]
    MalformedRow { line: u64, reason: String },
    #[error("line {line}: series `{series}` time {time} is not increasing")]
    NonMonotoneTime { line: u64, series: String, time: f64 },
    #[error("line {line}: duplicate time point {time} in series `{series}`")]
    DuplicateTimePoint { line: u64, series: String, time: f64 },
}

/// One validated data row; the source line number is kept for diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct DataRow {
    pub series: String,
    pub time: f64,
    pub value: Option<f64>,
    pub line: u64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DataTable {
    pub rows: Vec<DataRow>,
}

impl DataTable {
    /// Group rows into per-series records, preserving first-appearance order.
    pub fn into_series(self) -> Vec<RawSeries> {
        let mut order: Vec<String> = Vec::new();
        let mut map: HashMap<String, RawSeries> = HashMap::new();
        for row in self.rows {
            let entry = map.entry(row.series.clone()).or_insert_with(|| {
                order.push(row.series.clone());
                RawSeries { id: row.series.clone(), times: Vec::new(), values: Vec::new() }
            });
            entry.times.push(row.time);
            entry.values.push(row.value);
        }
        order.into_iter().map(|id| map.remove(&id).unwrap()).collect()
    }
}

/// Ingest options; `missing_markers` lists the cell spellings treated as
/// missing (always includes the empty field).
#[derive(Debug, Clone)]
pub struct IngestOptions {
    pub missing_markers: Vec<String>,
}

impl Default for IngestOptions {
    fn default() -> Self {
        Self { missing_markers: vec![String::new(), "NA".to_string()] }
    }
}

pub fn ingest_csv(path: &Path, options: &IngestOptions) -> Result<DataTable, TableError> {
    let file = std::fs::File::open(path).map_err(|source| TableError::Io {
        path: path.display().to_string(),
        source,
    })?;
    ingest_csv_reader(file, options)
}

pub fn ingest_csv_reader<R: Read>(
    reader: R,
    options: &IngestOptions,
) -> Result<DataTable, TableError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);

    let headers = rdr
        .headers()
        .map_err(|e| TableError::MalformedRow { line: 1, reason: e.to_string() })?
        .clone();
    let found: Vec<&str> = headers.iter().collect();
    if found != ["series", "time", "value"] {
        return Err(TableError::BadHeader { line: 1, found: found.join(",") });
    }

    let mut rows = Vec::new();
    let mut last_time: HashMap<String, f64> = HashMap::new();
    for record in rdr.records() {
        let record = record.map_err(|e| TableError::MalformedRow {
            line: e.position().map(|p| p.line()).unwrap_or(0),
            reason: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 3 {
            return Err(TableError::MalformedRow {
                line,
                reason: format!("expected 3 fields, found {}", record.len()),
            });
        }
        let series = record[0].to_string();
        if series.is_empty() {
            return Err(TableError::MalformedRow { line, reason: "empty series id".into() });
        }
        let time: f64 = record[1]
            .parse()
            .map_err(|_| TableError::MalformedRow {
                line,
                reason: format!("time `{}` is not a number", &record[1]),
            })?;
        if !time.is_finite() {
            return Err(TableError::MalformedRow { line, reason: "time is not finite".into() });
        }
        let raw_value = &record[2];
        let value = if options.missing_markers.iter().any(|m| m == raw_value) {
            None
        } else {
            let v: f64 = raw_value.parse().map_err(|_| TableError::MalformedRow {
                line,
                reason: format!("value `{raw_value}` is not a number or missing marker"),
            })?;
            if !v.is_finite() {
                return Err(TableError::MalformedRow {
                    line,
                    reason: "value is not finite".into(),
                });
            }
            Some(v)
        };
        if let Some(&prev) = last_time.get(&series) {
            if time == prev {
                return Err(TableError::DuplicateTimePoint { line, series, time });
            }
            if time < prev {
                return Err(TableError::NonMonotoneTime { line, series, time });
            }
        }
        last_time.insert(series.clone(), time);
        rows.push(DataRow { series, time, value, line });
    }
    Ok(DataTable { rows })
}

/// Write series in the ingest schema with shortest round-trip floats.
pub fn write_dataset<W: Write>(
    out: &mut W,
    series: &[(String, Vec<f64>, Vec<f64>)],
) -> std::io::Result<()> {
    writeln!(out, "series,time,value")?;
    for (id, times, values) in series {
        for (t, v) in times.iter().zip(values) {
            writeln!(out, "{id},{t},{v}")?;
        }
    }
    Ok(())
}
