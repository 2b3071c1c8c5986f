//! Result files.
//!
//! * rank tables: CSV `r,algorithm,mean_rank,std_err,replications`;
//! * estimate tables: CSV, one row per `(r, estimator, spike)`;
//! * threshold surfaces: CSV `lambda,beta,theta_a,theta_y,difference`;
//! * series: TSV with a two-column header;
//! * plain values: TSV, one per line, no header.
//!
//! JSON output serializes the same objects.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{EstimateRow, ResultTable};
use crate::error::{Error, Result};
use crate::estimation::ThresholdPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Format {
    Csv,
    Json,
    Tsv,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Tsv => "tsv",
        }
    }
}

/// Named `(x, y)` points for plotting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub x_name: String,
    pub y_name: String,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(x_name: &str, y_name: &str, points: Vec<(f64, f64)>) -> Self {
        Series {
            x_name: x_name.into(),
            y_name: y_name.into(),
            points,
        }
    }
}

pub enum Artifact<'a> {
    Table(&'a ResultTable),
    Estimates(&'a [EstimateRow]),
    Surface(&'a [ThresholdPoint]),
    Series(&'a Series),
    Values(&'a [f64]),
}

#[derive(Serialize)]
struct RankCsvRow<'a> {
    r: usize,
    algorithm: &'a str,
    mean_rank: f64,
    std_err: f64,
    replications: usize,
}

#[derive(Serialize)]
struct EstimateCsvRow<'a> {
    r: usize,
    estimator: &'a str,
    spike: usize,
    theta: Option<f64>,
    detected_fraction: f64,
    mean_theta_hat: Option<f64>,
    median_theta_hat: Option<f64>,
    median_sigma_hat: f64,
    replications: usize,
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::Parameter(format!("{}: {other:?}", path.display())),
    }
}

fn write_csv<T: Serialize>(path: &Path, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| csv_error(path, e))?;
    for row in rows {
        w.serialize(row).map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value).map_err(|source| Error::Json {
        path: path.into(),
        source,
    })?;
    writeln!(w).and_then(|_| w.flush()).map_err(|e| Error::io(path, e))
}

fn write_lines(path: &Path, header: Option<String>, lines: impl Iterator<Item = String>) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let io = |e| Error::io(path, e);
    if let Some(h) = header {
        writeln!(w, "{h}").map_err(io)?;
    }
    for line in lines {
        writeln!(w, "{line}").map_err(io)?;
    }
    w.flush().map_err(io)
}

fn unsupported(what: &str, format: Format) -> Error {
    Error::Parameter(format!("{what} cannot be written as {format:?}"))
}

pub fn export_results(artifact: Artifact<'_>, path: &Path, format: Format) -> Result<()> {
    match (artifact, format) {
        (Artifact::Table(t), Format::Csv) => write_csv(
            path,
            t.rows.iter().map(|row| RankCsvRow {
                r: row.r,
                algorithm: row.algorithm.name(),
                mean_rank: row.mean_rank,
                std_err: row.std_err,
                replications: row.replications,
            }),
        ),
        (Artifact::Table(t), Format::Json) => write_json(path, t),
        (Artifact::Estimates(rows), Format::Csv) => write_csv(
            path,
            rows.iter().map(|row| EstimateCsvRow {
                r: row.r,
                estimator: row.estimator.name(),
                spike: row.spike,
                theta: row.theta,
                detected_fraction: row.detected_fraction,
                mean_theta_hat: row.mean_theta_hat,
                median_theta_hat: row.median_theta_hat,
                median_sigma_hat: row.median_sigma_hat,
                replications: row.replications,
            }),
        ),
        (Artifact::Estimates(rows), Format::Json) => write_json(path, rows),
        (Artifact::Surface(points), Format::Csv) => write_csv(path, points.iter()),
        (Artifact::Surface(points), Format::Json) => write_json(path, points),
        (Artifact::Series(s), Format::Tsv) => write_lines(
            path,
            Some(format!("{}\t{}", s.x_name, s.y_name)),
            s.points.iter().map(|(x, y)| format!("{x}\t{y}")),
        ),
        (Artifact::Series(s), Format::Json) => write_json(path, s),
        (Artifact::Values(v), Format::Tsv) => write_lines(path, None, v.iter().map(|x| x.to_string())),
        (Artifact::Values(v), Format::Json) => write_json(path, v),
        (Artifact::Table(_), f) => Err(unsupported("a rank table", f)),
        (Artifact::Estimates(_), f) => Err(unsupported("an estimate table", f)),
        (Artifact::Surface(_), f) => Err(unsupported("a threshold surface", f)),
        (Artifact::Series(_), f) => Err(unsupported("a series", f)),
        (Artifact::Values(_), f) => Err(unsupported("a value list", f)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::montecarlo::ResultRow;
    use crate::ranktests::Algorithm;

    #[test]
    fn rank_table_csv_header() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.csv");
        let table = ResultTable {
            rows: vec![ResultRow {
                r: 25,
                algorithm: Algorithm::TwYhat,
                mean_rank: 0.12,
                std_err: 0.03,
                replications: 100,
                failures: 0,
            }],
        };
        export_results(Artifact::Table(&table), &path, Format::Csv).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("r,algorithm,mean_rank,std_err,replications"));
        assert_eq!(lines.next(), Some("25,TW_Yhat,0.12,0.03,100"));
        let json = dir.path().join("t.json");
        export_results(Artifact::Table(&table), &json, Format::Json).unwrap();
        let back: ResultTable = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
        assert_eq!(back, table);
    }

    #[test]
    fn series_and_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.tsv");
        export_results(
            Artifact::Series(&Series::new("x", "y", vec![(1.0, 0.5)])),
            &path,
            Format::Tsv,
        )
        .unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "x\ty\n1\t0.5\n");
        let path = dir.path().join("v.tsv");
        export_results(Artifact::Values(&[0.25, -1.0]), &path, Format::Tsv).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "0.25\n-1\n");
        assert!(export_results(Artifact::Values(&[1.0]), &path, Format::Csv).is_err());
    }

    #[test]
    fn io_errors_carry_path() {
        let path = Path::new("/nonexistent-dir/out.tsv");
        let err = export_results(Artifact::Values(&[1.0]), path, Format::Tsv).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/out.tsv"));
    }
}
