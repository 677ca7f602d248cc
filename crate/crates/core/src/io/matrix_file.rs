//! Matrix input: the JSON `MatrixFile` document and the `csv-reim` layout.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numcore::ComplexMatrix;

/// `{"n": 3, "entries": [[[re, im], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix<f64>) -> Self {
        Self { n: m.n(), entries: m.rows().map(|r| r.iter().map(|z| [z.re, z.im]).collect()).collect() }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix<f64>> {
        if self.entries.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: self.entries.len() });
        }
        let rows: Vec<Vec<Complex<f64>>> =
            self.entries.iter().map(|r| r.iter().map(|&[re, im]| Complex::new(re, im)).collect()).collect();
        let m = ComplexMatrix::from_rows(rows)?;
        if !m.is_finite() {
            return Err(Error::InvalidArgument("matrix entries must be finite".into()));
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    Json,
    /// One row per line, `re₀,im₀,re₁,im₁,...`, no header.
    CsvReim,
}

pub fn parse_json(text: &str) -> Result<ComplexMatrix<f64>> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("matrix JSON: {e}")))?;
    file.to_matrix()
}

pub fn parse_csv_reim(text: &str) -> Result<ComplexMatrix<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::InvalidArgument(format!("csv row {}: {e}", line + 1)))?;
        if record.len() % 2 != 0 {
            return Err(Error::InvalidArgument(format!("csv row {} has an odd number of columns", line + 1)));
        }
        let values = record
            .iter()
            .map(|f| f.parse::<f64>().map_err(|e| Error::InvalidArgument(format!("csv row {}: {e}", line + 1))))
            .collect::<Result<Vec<f64>>>()?;
        rows.push(values.chunks(2).map(|p| [p[0], p[1]]).collect::<Vec<_>>());
    }
    MatrixFile { n: rows.len(), entries: rows }.to_matrix()
}

pub fn parse_matrix(text: &str, format: InputFormat) -> Result<ComplexMatrix<f64>> {
    match format {
        InputFormat::Json => parse_json(text),
        InputFormat::CsvReim => parse_csv_reim(text),
    }
}
