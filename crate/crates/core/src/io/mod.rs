//! Serialization for the command-line tool.

mod documents;
mod emit;
mod matrix_file;

pub use documents::{digest, EigenvalueEntry, ModesDocument, PolygonDocument, ReportDocument, SectorEntry, TOOL, VERSION};
pub use emit::{fmt_float, to_json};
pub use matrix_file::{parse_csv_reim, parse_json, parse_matrix, InputFormat, MatrixFile};
