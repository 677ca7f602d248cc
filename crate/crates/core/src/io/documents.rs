//! Output documents of the command-line tool.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::emit::complex;
use super::matrix_file::MatrixFile;
use crate::degeneracy::DegeneracyReport;
use crate::modal::ModalExpansion;
use crate::perturb::PolygonPrediction;

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Lowercase hex SHA-256 of the raw input bytes.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueEntry {
    pub eigenvalue: [f64; 2],
    /// Number of computed roots merged into this eigenvalue; 0 when given explicitly.
    pub cluster_size: usize,
    pub alpha: usize,
    pub gamma: usize,
    pub ell: usize,
    pub beta: usize,
    pub c_alpha: [f64; 2],
    pub b_star_index: usize,
    pub partial_strengths: Vec<f64>,
    pub xi: f64,
    pub eta: f64,
    pub petermann: Option<f64>,
    pub leading_right: Vec<Vec<[f64; 2]>>,
    pub leading_left: Vec<Vec<[f64; 2]>>,
    /// `|η^(n,m)|²` with rows `n = 1..=α` and columns `m = 0..`; `null` where divergent.
    pub strength_table: Vec<Vec<Option<f64>>>,
}

impl EigenvalueEntry {
    pub fn new(report: &DegeneracyReport<f64>, cluster_size: usize, strength_table: Vec<Vec<Option<f64>>>) -> Self {
        let vectors = |vs: Vec<&[num_complex::Complex<f64>]>| -> Vec<Vec<[f64; 2]>> {
            vs.into_iter().map(|v| v.iter().map(|&z| complex(z)).collect()).collect()
        };
        Self {
            eigenvalue: complex(report.eigenvalue),
            cluster_size,
            alpha: report.alpha,
            gamma: report.gamma,
            ell: report.ell,
            beta: report.beta,
            c_alpha: complex(report.c_alpha),
            b_star_index: report.b_star_index,
            partial_strengths: report.partial_strengths.clone(),
            xi: report.xi,
            eta: report.eta,
            petermann: report.petermann,
            leading_right: vectors(report.leading_right()),
            leading_left: vectors(report.leading_left()),
            strength_table,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    pub tolerance: f64,
    /// Single-linkage radius used to merge roots, absent when `--omega` was given.
    pub cluster_radius: Option<f64>,
    pub eigenvalues: Vec<EigenvalueEntry>,
}

/// Coefficients and modes at a reference energy; each mode uses the
/// matrix-file layout so it can be fed back as input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModesDocument {
    pub n: usize,
    pub omega: [f64; 2],
    pub coeffs: Vec<[f64; 2]>,
    pub modes: Vec<MatrixFile>,
}

impl ModesDocument {
    pub fn new(exp: &ModalExpansion<f64>) -> Self {
        Self {
            n: exp.n(),
            omega: complex(exp.omega()),
            coeffs: exp.coeffs().coeffs().iter().map(|&z| complex(z)).collect(),
            modes: exp.modes().iter().map(MatrixFile::from_matrix).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SectorEntry {
    pub h: [f64; 2],
    pub radius: f64,
    pub rotation: f64,
    pub vertices: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolygonDocument {
    pub tool: String,
    pub version: String,
    pub eigenvalue: [f64; 2],
    pub ell: usize,
    pub c_alpha: [f64; 2],
    pub epsilon: f64,
    pub sectors: Vec<SectorEntry>,
    pub exact_roots: Vec<[f64; 2]>,
    pub matched_error: f64,
}

impl PolygonDocument {
    pub fn new(report: &DegeneracyReport<f64>, p: &PolygonPrediction<f64>) -> Self {
        Self {
            tool: TOOL.into(),
            version: VERSION.into(),
            eigenvalue: complex(report.eigenvalue),
            ell: report.ell,
            c_alpha: complex(report.c_alpha),
            epsilon: p.epsilon,
            sectors: p
                .sectors
                .iter()
                .map(|s| SectorEntry {
                    h: complex(s.h),
                    radius: s.radius,
                    rotation: s.rotation,
                    vertices: s.vertices.iter().map(|&z| complex(z)).collect(),
                })
                .collect(),
            exact_roots: p.exact_roots.iter().map(|&z| complex(z)).collect(),
            matched_error: p.matched_error,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::io::emit::to_json;
    use crate::modal::flv_expand;
    use num_complex::Complex;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(digest(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn modes_document_round_trips() {
        let exp = flv_expand(&fixtures::example1_dp::<f64>(), Complex::new(0.3, -0.1));
        let text = to_json(&ModesDocument::new(&exp));
        let back: ModesDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(to_json(&back), text);
        assert_eq!(back.modes[0].to_matrix().unwrap(), *exp.mode(0));
    }
}
