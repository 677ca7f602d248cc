//! Command implementations behind the `nhr` binary.
//!
//! Each command returns an [`Outcome`] instead of printing, so the binary
//! stays a thin shell and the commands can be exercised directly.

use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex;

use crate::degeneracy::{classify, strength_function, strength_table};
use crate::error::Error;
use crate::io::{self, EigenvalueEntry, InputFormat, ModesDocument, PolygonDocument, ReportDocument};
use crate::modal::flv_expand;
use crate::numcore::{aberth_roots, polish_multiple_root, spectral_norm, ComplexMatrix};
use crate::perturb::predict_polygons;
use crate::response::power_sweep;
use crate::scalar::default_tolerance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_DIVERGENT: i32 = 4;

/// Relative single-linkage radius for merging computed roots.
pub const CLUSTER_RADIUS: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: stderr.into(), code }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::fail(exit_code(&e), format!("error: {e}\n"))
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotAnEigenvalue | Error::ZeroElement | Error::OnResonance => EXIT_DOMAIN,
        Error::DivergentStrength { .. } => EXIT_DIVERGENT,
        Error::InvalidArgument(_) | Error::DimensionMismatch { .. } | Error::BadOrder { .. } | Error::BadIndexSet(_) => {
            EXIT_INPUT
        }
        _ => EXIT_INTERNAL,
    }
}

#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub format: InputFormat,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone)]
pub enum Command {
    Analyze { matrix: PathBuf, omega: Option<Complex<f64>> },
    Greens { matrix: PathBuf, e_min: f64, e_max: f64, steps: usize, loss: f64 },
    Modes { matrix: PathBuf, omega: Complex<f64> },
    Perturb { h0: PathBuf, h_prime: PathBuf, epsilon: f64, omega: Complex<f64> },
    Strength { matrix: PathBuf, omega: Complex<f64>, n: usize, m: usize },
}

/// Parses `a`, `a+bi`, `a-bi`, `bi`, `i` or `re,im`.
pub fn parse_complex(text: &str) -> Result<Complex<f64>, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse complex number {text:?}");
    let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
    if s.is_empty() {
        return Err(bad());
    }
    let z = if let Some((re, im)) = s.split_once(',') {
        Complex::new(num(re)?, num(im)?)
    } else if let Some(body) = s.strip_suffix(['i', 'j']) {
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let imag = |t: &str| match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => num(t),
        };
        match split {
            Some(k) => Complex::new(num(&body[..k])?, imag(&body[k..])?),
            None => Complex::new(0.0, imag(body)?),
        }
    } else {
        Complex::new(num(&s)?, 0.0)
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

/// Single-linkage clusters of `roots` within `radius`, as
/// `(mean, size)` sorted by real then imaginary part.
pub fn cluster_roots(roots: &[Complex<f64>], radius: f64) -> Vec<(Complex<f64>, usize)> {
    let n = roots.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut i: usize) -> usize {
        while label[i] != i {
            label[i] = label[label[i]];
            i = label[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() <= radius {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<(usize, Complex<f64>, usize)> = Vec::new();
    for i in 0..n {
        let root = find(&mut label, i);
        match groups.iter_mut().find(|g| g.0 == root) {
            Some(g) => {
                g.1 += roots[i];
                g.2 += 1;
            }
            None => groups.push((root, roots[i], 1)),
        }
    }
    let mut out: Vec<(Complex<f64>, usize)> = groups.into_iter().map(|(_, sum, k)| (sum / k as f64, k)).collect();
    out.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    out
}

struct Input {
    matrix: ComplexMatrix<f64>,
    bytes: Vec<u8>,
}

fn load(path: &Path, format: InputFormat) -> Result<Input, Outcome> {
    let bytes = fs::read(path).map_err(|e| Outcome::fail(EXIT_INPUT, format!("error: {}: {e}\n", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Outcome::fail(EXIT_INPUT, format!("error: {}: not UTF-8\n", path.display())))?;
    let matrix = io::parse_matrix(&text, format)
        .map_err(|e| Outcome::fail(EXIT_INPUT, format!("error: {}: {e}\n", path.display())))?;
    Ok(Input { matrix, bytes })
}

fn tolerance(settings: &Settings, n: usize) -> Result<f64, Outcome> {
    match settings.tol {
        None => Ok(default_tolerance(n)),
        Some(t) if t.is_finite() && t > 0.0 => Ok(t),
        Some(t) => Err(Outcome::fail(EXIT_INPUT, format!("error: tolerance must be positive, got {t}\n"))),
    }
}

pub fn run(command: &Command, settings: &Settings) -> Outcome {
    let result = match command {
        Command::Analyze { matrix, omega } => analyze(matrix, *omega, settings),
        Command::Greens { matrix, e_min, e_max, steps, loss } => greens(matrix, *e_min, *e_max, *steps, *loss, settings),
        Command::Modes { matrix, omega } => modes(matrix, *omega, settings),
        Command::Perturb { h0, h_prime, epsilon, omega } => perturb(h0, h_prime, *epsilon, *omega, settings),
        Command::Strength { matrix, omega, n, m } => strength(matrix, *omega, *n, *m, settings),
    };
    result.unwrap_or_else(|o| o)
}

fn analyze(path: &Path, omega: Option<Complex<f64>>, settings: &Settings) -> Result<Outcome, Outcome> {
    let input = load(path, settings.format)?;
    let h = &input.matrix;
    let tol = tolerance(settings, h.n())?;
    let (targets, cluster_radius) = match omega {
        Some(z) => (vec![(z, 0)], None),
        None => {
            let poly = flv_expand(h, Complex::new(0.0, 0.0)).coeffs().clone();
            let roots = aberth_roots(&poly)?;
            let radius = CLUSTER_RADIUS * spectral_norm(h)?;
            let clusters = cluster_roots(&roots, radius)
                .into_iter()
                .map(|(z, k)| (polish_multiple_root(&poly, z, k, radius), k))
                .collect();
            (clusters, Some(radius))
        }
    };
    let mut eigenvalues = Vec::with_capacity(targets.len());
    for (z, size) in targets {
        let report = classify(h, z, tol)?;
        let table = strength_table(&flv_expand(h, z), report.alpha, tol);
        eigenvalues.push(EigenvalueEntry::new(&report, size, table));
    }
    let doc = ReportDocument {
        tool: io::TOOL.into(),
        version: io::VERSION.into(),
        input_sha256: io::digest(&input.bytes),
        tolerance: tol,
        cluster_radius,
        eigenvalues,
    };
    Ok(Outcome::ok(io::to_json(&doc)))
}

fn greens(path: &Path, e_min: f64, e_max: f64, steps: usize, loss: f64, settings: &Settings) -> Result<Outcome, Outcome> {
    let input = load(path, settings.format)?;
    let sweep = power_sweep(&input.matrix, e_min, e_max, steps, loss)?;
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let internal = |e: csv::Error| Outcome::fail(EXIT_INTERNAL, format!("error: {e}\n"));
    writer.write_record(["E", "P"]).map_err(internal)?;
    for (e, p) in sweep.energies.iter().zip(&sweep.powers) {
        writer.write_record([io::fmt_float(e.re), io::fmt_float(*p)]).map_err(internal)?;
    }
    let bytes = writer.into_inner().map_err(|e| Outcome::fail(EXIT_INTERNAL, format!("error: {e}\n")))?;
    Ok(Outcome::ok(String::from_utf8(bytes).expect("ASCII output")))
}

fn modes(path: &Path, omega: Complex<f64>, settings: &Settings) -> Result<Outcome, Outcome> {
    let input = load(path, settings.format)?;
    let exp = flv_expand(&input.matrix, omega);
    Ok(Outcome::ok(io::to_json(&ModesDocument::new(&exp))))
}

fn perturb(h0: &Path, h_prime: &Path, epsilon: f64, omega: Complex<f64>, settings: &Settings) -> Result<Outcome, Outcome> {
    if !epsilon.is_finite() || epsilon == 0.0 {
        return Err(Outcome::fail(EXIT_INPUT, format!("error: epsilon must be finite and nonzero, got {epsilon}\n")));
    }
    let base = load(h0, settings.format)?;
    let pert = load(h_prime, settings.format)?;
    let tol = tolerance(settings, base.matrix.n())?;
    let report = classify(&base.matrix, omega, tol)?;
    let prediction = predict_polygons(&base.matrix, &pert.matrix, epsilon, &report)?;
    Ok(Outcome::ok(io::to_json(&PolygonDocument::new(&report, &prediction))))
}

fn strength(path: &Path, omega: Complex<f64>, n: usize, m: usize, settings: &Settings) -> Result<Outcome, Outcome> {
    let input = load(path, settings.format)?;
    let tol = tolerance(settings, input.matrix.n())?;
    match strength_function(&flv_expand(&input.matrix, omega), n, m, tol) {
        Ok(v) => Ok(Outcome::ok(format!("{}\n", io::fmt_float(v)))),
        Err(Error::DivergentStrength { .. }) => {
            Ok(Outcome { stdout: "DIVERGENT\n".into(), stderr: String::new(), code: EXIT_DIVERGENT })
        }
        Err(e) => Err(e.into()),
    }
}
