//! Acceptance suite. Each test prints one `PASS`/`FAIL` line for its
//! criterion (written straight to stdout so it survives output capture)
//! and then asserts.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use nhr::degeneracy::{petermann_simple, strength_function};
use nhr::minors::{mode_from_partial_trace, negated_charpoly, partial_trace_direct, partial_trace_explicit, partial_trace_recursive};
use nhr::numcore::{aberth_roots, svd};
use nhr::perturb::predict_polygons;
use nhr::response::{loglog_slope, power_sweep, SweepResult};
use nhr::{classify, fixtures, flv_expand, greens_direct, greens_uniform, Matrix, Report, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, title: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "[{status}] criterion {id:>2}: {title} ({detail})").unwrap();
}

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn random_c(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, |_, _| random_c(rng))
}

fn tol(n: usize) -> f64 {
    nhr::default_tolerance(n)
}

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n);
    m[(i, j)] = c(1.0);
    m
}

#[test]
fn criterion_01_cramer_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for case in 0..100 {
        let n = 2 + case % 9;
        let h = random_matrix(&mut rng, n);
        let roots = aberth_roots(flv_expand(&h, c(0.0)).coeffs()).unwrap();
        let exp = flv_expand(&h, random_c(&mut rng) * 0.7);
        let mut done = 0;
        while done < 20 {
            let e = random_c(&mut rng) * 2.0;
            if roots.iter().any(|r| (r - e).norm() < 0.05) {
                continue;
            }
            done += 1;
            let a = greens_uniform(&exp, e).unwrap();
            let b = greens_direct(&h, e).unwrap();
            worst = worst.max((&a.matrix - &b.matrix).max_abs() / b.matrix.max_abs());
        }
    }
    let pass = worst <= 1e-9;
    report(1, "uniform Green's function equals direct solve", pass, &format!("worst relative error {worst:.2e}"));
    assert!(pass);
}

#[test]
fn criterion_02_three_route_partial_traces() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    let mut worst_mode: f64 = 0.0;
    for case in 0..30 {
        let n = 2 + case % 5;
        let m = random_matrix(&mut rng, n);
        let coeffs = negated_charpoly(&m);
        for k in 1..=n {
            let direct = partial_trace_direct(&m, k).unwrap();
            let scale = direct.max_abs().max(1.0);
            let rec = partial_trace_recursive(&m, k).unwrap();
            let exp = partial_trace_explicit(&m, k, &coeffs).unwrap();
            worst = worst.max((&direct - &rec).max_abs() / scale).max((&direct - &exp).max_abs() / scale);
        }
        let h = random_matrix(&mut rng, n);
        let exp = flv_expand(&h, random_c(&mut rng));
        for k in 0..n {
            let b = mode_from_partial_trace(exp.shifted(), k).unwrap();
            worst_mode = worst_mode.max((&b - exp.mode(k)).max_abs() / exp.mode(k).max_abs().max(1.0));
        }
    }
    let pass = worst <= 1e-9 && worst_mode <= 1e-9;
    report(2, "direct, recursive and explicit partial traces agree", pass, &format!("routes {worst:.2e}, modes {worst_mode:.2e}"));
    assert!(pass);
}

#[test]
fn criterion_03_example_one_closed_forms() {
    let k0 = petermann_simple(&flv_expand(&fixtures::example1_ep(), c(0.0)), tol(3)).unwrap();
    let kp = petermann_simple(&flv_expand(&fixtures::example1_dp(), c(2.0)), tol(3)).unwrap();
    let ep = classify(&fixtures::example1_ep(), c(1.0), tol(3)).unwrap();
    let b0_dp = flv_expand(&fixtures::example1_dp::<f64>(), c(0.0)).mode(0).max_abs();
    // breaking √a·d = √c·b turns the double root at 0 into an exceptional point
    let b0_off = flv_expand(&fixtures::example1::<f64>(1.0, 1.0, 1.0, 1.0, 2.0), c(0.0)).mode(0).max_abs();
    let pass = (k0 - 2.0).abs() <= 1e-10
        && (kp - 1.5).abs() <= 1e-10
        && (ep.xi * ep.xi - 2.0).abs() <= 1e-10
        && (ep.eta * ep.eta - 2.0).abs() <= 1e-10
        && b0_dp <= 1e-12
        && b0_off > 1e-3;
    let detail = format!(
        "K0 {k0:.12}, K+ {kp:.12}, xi^2 {:.12}, eta^2 {:.12}, |B0| DP {b0_dp:.1e} / off {b0_off:.1e}",
        ep.xi * ep.xi,
        ep.eta * ep.eta
    );
    report(3, "three-level closed forms", pass, &detail);
    assert!(pass);
}

#[test]
fn criterion_04_four_level_case_table() {
    let cases: [(&str, Matrix, (usize, usize, usize, usize), f64, f64); 4] = [
        ("EP4", fixtures::example2_ep4(), (4, 1, 4, 1), 1.0, 1.0),
        ("(3,1)", fixtures::example2_31(), (4, 2, 3, 1), 1.0, 1.0),
        ("(2,2)", fixtures::example2_22(), (4, 2, 2, 2), 5.0, 4.0),
        ("(2,1,1)", fixtures::example2_211(), (4, 3, 2, 1), 3.0, 3.0),
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, h, sig, eta2, xi2) in cases {
        let r = classify(&h, c(0.0), tol(4)).unwrap();
        let ok = (r.alpha, r.gamma, r.ell, r.beta) == sig
            && (r.eta * r.eta - eta2).abs() <= 1e-9
            && (r.xi * r.xi - xi2).abs() <= 1e-9;
        pass &= ok;
        detail.push(format!("{name} {}", if ok { "ok" } else { "mismatch" }));
    }
    report(4, "four-level classification table", pass, &detail.join(", "));
    assert!(pass);
}

#[test]
fn criterion_05_spectral_strength_curve() {
    let mut worst: f64 = 0.0;
    for f in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let r = classify(&fixtures::example2(0.0, 1.0, -1.0, 1.0, 0.0, f, f), c(0.0), tol(4)).unwrap();
        let eta2 = 3.0 + 2.0 * f * f;
        let xi2 = 0.5 * (eta2 + (eta2 * eta2 - 16.0 * f * f).sqrt());
        worst = worst.max((r.eta * r.eta - eta2).abs()).max((r.xi * r.xi - xi2).abs());
    }
    let f = 0.05;
    let r = classify(&fixtures::example2(0.0, 1.0, -1.0, 1.0, 0.0, f, f), c(0.0), tol(4)).unwrap();
    let approx = 3.0 + 2.0 / 3.0 * f * f;
    let small = (r.xi * r.xi - approx).abs() / approx;
    let pass = worst <= 1e-8 && small <= 0.01;
    report(5, "strength curve and small-coupling expansion", pass, &format!("curve error {worst:.2e}, expansion {small:.2e}"));
    assert!(pass);
}

#[test]
fn criterion_06_peak_ratio() {
    let peak = |s: &SweepResult<f64>| s.powers.iter().cloned().fold(0.0, f64::max);
    let ep = power_sweep(&fixtures::example1_ep::<f64>(), 0.0, 2.0, 2001, 0.1).unwrap();
    let dp = power_sweep(&fixtures::example1_dp::<f64>(), -1.0, 1.0, 2001, 0.1).unwrap();
    let (pe, pd) = (peak(&ep), peak(&dp));
    let ratio = pe / pd;
    let pass = (15.0..=25.0).contains(&ratio) && (pe / 1250.0 - 1.0).abs() <= 0.2 && (pd / 62.5 - 1.0).abs() <= 0.2;
    report(6, "exceptional versus diabolic peak power", pass, &format!("EP {pe:.1}, DP {pd:.2}, ratio {ratio:.2}"));
    assert!(pass);
}

#[test]
fn criterion_07_super_lorentzian_exponents() {
    let cases: [(&str, Matrix, f64, usize); 4] = [
        ("l=1", fixtures::example1_dp(), 0.0, 1),
        ("l=2", fixtures::example1_ep(), 1.0, 2),
        ("l=3", fixtures::example2_31(), 0.0, 3),
        ("l=4", fixtures::example2_ep4(), 0.0, 4),
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, h, e, ell) in cases {
        let slope = loglog_slope(&h, c(e), (1e-5, 1e-3), 9).unwrap();
        let want = -2.0 * ell as f64;
        pass &= (slope / want - 1.0).abs() <= 0.02;
        detail.push(format!("{name} {slope:.4}"));
    }
    report(7, "log-log slope equals -2l", pass, &detail.join(", "));
    assert!(pass);
}

fn random_unit_norm(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let m = random_matrix(rng, n);
    let s = svd(&m).unwrap().s[0];
    m.scale(c(1.0 / s))
}

fn matched_error(h: &Matrix, hp: &Matrix, eps: f64, r: &Report) -> f64 {
    predict_polygons(h, hp, eps, r).unwrap().matched_error
}

#[test]
fn criterion_08_polygon_prediction() {
    let mut detail = Vec::new();
    let mut pass = true;

    let f1 = fixtures::example1_ep::<f64>();
    let r1 = classify(&f1, c(1.0), tol(3)).unwrap();
    let f4 = fixtures::example2_ep4::<f64>();
    let r4 = classify(&f4, c(0.0), tol(4)).unwrap();
    let stated = [(&f1, &r1, unit(3, 1, 0), 1e-4), (&f4, &r4, unit(4, 3, 0), 1e-8)];
    for (h, r, hp, eps) in &stated {
        let err = matched_error(h, hp, *eps, r);
        let bound = 10.0 * eps.powf(2.0 / r.ell as f64);
        pass &= err <= bound;
        detail.push(format!("l={} error {err:.1e}", r.ell));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (h, r) in [(&f1, &r1), (&f4, &r4)] {
        let hp = random_unit_norm(&mut rng, h.n());
        let expected = 2f64.powf(-2.0 / r.ell as f64);
        for eps in [1e-6, 1e-8] {
            let ratio = matched_error(h, &hp, eps / 2.0, r) / matched_error(h, &hp, eps, r);
            pass &= (ratio / expected - 1.0).abs() <= 0.3;
            detail.push(format!("l={} halving {ratio:.3}", r.ell));
        }
    }

    // two Jordan blocks of size 2 with different couplings, hidden by a unitary
    let (t1, t2) = (2.0, 0.5);
    let mut core = Matrix::zeros(4);
    core[(0, 1)] = c(t1);
    core[(2, 3)] = c(t2);
    let u = svd(&random_matrix(&mut rng, 4)).unwrap().u;
    let h = &(&u * &core) * &u.adjoint();
    let hp = &(&u * &(&unit(4, 1, 0) + &unit(4, 3, 2))) * &u.adjoint();
    let r = classify(&h, c(0.0), tol(4)).unwrap();
    let p = predict_polygons(&h, &hp, 1e-6, &r).unwrap();
    let ok_shape = r.beta == 2 && r.ell == 2 && p.sectors.len() == 2;
    pass &= ok_shape;
    if ok_shape {
        let mean_radius = |j: usize| {
            let mut total = 0.0;
            let mut count = 0;
            for root in &p.exact_roots {
                let nearest = (0..2)
                    .min_by(|&a, &b| {
                        let da = p.sectors[a].vertices.iter().map(|v| (v - root).norm()).fold(f64::INFINITY, f64::min);
                        let db = p.sectors[b].vertices.iter().map(|v| (v - root).norm()).fold(f64::INFINITY, f64::min);
                        da.total_cmp(&db)
                    })
                    .unwrap();
                if nearest == j {
                    total += (root - r.eigenvalue).norm();
                    count += 1;
                }
            }
            total / count as f64
        };
        let (h1, h2) = (p.sectors[0].h.norm(), p.sectors[1].h.norm());
        let want = (h1 / h2).powf(0.5);
        let got = mean_radius(0) / mean_radius(1);
        pass &= (got / want - 1.0).abs() <= 0.05;
        detail.push(format!("concentric ratio {got:.4} vs {want:.4}"));
    }
    report(8, "polygon prediction", pass, &detail.join(", "));
    assert!(pass);
}

#[test]
fn criterion_09_continuity_under_approach() {
    let mut errors = Vec::new();
    let mut scaling_worst: f64 = 0.0;
    for t in 2..=8 {
        let cc = 10f64.powi(-t);
        let h = fixtures::example1::<f64>(1.0, 1.0, 1.0, cc, 1.0);
        let root = c(1.0 + cc.sqrt());
        let exp = flv_expand(&h, root);
        let eta2 = strength_function(&exp, 2, 0, tol(3)).unwrap();
        errors.push((eta2 - 2.0).abs());
        // K·|E₊ - E₋|² approaches η² = 2 of the coalesced pair
        let k = petermann_simple(&exp, tol(3)).unwrap();
        let split = 2.0 * cc.sqrt();
        scaling_worst = scaling_worst.max((k * split * split / 2.0 - 1.0).abs());
    }
    let monotone = errors.windows(2).all(|w| w[1] < w[0]);
    let last = *errors.last().unwrap();
    let pass = monotone && last <= 1e-6 && scaling_worst <= 0.05;
    let detail = format!("monotone {monotone}, final error {last:.2e}, Petermann scaling deviation {scaling_worst:.2e}");
    report(9, "strength converges as the degeneracy is approached", pass, &detail);
    assert!(pass);
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_nhr")).args(args).env_remove("NHR_TOL").output().unwrap();
    assert!(out.status.success(), "nhr {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

#[test]
fn criterion_10_cli_golden_determinism() {
    let fixtures = ["f1_dp", "f1_ep", "f2_ep4", "f2_31", "f2_22", "f2_211"];
    let mut mismatches = Vec::new();
    for f in fixtures {
        let input = data(&format!("{f}.json"));
        let path = input.to_str().unwrap();
        for (cmd, args) in [("analyze", vec!["analyze", path]), ("modes", vec!["modes", path])] {
            let first = run_cli(&args);
            let second = run_cli(&args);
            let expected = std::fs::read(golden(&format!("{f}.{cmd}.json"))).unwrap_or_default();
            if first != second || first != expected {
                mismatches.push(format!("{f} {cmd}"));
            }
        }
    }
    let pass = mismatches.is_empty();
    let detail = if pass { "12 outputs byte-identical".to_string() } else { format!("mismatch: {}", mismatches.join(", ")) };
    report(10, "CLI output matches golden files across runs", pass, &detail);
    assert!(pass);
}
