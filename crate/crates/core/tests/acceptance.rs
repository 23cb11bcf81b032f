//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hurwitz::hilbert::{
    complex_scalar_product, multicomponent_expand_complex, multicomponent_expand_real,
    real_projection_form, real_scalar_product,
};
use hurwitz::hmatrix::matmul;
use hurwitz::identities::{associator, commutator, run_suite, sample_inputs, Suite};
use hurwitz::representations::{cayley_dickson_matrix, spacetime_map};
use hurwitz::zorn::{cross, crosscheck_closed_form, dot, norm, real_part};
use hurwitz::{oracle_multiply, AlgebraKind, Element, HMatrix, ModuleState, VectorMatrix};
use num_complex::Complex64;
use AlgebraKind::*;

const SEED: u64 = 42;
const SAMPLES: u64 = 10_000;
const TOL: f64 = 1e-12;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            "basis products agree with the tables",
            c01_basis_isomorphism,
        ),
        ("quadratic identity", c02_quadratic_identity),
        ("norm composition", c03_norm_composition),
        ("associativity ladder", c04_associativity_ladder),
        (
            "octonion alternative, flexible and Moufang laws",
            c05_octonion_laws,
        ),
        ("trace cyclicity and scalar associator", c06_trace_cyclicity),
        ("vector identities", c07_vector_identities),
        (
            "closed-form octonion cross product report",
            c08_closed_form_cross,
        ),
        ("Hilbert-module scalar products", c09_hilbert_modules),
        ("complex 2x2 realization", c10_complex_realization),
        ("matrix layer", c11_matrix_layer),
        ("verify all is deterministic", c12_determinism),
    ];
    let mut failures = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", n + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2}s)", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs a suite and requires its verdict to be a pass; returns the residual.
fn suite_passes(suite: Suite, kind: AlgebraKind, tol: f64) -> Result<f64, String> {
    let r = run_suite(suite, kind, SAMPLES, SEED, tol).map_err(|e| e.to_string())?;
    ensure(r.passed, || r.to_text())?;
    Ok(r.max_residual)
}

fn c01_basis_isomorphism() -> Check {
    let started = Instant::now();
    let mut checks = 0;
    for kind in AlgebraKind::ALL {
        for i in 0..kind.dim() {
            for j in 0..kind.dim() {
                let a = Element::basis(kind, i).unwrap();
                let b = Element::basis(kind, j).unwrap();
                let via_matrices = hurwitz::extract(&(hurwitz::embed(&a) * hurwitz::embed(&b)));
                let via_table = oracle_multiply(&a, &b).unwrap();
                ensure(via_matrices == via_table, || format!("{kind} e{i} e{j}"))?;
                checks += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{checks} exact basis products"))
}

fn c02_quadratic_identity() -> Check {
    let mut worst: f64 = 0.0;
    for kind in AlgebraKind::ALL {
        worst = worst.max(suite_passes(Suite::QuadraticIdentity, kind, TOL)?);
    }
    Ok(format!("max residual {worst:e} over 4 x {SAMPLES}"))
}

fn c03_norm_composition() -> Check {
    let mut worst: f64 = 0.0;
    for kind in AlgebraKind::ALL {
        worst = worst.max(suite_passes(Suite::NormComposition, kind, 1e-10)?);
    }
    Ok(format!("max relative residual {worst:e}"))
}

fn c04_associativity_ladder() -> Check {
    let mut worst: f64 = 0.0;
    for kind in [Real, Complex] {
        worst = worst.max(suite_passes(Suite::Commutativity, kind, TOL)?);
        worst = worst.max(suite_passes(Suite::Associativity, kind, TOL)?);
    }
    worst = worst.max(suite_passes(Suite::Associativity, Quaternion, TOL)?);

    // Expected failures: the suites must find a violation.
    suite_passes(Suite::Commutativity, Quaternion, TOL)?;
    suite_passes(Suite::Associativity, Octonion, TOL)?;

    let e = |kind, i| VectorMatrix::basis(kind, i).unwrap();
    let c = commutator(&e(Quaternion, 1), &e(Quaternion, 2)).unwrap();
    ensure(c == e(Quaternion, 3).scale(2.0), || {
        format!("[e1, e2] = {c}")
    })?;

    let a = associator(&e(Octonion, 1), &e(Octonion, 2), &e(Octonion, 4)).unwrap();
    ensure(a == e(Octonion, 5).scale(-2.0), || {
        format!("[e1, e2, e4] = {a}")
    })?;
    Ok(format!(
        "max residual {worst:e}; [e1,e2] = 2e3 in H; [e1,e2,e4] = -2e5 in O"
    ))
}

fn c05_octonion_laws() -> Check {
    let mut worst: f64 = 0.0;
    for suite in [
        Suite::LeftAlternative,
        Suite::RightAlternative,
        Suite::Flexibility,
        Suite::MoufangLeft,
        Suite::MoufangRight,
        Suite::MoufangMiddle,
    ] {
        worst = worst.max(suite_passes(suite, Octonion, TOL)?);
    }
    Ok(format!("6 laws, max residual {worst:e}"))
}

fn c06_trace_cyclicity() -> Check {
    let trace = suite_passes(Suite::TraceCyclic, Octonion, TOL)?;
    let mut scalar: f64 = 0.0;
    for i in 0..SAMPLES {
        let x = sample_inputs(Octonion, SEED, i, 3, false);
        scalar = scalar.max(real_part(&associator(&x[0], &x[1], &x[2]).unwrap()).abs());
    }
    ensure(scalar <= TOL, || format!("scalar associator {scalar:e}"))?;
    Ok(format!("trace {trace:e}, scalar associator {scalar:e}"))
}

fn c07_vector_identities() -> Check {
    let mut worst: f64 = 0.0;
    for kind in [Quaternion, Octonion] {
        for i in 0..SAMPLES {
            let v = sample_inputs(kind, SEED, i, 2, true);
            let (x, y) = (v[0].vec(), v[1].vec());
            let (xy, yx) = (dot(kind, x, y).unwrap(), dot(kind, y, x).unwrap());
            worst = worst.max((xy.paper_dot - yx.paper_dot).abs());
            let (p, q) = (cross(kind, x, y).unwrap(), cross(kind, y, x).unwrap());
            worst = p
                .iter()
                .zip(&q)
                .fold(worst, |w, (a, b)| w.max((a + b).abs()));
        }
        worst = worst.max(suite_passes(Suite::TripleCyclic, kind, TOL)?);
    }
    ensure(worst <= TOL, || {
        format!("dot symmetry or cross antisymmetry {worst:e}")
    })?;
    worst = worst.max(suite_passes(Suite::BacCab, Quaternion, TOL)?);
    worst = worst.max(suite_passes(Suite::OctXxy, Octonion, TOL)?);
    Ok(format!("max residual {worst:e}"))
}

fn c08_closed_form_cross() -> Check {
    let first = crosscheck_closed_form();
    ensure(first == crosscheck_closed_form(), || {
        "report not deterministic".into()
    })?;
    ensure(first.len() == 49, || format!("{} pairs", first.len()))?;
    let mismatched: Vec<(usize, usize)> = first
        .iter()
        .filter(|c| !c.agrees())
        .map(|c| (c.left, c.right))
        .collect();
    ensure(!mismatched.is_empty(), || "no mismatches reported".into())?;

    let bin = env!("CARGO_BIN_EXE_hurwitz");
    let run = || {
        Command::new(bin)
            .args(["crosscheck-eq19", "--format", "json"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    ensure(a.status.success() && a.stdout == b.stdout, || {
        "CLI report differs between runs".into()
    })?;
    Ok(format!("49 pairs, mismatches at {mismatched:?}"))
}

/// A state of length `1..=8` fixed by `index`; `stream_offset` picks an
/// independent draw of the same length.
fn random_state(kind: AlgebraKind, index: u64, stream_offset: u64) -> ModuleState {
    let n = 1 + (index % 8) as usize;
    ModuleState::new(
        kind,
        sample_inputs(kind, SEED, stream_offset + index, n, false),
    )
    .unwrap()
}

fn c09_hilbert_modules() -> Check {
    const STATES: u64 = 1_000;
    let mut worst: f64 = 0.0;
    for kind in AlgebraKind::ALL {
        let zero = ModuleState::new(kind, vec![VectorMatrix::zero(kind); 3]).unwrap();
        ensure(real_scalar_product(&zero, &zero).unwrap() == 0.0, || {
            "(0, 0) != 0".into()
        })?;
        for i in 0..STATES {
            let f = random_state(kind, i, 0);
            let ff = real_scalar_product(&f, &f).unwrap();
            ensure(ff > 0.0, || {
                format!("{kind}: (f, f)_R = {ff} for nonzero f")
            })?;
        }
    }
    for i in 0..STATES {
        let f = random_state(Quaternion, i, 0);
        let g = random_state(Quaternion, i, 1 << 32);
        let direct = real_scalar_product(&f, &g).unwrap();
        let projected = real_projection_form(&f, &g).unwrap();
        let expanded = multicomponent_expand_real(&f, &g).unwrap().evaluate();
        worst = worst.max((direct - projected).abs());
        worst = worst.max((expanded.scalar() - projected).abs());
        worst = expanded.vec().iter().fold(worst, |w, c| w.max(c.abs()));
    }
    for kind in [Quaternion, Octonion] {
        for i in 0..STATES {
            let (f, g) = (random_state(kind, i, 0), random_state(kind, i, 1 << 32));
            let c = complex_scalar_product(&f, &g).unwrap();
            worst = c.vec()[1..].iter().fold(worst, |w, x| w.max(x.abs()));
            let expanded = multicomponent_expand_complex(&f, &g).unwrap().evaluate();
            worst = worst.max((expanded - c).max_abs());
        }
    }
    ensure(worst <= TOL, || format!("max residual {worst:e}"))?;
    Ok(format!("{STATES} states per check, max residual {worst:e}"))
}

fn c10_complex_realization() -> Check {
    let m = |q: &Element| cayley_dickson_matrix(q).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let p = Element::basis(Quaternion, i).unwrap();
            let q = Element::basis(Quaternion, j).unwrap();
            ensure(m(&(p * q)) == m(&p) * m(&q), || {
                format!("M(e{i} e{j}) != M(e{i}) M(e{j})")
            })?;
        }
    }
    let mut det: f64 = 0.0;
    for i in 0..SAMPLES {
        let q = hurwitz::extract(&sample_inputs(Quaternion, SEED, i, 1, false)[0]);
        det = det.max((m(&q).det() - Complex64::new(norm(&hurwitz::embed(&q)), 0.0)).norm());
    }
    ensure(det <= TOL, || format!("det M(q) - N(q) = {det:e}"))?;
    let mut points = 0;
    for x in -3..=3 {
        for y in -3..=3 {
            for z in -3..=3 {
                for t in -3..=3 {
                    let d = spacetime_map(x as f64, y as f64, z as f64, t as f64).det();
                    let want = (t * t - x * x - y * y - z * z) as f64;
                    ensure(d == Complex64::new(want, 0.0), || {
                        format!("({x},{y},{z},{t}): {d}")
                    })?;
                    points += 1;
                }
            }
        }
    }
    Ok(format!(
        "16 basis pairs exact, det residual {det:e}, {points} grid points exact"
    ))
}

fn random_matrix(kind: AlgebraKind, n: usize, stream: u64) -> HMatrix {
    HMatrix::new(kind, n, sample_inputs(kind, SEED, stream, n * n, false)).unwrap()
}

fn c11_matrix_layer() -> Check {
    for i in 0..1_000 {
        let v = sample_inputs(Octonion, SEED, i, 2, false);
        let a = HMatrix::new(Octonion, 1, vec![v[0]]).unwrap();
        let b = HMatrix::new(Octonion, 1, vec![v[1]]).unwrap();
        ensure(*matmul(&a, &b).unwrap().get(0, 0) == v[0] * v[1], || {
            "1x1 product".into()
        })?;
    }
    let mut real: f64 = 0.0;
    for i in 0..200 {
        let n = 1 + (i % 6) as usize;
        let a = random_matrix(Real, n, 2 * i);
        let b = random_matrix(Real, n, 2 * i + 1);
        let z = matmul(&a, &b).unwrap();
        for r in 0..n {
            for c in 0..n {
                let plain: f64 = (0..n)
                    .map(|k| a.get(r, k).scalar() * b.get(k, c).scalar())
                    .sum();
                real = real.max((z.get(r, c).scalar() - plain).abs());
            }
        }
    }
    ensure(real <= TOL, || format!("real matmul {real:e}"))?;
    let mut assoc: f64 = 0.0;
    for i in 0..1_000 {
        let (a, b, c) = (
            random_matrix(Quaternion, 3, 3 * i),
            random_matrix(Quaternion, 3, 3 * i + 1),
            random_matrix(Quaternion, 3, 3 * i + 2),
        );
        let left = matmul(&matmul(&a, &b).unwrap(), &c).unwrap();
        let right = matmul(&a, &matmul(&b, &c).unwrap()).unwrap();
        assoc = assoc.max(left.sub(&right).max_abs());
    }
    ensure(assoc <= TOL, || {
        format!("quaternion 3x3 associativity {assoc:e}")
    })?;
    Ok(format!(
        "n = 1 exact, real {real:e}, quaternion 3x3 associativity {assoc:e}"
    ))
}

fn verify_all(threads: &str) -> Result<(Vec<u8>, Duration), String> {
    let bin = env!("CARGO_BIN_EXE_hurwitz");
    let started = Instant::now();
    let mut out = Vec::new();
    for kind in ["r", "c", "h", "o"] {
        let run = Command::new(bin)
            .args([
                "verify",
                "all",
                "--format",
                "json",
                "--seed",
                "42",
                "--algebra",
                kind,
            ])
            .args(["--threads", threads])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(run.status.success(), || {
            format!("verify all on {kind} exited with {}", run.status)
        })?;
        out.extend(run.stdout);
    }
    Ok((out, started.elapsed()))
}

fn c12_determinism() -> Check {
    let (first, elapsed) = verify_all("4")?;
    let (second, _) = verify_all("4")?;
    let (serial, _) = verify_all("1")?;
    ensure(first == second, || "output differs between runs".into())?;
    ensure(first == serial, || {
        "output differs between 1 and 4 threads".into()
    })?;
    ensure(elapsed < Duration::from_secs(30), || {
        format!("full suite took {elapsed:?}")
    })?;
    let lines = first.iter().filter(|&&b| b == b'\n').count();
    Ok(format!(
        "{lines} JSON lines identical across 3 runs, full suite {elapsed:.2?}"
    ))
}
