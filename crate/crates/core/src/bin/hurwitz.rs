//! Command-line front end: arithmetic, tables and identity verification.
//!
//! Exit codes: 0 when every expectation is met, 1 on a verification failure
//! or an internal inconsistency between the two representations, 2 on usage
//! or parse errors.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hurwitz::identities::{run_all, run_suite, sample_inputs, IdentityReport, Suite};
use hurwitz::representations::{cayley_dickson_matrix, spacetime_map, Complex2x2};
use hurwitz::tables::StructureConstants;
use hurwitz::zorn::{
    crosscheck_closed_form, diamond, embed, extract, inverse, norm, CrossComparison,
};
use hurwitz::{format_element, oracle_multiply, parse_element, AlgebraKind, Element, VectorMatrix};

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Hurwitz algebra arithmetic and identity verification"
)]
struct Cli {
    /// Algebra: r, c, h or o
    #[arg(long, global = true, default_value = "o", value_parser = parse_algebra)]
    algebra: AlgebraKind,

    /// Random samples per verification suite
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,

    /// Seed for the sample generator
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Absolute residual tolerance
    #[arg(long, global = true, default_value = "1e-12", value_parser = parse_tolerance)]
    tolerance: f64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for verification (0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements with both the vector-matrix rule and the table
    Mul {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Quadratic norm of an element
    Norm {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Multiplicative inverse of an element
    Inverse {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Print the multiplication table
    Table,
    /// Run one identity suite, or `all`
    Verify { suite: String },
    /// Compare the closed-form octonion cross product against the table
    #[command(name = "crosscheck-eq19")]
    CrosscheckEq19,
    /// Demonstrations of comparison representations
    Demo {
        #[arg(value_enum)]
        which: Demo,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    CayleyDickson,
}

fn parse_algebra(s: &str) -> Result<AlgebraKind, String> {
    s.parse()
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        Ok(_) => Err("tolerance must be positive and finite".into()),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    /// exit 2
    Usage(String),
    /// exit 1
    Check(String),
    /// stdout was closed early; exit 2 without a message
    Closed,
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli, &mut io::stdout().lock())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Closed) => ExitCode::from(2),
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    match &cli.command {
        Command::Mul { lhs, rhs } => cmd_mul(cli, lhs, rhs, out),
        Command::Norm { element } => cmd_norm(cli, element, out),
        Command::Inverse { element } => cmd_inverse(cli, element, out),
        Command::Table => cmd_table(cli, out),
        Command::Verify { suite } => cmd_verify(cli, suite, out),
        Command::CrosscheckEq19 => cmd_crosscheck(cli, out),
        Command::Demo {
            which: Demo::CayleyDickson,
        } => cmd_demo_cayley_dickson(cli, out),
    }
}

fn emit(out: &mut impl Write, line: impl AsRef<str>) -> Outcome {
    writeln!(out, "{}", line.as_ref()).map_err(|e| match e.kind() {
        io::ErrorKind::BrokenPipe => Failure::Closed,
        _ => Failure::Usage(format!("write failed: {e}")),
    })
}

fn parse(text: &str, kind: AlgebraKind) -> Result<Element, Failure> {
    parse_element(text, kind).map_err(|e| Failure::Usage(format!("`{text}`: {e}")))
}

/// Element literal with signed zeros folded to `+0`, for display.
fn show_element(e: &Element) -> String {
    format_element(&Element::from_fn(e.kind(), |i| e[i] + 0.0))
}

fn max_diff(a: &Element, b: &Element) -> f64 {
    (*a - *b).max_abs()
}

fn cmd_mul(cli: &Cli, lhs: &str, rhs: &str, out: &mut impl Write) -> Outcome {
    let a = parse(lhs, cli.algebra)?;
    let b = parse(rhs, cli.algebra)?;
    let zorn = extract(&(embed(&a) * embed(&b)));
    let oracle = oracle_multiply(&a, &b).expect("same algebra");
    // The two routes sum in different orders, so non-integer inputs may differ
    // in the last bits; the gap is judged against the tolerance scaled by the
    // size of the product.
    let diff = max_diff(&zorn, &oracle);
    let scale = (a.norm_sqr() * b.norm_sqr()).sqrt().max(1.0);
    let agree = diff <= cli.tolerance * scale;
    match cli.format {
        Format::Text => {
            emit(out, show_element(&zorn))?;
            emit(out, format!("  vector-matrix: {}", show_element(&zorn)))?;
            emit(out, format!("  table:         {}", show_element(&oracle)))?;
            if diff != 0.0 {
                emit(out, format!("  max difference: {diff:e}"))?;
            }
        }
        Format::Json => emit(
            out,
            json!({
                "algebra": cli.algebra.name(),
                "lhs": show_element(&a),
                "rhs": show_element(&b),
                "vector_matrix": show_element(&zorn),
                "table": show_element(&oracle),
                "max_difference": diff,
                "agree": agree,
            })
            .to_string(),
        )?,
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "representations disagree by {diff:e}"
        )))
    }
}

fn cmd_norm(cli: &Cli, text: &str, out: &mut impl Write) -> Outcome {
    let a = parse(text, cli.algebra)?;
    let n = norm(&embed(&a));
    let oracle = (a * a.conjugate()).re();
    let agree = (n - oracle).abs() <= cli.tolerance * n.max(1.0);
    match cli.format {
        Format::Text => emit(out, n.to_string())?,
        Format::Json => emit(
            out,
            json!({
                "algebra": cli.algebra.name(),
                "element": show_element(&a),
                "norm": n,
                "table_norm": oracle,
                "agree": agree,
            })
            .to_string(),
        )?,
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Check(format!("norm {n} vs table {oracle}")))
    }
}

fn cmd_inverse(cli: &Cli, text: &str, out: &mut impl Write) -> Outcome {
    let a = parse(text, cli.algebra)?;
    let x = embed(&a);
    let inv = inverse(&x).map_err(|e| Failure::Usage(e.to_string()))?;
    let residual =
        (diamond(&x, &inv).expect("same algebra") - VectorMatrix::one(cli.algebra)).max_abs();
    let inv = extract(&inv);
    match cli.format {
        Format::Text => emit(out, show_element(&inv))?,
        Format::Json => emit(
            out,
            json!({
                "algebra": cli.algebra.name(),
                "element": show_element(&a),
                "inverse": show_element(&inv),
                "residual": residual,
            })
            .to_string(),
        )?,
    }
    if residual <= cli.tolerance {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "x * inverse(x) differs from 1 by {residual:e}"
        )))
    }
}

fn cmd_table(cli: &Cli, out: &mut impl Write) -> Outcome {
    let kind = cli.algebra;
    let table = StructureConstants::of(kind);
    let d = kind.dim();
    let cells: Vec<Vec<String>> = (0..d)
        .map(|i| (0..d).map(|j| table.get(i, j).to_string()).collect())
        .collect();
    match cli.format {
        Format::Text => {
            let header: String = (0..d).map(|j| format!("{:>5}", format!("e{j}"))).collect();
            emit(out, format!("    {header}"))?;
            for (i, row) in cells.iter().enumerate() {
                let body: String = row.iter().map(|c| format!("{c:>5}")).collect();
                emit(out, format!("{:<4}{body}", format!("e{i}")))?;
            }
        }
        Format::Json => emit(
            out,
            json!({ "algebra": kind.name(), "table": cells }).to_string(),
        )?,
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, which: &str, out: &mut impl Write) -> Outcome {
    let reports: Vec<IdentityReport> = if which.eq_ignore_ascii_case("all") {
        run_all(cli.algebra, cli.samples, cli.seed, cli.tolerance)
            .map_err(|e| Failure::Usage(e.to_string()))?
    } else {
        let suite: Suite = which.parse().map_err(Failure::Usage)?;
        vec![
            run_suite(suite, cli.algebra, cli.samples, cli.seed, cli.tolerance)
                .map_err(|e| Failure::Usage(e.to_string()))?,
        ]
    };
    for r in &reports {
        match cli.format {
            Format::Text => emit(out, r.to_text())?,
            Format::Json => emit(out, r.to_json())?,
        }
    }
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.suite.name())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(failed.join(", ")))
    }
}

fn vector_literal(v: &[f64; 7]) -> String {
    let x = VectorMatrix::new(AlgebraKind::Octonion, 0.0, v).expect("seven components");
    show_element(&extract(&x))
}

fn comparison_json(c: &CrossComparison) -> serde_json::Value {
    json!({
        "left": format!("e{}", c.left),
        "right": format!("e{}", c.right),
        "closed_form": vector_literal(&c.closed_form),
        "table": vector_literal(&c.table),
        "agree": c.agrees(),
    })
}

fn cmd_crosscheck(cli: &Cli, out: &mut impl Write) -> Outcome {
    let report = crosscheck_closed_form();
    let mismatches: Vec<_> = report.iter().filter(|c| !c.agrees()).collect();
    match cli.format {
        Format::Text => {
            for c in &mismatches {
                emit(
                    out,
                    format!(
                        "mismatch e{} x e{}: closed form {}, table {}",
                        c.left,
                        c.right,
                        vector_literal(&c.closed_form),
                        vector_literal(&c.table)
                    ),
                )?;
            }
            emit(out, format!("{} pairs compared, {} mismatches", report.len(), mismatches.len()))?;
        }
        Format::Json => emit(
            out,
            json!({
                "pairs": report.len(),
                "mismatches": mismatches.len(),
                "mismatched_pairs": mismatches.iter().map(|c| comparison_json(c)).collect::<Vec<_>>(),
                "comparisons": report.iter().map(comparison_json).collect::<Vec<_>>(),
            })
            .to_string(),
        )?,
    }
    Ok(())
}

fn cmd_demo_cayley_dickson(cli: &Cli, out: &mut impl Write) -> Outcome {
    let h = AlgebraKind::Quaternion;
    let basis: Vec<Element> = (0..4)
        .map(|i| Element::basis(h, i).expect("index"))
        .collect();
    let m = |q: &Element| cayley_dickson_matrix(q).expect("quaternion");

    let mut hom_failures = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            if m(&(*p * *q)) != m(p) * m(q) {
                hom_failures.push(format!("e{i} e{j}"));
            }
        }
    }

    let det_residual = (0..cli.samples)
        .map(|i| {
            let q = extract(&sample_inputs(h, cli.seed, i, 1, false)[0]);
            (m(&q).det() - num_complex::Complex64::new(norm(&embed(&q)), 0.0)).norm()
        })
        .fold(0.0, f64::max);

    let mut minkowski_failures = 0u32;
    let grid = -3..=3;
    for x in grid.clone() {
        for y in grid.clone() {
            for z in grid.clone() {
                for t in grid.clone() {
                    let (x, y, z, t) = (f64::from(x), f64::from(y), f64::from(z), f64::from(t));
                    let det = spacetime_map(x, y, z, t).det();
                    if det.re != t * t - x * x - y * y - z * z || det.im != 0.0 {
                        minkowski_failures += 1;
                    }
                }
            }
        }
    }

    let ok = hom_failures.is_empty() && det_residual <= cli.tolerance && minkowski_failures == 0;
    match cli.format {
        Format::Text => {
            for (i, q) in basis.iter().enumerate() {
                emit(out, format!("M(e{i}) = {}", show(&m(q))))?;
            }
            emit(
                out,
                format!(
                    "multiplicative on 16 basis pairs: {}",
                    hom_failures.is_empty()
                ),
            )?;
            emit(
                out,
                format!(
                    "max |det M(q) - N(q)| over {} samples: {det_residual:e}",
                    cli.samples
                ),
            )?;
            emit(
                out,
                format!("spacetime determinant mismatches on [-3,3]^4: {minkowski_failures}"),
            )?;
        }
        Format::Json => emit(
            out,
            json!({
                "basis_matrices": basis.iter().map(|q| tidy(m(q))).collect::<Vec<_>>(),
                "multiplicative": hom_failures.is_empty(),
                "multiplicative_failures": hom_failures,
                "det_norm_samples": cli.samples,
                "det_norm_max_residual": det_residual,
                "spacetime_grid_points": 7u32.pow(4),
                "spacetime_det_mismatches": minkowski_failures,
                "passed": ok,
            })
            .to_string(),
        )?,
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check(
            "complex 2x2 realization check failed".into(),
        ))
    }
}

/// Folds signed zeros to `+0`, for display.
fn tidy(m: Complex2x2) -> Complex2x2 {
    Complex2x2(m.0.map(|row| row.map(|z| z + num_complex::Complex64::new(0.0, 0.0))))
}

fn show(m: &Complex2x2) -> String {
    let c = |z: num_complex::Complex64| format!("{}{:+}i", z.re + 0.0, z.im + 0.0);
    format!(
        "[[{}, {}], [{}, {}]]",
        c(m.0[0][0]),
        c(m.0[0][1]),
        c(m.0[1][0]),
        c(m.0[1][1])
    )
}
