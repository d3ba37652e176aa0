//! Command-line surface for Speiser trees and the numerical checks.

pub mod dot;
pub mod graphfile;
pub mod number;
pub mod treefile;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use speiser_core::sectors::{DEFAULT_CAUCHY_TOL, DEFAULT_SCHEDULE};
use speiser_core::{
    catalog_tree, classify_zero_set, extend_tree, real_zeros, schwarzian_residual, sector_report,
    solution_basis, validate_axioms, CatalogVariant, Check, InitialData, RayOutcome,
    RealPolynomial, SpeiserTree, Stencil, Witness, ZeroSetClass,
};

pub use dot::export_dot;
pub use graphfile::serialize_graph;
pub use treefile::{parse_tree_file, serialize_tree};

use number::{fmt_complex_g, fmt_extended_g, fmt_g, parse_complex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

const DIGITS: usize = 12;
const DEFAULT_DEPTH: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "speiser",
    version,
    about = "Symmetric Speiser graphs and real zeros of w'' + P w = 0"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StencilArg {
    Central2,
    Central4,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the line-complex properties on a truncation of the tree.
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Write the depth-K truncation of the line complex.
    Extend {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the shape of the zero set.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Write a symmetric tree with the requested zero set.
    Catalog {
        #[arg(long)]
        degree: usize,
        /// `infinite` or `finite:K`.
        #[arg(long)]
        variant: String,
        /// Standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Real zeros of the solution with the given initial data.
    Zeros {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// `z0,w0,w0'`, all real.
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        /// `a:b`.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = speiser_core::odeint::DEFAULT_TOL)]
        tol: f64,
    },
    /// Residual of the Schwarzian identity for `f = w1 / w2` at one point.
    Schwarzian {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, default_value_t = 1e-3)]
        h: f64,
        #[arg(long, value_enum, default_value_t = StencilArg::Central4)]
        stencil: StencilArg,
    },
    /// Asymptotic values of `f = w1 / w2` along the Stokes directions.
    Sectors {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_delimiter = ',')]
        radius_schedule: Option<Vec<f64>>,
        #[arg(long, default_value_t = DEFAULT_CAUCHY_TOL)]
        tol: f64,
    },
    /// Write the tree as a Graphviz graph.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Run the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    match cli.command {
        Command::Validate { file, depth } => validate(&file, depth),
        Command::Extend { file, depth, out } => extend(&file, depth, &out),
        Command::Classify { file, depth } => classify(&file, depth),
        Command::Catalog {
            degree,
            variant,
            out,
        } => catalog(degree, &variant, out.as_deref()),
        Command::Zeros {
            poly,
            init,
            range,
            tol,
        } => zeros(&poly, &init, &range, tol),
        Command::Schwarzian {
            poly,
            at,
            h,
            stencil,
        } => schwarzian(&poly, &at, h, stencil),
        Command::Sectors {
            poly,
            radius_schedule,
            tol,
        } => sectors(&poly, radius_schedule.as_deref(), tol),
        Command::ExportDot { file, out } => export(&file, &out),
    }
    .unwrap_or_else(|o| o)
}

type Step<T> = Result<T, Outcome>;

fn read_tree(path: &Path) -> Step<SpeiserTree> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))?;
    parse_tree_file(&text)
        .map_err(|e| Outcome::fail(EXIT_VALIDATION, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Step<()> {
    std::fs::write(path, text)
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Vertex(v) => format!("vertex {v}"),
        Witness::HalfEdge(h) => format!("half-edge {h}"),
        Witness::Face(f) => format!("face {f}"),
        Witness::End(k) => format!("end {k}"),
    }
}

fn validate(file: &Path, depth: usize) -> Step<Outcome> {
    let tree = read_tree(file)?;
    let g = extend_tree(&tree, depth).map_err(|e| Outcome::fail(EXIT_VALIDATION, e.to_string()))?;
    let report = validate_axioms(&g);
    let names = [
        "bipartite",
        "full-star",
        "cyclic-order",
        "two-gons",
        "finite-unbounded",
    ];
    let mut out = String::new();
    writeln!(
        out,
        "depth {depth}: {} vertices, {} unchecked boundary vertices",
        g.vertex_count(),
        report.unchecked.len()
    )
    .unwrap();
    for (name, (_, check)) in names.iter().zip(report.checks()) {
        match check {
            Check::Pass => writeln!(out, "{name}: pass").unwrap(),
            Check::Fail(w) => {
                let shown: Vec<String> = w.iter().take(5).map(witness_text).collect();
                writeln!(out, "{name}: fail ({})", shown.join(", ")).unwrap()
            }
        }
    }
    let pass = report.all_pass();
    writeln!(out, "result: {}", if pass { "pass" } else { "fail" }).unwrap();
    Ok(Outcome {
        code: if pass { EXIT_OK } else { EXIT_VALIDATION },
        stdout: out,
        stderr: String::new(),
    })
}

fn extend(file: &Path, depth: usize, out: &Path) -> Step<Outcome> {
    let tree = read_tree(file)?;
    let g = extend_tree(&tree, depth).map_err(|e| Outcome::fail(EXIT_VALIDATION, e.to_string()))?;
    write_file(out, &serialize_graph(&g))?;
    Ok(Outcome::ok(format!(
        "wrote {} vertices at depth {depth}\n",
        g.vertex_count()
    )))
}

pub fn class_token(class: ZeroSetClass) -> String {
    match class {
        ZeroSetClass::FiniteCount(k) => format!("finite:{k}"),
        ZeroSetClass::UnboundedBothDirections => "unbounded".into(),
        ZeroSetClass::RayPositive => "ray-positive".into(),
        ZeroSetClass::RayNegative => "ray-negative".into(),
        ZeroSetClass::NotAllReal => "not-all-real".into(),
    }
}

fn classify(file: &Path, depth: usize) -> Step<Outcome> {
    let tree = read_tree(file)?;
    let g = extend_tree(&tree, depth.max(1))
        .map_err(|e| Outcome::fail(EXIT_VALIDATION, e.to_string()))?;
    let class = classify_zero_set(&g).map_err(|e| Outcome::fail(EXIT_VALIDATION, e.to_string()))?;
    Ok(Outcome::ok(format!("{}\n", class_token(class))))
}

fn catalog(degree: usize, variant: &str, out: Option<&Path>) -> Step<Outcome> {
    let variant = match variant {
        "infinite" => CatalogVariant::Infinite,
        v => match v.strip_prefix("finite:").and_then(|k| k.parse().ok()) {
            Some(k) => CatalogVariant::FiniteZeros(k),
            None => {
                return Err(Outcome::fail(
                    EXIT_USAGE,
                    format!("variant must be `infinite` or `finite:K`, got `{v}`"),
                ));
            }
        },
    };
    let tree =
        catalog_tree(degree, variant).map_err(|e| Outcome::fail(EXIT_VALIDATION, e.to_string()))?;
    let text = serialize_tree(&tree);
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Outcome::ok(format!("wrote {}\n", path.display())))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn parse_poly(text: &str) -> Step<RealPolynomial> {
    let coefficients = text
        .split(',')
        .map(|c| c.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Outcome::fail(EXIT_USAGE, format!("bad polynomial `{text}`")))?;
    RealPolynomial::new(coefficients).map_err(|e| Outcome::fail(EXIT_USAGE, e.to_string()))
}

fn numerical(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_NUMERICAL, e.to_string())
}

fn zeros(poly: &str, init: &str, range: &str, tol: f64) -> Step<Outcome> {
    let p = parse_poly(poly)?;
    let values = init
        .split(',')
        .map(|c| c.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .ok()
        .filter(|v| v.len() == 3)
        .ok_or_else(|| {
            Outcome::fail(
                EXIT_USAGE,
                format!("init must be three reals `z0,w0,w0'`, got `{init}`"),
            )
        })?;
    let interval = range
        .split_once(':')
        .and_then(|(a, b)| Some((a.trim().parse::<f64>().ok()?, b.trim().parse::<f64>().ok()?)))
        .ok_or_else(|| Outcome::fail(EXIT_USAGE, format!("range must be `a:b`, got `{range}`")))?;
    let init = InitialData::real(values[0], values[1], values[2]).map_err(numerical)?;
    let found = real_zeros(&p, init, interval, tol).map_err(numerical)?;
    let mut out = String::new();
    for z in &found.zeros {
        writeln!(out, "{}", fmt_g(*z, DIGITS)).unwrap();
    }
    let mut stderr = String::new();
    for (a, b) in &found.clusters {
        writeln!(
            stderr,
            "warning: zeros {} and {} are closer than 100 tol",
            fmt_g(*a, DIGITS),
            fmt_g(*b, DIGITS)
        )
        .unwrap();
    }
    Ok(Outcome {
        code: EXIT_OK,
        stdout: out,
        stderr,
    })
}

fn schwarzian(poly: &str, at: &str, h: f64, stencil: StencilArg) -> Step<Outcome> {
    let p = parse_poly(poly)?;
    let z =
        parse_complex(at).ok_or_else(|| Outcome::fail(EXIT_USAGE, format!("bad point `{at}`")))?;
    let stencil = match stencil {
        StencilArg::Central2 => Stencil::Central2,
        StencilArg::Central4 => Stencil::Central4,
    };
    let basis = solution_basis(
        &p,
        Complex64::new(0.0, 0.0),
        speiser_core::odeint::DEFAULT_TOL,
    )
    .map_err(numerical)?;
    let report = schwarzian_residual(&basis, &[z], h, stencil).map_err(numerical)?;
    let two_p = p.eval(z) * 2.0;
    Ok(Outcome::ok(format!(
        "residual {}\nat {} 2P {} h {}\n",
        fmt_g(report.max, DIGITS),
        fmt_complex_g(z, DIGITS),
        fmt_complex_g(two_p, DIGITS),
        fmt_g(h, DIGITS)
    )))
}

fn sectors(poly: &str, schedule: Option<&[f64]>, tol: f64) -> Step<Outcome> {
    let p = parse_poly(poly)?;
    let schedule = schedule.unwrap_or(&DEFAULT_SCHEDULE);
    let basis = solution_basis(
        &p,
        Complex64::new(0.0, 0.0),
        speiser_core::odeint::DEFAULT_TOL,
    )
    .map_err(numerical)?;
    let report = sector_report(&basis, schedule, tol).map_err(numerical)?;
    let mut out = String::new();
    writeln!(out, "rays {}", report.rays.len()).unwrap();
    for (i, ray) in report.rays.iter().enumerate() {
        let angle = fmt_g(ray.angle, DIGITS);
        match &ray.outcome {
            RayOutcome::Converged { value, gap } => writeln!(
                out,
                "ray {i} angle {angle} value {} gap {}",
                fmt_extended_g(*value, DIGITS),
                fmt_g(*gap, 3)
            )
            .unwrap(),
            RayOutcome::Divergent { reason } => {
                writeln!(out, "ray {i} angle {angle} divergent: {reason}").unwrap()
            }
        }
    }
    let groups: Vec<String> = report
        .groups
        .iter()
        .map(|g| {
            format!(
                "{{{}}}",
                g.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    writeln!(out, "groups {}", groups.join(" ")).unwrap();
    Ok(Outcome::ok(out))
}

fn export(file: &Path, out: &Path) -> Step<Outcome> {
    let tree = read_tree(file)?;
    write_file(out, &export_dot(&tree))?;
    Ok(Outcome::ok(format!("wrote {}\n", out.display())))
}
