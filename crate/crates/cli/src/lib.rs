//! Command line front end: reads JSON documents, runs the library and
//! prints deterministic JSON.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 input that
//! parses but is invalid (composite modulus, zero vector, ...), 4 errors
//! raised by the algorithms themselves.

pub mod documents;
pub mod output;

use std::fs;
use std::path::{Path, PathBuf};

use binomideal_core::{
    affine_monoid_closure, decompose_to_binomials, enumerate_parameterized, extract_parameterization,
    monoid_closure, vanishing_ideal, Ambient, Classifier, Error, Method, PolyRing, TermOrder,
    DEFAULT_ENUM_LIMIT,
};
use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use documents::{from_json, parse_polynomial, GeneratorDocument, ParameterizationDocument, PointSetDocument};
use output::{CertificateOut, DecompositionOut, IdealOut, Output, PointsOut};

pub const MAX_ENUM_VAR: &str = "BINOMIDEAL_MAX_ENUM";

#[derive(Debug)]
pub enum CliError {
    Io {
        path: PathBuf,
        message: String,
    },
    Usage(String),
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    Polynomial {
        context: String,
        column: usize,
        message: String,
    },
    Semantic(String),
    Invalid(Error),
    Library(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrime(_)
            | Error::ModulusOutOfRange(_)
            | Error::ZeroVector
            | Error::DimensionMismatch { .. }
            | Error::FieldMismatch { .. }
            | Error::AmbientMismatch { .. }
            | Error::VariableOutOfRange { .. }
            | Error::ExponentOverflow(_)
            | Error::EmptySet
            | Error::InvalidOrder { .. }
            | Error::InvalidParameterization(_) => CliError::Invalid(e),
            Error::Parse { column, message } => CliError::Polynomial {
                context: "polynomial".into(),
                column,
                message,
            },
            other => CliError::Library(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. }
            | CliError::Usage(_)
            | CliError::Json { .. }
            | CliError::Polynomial { .. } => 2,
            CliError::Semantic(_) | CliError::Invalid(_) => 3,
            CliError::Library(_) => 4,
        }
    }

    /// Short identifier: the library error name, or the input error class.
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Usage(_) => "Usage",
            CliError::Json { .. } | CliError::Polynomial { .. } => "Parse",
            CliError::Semantic(_) => "Invalid",
            CliError::Invalid(e) | CliError::Library(e) => e.name(),
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Io { path, message } => format!("{}: {message}", path.display()),
            CliError::Usage(m) | CliError::Semantic(m) => m.clone(),
            CliError::Json {
                line,
                column,
                message,
            } => format!("line {line}, column {column}: {message}"),
            CliError::Polynomial {
                context,
                column,
                message,
            } => format!("{context}, column {column}: {message}"),
            CliError::Invalid(e) | CliError::Library(e) => e.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Decide whether I(Y) is binomial (and, for projective sets, lattice).
    Classify,
    /// Reduced Gröbner basis of I(Y).
    Ideal,
    /// Common zeros of a list of polynomials.
    Zeroset,
    /// Monoid generated by the points.
    Closure,
    /// Monomial parameterization of a torus subgroup.
    Parameterize,
    /// Points of a parameterization.
    Enumerate,
    /// Split an element of I(Y) into binomials (needs --poly).
    Decompose,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    #[default]
    Grevlex,
    Lex,
}

impl OrderArg {
    fn order(self) -> TermOrder {
        match self {
            OrderArg::Grevlex => TermOrder::DegRevLex,
            OrderArg::Lex => TermOrder::Lex,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderArg::Grevlex => "grevlex",
            OrderArg::Lex => "lex",
        }
    }
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "binomideal",
    version,
    about = "Vanishing ideals of finite point sets over GF(p)"
)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// JSON input document.
    #[arg(
        long,
        value_name = "FILE",
        required_unless_present = "batch",
        conflicts_with = "batch"
    )]
    pub input: Option<PathBuf>,
    /// Run on every .json file in a directory; results are listed by file name.
    #[arg(long, value_name = "DIR")]
    pub batch: Option<PathBuf>,
    /// Treat the points as affine regardless of the document.
    #[arg(long)]
    pub affine: bool,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Compute vanishing ideals by intersecting point ideals and compare
    /// against the evaluation-matrix method.
    #[arg(long)]
    pub oracle: bool,
    /// Polynomial for `decompose`, e.g. "t1^2 - t2^2".
    #[arg(long)]
    pub poly: Option<String>,
    /// Print a plain-text summary instead of JSON.
    #[arg(long)]
    pub text: bool,
}

/// Everything a run prints, plus its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Reads the enumeration limit from the environment.
pub fn limit_from_env() -> Result<usize, CliError> {
    match std::env::var(MAX_ENUM_VAR) {
        Ok(v) => v.trim().parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(|| {
            CliError::Semantic(format!("{MAX_ENUM_VAR} must be a positive integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_ENUM_LIMIT),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn method(args: &Args) -> Method {
    if args.oracle {
        Method::Intersection
    } else {
        Method::BuchbergerMoller
    }
}

/// Runs one command on one document.
pub fn execute(args: &Args, text: &str, limit: usize) -> Result<Output, CliError> {
    let order = args.order.order();
    match args.command {
        Command::Classify => {
            let set = from_json::<PointSetDocument>(text)?.load(args.affine)?;
            let classifier = Classifier {
                order,
                method: method(args),
                compare_methods: args.oracle,
                limit,
            };
            let cert = match set.ambient() {
                Ambient::Projective => classifier.lattice(&set)?,
                Ambient::Affine => classifier.affine_binomial(&set)?,
            };
            Ok(Output::Certificate(CertificateOut::from(&cert)))
        }
        Command::Ideal => {
            let set = from_json::<PointSetDocument>(text)?.load(args.affine)?;
            let ideal = vanishing_ideal(&set, order, method(args))?;
            if args.oracle && vanishing_ideal(&set, order, Method::BuchbergerMoller)? != ideal {
                return Err(Error::InternalInconsistency("vanishing ideal methods disagree".into()).into());
            }
            Ok(Output::Ideal(IdealOut::new(
                args.order.name(),
                ideal.basis(),
                ideal.krull_dimension()?,
            )))
        }
        Command::Zeroset => {
            let doc = from_json::<GeneratorDocument>(text)?;
            let (ideal, ambient) = doc.load(order)?;
            let zeros = if args.affine || ambient == Ambient::Affine {
                ideal.zero_set_affine(limit)?
            } else {
                ideal.zero_set_projective(limit)?
            };
            Ok(Output::Points(PointsOut::new(&zeros, None)))
        }
        Command::Closure => {
            let gens = from_json::<PointSetDocument>(text)?.load(args.affine)?;
            Ok(Output::Points(match gens.ambient() {
                Ambient::Projective => {
                    let c = monoid_closure(&gens, limit)?;
                    PointsOut::new(&c.points, Some(c.contains_zero))
                }
                Ambient::Affine => PointsOut::new(&affine_monoid_closure(&gens, limit)?, None),
            }))
        }
        Command::Parameterize => {
            let set = from_json::<PointSetDocument>(text)?.load(args.affine)?;
            set.require_projective()?;
            Ok(Output::Parameterization(extract_parameterization(&set)?.into()))
        }
        Command::Enumerate => {
            let doc = from_json::<ParameterizationDocument>(text)?;
            let set = enumerate_parameterized(&doc.into(), limit)?;
            Ok(Output::Points(PointsOut::new(&set, None)))
        }
        Command::Decompose => {
            let poly = args
                .poly
                .as_deref()
                .ok_or_else(|| CliError::Usage("decompose needs --poly".into()))?;
            let set = from_json::<PointSetDocument>(text)?.load(args.affine)?;
            let ring = PolyRing::new(set.field().clone(), set.dim(), order);
            let f = parse_polynomial(&ring, poly, "--poly")?;
            let parts = decompose_to_binomials(&f, &set)?;
            Ok(Output::Decomposition(DecompositionOut::new(set.field(), &parts)))
        }
    }
}

fn render(args: &Args, out: &impl Serialize, summary: impl FnOnce() -> String) -> String {
    if args.text {
        summary()
    } else {
        let mut s = serde_json::to_string_pretty(out).expect("serializable output");
        s.push('\n');
        s
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {}: {}\n", e.name(), e.message()),
        code: e.exit_code(),
    }
}

#[derive(Serialize)]
struct BatchError {
    name: &'static str,
    message: String,
}

#[derive(Serialize)]
struct BatchEntry {
    file: String,
    exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Output>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<BatchError>,
}

fn run_batch(args: &Args, dir: &Path, limit: usize) -> Result<Outcome, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: dir.to_path_buf(),
        message: e.to_string(),
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    let entries: Vec<BatchEntry> = files
        .par_iter()
        .map(|path| {
            let file = path.file_name().unwrap().to_string_lossy().into_owned();
            match read(path).and_then(|text| execute(args, &text, limit)) {
                Ok(out) => BatchEntry {
                    file,
                    exit_code: 0,
                    result: Some(out),
                    error: None,
                },
                Err(e) => BatchEntry {
                    file,
                    exit_code: e.exit_code(),
                    result: None,
                    error: Some(BatchError {
                        name: e.name(),
                        message: e.message(),
                    }),
                },
            }
        })
        .collect();
    let code = entries.iter().map(|e| e.exit_code).max().unwrap_or(0);
    let stdout = render(args, &entries, || {
        entries
            .iter()
            .map(|e| match (&e.result, &e.error) {
                (Some(out), _) => format!("== {}\n{}", e.file, out.summary()),
                (_, Some(err)) => format!("== {}\nerror: {}: {}\n", e.file, err.name, err.message),
                _ => unreachable!(),
            })
            .collect()
    });
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

/// Runs parsed arguments with an explicit enumeration limit.
pub fn run_with_limit(args: &Args, limit: usize) -> Outcome {
    let result = match (&args.input, &args.batch) {
        (_, Some(dir)) => run_batch(args, dir, limit),
        (Some(path), None) => read(path)
            .and_then(|text| execute(args, &text, limit))
            .map(|out| Outcome {
                stdout: render(args, &out, || out.summary()),
                stderr: String::new(),
                code: 0,
            }),
        (None, None) => Err(CliError::Usage("one of --input or --batch is required".into())),
    };
    result.unwrap_or_else(|e| failure(&e))
}

/// Runs parsed arguments, taking the enumeration limit from the environment.
pub fn run(args: &Args) -> Outcome {
    match limit_from_env() {
        Ok(limit) => run_with_limit(args, limit),
        Err(e) => failure(&e),
    }
}

trait RequireProjective {
    fn require_projective(&self) -> Result<(), CliError>;
}

impl RequireProjective for binomideal_core::PointSet {
    fn require_projective(&self) -> Result<(), CliError> {
        if self.is_projective() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: "projective",
            }
            .into())
        }
    }
}
