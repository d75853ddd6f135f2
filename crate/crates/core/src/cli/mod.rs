//! Command-line front end.
//!
//! ```text
//! awroots --a 0.3,-0.2,0.15,0.1 --q 0.1 --n 5 --mode bounds
//! awroots --mode table4 --format json
//! ```
//!
//! Exit codes: 0 success, 1 usage error, 2 parameter domain error,
//! 3 solver failure, 4 certify mode without a contraction certificate.

mod report;

pub use report::{
    build_report, round_half_even, round_significant, run, Outcome, ParamsOut, Report, TableRow,
};

use clap::{Parser, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::validate;
use crate::error::Error;
use crate::iteration::{DEFAULT_MAX_ITERS, DEFAULT_STEP_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Root brackets θ⁻, θ⁺ with bound-family markers.
    Bounds,
    /// The fixed-point iterates and their a-priori error bounds.
    Iterate,
    /// Closed-form first approximation θ⁽¹⁾.
    Approx1,
    /// Roots from the Newton oracle.
    Solve,
    /// Fixed-point limit with its error certificate, checked against the oracle.
    Certify,
    /// Brackets and roots for (3/10, -1/5, 3/20, 1/10 | 1/10), n = 5.
    Table1,
    /// Extreme roots and brackets for (6/7, 5/7, 4/7, 3/7 | 1/9).
    Table2,
    /// Fixed-point iterates θ⁽⁰⁾, θ⁽¹⁾, θ⁽²⁾ and the roots.
    Table3,
    /// Relative error of the first approximation for growing n.
    Table4,
}

impl Mode {
    fn takes_degree_list(self) -> bool {
        matches!(self, Mode::Table2 | Mode::Table4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// A fully parsed and validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub a: [Complex64; 4],
    pub q: f64,
    pub n: Vec<usize>,
    pub max_iters: usize,
    pub step_tol: f64,
    pub format: OutputFormat,
    /// Decimal places in text output; significant figures for `table4`.
    pub decimals: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    /// `--help` or `--version`; not a failure.
    #[error("{0}")]
    Help(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(Error),
    #[error("{0}")]
    Solver(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Help(_) => 0,
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Solver(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SolverFailure { .. } => CliError::Solver(e),
            Error::Argument(msg) => CliError::Usage(msg),
            other => CliError::Domain(other),
        }
    }
}

/// Roots, brackets and certified fixed-point approximations for Askey-Wilson polynomials.
#[derive(Debug, Parser)]
#[command(name = "awroots", version)]
struct Args {
    /// Parameters a1..a4, comma separated; complex values as `re+imi` / `re-imi`
    /// with the conjugate listed explicitly.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,

    /// The base q, -1 < q < 1.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<f64>,

    /// Degree, or a comma-separated list of degrees for table2/table4.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,

    #[arg(long, value_enum, default_value_t = Mode::Solve)]
    mode: Mode,

    /// Maximum number of fixed-point steps.
    #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
    iters: usize,

    /// Stop the fixed-point iteration once a step is shorter than this.
    #[arg(long, default_value_t = DEFAULT_STEP_TOL)]
    tol: f64,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Decimal places in text output (significant figures for table4).
    #[arg(long)]
    decimals: Option<usize>,
}

/// Parses a real or complex number: `0.3`, `-1e-2`, `0.5+0.2i`, `0.5-0.2i`, `0.2i`.
pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let s = s.trim();
    let bad = || format!("cannot parse parameter `{s}` (expected `re`, `re+imi` or `re-imi`)");
    let Some(body) = s.strip_suffix('i') else {
        return s
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

/// Parses `argv` (including the program name) into a validated [`RunConfig`].
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError::Help(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    })?;

    let (default_a, default_q, default_n): ([f64; 4], f64, &[usize]) = match args.mode {
        Mode::Table2 => (
            [6.0 / 7.0, 5.0 / 7.0, 4.0 / 7.0, 3.0 / 7.0],
            1.0 / 9.0,
            &[7, 9, 12, 20],
        ),
        Mode::Table4 => ([0.3, -0.2, 0.15, 0.1], 0.1, &[10, 20, 40, 80]),
        Mode::Table1 | Mode::Table3 => ([0.3, -0.2, 0.15, 0.1], 0.1, &[5]),
        _ => ([0.0; 4], 0.0, &[5]),
    };

    let a = match &args.a {
        Some(list) => {
            let parsed = list
                .split(',')
                .map(parse_complex)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(CliError::Usage)?;
            <[Complex64; 4]>::try_from(parsed).map_err(|v| {
                CliError::Usage(format!("--a expects exactly 4 parameters, got {}", v.len()))
            })?
        }
        None => default_a.map(|x| Complex64::new(x, 0.0)),
    };
    let q = args.q.unwrap_or(default_q);
    let n = if args.n.is_empty() {
        default_n.to_vec()
    } else {
        args.n
    };
    if n.len() > 1 && !args.mode.takes_degree_list() {
        return Err(CliError::Usage(format!(
            "mode {:?} takes a single degree, got {} values",
            args.mode,
            n.len()
        )));
    }
    if n.iter().any(|&d| d < 1) {
        return Err(CliError::Usage("degrees must be at least 1".into()));
    }
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(CliError::Usage(format!(
            "--tol {} must be positive",
            args.tol
        )));
    }
    let decimals = args
        .decimals
        .unwrap_or(if args.mode == Mode::Table4 { 2 } else { 4 });
    if !(1..=15).contains(&decimals) {
        return Err(CliError::Usage(format!(
            "--decimals {decimals} must lie in 1..=15"
        )));
    }
    for &degree in &n {
        validate(a, q, degree).map_err(CliError::from)?;
    }

    Ok(RunConfig {
        mode: args.mode,
        a,
        q,
        n,
        max_iters: args.iters,
        step_tol: args.tol,
        format: args.format,
        decimals,
    })
}

/// Parses, runs and renders; the binary is a thin wrapper around this.
pub fn run_cli<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let failure = |e: CliError| Outcome {
        stdout: match &e {
            CliError::Help(text) => text.clone(),
            _ => String::new(),
        },
        stderr: match &e {
            CliError::Help(_) => String::new(),
            CliError::Usage(msg) if msg.starts_with("error:") => format!("{}\n", msg.trim_end()),
            CliError::Usage(msg) => format!("error: {}\n", msg.trim_end()),
            other => format!("error: {other}\n"),
        },
        status: e.exit_code(),
    };
    match parse_args(argv) {
        Ok(config) => run(&config).unwrap_or_else(failure),
        Err(e) => failure(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &str) -> Result<RunConfig, CliError> {
        parse_args(std::iter::once("awroots").chain(args.split_whitespace()))
    }

    #[test]
    fn complex_syntax() {
        assert_eq!(parse_complex("0.3").unwrap(), Complex64::new(0.3, 0.0));
        assert_eq!(parse_complex("-0.2").unwrap(), Complex64::new(-0.2, 0.0));
        assert_eq!(parse_complex("0.5+0.2i").unwrap(), Complex64::new(0.5, 0.2));
        assert_eq!(
            parse_complex("0.5-0.2i").unwrap(),
            Complex64::new(0.5, -0.2)
        );
        assert_eq!(
            parse_complex("-1e-1-2e-1i").unwrap(),
            Complex64::new(-0.1, -0.2)
        );
        assert_eq!(
            parse_complex("1e-1+2E-1i").unwrap(),
            Complex64::new(0.1, 0.2)
        );
        assert_eq!(parse_complex("0.2i").unwrap(), Complex64::new(0.0, 0.2));
        assert_eq!(parse_complex("-0.2i").unwrap(), Complex64::new(0.0, -0.2));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("0.1+i0.2").is_err());
    }

    #[test]
    fn reference_scenario() {
        let c = parse("--a 0.3,-0.2,0.15,0.1 --q 0.1 --n 5 --mode bounds").unwrap();
        assert_eq!(c.mode, Mode::Bounds);
        assert_eq!(c.n, vec![5]);
        assert_eq!(c.q, 0.1);
        assert_eq!(c.a[1], Complex64::new(-0.2, 0.0));
        assert_eq!(c.decimals, 4);
        assert_eq!(c.format, OutputFormat::Text);
    }

    #[test]
    fn conjugate_pair_accepted() {
        let c = parse("--a 0.5+0.2i,0.5-0.2i,0.1,0.0 --q 0.2").unwrap();
        assert_eq!(c.a[0], Complex64::new(0.5, 0.2));
        assert_eq!(c.mode, Mode::Solve);
    }

    #[test]
    fn domain_errors() {
        let err = parse("--q 1.2").unwrap_err();
        assert!(matches!(err, CliError::Domain(Error::QDomain(_))));
        assert_eq!(err.exit_code(), 2);
        let err = parse("--a 0.5+0.2i,0.1,0.1,0.0").unwrap_err();
        assert!(matches!(
            err,
            CliError::Domain(Error::UnpairedComplex { .. })
        ));
        let err = parse("--a 1.5,0,0,0").unwrap_err();
        assert!(matches!(err, CliError::Domain(Error::OutOfDisk { .. })));
    }

    #[test]
    fn usage_errors() {
        for bad in [
            "--mode nonsense",
            "--a 0.1,0.2",
            "--a 0.1,x,0,0",
            "--n 0",
            "--n 5,6 --mode bounds",
            "--decimals 0",
            "--decimals 16",
            "--tol -1",
            "--frobnicate",
        ] {
            let err = parse(bad).unwrap_err();
            assert_eq!(err.exit_code(), 1, "{bad}: {err}");
        }
    }

    #[test]
    fn table_defaults() {
        let c = parse("--mode table2").unwrap();
        assert_eq!(c.n, vec![7, 9, 12, 20]);
        assert_eq!(c.q, 1.0 / 9.0);
        let c = parse("--mode table4").unwrap();
        assert_eq!(c.n, vec![10, 20, 40, 80]);
        assert_eq!(c.decimals, 2);
        let c = parse("--mode table1").unwrap();
        assert_eq!(c.n, vec![5]);
        assert_eq!(c.a[0], Complex64::new(0.3, 0.0));
    }
}
