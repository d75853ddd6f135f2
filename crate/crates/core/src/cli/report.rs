use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{CliError, Mode, OutputFormat, RunConfig};
use crate::bounds::{root_bounds, validate, ParameterSet};
use crate::error::Error;
use crate::iteration::{error_certificate, first_order_approx, iterate, rho};
use crate::oracle::{newton_solve, DEFAULT_NEWTON_STEPS, DEFAULT_NEWTON_TOL};

/// Exit status for certify mode when `rho >= 1`.
const EXIT_UNCERTIFIED: u8 = 4;

/// Extremal-root bounds quoted from the literature for the table2 parameters.
const TABLE2_NOTE: &str = "for comparison, earlier extremal bounds give \
    cos theta_1 >= 0.9488 and cos theta_n <= 0.3370 for every n listed";

/// One labelled row of output values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub values: Vec<f64>,
    /// Per-value flag: the bound comes from the second bracket family.
    /// Only present on bound rows.
    pub boxed: Option<Vec<bool>>,
}

impl TableRow {
    fn plain(label: impl Into<String>, values: Vec<f64>) -> Self {
        Self {
            label: label.into(),
            values,
            boxed: None,
        }
    }

    fn boxed(label: impl Into<String>, values: Vec<f64>, boxed: Vec<bool>) -> Self {
        Self {
            label: label.into(),
            values,
            boxed: Some(boxed),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsOut {
    /// `[re, im]` for each of a1..a4.
    pub a: [[f64; 2]; 4],
    pub q: f64,
}

/// Machine-readable result of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub mode: Mode,
    pub params: ParamsOut,
    pub n: Vec<usize>,
    /// Contraction constant for each degree in `n`.
    pub rho: Vec<f64>,
    pub rows: Vec<TableRow>,
    pub warnings: Vec<String>,
    /// Column keys (`j1..jn` or `n7, n9, ..`).
    #[serde(skip)]
    pub columns: Vec<String>,
    /// Extra lines for text output only.
    #[serde(skip)]
    pub notes: Vec<String>,
}

/// Rendered output and exit status of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: u8,
}

impl<'de> Deserialize<'de> for Mode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use clap::ValueEnum;
        let s = String::deserialize(d)?;
        Mode::from_str(&s, true).map_err(serde::de::Error::custom)
    }
}

fn degree_columns(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("j{j}")).collect()
}

fn params_for(config: &RunConfig, n: usize) -> Result<ParameterSet, CliError> {
    validate(config.a, config.q, n).map_err(CliError::from)
}

fn oracle(params: &ParameterSet) -> Result<Vec<f64>, CliError> {
    Ok(newton_solve(params, DEFAULT_NEWTON_TOL, DEFAULT_NEWTON_STEPS)?.into_inner())
}

/// Computes the report for `config` and the exit status it implies.
pub fn build_report(config: &RunConfig) -> Result<(Report, u8), CliError> {
    let mut report = Report {
        mode: config.mode,
        params: ParamsOut {
            a: config.a.map(|z| [z.re, z.im]),
            q: config.q,
        },
        n: config.n.clone(),
        rho: Vec::with_capacity(config.n.len()),
        rows: Vec::new(),
        warnings: Vec::new(),
        columns: Vec::new(),
        notes: Vec::new(),
    };
    let mut status = 0;

    for &n in &config.n {
        report.rho.push(rho(&params_for(config, n)?));
    }

    match config.mode {
        Mode::Bounds => {
            let p = params_for(config, config.n[0])?;
            let b = root_bounds(&p);
            report.columns = degree_columns(p.n());
            report
                .notes
                .push(format!("k_- = {}, k_+ = {}", b.k_minus, b.k_plus));
            match b.crossover {
                Some(c) => report
                    .notes
                    .push(format!("j_- = {}, j_+ = {}", c.j_minus, c.j_plus)),
                None => report.warnings.push(
                    "degenerate parameters: brackets collapse onto the exact roots pi*j/(n+1)"
                        .into(),
                ),
            }
            report
                .rows
                .push(TableRow::boxed("theta^(-)", b.lower, b.lower_boxed));
            report
                .rows
                .push(TableRow::boxed("theta^(+)", b.upper, b.upper_boxed));
        }
        Mode::Iterate => {
            let p = params_for(config, config.n[0])?;
            let trace = iterate(&p, config.max_iters, config.step_tol)?;
            report.columns = degree_columns(p.n());
            for (l, it) in trace.iterates.iter().enumerate() {
                report
                    .rows
                    .push(TableRow::plain(format!("theta^({l})"), it.to_vec()));
            }
            report
                .rows
                .push(TableRow::plain("step_delta", trace.step_deltas.clone()));
            if trace.is_certified() {
                report.rows.push(TableRow::plain(
                    "apriori_bound",
                    trace.apriori_bounds.clone(),
                ));
            } else {
                report.warnings.push(uncertified_warning(trace.rho));
            }
            if !trace.converged {
                report.warnings.push(format!(
                    "step tolerance {} not reached after {} steps",
                    config.step_tol,
                    trace.iterations()
                ));
            }
        }
        Mode::Approx1 => {
            let p = params_for(config, config.n[0])?;
            report.columns = degree_columns(p.n());
            report.rows.push(TableRow::plain(
                "theta^(1)",
                first_order_approx(&p).into_inner(),
            ));
        }
        Mode::Solve => {
            let p = params_for(config, config.n[0])?;
            let theta = oracle(&p)?;
            report.columns = degree_columns(p.n());
            let cosines = theta.iter().map(|t| t.cos()).collect();
            report.rows.push(TableRow::plain("theta", theta));
            report.rows.push(TableRow::plain("cos(theta)", cosines));
        }
        Mode::Certify => {
            let p = params_for(config, config.n[0])?;
            let trace = iterate(&p, config.max_iters, config.step_tol)?;
            let b = root_bounds(&p);
            let l = trace.iterations();
            report.columns = degree_columns(p.n());
            report.rows.push(TableRow::plain(
                format!("theta^({l})"),
                trace.last().to_vec(),
            ));
            report.rows.push(TableRow::boxed(
                "theta^(-)",
                b.lower.clone(),
                b.lower_boxed.clone(),
            ));
            report.rows.push(TableRow::boxed(
                "theta^(+)",
                b.upper.clone(),
                b.upper_boxed.clone(),
            ));
            match error_certificate(&trace, &b, l) {
                Ok(bound) => {
                    let exact = oracle(&p)?;
                    let measured = trace.last().distance(&exact);
                    report.notes.push(format!(
                        "certificate: rho = {}, l = {l}, bound = {bound:e}, oracle error = {measured:e}",
                        trace.rho
                    ));
                    if measured > bound + 1e-10 {
                        report.warnings.push(format!(
                            "oracle error {measured:e} exceeds the a-priori bound {bound:e}"
                        ));
                    }
                    report.rows.push(TableRow::plain(
                        "certificate",
                        vec![trace.rho, l as f64, bound, measured],
                    ));
                }
                Err(Error::Uncertified { rho }) => {
                    report.warnings.push(uncertified_warning(rho));
                    status = EXIT_UNCERTIFIED;
                }
                Err(e) => return Err(e.into()),
            }
            if !trace.converged {
                report.warnings.push(format!(
                    "step tolerance {} not reached after {l} steps",
                    config.step_tol
                ));
            }
        }
        Mode::Table1 => {
            let p = params_for(config, config.n[0])?;
            let b = root_bounds(&p);
            let theta = oracle(&p)?;
            report.columns = degree_columns(p.n());
            report
                .rows
                .push(TableRow::boxed("theta^(-)", b.lower, b.lower_boxed));
            report.rows.push(TableRow::plain("theta", theta));
            report
                .rows
                .push(TableRow::boxed("theta^(+)", b.upper, b.upper_boxed));
        }
        Mode::Table2 => {
            let mut rows = [
                TableRow::plain("cos theta_1", Vec::new()),
                TableRow::boxed("cos theta^(+)_1", Vec::new(), Vec::new()),
                TableRow::boxed("cos theta^(-)_n", Vec::new(), Vec::new()),
                TableRow::plain("cos theta_n", Vec::new()),
            ];
            for &n in &config.n {
                let p = params_for(config, n)?;
                let b = root_bounds(&p);
                let theta = oracle(&p)?;
                rows[0].values.push(theta[0].cos());
                rows[1].values.push(b.upper[0].cos());
                rows[2].values.push(b.lower[n - 1].cos());
                rows[3].values.push(theta[n - 1].cos());
                push_flag(&mut rows[1], b.upper_boxed[0]);
                push_flag(&mut rows[2], b.lower_boxed[n - 1]);
                report.columns.push(format!("n{n}"));
            }
            report.rows.extend(rows);
            report.notes.push(TABLE2_NOTE.into());
        }
        Mode::Table3 => {
            let p = params_for(config, config.n[0])?;
            let trace = iterate(&p, 2, 0.0)?;
            report.columns = degree_columns(p.n());
            for (l, it) in trace.iterates.iter().enumerate() {
                report
                    .rows
                    .push(TableRow::plain(format!("theta^({l})"), it.to_vec()));
            }
            report.rows.push(TableRow::plain("theta", oracle(&p)?));
        }
        Mode::Table4 => {
            let mut rows = [
                TableRow::plain("eps_1", Vec::new()),
                TableRow::plain("eps_n/2", Vec::new()),
                TableRow::plain("eps_n", Vec::new()),
            ];
            for &n in &config.n {
                let p = params_for(config, n)?;
                let theta = oracle(&p)?;
                let approx = first_order_approx(&p);
                let eps = |j: usize| (approx[j - 1] - theta[j - 1]).abs() / theta[j - 1];
                rows[0].values.push(eps(1));
                rows[1].values.push(eps((n / 2).max(1)));
                rows[2].values.push(eps(n));
                report.columns.push(format!("n{n}"));
            }
            report.rows.extend(rows);
        }
    }
    Ok((report, status))
}

fn push_flag(row: &mut TableRow, flag: bool) {
    if let Some(flags) = row.boxed.as_mut() {
        flags.push(flag);
    }
}

fn uncertified_warning(rho: f64) -> String {
    format!("no contraction certificate: rho = {rho} >= 1, convergence is not guaranteed")
}

/// Runs `config` and renders the report in the requested format.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let (report, status) = build_report(config)?;
    let stdout = match config.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Usage(format!("cannot serialize report: {e}")))?;
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(&report)?,
        OutputFormat::Text => render_text(&report, config.decimals),
    };
    let stderr = report
        .warnings
        .iter()
        .map(|w| format!("warning: {w}\n"))
        .collect();
    Ok(Outcome {
        stdout,
        stderr,
        status,
    })
}

fn render_csv(report: &Report) -> Result<String, CliError> {
    let io_err = |e: csv::Error| CliError::Usage(format!("cannot write CSV: {e}"));
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    let mut header = vec!["label".to_string()];
    header.extend(report.columns.iter().cloned());
    w.write_record(&header).map_err(io_err)?;
    for row in &report.rows {
        let mut record = vec![row.label.clone()];
        record.extend(row.values.iter().map(|v| v.to_string()));
        w.write_record(&record).map_err(io_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Usage(format!("cannot write CSV: {e}")))?;
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}

/// Rounds to `decimals` places, ties to even.
pub fn round_half_even(x: f64, decimals: usize) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    let r = (x * scale).round_ties_even() / scale;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rounds to `digits` significant figures, ties to even.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = digits as i32 - 1 - exponent;
    let scale = 10f64.powi(decimals);
    (x * scale).round_ties_even() / scale
}

fn fixed(x: f64, decimals: usize) -> String {
    format!("{:.*}", decimals, round_half_even(x, decimals))
}

fn scientific(x: f64, digits: usize) -> String {
    format!(
        "{:.*e}",
        digits.saturating_sub(1),
        round_significant(x, digits)
    )
}

fn format_complex(z: &[f64; 2]) -> String {
    if z[1] == 0.0 {
        format!("{}", z[0])
    } else {
        format!("{}", Complex64::new(z[0], z[1]))
    }
}

fn render_text(report: &Report, decimals: usize) -> String {
    let is_sci = report.mode == Mode::Table4;
    let format_value = |v: f64| {
        if is_sci {
            scientific(v, decimals)
        } else {
            fixed(v, decimals)
        }
    };
    let mut out = String::new();
    let a: Vec<String> = report.params.a.iter().map(format_complex).collect();
    let _ = writeln!(
        out,
        "mode {}: a = ({}), q = {}",
        serde_json::to_value(report.mode)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default(),
        a.join(", "),
        report.params.q
    );
    let degrees: Vec<String> = report
        .n
        .iter()
        .zip(&report.rho)
        .map(|(n, r)| format!("n = {n} (rho = {r:.6})"))
        .collect();
    let _ = writeln!(out, "{}", degrees.join(", "));
    for note in &report.notes {
        let _ = writeln!(out, "{note}");
    }
    let _ = writeln!(out);

    let cells: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|row| {
            row.values
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let s = format_value(v);
                    match row.boxed.as_ref().and_then(|b| b.get(i)) {
                        Some(true) => format!("[{s}]"),
                        _ => format!(" {s} "),
                    }
                })
                .collect()
        })
        .collect();
    let label_width = report.rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
    let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
    let headers: Vec<String> = (0..columns)
        .map(|i| match report.columns.get(i) {
            Some(c) if c.starts_with('j') => format!("j={} ", &c[1..]),
            Some(c) if c.starts_with('n') => format!("n={} ", &c[1..]),
            Some(c) => format!("{c} "),
            None => format!("#{} ", i + 1),
        })
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain(headers.iter().map(String::len))
        .max()
        .unwrap_or(0);

    let mut line = format!("{:label_width$}", "");
    for h in &headers {
        let _ = write!(line, "  {h:>width$}");
    }
    let _ = writeln!(out, "{}", line.trim_end());
    for (row, cells) in report.rows.iter().zip(&cells) {
        let mut line = format!("{:label_width$}", row.label);
        for c in cells {
            let _ = write!(line, "  {c:>width$}");
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}
