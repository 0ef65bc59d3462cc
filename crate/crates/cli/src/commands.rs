//! Command implementations.
//!
//! Every command renders a line-oriented report: `key: value` lines
//! first, then an optional payload in one of the instance formats.
//! Exactly one line carries the verdict (`theorem2`, `theorem3`,
//! `outcome`, or `verdict`), and the exit status mirrors it: 0 when it
//! reads `holds` or `found`, 1 otherwise. Reports are byte-identical
//! across runs with the same inputs and seeds; diagnostics never go to
//! the report.

use std::fmt::Display;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;
use transversal_core::{
    check_saturation_condition, check_transversal_condition, find_transversal, find_transversal_exact,
    gen_family, gen_plane_incidence, gen_threshold_instance, matching_from_transversal, max_matching,
    rng::derive_seed, solver::default_max_resamples, validate_matching, validate_transversal,
    BipartiteGraph, GenError, PlaneOrder, SetFamily, TransversalError,
};

use crate::cli::{CheckTarget, Command, GenKind, SolveTarget, VerifyTarget};
use crate::format::{
    parse_assignment, parse_family, parse_graph, parse_matching, serialize_family, serialize_graph,
    serialize_matching, serialize_transversal, ParseError,
};

/// Process exit contract: 0 the condition holds or the object was
/// found, 1 it fails / was not found / the search was exhausted, 2 the
/// input or usage was invalid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    Failure,
    InputError,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::Failure => 1,
            ExitStatus::InputError => 2,
        }
    }

    fn from_verdict(pass: bool) -> Self {
        if pass {
            ExitStatus::Success
        } else {
            ExitStatus::Failure
        }
    }
}

/// A finished command: the report for stdout, diagnostics for stderr,
/// and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub diagnostics: String,
    pub status: ExitStatus,
}

impl CommandOutput {
    fn new(stdout: String, status: ExitStatus) -> Self {
        CommandOutput { stdout, diagnostics: String::new(), status }
    }
}

/// Errors that abort a command before it can render a verdict.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Exhausted(String),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Exhausted(_) => ExitStatus::Failure,
            _ => ExitStatus::InputError,
        }
    }
}

struct Report {
    buf: String,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { buf: format!("command: {command}\n") }
    }

    fn kv(mut self, key: &str, value: impl Display) -> Self {
        let _ = writeln!(self.buf, "{key}: {value}");
        self
    }

    fn kv_opt(self, key: &str, value: Option<impl Display>) -> Self {
        match value {
            Some(v) => self.kv(key, v),
            None => self.kv(key, "none"),
        }
    }

    fn payload(mut self, text: &str) -> Self {
        self.buf.push_str(text);
        self
    }

    fn finish(self) -> String {
        self.buf
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_family(path: &Path) -> Result<SetFamily, CliError> {
    parse_family(&read_file(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<BipartiteGraph, CliError> {
    parse_graph(&read_file(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// Runs one parsed command to completion.
pub fn execute(command: Command) -> Result<CommandOutput, CliError> {
    match command {
        Command::Check { target } => match target {
            CheckTarget::Family { file } => check_family(&file),
            CheckTarget::Graph { file } => check_graph(&file),
        },
        Command::Solve { target } => match target {
            SolveTarget::Family { file, seed, max_resamples, exact } => {
                solve_family(&file, seed, max_resamples, exact)
            }
            SolveTarget::Graph { file, seed, max_resamples, exact } => {
                solve_graph(&file, seed, max_resamples, exact)
            }
        },
        Command::Verify { target } => match target {
            VerifyTarget::Family { file, assignment } => verify_family(&file, &assignment),
            VerifyTarget::Graph { file, matching, saturate_a } => verify_graph(&file, &matching, saturate_a),
        },
        Command::Gen { kind } => match kind {
            GenKind::Family { n, set_size, max_overlap, universe, seed } => {
                gen_family_cmd(n, set_size, max_overlap, universe, seed)
            }
            GenKind::Plane { q } => gen_plane_cmd(q),
            GenKind::Theorem3 { q, n } => gen_theorem3_cmd(q, n),
        },
        Command::Bench { trials, n, set_size, max_overlap, universe, seed, max_resamples } => {
            bench(trials, n, set_size, max_overlap, universe, seed, max_resamples)
        }
    }
}

fn check_family(file: &Path) -> Result<CommandOutput, CliError> {
    let family = load_family(file)?;
    let stats = family.stats();
    let report = check_transversal_condition(&stats).map_err(|e| CliError::Input(e.to_string()))?;
    let stdout = Report::new("check family")
        .kv("n", stats.n)
        .kv_opt("l", stats.min_size)
        .kv("m", stats.max_overlap)
        .kv("lhs", report.lhs)
        .kv("rhs", report.rhs)
        .kv("margin", report.margin())
        .kv("theorem2", if report.holds { "holds" } else { "fails" })
        .finish();
    Ok(CommandOutput::new(stdout, ExitStatus::from_verdict(report.holds)))
}

fn check_graph(file: &Path) -> Result<CommandOutput, CliError> {
    let graph = load_graph(file)?;
    let report = check_saturation_condition(&graph);
    let mut out = Report::new("check graph")
        .kv("a", graph.size_a())
        .kv("b", graph.size_b())
        .kv("edges", graph.edge_count())
        .kv_opt("min-degree", report.min_degree)
        .kv("threshold", report.threshold)
        .kv("c4-free", yes_no(report.c4.is_none()));
    if let Some(w) = report.c4 {
        out = out.kv("c4", format_args!("{} {} {} {}", w.a0, w.a1, w.b0, w.b1));
    }
    if !report.deficient.is_empty() {
        out = out.kv("deficient", join(&report.deficient));
    }
    let stdout = out
        .kv("theorem3", if report.holds { "holds" } else { "fails" })
        .finish();
    Ok(CommandOutput::new(stdout, ExitStatus::from_verdict(report.holds)))
}

fn join(items: &[usize]) -> String {
    let mut out = String::new();
    for (k, v) in items.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out
}

fn solve_family(file: &Path, seed: u64, max_resamples: Option<u64>, exact: bool) -> Result<CommandOutput, CliError> {
    let family = load_family(file)?;
    if exact {
        let report = Report::new("solve family").kv("mode", "exact");
        return Ok(match find_transversal_exact(&family) {
            Some(t) => CommandOutput::new(
                report.kv("outcome", "found").payload(&serialize_transversal(&t)).finish(),
                ExitStatus::Success,
            ),
            None => CommandOutput::new(report.kv("outcome", "none").finish(), ExitStatus::Failure),
        });
    }
    let cap = max_resamples.unwrap_or_else(|| default_max_resamples(family.len()));
    let outcome = find_transversal(&family, seed, cap).map_err(|e| CliError::Input(e.to_string()))?;
    let report = Report::new("solve family")
        .kv("mode", "resample")
        .kv("seed", seed)
        .kv("max-resamples", cap)
        .kv("resamples", outcome.resamples);
    Ok(match outcome.transversal() {
        Some(t) => CommandOutput::new(
            report.kv("outcome", "found").payload(&serialize_transversal(t)).finish(),
            ExitStatus::Success,
        ),
        None => CommandOutput::new(report.kv("outcome", "exhausted").finish(), ExitStatus::Failure),
    })
}

fn solve_graph(file: &Path, seed: u64, max_resamples: Option<u64>, exact: bool) -> Result<CommandOutput, CliError> {
    let graph = load_graph(file)?;
    if exact {
        let matching = max_matching(&graph);
        let report = Report::new("solve graph").kv("mode", "exact");
        return Ok(if matching.len() == graph.size_a() {
            CommandOutput::new(
                report
                    .kv("outcome", "found")
                    .kv("matching-size", matching.len())
                    .payload(&serialize_matching(&matching))
                    .finish(),
                ExitStatus::Success,
            )
        } else {
            CommandOutput::new(report.kv("outcome", "none").finish(), ExitStatus::Failure)
        });
    }
    let pencils = graph.neighbor_family();
    let cap = max_resamples.unwrap_or_else(|| default_max_resamples(pencils.len()));
    let outcome = find_transversal(&pencils, seed, cap).map_err(|e| CliError::Input(e.to_string()))?;
    let report = Report::new("solve graph")
        .kv("mode", "resample")
        .kv("seed", seed)
        .kv("max-resamples", cap)
        .kv("resamples", outcome.resamples);
    Ok(match outcome.transversal() {
        Some(t) => {
            let matching = matching_from_transversal(&graph, t)
                .expect("transversal of the neighborhood family converts");
            CommandOutput::new(
                report
                    .kv("outcome", "found")
                    .kv("matching-size", matching.len())
                    .payload(&serialize_matching(&matching))
                    .finish(),
                ExitStatus::Success,
            )
        }
        None => CommandOutput::new(report.kv("outcome", "exhausted").finish(), ExitStatus::Failure),
    })
}

fn verify_family(file: &Path, assignment_file: &Path) -> Result<CommandOutput, CliError> {
    let family = load_family(file)?;
    let assignment = parse_assignment(&read_file(assignment_file)?).map_err(|source| CliError::Parse {
        path: assignment_file.display().to_string(),
        source,
    })?;
    let report = Report::new("verify family").kv("n", family.len());
    Ok(match validate_transversal(&family, &assignment) {
        Ok(()) => CommandOutput::new(report.kv("verdict", "holds").finish(), ExitStatus::Success),
        Err(e @ TransversalError::LengthMismatch { .. }) => return Err(CliError::Input(e.to_string())),
        Err(violation) => CommandOutput::new(
            report.kv("verdict", "fails").kv("violation", violation).finish(),
            ExitStatus::Failure,
        ),
    })
}

fn verify_graph(file: &Path, matching_file: &Path, saturate_a: bool) -> Result<CommandOutput, CliError> {
    let graph = load_graph(file)?;
    let matching = parse_matching(&read_file(matching_file)?).map_err(|source| CliError::Parse {
        path: matching_file.display().to_string(),
        source,
    })?;
    let report = Report::new("verify graph")
        .kv("pairs", matching.len())
        .kv("saturate-a", yes_no(saturate_a));
    Ok(match validate_matching(&graph, &matching, saturate_a) {
        Ok(()) => CommandOutput::new(report.kv("verdict", "holds").finish(), ExitStatus::Success),
        Err(violation) => CommandOutput::new(
            report.kv("verdict", "fails").kv("violation", violation).finish(),
            ExitStatus::Failure,
        ),
    })
}

fn gen_error(e: GenError) -> CliError {
    match e {
        GenError::RetryLimitExceeded { .. } => CliError::Exhausted(e.to_string()),
        _ => CliError::Input(e.to_string()),
    }
}

fn gen_family_cmd(n: usize, set_size: usize, max_overlap: usize, universe: u64, seed: u64) -> Result<CommandOutput, CliError> {
    let family = gen_family(n, set_size, max_overlap, universe, seed).map_err(gen_error)?;
    let mut out = CommandOutput::new(serialize_family(&family), ExitStatus::Success);
    out.diagnostics = format!("seed: {seed}\n");
    Ok(out)
}

fn gen_plane_cmd(q: u32) -> Result<CommandOutput, CliError> {
    let order = PlaneOrder::new(q).map_err(gen_error)?;
    let graph = gen_plane_incidence(order);
    Ok(CommandOutput::new(serialize_graph(&graph), ExitStatus::Success))
}

fn gen_theorem3_cmd(q: u32, n: usize) -> Result<CommandOutput, CliError> {
    let order = PlaneOrder::new(q).map_err(gen_error)?;
    let graph = gen_threshold_instance(order, n).map_err(gen_error)?;
    Ok(CommandOutput::new(serialize_graph(&graph), ExitStatus::Success))
}

fn bench(
    trials: u64,
    n: usize,
    set_size: usize,
    max_overlap: usize,
    universe: u64,
    seed: u64,
    max_resamples: Option<u64>,
) -> Result<CommandOutput, CliError> {
    let cap = max_resamples.unwrap_or_else(|| default_max_resamples(n));
    let mut report = Report::new("bench")
        .kv("trials", trials)
        .kv("n", n)
        .kv("l", set_size)
        .kv("m", max_overlap)
        .kv("universe", universe)
        .kv("seed", seed)
        .kv("max-resamples", cap);
    report.buf.push_str("trial resamples outcome\n");
    let mut found = 0u64;
    let mut total_resamples = 0u64;
    for trial in 0..trials {
        // Per-trial streams are pure functions of (seed, trial), so the
        // table is identical however the trials are scheduled.
        let family = gen_family(n, set_size, max_overlap, universe, derive_seed(seed, 2 * trial))
            .map_err(|e| match e {
                GenError::RetryLimitExceeded { .. } => {
                    CliError::Exhausted(format!("trial {trial}: {e}"))
                }
                _ => CliError::Input(e.to_string()),
            })?;
        let outcome = find_transversal(&family, derive_seed(seed, 2 * trial + 1), cap)
            .map_err(|e| CliError::Input(e.to_string()))?;
        total_resamples += outcome.resamples;
        if outcome.is_found() {
            found += 1;
        }
        let _ = writeln!(
            report.buf,
            "{trial} {} {}",
            outcome.resamples,
            if outcome.is_found() { "found" } else { "exhausted" }
        );
    }
    let all_found = found == trials;
    let stdout = report
        .kv("success-rate", found as f64 / trials as f64)
        .kv("mean-resamples", total_resamples as f64 / trials as f64)
        .kv("outcome", if all_found { "found" } else { "exhausted" })
        .finish();
    Ok(CommandOutput::new(stdout, ExitStatus::from_verdict(all_found)))
}
