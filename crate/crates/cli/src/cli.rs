//! Argument grammar.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "transversal",
    version,
    about = "Transversals of finite set families: condition checks, solvers, oracles, and instance generators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the sufficient condition of an instance
    Check {
        #[command(subcommand)]
        target: CheckTarget,
    },
    /// Construct a transversal or an A-saturating matching
    Solve {
        #[command(subcommand)]
        target: SolveTarget,
    },
    /// Verify a claimed transversal or matching
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Generate instances to stdout
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Solve many generated families and tabulate the outcomes
    Bench {
        /// Number of trials
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Number of sets per family
        #[arg(value_name = "N")]
        n: usize,
        /// Size of every set
        #[arg(value_name = "L")]
        set_size: usize,
        /// Maximum pairwise intersection
        #[arg(value_name = "M")]
        max_overlap: usize,
        /// Element labels are drawn from 0..UNIVERSE
        #[arg(value_name = "UNIVERSE")]
        universe: u64,
        /// Master seed; per-trial seeds derive from it
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Resample cap per trial (default 10000 + 100·n²)
        #[arg(long)]
        max_resamples: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckTarget {
    /// e·m·(2n−3) ≤ l² for a family file
    Family { file: PathBuf },
    /// C4-freeness plus deg(v)² ≥ 2e·|A| for a graph file
    Graph { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum SolveTarget {
    /// Find a transversal of a family file
    Family {
        file: PathBuf,
        /// Seed for the resampling run
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Resample cap (default 10000 + 100·n²)
        #[arg(long)]
        max_resamples: Option<u64>,
        /// Use the exact matching oracle instead of resampling
        #[arg(long)]
        exact: bool,
    },
    /// Find an A-saturating matching of a graph file
    Graph {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_resamples: Option<u64>,
        /// Use maximum matching instead of the resampling pipeline
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Validate a transversal file against a family file
    Family {
        file: PathBuf,
        /// Claimed transversal
        #[arg(long)]
        assignment: PathBuf,
    },
    /// Validate a matching file against a graph file
    Graph {
        file: PathBuf,
        /// Claimed matching
        #[arg(long)]
        matching: PathBuf,
        /// Additionally require the matching to cover all of A
        #[arg(long)]
        saturate_a: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Random family with exact set size and capped intersections
    Family {
        #[arg(value_name = "N")]
        n: usize,
        #[arg(value_name = "L")]
        set_size: usize,
        #[arg(value_name = "M")]
        max_overlap: usize,
        #[arg(value_name = "UNIVERSE")]
        universe: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Projective-plane incidence graph of prime order q
    Plane {
        #[arg(value_name = "Q")]
        q: u32,
    },
    /// Plane restriction meeting the saturation condition: first N
    /// points of the order-Q plane versus all lines
    #[command(name = "theorem3")]
    Theorem3 {
        #[arg(value_name = "Q")]
        q: u32,
        #[arg(value_name = "N")]
        n: usize,
    },
}
