//! Command-line surface for `pind-core`: matrices, permanent indices,
//! certificates and exhaustive sweeps.

mod certify;
mod sweep;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use pind_core::graph::io::parse_graph;
use pind_core::index::{permanent_index_with, SearchConfig};
use pind_core::reduction::{verify_certificate, ReductionCertificate, Verified};
use pind_core::{build_total_matrix, canonical_orientation, Graph, MatrixKind, Orientation, PindResult};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use certify::{certify, Family};
pub use sweep::{sweep, SweepLevel, SweepSummary};

#[derive(Debug, Parser)]
#[command(name = "pind", version, about = "Permanent indices of total-weighting matrices")]
pub struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    A,
    B,
}

impl From<KindArg> for MatrixKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::A => MatrixKind::A,
            KindArg::B => MatrixKind::B,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Uniform,
    Corner,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump A_G or B_G as CSV.
    Matrix {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "a")]
        kind: KindArg,
        /// Use the orientation stored in the graph file.
        #[arg(long)]
        oriented: bool,
    },
    /// Compute the permanent index by exhaustive search.
    Pind {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "a")]
        kind: KindArg,
        #[arg(long, default_value_t = 3)]
        cap: u32,
        /// Candidates examined before giving up.
        #[arg(long, default_value_t = SearchConfig::default().budget)]
        budget: u64,
        #[arg(long)]
        oriented: bool,
    },
    /// Build a reduction certificate for a graph family.
    Certify {
        #[arg(long, value_enum)]
        family: Family,
        /// `subcubic FILE`, `2tree N SEED`, `halin wheel K`,
        /// `halin random INTERNAL SEED` or `grid N M`.
        args: Vec<String>,
        #[arg(long, value_enum, default_value = "uniform")]
        variant: VariantArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate.
    Verify { certificate: PathBuf },
    /// Check the permanent index of every connected graph up to a size.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "a")]
        kind: KindArg,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok = 0,
    VerificationFailure = 1,
    InputError = 2,
    ResourceCap = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Input(_) => Status::InputError,
            CliError::Verification(_) => Status::VerificationFailure,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// SHA-256 of the input bytes, hex.
    pub input_digest: Option<String>,
    pub status: Status,
    pub result: Value,
    pub elapsed_ms: u128,
}

/// What a command produced: a report plus the human-readable text.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub text: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.report.status as i32
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.report).expect("report serializes")
        } else {
            self.text.clone()
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn read_input(path: &Path) -> Result<(String, String), CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let d = digest(&bytes);
    let text = String::from_utf8(bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((text, d))
}

fn load_graph(path: &Path, oriented: bool) -> Result<(Graph, Orientation, String), CliError> {
    let (text, d) = read_input(path)?;
    let (g, o) = parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let o = match (oriented, o) {
        (true, Some(o)) => o,
        (true, None) => return Err(CliError::Input(format!("{}: no orientation stored", path.display()))),
        (false, _) => canonical_orientation(&g),
    };
    Ok((g, o, d))
}

/// Partial result of a command before timing and echo are attached.
struct Done {
    digest: Option<String>,
    status: Status,
    result: Value,
    text: String,
}

impl Done {
    fn ok(digest: Option<String>, result: Value, text: String) -> Self {
        Self { digest, status: Status::Ok, result, text }
    }
}

/// Runs a parsed command. Errors become reports with the matching status.
pub fn run(cli: &Cli, argv: Vec<String>) -> Outcome {
    let start = Instant::now();
    let done = match dispatch(&cli.command) {
        Ok(done) => done,
        Err(e) => Done {
            digest: None,
            status: e.status(),
            result: json!({ "error": e.to_string() }),
            text: format!("error: {e}"),
        },
    };
    Outcome {
        report: RunReport {
            command: argv,
            input_digest: done.digest,
            status: done.status,
            result: done.result,
            elapsed_ms: start.elapsed().as_millis(),
        },
        text: done.text,
    }
}

fn dispatch(command: &Command) -> Result<Done, CliError> {
    match command {
        Command::Matrix { graph, kind, oriented } => cmd_matrix(graph, *kind, *oriented),
        Command::Pind { graph, kind, cap, budget, oriented } => cmd_pind(graph, *kind, *cap, *budget, *oriented),
        Command::Certify { family, args, variant, out } => cmd_certify(*family, args, *variant, out.as_deref()),
        Command::Verify { certificate } => cmd_verify(certificate),
        Command::Sweep { max_n, kind, report } => cmd_sweep(*max_n, *kind, report.as_deref()),
    }
}

fn cmd_matrix(path: &Path, kind: KindArg, oriented: bool) -> Result<Done, CliError> {
    let (g, o, d) = load_graph(path, oriented)?;
    let a = build_total_matrix(&g, &o);
    let csv = match kind {
        KindArg::A => a.to_csv(),
        KindArg::B => a.edge_part().to_csv(&a.header()[g.n()..]),
    };
    let result = json!({ "kind": format!("{kind:?}"), "rows": g.m(), "csv": csv });
    Ok(Done::ok(Some(d), result, csv.trim_end().to_string()))
}

fn cmd_pind(path: &Path, kind: KindArg, cap: u32, budget: u64, oriented: bool) -> Result<Done, CliError> {
    let (g, o, d) = load_graph(path, oriented)?;
    let cfg = SearchConfig { budget };
    let r = permanent_index_with(kind.into(), &g, &o, cap, &cfg).map_err(input_err)?;
    let done = match r {
        PindResult::Value { k, witness } => {
            let result = json!({
                "pind": k.to_string(),
                "witness": { "vertices": witness.eta.vertices, "edges": witness.eta.edges },
                "permanent": witness.permanent.to_string(),
            });
            Done::ok(Some(d), result, format!("pind={k} (witness permanent {})", witness.permanent))
        }
        PindResult::CapExceeded { cap } => Done {
            digest: Some(d),
            status: Status::ResourceCap,
            result: json!({ "pind": "cap-exceeded", "cap": cap.to_string() }),
            text: format!("cap-exceeded: no nonzero permanent with multiplicities up to {cap}"),
        },
        PindResult::Unknown { k } => Done {
            digest: Some(d),
            status: Status::ResourceCap,
            result: json!({ "pind": "unknown", "level": k.to_string(), "budget": budget.to_string() }),
            text: format!("unknown: search budget of {budget} exhausted at level {k}"),
        },
    };
    Ok(done)
}

fn cmd_certify(family: Family, args: &[String], variant: VariantArg, out: Option<&Path>) -> Result<Done, CliError> {
    let c = certify(family, args, variant)?;
    let text = c.certificate.to_json();
    let digest = c.input_digest.clone();
    let verified = verify_certificate(&c.certificate).map_err(|e| CliError::Verification(e.to_string()))?;
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    let mut result = json!({
        "family": format!("{family:?}"),
        "vertices": c.certificate.graph.n.to_string(),
        "steps": verified.steps.to_string(),
        "base_vertices": verified.base_vertices.to_string(),
        "base_permanent": verified.base_permanent.to_string(),
        "out": out.map(|p| p.display().to_string()),
        "certificate_digest": self::digest(text.as_bytes()),
    });
    if let Some(extra) = c.extra {
        result["details"] = extra;
    }
    let human = match out {
        Some(p) => format!(
            "certificate written to {}: {} steps, base of {} vertices with permanent {}",
            p.display(),
            verified.steps,
            verified.base_vertices,
            verified.base_permanent
        ),
        None => text,
    };
    Ok(Done::ok(Some(digest), result, human))
}

/// Reads and replays a certificate file.
pub fn verify_file(path: &Path) -> Result<Verified, CliError> {
    let (text, _) = read_input(path)?;
    let cert =
        ReductionCertificate::from_json(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    verify_certificate(&cert).map_err(|e| CliError::Verification(format!("verification failed: {e}")))
}

fn cmd_verify(path: &Path) -> Result<Done, CliError> {
    let (_, d) = read_input(path)?;
    let v = verify_file(path)?;
    let result = json!({
        "verified": true,
        "steps": v.steps.to_string(),
        "base_vertices": v.base_vertices.to_string(),
        "base_permanent": v.base_permanent.to_string(),
    });
    let text = format!(
        "verified: {} steps, base of {} vertices with permanent {}",
        v.steps, v.base_vertices, v.base_permanent
    );
    Ok(Done::ok(Some(d), result, text))
}

fn cmd_sweep(max_n: usize, kind: KindArg, report: Option<&Path>) -> Result<Done, CliError> {
    let s = sweep(max_n, kind.into(), &SearchConfig::default());
    let result = serde_json::to_value(&s).expect("summary serializes");
    if let Some(path) = report {
        let body = serde_json::to_string_pretty(&result).expect("summary serializes");
        std::fs::write(path, body).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    let mut text = String::new();
    for l in &s.levels {
        text.push_str(&format!(
            "n={}: {} graphs checked, {} skipped, max pind {}\n",
            l.n,
            l.checked,
            l.skipped,
            l.max_pind.map_or("-".into(), |k| k.to_string())
        ));
    }
    let status = if !s.counterexamples.is_empty() {
        text.push_str(&format!("{} counterexamples to pind <= {}\n", s.counterexamples.len(), s.bound));
        Status::VerificationFailure
    } else if s.unknown > 0 {
        text.push_str(&format!("{} graphs exhausted the search budget\n", s.unknown));
        Status::ResourceCap
    } else {
        text.push_str(&format!("all graphs satisfy pind <= {}\n", s.bound));
        Status::Ok
    };
    Ok(Done { digest: None, status, result, text: text.trim_end().to_string() })
}
