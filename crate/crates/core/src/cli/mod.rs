//! Command-line front end. Every subcommand builds a [`JobSpec`], runs it and
//! prints deterministic JSON.
//!
//! Exit codes: 0 pass, 1 verification mismatch, 2 bad input, 3 resource cap.

pub mod job;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use job::{cyclo_json, Command, FieldSpec, JobSpec, Outcome, Which};

use crate::duals::OrbitKind;
use crate::error::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "unitri", version, about = "Exact character computations for unitriangular groups over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field order q (a prime power).
    #[arg(long)]
    pub q: Option<u64>,
    /// Characteristic, as an alternative to --q.
    #[arg(long)]
    pub p: Option<u32>,
    /// Degree over F_p, used with --p.
    #[arg(long)]
    pub e: Option<u32>,
    /// Defining polynomial as a JSON list of coefficients, constant term first.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Enumeration cap for groups and orbits.
    #[arg(long)]
    pub cap: Option<u64>,
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the job description instead of running it.
    #[arg(long)]
    pub print_job: bool,
}

#[derive(Args, Debug, Clone)]
pub struct FunctionalArgs {
    #[arg(long)]
    pub n: usize,
    /// Closed pattern as a JSON list of [i, j]; the full triangle by default.
    #[arg(long)]
    pub pattern: Option<String>,
    /// Sparse functional as a JSON list of [i, j, c].
    #[arg(long, default_value = "[]")]
    pub lambda: String,
}

#[derive(Subcommand, Debug)]
pub enum Sub {
    /// Kernel chain 𝔩^i ⊆ 𝔰^i of λ with degree and norm exponents of ξ_λ.
    Chain {
        #[command(flatten)]
        f: FunctionalArgs,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Full report for the exotic functional on UT_n(q).
    Exotic {
        #[arg(long)]
        r: usize,
        /// Matrix size, at least 6r + 1.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Compares the closed-form kernel chain of the exotic functional with the computed one.
    Verify {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Constituents of χ_κ on A_n(q) and the character tests for ψ_κ, ψ^Exp_κ.
    Kappa {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Orbit of λ under left, right, two-sided or coadjoint action.
    Orbit {
        #[command(flatten)]
        f: FunctionalArgs,
        #[arg(long, default_value = "coadjoint")]
        kind: OrbitKind,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Full value table of θ_λ, ψ_λ, ψ^Exp_λ, χ_λ or ξ_λ.
    Table {
        #[command(flatten)]
        f: FunctionalArgs,
        #[arg(long, value_enum, default_value = "kirillov")]
        which: Which,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Runs a job description read from a JSON file.
    Run {
        job: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("cannot parse {what}: {e}")))
}

impl FieldArgs {
    fn spec(&self) -> Result<FieldSpec> {
        Ok(FieldSpec {
            q: self.q,
            p: self.p,
            e: self.e,
            modulus: self.modulus.as_deref().map(|m| parse_json("--modulus", m)).transpose()?,
        })
    }
}

fn base(command: Command, field: &FieldArgs, common: &Common) -> Result<JobSpec> {
    Ok(JobSpec {
        command,
        field: field.spec()?,
        n: None,
        pattern: None,
        lambda: Vec::new(),
        r: None,
        which: None,
        kind: None,
        cap: common.cap,
    })
}

fn with_functional(mut job: JobSpec, f: &FunctionalArgs) -> Result<JobSpec> {
    job.n = Some(f.n);
    job.pattern = f.pattern.as_deref().map(|p| parse_json("--pattern", p)).transpose()?;
    job.lambda = parse_json("--lambda", &f.lambda)?;
    Ok(job)
}

/// The job a parsed command line describes, with its output options.
pub fn job_of(sub: &Sub) -> Result<(JobSpec, Option<PathBuf>, bool)> {
    let (job, common) = match sub {
        Sub::Chain { f, field, common } => (with_functional(base(Command::Chain, field, common)?, f)?, common),
        Sub::Exotic { r, n, field, common } => {
            let mut job = base(Command::Exotic, field, common)?;
            job.r = Some(*r);
            job.n = *n;
            (job, common)
        }
        Sub::Verify { r, field, common } => {
            let mut job = base(Command::Verify, field, common)?;
            job.r = Some(*r);
            (job, common)
        }
        Sub::Kappa { n, field, common } => {
            let mut job = base(Command::Kappa, field, common)?;
            job.n = Some(*n);
            (job, common)
        }
        Sub::Orbit { f, kind, field, common } => {
            let mut job = with_functional(base(Command::Orbit, field, common)?, f)?;
            job.kind = Some(*kind);
            (job, common)
        }
        Sub::Table { f, which, field, common } => {
            let mut job = with_functional(base(Command::Table, field, common)?, f)?;
            job.which = Some(*which);
            (job, common)
        }
        Sub::Run { job, out } => {
            let text = std::fs::read_to_string(job)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", job.display())))?;
            return Ok((parse_json("job file", &text)?, out.clone(), false));
        }
    };
    Ok((job, common.out.clone(), common.print_job))
}

fn emit(value: &serde_json::Value, out: Option<&PathBuf>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_sub(sub: &Sub) -> Result<bool> {
    let (job, out, print_job) = job_of(sub)?;
    if print_job {
        emit(&serde_json::to_value(&job).expect("job serializes"), out.as_ref())?;
        return Ok(true);
    }
    let outcome = job.execute()?;
    emit(&outcome.value, out.as_ref())?;
    Ok(outcome.passed)
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run_sub(&cli.command) {
        Ok(true) => 0,
        Ok(false) => {
            eprintln!("unitri: verification failed");
            1
        }
        Err(e) => {
            eprintln!("unitri: {e}");
            e.exit_code()
        }
    }
}
