//! Command-line surface: tableau transforms, constructions and verification
//! campaigns. Results go to standard output, progress to standard error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::campaigns::{self, CampaignOutcome, Status};
use crate::coreq;
use crate::error::{Result, TableauError};
use crate::fixed::{self, beta_shape, construct_r2, construct_ra, enumerate_syt, gamma_shape};
use crate::format;
use crate::jdt;
use crate::partition::Partition;
use crate::stabilize;
use crate::tableau::SkewTableau;

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "tableau-lab", version, about = "Standard Young tableaux, stabilization and promotion fixed points")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: OutputFormat,
    /// Worker threads for parallel sweeps (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Tableau file in text or JSON form; standard input when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PartitionInput {
    /// Comma-separated parts; read from standard input when omitted.
    pub partition: Option<String>,
    #[arg(short = 'r', long)]
    pub modulus: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rectify by jeu de taquin.
    Rect(Input),
    /// Anti-rectify into the bottom-right corner.
    Antirect(Input),
    /// Apply promotion, optionally several times.
    Promote {
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Apply demotion.
    Demote(Input),
    /// Evacuate a straight tableau.
    Evacuate(Input),
    /// Rotate by 180 degrees and reverse the entries.
    Dagger(Input),
    /// Stabilization number.
    Stab(Input),
    /// Shape of the rectification of K shifted copies.
    StabShape {
        #[arg(long)]
        copies: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Reading word, rows bottom to top.
    ReadingWord(Input),
    /// Quotient pieces, union shape and core.
    Quotient(PartitionInput),
    /// Core of a partition.
    Core(PartitionInput),
    /// Build R_a(S), or every R_a(S) with --all.
    Construct {
        #[arg(short = 'a', long = "a")]
        a: usize,
        #[arg(long)]
        all: bool,
        #[arg(short = 'b', long = "b", requires = "all")]
        b: Option<usize>,
        #[arg(short = 'r', long = "r", requires = "all")]
        r: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Build R_2(S), or every R_2(S) with --all.
    Construct2 {
        #[arg(long)]
        all: bool,
        #[arg(short = 'b', long = "b", requires = "all")]
        b: Option<usize>,
        #[arg(short = 'r', long = "r", requires = "all")]
        r: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Run a verification campaign.
    Verify {
        #[command(subcommand)]
        campaign: Campaign,
    },
}

#[derive(Debug, Subcommand)]
pub enum Campaign {
    /// Distribution of stabilization numbers over permutations.
    StabDist {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Sweep decreasing row vectors for the bound stab <= rows.
    Conjecture {
        #[arg(long)]
        max_size: usize,
    },
    /// Root-of-unity evaluation against fixed-point counts for every k.
    Csp {
        #[arg(short = 'a')]
        a: usize,
        #[arg(short = 'b')]
        b: usize,
    },
    /// Constructions against brute force.
    FixedPoints,
    /// Invariant suites.
    Properties,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: &'static str,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Value,
    pub elapsed: f64,
    pub status: Status,
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = err.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match execute(&cli) {
        Ok((output, status)) => {
            print!("{output}");
            if status == Status::Fail {
                EXIT_FAIL
            } else {
                EXIT_PASS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_USAGE
        }
    }
}

fn read_source(path: &Option<PathBuf>) -> Result<String> {
    let io_err = |e: std::io::Error| TableauError::Parse {
        line: 0,
        column: 0,
        message: e.to_string(),
    };
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(io_err),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(io_err)?;
            Ok(buf)
        }
    }
}

fn read_tableau(input: &Input) -> Result<SkewTableau> {
    format::parse_any(&read_source(&input.input)?)
}

fn read_partition(input: &PartitionInput) -> Result<Partition> {
    match &input.partition {
        Some(s) => s.parse(),
        None => read_source(&None)?.trim().parse(),
    }
}

fn emit_tableau(t: &SkewTableau, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => format::to_text(t),
        OutputFormat::Json => format::to_json(t),
    }
}

fn emit_value(text: String, value: Value, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => format!("{text}\n"),
        OutputFormat::Json => {
            let mut object = json!({"schema_version": SCHEMA_VERSION});
            if let (Some(target), Value::Object(fields)) = (object.as_object_mut(), value) {
                target.extend(fields);
            }
            format!("{object}\n")
        }
    }
}

fn emit_many(tableaux: &[SkewTableau], fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => {
            let blocks: Vec<String> = tableaux.iter().map(format::to_text).collect();
            format!("{}count {}\n", blocks.iter().map(|b| format!("{b}\n")).collect::<String>(), tableaux.len())
        }
        OutputFormat::Json => {
            let list: Vec<Value> = tableaux.iter().map(format::to_json_value).collect();
            format!(
                "{}\n",
                json!({"schema_version": SCHEMA_VERSION, "count": tableaux.len(), "tableaux": list})
            )
        }
    }
}

fn require_all_params(b: Option<usize>, r: Option<usize>) -> Result<(usize, usize)> {
    match (b, r) {
        (Some(b), Some(r)) if b > 0 && r > 0 => Ok((b, r)),
        _ => Err(TableauError::Precondition("--all needs positive -b and -r".into())),
    }
}

fn sorted(mut v: Vec<SkewTableau>) -> Vec<SkewTableau> {
    v.sort_by(|x, y| x.rows().cmp(y.rows()));
    v
}

fn execute(cli: &Cli) -> Result<(String, Status)> {
    let fmt = cli.format;
    let done = |s: String| Ok((s, Status::Pass));
    match &cli.command {
        Command::Rect(input) => done(emit_tableau(&jdt::rect(&read_tableau(input)?), fmt)),
        Command::Antirect(input) => done(emit_tableau(&jdt::antirect(&read_tableau(input)?), fmt)),
        Command::Promote { power, input } => {
            done(emit_tableau(&jdt::promote_power(&read_tableau(input)?, *power)?, fmt))
        }
        Command::Demote(input) => done(emit_tableau(&jdt::demote(&read_tableau(input)?)?, fmt)),
        Command::Evacuate(input) => done(emit_tableau(&jdt::evacuate(&read_tableau(input)?)?, fmt)),
        Command::Dagger(input) => done(emit_tableau(&read_tableau(input)?.dagger(), fmt)),
        Command::Stab(input) => {
            let result = stabilize::stab(&read_tableau(input)?)?;
            done(emit_value(result.stab.to_string(), serde_json::to_value(&result)?, fmt))
        }
        Command::StabShape { copies, input } => {
            let shape = stabilize::stabilized_shape(&read_tableau(input)?, *copies)?;
            let text = shape.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            done(emit_value(text, json!({"copies": copies, "shape": shape}), fmt))
        }
        Command::ReadingWord(input) => {
            let word = read_tableau(input)?.reading_word();
            done(emit_value(word.to_string(), json!({"reading_word": word}), fmt))
        }
        Command::Quotient(input) => {
            let p = read_partition(input)?;
            let q = coreq::quotient(&p, input.modulus)?;
            let mut lines: Vec<String> = q
                .pieces
                .iter()
                .enumerate()
                .map(|(i, piece)| format!("piece {}: {piece}", i + 1))
                .collect();
            lines.push(format!("union: {}/{}", q.union_shape.outer, q.union_shape.inner));
            lines.push(format!("core: {}", q.core));
            done(emit_value(lines.join("\n"), serde_json::to_value(&q)?, fmt))
        }
        Command::Core(input) => {
            let p = read_partition(input)?;
            let core = coreq::quotient(&p, input.modulus)?.core;
            done(emit_value(core.to_string(), json!({"core": core}), fmt))
        }
        Command::Construct { a, all: false, input, .. } => {
            done(emit_tableau(&construct_ra(&read_tableau(input)?, *a)?, fmt))
        }
        Command::Construct { a, all: true, b, r, .. } => {
            let (b, r) = require_all_params(*b, *r)?;
            let built = enumerate_syt(&beta_shape(b, r))?
                .map(|s| construct_ra(&s, *a))
                .collect::<Result<Vec<_>>>()?;
            done(emit_many(&sorted(built), fmt))
        }
        Command::Construct2 { all: false, input, .. } => {
            done(emit_tableau(&construct_r2(&read_tableau(input)?)?, fmt))
        }
        Command::Construct2 { all: true, b, r, .. } => {
            let (b, r) = require_all_params(*b, *r)?;
            let built = enumerate_syt(&gamma_shape(b, r))?
                .map(|s| construct_r2(&s))
                .collect::<Result<Vec<_>>>()?;
            done(emit_many(&sorted(built), fmt))
        }
        Command::Verify { campaign } => verify(campaign, fmt),
    }
}

fn verify(campaign: &Campaign, fmt: OutputFormat) -> Result<(String, Status)> {
    let start = Instant::now();
    let progress = |msg: &str| eprintln!("[progress] {msg}");
    let mut parameters = BTreeMap::new();
    let (name, outcome) = match campaign {
        Campaign::StabDist { n } => {
            parameters.insert("n".to_string(), json!(n));
            ("stab-dist", campaigns::stab_dist(*n, &progress))
        }
        Campaign::Conjecture { max_size } => {
            parameters.insert("max_size".to_string(), json!(max_size));
            ("conjecture", campaigns::conjecture(*max_size, &progress))
        }
        Campaign::Csp { a, b } => {
            parameters.insert("a".to_string(), json!(a));
            parameters.insert("b".to_string(), json!(b));
            ("csp", campaigns::csp(*a, *b, &progress))
        }
        Campaign::FixedPoints => ("fixed-points", campaigns::fixed_points(&progress)),
        Campaign::Properties => ("properties", campaigns::properties(&progress)),
    };
    parameters.insert("max_cells".to_string(), json!(fixed::max_cells()));
    let outcome = match outcome {
        Ok(o) => o,
        Err(err @ TableauError::LimitExceeded { .. }) => CampaignOutcome {
            status: Status::Info,
            summary: format!("skipped: {err}"),
            results: json!({"skipped": err.to_string()}),
        },
        Err(err) => return Err(err),
    };
    let report = RunReport {
        schema_version: SCHEMA_VERSION,
        command: format!("verify {name}"),
        parameters,
        results: outcome.results,
        elapsed: start.elapsed().as_secs_f64(),
        status: outcome.status,
    };
    let text = match fmt {
        OutputFormat::Text => {
            let status = serde_json::to_value(report.status)?;
            format!("{}\nstatus: {}\n", outcome.summary, status.as_str().unwrap_or("?"))
        }
        OutputFormat::Json => format!("{}\n", serde_json::to_string(&report)?),
    };
    Ok((text, report.status))
}
