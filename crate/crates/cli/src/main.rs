//! `jumploci`: batch front end. Reports go to standard output as JSON (or
//! TSV); exit code 2 flags a violated precondition, 3 a malformed input.

mod commands;
mod fixtures;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::commands::*;
use crate::io::*;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precondition { kind: String, message: String },
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    pub fn precondition(kind: &str, msg: impl Into<String>) -> Self {
        CliError::Precondition {
            kind: kind.to_string(),
            message: msg.into(),
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) => m,
            CliError::Precondition { message, .. } => message,
        }
    }

    fn kind(&self) -> &str {
        match self {
            CliError::Parse(_) => "Parse",
            CliError::Precondition { kind, .. } => kind,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Precondition { .. } => 2,
        }
    }
}

impl From<jumploci::Error> for CliError {
    fn from(e: jumploci::Error) -> Self {
        let debug = format!("{e:?}");
        let kind = debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error");
        CliError::precondition(kind, e.to_string())
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Parser, Debug)]
#[command(name = "jumploci", version, about = "Exact computations of cohomology jump loci")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Toric complexes given by a simplicial complex.
    #[command(subcommand)]
    Toric(ToricCmd),
    /// Compare τ₁ with TC₁ for a Laurent hypersurface.
    Tcone {
        #[arg(long)]
        poly: PathBuf,
    },
    /// First characteristic variety of a link from its Alexander polynomial.
    Linkcv {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Rank-one characteristic variety of an equivariant chain complex.
    Cvchain {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Characteristic variety models.
    #[command(subcommand)]
    Cv(CvCmd),
    /// Arrangements of lines in the projective plane.
    #[command(subcommand)]
    Arr(ArrCmd),
    /// Aomoto complexes of a graded algebra.
    #[command(subcommand)]
    Aomoto(AomotoCmd),
    /// Built-in examples.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Args, Debug)]
struct ComplexArgs {
    #[arg(long)]
    complex: PathBuf,
}

#[derive(Subcommand, Debug)]
enum ToricCmd {
    Res {
        #[command(flatten)]
        input: ComplexArgs,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    Cv {
        #[command(flatten)]
        input: ComplexArgs,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// R¹ and connectivity of the right-angled Artin group of the 1-skeleton.
    Raag {
        #[command(flatten)]
        input: ComplexArgs,
    },
    Omega {
        #[command(flatten)]
        input: ComplexArgs,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        plane: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum CvCmd {
    Classify {
        #[arg(long)]
        models: PathBuf,
    },
    Omega {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        plane: PathBuf,
        /// Resonance arrangement for the upper bound (defaults to τ₁ of the model).
        #[arg(long)]
        resonance: Option<PathBuf>,
    },
    Witness {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
}

#[derive(Args, Debug)]
struct FormsArgs {
    #[arg(long)]
    forms: PathBuf,
}

#[derive(Subcommand, Debug)]
enum ArrCmd {
    Points {
        #[command(flatten)]
        input: FormsArgs,
    },
    Res1 {
        #[command(flatten)]
        input: FormsArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Omega {
        #[command(flatten)]
        input: FormsArgs,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand, Debug)]
enum AomotoCmd {
    Betti {
        #[arg(long)]
        algebra: PathBuf,
        /// Comma-separated rationals, e.g. `1,-1/2,0`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    Member {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
}

#[derive(Subcommand, Debug)]
enum FixturesCmd {
    List,
    Run { name: String },
}

fn run(cmd: Command) -> Result<Value, CliError> {
    match cmd {
        Command::Toric(t) => match t {
            ToricCmd::Res { input, degree, depth } => {
                toric_res(&read_json::<ComplexIn>(&input.complex)?.build()?, degree, depth)
            }
            ToricCmd::Cv { input, degree, depth } => {
                toric_cv_report(&read_json::<ComplexIn>(&input.complex)?.build()?, degree, depth)
            }
            ToricCmd::Raag { input } => toric_raag(&read_json::<ComplexIn>(&input.complex)?.build()?),
            ToricCmd::Omega { input, degree, r, plane } => {
                let k = read_json::<ComplexIn>(&input.complex)?.build()?;
                let p = read_json::<SubspaceIn>(&plane)?.build()?;
                toric_omega(&k, degree, r, &p)
            }
        },
        Command::Tcone { poly } => tcone(&read_json::<PolyIn>(&poly)?.build(None)?),
        Command::Linkcv { poly } => linkcv(&read_json::<PolyIn>(&poly)?.build(None)?),
        Command::Cvchain { chain, degree, depth } => {
            cvchain(&build_chain(&read_json::<ChainIn>(&chain)?)?, degree, depth)
        }
        Command::Cv(c) => match c {
            CvCmd::Classify { models } => {
                let (m, r) = classify_input(&read_json::<ClassifyIn>(&models)?)?;
                cv_classify(&m, &r)
            }
            CvCmd::Omega { model, plane, resonance } => {
                let m = read_json::<ModelIn>(&model)?.build()?;
                let p = read_json::<SubspaceIn>(&plane)?.build()?;
                let res = match resonance {
                    Some(path) => Some(read_json::<ArrangementIn>(&path)?.build()?),
                    None => None,
                };
                cv_omega(&m, &p, res.as_ref())
            }
            CvCmd::Witness { input, bound } => cv_witness(&read_json::<WitnessIn>(&input)?, bound),
        },
        Command::Arr(a) => match a {
            ArrCmd::Points { input } => Ok(arr_points(&build_forms(&read_json::<Vec<Vec<RatIn>>>(&input.forms)?)?)),
            ArrCmd::Res1 { input, seed } => arr_res1(&build_forms(&read_json::<Vec<Vec<RatIn>>>(&input.forms)?)?, seed),
            ArrCmd::Omega { input, r } => Ok(arr_omega(&build_forms(&read_json::<Vec<Vec<RatIn>>>(&input.forms)?)?, r)),
        },
        Command::Aomoto(a) => match a {
            AomotoCmd::Betti { algebra, point, degree } => {
                let alg = build_algebra(&read_json::<AlgebraIn>(&algebra)?)?;
                aomoto_betti_report(&alg, &parse_point(&point)?, degree)
            }
            AomotoCmd::Member { algebra, point, degree, depth } => {
                let alg = build_algebra(&read_json::<AlgebraIn>(&algebra)?)?;
                aomoto_member_report(&alg, &parse_point(&point)?, degree, depth)
            }
        },
        Command::Fixtures(f) => match f {
            FixturesCmd::List => Ok(fixtures::list()),
            FixturesCmd::Run { name } => fixtures::run(&name),
        },
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("values serialize"),
        Format::Tsv => match v.as_object() {
            Some(map) => map
                .iter()
                .map(|(k, x)| format!("{k}\t{}", serde_json::to_string(x).expect("values serialize")))
                .collect::<Vec<_>>()
                .join("\n"),
            None => serde_json::to_string(v).expect("values serialize"),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(v) => {
            println!("{}", render(&v, cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let v = json!({"error": {"kind": e.kind(), "message": e.message()}});
            println!("{}", render(&v, cli.format));
            ExitCode::from(e.exit_code())
        }
    }
}
