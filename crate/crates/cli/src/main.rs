//! `g2verma`: classification, singular vectors, kernel search, embedding
//! diagrams and self-verification from the command line.
//!
//! Exit status: 0 success, 1 domain error, 2 malformed input, 3 failed
//! verification.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use g2verma::singular::{closed_form_sv, weight_for_type};
use g2verma::verify::{run_suite, Suite};
use g2verma::wire::{
    classification_to_json, diagram_to_json, search_to_json, vector_to_json, Classification,
    SearchResult,
};
use g2verma::{
    brute_force_sv, build_diagram, Error, GradeVector, Rational, Scalar, SvType, Weight,
};

#[derive(Debug, Parser)]
#[command(
    name = "g2verma",
    version,
    about = "Exact lowest-weight Verma modules over the Jacobi algebra G2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reducibility types, targets and case label of a lowest weight (JSON).
    Classify {
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        lw: Weight,
    },
    /// Closed-form singular vector of one type (JSON).
    Sv(SvArgs),
    /// Kernel of the lowering operators on one grade (JSON).
    Search {
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        lw: Weight,
        #[arg(long, value_parser = parse_grade, allow_hyphen_values = true)]
        grade: GradeVector,
    },
    /// Embedding diagram of a lowest weight.
    Diagram {
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        lw: Weight,
        #[arg(long, default_value_t = g2verma::DEFAULT_MAX_DEPTH)]
        max_depth: u32,
        #[arg(long, value_enum)]
        format: Format,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Overrides the suite's parameter or grade bound.
        #[arg(long)]
        bound: Option<i64>,
    },
}

#[derive(Debug, Args)]
struct SvArgs {
    #[arg(long = "type", value_enum)]
    kind: Kind,
    #[arg(long)]
    p1: Option<u32>,
    #[arg(long)]
    p2: Option<u32>,
    #[arg(long)]
    p3: Option<u32>,
    #[arg(long)]
    q3: Option<u32>,
    #[arg(long)]
    p4: Option<u32>,
    #[arg(long)]
    p5: Option<u32>,
    /// Required except for type iii, whose weight is fixed by its parameters.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    lw: Option<Weight>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    I,
    Ii,
    Iii,
    Iv,
    V,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn parse_weight(text: &str) -> Result<Weight, String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected <rat>,<rat>, got `{text}`"))?;
    let parse = |s: &str| Rational::parse_fraction(s.trim()).map_err(|e| e.to_string());
    Ok(Weight::new(parse(a)?, parse(b)?))
}

fn parse_grade(text: &str) -> Result<GradeVector, String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected <int>,<int>, got `{text}`"))?;
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("`{s}`: {e}"));
    Ok(GradeVector::new(parse(a)?, parse(b)?))
}

fn parse_suite(text: &str) -> Result<Suite, String> {
    text.parse::<Suite>().map_err(|e| e.to_string())
}

enum Failure {
    Domain(String),
    Malformed(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Malformed(_)
            | Error::MissingParam(_)
            | Error::InvalidDepth => Failure::Malformed(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn sv_type(args: &SvArgs) -> Result<SvType, Failure> {
    let need = |value: Option<u32>, name: &str| {
        value.ok_or_else(|| Failure::Malformed(format!("--{name} is required for this type")))
    };
    let given: Vec<&str> = [
        ("p1", args.p1),
        ("p2", args.p2),
        ("p3", args.p3),
        ("q3", args.q3),
        ("p4", args.p4),
        ("p5", args.p5),
    ]
    .into_iter()
    .filter_map(|(n, v)| v.map(|_| n))
    .collect();
    let t = match args.kind {
        Kind::I => SvType::I {
            p1: need(args.p1, "p1")?,
        },
        Kind::Ii => SvType::II {
            p2: need(args.p2, "p2")?,
        },
        Kind::Iii => SvType::III {
            p3: need(args.p3, "p3")?,
            q3: need(args.q3, "q3")?,
        },
        Kind::Iv => SvType::IV {
            p4: need(args.p4, "p4")?,
        },
        Kind::V => SvType::V {
            p5: need(args.p5, "p5")?,
        },
    };
    let expected: Vec<&str> = t.params().into_iter().map(|(n, _)| n).collect();
    if let Some(extra) = given.iter().find(|n| !expected.contains(n)) {
        return Err(Failure::Malformed(format!(
            "--{extra} does not apply to type {}",
            t.roman()
        )));
    }
    t.validate()?;
    Ok(t)
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Classify { lw } => Ok(classification_to_json(&Classification::of(&lw)) + "\n"),
        Command::Sv(args) => {
            let t = sv_type(&args)?;
            let lw = match (args.lw, t) {
                (Some(lw), _) => lw,
                (None, SvType::III { .. }) => weight_for_type(t, Rational::from_i64(0))?,
                (None, _) => {
                    return Err(Failure::Malformed(format!(
                        "--lw is required for type {}",
                        t.roman()
                    )))
                }
            };
            Ok(vector_to_json(&closed_form_sv(t, &lw)?) + "\n")
        }
        Command::Search { lw, grade } => {
            let basis = brute_force_sv(&lw, grade.p1, grade.p2);
            Ok(search_to_json(&SearchResult { lw, grade, basis }) + "\n")
        }
        Command::Diagram {
            lw,
            max_depth,
            format,
        } => {
            let d = build_diagram(&lw, max_depth)?;
            Ok(match format {
                Format::Dot => d.to_dot(),
                Format::Json => diagram_to_json(&d) + "\n",
            })
        }
        Command::Verify { suite, seed, bound } => {
            let report = run_suite(suite, seed, bound);
            if report.passed() {
                Ok(report.to_string())
            } else {
                Err(Failure::Verification(report.to_string()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            ExitCode::from(3)
        }
    }
}
