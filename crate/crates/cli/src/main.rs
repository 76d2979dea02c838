use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use enthyrev::af::{skeptical_accepted, stable_extensions};
use enthyrev::eaf::{
    acceptable_afs, classify_attacks, parse_eaf_goal, revise_eaf, ConstraintMode,
};
use enthyrev::logic::{models, parse_formula_lines};
use enthyrev::num::Certainty;
use enthyrev::revision::dalal_revise;
use enthyrev::structured::{exhaustive_graph, make_enthymeme, parse_certainties, DEFAULT_MAX_ADDED};
use enthyrev::{
    parse_af, parse_eaf, parse_formula, parse_goal, revise_af, CertaintyMap, DistanceMode, Error,
    Formula, GoalFormula, Interpretation, Rational, RevisionOutcome, Vocabulary,
};

#[derive(Parser)]
#[command(name = "enthyrev", version, about = "Enthymeme-based argumentation frameworks and their revision")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    emit_structured: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the models of a formula.
    Models {
        formula: String,
        /// Comma-separated vocabulary; defaults to the formula's variables.
        #[arg(long)]
        vocab: Option<String>,
    },
    /// Dalal revision of one formula by another.
    ReviseFormula {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        vocab: Option<String>,
    },
    /// Stable extensions and skeptically accepted arguments of an AF.
    Stable { af: PathBuf },
    /// Revise an AF by a goal over acc/att atoms.
    ReviseAf {
        #[arg(long)]
        af: PathBuf,
        #[arg(long)]
        goal: String,
        #[arg(long)]
        constraint: Option<String>,
        #[command(flatten)]
        revision: RevisionFlags,
    },
    /// Enthymeme-based AFs.
    #[command(subcommand)]
    Eaf(EafCommand),
    /// Deductive arguments and enthymemes.
    #[command(subcommand)]
    Args(ArgsCommand),
}

#[derive(Args, Clone, Copy)]
struct RevisionFlags {
    /// dalal, att-weighted or att-only.
    #[arg(long, default_value = "att-only", value_parser = parse_mode)]
    mode: DistanceMode,
    /// Keep revised AFs without stable extensions.
    #[arg(long)]
    allow_empty_semantics: bool,
}

#[derive(Subcommand)]
enum EafCommand {
    /// Certain and questionable attacks.
    Classify {
        #[arg(long)]
        eaf: PathBuf,
    },
    /// Revise the underlying AF under an integrity constraint.
    Revise {
        #[arg(long)]
        eaf: PathBuf,
        #[arg(long)]
        goal: String,
        /// deductive, certain or none.
        #[arg(long, default_value = "deductive", value_parser = parse_constraint_mode)]
        constraint_mode: ConstraintMode,
        #[command(flatten)]
        revision: RevisionFlags,
    },
    /// Revise, then keep the results explained by a recompletion.
    Acceptable {
        #[arg(long)]
        eaf: PathBuf,
        #[arg(long)]
        goal: String,
        #[arg(long)]
        beliefs: PathBuf,
        #[arg(long)]
        claims: PathBuf,
        #[arg(long, default_value = "deductive", value_parser = parse_constraint_mode)]
        constraint_mode: ConstraintMode,
        #[arg(long, default_value_t = DEFAULT_MAX_ADDED)]
        max_added: usize,
        #[command(flatten)]
        revision: RevisionFlags,
    },
}

#[derive(Subcommand)]
enum ArgsCommand {
    /// Exhaustive graph of a belief base over a claim pool.
    Generate {
        #[arg(long)]
        beliefs: PathBuf,
        #[arg(long)]
        claims: PathBuf,
    },
    /// Turn deductive arguments into enthymemes with a certainty threshold.
    Encode {
        /// File of deductive arguments in the EAF format.
        #[arg(long)]
        args: PathBuf,
        #[arg(long)]
        certainty: PathBuf,
        #[arg(long, value_parser = parse_tau)]
        tau: Rational,
    },
}

fn parse_mode(s: &str) -> Result<DistanceMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_constraint_mode(s: &str) -> Result<ConstraintMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_tau(s: &str) -> Result<Rational, String> {
    Rational::parse_value(s).ok_or_else(|| format!("`{s}` is not a decimal or a fraction"))
}

enum Failure {
    Usage(String),
    Library(Error),
    Empty(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

struct Output {
    text: String,
    json: Value,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn vocabulary(list: Option<&str>, formulas: &[&Formula]) -> Result<Arc<Vocabulary>, Failure> {
    let names: Vec<String> = match list {
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect(),
        None => {
            let mut names: Vec<String> = Vec::new();
            for f in formulas {
                for v in f.variables() {
                    if !names.contains(&v) {
                        names.push(v);
                    }
                }
            }
            names
        }
    };
    Ok(Arc::new(Vocabulary::new(names)?))
}

fn listing(ms: &[Interpretation]) -> Output {
    let mut text = String::new();
    for m in ms {
        writeln!(text, "{m}").unwrap();
    }
    Output {
        text,
        json: json!(ms.iter().map(|m| m.true_set()).collect::<Vec<_>>()),
    }
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn outcome(out: RevisionOutcome) -> Result<Output, Failure> {
    if out.is_empty() {
        return Err(Failure::Empty("no revised AF satisfies the goal and the constraint".into()));
    }
    Ok(Output {
        text: out.to_string(),
        json: serde_json::to_value(&out).expect("outcome serializes"),
    })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Models { formula, vocab } => {
            let f = parse_formula(formula)?;
            let v = vocabulary(vocab.as_deref(), &[&f])?;
            Ok(listing(&models(&f, &v)?))
        }
        Command::ReviseFormula { phi, alpha, vocab } => {
            let phi = parse_formula(phi)?;
            let alpha = parse_formula(alpha)?;
            let v = vocabulary(vocab.as_deref(), &[&phi, &alpha])?;
            let result = dalal_revise(&phi, &alpha, &v)?;
            if result.is_empty() {
                return Err(Failure::Empty("alpha has no model".into()));
            }
            Ok(listing(&result))
        }
        Command::Stable { af } => {
            let af = parse_af(&read(af)?)?;
            let ext = stable_extensions(&af)?;
            let acc = skeptical_accepted(&af)?;
            let mut text = String::new();
            for e in ext.iter() {
                writeln!(text, "extension: {}", braces(e)).unwrap();
            }
            writeln!(text, "skeptical: {}", braces(&acc.accepted)).unwrap();
            if acc.vacuous {
                writeln!(text, "vacuous: true").unwrap();
            }
            Ok(Output {
                text,
                json: json!({ "extensions": ext, "skeptical": acc }),
            })
        }
        Command::ReviseAf {
            af,
            goal,
            constraint,
            revision,
        } => {
            let af = parse_af(&read(af)?)?;
            let goal = parse_goal(goal, af.arguments())?;
            let constraint = match constraint {
                Some(c) => parse_goal(c, af.arguments())?,
                None => GoalFormula::top(af.arguments()),
            };
            outcome(revise_af(
                &af,
                &goal,
                &constraint,
                revision.mode,
                !revision.allow_empty_semantics,
            )?)
        }
        Command::Eaf(EafCommand::Classify { eaf }) => {
            let eaf = parse_eaf(&read(eaf)?)?;
            let c = classify_attacks(&eaf)?;
            Ok(Output {
                text: c.to_string(),
                json: serde_json::to_value(&c).expect("classification serializes"),
            })
        }
        Command::Eaf(EafCommand::Revise {
            eaf,
            goal,
            constraint_mode,
            revision,
        }) => {
            let eaf = parse_eaf(&read(eaf)?)?;
            let goal = parse_eaf_goal(&eaf, goal)?;
            outcome(revise_eaf(
                &eaf,
                &goal,
                *constraint_mode,
                revision.mode,
                !revision.allow_empty_semantics,
            )?)
        }
        Command::Eaf(EafCommand::Acceptable {
            eaf,
            goal,
            beliefs,
            claims,
            constraint_mode,
            max_added,
            revision,
        }) => {
            let eaf = parse_eaf(&read(eaf)?)?;
            let base = parse_formula_lines(&read(beliefs)?)?;
            let pool = parse_formula_lines(&read(claims)?)?;
            let goal = parse_eaf_goal(&eaf, goal)?;
            let out = revise_eaf(
                &eaf,
                &goal,
                *constraint_mode,
                revision.mode,
                !revision.allow_empty_semantics,
            )?;
            if out.is_empty() {
                return Err(Failure::Empty("no revised AF satisfies the goal and the constraint".into()));
            }
            let report = acceptable_afs(&eaf, &out, &base, &pool, *max_added)?;
            let mut text = String::new();
            for (i, r) in report.iter().enumerate() {
                if i > 0 {
                    writeln!(text).unwrap();
                }
                write!(text, "{r}").unwrap();
            }
            if !report.iter().any(|r| r.acceptable) {
                eprint!("{text}");
                return Err(Failure::Empty("no revised AF is acceptable".into()));
            }
            Ok(Output {
                text,
                json: serde_json::to_value(&report).expect("report serializes"),
            })
        }
        Command::Args(ArgsCommand::Generate { beliefs, claims }) => {
            let base = parse_formula_lines(&read(beliefs)?)?;
            let pool = parse_formula_lines(&read(claims)?)?;
            let g = exhaustive_graph(&base, &pool)?;
            let mut text = String::new();
            for a in &g.arguments {
                writeln!(text, "{}: {}", a.id, a).unwrap();
            }
            write!(text, "{}", g.af).unwrap();
            Ok(Output {
                text,
                json: serde_json::to_value(&g).expect("graph serializes"),
            })
        }
        Command::Args(ArgsCommand::Encode { args, certainty, tau }) => {
            let eaf = parse_eaf(&read(args)?)?;
            let cert: CertaintyMap = parse_certainties(&read(certainty)?)?;
            let mut text = String::new();
            let mut out = Vec::new();
            for a in eaf.arguments() {
                let e = make_enthymeme(a, &cert, tau)?;
                writeln!(text, "{}: {}", e.id, e).unwrap();
                out.push(e);
            }
            Ok(Output {
                text,
                json: serde_json::to_value(&out).expect("arguments serialize"),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = if cli.emit_structured {
                serde_json::to_string_pretty(&out.json).expect("json") + "\n"
            } else {
                out.text
            };
            // a closed pipe downstream is not a failure of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Empty(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Resource { .. } => 4,
                _ => 2,
            })
        }
    }
}
