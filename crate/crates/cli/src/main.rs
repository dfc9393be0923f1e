//! `pnc`: type-check arrow terms, draw their graphs and decide equalities.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use pnet::brauer::{block_string, BrauerError};
use pnet::decide::{commutes, DecideError, Diagram, Reason, Verdict};
use pnet::rewrite::{develop_with, factors, DevelopOptions, SchemaKind};
use pnet::semantics::SemanticsError;
use pnet::session::{Session, SessionError};
use pnet::syntax::{parse_formula, ParseError};
use pnet::translate::{f_arrow, iso_i, iso_i_inv};
use pnet::{axiom_catalog, equal_in, g_arrow, theorem_catalog, SplitEquivalence, Term, Theory};

#[derive(Parser)]
#[command(name = "pnc", version, about = "Decide equality of proof-net arrow terms by comparing their graphs")]
struct Cli {
    /// ds, mds, pn, mpn, pn-neg or mpn-neg.
    #[arg(long, global = true, default_value = "pn-neg")]
    theory: Theory,
    /// Print JSON instead of text.
    #[arg(long, global = true, conflicts_with = "dot")]
    json: bool,
    /// Print Graphviz for commands that produce a graph.
    #[arg(long, global = true)]
    dot: bool,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Load definitions from a .pnc file before running the command.
    #[arg(long = "defs", global = true, value_name = "FILE")]
    defs: Vec<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Type-check and theory-check every definition in the files.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// The graph of a term.
    Graph { term: String },
    /// Decide whether two terms are equal. Exits 0 if equal, 1 if not.
    Eq { first: String, second: String },
    /// Develop a term into headed factors, last-applied factor first.
    Normalize {
        term: String,
        /// Keep derived generators as heads instead of expanding them.
        #[arg(long)]
        keep_derived: bool,
    },
    /// Push negations onto letters.
    Translate {
        term: String,
        #[arg(long, value_enum, default_value = "pn")]
        to: Target,
    },
    /// The isomorphism from a formula to its negation normal form.
    Iso {
        formula: String,
        /// Print the inverse isomorphism instead.
        #[arg(long)]
        inverse: bool,
    },
    /// List the axioms of the theory.
    Axioms {
        /// List the derived equations instead.
        #[arg(long)]
        theorems: bool,
    },
    /// Compose two split equivalences given as JSON files; R is applied first.
    Compose { r: PathBuf, p: PathBuf },
    /// Decide whether two paths of named arrows agree. A path lists
    /// definition names separated by `.`, last-applied first.
    Commutes { first: String, second: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Pn,
    Mpn,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Session(#[from] SessionError),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Decide(#[from] DecideError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Json { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error("{0}")]
    Usage(String),
}

enum Mode {
    Text,
    Json,
    Dot,
}

struct Ctx {
    session: Session,
    mode: Mode,
}

impl Ctx {
    /// Parses a term and checks it against the session theory.
    fn term(&self, src: &str) -> Result<Term, CliError> {
        let t = self.session.parse_term(src)?;
        g_arrow(&t, self.session.theory)?;
        Ok(t)
    }

    fn no_dot(&self, what: &str) -> Result<(), CliError> {
        match self.mode {
            Mode::Dot => Err(CliError::Usage(format!("--dot is not available for {}", what))),
            _ => Ok(()),
        }
    }

    fn graph_output(&self, g: &SplitEquivalence, name: &str) -> String {
        match self.mode {
            Mode::Text => format!("{}\n", g),
            Mode::Json => format!("{}\n", serde_json::to_string(g).expect("graphs serialize")),
            Mode::Dot => g.to_dot(name),
        }
    }

    fn verdict_output(&self, v: &Verdict, f: &Term, g: &Term) -> String {
        match self.mode {
            Mode::Json => format!("{}\n", serde_json::to_string(v).expect("verdicts serialize")),
            _ => match v.reason {
                Reason::Equal => "equal\n".to_string(),
                Reason::TypeMismatch => format!(
                    "not equal: the types differ ({} versus {})\n",
                    f.type_of().expect("checked"),
                    g.type_of().expect("checked")
                ),
                Reason::GraphMismatch => format!(
                    "not equal: the graphs differ at {}\n",
                    v.witness.as_deref().map(block_string).unwrap_or_default()
                ),
            },
        }
    }
}

fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("values serialize"))
}

fn read_graph(path: &Path) -> Result<SplitEquivalence, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

fn term_json(t: &Term) -> Value {
    let ty = t.type_of().expect("checked");
    json!({ "term": t.to_string(), "source": ty.source.to_string(), "target": ty.target.to_string() })
}

/// Output text and exit code for a command.
fn run(cli: Cli) -> Result<(String, ExitCode), CliError> {
    let mode = match (cli.json, cli.dot) {
        (true, _) => Mode::Json,
        (_, true) => Mode::Dot,
        _ => Mode::Text,
    };
    let mut session = Session::new(cli.theory);
    for path in &cli.defs {
        session.load_file(path)?;
    }
    let mut ctx = Ctx { session, mode };
    let ok = ExitCode::SUCCESS;
    match cli.command {
        Command::Check { files } => {
            ctx.no_dot("check")?;
            for path in &files {
                ctx.session.load_file(path)?;
            }
            let types = ctx.session.check()?;
            let out = match ctx.mode {
                Mode::Json => json_line(&Value::Array(
                    types
                        .iter()
                        .map(|(name, ty)| {
                            json!({ "name": name, "source": ty.source.to_string(), "target": ty.target.to_string() })
                        })
                        .collect(),
                )),
                _ => types.iter().map(|(name, ty)| format!("{} : {}\n", name, ty)).collect(),
            };
            Ok((out, ok))
        }
        Command::Graph { term } => {
            let t = ctx.term(&term)?;
            let g = g_arrow(&t, ctx.session.theory)?;
            Ok((ctx.graph_output(&g, &t.to_string()), ok))
        }
        Command::Eq { first, second } => {
            ctx.no_dot("eq")?;
            let f = ctx.session.parse_term(&first)?;
            let g = ctx.session.parse_term(&second)?;
            let v = equal_in(&f, &g, ctx.session.theory)?;
            let code = if v.equal { ok } else { ExitCode::from(1) };
            Ok((ctx.verdict_output(&v, &f, &g), code))
        }
        Command::Normalize { term, keep_derived } => {
            ctx.no_dot("normalize")?;
            let t = ctx.term(&term)?;
            let d = develop_with(&t, DevelopOptions { keep_derived }).map_err(SemanticsError::from)?;
            let stack: Vec<String> = factors(&d).iter().map(|f| f.to_string()).collect();
            let out = match ctx.mode {
                Mode::Json => json_line(&json!({ "factors": stack })),
                _ => stack.iter().map(|f| format!("{}\n", f)).collect(),
            };
            Ok((out, ok))
        }
        Command::Translate { term, to } => {
            ctx.no_dot("translate")?;
            let t = ctx.term(&term)?;
            let ft = f_arrow(&t).map_err(SemanticsError::from)?;
            let target = match to {
                Target::Pn => Theory::Pn,
                Target::Mpn => Theory::Mpn,
            };
            if let Some(v) = ft.theory_violation(target) {
                return Err(CliError::Usage(format!("the translation is not a term of {}: {}", target, v)));
            }
            let out = match ctx.mode {
                Mode::Json => json_line(&term_json(&ft)),
                _ => format!("{}\n", ft),
            };
            Ok((out, ok))
        }
        Command::Iso { formula, inverse } => {
            ctx.no_dot("iso")?;
            let a = parse_formula(&formula)?;
            let i = if inverse { iso_i_inv(&a) } else { iso_i(&a) };
            let out = match ctx.mode {
                Mode::Json => json_line(&term_json(&i)),
                _ => format!("{}\n", i),
            };
            Ok((out, ok))
        }
        Command::Axioms { theorems } => {
            ctx.no_dot("axioms")?;
            let th = ctx.session.theory;
            let list = if theorems { theorem_catalog(th) } else { axiom_catalog(th) };
            let out = match ctx.mode {
                Mode::Json => json_line(&Value::Array(
                    list.iter()
                        .map(|s| {
                            json!({
                                "name": s.label(),
                                "kind": match s.kind { SchemaKind::Axiom => "axiom", SchemaKind::Theorem => "theorem" },
                                "equation": s.to_string(),
                                "pretty": s.pretty(),
                            })
                        })
                        .collect(),
                )),
                _ => {
                    let width = list.iter().map(|s| s.label().chars().count()).max().unwrap_or(0);
                    list.iter()
                        .map(|s| {
                            let label = s.label();
                            let pad = width - label.chars().count();
                            format!("{}{}  {}\n", label, " ".repeat(pad), s.pretty())
                        })
                        .collect()
                }
            };
            Ok((out, ok))
        }
        Command::Compose { r, p } => {
            let (r, p) = (read_graph(&r)?, read_graph(&p)?);
            let pr = pnet::compose(&p, &r)?;
            Ok((ctx.graph_output(&pr, "P*R"), ok))
        }
        Command::Commutes { first, second } => {
            ctx.no_dot("commutes")?;
            let path = |s: &str| -> Vec<String> { s.split('.').map(|n| n.trim().to_string()).collect() };
            let arrows = ctx.session.definitions.iter().map(|d| (d.name.clone(), d.term.clone())).collect();
            let diagram = Diagram { arrows, paths: [path(&first), path(&second)] };
            let v = commutes(&diagram, ctx.session.theory)?;
            let term = |k: usize| -> Term {
                Term::chain(diagram.paths[k].iter().map(|n| ctx.session.get(n).expect("resolved").clone()).collect())
            };
            let code = if v.equal { ok } else { ExitCode::from(1) };
            Ok((ctx.verdict_output(&v, &term(0), &term(1)), code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match run(cli) {
        Ok((text, code)) => {
            let written = match &out_path {
                Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.clone(), source }),
                None => std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    eprintln!("error: {}", e);
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
