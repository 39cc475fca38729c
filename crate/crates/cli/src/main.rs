use std::collections::BTreeSet;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use elp_core::attacks::export_dot;
use elp_core::dialectic::{export_tree, prove_conclusion};
use elp_core::generator::{gen_program, GeneratorConfig};
use elp_core::suite::{run_suite, Suite};
use elp_core::wfsx::wfm_p;
use elp_core::{
    parse_program, ArgumentSet, AttackKind, Framework, JustificationConfig, ObjectiveLiteral,
    Program,
};

#[derive(Parser)]
#[command(
    name = "elp",
    version,
    about = "Argumentation semantics for extended logic programs"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for `gen` and `check`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a program and print it in canonical form.
    Parse { file: PathBuf },
    /// List the minimal arguments, numbered.
    Args { file: PathBuf },
    /// List attacking pairs of minimal arguments.
    Attacks {
        file: PathBuf,
        /// Restrict to these kinds (repeatable); all six by default.
        #[arg(long = "kind", value_parser = parse_kind)]
        kinds: Vec<AttackKind>,
        /// Write the attack graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Justified, overruled and defensible arguments under x/y.
    Justify {
        file: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// The paraconsistent well-founded model.
    Wfm {
        file: PathBuf,
        /// Print the iteration stages.
        #[arg(long)]
        stages: bool,
    },
    /// Search for a winning dialogue for a literal. Exit 0 if found, 1 if not.
    Prove {
        file: PathBuf,
        literal: String,
        #[command(flatten)]
        config: ConfigArgs,
        /// Write the winning tree in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print a random program.
    Gen {
        #[command(flatten)]
        generator: GeneratorArgs,
    },
    /// Run a property suite over fixtures and generated programs.
    Check {
        /// hierarchy, wfsx, dialectic, minimality, gamma-args or all
        suite: String,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[command(flatten)]
        generator: GeneratorArgs,
    },
}

#[derive(Args)]
struct ConfigArgs {
    #[arg(long, value_parser = parse_kind)]
    attack: AttackKind,
    #[arg(long, value_parser = parse_kind)]
    defence: AttackKind,
}

impl ConfigArgs {
    fn config(&self) -> JustificationConfig {
        JustificationConfig::new(self.attack, self.defence)
    }
}

#[derive(Args)]
struct GeneratorArgs {
    #[arg(long, default_value_t = 6)]
    atoms: usize,
    #[arg(long, default_value_t = 12)]
    rules: usize,
    #[arg(long, default_value_t = 2)]
    max_body: usize,
    #[arg(long, default_value_t = 0.3)]
    explicit_neg_prob: f64,
    #[arg(long, default_value_t = 0.6)]
    default_neg_prob: f64,
}

impl GeneratorArgs {
    fn config(&self, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            seed,
            atoms: self.atoms,
            rules: self.rules,
            max_body: self.max_body,
            explicit_neg_prob: self.explicit_neg_prob,
            default_neg_prob: self.default_neg_prob,
        }
    }
}

fn parse_kind(s: &str) -> Result<AttackKind, String> {
    s.parse().map_err(|e: elp_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Program> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_program(&text).with_context(|| format!("parsing {}", path.display()))
}

fn joined<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn literals_line(label: &str, set: &BTreeSet<ObjectiveLiteral>) -> String {
    if set.is_empty() {
        format!("{label}:")
    } else {
        format!("{label}: {}", joined(set))
    }
}

fn rendered(framework: &Framework, set: &ArgumentSet) -> Vec<String> {
    set.iter()
        .map(|&i| framework.arguments()[i].to_string())
        .collect()
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Parse { file } => {
            let program = load(file)?;
            if cli.json {
                print_json(&json!({ "rules": program.rules() }))?;
            } else {
                print!("{program}");
            }
        }
        Command::Args { file } => {
            let framework = Framework::new(&load(file)?);
            if cli.json {
                print_json(&framework.arguments())?;
            } else {
                for (i, a) in framework.arguments().iter().enumerate() {
                    println!("{i}: {a}");
                }
            }
        }
        Command::Attacks { file, kinds, dot } => {
            let framework = Framework::new(&load(file)?);
            let kinds: Vec<AttackKind> = if kinds.is_empty() {
                AttackKind::ALL.to_vec()
            } else {
                let unique: BTreeSet<_> = kinds.iter().copied().collect();
                unique.into_iter().collect()
            };
            let mut pairs: Vec<(usize, usize, AttackKind)> = kinds
                .iter()
                .flat_map(|&k| {
                    let rel = framework.relation(k);
                    rel.pairs()
                        .iter()
                        .map(|&(i, j)| (i, j, k))
                        .collect::<Vec<_>>()
                })
                .collect();
            pairs.sort();
            if cli.json {
                let items: Vec<Value> = pairs
                    .iter()
                    .map(|(i, j, k)| json!({ "attacker": i, "target": j, "kind": k }))
                    .collect();
                print_json(&items)?;
            } else {
                for (i, j, k) in &pairs {
                    println!("{i} -> {j}  [{k}]");
                }
            }
            if let Some(path) = dot {
                fs::write(path, export_dot(&framework, &kinds))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
        Command::Justify { file, config } => {
            let framework = Framework::new(&load(file)?);
            let cfg = config.config();
            let labelling = framework.labelling(cfg);
            let consequences = framework.consequences_of(&labelling);
            let justified = rendered(&framework, &labelling.justified);
            let overruled = rendered(&framework, &labelling.overruled);
            let defensible = rendered(&framework, &labelling.defensible);
            if cli.json {
                print_json(&json!({
                    "config": cfg.to_string(),
                    "justified": justified,
                    "overruled": overruled,
                    "defensible": defensible,
                    "T": consequences.t,
                    "notF": consequences.f,
                }))?;
            } else {
                for (title, items) in [
                    ("JUSTIFIED", &justified),
                    ("OVERRULED", &overruled),
                    ("DEFENSIBLE", &defensible),
                ] {
                    println!("{title}:");
                    for item in items {
                        println!("  {item}");
                    }
                }
                println!("{}", literals_line("T", &consequences.t));
                println!("{}", literals_line("notF", &consequences.f));
            }
        }
        Command::Wfm { file, stages } => {
            let result = wfm_p(&load(file)?);
            if cli.json {
                print_json(&result)?;
            } else {
                if *stages {
                    for (i, stage) in result.stages.iter().enumerate() {
                        println!("{}", literals_line(&format!("I{i}"), stage));
                    }
                }
                println!("{}", literals_line("T", &result.wfm_p.t));
                println!("{}", literals_line("notF", &result.wfm_p.f));
                println!("contradictory: {}", result.contradictory);
            }
        }
        Command::Prove {
            file,
            literal,
            config,
            dot,
        } => {
            let framework = Framework::new(&load(file)?);
            let literal: ObjectiveLiteral = literal
                .parse()
                .map_err(|e| anyhow::anyhow!("invalid literal `{literal}`: {e}"))?;
            let cfg = config.config();
            let tree = prove_conclusion(&framework, &literal, cfg);
            if cli.json {
                print_json(&json!({
                    "literal": literal,
                    "config": cfg.to_string(),
                    "provable": tree.is_some(),
                    "tree": tree,
                }))?;
            } else {
                match &tree {
                    Some(t) => println!("provable: {} ({} moves)", t.root.argument, t.node_count()),
                    None => println!("not provable"),
                }
            }
            match (tree, dot) {
                (Some(t), Some(path)) => fs::write(path, export_tree(&t))
                    .with_context(|| format!("writing {}", path.display()))?,
                (None, _) => return Ok(ExitCode::from(1)),
                _ => {}
            }
        }
        Command::Gen { generator } => {
            let program = gen_program(&generator.config(cli.seed))?;
            if cli.json {
                print_json(&json!({ "rules": program.rules() }))?;
            } else {
                print!("{program}");
            }
        }
        Command::Check {
            suite,
            cases,
            generator,
        } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite, *cases, &generator.config(cli.seed))?;
            if cli.json {
                print_json(&report)?;
            } else {
                print!("{report}");
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
