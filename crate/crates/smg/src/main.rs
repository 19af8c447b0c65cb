//! `smg`: commuting graphs of finite semigroups from Cayley-table files.
//!
//! Exit codes: 0 on success, 1 when a check run finds failures, 2 on
//! input or validation errors. All diagnostics go to stderr; stdout
//! carries only the requested output. `-` names stdout as an output path.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use smg::verify::{check_construction, run_corpus_suite, CheckConfig, SuiteConfig};
use smg_core::commuting::{
    commuting_graph, extended_commuting_graph, knit_degree, star_knit_degree,
};
use smg_core::constructions::{ConstructionKind, ConstructionSpec};
use smg_core::enumerate::{dedup_canonical, enumerate_semigroups, EnumerationMode};
use smg_core::graph::SimpleGraph;
use smg_core::invariants::{invariant_report, InvariantCaps};
use smg_core::semigroup::{generate, parse_semigroup, serialize_semigroup, Family, Semigroup};

#[derive(Parser)]
#[command(name = "smg", version, about = "Commuting graphs of finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Vertex cap for exact clique computation.
    #[arg(long, global = true, default_value_t = smg_core::invariants::DEFAULT_CLIQUE_CAP)]
    clique_cap: usize,

    /// Vertex cap for exact chromatic-number computation.
    #[arg(long, global = true, default_value_t = smg_core::invariants::DEFAULT_CHROMATIC_CAP)]
    chi_cap: usize,

    /// Order cap for constructed direct products.
    #[arg(long, global = true, default_value_t = smg_core::DEFAULT_PRODUCT_CAP)]
    product_cap: usize,

    /// Seed for all sampling; falls back to SMG_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a table file and report its basic data.
    Validate { file: PathBuf },

    /// Generate a built-in semigroup family.
    Gen {
        /// full_transformation | cyclic_group | left_zero | right_zero | null_with_zero
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        /// Output file, or - for stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
    },

    /// Emit the commuting graph (or extended commuting graph) of a
    /// semigroup as DOT or JSON.
    #[command(group(ArgGroup::new("format").args(["dot", "json"])))]
    Graph {
        file: PathBuf,
        /// Use the extended commuting graph (all elements as vertices).
        #[arg(long)]
        extended: bool,
        /// Write DOT to this path (- for stdout).
        #[arg(long)]
        dot: Option<String>,
        /// Write the JSON form to stdout instead.
        #[arg(long)]
        json: bool,
    },

    /// Exact invariants of the (extended) commuting graph, as JSON.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        extended: bool,
    },

    /// Knit degree (or *-knit degree) via shortest-left-path search.
    Knit {
        file: PathBuf,
        /// Search the extended commuting graph instead.
        #[arg(long)]
        star: bool,
    },

    /// Build a zero-union or direct product and write its table.
    #[command(group(ArgGroup::new("kind").required(true).args(["zero_union", "product"])))]
    Construct {
        #[arg(long = "zero-union")]
        zero_union: bool,
        #[arg(long)]
        product: bool,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long, default_value = "-")]
        output: String,
    },

    /// Audit a construction: closed-form predictions against direct
    /// computation, as a JSON report. Exits 1 on any failed verdict.
    #[command(group(ArgGroup::new("kind").required(true).args(["zero_union", "product"])))]
    Check {
        #[arg(long = "zero-union")]
        zero_union: bool,
        #[arg(long)]
        product: bool,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },

    /// Enumerate semigroups of one order; optionally audit constructions
    /// over the enumerated corpus.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Sample this many instead of exhaustive enumeration.
        #[arg(long)]
        sample: Option<usize>,
        /// Also reduce to isomorphism-class representatives.
        #[arg(long)]
        canonical: bool,
        /// Run construction checks over the corpus:
        /// zero-union | product | both.
        #[arg(long)]
        check: Option<String>,
        /// Cap on the number of checked pairs (0 = all).
        #[arg(long, default_value_t = 100)]
        pair_cap: usize,
        /// Number of checked triples.
        #[arg(long, default_value_t = 20)]
        triples: usize,
        /// Print each table instead of just the count.
        #[arg(long)]
        emit: bool,
    },
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        Self(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &PathBuf) -> Result<Semigroup, CliError> {
    let text =
        fs::read_to_string(file).map_err(|e| CliError(format!("{}: {e}", file.display())))?;
    parse_semigroup(&text).map_err(|e| CliError(format!("{}: {e}", file.display())))
}

fn write_output(path: &str, content: &str) -> Result<(), CliError> {
    if path == "-" {
        std::io::stdout().write_all(content.as_bytes())?;
    } else {
        fs::write(path, content).map_err(|e| CliError(format!("{path}: {e}")))?;
    }
    Ok(())
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn graph_of(s: &Semigroup, extended: bool) -> Result<SimpleGraph, CliError> {
    if extended {
        Ok(extended_commuting_graph(s))
    } else {
        Ok(commuting_graph(s)?)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let caps = InvariantCaps {
        clique: cli.clique_cap,
        chromatic: cli.chi_cap,
    };
    let check_cfg = CheckConfig {
        caps,
        product_cap: cli.product_cap,
        ..CheckConfig::default()
    };
    let seed = cli
        .seed
        .or_else(|| std::env::var("SMG_SEED").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(0);

    match cli.command {
        Command::Validate { file } => {
            let s = load(&file)?;
            #[derive(serde::Serialize)]
            struct Summary {
                order: usize,
                center_size: usize,
                commutative: bool,
            }
            print_json(&Summary {
                order: s.order(),
                center_size: s.center().len(),
                commutative: s.is_commutative(),
            })?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Gen {
            family,
            order,
            output,
        } => {
            let family = Family::from_name(&family).ok_or_else(|| {
                CliError(format!(
                    "unknown family {family:?}; one of full_transformation, cyclic_group, \
                     left_zero, right_zero, null_with_zero"
                ))
            })?;
            let s = generate(family, order)?;
            write_output(&output, &(serialize_semigroup(&s) + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Graph {
            file,
            extended,
            dot,
            json,
        } => {
            let s = load(&file)?;
            let g = graph_of(&s, extended)?;
            if json {
                print_json(&g)?;
            } else {
                let name = if extended {
                    "extended_commuting"
                } else {
                    "commuting"
                };
                write_output(dot.as_deref().unwrap_or("-"), &g.to_dot(name))?;
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Invariants { file, extended } => {
            let s = load(&file)?;
            let g = graph_of(&s, extended)?;
            print_json(&invariant_report(&g, &caps)?)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Knit { file, star } => {
            let s = load(&file)?;
            let result = if star {
                star_knit_degree(&s)
            } else {
                knit_degree(&s)?
            };
            print_json(&result)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Construct {
            zero_union,
            product: _,
            files,
            output,
        } => {
            let spec = ConstructionSpec {
                kind: if zero_union {
                    ConstructionKind::ZeroUnion
                } else {
                    ConstructionKind::DirectProduct
                },
                components: files.iter().map(load).collect::<Result<_, _>>()?,
            };
            let built = spec.build(cli.product_cap)?;
            write_output(&output, &(serialize_semigroup(&built) + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Check {
            zero_union,
            product: _,
            files,
        } => {
            let spec = ConstructionSpec {
                kind: if zero_union {
                    ConstructionKind::ZeroUnion
                } else {
                    ConstructionKind::DirectProduct
                },
                components: files.iter().map(load).collect::<Result<_, _>>()?,
            };
            let ids: Vec<String> = files.iter().map(|f| f.display().to_string()).collect();
            let report = check_construction(&spec, &ids, &check_cfg)?;
            print_json(&report)?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Enumerate {
            order,
            sample,
            canonical,
            check,
            pair_cap,
            triples,
            emit,
        } => {
            if let Some(which) = check {
                let kinds = match which.as_str() {
                    "zero-union" => vec![ConstructionKind::ZeroUnion],
                    "product" => vec![ConstructionKind::DirectProduct],
                    "both" => {
                        vec![ConstructionKind::ZeroUnion, ConstructionKind::DirectProduct]
                    }
                    other => {
                        return Err(CliError(format!(
                            "--check takes zero-union, product or both, got {other:?}"
                        )))
                    }
                };
                let suite = SuiteConfig {
                    orders: vec![order],
                    pair_cap: if pair_cap == 0 { None } else { Some(pair_cap) },
                    triple_count: triples,
                    seed,
                    sampled_count: sample.unwrap_or(10),
                    kinds,
                    check: check_cfg,
                };
                let report = run_corpus_suite(&suite)?;
                let clean = report.failed.is_empty();
                print_json(&report)?;
                return Ok(if clean {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                });
            }

            let mode = match sample {
                Some(count) => EnumerationMode::Sampled { seed, count },
                None => EnumerationMode::Exhaustive,
            };
            let mut all = enumerate_semigroups(order, mode)?;
            if canonical {
                all = dedup_canonical(all);
            }
            if emit {
                for s in &all {
                    println!("{}\n", serialize_semigroup(s));
                }
            }
            #[derive(serde::Serialize)]
            struct Count {
                order: usize,
                count: usize,
                canonical: bool,
            }
            print_json(&Count {
                order,
                count: all.len(),
                canonical,
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
