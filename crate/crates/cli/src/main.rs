use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use periodic_colouring::report::{self, Witness};
use periodic_colouring::survey::{self, CorpusSpec, RandomCorpus};
use periodic_colouring::{dot, oracles, oriented, periodic, Error, Execution, FamilySpec, Graph};

#[derive(Parser)]
#[command(
    name = "pcol",
    version,
    about = "Periodic colouring numbers of simple connected graphs"
)]
struct Cli {
    /// Evaluate sequentially even when parallel support is compiled in.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Report chi_o, the chi_t table, classical numbers and predicate flags.
    Analyze {
        /// Edge-list file or family shorthand such as `cycle:6`.
        input: String,
        /// Inclusive range of periods, `A..B` or a single value.
        #[arg(long = "t")]
        t_range: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the edge list of a family member.
    Generate {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a circular k-partition or a finest t-periodic colouring.
    Colour {
        input: String,
        #[arg(
            long,
            conflicts_with = "periodic",
            required_unless_present = "periodic"
        )]
        circular: Option<usize>,
        #[arg(long)]
        periodic: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force chi_o and chi_t on small graphs.
    Oracle {
        input: String,
        /// Periods to evaluate; defaults to `1..n`.
        #[arg(long = "t")]
        t_range: Option<String>,
    },
    /// Check a witness file against a graph.
    Verify { input: String, witness: PathBuf },
    /// Evaluate every predicate over a corpus.
    Survey {
        /// Family shorthand; ranges like `cycle:3..12` expand. Repeatable.
        #[arg(long = "family")]
        families: Vec<String>,
        /// Number of random connected graphs.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 24)]
        max_m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for counterexample edge lists.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A negative result that has already been reported; exits with 1.
#[derive(Debug)]
struct Failed;

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("failed")
    }
}

impl std::error::Error for Failed {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<Failed>() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => 3,
        Some(Error::Mismatch(_)) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match run(cli.command, exec) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if !err.is::<Failed>() {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(exit_code(&err))
        }
    }
}

fn load(input: &str) -> anyhow::Result<Graph> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return Ok(Graph::parse_edge_list(&text)?);
    }
    match FamilySpec::parse(input) {
        Ok(spec) => Ok(spec.generate()?.0),
        Err(e) => bail!("{input} is neither a readable file nor a family shorthand: {e}"),
    }
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command, exec: Execution) -> anyhow::Result<()> {
    match command {
        Command::Analyze {
            input,
            t_range,
            format,
        } => {
            let g = load(&input)?;
            let range = match t_range {
                Some(text) => report::parse_t_range(&text)?,
                None => 1..=g.n(),
            };
            let r = report::analyze(&g, &input, range)?;
            let text = match format {
                Format::Text => r.render_text(),
                Format::Json => serde_json::to_string_pretty(&r)? + "\n",
                Format::Dot => dot::graph(&g),
            };
            emit(&text, None)
        }
        Command::Generate { spec, out } => {
            let (g, _) = FamilySpec::parse(&spec)?.generate()?;
            emit(&g.to_edge_list(), out.as_deref())
        }
        Command::Colour {
            input,
            circular,
            periodic: period,
            format,
            out,
        } => {
            let g = load(&input)?;
            let text = if let Some(k) = circular {
                let Some(p) = oriented::is_circularly_k_partite(&g, k)? else {
                    let why = oriented::infeasibility_reason(&g, k).unwrap_or_default();
                    eprintln!("error: {input} is not circularly {k}-partite: {why}");
                    return Err(Failed.into());
                };
                match format {
                    Format::Dot => dot::circular_partition(&g, &p),
                    _ => serde_json::to_string(&p.to_record(&g))? + "\n",
                }
            } else {
                let t = period.unwrap_or_else(|| unreachable!("clap requires a mode"));
                let c = periodic::build_t_periodic_colouring(&g, t)?;
                match format {
                    Format::Dot => dot::vertex_colouring(&g, &c),
                    _ => serde_json::to_string(&c)? + "\n",
                }
            };
            emit(&text, out.as_deref())
        }
        Command::Oracle { input, t_range } => {
            let g = load(&input)?;
            let range = match t_range {
                Some(text) => report::parse_t_range(&text)?,
                None => 1..=g.n(),
            };
            println!("chi_o = {}", oracles::oracle_chi_o(&g)?);
            for t in range {
                println!("t = {t:<3} chi_t = {}", oracles::oracle_chi_t(&g, t)?);
            }
            Ok(())
        }
        Command::Verify { input, witness } => {
            let g = load(&input)?;
            let text = fs::read_to_string(&witness)
                .with_context(|| format!("reading {}", witness.display()))?;
            let w = Witness::from_json(&text)?;
            let violations = report::verify_witness(&g, &w)?;
            if violations.is_empty() {
                println!("ok");
                return Ok(());
            }
            for v in &violations {
                println!("violation: {v}");
            }
            println!("{} violations", violations.len());
            Err(Failed.into())
        }
        Command::Survey {
            families,
            random,
            min_n,
            max_n,
            max_m,
            seed,
            out,
            format,
        } => {
            let mut corpus = CorpusSpec::default();
            for f in &families {
                corpus.families.extend(FamilySpec::parse_many(f)?);
            }
            if random > 0 {
                corpus.random = Some(RandomCorpus {
                    count: random,
                    min_n,
                    max_n,
                    max_m: Some(max_m),
                    seed,
                });
            }
            if corpus.entries().is_empty() {
                bail!("empty corpus: give --family or --random");
            }
            let r = survey::survey(&corpus, exec)?;
            if let Some(dir) = &out {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for c in &r.counterexamples {
                    let path = dir.join(format!("{}-{}.edges", c.predicate.name(), c.index));
                    let body = format!("# {}: {}\n{}", c.label, c.detail, c.edge_list);
                    fs::write(&path, body)
                        .with_context(|| format!("writing {}", path.display()))?;
                }
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&r)? + "\n",
                _ => r.render_text(),
            };
            print!("{text}");
            if r.passed() {
                Ok(())
            } else {
                Err(Failed.into())
            }
        }
    }
}
