use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use omstrata::certificate::{certificate, CertificateError, DEFAULT_DEPTH, DEFAULT_SAMPLES};
use omstrata::construction::{build, default_seed, validate_seed, ConstructionError, Seed};
use omstrata::grassmann::{mu_m_of, mu_of};
use omstrata::oriented_matroid::{om_equal, strong_map, weak_map, OrientedMatroid};
use omstrata::report;
use omstrata::svg::emit_figure;

#[derive(Parser)]
#[command(
    name = "omstrata",
    version,
    about = "Exact oriented-matroid strata certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Seed configuration checks
    #[command(subcommand)]
    Seed(SeedCommand),
    /// Build the configuration family A_N and write it as JSON
    Build {
        #[arg(long)]
        depth: u32,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Oriented matroids of arrangements
    #[command(subcommand)]
    Om(OmCommand),
    /// Oriented matroid μ(V) of a subspace, or μ_M(V) with --family
    Mu {
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Run every certificate check and write report.json
    Certificate {
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_SAMPLES)]
        samples: Vec<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg_dir: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
    },
}

#[derive(Subcommand)]
enum SeedCommand {
    /// Check the seed invariants (the shipped seed when --file is absent)
    Validate {
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OmCommand {
    /// Print the canonical OM JSON of an arrangement
    Of {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Whether two arrangements or OM documents give the same OM
    Equal { a: PathBuf, b: PathBuf },
    /// Whether there is a strong map A → B
    StrongMap { a: PathBuf, b: PathBuf },
    /// Whether there is a weak map A ⇝ B
    WeakMap { a: PathBuf, b: PathBuf },
}

#[derive(Args)]
struct SeedArg {
    /// Seed document; the shipped seed when absent
    #[arg(long = "seed")]
    seed_file: Option<PathBuf>,
}

enum Failure {
    Input(anyhow::Error),
    Rejected(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_json(path: &Path) -> anyhow::Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    report::parse_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn load_seed(path: Option<&Path>) -> anyhow::Result<Seed> {
    match path {
        None => Ok(default_seed()),
        Some(p) => report::parse_seed(&read_json(p)?)
            .with_context(|| format!("reading seed {}", p.display())),
    }
}

fn load_om(path: &Path) -> anyhow::Result<OrientedMatroid> {
    report::parse_om_or_arrangement(&read_json(path)?)
        .with_context(|| format!("in {}", path.display()))
}

const PERTURB_HINT: &str = "hint: perturb a and ν (keeping the seed invariants) and rerun";

fn rejected_construction(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::InvalidSeed(_) | ConstructionError::DegenerateStep { .. } => {
            Failure::Rejected(format!("seed rejected: {e}\n{PERTURB_HINT}"))
        }
        other => Failure::Input(anyhow!(other)),
    }
}

fn print_verdict(holds: bool) {
    println!("{holds}");
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Seed(SeedCommand::Validate { file }) => {
            let seed = load_seed(file.as_deref())?;
            match validate_seed(&seed) {
                Ok(()) => {
                    println!("seed ok");
                    Ok(())
                }
                Err(v) => Err(Failure::Rejected(format!(
                    "seed rejected: {v}\n{PERTURB_HINT}"
                ))),
            }
        }
        Command::Build { depth, out, seed } => {
            let seed = load_seed(seed.seed_file.as_deref())?;
            let family = build(&seed, depth).map_err(rejected_construction)?;
            let mut text = serde_json::to_string_pretty(&report::render_family(&family))
                .context("serializing family")?;
            text.push('\n');
            write_file(&out, &text)?;
            println!(
                "wrote A{depth} ({} points) to {}",
                family.points().len(),
                out.display()
            );
            Ok(())
        }
        Command::Om(cmd) => {
            match cmd {
                OmCommand::Of { input } => {
                    let om = load_om(&input)?;
                    println!("{}", om.canonical_json());
                    eprintln!("fingerprint {}", om.fingerprint());
                }
                OmCommand::Equal { a, b } => {
                    let holds =
                        om_equal(&load_om(&a)?, &load_om(&b)?).map_err(anyhow::Error::from)?;
                    print_verdict(holds);
                }
                OmCommand::StrongMap { a, b } => {
                    let holds =
                        strong_map(&load_om(&a)?, &load_om(&b)?).map_err(anyhow::Error::from)?;
                    print_verdict(holds);
                }
                OmCommand::WeakMap { a, b } => {
                    let holds =
                        weak_map(&load_om(&a)?, &load_om(&b)?).map_err(anyhow::Error::from)?;
                    print_verdict(holds);
                }
            }
            Ok(())
        }
        Command::Mu { subspace, family } => {
            let v = report::parse_subspace(&read_json(&subspace)?)
                .with_context(|| format!("in {}", subspace.display()))?;
            let om = match family {
                None => mu_of(&v),
                Some(path) => {
                    let f = report::parse_vector_family(&read_json(&path)?)
                        .with_context(|| format!("in {}", path.display()))?;
                    mu_m_of(&f, &v)
                }
            }
            .map_err(anyhow::Error::from)?;
            println!("{}", om.canonical_json());
            eprintln!("fingerprint {}", om.fingerprint());
            Ok(())
        }
        Command::Certificate {
            depth,
            samples,
            out,
            svg_dir,
            seed,
        } => {
            let seed = load_seed(seed.seed_file.as_deref())?;
            let result = match certificate(&seed, depth, &samples) {
                Ok(r) => r,
                Err(e @ CertificateError::SeedRejected(_)) => {
                    return Err(Failure::Rejected(format!("{e}\n{PERTURB_HINT}")));
                }
                Err(e) => return Err(Failure::Input(anyhow!(e))),
            };
            let doc = report::render_report(&result);
            write_file(&out, &doc.to_json())?;
            if let Some(dir) = svg_dir {
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                let family = build(&seed, depth).map_err(rejected_construction)?;
                for level in 0..=depth {
                    let svg = emit_figure(&family, level).map_err(rejected_construction)?;
                    write_file(&dir.join(format!("A{level}.svg")), &svg)?;
                }
            }
            for line in &doc.summary {
                println!("{line}");
            }
            println!("report fingerprint {}", doc.fingerprint());
            if result.pass {
                Ok(())
            } else {
                Err(Failure::Rejected(format!(
                    "certificate failed: {}\n{PERTURB_HINT}",
                    result.first_failure().unwrap_or("unknown")
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
