use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use girthguard::bounds::evaluate_all;
use girthguard::generators::{Cage, GeneratorSpec, GraphSource};
use girthguard::partition::{build_partition, PartitionOutcome};
use girthguard::solver::{gamma_brute, gamma_exact, BruteForceOptions};
use girthguard::verify::{run_corpus, search_sharp, CorpusInput, SolveMethod, VerifyConfig};
use girthguard::{emit_edge_list, girth, read_graph_file, Error, Graph};

#[derive(Parser)]
#[command(
    name = "girthguard",
    version,
    about = "Domination-number bounds for graphs without short cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the girth ("acyclic" for forests).
    Girth { file: PathBuf },
    /// Print the domination number and a minimum dominating set.
    Gamma {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Print the bound report as JSON.
    Bounds {
        file: PathBuf,
        /// Solve for the domination number exactly.
        #[arg(long, conflicts_with = "gamma")]
        gamma_exact: bool,
        /// Use this domination number.
        #[arg(long)]
        gamma: Option<usize>,
    },
    /// Partition the vertices around a minimum dominating set.
    Partition {
        file: PathBuf,
        /// Comma-separated dominating set; solved exactly when absent.
        #[arg(long)]
        dominating_set: Option<String>,
    },
    /// Generate a graph in edge-list format.
    Gen(GenArgs),
    /// Check every bound and partition invariant over a corpus.
    Verify(VerifyArgs),
    /// Search small graphs for instances where a bound is attained.
    Sharp {
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Brute,
    Bb,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Cycle,
    Path,
    Star,
    Cage,
    RandomGirth,
    Subdivide,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Interior vertices per subdivided edge.
    #[arg(long)]
    times: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    files: Vec<PathBuf>,
    /// Generator spec such as `random-girth:n=30,girth=7,seed=1`.
    #[arg(long = "spec")]
    specs: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    no_partition: bool,
    #[arg(long, value_parser = ["auto", "brute", "bb", "skip"])]
    method: Option<String>,
    /// Include wall times and a timestamp in the report.
    #[arg(long)]
    timings: bool,
}

enum Failure {
    Usage(String),
    Input(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Check(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Check(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        use girthguard::generators::GeneratorError;
        let msg = e.to_string();
        match e {
            Error::Io { .. } | Error::Parse { .. } => Failure::Input(msg),
            Error::Generator(GeneratorError::Spec { .. }) | Error::Config(_) => Failure::Usage(msg),
            _ => Failure::Check(msg),
        }
    }
}

macro_rules! from_via_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        }
    )*};
}

from_via_error!(
    girthguard::solver::SolverError,
    girthguard::partition::PartitionError,
    girthguard::generators::GeneratorError
);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Girth { file } => {
            println!("{}", girth(&read_graph_file(&file)?));
        }
        Command::Gamma { file, method } => {
            let g = read_graph_file(&file)?;
            let cert = match method {
                Method::Brute => gamma_brute(&g, &BruteForceOptions::default())?,
                Method::Bb => gamma_exact(&g),
                Method::Auto if g.n() <= VerifyConfig::default().brute_max_n => {
                    gamma_brute(&g, &BruteForceOptions::default())?
                }
                Method::Auto => gamma_exact(&g),
            };
            println!("{}", cert.size());
            println!("{}", join(cert.members(), " "));
        }
        Command::Bounds {
            file,
            gamma_exact: exact,
            gamma,
        } => {
            let g = read_graph_file(&file)?;
            let gamma = if exact {
                Some(gamma_exact(&g).size())
            } else {
                gamma
            };
            let report = evaluate_all(&g, gamma);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
        }
        Command::Partition { file, dominating_set } => {
            let g = read_graph_file(&file)?;
            let set = match dominating_set {
                Some(text) => parse_id_list(&text)?,
                None => gamma_exact(&g).members().to_vec(),
            };
            match build_partition(&g, &set)? {
                PartitionOutcome::Partition(p) => {
                    print!("{}{}", p.render(), p.render_moves());
                }
                PartitionOutcome::Refuted(cert) => {
                    return Err(Failure::Check(format!(
                        "set of size {} is not minimum: {{{}}} also dominates",
                        cert.original_size,
                        join(cert.certificate.members(), ",")
                    )));
                }
            }
        }
        Command::Gen(args) => {
            let output = args.output.clone();
            let g = generate(args)?;
            write_or_print(output.as_deref(), &emit_edge_list(&g))?;
        }
        Command::Verify(args) => verify(args)?,
        Command::Sharp { girth, max_n, max_m } => {
            for t in search_sharp(girth, max_n, max_m)? {
                println!("{} {} gamma={} value={}", t.id, t.bound, t.gamma, t.value);
            }
        }
    }
    Ok(())
}

fn join(ids: &[usize], sep: &str) -> String {
    ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn parse_id_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad vertex id {t:?}")))
        })
        .collect()
}

fn require<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{kind} needs --{flag}")))
}

fn generate(args: GenArgs) -> Result<Graph, Failure> {
    let spec = match args.kind {
        GenKind::Cycle => GeneratorSpec::Cycle {
            n: require(args.n, "n", "cycle")?,
        },
        GenKind::Path => GeneratorSpec::Path {
            n: require(args.n, "n", "path")?,
        },
        GenKind::Star => GeneratorSpec::Star {
            k: require(args.k, "k", "star")?,
        },
        GenKind::Cage => {
            let name = require(args.name, "name", "cage")?;
            GeneratorSpec::Cage(name.parse::<Cage>()?)
        }
        GenKind::RandomGirth => GeneratorSpec::RandomGirth {
            n: require(args.n, "n", "random-girth")?,
            girth: require(args.girth, "girth", "random-girth")?,
            seed: args.seed.unwrap_or(0),
        },
        GenKind::Subdivide => GeneratorSpec::Subdivide {
            k: args.times.unwrap_or(1),
            base: GraphSource::File(require(args.input, "input", "subdivide")?),
        },
    };
    Ok(spec.generate()?)
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let mut config = VerifyConfig::from_env()?;
    if let Some(m) = &args.method {
        config.solve = m.parse::<SolveMethod>()?;
    }
    if args.no_partition {
        config.check_partition = false;
    }
    if args.timings {
        config.timings = true;
    }

    let mut inputs: Vec<CorpusInput> = args.files.into_iter().map(CorpusInput::File).collect();
    for s in &args.specs {
        inputs.push(CorpusInput::Spec(s.parse()?));
    }

    let report = run_corpus(&inputs, &config)?;
    let json = report.to_json();
    if let Some(path) = &args.csv {
        write_or_print(Some(path), &report.to_csv()?)?;
    }
    match &args.out {
        Some(path) => {
            write_or_print(Some(path), &json)?;
            let s = &report.summary;
            println!(
                "{} graphs, {} solved, {} partitions ok, {} tight, {} issues",
                s.graphs,
                s.solved,
                s.partitions_ok,
                s.tight.len(),
                s.issues
            );
        }
        None => print!("{json}"),
    }
    if report.passed() {
        Ok(())
    } else {
        for issue in &report.issues {
            eprintln!("{issue}");
        }
        Err(Failure::Check(format!("{} issues", report.issues.len())))
    }
}
