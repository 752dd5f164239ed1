use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use springer_core::shapes::partitions_of;
use springer_core::{Composition, Error, LinkPattern, Partition};
use springer_kit::report::{self, AtlasIndex};
use springer_kit::verify::{self, Suite, SweepError};
use springer_kit::{exit, render, DEFAULT_MAX_N, TOOL_VERSION};

#[derive(Parser)]
#[command(name = "springer-kit", version, about = "Components of type A Springer fibers")]
struct Cli {
    /// Largest n accepted by enumerating commands.
    #[arg(long, global = true, env = "SPRINGER_KIT_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_enum: usize,

    /// Omit the leading version line in text output.
    #[arg(long, global = true)]
    no_stamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every component for a Jordan type, e.g. "2,2,1,1".
    Shape {
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Bala-Carter component of an ordering of block sizes, e.g. "1,2,2,1".
    Composition {
        composition: String,
        #[arg(long)]
        json: bool,
    },
    /// Analyze a link pattern, e.g. "1 2 5 | 3 8 | 6 7 | 4".
    Pattern {
        pattern: String,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum)]
        render: Option<Render>,
        /// Write the SVG here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 1.5)]
        stroke_width: f64,
    },
    /// Write one JSON record per partition of each n <= max-n, plus an index.
    Atlas {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Run property sweeps against the oracle and closed formulas.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        max_n: usize,
        /// Worker threads; results are merged in enumeration order.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Ascii,
    Svg,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        let code = match e.downcast_ref::<Error>() {
            Some(Error::SizeBound { .. }) => exit::BOUND,
            _ => exit::USAGE,
        };
        Failure {
            code,
            message: format!("{e:#}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn bound_check(n: usize, bound: usize) -> anyhow::Result<()> {
    if n > bound {
        return Err(Error::SizeBound {
            what: "enumeration",
            n,
            bound,
        }
        .into());
    }
    Ok(())
}

fn stamp(cli: &Cli, json: bool) {
    if !cli.no_stamp && !json {
        println!("{TOOL_VERSION}");
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Shape { partition, json } => {
            let shape: Partition = partition.parse()?;
            bound_check(shape.size(), cli.max_enum)?;
            let record = report::atlas_record(&shape, cli.max_enum)?;
            stamp(cli, *json);
            if *json {
                print_json(&record)?;
            } else {
                print!("{}", report::atlas_text(&record));
            }
        }
        Command::Composition { composition, json } => {
            let pi: Composition = composition.parse()?;
            bound_check(pi.size(), cli.max_enum)?;
            let record = report::composition_record(&pi)?;
            stamp(cli, *json);
            if *json {
                print_json(&record)?;
            } else {
                print!("{}", report::composition_text(&record));
            }
        }
        Command::Pattern {
            pattern,
            json,
            render,
            output,
            stroke_width,
        } => {
            let p: LinkPattern = pattern.parse()?;
            let record = report::pattern_record(&p);
            if let Some(Render::Svg) = render {
                let doc = render::svg(&p, *stroke_width);
                match output {
                    Some(path) => fs::write(path, doc)
                        .with_context(|| format!("cannot write {}", path.display()))?,
                    None => {
                        print!("{doc}");
                        return Ok(());
                    }
                }
            }
            stamp(cli, *json);
            if *json {
                print_json(&record)?;
            } else {
                print!("{}", report::pattern_text(&record));
                if let Some(Render::Ascii) = render {
                    println!();
                    print!("{}", render::ascii(&p));
                }
            }
        }
        Command::Atlas { max_n, out_dir } => {
            bound_check(*max_n, cli.max_enum.min(DEFAULT_MAX_N))?;
            write_atlas(*max_n, out_dir, cli.max_enum)?;
            stamp(cli, false);
            println!("wrote atlas for n <= {max_n} to {}", out_dir.display());
        }
        Command::Verify { suite, max_n, jobs } => {
            bound_check(*max_n, cli.max_enum)?;
            stamp(cli, false);
            return verify_suites(*suite, *max_n, cli.max_enum, *jobs);
        }
    }
    Ok(())
}

fn write_atlas(max_n: usize, out_dir: &Path, bound: usize) -> anyhow::Result<()> {
    fs::create_dir_all(out_dir).with_context(|| format!("cannot create {}", out_dir.display()))?;
    let mut index = AtlasIndex {
        kind: "index",
        max_n,
        shapes: Vec::new(),
        tool_version: TOOL_VERSION,
    };
    for n in 1..=max_n {
        for shape in partitions_of(n) {
            let record = report::atlas_record(&shape, bound)?;
            let path = out_dir.join(report::atlas_file_name(&shape));
            let body = serde_json::to_string_pretty(&record)? + "\n";
            fs::write(&path, body).with_context(|| format!("cannot write {}", path.display()))?;
            index.shapes.push(report::index_entry(&record));
        }
    }
    let path = out_dir.join("index.json");
    let body = serde_json::to_string_pretty(&index)? + "\n";
    fs::write(&path, body).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn verify_suites(suite: Suite, max_n: usize, bound: usize, jobs: Option<usize>) -> Result<(), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure {
            code: exit::USAGE,
            message: e.to_string(),
        })?;
    let mut failed = None;
    for s in suite.expand() {
        match pool.install(|| verify::run(s, max_n, bound)) {
            Ok(checks) => println!("{:<11} pass ({checks} checks)", s.name()),
            Err(SweepError::Counterexample(msg)) => {
                println!("{:<11} FAIL", s.name());
                println!("{msg}");
                failed.get_or_insert(Failure {
                    code: exit::VERIFY,
                    message: format!("suite {} failed", s.name()),
                });
            }
            Err(SweepError::Core(e)) => return Err(e.into()),
        }
    }
    failed.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::from(exit::OK),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
