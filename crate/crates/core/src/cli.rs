//! The `dstar` command line.
//!
//! Exit codes: 0 success or copy found, 1 nothing found, 2 usage or input
//! error, 3 counterexample alarm. Every subcommand ends its output with a
//! single `key=value` summary line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::BoundsReport;
use crate::constructions::canonical_colouring;
use crate::doublestar::{find_monochromatic, DoubleStarSpec};
use crate::error::Error;
use crate::extract::extract;
use crate::graph::Colouring2;
use crate::search::{ramsey_exact, random_witness_search, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "dstar",
    version,
    about = "Monochromatic double stars in 2-coloured complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct SpecArgs {
    /// Leaves on the first centre.
    #[arg(long)]
    m1: usize,
    /// Leaves on the second centre.
    #[arg(long)]
    m2: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every bound for S(m1, m2).
    Bounds {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Look for a monochromatic S(m1, m2) in a colouring file.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        input: PathBuf,
    },
    /// Extract a monochromatic S(m1, m2) following the upper-bound argument.
    Extract {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        input: PathBuf,
        /// Also print every step of the extraction.
        #[arg(long)]
        trace: bool,
    },
    /// Emit the canonical colouring on r_b - 1 vertices.
    Construct {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive or local search.
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
}

#[derive(Subcommand, Debug)]
enum SearchMode {
    /// Determine R(S(m1, m2)) by exhaustive search.
    Exact {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Node limit per subtree.
        #[arg(long, default_value_t = 1 << 32)]
        budget: u64,
        /// Edges enumerated before splitting into parallel tasks.
        #[arg(long, default_value_t = 12)]
        prefix_depth: usize,
        /// Write each good colouring found to `<dir>/good_n<N>.txt`.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Local search for a good colouring of K_n.
    Witness {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        iters: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Alarm(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Counterexample { .. } => Failure::Alarm(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn spec_of(a: SpecArgs) -> Result<DoubleStarSpec, Failure> {
    Ok(DoubleStarSpec::new(a.m1, a.m2)?)
}

fn read_colouring(path: &Path) -> Result<Colouring2, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Colouring2::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

/// Runs the command line `args` (including the program name).
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_ERROR
                }
            };
        }
    };
    let mut buf = String::new();
    let result = dispatch(cli.command, &mut buf, err);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
        Err(Failure::Alarm(msg)) => {
            let _ = writeln!(err, "COUNTEREXAMPLE ALARM: {msg}");
            EXIT_COUNTEREXAMPLE
        }
    }
}

fn dispatch(command: Command, out: &mut String, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Bounds { spec } => {
            let report = BoundsReport::new(spec_of(spec)?);
            out.push_str(&report.render_text());
            out.push_str(&report.render_record());
            out.push('\n');
            Ok(EXIT_OK)
        }
        Command::Verify { spec, input } => {
            let spec = spec_of(spec)?;
            let c = read_colouring(&input)?;
            let summary = format!("m1={} m2={} n={}", spec.m1(), spec.m2(), c.n());
            match find_monochromatic(&c, spec) {
                Some(e) => {
                    out.push_str(&e.to_certificate());
                    out.push_str(&format!(
                        "{summary} found=true colour={} centre1={} centre2={}\n",
                        e.colour, e.centre1, e.centre2
                    ));
                    Ok(EXIT_OK)
                }
                None => {
                    out.push_str("none\n");
                    out.push_str(&format!("{summary} found=false\n"));
                    Ok(EXIT_NONE)
                }
            }
        }
        Command::Extract { spec, input, trace } => {
            let spec = spec_of(spec)?;
            let c = read_colouring(&input)?;
            let t = extract(&c, spec)?;
            if trace {
                out.push_str(&t.render());
            }
            out.push_str(&t.embedding.to_certificate());
            out.push_str(&format!(
                "m1={} m2={} n={} m3={} used_fallback={} escape={} colour={} centre1={} centre2={}\n",
                spec.m1(),
                spec.m2(),
                c.n(),
                t.m3,
                t.used_fallback,
                t.escape.is_some(),
                t.embedding.colour,
                t.embedding.centre1,
                t.embedding.centre2
            ));
            Ok(EXIT_OK)
        }
        Command::Construct { spec, out: path } => {
            let spec = spec_of(spec)?;
            let c = canonical_colouring(spec);
            let summary = format!("m1={} m2={} n={}", spec.m1(), spec.m2(), c.n());
            match path {
                Some(p) => {
                    write_file(&p, &c.serialize())?;
                    out.push_str(&format!("wrote {}\n{summary}\n", p.display()));
                }
                None => {
                    out.push_str(&c.serialize());
                    // a comment line keeps stdout a valid colouring file
                    out.push_str(&format!("# {summary}\n"));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Search { mode } => match mode {
            SearchMode::Exact {
                spec,
                max_n,
                threads,
                budget,
                prefix_depth,
                witness_dir,
            } => {
                let spec = spec_of(spec)?;
                let config = SearchConfig {
                    threads,
                    budget,
                    prefix_depth,
                };
                let outcome = ramsey_exact(spec, max_n, &config)?;
                if let Some(dir) = witness_dir {
                    fs::create_dir_all(&dir).map_err(|e| {
                        Failure::Usage(format!("cannot create {}: {e}", dir.display()))
                    })?;
                    for (n, w) in &outcome.witnesses {
                        write_file(&dir.join(format!("good_n{n}.txt")), &w.serialize())?;
                    }
                }
                out.push_str(&outcome.render());
                out.push_str(&outcome.render_record());
                out.push('\n');
                let _ = writeln!(err, "wall time {:.3}s", outcome.wall_time.as_secs_f64());
                Ok(EXIT_OK)
            }
            SearchMode::Witness {
                spec,
                n,
                seed,
                iters,
                out: path,
            } => {
                let spec = spec_of(spec)?;
                let summary = format!(
                    "m1={} m2={} n={n} seed={seed} iters={iters}",
                    spec.m1(),
                    spec.m2()
                );
                match random_witness_search(n, spec, seed, iters)? {
                    Some(c) => {
                        match path {
                            Some(p) => {
                                write_file(&p, &c.serialize())?;
                                out.push_str(&format!("wrote {}\n", p.display()));
                            }
                            None => out.push_str(&c.serialize()),
                        }
                        out.push_str(&format!("# {summary} found=true\n"));
                        Ok(EXIT_OK)
                    }
                    None => {
                        out.push_str("not found\n");
                        out.push_str(&format!("{summary} found=false\n"));
                        Ok(EXIT_NONE)
                    }
                }
            }
        },
    }
}
