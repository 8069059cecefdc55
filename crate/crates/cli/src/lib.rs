//! `partred`: command-line access to partition reduction, the Motzkin path
//! correspondence, family enumeration and identity verification.
//!
//! Exit codes: 0 success, 1 domain error (bad partition text, a partition
//! that is not 2-regular or not noncrossing, ...), 2 usage error, 3 a
//! verification sweep reported a failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use partition_reduction::enumeration::{count_family, generate};
use partition_reduction::identities::{verify, Identity, SweepOptions};
use partition_reduction::motzkin::{partition_to_path, path_to_partition};
use partition_reduction::reduction::{
    expand_arcs, expand_partition, reduce_arcs, reduce_partition,
};
use partition_reduction::{ArcDiagram, FamilyFilter, Regularity, SetPartition, TwoMotzkinPath};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "partred",
    version,
    about = "Reduction of m-regular set partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// Ground set size.
    #[arg(long)]
    n: usize,
    /// Number of blocks.
    #[arg(long)]
    k: Option<usize>,
    /// Minimum gap inside a block (positive integer or `inf`).
    #[arg(long, default_value = "1")]
    m: Regularity,
    #[arg(long)]
    noncrossing: bool,
    #[arg(long)]
    poor: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

impl FamilyArgs {
    fn filter(&self) -> FamilyFilter {
        FamilyFilter {
            k: self.k,
            m: self.m,
            noncrossing: self.noncrossing,
            poor: self.poor,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every partition of the family, one per line.
    Enumerate(FamilyArgs),
    /// Size of the family.
    Count(FamilyArgs),
    /// Apply the reduction algorithm.
    Reduce {
        #[arg(long)]
        partition: String,
        /// Print the reduced arc diagram as JSON (loops allowed).
        #[arg(long)]
        arcs: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Invert the reduction.
    Expand {
        #[arg(long, conflicts_with = "arcs", required_unless_present = "arcs")]
        partition: Option<String>,
        /// Arc diagram JSON, e.g. '{"n":5,"arcs":[[1,1],[2,5],[3,3]]}'.
        #[arg(long)]
        arcs: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Map a noncrossing partition to its 2-Motzkin path, or back.
    Motzkin {
        #[arg(long, conflicts_with = "path", required_unless_present = "path")]
        partition: Option<String>,
        /// Path over U, D, L, W (either case).
        #[arg(long)]
        path: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run an identity sweep and print JSON-lines reports.
    Verify {
        #[arg(long, value_parser = parse_identity)]
        identity: Identity,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Largest n for enumeration cross-checks (narayana, eq5).
        #[arg(long)]
        brute_max: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Draw an arc diagram.
    Render {
        #[arg(long, conflicts_with = "arcs", required_unless_present = "arcs")]
        partition: Option<String>,
        #[arg(long)]
        arcs: Option<String>,
    },
}

fn parse_identity(text: &str) -> Result<Identity, String> {
    text.parse()
}

/// Domain failure: message for the error stream, exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn partition_text(p: &SetPartition, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => serde_json::to_string(p).expect("partition serializes"),
    }
}

fn diagram_json(d: &ArcDiagram) -> String {
    serde_json::to_string(d).expect("diagram serializes")
}

fn parse_diagram(text: &str) -> Result<ArcDiagram, Failure> {
    serde_json::from_str(text).map_err(|e| Failure(format!("invalid arc diagram: {e}")))
}

/// Runs one command; returns lines for stdout and the exit code.
fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Enumerate(args) => {
            for p in generate(args.n, args.filter()) {
                writeln!(out, "{}", partition_text(&p, args.format))?;
            }
        }
        Command::Count(args) => {
            let count = count_family(args.n, args.filter());
            match args.format {
                Format::Text => writeln!(out, "{count}")?,
                Format::Json => writeln!(out, "{{\"count\":\"{count}\"}}")?,
            }
        }
        Command::Reduce {
            partition,
            arcs,
            format,
        } => {
            let p: SetPartition = partition.parse()?;
            if arcs {
                let reduced = reduce_arcs(&ArcDiagram::from_partition(&p))?;
                writeln!(out, "{}", diagram_json(&reduced))?;
            } else {
                writeln!(out, "{}", partition_text(&reduce_partition(&p)?, format))?;
            }
        }
        Command::Expand {
            partition,
            arcs,
            format,
        } => {
            if let Some(text) = partition {
                let q: SetPartition = text.parse()?;
                writeln!(out, "{}", partition_text(&expand_partition(&q), format))?;
            } else if let Some(json) = arcs {
                let expanded = expand_arcs(&parse_diagram(&json)?)?;
                match format {
                    Format::Json => writeln!(out, "{}", diagram_json(&expanded))?,
                    Format::Text => writeln!(out, "{}", expanded.to_partition()?)?,
                }
            }
        }
        Command::Motzkin {
            partition,
            path,
            format,
        } => {
            if let Some(text) = partition {
                let p: SetPartition = text.parse()?;
                writeln!(out, "{}", partition_to_path(&p)?)?;
            } else if let Some(text) = path {
                let path: TwoMotzkinPath = text.parse()?;
                writeln!(out, "{}", partition_text(&path_to_partition(&path), format))?;
            }
        }
        Command::Verify {
            identity,
            max_n,
            brute_max,
            jobs,
        } => {
            let max_n = max_n as usize;
            let default_brute = match identity {
                Identity::Eq5 => 10,
                _ => 11,
            };
            let opts = SweepOptions::new(max_n)
                .brute_max(brute_max.unwrap_or(default_brute).min(max_n))
                .jobs(jobs);
            let reports = verify(identity, opts);
            for report in &reports {
                writeln!(out, "{}", report.to_json_line())?;
            }
            if !reports.iter().all(|r| r.passed()) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Render { partition, arcs } => {
            let diagram = match (partition, arcs) {
                (Some(text), _) => ArcDiagram::from_partition(&text.parse()?),
                (None, Some(json)) => parse_diagram(&json)?,
                (None, None) => unreachable!("clap requires one of the inputs"),
            };
            write!(out, "{}", diagram.render_ascii())?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_DOMAIN
        }
    }
}
