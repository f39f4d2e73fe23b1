//! `drp`: decompose, compact and solve two disjoint rooted paths from the
//! command line.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tricon::compactor::VerifyLevel;

#[derive(Parser)]
#[command(name = "drp", version, about = "3-connectivity preserving compaction and two disjoint paths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print a JSON report instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// How much of each output to re-check independently.
    #[arg(long, global = true, default_value = "off", value_parser = parse_level)]
    pub verify: VerifyLevel,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

fn parse_level(s: &str) -> Result<VerifyLevel, String> {
    s.parse()
}

#[derive(Subcommand)]
pub enum Command {
    /// Two disjoint paths s1-t1 and s2-t2, or a certificate that none exist.
    Solve {
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_terminals)]
        terminals: [usize; 4],
        /// Also compare against brute force (small graphs only).
        #[arg(long)]
        oracle: bool,
    },
    /// Block tree, and the strong and special 2-cut trees when 2-connected.
    Decompose {
        #[arg(long)]
        graph: String,
    },
    /// Iterative compaction, or a single compactor call with `--step`.
    Compact {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Up to five vertices that must survive untouched.
        #[arg(long, value_delimiter = ',')]
        protected: Vec<usize>,
        #[arg(long)]
        step: bool,
    },
    /// Generate a family at each size, compact it and tabulate the result.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Brute-force answers: 3-connectivity, and two paths if terminals are given.
    Oracle {
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_terminals)]
        terminals: Option<[usize; 4]>,
    },
    /// Check a certificate written by `solve --json`.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_terminals)]
        terminals: [usize; 4],
        #[arg(long)]
        certificate: String,
    },
    /// Write a generated graph in the edge-list format.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Clone, Debug)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 10)]
    pub c: usize,
    #[arg(long, default_value_t = 1024)]
    pub d: usize,
    /// Defaults to 1/((2c+1)·2d).
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long, default_value_t = 5000)]
    pub n0: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Planar triangulation.
    Triangulation,
    /// Vertex splits of a wheel; low degrees.
    Sparse,
    /// Wheel grown by degree-3 and 4 vertices, then about 25 n extra edges.
    Dense,
    /// Small core with many degree-3 vertices attached.
    Attachment,
    /// K_{k,3} with the large side replaced by triangles.
    Kk3,
}

fn parse_terminals(s: &str) -> Result<[usize; 4], String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<usize>| format!("expected 4 terminals, got {}", v.len()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            if let Some(raw) = &outcome.raw {
                print!("{raw}");
            } else if cli.json {
                println!("{}", serde_json::to_string_pretty(&outcome.report).unwrap());
            } else {
                print!("{}", outcome.report.human());
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::INPUT_ERROR)
        }
    }
}
