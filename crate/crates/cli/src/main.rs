//! `genpos`: compute and check general position sets, build the paper's
//! graph families, and run removal experiments.
//!
//! Exit status is 0 on success, 1 when a property violation is found (an
//! oracle mismatch, a failed asserted bound, a family value mismatch) and 2
//! on usage or input errors.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genpos::PositionKind;

#[derive(Parser)]
#[command(name = "genpos", version, about = "General position sets of graphs and vertex/edge removal experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Largest position sets of each input graph.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = KindArg::All)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Report solver wall time (makes JSON output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Check whether a vertex set is a position set.
    CheckSet {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertices, e.g. 0,2,4.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
        #[arg(long, value_enum, default_value_t = KindArg::All)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Build a named family member, or verify the family value table.
    Family(FamilyArgs),
    /// Removal report for one vertex or edge of each input graph.
    Remove {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Evaluate every bound over a corpus described by a manifest.
    Sweep {
        #[arg(long)]
        manifest: PathBuf,
        /// Overrides the manifest seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Directory for reports.jsonl, summary.json and the violation files.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only evaluate the conjectured bound B6.
        #[arg(long)]
        conjecture_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Compare the solvers with subset enumeration.
    OracleDiff {
        #[command(flatten)]
        input: InputArgs,
        /// Corpus manifest instead of graph input.
        #[arg(long, conflicts_with_all = ["graph", "input", "family"])]
        manifest: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = KindArg::All)]
        kind: KindArg,
        /// Graphs above this order are skipped.
        #[arg(long, default_value_t = 10)]
        oracle_max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

/// Graph source: one of `--graph`, `--input`, `--family`, else graph6 lines
/// on stdin.
#[derive(Args)]
#[group(multiple = false)]
struct InputArgs {
    /// A graph6 string.
    #[arg(long, value_name = "GRAPH6")]
    graph: Option<String>,
    /// File of graph6 lines, or an edge-list `.json` file.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Family member such as `Mk:4` or `Gnk:5,2`.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ElementArgs {
    #[arg(long)]
    vertex: Option<usize>,
    /// Edge as `u,v`.
    #[arg(long, value_parser = parse_edge)]
    edge: Option<(usize, usize)>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name (Gn, Fn, Wn, Mk, Tk, Yk, Gnk, Xn, Ypn, Zn, Hn, Kn, K1n, K2n, Kn-e, Pn, Cn).
    #[arg(required_unless_present = "verify")]
    name: Option<String>,
    params: Vec<usize>,
    /// Compare solver output with every stated value on the parameter grid.
    #[arg(long, conflicts_with = "name")]
    verify: bool,
    #[arg(long, value_enum, conflicts_with_all = ["graph6", "json", "dot"])]
    format: Option<Format>,
    /// Shorthand for `--format graph6`.
    #[arg(long, conflicts_with_all = ["json", "dot"])]
    graph6: bool,
    /// Shorthand for `--format json`.
    #[arg(long, conflicts_with = "dot")]
    json: bool,
    /// Shorthand for `--format dot`.
    #[arg(long)]
    dot: bool,
}

impl FamilyArgs {
    fn format(&self) -> Format {
        match (self.format, self.graph6, self.json, self.dot) {
            (Some(f), ..) => f,
            (_, true, _, _) => Format::Graph6,
            (_, _, true, _) => Format::Json,
            (_, _, _, true) => Format::Dot,
            _ => Format::Human,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    General,
    Total,
    Outer,
    Dual,
    All,
}

impl KindArg {
    fn kinds(self) -> Vec<PositionKind> {
        match self {
            KindArg::General => vec![PositionKind::General],
            KindArg::Total => vec![PositionKind::Total],
            KindArg::Outer => vec![PositionKind::Outer],
            KindArg::Dual => vec![PositionKind::Dual],
            KindArg::All => PositionKind::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Human,
    Json,
    Dot,
    Graph6,
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected u,v, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Violation,
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(value) = std::env::var("GENPOS_THREADS") {
        let threads: usize = value.parse().map_err(|_| anyhow::anyhow!("GENPOS_THREADS must be a positive integer"))?;
        anyhow::ensure!(threads > 0, "GENPOS_THREADS must be a positive integer");
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| commands::run(cli.command));
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn edges() {
        assert_eq!(parse_edge("3,7"), Ok((3, 7)));
        assert_eq!(parse_edge(" 3 , 7"), Ok((3, 7)));
        assert!(parse_edge("3").is_err());
        assert!(parse_edge("3,x").is_err());
    }

    #[test]
    fn family_format_shorthands() {
        let cli = Cli::try_parse_from(["genpos", "family", "Mk", "4", "--graph6"]).unwrap();
        let Command::Family(args) = cli.command else { panic!("family") };
        assert_eq!(args.format(), Format::Graph6);
        assert!(Cli::try_parse_from(["genpos", "family", "Mk", "4", "--graph6", "--json"]).is_err());
        assert!(Cli::try_parse_from(["genpos", "family"]).is_err());
        assert!(Cli::try_parse_from(["genpos", "family", "--verify"]).is_ok());
    }
}
