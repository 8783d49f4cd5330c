use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use splitcon::graph::{parse_edge_list, parse_graph6, parse_graph6_corpus};
use splitcon::harness::{census, verify, verify_all, CensusTable, Source, TheoremId, TheoremReport};
use splitcon::split::classify;
use splitcon::Graph;

#[derive(Parser, Debug)]
#[command(name = "splitcon", version, about = "Split graph recognition and contraction checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a classification report for each input graph.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Sweep a characterization over all small graphs (or a graph6 corpus).
    Verify {
        /// Theorem id, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// graph6 corpus to sweep instead of the built-in enumeration.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Per-order counts over connected graphs.
    Census {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..=8))]
        max_n: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// A graph6 string or an edge list ("n m" header, then "u v" lines).
    #[arg(long)]
    inline: Option<String>,
    /// A graph6 corpus (one graph per line) or an edge-list file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Edge lists start with their order, graph6 never starts with a digit.
fn is_edge_list(text: &str) -> bool {
    text.trim_start().starts_with(|c: char| c.is_ascii_digit())
}

fn parse_inline(text: &str) -> Result<Graph, String> {
    let text = text.replace("\\n", "\n");
    if is_edge_list(&text) {
        parse_edge_list(&text).map_err(|e| e.to_string())
    } else {
        parse_graph6(text.trim()).map_err(|e| e.to_string())
    }
}

fn read_graphs(path: &PathBuf) -> Result<Vec<Graph>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = if is_edge_list(&text) { parse_edge_list(&text).map(|g| vec![g]) } else { parse_graph6_corpus(&text) };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    // Value's default map is a BTreeMap, so keys come out sorted
    serde_json::to_value(value).expect("report serializes")
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("value serializes"));
}

fn run_classify(input: &Input, format: Format) -> Result<ExitCode, String> {
    let (graphs, single) = match (&input.inline, &input.file) {
        (Some(s), _) => (vec![parse_inline(s)?], true),
        (None, Some(p)) => (read_graphs(p)?, false),
        (None, None) => unreachable!("clap enforces one input"),
    };
    let reports = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| classify(g).map_err(|e| format!("graph {}: {e}", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Json if single => print_json(&to_json(&reports[0])),
        Format::Json => print_json(&to_json(&reports)),
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{r}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(theorem: &str, max_n: usize, file: Option<&PathBuf>, format: Format) -> Result<ExitCode, String> {
    let source = match file {
        Some(p) => Source::Corpus(read_graphs(p)?),
        None => Source::Builtin,
    };
    let (reports, single): (Vec<TheoremReport>, bool) = if theorem.eq_ignore_ascii_case("all") {
        (verify_all(max_n, &source).map_err(|e| e.to_string())?, false)
    } else {
        let id: TheoremId = theorem.parse().map_err(|e: splitcon::harness::UnknownTheorem| e.to_string())?;
        (vec![verify(id, max_n, &source).map_err(|e| e.to_string())?], true)
    };
    match format {
        Format::Json if single => print_json(&to_json(&reports[0])),
        Format::Json => print_json(&to_json(&reports)),
        Format::Text => reports.iter().for_each(|r| print!("{r}")),
    }
    Ok(if reports.iter().all(TheoremReport::passed) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_census(max_n: usize, format: Format) -> Result<ExitCode, String> {
    let rows = census(max_n).map_err(|e| e.to_string())?;
    match format {
        Format::Json => print_json(&to_json(&rows)),
        Format::Text => print!("{}", CensusTable(&rows)),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Classify { input } => run_classify(input, cli.format),
        Command::Verify { theorem, max_n, file } => {
            if !theorem.eq_ignore_ascii_case("all") && theorem.parse::<TheoremId>().is_err() {
                eprintln!("error: unknown theorem id {theorem:?}; expected one of {} or all", theorem_list());
                return ExitCode::from(2);
            }
            run_verify(theorem, *max_n as usize, file.as_ref(), cli.format)
        }
        Command::Census { max_n } => run_census(*max_n as usize, cli.format),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn theorem_list() -> String {
    TheoremId::ALL.iter().map(|t| t.as_str()).collect::<Vec<_>>().join(", ")
}
