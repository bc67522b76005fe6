//! Command-line front end: solve decision problems, exercise grey-graph
//! operators on JSON graph files, and convert between interval and
//! kernel/greyness lists.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 on internal invariant
//! failures.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grey_madm::decision::{solve, EngineError, SolveOptions};
use grey_madm::grey::{GreyInterval, GreyNumber};
use grey_madm::io::{
    emit_report, export_dot, graph_to_document, parse_graph, parse_problem, ProblemFormat,
    ReportFormat,
};
use grey_madm::GreyGraph;

#[derive(Parser)]
#[command(name = "grey-madm", version, about = "Grey-graph decision making")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the decision pipeline on a problem file
    Solve(SolveArgs),
    /// Operate on grey-graph JSON files
    Graph {
        #[command(subcommand)]
        op: GraphCommand,
    },
    /// Convert between interval lists and kernel/greyness lists
    Convert(ConvertArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Problem file (JSON or CSV)
    #[arg(long)]
    input: PathBuf,
    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value_t = ReportKind::Text)]
    report: ReportKind,
    /// Write the attribute influence graph as DOT to this path
    #[arg(long)]
    emit_dot: Option<PathBuf>,
    /// Clamp propagated kernels into [0, 1]
    #[arg(long)]
    clamp: bool,
    /// Reject problems whose attribute graph violates the grey-graph
    /// validity constraint
    #[arg(long)]
    strict_validation: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Text,
    Markdown,
    Json,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Check the grey-graph validity constraint
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the strong completion of the input graph's vertices
    Strong {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Union of two graphs
    Union {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Addition (join) of two vertex-disjoint graphs
    Sum {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Cartesian product of two graphs
    Product {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: GraphOutput,
    },
}

#[derive(Args)]
struct GraphOutput {
    /// Write here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    emit: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Args)]
struct ConvertArgs {
    /// Conversion direction
    #[arg(value_enum)]
    mode: ConvertMode,
    /// JSON file holding a list of [a, b] pairs
    #[arg(long)]
    input: PathBuf,
    /// Write here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertMode {
    /// Treat pairs as [lower, upper] intervals; emit [kernel, greyness]
    ToGrey,
    /// Treat pairs as [kernel, greyness]; emit [lower, upper] intervals
    ToInterval,
}

/// Input problems against internal invariant breaks: the former exit 1,
/// the latter exit 2.
enum CliError {
    Input(String),
    Internal(String),
}

impl From<grey_madm::io::IoError> for CliError {
    fn from(e: grey_madm::io::IoError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(message)) => {
            eprintln!("internal error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Graph { op } => run_graph(op),
        Command::Convert(args) => run_convert(args),
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => {
            use std::io::Write as _;
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

fn run_solve(args: SolveArgs) -> Result<(), CliError> {
    let format = match args.format {
        Some(InputFormat::Json) => ProblemFormat::Json,
        Some(InputFormat::Csv) => ProblemFormat::Csv,
        None => match args.input.extension().and_then(|e| e.to_str()) {
            Some("csv") => ProblemFormat::Csv,
            _ => ProblemFormat::Json,
        },
    };
    let data = read_file(&args.input)?;
    let problem = parse_problem(&data, format)?;
    let options = SolveOptions {
        clamp: args.clamp,
        strict_validation: args.strict_validation,
    };
    let solution = solve(&problem, options).map_err(|e| match e {
        // these cannot arise from a problem that already passed parsing
        EngineError::Dimension { .. }
        | EngineError::InfluenceShape { .. }
        | EngineError::MatrixShape { .. }
        | EngineError::MatrixRows { .. } => CliError::Internal(e.to_string()),
        other => CliError::Input(other.to_string()),
    })?;

    for warning in &solution.warnings {
        eprintln!("warning: {warning}");
    }
    if let Some(dot_path) = &args.emit_dot {
        write_output(Some(dot_path), &export_dot(&solution.attribute_graph))?;
    }
    let report_format = match args.report {
        ReportKind::Text => ReportFormat::Text,
        ReportKind::Markdown => ReportFormat::Markdown,
        ReportKind::Json => ReportFormat::Json,
    };
    let rendered = emit_report(&solution, report_format)?;
    write_output(args.output.as_deref(), &rendered)
}

fn emit_graph(graph: &GreyGraph, out: &GraphOutput) -> Result<(), CliError> {
    let bytes = match out.emit {
        GraphFormat::Dot => export_dot(graph),
        GraphFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(&graph_to_document(graph))
                .map_err(|e| CliError::Internal(e.to_string()))?;
            bytes.push(b'\n');
            bytes
        }
    };
    write_output(out.output.as_deref(), &bytes)
}

fn run_graph(op: GraphCommand) -> Result<(), CliError> {
    let load = |path: &Path| -> Result<GreyGraph, CliError> {
        let data = read_file(path)?;
        Ok(parse_graph(&data, false)?)
    };
    match op {
        GraphCommand::Validate { input } => {
            let graph = load(&input)?;
            let report = graph.validate();
            println!("{report}");
            if report.is_valid() {
                Ok(())
            } else {
                Err(CliError::Input(format!(
                    "{} validity violations",
                    report.violations.len()
                )))
            }
        }
        GraphCommand::Strong { input, out } => {
            let graph = load(&input)?;
            let completed = GreyGraph::strong_completion(
                graph.vertices().map(|(id, v)| (id.clone(), v)),
            );
            emit_graph(&completed, &out)
        }
        GraphCommand::Union { left, right, out } => {
            let result = load(&left)?.union(&load(&right)?);
            emit_graph(&result, &out)
        }
        GraphCommand::Sum { left, right, out } => {
            let result = load(&left)?
                .graph_sum(&load(&right)?)
                .map_err(|e| CliError::Input(e.to_string()))?;
            emit_graph(&result, &out)
        }
        GraphCommand::Product { left, right, out } => {
            let result = load(&left)?.cartesian_product(&load(&right)?);
            emit_graph(&result, &out)
        }
    }
}

fn run_convert(args: ConvertArgs) -> Result<(), CliError> {
    let data = read_file(&args.input)?;
    let pairs: Vec<[f64; 2]> = serde_json::from_slice(&data)
        .map_err(|e| CliError::Input(format!("expected a JSON list of [a, b] pairs: {e}")))?;
    let converted: Vec<[f64; 2]> = match args.mode {
        ConvertMode::ToGrey => pairs
            .iter()
            .enumerate()
            .map(|(i, &[lo, hi])| {
                let interval = GreyInterval::new(lo, hi)
                    .map_err(|e| CliError::Input(format!("entry {}: {e}", i + 1)))?;
                let grey = GreyNumber::from_interval(interval);
                Ok([grey.kernel, grey.greyness])
            })
            .collect::<Result<_, CliError>>()?,
        ConvertMode::ToInterval => pairs
            .iter()
            .enumerate()
            .map(|(i, &[kernel, greyness])| {
                if greyness < 0.0 {
                    return Err(CliError::Input(format!(
                        "entry {}: greyness {greyness} is negative",
                        i + 1
                    )));
                }
                let interval = GreyNumber::new(kernel, greyness).to_interval();
                Ok([interval.lower, interval.upper])
            })
            .collect::<Result<_, CliError>>()?,
    };
    let mut bytes =
        serde_json::to_vec(&converted).map_err(|e| CliError::Internal(e.to_string()))?;
    bytes.push(b'\n');
    write_output(args.output.as_deref(), &bytes)
}
