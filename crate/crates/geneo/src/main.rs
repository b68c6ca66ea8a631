//! Batch front end: file ingestion, operator-family configuration, seeded
//! random generation, report emission and SVG plots.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when strict-mode
//! axiom validation fails, 3 on internal consistency failures (a broken
//! inequality chain indicates an implementation bug, never expected data).
//! Standard output carries exactly the report payload; set `GENEO_LOG=info`
//! or `GENEO_LOG=debug` for progress logging on standard error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use geneo::{
    bottleneck, family_matching_distance, generate_random_function, io, natural_pseudo_distance,
    report, sublevel_diagram, svg, validate_geneo, verify_inequalities, CircularFunction,
    GroupPreset, OperatorFamily, TransformGroup,
};

const EXIT_USAGE: u8 = 1;
const EXIT_AXIOM: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "geneo",
    about = "Shape comparison on the sampled circle via equivariant operators and persistence",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Trivial,
    Cyclic,
    Dihedral,
}

impl From<GroupArg> for GroupPreset {
    fn from(value: GroupArg) -> Self {
        match value {
            GroupArg::Trivial => GroupPreset::Trivial,
            GroupArg::Cyclic => GroupPreset::Cyclic,
            GroupArg::Dihedral => GroupPreset::Dihedral,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Svg,
}

#[derive(Args)]
struct PairArgs {
    /// First function file (CSV, or JSON by extension)
    #[arg(short = 'a', value_name = "FILE")]
    first: PathBuf,
    /// Second function file
    #[arg(short = 'b', value_name = "FILE")]
    second: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the sublevel-set persistence diagram of one function
    Diagram {
        /// Input function file
        #[arg(short = 'i', value_name = "FILE")]
        input: PathBuf,
        /// Output file; stdout when omitted
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
        /// Report format; inferred from the output extension when omitted
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
        /// Plot size in pixels for SVG output
        #[arg(long, default_value_t = 400)]
        size: u32,
    },
    /// Matching distance between the raw diagrams of two functions
    Dist {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Natural pseudo-distance over a transform group
    Dg {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Family matching distance over an operator family
    Dmatch {
        #[command(flatten)]
        pair: PairArgs,
        /// Operator family file (JSON array of descriptors)
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Measure the full inequality chain and certify the family's axioms
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        /// Seed for axiom certification trials
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of certification trials per operator
        #[arg(long, default_value_t = 64)]
        trials: u32,
        /// Tolerance for the chain and stability checks
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Downgrade axiom failures from exit 2 to a warning
        #[arg(long)]
        no_strict: bool,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Generate a seeded random function file
    Gen {
        /// Sample count
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Values are uniform in [-amplitude, amplitude)
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        /// Output function file; stdout when omitted
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd)]
enum LogLevel {
    Off,
    Info,
    Debug,
}

fn log_level() -> LogLevel {
    match std::env::var("GENEO_LOG").as_deref() {
        Ok("debug") => LogLevel::Debug,
        Ok("info") => LogLevel::Info,
        _ => LogLevel::Off,
    }
}

fn info(msg: &str) {
    if log_level() >= LogLevel::Info {
        eprintln!("info: {msg}");
    }
}

fn debug(msg: &str) {
    if log_level() >= LogLevel::Debug {
        eprintln!("debug: {msg}");
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<geneo::Error> for Failure {
    fn from(e: geneo::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn load_function(path: &Path) -> Result<CircularFunction, Failure> {
    let format = io::FunctionFormat::from_path(path);
    let phi = io::parse_function_file(path, format)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    info(&format!("loaded {} (n = {})", path.display(), phi.len()));
    Ok(phi)
}

fn load_pair(pair: &PairArgs) -> Result<(CircularFunction, CircularFunction), Failure> {
    Ok((load_function(&pair.first)?, load_function(&pair.second)?))
}

fn load_family(path: &Path) -> Result<OperatorFamily, Failure> {
    let family = io::parse_family_file(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    info(&format!(
        "loaded family `{}` with {} operator(s)",
        family.name(),
        family.len()
    ));
    Ok(family)
}

fn make_group(preset: GroupArg, n: usize) -> Result<TransformGroup, Failure> {
    TransformGroup::new(preset.into(), n).map_err(Failure::from)
}

/// Report format: explicit flag wins, otherwise the output extension, with
/// JSON as the final default. SVG only makes sense for diagrams.
fn resolve_format(
    explicit: Option<OutputFormat>,
    output: &Option<PathBuf>,
    allow_svg: bool,
) -> Result<OutputFormat, Failure> {
    let inferred = explicit.or_else(|| {
        output.as_deref().and_then(|p| {
            p.extension().and_then(|e| e.to_str()).and_then(|ext| {
                if ext.eq_ignore_ascii_case("csv") {
                    Some(OutputFormat::Csv)
                } else if ext.eq_ignore_ascii_case("svg") {
                    Some(OutputFormat::Svg)
                } else if ext.eq_ignore_ascii_case("json") {
                    Some(OutputFormat::Json)
                } else {
                    None
                }
            })
        })
    });
    let format = inferred.unwrap_or(OutputFormat::Json);
    if format == OutputFormat::Svg && !allow_svg {
        return Err(Failure::usage(
            "svg output is only available for the diagram command",
        ));
    }
    Ok(format)
}

fn emit(payload: &str, output: &Option<PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Diagram {
            input,
            output,
            format,
            size,
        } => {
            let phi = load_function(&input)?;
            let diagram = sublevel_diagram(&phi);
            debug(&format!(
                "diagram has {} finite pair(s)",
                diagram.finite_deg0().len()
            ));
            let payload = match resolve_format(format, &output, true)? {
                OutputFormat::Json => report::diagram_json(&diagram),
                OutputFormat::Csv => report::diagram_csv(&diagram),
                OutputFormat::Svg => svg::render_diagram_svg(&diagram, size),
            };
            emit(&payload, &output)
        }
        Command::Dist {
            pair,
            output,
            format,
        } => {
            let (f1, f2) = load_pair(&pair)?;
            let result = bottleneck(&sublevel_diagram(&f1), &sublevel_diagram(&f2))?;
            let payload = match resolve_format(format, &output, false)? {
                OutputFormat::Json => report::matching_json(&result),
                OutputFormat::Csv => report::matching_csv(&result),
                OutputFormat::Svg => unreachable!(),
            };
            emit(&payload, &output)
        }
        Command::Dg {
            pair,
            group,
            output,
            format,
        } => {
            let (f1, f2) = load_pair(&pair)?;
            let group = make_group(group, f1.len())?;
            let (distance, argmin) = natural_pseudo_distance(&f1, &f2, &group)?;
            debug(&format!("d_G = {distance} at {argmin}"));
            let payload = match resolve_format(format, &output, false)? {
                OutputFormat::Json => report::dg_json(distance, &argmin),
                OutputFormat::Csv => report::dg_csv(distance, &argmin),
                OutputFormat::Svg => unreachable!(),
            };
            emit(&payload, &output)
        }
        Command::Dmatch {
            pair,
            family,
            output,
            format,
        } => {
            let (f1, f2) = load_pair(&pair)?;
            let family = load_family(&family)?;
            let (distance, argmax) = family_matching_distance(&f1, &f2, &family)?;
            let per_op: Vec<(String, f64)> = family
                .ops()
                .iter()
                .map(|op| {
                    let single = OperatorFamily::new(vec![op.clone()], "one")
                        .expect("member already validated");
                    let (d, _) = family_matching_distance(&f1, &f2, &single)
                        .expect("sizes already checked");
                    (op.label(), d)
                })
                .collect();
            let payload = match resolve_format(format, &output, false)? {
                OutputFormat::Json => report::dmatch_json(distance, &argmax, &per_op),
                OutputFormat::Csv => report::dmatch_csv(distance, &argmax, &per_op),
                OutputFormat::Svg => unreachable!(),
            };
            emit(&payload, &output)
        }
        Command::Verify {
            pair,
            group,
            family,
            seed,
            trials,
            tolerance,
            no_strict,
            output,
            format,
        } => {
            let (f1, f2) = load_pair(&pair)?;
            let group = make_group(group, f1.len())?;
            let family = load_family(&family)?;

            // The lower bound is only guaranteed for certified operators, so
            // strict mode refuses to verify with a failing family.
            let mut failed_ops = Vec::new();
            for op in family.ops() {
                let cert = validate_geneo(op, &group, trials, seed);
                debug(&format!(
                    "certified {}: equivariance {}, expansiveness {}",
                    op.label(),
                    cert.max_equivariance_violation,
                    cert.max_expansiveness_ratio
                ));
                if !cert.passes() {
                    failed_ops.push(op.label());
                }
            }
            if !failed_ops.is_empty() {
                let listing = failed_ops.join(", ");
                if no_strict {
                    eprintln!("warning: axiom validation failed for: {listing}");
                } else {
                    return Err(Failure {
                        code: EXIT_AXIOM,
                        message: format!("axiom validation failed for: {listing}"),
                    });
                }
            }

            let verification =
                verify_inequalities(&f1, &f2, &group, &family, tolerance, trials, seed)?;
            let payload = match resolve_format(format, &output, false)? {
                OutputFormat::Json => report::verify_json(&verification),
                OutputFormat::Csv => report::verify_csv(&verification),
                OutputFormat::Svg => unreachable!(),
            };
            emit(&payload, &output)?;

            if !verification.chain_ok || !verification.stability_ok {
                return Err(Failure {
                    code: EXIT_INTERNAL,
                    message: format!(
                        "internal consistency failure: chain_ok = {}, stability_ok = {}",
                        verification.chain_ok, verification.stability_ok
                    ),
                });
            }
            Ok(())
        }
        Command::Gen {
            n,
            seed,
            amplitude,
            output,
            format,
        } => {
            let phi = generate_random_function(n, seed, amplitude)?;
            let file_format = match resolve_format(format, &output, false)? {
                OutputFormat::Json => io::FunctionFormat::Json,
                OutputFormat::Csv => io::FunctionFormat::Csv,
                OutputFormat::Svg => unreachable!(),
            };
            emit(&io::function_to_string(&phi, file_format), &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, not usage errors.
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
