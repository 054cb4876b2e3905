use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use frieze_core::coxeter::CoxeterData;
use frieze_core::frieze::{frieze_points, FriezeError, FriezeTrace, DEFAULT_DIGIT_CAP};
use frieze_core::quiver::{parse_quiver, Quiver, QuiverError, ReprType};
use frieze_core::recurrence::RecurrenceError;
use frieze_core::report::{
    default_t_max, growth_profile, recurrence_report, RunOptions, RunReport, DEFAULT_MAX_ORDER,
    VERSION,
};
use frieze_core::util::round_sig;
use frieze_core::variety::{
    estimate_dimension, VarietyError, DEFAULT_DEGREE_BOUND, DEFAULT_HOLDOUT, DEFAULT_MODULUS_BOUND,
};

const EXIT_INPUT: u8 = 2;
const EXIT_HORIZON: u8 = 3;

#[derive(Parser)]
#[command(name = "frieze", version, about = "Frieze sequences of acyclic quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph classification with the Coxeter spectral radius.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Exact frieze points P_0..P_tmax.
    Points {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        horizon: Horizon,
        #[arg(long, value_enum, default_value_t = PointFormat::Csv)]
        format: PointFormat,
    },
    /// Logarithmic growth, normalized by the spectral radius for wild quivers.
    Growth {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        horizon: Horizon,
    },
    /// Linear recurrences dispatched on the quiver type.
    Recurrence {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        horizon: Horizon,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Dimension verdict for the frieze variety.
    Dim {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        horizon: Horizon,
        #[command(flatten)]
        search: Search,
    },
    /// Everything above in one JSON document.
    Report {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        horizon: Horizon,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[command(flatten)]
        search: Search,
    },
}

#[derive(Args)]
struct Input {
    /// Quiver file, or `-` for stdin.
    file: PathBuf,
}

#[derive(Args)]
struct Horizon {
    /// Last time step; defaults depend on the quiver type.
    #[arg(long)]
    tmax: Option<usize>,
    /// Stop once a coordinate would exceed this many decimal digits.
    #[arg(long, default_value_t = DEFAULT_DIGIT_CAP)]
    digit_cap: usize,
}

#[derive(Args)]
struct Search {
    /// Largest total degree of vanishing polynomials.
    #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
    degree: usize,
    /// Largest modulus for residue classes of t.
    #[arg(long, default_value_t = DEFAULT_MODULUS_BOUND)]
    modulus: usize,
    /// Points per residue class used only for verification.
    #[arg(long, default_value_t = DEFAULT_HOLDOUT)]
    holdout: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PointFormat {
    Csv,
    Json,
}

enum Failure {
    Input(String),
    Horizon(String),
}

impl From<QuiverError> for Failure {
    fn from(e: QuiverError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<FriezeError> for Failure {
    fn from(e: FriezeError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<RecurrenceError> for Failure {
    fn from(e: RecurrenceError) -> Self {
        match e {
            RecurrenceError::HorizonTooShort { .. } | RecurrenceError::PreconditionViolated(_) => {
                Failure::Horizon(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<VarietyError> for Failure {
    fn from(e: VarietyError) -> Self {
        Failure::Horizon(e.to_string())
    }
}

/// Parsed input, admissibly relabeled and classified.
struct Loaded {
    input: Quiver,
    quiver: Quiver,
    labels: Vec<(usize, usize)>,
    relabeled: bool,
    repr: Option<ReprType>,
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    let text = if input.file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.file)
            .map_err(|e| Failure::Input(format!("{}: {e}", input.file.display())))?
    };
    let parsed = parse_quiver(&text)?;
    let (quiver, perm) = parsed.admissible_relabel()?;
    let repr = match quiver.classify() {
        Ok(r) => Some(r),
        Err(QuiverError::Disconnected) => {
            eprintln!("warning: quiver is disconnected; no classification");
            None
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Loaded {
        input: parsed,
        quiver,
        labels: perm.to_labels(),
        relabeled: !perm.is_identity(),
        repr,
    })
}

fn trace(l: &Loaded, h: &Horizon) -> Result<FriezeTrace, Failure> {
    let t_max = h
        .tmax
        .unwrap_or_else(|| default_t_max(l.repr.as_ref(), l.quiver.n()));
    let tr = frieze_points(&l.quiver, t_max, h.digit_cap)?;
    if tr.truncated() {
        eprintln!(
            "warning: digit cap {} reached; trace stops at t={}",
            h.digit_cap,
            tr.t_max()
        );
    }
    Ok(tr)
}

fn header(l: &Loaded) -> Value {
    json!({
        "version": VERSION,
        "input": l.input.to_text(),
        "quiver": l.quiver.to_text(),
        "relabeling": l.labels,
        "classification": l.repr.as_ref().map(ToString::to_string),
    })
}

fn with_header(l: &Loaded, body: Value) -> Value {
    let mut out = header(l);
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    out
}

fn note_relabel(l: &Loaded) {
    if l.relabeled {
        let map: Vec<String> = l.labels.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        eprintln!("note: vertices relabeled admissibly (old->new): {}", map.join(", "));
    }
}

fn format_rho(rho: f64) -> String {
    if rho == 1.0 {
        "1".to_string()
    } else {
        format!("{rho:.4}")
    }
}

fn classify_line(repr: &ReprType, rho: f64) -> String {
    match repr {
        ReprType::Finite(_) => repr.to_string(),
        _ => format!("{repr}, ρ≈{}", format_rho(rho)),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Classify { input, format } => {
            let l = load(&input)?;
            let cox = CoxeterData::compute(&l.quiver).map_err(|e| Failure::Input(e.to_string()))?;
            let rho = cox.rho();
            let agreement = l
                .repr
                .as_ref()
                .map(|r| r.is_wild() == cox.spectral.exceeds_one());
            if agreement == Some(false) {
                eprintln!("WARNING: graph classification and spectral radius disagree");
            }
            match format {
                TextFormat::Text => Ok(match &l.repr {
                    Some(r) => classify_line(r, rho),
                    None => format!("Unclassified (disconnected), ρ≈{}", format_rho(rho)),
                }),
                TextFormat::Json => Ok(json_string(&with_header(
                    &l,
                    json!({
                        "kind": l.repr.as_ref().map(ReprType::kind),
                        "rho": round_sig(rho),
                        "agreement": agreement,
                    }),
                ))),
            }
        }
        Command::Points {
            input,
            horizon,
            format,
        } => {
            let l = load(&input)?;
            let tr = trace(&l, &horizon)?;
            match format {
                PointFormat::Csv => {
                    note_relabel(&l);
                    Ok(tr.to_csv().trim_end().to_string())
                }
                PointFormat::Json => Ok(json_string(&with_header(&l, tr.to_json()))),
            }
        }
        Command::Growth { input, horizon } => {
            let l = load(&input)?;
            let tr = trace(&l, &horizon)?;
            let cox = CoxeterData::compute(&l.quiver).map_err(|e| Failure::Input(e.to_string()))?;
            let wild = l.repr.as_ref().is_some_and(ReprType::is_wild);
            let g = growth_profile(&tr, &cox, wild);
            if let Some(w) = &g.warning {
                eprintln!("warning: {w}");
            }
            Ok(json_string(&with_header(&l, json!({ "growth": g.to_json() }))))
        }
        Command::Recurrence {
            input,
            horizon,
            max_order,
        } => {
            let l = load(&input)?;
            let tr = trace(&l, &horizon)?;
            let rep = recurrence_report(&tr, l.repr.as_ref(), max_order)?;
            Ok(json_string(&with_header(
                &l,
                json!({ "t_max": tr.t_max(), "recurrence": rep }),
            )))
        }
        Command::Dim {
            input,
            horizon,
            search,
        } => {
            let l = load(&input)?;
            let tr = trace(&l, &horizon)?;
            let rep = estimate_dimension(&tr, search.degree, search.modulus, search.holdout)?;
            if let Some(w) = &rep.warning {
                eprintln!("{w}");
            }
            Ok(json_string(&with_header(
                &l,
                json!({ "t_max": tr.t_max(), "dimension": rep.to_json() }),
            )))
        }
        Command::Report {
            input,
            horizon,
            max_order,
            search,
        } => {
            let l = load(&input)?;
            let opts = RunOptions {
                t_max: horizon.tmax,
                digit_cap: horizon.digit_cap,
                max_order,
                degree_bound: search.degree,
                modulus_bound: search.modulus,
                holdout: search.holdout,
            };
            let rep = RunReport::run(&l.input, &opts)?;
            if let Ok(d) = &rep.dimension {
                if let Some(w) = &d.warning {
                    eprintln!("{w}");
                }
            }
            Ok(json_string(&rep.to_json()))
        }
    }
}

fn json_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if writeln!(stdout, "{out}").is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Horizon(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_HORIZON)
        }
    }
}
