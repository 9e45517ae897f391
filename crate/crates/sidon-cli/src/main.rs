//! `sidon` — exact h-Sidon set tooling from the command line.
//!
//! Subcommands: `verify`, `perturb`, `weights`, `sumset`, `density`. Every
//! run writes a single JSON report (to stdout, or atomically to `--output`)
//! that echoes the full request, so reports are reproducible and
//! self-describing. Rationals cross this boundary as strings only.
//!
//! Exit codes: 0 on success — a "not h-Sidon" verdict is a success — 1 for
//! domain errors while executing a well-formed request, 2 for malformed
//! requests (unparseable rationals, invalid flag combinations, missing
//! files, duplicate elements where distinctness is required).

mod input;
mod reports;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

use sidon::{AbsoluteValue, Error, Magnitude, PerturbationPlan, Rational, SamplerSpec};

use input::{read_input_json, CliError};
use reports::write_report;

#[derive(Parser)]
#[command(name = "sidon", version, about = "Exact h-Sidon set verification, construction, and experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a set of rationals is h-Sidon, with certificates.
    Verify(VerifyArgs),
    /// Perturb a sequence into an h-Sidon set, elementwise below epsilon.
    Perturb(PerturbArgs),
    /// Enumerate the weight-vector family over {1..k} at order h.
    Weights(WeightsArgs),
    /// Finite-set additive operations (translate, dilate, sumsets).
    Sumset(SumsetArgs),
    /// Fraction of sampled (or all) k-point configurations that are h-Sidon.
    Density(DensityArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Read the input JSON from this file.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Take the input JSON from the command line.
    #[arg(long, value_name = "JSON", conflicts_with = "input")]
    inline: Option<String>,
    /// Write the report to this file (atomically) instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct AbsArgs {
    /// Absolute value used for magnitudes.
    #[arg(long = "abs", value_enum, default_value_t = AbsKind::Archimedean)]
    abs: AbsKind,
    /// Prime for the p-adic absolute value (required with --abs p-adic).
    #[arg(long)]
    p: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum AbsKind {
    Archimedean,
    #[value(name = "p-adic")]
    PAdic,
}

impl AbsArgs {
    fn resolve(&self) -> Result<AbsoluteValue, CliError> {
        match (self.abs, self.p) {
            (AbsKind::Archimedean, None) => Ok(AbsoluteValue::archimedean()),
            (AbsKind::Archimedean, Some(_)) => Err(CliError::Usage(
                "--p only applies to --abs p-adic".into(),
            )),
            (AbsKind::PAdic, None) => Err(CliError::Usage(
                "--abs p-adic requires --p <prime>".into(),
            )),
            (AbsKind::PAdic, Some(p)) => {
                AbsoluteValue::p_adic(p).map_err(|e| CliError::Usage(e.to_string()))
            }
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Order of the Sidon property to check.
    #[arg(long)]
    h: u32,
    /// Which verifier to run.
    #[arg(long, value_enum, default_value_t = Method::Bruteforce)]
    method: Method,
    #[command(flatten)]
    abs: AbsArgs,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(ValueEnum, Clone, Copy)]
enum Method {
    Bruteforce,
    Hyperplane,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::Hyperplane => "hyperplane",
        }
    }
}

#[derive(Args)]
struct PerturbArgs {
    /// Order of the Sidon property to enforce.
    #[arg(long)]
    h: Option<u32>,
    /// Constant displacement bound applied at every position.
    #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
    eps: Option<String>,
    /// JSON array of per-position displacement bounds.
    #[arg(long, value_name = "PATH", conflicts_with = "eps")]
    eps_file: Option<PathBuf>,
    /// Consume inputs lazily and stop after --count outputs.
    #[arg(long, requires = "count")]
    stream: bool,
    /// Number of outputs to emit in --stream mode.
    #[arg(long)]
    count: Option<u64>,
    /// Accept repeated input values (outputs remain distinct regardless).
    #[arg(long)]
    allow_duplicates: bool,
    #[command(flatten)]
    abs: AbsArgs,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct WeightsArgs {
    /// Size of the index universe.
    #[arg(long)]
    k: usize,
    /// Order bound on the positive part.
    #[arg(long)]
    h: u32,
    /// Emit one representative per {w, -w} pair.
    #[arg(long)]
    canonical: bool,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct SumsetArgs {
    /// Operation to apply to the input set.
    #[arg(long, value_enum)]
    op: SetOp,
    /// Constant for translate/dilate.
    #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
    c: Option<String>,
    /// Adjoined point for the shifted sumset.
    #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
    b: Option<String>,
    /// Order for hsum/shifted.
    #[arg(long)]
    h: Option<u32>,
    /// Summand count r for rs-diff/shifted.
    #[arg(long)]
    r: Option<u32>,
    /// Subtrahend count s for rs-diff.
    #[arg(long)]
    s: Option<u32>,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(ValueEnum, Clone, Copy)]
enum SetOp {
    Translate,
    Dilate,
    Hsum,
    #[value(name = "rs-diff")]
    RsDiff,
    Shifted,
}

impl SetOp {
    fn name(self) -> &'static str {
        match self {
            SetOp::Translate => "translate",
            SetOp::Dilate => "dilate",
            SetOp::Hsum => "hsum",
            SetOp::RsDiff => "rs-diff",
            SetOp::Shifted => "shifted",
        }
    }
}

#[derive(Args)]
struct DensityArgs {
    /// Number of points per configuration.
    #[arg(long)]
    k: usize,
    /// Order of the Sidon property.
    #[arg(long)]
    h: u32,
    /// Number of sampled trials (ignored with --exact).
    #[arg(long)]
    trials: Option<u64>,
    /// Sampler: grid:<N> or rational:<M>.
    #[arg(long)]
    sampler: String,
    /// Seed for the trial streams.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Enumerate every k-subset of the grid instead of sampling.
    #[arg(long)]
    exact: bool,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Verify(args) => run_verify(args),
        Command::Perturb(args) => run_perturb(args),
        Command::Weights(args) => run_weights(args),
        Command::Sumset(args) => run_sumset(args),
        Command::Density(args) => run_density(args),
    }
}

fn require_order(h: u32) -> Result<u32, CliError> {
    if h == 0 {
        return Err(CliError::Usage("--h must be at least 1".into()));
    }
    Ok(h)
}

fn run_verify(args: VerifyArgs) -> Result<(), CliError> {
    let h = require_order(args.h)?;
    let abs = args.abs.resolve()?;
    let points: Vec<Rational> = read_input_json(&args.io.input, &args.io.inline)?;
    let config = sidon::PointConfiguration::new(points.clone()).map_err(CliError::usage)?;

    let verdict = match args.method {
        Method::Bruteforce => sidon::verify_bruteforce(&config, h),
        Method::Hyperplane => sidon::verify_hyperplane(&config, h),
    };
    let verdict = verdict.enriched(&config).map_err(CliError::Domain)?;

    let report = reports::VerifyReport {
        request: reports::VerifyEcho {
            command: "verify",
            input: points,
            h,
            method: args.method.name(),
            abs,
        },
        verdict,
    };
    write_report(&args.io.output, &report)
}

fn run_perturb(args: PerturbArgs) -> Result<(), CliError> {
    let abs = args.abs.resolve()?;

    // The input may be a bare array (the sequence) or an object carrying
    // the sequence together with defaults for the other parameters; command
    // line flags take precedence over object fields.
    let object: Option<reports::PerturbInput> = if args.io.input.is_some() || args.io.inline.is_some() {
        let value: serde_json::Value = read_input_json(&args.io.input, &args.io.inline)?;
        if value.is_array() {
            let alpha: Vec<Rational> =
                serde_json::from_value(value).map_err(|e| CliError::Usage(e.to_string()))?;
            Some(reports::PerturbInput {
                alpha,
                epsilons: None,
                h: None,
                abs: None,
            })
        } else {
            Some(serde_json::from_value(value).map_err(|e| CliError::Usage(e.to_string()))?)
        }
    } else {
        None
    };

    let h = match (args.h, object.as_ref().and_then(|o| o.h)) {
        (Some(h), _) => h,
        (None, Some(h)) => h,
        (None, None) => return Err(CliError::Usage("--h is required".into())),
    };
    let h = require_order(h)?;
    let abs = match (&args.abs.p, args.abs.abs, object.as_ref().and_then(|o| o.abs.clone())) {
        // Flags left at their defaults defer to the object when it names one.
        (None, AbsKind::Archimedean, Some(from_object)) => from_object,
        _ => abs,
    };

    let parse_eps = |text: &str| -> Result<Magnitude, CliError> {
        let value: Rational = text.parse().map_err(CliError::usage)?;
        Magnitude::new(value).map_err(CliError::usage)
    };

    let constant_eps: Option<Magnitude> = args.eps.as_deref().map(parse_eps).transpose()?;
    let eps_list: Option<Vec<Magnitude>> = if let Some(path) = &args.eps_file {
        let values: Vec<Rational> = input::read_json_file(path)?;
        Some(
            values
                .into_iter()
                .map(|v| Magnitude::new(v).map_err(CliError::usage))
                .collect::<Result<_, _>>()?,
        )
    } else {
        object.as_ref().and_then(|o| o.epsilons.clone()).map(|values| {
            values
                .into_iter()
                .map(|v| Magnitude::new(v).map_err(CliError::usage))
                .collect::<Result<Vec<_>, _>>()
        }).transpose()?
    };

    let epsilon_at = |position: usize| -> Result<Magnitude, CliError> {
        if let Some(eps) = &constant_eps {
            return Ok(eps.clone());
        }
        if let Some(list) = &eps_list {
            return list.get(position - 1).cloned().ok_or_else(|| {
                CliError::Usage(format!(
                    "epsilon list has {} entries but position {position} is needed",
                    list.len()
                ))
            });
        }
        Err(CliError::Usage(
            "no displacement bounds: pass --eps, --eps-file, or an input object with epsilons".into(),
        ))
    };

    if args.stream {
        let count = args.count.expect("clap enforces --count with --stream") as usize;
        // Stream inputs come from the given sequence, or default to 0, 1, 2, ...
        let alpha: Vec<Rational> = match &object {
            Some(o) => {
                if o.alpha.len() < count {
                    return Err(CliError::Usage(format!(
                        "input provides {} values but --count {count} are needed",
                        o.alpha.len()
                    )));
                }
                o.alpha[..count].to_vec()
            }
            None => (0..count as i64).map(Rational::from).collect(),
        };
        let epsilons: Vec<Magnitude> = (1..=count)
            .map(epsilon_at)
            .collect::<Result<_, _>>()?;

        let mut stream = sidon::perturb_stream(
            alpha.iter().cloned(),
            |i| epsilons[i - 1].clone(),
            h,
            abs.clone(),
        )
        .allow_duplicate_inputs(args.allow_duplicates);
        let mut beta = Vec::with_capacity(count);
        for item in stream.by_ref() {
            beta.push(item.map_err(CliError::Domain)?);
        }
        let trace = stream.trace().to_vec();
        let report = reports::PerturbReport {
            request: reports::PerturbEcho {
                command: "perturb",
                alpha,
                epsilons,
                h,
                abs,
                stream: true,
                allow_duplicates: args.allow_duplicates,
            },
            beta,
            trace,
        };
        return write_report(&args.io.output, &report);
    }

    let alpha = object
        .map(|o| o.alpha)
        .ok_or_else(|| CliError::Usage("perturb needs an input sequence (--input or --inline)".into()))?;
    let epsilons: Vec<Magnitude> = (1..=alpha.len())
        .map(epsilon_at)
        .collect::<Result<_, _>>()?;
    let plan = PerturbationPlan::new(epsilons.clone(), h, abs.clone())
        .map_err(CliError::usage)?
        .allow_duplicate_inputs(args.allow_duplicates);
    let (beta, trace) = sidon::perturb_sequence(&alpha, &plan).map_err(|e| match e {
        // Bad input values are request problems, not execution failures.
        Error::DuplicateElement { .. } | Error::InvalidPlan(_) => CliError::Usage(e.to_string()),
        other => CliError::Domain(other),
    })?;

    let report = reports::PerturbReport {
        request: reports::PerturbEcho {
            command: "perturb",
            alpha,
            epsilons,
            h,
            abs,
            stream: false,
            allow_duplicates: args.allow_duplicates,
        },
        beta,
        trace,
    };
    write_report(&args.io.output, &report)
}

fn run_weights(args: WeightsArgs) -> Result<(), CliError> {
    let h = require_order(args.h)?;
    if args.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let weights = sidon::enumerate_weight_vectors(args.k, h, args.canonical);
    let report = reports::WeightsReport {
        request: reports::WeightsEcho {
            command: "weights",
            k: args.k,
            h,
            canonical: args.canonical,
        },
        count: weights.len(),
        weights,
    };
    write_report(&args.io.output, &report)
}

fn run_sumset(args: SumsetArgs) -> Result<(), CliError> {
    let input: sidon::FiniteSet = read_input_json(&args.io.input, &args.io.inline)?;
    let parse = |name: &str, text: &Option<String>| -> Result<Rational, CliError> {
        text.as_deref()
            .ok_or_else(|| CliError::Usage(format!("--op {} requires --{name}", args.op.name())))?
            .parse()
            .map_err(CliError::usage)
    };
    let need = |name: &str, value: Option<u32>| -> Result<u32, CliError> {
        value.ok_or_else(|| CliError::Usage(format!("--op {} requires --{name}", args.op.name())))
    };

    let result = match args.op {
        SetOp::Translate => sidon::translate(&input, &parse("c", &args.c)?),
        SetOp::Dilate => sidon::dilate(&parse("c", &args.c)?, &input),
        SetOp::Hsum => sidon::h_fold_sumset(&input, need("h", args.h)?),
        SetOp::RsDiff => {
            sidon::r_s_sum_difference(&input, need("r", args.r)?, need("s", args.s)?)
        }
        SetOp::Shifted => sidon::shifted_sumset(
            &input,
            &parse("b", &args.b)?,
            need("r", args.r)?,
            need("h", args.h)?,
        )
        .map_err(CliError::usage)?,
    };

    let report = reports::SumsetReport {
        request: reports::SumsetEcho {
            command: "sumset",
            op: args.op.name(),
            input,
            c: args.c,
            b: args.b,
            h: args.h,
            r: args.r,
            s: args.s,
        },
        result,
    };
    write_report(&args.io.output, &report)
}

fn run_density(args: DensityArgs) -> Result<(), CliError> {
    let h = require_order(args.h)?;
    let kind = SamplerSpec::parse_kind(&args.sampler).map_err(CliError::usage)?;

    let report = if args.exact {
        let n = match kind {
            sidon::SamplerKind::UniformIntegerGrid { n } => n,
            sidon::SamplerKind::RandomRational { .. } => {
                return Err(CliError::Usage(
                    "--exact requires a grid:<N> sampler".into(),
                ))
            }
        };
        sidon::exact_grid_density(n, args.k, h).map_err(CliError::Domain)?
    } else {
        let trials = args
            .trials
            .ok_or_else(|| CliError::Usage("--trials is required unless --exact is set".into()))?;
        let spec = SamplerSpec {
            kind,
            seed: args.seed,
        };
        sidon::sidon_density(args.k, h, trials, &spec).map_err(CliError::Domain)?
    };

    if args.format == Format::Csv {
        // One row per run: k,h,trials,sidon_count,fraction,seed,sampler.
        let row = format!(
            "{},{},{},{},{},{},{}\n",
            report.k, report.h, report.trials, report.sidon_count, report.fraction, report.seed, report.sampler
        );
        return reports::write_text(&args.io.output, &row);
    }

    let full = reports::DensityCliReport {
        request: reports::DensityEcho {
            command: "density",
            k: args.k,
            h,
            trials: args.trials,
            sampler: args.sampler.clone(),
            seed: args.seed,
            exact: args.exact,
        },
        report,
    };
    write_report(&args.io.output, &full)
}
