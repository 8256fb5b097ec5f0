//! Command-line surface: `fit`, `simulate`, `mc-bias`, and `compare-orders`.
//!
//! Exit codes: 0 success, 1 usage/config/total failure, 2 partial per-series
//! failure, 3 failed `--assert`. Every error path prints one
//! machine-parsable line `error[CODE]: message` to stderr.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use trigfit_core::{
    beta_to_amp_phase, compare_orders, design_matrix, fit_glm, fit_lognormal, fit_ols,
    missing_data_policy, nyquist_check, run_mc_bias, DesignSpec, FitError, GGShape, GGSpec,
    GammaLog, GlmControl, MCConfig, Method, ModelKind, RngStream, Series,
};

use crate::report::{
    comparison_to_csv, fit_results_to_csv, mc_results_to_csv, ComparisonDto, ExclusionDto,
    FitDto, McResultsDto, Report, SCHEMA_VERSION,
};
use crate::table::{ingest_csv, IngestOptions, TableError};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARTIAL: i32 = 2;
pub const EXIT_ASSERT: i32 = 3;

/// Master seed used when neither `--seed` nor `TRIGFIT_SEED` is set.
pub const DEFAULT_SEED: u64 = 20260809;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Parse(#[from] TableError),
    #[error("config schema_version {found} is not supported (expected {SCHEMA_VERSION})")]
    SchemaVersion { found: u32 },
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Run(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "E_USAGE",
            CliError::Io(_) => "E_IO",
            CliError::Parse(_) => "E_PARSE",
            CliError::SchemaVersion { .. } => "E_SCHEMA",
            CliError::Config(_) => "E_CONFIG",
            CliError::Run(_) => "E_RUN",
        }
    }
}

fn fit_error_code(e: &FitError) -> &'static str {
    match e {
        FitError::NonPositiveResponse { .. } => "E_NONPOSITIVE",
        FitError::RankDeficientDesign => "E_RANKDEF",
        FitError::NotConverged { .. } => "E_NOTCONVERGED",
        FitError::InsufficientSamples { .. } => "E_INSUFFICIENT",
        _ => "E_FIT",
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "trigfit",
    version,
    about = "Trigonometric regression for periodic data: OLS, log-normal, and gamma-GLM fits, \
             generalized gamma simulation, and Monte Carlo bias reports"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit per-series trigonometric regression models from a CSV table.
    Fit(FitArgs),
    /// Simulate generalized gamma datasets in the ingest CSV schema.
    Simulate(SimulateArgs),
    /// Monte Carlo bias study against the closed-form expectations.
    McBias(McBiasArgs),
    /// Fit each series at several orders and flag cross-order agreement.
    CompareOrders(CompareArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelArg {
    Ols,
    Lognormal,
    #[value(name = "gamma-glm", alias = "gamma-glm-log")]
    GammaGlm,
}

impl ModelArg {
    fn kind(&self) -> ModelKind {
        match self {
            ModelArg::Ols => ModelKind::Ols,
            ModelArg::Lognormal => ModelKind::Lognormal,
            ModelArg::GammaGlm => ModelKind::GammaGlmLog,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// CSV file with header `series,time,value`.
    #[arg(long)]
    pub input: PathBuf,
    /// Oscillation period (time units); sets omega = 2*pi/period.
    #[arg(long, conflicts_with = "omega")]
    pub period: Option<f64>,
    /// Angular frequency in radians per time unit.
    #[arg(long)]
    pub omega: Option<f64>,
    /// Model order K (number of harmonics).
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputFormat,
    /// Also report coefficients as amplitudes and phase shifts.
    #[arg(long)]
    pub amp_phase: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// True coefficients, comma separated: `b0,b1,...,b2K` (odd count).
    #[arg(long)]
    pub beta_star: String,
    #[arg(long)]
    pub kappa: f64,
    #[arg(long)]
    pub rho: f64,
    /// Samples per series (equispaced over one period).
    #[arg(long)]
    pub n: usize,
    #[arg(long, conflicts_with = "omega")]
    pub period: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    /// Master seed; falls back to TRIGFIT_SEED, then a fixed default.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of replicate series (stream ids 0..reps).
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct McBiasArgs {
    /// JSON config file; mutually exclusive with the DGP flags.
    #[arg(long, conflicts_with_all = ["beta_star", "kappa", "rho", "n", "fit_order", "reps", "period", "omega", "methods"])]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub beta_star: Option<String>,
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub fit_order: Option<usize>,
    /// Replicate count R.
    #[arg(long)]
    pub reps: Option<usize>,
    #[arg(long, conflicts_with = "omega")]
    pub period: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    /// Comma-separated subset of ols,lognormal,gamma-glm.
    #[arg(long)]
    pub methods: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputFormat,
    /// Exit 3 unless the hard assertions hold.
    #[arg(long)]
    pub assert: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, conflicts_with = "omega")]
    pub period: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    /// Comma-separated list of orders, e.g. `2,5`.
    #[arg(long)]
    pub orders: String,
    /// Comma-separated methods (default lognormal,gamma-glm).
    #[arg(long, default_value = "lognormal,gamma-glm")]
    pub models: String,
    /// Cross-order agreement tolerance on shared harmonic coefficients.
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputFormat,
    /// Exit 3 unless the log-normal order-invariance holds for every series.
    #[arg(long)]
    pub assert: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Fit(args) => cmd_fit(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::McBias(args) => cmd_mc_bias(args),
        Command::CompareOrders(args) => cmd_compare_orders(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            report_error(&e);
            EXIT_FAILURE
        }
    }
}

pub fn report_error(e: &CliError) {
    let text = e.to_string().replace('\n', " ");
    eprintln!("error[{}]: {}", e.code(), text);
}

fn resolve_omega(period: Option<f64>, omega: Option<f64>) -> Result<(Option<f64>, f64), CliError> {
    match (period, omega) {
        (Some(p), None) if p.is_finite() && p > 0.0 => {
            Ok((Some(p), 2.0 * std::f64::consts::PI / p))
        }
        (Some(p), None) => Err(CliError::Usage(format!("--period must be positive, got {p}"))),
        (None, Some(w)) if w.is_finite() && w > 0.0 => Ok((None, w)),
        (None, Some(w)) => Err(CliError::Usage(format!("--omega must be positive, got {w}"))),
        (None, None) => Err(CliError::Usage("one of --period or --omega is required".into())),
        (Some(_), Some(_)) => {
            Err(CliError::Usage("--period and --omega are mutually exclusive".into()))
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("TRIGFIT_SEED") {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Usage(format!("TRIGFIT_SEED `{text}` is not a valid unsigned seed"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SEED),
        Err(_) => Err(CliError::Usage("TRIGFIT_SEED is not valid unicode".into())),
    }
}

fn parse_f64_list(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("{what}: `{s}` is not a number")))
        })
        .collect()
}

fn parse_methods(text: &str) -> Result<Vec<Method>, CliError> {
    text.split(',')
        .map(|s| {
            Method::parse(s.trim())
                .ok_or_else(|| CliError::Usage(format!("unknown method `{s}`")))
        })
        .collect()
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())
                .and_then(|_| lock.flush())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

fn load_series(path: &Path) -> Result<(Vec<Series>, Vec<ExclusionDto>), CliError> {
    let table = ingest_csv(path, &IngestOptions::default())?;
    let (series, excluded) = missing_data_policy(table.into_series());
    Ok((series, excluded.into_iter().map(ExclusionDto::from).collect()))
}

#[derive(Debug, Serialize)]
struct FitConfigDto {
    input: String,
    period: Option<f64>,
    omega: f64,
    order: usize,
    model: &'static str,
    amp_phase: bool,
}

fn cmd_fit(args: FitArgs) -> Result<i32, CliError> {
    let (period, omega) = resolve_omega(args.period, args.omega)?;
    if args.order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let (series, mut exclusions) = load_series(&args.input)?;
    let model = args.model.kind();

    let mut fits: Vec<FitDto> = Vec::new();
    let mut failures = 0usize;
    for s in &series {
        let check = nyquist_check(s.values.len(), args.order);
        let outcome = if !check.pass {
            Err(("E_NYQUIST", check.to_string()))
        } else {
            DesignSpec::new(s.times.clone(), omega, args.order)
                .map_err(|e| ("E_FIT", e.to_string()))
                .and_then(|spec| {
                    let basis = design_matrix(&spec);
                    let fit = match model {
                        ModelKind::Ols => fit_ols(&basis, &s.values),
                        ModelKind::Lognormal => fit_lognormal(&basis, &s.values),
                        ModelKind::GammaGlmLog => {
                            fit_glm(&basis, &s.values, &GammaLog, &GlmControl::default())
                        }
                    };
                    fit.map_err(|e| (fit_error_code(&e), e.to_string()))
                })
        };
        match outcome {
            Ok(fit) => {
                let amp_phase = if args.amp_phase {
                    Some(beta_to_amp_phase(&fit.beta_hat).expect("odd coefficient count"))
                } else {
                    None
                };
                fits.push(FitDto::new(&s.id, &fit, amp_phase.as_ref()));
            }
            Err((code, message)) => {
                failures += 1;
                eprintln!("error[{code}]: series {}: {message}", s.id);
                exclusions.push(ExclusionDto {
                    id: s.id.clone(),
                    reason: format!("[{code}] {message}"),
                });
            }
        }
    }

    let config = FitConfigDto {
        input: args.input.display().to_string(),
        period,
        omega,
        order: args.order,
        model: model.as_str(),
        amp_phase: args.amp_phase,
    };
    let text = match args.output {
        OutputFormat::Json => Report::new("fit", config, &fits, exclusions).to_json(),
        OutputFormat::Csv => fit_results_to_csv(&fits, args.order, args.amp_phase),
    };
    emit(&args.out, &text)?;

    Ok(if failures == 0 {
        EXIT_SUCCESS
    } else if fits.is_empty() {
        EXIT_FAILURE
    } else {
        EXIT_PARTIAL
    })
}

fn cmd_simulate(args: SimulateArgs) -> Result<i32, CliError> {
    let (_, omega) = resolve_omega(args.period, args.omega)?;
    let beta_star = parse_f64_list(&args.beta_star, "--beta-star")?;
    let shape = GGShape::new(args.kappa, args.rho)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let gg = GGSpec::new(beta_star, omega, shape).map_err(|e| CliError::Usage(e.to_string()))?;
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let seed = resolve_seed(args.seed)?;

    let mut series = Vec::with_capacity(args.reps);
    for r in 0..args.reps {
        let mut stream = RngStream::new(seed, r as u64);
        let (times, values) = trigfit_core::simulate_dataset(&mut stream, &gg, args.n)
            .map_err(|e| CliError::Config(e.to_string()))?;
        series.push((format!("rep{:04}", r + 1), times, values));
    }
    let mut buf = Vec::new();
    crate::table::write_dataset(&mut buf, &series)
        .map_err(|e| CliError::Io(e.to_string()))?;
    emit(&args.out, &String::from_utf8(buf).expect("ascii output"))?;
    Ok(EXIT_SUCCESS)
}

/// JSON config document for `mc-bias`; `schema_version` is mandatory.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct McConfigFile {
    schema_version: u32,
    beta_star: Vec<f64>,
    kappa: f64,
    rho: f64,
    #[serde(default)]
    period: Option<f64>,
    #[serde(default)]
    omega: Option<f64>,
    n: usize,
    replicates: usize,
    fit_order: usize,
    methods: Vec<String>,
    #[serde(default)]
    master_seed: Option<u64>,
    #[serde(default)]
    pass_se_multiple: Option<f64>,
    #[serde(default)]
    bias_se_multiple: Option<f64>,
}

#[derive(Debug, Serialize)]
struct McConfigDto {
    beta_star: Vec<f64>,
    kappa: f64,
    rho: f64,
    omega: f64,
    n: usize,
    replicates: usize,
    fit_order: usize,
    methods: Vec<&'static str>,
    master_seed: u64,
    pass_se_multiple: f64,
    bias_se_multiple: f64,
}

/// The built-in study: the order-2 generalized gamma process fitted one
/// order short, log-normal vs gamma GLM.
fn default_mc_dgp() -> (Vec<f64>, f64, f64, f64, usize, usize, usize, Vec<Method>) {
    (
        vec![1.0, 0.5, 0.5, 0.8, 0.3],
        2.0,
        1.0,
        2.0 * std::f64::consts::PI / 24.0,
        12,
        5000,
        1,
        vec![Method::Lognormal, Method::GammaGlmLog],
    )
}

fn mc_config_from_args(args: &McBiasArgs) -> Result<MCConfig, CliError> {
    let mut pass_se_multiple = MCConfig::DEFAULT_PASS_SE_MULTIPLE;
    let mut bias_se_multiple = MCConfig::DEFAULT_BIAS_SE_MULTIPLE;
    let (beta_star, kappa, rho, omega, n, replicates, fit_order, methods, seed_from_file) =
        if let Some(path) = &args.config {
            let text = std::fs::File::open(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
                .and_then(|f| {
                    std::io::read_to_string(f)
                        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
                })?;
            let file: McConfigFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Config(format!("invalid config JSON: {e}")))?;
            if file.schema_version != SCHEMA_VERSION {
                return Err(CliError::SchemaVersion { found: file.schema_version });
            }
            let (_, omega) = resolve_omega(file.period, file.omega)
                .map_err(|_| CliError::Config("config needs exactly one of period/omega".into()))?;
            let methods = file
                .methods
                .iter()
                .map(|m| {
                    Method::parse(m)
                        .ok_or_else(|| CliError::Config(format!("unknown method `{m}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(m) = file.pass_se_multiple {
                pass_se_multiple = m;
            }
            if let Some(m) = file.bias_se_multiple {
                bias_se_multiple = m;
            }
            (
                file.beta_star,
                file.kappa,
                file.rho,
                omega,
                file.n,
                file.replicates,
                file.fit_order,
                methods,
                file.master_seed,
            )
        } else {
            let defaults = default_mc_dgp();
            let beta_star = match &args.beta_star {
                Some(text) => parse_f64_list(text, "--beta-star")?,
                None => defaults.0,
            };
            let omega = if args.period.is_some() || args.omega.is_some() {
                resolve_omega(args.period, args.omega)?.1
            } else {
                defaults.3
            };
            let methods = match &args.methods {
                Some(text) => parse_methods(text)?,
                None => defaults.7,
            };
            (
                beta_star,
                args.kappa.unwrap_or(defaults.1),
                args.rho.unwrap_or(defaults.2),
                omega,
                args.n.unwrap_or(defaults.4),
                args.reps.unwrap_or(defaults.5),
                args.fit_order.unwrap_or(defaults.6),
                methods,
                None,
            )
        };

    let shape = GGShape::new(kappa, rho).map_err(|e| CliError::Config(e.to_string()))?;
    let gg = GGSpec::new(beta_star, omega, shape).map_err(|e| CliError::Config(e.to_string()))?;
    Ok(MCConfig {
        gg,
        n,
        replicates,
        fit_order,
        methods,
        master_seed: resolve_seed(args.seed.or(seed_from_file))?,
        pass_se_multiple,
        bias_se_multiple,
    })
}

fn cmd_mc_bias(args: McBiasArgs) -> Result<i32, CliError> {
    let config = mc_config_from_args(&args)?;
    let report = run_mc_bias(&config).map_err(|e| CliError::Run(e.to_string()))?;
    let results = McResultsDto::from(&report);
    let assertions_hold = report.hard_assertions_hold();

    let config_dto = McConfigDto {
        beta_star: config.gg.beta_star().to_vec(),
        kappa: config.gg.shape().kappa(),
        rho: config.gg.shape().rho(),
        omega: config.gg.omega(),
        n: config.n,
        replicates: config.replicates,
        fit_order: config.fit_order,
        methods: config.methods.iter().map(Method::as_str).collect(),
        master_seed: config.master_seed,
        pass_se_multiple: config.pass_se_multiple,
        bias_se_multiple: config.bias_se_multiple,
    };
    let text = match args.output {
        OutputFormat::Json => Report::new("mc-bias", config_dto, &results, Vec::new()).to_json(),
        OutputFormat::Csv => mc_results_to_csv(&results),
    };
    emit(&args.out, &text)?;

    if args.assert && !assertions_hold {
        eprintln!("error[E_ASSERT]: hard assertions failed (see report pass flags)");
        return Ok(EXIT_ASSERT);
    }
    Ok(EXIT_SUCCESS)
}

#[derive(Debug, Serialize)]
struct CompareConfigDto {
    input: String,
    period: Option<f64>,
    omega: f64,
    orders: Vec<usize>,
    methods: Vec<&'static str>,
    tolerance: f64,
}

fn cmd_compare_orders(args: CompareArgs) -> Result<i32, CliError> {
    let (period, omega) = resolve_omega(args.period, args.omega)?;
    let orders = args
        .orders
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("--orders: `{s}` is not an order")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let methods = parse_methods(&args.models)?;
    let (series, exclusions) = load_series(&args.input)?;

    let table = compare_orders(&series, omega, &orders, &methods, args.tolerance)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let results = ComparisonDto::from(&table);

    for s in &table.series {
        for cell in &s.fits {
            if let Err(message) = &cell.result {
                eprintln!(
                    "error[E_FIT]: series {} order {} {}: {message}",
                    s.id, cell.order, cell.method
                );
            }
        }
    }

    let config = CompareConfigDto {
        input: args.input.display().to_string(),
        period,
        omega,
        orders: orders.clone(),
        methods: methods.iter().map(Method::as_str).collect(),
        tolerance: args.tolerance,
    };
    let text = match args.output {
        OutputFormat::Json => {
            Report::new("compare-orders", config, &results, exclusions).to_json()
        }
        OutputFormat::Csv => comparison_to_csv(&results),
    };
    emit(&args.out, &text)?;

    if args.assert && !table.hard_assertions_hold() {
        eprintln!("error[E_ASSERT]: log-normal order-invariance failed for at least one series");
        return Ok(EXIT_ASSERT);
    }
    let failed = table.series.iter().filter(|s| !s.all_fits_ok()).count();
    Ok(if failed == 0 {
        EXIT_SUCCESS
    } else if failed == table.series.len() && !table.series.is_empty() {
        EXIT_FAILURE
    } else {
        EXIT_PARTIAL
    })
}
