//! Report serialization. Every command emits the same JSON envelope
//! `{schema_version, command, config, results, exclusions}` with stable key
//! order (struct declaration order), so byte-level diffs are valid
//! regression checks.

use serde::Serialize;
use trigfit_core::{
    AmpPhase, ComparisonTable, FitResult, MCReport, Method, MethodReport, PolicyExclusion,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report<C: Serialize, R: Serialize> {
    pub schema_version: u32,
    pub command: &'static str,
    pub config: C,
    pub results: R,
    pub exclusions: Vec<ExclusionDto>,
}

impl<C: Serialize, R: Serialize> Report<C, R> {
    pub fn new(command: &'static str, config: C, results: R, exclusions: Vec<ExclusionDto>) -> Self {
        Self { schema_version: SCHEMA_VERSION, command, config, results, exclusions }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serialization");
        text.push('\n');
        text
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExclusionDto {
    pub id: String,
    pub reason: String,
}

impl From<PolicyExclusion> for ExclusionDto {
    fn from(e: PolicyExclusion) -> Self {
        Self { id: e.id, reason: e.reason }
    }
}

#[derive(Debug, Serialize)]
pub struct HarmonicDto {
    pub amplitude: f64,
    pub phase: f64,
    pub phase_defined: bool,
}

#[derive(Debug, Serialize)]
pub struct AmpPhaseDto {
    pub midline: f64,
    pub harmonics: Vec<HarmonicDto>,
}

impl From<&AmpPhase> for AmpPhaseDto {
    fn from(ap: &AmpPhase) -> Self {
        Self {
            midline: ap.midline,
            harmonics: ap
                .harmonics
                .iter()
                .map(|h| HarmonicDto {
                    amplitude: h.amplitude,
                    phase: h.phase,
                    phase_defined: h.phase_defined,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FitDto {
    pub series: String,
    pub n: usize,
    pub model: &'static str,
    pub order: usize,
    pub converged: bool,
    pub iterations: usize,
    pub beta_hat: Vec<f64>,
    pub sigma2_hat: Option<f64>,
    pub dispersion_hat: Option<f64>,
    pub deviance: Option<f64>,
    pub covariance: Option<Vec<Vec<f64>>>,
    /// `log` for the log-normal model, `response` otherwise.
    pub fitted_scale: &'static str,
    pub fitted_values: Vec<f64>,
    pub residuals: Vec<f64>,
    pub amp_phase: Option<AmpPhaseDto>,
}

impl FitDto {
    pub fn new(series: &str, fit: &FitResult, amp_phase: Option<&AmpPhase>) -> Self {
        Self {
            series: series.to_string(),
            n: fit.residuals.len(),
            model: fit.model_kind.as_str(),
            order: fit.order(),
            converged: fit.converged,
            iterations: fit.iterations,
            beta_hat: fit.beta_hat.clone(),
            sigma2_hat: fit.sigma2_hat,
            dispersion_hat: fit.dispersion_hat,
            deviance: fit.deviance,
            covariance: fit.covariance.as_ref().map(|c| c.to_rows()),
            fitted_scale: match fit.model_kind {
                trigfit_core::ModelKind::Lognormal => "log",
                _ => "response",
            },
            fitted_values: fit.fitted_values.clone(),
            residuals: fit.residuals.clone(),
            amp_phase: amp_phase.map(AmpPhaseDto::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CoefficientDto {
    pub index: usize,
    pub mean: f64,
    pub mc_se: f64,
    pub predicted: Option<f64>,
    pub z: Option<f64>,
    pub passed: Option<bool>,
    pub bias_detected: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct MethodReportDto {
    pub method: &'static str,
    pub replicates_used: usize,
    pub excluded_replicates: Vec<usize>,
    pub coefficients: Vec<CoefficientDto>,
}

impl From<&MethodReport> for MethodReportDto {
    fn from(m: &MethodReport) -> Self {
        Self {
            method: m.method.as_str(),
            replicates_used: m.replicates_used,
            excluded_replicates: m.excluded.clone(),
            coefficients: m
                .coefficients
                .iter()
                .map(|c| CoefficientDto {
                    index: c.index,
                    mean: c.mean,
                    mc_se: c.mc_se,
                    predicted: c.predicted,
                    z: c.z,
                    passed: c.passed,
                    bias_detected: c.bias_detected,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct McResultsDto {
    pub master_seed: u64,
    /// FNV-1a of the canonical config encoding, hex to stay JS-safe.
    pub config_hash: String,
    pub replicates: usize,
    pub n: usize,
    pub fit_order: usize,
    pub order_star: usize,
    pub pass_se_multiple: f64,
    pub bias_se_multiple: f64,
    pub methods: Vec<MethodReportDto>,
    pub hard_assertions_hold: bool,
}

impl From<&MCReport> for McResultsDto {
    fn from(r: &MCReport) -> Self {
        Self {
            master_seed: r.master_seed,
            config_hash: format!("{:016x}", r.config_hash),
            replicates: r.replicates,
            n: r.n,
            fit_order: r.fit_order,
            order_star: r.order_star,
            pass_se_multiple: r.pass_se_multiple,
            bias_se_multiple: r.bias_se_multiple,
            methods: r.methods.iter().map(MethodReportDto::from).collect(),
            hard_assertions_hold: r.hard_assertions_hold(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FitCellDto {
    pub order: usize,
    pub method: &'static str,
    pub ok: bool,
    pub beta_hat: Option<Vec<f64>>,
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct SeriesComparisonDto {
    pub series: String,
    pub n: usize,
    pub fits: Vec<FitCellDto>,
    pub lognormal_invariant: Option<bool>,
    pub glm_order_dependent: Option<bool>,
    pub lt_glm_top_agree: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct ComparisonDto {
    pub orders: Vec<usize>,
    pub methods: Vec<&'static str>,
    pub tolerance: f64,
    pub agreement_tolerance: f64,
    pub series: Vec<SeriesComparisonDto>,
    pub hard_assertions_hold: bool,
}

impl From<&ComparisonTable> for ComparisonDto {
    fn from(t: &ComparisonTable) -> Self {
        Self {
            orders: t.orders.clone(),
            methods: t.methods.iter().map(Method::as_str).collect(),
            tolerance: t.tolerance,
            agreement_tolerance: t.agreement_tolerance,
            series: t
                .series
                .iter()
                .map(|s| SeriesComparisonDto {
                    series: s.id.clone(),
                    n: s.n,
                    fits: s
                        .fits
                        .iter()
                        .map(|f| FitCellDto {
                            order: f.order,
                            method: f.method.as_str(),
                            ok: f.result.is_ok(),
                            beta_hat: f.result.as_ref().ok().cloned(),
                            error: f.result.as_ref().err().cloned(),
                        })
                        .collect(),
                    lognormal_invariant: s.lognormal_invariant,
                    glm_order_dependent: s.glm_order_dependent,
                    lt_glm_top_agree: s.lt_glm_top_agree,
                })
                .collect(),
            hard_assertions_hold: t.hard_assertions_hold(),
        }
    }
}

fn csv_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_opt_bool(v: Option<bool>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// One row per series; beta columns then variance terms, amplitude/phase
/// columns appended when requested.
pub fn fit_results_to_csv(fits: &[FitDto], order: usize, amp_phase: bool) -> String {
    let mut out = String::from("series,model,order,converged,iterations");
    for j in 0..(2 * order + 1) {
        out.push_str(&format!(",beta{j}"));
    }
    out.push_str(",sigma2,dispersion,deviance");
    if amp_phase {
        for k in 1..=order {
            out.push_str(&format!(",amplitude{k},phase{k},phase{k}_defined"));
        }
    }
    out.push('\n');
    for fit in fits {
        out.push_str(&format!(
            "{},{},{},{},{}",
            fit.series, fit.model, fit.order, fit.converged, fit.iterations
        ));
        for b in &fit.beta_hat {
            out.push_str(&format!(",{b}"));
        }
        out.push_str(&format!(
            ",{},{},{}",
            csv_opt(fit.sigma2_hat),
            csv_opt(fit.dispersion_hat),
            csv_opt(fit.deviance)
        ));
        if amp_phase {
            if let Some(ap) = &fit.amp_phase {
                for h in &ap.harmonics {
                    out.push_str(&format!(",{},{},{}", h.amplitude, h.phase, h.phase_defined));
                }
            }
        }
        out.push('\n');
    }
    out
}

pub fn mc_results_to_csv(results: &McResultsDto) -> String {
    let mut out =
        String::from("method,coefficient,mean,mc_se,predicted,z,passed,bias_detected\n");
    for m in &results.methods {
        for c in &m.coefficients {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                m.method,
                c.index,
                c.mean,
                c.mc_se,
                csv_opt(c.predicted),
                csv_opt(c.z),
                csv_opt_bool(c.passed),
                csv_opt_bool(c.bias_detected),
            ));
        }
    }
    out
}

pub fn comparison_to_csv(results: &ComparisonDto) -> String {
    let max_order = results.orders.iter().copied().max().unwrap_or(0);
    let mut out = String::from("series,order,method,ok");
    for j in 0..(2 * max_order + 1) {
        out.push_str(&format!(",beta{j}"));
    }
    out.push_str(",error\n");
    for s in &results.series {
        for cell in &s.fits {
            out.push_str(&format!("{},{},{},{}", s.series, cell.order, cell.method, cell.ok));
            let beta = cell.beta_hat.as_deref().unwrap_or(&[]);
            for j in 0..(2 * max_order + 1) {
                match beta.get(j) {
                    Some(b) => out.push_str(&format!(",{b}")),
                    None => out.push(','),
                }
            }
            match &cell.error {
                Some(e) => out.push_str(&format!(",\"{}\"\n", e.replace('"', "\"\""))),
                None => out.push_str(",\n"),
            }
        }
    }
    out
}
