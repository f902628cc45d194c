use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use hodokit::relativistic::classify;
use hodokit::trajectory::{
    classify_orbit, default_spacing, default_window, deflection_angle, sample_trajectory, select_interval,
    trajectory_report,
};
use hodokit::verify::{run_suite, worst_failure, Suite, Tolerances, VerifyRow};
use hodokit::{AngularInterval, HodoError, OrbitClass, Regime};
use serde::{Deserialize, Serialize};

use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::{num, samples_csv, samples_json, samples_svg, SampleRow};

/// What `classify` prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyReport {
    pub regime: Regime,
    pub orbit_class: OrbitClass,
    /// `beta` (time-like) or `beta_bar` (space-like); null when light-like.
    pub beta_or_betabar: Option<f64>,
    #[serde(rename = "B_o_or_A_o")]
    pub b_o_or_a_o: Option<f64>,
    #[serde(rename = "Lambda")]
    pub lambda: f64,
    pub theta_infinity: Option<f64>,
    pub psi_infinity: Option<f64>,
    pub theta_intervals: Vec<AngularInterval>,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub closed_orbit: Option<(u64, u64)>,
    pub deflection_angle: Option<f64>,
}

pub fn classify_report(cfg: &RunConfig) -> CliResult<ClassifyReport> {
    let p = cfg.params()?;
    let report = trajectory_report(&p, cfg.branch())?;
    Ok(ClassifyReport {
        regime: report.regime,
        orbit_class: report.orbit_class,
        beta_or_betabar: p.beta().or(p.beta_bar()),
        b_o_or_a_o: p.b_o().or(p.a_o()),
        lambda: p.lambda(),
        theta_infinity: report.theta_infinity,
        psi_infinity: report.psi_infinity,
        theta_intervals: report.theta_intervals,
        r_min: Some(report.r_min),
        r_max: report.r_max,
        closed_orbit: report.closed_orbit,
        deflection_angle: deflection_angle(&p).ok(),
    })
}

pub fn cmd_classify(cfg: &RunConfig) -> CliResult<String> {
    let report = classify_report(cfg)?;
    let mut s = serde_json::to_string_pretty(&report).expect("plain data serializes");
    s.push('\n');
    Ok(s)
}

fn sampling_window(cfg: &RunConfig) -> CliResult<AngularInterval> {
    let p = cfg.params()?;
    let branch = cfg.branch();
    if cfg.theta_min.is_none() && cfg.theta_max.is_none() {
        return Ok(default_window(&p, branch)?);
    }
    let fallback = default_window(&p, branch)?;
    let window = AngularInterval::new(
        cfg.theta_min.unwrap_or(fallback.lo),
        cfg.theta_max.unwrap_or(fallback.hi),
    )?;
    if !window.is_finite() {
        return Err(HodoError::NonFinite("theta window").into());
    }
    let admissible = select_interval(&p, branch)?;
    if !(admissible.contains(window.lo) && admissible.contains(window.hi)) {
        return Err(CliError::Config(format!(
            "window [{}, {}] leaves the admissible interval ({}, {})",
            window.lo, window.hi, admissible.lo, admissible.hi
        )));
    }
    Ok(window)
}

pub fn sample_rows(cfg: &RunConfig) -> CliResult<Vec<SampleRow>> {
    let p = cfg.params()?;
    let class = classify_orbit(&p, cfg.branch())?;
    let window = sampling_window(cfg)?;
    let spacing = cfg.spacing.map(Into::into).unwrap_or_else(|| default_spacing(class));
    let samples = sample_trajectory(&p, &window, cfg.samples()?, spacing)?;
    Ok(samples.iter().map(SampleRow::from).collect())
}

pub fn cmd_sample(cfg: &RunConfig) -> CliResult<String> {
    let rows = sample_rows(cfg)?;
    Ok(match cfg.format.unwrap_or_default() {
        Format::Csv => samples_csv(&rows),
        Format::Json => samples_json(&rows),
        Format::Svg => samples_svg(&rows),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Norms,
    Energy,
    Oracle,
    Gradient,
    Limits,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Norms => Suite::Norms,
            SuiteArg::Energy => Suite::Energy,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Gradient => Suite::Gradient,
            SuiteArg::Limits => Suite::Limits,
            SuiteArg::All => Suite::All,
        }
    }
}

fn verify_table(rows: &[VerifyRow]) -> String {
    let mut out = format!("{:<9} {:<30} {:<46} {:>11} {:>10}  result\n", "suite", "case", "metric", "value", "threshold");
    for r in rows {
        out += &format!(
            "{:<9} {:<30} {:<46} {:>11.3e} {:>10.1e}  {}\n",
            r.suite,
            r.case,
            r.metric,
            r.value,
            r.threshold,
            if r.passed { "PASS" } else { "FAIL" }
        );
    }
    out
}

/// Runs `suite` and returns the table; an error carries the worst offender.
pub fn cmd_verify(suite: SuiteArg, tolerance: Option<f64>, out: &mut dyn Write) -> CliResult<()> {
    let tol = match tolerance {
        Some(t) => Tolerances { global: Some(t) },
        None => Tolerances::from_env()?,
    };
    let rows = run_suite(suite.into(), &tol);
    let table = verify_table(&rows);
    let passed = rows.iter().filter(|r| r.passed).count();
    writeln!(out, "{table}{passed}/{} checks passed", rows.len()).map_err(|source| CliError::Write {
        path: "<stdout>".into(),
        source,
    })?;
    match worst_failure(&rows) {
        None => Ok(()),
        Some(w) => Err(CliError::Verification(format!(
            "worst offender {} / {} / {}: {:e} (threshold {:e})",
            w.suite, w.case, w.metric, w.value, w.threshold
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    #[value(name = "E")]
    Energy,
    Kappa,
    Ell,
}

pub const SWEEP_HEADER: &str = "param,regime,orbit_class,theta_infinity,r_min,r_max,note";

fn class_label(c: OrbitClass) -> String {
    match c {
        OrbitClass::ClosedBound { p, q } => format!("ClosedBound({p}:{q})"),
        other => format!("{other:?}"),
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn csv_safe(s: String) -> String {
    s.replace([',', '\n'], ";")
}

pub fn cmd_sweep(cfg: &RunConfig, param: SweepParam, from: f64, to: f64, steps: usize) -> CliResult<String> {
    if steps < 2 {
        return Err(CliError::Config(format!("steps must be at least 2, got {steps}")));
    }
    if !(from.is_finite() && to.is_finite()) {
        return Err(HodoError::NonFinite("sweep range").into());
    }
    let mut base = cfg.clone();
    if param == SweepParam::Ell {
        // hold kappa fixed while ell moves
        if let Some(r) = base.kappa_over_ell.take() {
            base.kappa = Some(r * base.ell.unwrap_or(1.0));
        }
    }
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    let mut previous: Option<Regime> = None;
    for i in 0..steps {
        let v = from + (to - from) * i as f64 / (steps - 1) as f64;
        let mut c = base.clone();
        match param {
            SweepParam::Energy => {
                c.energy = Some(v);
                c.e_over_m = None;
            }
            SweepParam::Kappa => {
                c.kappa = Some(v);
                c.kappa_over_ell = None;
            }
            SweepParam::Ell => c.ell = Some(v),
        }
        let mut notes = Vec::new();
        let row = match c.params() {
            Err(e) => {
                notes.push(e.to_string());
                format!("{},,,,,", num(v))
            }
            Ok(p) => {
                let regime = classify(&p).regime;
                if let Some(prev) = previous.filter(|&r| r != regime) {
                    notes.push(format!("regime {prev:?} -> {regime:?}"));
                }
                previous = Some(regime);
                match trajectory_report(&p, c.branch()) {
                    Ok(r) => {
                        if r.orbit_class == OrbitClass::CircularBound {
                            notes.push("Lambda = 0: r_min = r_max".into());
                        }
                        format!(
                            "{},{regime:?},{},{},{},{}",
                            num(v),
                            class_label(r.orbit_class),
                            opt(r.theta_infinity),
                            num(r.r_min),
                            opt(r.r_max)
                        )
                    }
                    Err(e) => {
                        notes.push(e.to_string());
                        format!("{},{regime:?},,,,", num(v))
                    }
                }
            }
        };
        out += &format!("{row},{}\n", csv_safe(notes.join("; ")));
    }
    Ok(out)
}

/// Writes `text` to `path`, or to stdout when no path is set.
pub fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Write { path: p.to_owned(), source }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write { path: "<stdout>".into(), source }),
    }
}
