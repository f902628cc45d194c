//! Verification suites run over a fixed parameter matrix: three regimes,
//! both signs of the coupling, three energies each.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{HodoError, Result};
use crate::newtonian::{newtonian_hodograph_point, NewtonianParams};
use crate::ode::{integrate, standard_monitors, IntegratorConfig, Method};
use crate::relativistic::{energy_gradient, energy_residual, hodograph, Regime, SystemParams};
use crate::spacetime::{minkowski_dot, spatial_velocity, FourVector};
use crate::trajectory::{angular_range, default_window, theta_grid, Branch, Spacing};

/// Environment variable replacing every suite threshold.
pub const TOL_ENV: &str = "HODOKIT_TOL";

pub const NORM_TOL: f64 = 1e-12;
pub const ENERGY_TOL: f64 = 1e-12;
pub const ORACLE_TOL: f64 = 1e-8;
pub const DRIFT_TOL: f64 = 1e-9;
pub const GRADIENT_TOL: f64 = 1e-6;

/// Half-width of the span integrated by the oracle suite.
pub const ORACLE_HALF_SPAN: f64 = 10.0;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Norms,
    Energy,
    Oracle,
    Gradient,
    Limits,
    All,
}

impl std::str::FromStr for Suite {
    type Err = HodoError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "norms" => Suite::Norms,
            "energy" => Suite::Energy,
            "oracle" => Suite::Oracle,
            "gradient" => Suite::Gradient,
            "limits" => Suite::Limits,
            "all" => Suite::All,
            other => return Err(HodoError::InvalidArgument(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MatrixCase {
    pub regime: Regime,
    pub kappa_over_ell: f64,
    pub e_over_m: f64,
}

impl MatrixCase {
    pub fn params(&self) -> Result<SystemParams> {
        SystemParams::natural(self.kappa_over_ell, self.e_over_m)
    }

    pub fn label(&self) -> String {
        let side = if self.kappa_over_ell < 0.0 { "attr" } else { "rep" };
        format!("{:?}/{side}/E={}", self.regime, self.e_over_m)
    }
}

/// The 18 configurations shared by all per-case suites.
pub fn parameter_matrix() -> Vec<MatrixCase> {
    let regimes = [
        (Regime::TimeLike, SQRT3_2),
        (Regime::LightLike, 1.0),
        (Regime::SpaceLike, 1.05),
    ];
    let mut out = Vec::with_capacity(18);
    for (regime, k) in regimes {
        for e in [0.6, 0.95, 1.25] {
            out.push(MatrixCase { regime, kappa_over_ell: -k, e_over_m: e });
        }
        for e in [1.05, 1.25, 2.0] {
            out.push(MatrixCase { regime, kappa_over_ell: k, e_over_m: e });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyRow {
    pub suite: String,
    pub case: String,
    pub metric: String,
    pub value: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl VerifyRow {
    fn new(suite: &str, case: String, metric: &str, value: f64, threshold: f64) -> Self {
        VerifyRow {
            suite: suite.into(),
            case,
            metric: metric.into(),
            value,
            threshold,
            passed: value.is_finite() && value < threshold,
        }
    }

    /// Ratio of value to threshold; larger is worse.
    pub fn severity(&self) -> f64 {
        if self.value.is_finite() {
            self.value / self.threshold
        } else {
            f64::INFINITY
        }
    }
}

/// Threshold overrides; `None` keeps the per-suite default.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Tolerances {
    pub global: Option<f64>,
}

impl Tolerances {
    /// Reads [`TOL_ENV`]; an unparsable or non-positive value is an error.
    pub fn from_env() -> Result<Self> {
        match std::env::var(TOL_ENV) {
            Ok(s) => {
                let v: f64 = s
                    .trim()
                    .parse()
                    .map_err(|_| HodoError::InvalidArgument(format!("{TOL_ENV}={s:?} is not a number")))?;
                if !(v > 0.0 && v.is_finite()) {
                    return Err(HodoError::InvalidArgument(format!("{TOL_ENV} must be positive")));
                }
                Ok(Tolerances { global: Some(v) })
            }
            Err(_) => Ok(Tolerances::default()),
        }
    }

    fn pick(&self, default: f64) -> f64 {
        self.global.unwrap_or(default)
    }
}

/// Sampling windows used for the per-case checks: every branch's default window.
pub fn check_windows(p: &SystemParams) -> Result<Vec<(Branch, crate::trajectory::AngularInterval)>> {
    let branches: &[Branch] = if angular_range(p).len() == 2 {
        &[Branch::Positive, Branch::Negative]
    } else {
        &[Branch::Auto]
    };
    branches.iter().map(|&b| Ok((b, default_window(p, b)?))).collect()
}

const GRID_POINTS: usize = 10_000;

fn max_over_grid(p: &SystemParams, f: impl Fn(f64, &FourVector) -> f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (_, w) in check_windows(p)? {
        for th in theta_grid(&w, GRID_POINTS, Spacing::Uniform) {
            let u = hodograph(p, th)?;
            worst = worst.max(f(th, &u));
        }
    }
    Ok(worst)
}

fn failed_row(suite: &str, case: String, metric: &str, err: HodoError) -> VerifyRow {
    VerifyRow {
        suite: suite.into(),
        case,
        metric: format!("{metric} ({err})"),
        value: f64::INFINITY,
        threshold: 0.0,
        passed: false,
    }
}

pub fn norms_suite(tol: &Tolerances) -> Vec<VerifyRow> {
    let thr = tol.pick(NORM_TOL);
    per_case(|c| {
        let p = c.params()?;
        let v = max_over_grid(&p, |_, u| (minkowski_dot(u, u) + 1.0).abs())?;
        Ok(vec![VerifyRow::new("norms", c.label(), "max |u.u + 1|", v, thr)])
    }, "norms")
}

pub fn energy_suite(tol: &Tolerances) -> Vec<VerifyRow> {
    let thr = tol.pick(ENERGY_TOL);
    per_case(|c| {
        let p = c.params()?;
        let v = max_over_grid(&p, |th, u| energy_residual(&p, u, th).abs())?;
        Ok(vec![VerifyRow::new("energy", c.label(), "max |u0 + (k/l) u_theta - E/m|", v, thr)])
    }, "energy")
}

/// Largest componentwise gap between integrated flow and closed form over
/// `[theta0 - half, theta0 + half]`, plus the two conservation drifts.
pub fn oracle_gap(p: &SystemParams, half_span: f64, cfg: &IntegratorConfig) -> Result<(f64, f64, f64)> {
    let t0 = p.theta0();
    let (a, b) = (t0 - half_span, t0 + half_span);
    let sol = integrate(p, hodograph(p, a)?, (a, b), cfg)?;
    let mut gap: f64 = 0.0;
    for (th, w) in sol.sample(2001) {
        gap = gap.max((w - hodograph(p, th)?).max_abs());
    }
    for &(th, w) in sol.nodes() {
        gap = gap.max((w - hodograph(p, th)?).max_abs());
    }
    let drift = standard_monitors(p, &sol);
    Ok((gap, drift.drifts[0], drift.drifts[1]))
}

pub fn oracle_suite(tol: &Tolerances) -> Vec<VerifyRow> {
    let thr = tol.pick(ORACLE_TOL);
    let drift_thr = tol.pick(DRIFT_TOL);
    per_case(|c| {
        let p = c.params()?;
        let (gap, norm, proj) = oracle_gap(&p, ORACLE_HALF_SPAN, &IntegratorConfig::default())?;
        Ok(vec![
            VerifyRow::new("oracle", c.label(), "max |w_ode - u_closed|", gap, thr),
            VerifyRow::new("oracle", c.label(), "w.w drift", norm, drift_thr),
            VerifyRow::new("oracle", c.label(), "w.v_o drift", proj, drift_thr),
        ])
    }, "oracle")
}

/// Relative mismatch between the analytic energy gradient and a central
/// difference of the hodograph in `E` at fixed angle.
pub fn gradient_mismatch(p: &SystemParams, theta: f64) -> Result<f64> {
    let g = energy_gradient(p, theta)?;
    let e = p.energy();
    let h = 1e-5 * e;
    let shifted = |de: f64| -> Result<FourVector> {
        let q = SystemParams::new(p.m(), p.kappa(), p.ell(), e + de)?.with_theta0(p.theta0())?;
        hodograph(&q, theta)
    };
    let fd = (shifted(h)? - shifted(-h)?) * (0.5 / h);
    Ok((fd - g).max_abs() / g.max_abs().max(1e-300))
}

/// Deterministic quasi-random points in `[0, 1)` (additive golden-ratio sequence).
fn quasi_uniform(n: usize, seed: f64) -> impl Iterator<Item = f64> {
    const PHI: f64 = 0.618_033_988_749_894_8;
    (1..=n).map(move |i| (seed + i as f64 * PHI).fract())
}

/// 20 gradient probes spread over the matrix and each case's window.
pub fn gradient_probes() -> Result<Vec<(SystemParams, f64)>> {
    let cases = parameter_matrix();
    let mut out = Vec::with_capacity(20);
    for (i, x) in quasi_uniform(20, 0.3).enumerate() {
        let c = cases[(i * 7) % cases.len()];
        let p = c.params()?;
        let windows = check_windows(&p)?;
        let (_, w) = windows[i % windows.len()];
        out.push((p, w.lo + x * w.width()));
    }
    Ok(out)
}

pub fn gradient_suite(tol: &Tolerances) -> Vec<VerifyRow> {
    let thr = tol.pick(GRADIENT_TOL);
    let probes = match gradient_probes() {
        Ok(p) => p,
        Err(e) => return vec![failed_row("gradient", "probes".into(), "setup", e)],
    };
    probes
        .par_iter()
        .map(|(p, th)| {
            let case = format!("{:?}/k={:.4}/E={}/theta={th:.4}", p.regime(), p.ratio(), p.energy());
            match gradient_mismatch(p, *th) {
                Ok(v) => VerifyRow::new("gradient", case, "relative |fd - dU/dE|", v, thr),
                Err(e) => failed_row("gradient", case, "relative |fd - dU/dE|", e),
            }
        })
        .collect()
}

/// Newtonian-limit deviation at `kappa/ell = -10^-k`, `B_o = 10^-k`:
/// largest gap between relativistic `u/u0` and the classical hodograph over
/// one radial period, relative to the speed scale `10^-k`.
pub fn newtonian_deviation(k: i32) -> Result<f64> {
    let s = 10f64.powi(-k);
    let ratio = -s;
    let beta = (1.0 - ratio * ratio).sqrt();
    let e = beta * (1.0 + s * s).sqrt();
    let p = SystemParams::natural(ratio, e)?;
    let e_prime = 0.5 * (s * s - ratio * ratio);
    let np = NewtonianParams::new(1.0, ratio, 1.0, e_prime)?;
    let n = 2000;
    let mut worst: f64 = 0.0;
    for i in 0..=n {
        let th = 2.0 * PI / beta * i as f64 / n as f64;
        let v = spatial_velocity(&hodograph(&p, th)?)?;
        let vn = newtonian_hodograph_point(&np, th, 0.5 * PI);
        worst = worst.max((v[0] - vn[0]).hypot(v[1] - vn[1]));
    }
    Ok(worst / s)
}

/// Largest componentwise gap over `|theta| <= 2` between the hodograph at
/// `kappa^2/ell^2 = 1 + delta` and the light-like one, same `E` and sign.
pub fn boundary_gap(delta: f64, attractive: bool, e_over_m: f64) -> Result<f64> {
    let sign = if attractive { -1.0 } else { 1.0 };
    let light = SystemParams::natural(sign, e_over_m)?;
    let mut near = SystemParams::natural(sign * (1.0 + delta).sqrt(), e_over_m)?;
    if attractive && near.regime() == Regime::TimeLike {
        // align the time-like phase with the light-like parametrisation
        near = near.with_theta0(PI / near.rate())?;
    }
    let n = 801;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let th = -2.0 + 4.0 * i as f64 / (n - 1) as f64;
        let a = hodograph(&light, th)?;
        let b = hodograph(&near, th)?;
        worst = worst.max((a - b).max_abs());
    }
    Ok(worst)
}

/// Step sizes of the fixed-step convergence study.
pub const ORDER_STEPS: [f64; 4] = [0.1, 0.05, 0.025, 0.0125];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderStudy {
    pub steps: Vec<f64>,
    /// Largest nodal deviation from the closed form, one per step size.
    pub errors: Vec<f64>,
    /// Least-squares slope of `ln error` against `ln h`.
    pub slope: f64,
}

/// Fixed-step global error of `method` on `p` over `[theta0, theta0 + span]`.
pub fn order_study(p: &SystemParams, method: Method, steps: &[f64], span: f64) -> Result<OrderStudy> {
    let a = p.theta0();
    let mut errors = Vec::with_capacity(steps.len());
    for &h in steps {
        let sol = integrate(p, hodograph(p, a)?, (a, a + span), &IntegratorConfig::fixed(method, h))?;
        let mut worst: f64 = 0.0;
        for &(th, w) in sol.nodes() {
            worst = worst.max((w - hodograph(p, th)?).max_abs());
        }
        errors.push(worst);
    }
    let xs: Vec<f64> = steps.iter().map(|h| h.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.max(f64::MIN_POSITIVE).ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    Ok(OrderStudy {
        steps: steps.to_vec(),
        errors,
        slope: sxy / sxx,
    })
}

/// Time-like case used for the order study (`beta = 1/2`, bound orbit).
pub fn order_reference_case() -> Result<SystemParams> {
    SystemParams::natural(-SQRT3_2, 0.6)
}

fn strictly_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}

/// Ordered-convergence series; each row's value is 0 when the sequence
/// decreases strictly and 1 otherwise.
pub fn limits_suite(_tol: &Tolerances) -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    let mut push_series = |case: String, series: Result<Vec<f64>>| match series {
        Ok(s) => {
            let ok = strictly_decreasing(&s);
            let metric = format!(
                "monotone decrease of [{}]",
                s.iter().map(|x| format!("{x:.3e}")).collect::<Vec<_>>().join(", ")
            );
            rows.push(VerifyRow::new("limits", case, &metric, if ok { 0.0 } else { 1.0 }, 0.5));
        }
        Err(e) => rows.push(failed_row("limits", case, "series", e)),
    };
    push_series(
        "newtonian k=1,2,3".into(),
        (1..=3).map(newtonian_deviation).collect(),
    );
    for attractive in [true, false] {
        for side in [-1.0, 1.0] {
            let label = format!(
                "boundary {} {}",
                if attractive { "attr" } else { "rep" },
                if side < 0.0 { "time-like side" } else { "space-like side" }
            );
            push_series(
                label,
                [1e-2, 1e-3, 1e-4]
                    .iter()
                    .map(|d| boundary_gap(side * d, attractive, 1.25))
                    .collect(),
            );
        }
    }
    rows
}

fn per_case<F>(f: F, suite: &str) -> Vec<VerifyRow>
where
    F: Fn(&MatrixCase) -> Result<Vec<VerifyRow>> + Sync,
{
    parameter_matrix()
        .par_iter()
        .map(|c| f(c).unwrap_or_else(|e| vec![failed_row(suite, c.label(), "evaluation", e)]))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Runs `suite`; rows come back in matrix order regardless of scheduling.
pub fn run_suite(suite: Suite, tol: &Tolerances) -> Vec<VerifyRow> {
    match suite {
        Suite::Norms => norms_suite(tol),
        Suite::Energy => energy_suite(tol),
        Suite::Oracle => oracle_suite(tol),
        Suite::Gradient => gradient_suite(tol),
        Suite::Limits => limits_suite(tol),
        Suite::All => [Suite::Norms, Suite::Energy, Suite::Oracle, Suite::Gradient, Suite::Limits]
            .into_iter()
            .flat_map(|s| run_suite(s, tol))
            .collect(),
    }
}

/// Row with the largest value/threshold ratio among the failures.
pub fn worst_failure(rows: &[VerifyRow]) -> Option<&VerifyRow> {
    rows.iter()
        .filter(|r| !r.passed)
        .max_by(|a, b| a.severity().total_cmp(&b.severity()))
}
