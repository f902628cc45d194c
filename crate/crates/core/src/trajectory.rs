//! Spatial orbits reconstructed from hodographs through `ell = m r u_theta`:
//! admissible angular ranges, turning radii, orbit classes, periodicity and
//! proper/coordinate time along the orbit.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{HodoError, Result};
use crate::quadrature;
use crate::rational::rational_approximation;
use crate::relativistic::{energy_residual, hodograph, polar_hodograph, u_theta, Regime, SystemParams};
use crate::spacetime::{minkowski_dot, polar_frame, FourVector};

/// Distance kept from a finite endpoint `theta_infinity` when sampling.
pub const ENDPOINT_CLIP: f64 = 1e-6;

/// Default denominator bound for closed-orbit detection.
pub const MAX_DENOMINATOR: u64 = 1000;

/// Tolerance on `|beta - p/q|` for closed-orbit detection.
pub const RATIONAL_TOL: f64 = 1e-9;

/// Largest `u0` reached by default sampling windows on spiral branches.
pub const SPIRAL_U0_CAP: f64 = 25.0;

/// Open angular interval; either bound may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngularInterval {
    #[serde(with = "lower_bound")]
    pub lo: f64,
    #[serde(with = "upper_bound")]
    pub hi: f64,
}

impl AngularInterval {
    pub const WHOLE_LINE: AngularInterval = AngularInterval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() {
            return Err(HodoError::NonFinite("interval bound"));
        }
        if lo >= hi {
            return Err(HodoError::InvalidArgument(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(AngularInterval { lo, hi })
    }

    pub fn contains(&self, theta: f64) -> bool {
        theta > self.lo && theta < self.hi
    }

    /// Closed containment, used for windows that touch the interval bounds.
    pub fn covers(&self, other: &AngularInterval) -> bool {
        other.lo >= self.lo && other.hi <= self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

// Infinite bounds travel as JSON null.
mod lower_bound {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_some(x)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NEG_INFINITY))
    }
}

mod upper_bound {
    use serde::{Deserialize, Deserializer};

    pub use super::lower_bound::serialize;

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}

/// Selects one of the two disconnected branches of attraction with `E >= m`
/// in the light-like and space-like regimes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// The positive branch whenever a choice exists.
    #[default]
    Auto,
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitClass {
    CircularBound,
    PrecessingBound,
    /// `beta = p/q`; the orbit closes after `q` turns and `p` radial oscillations.
    ClosedBound { p: u64, q: u64 },
    UnboundScatter,
    SpiralCollapse,
    SpiralBurst,
    BoundSpiralCollapse,
}

/// `r_max = None` means the orbit reaches infinity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TurningPoints {
    pub r_min: f64,
    pub r_max: Option<f64>,
}

fn is_unbound_timelike(p: &SystemParams) -> bool {
    p.energy() >= p.m()
}

/// Half-width of the finite hodograph arc(s) measured from `theta0`, or
/// `None` when `u_theta` never vanishes or no trajectory exists.
pub fn theta_infinity(p: &SystemParams) -> Option<f64> {
    let (m, e) = (p.m(), p.energy());
    match p.regime() {
        Regime::TimeLike => {
            if !is_unbound_timelike(p) || (!p.is_attractive() && e <= m) {
                return None;
            }
            let psi = psi_infinity(p)?;
            let beta = p.rate();
            Some(if p.is_attractive() { (PI - psi) / beta } else { psi / beta })
        }
        Regime::LightLike => {
            if e < m || (!p.is_attractive() && e <= m) {
                return None;
            }
            Some((e * e - m * m).sqrt() / e)
        }
        Regime::SpaceLike => {
            if e < m || (!p.is_attractive() && e <= m) {
                return None;
            }
            let arg = p.kappa().abs() * e / (p.ell() * p.lambda());
            Some(arg.max(1.0).acosh() / p.rate())
        }
    }
}

/// `psi_infinity = asin(sqrt(E^2 - m^2) / (m B_o))` for unbound time-like orbits.
pub fn psi_infinity(p: &SystemParams) -> Option<f64> {
    if p.regime() != Regime::TimeLike || !is_unbound_timelike(p) {
        return None;
    }
    let (m, e) = (p.m(), p.energy());
    let b = p.amplitude();
    if b <= 0.0 {
        return None;
    }
    let s = ((e * e - m * m).sqrt() / (m * b)).min(1.0);
    Some(s.asin())
}

/// Open intervals of `theta` on which `u_theta > 0`. Two branches are
/// returned positive first.
pub fn angular_range(p: &SystemParams) -> Vec<AngularInterval> {
    let t0 = p.theta0();
    let (m, e) = (p.m(), p.energy());
    let attractive = p.is_attractive();
    if !attractive && e <= m {
        return Vec::new();
    }
    let shifted = |lo: f64, hi: f64| AngularInterval { lo: t0 + lo, hi: t0 + hi };
    match p.regime() {
        Regime::TimeLike => {
            if attractive && e < m {
                return vec![AngularInterval::WHOLE_LINE];
            }
            match theta_infinity(p) {
                Some(ti) if ti > 0.0 => vec![shifted(-ti, ti)],
                _ => Vec::new(),
            }
        }
        Regime::LightLike | Regime::SpaceLike => {
            if attractive {
                if e < m {
                    return vec![AngularInterval::WHOLE_LINE];
                }
                let ti = theta_infinity(p).unwrap_or(0.0);
                vec![shifted(ti, f64::INFINITY), shifted(f64::NEG_INFINITY, -ti)]
            } else {
                match theta_infinity(p) {
                    Some(ti) if ti > 0.0 => vec![shifted(-ti, ti)],
                    _ => Vec::new(),
                }
            }
        }
    }
}

/// The interval a per-branch operation works on.
pub fn select_interval(p: &SystemParams, branch: Branch) -> Result<AngularInterval> {
    let ranges = angular_range(p);
    match (ranges.as_slice(), branch) {
        ([], _) => Err(HodoError::NoTrajectory),
        ([only], _) => Ok(*only),
        ([pos, _], Branch::Auto | Branch::Positive) => Ok(*pos),
        ([_, neg], Branch::Negative) => Ok(*neg),
        _ => unreachable!("at most two branches"),
    }
}

/// `r = ell / (m u_theta)`.
pub fn radius(p: &SystemParams, theta: f64) -> Result<f64> {
    let ut = u_theta(p, theta)?;
    if ut.is_nan() || ut <= 0.0 {
        return Err(HodoError::OutsideAdmissibleRange { theta, u_theta: ut });
    }
    Ok(p.ell() / (p.m() * ut))
}

/// Position `r(theta) r_hat(theta)` in the orbital plane.
pub fn position(p: &SystemParams, theta: f64) -> Result<[f64; 2]> {
    let r = radius(p, theta)?;
    let (s, c) = theta.sin_cos();
    Ok([r * c, r * s])
}

/// Closed-form minimum and maximum radius of the orbit on `branch`.
pub fn turning_points(p: &SystemParams, branch: Branch) -> Result<TurningPoints> {
    select_interval(p, branch)?;
    let (m, e, ell, kappa) = (p.m(), p.energy(), p.ell(), p.kappa());
    let lam = p.lambda();
    let k_abs = kappa.abs();
    let attractive = p.is_attractive();
    let tp = match p.regime() {
        Regime::TimeLike => {
            let b2 = p.rate() * p.rate();
            if attractive && e < m {
                // rationalised form of (|k|E - l Lambda)/(m^2 - E^2)
                TurningPoints {
                    r_min: ell * ell * b2 / (k_abs * e + ell * lam),
                    r_max: Some((k_abs * e + ell * lam) / (m * m - e * e)),
                }
            } else {
                // (l Lambda + k E)/(E^2 - m^2), finite at E = m for attraction
                TurningPoints {
                    r_min: ell * ell * b2 / (ell * lam - kappa * e),
                    r_max: None,
                }
            }
        }
        Regime::LightLike => {
            if !attractive {
                TurningPoints {
                    r_min: 2.0 * ell * e / (e * e - m * m),
                    r_max: None,
                }
            } else if e < m {
                TurningPoints {
                    r_min: 0.0,
                    r_max: Some(2.0 * e * ell / (m * m - e * e)),
                }
            } else {
                TurningPoints { r_min: 0.0, r_max: None }
            }
        }
        Regime::SpaceLike => {
            let bb2 = p.rate() * p.rate();
            if !attractive {
                // rationalised form of (l Lambda + k E)/(E^2 - m^2)
                TurningPoints {
                    r_min: ell * ell * bb2 / (kappa * e - ell * lam),
                    r_max: None,
                }
            } else if e < m {
                TurningPoints {
                    r_min: 0.0,
                    r_max: Some((ell * lam + k_abs * e) / (m * m - e * e)),
                }
            } else {
                TurningPoints { r_min: 0.0, r_max: None }
            }
        }
    };
    Ok(tp)
}

/// Reduced `(p, q)` with `beta = p/q` for time-like bound orbits.
pub fn is_closed_orbit(p: &SystemParams, max_denominator: u64) -> Option<(u64, u64)> {
    if p.regime() != Regime::TimeLike || !p.is_attractive() || p.energy() >= p.m() {
        return None;
    }
    rational_approximation(p.rate(), max_denominator, RATIONAL_TOL)
}

/// Angular period `2 pi q` of a closed orbit.
pub fn closed_orbit_period(p: &SystemParams) -> Option<f64> {
    is_closed_orbit(p, MAX_DENOMINATOR).map(|(_, q)| 2.0 * PI * q as f64)
}

pub fn classify_orbit(p: &SystemParams, branch: Branch) -> Result<OrbitClass> {
    let ranges = angular_range(p);
    if ranges.is_empty() {
        return Err(HodoError::NoTrajectory);
    }
    let (m, e) = (p.m(), p.energy());
    Ok(match p.regime() {
        Regime::TimeLike => {
            if !p.is_attractive() || e >= m {
                OrbitClass::UnboundScatter
            } else if p.amplitude() < 1e-9 {
                OrbitClass::CircularBound
            } else if let Some((num, den)) = is_closed_orbit(p, MAX_DENOMINATOR) {
                OrbitClass::ClosedBound { p: num, q: den }
            } else {
                OrbitClass::PrecessingBound
            }
        }
        Regime::LightLike | Regime::SpaceLike => {
            if !p.is_attractive() {
                OrbitClass::UnboundScatter
            } else if e < m {
                OrbitClass::BoundSpiralCollapse
            } else if branch == Branch::Negative {
                OrbitClass::SpiralBurst
            } else {
                OrbitClass::SpiralCollapse
            }
        }
    })
}

fn require_scatter(p: &SystemParams) -> Result<f64> {
    match classify_orbit(p, Branch::Auto)? {
        OrbitClass::UnboundScatter => theta_infinity(p).ok_or(HodoError::NotUnbound),
        _ => Err(HodoError::NotUnbound),
    }
}

/// Asymptotic 4-velocities `(u_{-inf}, u_{+inf})` of a scattering orbit.
pub fn endpoint_velocities(p: &SystemParams) -> Result<(FourVector, FourVector)> {
    let ti = require_scatter(p)?;
    let (m, e) = (p.m(), p.energy());
    let speed = (e * e - m * m).max(0.0).sqrt() / m;
    let t0 = p.theta0();
    let make = |sign: f64| {
        let f = polar_frame(t0 + sign * ti);
        FourVector::new(e / m, sign * speed * f.r_hat[0], sign * speed * f.r_hat[1], 0.0)
    };
    Ok((make(-1.0), make(1.0)))
}

/// Scattering angle `pi - 2 theta_infinity` between incoming and outgoing
/// asymptotic directions.
pub fn deflection_angle(p: &SystemParams) -> Result<f64> {
    Ok(PI - 2.0 * require_scatter(p)?)
}

fn reference_point(interval: &AngularInterval, theta0: f64, grid: &[f64]) -> f64 {
    if interval.contains(theta0) {
        theta0
    } else if interval.is_finite() {
        interval.midpoint()
    } else {
        grid[0]
    }
}

/// Interval holding the whole grid, plus the largest `u0 / u_theta` on it.
fn containing_interval(p: &SystemParams, grid: &[f64]) -> Result<(AngularInterval, f64)> {
    let ranges = angular_range(p);
    if ranges.is_empty() {
        return Err(HodoError::NoTrajectory);
    }
    let mut conditioning: f64 = 1.0;
    for &th in grid {
        if !th.is_finite() {
            return Err(HodoError::NonFinite("theta grid"));
        }
        let v = polar_hodograph(p, th)?;
        let ut = v.u_theta;
        conditioning = conditioning.max(v.u0 / ut);
        // rounding level of u_theta counts as the endpoint itself
        if ut.is_nan() || ut <= 1e-14 * v.u0 {
            return Err(HodoError::QuadratureDivergence(format!(
                "grid point theta = {th} sits where u_theta = {ut:e}"
            )));
        }
    }
    ranges
        .into_iter()
        .find(|iv| grid.iter().all(|&th| iv.contains(th)))
        .map(|iv| (iv, conditioning))
        .ok_or_else(|| HodoError::InvalidArgument("grid spans more than one branch".into()))
}

/// Proper time `tau` and coordinate time `t` at each grid angle, both zero
/// at the interval's reference point (`theta0` if interior, the midpoint if
/// the interval is finite, the first grid point otherwise).
pub fn time_reparametrization(p: &SystemParams, grid: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    time_reparametrization_with_tol(p, grid, 1e-12)
}

/// As [`time_reparametrization`] with an explicit relative quadrature
/// tolerance. Near an arc end `u_theta` loses digits to cancellation, so the
/// tolerance is floored at the rounding level of `1/u_theta^2` there.
pub fn time_reparametrization_with_tol(
    p: &SystemParams,
    grid: &[f64],
    rel_tol: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if grid.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let (interval, conditioning) = containing_interval(p, grid)?;
    let rel_tol = rel_tol.max(64.0 * f64::EPSILON * conditioning);
    let origin = reference_point(&interval, p.theta0(), grid);
    let scale = p.ell() / p.m();
    // dtau/dtheta = r/u_theta = (ell/m)/u_theta^2, dt/dtheta = u0 dtau/dtheta
    let dtau = |th: f64| match polar_hodograph(p, th) {
        Ok(v) => scale / (v.u_theta * v.u_theta),
        Err(_) => f64::NAN,
    };
    let dt = |th: f64| match polar_hodograph(p, th) {
        Ok(v) => scale * v.u0 / (v.u_theta * v.u_theta),
        Err(_) => f64::NAN,
    };

    let mut order: Vec<usize> = (0..grid.len()).collect();
    order.sort_by(|&a, &b| grid[a].total_cmp(&grid[b]));
    let mut tau = vec![0.0; grid.len()];
    let mut t = vec![0.0; grid.len()];

    // walk outward from the origin in both directions so each segment is short
    let split = order.partition_point(|&i| grid[i] < origin);
    let mut accumulate = |indices: &mut dyn Iterator<Item = &usize>| -> Result<()> {
        let (mut prev, mut acc_tau, mut acc_t) = (origin, 0.0, 0.0);
        for &i in indices {
            let th = grid[i];
            acc_tau += quadrature::integrate(dtau, prev, th, 0.0, rel_tol)?;
            acc_t += quadrature::integrate(dt, prev, th, 0.0, rel_tol)?;
            tau[i] = acc_tau;
            t[i] = acc_t;
            prev = th;
        }
        Ok(())
    };
    accumulate(&mut order[split..].iter())?;
    accumulate(&mut order[..split].iter().rev())?;
    Ok((tau, t))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spacing {
    #[default]
    Uniform,
    /// `sinh`-graded, dense near the lower end.
    GradedFromLow,
    /// `sinh`-graded, dense near the upper end.
    GradedFromHigh,
}

const GRADING: f64 = 5.0;

/// `n` angles spanning `window` inclusive of both ends.
pub fn theta_grid(window: &AngularInterval, n: usize, spacing: Spacing) -> Vec<f64> {
    let (a, b) = (window.lo, window.hi);
    let last = (n - 1) as f64;
    (0..n)
        .map(|k| {
            if k == 0 {
                return a;
            }
            if k + 1 == n {
                return b;
            }
            let s = k as f64 / last;
            let w = match spacing {
                Spacing::Uniform => s,
                Spacing::GradedFromLow => (GRADING * s).sinh() / GRADING.sinh(),
                Spacing::GradedFromHigh => 1.0 - (GRADING * (1.0 - s)).sinh() / GRADING.sinh(),
            };
            a + (b - a) * w
        })
        .collect()
}

/// One point of a sampled orbit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HodographSample {
    pub theta: f64,
    pub u: FourVector,
    pub u_r: f64,
    pub u_theta: f64,
    pub r: f64,
    pub x: f64,
    pub y: f64,
    pub tau: f64,
    pub t: f64,
    /// `u0 + (kappa/ell) u_theta - E/m`.
    pub energy_residual: f64,
    /// `u.u + 1`.
    pub norm_residual: f64,
}

/// Samples hodograph and orbit at `n` angles over a finite `window` lying
/// inside one admissible interval.
pub fn sample_trajectory(
    p: &SystemParams,
    window: &AngularInterval,
    n: usize,
    spacing: Spacing,
) -> Result<Vec<HodographSample>> {
    if n < 2 {
        return Err(HodoError::InvalidArgument(format!("need at least 2 samples, got {n}")));
    }
    if !window.is_finite() {
        return Err(HodoError::InvalidArgument("sampling window must be finite".into()));
    }
    let grid = theta_grid(window, n, spacing);
    let (tau, t) = time_reparametrization(p, &grid)?;
    grid.iter()
        .enumerate()
        .map(|(i, &th)| {
            let pv = polar_hodograph(p, th)?;
            let u = pv.to_four_vector(th);
            let r = p.ell() / (p.m() * pv.u_theta);
            let (s, c) = th.sin_cos();
            Ok(HodographSample {
                theta: th,
                u,
                u_r: pv.u_r,
                u_theta: pv.u_theta,
                r,
                x: r * c,
                y: r * s,
                tau: tau[i],
                t: t[i],
                energy_residual: energy_residual(p, &u, th),
                norm_residual: minkowski_dot(&u, &u) + 1.0,
            })
        })
        .collect()
}

/// Offset from `theta0` at which `u0` reaches `cap` on a spiral branch.
fn spiral_extent(p: &SystemParams, cap: f64) -> f64 {
    let e = p.e_over_m();
    match p.regime() {
        Regime::LightLike => {
            let base = (e * e + 1.0) / (2.0 * e);
            (2.0 * (cap - base).max(0.0) / e).sqrt()
        }
        _ => {
            let bb = p.rate();
            let arg = (cap + e / (bb * bb)) * bb / (p.ratio().abs() * p.amplitude());
            arg.max(1.0).acosh() / bb
        }
    }
}

/// Finite window used when the caller does not supply one: one full period
/// for bound orbits, the clipped arc for scattering, and a `u0`-capped arc
/// on spiral branches.
pub fn default_window(p: &SystemParams, branch: Branch) -> Result<AngularInterval> {
    let class = classify_orbit(p, branch)?;
    let t0 = p.theta0();
    let window = match class {
        OrbitClass::CircularBound => AngularInterval { lo: t0, hi: t0 + 2.0 * PI },
        OrbitClass::ClosedBound { q, .. } => AngularInterval {
            lo: t0,
            hi: t0 + 2.0 * PI * q as f64,
        },
        OrbitClass::PrecessingBound => AngularInterval {
            lo: t0,
            hi: t0 + 4.0 * PI / p.rate(),
        },
        OrbitClass::UnboundScatter => {
            let ti = theta_infinity(p).ok_or(HodoError::NoTrajectory)?;
            let clip = ENDPOINT_CLIP.min(0.25 * ti);
            AngularInterval {
                lo: t0 - ti + clip,
                hi: t0 + ti - clip,
            }
        }
        OrbitClass::BoundSpiralCollapse => {
            let w = spiral_extent(p, SPIRAL_U0_CAP);
            AngularInterval { lo: t0 - w, hi: t0 + w }
        }
        OrbitClass::SpiralCollapse | OrbitClass::SpiralBurst => {
            let ti = theta_infinity(p).unwrap_or(0.0);
            let cap = SPIRAL_U0_CAP.max(4.0 * p.e_over_m());
            let w = spiral_extent(p, cap).max(ti + 1.0);
            let (lo, hi) = (ti + ENDPOINT_CLIP, w);
            if class == OrbitClass::SpiralCollapse {
                AngularInterval { lo: t0 + lo, hi: t0 + hi }
            } else {
                AngularInterval { lo: t0 - hi, hi: t0 - lo }
            }
        }
    };
    Ok(window)
}

/// Spacing matched to [`default_window`].
pub fn default_spacing(class: OrbitClass) -> Spacing {
    match class {
        OrbitClass::SpiralCollapse => Spacing::GradedFromLow,
        OrbitClass::SpiralBurst => Spacing::GradedFromHigh,
        _ => Spacing::Uniform,
    }
}

/// Everything known about the orbit on one branch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryReport {
    pub regime: Regime,
    pub orbit_class: OrbitClass,
    pub theta_intervals: Vec<AngularInterval>,
    pub r_min: f64,
    /// `None` when the orbit is unbounded.
    pub r_max: Option<f64>,
    pub theta_infinity: Option<f64>,
    pub psi_infinity: Option<f64>,
    pub endpoint_velocities: Option<(FourVector, FourVector)>,
    pub closed_orbit: Option<(u64, u64)>,
}

pub fn trajectory_report(p: &SystemParams, branch: Branch) -> Result<TrajectoryReport> {
    let orbit_class = classify_orbit(p, branch)?;
    let tp = turning_points(p, branch)?;
    Ok(TrajectoryReport {
        regime: p.regime(),
        orbit_class,
        theta_intervals: angular_range(p),
        r_min: tp.r_min,
        r_max: tp.r_max,
        theta_infinity: theta_infinity(p),
        psi_infinity: psi_infinity(p),
        endpoint_velocities: endpoint_velocities(p).ok(),
        closed_orbit: is_closed_orbit(p, MAX_DENOMINATOR),
    })
}

/// Hodograph point at `theta` checked against the admissible set.
pub fn admissible_hodograph(p: &SystemParams, theta: f64) -> Result<FourVector> {
    let ut = u_theta(p, theta)?;
    if ut.is_nan() || ut <= 0.0 {
        return Err(HodoError::OutsideAdmissibleRange { theta, u_theta: ut });
    }
    hodograph(p, theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: f64 = 0.866_025_403_784_438_6;

    fn p(k: f64, e: f64) -> SystemParams {
        SystemParams::natural(k, e).unwrap()
    }

    #[test]
    fn timelike_theta_infinity_values() {
        let rep = theta_infinity(&p(S3, 1.25)).unwrap() / PI;
        let att = theta_infinity(&p(-S3, 1.25)).unwrap() / PI;
        assert!((rep - 0.2123).abs() < 5e-4, "{rep}");
        assert!((att - 1.7877).abs() < 5e-3, "{att}");
    }

    #[test]
    fn lightlike_theta_infinity() {
        assert!((theta_infinity(&p(1.0, 1.25)).unwrap() - 0.6).abs() < 1e-15);
        assert!((theta_infinity(&p(-1.0, 1.05)).unwrap() - 0.304_910_7).abs() < 1e-7);
    }

    #[test]
    fn ranges_by_case() {
        assert_eq!(angular_range(&p(-S3, 0.6)), vec![AngularInterval::WHOLE_LINE]);
        assert!(angular_range(&p(1.5, 0.9)).is_empty());
        assert!(angular_range(&p(S3, 0.95)).is_empty());
        let two = angular_range(&p(-1.2, 1.25));
        assert_eq!(two.len(), 2);
        assert!(two[0].lo > 0.0 && two[0].hi.is_infinite());
        assert!(two[1].hi < 0.0 && two[1].lo.is_infinite());
        let shifted = angular_range(&p(1.0, 1.25).with_theta0(0.5).unwrap());
        assert!((shifted[0].lo + 0.1).abs() < 1e-15 && (shifted[0].hi - 1.1).abs() < 1e-15);
    }

    #[test]
    fn turning_points_reference_values() {
        let tp = turning_points(&p(-S3, 0.6), Branch::Auto).unwrap();
        assert!((tp.r_min - 0.293_68).abs() < 1e-5);
        assert!((tp.r_max.unwrap() - 1.330_13).abs() < 1e-5);
        let lr = turning_points(&p(1.0, 1.25), Branch::Auto).unwrap();
        assert!((lr.r_min - 4.0 / 0.9).abs() < 1e-12);
        assert_eq!(lr.r_max, None);
    }

    #[test]
    fn circular_degenerate_bracket() {
        let beta = 0.5;
        let q = p(-S3, beta);
        let tp = turning_points(&q, Branch::Auto).unwrap();
        assert!((tp.r_min - tp.r_max.unwrap()).abs() < 1e-12);
        assert!((tp.r_min - beta / S3).abs() < 1e-12);
        assert_eq!(classify_orbit(&q, Branch::Auto).unwrap(), OrbitClass::CircularBound);
    }

    #[test]
    fn orbit_classes() {
        assert_eq!(
            classify_orbit(&p(-S3, 0.6), Branch::Auto).unwrap(),
            OrbitClass::ClosedBound { p: 1, q: 2 }
        );
        assert_eq!(classify_orbit(&p(-1.0, 0.6), Branch::Auto).unwrap(), OrbitClass::BoundSpiralCollapse);
        assert_eq!(classify_orbit(&p(-1.0, 1.05), Branch::Positive).unwrap(), OrbitClass::SpiralCollapse);
        assert_eq!(classify_orbit(&p(-1.0, 1.05), Branch::Negative).unwrap(), OrbitClass::SpiralBurst);
        assert_eq!(classify_orbit(&p(-0.5, 0.95), Branch::Auto).unwrap(), OrbitClass::PrecessingBound);
        assert_eq!(classify_orbit(&p(1.5, 0.9), Branch::Auto), Err(HodoError::NoTrajectory));
    }

    #[test]
    fn radius_rejects_outside_points() {
        let q = p(1.0, 1.25);
        assert!(matches!(radius(&q, 0.7), Err(HodoError::OutsideAdmissibleRange { .. })));
        assert!((radius(&q, 0.0).unwrap() - 4.0 / 0.9).abs() < 1e-12);
    }

    #[test]
    fn endpoint_velocity_values() {
        let (a, b) = endpoint_velocities(&p(1.0, 1.25)).unwrap();
        for u in [a, b] {
            assert!((u.w0 - 1.25).abs() < 1e-15);
            assert!(((u.wx * u.wx + u.wy * u.wy).sqrt() - 0.75).abs() < 1e-15);
            assert!((minkowski_dot(&u, &u) + 1.0).abs() < 1e-14);
        }
        assert_eq!(endpoint_velocities(&p(-S3, 0.6)), Err(HodoError::NotUnbound));
    }

    #[test]
    fn grids_cover_window() {
        let w = AngularInterval::new(1.0, 3.0).unwrap();
        for sp in [Spacing::Uniform, Spacing::GradedFromLow, Spacing::GradedFromHigh] {
            let g = theta_grid(&w, 50, sp);
            assert_eq!(g[0], 1.0);
            assert_eq!(g[49], 3.0);
            assert!(g.windows(2).all(|x| x[1] > x[0]));
        }
        let low = theta_grid(&w, 50, Spacing::GradedFromLow);
        assert!(low[1] - low[0] < low[49] - low[48]);
    }

    #[test]
    fn circular_time_is_linear() {
        let q = p(-S3, 0.5);
        let grid: Vec<f64> = (0..9).map(|i| i as f64 * 0.5).collect();
        let (tau, t) = time_reparametrization(&q, &grid).unwrap();
        for i in 1..grid.len() {
            assert!((tau[i] / grid[i] - tau[1] / grid[1]).abs() < 1e-10);
            assert!((t[i] / grid[i] - t[1] / grid[1]).abs() < 1e-10);
            assert!(t[i] >= tau[i]);
        }
    }

    #[test]
    fn quadrature_rejects_endpoint_grid() {
        let q = p(1.0, 1.25);
        assert!(matches!(
            time_reparametrization(&q, &[0.0, 0.6]),
            Err(HodoError::QuadratureDivergence(_))
        ));
    }

    #[test]
    fn default_windows_are_admissible() {
        let cases = [
            (p(-S3, 0.6), Branch::Auto),
            (p(S3, 1.25), Branch::Auto),
            (p(-1.0, 0.6), Branch::Auto),
            (p(-1.0, 1.05), Branch::Positive),
            (p(-1.0, 1.05), Branch::Negative),
            (p(-1.2, 0.8), Branch::Auto),
            (p(-1.2, 1.25), Branch::Negative),
            (p(1.5, 1.25), Branch::Auto),
        ];
        for (q, b) in cases {
            let w = default_window(&q, b).unwrap();
            let iv = select_interval(&q, b).unwrap();
            assert!(iv.contains(w.lo) && iv.contains(w.hi), "{q:?} {w:?}");
        }
    }
}
