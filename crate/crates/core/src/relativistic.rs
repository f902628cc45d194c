//! Closed-form relativistic hodographs on the unit hyperboloid.
//!
//! Every solution has the epicyclic form `u = w_o + B`: an on-axis part
//! proportional to the axis vector `v_o = (1, -(kappa/ell) theta_hat)` and a
//! Hamilton vector of constant Minkowski length that precesses around it.
//! The causal character of `v_o` (sign of `kappa^2/ell^2 - 1`) selects one of
//! three closed forms.

use serde::{Deserialize, Serialize};

use crate::error::{HodoError, Result};
use crate::spacetime::{minkowski_dot, polar_frame, FourVector};

/// Relative band around `ell = |kappa|` treated as the light-like case.
pub const LIGHTLIKE_REL_TOL: f64 = 1e-12;

/// Largest hyperbolic argument accepted before `sinh`/`cosh` overflow.
pub const HYPERBOLIC_ARG_CAP: f64 = 700.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    TimeLike,
    LightLike,
    SpaceLike,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Classification {
    pub regime: Regime,
    /// `v_o . v_o = kappa^2/ell^2 - 1`.
    pub vo_squared: f64,
}

/// Full configuration of one Coulomb system with its derived invariants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemParams {
    m: f64,
    kappa: f64,
    ell: f64,
    energy: f64,
    theta0: f64,
    regime: Regime,
    ratio: f64,
    lambda_sq: f64,
    // beta (time-like), beta_bar (space-like), 0 (light-like)
    rate: f64,
    // B_o (time-like), A_o (space-like), E/2m (light-like)
    amplitude: f64,
}

fn regime_of(kappa: f64, ell: f64) -> Regime {
    let k = kappa.abs();
    if (ell - k).abs() <= LIGHTLIKE_REL_TOL * ell.max(k) {
        Regime::LightLike
    } else if ell > k {
        Regime::TimeLike
    } else {
        Regime::SpaceLike
    }
}

impl SystemParams {
    pub fn new(m: f64, kappa: f64, ell: f64, energy: f64) -> Result<Self> {
        if ![m, kappa, ell, energy].iter().all(|x| x.is_finite()) {
            return Err(HodoError::NonFinite("system parameters"));
        }
        if m <= 0.0 || ell <= 0.0 || kappa == 0.0 {
            return Err(HodoError::UnphysicalParameters(format!(
                "need m > 0, ell > 0, kappa != 0 (m={m}, ell={ell}, kappa={kappa})"
            )));
        }
        if energy <= 0.0 {
            return Err(HodoError::UnphysicalParameters(format!(
                "total energy must be positive, got {energy}"
            )));
        }
        let ratio = kappa / ell;
        let regime = regime_of(kappa, ell);
        let e = energy / m;
        let lambda_sq = energy * energy + m * m * (ratio * ratio - 1.0);
        let (rate, amplitude) = match regime {
            Regime::TimeLike => {
                let beta = (1.0 - ratio * ratio).sqrt();
                let minimum = beta * m;
                if energy < minimum * (1.0 - 1e-12) {
                    return Err(HodoError::BelowMinimumEnergy { energy, minimum });
                }
                let b_sq = e * e / (beta * beta) - 1.0;
                (beta, b_sq.max(0.0).sqrt())
            }
            Regime::LightLike => (0.0, 0.5 * e),
            Regime::SpaceLike => {
                let beta_bar = (ratio * ratio - 1.0).sqrt();
                (beta_bar, (e * e / (beta_bar * beta_bar) + 1.0).sqrt())
            }
        };
        Ok(SystemParams {
            m,
            kappa,
            ell,
            energy,
            theta0: 0.0,
            regime,
            ratio,
            lambda_sq: lambda_sq.max(0.0),
            rate,
            amplitude,
        })
    }

    /// Convenience constructor with `m = ell = 1`.
    pub fn natural(kappa_over_ell: f64, e_over_m: f64) -> Result<Self> {
        SystemParams::new(1.0, kappa_over_ell, 1.0, e_over_m)
    }

    /// Sets the shift angle; closed forms are evaluated at `theta - theta0`.
    pub fn with_theta0(mut self, theta0: f64) -> Result<Self> {
        if !theta0.is_finite() {
            return Err(HodoError::NonFinite("theta0"));
        }
        self.theta0 = theta0;
        Ok(self)
    }

    pub fn m(&self) -> f64 {
        self.m
    }
    pub fn kappa(&self) -> f64 {
        self.kappa
    }
    pub fn ell(&self) -> f64 {
        self.ell
    }
    pub fn energy(&self) -> f64 {
        self.energy
    }
    pub fn theta0(&self) -> f64 {
        self.theta0
    }
    pub fn regime(&self) -> Regime {
        self.regime
    }
    /// `kappa / ell`.
    pub fn ratio(&self) -> f64 {
        self.ratio
    }
    /// `E / m`.
    pub fn e_over_m(&self) -> f64 {
        self.energy / self.m
    }
    /// Sign of the coupling: -1 attraction, +1 repulsion.
    pub fn epsilon(&self) -> f64 {
        self.kappa.signum()
    }
    pub fn is_attractive(&self) -> bool {
        self.kappa < 0.0
    }
    pub fn lambda_sq(&self) -> f64 {
        self.lambda_sq
    }
    pub fn lambda(&self) -> f64 {
        self.lambda_sq.sqrt()
    }
    /// `beta = sqrt(1 - kappa^2/ell^2)` in the time-like regime.
    pub fn beta(&self) -> Option<f64> {
        (self.regime == Regime::TimeLike).then_some(self.rate)
    }
    /// `beta_bar = sqrt(kappa^2/ell^2 - 1)` in the space-like regime.
    pub fn beta_bar(&self) -> Option<f64> {
        (self.regime == Regime::SpaceLike).then_some(self.rate)
    }
    /// Hamilton-vector amplitude `B_o` in the time-like regime.
    pub fn b_o(&self) -> Option<f64> {
        (self.regime == Regime::TimeLike).then_some(self.amplitude)
    }
    /// Hamilton-vector amplitude `A_o` in the space-like regime.
    pub fn a_o(&self) -> Option<f64> {
        (self.regime == Regime::SpaceLike).then_some(self.amplitude)
    }
    /// `beta` or `beta_bar` (0 when light-like).
    pub fn rate(&self) -> f64 {
        self.rate
    }
    /// `B_o`, `A_o`, or `E/2m` for the light-like case.
    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }
    /// `beta m` for the time-like regime, zero otherwise.
    pub fn minimum_energy(&self) -> f64 {
        match self.regime {
            Regime::TimeLike => self.rate * self.m,
            _ => 0.0,
        }
    }
}

pub fn classify(p: &SystemParams) -> Classification {
    Classification {
        regime: p.regime,
        vo_squared: p.ratio * p.ratio - 1.0,
    }
}

/// `v_o(theta) = (1, -(kappa/ell) theta_hat, 0)`.
pub fn axis_vector(p: &SystemParams, theta: f64) -> FourVector {
    let f = polar_frame(theta);
    FourVector::from_polar(1.0, 0.0, -p.ratio, &f)
}

/// `u0 + (kappa/ell) u_theta - E/m`, which equals `-u.v_o - E/m`.
pub fn energy_residual(p: &SystemParams, u: &FourVector, theta: f64) -> f64 {
    -minkowski_dot(u, &axis_vector(p, theta)) - p.e_over_m()
}

/// Hodograph point split into time, radial and tangential components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarVelocity {
    pub u0: f64,
    pub u_r: f64,
    pub u_theta: f64,
}

impl PolarVelocity {
    pub fn to_four_vector(self, theta: f64) -> FourVector {
        FourVector::from_polar(self.u0, self.u_r, self.u_theta, &polar_frame(theta))
    }
}

fn require(p: &SystemParams, expected: Regime) -> Result<()> {
    if p.regime != expected {
        return Err(HodoError::WrongRegime {
            expected,
            found: p.regime,
        });
    }
    Ok(())
}

fn hyperbolic_arg(p: &SystemParams, theta: f64) -> Result<f64> {
    let x = p.rate * (theta - p.theta0);
    if !x.is_finite() || x.abs() > HYPERBOLIC_ARG_CAP {
        return Err(HodoError::RangeOverflow { argument: x });
    }
    Ok(x)
}

fn timelike_polar(p: &SystemParams, theta: f64) -> Result<PolarVelocity> {
    require(p, Regime::TimeLike)?;
    let minimum = p.minimum_energy();
    if p.energy < minimum * (1.0 - 1e-12) {
        return Err(HodoError::BelowMinimumEnergy {
            energy: p.energy,
            minimum,
        });
    }
    let (beta, b) = (p.rate, p.amplitude);
    let e = p.e_over_m();
    let (s, c) = (beta * (theta - p.theta0)).sin_cos();
    Ok(PolarVelocity {
        u0: e / (beta * beta) - p.ratio * b / beta * c,
        u_r: b * s,
        u_theta: -p.ratio * e / (beta * beta) + b / beta * c,
    })
}

fn lightlike_polar(p: &SystemParams, theta: f64) -> Result<PolarVelocity> {
    require(p, Regime::LightLike)?;
    let eps = p.epsilon();
    let e = p.e_over_m();
    let t = theta - p.theta0;
    Ok(PolarVelocity {
        u0: (e * e + 1.0) / (2.0 * e) + 0.5 * e * t * t,
        u_r: eps * e * t,
        u_theta: -eps * (0.5 * e * t * t - (e * e - 1.0) / (2.0 * e)),
    })
}

fn spacelike_polar(p: &SystemParams, theta: f64) -> Result<PolarVelocity> {
    require(p, Regime::SpaceLike)?;
    let x = hyperbolic_arg(p, theta)?;
    let (bb, a) = (p.rate, p.amplitude);
    let eps = p.epsilon();
    let e = p.e_over_m();
    let (sh, ch) = (x.sinh(), x.cosh());
    // radial sign fixed by the flow equation (matches -E/(m bb^2) v_o + A_o n)
    Ok(PolarVelocity {
        u0: -e / (bb * bb) + p.ratio.abs() * a / bb * ch,
        u_r: eps * a * sh,
        u_theta: p.ratio * e / (bb * bb) - eps * a / bb * ch,
    })
}

/// Closed-form hodograph in polar components, dispatched on the regime.
pub fn polar_hodograph(p: &SystemParams, theta: f64) -> Result<PolarVelocity> {
    match p.regime {
        Regime::TimeLike => timelike_polar(p, theta),
        Regime::LightLike => lightlike_polar(p, theta),
        Regime::SpaceLike => spacelike_polar(p, theta),
    }
}

pub fn timelike_hodograph(p: &SystemParams, theta: f64) -> Result<FourVector> {
    timelike_polar(p, theta).map(|v| v.to_four_vector(theta))
}

pub fn lightlike_hodograph(p: &SystemParams, theta: f64) -> Result<FourVector> {
    lightlike_polar(p, theta).map(|v| v.to_four_vector(theta))
}

pub fn spacelike_hodograph(p: &SystemParams, theta: f64) -> Result<FourVector> {
    spacelike_polar(p, theta).map(|v| v.to_four_vector(theta))
}

pub fn hodograph(p: &SystemParams, theta: f64) -> Result<FourVector> {
    polar_hodograph(p, theta).map(|v| v.to_four_vector(theta))
}

/// Tangential component `u . theta_hat` of the closed form.
pub fn u_theta(p: &SystemParams, theta: f64) -> Result<f64> {
    polar_hodograph(p, theta).map(|v| v.u_theta)
}

/// Coefficient of `v_o` in the on-axis component `w_o`.
pub fn on_axis_coefficient(p: &SystemParams) -> f64 {
    match p.regime {
        Regime::LightLike => p.m / (2.0 * p.energy),
        _ => p.e_over_m() / (1.0 - p.ratio * p.ratio),
    }
}

/// `w_o(theta)`, the energy-scaled axis vector.
pub fn on_axis_component(p: &SystemParams, theta: f64) -> FourVector {
    axis_vector(p, theta) * on_axis_coefficient(p)
}

/// The energy-independent off-axis solution `n_o(theta)`: `n_1` when
/// time-like, the light-like null vector, or the space-like time-like unit
/// vector.
pub fn off_axis_direction(p: &SystemParams, theta: f64) -> Result<FourVector> {
    let f = polar_frame(theta);
    let t = theta - p.theta0;
    let eps = p.epsilon();
    Ok(match p.regime {
        Regime::TimeLike => {
            let beta = p.rate;
            let (s, c) = (beta * t).sin_cos();
            FourVector::from_polar(-p.ratio / beta * c, s, c / beta, &f)
        }
        Regime::LightLike => {
            FourVector::from_polar(1.0 + t * t, 2.0 * eps * t, eps * (1.0 - t * t), &f)
        }
        Regime::SpaceLike => {
            let x = hyperbolic_arg(p, theta)?;
            let bb = p.rate;
            let (sh, ch) = (x.sinh(), x.cosh());
            FourVector::from_polar(p.ratio.abs() / bb * ch, eps * sh, -eps / bb * ch, &f)
        }
    })
}

/// Relativistic Hamilton vector `B = u - w_o`.
pub fn hamilton_vector(p: &SystemParams, theta: f64) -> Result<FourVector> {
    Ok(hodograph(p, theta)? - on_axis_component(p, theta))
}

/// Time-like frame `(n_1, n_2)` tangent to the hyperboloid at the
/// minimal-energy point `u_o = v_o / beta`.
pub fn frame_vectors(p: &SystemParams, theta: f64) -> Result<(FourVector, FourVector)> {
    require(p, Regime::TimeLike)?;
    let beta = p.rate;
    let f = polar_frame(theta);
    let (s, c) = (beta * (theta - p.theta0)).sin_cos();
    let n1 = FourVector::from_polar(-p.ratio / beta * c, s, c / beta, &f);
    let n2 = FourVector::from_polar(p.ratio / beta * s, c, -s / beta, &f);
    Ok((n1, n2))
}

/// Precession rate `kappa^2 / (beta ell^2)` of the time-like frame.
pub fn frame_precession_rate(p: &SystemParams) -> Result<f64> {
    require(p, Regime::TimeLike)?;
    Ok(p.ratio * p.ratio / p.rate)
}

/// `du/dE = (E u - m v_o) / Lambda^2` at fixed angle.
pub fn energy_gradient(p: &SystemParams, theta: f64) -> Result<FourVector> {
    let scale = p.energy.max(p.m).powi(2);
    if p.lambda_sq <= 1e-12 * scale {
        return Err(HodoError::DegenerateEnergyDirection {
            lambda_sq: p.lambda_sq,
        });
    }
    let u = hodograph(p, theta)?;
    Ok((u * p.energy - axis_vector(p, theta) * p.m) * (1.0 / p.lambda_sq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spacetime::omega_apply;

    const S3: f64 = 0.866_025_403_784_438_6;

    fn p(k: f64, e: f64) -> SystemParams {
        SystemParams::natural(k, e).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&SystemParams::new(1.0, -1.0, 2.0, 1.0).unwrap()).regime, Regime::TimeLike);
        assert_eq!(classify(&p(-1.0, 0.5)).regime, Regime::LightLike);
        assert_eq!(classify(&p(1.5, 1.2)).regime, Regime::SpaceLike);
        let c = classify(&SystemParams::new(1.0, -1.0, 2.0, 1.0).unwrap());
        assert!((c.vo_squared + 0.75).abs() < 1e-15);
        // equality band
        assert_eq!(classify(&p(1.0 + 1e-13, 1.2)).regime, Regime::LightLike);
        assert_eq!(classify(&p(1.0 + 1e-9, 1.2)).regime, Regime::SpaceLike);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(SystemParams::new(0.0, -1.0, 1.0, 1.0).is_err());
        assert!(SystemParams::new(1.0, 0.0, 1.0, 1.0).is_err());
        assert!(SystemParams::new(1.0, -1.0, -1.0, 1.0).is_err());
        assert!(SystemParams::new(1.0, -1.0, 1.0, f64::NAN).is_err());
        assert!(matches!(
            SystemParams::natural(-S3, 0.4),
            Err(HodoError::BelowMinimumEnergy { .. })
        ));
    }

    #[test]
    fn axis_vector_example() {
        let v = axis_vector(&p(-S3, 0.6), 0.0);
        assert_eq!(v.w0, 1.0);
        assert!(v.wx.abs() < 1e-16);
        assert!((v.wy - S3).abs() < 1e-16);
        assert_eq!(v.wz, 0.0);
    }

    #[test]
    fn axis_vector_norm_and_flow() {
        let h = 1e-6;
        for &k in &[-S3, 0.3, 1.0, -1.0, 1.5, -1.2] {
            let q = p(k, 1.3);
            for i in 0..100 {
                let th = -7.0 + 0.141 * i as f64;
                let v = axis_vector(&q, th);
                assert!((minkowski_dot(&v, &v) - (k * k - 1.0)).abs() < 1e-14);
                let d = (axis_vector(&q, th + h) - axis_vector(&q, th - h)) * (0.5 / h);
                let rhs = omega_apply(th, &v) * q.ratio();
                assert!((d - rhs).max_abs() < 1e-8);
            }
        }
    }

    #[test]
    fn timelike_minimum_energy_is_scaled_axis() {
        let q = p(-S3, 0.5);
        assert!((q.beta().unwrap() - 0.5).abs() < 1e-15);
        assert!(q.b_o().unwrap() < 1e-7);
        for i in 0..20 {
            let th = 0.37 * i as f64;
            let u = timelike_hodograph(&q, th).unwrap();
            let uo = axis_vector(&q, th) * (1.0 / 0.5);
            assert!((u - uo).max_abs() < 1e-7);
            assert!(energy_residual(&q, &uo, th).abs() < 1e-12);
        }
    }

    #[test]
    fn timelike_reference_amplitude() {
        let q = p(-S3, 0.6);
        assert!((q.b_o().unwrap() - 0.44f64.sqrt()).abs() < 1e-15);
        assert!((q.b_o().unwrap() - 0.6633250).abs() < 1e-7);
        for i in 0..1000 {
            let u = hodograph(&q, -30.0 + 0.06 * i as f64).unwrap();
            assert!((minkowski_dot(&u, &u) + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn free_particle_at_rest() {
        let q = p(1.0, 1.0);
        let u = lightlike_hodograph(&q, 0.0).unwrap();
        assert_eq!(u.w0, 1.0);
        assert!(u.wx.abs() < 1e-16 && u.wy.abs() < 1e-16);
        assert_eq!(energy_residual(&q, &FourVector::TIME_AXIS, 0.0), 0.0);
    }

    #[test]
    fn lightlike_decomposition_vectors() {
        for &k in &[1.0, -1.0] {
            let q = p(k, 1.25);
            assert!((lightlike_hodograph(&q, 0.0).unwrap().w0 - 1.025).abs() < 1e-15);
            for i in 0..100 {
                let th = -5.0 + 0.1 * i as f64;
                let n = off_axis_direction(&q, th).unwrap();
                let v = axis_vector(&q, th);
                assert!(minkowski_dot(&n, &n).abs() < 1e-12);
                assert!((minkowski_dot(&n, &v) + 2.0).abs() < 1e-12);
                let u = hodograph(&q, th).unwrap();
                let recon = v * (1.0 / 2.5) + n * 0.625;
                assert!((u - recon).max_abs() < 1e-13);
            }
        }
    }

    #[test]
    fn spacelike_reference_values() {
        let q = p(1.5, 1.25);
        assert!((q.beta_bar().unwrap() - 1.25f64.sqrt()).abs() < 1e-15);
        assert!((q.a_o().unwrap() - 1.5).abs() < 1e-15);
        for i in 0..100 {
            let th = -3.0 + 0.06 * i as f64;
            let n = off_axis_direction(&q, th).unwrap();
            assert!((minkowski_dot(&n, &n) + 1.0).abs() < 1e-12);
            let u = hodograph(&q, th).unwrap();
            assert!((minkowski_dot(&u, &u) + 1.0).abs() < 1e-12);
            let recon = axis_vector(&q, th) * (-1.25 / 1.25) + n * 1.5;
            assert!((u - recon).max_abs() < 1e-12);
        }
        // negative on-axis coefficient
        assert!(on_axis_coefficient(&q) < 0.0);
        assert!((on_axis_coefficient(&q) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn spacelike_overflow_guard() {
        let q = p(1.5, 1.25);
        assert!(matches!(
            hodograph(&q, 700.0),
            Err(HodoError::RangeOverflow { .. })
        ));
    }

    #[test]
    fn wrong_regime_errors() {
        let q = p(-S3, 0.6);
        assert!(matches!(lightlike_hodograph(&q, 0.0), Err(HodoError::WrongRegime { .. })));
        assert!(matches!(spacelike_hodograph(&q, 0.0), Err(HodoError::WrongRegime { .. })));
        assert!(matches!(frame_vectors(&p(1.5, 2.0), 0.0), Err(HodoError::WrongRegime { .. })));
    }

    #[test]
    fn dispatch_is_bitwise() {
        let q = p(-S3, 0.9);
        assert_eq!(hodograph(&q, 0.77).unwrap(), timelike_hodograph(&q, 0.77).unwrap());
        let q = p(-1.0, 0.9);
        assert_eq!(hodograph(&q, 0.77).unwrap(), lightlike_hodograph(&q, 0.77).unwrap());
        let q = p(-1.2, 0.9);
        assert_eq!(hodograph(&q, 0.77).unwrap(), spacelike_hodograph(&q, 0.77).unwrap());
    }

    #[test]
    fn on_axis_magnitudes() {
        let q = p(-S3, 0.9);
        let w = on_axis_component(&q, 0.4);
        let beta = 0.5;
        assert!((minkowski_dot(&w, &w) + 0.81 / (beta * beta)).abs() < 1e-12);
        let q = p(1.0, 0.9);
        let w = on_axis_component(&q, 0.4);
        assert!(minkowski_dot(&w, &w).abs() < 1e-15);
    }

    #[test]
    fn hamilton_vector_magnitudes() {
        // time-like: B.B = B_o^2 = Lambda^2/(m beta)^2
        let q = p(-S3, 0.6);
        let b = q.b_o().unwrap();
        for i in 0..1000 {
            let th = -20.0 + 0.04 * i as f64;
            let bv = hamilton_vector(&q, th).unwrap();
            assert!((minkowski_dot(&bv, &bv) - b * b).abs() < 1e-12);
            let via_n = off_axis_direction(&q, th).unwrap() * b;
            assert!((bv - via_n).max_abs() < 1e-12);
        }
        assert!((b * b - q.lambda_sq() / 0.25).abs() < 1e-12);
        // space-like: B.B = -A_o^2
        let q = p(-1.2, 1.25);
        let a = q.a_o().unwrap();
        for i in 0..200 {
            let bv = hamilton_vector(&q, -4.0 + 0.04 * i as f64).unwrap();
            assert!((minkowski_dot(&bv, &bv) + a * a).abs() < 1e-11);
        }
        // minimum energy: B vanishes
        let q = p(-S3, 0.5);
        assert!(hamilton_vector(&q, 1.1).unwrap().max_abs() < 1e-7);
    }

    #[test]
    fn frame_orthonormality() {
        let q = p(-S3, 0.6);
        for i in 0..100 {
            let th = -10.0 + 0.2 * i as f64;
            let (n1, n2) = frame_vectors(&q, th).unwrap();
            let uo = axis_vector(&q, th) * 2.0;
            assert!((minkowski_dot(&n1, &n1) - 1.0).abs() < 1e-12);
            assert!((minkowski_dot(&n2, &n2) - 1.0).abs() < 1e-12);
            assert!(minkowski_dot(&n1, &n2).abs() < 1e-12);
            assert!(minkowski_dot(&uo, &n1).abs() < 1e-12);
            assert!(minkowski_dot(&uo, &n2).abs() < 1e-12);
        }
    }

    #[test]
    fn energy_gradient_degenerate_at_minimum() {
        assert!(matches!(
            energy_gradient(&p(-S3, 0.5), 0.3),
            Err(HodoError::DegenerateEnergyDirection { .. })
        ));
    }
}
