//! Classical Kepler/Coulomb hodograph: a circle of radius |kappa|/ell in
//! velocity space displaced by the (constant) Hamilton vector.

use crate::error::{HodoError, Result};
use crate::spacetime::polar_frame;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NewtonianParams {
    pub m: f64,
    pub kappa: f64,
    pub ell: f64,
    /// Energy `m v^2/2 + kappa/r`.
    pub e_prime: f64,
    b_o: f64,
}

impl NewtonianParams {
    pub fn new(m: f64, kappa: f64, ell: f64, e_prime: f64) -> Result<Self> {
        if ![m, kappa, ell, e_prime].iter().all(|x| x.is_finite()) {
            return Err(HodoError::NonFinite("newtonian parameters"));
        }
        if m <= 0.0 || ell <= 0.0 || kappa == 0.0 {
            return Err(HodoError::UnphysicalParameters(format!(
                "need m > 0, ell > 0, kappa != 0 (m={m}, ell={ell}, kappa={kappa})"
            )));
        }
        let disc = 2.0 * e_prime / m + (kappa / ell).powi(2);
        // the minimal-energy circle sits exactly on disc = 0; tolerate rounding there
        let scale = (kappa / ell).powi(2);
        if disc < -1e-14 * scale {
            return Err(HodoError::UnphysicalParameters(format!(
                "B_o^2 = {disc} < 0: energy below the circular-orbit minimum"
            )));
        }
        Ok(NewtonianParams {
            m,
            kappa,
            ell,
            e_prime,
            b_o: disc.max(0.0).sqrt(),
        })
    }

    pub fn hamilton_vector_magnitude(&self) -> f64 {
        self.b_o
    }

    /// Radius of the hodograph circle, |kappa|/ell.
    pub fn circle_radius(&self) -> f64 {
        (self.kappa / self.ell).abs()
    }

    /// Eccentricity of the spatial conic, `B_o ell / |kappa|`.
    pub fn eccentricity(&self) -> f64 {
        self.b_o / self.circle_radius()
    }
}

/// `B_o = sqrt(2E'/m + kappa^2/ell^2)`.
pub fn hamilton_vector_magnitude(m: f64, kappa: f64, ell: f64, e_prime: f64) -> Result<f64> {
    NewtonianParams::new(m, kappa, ell, e_prime).map(|p| p.hamilton_vector_magnitude())
}

/// The Hamilton vector pointing along `direction` (radians from +x).
pub fn hamilton_vector(p: &NewtonianParams, direction: f64) -> [f64; 2] {
    let (s, c) = direction.sin_cos();
    [p.b_o * c, p.b_o * s]
}

/// `v(theta) = B_o - (kappa/ell) theta_hat`.
pub fn newtonian_hodograph_point(p: &NewtonianParams, theta: f64, b_direction: f64) -> [f64; 2] {
    let b = hamilton_vector(p, b_direction);
    let f = polar_frame(theta);
    let k = p.kappa / p.ell;
    [b[0] - k * f.theta_hat[0], b[1] - k * f.theta_hat[1]]
}

/// Tangential velocity `v . theta_hat`.
pub fn newtonian_v_theta(p: &NewtonianParams, theta: f64, b_direction: f64) -> f64 {
    let v = newtonian_hodograph_point(p, theta, b_direction);
    let f = polar_frame(theta);
    v[0] * f.theta_hat[0] + v[1] * f.theta_hat[1]
}

/// `r = ell / (m v_theta)`; the endpoint `v_theta <= 0` is reported as a
/// point at infinity.
pub fn newtonian_radius(p: &NewtonianParams, theta: f64, b_direction: f64) -> Result<f64> {
    let vt = newtonian_v_theta(p, theta, b_direction);
    if vt <= 0.0 {
        return Err(HodoError::PointAtInfinity { v_theta: vt });
    }
    Ok(p.ell / (p.m * vt))
}

/// `m v^2/2 + (m kappa/ell) v_theta - E'` for a velocity `v` at angle `theta`.
pub fn newtonian_energy_residual(p: &NewtonianParams, v: [f64; 2], theta: f64) -> f64 {
    let f = polar_frame(theta);
    let vt = v[0] * f.theta_hat[0] + v[1] * f.theta_hat[1];
    0.5 * p.m * (v[0] * v[0] + v[1] * v[1]) + p.m * p.kappa / p.ell * vt - p.e_prime
}

/// Open angular intervals where `v_theta > 0`, sampled for plotting.
/// Returns `None` when the whole circle is admissible (bound orbit).
pub fn newtonian_unbound_window(p: &NewtonianParams, b_direction: f64) -> Option<(f64, f64)> {
    // v_theta = B_o sin(alpha - theta) - kappa/ell
    let k = p.kappa / p.ell;
    if p.b_o < -k {
        return None;
    }
    if p.b_o <= k.abs() && k > 0.0 {
        return Some((b_direction, b_direction));
    }
    // sin(alpha - theta) > k / B_o
    let phi = (k / p.b_o).clamp(-1.0, 1.0).asin();
    // alpha - theta in (phi, pi - phi)  =>  theta in (alpha - pi + phi, alpha - phi)
    Some((b_direction - std::f64::consts::PI + phi, b_direction - phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kappa: f64, e: f64) -> NewtonianParams {
        NewtonianParams::new(1.0, kappa, 1.0, e).unwrap()
    }

    #[test]
    fn minimal_energy_has_zero_hamilton_vector() {
        let (m, k, l) = (2.0, -3.0, 1.5);
        let e = -m * k * k / (2.0 * l * l);
        let b = hamilton_vector_magnitude(m, k, l, e).unwrap();
        assert!(b < 1e-7, "{b}");
    }

    #[test]
    fn parabolic_boundary() {
        let b = hamilton_vector_magnitude(1.0, -2.0, 4.0, 0.0).unwrap();
        assert_eq!(b, 0.5);
    }

    #[test]
    fn reference_magnitude_and_energy_substitution() {
        let p = params(-1.0, 0.375);
        assert!((p.hamilton_vector_magnitude() - 1.75f64.sqrt()).abs() < 1e-15);
        assert!((p.hamilton_vector_magnitude() - 1.3228756).abs() < 1e-7);
        for i in 0..50 {
            let th = i as f64 * 0.13;
            let v = newtonian_hodograph_point(&p, th, 0.7);
            assert!(newtonian_energy_residual(&p, v, th).abs() < 1e-12);
        }
    }

    #[test]
    fn below_minimum_is_rejected() {
        assert!(matches!(
            NewtonianParams::new(1.0, -1.0, 1.0, -0.6),
            Err(HodoError::UnphysicalParameters(_))
        ));
    }

    #[test]
    fn circular_case() {
        let p = params(-0.8, -0.32);
        assert!(p.hamilton_vector_magnitude() < 1e-7);
        for i in 0..100 {
            let th = i as f64 * 0.0731;
            let v = newtonian_hodograph_point(&p, th, 0.0);
            assert!((v[0].hypot(v[1]) - 0.8).abs() < 1e-7);
            let r = newtonian_radius(&p, th, 0.0).unwrap();
            assert!((r - 1.0 / 0.8).abs() < 1e-6);
        }
        let v0 = newtonian_hodograph_point(&p, 0.0, 0.0);
        assert!(v0[0].abs() < 1e-7 && (v0[1] - 0.8).abs() < 1e-12);
    }

    #[test]
    fn radius_diverges_at_endpoint() {
        // hyperbolic attraction: window endpoints have v_theta = 0
        let p = params(-1.0, 0.5);
        let (lo, hi) = newtonian_unbound_window(&p, 0.0).unwrap();
        assert!(newtonian_v_theta(&p, hi, 0.0).abs() < 1e-12);
        assert!(newtonian_v_theta(&p, lo, 0.0).abs() < 1e-12);
        let mut last = 0.0;
        for k in 1..8 {
            let r = newtonian_radius(&p, hi - 10f64.powi(-k), 0.0).unwrap();
            assert!(r > last);
            last = r;
        }
        assert!(matches!(
            newtonian_radius(&p, hi + 1e-3, 0.0),
            Err(HodoError::PointAtInfinity { .. })
        ));
    }

    #[test]
    fn residual_detects_perturbation() {
        let p = params(-1.0, -0.2);
        let th = 0.4;
        let v = newtonian_hodograph_point(&p, th, 1.0);
        let r1 = newtonian_energy_residual(&p, [v[0] + 1e-3, v[1]], th).abs();
        let r2 = newtonian_energy_residual(&p, [v[0] + 2e-3, v[1]], th).abs();
        assert!(r1 > 1e-5);
        // linear growth for small perturbations
        assert!((r2 / r1 - 2.0).abs() < 0.01);
        assert_eq!(newtonian_energy_residual(&params(-1.0, 0.0), [0.0, 0.0], 0.0), 0.0);
    }

    #[test]
    fn hodograph_obeys_angular_equation() {
        let p = params(-0.7, 0.1);
        let h = 1e-6;
        for i in 0..20 {
            let th = -3.0 + 0.31 * i as f64;
            let a = newtonian_hodograph_point(&p, th + h, 0.3);
            let b = newtonian_hodograph_point(&p, th - h, 0.3);
            let f = polar_frame(th);
            for c in 0..2 {
                let d = (a[c] - b[c]) / (2.0 * h);
                assert!((d - (-0.7) * f.r_hat[c]).abs() < 1e-8);
            }
        }
    }
}
