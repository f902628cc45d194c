//! Arithmetic of the 1+3 pseudo-Euclidean embedding space.
//!
//! Signature is (-, +, +, +). Vectors carry a `z` slot that stays zero for
//! planar motion.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{HodoError, Result};

/// A point of the embedding space; carrier for 4-velocities, the axis
/// vector and the frame vectors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FourVector {
    pub w0: f64,
    pub wx: f64,
    pub wy: f64,
    pub wz: f64,
}

impl FourVector {
    pub const ZERO: FourVector = FourVector::new(0.0, 0.0, 0.0, 0.0);
    pub const TIME_AXIS: FourVector = FourVector::new(1.0, 0.0, 0.0, 0.0);

    pub const fn new(w0: f64, wx: f64, wy: f64, wz: f64) -> Self {
        FourVector { w0, wx, wy, wz }
    }

    /// Builds `(w0, a r_hat + b theta_hat, 0)` in the frame at `frame.theta`.
    pub fn from_polar(w0: f64, radial: f64, tangential: f64, frame: &PolarFrame) -> Self {
        let [rx, ry] = frame.r_hat;
        let [tx, ty] = frame.theta_hat;
        FourVector::new(
            w0,
            radial * rx + tangential * tx,
            radial * ry + tangential * ty,
            0.0,
        )
    }

    pub fn is_finite(&self) -> bool {
        self.w0.is_finite() && self.wx.is_finite() && self.wy.is_finite() && self.wz.is_finite()
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w0, self.wx, self.wy, self.wz]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        FourVector::new(a[0], a[1], a[2], a[3])
    }

    /// Radial and tangential planar components in the frame at `theta`.
    pub fn polar_components(&self, theta: f64) -> (f64, f64) {
        let f = polar_frame(theta);
        (
            self.wx * f.r_hat[0] + self.wy * f.r_hat[1],
            self.wx * f.theta_hat[0] + self.wy * f.theta_hat[1],
        )
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0_f64, |acc, c| acc.max(c.abs()))
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector::new(self.w0 + o.w0, self.wx + o.wx, self.wy + o.wy, self.wz + o.wz)
    }
}

impl AddAssign for FourVector {
    fn add_assign(&mut self, o: FourVector) {
        *self = *self + o;
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector::new(self.w0 - o.w0, self.wx - o.wx, self.wy - o.wy, self.wz - o.wz)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        FourVector::new(self.w0 * s, self.wx * s, self.wy * s, self.wz * s)
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, v: FourVector) -> FourVector {
        v * self
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        self * -1.0
    }
}

/// Inner product with metric diag(-1, 1, 1, 1).
pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> f64 {
    -a.w0 * b.w0 + a.wx * b.wx + a.wy * b.wy + a.wz * b.wz
}

/// Polar unit vectors in the plane of motion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarFrame {
    pub theta: f64,
    pub r_hat: [f64; 2],
    pub theta_hat: [f64; 2],
}

pub fn polar_frame(theta: f64) -> PolarFrame {
    let (s, c) = theta.sin_cos();
    PolarFrame {
        theta,
        r_hat: [c, s],
        theta_hat: [-s, c],
    }
}

/// The matrix `Omega^mu_nu(theta)` generating the hodograph flow
/// `dw/dtheta = (kappa/ell) Omega w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationGenerator {
    pub m: [[f64; 4]; 4],
}

impl RotationGenerator {
    pub fn apply(&self, w: &FourVector) -> FourVector {
        let v = w.to_array();
        let mut out = [0.0; 4];
        for (row, o) in self.m.iter().zip(out.iter_mut()) {
            *o = row.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
        }
        FourVector::from_array(out)
    }

    /// Index-lowered form `Omega_{mu nu} = g_{mu lambda} Omega^lambda_nu`.
    pub fn lowered(&self) -> [[f64; 4]; 4] {
        let mut low = self.m;
        for x in low[0].iter_mut() {
            *x = -*x;
        }
        low
    }
}

pub fn rotation_generator(theta: f64) -> RotationGenerator {
    let (s, c) = theta.sin_cos();
    RotationGenerator {
        m: [
            [0.0, c, s, 0.0],
            [c, 0.0, 0.0, 0.0],
            [s, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ],
    }
}

/// `Omega(theta) w` without materialising the matrix.
#[inline]
pub fn omega_apply(theta: f64, w: &FourVector) -> FourVector {
    let (s, c) = theta.sin_cos();
    FourVector::new(c * w.wx + s * w.wy, c * w.w0, s * w.w0, 0.0)
}

/// Ordinary 3-velocity `u_vec / u0` of a 4-velocity.
pub fn spatial_velocity(u: &FourVector) -> Result<[f64; 3]> {
    if !u.is_finite() {
        return Err(HodoError::NonFinite("four-velocity"));
    }
    // on-shell u0 = 1 exactly at rest; allow rounding below it
    if u.w0 < 1.0 - 1e-12 {
        return Err(HodoError::InvalidVelocity { u0: u.w0 });
    }
    Ok([u.wx / u.w0, u.wy / u.w0, u.wz / u.w0])
}
