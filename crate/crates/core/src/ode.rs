//! Independent numerical integration of the hodograph flow
//! `dw/dtheta = (kappa/ell) Omega(theta) w` in the embedding space.
//!
//! The default stepper is Dormand-Prince 8(5,3) with its 7th-order
//! continuous extension; Dormand-Prince 5(4) is available for order studies
//! whose step sizes would put the 8th-order error below rounding. Neither is
//! structure preserving; the conservation monitors below measure how far
//! `w.w` and `w.v_o` drift instead.

use crate::error::{HodoError, Result};
use crate::relativistic::{axis_vector, u_theta, SystemParams};
use crate::spacetime::{minkowski_dot, omega_apply, FourVector};

/// Longest span accepted by [`integrate`].
pub const MAX_SPAN: f64 = 200.0;

const OVERFLOW_LIMIT: f64 = 1e300;

/// Embedded Runge-Kutta pair used by [`integrate`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Dormand-Prince 5(4) with 4th-order continuous extension.
    Dopri5,
    /// Dormand-Prince 8(5,3) with 7th-order continuous extension.
    #[default]
    Dop853,
}

impl Method {
    pub fn order(self) -> u32 {
        match self {
            Method::Dopri5 => 5,
            Method::Dop853 => 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegratorConfig {
    pub method: Method,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_step: f64,
    pub max_steps: usize,
    /// Disables step control and uses this step size throughout.
    pub fixed_step: Option<f64>,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            method: Method::default(),
            rel_tol: 1e-12,
            abs_tol: 1e-12,
            max_step: 0.05,
            max_steps: 1_000_000,
            fixed_step: None,
        }
    }
}

impl IntegratorConfig {
    pub fn fixed(method: Method, step: f64) -> Self {
        IntegratorConfig {
            method,
            fixed_step: Some(step),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, tol) in [("rel_tol", self.rel_tol), ("abs_tol", self.abs_tol)] {
            if !(tol > 0.0 && tol <= 1e-2) {
                return Err(HodoError::InvalidArgument(format!(
                    "{name} = {tol} outside (0, 1e-2]"
                )));
            }
        }
        if !(self.max_step > 0.0 && self.max_step.is_finite()) {
            return Err(HodoError::InvalidArgument("max_step must be positive".into()));
        }
        if self.max_steps == 0 {
            return Err(HodoError::InvalidArgument("max_steps must be positive".into()));
        }
        if let Some(h) = self.fixed_step {
            if !(h > 0.0 && h.is_finite()) {
                return Err(HodoError::InvalidArgument("fixed_step must be positive".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Segment {
    method: Method,
    theta: f64,
    h: f64,
    cont: [FourVector; 8],
}

impl Segment {
    fn eval(&self, theta: f64) -> FourVector {
        let s = (theta - self.theta) / self.h;
        let s1 = 1.0 - s;
        let c = &self.cont;
        if self.method == Method::Dopri5 {
            return c[0] + (c[1] + (c[2] + (c[3] + c[4] * s1) * s) * s1) * s;
        }
        let conpar = c[4] + (c[5] + (c[6] + c[7] * s) * s1) * s;
        c[0] + (c[1] + (c[2] + (c[3] + conpar * s1) * s) * s1) * s
    }
}

/// Dense output of one integration; immutable after construction.
#[derive(Clone, Debug)]
pub struct DenseSolution {
    start: f64,
    end: f64,
    direction: f64,
    segments: Vec<Segment>,
    nodes: Vec<(f64, FourVector)>,
    rejected: usize,
}

impl DenseSolution {
    pub fn span(&self) -> (f64, f64) {
        (self.start, self.end)
    }

    /// Accepted step endpoints, including the initial point.
    pub fn nodes(&self) -> &[(f64, FourVector)] {
        &self.nodes
    }

    pub fn accepted_steps(&self) -> usize {
        self.segments.len()
    }

    pub fn rejected_steps(&self) -> usize {
        self.rejected
    }

    pub fn initial(&self) -> FourVector {
        self.nodes[0].1
    }

    pub fn last(&self) -> FourVector {
        self.nodes[self.nodes.len() - 1].1
    }

    fn progress(&self, theta: f64) -> f64 {
        (theta - self.start) * self.direction
    }

    pub fn contains(&self, theta: f64) -> bool {
        let d = self.progress(theta);
        d >= 0.0 && d <= self.progress(self.end)
    }

    /// Interpolated solution at `theta` inside the span.
    pub fn eval(&self, theta: f64) -> Result<FourVector> {
        if !self.contains(theta) {
            return Err(HodoError::InvalidArgument(format!(
                "theta = {theta} outside integrated span [{}, {}]",
                self.start, self.end
            )));
        }
        if self.segments.is_empty() {
            return Ok(self.nodes[0].1);
        }
        let d = self.progress(theta);
        let idx = self
            .segments
            .partition_point(|s| self.progress(s.theta) <= d)
            .saturating_sub(1);
        Ok(self.segments[idx].eval(theta))
    }

    /// `n` points spread uniformly over the span, endpoints included.
    pub fn sample(&self, n: usize) -> Vec<(f64, FourVector)> {
        let n = n.max(2);
        (0..n)
            .map(|i| {
                let th = if i + 1 == n {
                    self.end
                } else {
                    self.start + (self.end - self.start) * i as f64 / (n - 1) as f64
                };
                (th, self.eval(th).expect("inside span"))
            })
            .collect()
    }
}

/// Integrates the hodograph flow of `p` from `w_start` at `span.0` to `span.1`.
pub fn integrate(
    p: &SystemParams,
    w_start: FourVector,
    span: (f64, f64),
    cfg: &IntegratorConfig,
) -> Result<DenseSolution> {
    integrate_flow(p.ratio(), w_start, span, cfg)
}

/// Same as [`integrate`] with the coupling given directly as `kappa/ell`.
pub fn integrate_flow(
    ratio: f64,
    w_start: FourVector,
    span: (f64, f64),
    cfg: &IntegratorConfig,
) -> Result<DenseSolution> {
    cfg.validate()?;
    let (a, b) = span;
    if !(a.is_finite() && b.is_finite()) {
        return Err(HodoError::NonFinite("integration span"));
    }
    if (b - a).abs() > MAX_SPAN {
        return Err(HodoError::InvalidArgument(format!(
            "span length {} exceeds {MAX_SPAN} rad",
            (b - a).abs()
        )));
    }
    if !w_start.is_finite() || !ratio.is_finite() {
        return Err(HodoError::NonFinite("initial state"));
    }
    let rhs = |th: f64, w: &FourVector| omega_apply(th, w) * ratio;
    Stepper::new(rhs, cfg).run(a, b, w_start)
}

struct Stepper<'c, F> {
    f: F,
    cfg: &'c IntegratorConfig,
}

impl<'c, F: Fn(f64, &FourVector) -> FourVector> Stepper<'c, F> {
    fn new(f: F, cfg: &'c IntegratorConfig) -> Self {
        Stepper { f, cfg }
    }

    fn run(&self, a: f64, b: f64, y0: FourVector) -> Result<DenseSolution> {
        let direction = if b >= a { 1.0 } else { -1.0 };
        let mut sol = DenseSolution {
            start: a,
            end: b,
            direction,
            segments: Vec::new(),
            nodes: vec![(a, y0)],
            rejected: 0,
        };
        if a == b {
            return Ok(sol);
        }
        let total = (b - a).abs();
        let mut t = a;
        let mut y = y0;
        let mut k0 = (self.f)(t, &y);
        // Kahan carry for the state update
        let mut carry = FourVector::ZERO;
        let mut t_carry = 0.0;
        let mut h = match self.cfg.fixed_step {
            Some(hf) => hf,
            None => (0.1 * self.cfg.max_step).min(total),
        };
        let mut last_rejected = false;
        let mut steps = 0usize;

        loop {
            let remaining = (b - t) * direction;
            if remaining <= 1e-14 * total {
                break;
            }
            if steps >= self.cfg.max_steps {
                return Err(HodoError::NonConvergence(format!(
                    "step budget {} exhausted at theta = {t}",
                    self.cfg.max_steps
                )));
            }
            steps += 1;
            let h_abs = h.min(remaining).min(self.cfg.max_step.max(self.cfg.fixed_step.unwrap_or(0.0)));
            if h_abs <= 1e-14 * t.abs().max(1.0) {
                return Err(HodoError::NonConvergence(format!("step size underflow at theta = {t}")));
            }
            let hs = h_abs * direction;
            let mut step = self.attempt(t, &y, &k0, hs)?;

            if let Some(hf) = self.cfg.fixed_step {
                h = hf;
                step.y_new = compensated_add(&y, &step.dy, &mut carry);
                let t_next = compensated_add_scalar(t, hs, &mut t_carry);
                let (t_new, y_new, k_new) = self.accept(&mut sol, t, t_next, &y, hs, step)?;
                t = t_new;
                y = y_new;
                k0 = k_new;
                continue;
            }

            let err = step.err;
            let fac11 = err.powf(1.0 / self.cfg.method.order() as f64);
            // step may shrink by at most `shrink` and grow by at most `grow`
            let (shrink, grow) = match self.cfg.method {
                Method::Dopri5 => (5.0, 10.0),
                Method::Dop853 => (3.0, 6.0),
            };
            if err <= 1.0 {
                let fac = (fac11 / 0.9).clamp(1.0 / grow, shrink);
                let mut h_new = h_abs / fac;
                if last_rejected {
                    h_new = h_new.min(h_abs);
                }
                last_rejected = false;
                step.y_new = compensated_add(&y, &step.dy, &mut carry);
                let t_next = compensated_add_scalar(t, hs, &mut t_carry);
                let (t_new, y_new, k_new) = self.accept(&mut sol, t, t_next, &y, hs, step)?;
                t = t_new;
                y = y_new;
                k0 = k_new;
                h = h_new.min(self.cfg.max_step);
            } else {
                sol.rejected += 1;
                last_rejected = true;
                h = h_abs / (fac11 / 0.9).min(shrink);
            }
        }
        // land exactly on the requested endpoint
        if let Some(last) = sol.nodes.last_mut() {
            last.0 = b;
        }
        Ok(sol)
    }

    fn attempt(&self, t: f64, y: &FourVector, k0: &FourVector, h: f64) -> Result<Trial> {
        match self.cfg.method {
            Method::Dopri5 => self.attempt5(t, y, k0, h),
            Method::Dop853 => self.attempt853(t, y, k0, h),
        }
    }

    fn error_norm(&self, y: &FourVector, y_new: &FourVector, e: &FourVector) -> f64 {
        let (ya, yb, ea) = (y.to_array(), y_new.to_array(), e.to_array());
        let sum: f64 = (0..4)
            .map(|c| {
                let sk = self.cfg.abs_tol + self.cfg.rel_tol * ya[c].abs().max(yb[c].abs());
                (ea[c] / sk).powi(2)
            })
            .sum();
        (sum / 4.0).sqrt()
    }

    fn attempt5(&self, t: f64, y: &FourVector, k0: &FourVector, h: f64) -> Result<Trial> {
        let mut k = [FourVector::ZERO; 16];
        k[0] = *k0;
        for i in 1..7 {
            let mut acc = *y;
            for j in 0..i {
                let a = A5[i][j];
                if a != 0.0 {
                    acc += k[j] * (a * h);
                }
            }
            k[i] = (self.f)(t + C5[i] * h, &acc);
        }
        // the last stage sits at y_new (first-same-as-last)
        let mut incr = FourVector::ZERO;
        for (kj, &bj) in k.iter().zip(A5[6].iter()) {
            incr += *kj * bj;
        }
        let y_new = *y + incr * h;
        if !y_new.is_finite() || y_new.max_abs() > OVERFLOW_LIMIT {
            return Err(HodoError::RangeOverflow { argument: t + h });
        }
        let mut e = FourVector::ZERO;
        for (kj, &ej) in k.iter().zip(E5.iter()) {
            e += *kj * ej;
        }
        let err = self.error_norm(y, &y_new, &(e * h));
        Ok(Trial { k, y_new, dy: incr * h, err })
    }

    fn attempt853(&self, t: f64, y: &FourVector, k0: &FourVector, h: f64) -> Result<Trial> {
        let mut k = [FourVector::ZERO; 16];
        k[0] = *k0;
        for i in 1..12 {
            let mut acc = *y;
            for j in 0..i {
                let a = A[i][j];
                if a != 0.0 {
                    acc += k[j] * (a * h);
                }
            }
            k[i] = (self.f)(t + C[i] * h, &acc);
        }
        let mut incr = FourVector::ZERO;
        for (kj, &bj) in k.iter().zip(B.iter()) {
            if bj != 0.0 {
                incr += *kj * bj;
            }
        }
        let y_new = *y + incr * h;
        if !y_new.is_finite() || y_new.max_abs() > OVERFLOW_LIMIT {
            return Err(HodoError::RangeOverflow { argument: t + h });
        }

        let mut err = 0.0;
        let mut err2 = 0.0;
        let (ya, yb) = (y.to_array(), y_new.to_array());
        let inc = incr.to_array();
        let (k0a, k8a, k11a) = (k[0].to_array(), k[8].to_array(), k[11].to_array());
        for c in 0..4 {
            let sk = self.cfg.abs_tol + self.cfg.rel_tol * ya[c].abs().max(yb[c].abs());
            let e2 = inc[c] - BHH[0] * k0a[c] - BHH[1] * k8a[c] - BHH[2] * k11a[c];
            let e1: f64 = (0..12).map(|j| ER[j] * k[j].to_array()[c]).sum();
            err2 += (e2 / sk).powi(2);
            err += (e1 / sk).powi(2);
        }
        let mut deno = err + 0.01 * err2;
        if deno <= 0.0 {
            deno = 1.0;
        }
        let err = h.abs() * err * (1.0 / (4.0 * deno)).sqrt();
        Ok(Trial { k, y_new, dy: incr * h, err })
    }

    fn accept(
        &self,
        sol: &mut DenseSolution,
        t: f64,
        t_new: f64,
        y: &FourVector,
        h: f64,
        trial: Trial,
    ) -> Result<(f64, FourVector, FourVector)> {
        let Trial { mut k, y_new, .. } = trial;
        if self.cfg.method == Method::Dopri5 {
            let ydiff = y_new - *y;
            let bspl = k[0] * h - ydiff;
            let mut cont = [FourVector::ZERO; 8];
            cont[0] = *y;
            cont[1] = ydiff;
            cont[2] = bspl;
            cont[3] = ydiff - k[6] * h - bspl;
            let mut acc = FourVector::ZERO;
            for (kj, &dj) in k.iter().zip(D5.iter()) {
                acc += *kj * dj;
            }
            cont[4] = acc * h;
            sol.segments.push(Segment { method: Method::Dopri5, theta: t, h, cont });
            sol.nodes.push((t_new, y_new));
            return Ok((t_new, y_new, k[6]));
        }
        k[12] = (self.f)(t_new, &y_new);
        for (row, i) in (13..16).enumerate() {
            let mut acc = *y;
            for j in 0..i {
                let a = A_DENSE[row][j];
                if a != 0.0 {
                    acc += k[j] * (a * h);
                }
            }
            k[i] = (self.f)(t + C_DENSE[row] * h, &acc);
        }
        let ydiff = y_new - *y;
        let bspl = k[0] * h - ydiff;
        let mut cont = [FourVector::ZERO; 8];
        cont[0] = *y;
        cont[1] = ydiff;
        cont[2] = bspl;
        cont[3] = ydiff - k[12] * h - bspl;
        for (d, slot) in D.iter().zip(cont[4..].iter_mut()) {
            let mut acc = FourVector::ZERO;
            for (kj, &dj) in k.iter().zip(d.iter()) {
                if dj != 0.0 {
                    acc += *kj * dj;
                }
            }
            *slot = acc * h;
        }
        sol.segments.push(Segment { method: Method::Dop853, theta: t, h, cont });
        sol.nodes.push((t_new, y_new));
        Ok((t_new, y_new, k[12]))
    }
}

/// `y + dy` with the rounding error of previous additions folded back in.
fn compensated_add(y: &FourVector, dy: &FourVector, carry: &mut FourVector) -> FourVector {
    let yk = *dy - *carry;
    let sum = *y + yk;
    *carry = (sum - *y) - yk;
    sum
}

fn compensated_add_scalar(t: f64, dt: f64, carry: &mut f64) -> f64 {
    let yk = dt - *carry;
    let sum = t + yk;
    *carry = (sum - t) - yk;
    sum
}

struct Trial {
    k: [FourVector; 16],
    y_new: FourVector,
    dy: FourVector,
    err: f64,
}

/// Maximum drift of `w . probe_i` over the span, one entry per probe.
#[derive(Clone, Debug, PartialEq)]
pub struct ConservationReport {
    pub drifts: Vec<f64>,
}

impl ConservationReport {
    pub fn max_drift(&self) -> f64 {
        self.drifts.iter().cloned().fold(0.0, f64::max)
    }
}

/// Monitors `dot(w(theta), probe(theta))` against its initial value at every
/// accepted node and every segment midpoint.
pub fn conservation_report(
    solution: &DenseSolution,
    probes: &[&dyn Fn(f64) -> FourVector],
) -> ConservationReport {
    let mut thetas: Vec<f64> = solution.nodes.iter().map(|n| n.0).collect();
    thetas.extend(solution.segments.iter().map(|s| s.theta + 0.5 * s.h));
    let th_a = solution.start;
    let w_a = solution.initial();
    let drifts = probes
        .iter()
        .map(|probe| {
            let base = minkowski_dot(&w_a, &probe(th_a));
            thetas
                .iter()
                .map(|&th| {
                    let w = solution.eval(th).expect("inside span");
                    (minkowski_dot(&w, &probe(th)) - base).abs()
                })
                .fold(0.0, f64::max)
        })
        .collect();
    ConservationReport { drifts }
}

/// Norm and energy-projection drift of a hodograph integration.
pub fn standard_monitors(p: &SystemParams, solution: &DenseSolution) -> ConservationReport {
    let axis = |th: f64| axis_vector(p, th);
    let own = |th: f64| solution.eval(th).expect("inside span");
    conservation_report(solution, &[&own, &axis])
}

/// Root of the closed-form `u_theta` inside `bracket`, by bisection.
pub fn find_utheta_root(p: &SystemParams, bracket: (f64, f64)) -> Result<f64> {
    let (mut lo, mut hi) = bracket;
    let mut f_lo = u_theta(p, lo)?;
    let f_hi = u_theta(p, hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(HodoError::BracketError { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi || (hi - lo).abs() < 1e-14 {
            break;
        }
        let f_mid = u_theta(p, mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

// Dormand-Prince 5(4) coefficients; row 6 of A5 equals the weights.

const C5: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];

const A5: [[f64; 7]; 7] = [
    [0.0; 7],
    [0.2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0],
];

const E5: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

const D5: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

// Dormand-Prince 8(5,3) coefficients (Hairer, Norsett & Wanner).

const C: [f64; 12] = [
    0.0,
    5.260_015_195_876_773E-2,
    7.890_022_793_815_16E-2,
    1.183_503_419_072_274E-1,
    2.816_496_580_927_726E-1,
    3.333_333_333_333_333E-1,
    0.25,
    3.076_923_076_923_077E-1,
    6.512_820_512_820_513E-1,
    0.6,
    8.571_428_571_428_571E-1,
    1.0,
];

const A: [[f64; 12]; 12] = [
    [0.0; 12],
    [5.260_015_195_876_773E-2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.972_505_698_453_79E-2, 5.917_517_095_361_37E-2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [2.958_758_547_680_685E-2, 0.0, 8.876_275_643_042_054E-2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [
        2.413_651_341_592_667E-1,
        0.0,
        -8.845_494_793_282_861E-1,
        9.248_340_032_617_92E-1,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    ],
    [
        3.703_703_703_703_703_5E-2,
        0.0,
        0.0,
        1.708_286_087_294_738_6E-1,
        1.254_676_875_668_224_2E-1,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    ],
    [
        3.710_937_5E-2,
        0.0,
        0.0,
        1.702_522_110_195_440_5E-1,
        6.021_653_898_045_596E-2,
        -1.757_812_5E-2,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    ],
    [
        3.709_200_011_850_479E-2,
        0.0,
        0.0,
        1.703_839_257_122_399_8E-1,
        1.072_620_304_463_732_8E-1,
        -1.531_943_774_862_440_2E-2,
        8.273_789_163_814_023E-3,
        0.0, 0.0, 0.0, 0.0, 0.0,
    ],
    [
        6.241_109_587_160_757E-1,
        0.0,
        0.0,
        -3.360_892_629_446_941_4,
        -8.682_193_468_417_26E-1,
        2.759_209_969_944_671E1,
        2.015_406_755_047_789_4E1,
        -4.348_988_418_106_996E1,
        0.0, 0.0, 0.0, 0.0,
    ],
    [
        4.776_625_364_382_643_4E-1,
        0.0,
        0.0,
        -2.488_114_619_971_667_7,
        -5.902_908_268_368_43E-1,
        2.123_005_144_818_119_3E1,
        1.527_923_363_288_242_3E1,
        -3.328_821_096_898_486E1,
        -2.033_120_170_850_862_7E-2,
        0.0, 0.0, 0.0,
    ],
    [
        -9.371_424_300_859_873E-1,
        0.0,
        0.0,
        5.186_372_428_844_064,
        1.091_437_348_996_729_5,
        -8.149_787_010_746_927,
        -1.852_006_565_999_696E1,
        2.273_948_709_935_050_5E1,
        2.493_605_552_679_652_3,
        -3.046_764_471_898_219_6,
        0.0, 0.0,
    ],
    [
        2.273_310_147_516_538,
        0.0,
        0.0,
        -1.053_449_546_673_725E1,
        -2.000_872_058_224_862_5,
        -1.795_893_186_311_88E1,
        2.794_888_452_941_996E1,
        -2.858_998_277_135_023_5,
        -8.872_856_933_530_63,
        1.236_056_717_579_430_3E1,
        6.433_927_460_157_636E-1,
        0.0,
    ],
];

const B: [f64; 12] = [
    5.429_373_411_656_876_5E-2,
    0.0,
    0.0,
    0.0,
    0.0,
    4.450_312_892_752_409,
    1.891_517_899_314_500_3,
    -5.801_203_960_010_585,
    3.111_643_669_578_199E-1,
    -1.521_609_496_625_161E-1,
    2.013_654_008_040_303_4E-1,
    4.471_061_572_777_259E-2,
];

const ER: [f64; 12] = [
    1.312_004_499_419_488E-2,
    0.0,
    0.0,
    0.0,
    0.0,
    -1.225_156_446_376_204_4,
    -4.957_589_496_572_502E-1,
    1.664_377_182_454_986_4,
    -3.503_288_487_499_736_6E-1,
    3.341_791_187_130_175E-1,
    8.192_320_648_511_571E-2,
    -2.235_530_786_388_629_4E-2,
];

const BHH: [f64; 3] = [
    2.440_944_881_889_764E-1,
    7.338_466_882_816_118E-1,
    2.205_882_352_941_176_6E-2,
];

const C_DENSE: [f64; 3] = [0.1, 0.2, 7.777_777_777_777_778E-1];

// Columns 0..12 are the core stages, 12 is f(t+h, y_new), 13 and 14 the
// first two extra stages.
const A_DENSE: [[f64; 16]; 3] = [
    [
        5.616_750_228_304_795_4E-2,
        0.0, 0.0, 0.0, 0.0, 0.0,
        2.535_002_102_166_248_3E-1,
        -2.462_390_374_708_025E-1,
        -1.241_914_232_638_163_7E-1,
        1.532_917_982_787_656_8E-1,
        8.201_052_295_634_69E-3,
        7.567_897_660_545_699E-3,
        -8.298E-3,
        0.0, 0.0, 0.0,
    ],
    [
        3.183_464_816_350_214E-2,
        0.0, 0.0, 0.0, 0.0,
        2.830_090_967_236_677_6E-2,
        5.354_198_830_743_856_6E-2,
        -5.492_374_857_139_099E-2,
        0.0, 0.0,
        -1.083_473_286_972_493_2E-4,
        3.825_710_908_356_584E-4,
        -3.404_650_086_874_045_6E-4,
        1.413_124_436_746_325E-1,
        0.0, 0.0,
    ],
    [
        -4.288_963_015_837_919_4E-1,
        0.0, 0.0, 0.0, 0.0,
        -4.697_621_415_361_164,
        7.683_421_196_062_599,
        4.068_989_818_397_11,
        3.567_271_874_552_811E-1,
        0.0, 0.0, 0.0,
        -1.399_024_165_159_014_5E-3,
        2.947_514_789_152_772_4,
        -9.150_958_472_179_87,
        0.0,
    ],
];

const D: [[f64; 16]; 4] = [
    [
        -8.428_938_276_109_013,
        0.0, 0.0, 0.0, 0.0,
        5.667_149_535_193_777E-1,
        -3.068_949_945_949_891_7,
        2.384_667_656_512_07,
        2.117_034_582_445_028,
        -8.713_915_837_779_73E-1,
        2.240_437_430_260_788_3,
        6.315_787_787_694_688E-1,
        -8.899_033_645_133_331E-2,
        1.814_850_552_085_472_7E1,
        -9.194_632_392_478_356,
        -4.436_036_387_594_894,
    ],
    [
        1.042_750_864_257_913_4E1,
        0.0, 0.0, 0.0, 0.0,
        2.422_834_917_752_581_7E2,
        1.652_004_517_172_702_8E2,
        -3.745_467_547_226_902E2,
        -2.211_366_685_312_530_6E1,
        7.733_432_668_472_264,
        -3.067_408_473_108_939_8E1,
        -9.332_130_526_430_229,
        1.569_723_812_177_084_5E1,
        -3.113_940_321_956_517_8E1,
        -9.352_924_358_844_48,
        3.581_684_148_639_408E1,
    ],
    [
        1.998_505_324_200_243_3E1,
        0.0, 0.0, 0.0, 0.0,
        -3.870_373_087_493_518E2,
        -1.891_781_381_951_675_8E2,
        5.278_081_592_054_236E2,
        -1.157_390_253_995_963E1,
        6.881_232_694_696_3,
        -1.000_605_096_691_083_8,
        7.777_137_798_053_443E-1,
        -2.778_205_752_353_508,
        -6.019_669_523_126_412E1,
        8.432_040_550_667_716E1,
        1.199_229_113_618_279E1,
    ],
    [
        -2.569_393_346_270_375E1,
        0.0, 0.0, 0.0, 0.0,
        -1.541_897_486_902_364_3E2,
        -2.315_293_791_760_455E2,
        3.576_391_179_106_141E2,
        9.340_532_418_362_432E1,
        -3.745_832_313_645_163E1,
        1.040_996_495_089_623E2,
        2.984_029_342_666_05E1,
        -4.353_345_659_001_114E1,
        9.632_455_395_918_828E1,
        -3.917_726_167_561_544E1,
        -1.497_268_362_579_856_4E2,
    ],
];
