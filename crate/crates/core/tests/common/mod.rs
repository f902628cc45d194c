//! Independent extremum search shared by integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use hodokit::relativistic::u_theta;
use hodokit::trajectory::{select_interval, Branch};
use hodokit::{Regime, SystemParams};

/// Minimiser of a unimodal `f` on `[a, b]`.
pub fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > 1e-11 * (1.0 + a.abs()) {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Scan then refine; `sign = 1` finds the minimum of `f`, `-1` the maximum.
pub fn extremum(f: impl Fn(f64) -> f64, lo: f64, hi: f64, sign: f64) -> f64 {
    let n = 4000;
    let h = (hi - lo) / n as f64;
    let g = |x: f64| sign * f(x);
    let best = (1..n)
        .map(|i| lo + h * i as f64)
        .min_by(|a, b| g(*a).total_cmp(&g(*b)))
        .unwrap();
    let x = golden_min(g, best - h, best + h);
    f(x)
}

pub fn numeric_radius(p: &SystemParams, th: f64) -> f64 {
    p.ell() / (p.m() * u_theta(p, th).unwrap())
}

pub fn search_span(p: &SystemParams) -> (f64, f64) {
    let iv = select_interval(p, Branch::Auto).unwrap();
    let t0 = p.theta0();
    if iv.is_finite() {
        (iv.lo + 1e-6, iv.hi - 1e-6)
    } else if p.regime() == Regime::TimeLike {
        (t0 - 0.1, t0 + 2.0 * PI / p.rate() + 0.1)
    } else {
        (t0 - 10.0, t0 + 10.0)
    }
}
