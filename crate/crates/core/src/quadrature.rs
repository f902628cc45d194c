//! Adaptive Gauss-Kronrod (7, 15) quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{HodoError, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Subdivision budget for one call.
const MAX_INTERVALS: usize = 4000;

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * h, (kronrod - gauss).abs() * h.abs())
}

struct Piece {
    a: f64,
    b: f64,
    val: f64,
    err: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn piece<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Piece> {
    let (val, err) = gk15(f, a, b);
    if !val.is_finite() {
        return Err(HodoError::QuadratureDivergence(format!(
            "non-finite integrand on [{a}, {b}]"
        )));
    }
    Ok(Piece { a, b, val, err })
}

// global adaptive bisection of the interval with the largest error estimate
fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<f64> {
    let mut heap = BinaryHeap::new();
    heap.push(piece(f, a, b)?);
    loop {
        let total: f64 = heap.iter().map(|p| p.val).sum();
        let err: f64 = heap.iter().map(|p| p.err).sum();
        if err <= abs_tol.max(rel_tol * total.abs()) {
            return Ok(total);
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if heap.len() + 2 > MAX_INTERVALS || mid == worst.a || mid == worst.b {
            return Err(HodoError::QuadratureDivergence(format!(
                "no convergence on [{a}, {b}] (error estimate {err:e})"
            )));
        }
        heap.push(piece(f, worst.a, mid)?);
        heap.push(piece(f, mid, worst.b)?);
    }
}

/// Integral of `f` over `[a, b]` (either orientation) to the larger of the
/// absolute and relative tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(HodoError::QuadratureDivergence("infinite limits".into()));
    }
    if a == b {
        return Ok(0.0);
    }
    adapt(&f, a, b, abs_tol, rel_tol)
}
