//! Rational detection by continued-fraction convergents.

/// Convergents `(p, q)` of the continued fraction of `x > 0` with
/// denominators up to `max_den`.
pub fn convergents(x: f64, max_den: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    if !x.is_finite() || x <= 0.0 || max_den == 0 {
        return out;
    }
    let (mut h_prev, mut h) = (0u64, 1u64);
    let (mut k_prev, mut k) = (1u64, 0u64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a > u32::MAX as f64 {
            break;
        }
        let a = a as u64;
        let h_next = a.checked_mul(h).and_then(|v| v.checked_add(h_prev));
        let k_next = a.checked_mul(k).and_then(|v| v.checked_add(k_prev));
        let (Some(h_next), Some(k_next)) = (h_next, k_next) else {
            break;
        };
        if k_next > max_den {
            break;
        }
        (h_prev, h) = (h, h_next);
        (k_prev, k) = (k, k_next);
        out.push((h, k));
        let frac = r - a as f64;
        if frac <= f64::EPSILON * r.max(1.0) {
            break;
        }
        r = 1.0 / frac;
    }
    out
}

/// First convergent `p/q` (reduced) with `|x - p/q| < tol` and `q <= max_den`.
pub fn rational_approximation(x: f64, max_den: u64, tol: f64) -> Option<(u64, u64)> {
    convergents(x, max_den)
        .into_iter()
        .find(|&(p, q)| (x - p as f64 / q as f64).abs() < tol)
}
