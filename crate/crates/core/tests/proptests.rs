use hodokit::rational::rational_approximation;
use hodokit::relativistic::{energy_residual, hodograph};
use hodokit::spacetime::minkowski_dot;
use hodokit::trajectory::*;
use hodokit::{Regime, SystemParams};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = SystemParams> {
    (
        prop_oneof![-3.0..-0.05f64, 0.05..3.0f64, Just(1.0), Just(-1.0)],
        0.05..3.0f64,
        0.3..3.0f64,
        0.3..3.0f64,
        -3.0..3.0f64,
    )
        .prop_filter_map("needs a trajectory", |(ratio, e, m, ell, t0)| {
            let p = SystemParams::new(m, ratio * ell, ell, e * m).ok()?.with_theta0(t0).ok()?;
            (!angular_range(&p).is_empty()).then_some(p)
        })
}

/// An angle inside the selected branch, at most `reach` from its finite end.
fn interior(p: &SystemParams, frac: f64, reach: f64) -> f64 {
    let iv = select_interval(p, Branch::Auto).unwrap();
    match (iv.lo.is_finite(), iv.hi.is_finite()) {
        (true, true) => iv.lo + frac * iv.width(),
        (true, false) => iv.lo + frac * reach,
        (false, true) => iv.hi - frac * reach,
        (false, false) => p.theta0() + (2.0 * frac - 1.0) * reach,
    }
}

proptest! {
    #[test]
    fn hodograph_stays_on_the_hyperboloid(p in params(), frac in 0.01..0.99f64) {
        let th = interior(&p, frac, 5.0);
        let u = hodograph(&p, th).unwrap();
        let scale = u.max_abs().powi(2).max(1.0);
        prop_assert!((minkowski_dot(&u, &u) + 1.0).abs() <= 1e-12 * scale);
        prop_assert!(energy_residual(&p, &u, th).abs() <= 1e-12 * scale);
        prop_assert!(u.to_array()[0] >= 1.0 - 1e-12);
    }

    #[test]
    fn radius_lies_between_turning_points(p in params(), frac in 0.01..0.99f64) {
        let th = interior(&p, frac, 5.0);
        let r = radius(&p, th).unwrap();
        let tp = turning_points(&p, Branch::Auto).unwrap();
        prop_assert!(r >= tp.r_min * (1.0 - 1e-9));
        if let Some(r_max) = tp.r_max {
            prop_assert!(r <= r_max * (1.0 + 1e-9));
        }
    }

    #[test]
    fn orbit_shape_scales_with_ell_over_m(p in params(), frac in 0.01..0.99f64, s in 0.2..5.0f64) {
        let th = interior(&p, frac, 5.0);
        let q = SystemParams::new(p.m() * s, p.kappa(), p.ell(), p.energy() * s)
            .unwrap()
            .with_theta0(p.theta0())
            .unwrap();
        let (u, v) = (hodograph(&p, th).unwrap(), hodograph(&q, th).unwrap());
        prop_assert!((u - v).max_abs() <= 1e-12 * u.max_abs());
        let (rp, rq) = (radius(&p, th).unwrap(), radius(&q, th).unwrap());
        prop_assert!((rp - s * rq).abs() <= 1e-12 * rp);
    }

    #[test]
    fn regime_follows_coupling(p in params()) {
        let k = p.ratio().abs();
        let expected = if k < 1.0 {
            Regime::TimeLike
        } else if k == 1.0 {
            Regime::LightLike
        } else {
            Regime::SpaceLike
        };
        prop_assert_eq!(p.regime(), expected);
        let class = classify_orbit(&p, Branch::Auto).unwrap();
        let bound = matches!(
            class,
            OrbitClass::CircularBound | OrbitClass::PrecessingBound | OrbitClass::ClosedBound { .. }
        );
        prop_assert_eq!(bound, expected == Regime::TimeLike && p.is_attractive() && p.e_over_m() < 1.0);
    }

    #[test]
    fn default_windows_sample_cleanly(p in params()) {
        let class = classify_orbit(&p, Branch::Auto).unwrap();
        let w = default_window(&p, Branch::Auto).unwrap();
        let s = sample_trajectory(&p, &w, 64, default_spacing(class)).unwrap();
        prop_assert_eq!(s.len(), 64);
        prop_assert!(s.iter().all(|x| x.r > 0.0 && x.r.is_finite() && x.tau.is_finite()));
        prop_assert!(s.windows(2).all(|w| w[1].theta > w[0].theta));
    }

    #[test]
    fn grids_are_monotone_with_exact_ends(lo in -50.0..50.0f64, width in 1e-3..40.0f64, n in 2usize..300, which in 0usize..3) {
        let spacing = [Spacing::Uniform, Spacing::GradedFromLow, Spacing::GradedFromHigh][which];
        let w = AngularInterval::new(lo, lo + width).unwrap();
        let g = theta_grid(&w, n, spacing);
        prop_assert_eq!(g.len(), n);
        prop_assert_eq!(g[0], w.lo);
        prop_assert_eq!(g[n - 1], w.hi);
        prop_assert!(g.windows(2).all(|x| x[1] > x[0]));
    }

    #[test]
    fn reduced_fractions_are_recovered(num in 1u64..60, den in 1u64..60) {
        let g = gcd(num, den);
        let x = num as f64 / den as f64;
        prop_assert_eq!(rational_approximation(x, 1000, 1e-9), Some((num / g, den / g)));
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}
