//! Property bodies shared by the proptest suite and the acceptance run.

use super::spec;
use fracbessel::characteristic::{find_roots_with, g, nu2_min, ScanConfig};
use fracbessel::series::build_simple;
use fracbessel::specfun::{gamma_ratio, gamma_ratio_derivs};
use fracbessel::verifier::{
    caputo_power, caputo_power_log, caputo_quadrature, power_log_derivative,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

type Check = Result<(), TestCaseError>;

/// Distance from `x` to the nearest nonpositive integer (infinite for x > 0.5).
pub fn pole_distance(x: f64) -> f64 {
    if x > 0.5 {
        f64::INFINITY
    } else {
        (x - x.round()).abs()
    }
}

pub fn fractional(alpha: f64) -> bool {
    (alpha - alpha.round()).abs() > 0.02
}

/// k-th derivative of `f` at `x` by central differences, twice Richardson-extrapolated.
pub fn richardson<F: Fn(f64) -> f64>(f: &F, x: f64, k: usize, h: f64) -> f64 {
    let central = |h: f64| match k {
        1 => (f(x + h) - f(x - h)) / (2.0 * h),
        2 => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
        3 => {
            (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h * h * h)
        }
        _ => unreachable!(),
    };
    let (d1, d2, d3) = (central(h), central(h / 2.0), central(h / 4.0));
    let e1 = (4.0 * d2 - d1) / 3.0;
    let e2 = (4.0 * d3 - d2) / 3.0;
    (16.0 * e2 - e1) / 15.0
}

pub fn gamma_recurrence_args() -> impl Strategy<Value = (f64, f64)> {
    (-0.9f64..50.0, 0.0f64..6.0)
}

pub fn gamma_recurrence((gamma, alpha): (f64, f64)) -> Check {
    prop_assume!(pole_distance(1.0 + gamma - alpha) > 0.01);
    let r0 = gamma_ratio(gamma, alpha).unwrap();
    let r1 = gamma_ratio(gamma + 1.0, alpha).unwrap();
    let want = (1.0 + gamma) / (1.0 + gamma - alpha);
    prop_assert!(
        ((r1 / r0 - want) / want).abs() <= 1e-12,
        "{} vs {}",
        r1 / r0,
        want
    );
    Ok(())
}

pub fn falling_factorial_args() -> impl Strategy<Value = (f64, u32)> {
    (-0.9f64..50.0, 0u32..=8)
}

pub fn falling_factorial((gamma, k): (f64, u32)) -> Check {
    let product: f64 = (0..k).map(|j| gamma - j as f64).product();
    let r = gamma_ratio(gamma, k as f64).unwrap();
    prop_assert!(
        (r - product).abs() <= 1e-12 * product.abs(),
        "{r} vs {product}"
    );
    Ok(())
}

pub fn stirling_args() -> impl Strategy<Value = f64> {
    0.0f64..6.0
}

pub fn stirling_limit(alpha: f64) -> Check {
    // the deviation is α(1−α)/(2γ) + O(γ⁻²): below 1e−3 at γ = 1e4 only for α ≲ 4
    let dev = |gamma: f64| gamma_ratio(gamma, alpha).unwrap() / gamma.powf(alpha) - 1.0;
    if alpha <= 4.0 {
        prop_assert!(dev(1e4).abs() <= 1e-3);
    }
    prop_assert!(dev(1e5).abs() <= 1e-3);
    let leading = alpha * (1.0 - alpha) / 2e4;
    prop_assert!((dev(1e4) - leading).abs() <= 1e-2 * leading.abs() + 1e-9);
    Ok(())
}

pub fn ratio_derivative_args() -> impl Strategy<Value = (f64, f64)> {
    (-0.3f64..20.0, 0.0f64..6.0)
}

pub fn ratio_derivatives_match_finite_differences((gamma, alpha): (f64, f64)) -> Check {
    // r is analytic for γ > −1 (1/Γ is entire); the stencil stays 0.6 away from the pole
    let f = |x: f64| gamma_ratio(x, alpha).unwrap();
    let r = gamma_ratio_derivs(gamma, alpha, 3).unwrap();
    let h = 0.05;
    for k in 1..=3 {
        let d = r.derivative(k);
        // rounding in the finest stencil; below this the oracle cannot resolve 1e−6
        let noise = 64.0 * f64::EPSILON * r.value.abs().max(1.0) / (h / 4.0f64).powi(k as i32);
        if noise > 1e-7 * d.abs() {
            continue;
        }
        let fd = richardson(&f, gamma, k, h);
        prop_assert!((fd - d).abs() <= 1e-6 * d.abs(), "k={k}: fd {fd} vs {d}");
    }
    Ok(())
}

pub fn monotonicity_args() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<u32>)> {
    (
        prop::collection::vec(0.01f64..5.0, 3),
        prop::collection::vec(0.05f64..0.95, 3),
        prop::collection::vec(0u32..4, 3),
    )
}

pub fn g_increases_above_the_floor((d, a, n): (Vec<f64>, Vec<f64>, Vec<u32>)) -> Check {
    let terms: Vec<(f64, f64)> = (0..3).map(|i| (d[i], n[i] as f64 + a[i])).collect();
    let s = spec(&terms, 1.0, 0.0);
    let floor = s.caputo_floor().unwrap();
    let mut prev = f64::NEG_INFINITY;
    for i in 1..=1000 {
        let x = floor + 20.0 * i as f64 / 1000.0;
        let v = g(&s, x).unwrap();
        prop_assert!(v > prev, "G not increasing at {x}");
        prev = v;
    }
    Ok(())
}

pub fn telescoping_args() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, f64, f64)> {
    (
        prop::collection::vec(0.1f64..3.0, 2),
        prop::collection::vec(0.05f64..0.95, 2),
        0.3f64..3.0,
        1e-3f64..20.0,
    )
}

pub fn telescoping_and_decay((d, a, beta, excess): (Vec<f64>, Vec<f64>, f64, f64)) -> Check {
    let terms = [(d[0], 1.0 + a[0]), (d[1], a[1])];
    let base = spec(&terms, beta, 0.0);
    let s = base.with_nu2(nu2_min(&base).unwrap() + excess);
    let roots = find_roots_with(&s, &ScanConfig::default_for(&s)).unwrap();
    let root = roots
        .iter()
        .rev()
        .find(|r| r.is_valid() && r.multiplicity == 1)
        .unwrap();
    let sol = build_simple(&s, root, 40).unwrap();
    for n in 0..40 {
        let f = g(&s, root.gamma + beta * (n + 1) as f64).unwrap() - s.nu2();
        let lhs = sol.coefficient(n + 1, 1) * f + sol.coefficient(n, 1);
        prop_assert!(lhs.abs() <= 1e-13 * sol.coefficient(n, 1).abs());
    }
    // |c_{n+1}/c_n| = 1/|F(s_{n+1})| → 0; factorial decay at rate α_max
    let ratio = |n: usize| (sol.coefficient(n + 1, 1) / sol.coefficient(n, 1)).abs();
    prop_assert!(ratio(39) < ratio(10));
    let growth = (beta * 40.0).powf(s.alpha_max() * 0.9);
    prop_assert!(ratio(39) * growth < 1.0 / d.iter().cloned().fold(f64::MAX, f64::min));
    Ok(())
}

pub fn caputo_args() -> impl Strategy<Value = (f64, f64, f64, usize)> {
    (0.05f64..5.0, 0.1f64..8.0, 0.1f64..5.0, 0usize..=2)
}

/// Analytic Caputo derivative of t^γ (ln t)^p against the quadrature oracle.
pub fn caputo_matches_quadrature((alpha, offset, x, p): (f64, f64, f64, usize)) -> Check {
    prop_assume!(fractional(alpha));
    let n = alpha.ceil() as usize;
    let gamma = (n as f64 - 1.0 + offset).min(10.0);
    let plain = caputo_power(alpha, gamma, x).unwrap();
    let analytic = caputo_power_log(alpha, gamma, p, x).unwrap();
    let quad = caputo_quadrature(alpha, |t| power_log_derivative(gamma, p, n, t), x).unwrap();
    let (scale, tol) = if p == 0 {
        (analytic.abs(), 1e-6)
    } else {
        (analytic.abs().max(plain.abs()), 1e-5)
    };
    prop_assert!(
        (analytic - quad).abs() <= tol * scale,
        "{analytic} vs {quad}"
    );
    Ok(())
}
