#![allow(dead_code)]

pub mod invariants;
pub mod reference;

use fracbessel::{EquationSpec, RawEquation, Term};

pub fn spec(terms: &[(f64, f64)], beta: f64, nu2: f64) -> EquationSpec {
    RawEquation {
        terms: terms.iter().map(|&(d, alpha)| Term { d, alpha }).collect(),
        beta,
        nu2,
    }
    .validate()
    .unwrap()
}

/// x⁴u⁗ + xu = 0
pub fn quartic() -> EquationSpec {
    spec(&[(1.0, 4.0)], 1.0, 0.0)
}

pub fn four_integer_roots() -> EquationSpec {
    spec(&[(2.0, 4.0), (0.3, 2.0), (1.0, 1.0)], 3.1, 2.25)
}

/// Positive coefficients with orders 4.9, 3.75, 2.7.
pub fn positive_fractional(nu2: f64) -> EquationSpec {
    spec(&[(1.0, 4.9), (3.1, 3.75), (3.0, 2.7)], 3.1, nu2)
}

pub fn mixed_signs() -> EquationSpec {
    spec(&[(-0.1, 4.9), (3.1, 3.75), (-6.0, 2.7)], 3.1, 1.0)
}

pub fn below_floor() -> EquationSpec {
    spec(&[(-0.1, 4.9), (-6.0, 3.75), (1.0, 2.7)], 3.1, 0.0)
}

pub fn distant_root() -> EquationSpec {
    spec(&[(0.1, 4.9), (-6.0, 3.75), (1.0, 2.7)], 3.1, 9.0)
}

pub fn three_valid_roots() -> EquationSpec {
    spec(&[(1.0, 6.0), (0.02, 2.7), (0.1, 1.2)], 2.0, 2.25)
}

pub fn double_root() -> EquationSpec {
    spec(
        &[(-2.0, 1.9), (10.0, 0.9), (-5.0, 0.7)],
        1.0,
        6.336632736437,
    )
}

pub fn classical_bessel(nu2: f64) -> EquationSpec {
    spec(&[(1.0, 2.0), (1.0, 1.0)], 2.0, nu2)
}

/// x^{2a}D^{2a} + x^aD^a with β = 2a: the fractional analogue of Bessel's equation.
pub fn fractional_bessel(a: f64, nu2: f64) -> EquationSpec {
    spec(&[(1.0, 2.0 * a), (1.0, a)], 2.0 * a, nu2)
}

pub fn golden() -> Vec<(&'static str, EquationSpec)> {
    vec![
        ("quartic", quartic()),
        ("four integer roots", four_integer_roots()),
        ("below threshold", positive_fractional(1.0)),
        ("above threshold", positive_fractional(169.0)),
        ("mixed signs", mixed_signs()),
        ("below floor", below_floor()),
        ("distant root", distant_root()),
        ("three valid roots", three_valid_roots()),
        ("double root", double_root()),
    ]
}

/// `n` evenly spaced points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
