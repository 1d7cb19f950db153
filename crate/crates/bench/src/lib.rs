//! Benchmark fixtures shared by the criterion benches.

use fracbessel::{EquationSpec, RawEquation, Term};

/// Example with integer orders and four characteristic roots.
pub fn four_root_spec() -> EquationSpec {
    spec(&[(2.0, 4.0), (0.3, 2.0), (1.0, 1.0)], 3.1, 2.25)
}

/// Fractional example whose single admissible root sits near 4.09.
pub fn threshold_spec() -> EquationSpec {
    spec(&[(1.0, 4.9), (3.1, 3.75), (3.0, 2.7)], 3.1, 169.0)
}

/// Example with a double characteristic root near 1.979.
pub fn double_root_spec() -> EquationSpec {
    spec(
        &[(-2.0, 1.9), (10.0, 0.9), (-5.0, 0.7)],
        1.0,
        6.336632736437,
    )
}

fn spec(terms: &[(f64, f64)], beta: f64, nu2: f64) -> EquationSpec {
    RawEquation {
        terms: terms.iter().map(|&(d, alpha)| Term { d, alpha }).collect(),
        beta,
        nu2,
    }
    .validate()
    .expect("benchmark fixture is valid")
}
