//! The generalized fractional Bessel equation
//! `Σ dᵢ x^{αᵢ} D^{αᵢ} u + (x^β − ν²) u = 0` and its structural quantities.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::specfun::as_integer;

/// One `d · x^α D^α` term.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub d: f64,
    pub alpha: f64,
}

impl Term {
    /// Integer orders are ordinary derivatives; the rest are Caputo.
    pub fn is_integer_order(&self) -> bool {
        as_integer(self.alpha).is_some()
    }

    /// ⌈α⌉, the number of ordinary derivatives inside the Caputo integral.
    pub fn ceil_order(&self) -> u32 {
        match as_integer(self.alpha) {
            Some(k) => k as u32,
            None => self.alpha.ceil() as u32,
        }
    }
}

/// Unvalidated equation as read from an input document.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEquation {
    pub terms: Vec<Term>,
    pub beta: f64,
    pub nu2: f64,
}

impl RawEquation {
    pub fn validate(self) -> Result<EquationSpec> {
        validate(self)
    }
}

/// A validated equation: distinct orders sorted ascending, integer orders
/// snapped to exact integers, zero coefficients dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct EquationSpec {
    terms: Vec<Term>,
    beta: f64,
    nu2: f64,
    n_max: Option<u32>,
    n_min: Option<u32>,
    alpha_max: f64,
    p: u32,
}

/// Checks every field, collecting all violations, then merges duplicate orders.
pub fn validate(raw: RawEquation) -> Result<EquationSpec> {
    let mut problems = Vec::new();
    if raw.terms.is_empty() {
        problems.push("terms: at least one term is required".to_string());
    }
    for (i, t) in raw.terms.iter().enumerate() {
        if !t.d.is_finite() {
            problems.push(format!("terms[{i}].d: must be finite (got {})", t.d));
        }
        if !t.alpha.is_finite() {
            problems.push(format!(
                "terms[{i}].alpha: must be finite (got {})",
                t.alpha
            ));
        } else if t.alpha <= 0.0 {
            problems.push(format!("terms[{i}].alpha: must be > 0 (got {})", t.alpha));
        }
    }
    if !raw.beta.is_finite() {
        problems.push(format!("beta: must be finite (got {})", raw.beta));
    } else if raw.beta <= 0.0 {
        problems.push(format!("beta: must be > 0 (got {})", raw.beta));
    }
    if !raw.nu2.is_finite() {
        problems.push(format!("nu2: must be finite (got {})", raw.nu2));
    }
    if !problems.is_empty() {
        return Err(Error::Validation(problems));
    }

    let mut terms: Vec<Term> = raw
        .terms
        .iter()
        .map(|t| Term {
            d: t.d,
            alpha: as_integer(t.alpha).map_or(t.alpha, |k| k as f64),
        })
        .collect();
    // Sorting on (alpha, d) fixes the summation order, so merging is
    // independent of the input permutation.
    terms.sort_by(|a, b| a.alpha.total_cmp(&b.alpha).then(a.d.total_cmp(&b.d)));
    let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match merged.last_mut() {
            Some(last) if last.alpha == t.alpha => last.d += t.d,
            _ => merged.push(t),
        }
    }
    merged.retain(|t| t.d != 0.0);
    if merged.is_empty() {
        return Err(Error::Validation(vec![
            "terms: all coefficients d vanish after merging equal orders".to_string(),
        ]));
    }

    let fractional = merged.iter().filter(|t| !t.is_integer_order());
    let n_max = fractional.clone().map(Term::ceil_order).max();
    let n_min = fractional.map(Term::ceil_order).min();
    let alpha_max = merged.iter().map(|t| t.alpha).fold(f64::MIN, f64::max);
    let p = merged.iter().map(Term::ceil_order).max().unwrap_or(0);

    Ok(EquationSpec {
        terms: merged,
        beta: raw.beta,
        nu2: raw.nu2,
        n_max,
        n_min,
        alpha_max,
        p,
    })
}

impl EquationSpec {
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// ν², which may be any real.
    pub fn nu2(&self) -> f64 {
        self.nu2
    }

    /// ⌈α⌉ of the highest genuinely fractional order; `None` for integer-only equations.
    pub fn n_max(&self) -> Option<u32> {
        self.n_max
    }

    pub fn n_min(&self) -> Option<u32> {
        self.n_min
    }

    pub fn alpha_max(&self) -> f64 {
        self.alpha_max
    }

    /// ⌈α_max⌉
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_integer_only(&self) -> bool {
        self.n_max.is_none()
    }

    pub fn alpha_max_is_integer(&self) -> bool {
        as_integer(self.alpha_max).is_some()
    }

    /// Lower bound `n_max − 1` that admissible roots must exceed, if any
    /// fractional term exists.
    pub fn caputo_floor(&self) -> Option<f64> {
        self.n_max.map(|n| n as f64 - 1.0)
    }

    /// The same equation with every dᵢ and ν² scaled by `lambda`.
    pub fn scaled(&self, lambda: f64) -> EquationSpec {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.d *= lambda;
        }
        out.nu2 *= lambda;
        out
    }

    /// The same equation with a different ν².
    pub fn with_nu2(&self, nu2: f64) -> EquationSpec {
        EquationSpec {
            nu2,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(terms: &[(f64, f64)], beta: f64, nu2: f64) -> RawEquation {
        RawEquation {
            terms: terms.iter().map(|&(d, alpha)| Term { d, alpha }).collect(),
            beta,
            nu2,
        }
    }

    #[test]
    fn classical_bessel_is_integer_only() {
        let spec = validate(raw(&[(1.0, 2.0), (1.0, 1.0)], 2.0, 0.25)).unwrap();
        assert!(spec.is_integer_only());
        assert_eq!(spec.p(), 2);
        assert_eq!(spec.n_max(), None);
        assert_eq!(spec.caputo_floor(), None);
    }

    #[test]
    fn duplicate_orders_merge() {
        let spec = validate(raw(&[(1.0, 2.0), (1.0, 2.0)], 1.0, 0.0)).unwrap();
        assert_eq!(spec.terms(), &[Term { d: 2.0, alpha: 2.0 }]);
    }

    #[test]
    fn fractional_structure() {
        let spec = validate(raw(&[(1.0, 4.9), (3.1, 3.75), (3.0, 2.7)], 3.1, 1.0)).unwrap();
        assert_eq!(spec.n_max(), Some(5));
        assert_eq!(spec.n_min(), Some(3));
        assert_eq!(spec.alpha_max(), 4.9);
        assert_eq!(spec.p(), 5);
        assert_eq!(spec.caputo_floor(), Some(4.0));
    }

    #[test]
    fn integer_orders_snap() {
        let spec = validate(raw(&[(1.0, 4.0 + 1e-14), (1.0, 2.5)], 1.0, 0.0)).unwrap();
        assert_eq!(spec.terms()[1].alpha, 4.0);
        assert!(spec.alpha_max_is_integer());
        assert_eq!(spec.n_max(), Some(3));
        assert_eq!(spec.p(), 4);
    }

    #[test]
    fn reports_every_violation() {
        let err = validate(raw(&[(f64::NAN, -1.0)], 0.0, f64::INFINITY)).unwrap_err();
        let Error::Validation(list) = err else {
            panic!("expected validation error");
        };
        assert_eq!(list.len(), 4, "{list:?}");
        assert!(list.iter().any(|m| m.starts_with("beta")));
        assert!(list.iter().any(|m| m.starts_with("terms[0].alpha")));
        assert!(validate(raw(&[], 1.0, 0.0)).is_err());
    }

    #[test]
    fn cancelled_terms_are_rejected() {
        assert!(validate(raw(&[(1.0, 1.5), (-1.0, 1.5)], 1.0, 0.0)).is_err());
    }

    #[test]
    fn scaling_touches_d_and_nu2() {
        let spec = validate(raw(&[(1.0, 1.5)], 1.0, 2.0)).unwrap().scaled(3.0);
        assert_eq!(spec.terms()[0].d, 3.0);
        assert_eq!(spec.nu2(), 6.0);
    }
}
