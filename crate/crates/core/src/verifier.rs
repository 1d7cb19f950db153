//! Independent checks of series solutions.
//!
//! Two Caputo paths are provided: the closed form for `x^γ (ln x)^p`, and a
//! quadrature of the defining integral
//! `D^α u(x) = 1/Γ(n−α) ∫₀ˣ (x−t)^{n−α−1} u^{(n)}(t) dt`. The quadrature only
//! needs ordinary derivatives `u^{(n)}`, which are taken term by term from
//! falling-factorial polynomials without touching the gamma-ratio code.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::equation::EquationSpec;
use crate::error::{Error, Result};
use crate::quadrature::integrate_unit;
use crate::series::SeriesSolution;
use crate::specfun::{
    as_integer, binomial, factorial, gamma_ratio, gamma_ratio_derivs, reciprocal_gamma,
    MAX_POLYGAMMA_ORDER,
};

/// Relative tolerance requested from [`caputo_quadrature`].
pub const QUADRATURE_TOL: f64 = 1e-9;
/// A verified solution may not exceed this relative excess.
pub const VERIFY_TOL: f64 = 1e-6;

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            function: "Caputo derivative",
            arg: "x",
            value: x,
        })
    }
}

/// Existence of the Caputo derivative of `x^γ (ln x)^p`.
fn check_existence(alpha: f64, gamma: f64) -> Result<()> {
    if as_integer(alpha).is_some() {
        return Ok(());
    }
    let floor = alpha.ceil() - 1.0;
    if gamma > floor {
        Ok(())
    } else {
        Err(Error::Divergence {
            alpha,
            gamma,
            floor,
        })
    }
}

/// `D^α x^γ = Γ(1+γ)/Γ(1+γ−α) x^{γ−α}`. Integer orders are ordinary
/// derivatives and accept any γ > −1.
pub fn caputo_power(alpha: f64, gamma: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    check_existence(alpha, gamma)?;
    Ok(gamma_ratio(gamma, alpha)? * x.powf(gamma - alpha))
}

/// `D^α [x^γ (ln x)^p] = x^{γ−α} Σ_q C(p,q) (ln x)^{p−q} ∂_γ^q r(γ)`.
pub fn caputo_power_log(alpha: f64, gamma: f64, log_power: usize, x: f64) -> Result<f64> {
    if log_power > MAX_POLYGAMMA_ORDER {
        return Err(Error::UnsupportedOrder {
            order: log_power,
            max: MAX_POLYGAMMA_ORDER,
        });
    }
    check_x(x)?;
    check_existence(alpha, gamma)?;
    let r = gamma_ratio_derivs(gamma, alpha, log_power)?;
    let ln_x = x.ln();
    let sum: f64 = (0..=log_power)
        .map(|q| binomial(log_power, q) * ln_x.powi((log_power - q) as i32) * r.derivative(q))
        .sum();
    Ok(x.powf(gamma - alpha) * sum)
}

/// Boundary terms `u^{(k)}(0⁺) x^{k−α}/Γ(k−α+1)`, k < ⌈α⌉, separating the
/// Riemann–Liouville derivative of `x^γ (ln x)^p` from the Caputo one.
///
/// Each `u^{(k)}` behaves like `t^{γ−k}(ln t)^p` near zero, so the limit is 0
/// when γ > k, finite and nonzero only for `γ = k, p = 0`, infinite otherwise.
pub fn rl_boundary_terms(alpha: f64, gamma: f64, log_power: usize, x: f64) -> Vec<f64> {
    let n = as_integer(alpha).map_or(alpha.ceil() as usize, |k| k as usize);
    (0..n)
        .map(|k| {
            let kf = k as f64;
            let limit = if gamma > kf {
                0.0
            } else if gamma == kf && log_power == 0 {
                factorial(k)
            } else {
                f64::INFINITY
            };
            if limit == 0.0 {
                0.0
            } else {
                limit * x.powf(kf - alpha) * reciprocal_gamma(kf - alpha + 1.0)
            }
        })
        .collect()
}

/// Riemann–Liouville derivative of `x^γ (ln x)^p`: the Caputo value plus
/// [`rl_boundary_terms`].
pub fn riemann_liouville_power_log(
    alpha: f64,
    gamma: f64,
    log_power: usize,
    x: f64,
) -> Result<f64> {
    let caputo = caputo_power_log(alpha, gamma, log_power, x)?;
    Ok(caputo
        + rl_boundary_terms(alpha, gamma, log_power, x)
            .iter()
            .sum::<f64>())
}

/// Caputo derivative by quadrature of its defining integral; `nth_derivative`
/// returns `u^{(n)}(t)` with `n = ⌈α⌉`.
///
/// With `μ = n − α` and `t = x(1 − s^{1/μ})` the kernel is absorbed:
/// `D^α u(x) = x^μ/Γ(μ+1) ∫₀¹ u^{(n)}(t(s)) ds`.
pub fn caputo_quadrature<F>(alpha: f64, nth_derivative: F, x: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    check_x(x)?;
    if as_integer(alpha).is_some() {
        return Ok(nth_derivative(x));
    }
    let mu = alpha.ceil() - alpha;
    let scale = x.powf(mu) * reciprocal_gamma(mu + 1.0);
    let inv = 1.0 / mu;
    let t_of = |s: f64, c: f64| {
        if s <= 0.5 {
            x * (1.0 - s.powf(inv))
        } else {
            // 1 − (1 − c)^{1/μ} without cancellation
            -x * ((-c).ln_1p() * inv).exp_m1()
        }
    };
    let tol = QUADRATURE_TOL * (1.0 / scale).min(1.0);
    let q = integrate_unit(|s, c| nth_derivative(t_of(s, c)), tol)?;
    Ok(scale * q.value)
}

/// Coefficients of the falling factorial `s(s−1)…(s−n+1)` in powers of s.
fn falling_factorial_poly(n: usize) -> Vec<f64> {
    let mut poly = vec![1.0];
    for j in 0..n {
        let mut next = vec![0.0; poly.len() + 1];
        for (i, &a) in poly.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * j as f64;
        }
        poly = next;
    }
    poly
}

/// q-th derivative in s of a polynomial given by its coefficients.
fn poly_derivative_at(poly: &[f64], q: usize, s: f64) -> f64 {
    poly.iter()
        .enumerate()
        .skip(q)
        .rev()
        .fold(0.0, |acc, (i, &a)| {
            let falling: f64 = (0..q).map(|j| (i - j) as f64).product();
            acc * s + a * falling
        })
}

/// n-th ordinary derivative of `t^s (ln t)^p` at t > 0:
/// `t^{s−n} Σ_q C(p,q) (ln t)^{p−q} ∂_s^q [s(s−1)…(s−n+1)]`.
pub fn power_log_derivative(s: f64, log_power: usize, n: usize, t: f64) -> f64 {
    let poly = falling_factorial_poly(n);
    let ln_t = t.ln();
    let sum: f64 = (0..=log_power.min(n))
        .map(|q| {
            binomial(log_power, q)
                * ln_t.powi((log_power - q) as i32)
                * poly_derivative_at(&poly, q, s)
        })
        .sum();
    t.powf(s - n as f64) * sum
}

/// n-th derivative of a series branch, term by term.
pub fn series_derivative(sol: &SeriesSolution, n: usize, t: f64) -> f64 {
    let mut total = 0.0;
    for (row_index, row) in sol.coeffs.iter().enumerate() {
        let s = sol.gamma + sol.beta * row_index as f64;
        for (k, &c) in row.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let m = sol.branch - (k + 1);
            total += c / factorial(m) * power_log_derivative(s, m, n, t);
        }
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualSample {
    pub x: f64,
    pub u: f64,
    /// The equation operator applied to the truncated series.
    pub residual: f64,
    /// The exact leftover term from truncation.
    pub predicted_tail: f64,
    /// `|residual − predicted_tail| / max(1, |u|)`.
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub samples: Vec<ResidualSample>,
    pub max_excess: f64,
}

impl ResidualReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_excess <= tol
    }

    /// CSV with columns `x,residual,predicted_tail,excess`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let err = |e: csv::Error| Error::Table(e.to_string());
        w.write_record(["x", "residual", "predicted_tail", "excess"])
            .map_err(err)?;
        for s in &self.samples {
            w.write_record([
                format!("{:.17e}", s.x),
                format!("{:.17e}", s.residual),
                format!("{:.17e}", s.predicted_tail),
                format!("{:.17e}", s.excess),
            ])
            .map_err(err)?;
        }
        w.flush().map_err(|e| Error::Table(e.to_string()))
    }
}

/// Substitutes the truncated branch into the equation at each x, with every
/// Caputo derivative taken term-wise by [`caputo_power_log`].
pub fn residual(spec: &EquationSpec, sol: &SeriesSolution, xs: &[f64]) -> Result<ResidualReport> {
    let log_max = sol.branch - 1;
    // r^{(q)}(s_n) per term and row, shared by every sample.
    let mut ratios = Vec::with_capacity(spec.terms().len());
    for t in spec.terms() {
        let mut rows = Vec::with_capacity(sol.coeffs.len());
        for n in 0..sol.coeffs.len() {
            let s = sol.gamma + sol.beta * n as f64;
            check_existence(t.alpha, s)?;
            rows.push(gamma_ratio_derivs(s, t.alpha, log_max)?);
        }
        ratios.push(rows);
    }

    let samples: Result<Vec<ResidualSample>> = xs
        .par_iter()
        .map(|&x| {
            check_x(x)?;
            let u = sol.evaluate(x)?;
            let ln_x = x.ln();
            let mut op = (x.powf(sol.beta) - spec.nu2()) * u;
            for (t, rows) in spec.terms().iter().zip(&ratios) {
                let mut acc = 0.0;
                for (n, row) in sol.coeffs.iter().enumerate() {
                    let s = sol.gamma + sol.beta * n as f64;
                    let r = &rows[n];
                    for (k, &c) in row.iter().enumerate() {
                        let m = sol.branch - (k + 1);
                        // D^α[x^s (ln x)^m] with the x^α factor applied
                        let d: f64 = (0..=m)
                            .map(|q| binomial(m, q) * ln_x.powi((m - q) as i32) * r.derivative(q))
                            .sum();
                        acc += c / factorial(m) * x.powf(s) * d;
                    }
                }
                op += t.d * acc;
            }
            let predicted_tail = sol.predicted_tail(x)?;
            let excess = (op - predicted_tail).abs() / u.abs().max(1.0);
            Ok(ResidualSample {
                x,
                u,
                residual: op,
                predicted_tail,
                excess,
            })
        })
        .collect();
    let samples = samples?;
    let max_excess = samples.iter().map(|s| s.excess).fold(0.0, f64::max);
    Ok(ResidualReport {
        samples,
        max_excess,
    })
}
