//! Fractional power series and logarithmic fractional series solutions.
//!
//! For a root γ of multiplicity j, branch `l ∈ 1..=j` is
//!
//! ```text
//! u_l(x) = Σ_{k=1}^{l} (ln x)^{l−k}/(l−k)! · Σ_{n=0}^{N} c[n][k] x^{γ+βn}
//! ```
//!
//! With `s_n = γ + βn` and `F = G − ν²`, the operator maps
//! `x^s (ln x)^m/m!` to `Σ_i F^{(i)}(s)/i! · x^s (ln x)^{m−i}/(m−i)!`, plus the
//! shift `x^{s+β}(ln x)^m/m!` from the `x^β u` term. Matching coefficients
//! of `x^{s_n}(ln x)^{l−K}/(l−K)!` gives
//!
//! ```text
//! c[n][K] F(s_n) + Σ_{k<K} c[n][k] F^{(K−k)}(s_n)/(K−k)! + c[n−1][K] = 0,
//! ```
//!
//! which does not involve l, so one table serves every branch. At n = 0 the
//! equations hold because F and its first j − 1 derivatives vanish at γ.
//! The truncated sum leaves exactly
//! `x^{s_{N+1}} Σ_k c[N][k] (ln x)^{l−k}/(l−k)!` behind.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::characteristic::CharacteristicRoot;
use crate::equation::EquationSpec;
use crate::error::{Error, Result};
use crate::specfun::{as_integer, factorial, gamma_ratio_derivs, MAX_RATIO_DERIVATIVE};

/// Largest truncation order [`choose_truncation`] will try.
pub const TRUNCATION_CAP: usize = 500;
/// Base of the near-singular denominator test, scaled by `1 + |ν²|`.
pub const DENOM_TOL: f64 = 1e-9;

/// One branch of the series solution attached to a characteristic root.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution {
    pub gamma: f64,
    pub beta: f64,
    /// Multiplicity j of the root.
    pub multiplicity: usize,
    /// Branch l, the number of ln-powers plus one.
    pub branch: usize,
    /// `coeffs[n][k−1]` for n = 0..=N and k = 1..=branch.
    pub coeffs: Vec<Vec<f64>>,
    pub c0: f64,
}

/// Coefficient table grown one row at a time.
struct Recursion<'a> {
    spec: &'a EquationSpec,
    gamma: f64,
    width: usize,
    rows: Vec<Vec<f64>>,
}

impl<'a> Recursion<'a> {
    fn new(spec: &'a EquationSpec, gamma: f64, width: usize, c0: f64) -> Self {
        let mut first = vec![0.0; width];
        first[0] = c0;
        Recursion {
            spec,
            gamma,
            width,
            rows: vec![first],
        }
    }

    /// F(s)/0!, F′(s)/1!, …, F^{(width−1)}(s)/(width−1)!
    fn scaled_derivatives(&self, s: f64) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.width];
        out[0] = -self.spec.nu2();
        for t in self.spec.terms() {
            let r = gamma_ratio_derivs(s, t.alpha, self.width - 1)?;
            for (m, slot) in out.iter_mut().enumerate() {
                *slot += t.d * r.derivative(m) / factorial(m);
            }
        }
        Ok(out)
    }

    fn push_row(&mut self) -> Result<()> {
        let n = self.rows.len();
        let s = self.gamma + self.spec.beta() * n as f64;
        let f = self.scaled_derivatives(s)?;
        let tol = DENOM_TOL * (1.0 + self.spec.nu2().abs());
        if f[0].abs() < tol {
            return Err(Error::DummyRootDenominator {
                index: n,
                denominator: f[0],
            });
        }
        let prev = &self.rows[n - 1];
        let mut row = vec![0.0; self.width];
        for big_k in 0..self.width {
            let mut acc = prev[big_k];
            for k in 0..big_k {
                acc += row[k] * f[big_k - k];
            }
            row[big_k] = -acc / f[0];
        }
        if row.iter().any(|c| !c.is_finite()) {
            return Err(Error::DummyRootDenominator {
                index: n,
                denominator: f[0],
            });
        }
        self.rows.push(row);
        Ok(())
    }
}

fn check_valid(root: &CharacteristicRoot) -> Result<()> {
    if root.is_valid() {
        Ok(())
    } else {
        Err(Error::RootNotValid {
            gamma: root.gamma,
            reason: root
                .reject_info
                .clone()
                .unwrap_or_else(|| root.status.to_string()),
        })
    }
}

fn table(spec: &EquationSpec, gamma: f64, width: usize, order: usize) -> Result<Vec<Vec<f64>>> {
    let mut rec = Recursion::new(spec, gamma, width, 1.0);
    for _ in 0..order {
        rec.push_row()?;
    }
    Ok(rec.rows)
}

/// Power series `Σ c[n] x^{γ+βn}` for a simple valid root, with c₀ = 1.
pub fn build_simple(
    spec: &EquationSpec,
    root: &CharacteristicRoot,
    order: usize,
) -> Result<SeriesSolution> {
    check_valid(root)?;
    if root.multiplicity != 1 {
        return Err(Error::WrongMultiplicity {
            expected: "1",
            got: root.multiplicity,
        });
    }
    Ok(SeriesSolution {
        gamma: root.gamma,
        beta: spec.beta(),
        multiplicity: 1,
        branch: 1,
        coeffs: table(spec, root.gamma, 1, order)?,
        c0: 1.0,
    })
}

/// All j branches for a valid root of multiplicity `2 ≤ j ≤ 9`.
pub fn build_logarithmic(
    spec: &EquationSpec,
    root: &CharacteristicRoot,
    order: usize,
) -> Result<Vec<SeriesSolution>> {
    check_valid(root)?;
    let j = root.multiplicity;
    if j < 2 {
        return Err(Error::WrongMultiplicity {
            expected: "at least 2",
            got: j,
        });
    }
    if j > MAX_RATIO_DERIVATIVE {
        return Err(Error::MultiplicityTooHigh {
            gamma: root.gamma,
            max: MAX_RATIO_DERIVATIVE,
        });
    }
    let rows = table(spec, root.gamma, j, order)?;
    Ok((1..=j)
        .map(|l| SeriesSolution {
            gamma: root.gamma,
            beta: spec.beta(),
            multiplicity: j,
            branch: l,
            coeffs: rows.iter().map(|r| r[..l].to_vec()).collect(),
            c0: 1.0,
        })
        .collect())
}

/// Every branch for a valid root: one for a simple root, j for a multiple one.
pub fn build(
    spec: &EquationSpec,
    root: &CharacteristicRoot,
    order: usize,
) -> Result<Vec<SeriesSolution>> {
    if root.multiplicity == 1 {
        build_simple(spec, root, order).map(|s| vec![s])
    } else {
        build_logarithmic(spec, root, order)
    }
}

/// Smallest N whose exact tail `|c[N]|·x_max^{γ+β(N+1)}` (summed over k and
/// weighted by `(1 + |ln x_max|)^{j−1}` for log branches) is at most `target`.
pub fn choose_truncation(
    spec: &EquationSpec,
    root: &CharacteristicRoot,
    x_max: f64,
    target: f64,
) -> Result<usize> {
    check_valid(root)?;
    if !(target > 0.0) || !(x_max > 0.0) {
        return Err(Error::Domain {
            function: "choose_truncation",
            arg: if target > 0.0 { "x_max" } else { "target" },
            value: if target > 0.0 { x_max } else { target },
        });
    }
    let j = root.multiplicity.min(MAX_RATIO_DERIVATIVE);
    let ln_x = x_max.ln();
    let log_weight = (j as f64 - 1.0) * (1.0 + ln_x.abs()).ln();
    let ln_target = target.ln();
    let mut rec = Recursion::new(spec, root.gamma, j, 1.0);
    let mut best = f64::INFINITY;
    for n in 0..=TRUNCATION_CAP {
        if n > 0 {
            rec.push_row()?;
        }
        let size: f64 = rec.rows[n].iter().map(|c| c.abs()).sum();
        let exponent = root.gamma + spec.beta() * (n + 1) as f64;
        let ln_bound = size.ln() + exponent * ln_x + log_weight;
        if ln_bound <= ln_target {
            return Ok(n);
        }
        best = best.min(ln_bound);
    }
    Err(Error::Truncation {
        achieved: best.exp(),
        cap: TRUNCATION_CAP,
    })
}

impl SeriesSolution {
    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// c[n][k] with k counted from 1.
    pub fn coefficient(&self, n: usize, k: usize) -> f64 {
        self.coeffs[n][k - 1]
    }

    fn check_x(&self, x: f64) -> Result<()> {
        let domain = |x| Error::Domain {
            function: "series evaluation",
            arg: "x",
            value: x,
        };
        if self.branch > 1 && x <= 0.0 {
            return Err(domain(x));
        }
        if x < 0.0 && (as_integer(self.gamma).is_none() || as_integer(self.beta).is_none()) {
            return Err(domain(x));
        }
        if x == 0.0 && self.gamma < 0.0 {
            return Err(domain(x));
        }
        Ok(())
    }

    /// Σ_n c[n][k] y^n with y = x^β, by Horner's rule.
    fn inner_sum(&self, k: usize, y: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, row| acc * y + row[k - 1])
    }

    /// Value of the truncated branch at x.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        if x == 0.0 {
            return Ok(if self.gamma > 0.0 { 0.0 } else { self.c0 });
        }
        let (xg, y) = if x < 0.0 {
            (x.powi(self.gamma as i32), x.powi(self.beta as i32))
        } else {
            (x.powf(self.gamma), x.powf(self.beta))
        };
        if self.branch == 1 {
            return Ok(xg * self.inner_sum(1, y));
        }
        let ln_x = x.ln();
        let total: f64 = (1..=self.branch)
            .map(|k| {
                let m = self.branch - k;
                ln_x.powi(m as i32) / factorial(m) * self.inner_sum(k, y)
            })
            .sum();
        Ok(xg * total)
    }

    /// The exact residual `x^{γ+β(N+1)} Σ_k c[N][k] (ln x)^{l−k}/(l−k)!`
    /// left by truncating at N.
    pub fn predicted_tail(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        if x <= 0.0 {
            return Err(Error::Domain {
                function: "predicted_tail",
                arg: "x",
                value: x,
            });
        }
        let last = &self.coeffs[self.order()];
        let ln_x = x.ln();
        let sum: f64 = (1..=self.branch)
            .map(|k| {
                let m = self.branch - k;
                last[k - 1] * ln_x.powi(m as i32) / factorial(m)
            })
            .sum();
        let exponent = self.gamma + self.beta * (self.order() + 1) as f64;
        Ok(x.powf(exponent) * sum)
    }

    /// Writes the coefficient table as CSV with columns `n,k,c`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Table(e.to_string());
        for (n, row) in self.coeffs.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                w.serialize(CoeffRecord {
                    n,
                    k: k + 1,
                    c: format!("{c:.17e}"),
                })
                .map_err(io)?;
            }
        }
        w.flush().map_err(|e| Error::Table(e.to_string()))
    }

    /// Reads a table written by [`SeriesSolution::write_csv`]; the other fields
    /// are supplied by the caller.
    pub fn read_csv<R: Read>(
        input: R,
        gamma: f64,
        beta: f64,
        multiplicity: usize,
    ) -> Result<SeriesSolution> {
        let mut r = csv::Reader::from_reader(input);
        let mut coeffs: Vec<Vec<f64>> = Vec::new();
        for (line, rec) in r.deserialize::<CoeffRecord>().enumerate() {
            let rec = rec.map_err(|e| Error::Table(e.to_string()))?;
            let c: f64 = rec.c.trim().parse().map_err(|_| {
                Error::Table(format!("row {}: bad coefficient {:?}", line + 1, rec.c))
            })?;
            if rec.n == coeffs.len() && rec.k == 1 {
                coeffs.push(vec![c]);
            } else if rec.n + 1 == coeffs.len() && rec.k == coeffs[rec.n].len() + 1 {
                coeffs[rec.n].push(c);
            } else {
                return Err(Error::Table(format!(
                    "row {}: unexpected (n, k) = ({}, {})",
                    line + 1,
                    rec.n,
                    rec.k
                )));
            }
        }
        let Some(first) = coeffs.first() else {
            return Err(Error::Table("no rows".into()));
        };
        let branch = first.len();
        if coeffs.iter().any(|row| row.len() != branch) {
            return Err(Error::Table("rows have different widths".into()));
        }
        if branch > multiplicity {
            return Err(Error::Branch {
                branch,
                max: multiplicity,
            });
        }
        Ok(SeriesSolution {
            gamma,
            beta,
            multiplicity,
            branch,
            c0: first[0],
            coeffs,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffRecord {
    n: usize,
    k: usize,
    c: String,
}
