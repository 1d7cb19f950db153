//! The characteristic function `G(γ) = Σ dᵢ Γ(1+γ)/Γ(1+γ−αᵢ)`, its roots
//! `G(γ) = ν²`, and the existence/uniqueness diagnosis built on them.
//!
//! Roots are located on a uniform grid. Sign changes of `F = G − ν²` are
//! refined by bisection. Even-multiplicity roots produce no sign change, so
//! sign changes of `F′` are refined as well and kept when `F` is within
//! [`TANGENCY_TOL`] of zero there. Simple roots that sit inside such a
//! tangency (both within tolerance of zero on the whole segment between them)
//! are absorbed into it.

use std::fmt;

use rayon::prelude::*;

use crate::equation::EquationSpec;
use crate::error::{Error, Result};
use crate::specfun::{
    digamma, gamma_ratio, gamma_ratio_derivs, reciprocal_gamma, MAX_RATIO_DERIVATIVE,
};

/// Relative acceptance of |F| at a simple root, scaled by `1 + Σ|dᵢ rᵢ| + |ν²|`.
pub const ROOT_TOL: f64 = 1e-10;
/// |F| below which a critical point of F counts as an even-multiplicity root.
pub const TANGENCY_TOL: f64 = 1e-6;
/// Base tolerance for vanishing derivatives, scaled by `1 + |F^{(l+1)}|`.
pub const DERIV_TOL: f64 = 1e-6;
/// Two roots whose gap is within this of a positive multiple of β are spaced by β·n.
pub const SPACING_TOL: f64 = 1e-6;
pub const DEFAULT_STEP: f64 = 1e-3;
pub const DEFAULT_ROOT_CAP: usize = 64;
/// Span of the default window above the Caputo floor.
pub const DEFAULT_SPAN: f64 = 60.0;
/// The default window never auto-extends past this γ.
pub const EXTENSION_CAP: f64 = 500.0;
const BISECTION_ITERS: usize = 60;
const NEWTON_ITERS: usize = 100;
const MERGE_SAMPLES: usize = 16;
const DEDUP_TOL: f64 = 1e-9;

/// G(γ) = Σ dᵢ Γ(1+γ)/Γ(1+γ−αᵢ), defined for γ > −1.
pub fn g(spec: &EquationSpec, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    spec.terms()
        .iter()
        .map(|t| Ok(t.d * gamma_ratio(gamma, t.alpha)?))
        .sum()
}

/// Magnitude of the terms that make up `F(γ) = G(γ) − ν²`.
pub fn g_scale(spec: &EquationSpec, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    let terms: Result<f64> = spec
        .terms()
        .iter()
        .map(|t| Ok((t.d * gamma_ratio(gamma, t.alpha)?).abs()))
        .sum();
    Ok(terms? + spec.nu2().abs())
}

/// d^order G / dγ^order; order 0 is G itself.
pub fn g_derivative(spec: &EquationSpec, gamma: f64, order: usize) -> Result<f64> {
    check_gamma(gamma)?;
    if order == 0 {
        return g(spec, gamma);
    }
    spec.terms()
        .iter()
        .map(|t| Ok(t.d * gamma_ratio_derivs(gamma, t.alpha, order)?.derivative(order)))
        .sum()
}

fn check_gamma(gamma: f64) -> Result<()> {
    if gamma > -1.0 && gamma.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            function: "G",
            arg: "gamma",
            value: gamma,
        })
    }
}

/// Existence threshold `Γ(p) Σ dᵢ / Γ(p − αᵢ)` with `p = ⌈α_max⌉`, i.e. `G(p − 1)`.
///
/// For a fractional highest order `p` equals `n_max`. When the highest order
/// is an integer above every fractional one the threshold is taken at
/// `⌈α_max⌉`; any ν² above it still forces a root past `p − 1 > n_max − 1`
/// because G grows without bound. Integer orders ≥ p contribute zero.
pub fn nu2_min(spec: &EquationSpec) -> Result<f64> {
    if spec.is_integer_only() {
        return Err(Error::NotApplicable("nu2_min"));
    }
    let p = spec.p() as f64;
    let gamma_p = crate::specfun::gamma(p);
    let sum: f64 = spec
        .terms()
        .iter()
        .map(|t| t.d * reciprocal_gamma(p - t.alpha))
        .sum();
    Ok(gamma_p * sum)
}

/// Right side of the initial-value uniqueness bound on `[0, b]`:
/// `b₁^β + Σ qᵢ |dᵢ| b₁^{nᵢ}` with `b₁ = max(1, b)`.
pub fn ivp_bound(spec: &EquationSpec, b: f64) -> f64 {
    let b1 = b.max(1.0);
    let terms: f64 = spec
        .terms()
        .iter()
        .map(|t| {
            let n = t.ceil_order();
            let q = if t.is_integer_order() {
                1.0
            } else {
                let gap = n as f64 - t.alpha;
                reciprocal_gamma(gap) / (gap + 1.0)
            };
            q * t.d.abs() * b1.powi(n as i32)
        })
        .sum();
    b1.powf(spec.beta()) + terms
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootStatus {
    Valid,
    /// γ ≤ n_max − 1: the Caputo derivative of x^γ does not exist.
    RejectedBelowThreshold,
    /// γ + β·n is another root, so a recursion denominator vanishes.
    RejectedDummy,
}

impl fmt::Display for RootStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootStatus::Valid => "valid",
            RootStatus::RejectedBelowThreshold => "below-threshold",
            RootStatus::RejectedDummy => "dummy",
        })
    }
}

/// A real root of `G(γ) = ν²`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacteristicRoot {
    pub gamma: f64,
    pub multiplicity: usize,
    pub status: RootStatus,
    pub reject_info: Option<String>,
}

impl CharacteristicRoot {
    /// A valid root with the given multiplicity, for callers that already know γ.
    pub fn valid(gamma: f64, multiplicity: usize) -> Self {
        CharacteristicRoot {
            gamma,
            multiplicity,
            status: RootStatus::Valid,
            reject_info: None,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.status == RootStatus::Valid
    }
}

/// Grid scan settings.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
    pub root_cap: usize,
    /// Double the window while F < 0 at its right edge, up to [`EXTENSION_CAP`].
    pub auto_extend: bool,
}

impl ScanConfig {
    /// A fixed window.
    pub fn new(lo: f64, hi: f64, step: f64) -> Self {
        ScanConfig {
            lo,
            hi,
            step,
            root_cap: DEFAULT_ROOT_CAP,
            auto_extend: false,
        }
    }

    /// `[−1 + 1e−6, floor + 60]` with step 1e−3, auto-extending; `floor` is
    /// `n_max − 1`, or `p − 1` for integer-only equations.
    pub fn default_for(spec: &EquationSpec) -> Self {
        let floor = spec
            .caputo_floor()
            .unwrap_or(spec.p() as f64 - 1.0)
            .max(0.0);
        ScanConfig {
            lo: -1.0 + 1e-6,
            hi: floor + DEFAULT_SPAN,
            step: DEFAULT_STEP,
            root_cap: DEFAULT_ROOT_CAP,
            auto_extend: true,
        }
    }
}

/// Roots of `G(γ) = ν²` on `[scan_lo, scan_hi]`, classified and filtered.
pub fn find_roots(
    spec: &EquationSpec,
    scan_lo: f64,
    scan_hi: f64,
    step: f64,
) -> Result<Vec<CharacteristicRoot>> {
    find_roots_with(spec, &ScanConfig::new(scan_lo, scan_hi, step))
}

#[derive(Debug, Clone, Copy)]
enum Candidate {
    SignChange(f64),
    Tangency(f64),
}

/// The window actually scanned, after automatic extension.
pub fn effective_window(spec: &EquationSpec, cfg: &ScanConfig) -> Result<(f64, f64)> {
    let lo = cfg.lo;
    if !(lo > -1.0) || !lo.is_finite() {
        return Err(Error::ScanWindow(format!(
            "lower end {lo} must lie above -1"
        )));
    }
    if !(cfg.hi > lo) || !cfg.hi.is_finite() {
        return Err(Error::ScanWindow(format!(
            "upper end {} must exceed lower end {lo}",
            cfg.hi
        )));
    }
    if !(cfg.step > 0.0) || !cfg.step.is_finite() {
        return Err(Error::ScanWindow(format!("step {} must be > 0", cfg.step)));
    }
    let hi = if cfg.auto_extend {
        extend_window(spec, lo, cfg.hi)?
    } else {
        cfg.hi
    };
    Ok((lo, hi))
}

pub fn find_roots_with(spec: &EquationSpec, cfg: &ScanConfig) -> Result<Vec<CharacteristicRoot>> {
    let (lo, hi) = effective_window(spec, cfg)?;
    let step = cfg.step;
    let n = ((hi - lo) / step).ceil() as usize;
    let grid: Vec<f64> = (0..=n)
        .map(|i| if i == n { hi } else { lo + i as f64 * step })
        .collect();
    let samples: Vec<(f64, Option<f64>)> =
        grid.par_iter().map(|&x| value_and_slope(spec, x)).collect();

    let nu2 = spec.nu2();
    let f = |x: f64| g(spec, x).map(|v| v - nu2);
    let mut candidates = Vec::new();
    if samples[0].0 == 0.0 {
        candidates.push(Candidate::SignChange(grid[0]));
    }
    for i in 1..=n {
        let (f0, f1) = (samples[i - 1].0, samples[i].0);
        if f1 == 0.0 {
            candidates.push(Candidate::SignChange(grid[i]));
        } else if f0 * f1 < 0.0 {
            candidates.push(Candidate::SignChange(bisect(&f, grid[i - 1], grid[i], f0)?));
        }
    }
    let slope = |x: f64| g_derivative(spec, x, 1);
    for i in 1..=n {
        let (Some(s0), Some(s1)) = (samples[i - 1].1, samples[i].1) else {
            continue;
        };
        let critical = if s1 == 0.0 {
            grid[i]
        } else if s0 * s1 < 0.0 {
            match bisect(&slope, grid[i - 1], grid[i], s0) {
                Ok(x) => x,
                Err(_) => continue,
            }
        } else {
            continue;
        };
        if f(critical)?.abs() <= tangency_tol(spec, critical)? {
            candidates.push(Candidate::Tangency(critical));
        }
    }

    let merged = absorb_into_tangencies(spec, candidates, step)?;

    let mut roots = Vec::with_capacity(merged.len());
    for c in merged {
        let (gamma, multiplicity) = match c {
            Candidate::SignChange(x) => multiplicity_at(spec, x, 1, step)?,
            Candidate::Tangency(x) => multiplicity_at(spec, x, 1, step)?,
        };
        roots.push(CharacteristicRoot::valid(gamma, multiplicity));
    }
    roots.sort_by(|a, b| a.gamma.total_cmp(&b.gamma));
    roots.dedup_by(|b, a| {
        if (a.gamma - b.gamma).abs() <= DEDUP_TOL * (1.0 + a.gamma.abs()) {
            a.multiplicity = a.multiplicity.max(b.multiplicity);
            true
        } else {
            false
        }
    });
    if roots.len() > cfg.root_cap {
        return Err(Error::TooManyRoots {
            found: roots.len(),
            cap: cfg.root_cap,
        });
    }
    apply_filters(spec, &mut roots);
    Ok(roots)
}

/// F and F′ on the grid; F′ is `None` where a polygamma pole is hit exactly.
fn value_and_slope(spec: &EquationSpec, x: f64) -> (f64, Option<f64>) {
    let mut value = -spec.nu2();
    let mut slope = Some(0.0);
    for t in spec.terms() {
        let r = gamma_ratio(x, t.alpha).unwrap_or(f64::NAN);
        value += t.d * r;
        slope = slope.and_then(|s| {
            if t.is_integer_order() {
                gamma_ratio_derivs(x, t.alpha, 1)
                    .ok()
                    .map(|d| s + t.d * d.derivative(1))
            } else {
                let h = digamma(1.0 + x).ok()? - digamma(1.0 + x - t.alpha).ok()?;
                Some(s + t.d * r * h)
            }
        });
    }
    (value, slope)
}

fn root_tol(spec: &EquationSpec, gamma: f64) -> Result<f64> {
    Ok(ROOT_TOL * (1.0 + g_scale(spec, gamma)?))
}

fn tangency_tol(spec: &EquationSpec, gamma: f64) -> Result<f64> {
    Ok(TANGENCY_TOL.max(root_tol(spec, gamma)?))
}

/// Bisection on a bracket `[a, b]` where `fa` has the opposite sign of f(b).
fn bisect<F>(f: &F, mut a: f64, mut b: f64, mut fa: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    for _ in 0..BISECTION_ITERS {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let fb = f(b)?;
    let best = if fa.abs() <= fb.abs() { a } else { b };
    // Integer-order polynomials have exact integer roots.
    let k = best.round();
    if k != best
        && (k - best).abs() < 1e-12
        && f(k).is_ok_and(|v| v.abs() <= fa.abs().min(fb.abs()))
    {
        return Ok(k + 0.0);
    }
    Ok(best)
}

fn extend_window(spec: &EquationSpec, lo: f64, mut hi: f64) -> Result<f64> {
    while hi < EXTENSION_CAP && g(spec, hi)? - spec.nu2() < 0.0 {
        hi = (lo + 2.0 * (hi - lo)).min(EXTENSION_CAP);
    }
    Ok(hi)
}

/// Drops sign-change roots that belong to a nearby tangency.
fn absorb_into_tangencies(
    spec: &EquationSpec,
    candidates: Vec<Candidate>,
    step: f64,
) -> Result<Vec<Candidate>> {
    let tangencies: Vec<f64> = candidates
        .iter()
        .filter_map(|c| match c {
            Candidate::Tangency(x) => Some(*x),
            _ => None,
        })
        .collect();
    let mut out = Vec::with_capacity(candidates.len());
    'outer: for c in candidates {
        if let Candidate::SignChange(x) = c {
            for &t in &tangencies {
                if (x - t).abs() <= 10.0 * step && flat_between(spec, x, t)? {
                    continue 'outer;
                }
            }
        }
        out.push(c);
    }
    Ok(out)
}

fn flat_between(spec: &EquationSpec, a: f64, b: f64) -> Result<bool> {
    for i in 0..=MERGE_SAMPLES {
        let x = a + (b - a) * i as f64 / MERGE_SAMPLES as f64;
        if (g(spec, x)? - spec.nu2()).abs() > tangency_tol(spec, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplicity of a root near `x`, counting vanishing derivatives from `from`.
///
/// Whenever F^{(m)} vanishes within tolerance, γ is moved onto the zero of
/// F^{(m)} by Newton's method before F^{(m+1)} is tested; the highest
/// vanishing derivative pins a multiple root far better than F itself.
fn multiplicity_at(spec: &EquationSpec, x: f64, from: usize, step: f64) -> Result<(f64, usize)> {
    let mut gamma = x;
    let mut m = from;
    while m < MAX_RATIO_DERIVATIVE {
        let d = g_derivative(spec, gamma, m)?;
        let next = g_derivative(spec, gamma, m + 1)?;
        if d.abs() > DERIV_TOL * (1.0 + next.abs()) {
            return Ok((gamma, m));
        }
        // Near a pole of Γ the relative test can pass at a simple root whose
        // neighbouring critical point is far from a zero of F.
        let moved = newton_on_derivative(spec, gamma, m, step)?;
        if (g(spec, moved)? - spec.nu2()).abs() > tangency_tol(spec, moved)? {
            return Ok((gamma, m));
        }
        gamma = moved;
        m += 1;
    }
    let top = g_derivative(spec, gamma, MAX_RATIO_DERIVATIVE)?;
    if top.abs() > DERIV_TOL {
        Ok((gamma, MAX_RATIO_DERIVATIVE))
    } else {
        Err(Error::MultiplicityTooHigh {
            gamma,
            max: MAX_RATIO_DERIVATIVE,
        })
    }
}

fn newton_on_derivative(spec: &EquationSpec, start: f64, m: usize, radius: f64) -> Result<f64> {
    let mut x = start;
    for _ in 0..NEWTON_ITERS {
        let d = g_derivative(spec, x, m)?;
        let dd = g_derivative(spec, x, m + 1)?;
        if dd == 0.0 || !dd.is_finite() {
            break;
        }
        let delta = d / dd;
        let next = x - delta;
        if (next - start).abs() > radius || !(next > -1.0) {
            break;
        }
        x = next;
        if delta.abs() <= 1e-15 * (1.0 + x.abs()) {
            break;
        }
    }
    Ok(x)
}

/// Threshold filter, then dummy-root elimination among the survivors.
fn apply_filters(spec: &EquationSpec, roots: &mut [CharacteristicRoot]) {
    if let Some(floor) = spec.caputo_floor() {
        for r in roots.iter_mut() {
            if r.gamma <= floor {
                r.status = RootStatus::RejectedBelowThreshold;
                r.reject_info = Some(format!(
                    "gamma <= n_max - 1 = {floor}; the Caputo derivative of x^gamma diverges"
                ));
            }
        }
    }
    let all: Vec<f64> = roots.iter().map(|r| r.gamma).collect();
    let beta = spec.beta();
    for r in roots.iter_mut().filter(|r| r.is_valid()) {
        for &other in all.iter().filter(|&&o| o > r.gamma) {
            let gap = other - r.gamma;
            let n = (gap / beta).round();
            if n >= 1.0 && (gap - n * beta).abs() <= SPACING_TOL {
                r.status = RootStatus::RejectedDummy;
                r.reject_info = Some(format!(
                    "gamma + beta*{n} = {other} is also a root; the series denominator vanishes"
                ));
                break;
            }
        }
    }
}

/// Existence/uniqueness classes for series solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniquenessClass {
    /// Only integer orders; no Caputo threshold applies.
    IntegerOnly,
    /// Positive coefficients, ν² ≥ ν²_min and fractional α_max.
    FractionalMaxUnique,
    /// Positive coefficients, ν² ≥ ν²_min, integer α_max with n_max ≥ α_max − 1.
    IntegerMaxUnique,
    /// n_max < α_max − 1, or the positivity/threshold hypotheses fail.
    PossiblyMultiple,
    /// No admissible root.
    NoSeriesSolution,
}

impl fmt::Display for UniquenessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UniquenessClass::IntegerOnly => "integer-only",
            UniquenessClass::FractionalMaxUnique => "unique (fractional alpha_max)",
            UniquenessClass::IntegerMaxUnique => "unique (integer alpha_max)",
            UniquenessClass::PossiblyMultiple => "possibly multiple",
            UniquenessClass::NoSeriesSolution => "no series solution",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnosis {
    /// `None` for integer-only equations.
    pub nu2_min: Option<f64>,
    pub nu2_satisfied: bool,
    pub uniqueness_class: UniquenessClass,
    pub valid_roots: usize,
    pub b: f64,
    pub ivp_bound: f64,
    /// ν² strictly exceeds `ivp_bound`.
    pub ivp_unique: bool,
}

/// Diagnosis of a root set produced by [`find_roots`] over `[n_max − 1, hi]`.
pub fn classify(spec: &EquationSpec, roots: &[CharacteristicRoot], b: f64) -> Diagnosis {
    let valid_roots = roots.iter().filter(|r| r.is_valid()).count();
    let nu2_min = nu2_min(spec).ok();
    let nu2_satisfied = nu2_min.is_none_or(|m| spec.nu2() >= m);
    let positive = spec.terms().iter().all(|t| t.d > 0.0);

    let uniqueness_class = match spec.n_max() {
        None => UniquenessClass::IntegerOnly,
        Some(_) if valid_roots == 0 => UniquenessClass::NoSeriesSolution,
        Some(n_max) if (n_max as f64) < spec.alpha_max() - 1.0 => UniquenessClass::PossiblyMultiple,
        Some(_) if positive && nu2_satisfied => {
            if spec.alpha_max_is_integer() {
                UniquenessClass::IntegerMaxUnique
            } else {
                UniquenessClass::FractionalMaxUnique
            }
        }
        Some(_) => UniquenessClass::PossiblyMultiple,
    };
    let bound = ivp_bound(spec, b);
    Diagnosis {
        nu2_min,
        nu2_satisfied,
        uniqueness_class,
        valid_roots,
        b,
        ivp_bound: bound,
        ivp_unique: spec.nu2() > bound,
    }
}
