//! Real-argument gamma, digamma and polygamma functions, and the derivative
//! chain of the gamma ratio `r(γ) = Γ(1+γ) / Γ(1+γ−α)`.
//!
//! Everything here is implemented in-repo: the solver's accuracy hinges on
//! these primitives, so they are pinned by high-precision reference values in
//! the tests rather than delegated.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Highest polygamma order supported by [`polygamma`].
pub const MAX_POLYGAMMA_ORDER: usize = 8;

/// Highest derivative order of the gamma ratio, one more than the polygamma cap.
pub const MAX_RATIO_DERIVATIVE: usize = MAX_POLYGAMMA_ORDER + 1;

/// Orders closer than this to an integer are treated as integers.
pub const INTEGER_TOL: f64 = 1e-12;

const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// ζ(k) − 1 for k = 2, 3, …, 30.
const ZETA_MINUS_ONE: [f64; 29] = [
    0.644_934_066_848_226_4,
    0.202_056_903_159_594_3,
    0.082_323_233_711_138_19,
    0.036_927_755_143_369_93,
    0.017_343_061_984_449_14,
    0.008_349_277_381_922_827,
    0.004_077_356_197_944_339,
    0.002_008_392_826_082_214,
    9.945_751_278_180_853e-4,
    4.941_886_041_194_646e-4,
    2.460_865_533_080_483e-4,
    1.227_133_475_784_891e-4,
    6.124_813_505_870_483e-5,
    3.058_823_630_702_049e-5,
    1.528_225_940_865_187e-5,
    7.637_197_637_899_762e-6,
    3.817_293_264_999_840e-6,
    1.908_212_716_553_939e-6,
    9.539_620_338_727_961e-7,
    4.769_329_867_878_065e-7,
    2.384_505_027_277_330e-7,
    1.192_199_259_653_111e-7,
    5.960_818_905_125_948e-8,
    2.980_350_351_465_228e-8,
    1.490_155_482_836_504e-8,
    7.450_711_789_835_429e-9,
    3.725_334_024_788_457e-9,
    1.862_659_723_513_049e-9,
    9.313_274_324_196_682e-10,
];

/// Bernoulli numbers B_2, B_4, …, B_20.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174_611.0 / 330.0,
];

const STIRLING_MIN: f64 = 15.0;
const DIGAMMA_ASYMPTOTIC_MIN: f64 = 10.0;
const POLYGAMMA_ASYMPTOTIC_MIN: f64 = 20.0;

/// `n!` as a float for small `n`.
pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Binomial coefficient `C(n, k)` as a float.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Rounds `x` when it lies within [`INTEGER_TOL`] of an integer.
pub fn as_integer(x: f64) -> Option<i64> {
    let r = x.round();
    if x.is_finite() && (x - r).abs() < INTEGER_TOL {
        Some(r as i64)
    } else {
        None
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// sin(πx) with exact zeros at the integers.
fn sin_pi(x: f64) -> f64 {
    if x == x.floor() {
        return 0.0;
    }
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

/// cos(πx) with exact zeros at half-integers.
fn cos_pi(x: f64) -> f64 {
    let r = (x % 2.0).abs();
    if r == 0.5 || r == 1.5 {
        return 0.0;
    }
    if r <= 0.5 {
        (PI * r).cos()
    } else if r < 1.5 {
        -(PI * (r - 1.0)).cos()
    } else {
        (PI * (2.0 - r)).cos()
    }
}

/// ln Γ(1+z) for |z| ≤ 1/2, via the (ζ(k) − 1) series.
fn ln_gamma_1p(z: f64) -> f64 {
    tail_series(z) - z.ln_1p() + z * (1.0 - EULER_MASCHERONI)
}

/// Σ_{k≥2} (ζ(k)−1) (−z)^k / k
fn tail_series(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut pow = z * z;
    for (i, zeta) in ZETA_MINUS_ONE.iter().enumerate() {
        sum += zeta * pow / (i + 2) as f64;
        pow *= -z;
    }
    sum
}

/// Stirling correction S(x) = Σ B_{2k} / (2k(2k−1) x^{2k−1}).
fn stirling_correction(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut sum = 0.0;
    for (i, b) in BERNOULLI_EVEN.iter().take(8).enumerate() {
        let k = (i + 1) as f64;
        sum += b / (2.0 * k * (2.0 * k - 1.0)) * pow;
        pow *= inv2;
    }
    sum
}

fn ln_gamma_positive(x: f64) -> f64 {
    if x < 0.5 {
        ln_gamma_1p(x) - x.ln()
    } else if x <= 1.5 {
        ln_gamma_1p(x - 1.0)
    } else if x <= 2.5 {
        // ln Γ(2+z) = ln(1+z) + ln Γ(1+z); the logarithms cancel.
        let z = x - 2.0;
        tail_series(z) + z * (1.0 - EULER_MASCHERONI)
    } else if x < STIRLING_MIN {
        let mut y = x;
        let mut prod = 1.0;
        while y > 2.5 {
            y -= 1.0;
            prod *= y;
        }
        ln_gamma_positive(y) + prod.ln()
    } else {
        (x - 0.5) * x.ln() - x + HALF_LN_2PI + stirling_correction(x)
    }
}

/// Natural logarithm of Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "ln_gamma",
            arg: "x",
            value: x,
        });
    }
    Ok(ln_gamma_positive(x))
}

/// Γ(x) on the real line; infinite at the poles 0, −1, −2, ….
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return f64::INFINITY;
    }
    if x > 0.0 {
        if x > 171.7 {
            return f64::INFINITY;
        }
        ln_gamma_positive(x).exp()
    } else {
        PI / (sin_pi(x) * gamma(1.0 - x))
    }
}

/// 1/Γ(x) on the whole real line, exactly zero at 0, −1, −2, ….
pub fn reciprocal_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > 0.0 {
        return (-ln_gamma_positive(x)).exp();
    }
    // reflection: 1/Γ(x) = Γ(1−x) sin(πx) / π
    let s = sin_pi(x);
    let lg = ln_gamma_positive(1.0 - x);
    if lg < 700.0 {
        lg.exp() * s / PI
    } else {
        s.signum() * (lg + (s.abs() / PI).ln()).exp()
    }
}

/// Digamma ψ(x) = d/dx ln Γ(x).
pub fn digamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Ok(f64::NAN);
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "digamma",
            x,
        });
    }
    if x < 0.0 {
        // ψ(x) = ψ(1−x) − π cot(πx)
        return Ok(digamma(1.0 - x)? - PI * cos_pi(x) / sin_pi(x));
    }
    let mut y = x;
    let mut acc = 0.0;
    while y < DIGAMMA_ASYMPTOTIC_MIN {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut series = 0.0;
    for (i, b) in BERNOULLI_EVEN.iter().take(8).enumerate() {
        series += b / (2.0 * (i + 1) as f64) * pow;
        pow *= inv2;
    }
    Ok(acc + y.ln() - 0.5 / y - series)
}

/// Polygamma ψ^{(m)}(x) for 1 ≤ m ≤ 8 (m = 0 falls back to digamma).
pub fn polygamma(m: usize, x: f64) -> Result<f64> {
    if m == 0 {
        return digamma(x);
    }
    if m > MAX_POLYGAMMA_ORDER {
        return Err(Error::UnsupportedOrder {
            order: m,
            max: MAX_POLYGAMMA_ORDER,
        });
    }
    if x.is_nan() {
        return Ok(f64::NAN);
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "polygamma",
            x,
        });
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let m_fact = factorial(m);
    let exponent = (m + 1) as i32;

    // ψ^{(m)}(x) = ψ^{(m)}(x+n) + (−1)^{m+1} m! Σ_{k<n} (x+k)^{−(m+1)}
    let mut y = x;
    let mut shifted = 0.0;
    while y < POLYGAMMA_ASYMPTOTIC_MIN {
        shifted += y.powi(-exponent);
        y += 1.0;
    }

    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut asym = factorial(m - 1) * inv.powi(m as i32) + 0.5 * m_fact * inv.powi(exponent);
    let mut pow = inv.powi(m as i32) * inv2;
    for (i, b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_k = 2 * (i + 1);
        // (2k+m−1)! / (2k)!
        let ratio: f64 = ((two_k + 1)..=(two_k + m - 1)).map(|v| v as f64).product();
        asym += b * ratio * pow;
        pow *= inv2;
    }
    Ok(sign * (asym + m_fact * shifted))
}

/// Γ(1+γ)/Γ(1+γ−α), finite across poles of the denominator.
///
/// Integer α gives the falling factorial γ(γ−1)…(γ−α+1) exactly.
pub fn gamma_ratio(gamma: f64, alpha: f64) -> Result<f64> {
    if !gamma.is_finite() {
        return Err(Error::Domain {
            function: "gamma_ratio",
            arg: "gamma",
            value: gamma,
        });
    }
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(Error::Domain {
            function: "gamma_ratio",
            arg: "alpha",
            value: alpha,
        });
    }
    if alpha == 0.0 {
        return Ok(1.0);
    }
    if let Some(k) = as_integer(alpha) {
        return Ok((0..k).map(|j| gamma - j as f64).product());
    }
    let a = 1.0 + gamma;
    if is_nonpositive_integer(a) {
        return Err(Error::Domain {
            function: "gamma_ratio",
            arg: "gamma",
            value: gamma,
        });
    }
    let b = a - alpha;
    if is_nonpositive_integer(b) {
        return Ok(0.0);
    }
    if a > 0.0 && b > 0.0 {
        if b >= STIRLING_MIN {
            let ln_ratio = (b - 0.5) * (alpha / b).ln_1p() + alpha * a.ln() - alpha
                + stirling_correction(a)
                - stirling_correction(b);
            Ok(ln_ratio.exp())
        } else {
            Ok((ln_gamma_positive(a) - ln_gamma_positive(b)).exp())
        }
    } else {
        Ok(self::gamma(a) * reciprocal_gamma(b))
    }
}

/// The gamma ratio together with its first `K` derivatives in γ.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaRatioDerivs {
    /// r = Γ(1+γ)/Γ(1+γ−α)
    pub value: f64,
    /// `derivs[k-1]` = d^k r / dγ^k
    pub derivs: Vec<f64>,
}

impl GammaRatioDerivs {
    /// Highest derivative order held.
    pub fn order(&self) -> usize {
        self.derivs.len()
    }

    /// k-th derivative; k = 0 is the value itself.
    pub fn derivative(&self, k: usize) -> f64 {
        if k == 0 {
            self.value
        } else {
            self.derivs[k - 1]
        }
    }

    /// Ψ_k = r^{(k)} / r.
    pub fn psi(&self, k: usize) -> f64 {
        self.derivative(k) / self.value
    }
}

/// Derivatives of the gamma ratio up to order `order`.
///
/// Fractional α uses the Leibniz recursion
/// `r^{(k)} = Σ_j C(k−1, j) r^{(j)} h^{(k−1−j)}` with
/// `h^{(m)} = ψ^{(m)}(1+γ) − ψ^{(m)}(1+γ−α)`. Integer α differentiates the
/// falling-factorial polynomial directly, which stays finite at its zeros.
pub fn gamma_ratio_derivs(gamma: f64, alpha: f64, order: usize) -> Result<GammaRatioDerivs> {
    let value = gamma_ratio(gamma, alpha)?;
    if order > MAX_RATIO_DERIVATIVE {
        return Err(Error::UnsupportedOrder {
            order,
            max: MAX_RATIO_DERIVATIVE,
        });
    }
    if order == 0 {
        return Ok(GammaRatioDerivs {
            value,
            derivs: Vec::new(),
        });
    }
    if alpha == 0.0 {
        return Ok(GammaRatioDerivs {
            value,
            derivs: vec![0.0; order],
        });
    }
    if let Some(k) = as_integer(alpha) {
        let taylor = falling_factorial_taylor(gamma, k as usize);
        let derivs = (1..=order)
            .map(|m| taylor.get(m).map_or(0.0, |c| c * factorial(m)))
            .collect();
        return Ok(GammaRatioDerivs { value, derivs });
    }

    let a = 1.0 + gamma;
    let b = a - alpha;
    if is_nonpositive_integer(b) {
        return Err(Error::Pole {
            function: "gamma_ratio_derivs",
            x: b,
        });
    }
    let mut h = Vec::with_capacity(order);
    for m in 0..order {
        h.push(polygamma(m, a)? - polygamma(m, b)?);
    }
    let mut r = Vec::with_capacity(order + 1);
    r.push(value);
    for k in 1..=order {
        let next = (0..k)
            .map(|j| binomial(k - 1, j) * r[j] * h[k - 1 - j])
            .sum();
        r.push(next);
    }
    r.remove(0);
    Ok(GammaRatioDerivs { value, derivs: r })
}

/// Taylor coefficients in u of Π_{j<k} ((γ − j) + u).
fn falling_factorial_taylor(gamma: f64, k: usize) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for j in 0..k {
        let shift = gamma - j as f64;
        let mut next = vec![0.0; coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] += c * shift;
            next[i + 1] += c;
        }
        coeffs = next;
    }
    coeffs
}
