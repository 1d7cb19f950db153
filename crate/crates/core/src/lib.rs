//! Series solutions of the multi-term fractional Bessel equation
//!
//! ```text
//! Σᵢ dᵢ x^{αᵢ} D^{αᵢ} u(x) + (x^β − ν²) u(x) = 0,   x > 0,
//! ```
//!
//! with Caputo derivatives for non-integer αᵢ and ordinary derivatives for
//! integer αᵢ.
//!
//! The pipeline is: validate an [`EquationSpec`], locate and classify the
//! roots of the characteristic equation `G(γ) = ν²`
//! ([`characteristic::find_roots`], [`characteristic::classify`]), build the
//! fractional power series or logarithmic series for each admissible root
//! ([`series`]), and check the truncated series against the equation with
//! independent Caputo derivatives ([`verifier`]).

pub mod characteristic;
pub mod equation;
pub mod error;
pub mod quadrature;
pub mod series;
pub mod specfun;
pub mod verifier;

pub use characteristic::{CharacteristicRoot, Diagnosis, RootStatus, ScanConfig, UniquenessClass};
pub use equation::{EquationSpec, RawEquation, Term};
pub use error::{Error, Result};
pub use series::SeriesSolution;
pub use specfun::GammaRatioDerivs;
pub use verifier::ResidualReport;
