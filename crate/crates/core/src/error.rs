use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the solver can report.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument {arg} = {value} is outside the domain of {function}")]
    Domain {
        function: &'static str,
        arg: &'static str,
        value: f64,
    },

    #[error("{function} has a pole at {x}")]
    Pole { function: &'static str, x: f64 },

    #[error("order {order} is not supported (maximum {max})")]
    UnsupportedOrder { order: usize, max: usize },

    #[error("invalid equation: {}", .0.join("; "))]
    Validation(Vec<String>),

    #[error("{0} is not applicable to an equation with only integer-order derivatives")]
    NotApplicable(&'static str),

    #[error("invalid scan window: {0}")]
    ScanWindow(String),

    #[error(
        "found {found} roots, more than the cap of {cap}; try a smaller step or a narrower window"
    )]
    TooManyRoots { found: usize, cap: usize },

    #[error("root multiplicity above {max} at gamma = {gamma} is not supported")]
    MultiplicityTooHigh { gamma: f64, max: usize },

    #[error("root gamma = {gamma} is not admissible: {reason}")]
    RootNotValid { gamma: f64, reason: String },

    #[error("recursion denominator G(gamma + beta*{index}) - nu^2 = {denominator:e} vanishes; gamma + beta*{index} is another characteristic root")]
    DummyRootDenominator { index: usize, denominator: f64 },

    #[error("expected a root of multiplicity {expected}, got {got}")]
    WrongMultiplicity { expected: &'static str, got: usize },

    #[error("branch {branch} out of range 1..={max}")]
    Branch { branch: usize, max: usize },

    #[error(
        "truncation did not reach the target within {cap} terms (best tail bound {achieved:e})"
    )]
    Truncation { achieved: f64, cap: usize },

    #[error("Caputo derivative of order {alpha} of x^{gamma} diverges (requires gamma > {floor})")]
    Divergence { alpha: f64, gamma: f64, floor: f64 },

    #[error("quadrature did not converge: estimate {estimate}, error estimate {error:e}")]
    Quadrature { estimate: f64, error: f64 },

    #[error("malformed coefficient table: {0}")]
    Table(String),
}

impl Error {
    /// True for failures caused by the input document rather than the numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Validation(_) | Error::ScanWindow(_) | Error::NotApplicable(_) | Error::Table(_)
        )
    }
}
