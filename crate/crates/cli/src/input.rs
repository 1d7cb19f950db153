use fracbessel::{EquationSpec, RawEquation};

use crate::CliError;

/// Parses an equation document:
///
/// ```toml
/// beta = 3.1
/// nu2 = 2.25
/// terms = [
///   { d = 2.0, alpha = 4 },
///   { d = 0.3, alpha = 2 },
///   { d = 1.0, alpha = 1 },
/// ]
/// ```
///
/// Integers are accepted wherever a real is expected.
pub fn parse_input(document: &str) -> Result<EquationSpec, CliError> {
    let raw: RawEquation = toml::from_str(document)
        .map_err(|e| CliError::Input(e.to_string().trim_end().to_string()))?;
    raw.validate().map_err(CliError::from)
}
