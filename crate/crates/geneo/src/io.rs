//! File formats for functions and operator families.
//!
//! Functions travel either as CSV (one sample per line, index order) or JSON
//! (`{"values": [...]}`); values are written with Rust's shortest
//! round-tripping float formatting, so write-then-parse is the identity.
//! Families are JSON arrays of operator descriptors matching
//! [`OperatorSpec`]'s serde form; constructor constraints are enforced here,
//! at parse time.

use std::path::Path;

use crate::error::{Error, Result};
use crate::function::CircularFunction;
use crate::operators::{OperatorFamily, OperatorSpec};

/// On-disk representation of a function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionFormat {
    Csv,
    Json,
}

impl FunctionFormat {
    /// Chooses JSON for a `.json` extension, CSV otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => FunctionFormat::Json,
            _ => FunctionFormat::Csv,
        }
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct FunctionFile {
    values: Vec<f64>,
}

fn json_parse_error(e: &serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Reads a function file and validates it into a [`CircularFunction`].
pub fn parse_function_file(path: &Path, format: FunctionFormat) -> Result<CircularFunction> {
    let text = std::fs::read_to_string(path)?;
    parse_function_str(&text, format)
}

/// Parses function file content from a string.
pub fn parse_function_str(text: &str, format: FunctionFormat) -> Result<CircularFunction> {
    match format {
        FunctionFormat::Csv => {
            let mut values = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    return Err(Error::Parse {
                        line: i + 1,
                        column: 1,
                        message: "empty line in function file".to_string(),
                    });
                }
                let v: f64 = trimmed.parse().map_err(|_| Error::Parse {
                    line: i + 1,
                    column: 1,
                    message: format!("expected a number, found `{trimmed}`"),
                })?;
                values.push(v);
            }
            CircularFunction::new(values)
        }
        FunctionFormat::Json => {
            let file: FunctionFile =
                serde_json::from_str(text).map_err(|e| json_parse_error(&e))?;
            CircularFunction::new(file.values)
        }
    }
}

/// Serializes a function losslessly (shortest round-tripping decimal form).
pub fn function_to_string(phi: &CircularFunction, format: FunctionFormat) -> String {
    match format {
        FunctionFormat::Csv => {
            let mut out = String::new();
            for v in phi.values() {
                out.push_str(&format!("{v}\n"));
            }
            out
        }
        FunctionFormat::Json => {
            let body: Vec<String> = phi.values().iter().map(|v| format!("{v}")).collect();
            format!("{{\"values\": [{}]}}\n", body.join(", "))
        }
    }
}

/// Writes a function file in the given format.
pub fn write_function_file(
    path: &Path,
    phi: &CircularFunction,
    format: FunctionFormat,
) -> Result<()> {
    std::fs::write(path, function_to_string(phi, format))?;
    Ok(())
}

/// Reads a family file: a JSON array of operator descriptors. Constraint
/// violations carry the index of the offending operator.
pub fn parse_family_file(path: &Path) -> Result<OperatorFamily> {
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("family")
        .to_string();
    parse_family_str(&text, name)
}

/// Parses family file content from a string.
pub fn parse_family_str(text: &str, name: impl Into<String>) -> Result<OperatorFamily> {
    let ops: Vec<OperatorSpec> =
        serde_json::from_str(text).map_err(|e| json_parse_error(&e))?;
    OperatorFamily::new(ops, name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_function_round_trip() {
        let phi = parse_function_str("0\n2\n1\n3\n", FunctionFormat::Csv).unwrap();
        assert_eq!(phi.values(), &[0.0, 2.0, 1.0, 3.0]);
        let text = function_to_string(&phi, FunctionFormat::Csv);
        assert_eq!(parse_function_str(&text, FunctionFormat::Csv).unwrap(), phi);
    }

    #[test]
    fn json_function_round_trip() {
        let phi = parse_function_str("{\"values\":[0,2,1,3]}", FunctionFormat::Json).unwrap();
        assert_eq!(phi.values(), &[0.0, 2.0, 1.0, 3.0]);
        let text = function_to_string(&phi, FunctionFormat::Json);
        assert_eq!(parse_function_str(&text, FunctionFormat::Json).unwrap(), phi);
    }

    #[test]
    fn csv_parse_error_reports_line() {
        let err = parse_function_str("0\nx\n", FunctionFormat::Csv).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn csv_nan_is_rejected_by_validation() {
        let err = parse_function_str("0\nNaN\n1\n", FunctionFormat::Csv).unwrap_err();
        assert!(matches!(err, Error::NonFiniteValue { index: 1 }));
    }

    #[test]
    fn family_parsing() {
        let fam = parse_family_str("[{\"type\":\"identity\"}]", "f").unwrap();
        assert_eq!(fam.len(), 1);

        let fam = parse_family_str(
            "[{\"type\":\"translate_max\",\"shifts\":[0,1]},{\"type\":\"identity\"}]",
            "f",
        )
        .unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam.ops()[0].label(), "translate_max{0,1}");

        let err = parse_family_str(
            "[{\"type\":\"weighted_shift_sum\",\"terms\":[{\"shift\":0,\"weight\":0.8},{\"shift\":1,\"weight\":0.4}]}]",
            "f",
        )
        .unwrap_err();
        assert!(matches!(err, Error::ConstraintViolation { index: 0, .. }));
    }

    #[test]
    fn nested_family_descriptors() {
        let text = r#"[
            {"type": "compose", "ops": [
                {"type": "translate_max", "shifts": [0, 1]},
                {"type": "weighted_shift_sum", "terms": [
                    {"shift": 0, "weight": 0.5},
                    {"shift": 2, "weight": 0.5}
                ]}
            ]},
            {"type": "pointwise_max",
             "left": {"type": "identity"},
             "right": {"type": "grid_rotation", "s": 1}},
            {"type": "convex_combination", "parts": [
                {"op": {"type": "identity"}, "weight": 0.25},
                {"op": {"type": "translate_min", "shifts": [0, 1]}, "weight": 0.75}
            ]}
        ]"#;
        let fam = parse_family_str(text, "nested").unwrap();
        assert_eq!(fam.len(), 3);
    }

    #[test]
    fn malformed_family_json_is_a_parse_error() {
        assert!(matches!(
            parse_family_str("[{\"type\":\"unknown_op\"}]", "f"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_family_str("not json", "f"),
            Err(Error::Parse { .. })
        ));
    }
}
