//! The on-disk operator format: JSON with 1-based indices and exact string
//! rationals. Float mode accepts decimals and snaps them onto rationals.

use bernstein_core::algebra::pairs;
use bernstein_core::rational::{format_rational, parse_rational, rational_from_f64};
use bernstein_core::{InheritanceTensor, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

/// Relative tolerance used when snapping float coefficients.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scalar {
    Rational,
    Float,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coefficient {
    pub i: usize,
    pub k: usize,
    pub j: usize,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDocument {
    pub n: usize,
    pub scalar: Scalar,
    pub coefficients: Vec<Coefficient>,
}

impl OperatorDocument {
    /// Exact document listing the nonzero coefficients in `(i, k, j)` order.
    pub fn from_tensor(a: &InheritanceTensor) -> Self {
        let n = a.dim();
        let coefficients = pairs(n)
            .flat_map(|(i, k)| {
                a.row(i, k).iter().map(move |(j, v)| Coefficient {
                    i: i + 1,
                    k: k + 1,
                    j: j + 1,
                    value: Value::String(format_rational(v)),
                })
            })
            .collect();
        OperatorDocument {
            n,
            scalar: Scalar::Rational,
            coefficients,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
    }

    fn value(&self, c: &Coefficient) -> Result<Rational, CliError> {
        let at = || format!("coefficient ({}, {}) -> {}", c.i, c.k, c.j);
        match (self.scalar, &c.value) {
            (Scalar::Rational, Value::String(s)) => parse_rational(s)
                .ok_or_else(|| CliError::Schema(format!("{}: cannot parse {s:?}", at()))),
            (Scalar::Rational, other) => Err(CliError::Schema(format!(
                "{}: rational values must be strings, found {other}",
                at()
            ))),
            (Scalar::Float, v) => {
                let x = match v {
                    Value::Number(x) => x.as_f64(),
                    Value::String(s) => s.trim().parse::<f64>().ok(),
                    _ => None,
                }
                .ok_or_else(|| CliError::Schema(format!("{}: not a number: {v}", at())))?;
                rational_from_f64(x, FLOAT_TOLERANCE)
                    .ok_or_else(|| CliError::Schema(format!("{}: not finite: {v}", at())))
            }
        }
    }

    /// Builds and validates the tensor. Missing entries are zero.
    pub fn to_tensor(&self) -> Result<InheritanceTensor, CliError> {
        let mut b = InheritanceTensor::builder(self.n)?;
        for c in &self.coefficients {
            for (name, idx) in [("i", c.i), ("k", c.k), ("j", c.j)] {
                if idx == 0 || idx > self.n {
                    return Err(CliError::Schema(format!(
                        "{name} = {idx} is outside 1..={}",
                        self.n
                    )));
                }
            }
            if c.i > c.k {
                return Err(CliError::Schema(format!(
                    "coefficient ({}, {}) -> {} must have i <= k",
                    c.i, c.k, c.j
                )));
            }
            b.insert(c.i - 1, c.k - 1, c.j - 1, self.value(c)?)?;
        }
        Ok(b.build()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bernstein_core::families;

    #[test]
    fn mendel_round_trips_through_text() {
        let doc = OperatorDocument::from_tensor(&families::mendel());
        let text = crate::commands::to_json(&doc);
        let back = OperatorDocument::parse(&text).unwrap();
        assert_eq!(crate::commands::to_json(&back), text);
        assert_eq!(back.to_tensor().unwrap(), families::mendel());
        assert_eq!(doc.coefficients[0].i, 1);
    }

    #[test]
    fn float_values_snap_to_rationals() {
        let text = r#"{"n": 1, "scalar": "float", "coefficients": [{"i": 1, "k": 1, "j": 1, "value": 1.0}]}"#;
        let a = OperatorDocument::parse(text).unwrap().to_tensor().unwrap();
        assert_eq!(a, families::unit(1).unwrap());
    }

    #[test]
    fn schema_violations() {
        let bad = |text: &str| {
            OperatorDocument::parse(text)
                .and_then(|d| d.to_tensor())
                .unwrap_err()
        };
        assert!(matches!(bad(r#"{"n": 1}"#), CliError::Schema(_)));
        assert!(matches!(
            bad(
                r#"{"n": 2, "scalar": "rational", "coefficients": [{"i": 2, "k": 1, "j": 1, "value": "1"}]}"#
            ),
            CliError::Schema(_)
        ));
        assert!(matches!(
            bad(
                r#"{"n": 1, "scalar": "rational", "coefficients": [{"i": 1, "k": 1, "j": 1, "value": 1}]}"#
            ),
            CliError::Schema(_)
        ));
        assert!(matches!(
            bad(
                r#"{"n": 1, "scalar": "rational", "coefficients": [{"i": 1, "k": 1, "j": 1, "value": "1/2"}]}"#
            ),
            CliError::Stochastic(_)
        ));
    }
}
