//! Machine-readable check results.

use serde::Serialize;
use serde_json::{json, Value};

use crate::free::{FreeElement, FreeTensor};
use crate::laurent::LaurentPolynomial;
use crate::operator::OperatorElement;
use crate::scalar::{Coefficient, GaussianRational};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub claim: String,
    pub parameters: Value,
    pub computed: Value,
    pub expected: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    pub fn new(claim: impl Into<String>, pass: bool) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            claim: claim.into(),
            parameters: Value::Null,
            computed: Value::Null,
            expected: Value::Null,
            tolerance: None,
            pass,
            witness: None,
            note: None,
        }
    }

    pub fn parameters(mut self, v: Value) -> Self {
        self.parameters = v;
        self
    }

    pub fn computed(mut self, v: Value) -> Self {
        self.computed = v;
        self
    }

    pub fn expected(mut self, v: Value) -> Self {
        self.expected = v;
        self
    }

    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }

    pub fn witness(mut self, v: Value) -> Self {
        self.witness = Some(v);
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.note = Some(text.into());
        self
    }

    /// `PASS claim` or `FAIL claim`, for terminal summaries.
    pub fn line(&self) -> String {
        format!("{} {}", if self.pass { "PASS" } else { "FAIL" }, self.claim)
    }
}

pub fn scalar_json(c: &GaussianRational) -> Value {
    json!(c.to_string())
}

/// Components sorted by index; each weight as exceptional pairs, tail and
/// threshold.
pub fn operator_json<K: Coefficient + std::fmt::Display>(a: &OperatorElement<K>) -> Value {
    Value::Array(
        a.components()
            .map(|(c, w)| {
                let exceptional: Vec<Value> = w
                    .exceptional()
                    .iter()
                    .map(|(d, v)| json!([d, v.to_string()]))
                    .collect();
                json!({
                    "index": c,
                    "exceptional": exceptional,
                    "tail": w.tail().to_string(),
                    "threshold": w.threshold(),
                })
            })
            .collect(),
    )
}

pub fn free_json(x: &FreeElement) -> Value {
    Value::Array(
        x.terms()
            .map(|(v, c)| json!({"monomial": v.to_string(), "coefficient": c.to_string()}))
            .collect(),
    )
}

pub fn tensor_json(t: &FreeTensor) -> Value {
    Value::Array(
        t.terms()
            .map(|(v, w, c)| json!({"left": v.to_string(), "right": w.to_string(), "coefficient": c.to_string()}))
            .collect(),
    )
}

pub fn laurent_json(f: &LaurentPolynomial) -> Value {
    Value::Array(
        f.terms()
            .map(|(c, v)| json!({"exponent": c, "coefficient": v.to_string()}))
            .collect(),
    )
}
