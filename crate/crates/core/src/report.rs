//! Uniform pass/fail records for every verified identity.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::exact::{format_rational, Rational};

/// Where a side of an identity came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Provenance {
    ClosedForm,
    MvEngine,
    HurwitzEngine,
    DirectSum,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Map<String, Value>,
    pub left: Value,
    pub right: Value,
    #[serde(rename = "leftProvenance")]
    pub left_provenance: Provenance,
    #[serde(rename = "rightProvenance")]
    pub right_provenance: Provenance,
    pub pass: bool,
    /// First counterexample, or the offending graded degree, on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Value>,
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>, left: Provenance, right: Provenance) -> Self {
        Self {
            identity: identity.into(),
            params: Map::new(),
            left: Value::Null,
            right: Value::Null,
            left_provenance: left,
            right_provenance: right,
            pass: false,
            failure: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn sides(mut self, left: impl Into<Value>, right: impl Into<Value>) -> Self {
        self.left = left.into();
        self.right = right.into();
        self
    }

    /// Compare two rationals exactly and record both.
    pub fn rationals(self, left: &Rational, right: &Rational) -> Self {
        let pass = left == right;
        let failure = (!pass).then(|| json!({"left": format_rational(left), "right": format_rational(right)}));
        self.sides(format_rational(left), format_rational(right)).outcome(pass, failure)
    }

    pub fn outcome(mut self, pass: bool, failure: Option<Value>) -> Self {
        self.pass = pass;
        self.failure = if pass { None } else { failure.or(Some(Value::Null)) };
        self
    }
}

/// Render rationals as a JSON array of `"num/den"` strings.
pub fn rational_array<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(qs.into_iter().map(|q| Value::String(format_rational(q))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn rational_comparison_records_failure() {
        let ok =
            IdentityReport::new("x", Provenance::ClosedForm, Provenance::DirectSum).rationals(&rat(1, 2), &rat(2, 4));
        assert!(ok.pass && ok.failure.is_none());
        let bad = IdentityReport::new("x", Provenance::ClosedForm, Provenance::DirectSum)
            .param("g", 2)
            .rationals(&rat(1, 2), &rat(1, 3));
        assert!(!bad.pass);
        let v = serde_json::to_value(&bad).unwrap();
        assert_eq!(v["failure"]["right"], "1/3");
        assert_eq!(v["leftProvenance"], "closedForm");
    }
}
