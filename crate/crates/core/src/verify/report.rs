use num_bigint::BigInt;
use serde::ser::Serializer;
use serde::Serialize;
use serde_json::{Map, Number, Value};
use std::str::FromStr;

/// Tolerance a check was evaluated under.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    Exact,
    Absolute(f64),
}

impl Serialize for Tolerance {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Tolerance::Exact => serializer.serialize_str("exact"),
            Tolerance::Absolute(t) => float_value(*t).serialize(serializer),
        }
    }
}

/// Pass/fail record for a single identity, theorem or conjecture check.
///
/// `asserted == false` marks a report that is informational only (an open
/// conjecture item, or a theorem evaluated outside its hypotheses); such
/// reports never count as failures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub subject: Map<String, Value>,
    pub passed: bool,
    pub asserted: bool,
    pub witnesses: Map<String, Value>,
    pub tolerance_used: Tolerance,
}

impl VerificationReport {
    pub fn new(check_name: impl Into<String>, tolerance: Tolerance) -> Self {
        Self {
            check_name: check_name.into(),
            subject: Map::new(),
            passed: false,
            asserted: true,
            witnesses: Map::new(),
            tolerance_used: tolerance,
        }
    }

    pub fn subject(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.subject.insert(key.to_owned(), value.into());
        self
    }

    pub fn witness(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.witnesses.insert(key.to_owned(), value.into());
        self
    }

    pub fn push_witness(&mut self, key: &str, value: impl Into<Value>) {
        self.witnesses.insert(key.to_owned(), value.into());
    }

    pub fn informational(mut self) -> Self {
        self.asserted = false;
        self
    }

    /// Seals the verdict. A failing report always carries at least one witness.
    pub fn finish(mut self, passed: bool) -> Self {
        self.passed = passed;
        if !passed && self.witnesses.is_empty() {
            self.witnesses
                .insert("note".into(), Value::from("check failed without detail"));
        }
        self
    }

    /// True unless this is an asserted check that failed.
    pub fn ok(&self) -> bool {
        self.passed || !self.asserted
    }
}

/// JSON number printed with 17 significant digits; non-finite values become `null`.
pub fn float_value(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Number::from_str(&format!("{x:.16e}"))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn bigint_value(x: &BigInt) -> Value {
    Value::String(x.to_string())
}
