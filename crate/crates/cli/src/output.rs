use icosa_core::CMatrix;
use num_complex::Complex64;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// A float rounded to 12 significant digits, with `-0` folded to `0`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(x.to_string());
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    json!(if rounded == 0.0 { 0.0 } else { rounded })
}

/// Magnitudes below this print as zero in computed quantities (not in deviations).
pub const ZERO_SNAP: f64 = 1e-12;

/// A computed quantity: like [`num`], with round-off below [`ZERO_SNAP`] shown as `0`.
pub fn quantity(x: f64) -> Value {
    num(if x.abs() < ZERO_SNAP { 0.0 } else { x })
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| quantity(x)).collect())
}

pub fn complex(z: Complex64) -> Value {
    json!([quantity(z.re), quantity(z.im)])
}

pub fn matrix(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| complex(m[(i, j)])).collect()))
            .collect(),
    )
}

/// Text rendering of a computed quantity.
pub fn text(x: f64) -> String {
    match quantity(x) {
        Value::Number(n) => n.to_string(),
        other => other.as_str().unwrap_or_default().to_string(),
    }
}

#[derive(Debug, Default)]
pub struct Verification {
    tol: f64,
    checks: Vec<(String, f64, f64, bool)>,
}

impl Verification {
    pub fn new(tol: f64) -> Self {
        Verification { tol, checks: Vec::new() }
    }

    /// Passes when `value <= tol`.
    pub fn value(&mut self, name: impl Into<String>, value: f64) {
        let tol = self.tol;
        self.checks.push((name.into(), value, tol, value <= tol));
    }

    pub fn exact(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), if ok { 0.0 } else { 1.0 }, 0.0, ok));
    }

    pub fn push(&mut self, name: impl Into<String>, value: f64, tolerance: f64, passed: bool) {
        self.checks.push((name.into(), value, tolerance, passed));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.3)
    }

    fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|(name, value, tol, ok)| {
                json!({
                    "name": name,
                    "value": num(*value),
                    "tolerance": num(*tol),
                    "status": if *ok { "pass" } else { "fail" },
                })
            })
            .collect();
        json!({
            "passed": self.passed(),
            "failures": self.checks.iter().filter(|c| !c.3).count(),
            "checks": checks,
        })
    }
}

/// The JSON envelope every command prints.
pub fn document(command: &[String], payload: Value, verification: &Verification) -> Value {
    let mut doc = Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert("command".into(), json!(command));
    doc.insert("payload".into(), payload);
    doc.insert("verification".into(), verification.to_json());
    Value::Object(doc)
}
