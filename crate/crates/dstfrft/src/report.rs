//! Verification reports.

use dstfrft_core::{AxisGrid, Complex64, DirectionalGrid};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Config;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub identity: String,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub abs_err: f64,
    pub rel_err: f64,
    pub threshold: f64,
    pub pass: bool,
    pub config: Config,
    pub grid: Value,
    pub runtime_ms: f64,
    pub details: Value,
}

impl Report {
    /// Pass iff `rel_err <= threshold`; `runtime_ms` is filled in by the caller.
    pub fn new(identity: &str, lhs: Complex64, rhs: Complex64, threshold: f64, config: &Config, grid: Value) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = rhs.norm();
        let rel_err = if scale > 0.0 { abs_err / scale } else { abs_err };
        Self::with_errors(identity, lhs, rhs, abs_err, rel_err, threshold, config, grid)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn with_errors(
        identity: &str,
        lhs: Complex64,
        rhs: Complex64,
        abs_err: f64,
        rel_err: f64,
        threshold: f64,
        config: &Config,
        grid: Value,
    ) -> Self {
        Self {
            identity: identity.to_string(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            abs_err,
            rel_err,
            threshold,
            pass: rel_err <= threshold,
            config: config.clone(),
            grid,
            runtime_ms: 0.0,
            details: Value::Object(Default::default()),
        }
    }

    pub fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        if let Value::Object(map) = &mut self.details {
            map.insert(key.to_string(), serde_json::to_value(value).expect("serializable detail"));
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without its timing and thread count; identical runs
    /// produce identical canonical strings.
    pub fn canonical(&self) -> String {
        canonicalize(&serde_json::to_value(self).expect("report serializes"))
    }
}

/// Canonical string of a parsed report value (see [`Report::canonical`]).
pub fn canonicalize(report: &Value) -> String {
    let mut v = report.clone();
    if let Value::Object(map) = &mut v {
        map.remove("runtime_ms");
        if let Some(Value::Object(cfg)) = map.get_mut("config") {
            cfg.remove("threads");
        }
    }
    serde_json::to_string(&v).expect("value serializes")
}

pub fn axis_summary(a: &AxisGrid) -> Value {
    json!({ "count": a.count(), "origin": a.origin(), "spacing": a.spacing() })
}

pub fn field_summary(axes: &[AxisGrid]) -> Value {
    json!({ "x": axes.iter().map(axis_summary).collect::<Vec<_>>() })
}

pub fn directional_summary(x: &[AxisGrid], g: &DirectionalGrid) -> Value {
    json!({
        "x": x.iter().map(axis_summary).collect::<Vec<_>>(),
        "directions": g.direction_count(),
        "b": axis_summary(g.b_axis()),
        "a": g.a_axes().iter().map(axis_summary).collect::<Vec<_>>(),
    })
}
