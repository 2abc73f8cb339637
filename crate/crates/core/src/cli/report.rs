//! JSON report and distribution file formats.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::engine::{bitstring, parse_bitstring, Distribution};
use crate::stats::RealDistribution;

use super::CliError;

/// Round to 12 significant digits; serde_json then prints the shortest form.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[derive(Serialize, Default)]
pub struct Metrics {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sso: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy: Option<f64>,
}

/// Top-level `run` report. Field order is the serialized key order.
#[derive(Serialize)]
pub struct Report {
    pub algorithm: String,
    pub params: Map<String, Value>,
    pub mode: String,
    pub seed: u64,
    pub queries: usize,
    pub distribution: Map<String, Value>,
    /// Exact mode only: the same probabilities as reduced `num/den` strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distribution_rational: Option<Map<String, Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metrics: Option<Metrics>,
}

/// Outcome strings are MSB-first; wire 0 (or the first recorded bit) is the
/// rightmost character.
pub fn distribution_json(d: &Distribution) -> Map<String, Value> {
    d.counts().keys().map(|&k| (bitstring(k, d.outcome_bits()), Value::from(sig12(d.prob(k))))).collect()
}

pub fn rational_json(d: &Distribution) -> Map<String, Value> {
    d.iter().map(|(k, r)| (bitstring(k, d.outcome_bits()), Value::from(format!("{}/{}", r.numer(), r.denom())))).collect()
}

pub fn csv(d: &Distribution) -> String {
    let mut out = String::from("outcome,probability\n");
    for &k in d.counts().keys() {
        out.push_str(&format!("{},{}\n", bitstring(k, d.outcome_bits()), sig12(d.prob(k))));
    }
    out
}

pub fn to_pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Read a distribution file: either a report (its `distribution` field is
/// used) or a bare `{outcome: probability}` object.
pub fn parse_distribution(text: &str) -> Result<RealDistribution, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid JSON: {e}")))?;
    let obj = match v.get("distribution") {
        Some(d) => d,
        None => &v,
    };
    let obj = obj.as_object().ok_or_else(|| CliError::Config("distribution must be a JSON object".into()))?;
    let mut bits = None;
    let mut probs = BTreeMap::new();
    for (k, p) in obj {
        let (value, len) =
            parse_bitstring(k).ok_or_else(|| CliError::Config(format!("outcome {k:?} is not a bit string")))?;
        if *bits.get_or_insert(len) != len {
            return Err(CliError::Config("outcome strings differ in width".into()));
        }
        let p = p.as_f64().ok_or_else(|| CliError::Config(format!("probability of {k} is not a number")))?;
        if !(0.0..=1.0 + 1e-9).contains(&p) {
            return Err(CliError::Config(format!("probability of {k} is out of range")));
        }
        *probs.entry(value).or_insert(0.0) += p;
    }
    let bits = bits.ok_or_else(|| CliError::Config("empty distribution".into()))?;
    let total: f64 = probs.values().sum();
    if (total - 1.0).abs() > 1e-6 {
        return Err(CliError::Config(format!("probabilities sum to {total}")));
    }
    Ok(RealDistribution::new(bits, probs))
}
