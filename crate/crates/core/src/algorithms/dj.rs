use std::fmt;

use crate::engine::{exact_distribution, run, Distribution, Experiment, MeasurementSpec};
use crate::kernel::{Prep, RandomSource};
use crate::oracles::{Family, OracleSpec};

use super::AlgorithmError;

/// Verdict. Under the promise these read constant/balanced; for arbitrary
/// functions they read "not balanced"/"not constant".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DjValue {
    Constant,
    Balanced,
}

impl DjValue {
    pub fn decision_label(self) -> &'static str {
        match self {
            DjValue::Constant => "not balanced",
            DjValue::Balanced => "not constant",
        }
    }
}

impl fmt::Display for DjValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DjValue::Constant => "constant",
            DjValue::Balanced => "balanced",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjVerdict {
    pub value: DjValue,
    /// Query-register readout, wire 0 least significant.
    pub raw: u64,
    pub n: usize,
    pub queries: usize,
}

/// Query `(0,·)`, answer `(1,·)`, ancillas `(0,·)`; Hadamard query and
/// answer, one query, Hadamard the query, all-zero test on the query
/// register (outcome bit 0), then a computational readout (bits `1..=n`).
pub fn dj_experiment(oracle: &OracleSpec) -> Result<Experiment, AlgorithmError> {
    match oracle.family {
        Family::DjPromise { .. } | Family::DjDecision { .. } | Family::Dj3Catalog { .. } | Family::Majority { .. } => {}
        _ => return Err(AlgorithmError::WrongFamily(oracle.family.name())),
    }
    let q0 = oracle.query[0];
    let n = oracle.n();
    if oracle.query != (q0..q0 + n).collect::<Vec<_>>() {
        return Err(AlgorithmError::Invalid("query wires must be contiguous".into()));
    }
    let mut e = Experiment::new(oracle.width());
    e.prepare(oracle.answer[0], Prep::z(true));
    e.hadamard(oracle.query.iter().chain(&oracle.answer).copied());
    e.circuit(&oracle.circuit);
    e.hadamard(oracle.query.iter().copied());
    e.measure(MeasurementSpec::AllZeroTest(q0..q0 + n));
    e.measure_z(oracle.query.iter().copied());
    Ok(e)
}

fn verdict(bits: u64, n: usize) -> DjVerdict {
    let value = if bits & 1 == 1 { DjValue::Constant } else { DjValue::Balanced };
    DjVerdict { value, raw: bits >> 1, n, queries: 1 }
}

/// One run: exactly one oracle query.
pub fn deutsch_jozsa(oracle: &OracleSpec, rng: &mut RandomSource) -> Result<DjVerdict, AlgorithmError> {
    let e = dj_experiment(oracle)?;
    let (o, _) = run(&e, rng)?;
    Ok(verdict(o.bits, oracle.n()))
}

/// Exact distribution of the verdict: outcome 1 = constant, 0 = balanced.
pub fn dj_verdict_distribution(oracle: &OracleSpec) -> Result<Distribution, AlgorithmError> {
    let d = exact_distribution(&dj_experiment(oracle)?)?;
    Ok(d.map(1, |o| o & 1))
}
