use crate::engine::{run, Experiment};
use crate::kernel::{Control, Gate, Prep, RandomSource};
use crate::oracles::{Family, OracleSpec};

use super::AlgorithmError;

/// One round: query `(0,·)`, answer `(1,·)`; Hadamard both, one query,
/// then `H^n X^n CZ_n X^n H^n` on the query register and a readout.
/// The n-controlled Z is a Hadamard-conjugated n-Toffoli onto the top query wire.
pub fn grover_round_experiment(oracle: &OracleSpec) -> Result<Experiment, AlgorithmError> {
    if !matches!(oracle.family, Family::Grover { .. }) {
        return Err(AlgorithmError::WrongFamily(oracle.family.name()));
    }
    let n = oracle.n();
    let q = &oracle.query;
    let mut e = Experiment::new(oracle.width());
    e.prepare(oracle.answer[0], Prep::z(true));
    e.hadamard(q.iter().chain(&oracle.answer).copied());
    e.circuit(&oracle.circuit);
    e.hadamard(q.iter().copied());
    e.gates(q.iter().map(|&w| Gate::X(w)));
    let top = q[n - 1];
    let controls: Vec<Control> = q[..n - 1].iter().map(|&w| Control::on(w)).collect();
    let ancillas = oracle.ancillas[..(n - 1).saturating_sub(2)].to_vec();
    e.gate(Gate::H(top));
    e.gate(Gate::n_toffoli(controls, top, ancillas));
    e.gate(Gate::H(top));
    e.gates(q.iter().map(|&w| Gate::X(w)));
    e.hadamard(q.iter().copied());
    e.measure_z(q.iter().copied());
    Ok(e)
}

/// `⌈κ 2^n / (n + 2)⌉` rounds with `κ = 1`, failure probability below `e^{-1}`.
pub fn default_round_budget(n: usize) -> usize {
    ((1u64 << n) as f64 / (n + 2) as f64).ceil() as usize
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroverResult {
    pub found: Option<u64>,
    pub rounds: usize,
    /// Quantum-style queries plus classical verification queries.
    pub queries: usize,
}

/// Repeat single rounds, checking each candidate with one classical
/// evaluation of the oracle circuit. Round `k` uses stream `k` of `seed`.
pub fn grover_search(oracle: &OracleSpec, budget: usize, seed: u64) -> Result<GroverResult, AlgorithmError> {
    if budget == 0 {
        return Err(AlgorithmError::Invalid("round budget must be at least 1".into()));
    }
    let e = grover_round_experiment(oracle)?;
    let mut queries = 0;
    for round in 0..budget {
        let mut rng = RandomSource::new(seed, round as u64);
        let (o, _) = run(&e, &mut rng)?;
        queries += 2;
        let (_, answer, _) = oracle.circuit_action(o.bits, 0);
        if answer == 1 {
            return Ok(GroverResult { found: Some(o.bits), rounds: round + 1, queries });
        }
    }
    Ok(GroverResult { found: None, rounds: budget, queries })
}
