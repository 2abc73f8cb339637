use crate::engine::{run, Experiment};
use crate::kernel::{Prep, RandomSource};
use crate::oracles::{Family, OracleSpec};

use super::AlgorithmError;

/// Query `(0,·)`, answer `(1,·)`, Hadamard all, one query, Hadamard the
/// query register, read it out.
pub fn bv_experiment(oracle: &OracleSpec) -> Result<Experiment, AlgorithmError> {
    if !matches!(oracle.family, Family::BernsteinVazirani { .. }) {
        return Err(AlgorithmError::WrongFamily(oracle.family.name()));
    }
    let mut e = Experiment::new(oracle.width());
    e.prepare(oracle.answer[0], Prep::z(true));
    e.hadamard(oracle.query.iter().chain(&oracle.answer).copied());
    e.circuit(&oracle.circuit);
    e.hadamard(oracle.query.iter().copied());
    e.measure_z(oracle.query.iter().copied());
    Ok(e)
}

/// Recover the secret with one query. The exact distribution is a point
/// mass, so any random source gives the same answer.
pub fn bernstein_vazirani(oracle: &OracleSpec, rng: &mut RandomSource) -> Result<u64, AlgorithmError> {
    let e = bv_experiment(oracle)?;
    Ok(run(&e, rng)?.0.bits)
}

