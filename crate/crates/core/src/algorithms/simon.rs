use crate::engine::{run, Experiment};
use crate::kernel::RandomSource;
use crate::oracles::{Family, OracleSpec, SimonVariant};

use super::AlgorithmError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimonKind {
    TwoToOne(u64),
    OneToOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimonResult {
    pub kind: SimonKind,
    /// Oracle calls, including classical verification queries.
    pub queries: usize,
    pub subroutine_calls: usize,
    pub vectors: Vec<u64>,
}

fn simon_n(oracle: &OracleSpec) -> Result<usize, AlgorithmError> {
    match oracle.family {
        Family::Simon { .. } => Ok(oracle.n()),
        _ => Err(AlgorithmError::WrongFamily(oracle.family.name())),
    }
}

/// Query `(0,·)`, every other wire `(0,·)`; Hadamard the query, one query,
/// Hadamard the query, read it out.
pub fn simon_subroutine_experiment(oracle: &OracleSpec) -> Result<Experiment, AlgorithmError> {
    simon_n(oracle)?;
    let mut e = Experiment::new(oracle.width());
    e.hadamard(oracle.query.iter().copied());
    e.circuit(&oracle.circuit);
    e.hadamard(oracle.query.iter().copied());
    e.measure_z(oracle.query.iter().copied());
    Ok(e)
}

/// One subroutine call: a vector orthogonal to `s` when `f` is two-to-one.
pub fn simon_subroutine(oracle: &OracleSpec, rng: &mut RandomSource) -> Result<u64, AlgorithmError> {
    let e = simon_subroutine_experiment(oracle)?;
    Ok(run(&e, rng)?.0.bits)
}

/// Reduce `rows` to row echelon form in place, returning the pivot columns.
fn echelon(rows: &mut Vec<u64>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in (0..n).rev() {
        let Some(i) = (r..rows.len()).find(|&i| rows[i] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(r, i);
        for j in 0..rows.len() {
            if j != r && rows[j] >> col & 1 == 1 {
                rows[j] ^= rows[r];
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn gf2_rank(rows: &[u64], n: usize) -> usize {
    echelon(&mut rows.to_vec(), n).len()
}

/// Basis of `{v : r·v = 0 for all rows r}` over `n`-bit vectors, one vector
/// per free column in ascending column order.
pub fn gf2_nullspace(rows: &[u64], n: usize) -> Vec<u64> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m, n);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = 1u64 << free;
            for (row, &p) in m.iter().zip(&pivots) {
                if row >> free & 1 == 1 {
                    v |= 1 << p;
                }
            }
            v
        })
        .collect()
}

/// Collect subroutine outputs until they have rank `n - 1`, then test the
/// single nullspace candidate `s*` with two classical queries. Rank `n`
/// means one-to-one outright.
pub fn simon_solve(
    oracle: &OracleSpec,
    rng: &mut RandomSource,
    max_queries: usize,
) -> Result<SimonResult, AlgorithmError> {
    let n = simon_n(oracle)?;
    let e = simon_subroutine_experiment(oracle)?;
    let mut vectors = Vec::new();
    let mut rank = 0;
    while rank < n - 1 {
        if vectors.len() >= max_queries {
            return Err(AlgorithmError::BudgetExhausted(max_queries));
        }
        let v = run(&e, rng)?.0.bits;
        vectors.push(v);
        rank = gf2_rank(&vectors, n);
    }
    let calls = vectors.len();
    let null = gf2_nullspace(&vectors, n);
    let kind = match null.as_slice() {
        [] => SimonKind::OneToOne,
        [s] => {
            let f = |x: u64| oracle.circuit_action(x, 0).1;
            if f(0) == f(*s) {
                SimonKind::TwoToOne(*s)
            } else {
                SimonKind::OneToOne
            }
        }
        _ => unreachable!("rank is at least n - 1"),
    };
    let verify = if null.is_empty() { 0 } else { 2 };
    Ok(SimonResult { kind, queries: calls + verify, subroutine_calls: calls, vectors })
}

/// Exact variant: `n` queries with the answer register prepared at `δ_k`
/// and Hadamard-transformed, so query `k` returns `v^(k)` (or `b̄ v^(n-1)`).
/// The outputs do not depend on the random draws.
pub fn simon_deterministic(oracle: &OracleSpec) -> Result<SimonResult, AlgorithmError> {
    let n = simon_n(oracle)?;
    if !matches!(oracle.family, Family::Simon { variant: SimonVariant::Deterministic, .. }) {
        return Err(AlgorithmError::Invalid("needs the deterministic oracle layout".into()));
    }
    let mut vectors = Vec::with_capacity(n);
    for k in 0..n {
        let e = simon_deterministic_experiment(oracle, k);
        let mut rng = RandomSource::new(0, k as u64);
        vectors.push(run(&e, &mut rng)?.0.bits);
    }
    let null = gf2_nullspace(&vectors, n);
    let kind = match null.as_slice() {
        [] => SimonKind::OneToOne,
        [s] => SimonKind::TwoToOne(*s),
        _ => return Err(AlgorithmError::Invalid("outputs have rank below n - 1".into())),
    };
    Ok(SimonResult { kind, queries: n, subroutine_calls: n, vectors })
}

/// Query `k` of the deterministic variant: answer register at `δ_k`.
pub fn simon_deterministic_experiment(oracle: &OracleSpec, k: usize) -> Experiment {
    let mut e = Experiment::new(oracle.width());
    e.prepare_value(&oracle.answer, 1 << k);
    e.hadamard(oracle.query.iter().chain(&oracle.answer).copied());
    e.circuit(&oracle.circuit);
    e.hadamard(oracle.query.iter().copied());
    e.measure_z(oracle.query.iter().copied());
    e
}
