//! Circuit execution, measurement, sampling and exact enumeration.
//!
//! Executions are bit-sliced: one pass over a compiled program advances up to
//! 1024 lanes. In exact mode lane `k` receives assignment `k` of the free
//! random bits; in sampling mode lane `t` is trial `t` with its own
//! [`RandomSource`] stream.

mod distribution;
mod experiment;
mod measure;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::kernel::{Bits, ElementarySystem, KernelError, Lanes, RandomSource, Register};

pub use distribution::{bitstring, parse_bitstring, Distribution, Outcome};
pub use experiment::{Experiment, Step};
pub use measure::MeasurementSpec;

/// Default ceiling on the number of enumerated random bits.
pub const DEFAULT_EXACT_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("classical bit {0} is read before it is recorded")]
    ClassicalBitNotRecorded(usize),
    #[error("measurement addresses no wires")]
    EmptyMeasurement,
    #[error("{0} outcome bits exceed the 64-bit record")]
    TooManyOutcomeBits(usize),
    #[error("exact enumeration needs {budget} random bits, cap is {cap}")]
    ExactIntractable { budget: usize, cap: usize },
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("expected {expected} random bits, got {given}")]
    DrawCount { expected: usize, given: usize },
}

/// Register contents plus the recorded classical bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WorldState {
    pub register: Register,
    pub classical: Vec<bool>,
}

fn to_register(x: &[bool], p: &[bool]) -> Register {
    Register::new(x.iter().zip(p).map(|(x, p)| ElementarySystem::new(*x, *p)).collect())
}

fn outcome_from(out: &[bool]) -> Outcome {
    let bits = out.iter().enumerate().fold(0u64, |a, (k, b)| a | ((*b as u64) << k));
    Outcome::new(bits, out.len())
}

/// Run once with an explicit assignment of every random draw, in slot order:
/// preparation bits wire by wire, then measurement bits in program order.
pub fn run_with_draws(e: &Experiment, draws: &[bool]) -> Result<(Outcome, WorldState), EngineError> {
    let prog = e.compile()?;
    if draws.len() != prog.slots {
        return Err(EngineError::DrawCount { expected: prog.slots, given: draws.len() });
    }
    let (mut x, mut p, mut out) = (Vec::new(), Vec::new(), Vec::new());
    prog.exec::<bool>(draws, &mut x, &mut p, &mut out);
    Ok((outcome_from(&out), WorldState { register: to_register(&x, &p), classical: out }))
}

/// Run once, drawing every random bit from `rng`.
pub fn run(e: &Experiment, rng: &mut RandomSource) -> Result<(Outcome, WorldState), EngineError> {
    let draws = rng.bits(e.budget());
    run_with_draws(e, &draws)
}

/// Exact outcome distribution with the default cap.
pub fn exact_distribution(e: &Experiment) -> Result<Distribution, EngineError> {
    exact_distribution_with_cap(e, DEFAULT_EXACT_CAP)
}

/// Enumerate every assignment of the draws that can reach an outcome. Draws
/// that no later instruction can observe are held at 0; averaging over them
/// would only scale every count by the same power of two.
pub fn exact_distribution_with_cap(e: &Experiment, cap: usize) -> Result<Distribution, EngineError> {
    let prog = e.compile()?;
    let budget = prog.live_slots;
    if budget > cap || budget >= 63 {
        return Err(EngineError::ExactIntractable { budget, cap });
    }
    let total = 1u64 << budget;
    let mut acc = Accumulator::new(prog.outcome_bits);
    let (mut x, mut p, mut out) = (Vec::new(), Vec::new(), Vec::new());
    let mut draws = vec![Lanes::zero(); prog.slots];
    let mut base = 0u64;
    while base < total {
        for (s, l) in prog.live.iter().enumerate() {
            draws[s] = match l {
                Some(k) => Lanes::counter_pattern(*k as usize, base),
                None => Lanes::zero(),
            };
        }
        prog.exec::<Lanes>(&draws, &mut x, &mut p, &mut out);
        let valid = (total - base).min(Lanes::LANES as u64) as usize;
        acc.add_lanes(&out, valid);
        base += Lanes::LANES as u64;
    }
    Ok(acc.finish(true))
}

/// Monte-Carlo estimate: trial `t` draws from `RandomSource::new(seed, t)`.
pub fn sample(e: &Experiment, trials: u64, seed: u64) -> Result<Distribution, EngineError> {
    if trials == 0 {
        return Err(EngineError::NoTrials);
    }
    let prog = e.compile()?;
    let mut acc = Accumulator::new(prog.outcome_bits);
    let (mut x, mut p, mut out) = (Vec::new(), Vec::new(), Vec::new());
    let mut per_trial: Vec<Vec<bool>> = Vec::with_capacity(Lanes::LANES);
    let mut draws = vec![Lanes::zero(); prog.slots];
    let mut base = 0u64;
    while base < trials {
        let valid = (trials - base).min(Lanes::LANES as u64) as usize;
        per_trial.clear();
        for t in 0..valid {
            per_trial.push(RandomSource::new(seed, base + t as u64).bits(prog.slots));
        }
        for (s, d) in draws.iter_mut().enumerate() {
            *d = Lanes::from_lanes(|l| l < valid && per_trial[l][s]);
        }
        prog.exec::<Lanes>(&draws, &mut x, &mut p, &mut out);
        acc.add_lanes(&out, valid);
        base += Lanes::LANES as u64;
    }
    Ok(acc.finish(false))
}

/// Visit every assignment of all draws (live or not) with its outcome and
/// final state. Intended for small experiments.
pub fn for_each_branch(
    e: &Experiment,
    cap: usize,
    mut f: impl FnMut(&Outcome, &WorldState),
) -> Result<u64, EngineError> {
    let prog = e.compile()?;
    if prog.slots > cap || prog.slots >= 63 {
        return Err(EngineError::ExactIntractable { budget: prog.slots, cap });
    }
    let (mut x, mut p, mut out) = (Vec::new(), Vec::new(), Vec::new());
    let total = 1u64 << prog.slots;
    let mut draws = vec![false; prog.slots];
    for a in 0..total {
        for (s, d) in draws.iter_mut().enumerate() {
            *d = (a >> s) & 1 == 1;
        }
        prog.exec::<bool>(&draws, &mut x, &mut p, &mut out);
        let ws = WorldState { register: to_register(&x, &p), classical: out.clone() };
        f(&outcome_from(&out), &ws);
    }
    Ok(total)
}

/// Exact distribution of `key(outcome, final state)` over every branch.
pub fn exact_joint(
    e: &Experiment,
    key_bits: usize,
    key: impl Fn(&Outcome, &WorldState) -> u64,
) -> Result<Distribution, EngineError> {
    let mut counts = BTreeMap::new();
    for_each_branch(e, DEFAULT_EXACT_CAP, |o, s| *counts.entry(key(o, s)).or_insert(0u64) += 1)?;
    Ok(Distribution::from_counts(key_bits, counts, true))
}

/// Exact distribution of the final register's point label (two bits per
/// system, wire 0 lowest: `label = Σ (2x_i + p_i) 4^i`).
pub fn state_distribution(e: &Experiment) -> Result<Distribution, EngineError> {
    exact_joint(e, 2 * e.width(), |_, s| s.register.label())
}

struct Accumulator {
    bits: usize,
    dense: Vec<u64>,
    sparse: BTreeMap<u64, u64>,
}

impl Accumulator {
    const DENSE_LIMIT: usize = 16;

    fn new(bits: usize) -> Self {
        let dense = if bits <= Self::DENSE_LIMIT { vec![0; 1 << bits] } else { Vec::new() };
        Accumulator { bits, dense, sparse: BTreeMap::new() }
    }

    fn add_lanes<B: Bits>(&mut self, out: &[B], valid: usize) {
        for lane in 0..valid {
            let mut key = 0u64;
            for (k, w) in out.iter().enumerate() {
                key |= (w.lane(lane) as u64) << k;
            }
            if self.bits <= Self::DENSE_LIMIT {
                self.dense[key as usize] += 1;
            } else {
                *self.sparse.entry(key).or_insert(0) += 1;
            }
        }
    }

    fn finish(self, exact: bool) -> Distribution {
        let counts = if self.bits <= Self::DENSE_LIMIT {
            self.dense.iter().enumerate().map(|(k, c)| (k as u64, *c)).collect()
        } else {
            self.sparse
        };
        Distribution::from_counts(self.bits, counts, exact)
    }
}
