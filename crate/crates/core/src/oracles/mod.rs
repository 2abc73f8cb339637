//! Oracle constructors. Each returns a circuit over query, answer and
//! ancilla wires together with the classical function it must compute.
//!
//! Wire layout: query wires first (index 0 least significant), then the
//! answer register, then ancillas.

mod bv;
mod catalog;
mod dj;
mod grover;
mod majority;
mod shor;
mod simon;

use thiserror::Error;

use crate::kernel::{Circuit, KernelError};

pub use bv::bv_oracle;
pub use catalog::{dj3_catalog, CatalogEntry};
pub use dj::{comparator_circuit, dj_decision_oracle, dj_promise_oracle};
pub use grover::grover_oracle;
pub use majority::{majority_oracle, MajorityVariant};
pub use shor::{shor15_multiplier, shor15_multiplier_with, MultiplierConstruction};
pub use simon::{simon_basis, simon_oracle, SimonVariant};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

/// Family tag and the parameters baked into the circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    BernsteinVazirani { s: u64 },
    DjPromise { b0: bool, b1: bool, perm: Vec<usize> },
    DjDecision { a: u64, perm: Vec<usize> },
    Dj3Catalog { function: u8 },
    Majority { variant: MajorityVariant },
    Grover { xstar: u64 },
    Simon { s: u64, b: bool, perm: Vec<usize>, basis: Vec<u64>, variant: SimonVariant },
    Shor15Mult { a: u64, power: u32, construction: MultiplierConstruction },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::BernsteinVazirani { .. } => "bv",
            Family::DjPromise { .. } => "dj-promise",
            Family::DjDecision { .. } => "dj-decision",
            Family::Dj3Catalog { .. } => "dj3-catalog",
            Family::Majority { .. } => "majority",
            Family::Grover { .. } => "grover",
            Family::Simon { .. } => "simon",
            Family::Shor15Mult { .. } => "shor15-multiplier",
        }
    }
}

/// A generated oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSpec {
    pub family: Family,
    pub circuit: Circuit,
    pub query: Vec<usize>,
    pub answer: Vec<usize>,
    pub ancillas: Vec<usize>,
}

impl OracleSpec {
    /// Query width.
    pub fn n(&self) -> usize {
        self.query.len()
    }

    pub fn width(&self) -> usize {
        self.circuit.width()
    }

    /// Expected number-state action: query value `x`, answer value `y` in,
    /// answer value out. `None` where the construction makes no promise
    /// (the zero-target Simon oracle with a nonzero answer).
    pub fn expected(&self, x: u64, y: u64) -> Option<u64> {
        let n = self.n();
        let bit = |v: u64, i: usize| (v >> i) & 1;
        match &self.family {
            Family::BernsteinVazirani { s } => Some(y ^ ((s & x).count_ones() as u64 & 1)),
            Family::DjPromise { b0, b1, perm } => {
                let f = (*b0 as u64 & bit(perm[x as usize] as u64, n - 1)) ^ *b1 as u64;
                Some(y ^ f)
            }
            Family::DjDecision { a, perm } => {
                let px = perm[x as usize] as u64;
                Some(y ^ ((px + a) >> n & 1))
            }
            Family::Dj3Catalog { function } => Some(y ^ ((*function as u64 >> x) & 1)),
            Family::Majority { .. } => Some(y ^ ((0b1110_1000u64 >> x) & 1)),
            Family::Grover { xstar } => Some(y ^ (x == *xstar) as u64),
            Family::Simon { s, b, perm, basis, variant } => {
                let f = simon::f_b(n, *s, *b, basis, x);
                match variant {
                    SimonVariant::ZeroTarget => (y == 0).then(|| perm[f as usize] as u64),
                    SimonVariant::XorTarget => Some(y ^ perm[f as usize] as u64),
                    SimonVariant::Deterministic => Some(perm[(y ^ f) as usize] as u64),
                }
            }
            Family::Shor15Mult { a, power, construction } => {
                let m = shor::factor(*a, *power);
                Some(if x & 1 == 1 { shor::multiply(*construction, m, y) } else { y })
            }
        }
    }

    /// Classical query: the function value on query `x` with a zero answer register.
    pub fn f(&self, x: u64) -> u64 {
        self.expected(x, 0).expect("zero answer is always defined")
    }

    /// Function string `f(2^n - 1) ... f(0)` for one-bit answers.
    pub fn function_string(&self) -> String {
        (0..1u64 << self.n()).rev().map(|x| if self.f(x) == 1 { '1' } else { '0' }).collect()
    }

    /// Computational action of the circuit on a query/answer pair, ancillas 0.
    /// Returns (query out, answer out, ancillas out).
    pub fn circuit_action(&self, x: u64, y: u64) -> (u64, u64, u64) {
        let mut input = 0u64;
        for (i, &w) in self.query.iter().enumerate() {
            input |= ((x >> i) & 1) << w;
        }
        for (i, &w) in self.answer.iter().enumerate() {
            input |= ((y >> i) & 1) << w;
        }
        let out = self.circuit.classical_action(input);
        let gather = |wires: &[usize]| {
            wires.iter().enumerate().fold(0u64, |acc, (i, &w)| acc | (((out >> w) & 1) << i))
        };
        (gather(&self.query), gather(&self.answer), gather(&self.ancillas))
    }
}

/// Place `c` (over `n` register wires plus its own ancillas) onto `register`
/// and `spare` wires of `target`.
pub(crate) fn embed(target: &mut Circuit, c: &Circuit, register: &[usize], spare: &[usize]) {
    let mut map: Vec<usize> = register.to_vec();
    map.extend_from_slice(&spare[..c.width() - register.len()]);
    target.append_mapped(c, &map).expect("embedded circuit fits");
}

pub(crate) fn check_perm(perm: &[usize], n: usize) -> Result<(), OracleError> {
    let w = crate::kernel::permutation_width(perm)?;
    if w != n {
        return Err(OracleError::Invalid(format!("permutation acts on {w} bits, expected {n}")));
    }
    Ok(())
}
