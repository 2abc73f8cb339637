//! Algorithm drivers: circuits around an oracle, measurement, and the
//! classical postprocessing.

mod bv;
mod dj;
mod grover;
mod shor;
mod simon;

use thiserror::Error;

use crate::engine::EngineError;
use crate::kernel::KernelError;
use crate::oracles::OracleError;

pub use bv::{bernstein_vazirani, bv_experiment};
pub use dj::{deutsch_jozsa, dj_experiment, dj_verdict_distribution, DjValue, DjVerdict};
pub use grover::{default_round_budget, grover_round_experiment, grover_search, GroverResult};
pub use shor::{
    continued_fraction_r, multiplicative_order, shor15_experiment, shor15_experiment_with, shor_factor15,
    shor_factor15_with, ShorOutcome, SHOR_MAX_SAMPLES,
};
pub use simon::{
    gf2_nullspace, gf2_rank, simon_deterministic, simon_deterministic_experiment, simon_solve, simon_subroutine, simon_subroutine_experiment,
    SimonKind, SimonResult,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgorithmError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("oracle family {0} is not accepted here")]
    WrongFamily(&'static str),
    #[error("query budget of {0} exhausted")]
    BudgetExhausted(usize),
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

impl From<KernelError> for AlgorithmError {
    fn from(e: KernelError) -> Self {
        AlgorithmError::Engine(e.into())
    }
}
