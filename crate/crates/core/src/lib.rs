//! Quantum Simulation Logic (QSL).
//!
//! Every simulated qubit is a pair of classical bits: a computational bit `x`
//! and a phase bit `p`. Gates are bijections on these pairs, and measurements
//! read one bit while re-randomizing its partner. The crate runs circuits
//! either by Monte-Carlo sampling or by exact enumeration of every free random
//! bit, which yields dyadic rational output distributions.
//!
//! Wire 0 is the least significant system in every register.

pub mod algorithms;
pub mod cli;
pub mod engine;
pub mod kernel;
pub mod oracles;
pub mod protocols;
pub mod refsim;
pub mod stats;

pub use engine::{Distribution, Experiment, MeasurementSpec, Outcome};
pub use kernel::{Circuit, Control, ElementarySystem, Gate, Prep, RandomSource, Register};
