//! Elementary systems, the QSL gate maps, circuits and permutation synthesis.

mod bits;
mod circuit;
mod gate;
mod random;
mod synth;
mod system;

use thiserror::Error;

pub use bits::{Bits, Lanes, LANE_WORDS};
pub use circuit::{invert, Circuit, GateCounts};
pub use gate::{apply, apply_prim, apply_with, Control, Gate, Prim};
pub use random::RandomSource;
pub use synth::{permutation_needs_ancilla, permutation_width, synthesize_permutation};
pub use system::{prepare, Basis, ElementarySystem, Prep, Register};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("wire {wire} out of range for width {width}")]
    WireOutOfRange { wire: usize, width: usize },
    #[error("wire {0} used twice in one gate")]
    DuplicateWire(usize),
    #[error("n-Toffoli needs at least one control")]
    NoControls,
    #[error("n-Toffoli needs {needed} ancillas, {given} given")]
    MissingAncillas { needed: usize, given: usize },
    #[error("ancilla wire {0} does not hold computational 0")]
    AncillaNotClean(usize),
    #[error("classical bit {0} is not available")]
    MissingClassicalBit(usize),
    #[error("classically controlled gates cannot be nested")]
    NestedClassical,
    #[error("circuit width {circuit} does not match state width {state}")]
    WidthMismatch { circuit: usize, state: usize },
    #[error("wire map covers {given} wires, circuit has {expected}")]
    WireMap { expected: usize, given: usize },
    #[error("not a bijection: {0}")]
    NotABijection(String),
}

/// Apply an n-controlled Toffoli to `state`, using `ancillas` (which must all
/// hold computational 0) as the ladder's scratch wires.
pub fn n_toffoli(
    controls: &[usize],
    inverted: &[bool],
    target: usize,
    state: &mut Register,
    ancillas: &mut Register,
) -> Result<(), KernelError> {
    let needed = controls.len().saturating_sub(2);
    if ancillas.len() < needed {
        return Err(KernelError::MissingAncillas { needed, given: ancillas.len() });
    }
    if let Some(i) = ancillas.systems.iter().position(|s| s.x) {
        return Err(KernelError::AncillaNotClean(state.len() + i));
    }
    let n = state.len();
    let ctl: Vec<Control> = controls
        .iter()
        .enumerate()
        .map(|(i, &w)| Control::new(w, inverted.get(i).copied().unwrap_or(false)))
        .collect();
    let gate = Gate::n_toffoli(ctl, target, (n..n + ancillas.len()).collect());
    let mut all = state.compose(ancillas);
    apply(&gate, &mut all)?;
    state.systems.copy_from_slice(&all.systems[..n]);
    ancillas.systems.copy_from_slice(&all.systems[n..]);
    Ok(())
}
