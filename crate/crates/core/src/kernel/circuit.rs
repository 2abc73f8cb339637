use super::bits::Bits;
use super::gate::{apply_prim, Gate, Prim};
use super::system::Register;
use super::KernelError;

/// Sequential list of gates over `width` wires.
///
/// Wires listed in `ancillas` must hold computational 0 on entry and are
/// returned to computational 0 on exit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Circuit {
    width: usize,
    ancillas: Vec<usize>,
    ops: Vec<Gate>,
}

/// Gate tallies; `not` counts single-system X gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct GateCounts {
    pub not: usize,
    pub cnot: usize,
    pub toffoli: usize,
    pub other: usize,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Circuit { width, ancillas: Vec::new(), ops: Vec::new() }
    }

    pub fn with_ancillas(width: usize, ancillas: Vec<usize>) -> Self {
        Circuit { width, ancillas, ops: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn ancillas(&self) -> &[usize] {
        &self.ancillas
    }

    pub fn ops(&self) -> &[Gate] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn set_ancillas(&mut self, ancillas: Vec<usize>) {
        self.ancillas = ancillas;
    }

    /// Append a gate after checking its wires.
    pub fn push(&mut self, gate: Gate) -> Result<&mut Self, KernelError> {
        gate.validate(self.width)?;
        self.ops.push(gate);
        Ok(self)
    }

    /// Append a gate known to be valid (builders inside the crate).
    pub(crate) fn add(&mut self, gate: Gate) -> &mut Self {
        debug_assert!(gate.validate(self.width).is_ok(), "invalid gate {gate:?}");
        self.ops.push(gate);
        self
    }

    /// Append, cancelling against the previous gate when the pair is an identity.
    pub(crate) fn add_cancelling(&mut self, gate: Gate) {
        if gate.is_involution() && self.ops.last() == Some(&gate) {
            self.ops.pop();
        } else {
            self.ops.push(gate);
        }
    }

    pub fn append(&mut self, other: &Circuit) -> Result<&mut Self, KernelError> {
        let map: Vec<usize> = (0..other.width).collect();
        self.append_mapped(other, &map)
    }

    /// Append `other` with its wire `i` placed on wire `map[i]`.
    pub fn append_mapped(&mut self, other: &Circuit, map: &[usize]) -> Result<&mut Self, KernelError> {
        if map.len() < other.width {
            return Err(KernelError::WireMap { expected: other.width, given: map.len() });
        }
        for g in &other.ops {
            let g = g.map_wires(&|w| map[w]);
            g.validate(self.width)?;
            self.ops.push(g);
        }
        Ok(self)
    }

    /// Reverse the gate list and invert every gate.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            width: self.width,
            ancillas: self.ancillas.clone(),
            ops: self.ops.iter().rev().map(Gate::inverse).collect(),
        }
    }

    /// Flattened fixed-arity form.
    pub fn prims(&self) -> Vec<(Prim, Option<usize>)> {
        let mut out = Vec::with_capacity(self.ops.len());
        for g in &self.ops {
            g.expand_into(&mut out);
        }
        out
    }

    pub fn counts(&self) -> GateCounts {
        let mut c = GateCounts::default();
        for g in &self.ops {
            match g {
                Gate::X(_) => c.not += 1,
                Gate::Cnot { .. } => c.cnot += 1,
                Gate::Toffoli { .. } => c.toffoli += 1,
                Gate::NToffoli { controls, .. } => match controls.len() {
                    1 => c.cnot += 1,
                    2 => c.toffoli += 1,
                    _ => c.other += 1,
                },
                _ => c.other += 1,
            }
        }
        c
    }

    /// Run on a register with no classical bits available.
    pub fn apply(&self, state: &mut Register) -> Result<(), KernelError> {
        if state.len() != self.width {
            return Err(KernelError::WidthMismatch { circuit: self.width, state: state.len() });
        }
        let mut x: Vec<bool> = state.systems.iter().map(|s| s.x).collect();
        let mut p: Vec<bool> = state.systems.iter().map(|s| s.p).collect();
        for (g, cond) in self.prims() {
            if let Some(b) = cond {
                return Err(KernelError::MissingClassicalBit(b));
            }
            apply_prim(g, &mut x, &mut p, true);
        }
        for (i, s) in state.systems.iter_mut().enumerate() {
            s.x = x[i];
            s.p = p[i];
        }
        Ok(())
    }

    /// Lane-parallel run over raw bit vectors (no classical conditions).
    pub fn apply_lanes<B: Bits>(&self, x: &mut [B], p: &mut [B]) {
        for (g, cond) in self.prims() {
            let en = if cond.is_some() { B::zero() } else { B::ones() };
            apply_prim(g, x, p, en);
        }
    }

    /// Number-state action: computational input `input`, all phases 0,
    /// classically controlled gates skipped. Meaningful for circuits built
    /// from X, CNOT, Toffoli, Fredkin, SWAP and n-Toffoli gates.
    pub fn classical_action(&self, input: u64) -> u64 {
        let mut x: Vec<bool> = (0..self.width).map(|i| (input >> i) & 1 == 1).collect();
        let mut p = vec![false; self.width];
        self.apply_lanes(&mut x, &mut p);
        x.iter().enumerate().fold(0, |acc, (i, b)| acc | ((*b as u64) << i))
    }

    /// Full phase-space action on a point label (base 4, wire 0 lowest).
    pub fn point_action(&self, label: u64) -> u64 {
        let mut r = Register::from_label(self.width, label);
        let mut x: Vec<bool> = r.systems.iter().map(|s| s.x).collect();
        let mut p: Vec<bool> = r.systems.iter().map(|s| s.p).collect();
        self.apply_lanes(&mut x, &mut p);
        for (i, s) in r.systems.iter_mut().enumerate() {
            s.x = x[i];
            s.p = p[i];
        }
        r.label()
    }
}

/// Circuit inversion as a free function.
pub fn invert(circuit: &Circuit) -> Circuit {
    circuit.inverse()
}
