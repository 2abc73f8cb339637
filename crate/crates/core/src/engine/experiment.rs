use crate::kernel::{Basis, Circuit, Gate, KernelError, Prep};

use super::measure::MeasurementSpec;
use super::EngineError;

/// One step of an experiment body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Gate(Gate),
    Measure(MeasurementSpec),
}

/// A prepared register, a gate/measurement program over it, and the outcome
/// record produced by the measurements in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Experiment {
    width: usize,
    preps: Vec<Prep>,
    steps: Vec<Step>,
    outcome_bits: usize,
}

impl Experiment {
    /// Every wire starts as the Z eigenstate `(0, R)`.
    pub fn new(width: usize) -> Self {
        Experiment { width, preps: vec![Prep::z(false); width], steps: Vec::new(), outcome_bits: 0 }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn preps(&self) -> &[Prep] {
        &self.preps
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn outcome_bits(&self) -> usize {
        self.outcome_bits
    }

    pub fn prepare(&mut self, wire: usize, prep: Prep) -> &mut Self {
        self.preps[wire] = prep;
        self
    }

    pub fn prepare_all(&mut self, wires: impl IntoIterator<Item = usize>, prep: Prep) -> &mut Self {
        for w in wires {
            self.preps[w] = prep;
        }
        self
    }

    /// Prepare `wires` in the Z eigenstates spelling `value` (bit i on the i-th wire).
    pub fn prepare_value(&mut self, wires: &[usize], value: u64) -> &mut Self {
        for (i, &w) in wires.iter().enumerate() {
            self.preps[w] = Prep::z((value >> i) & 1 == 1);
        }
        self
    }

    pub fn gate(&mut self, gate: Gate) -> &mut Self {
        self.steps.push(Step::Gate(gate));
        self
    }

    pub fn gates(&mut self, gates: impl IntoIterator<Item = Gate>) -> &mut Self {
        for g in gates {
            self.steps.push(Step::Gate(g));
        }
        self
    }

    /// Append a circuit acting on the first `circuit.width()` wires.
    pub fn circuit(&mut self, circuit: &Circuit) -> &mut Self {
        self.gates(circuit.ops().iter().cloned())
    }

    /// Append a circuit with its wire `i` placed on wire `map[i]`.
    pub fn circuit_mapped(&mut self, circuit: &Circuit, map: &[usize]) -> &mut Self {
        self.gates(circuit.ops().iter().map(|g| g.map_wires(&|w| map[w])))
    }

    /// Hadamard on each listed wire.
    pub fn hadamard(&mut self, wires: impl IntoIterator<Item = usize>) -> &mut Self {
        self.gates(wires.into_iter().map(Gate::H))
    }

    /// Record a measurement; returns the index of its first outcome bit.
    pub fn measure(&mut self, spec: MeasurementSpec) -> usize {
        let first = self.outcome_bits;
        self.outcome_bits += spec.outcome_bits();
        self.steps.push(Step::Measure(spec));
        first
    }

    /// Z-measure each wire in order; returns the first outcome bit index.
    pub fn measure_z(&mut self, wires: impl IntoIterator<Item = usize>) -> usize {
        let first = self.outcome_bits;
        for w in wires {
            self.measure(MeasurementSpec::Z(w));
        }
        first
    }

    /// Total random bits one execution consumes (preparation plus measurement).
    pub fn budget(&self) -> usize {
        self.preps.iter().map(|p| p.random_bits()).sum::<usize>()
            + self
                .steps
                .iter()
                .map(|s| match s {
                    Step::Measure(m) => m.random_bits(),
                    Step::Gate(_) => 0,
                })
                .sum::<usize>()
    }

    /// Random bits that can influence a measurement outcome; the size of the
    /// exact enumeration.
    pub fn exact_budget(&self) -> Result<usize, EngineError> {
        Ok(self.compile()?.live_slots)
    }

    pub(crate) fn compile(&self) -> Result<Program, EngineError> {
        Program::compile(self)
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Instr {
    Gate(crate::kernel::Prim, Option<u32>),
    Measure { spec: MeasurementSpec, out: u32, slot: u32 },
}

/// Flattened experiment with random-bit slots assigned statically.
#[derive(Clone, Debug)]
pub(crate) struct Program {
    pub preps: Vec<(Prep, u32)>,
    pub instrs: Vec<Instr>,
    pub outcome_bits: usize,
    pub slots: usize,
    /// For every slot, its index among live slots (exact enumeration) or None.
    pub live: Vec<Option<u32>>,
    pub live_slots: usize,
}

impl Program {
    fn compile(e: &Experiment) -> Result<Program, EngineError> {
        let width = e.width;
        let mut slot = 0u32;
        let mut preps = Vec::with_capacity(width);
        for p in &e.preps {
            preps.push((*p, slot));
            slot += p.random_bits() as u32;
        }
        let mut instrs = Vec::new();
        let mut recorded = 0usize;
        for step in &e.steps {
            match step {
                Step::Gate(g) => {
                    g.validate(width)?;
                    let mut prims = Vec::new();
                    g.expand_into(&mut prims);
                    for (pr, cond) in prims {
                        if let Some(b) = cond {
                            if b >= recorded {
                                return Err(EngineError::ClassicalBitNotRecorded(b));
                            }
                        }
                        instrs.push(Instr::Gate(pr, cond.map(|b| b as u32)));
                    }
                }
                Step::Measure(m) => {
                    let wires = m.wires();
                    for (i, &w) in wires.iter().enumerate() {
                        if w >= width {
                            return Err(KernelError::WireOutOfRange { wire: w, width }.into());
                        }
                        if wires[i + 1..].contains(&w) {
                            return Err(KernelError::DuplicateWire(w).into());
                        }
                    }
                    if wires.is_empty() {
                        return Err(EngineError::EmptyMeasurement);
                    }
                    instrs.push(Instr::Measure { spec: m.clone(), out: recorded as u32, slot });
                    recorded += m.outcome_bits();
                    slot += m.random_bits() as u32;
                }
            }
        }
        if recorded > 64 {
            return Err(EngineError::TooManyOutcomeBits(recorded));
        }
        let slots = slot as usize;

        // A draw matters only if the cell it wrote is read before being
        // overwritten. Backward pass over bit cells (2w: x, 2w+1: p); gates
        // count as reading every cell of their wires.
        let mut is_live = vec![false; slots];
        let mut read_later = vec![false; 2 * width];
        for ins in instrs.iter().rev() {
            match ins {
                Instr::Gate(g, _) => {
                    for w in g.wires() {
                        read_later[2 * w] = true;
                        read_later[2 * w + 1] = true;
                    }
                }
                Instr::Measure { spec, slot, .. } => {
                    let mut written = Vec::new();
                    for k in 0..spec.random_bits() {
                        let cells = spec.draw_cells(k);
                        is_live[*slot as usize + k] = cells.iter().any(|&c| read_later[c]);
                        written.extend(cells);
                    }
                    for c in written {
                        read_later[c] = false;
                    }
                    for c in spec.reads() {
                        read_later[c] = true;
                    }
                }
            }
        }
        for (w, (p, s)) in preps.iter().enumerate() {
            let cells: &[usize] = match p {
                Prep::Basis(Basis::Z, _) => &[1],
                Prep::Basis(Basis::X, _) => &[0],
                _ => &[0, 1],
            };
            let live = cells.iter().any(|c| read_later[2 * w + c]);
            for k in 0..p.random_bits() {
                is_live[*s as usize + k] = live;
            }
        }
        let mut live = Vec::with_capacity(slots);
        let mut n = 0u32;
        for l in is_live {
            if l {
                live.push(Some(n));
                n += 1;
            } else {
                live.push(None);
            }
        }
        Ok(Program {
            preps,
            instrs,
            outcome_bits: recorded,
            slots,
            live,
            live_slots: n as usize,
        })
    }

    /// Run all lanes. `draws[s]` holds slot `s` for every lane.
    pub fn exec<B: crate::kernel::Bits>(&self, draws: &[B], x: &mut Vec<B>, p: &mut Vec<B>, out: &mut Vec<B>) {
        x.clear();
        p.clear();
        out.clear();
        out.resize(self.outcome_bits, B::zero());
        let c = |v: bool| if v { B::ones() } else { B::zero() };
        for (prep, s) in &self.preps {
            let s = *s as usize;
            let (xi, pi) = match *prep {
                Prep::Basis(crate::kernel::Basis::Z, v) => (c(v), draws[s]),
                Prep::Basis(crate::kernel::Basis::X, v) => (draws[s], c(v)),
                Prep::Basis(crate::kernel::Basis::Y, v) => (draws[s], draws[s] ^ c(v)),
                Prep::Basis(crate::kernel::Basis::Mixed, _) => (draws[s], draws[s + 1]),
                Prep::Point(e) => (c(e.x), c(e.p)),
            };
            x.push(xi);
            p.push(pi);
        }
        for ins in &self.instrs {
            match ins {
                Instr::Gate(g, cond) => {
                    let en = match cond {
                        None => B::ones(),
                        Some(b) => out[*b as usize],
                    };
                    crate::kernel::apply_prim(*g, x, p, en);
                }
                Instr::Measure { spec, out: o, slot } => {
                    let s = *slot as usize;
                    let o = *o as usize;
                    let k = spec.outcome_bits();
                    spec.apply(x, p, &draws[s..s + spec.random_bits()], &mut out[o..o + k]);
                }
            }
        }
    }
}
