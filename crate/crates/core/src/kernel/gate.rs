use super::bits::Bits;
use super::system::Register;
use super::KernelError;

/// A control wire with its polarity. Inverted controls fire on `x = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Control {
    pub wire: usize,
    pub inverted: bool,
}

impl Control {
    pub const fn on(wire: usize) -> Self {
        Control { wire, inverted: false }
    }
    pub const fn off(wire: usize) -> Self {
        Control { wire, inverted: true }
    }
    pub const fn new(wire: usize, inverted: bool) -> Self {
        Control { wire, inverted }
    }
}

/// QSL gate set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    X(usize),
    Y(usize),
    Z(usize),
    H(usize),
    S(usize),
    Sinv(usize),
    Cnot { control: usize, target: usize },
    Cz(usize, usize),
    Swap(usize, usize),
    Toffoli { controls: [usize; 2], target: usize },
    Fredkin { control: usize, targets: [usize; 2] },
    /// Multi-controlled NOT built from a Toffoli ladder over clean ancillas.
    NToffoli { controls: Vec<Control>, target: usize, ancillas: Vec<usize> },
    /// Applied only when classical bit `bit` (a recorded measurement outcome) is 1.
    Classical { bit: usize, gate: Box<Gate> },
}

/// Fixed-arity gates the executor runs directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prim {
    X(u32),
    Y(u32),
    Z(u32),
    H(u32),
    S(u32),
    Sinv(u32),
    Cnot(u32, u32),
    Cz(u32, u32),
    Swap(u32, u32),
    Toffoli(u32, u32, u32),
    Fredkin(u32, u32, u32),
}

impl Gate {
    pub fn cnot(control: usize, target: usize) -> Gate {
        Gate::Cnot { control, target }
    }

    pub fn toffoli(c2: usize, c1: usize, target: usize) -> Gate {
        Gate::Toffoli { controls: [c2, c1], target }
    }

    pub fn fredkin(control: usize, a: usize, b: usize) -> Gate {
        Gate::Fredkin { control, targets: [a, b] }
    }

    pub fn n_toffoli(controls: Vec<Control>, target: usize, ancillas: Vec<usize>) -> Gate {
        Gate::NToffoli { controls, target, ancillas }
    }

    pub fn classical(bit: usize, gate: Gate) -> Gate {
        Gate::Classical { bit, gate: Box::new(gate) }
    }

    /// Every wire the gate touches, ancillas included.
    pub fn wires(&self) -> Vec<usize> {
        match self {
            Gate::X(t) | Gate::Y(t) | Gate::Z(t) | Gate::H(t) | Gate::S(t) | Gate::Sinv(t) => vec![*t],
            Gate::Cnot { control, target } => vec![*control, *target],
            Gate::Cz(a, b) | Gate::Swap(a, b) => vec![*a, *b],
            Gate::Toffoli { controls, target } => vec![controls[0], controls[1], *target],
            Gate::Fredkin { control, targets } => vec![*control, targets[0], targets[1]],
            Gate::NToffoli { controls, target, ancillas } => {
                let needed = controls.len().saturating_sub(2);
                let mut w: Vec<usize> = controls.iter().map(|c| c.wire).collect();
                w.push(*target);
                w.extend_from_slice(&ancillas[..needed.min(ancillas.len())]);
                w
            }
            Gate::Classical { gate, .. } => gate.wires(),
        }
    }

    pub fn validate(&self, width: usize) -> Result<(), KernelError> {
        let wires = self.wires();
        for &w in &wires {
            if w >= width {
                return Err(KernelError::WireOutOfRange { wire: w, width });
            }
        }
        for (i, a) in wires.iter().enumerate() {
            if wires[i + 1..].contains(a) {
                return Err(KernelError::DuplicateWire(*a));
            }
        }
        match self {
            Gate::NToffoli { controls, ancillas, .. } => {
                if controls.is_empty() {
                    return Err(KernelError::NoControls);
                }
                let needed = controls.len().saturating_sub(2);
                if ancillas.len() < needed {
                    return Err(KernelError::MissingAncillas { needed, given: ancillas.len() });
                }
                Ok(())
            }
            Gate::Classical { gate, .. } => {
                if matches!(**gate, Gate::Classical { .. }) {
                    return Err(KernelError::NestedClassical);
                }
                gate.validate(width)
            }
            _ => Ok(()),
        }
    }

    pub fn inverse(&self) -> Gate {
        match self {
            Gate::S(t) => Gate::Sinv(*t),
            Gate::Sinv(t) => Gate::S(*t),
            Gate::Classical { bit, gate } => Gate::Classical { bit: *bit, gate: Box::new(gate.inverse()) },
            g => g.clone(),
        }
    }

    /// Gates that are their own inverse on every phase-space point.
    pub fn is_involution(&self) -> bool {
        match self {
            Gate::S(_) | Gate::Sinv(_) => false,
            Gate::Classical { gate, .. } => gate.is_involution(),
            _ => true,
        }
    }

    /// Append the fixed-arity expansion, each entry tagged with its classical condition.
    pub fn expand_into(&self, out: &mut Vec<(Prim, Option<usize>)>) {
        self.expand_cond(None, out)
    }

    fn expand_cond(&self, cond: Option<usize>, out: &mut Vec<(Prim, Option<usize>)>) {
        let w = |v: usize| v as u32;
        let mut push = |p: Prim| out.push((p, cond));
        match self {
            Gate::X(t) => push(Prim::X(w(*t))),
            Gate::Y(t) => push(Prim::Y(w(*t))),
            Gate::Z(t) => push(Prim::Z(w(*t))),
            Gate::H(t) => push(Prim::H(w(*t))),
            Gate::S(t) => push(Prim::S(w(*t))),
            Gate::Sinv(t) => push(Prim::Sinv(w(*t))),
            Gate::Cnot { control, target } => push(Prim::Cnot(w(*control), w(*target))),
            Gate::Cz(a, b) => push(Prim::Cz(w(*a), w(*b))),
            Gate::Swap(a, b) => push(Prim::Swap(w(*a), w(*b))),
            Gate::Toffoli { controls, target } => {
                push(Prim::Toffoli(w(controls[0]), w(controls[1]), w(*target)))
            }
            Gate::Fredkin { control, targets } => {
                push(Prim::Fredkin(w(*control), w(targets[0]), w(targets[1])))
            }
            Gate::NToffoli { controls, target, ancillas } => {
                for c in controls.iter().filter(|c| c.inverted) {
                    push(Prim::X(w(c.wire)));
                }
                let c: Vec<u32> = controls.iter().map(|c| w(c.wire)).collect();
                let t = w(*target);
                match c.len() {
                    1 => push(Prim::Cnot(c[0], t)),
                    2 => push(Prim::Toffoli(c[0], c[1], t)),
                    k => {
                        let a: Vec<u32> = ancillas[..k - 2].iter().map(|&v| w(v)).collect();
                        let mut compute = vec![Prim::Toffoli(c[0], c[1], a[0])];
                        for i in 2..k - 1 {
                            compute.push(Prim::Toffoli(c[i], a[i - 2], a[i - 1]));
                        }
                        for g in &compute {
                            push(*g);
                        }
                        push(Prim::Toffoli(c[k - 1], a[k - 3], t));
                        for g in compute.iter().rev() {
                            push(*g);
                        }
                    }
                }
                for c in controls.iter().filter(|c| c.inverted) {
                    push(Prim::X(w(c.wire)));
                }
            }
            // Nesting is rejected by `validate`; the innermost condition wins here.
            Gate::Classical { bit, gate } => gate.expand_cond(Some(*bit), out),
        }
    }
}

impl Prim {
    pub fn wires(&self) -> Vec<usize> {
        match *self {
            Prim::X(t) | Prim::Y(t) | Prim::Z(t) | Prim::H(t) | Prim::S(t) | Prim::Sinv(t) => {
                vec![t as usize]
            }
            Prim::Cnot(a, b) | Prim::Cz(a, b) | Prim::Swap(a, b) => vec![a as usize, b as usize],
            Prim::Toffoli(a, b, c) | Prim::Fredkin(a, b, c) => {
                vec![a as usize, b as usize, c as usize]
            }
        }
    }
}

/// Apply one fixed-arity gate to every lane where `en` is set.
#[inline]
pub fn apply_prim<B: Bits>(g: Prim, x: &mut [B], p: &mut [B], en: B) {
    match g {
        Prim::X(t) => x[t as usize] ^= en,
        Prim::Z(t) => p[t as usize] ^= en,
        Prim::Y(t) => {
            x[t as usize] ^= en;
            p[t as usize] ^= en;
        }
        Prim::H(t) => {
            let t = t as usize;
            let d = (x[t] ^ p[t]) & en;
            x[t] ^= d;
            p[t] ^= d;
        }
        Prim::S(t) => {
            let t = t as usize;
            p[t] ^= x[t] & en;
            x[t] ^= en;
        }
        Prim::Sinv(t) => {
            let t = t as usize;
            p[t] ^= !x[t] & en;
            x[t] ^= en;
        }
        Prim::Cnot(c, t) => {
            let (c, t) = (c as usize, t as usize);
            p[c] ^= p[t] & en;
            x[t] ^= x[c] & en;
        }
        Prim::Cz(a, b) => {
            let (a, b) = (a as usize, b as usize);
            p[a] ^= x[b] & en;
            p[b] ^= x[a] & en;
        }
        Prim::Swap(a, b) => {
            let (a, b) = (a as usize, b as usize);
            let dx = (x[a] ^ x[b]) & en;
            let dp = (p[a] ^ p[b]) & en;
            x[a] ^= dx;
            x[b] ^= dx;
            p[a] ^= dp;
            p[b] ^= dp;
        }
        Prim::Toffoli(c2, c1, t) => {
            let (c2, c1, t) = (c2 as usize, c1 as usize, t as usize);
            let kick = p[t] & en;
            p[c2] ^= kick & x[c1];
            p[c1] ^= kick & x[c2];
            x[t] ^= x[c2] & x[c1] & en;
        }
        Prim::Fredkin(c, a, b) => {
            let (c, a, b) = (c as usize, a as usize, b as usize);
            let dx = x[a] ^ x[b];
            let dp = p[a] ^ p[b];
            p[c] ^= dx & dp & en;
            let fx = x[c] & dx & en;
            let fp = x[c] & dp & en;
            x[a] ^= fx;
            x[b] ^= fx;
            p[a] ^= fp;
            p[b] ^= fp;
        }
    }
}

/// Apply a gate to a register. Classical bits are looked up in `classical`.
pub fn apply_with(gate: &Gate, state: &mut Register, classical: &[bool]) -> Result<(), KernelError> {
    gate.validate(state.len())?;
    let mut prims = Vec::new();
    gate.expand_into(&mut prims);
    let mut x: Vec<bool> = state.systems.iter().map(|s| s.x).collect();
    let mut p: Vec<bool> = state.systems.iter().map(|s| s.p).collect();
    for (g, cond) in prims {
        let en = match cond {
            None => true,
            Some(b) => *classical.get(b).ok_or(KernelError::MissingClassicalBit(b))?,
        };
        apply_prim(g, &mut x, &mut p, en);
    }
    for (i, s) in state.systems.iter_mut().enumerate() {
        s.x = x[i];
        s.p = p[i];
    }
    Ok(())
}

/// Apply a gate with no classical context.
pub fn apply(gate: &Gate, state: &mut Register) -> Result<(), KernelError> {
    apply_with(gate, state, &[])
}

impl Gate {
    /// Same gate with every wire renamed through `f`.
    pub fn map_wires(&self, f: &impl Fn(usize) -> usize) -> Gate {
        match self {
            Gate::X(t) => Gate::X(f(*t)),
            Gate::Y(t) => Gate::Y(f(*t)),
            Gate::Z(t) => Gate::Z(f(*t)),
            Gate::H(t) => Gate::H(f(*t)),
            Gate::S(t) => Gate::S(f(*t)),
            Gate::Sinv(t) => Gate::Sinv(f(*t)),
            Gate::Cnot { control, target } => Gate::Cnot { control: f(*control), target: f(*target) },
            Gate::Cz(a, b) => Gate::Cz(f(*a), f(*b)),
            Gate::Swap(a, b) => Gate::Swap(f(*a), f(*b)),
            Gate::Toffoli { controls, target } => {
                Gate::Toffoli { controls: [f(controls[0]), f(controls[1])], target: f(*target) }
            }
            Gate::Fredkin { control, targets } => {
                Gate::Fredkin { control: f(*control), targets: [f(targets[0]), f(targets[1])] }
            }
            Gate::NToffoli { controls, target, ancillas } => Gate::NToffoli {
                controls: controls.iter().map(|c| Control::new(f(c.wire), c.inverted)).collect(),
                target: f(*target),
                ancillas: ancillas.iter().map(|a| f(*a)).collect(),
            },
            Gate::Classical { bit, gate } => Gate::Classical { bit: *bit, gate: Box::new(gate.map_wires(f)) },
        }
    }
}
