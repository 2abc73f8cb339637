use std::fmt;

use super::random::RandomSource;

/// One simulated qubit: a computational bit and a phase bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementarySystem {
    pub x: bool,
    pub p: bool,
}

impl ElementarySystem {
    pub const fn new(x: bool, p: bool) -> Self {
        ElementarySystem { x, p }
    }

    /// Canonical point label `2x + p`.
    pub fn label(self) -> u8 {
        2 * self.x as u8 + self.p as u8
    }

    pub fn from_label(label: u8) -> Self {
        assert!(label < 4, "point label out of range: {label}");
        ElementarySystem { x: label & 2 != 0, p: label & 1 != 0 }
    }
}

impl fmt::Display for ElementarySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x as u8, self.p as u8)
    }
}

/// Preparation basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Z,
    X,
    Y,
    Mixed,
}

/// How a wire is initialized before the circuit runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prep {
    /// Eigenstate of the given basis, or the maximally mixed state.
    Basis(Basis, bool),
    /// A fixed point of phase space (no randomness).
    Point(ElementarySystem),
}

impl Prep {
    pub const fn z(v: bool) -> Self {
        Prep::Basis(Basis::Z, v)
    }
    pub const fn x(v: bool) -> Self {
        Prep::Basis(Basis::X, v)
    }
    pub const fn y(v: bool) -> Self {
        Prep::Basis(Basis::Y, v)
    }
    pub const fn mixed() -> Self {
        Prep::Basis(Basis::Mixed, false)
    }
    pub const fn point(x: bool, p: bool) -> Self {
        Prep::Point(ElementarySystem::new(x, p))
    }

    /// Number of fresh random bits the preparation consumes.
    pub fn random_bits(self) -> usize {
        match self {
            Prep::Basis(Basis::Mixed, _) => 2,
            Prep::Basis(..) => 1,
            Prep::Point(_) => 0,
        }
    }

    /// Build the system from the given fresh bits (`r.len() == random_bits()`).
    pub fn realize(self, r: &[bool]) -> ElementarySystem {
        match self {
            Prep::Basis(Basis::Z, v) => ElementarySystem::new(v, r[0]),
            Prep::Basis(Basis::X, v) => ElementarySystem::new(r[0], v),
            Prep::Basis(Basis::Y, v) => ElementarySystem::new(r[0], r[0] ^ v),
            Prep::Basis(Basis::Mixed, _) => ElementarySystem::new(r[0], r[1]),
            Prep::Point(s) => s,
        }
    }

    /// Every point the preparation can produce, one per assignment of its bits.
    pub fn support(self) -> Vec<ElementarySystem> {
        let k = self.random_bits();
        (0..1usize << k)
            .map(|a| {
                let r: Vec<bool> = (0..k).map(|j| (a >> j) & 1 == 1).collect();
                self.realize(&r)
            })
            .collect()
    }
}

/// Prepare one elementary system. The value is ignored for the mixed basis.
pub fn prepare(basis: Basis, value: bool, rng: &mut RandomSource) -> ElementarySystem {
    let prep = Prep::Basis(basis, value);
    let r = rng.bits(prep.random_bits());
    prep.realize(&r)
}

/// An ordered register of elementary systems; index 0 is least significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Register {
    pub systems: Vec<ElementarySystem>,
}

impl Register {
    pub fn new(systems: Vec<ElementarySystem>) -> Self {
        Register { systems }
    }

    pub fn zeros(width: usize) -> Self {
        Register { systems: vec![ElementarySystem::default(); width] }
    }

    /// Register holding the number states `x` and `p` (bit i on wire i).
    pub fn from_values(width: usize, x: u64, p: u64) -> Self {
        Register {
            systems: (0..width)
                .map(|i| ElementarySystem::new((x >> i) & 1 == 1, (p >> i) & 1 == 1))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }

    /// Computational value `Σ 2^i x_i`.
    pub fn x_value(&self) -> u64 {
        self.systems.iter().enumerate().fold(0, |acc, (i, s)| acc | ((s.x as u64) << i))
    }

    /// Phase value `Σ 2^i p_i`.
    pub fn p_value(&self) -> u64 {
        self.systems.iter().enumerate().fold(0, |acc, (i, s)| acc | ((s.p as u64) << i))
    }

    /// Point label of the whole register, base 4 with wire 0 least significant.
    pub fn label(&self) -> u64 {
        self.systems
            .iter()
            .enumerate()
            .fold(0, |acc, (i, s)| acc | ((s.label() as u64) << (2 * i)))
    }

    pub fn from_label(width: usize, label: u64) -> Self {
        Register {
            systems: (0..width)
                .map(|i| ElementarySystem::from_label(((label >> (2 * i)) & 3) as u8))
                .collect(),
        }
    }

    /// Cartesian composition: `self` keeps the low indices.
    pub fn compose(&self, high: &Register) -> Register {
        let mut systems = self.systems.clone();
        systems.extend_from_slice(&high.systems);
        Register { systems }
    }
}

impl fmt::Display for Register {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.systems.iter().rev() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
