//! Two- and three-system protocols: Bell pairs, teleportation, superdense
//! coding, BB84 with an intercept-resend eavesdropper, GHZ constructions and
//! singlet correlations.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::engine::{exact_distribution, exact_joint, run, Distribution, EngineError, Experiment, MeasurementSpec};
use crate::kernel::{Basis, ElementarySystem, Gate, Prep, RandomSource, Register};
use crate::stats::entropy;

/// The four maximally correlated pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BellKind {
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus, BellKind::PhiMinus];

    /// Initial computational values `(a, b)` of the first and second system.
    fn inputs(self) -> (bool, bool) {
        match self {
            BellKind::PsiPlus => (false, false),
            BellKind::PhiPlus => (false, true),
            BellKind::PsiMinus => (true, false),
            BellKind::PhiMinus => (true, true),
        }
    }
}

/// Wire 0 is the first system, wire 1 the second: prepare `(a,R)(b,R')`,
/// Hadamard on wire 0, CNOT 0 → 1.
pub fn bell_experiment(kind: BellKind) -> Experiment {
    let (a, b) = kind.inputs();
    let mut e = Experiment::new(2);
    e.prepare(0, Prep::z(a)).prepare(1, Prep::z(b));
    e.gate(Gate::H(0)).gate(Gate::cnot(0, 1));
    e
}

pub fn bell_pair(kind: BellKind, rng: &mut RandomSource) -> Result<Register, EngineError> {
    Ok(run(&bell_experiment(kind), rng)?.1.register)
}

/// Input on wire 0, Alice's half of a Ψ+ pair on wire 1, Bob's half on wire 2.
/// Outcome bit 0 is Alice's wire-1 readout (`R ⊕ b_x`), bit 1 her wire-0
/// readout (`R' ⊕ b_p`); Bob applies X and Z on those bits.
pub fn teleport_experiment(input: Prep) -> Experiment {
    let mut e = Experiment::new(3);
    e.prepare(0, input);
    e.gate(Gate::H(2)).gate(Gate::cnot(2, 1));
    e.gate(Gate::cnot(0, 1)).gate(Gate::H(0));
    let mx = e.measure(MeasurementSpec::Z(1));
    let mp = e.measure(MeasurementSpec::Z(0));
    e.gate(Gate::classical(mx, Gate::X(2)));
    e.gate(Gate::classical(mp, Gate::Z(2)));
    e
}

/// Bob's system after one run.
pub fn teleport(input: ElementarySystem, rng: &mut RandomSource) -> Result<ElementarySystem, EngineError> {
    let e = teleport_experiment(Prep::Point(input));
    Ok(run(&e, rng)?.1.register.systems[2])
}

/// Alice encodes `(m1, m0)` on wire 0 of a Ψ+ pair with I, X, Z or Y, and
/// Bob's Bell measurement returns `m0` as the computational correlation and
/// `m1` as the phase correlation. The outcome value is `2 m1 + m0`.
pub fn superdense_experiment(m1: bool, m0: bool) -> Experiment {
    let mut e = bell_experiment(BellKind::PsiPlus);
    match (m1, m0) {
        (false, false) => {}
        (false, true) => {
            e.gate(Gate::X(0));
        }
        (true, false) => {
            e.gate(Gate::Z(0));
        }
        (true, true) => {
            e.gate(Gate::Y(0));
        }
    }
    e.measure(MeasurementSpec::Bell(0, 1));
    e
}

pub fn superdense_roundtrip(m1: bool, m0: bool, rng: &mut RandomSource) -> Result<(bool, bool), EngineError> {
    let o = run(&superdense_experiment(m1, m0), rng)?.0;
    Ok((o.bit(1), o.bit(0)))
}

/// One BB84 round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bb84Round {
    pub alice_basis: Basis,
    pub alice_bit: bool,
    pub eve_present: bool,
    pub eve_basis: Option<Basis>,
    pub bob_basis: Basis,
    pub bob_bit: bool,
    pub sifted: bool,
}

impl Bb84Round {
    pub fn error(&self) -> bool {
        self.sifted && self.alice_bit != self.bob_bit
    }
}

fn measurement(basis: Basis, wire: usize) -> MeasurementSpec {
    match basis {
        Basis::X => MeasurementSpec::X(wire),
        _ => MeasurementSpec::Z(wire),
    }
}

/// Alice prepares her bit in her basis, Eve (if present) measures in hers
/// and passes the disturbed system on, Bob measures. The last outcome bit is
/// Bob's.
pub fn bb84_experiment(alice_basis: Basis, alice_bit: bool, eve_basis: Option<Basis>, bob_basis: Basis) -> Experiment {
    let mut e = Experiment::new(1);
    e.prepare(0, Prep::Basis(alice_basis, alice_bit));
    if let Some(b) = eve_basis {
        e.measure(measurement(b, 0));
    }
    e.measure(measurement(bob_basis, 0));
    e
}

fn basis_of(bit: bool) -> Basis {
    if bit {
        Basis::X
    } else {
        Basis::Z
    }
}

pub fn bb84_round(eavesdrop: bool, rng: &mut RandomSource) -> Result<Bb84Round, EngineError> {
    let alice_basis = basis_of(rng.next_bit());
    let alice_bit = rng.next_bit();
    let eve_basis = eavesdrop.then(|| basis_of(rng.next_bit()));
    let bob_basis = basis_of(rng.next_bit());
    let e = bb84_experiment(alice_basis, alice_bit, eve_basis, bob_basis);
    let o = run(&e, rng)?.0;
    Ok(Bb84Round {
        alice_basis,
        alice_bit,
        eve_present: eavesdrop,
        eve_basis,
        bob_basis,
        bob_bit: o.bit(o.len - 1),
        sifted: alice_basis == bob_basis,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Bb84Tally {
    pub rounds: u64,
    pub sifted: u64,
    pub errors: u64,
}

impl Bb84Tally {
    /// Error rate over sifted rounds.
    pub fn qber(&self) -> f64 {
        if self.sifted == 0 {
            0.0
        } else {
            self.errors as f64 / self.sifted as f64
        }
    }
}

/// Round `t` draws from stream `t` of `seed`.
pub fn bb84_run(rounds: u64, eavesdrop: bool, seed: u64) -> Result<Bb84Tally, EngineError> {
    if rounds == 0 {
        return Err(EngineError::NoTrials);
    }
    let mut tally = Bb84Tally { rounds, ..Default::default() };
    for t in 0..rounds {
        let r = bb84_round(eavesdrop, &mut RandomSource::new(seed, t))?;
        tally.sifted += r.sifted as u64;
        tally.errors += r.error() as u64;
    }
    Ok(tally)
}

/// `P(error | sifted)` by enumerating every basis and bit choice together
/// with every preparation and disturbance bit.
pub fn bb84_exact_qber(eavesdrop: bool) -> Result<Ratio<u64>, EngineError> {
    let bases = [Basis::Z, Basis::X];
    let eves: Vec<Option<Basis>> = if eavesdrop { bases.iter().map(|b| Some(*b)).collect() } else { vec![None] };
    let mut sum = Ratio::from_integer(0u64);
    let mut cases = 0u64;
    for ab in bases {
        for bit in [false, true] {
            for eb in &eves {
                let e = bb84_experiment(ab, bit, *eb, ab);
                let d = exact_distribution(&e)?;
                let last = d.outcome_bits() - 1;
                sum += d.probability_where(|o| ((o >> last) & 1 == 1) != bit);
                cases += 1;
            }
        }
    }
    Ok(sum / cases)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GhzConstruction {
    Toffoli,
    Cnot,
}

/// Hadamard on wire 2, CNOT 2 → 1, then a Toffoli (controls 2, 1) or a
/// CNOT 2 → 0 onto wire 0. Both spell `(x,·)(x,·)(x,·)` computationally.
pub fn ghz_experiment(construction: GhzConstruction) -> Experiment {
    let mut e = Experiment::new(3);
    e.gate(Gate::H(2)).gate(Gate::cnot(2, 1));
    e.gate(match construction {
        GhzConstruction::Toffoli => Gate::toffoli(2, 1, 0),
        GhzConstruction::Cnot => Gate::cnot(2, 0),
    });
    e
}

pub fn ghz_state(construction: GhzConstruction, rng: &mut RandomSource) -> Result<Register, EngineError> {
    Ok(run(&ghz_experiment(construction), rng)?.1.register)
}

/// Entropy (bits) of system 2 given the outcomes of Z on system 0 and X on
/// system 1, from the exact joint distribution.
pub fn ghz_conditional_entropy(construction: GhzConstruction) -> Result<f64, EngineError> {
    let mut e = ghz_experiment(construction);
    e.measure(MeasurementSpec::Z(0));
    e.measure(MeasurementSpec::X(1));
    let joint = exact_joint(&e, 4, |o, s| o.bits | (s.register.systems[2].label() as u64) << 2)?;
    let outcomes = joint.map(2, |k| k & 3);
    Ok(entropy(&joint) - entropy(&outcomes))
}

/// Exact Z⊗Z⊗Z readout distribution.
pub fn ghz_computational_distribution(construction: GhzConstruction) -> Result<Distribution, EngineError> {
    let mut e = ghz_experiment(construction);
    e.measure_z(0..3);
    exact_distribution(&e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Correlation {
    Equal,
    Opposite,
    Mixed,
}

impl fmt::Display for Correlation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Correlation::Equal => "+",
            Correlation::Opposite => "-",
            Correlation::Mixed => "?",
        })
    }
}

/// Same-basis Z, X and Y measurements on both systems of Φ−, classified
/// from the exact distribution of the outcome XOR.
pub fn singlet_pauli_correlations() -> Result<[(Basis, Correlation); 3], EngineError> {
    let table = [Basis::Z, Basis::X, Basis::Y].map(|b| {
        let mut e = bell_experiment(BellKind::PhiMinus);
        for w in 0..2 {
            e.measure(match b {
                Basis::Z => MeasurementSpec::Z(w),
                Basis::X => MeasurementSpec::X(w),
                _ => MeasurementSpec::Y(w),
            });
        }
        exact_distribution(&e).map(|d| {
            let xor = d.map(1, |o| (o ^ (o >> 1)) & 1);
            let c = match xor.point_mass() {
                Some(0) => Correlation::Equal,
                Some(_) => Correlation::Opposite,
                None => Correlation::Mixed,
            };
            (b, c)
        })
    });
    let [z, x, y] = table;
    Ok([z?, x?, y?])
}
