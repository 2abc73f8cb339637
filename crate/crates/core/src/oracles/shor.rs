use crate::kernel::{synthesize_permutation, Circuit, Gate};

use super::{embed, Family, OracleError, OracleSpec};

/// How the controlled modular multipliers are built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultiplierConstruction {
    /// Multiplication by ±2^k mod 15 as a controlled cyclic rotation of the
    /// four answer bits (Fredkin gates), followed by a controlled complement
    /// (CNOTs) for the negative factors.
    SwapNetwork,
    /// Generic controlled permutation from the transposition synthesizer,
    /// fixing 0 and 15. Uses one extra clean ancilla.
    Synthesized,
}

pub(crate) const ELEMENTS: [u64; 6] = [2, 4, 7, 8, 11, 13];

/// `a^(2^(power-1)) mod 15`.
pub(crate) fn factor(a: u64, power: u32) -> u64 {
    let mut m = a % 15;
    for _ in 1..power {
        m = m * m % 15;
    }
    m
}

/// Number-state action of an active multiplier. Both constructions multiply
/// on `1..=14`; outside the group the synthesized circuit fixes 0 and 15,
/// while the swap network's complement exchanges them for negative factors.
pub(crate) fn multiply(construction: MultiplierConstruction, m: u64, y: u64) -> u64 {
    match y {
        1..=14 => y * m % 15,
        _ if construction == MultiplierConstruction::SwapNetwork && [7, 11, 13, 14].contains(&m) => 15 - y,
        _ => y,
    }
}

/// Controlled multiplier with the default construction.
pub fn shor15_multiplier(a: u64, power: u32) -> Result<OracleSpec, OracleError> {
    shor15_multiplier_with(a, power, MultiplierConstruction::SwapNetwork)
}

/// Controlled `y -> y * a^(2^(power-1)) mod 15` on wire 0 (control) and
/// wires 1..5 (answer, least significant first). Identity factors produce
/// an empty circuit.
pub fn shor15_multiplier_with(
    a: u64,
    power: u32,
    construction: MultiplierConstruction,
) -> Result<OracleSpec, OracleError> {
    if !ELEMENTS.contains(&a) {
        return Err(OracleError::Invalid(format!("a = {a} is not a nontrivial unit mod 15")));
    }
    if !(1..=2).contains(&power) {
        return Err(OracleError::Invalid(format!("power {power} not in 1..=2")));
    }
    let m = factor(a, power);
    let query = vec![0];
    let answer = vec![1, 2, 3, 4];
    let (circuit, ancillas) = match construction {
        _ if m == 1 => (Circuit::new(5), vec![]),
        MultiplierConstruction::SwapNetwork => (swap_network(m), vec![]),
        MultiplierConstruction::Synthesized => {
            // Permutation on (control, y) with the control as bit 0.
            let perm: Vec<usize> = (0..32usize)
                .map(|v| {
                    let (c, y) = (v & 1, (v >> 1) as u64);
                    let y2 = if c == 1 && y < 15 { y * m % 15 } else { y };
                    (y2 as usize) << 1 | c
                })
                .collect();
            let p = synthesize_permutation(&perm)?;
            let mut c = Circuit::with_ancillas(6, vec![5]);
            embed(&mut c, &p, &[0, 1, 2, 3, 4], &[5]);
            (c, vec![5])
        }
    };
    Ok(OracleSpec {
        family: Family::Shor15Mult { a, power, construction },
        circuit,
        query,
        answer,
        ancillas,
    })
}

/// m = ±2^k mod 15: rotate left by k, complement when negative.
fn swap_network(m: u64) -> Circuit {
    let (k, negate) = (0..4u32)
        .find_map(|k| {
            let r = (1u64 << k) % 15;
            if r == m {
                Some((k, false))
            } else if (15 - r) % 15 == m {
                Some((k, true))
            } else {
                None
            }
        })
        .expect("every unit mod 15 is ±2^k");
    let mut c = Circuit::new(5);
    let y = |i: usize| i + 1;
    match k {
        1 => {
            for (a, b) in [(2, 3), (1, 2), (0, 1)] {
                c.add(Gate::fredkin(0, y(a), y(b)));
            }
        }
        2 => {
            for (a, b) in [(0, 2), (1, 3)] {
                c.add(Gate::fredkin(0, y(a), y(b)));
            }
        }
        3 => {
            for (a, b) in [(0, 1), (1, 2), (2, 3)] {
                c.add(Gate::fredkin(0, y(a), y(b)));
            }
        }
        _ => {}
    }
    if negate {
        for i in 0..4 {
            c.add(Gate::cnot(0, y(i)));
        }
    }
    c
}
