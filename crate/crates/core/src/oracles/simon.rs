use serde::{Deserialize, Serialize};

use crate::kernel::{permutation_needs_ancilla, synthesize_permutation, Circuit, Gate};

use super::{check_perm, embed, Family, OracleError, OracleSpec};

/// How the answer register is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimonVariant {
    /// `|x>|0> -> |x>|f(x)>`; undefined for nonzero answers.
    ZeroTarget,
    /// `|x>|y> -> |x>|y ⊕ f(x)>` by compute, copy, uncompute through a scratch register.
    XorTarget,
    /// `|x>|y> -> |x>|π(y ⊕ f_b(x))>`, the layout for the exact algorithm.
    Deterministic,
}

fn parity(v: u64) -> u64 {
    (v.count_ones() & 1) as u64
}

/// Basis `v^(0..n)`: the first `n-1` vectors span `s^⊥`, the last is the
/// single top set bit of `s`. For `s = 0` the standard basis.
pub fn simon_basis(n: usize, s: u64) -> Vec<u64> {
    if s == 0 {
        return (0..n).map(|k| 1 << k).collect();
    }
    let pivot = 63 - s.leading_zeros() as usize;
    let mut basis: Vec<u64> = (0..n)
        .filter(|&j| j != pivot)
        .map(|j| (1 << j) | ((s >> j & 1) << pivot))
        .collect();
    basis.push(1 << pivot);
    basis
}

/// `f_b(x)`: bit k is `x·v^(k)` for k < n-1; the top bit is `x·v^(n-1)` only when `b = 0`.
pub(crate) fn f_b(n: usize, _s: u64, b: bool, basis: &[u64], x: u64) -> u64 {
    let mut y = 0;
    for (k, v) in basis.iter().enumerate().take(n - 1) {
        y |= parity(v & x) << k;
    }
    if !b {
        y |= parity(basis[n - 1] & x) << (n - 1);
    }
    y
}

/// CNOT network for `f_b` from `query` into `target`. `V_s` is emitted only when `b = 0`.
fn u_s(c: &mut Circuit, basis: &[u64], b: bool, query: &[usize], target: &[usize]) {
    let n = query.len();
    for (k, v) in basis.iter().enumerate() {
        if k == n - 1 && b {
            break;
        }
        for i in (0..n).filter(|i| v >> i & 1 == 1) {
            c.add(Gate::cnot(query[i], target[k]));
        }
    }
}

/// Simon oracle with a hidden mask `s` (two-to-one when `b = 1`) composed with `perm`.
///
/// Wires: query `0..n`, answer `n..2n`, then for `XorTarget` a scratch
/// register `2n..3n`, then the permutation ancilla when needed.
pub fn simon_oracle(
    n: usize,
    s: u64,
    b: bool,
    perm: &[usize],
    variant: SimonVariant,
) -> Result<OracleSpec, OracleError> {
    if n == 0 || n > 20 || s >> n != 0 {
        return Err(OracleError::Invalid(format!("mask {s:#b} does not fit {n} bits")));
    }
    if b && s == 0 {
        return Err(OracleError::Invalid("two-to-one function needs a nonzero mask".into()));
    }
    check_perm(perm, n)?;
    let basis = simon_basis(n, s);
    let pi = synthesize_permutation(perm)?;
    let query: Vec<usize> = (0..n).collect();
    let answer: Vec<usize> = (n..2 * n).collect();
    let scratch: Vec<usize> = (2 * n..3 * n).collect();
    let regs = if variant == SimonVariant::XorTarget { 3 * n } else { 2 * n };
    let spare: Vec<usize> = if permutation_needs_ancilla(n) { vec![regs] } else { vec![] };
    let mut ancillas = spare.clone();
    if variant == SimonVariant::XorTarget {
        ancillas.splice(0..0, scratch.iter().copied());
    }
    let mut circuit = Circuit::with_ancillas(regs + spare.len(), ancillas.clone());
    match variant {
        SimonVariant::ZeroTarget | SimonVariant::Deterministic => {
            u_s(&mut circuit, &basis, b, &query, &answer);
            embed(&mut circuit, &pi, &answer, &spare);
        }
        SimonVariant::XorTarget => {
            let mut compute = Circuit::new(circuit.width());
            u_s(&mut compute, &basis, b, &query, &scratch);
            embed(&mut compute, &pi, &scratch, &spare);
            circuit.append(&compute)?;
            for k in 0..n {
                circuit.add(Gate::cnot(scratch[k], answer[k]));
            }
            circuit.append(&compute.inverse())?;
        }
    }
    Ok(OracleSpec {
        family: Family::Simon { s, b, perm: perm.to_vec(), basis, variant },
        circuit,
        query,
        answer,
        ancillas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_for_101() {
        assert_eq!(simon_basis(3, 0b101), vec![0b101, 0b010, 0b100]);
    }

    #[test]
    fn basis_is_orthogonal_and_complete() {
        for n in 1..=6 {
            for s in 1u64..1 << n {
                let basis = simon_basis(n, s);
                for v in &basis[..n - 1] {
                    assert_eq!(parity(v & s), 0);
                }
                assert_eq!(parity(basis[n - 1] & s), 1);
                let image: std::collections::BTreeSet<u64> =
                    (0..1u64 << n).map(|x| f_b(n, s, false, &basis, x)).collect();
                assert_eq!(image.len(), 1 << n);
            }
        }
    }
}
