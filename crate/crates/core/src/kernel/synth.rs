//! Reversible synthesis of number-state permutations.

use super::circuit::Circuit;
use super::gate::{Control, Gate};
use super::KernelError;

/// Multi-controlled X on `target`, borrowing the `free` wires in whatever
/// state they hold. Uses the dirty-ancilla Toffoli chain when enough wires
/// are free and splits the controls in two halves around a single borrowed
/// wire otherwise.
pub(crate) fn mcx_dirty(c: &mut Circuit, controls: &[usize], target: usize, free: &[usize]) {
    let k = controls.len();
    match k {
        0 => c.add_cancelling(Gate::X(target)),
        1 => c.add_cancelling(Gate::cnot(controls[0], target)),
        2 => c.add_cancelling(Gate::toffoli(controls[0], controls[1], target)),
        _ if free.len() >= k - 2 => v_chain(c, controls, &free[..k - 2], target),
        _ => {
            assert!(!free.is_empty(), "multi-controlled X with {k} controls needs a spare wire");
            let a = free[0];
            let half = k.div_ceil(2);
            let (left, right) = controls.split_at(half);
            let mut free_left: Vec<usize> = right.to_vec();
            free_left.push(target);
            let mut right_a: Vec<usize> = right.to_vec();
            right_a.push(a);
            for _ in 0..2 {
                mcx_dirty(c, left, a, &free_left);
                mcx_dirty(c, &right_a, target, left);
            }
        }
    }
}

/// 4(k-2) Toffolis; `a` holds k-2 borrowed wires, restored on exit.
fn v_chain(c: &mut Circuit, ctl: &[usize], a: &[usize], t: usize) {
    let k = ctl.len();
    let half = |c: &mut Circuit, with_target: bool| {
        if with_target {
            c.add_cancelling(Gate::toffoli(ctl[k - 1], a[k - 3], t));
        }
        for i in (1..=k - 3).rev() {
            c.add_cancelling(Gate::toffoli(ctl[i + 1], a[i - 1], a[i]));
        }
        c.add_cancelling(Gate::toffoli(ctl[0], ctl[1], a[0]));
        for i in 1..=k - 3 {
            c.add_cancelling(Gate::toffoli(ctl[i + 1], a[i - 1], a[i]));
        }
    };
    half(c, true);
    c.add_cancelling(Gate::toffoli(ctl[k - 1], a[k - 3], t));
    half(c, false);
}

/// Multi-controlled X with per-control polarity.
pub(crate) fn mcx(c: &mut Circuit, controls: &[Control], target: usize, free: &[usize]) {
    for ctl in controls.iter().filter(|c| c.inverted) {
        c.add_cancelling(Gate::X(ctl.wire));
    }
    let wires: Vec<usize> = controls.iter().map(|c| c.wire).collect();
    mcx_dirty(c, &wires, target, free);
    for ctl in controls.iter().filter(|c| c.inverted) {
        c.add_cancelling(Gate::X(ctl.wire));
    }
}

/// Check that `perm` is a bijection on `[0, 2^n)` and return `n`.
pub fn permutation_width(perm: &[usize]) -> Result<usize, KernelError> {
    let len = perm.len();
    if len == 0 || !len.is_power_of_two() {
        return Err(KernelError::NotABijection(format!("length {len} is not a power of two")));
    }
    let mut seen = vec![false; len];
    for &v in perm {
        if v >= len || seen[v] {
            return Err(KernelError::NotABijection(format!("value {v} repeated or out of range")));
        }
        seen[v] = true;
    }
    Ok(len.trailing_zeros() as usize)
}

/// Whether permutations on `n` bits need the spare wire.
pub fn permutation_needs_ancilla(n: usize) -> bool {
    n >= 4
}

/// Circuit over `n` wires (plus one clean ancilla on wire `n` when `n >= 4`)
/// whose number-state action equals `perm`.
///
/// The permutation is split into transpositions. Each transposition `a <-> b`
/// is conjugated by CNOTs from a pivot bit onto the other differing bits, so
/// the two states differ only at the pivot, and then flipped by one
/// multi-controlled X whose controls match the remaining bits of `a`.
pub fn synthesize_permutation(perm: &[usize]) -> Result<Circuit, KernelError> {
    let n = permutation_width(perm)?;
    let width = n + permutation_needs_ancilla(n) as usize;
    let ancillas: Vec<usize> = (n..width).collect();
    let mut c = Circuit::with_ancillas(width, ancillas.clone());
    // cur[x] is the image of x under the circuit built so far; inv is its inverse.
    let mut cur: Vec<usize> = (0..perm.len()).collect();
    let mut inv: Vec<usize> = cur.clone();
    for x in 0..perm.len() {
        let y = cur[x];
        let want = perm[x];
        if y == want {
            continue;
        }
        transposition(&mut c, n, y, want, &ancillas);
        let (xa, xb) = (inv[y], inv[want]);
        cur[xa] = want;
        cur[xb] = y;
        inv[want] = xa;
        inv[y] = xb;
    }
    Ok(c)
}

fn transposition(c: &mut Circuit, n: usize, a: usize, b: usize, free: &[usize]) {
    let d = a ^ b;
    let j = d.trailing_zeros() as usize;
    // Name the endpoints so that `lo` has bit j clear.
    let lo = if (a >> j) & 1 == 0 { a } else { b };
    let others: Vec<usize> = (0..n).filter(|&i| i != j && (d >> i) & 1 == 1).collect();
    for &i in &others {
        c.add_cancelling(Gate::cnot(j, i));
    }
    let controls: Vec<Control> = (0..n)
        .filter(|&i| i != j)
        .map(|i| Control::new(i, (lo >> i) & 1 == 0))
        .collect();
    mcx(c, &controls, j, free);
    for &i in others.iter().rev() {
        c.add_cancelling(Gate::cnot(j, i));
    }
}
