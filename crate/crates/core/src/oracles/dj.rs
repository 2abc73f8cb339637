use crate::kernel::{permutation_needs_ancilla, synthesize_permutation, Circuit, Gate};

use super::{check_perm, embed, Family, OracleError, OracleSpec};

/// Promise oracle: `π_f`, CNOT from the top query bit when `b0`, `X` on the
/// answer when `b1`, then `π_f⁻¹`. Constant `b1` when `b0 = 0`, balanced otherwise.
///
/// Wires: query `0..n`, answer `n`, and one ancilla `n + 1` when the
/// permutation synthesis needs it.
pub fn dj_promise_oracle(n: usize, b0: bool, b1: bool, perm: &[usize]) -> Result<OracleSpec, OracleError> {
    if n == 0 {
        return Err(OracleError::Invalid("n must be at least 1".into()));
    }
    check_perm(perm, n)?;
    let pi = synthesize_permutation(perm)?;
    let query: Vec<usize> = (0..n).collect();
    let ancillas = if permutation_needs_ancilla(n) { vec![n + 1] } else { vec![] };
    let mut circuit = Circuit::with_ancillas(n + 1 + ancillas.len(), ancillas.clone());
    embed(&mut circuit, &pi, &query, &ancillas);
    if b0 {
        circuit.add(Gate::cnot(n - 1, n));
    }
    if b1 {
        circuit.add(Gate::X(n));
    }
    embed(&mut circuit, &pi.inverse(), &query, &ancillas);
    Ok(OracleSpec {
        family: Family::DjPromise { b0, b1, perm: perm.to_vec() },
        circuit,
        query,
        answer: vec![n],
        ancillas,
    })
}

/// Ripple-carry comparator on wires `(c_in, x[0..n], a[0..n], z)`:
/// `(0, x, a, 0) -> (0, x, a, [x + a >= 2^n])`.
pub fn comparator_circuit(n: usize) -> Result<Circuit, OracleError> {
    if n == 0 {
        return Err(OracleError::Invalid("n must be at least 1".into()));
    }
    let x: Vec<usize> = (1..=n).collect();
    let a: Vec<usize> = (n + 1..=2 * n).collect();
    let mut c = Circuit::new(2 * n + 2);
    comparator_into(&mut c, 0, &x, &a, 2 * n + 1);
    Ok(c)
}

fn maj(c: &mut Circuit, carry: usize, x: usize, a: usize) {
    c.add(Gate::cnot(a, x));
    c.add(Gate::cnot(a, carry));
    c.add(Gate::toffoli(carry, x, a));
}

fn comparator_into(c: &mut Circuit, cin: usize, x: &[usize], a: &[usize], z: usize) {
    let n = x.len();
    let mut chain = Circuit::new(c.width());
    for i in 0..n {
        let carry = if i == 0 { cin } else { a[i - 1] };
        maj(&mut chain, carry, x[i], a[i]);
    }
    c.append(&chain).expect("same width");
    c.add(Gate::cnot(a[n - 1], z));
    c.append(&chain.inverse()).expect("same width");
}

/// Oracle with `f(x) = [π(x) + a >= 2^n]`, so `f` is 1 on exactly `a` inputs.
/// `a = 2^n` inverts the answer of the `a = 0` comparator.
///
/// Wires: query `0..n`, answer `n`, carry-in `n + 1`, addend register
/// `n + 2 ..= 2n + 1`. The carry-in doubles as the permutation ancilla.
pub fn dj_decision_oracle(n: usize, a: u64, perm: &[usize]) -> Result<OracleSpec, OracleError> {
    if n == 0 || n > 32 {
        return Err(OracleError::Invalid(format!("n = {n} out of range")));
    }
    if a > 1 << n {
        return Err(OracleError::Invalid(format!("a = {a} exceeds 2^{n}")));
    }
    check_perm(perm, n)?;
    let pi = synthesize_permutation(perm)?;
    let query: Vec<usize> = (0..n).collect();
    let cin = n + 1;
    let areg: Vec<usize> = (n + 2..2 * n + 2).collect();
    let mut ancillas = vec![cin];
    ancillas.extend_from_slice(&areg);
    let mut circuit = Circuit::with_ancillas(2 * n + 2, ancillas.clone());

    embed(&mut circuit, &pi, &query, &[cin]);
    let low = a & ((1 << n) - 1);
    let set: Vec<usize> = (0..n).filter(|i| low >> i & 1 == 1).map(|i| areg[i]).collect();
    for &w in &set {
        circuit.add(Gate::X(w));
    }
    comparator_into(&mut circuit, cin, &query, &areg, n);
    for &w in &set {
        circuit.add(Gate::X(w));
    }
    if a >> n & 1 == 1 {
        circuit.add(Gate::X(n));
    }
    embed(&mut circuit, &pi.inverse(), &query, &[cin]);
    Ok(OracleSpec {
        family: Family::DjDecision { a, perm: perm.to_vec() },
        circuit,
        query,
        answer: vec![n],
        ancillas,
    })
}
