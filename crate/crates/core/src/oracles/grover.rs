use crate::kernel::{Circuit, Control, Gate};

use super::{Family, OracleError, OracleSpec};

/// Single n-Toffoli onto the answer, control i inverted iff `xstar_i = 0`.
///
/// Wires: query `0..n`, answer `n`, ladder ancillas `n + 1 .. 2n - 1`.
pub fn grover_oracle(n: usize, xstar: u64) -> Result<OracleSpec, OracleError> {
    if !(2..=32).contains(&n) || xstar >> n != 0 {
        return Err(OracleError::Invalid(format!("x* = {xstar:#b} with n = {n}")));
    }
    let ancillas: Vec<usize> = (n + 1..2 * n - 1).collect();
    let mut circuit = Circuit::with_ancillas(2 * n - 1, ancillas.clone());
    let controls = (0..n).map(|i| Control::new(i, xstar >> i & 1 == 0)).collect();
    circuit.add(Gate::n_toffoli(controls, n, ancillas.clone()));
    Ok(OracleSpec {
        family: Family::Grover { xstar },
        circuit,
        query: (0..n).collect(),
        answer: vec![n],
        ancillas,
    })
}
