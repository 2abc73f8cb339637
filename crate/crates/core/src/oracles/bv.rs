use crate::kernel::{Circuit, Gate};

use super::{Family, OracleError, OracleSpec};

/// `f(x) = s·x mod 2`: one CNOT from query wire i to the answer for each set bit of `s`.
pub fn bv_oracle(n: usize, s: u64) -> Result<OracleSpec, OracleError> {
    if n == 0 || n > 63 || s >> n != 0 {
        return Err(OracleError::Invalid(format!("secret {s:#b} does not fit {n} bits")));
    }
    let mut circuit = Circuit::new(n + 1);
    for i in (0..n).filter(|i| s >> i & 1 == 1) {
        circuit.add(Gate::cnot(i, n));
    }
    Ok(OracleSpec {
        family: Family::BernsteinVazirani { s },
        circuit,
        query: (0..n).collect(),
        answer: vec![n],
        ancillas: vec![],
    })
}
