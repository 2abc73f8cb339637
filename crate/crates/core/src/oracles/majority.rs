use serde::{Deserialize, Serialize};

use crate::kernel::{Circuit, Control, Gate};

use super::{Family, OracleError, OracleSpec};

/// Four layouts of the three-bit majority `11101000`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MajorityVariant {
    /// One 3-controlled Toffoli per satisfying input.
    A,
    /// MAJ computed in place on the query, copied out, MAJ undone.
    B,
    /// Three Toffolis, one per pair of inputs.
    C,
    /// Single Toffoli on `x2⊕x0`, `x1⊕x0`, plus CNOTs.
    D,
}

/// Wires: query `0..3`, answer `3`, and for variant A one ancilla `4`.
pub fn majority_oracle(variant: MajorityVariant) -> Result<OracleSpec, OracleError> {
    let t = 3;
    let mut ancillas = vec![];
    let circuit = match variant {
        MajorityVariant::A => {
            ancillas.push(4);
            let mut c = Circuit::with_ancillas(5, vec![4]);
            for x in [7u32, 3, 5, 6] {
                let controls = (0..3).rev().map(|i| Control::new(i, x >> i & 1 == 0)).collect();
                c.add(Gate::n_toffoli(controls, t, vec![4]));
            }
            c
        }
        MajorityVariant::B => {
            let mut c = Circuit::new(4);
            c.add(Gate::cnot(0, 1)).add(Gate::cnot(0, 2)).add(Gate::toffoli(2, 1, 0));
            c.add(Gate::cnot(0, t));
            c.add(Gate::toffoli(2, 1, 0)).add(Gate::cnot(0, 2)).add(Gate::cnot(0, 1));
            c
        }
        MajorityVariant::C => {
            let mut c = Circuit::new(4);
            c.add(Gate::toffoli(2, 1, t)).add(Gate::toffoli(1, 0, t)).add(Gate::toffoli(2, 0, t));
            c
        }
        MajorityVariant::D => {
            let mut c = Circuit::new(4);
            c.add(Gate::cnot(0, 2)).add(Gate::cnot(0, t)).add(Gate::cnot(0, 1));
            c.add(Gate::toffoli(2, 1, t));
            c.add(Gate::cnot(0, 1)).add(Gate::cnot(0, 2));
            c
        }
    };
    Ok(OracleSpec {
        family: Family::Majority { variant },
        circuit,
        query: vec![0, 1, 2],
        answer: vec![t],
        ancillas,
    })
}
