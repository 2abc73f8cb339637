use std::ops::Range;

use crate::kernel::Bits;

/// Measurements and their state-update rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MeasurementSpec {
    /// Returns x, re-randomizes p.
    Z(usize),
    /// Returns p, re-randomizes x.
    X(usize),
    /// Returns x ⊕ p, then moves to a uniformly chosen point of the same parity.
    Y(usize),
    /// Returns x_i ⊕ x_j; both computational bits redistributed with that parity.
    JointZZ(usize, usize),
    /// Returns p_i ⊕ p_j; both phase bits redistributed with that parity.
    JointXX(usize, usize),
    /// Returns x_i ⊕ p_j; those two bits redistributed with that parity.
    JointZX(usize, usize),
    /// Returns (x_i ⊕ x_j, p_i ⊕ p_j) as two outcome bits, computational first.
    Bell(usize, usize),
    /// Returns 1 when every computational bit in the range is 0; the range's
    /// phase bits are re-randomized. Computational bits are left as they are.
    AllZeroTest(Range<usize>),
}

impl MeasurementSpec {
    pub fn outcome_bits(&self) -> usize {
        match self {
            MeasurementSpec::Bell(..) => 2,
            _ => 1,
        }
    }

    /// Fresh random bits consumed by the state update.
    pub fn random_bits(&self) -> usize {
        match self {
            MeasurementSpec::Bell(..) => 2,
            MeasurementSpec::AllZeroTest(r) => r.len(),
            _ => 1,
        }
    }

    pub fn wires(&self) -> Vec<usize> {
        match self {
            MeasurementSpec::Z(i) | MeasurementSpec::X(i) | MeasurementSpec::Y(i) => vec![*i],
            MeasurementSpec::JointZZ(i, j)
            | MeasurementSpec::JointXX(i, j)
            | MeasurementSpec::JointZX(i, j)
            | MeasurementSpec::Bell(i, j) => vec![*i, *j],
            MeasurementSpec::AllZeroTest(r) => r.clone().collect(),
        }
    }

    /// Bit cells (`2 * wire` for x, `2 * wire + 1` for p) whose values
    /// determine the outcome.
    pub(crate) fn reads(&self) -> Vec<usize> {
        use MeasurementSpec::*;
        match self {
            Z(i) => vec![2 * i],
            X(i) => vec![2 * i + 1],
            Y(i) => vec![2 * i, 2 * i + 1],
            JointZZ(i, j) => vec![2 * i, 2 * j],
            JointXX(i, j) => vec![2 * i + 1, 2 * j + 1],
            JointZX(i, j) => vec![2 * i, 2 * j + 1],
            Bell(i, j) => vec![2 * i, 2 * i + 1, 2 * j, 2 * j + 1],
            AllZeroTest(r) => r.clone().map(|w| 2 * w).collect(),
        }
    }

    /// Bit cells written by random draw `k`. Every cell the update writes
    /// is covered by some draw.
    pub(crate) fn draw_cells(&self, k: usize) -> Vec<usize> {
        use MeasurementSpec::*;
        match self {
            Z(i) => vec![2 * i + 1],
            X(i) => vec![2 * i],
            Y(i) => vec![2 * i, 2 * i + 1],
            JointZZ(i, j) => vec![2 * i, 2 * j],
            JointXX(i, j) => vec![2 * i + 1, 2 * j + 1],
            JointZX(i, j) => vec![2 * i, 2 * j + 1],
            Bell(i, j) if k == 0 => vec![2 * i, 2 * j],
            Bell(i, j) => vec![2 * i + 1, 2 * j + 1],
            AllZeroTest(r) => vec![2 * (r.start + k) + 1],
        }
    }

    /// Apply to lane vectors. `r` holds this measurement's draws; outcome bits
    /// are written to `out`.
    pub(crate) fn apply<B: Bits>(&self, x: &mut [B], p: &mut [B], r: &[B], out: &mut [B]) {
        match *self {
            MeasurementSpec::Z(i) => {
                out[0] = x[i];
                p[i] = r[0];
            }
            MeasurementSpec::X(i) => {
                out[0] = p[i];
                x[i] = r[0];
            }
            MeasurementSpec::Y(i) => {
                let o = x[i] ^ p[i];
                out[0] = o;
                x[i] = r[0];
                p[i] = r[0] ^ o;
            }
            MeasurementSpec::JointZZ(i, j) => {
                let o = x[i] ^ x[j];
                out[0] = o;
                x[i] = r[0];
                x[j] = r[0] ^ o;
            }
            MeasurementSpec::JointXX(i, j) => {
                let o = p[i] ^ p[j];
                out[0] = o;
                p[i] = r[0];
                p[j] = r[0] ^ o;
            }
            MeasurementSpec::JointZX(i, j) => {
                let o = x[i] ^ p[j];
                out[0] = o;
                x[i] = r[0];
                p[j] = r[0] ^ o;
            }
            MeasurementSpec::Bell(i, j) => {
                let ox = x[i] ^ x[j];
                let op = p[i] ^ p[j];
                out[0] = ox;
                out[1] = op;
                x[i] = r[0];
                x[j] = r[0] ^ ox;
                p[i] = r[1];
                p[j] = r[1] ^ op;
            }
            MeasurementSpec::AllZeroTest(ref range) => {
                let mut any = B::zero();
                for w in range.clone() {
                    any = any | x[w];
                }
                out[0] = !any;
                for (k, w) in range.clone().enumerate() {
                    p[w] = r[k];
                }
            }
        }
    }
}
