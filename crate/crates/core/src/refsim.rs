//! Dense state-vector reference simulator over the same circuit IR.
//!
//! Gates act by their standard unitaries (S is diag(1, i)). Used to check
//! computational-basis behaviour and to produce ideal output distributions.

use std::collections::BTreeMap;

use num_complex::Complex64;
use thiserror::Error;

use crate::engine::{Experiment, MeasurementSpec, Step};
use crate::kernel::{Basis, Circuit, Gate, KernelError, Prep, Prim};
use crate::stats::RealDistribution;

pub const MAX_WIDTH: usize = 14;
const NORM_TOL: f64 = 1e-10;
const PRUNE: f64 = 1e-14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RefsimError {
    #[error("width {0} exceeds the reference simulator cap of {MAX_WIDTH}")]
    WidthCap(usize),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("unsupported by the reference simulator: {0}")]
    Unsupported(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeState {
    pub n: usize,
    pub amplitudes: Vec<Complex64>,
}

impl AmplitudeState {
    pub fn basis(n: usize, index: u64) -> Result<Self, RefsimError> {
        if n > MAX_WIDTH {
            return Err(RefsimError::WidthCap(n));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[index as usize] = Complex64::new(1.0, 0.0);
        Ok(AmplitudeState { n, amplitudes })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probability(&self, index: u64) -> f64 {
        self.amplitudes[index as usize].norm_sqr()
    }

    /// Basis index holding all the weight, if the state is a basis state.
    pub fn as_basis_state(&self) -> Option<u64> {
        let i = self.amplitudes.iter().position(|a| a.norm_sqr() > 1.0 - NORM_TOL)?;
        Some(i as u64)
    }

    fn apply_prim(&mut self, g: Prim) {
        let a = &mut self.amplitudes;
        let bit = |i: usize, w: u32| (i >> w) & 1 == 1;
        let im = Complex64::new(0.0, 1.0);
        match g {
            Prim::X(t) => pairs(a, t, |a0, a1| (a1, a0)),
            Prim::Y(t) => pairs(a, t, |a0, a1| (-im * a1, im * a0)),
            Prim::Z(t) => pairs(a, t, |a0, a1| (a0, -a1)),
            Prim::H(t) => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                pairs(a, t, |a0, a1| ((a0 + a1) * s, (a0 - a1) * s))
            }
            Prim::S(t) => pairs(a, t, |a0, a1| (a0, im * a1)),
            Prim::Sinv(t) => pairs(a, t, |a0, a1| (a0, -im * a1)),
            Prim::Cnot(c, t) => permute(a, |i| if bit(i, c) { i ^ (1 << t) } else { i }),
            Prim::Cz(x, y) => {
                for (i, v) in a.iter_mut().enumerate() {
                    if bit(i, x) && bit(i, y) {
                        *v = -*v;
                    }
                }
            }
            Prim::Swap(x, y) => permute(a, |i| {
                if bit(i, x) != bit(i, y) {
                    i ^ (1 << x) ^ (1 << y)
                } else {
                    i
                }
            }),
            Prim::Toffoli(c2, c1, t) => {
                permute(a, |i| if bit(i, c2) && bit(i, c1) { i ^ (1 << t) } else { i })
            }
            Prim::Fredkin(c, x, y) => permute(a, |i| {
                if bit(i, c) && bit(i, x) != bit(i, y) {
                    i ^ (1 << x) ^ (1 << y)
                } else {
                    i
                }
            }),
        }
    }

    fn apply_gate(&mut self, g: &Gate) -> Result<(), RefsimError> {
        g.validate(self.n)?;
        match g {
            // Applied directly: equal to the ladder on clean ancillas, and
            // leaves the ancillas untouched for any input.
            Gate::NToffoli { controls, target, .. } => {
                let t = *target;
                let ctl = controls.clone();
                permute(&mut self.amplitudes, |i| {
                    if ctl.iter().all(|c| ((i >> c.wire) & 1 == 1) != c.inverted) {
                        i ^ (1 << t)
                    } else {
                        i
                    }
                });
                Ok(())
            }
            Gate::Classical { .. } => {
                Err(RefsimError::Unsupported("classically controlled gate without outcomes".into()))
            }
            g => {
                let mut prims = Vec::new();
                g.expand_into(&mut prims);
                for (p, _) in prims {
                    self.apply_prim(p);
                }
                Ok(())
            }
        }
    }

    /// Probability of the projection and the renormalized post-measurement state.
    fn project(&self, keep: impl Fn(usize) -> bool) -> (f64, AmplitudeState) {
        let mut out = self.clone();
        let mut w = 0.0;
        for (i, v) in out.amplitudes.iter_mut().enumerate() {
            if keep(i) {
                w += v.norm_sqr();
            } else {
                *v = Complex64::new(0.0, 0.0);
            }
        }
        if w > 0.0 {
            let s = 1.0 / w.sqrt();
            for v in out.amplitudes.iter_mut() {
                *v *= s;
            }
        }
        (w, out)
    }
}

fn pairs(a: &mut [Complex64], t: u32, f: impl Fn(Complex64, Complex64) -> (Complex64, Complex64)) {
    let m = 1usize << t;
    for i in 0..a.len() {
        if i & m == 0 {
            let (n0, n1) = f(a[i], a[i | m]);
            a[i] = n0;
            a[i | m] = n1;
        }
    }
}

fn permute(a: &mut [Complex64], f: impl Fn(usize) -> usize) {
    let old = a.to_vec();
    for (i, v) in old.into_iter().enumerate() {
        a[f(i)] = v;
    }
}

/// Run a circuit on a computational basis input.
pub fn statevector_run(circuit: &Circuit, input: u64) -> Result<AmplitudeState, RefsimError> {
    let mut s = AmplitudeState::basis(circuit.width(), input)?;
    for g in circuit.ops() {
        s.apply_gate(g)?;
        debug_assert!((s.norm_sqr() - 1.0).abs() < NORM_TOL);
    }
    Ok(s)
}

/// Sparse run on a basis input: only nonzero amplitudes are stored, so
/// permutation and phase circuits cost one entry per gate at any width
/// up to 64.
pub fn basis_run(circuit: &Circuit, input: u64) -> Result<BTreeMap<u64, Complex64>, RefsimError> {
    if circuit.width() > 64 {
        return Err(RefsimError::WidthCap(circuit.width()));
    }
    let mut s = BTreeMap::from([(input, Complex64::new(1.0, 0.0))]);
    for g in circuit.ops() {
        g.validate(circuit.width())?;
        match g {
            Gate::NToffoli { controls, target, .. } => {
                s = s
                    .into_iter()
                    .map(|(i, v)| {
                        let fire = controls.iter().all(|c| ((i >> c.wire) & 1 == 1) != c.inverted);
                        (if fire { i ^ (1 << target) } else { i }, v)
                    })
                    .collect();
            }
            Gate::Classical { .. } => {
                return Err(RefsimError::Unsupported("classically controlled gate without outcomes".into()))
            }
            g => {
                let mut prims = Vec::new();
                g.expand_into(&mut prims);
                for (p, _) in prims {
                    s = sparse_prim(&s, p);
                }
            }
        }
    }
    Ok(s)
}

fn sparse_prim(s: &BTreeMap<u64, Complex64>, g: Prim) -> BTreeMap<u64, Complex64> {
    let bit = |i: u64, w: u32| (i >> w) & 1 == 1;
    let im = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut out: BTreeMap<u64, Complex64> = BTreeMap::new();
    let mut put = |i: u64, v: Complex64| *out.entry(i).or_insert(Complex64::new(0.0, 0.0)) += v;
    for (&i, &v) in s {
        match g {
            Prim::X(t) => put(i ^ (1 << t), v),
            Prim::Y(t) => put(i ^ (1 << t), v * if bit(i, t) { -im } else { im }),
            Prim::Z(t) => put(i, if bit(i, t) { -v } else { v }),
            Prim::H(t) => {
                put(i & !(1 << t), v * h);
                put(i | (1 << t), v * if bit(i, t) { -h } else { h });
            }
            Prim::S(t) => put(i, v * if bit(i, t) { im } else { one }),
            Prim::Sinv(t) => put(i, v * if bit(i, t) { -im } else { one }),
            Prim::Cnot(c, t) => put(if bit(i, c) { i ^ (1 << t) } else { i }, v),
            Prim::Cz(a, b) => put(i, if bit(i, a) && bit(i, b) { -v } else { v }),
            Prim::Swap(a, b) => put(if bit(i, a) != bit(i, b) { i ^ (1 << a) ^ (1 << b) } else { i }, v),
            Prim::Toffoli(c2, c1, t) => put(if bit(i, c2) && bit(i, c1) { i ^ (1 << t) } else { i }, v),
            Prim::Fredkin(c, a, b) => {
                put(if bit(i, c) && bit(i, a) != bit(i, b) { i ^ (1 << a) ^ (1 << b) } else { i }, v)
            }
        }
    }
    out.retain(|_, v| v.norm_sqr() > PRUNE);
    out
}

/// Born-rule distribution of an experiment's outcome record. Measurements
/// branch the state; classically controlled gates follow each branch.
/// Supports Z-basis preparations (X and Y eigenstates are reached by H and S)
/// and Z, X, Y and all-zero measurements.
pub fn ideal_distribution(e: &Experiment) -> Result<RealDistribution, RefsimError> {
    let n = e.width();
    let mut init = 0u64;
    let mut basis_fix = Vec::new();
    for (w, p) in e.preps().iter().enumerate() {
        match *p {
            Prep::Basis(Basis::Z, v) => init |= (v as u64) << w,
            Prep::Basis(Basis::X, v) => {
                init |= (v as u64) << w;
                basis_fix.push(Gate::H(w));
            }
            Prep::Basis(Basis::Y, v) => {
                init |= (v as u64) << w;
                basis_fix.push(Gate::H(w));
                basis_fix.push(Gate::S(w));
            }
            other => return Err(RefsimError::Unsupported(format!("preparation {other:?}"))),
        }
    }
    let mut s = AmplitudeState::basis(n, init)?;
    for g in &basis_fix {
        s.apply_gate(g)?;
    }
    let mut probs = BTreeMap::new();
    branch(e.steps(), s, 0, 0, 1.0, &mut probs)?;
    Ok(RealDistribution::new(e.outcome_bits(), probs))
}

fn branch(
    steps: &[Step],
    mut s: AmplitudeState,
    rec: u64,
    nrec: usize,
    weight: f64,
    probs: &mut BTreeMap<u64, f64>,
) -> Result<(), RefsimError> {
    for (i, step) in steps.iter().enumerate() {
        match step {
            Step::Gate(Gate::Classical { bit, gate }) => {
                if (rec >> bit) & 1 == 1 {
                    s.apply_gate(gate)?;
                }
            }
            Step::Gate(g) => s.apply_gate(g)?,
            Step::Measure(m) => {
                let (pre, post): (Vec<Gate>, Vec<Gate>) = match m {
                    MeasurementSpec::Z(_) | MeasurementSpec::AllZeroTest(_) => (vec![], vec![]),
                    MeasurementSpec::X(w) => (vec![Gate::H(*w)], vec![Gate::H(*w)]),
                    MeasurementSpec::Y(w) => {
                        (vec![Gate::Sinv(*w), Gate::H(*w)], vec![Gate::H(*w), Gate::S(*w)])
                    }
                    other => return Err(RefsimError::Unsupported(format!("measurement {other:?}"))),
                };
                for g in &pre {
                    s.apply_gate(g)?;
                }
                let test: Box<dyn Fn(usize, bool) -> bool> = match m {
                    MeasurementSpec::AllZeroTest(r) => {
                        let mask: usize = r.clone().map(|w| 1usize << w).sum();
                        Box::new(move |i, o| (i & mask == 0) == o)
                    }
                    MeasurementSpec::Z(w) | MeasurementSpec::X(w) | MeasurementSpec::Y(w) => {
                        let w = *w;
                        Box::new(move |i, o| ((i >> w) & 1 == 1) == o)
                    }
                    _ => unreachable!(),
                };
                for o in [false, true] {
                    let (pw, mut next) = s.project(|i| test(i, o));
                    if pw * weight < PRUNE {
                        continue;
                    }
                    for g in &post {
                        next.apply_gate(g)?;
                    }
                    branch(
                        &steps[i + 1..],
                        next,
                        rec | ((o as u64) << nrec),
                        nrec + 1,
                        weight * pw,
                        probs,
                    )?;
                }
                return Ok(());
            }
        }
    }
    *probs.entry(rec).or_insert(0.0) += weight;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hadamard_on_zero() {
        let mut c = Circuit::new(1);
        c.push(Gate::H(0)).unwrap();
        let s = statevector_run(&c, 0).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amplitudes[0].re - h).abs() < 1e-12);
        assert!((s.amplitudes[1].re - h).abs() < 1e-12);
    }

    #[test]
    fn s_squared_is_z() {
        let mut c = Circuit::new(1);
        c.push(Gate::H(0)).unwrap().push(Gate::S(0)).unwrap().push(Gate::S(0)).unwrap().push(Gate::H(0)).unwrap();
        let s = statevector_run(&c, 0).unwrap();
        assert_eq!(s.as_basis_state(), Some(1));
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let mut c = Circuit::new(3);
        for g in [Gate::H(0), Gate::cnot(0, 1), Gate::S(1), Gate::toffoli(0, 1, 2), Gate::Y(2), Gate::H(0)] {
            c.push(g).unwrap();
        }
        for input in 0..8 {
            let dense = statevector_run(&c, input).unwrap();
            let sparse = basis_run(&c, input).unwrap();
            for (i, a) in dense.amplitudes.iter().enumerate() {
                let b = sparse.get(&(i as u64)).copied().unwrap_or_default();
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn width_cap() {
        assert!(statevector_run(&Circuit::new(15), 0).is_err());
    }
}
