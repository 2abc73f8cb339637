//! Distances and summary measures between outcome distributions.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::engine::Distribution;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("outcome spaces differ: {0} bits vs {1} bits")]
    MismatchedSpaces(usize, usize),
}

/// Anything that assigns probabilities to fixed-width outcomes.
pub trait Probabilities {
    fn outcome_bits(&self) -> usize;
    fn probability_map(&self) -> BTreeMap<u64, f64>;
}

impl Probabilities for Distribution {
    fn outcome_bits(&self) -> usize {
        Distribution::outcome_bits(self)
    }
    fn probability_map(&self) -> BTreeMap<u64, f64> {
        self.counts().keys().map(|k| (*k, self.prob(*k))).collect()
    }
}

/// Real-valued distribution, e.g. Born-rule probabilities.
#[derive(Clone, Debug, PartialEq)]
pub struct RealDistribution {
    pub bits: usize,
    pub probs: BTreeMap<u64, f64>,
}

impl RealDistribution {
    pub fn new(bits: usize, probs: BTreeMap<u64, f64>) -> Self {
        RealDistribution { bits, probs }
    }

    pub fn prob(&self, k: u64) -> f64 {
        self.probs.get(&k).copied().unwrap_or(0.0)
    }
}

impl Probabilities for RealDistribution {
    fn outcome_bits(&self) -> usize {
        self.bits
    }
    fn probability_map(&self) -> BTreeMap<u64, f64> {
        self.probs.clone()
    }
}

fn aligned(
    p: &impl Probabilities,
    q: &impl Probabilities,
) -> Result<Vec<(f64, f64)>, StatsError> {
    if p.outcome_bits() != q.outcome_bits() {
        return Err(StatsError::MismatchedSpaces(p.outcome_bits(), q.outcome_bits()));
    }
    let (pm, qm) = (p.probability_map(), q.probability_map());
    let keys: BTreeSet<u64> = pm.keys().chain(qm.keys()).copied().collect();
    Ok(keys
        .into_iter()
        .map(|k| (pm.get(&k).copied().unwrap_or(0.0), qm.get(&k).copied().unwrap_or(0.0)))
        .collect())
}

/// One minus the Kolmogorov distance: `1 - ½ Σ |P - Q|`.
pub fn statistical_overlap(p: &impl Probabilities, q: &impl Probabilities) -> Result<f64, StatsError> {
    let d: f64 = aligned(p, q)?.iter().map(|(a, b)| (a - b).abs()).sum();
    Ok((1.0 - 0.5 * d).clamp(0.0, 1.0))
}

/// Square root of the statistical overlap.
pub fn fidelity(p: &impl Probabilities, q: &impl Probabilities) -> Result<f64, StatsError> {
    Ok(statistical_overlap(p, q)?.sqrt())
}

/// Squared statistical overlap `(Σ √(P Q))²`.
pub fn sso(p: &impl Probabilities, q: &impl Probabilities) -> Result<f64, StatsError> {
    let bc: f64 = aligned(p, q)?.iter().map(|(a, b)| (a * b).sqrt()).sum();
    Ok((bc * bc).clamp(0.0, 1.0))
}

/// Shannon entropy in bits.
pub fn entropy(p: &impl Probabilities) -> f64 {
    let h: f64 = p
        .probability_map()
        .values()
        .filter(|v| **v > 0.0)
        .map(|v| -v * v.log2())
        .sum();
    h.max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(bits: usize, v: &[(u64, f64)]) -> RealDistribution {
        RealDistribution::new(bits, v.iter().copied().collect())
    }

    #[test]
    fn identical_distributions() {
        let p = real(2, &[(0, 0.5), (3, 0.5)]);
        assert_eq!(statistical_overlap(&p, &p).unwrap(), 1.0);
        assert!((sso(&p, &p).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(fidelity(&p, &p).unwrap(), 1.0);
    }

    #[test]
    fn disjoint_supports() {
        let p = real(1, &[(0, 1.0)]);
        let q = real(1, &[(1, 1.0)]);
        assert_eq!(statistical_overlap(&p, &q).unwrap(), 0.0);
        assert_eq!(sso(&p, &q).unwrap(), 0.0);
    }

    #[test]
    fn mismatched_spaces() {
        let p = real(1, &[(0, 1.0)]);
        let q = real(2, &[(0, 1.0)]);
        assert!(sso(&p, &q).is_err());
    }

    #[test]
    fn entropies() {
        assert_eq!(entropy(&real(1, &[(0, 1.0)])), 0.0);
        assert!((entropy(&real(1, &[(0, 0.5), (1, 0.5)])) - 1.0).abs() < 1e-12);
        let u4 = real(2, &[(0, 0.25), (1, 0.25), (2, 0.25), (3, 0.25)]);
        assert!((entropy(&u4) - 2.0).abs() < 1e-12);
    }
}
