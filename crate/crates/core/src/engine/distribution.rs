use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;

/// A measurement record: outcome bit `k` is the k-th recorded bit, and the
/// string form prints the last recorded bit first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Outcome {
    pub bits: u64,
    pub len: usize,
}

impl Outcome {
    pub fn new(bits: u64, len: usize) -> Self {
        Outcome { bits, len }
    }

    pub fn bit(&self, k: usize) -> bool {
        (self.bits >> k) & 1 == 1
    }

    /// Bits `start..start+len` as an integer.
    pub fn field(&self, start: usize, len: usize) -> u64 {
        (self.bits >> start) & mask(len)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bitstring(self.bits, self.len))
    }
}

pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Fixed-width binary string, most significant bit first.
pub fn bitstring(value: u64, len: usize) -> String {
    (0..len).rev().map(|k| if (value >> k) & 1 == 1 { '1' } else { '0' }).collect()
}

/// Parse a most-significant-first binary string.
pub fn parse_bitstring(s: &str) -> Option<(u64, usize)> {
    if s.len() > 64 || s.is_empty() {
        return None;
    }
    let mut v = 0u64;
    for ch in s.chars() {
        v = (v << 1)
            | match ch {
                '0' => 0,
                '1' => 1,
                _ => return None,
            };
    }
    Some((v, s.len()))
}

/// Outcome distribution as integer weights over a common total.
///
/// Exact distributions use `total = 2^budget` (one unit per enumerated
/// assignment of the free random bits); empirical ones use the trial count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    bits: usize,
    counts: BTreeMap<u64, u64>,
    total: u64,
    exact: bool,
}

impl Distribution {
    pub fn from_counts(bits: usize, counts: BTreeMap<u64, u64>, exact: bool) -> Self {
        let counts: BTreeMap<u64, u64> = counts.into_iter().filter(|(_, c)| *c > 0).collect();
        let total = counts.values().sum();
        Distribution { bits, counts, total, exact }
    }

    pub fn point(bits: usize, outcome: u64) -> Self {
        Distribution { bits, counts: BTreeMap::from([(outcome, 1)]), total: 1, exact: true }
    }

    pub fn outcome_bits(&self) -> usize {
        self.bits
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn count(&self, outcome: u64) -> u64 {
        self.counts.get(&outcome).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// Reduced probability of one outcome.
    pub fn probability(&self, outcome: u64) -> Ratio<u64> {
        Ratio::new(self.count(outcome), self.total)
    }

    pub fn prob(&self, outcome: u64) -> f64 {
        self.count(outcome) as f64 / self.total as f64
    }

    /// Probability of the set of outcomes satisfying `pred`.
    pub fn probability_where(&self, pred: impl Fn(u64) -> bool) -> Ratio<u64> {
        let c: u64 = self.counts.iter().filter(|(k, _)| pred(**k)).map(|(_, c)| *c).sum();
        Ratio::new(c, self.total)
    }

    pub fn support(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, Ratio<u64>)> + '_ {
        self.counts.iter().map(move |(k, c)| (*k, Ratio::new(*c, self.total)))
    }

    /// The single outcome, when the distribution is a point mass.
    pub fn point_mass(&self) -> Option<u64> {
        if self.counts.len() == 1 {
            self.counts.keys().next().copied()
        } else {
            None
        }
    }

    /// Push the distribution through `f`, keeping `bits` output bits.
    pub fn map(&self, bits: usize, f: impl Fn(u64) -> u64) -> Distribution {
        let mut counts = BTreeMap::new();
        for (k, c) in &self.counts {
            *counts.entry(f(*k)).or_insert(0) += c;
        }
        Distribution { bits, counts, total: self.total, exact: self.exact }
    }

    /// Exact distributions have denominators dividing a power of two.
    pub fn is_dyadic(&self) -> bool {
        self.iter().all(|(_, r)| r.denom().is_power_of_two())
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        f.write_str("{")?;
        for (k, r) in self.iter() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{}: {}", bitstring(k, self.bits), r)?;
        }
        f.write_str("}")
    }
}
