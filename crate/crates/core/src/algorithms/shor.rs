use crate::engine::{run, Experiment};
use crate::kernel::{Gate, RandomSource};
use crate::oracles::{shor15_multiplier_with, MultiplierConstruction};

use super::AlgorithmError;

/// Retry bound for [`shor_factor15`].
pub const SHOR_MAX_SAMPLES: usize = 16;

const N: u64 = 15;

fn pow_mod(a: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * a % m)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Smallest `r >= 1` with `a^r ≡ 1 (mod m)`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if gcd(a, m) != 1 {
        return None;
    }
    (1..=m).find(|&r| pow_mod(a, r, m) == 1)
}

/// Denominator of the last convergent of `y / q` whose denominator is at
/// most `rmax`. `None` for `y = 0`.
pub fn continued_fraction_r(y: u64, q: u64, rmax: u64) -> Option<u64> {
    if y == 0 || y >= q {
        return None;
    }
    let (mut num, mut den) = (y, q);
    // Convergent denominators k_{-1} = 0, k_0 = 1.
    let (mut k_prev, mut k) = (0u64, 1u64);
    let mut best = None;
    // y/q < 1 so the leading term is 0; walk the remaining terms.
    while num != 0 {
        let t = den / num;
        (den, num) = (num, den % num);
        let next = t * k + k_prev;
        if next > rmax {
            break;
        }
        (k_prev, k) = (k, next);
        best = Some(k);
    }
    best
}

/// Order-finding circuit for `a` mod 15 with the default multipliers.
pub fn shor15_experiment(a: u64) -> Result<Experiment, AlgorithmError> {
    shor15_experiment_with(a, MultiplierConstruction::SwapNetwork)
}

/// Query wires 0..3, answer wires 3..7 prepared at 1, plus a multiplier
/// ancilla on wire 7 when the construction uses one. Query wire `k` controls
/// `×a^(2^k)`; the `k = 2` stage is the identity for every `a` and is
/// omitted. The inverse transform is semiclassical: measure wire 2, then
/// `S⁻¹` on wire 1 if that bit was 1, measure wire 1, `S⁻¹` on wire 0 if the
/// second bit was 1, measure wire 0. The outcome value is `y`.
pub fn shor15_experiment_with(a: u64, construction: MultiplierConstruction) -> Result<Experiment, AlgorithmError> {
    let stages = [shor15_multiplier_with(a, 1, construction)?, shor15_multiplier_with(a, 2, construction)?];
    let ancilla = stages.iter().any(|s| !s.ancillas.is_empty());
    let mut e = Experiment::new(7 + ancilla as usize);
    e.prepare_value(&[3, 4, 5, 6], 1);
    e.hadamard(0..3);
    for (k, stage) in stages.iter().enumerate() {
        if stage.circuit.is_empty() {
            continue;
        }
        let mut map = vec![k, 3, 4, 5, 6];
        if !stage.ancillas.is_empty() {
            map.push(7);
        }
        e.circuit_mapped(&stage.circuit, &map);
    }
    e.gate(Gate::H(2));
    let y0 = e.measure_z([2]);
    e.gate(Gate::classical(y0, Gate::Sinv(1)));
    e.gate(Gate::H(1));
    let y1 = e.measure_z([1]);
    e.gate(Gate::classical(y1, Gate::Sinv(0)));
    e.gate(Gate::H(0));
    e.measure_z([0]);
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShorOutcome {
    pub a: u64,
    pub samples: Vec<u64>,
    pub r: Option<u64>,
    pub factors: Option<(u64, u64)>,
}

/// Sample, recover `r` by continued fractions, and take
/// `gcd(a^{r/2} ± 1, 15)`; retry with a fresh stream on odd `r`, a wrong
/// `r`, or trivial factors.
pub fn shor_factor15(a: u64, seed: u64) -> Result<ShorOutcome, AlgorithmError> {
    shor_factor15_with(a, seed, MultiplierConstruction::SwapNetwork)
}

pub fn shor_factor15_with(
    a: u64,
    seed: u64,
    construction: MultiplierConstruction,
) -> Result<ShorOutcome, AlgorithmError> {
    let e = shor15_experiment_with(a, construction)?;
    let mut samples = Vec::new();
    for attempt in 0..SHOR_MAX_SAMPLES {
        let mut rng = RandomSource::new(seed, attempt as u64);
        let y = run(&e, &mut rng)?.0.bits;
        samples.push(y);
        let Some(r) = continued_fraction_r(y, 8, N) else { continue };
        if r % 2 != 0 || pow_mod(a, r, N) != 1 {
            continue;
        }
        let h = pow_mod(a, r / 2, N);
        let (p, q) = (gcd(h + N - 1, N), gcd(h + 1, N));
        if p > 1 && q > 1 && p * q == N {
            return Ok(ShorOutcome { a, samples, r: Some(r), factors: Some((p.min(q), p.max(q))) });
        }
    }
    Ok(ShorOutcome { a, samples, r: None, factors: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continued_fractions() {
        assert_eq!(continued_fraction_r(6, 8, 15), Some(4));
        assert_eq!(continued_fraction_r(4, 8, 15), Some(2));
        assert_eq!(continued_fraction_r(2, 8, 15), Some(4));
        assert_eq!(continued_fraction_r(0, 8, 15), None);
        assert_eq!(continued_fraction_r(3, 8, 15), Some(8));
        assert_eq!(continued_fraction_r(1, 8, 15), Some(8));
    }

    #[test]
    fn orders() {
        let r: Vec<_> = [2, 4, 7, 8, 11, 13].iter().map(|&a| multiplicative_order(a, 15).unwrap()).collect();
        assert_eq!(r, vec![4, 2, 4, 4, 2, 4]);
        assert_eq!(multiplicative_order(5, 15), None);
    }
}
