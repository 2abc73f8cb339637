//! Lane types used by the bit-sliced executor.
//!
//! Gate maps are written once against [`Bits`]. `bool` gives the scalar
//! kernel; [`Lanes`] packs 1024 independent executions into one value so a
//! single pass over a circuit advances all of them.

use std::ops::{BitAnd, BitOr, BitXor, BitXorAssign, Not};

pub trait Bits:
    Copy
    + PartialEq
    + BitXor<Output = Self>
    + BitAnd<Output = Self>
    + BitOr<Output = Self>
    + Not<Output = Self>
    + BitXorAssign
{
    /// Number of independent lanes.
    const LANES: usize;

    fn zero() -> Self;
    fn ones() -> Self;
    fn lane(&self, i: usize) -> bool;
    fn from_lanes(f: impl FnMut(usize) -> bool) -> Self;

    /// Bit `slot` of the global lane index `base + lane`, for every lane.
    /// Exact enumeration uses this so lane `k` sees assignment `k`.
    fn counter_pattern(slot: usize, base: u64) -> Self;
}

impl Bits for bool {
    const LANES: usize = 1;

    #[inline]
    fn zero() -> Self {
        false
    }
    #[inline]
    fn ones() -> Self {
        true
    }
    #[inline]
    fn lane(&self, _i: usize) -> bool {
        *self
    }
    fn from_lanes(mut f: impl FnMut(usize) -> bool) -> Self {
        f(0)
    }
    #[inline]
    fn counter_pattern(slot: usize, base: u64) -> Self {
        (base >> slot) & 1 == 1
    }
}

pub const LANE_WORDS: usize = 16;

/// 1024 lanes as sixteen machine words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Lanes(pub [u64; LANE_WORDS]);

const WORD_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

macro_rules! lanewise {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for Lanes {
            type Output = Lanes;
            #[inline(always)]
            fn $f(self, rhs: Lanes) -> Lanes {
                let mut out = [0u64; LANE_WORDS];
                for i in 0..LANE_WORDS {
                    out[i] = self.0[i] $op rhs.0[i];
                }
                Lanes(out)
            }
        }
    };
}

lanewise!(BitXor, bitxor, ^);
lanewise!(BitAnd, bitand, &);
lanewise!(BitOr, bitor, |);

impl Not for Lanes {
    type Output = Lanes;
    #[inline(always)]
    fn not(self) -> Lanes {
        let mut out = self.0;
        for w in out.iter_mut() {
            *w = !*w;
        }
        Lanes(out)
    }
}

impl BitXorAssign for Lanes {
    #[inline(always)]
    fn bitxor_assign(&mut self, rhs: Lanes) {
        for i in 0..LANE_WORDS {
            self.0[i] ^= rhs.0[i];
        }
    }
}

impl Bits for Lanes {
    const LANES: usize = 64 * LANE_WORDS;

    #[inline]
    fn zero() -> Self {
        Lanes([0; LANE_WORDS])
    }
    #[inline]
    fn ones() -> Self {
        Lanes([u64::MAX; LANE_WORDS])
    }
    #[inline]
    fn lane(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }
    fn from_lanes(mut f: impl FnMut(usize) -> bool) -> Self {
        let mut out = [0u64; LANE_WORDS];
        for (w, word) in out.iter_mut().enumerate() {
            for b in 0..64 {
                if f(w * 64 + b) {
                    *word |= 1 << b;
                }
            }
        }
        Lanes(out)
    }
    fn counter_pattern(slot: usize, base: u64) -> Self {
        let mut out = [0u64; LANE_WORDS];
        for (w, word) in out.iter_mut().enumerate() {
            *word = if slot < 6 {
                WORD_PATTERNS[slot]
            } else if slot < 64 && ((base + 64 * w as u64) >> slot) & 1 == 1 {
                u64::MAX
            } else {
                0
            };
        }
        Lanes(out)
    }
}
