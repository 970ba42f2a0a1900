//! Cycle-type combinatorics of the symmetric group `Sₙ`.
//!
//! Conjugacy classes of `Sₙ` are indexed by cycle types, i.e. partitions
//! of `n` written as multiplicities `N_l` (the number of `l`-cycles).
//! For a permutation `g` of type `N` acting on `Xⁿ`:
//!
//! - the centralizer has order `∏ N_l! · l^{N_l}`;
//! - the fixed locus is `∏_l X^{N_l}` (one diagonal copy of `X` per cycle),
//!   and its quotient by the centralizer is `∏_l X^{(N_l)}`;
//! - the grading shift of the sector is half the complex codimension of the
//!   fixed locus.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::series::HalfExp;

/// A partition of `n`, stored as cycle-length multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    n: u32,
    mult: BTreeMap<u32, u32>,
}

impl CycleType {
    /// Builds from a list of cycle lengths (any order; zeros ignored).
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut mult = BTreeMap::new();
        let mut n = 0;
        for &l in parts.iter().filter(|&&l| l > 0) {
            *mult.entry(l).or_insert(0) += 1;
            n += l;
        }
        CycleType { n, mult }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `N_l`, zero when there are no `l`-cycles.
    pub fn multiplicity(&self, l: u32) -> u32 {
        self.mult.get(&l).copied().unwrap_or(0)
    }

    /// `(l, N_l)` for every cycle length present, `l` ascending.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mult.iter().map(|(l, n)| (*l, *n))
    }

    /// Cycle lengths in descending order, with repetition.
    pub fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::new();
        for (&l, &n) in self.mult.iter().rev() {
            parts.extend(core::iter::repeat_n(l, n as usize));
        }
        parts
    }

    /// Total number of cycles `Σ N_l`.
    pub fn num_cycles(&self) -> u32 {
        self.mult.values().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.mult.keys().all(|&l| l == 1)
    }
}

/// All cycle types of `Sₙ`, ordered by their descending part lists in
/// reverse lexicographic order: `[n]`, `[n-1, 1]`, …, `[1, …, 1]`.
pub fn cycle_types(n: u32) -> Vec<CycleType> {
    fn rec(left: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<CycleType>) {
        if left == 0 {
            out.push(CycleType::from_parts(current));
            return;
        }
        for part in (1..=left.min(max)).rev() {
            current.push(part);
            rec(left - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut vec![], &mut out);
    out
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `|Z_g| = ∏_l N_l! · l^{N_l}`.
pub fn centralizer_order(c: &CycleType) -> BigUint {
    c.multiplicities().fold(BigUint::one(), |acc, (l, n)| {
        acc * factorial(n) * BigUint::from(l).pow(n)
    })
}

/// Size of the conjugacy class, `n! / |Z_g|`.
pub fn class_size(c: &CycleType) -> BigUint {
    factorial(c.n) / centralizer_order(c)
}

/// Copies of `X` in the fixed locus, grouped by cycle length: `l ↦ N_l`.
pub fn fixed_locus_factors(c: &CycleType) -> BTreeMap<u32, u32> {
    c.mult.clone()
}

/// Grading shift of a sector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShiftData {
    /// Real codimension of the fixed locus in `Xⁿ`.
    pub codim_real: u32,
    /// Bigrading shift `F_g`: half the complex codimension. Its doubled value
    /// is `codim_real / 2`, which is also the shift of the real cohomological
    /// degree.
    pub f: HalfExp,
}

/// Shift of the sector of type `c` for `X` of real dimension `dim_real`
/// (even).
pub fn shift_of(c: &CycleType, dim_real: u32) -> ShiftData {
    debug_assert!(dim_real.is_multiple_of(2), "real dimension must be even");
    let excess: u32 = c.multiplicities().map(|(l, n)| (l - 1) * n).sum();
    let codim_real = dim_real * excess;
    ShiftData {
        codim_real,
        f: HalfExp::from_doubled((codim_real / 2) as i32),
    }
}
