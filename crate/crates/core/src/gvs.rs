//! Graded and bigraded vector spaces, kept as dimension functions.
//!
//! Degrees live in `½ℤ` (see [`HalfExp`]). Super-parity follows the
//! integer grading: a graded class of degree `d` is odd iff `d` is odd
//! (half-integer degrees have no parity and are rejected by the symmetric
//! power), a bigraded class at `(p, q)` is odd iff `p + q` is odd.
//!
//! [`GradedDims::sym_power`] is computed by sequential per-generator
//! convolution; [`GradedDims::sym_power_oracle`] enumerates an explicit
//! monomial basis and is kept as an independent check.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::ops::Add;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::series::{HalfExp, Monomial, Series, VarId};
use crate::{Error, Rational, Result};

/// A bidegree `(p, q) ∈ ½ℤ × ½ℤ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiDegree {
    pub p: HalfExp,
    pub q: HalfExp,
}

impl BiDegree {
    pub const fn new(p: HalfExp, q: HalfExp) -> Self {
        BiDegree { p, q }
    }

    pub const fn ints(p: i32, q: i32) -> Self {
        BiDegree::new(HalfExp::from_int(p), HalfExp::from_int(q))
    }

    /// `p + q`, an integer for admissible bidegrees.
    pub fn total(self) -> HalfExp {
        self.p + self.q
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.p + rhs.p, self.q + rhs.q)
    }
}

/// One basis element of a graded space as seen by the symmetric power.
#[derive(Clone, Copy, Debug)]
struct Generator<K> {
    degree: K,
    odd: bool,
}

fn sym_power_dp<K>(gens: &[(K, u64, bool)], n: usize) -> BTreeMap<K, u64>
where
    K: Ord + Copy + Add<Output = K> + Default,
{
    // table[c] = dimension function of the degree-c part built so far
    let mut table: Vec<BTreeMap<K, u64>> = (0..=n).map(|_| BTreeMap::new()).collect();
    table[0].insert(K::default(), 1);
    for &(deg, mult, odd) in gens {
        for _ in 0..mult {
            if odd {
                // factor (1 + L): each generator used at most once
                for c in (1..=n).rev() {
                    let add: Vec<(K, u64)> =
                        table[c - 1].iter().map(|(k, v)| (*k + deg, *v)).collect();
                    for (k, v) in add {
                        *table[c].entry(k).or_insert(0) += v;
                    }
                }
            } else {
                // factor 1/(1 - L): unbounded multiplicity
                for c in 1..=n {
                    let add: Vec<(K, u64)> =
                        table[c - 1].iter().map(|(k, v)| (*k + deg, *v)).collect();
                    for (k, v) in add {
                        *table[c].entry(k).or_insert(0) += v;
                    }
                }
            }
        }
    }
    table.swap_remove(n)
}

fn sym_power_enumerate<K>(gens: &[Generator<K>], n: usize) -> BTreeMap<K, u64>
where
    K: Ord + Copy + Add<Output = K> + Default,
{
    fn rec<K: Ord + Copy + Add<Output = K>>(
        gens: &[Generator<K>],
        start: usize,
        left: usize,
        deg: K,
        out: &mut BTreeMap<K, u64>,
    ) {
        if left == 0 {
            *out.entry(deg).or_insert(0) += 1;
            return;
        }
        for i in start..gens.len() {
            // odd generators square to zero: strictly increasing indices
            let next = if gens[i].odd { i + 1 } else { i };
            rec(gens, next, left - 1, deg + gens[i].degree, out);
        }
    }
    let mut out = BTreeMap::new();
    rec(gens, 0, n, K::default(), &mut out);
    out
}

fn convolve<K>(a: &BTreeMap<K, u64>, b: &BTreeMap<K, u64>) -> BTreeMap<K, u64>
where
    K: Ord + Copy + Add<Output = K>,
{
    let mut out = BTreeMap::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            *out.entry(*ka + *kb).or_insert(0) += va * vb;
        }
    }
    out
}

fn merge<K: Ord + Copy>(a: &BTreeMap<K, u64>, b: &BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(*k).or_insert(0) += v;
    }
    out
}

/// Dimension function of a `½ℤ`-graded space: degree ↦ dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    dims: BTreeMap<HalfExp, u64>,
}

impl GradedDims {
    pub fn new() -> Self {
        GradedDims::default()
    }

    /// The one-dimensional space in degree 0.
    pub fn unit() -> Self {
        let mut v = GradedDims::new();
        v.add(HalfExp::ZERO, 1);
        v
    }

    /// Builds from Betti numbers `b_0, b_1, …` in integer degrees.
    pub fn from_betti(betti: &[u64]) -> Self {
        let mut v = GradedDims::new();
        for (d, &b) in betti.iter().enumerate() {
            v.add(HalfExp::from_int(d as i32), b);
        }
        v
    }

    pub fn add(&mut self, degree: HalfExp, dim: u64) {
        if dim > 0 {
            *self.dims.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: HalfExp) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (HalfExp, u64)> + '_ {
        self.dims.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// `V[s]` with `V[s]_d = V_{d-s}`.
    pub fn shift(&self, s: HalfExp) -> GradedDims {
        GradedDims {
            dims: self.dims.iter().map(|(k, v)| (*k + s, *v)).collect(),
        }
    }

    pub fn dsum(&self, other: &GradedDims) -> GradedDims {
        GradedDims {
            dims: merge(&self.dims, &other.dims),
        }
    }

    pub fn tensor(&self, other: &GradedDims) -> GradedDims {
        GradedDims {
            dims: convolve(&self.dims, &other.dims),
        }
    }

    fn generators(&self) -> Result<Vec<(HalfExp, u64, bool)>> {
        self.dims
            .iter()
            .map(|(d, b)| match d.to_integer() {
                Some(i) => Ok((*d, *b, i.rem_euclid(2) == 1)),
                None => Err(Error::usage(format!(
                    "graded symmetric power needs integer degrees, found {}",
                    d
                ))),
            })
            .collect()
    }

    /// The `n`-th graded symmetric power `Sⁿ(V)`.
    pub fn sym_power(&self, n: usize) -> Result<GradedDims> {
        let gens = self.generators()?;
        Ok(GradedDims {
            dims: sym_power_dp(&gens, n),
        })
    }

    /// `Sⁿ(V)` by explicit basis enumeration. Exponential in `n`.
    pub fn sym_power_oracle(&self, n: usize) -> Result<GradedDims> {
        let mut gens = Vec::new();
        for (d, b, odd) in self.generators()? {
            for _ in 0..b {
                gens.push(Generator { degree: d, odd });
            }
        }
        Ok(GradedDims {
            dims: sym_power_enumerate(&gens, n),
        })
    }

    /// `Σ b_d t^d` as an exact series (truncation variable `q`, no `q`).
    pub fn poincare_poly(&self) -> Series {
        let mut s = Series::zero(VarId::Q, Series::EXACT);
        for (d, b) in &self.dims {
            s.push(
                Monomial::ONE.with(VarId::T, *d),
                Rational::from_integer((*b).into()),
            )
            .expect("no truncation exponent");
        }
        s
    }

    /// `Σ (-1)^d b_d`; requires integer degrees.
    pub fn euler_characteristic(&self) -> Result<BigInt> {
        let mut chi = BigInt::zero();
        for (_, b, odd) in self.generators()? {
            if odd {
                chi -= b;
            } else {
                chi += b;
            }
        }
        Ok(chi)
    }
}

/// Dimension function of a `½ℤ × ½ℤ`-graded space with `p + q ∈ ℤ` on its
/// support.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BigradedDims {
    dims: BTreeMap<BiDegree, u64>,
}

impl BigradedDims {
    pub fn new() -> Self {
        BigradedDims::default()
    }

    pub fn unit() -> Self {
        let mut w = BigradedDims::new();
        w.dims.insert(BiDegree::default(), 1);
        w
    }

    /// Builds from a table `h[p][q]` of integer bidegrees.
    pub fn from_table<R: AsRef<[u64]>>(table: &[R]) -> Self {
        let mut w = BigradedDims::new();
        for (p, row) in table.iter().enumerate() {
            for (q, &h) in row.as_ref().iter().enumerate() {
                if h > 0 {
                    w.dims.insert(BiDegree::ints(p as i32, q as i32), h);
                }
            }
        }
        w
    }

    /// Adds `dim` at `deg`; rejects bidegrees with `p + q ∉ ℤ`.
    pub fn add(&mut self, deg: BiDegree, dim: u64) -> Result<()> {
        if !deg.total().is_integer() {
            return Err(Error::usage(format!(
                "bidegree ({}, {}) has non-integral total degree",
                deg.p, deg.q
            )));
        }
        if dim > 0 {
            *self.dims.entry(deg).or_insert(0) += dim;
        }
        Ok(())
    }

    pub fn get(&self, deg: BiDegree) -> u64 {
        self.dims.get(&deg).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (BiDegree, u64)> + '_ {
        self.dims.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// `W[l, m]`: translate every bidegree by `(l, m)`; `l + m` must be an
    /// integer.
    pub fn shift2(&self, l: HalfExp, m: HalfExp) -> Result<BigradedDims> {
        if !(l + m).is_integer() {
            return Err(Error::usage(
                "bigraded shift must have integral total degree",
            ));
        }
        let s = BiDegree::new(l, m);
        Ok(BigradedDims {
            dims: self.dims.iter().map(|(k, v)| (*k + s, *v)).collect(),
        })
    }

    pub fn dsum(&self, other: &BigradedDims) -> BigradedDims {
        BigradedDims {
            dims: merge(&self.dims, &other.dims),
        }
    }

    pub fn tensor(&self, other: &BigradedDims) -> BigradedDims {
        BigradedDims {
            dims: convolve(&self.dims, &other.dims),
        }
    }

    fn generators(&self) -> Vec<(BiDegree, u64, bool)> {
        self.dims
            .iter()
            .map(|(d, b)| (*d, *b, (d.total().doubled() / 2).rem_euclid(2) == 1))
            .collect()
    }

    pub fn sym_power(&self, n: usize) -> BigradedDims {
        BigradedDims {
            dims: sym_power_dp(&self.generators(), n),
        }
    }

    pub fn sym_power_oracle(&self, n: usize) -> BigradedDims {
        let mut gens = Vec::new();
        for (d, b, odd) in self.generators() {
            for _ in 0..b {
                gens.push(Generator { degree: d, odd });
            }
        }
        BigradedDims {
            dims: sym_power_enumerate(&gens, n),
        }
    }

    /// `Σ h_{p,q} x^p y^q` as an exact series.
    pub fn hodge_poly(&self) -> Series {
        let mut s = Series::zero(VarId::Q, Series::EXACT);
        for (d, h) in &self.dims {
            let m = Monomial::ONE.with(VarId::X, d.p).with(VarId::Y, d.q);
            s.push(m, Rational::from_integer((*h).into()))
                .expect("no truncation exponent");
        }
        s
    }

    /// Forgets to the total degree `p + q`.
    pub fn total_grading(&self) -> GradedDims {
        let mut v = GradedDims::new();
        for (d, h) in &self.dims {
            v.add(d.total(), *h);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gd(pairs: &[(i32, u64)]) -> GradedDims {
        let mut v = GradedDims::new();
        for &(d, b) in pairs {
            v.add(HalfExp::from_int(d), b);
        }
        v
    }

    fn k3() -> BigradedDims {
        BigradedDims::from_table(&[[1, 0, 1], [0, 20, 0], [1, 0, 1]])
    }

    #[test]
    fn shift_translates() {
        let v = gd(&[(0, 1), (2, 1)]);
        assert_eq!(v.shift(HalfExp::from_int(1)), gd(&[(1, 1), (3, 1)]));
        assert_eq!(v.shift(HalfExp::ZERO), v);
    }

    #[test]
    fn shift2_of_k3_by_half() {
        let half = HalfExp::from_doubled(1);
        let w = k3().shift2(half, half).unwrap();
        let support: Vec<(i32, i32)> = w
            .iter()
            .map(|(d, _)| (d.p.doubled(), d.q.doubled()))
            .collect();
        assert_eq!(support, [(1, 1), (1, 5), (3, 3), (5, 1), (5, 5)]);
        assert_eq!(
            w.get(BiDegree::new(
                HalfExp::from_doubled(3),
                HalfExp::from_doubled(3)
            )),
            20
        );
        assert!(k3().shift2(half, HalfExp::ZERO).is_err());
    }

    #[test]
    fn dsum_and_tensor() {
        assert_eq!(gd(&[(0, 1)]).dsum(&gd(&[(0, 2)])), gd(&[(0, 3)]));
        assert_eq!(gd(&[(0, 1)]).tensor(&gd(&[(3, 5)])), gd(&[(3, 5)]));
        let a = gd(&[(0, 1), (1, 1)]);
        assert_eq!(a.tensor(&a), gd(&[(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn sym_power_examples() {
        assert_eq!(
            gd(&[(0, 1), (2, 1)]).sym_power(2).unwrap(),
            gd(&[(0, 1), (2, 1), (4, 1)])
        );
        assert!(gd(&[(1, 1)]).sym_power(2).unwrap().is_zero());
        assert_eq!(
            gd(&[(0, 1), (1, 1)]).sym_power(2).unwrap(),
            gd(&[(0, 1), (1, 1)])
        );
        assert_eq!(gd(&[(1, 2)]).sym_power_oracle(2).unwrap(), gd(&[(2, 1)]));
        assert_eq!(
            gd(&[(0, 3), (5, 2)]).sym_power(0).unwrap(),
            GradedDims::unit()
        );
        assert_eq!(
            gd(&[(0, 3), (5, 2)]).sym_power_oracle(0).unwrap(),
            GradedDims::unit()
        );
    }

    #[test]
    fn half_integer_graded_degree_is_rejected() {
        let mut v = GradedDims::new();
        v.add(HalfExp::from_doubled(1), 1);
        assert!(matches!(v.sym_power(2), Err(Error::Usage(_))));
        assert!(v.euler_characteristic().is_err());
    }

    #[test]
    fn half_integer_bidegrees_use_total_parity() {
        // (1/2, 1/2) has total degree 1: odd, so its square vanishes
        let mut w = BigradedDims::new();
        let half = HalfExp::from_doubled(1);
        w.add(BiDegree::new(half, half), 1).unwrap();
        assert!(w.sym_power(2).is_zero());
        assert!(w.add(BiDegree::new(half, HalfExp::ZERO), 1).is_err());
    }

    #[test]
    fn polys() {
        assert_eq!(gd(&[(0, 1), (2, 1)]).poincare_poly().to_string(), "1 + t^2");
        assert_eq!(GradedDims::new().poincare_poly().to_string(), "0");
        assert_eq!(
            k3().hodge_poly().to_string(),
            "1 + y^2 + 20*x*y + x^2 + x^2*y^2"
        );
    }
}
