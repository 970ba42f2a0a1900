//! Truncated multivariate power series with half-integer exponents.
//!
//! A [`Series`] has one designated truncation variable (`q` or `p`) and an
//! order: terms whose truncation exponent exceeds the order are dropped.
//! Every other variable is exact and may carry negative or half-integer
//! exponents. Exponents are stored doubled so that `½ℤ` is integer
//! bookkeeping; coefficients are exact rationals.

mod expand;
mod render;

pub use expand::var_pow;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// Formal variables used by the generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Q,
    P,
    T,
    X,
    Y,
}

impl VarId {
    pub const ALL: [VarId; 5] = [VarId::Q, VarId::P, VarId::T, VarId::X, VarId::Y];

    fn index(self) -> usize {
        match self {
            VarId::Q => 0,
            VarId::P => 1,
            VarId::T => 2,
            VarId::X => 3,
            VarId::Y => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VarId::Q => "q",
            VarId::P => "p",
            VarId::T => "t",
            VarId::X => "x",
            VarId::Y => "y",
        }
    }

    /// `q` and `p` are the counting variables; only they may truncate a series.
    pub fn is_counting(self) -> bool {
        matches!(self, VarId::Q | VarId::P)
    }

    fn other_counting(self) -> VarId {
        match self {
            VarId::P => VarId::Q,
            _ => VarId::P,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exponent in `½ℤ`, stored as the doubled integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfExp(i32);

impl HalfExp {
    pub const ZERO: HalfExp = HalfExp(0);

    pub const fn from_doubled(doubled: i32) -> Self {
        HalfExp(doubled)
    }

    pub const fn from_int(n: i32) -> Self {
        HalfExp(2 * n)
    }

    pub const fn doubled(self) -> i32 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i32> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// Multiply by an integer.
    pub const fn times(self, n: i32) -> Self {
        HalfExp(self.0 * n)
    }
}

impl Add for HalfExp {
    type Output = HalfExp;
    fn add(self, rhs: HalfExp) -> HalfExp {
        HalfExp(self.0 + rhs.0)
    }
}

impl Sub for HalfExp {
    type Output = HalfExp;
    fn sub(self, rhs: HalfExp) -> HalfExp {
        HalfExp(self.0 - rhs.0)
    }
}

impl Neg for HalfExp {
    type Output = HalfExp;
    fn neg(self) -> HalfExp {
        HalfExp(-self.0)
    }
}

impl fmt::Display for HalfExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A product of powers of the five variables, coefficient-free.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([i32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn var(v: VarId) -> Self {
        Monomial::ONE.with(v, HalfExp::from_int(1))
    }

    /// Returns a copy with the exponent of `v` replaced.
    pub fn with(mut self, v: VarId, e: HalfExp) -> Self {
        self.0[v.index()] = e.doubled();
        self
    }

    /// Returns a copy with the exponent of `v` set to the integer `n`.
    pub fn with_int(self, v: VarId, n: i32) -> Self {
        self.with(v, HalfExp::from_int(n))
    }

    pub fn exp(&self, v: VarId) -> HalfExp {
        HalfExp(self.0[v.index()])
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 5]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a += b;
        }
        out
    }

    pub fn pow(&self, n: i32) -> Monomial {
        Monomial(self.0.map(|e| e * n))
    }

    /// Raises to a half-integer power; fails when an exponent leaves `½ℤ`.
    pub fn pow_half(&self, e: HalfExp) -> Result<Monomial> {
        let mut out = [0; 5];
        for (slot, &d) in out.iter_mut().zip(self.0.iter()) {
            let prod = d * e.doubled();
            if prod % 2 != 0 {
                return Err(Error::usage(format!(
                    "exponent {}/4 is not a half-integer",
                    prod
                )));
            }
            *slot = prod / 2;
        }
        Ok(Monomial(out))
    }
}

type Key = [i32; 5];

/// Canonical storage layout: truncation exponent first, then `t, x, y`, then
/// the other counting variable. Ordering keys lexicographically gives the
/// canonical term order.
fn key_of(trunc: VarId, m: &Monomial) -> Key {
    [
        m.exp(trunc).doubled(),
        m.exp(VarId::T).doubled(),
        m.exp(VarId::X).doubled(),
        m.exp(VarId::Y).doubled(),
        m.exp(trunc.other_counting()).doubled(),
    ]
}

fn mono_of(trunc: VarId, k: &Key) -> Monomial {
    Monomial::ONE
        .with(trunc, HalfExp(k[0]))
        .with(VarId::T, HalfExp(k[1]))
        .with(VarId::X, HalfExp(k[2]))
        .with(VarId::Y, HalfExp(k[3]))
        .with(trunc.other_counting(), HalfExp(k[4]))
}

/// A truncated series with exact rational coefficients.
///
/// Invariants: no zero coefficient is stored, every truncation exponent is a
/// nonnegative integer not exceeding `order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    trunc: VarId,
    order: u32,
    terms: BTreeMap<Key, Rational>,
}

/// First coefficient (in canonical order) at which two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub monomial: Monomial,
    pub left: Rational,
    pub right: Rational,
}

impl Series {
    /// Order used for polynomials in the truncation variable that are known
    /// exactly; combining with a truncated series takes the smaller order.
    pub const EXACT: u32 = u32::MAX;

    pub fn zero(trunc: VarId, order: u32) -> Self {
        assert!(trunc.is_counting(), "truncation variable must be q or p");
        Series {
            trunc,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: VarId, order: u32) -> Self {
        Series::constant(trunc, order, Rational::one())
    }

    pub fn constant(trunc: VarId, order: u32, c: Rational) -> Self {
        let mut s = Series::zero(trunc, order);
        if !c.is_zero() {
            s.terms.insert([0; 5], c);
        }
        s
    }

    /// A single term `c·m`. Fails if the truncation exponent of `m` is not
    /// a nonnegative integer; silently empty if it exceeds `order`.
    pub fn monomial(trunc: VarId, order: u32, m: Monomial, c: Rational) -> Result<Self> {
        let mut s = Series::zero(trunc, order);
        s.push(m, c)?;
        Ok(s)
    }

    pub fn from_terms<I>(trunc: VarId, order: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut s = Series::zero(trunc, order);
        for (m, c) in terms {
            s.push(m, c)?;
        }
        Ok(s)
    }

    /// Adds `c·m` into the series, canonicalizing.
    pub fn push(&mut self, m: Monomial, c: Rational) -> Result<()> {
        let e = m.exp(self.trunc).doubled();
        if e < 0 || e % 2 != 0 {
            return Err(Error::usage(format!(
                "truncation exponent {} of {} must be a nonnegative integer",
                HalfExp(e),
                self.trunc
            )));
        }
        if (e / 2) as u64 > self.order as u64 {
            return Ok(());
        }
        self.add_key(key_of(self.trunc, &m), c);
        Ok(())
    }

    fn add_key(&mut self, k: Key, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn trunc(&self) -> VarId {
        self.trunc
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> + '_ {
        let trunc = self.trunc;
        self.terms.iter().map(move |(k, c)| (mono_of(trunc, k), c))
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .get(&key_of(self.trunc, m))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The coefficient of `trunc^n`, as an exact series with no truncation
    /// exponent.
    pub fn slice(&self, n: u32) -> Series {
        let lo = [2 * n as i32, i32::MIN, i32::MIN, i32::MIN, i32::MIN];
        let hi = [2 * n as i32, i32::MAX, i32::MAX, i32::MAX, i32::MAX];
        let mut out = Series::zero(self.trunc, Series::EXACT);
        for (k, c) in self.terms.range(lo..=hi) {
            let mut k = *k;
            k[0] = 0;
            out.terms.insert(k, c.clone());
        }
        out
    }

    /// Drops everything above `order` (no-op when `order` is larger).
    pub fn truncate(&self, order: u32) -> Series {
        if order >= self.order {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| (k[0] / 2) as u64 <= order as u64)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        Series {
            trunc: self.trunc,
            order,
            terms,
        }
    }

    fn check_same_var(&self, other: &Series) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::usage(format!(
                "truncation variables differ: {} vs {}",
                self.trunc, other.trunc
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_same_var(other)?;
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        for (k, c) in &other.terms {
            if (k[0] / 2) as u64 <= order as u64 {
                out.add_key(*k, c.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            trunc: self.trunc,
            order: self.order,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        if c.is_zero() {
            return Series::zero(self.trunc, self.order);
        }
        Series {
            trunc: self.trunc,
            order: self.order,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies every term by `c·m`, re-imposing truncation.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Result<Series> {
        let shift = key_of(self.trunc, m);
        if shift[0] < 0 || shift[0] % 2 != 0 {
            return Err(Error::usage(
                "monomial factor must have a nonnegative integer truncation exponent",
            ));
        }
        let mut out = Series::zero(self.trunc, self.order);
        if c.is_zero() {
            return Ok(out);
        }
        for (k, v) in &self.terms {
            let mut nk = *k;
            for (a, b) in nk.iter_mut().zip(shift) {
                *a += b;
            }
            if (nk[0] / 2) as u64 <= self.order as u64 {
                out.terms.insert(nk, v * c);
            }
        }
        Ok(out)
    }

    /// Convolution product truncated at the smaller order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_same_var(other)?;
        let order = self.order.min(other.order) as u64;
        let mut acc: BTreeMap<Key, Rational> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            let ea = (ka[0] / 2) as u64;
            if ea > order {
                break;
            }
            for (kb, cb) in &other.terms {
                if ea + (kb[0] / 2) as u64 > order {
                    break;
                }
                let mut k = *ka;
                for (a, b) in k.iter_mut().zip(kb) {
                    *a += b;
                }
                let prod = ca * cb;
                match acc.entry(k) {
                    alloc::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += prod;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Series {
            trunc: self.trunc,
            order: order as u32,
            terms: acc,
        })
    }

    pub fn pow(&self, n: u32) -> Result<Series> {
        let mut out = Series::one(self.trunc, self.order);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Exponent-linear substitution of `var` by a monomial.
    ///
    /// Substituting the truncation variable requires the replacement to
    /// contain exactly one counting variable with a positive integer exponent
    /// `r`; that variable becomes the new truncation variable and the order
    /// is multiplied by `r`. Substituting any other variable may move terms
    /// up in the truncation variable but never down.
    pub fn substitute(&self, var: VarId, replacement: &Monomial) -> Result<Series> {
        if var == self.trunc {
            self.substitute_counting(replacement)
        } else {
            self.substitute_plain(var, replacement)
        }
    }

    fn substitute_counting(&self, replacement: &Monomial) -> Result<Series> {
        let rq = replacement.exp(VarId::Q);
        let rp = replacement.exp(VarId::P);
        let (new_trunc, r) = match (rq.doubled() != 0, rp.doubled() != 0) {
            (true, false) => (VarId::Q, rq),
            (false, true) => (VarId::P, rp),
            _ => {
                return Err(Error::usage(
                    "replacement for the truncation variable must contain exactly one counting variable",
                ))
            }
        };
        let r =
            match r.to_integer() {
                Some(r) if r > 0 => r as u32,
                _ => return Err(Error::usage(
                    "counting variable in the replacement must have a positive integer exponent",
                )),
            };
        let order = if self.order == Series::EXACT {
            Series::EXACT
        } else {
            self.order
                .checked_mul(r)
                .ok_or_else(|| Error::usage("order overflow"))?
        };
        let mut out = Series::zero(new_trunc, order);
        for (m, c) in self.terms() {
            let e = m.exp(self.trunc);
            let rest = m.with(self.trunc, HalfExp::ZERO);
            let nm = rest.mul(&replacement.pow_half(e)?);
            out.push(nm, c.clone())?;
        }
        Ok(out)
    }

    fn substitute_plain(&self, var: VarId, replacement: &Monomial) -> Result<Series> {
        let mut out = Series::zero(self.trunc, self.order);
        for (m, c) in self.terms() {
            let e = m.exp(var);
            let nm = m.with(var, HalfExp::ZERO).mul(&replacement.pow_half(e)?);
            if nm.exp(self.trunc) < m.exp(self.trunc) {
                return Err(Error::usage(
                    "substitution lowers truncation exponents; the result is not determined by the known terms",
                ));
            }
            out.push(nm, c.clone())?;
        }
        Ok(out)
    }

    /// Evaluates the assigned (non-truncation) variables at exact rationals.
    pub fn specialize(&self, assignments: &[(VarId, Rational)]) -> Result<Series> {
        for (v, _) in assignments {
            if *v == self.trunc {
                return Err(Error::usage("cannot specialize the truncation variable"));
            }
        }
        let mut out = Series::zero(self.trunc, self.order);
        for (m, c) in self.terms() {
            let mut nm = m;
            let mut coeff = c.clone();
            for (v, value) in assignments {
                coeff *= rational_pow(value, m.exp(*v))?;
                nm = nm.with(*v, HalfExp::ZERO);
                if coeff.is_zero() {
                    break;
                }
            }
            out.push(nm, coeff)?;
        }
        Ok(out)
    }

    /// Compares coefficients up to the smaller order and returns the first
    /// difference in canonical order.
    pub fn first_difference(&self, other: &Series) -> Option<Difference> {
        let order = self.order.min(other.order);
        let a = self.truncate(order);
        let b = other.truncate(order);
        let mut keys: Vec<&Key> = a.terms.keys().chain(b.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let l = a.terms.get(k).cloned().unwrap_or_else(Rational::zero);
            let r = b.terms.get(k).cloned().unwrap_or_else(Rational::zero);
            if l != r {
                return Some(Difference {
                    monomial: mono_of(self.trunc, k),
                    left: l,
                    right: r,
                });
            }
        }
        None
    }

    /// Equality of coefficients up to the smaller order, same truncation variable.
    pub fn agrees_with(&self, other: &Series) -> bool {
        self.trunc == other.trunc && self.first_difference(other).is_none()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when every non-truncation exponent is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|k| k[1..].iter().all(|e| e % 2 == 0))
    }

    /// The constant coefficient (all exponents zero).
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }
}

/// `value^e` for `e ∈ ½ℤ`, defined only when the result is rational.
fn rational_pow(value: &Rational, e: HalfExp) -> Result<Rational> {
    if e.doubled() == 0 {
        return Ok(Rational::one());
    }
    if value.is_zero() {
        return if e.doubled() > 0 {
            Ok(Rational::zero())
        } else {
            Err(Error::domain("zero raised to a negative power"))
        };
    }
    let base = if e.is_integer() {
        value.clone()
    } else {
        if value.is_negative() {
            return Err(Error::domain(format!(
                "negative base {} raised to half-integer exponent {}",
                value, e
            )));
        }
        exact_sqrt(value)
            .ok_or_else(|| Error::domain(format!("{}^({}) is irrational", value, e)))?
    };
    let n = if e.is_integer() {
        e.doubled() / 2
    } else {
        e.doubled()
    };
    Ok(num_traits::pow::Pow::pow(&base, n))
}

fn exact_sqrt(r: &Rational) -> Option<Rational> {
    let root = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rational::new(root(r.numer())?, root(r.denom())?))
}
