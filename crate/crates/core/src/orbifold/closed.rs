//! Right-hand sides: product and exponential formulas expanded with the
//! series substrate. Nothing here touches sector spaces.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::gvs::BigradedDims;
use crate::series::{HalfExp, Monomial, Series, VarId};
use crate::{Rational, Result};

use super::genus::{genus, genus_value, Genus};
use super::{ManifoldData, SeriesKind};

fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `(1 + w)^mult` for odd `w`, `(1 - w)^{-mult}` for even `w`.
fn super_factor(
    trunc: VarId,
    order: u32,
    w: &Monomial,
    odd: bool,
    mult: &Rational,
) -> Result<Series> {
    if odd {
        Series::binom_pow(trunc, order, 1, w, mult)
    } else {
        Series::binom_pow(trunc, order, -1, w, &-mult)
    }
}

fn is_odd(e: HalfExp) -> bool {
    e.doubled().rem_euclid(4) == 2
}

fn qpow(n: u32) -> Monomial {
    Monomial::ONE.with_int(VarId::Q, n as i32)
}

fn table(x: &ManifoldData, b: bool) -> Result<BigradedDims> {
    if b {
        x.hodge_b()
    } else {
        x.hodge()
    }
}

/// `∏_d ⟨t^{d+m(l-1)} q^l⟩^{b_d}` over levels, parity by shifted or
/// unshifted degree.
fn poincare_product(
    x: &ManifoldData,
    order: u32,
    shifted_parity: bool,
    levels: bool,
) -> Result<Series> {
    let betti: Vec<(u32, u64)> = x
        .betti_numbers()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b > 0)
        .map(|(d, &b)| (d as u32, b))
        .collect();
    let max_level = if levels { order } else { 1 };
    let mut acc = Series::one(VarId::Q, order);
    for l in 1..=max_level {
        for &(d, b) in &betti {
            let deg = d + x.m() * (l - 1);
            let w = qpow(l).with_int(VarId::T, deg as i32);
            let odd = if shifted_parity {
                deg % 2 == 1
            } else {
                d % 2 == 1
            };
            acc = acc.mul(&super_factor(VarId::Q, order, &w, odd, &rat(b))?)?;
        }
    }
    Ok(acc)
}

fn hodge_product(
    h: &BigradedDims,
    k: HalfExp,
    order: u32,
    shifted_parity: bool,
    levels: bool,
) -> Result<Series> {
    let max_level = if levels { order } else { 1 };
    let mut acc = Series::one(VarId::Q, order);
    for l in 1..=max_level {
        let s = k.times(l as i32 - 1);
        for (d, mult) in h.iter() {
            let w = qpow(l).with(VarId::X, d.p + s).with(VarId::Y, d.q + s);
            let parity_deg = if shifted_parity {
                d.total() + s + s
            } else {
                d.total()
            };
            acc = acc.mul(&super_factor(
                VarId::Q,
                order,
                &w,
                is_odd(parity_deg),
                &rat(mult),
            )?)?;
        }
    }
    Ok(acc)
}

/// `exp(Σ_{m≥1} χ_{-y^m} q^m / m)` for the given table.
fn chi_sym(h: &BigradedDims, order: u32) -> Result<Series> {
    let chi = genus(h, Genus::ChiNegY)?;
    let mut a = Series::zero(VarId::Q, order);
    for m in 1..=order {
        let y_m = chi.substitute(VarId::Y, &Monomial::ONE.with_int(VarId::Y, m as i32))?;
        a = a.add(&y_m.mul_term(&qpow(m), &Rational::new(One::one(), m.into()))?)?;
    }
    a.exp_series()
}

/// `exp(Σ_{n≥1} χ_{-yⁿ}(X) qⁿ / (n (1 - (y^k q)ⁿ)))`.
fn chi_orb(h: &BigradedDims, k: HalfExp, order: u32) -> Result<Series> {
    let chi = genus(h, Genus::ChiNegY)?;
    let mut a = Series::zero(VarId::Q, order);
    for n in 1..=order {
        let y_n = chi.substitute(VarId::Y, &Monomial::ONE.with_int(VarId::Y, n as i32))?;
        let denom = Series::geometric(VarId::Q, order, &qpow(n).with(VarId::Y, k.times(n as i32)))?;
        let term = y_n
            .mul_term(&qpow(n), &Rational::new(One::one(), n.into()))?
            .mul(&denom)?;
        a = a.add(&term)?;
    }
    a.exp_series()
}

/// `exp(Σ_{m≥1} y^{-km} χ_{-y^m}(X) p^m / (m (1 - p^m)))`.
fn dmvv(h: &BigradedDims, k: HalfExp, order: u32) -> Result<Series> {
    let chi = genus(h, Genus::ChiNegY)?.substitute(VarId::Q, &Monomial::var(VarId::P))?;
    let p = |m: u32| Monomial::ONE.with_int(VarId::P, m as i32);
    let mut a = Series::zero(VarId::P, order);
    for m in 1..=order {
        let elliptic = chi
            .substitute(VarId::Y, &Monomial::ONE.with_int(VarId::Y, m as i32))?
            .mul_term(
                &Monomial::ONE.with(VarId::Y, -k.times(m as i32)),
                &Rational::one(),
            )?;
        let term = elliptic
            .mul_term(&p(m), &Rational::new(One::one(), m.into()))?
            .mul(&Series::geometric(VarId::P, order, &p(m))?)?;
        a = a.add(&term)?;
    }
    a.exp_series()
}

fn sign_sym(chi: &BigInt, sigma: &BigInt, order: u32) -> Result<Series> {
    let half = |v: &BigInt| Rational::new(v.clone(), 2.into());
    let q = qpow(1);
    Series::binom_pow(VarId::Q, order, -1, &qpow(2), &-half(chi))?
        .mul(&Series::binom_pow(VarId::Q, order, 1, &q, &half(sigma))?)?
        .mul(&Series::binom_pow(VarId::Q, order, -1, &q, &-half(sigma))?)
}

fn sign_orb(chi: &BigInt, sigma: &BigInt, k: i32, order: u32) -> Result<Series> {
    let half = |v: &BigInt| Rational::new(v.clone(), 2.into());
    Series::product_over_levels(VarId::Q, order, |m| {
        let e = if (k * (m as i32 + 1)).rem_euclid(2) == 1 {
            -half(sigma)
        } else {
            half(sigma)
        };
        let qm = qpow(m);
        Series::binom_pow(VarId::Q, order, -1, &qpow(2 * m), &-half(chi))?
            .mul(&Series::binom_pow(VarId::Q, order, 1, &qm, &e)?)?
            .mul(&Series::binom_pow(VarId::Q, order, -1, &qm, &-e)?)
    })
}

fn gottsche_poincare(x: &ManifoldData, order: u32) -> Result<Series> {
    let b = |d: u32| rat(x.betti_at(d));
    Series::product_over_levels(VarId::Q, order, |l| {
        let l = l as i32;
        let w = |deg: i32| qpow(l as u32).with_int(VarId::T, deg);
        let num = Series::binom_pow(VarId::Q, order, 1, &w(2 * l - 1), &b(1))?.mul(
            &Series::binom_pow(VarId::Q, order, 1, &w(2 * l + 1), &b(3))?,
        )?;
        let den = Series::binom_pow(VarId::Q, order, -1, &w(2 * l - 2), &-b(0))?
            .mul(&Series::binom_pow(VarId::Q, order, -1, &w(2 * l), &-b(2))?)?
            .mul(&Series::binom_pow(
                VarId::Q,
                order,
                -1,
                &w(2 * l + 2),
                &-b(4),
            )?)?;
        num.mul(&den)
    })
}

fn gottsche_hodge(h: &BigradedDims, order: u32) -> Result<Series> {
    Series::product_over_levels(VarId::Q, order, |l| {
        let shift = HalfExp::from_int(l as i32 - 1);
        let mut f = Series::one(VarId::Q, order);
        for (d, mult) in h.iter() {
            let eps: i8 = if is_odd(d.total()) { -1 } else { 1 };
            let w = qpow(l)
                .with(VarId::X, d.p + shift)
                .with(VarId::Y, d.q + shift);
            let alpha = rat(-i64::from(eps) * mult as i64);
            f = f.mul(&Series::binom_pow(VarId::Q, order, -eps, &w, &alpha)?)?;
        }
        Ok(f)
    })
}

/// The right-hand side of `kind`, to the given order.
pub fn closed_series(kind: SeriesKind, x: &ManifoldData, order: u32) -> Result<Series> {
    kind.check_applicable(x)?;
    let chi = x.euler_characteristic();
    match kind {
        SeriesKind::EulerSym => {
            Series::binom_pow(VarId::Q, order, -1, &qpow(1), &-Rational::from_integer(chi))
        }
        SeriesKind::EulerOrb => Series::product_over_levels(VarId::Q, order, |l| {
            Series::binom_pow(
                VarId::Q,
                order,
                -1,
                &qpow(l),
                &-Rational::from_integer(chi.clone()),
            )
        }),
        SeriesKind::PoincareSym => poincare_product(x, order, true, false),
        SeriesKind::PoincareOrb => poincare_product(x, order, true, true),
        SeriesKind::HodgeSym | SeriesKind::HodgeSymB => {
            hodge_product(&table(x, kind.is_b_kind())?, x.k()?, order, true, false)
        }
        SeriesKind::HodgeOrb | SeriesKind::HodgeOrbB => {
            hodge_product(&table(x, kind.is_b_kind())?, x.k()?, order, true, true)
        }
        SeriesKind::ChiySym | SeriesKind::ChiySymB => chi_sym(&table(x, kind.is_b_kind())?, order),
        SeriesKind::ChiyOrb | SeriesKind::ChiyOrbB => {
            chi_orb(&table(x, kind.is_b_kind())?, x.k()?, order)
        }
        SeriesKind::ArithSym | SeriesKind::ArithOrb => {
            let pa = genus_value(&x.hodge()?, Genus::Arithmetic)?;
            Series::binom_pow(VarId::Q, order, -1, &qpow(1), &-Rational::from_integer(pa))
        }
        SeriesKind::SignSym => {
            let sigma = genus_value(&x.hodge()?, Genus::Signature)?;
            sign_sym(&chi, &sigma, order)
        }
        SeriesKind::SignOrb => {
            let sigma = genus_value(&x.hodge()?, Genus::Signature)?;
            let k = x.k()?.to_integer().expect("checked by applicability");
            sign_orb(&chi, &sigma, k, order)
        }
        SeriesKind::GottschePoincare => gottsche_poincare(x, order),
        SeriesKind::GottscheHodge => gottsche_hodge(&x.hodge()?, order),
        SeriesKind::DmvvQ0 | SeriesKind::DmvvQ0B => {
            dmvv(&table(x, kind.is_b_kind())?, x.k()?, order)
        }
    }
}

/// The orbifold Poincaré product with parity read from the unshifted degree
/// `d`. Agrees with `poincare_orb` whenever `m` is even.
pub fn poincare_orb_unshifted_parity(x: &ManifoldData, order: u32) -> Result<Series> {
    poincare_product(x, order, false, true)
}

/// The orbifold Hodge product with parity read from the unshifted `s + t`.
/// Agrees with `hodge_orb` whenever `dim_C` is even.
pub fn hodge_orb_unshifted_parity(x: &ManifoldData, order: u32) -> Result<Series> {
    hodge_product(&x.hodge()?, x.k()?, order, false, true)
}
