//! Left-hand sides: the quantity of every `(Xⁿ, Sₙ)` or `X^{(n)}` computed
//! from explicit sector spaces, then collected into a series.

use num_bigint::BigInt;
use num_traits::One;

use crate::gvs::BigradedDims;
use crate::series::{HalfExp, Monomial, Series, VarId};
use crate::{Error, Rational, Result};

use super::genus::{genus, genus_value, Genus};
use super::sectors::{
    geometric_sectors, geometric_sectors_bigraded, sector_dims, sector_hodge, sector_hodge_b,
    symprod_dims, symprod_hodge, symprod_hodge_b, Table,
};
use super::{ManifoldData, SeriesKind};

/// `Σ_{n≤order} coeff(n) qⁿ`, where each `coeff(n)` is free of `q`.
fn collect<F>(order: u32, mut coeff: F) -> Result<Series>
where
    F: FnMut(u32) -> Result<Series>,
{
    let mut out = Series::zero(VarId::Q, order);
    for n in 0..=order {
        let qn = Monomial::ONE.with_int(VarId::Q, n as i32);
        out = out.add(&coeff(n)?.mul_term(&qn, &Rational::one())?)?;
    }
    Ok(out)
}

fn int_series(v: BigInt) -> Series {
    Series::constant(VarId::Q, Series::EXACT, Rational::from_integer(v))
}

fn table_of(kind: SeriesKind) -> Table {
    if kind.is_b_kind() {
        Table::B
    } else {
        Table::Hodge
    }
}

fn symprod_table(x: &ManifoldData, n: u32, table: Table) -> Result<BigradedDims> {
    match table {
        Table::Hodge => symprod_hodge(x, n),
        Table::B => symprod_hodge_b(x, n),
    }
}

/// `Σ_N y^{F_N} χ_{-y}(∏_l X^{(N_l)})`, the sector-level definition of the
/// orbifold `χ_{-y}`.
fn orbifold_chi_neg_y(x: &ManifoldData, n: u32, table: Table) -> Result<Series> {
    let mut total = Series::zero(VarId::Q, Series::EXACT);
    for sector in geometric_sectors_bigraded(x, n, table)? {
        let shift = Monomial::ONE.with(VarId::Y, sector.shift.f);
        let chi = genus(&sector.space, Genus::ChiNegY)?;
        total = total.add(&chi.mul_term(&shift, &Rational::one())?)?;
    }
    Ok(total)
}

/// `Σ_N (-1)^{F_N} χ_1(∏_l X^{(N_l)})`; needs integral shifts.
fn orbifold_signature(x: &ManifoldData, n: u32) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for sector in geometric_sectors_bigraded(x, n, Table::Hodge)? {
        let f = sector
            .shift
            .f
            .to_integer()
            .ok_or_else(|| Error::domain("orbifold signature needs integral grading shifts"))?;
        let s = genus_value(&sector.space, Genus::Signature)?;
        total += if f.rem_euclid(2) == 1 { -s } else { s };
    }
    Ok(total)
}

/// The left-hand side of `kind`, to the given order.
pub fn brute_series(kind: SeriesKind, x: &ManifoldData, order: u32) -> Result<Series> {
    kind.check_applicable(x)?;
    match kind {
        SeriesKind::EulerSym => collect(order, |n| {
            Ok(int_series(symprod_dims(x, n)?.euler_characteristic()?))
        }),
        SeriesKind::EulerOrb => collect(order, |n| {
            let mut total = BigInt::from(0);
            for sector in geometric_sectors(x, n)? {
                total += sector.space.euler_characteristic()?;
            }
            Ok(int_series(total))
        }),
        SeriesKind::PoincareSym => collect(order, |n| Ok(symprod_dims(x, n)?.poincare_poly())),
        SeriesKind::PoincareOrb | SeriesKind::GottschePoincare => {
            collect(order, |n| Ok(sector_dims(x, n)?.poincare_poly()))
        }
        SeriesKind::HodgeSym | SeriesKind::HodgeSymB => collect(order, |n| {
            Ok(symprod_table(x, n, table_of(kind))?.hodge_poly())
        }),
        SeriesKind::HodgeOrb | SeriesKind::GottscheHodge => {
            collect(order, |n| Ok(sector_hodge(x, n)?.hodge_poly()))
        }
        SeriesKind::HodgeOrbB => collect(order, |n| Ok(sector_hodge_b(x, n)?.hodge_poly())),
        SeriesKind::ChiySym | SeriesKind::ChiySymB => collect(order, |n| {
            genus(&symprod_table(x, n, table_of(kind))?, Genus::ChiNegY)
        }),
        SeriesKind::ArithSym => collect(order, |n| {
            Ok(int_series(genus_value(
                &symprod_hodge(x, n)?,
                Genus::Arithmetic,
            )?))
        }),
        SeriesKind::SignSym => collect(order, |n| {
            Ok(int_series(genus_value(
                &symprod_hodge(x, n)?,
                Genus::Signature,
            )?))
        }),
        SeriesKind::ChiyOrb | SeriesKind::ChiyOrbB => {
            collect(order, |n| orbifold_chi_neg_y(x, n, table_of(kind)))
        }
        SeriesKind::ArithOrb => brute_series(SeriesKind::ChiyOrb, x, order)?
            .specialize(&[(VarId::Y, Rational::from_integer(0.into()))]),
        SeriesKind::SignOrb => collect(order, |n| Ok(int_series(orbifold_signature(x, n)?))),
        SeriesKind::DmvvQ0 | SeriesKind::DmvvQ0B => {
            let chi = if kind == SeriesKind::DmvvQ0 {
                brute_series(SeriesKind::ChiyOrb, x, order)?
            } else {
                brute_series(SeriesKind::ChiyOrbB, x, order)?
            };
            // qⁿ ↦ y^{-kn} pⁿ
            let k = x.k()?;
            let replacement = Monomial::ONE
                .with(VarId::Y, -k)
                .with(VarId::P, HalfExp::from_int(1));
            chi.substitute(VarId::Q, &replacement)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::catalog;
    use alloc::string::ToString;

    #[test]
    fn p1_euler_orbifold() {
        let s = brute_series(SeriesKind::EulerOrb, &catalog::p1(), 4).unwrap();
        assert_eq!(s.to_string(), "1 + 2*q + 5*q^2 + 10*q^3 + 20*q^4");
    }

    #[test]
    fn constant_term_is_one() {
        for kind in [
            SeriesKind::ArithSym,
            SeriesKind::ChiyOrb,
            SeriesKind::HodgeOrb,
        ] {
            let s = brute_series(kind, &catalog::k3(), 2).unwrap();
            assert_eq!(s.slice(0).to_string(), "1");
        }
    }

    #[test]
    fn signatures_of_projective_spaces() {
        let s = brute_series(SeriesKind::SignSym, &catalog::p1(), 4).unwrap();
        assert_eq!(s.to_string(), "1 + q^2 + q^4");
    }

    #[test]
    fn p1_poincare_q2() {
        let s = brute_series(SeriesKind::PoincareOrb, &catalog::p1(), 2).unwrap();
        assert_eq!(s.slice(2).to_string(), "1 + t + t^2 + t^3 + t^4");
    }

    #[test]
    fn k3_arith() {
        let s = brute_series(SeriesKind::ArithSym, &catalog::k3(), 2).unwrap();
        assert_eq!(s.to_string(), "1 + 2*q + 3*q^2");
    }

    #[test]
    fn dmvv_laurent_support() {
        let s = brute_series(SeriesKind::DmvvQ0, &catalog::k3(), 2).unwrap();
        assert_eq!(s.trunc(), VarId::P);
        // p¹ coefficient is y^{-1}(2 + 20y + 2y²)
        assert_eq!(s.slice(1).to_string(), "2*y^(-1) + 20 + 2*y");
    }

    #[test]
    fn b_kind_without_table() {
        assert!(matches!(
            brute_series(SeriesKind::HodgeSymB, &catalog::p2(), 2),
            Err(Error::Input(_))
        ));
    }
}
