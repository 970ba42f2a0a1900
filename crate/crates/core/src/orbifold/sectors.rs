//! Sector-by-sector assembly of the cohomology of `(Xⁿ, Sₙ)`.
//!
//! The sector of cycle type `N` is `∏_l X^{(N_l)}`, whose cohomology is
//! `⊗_l S^{N_l}(H*(X))`. In the graded assembly every `l`-cycle factor is
//! placed in `H*(X)[m(l-1)]` (bigraded: `[k(l-1), k(l-1)]`) *before* taking
//! the graded symmetric power, so super-parity is read off the shifted
//! degree. The geometric sectors (shift applied after the symmetric power)
//! are exposed separately; the genus series are defined on them.

use alloc::vec::Vec;

use crate::gvs::{BigradedDims, GradedDims};
use crate::series::HalfExp;
use crate::symgrp::{cycle_types, shift_of, CycleType, ShiftData};
use crate::Result;

use super::ManifoldData;

/// One conjugacy-class sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector<D> {
    pub cycle_type: CycleType,
    pub shift: ShiftData,
    /// Cohomology of `∏_l X^{(N_l)}`, unshifted.
    pub space: D,
}

/// Which bigraded table of `X` a computation runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// `h^{p,q}`.
    Hodge,
    /// `h^{-p,q}`.
    B,
}

fn table(x: &ManifoldData, which: Table) -> Result<BigradedDims> {
    match which {
        Table::Hodge => x.hodge(),
        Table::B => x.hodge_b(),
    }
}

/// `⊕_N ⊗_l S^{N_l}(H*(X)[m(l-1)])`.
pub fn sector_dims(x: &ManifoldData, n: u32) -> Result<GradedDims> {
    let betti = x.betti();
    let mut out = GradedDims::new();
    for c in cycle_types(n) {
        let mut part = GradedDims::unit();
        for (l, nl) in c.multiplicities() {
            let shifted = betti.shift(HalfExp::from_int((x.m() * (l - 1)) as i32));
            part = part.tensor(&shifted.sym_power(nl as usize)?);
        }
        out = out.dsum(&part);
    }
    Ok(out)
}

fn sector_bigraded(x: &ManifoldData, n: u32, which: Table) -> Result<BigradedDims> {
    let h = table(x, which)?;
    let k = x.k()?;
    let mut out = BigradedDims::new();
    for c in cycle_types(n) {
        let mut part = BigradedDims::unit();
        for (l, nl) in c.multiplicities() {
            let s = k.times((l - 1) as i32);
            part = part.tensor(&h.shift2(s, s)?.sym_power(nl as usize));
        }
        out = out.dsum(&part);
    }
    Ok(out)
}

/// `⊕_N ⊗_l S^{N_l}(H^{*,*}(X)[k(l-1), k(l-1)])`.
pub fn sector_hodge(x: &ManifoldData, n: u32) -> Result<BigradedDims> {
    sector_bigraded(x, n, Table::Hodge)
}

/// B-table analogue of [`sector_hodge`].
pub fn sector_hodge_b(x: &ManifoldData, n: u32) -> Result<BigradedDims> {
    sector_bigraded(x, n, Table::B)
}

/// `Sⁿ(H*(X))`, the cohomology of `X^{(n)}`.
pub fn symprod_dims(x: &ManifoldData, n: u32) -> Result<GradedDims> {
    x.betti().sym_power(n as usize)
}

/// `Sⁿ(H^{*,*}(X))`.
pub fn symprod_hodge(x: &ManifoldData, n: u32) -> Result<BigradedDims> {
    Ok(x.hodge()?.sym_power(n as usize))
}

/// `Sⁿ(H^{-*,*}(X))`.
pub fn symprod_hodge_b(x: &ManifoldData, n: u32) -> Result<BigradedDims> {
    Ok(x.hodge_b()?.sym_power(n as usize))
}

/// Geometric sectors with Betti data, one per cycle type of `Sₙ`.
pub fn geometric_sectors(x: &ManifoldData, n: u32) -> Result<Vec<Sector<GradedDims>>> {
    let betti = x.betti();
    cycle_types(n)
        .into_iter()
        .map(|c| {
            let mut space = GradedDims::unit();
            for (_, nl) in c.multiplicities() {
                space = space.tensor(&betti.sym_power(nl as usize)?);
            }
            Ok(Sector {
                shift: shift_of(&c, x.dim_real()),
                cycle_type: c,
                space,
            })
        })
        .collect()
}

/// Geometric sectors with bigraded data.
pub fn geometric_sectors_bigraded(
    x: &ManifoldData,
    n: u32,
    which: Table,
) -> Result<Vec<Sector<BigradedDims>>> {
    let h = table(x, which)?;
    Ok(cycle_types(n)
        .into_iter()
        .map(|c| {
            let mut space = BigradedDims::unit();
            for (_, nl) in c.multiplicities() {
                space = space.tensor(&h.sym_power(nl as usize));
            }
            Sector {
                shift: shift_of(&c, x.dim_real()),
                cycle_type: c,
                space,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gvs::BiDegree;
    use crate::orbifold::catalog;

    fn gd(pairs: &[(i32, u64)]) -> GradedDims {
        let mut v = GradedDims::new();
        for &(d, b) in pairs {
            v.add(HalfExp::from_int(d), b);
        }
        v
    }

    #[test]
    fn p1_two_points() {
        let x = catalog::p1();
        assert_eq!(
            sector_dims(&x, 2).unwrap(),
            gd(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)])
        );
        assert_eq!(sector_dims(&x, 0).unwrap(), GradedDims::unit());
        assert_eq!(sector_dims(&x, 1).unwrap(), x.betti());
    }

    #[test]
    fn p1_bigraded() {
        let x = catalog::p1();
        let mut expected = BigradedDims::new();
        for d in [0, 1, 2, 3, 4] {
            let h = HalfExp::from_doubled(d);
            expected.add(BiDegree::new(h, h), 1).unwrap();
        }
        assert_eq!(sector_hodge(&x, 2).unwrap(), expected);
        assert_eq!(sector_hodge(&x, 1).unwrap(), x.hodge().unwrap());
    }

    #[test]
    fn elliptic_two_points_has_twelve_classes() {
        // Sym² E is a P¹-bundle over E (8 classes) plus the 4-dim twisted sector.
        let x = catalog::elliptic_curve();
        assert_eq!(symprod_hodge(&x, 2).unwrap().total_dim(), 8);
        assert_eq!(sector_hodge(&x, 2).unwrap().total_dim(), 12);
    }

    #[test]
    fn symmetric_products() {
        let x = catalog::p1();
        assert_eq!(
            symprod_dims(&x, 3).unwrap(),
            gd(&[(0, 1), (2, 1), (4, 1), (6, 1)])
        );
        assert_eq!(symprod_dims(&x, 1).unwrap(), x.betti());
        let g2 = catalog::genus2_curve();
        let s2 = symprod_dims(&g2, 2).unwrap();
        assert_eq!(s2, gd(&[(0, 1), (1, 4), (2, 7), (3, 4), (4, 1)]));
        assert_eq!(s2.total_dim(), 17);
    }

    #[test]
    fn geometric_sectors_of_s3() {
        let x = catalog::k3();
        let sectors = geometric_sectors(&x, 3).unwrap();
        assert_eq!(sectors.len(), 3);
        // [3]: one diagonal copy of X, shifted by F = 2
        assert_eq!(sectors[0].space, x.betti());
        assert_eq!(sectors[0].shift.f, HalfExp::from_int(2));
    }
}
