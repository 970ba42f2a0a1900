//! Truncated Fock space of the Heisenberg superalgebra on `𝔥 = H*(X)[-d]`.
//!
//! Here `dim_R X = 2d` with `d` even, `t` has degree `-d`, and the pairing
//! `η` has degree 0 on `𝔥`. The Fock space `S*(⊕_{l≥1} t^{-l}𝔥)` is
//! identified with `⊕ₙ H*(Xⁿ, Sₙ)`: a factor `t^{-l}α` sits in charge `l`
//! and degree `(|α| - d) + ld`, which is the degree of `α` in the `l`-cycle
//! sector `H*(X)[d(l-1)]`. So the character of the basis is the orbifold
//! Poincaré series.
//!
//! Creation `q_m(α)` multiplies by `t^{-m}α`; annihilation `p_m(α)` is `m`
//! times the contraction by `t^m α`, with central charge `k = 1`. Both are
//! stored as sparse matrices on the basis of all states with charge at most
//! a fixed bound.

mod basis;
mod hopf;
mod operator;
mod pairing;
mod relations;

use alloc::format;
use alloc::vec::Vec;

use crate::orbifold::ManifoldData;
use crate::{Error, Result};

pub use basis::{FockBasis, FockState, FockVector};
pub use hopf::{compositional_annihilate, compositional_create, hopf_coproduct, hopf_product};
pub use operator::{Element, FockOperator};
pub use pairing::{default_pairing, PairingMatrix};
pub use relations::{check_relations, FockReport};

/// A homogeneous basis class of `H*(X)`, graded in `H*(X)[-d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    /// Shifted degree `j - d` for a class of degree `j`.
    pub degree: i32,
    /// Position in the basis of `H*(X)`: degree by degree, in order.
    pub id: usize,
    /// Parity of the unshifted degree.
    pub odd: bool,
}

impl Generator {
    pub fn parity(self) -> u32 {
        self.odd as u32
    }
}

/// The basis of `H*(X)`: `b_j` classes in each degree `j`, ascending.
pub fn generators(x: &ManifoldData) -> Vec<Generator> {
    let d = x.m() as i32;
    let mut out = Vec::new();
    for j in 0..=x.dim_real() {
        for _ in 0..x.betti_at(j) {
            out.push(Generator {
                degree: j as i32 - d,
                id: out.len(),
                odd: j % 2 == 1,
            });
        }
    }
    out
}

/// The Heisenberg data of `X`: generators, `t`-degree and pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockSpace {
    d: u32,
    generators: Vec<Generator>,
    pairing: PairingMatrix,
}

impl FockSpace {
    /// Uses the pairing blocks carried by `x` if any, else [`default_pairing`].
    pub fn new(x: &ManifoldData) -> Result<Self> {
        let d = x.m();
        if d % 2 == 1 {
            return Err(Error::unsupported(format!(
                "{} has real dimension {}; the Fock model needs it divisible by 4",
                x.name(),
                x.dim_real()
            )));
        }
        let pairing = match x.pairing() {
            Some(blocks) => PairingMatrix::from_blocks(x, blocks)?,
            None => default_pairing(x)?,
        };
        Ok(FockSpace {
            d,
            generators: generators(x),
            pairing,
        })
    }

    /// Half the real dimension; `t` has degree `-d`.
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn pairing(&self) -> &PairingMatrix {
        &self.pairing
    }

    /// `η(a, b)`.
    pub fn eta(&self, a: Generator, b: Generator) -> &crate::Rational {
        self.pairing.get(a.id, b.id)
    }

    pub fn basis(&self, max_charge: u32) -> FockBasis {
        FockBasis::new(&self.generators, self.d, max_charge)
    }
}

/// All canonical states of charge at most `max_charge`.
pub fn fock_basis(x: &ManifoldData, max_charge: u32) -> Result<Vec<FockState>> {
    Ok(FockSpace::new(x)?.basis(max_charge).states().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::catalog;

    #[test]
    fn p2_generators() {
        let g = generators(&catalog::p2());
        assert_eq!(g.len(), 3);
        assert_eq!(g.iter().map(|g| g.degree).collect::<Vec<_>>(), [-2, 0, 2]);
        assert!(g.iter().all(|g| !g.odd));
    }

    #[test]
    fn odd_d_is_unsupported() {
        for x in [
            catalog::p1(),
            catalog::elliptic_curve(),
            catalog::genus2_curve(),
        ] {
            assert!(matches!(FockSpace::new(&x), Err(Error::Unsupported(_))));
        }
        assert!(FockSpace::new(&catalog::point()).is_ok());
    }

    #[test]
    fn p2_basis_sizes() {
        let x = catalog::p2();
        assert_eq!(fock_basis(&x, 0).unwrap().len(), 1);
        assert_eq!(fock_basis(&x, 2).unwrap().len(), 13);
    }
}
