//! The Hopf algebra structure of `S*(⊕_l t^{-l}𝔥)` and the operators it
//! induces: `q_m(α)` as product with `t^{-m}α`, and `p_m(α)` as coproduct
//! followed by pairing the first tensor factor with `α`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{Rational, Result};

use super::basis::{FockBasis, FockState, FockVector};
use super::{FockOperator, FockSpace, Generator};

/// `s · t`, with the Koszul sign of merging; zero on a repeated odd factor.
pub fn hopf_product(s: &FockState, t: &FockState) -> FockVector {
    let mut factors = s.factors().to_vec();
    factors.extend_from_slice(t.factors());
    FockVector::from_factors(factors, Rational::one())
}

/// `Δ(s) = Σ ± s' ⊗ s''` over all splittings of the factors of `s`, every
/// factor being primitive. Terms are collected and sorted.
pub fn hopf_coproduct(s: &FockState) -> Vec<(FockState, FockState, Rational)> {
    let f = s.factors();
    let k = f.len();
    let mut acc: BTreeMap<(FockState, FockState), Rational> = BTreeMap::new();
    for mask in 0u64..(1u64 << k) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut negative = false;
        let mut odd_right = 0usize;
        for (i, factor) in f.iter().enumerate() {
            if mask >> i & 1 == 1 {
                // moves left past every odd factor already sent right
                if factor.1.odd && odd_right % 2 == 1 {
                    negative = !negative;
                }
                left.push(*factor);
            } else {
                if factor.1.odd {
                    odd_right += 1;
                }
                right.push(*factor);
            }
        }
        let key = (FockState::from_sorted(left), FockState::from_sorted(right));
        let c = if negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        *acc.entry(key).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((l, r), c)| (l, r, c))
        .collect()
}

fn single(m: u32, g: Generator) -> FockState {
    FockState::from_sorted(alloc::vec![(m, g)])
}

/// `q_m(g)` built as `s ↦ (t^{-m}g) · s`.
pub fn compositional_create(
    space: &FockSpace,
    basis: &FockBasis,
    m: u32,
    g: Generator,
) -> Result<FockOperator> {
    let degree = g.degree + (m * space.d()) as i32;
    let unit = single(m, g);
    Ok(FockOperator::from_action(
        basis,
        m as i32,
        degree,
        g.odd,
        |s| hopf_product(&unit, s),
    ))
}

/// `p_m(a)` built as `m·(η(a, ·) ⊗ 1) ∘ (π_m ⊗ 1) ∘ Δ`, where `π_m` keeps
/// the part of the first tensor factor that is a single level-`m` factor.
pub fn compositional_annihilate(
    space: &FockSpace,
    basis: &FockBasis,
    m: u32,
    a: Generator,
) -> Result<FockOperator> {
    let coproducts = coproducts(basis);
    Ok(annihilate_from_coproducts(space, basis, &coproducts, m, a))
}

pub(crate) type Coproduct = Vec<(FockState, FockState, Rational)>;

/// `Δ` of every basis state, in basis order.
pub(crate) fn coproducts(basis: &FockBasis) -> Vec<Coproduct> {
    basis.states().iter().map(hopf_coproduct).collect()
}

pub(crate) fn annihilate_from_coproducts(
    space: &FockSpace,
    basis: &FockBasis,
    coproducts: &[Coproduct],
    m: u32,
    a: Generator,
) -> FockOperator {
    let degree = a.degree - (m * space.d()) as i32;
    let scale = Rational::from_integer(m.into());
    let mut next = 0;
    FockOperator::from_action(basis, -(m as i32), degree, a.odd, |_| {
        let mut v = FockVector::zero();
        for (left, right, c) in &coproducts[next] {
            if let [(l, g)] = left.factors() {
                if *l == m {
                    v.add_term(right.clone(), &scale * space.eta(a, *g) * c);
                }
            }
        }
        next += 1;
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::Element;
    use crate::orbifold::catalog;
    use alloc::vec;

    fn gen(id: usize, degree: i32, odd: bool) -> Generator {
        Generator { degree, id, odd }
    }

    #[test]
    fn unit_and_primitive() {
        let e = gen(0, 0, false);
        let o = gen(1, 1, true);
        let s = FockState::canonical(vec![(1, e), (2, o)]).unwrap().1;
        assert_eq!(
            hopf_product(&FockState::vacuum(), &s),
            FockVector::state(s.clone())
        );
        let p = single(2, o);
        let cp = hopf_coproduct(&p);
        assert_eq!(cp.len(), 2);
        assert!(cp.contains(&(FockState::vacuum(), p.clone(), Rational::one())));
        assert!(cp.contains(&(p.clone(), FockState::vacuum(), Rational::one())));
    }

    #[test]
    fn coproduct_of_square() {
        let e = gen(0, 0, false);
        let s = FockState::canonical(vec![(1, e), (1, e)]).unwrap().1;
        let cp = hopf_coproduct(&s);
        let middle = cp.iter().find(|(l, _, _)| l.factors().len() == 1).unwrap();
        assert_eq!(middle.2, Rational::from_integer(2.into()));
    }

    #[test]
    fn odd_coproduct_sign() {
        let a = gen(0, -1, true);
        let b = gen(1, 1, true);
        let s = FockState::canonical(vec![(1, a), (1, b)]).unwrap().1;
        let cp = hopf_coproduct(&s);
        // b ⊗ a carries the sign of moving b past a
        let t = cp.iter().find(|(l, _, _)| l.factors() == [(1, b)]).unwrap();
        assert_eq!(t.2, -Rational::one());
    }

    #[test]
    fn compositional_matches_direct_on_p2() {
        let space = FockSpace::new(&catalog::p2()).unwrap();
        let basis = space.basis(3);
        for g in space.generators() {
            for m in 1..=3 {
                let e = Element::generator(*g);
                assert_eq!(
                    compositional_create(&space, &basis, m, *g).unwrap(),
                    space.create(&basis, m, &e).unwrap()
                );
                assert_eq!(
                    compositional_annihilate(&space, &basis, m, *g).unwrap(),
                    space.annihilate(&basis, m, &e).unwrap()
                );
            }
        }
    }
}
