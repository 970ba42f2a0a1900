mod common;

use common::*;
use num_traits::One;
use proptest::prelude::*;
use symprod_core::fock::{check_relations, hopf_product, FockState, FockVector, Generator};
use symprod_core::gvs::GradedDims;
use symprod_core::orbifold::{verify, ManifoldData, SeriesKind};
use symprod_core::series::{HalfExp, Monomial, Series, VarId};
use symprod_core::Rational;

const ORDER: u32 = 3;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Terms `c · q^a t^b y^c` with `a ≤ 3`, small Laurent `t`, `y` exponents
/// (half-integral in `y`) and small integer coefficients.
fn arb_series() -> impl Strategy<Value = Series> {
    prop::collection::vec((0..=3i32, -2..=2i32, -3..=3i32, -3..=3i64), 0..6).prop_map(|terms| {
        Series::from_terms(
            VarId::Q,
            ORDER,
            terms.into_iter().map(|(a, b, c, k)| {
                let m = Monomial::ONE
                    .with_int(VarId::Q, a)
                    .with_int(VarId::T, b)
                    .with(VarId::Y, HalfExp::from_doubled(c));
                (m, int(k))
            }),
        )
        .unwrap()
    })
}

/// A monomial with positive `q` exponent.
fn arb_step() -> impl Strategy<Value = Monomial> {
    (1..=3i32, -2..=2i32, -2..=2i32).prop_map(|(a, b, c)| {
        Monomial::ONE
            .with_int(VarId::Q, a)
            .with_int(VarId::T, b)
            .with(VarId::X, HalfExp::from_doubled(c))
    })
}

fn arb_betti() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..=2u64, 1..=4).prop_filter("nonzero, dim <= 6", |v| {
        let t: u64 = v.iter().sum();
        (1..=6).contains(&t)
    })
}

fn arb_manifold() -> impl Strategy<Value = ManifoldData> {
    let curve = (0..=3u64)
        .prop_map(|g| ManifoldData::complex("curve", 1, &[vec![1, g], vec![g, 1]]).unwrap());
    let surface = (0..=2u64, 0..=2u64, 0..=6u64).prop_map(|(a, b, c)| {
        ManifoldData::complex("surface", 2, &[vec![1, a, b], vec![a, c, a], vec![b, a, 1]]).unwrap()
    });
    prop_oneof![curve, surface]
}

fn arb_b_table(d: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..=2u64, d + 1), d + 1)
}

/// Odd generators `e0`, `e3` and even generators `e1`, `e2`.
fn gens() -> [Generator; 4] {
    [
        Generator {
            degree: -1,
            id: 0,
            odd: true,
        },
        Generator {
            degree: 0,
            id: 1,
            odd: false,
        },
        Generator {
            degree: 0,
            id: 2,
            odd: false,
        },
        Generator {
            degree: 1,
            id: 3,
            odd: true,
        },
    ]
}

fn arb_factors() -> impl Strategy<Value = Vec<(u32, Generator)>> {
    prop::collection::vec((1..=2u32, 0..4usize), 0..4)
        .prop_map(|v| v.into_iter().map(|(l, i)| (l, gens()[i])).collect())
}

fn arb_state() -> impl Strategy<Value = FockState> {
    arb_factors().prop_filter_map("odd square", |f| FockState::canonical(f).map(|(_, s)| s))
}

fn product_of(v: &FockVector, s: &FockState, right: bool) -> FockVector {
    let mut out = FockVector::zero();
    for (t, c) in v.iter() {
        let p = if right {
            hopf_product(t, s)
        } else {
            hopf_product(s, t)
        };
        out.add(&p.scale(c));
    }
    out
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn exp_inverts_log(m in arb_step(), order in 1..=6u32) {
        let e = Series::log1m(VarId::Q, order, &m).unwrap().exp_series().unwrap();
        let expected = Series::from_terms(
            VarId::Q,
            order,
            [(Monomial::ONE, Rational::one()), (m, -Rational::one())],
        )
        .unwrap();
        prop_assert_eq!(e, expected);
    }

    #[test]
    fn binomial_matches_repeated_product(m in arb_step(), sign in prop::sample::select(vec![1i8, -1]), n in 0..=4u32) {
        let base = Series::from_terms(
            VarId::Q,
            ORDER,
            [(Monomial::ONE, Rational::one()), (m, int(sign as i64))],
        )
        .unwrap();
        let b = Series::binom_pow(VarId::Q, ORDER, sign, &m, &int(n as i64)).unwrap();
        prop_assert_eq!(&b, &base.pow(n).unwrap());
        let inv = Series::binom_pow(VarId::Q, ORDER, sign, &m, &int(-(n as i64))).unwrap();
        prop_assert_eq!(b.mul(&inv).unwrap(), Series::one(VarId::Q, ORDER));
    }

    #[test]
    fn substitute_and_specialize_commute(a in arb_series(), e in -2..=2i32, value in -3..=3i64) {
        let r = Monomial::ONE.with_int(VarId::T, e).with_int(VarId::X, 1);
        let assign = [(VarId::Y, int(value))];
        let one = a.substitute(VarId::T, &r).and_then(|s| s.specialize(&assign));
        let two = a.specialize(&assign).and_then(|s| s.substitute(VarId::T, &r));
        match (one, two) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(x), Err(y)) => prop_assert_eq!(std::mem::discriminant(&x), std::mem::discriminant(&y)),
            (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn sym_power_matches_basis_enumeration(betti in arb_betti(), n in 0..=4usize) {
        let v = graded(&betti);
        prop_assert_eq!(as_map(&v.sym_power(n).unwrap()), sym_power_by_enumeration(&betti, n));
    }

    #[test]
    fn sym_power_of_direct_sum(a in arb_betti(), b in arb_betti(), n in 0..=4usize) {
        let (va, vb) = (graded(&a), graded(&b));
        let mut rhs = GradedDims::new();
        for i in 0..=n {
            rhs = rhs.dsum(&va.sym_power(i).unwrap().tensor(&vb.sym_power(n - i).unwrap()));
        }
        prop_assert_eq!(as_map(&va.dsum(&vb).sym_power(n).unwrap()), as_map(&rhs));
    }

    #[test]
    fn brute_equals_closed_on_random_manifolds(x in arb_manifold(), b in arb_b_table(2)) {
        let d = x.dim_c().unwrap() as usize;
        let b: Vec<Vec<u64>> = b.into_iter().take(d + 1).map(|r| r[..=d].to_vec()).collect();
        let x = x.with_hodge_b(&b).unwrap();
        for kind in SeriesKind::ALL {
            if kind.check_applicable(&x).is_err() {
                continue;
            }
            let r = verify(kind, &x, ORDER).unwrap();
            prop_assert!(r.passed(), "{}: {:?}", kind, r.outcome());
        }
    }

    #[test]
    fn canonical_form_is_stable(f in arb_factors()) {
        if let Some((_, s)) = FockState::canonical(f) {
            let (neg, t) = FockState::canonical(s.factors().to_vec()).unwrap();
            prop_assert!(!neg);
            prop_assert_eq!(s, t);
        }
    }

    #[test]
    fn hopf_product_is_associative(a in arb_state(), b in arb_state(), c in arb_state()) {
        let left = product_of(&hopf_product(&a, &b), &c, true);
        let right = product_of(&hopf_product(&b, &c), &a, false);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hopf_product_is_supercommutative(a in arb_state(), b in arb_state()) {
        let ab = hopf_product(&a, &b);
        let ba = hopf_product(&b, &a);
        let sign = if a.odd() && b.odd() { -Rational::one() } else { Rational::one() };
        prop_assert_eq!(ab, ba.scale(&sign));
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn heisenberg_relations_on_random_four_manifolds(b1 in 0..=1u64, b2 in 0..=2u64, l in 1..=3u32) {
        let x = ManifoldData::real("X", 4, &[1, b1, b2, b1, 1]).unwrap();
        let r = check_relations(&x, l).unwrap();
        prop_assert!(r.passed(), "{:?}", r.outcomes);
    }
}
