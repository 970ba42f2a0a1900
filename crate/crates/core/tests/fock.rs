use num_traits::Zero;
use symprod_core::fock::{
    check_relations, compositional_create, default_pairing, fock_basis, Element, FockSpace,
    FockState, FockVector,
};
use symprod_core::orbifold::{catalog, closed_series, ManifoldData, PairingBlock, SeriesKind};
use symprod_core::series::{Monomial, VarId};
use symprod_core::{Error, Rational};

#[test]
fn p2_basis_of_charge_two() {
    let states = fock_basis(&catalog::p2(), 2).unwrap();
    assert_eq!(states.len(), 13);
    assert!(states[0].is_vacuum());
    let by_charge = |c| states.iter().filter(|s| s.charge() == c).count();
    assert_eq!((by_charge(0), by_charge(1), by_charge(2)), (1, 3, 9));
}

#[test]
fn charge_dimensions_follow_poincare_orb() {
    for x in [
        catalog::point(),
        catalog::p2(),
        catalog::k3(),
        catalog::abelian_surface(),
    ] {
        let space = FockSpace::new(&x).unwrap();
        let basis = space.basis(3);
        let p = closed_series(SeriesKind::PoincareOrb, &x, 3).unwrap();
        for n in 0..=3 {
            let expected: Rational = p
                .slice(n)
                .terms()
                .map(|(_, c)| c.clone())
                .fold(Rational::zero(), |a, c| a + c);
            let count = basis.states().iter().filter(|s| s.charge() == n).count();
            assert_eq!(
                Rational::from_integer(count.into()),
                expected,
                "{}",
                x.name()
            );
        }
        assert_eq!(basis.character(), p);
    }
}

#[test]
fn odd_square_is_zero() {
    let x = catalog::abelian_surface();
    let space = FockSpace::new(&x).unwrap();
    let basis = space.basis(2);
    let o = *space.generators().iter().find(|g| g.odd).unwrap();
    let q = space.create(&basis, 1, &Element::generator(o)).unwrap();
    let v = q.apply(
        &basis,
        &q.apply(&basis, &FockVector::state(FockState::vacuum())),
    );
    assert!(v.is_zero());
}

#[test]
fn annihilation_then_creation_on_p2() {
    // [p_2(a), q_2(b)] = 2·η(a, b)·Id on states of charge <= 2
    let space = FockSpace::new(&catalog::p2()).unwrap();
    let basis = space.basis(4);
    for a in space.generators() {
        for b in space.generators() {
            let p = space
                .annihilate(&basis, 2, &Element::generator(*a))
                .unwrap();
            let q = space.create(&basis, 2, &Element::generator(*b)).unwrap();
            let c = p.supercommutator(&q);
            let two_eta = space.eta(*a, *b) * Rational::from_integer(2.into());
            for (i, s) in basis.states().iter().enumerate() {
                if s.charge() <= 2 {
                    let expected: Vec<_> = if two_eta.is_zero() {
                        vec![]
                    } else {
                        vec![(i, two_eta.clone())]
                    };
                    assert_eq!(c.column(i), expected.as_slice());
                }
            }
        }
    }
}

#[test]
fn compositional_create_on_p2() {
    let space = FockSpace::new(&catalog::p2()).unwrap();
    let basis = space.basis(3);
    for g in space.generators() {
        for m in 1..=3 {
            let direct = space.create(&basis, m, &Element::generator(*g)).unwrap();
            assert_eq!(compositional_create(&space, &basis, m, *g).unwrap(), direct);
        }
    }
}

#[test]
fn k3_relations_at_charge_four() {
    let r = check_relations(&catalog::k3(), 4).unwrap();
    for o in &r.outcomes {
        assert!(
            o.status != symprod_core::orbifold::Status::Fail,
            "{}: {}",
            o.name,
            o.detail
        );
    }
}

#[test]
fn user_pairing_is_used() {
    // η(H⁰, H⁴) = 2 and a middle form -1: still nondegenerate and symmetric
    let int = |n: i64| Rational::from_integer(n.into());
    let x = catalog::p2().with_pairing(vec![
        PairingBlock {
            degrees: (0, 4),
            matrix: vec![vec![int(2)]],
        },
        PairingBlock {
            degrees: (2, 2),
            matrix: vec![vec![int(-1)]],
        },
    ]);
    let space = FockSpace::new(&x).unwrap();
    let g = space.generators();
    assert_eq!(*space.eta(g[0], g[2]), int(2));
    assert_eq!(*space.eta(g[2], g[0]), int(2));
    assert!(check_relations(&x, 3).unwrap().passed());
}

#[test]
fn degenerate_or_unsupported() {
    let bad = ManifoldData::real("odd middle", 2, &[1, 1, 1]).unwrap();
    assert!(matches!(default_pairing(&bad), Err(Error::Input(_))));
    assert!(matches!(
        FockSpace::new(&catalog::elliptic_curve()),
        Err(Error::Unsupported(_))
    ));
    let no_duality = ManifoldData::real("X", 4, &[1, 1, 0, 0, 1]).unwrap();
    assert!(matches!(FockSpace::new(&no_duality), Err(Error::Input(_))));
}

#[test]
fn vacuum_character_term() {
    let basis = FockSpace::new(&catalog::point()).unwrap().basis(4);
    // a point: one state per partition
    assert_eq!(basis.len(), 1 + 1 + 2 + 3 + 5);
    let q4 = Monomial::ONE.with_int(VarId::Q, 4);
    assert_eq!(
        basis.character().coeff(&q4),
        Rational::from_integer(5.into())
    );
}
