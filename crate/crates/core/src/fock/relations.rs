use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::orbifold::{closed_series, compare, CheckOutcome, ManifoldData, SeriesKind, Status};
use crate::{Rational, Result};

use super::basis::FockBasis;
use super::hopf::{annihilate_from_coproducts, compositional_create, coproducts};
use super::{Element, FockOperator, FockSpace};

/// Outcome of [`check_relations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockReport {
    pub manifold: String,
    pub max_charge: u32,
    pub basis_size: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl FockReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != Status::Fail)
    }
}

struct Modes {
    /// `create[m - 1][g]`
    create: Vec<Vec<FockOperator>>,
    annihilate: Vec<Vec<FockOperator>>,
}

fn pass_fail(name: String, failure: Option<String>, ok: String) -> CheckOutcome {
    match failure {
        None => CheckOutcome::new(name, Status::Pass, ok),
        Some(why) => CheckOutcome::new(name, Status::Fail, why),
    }
}

/// Compares `[A, B]` with `c·Id` on every basis state of charge at most
/// `bound`.
fn check_commutator(
    basis: &FockBasis,
    a: &FockOperator,
    b: &FockOperator,
    c: &Rational,
    bound: u32,
) -> Option<String> {
    for (i, s) in basis.states().iter().enumerate() {
        if s.charge() > bound {
            continue;
        }
        let got = a.supercommutator_column(b, i);
        let mut expected = BTreeMap::new();
        if !c.is_zero() {
            expected.insert(i, c.clone());
        }
        if got != expected {
            let found = got
                .iter()
                .map(|(j, x)| format!("{x}·{}", basis.state(*j)))
                .collect::<Vec<_>>()
                .join(" + ");
            let found = if found.is_empty() {
                String::from("0")
            } else {
                found
            };
            return Some(format!("on {s}: expected {c}·{s}, got {found}"));
        }
    }
    None
}

fn first_declaration_error(basis: &FockBasis, modes: &Modes) -> Option<String> {
    modes
        .create
        .iter()
        .chain(&modes.annihilate)
        .flatten()
        .find_map(|op| op.check_declared(basis))
}

/// Checks the Heisenberg relations
/// `[p_m(a), q_n(b)] = m·η(a,b)·δ_{mn}·Id`, `[q_m(a), q_n(b)] = 0` and
/// `[p_m(a), p_n(b)] = 0` for all basis classes `a`, `b`, on the states
/// where truncation at `max_charge` cannot interfere. Also checks the
/// declared charge and degree of every mode, the Hopf-algebra construction
/// of both kinds of modes, and that the character of the basis is the
/// orbifold Poincaré series.
pub fn check_relations(x: &ManifoldData, max_charge: u32) -> Result<FockReport> {
    let space = FockSpace::new(x)?;
    let basis = space.basis(max_charge);
    let gens = space.generators();
    let mut modes = Modes {
        create: Vec::new(),
        annihilate: Vec::new(),
    };
    for m in 1..=max_charge {
        let mut c = Vec::new();
        let mut a = Vec::new();
        for g in gens {
            let e = Element::generator(*g);
            c.push(space.create(&basis, m, &e)?);
            a.push(space.annihilate(&basis, m, &e)?);
        }
        modes.create.push(c);
        modes.annihilate.push(a);
    }
    let mut outcomes = Vec::new();

    let character = basis.character();
    let poincare = closed_series(SeriesKind::PoincareOrb, x, max_charge)?;
    outcomes.push(compare("character = poincare_orb", &character, &poincare));

    outcomes.push(pass_fail(
        String::from("declared charge and degree"),
        first_declaration_error(&basis, &modes),
        format!("{} modes", 2 * gens.len() * max_charge as usize),
    ));

    let pairs = gens.len() * gens.len();
    for m in 1..=max_charge {
        for n in 1..=max_charge {
            let bound = max_charge - m.max(n);
            let mut failure = None;
            'pairs: for a in gens {
                for b in gens {
                    let c = if m == n {
                        space.eta(*a, *b) * Rational::from_integer(m.into())
                    } else {
                        Rational::zero()
                    };
                    let p = &modes.annihilate[m as usize - 1][a.id];
                    let q = &modes.create[n as usize - 1][b.id];
                    if let Some(why) = check_commutator(&basis, p, q, &c, bound) {
                        failure = Some(format!("a = e{}, b = e{}: {why}", a.id, b.id));
                        break 'pairs;
                    }
                }
            }
            outcomes.push(pass_fail(
                format!("[p_{m}, q_{n}] = {}", if m == n { "m·η·Id" } else { "0" }),
                failure,
                format!("{pairs} pairs, charge <= {bound}"),
            ));
        }
    }

    for (label, ops) in [("q", &modes.create), ("p", &modes.annihilate)] {
        for m in 1..=max_charge {
            for n in m..=max_charge - m {
                let bound = if label == "q" {
                    max_charge - m - n
                } else {
                    max_charge
                };
                let mut failure = None;
                'pairs: for a in gens {
                    for b in gens {
                        let (x, y) = (&ops[m as usize - 1][a.id], &ops[n as usize - 1][b.id]);
                        if let Some(why) = check_commutator(&basis, x, y, &Rational::zero(), bound)
                        {
                            failure = Some(format!("a = e{}, b = e{}: {why}", a.id, b.id));
                            break 'pairs;
                        }
                    }
                }
                outcomes.push(pass_fail(
                    format!("[{label}_{m}, {label}_{n}] = 0"),
                    failure,
                    format!("{pairs} pairs, charge <= {bound}"),
                ));
            }
        }
    }

    let coproducts = coproducts(&basis);
    let mut create_failure = None;
    let mut annihilate_failure = None;
    for m in 1..=max_charge {
        for g in gens {
            if create_failure.is_none()
                && compositional_create(&space, &basis, m, *g)?
                    != modes.create[m as usize - 1][g.id]
            {
                create_failure = Some(format!("q_{m}(e{}) differs", g.id));
            }
            if annihilate_failure.is_none()
                && annihilate_from_coproducts(&space, &basis, &coproducts, m, *g)
                    != modes.annihilate[m as usize - 1][g.id]
            {
                annihilate_failure = Some(format!("p_{m}(e{}) differs", g.id));
            }
        }
    }
    let count = format!("{} modes", gens.len() * max_charge as usize);
    outcomes.push(pass_fail(
        String::from("q_m = product with t^-m a"),
        create_failure,
        count.clone(),
    ));
    outcomes.push(pass_fail(
        String::from("p_m = contraction after coproduct"),
        annihilate_failure,
        count,
    ));

    Ok(FockReport {
        manifold: String::from(x.name()),
        max_charge,
        basis_size: basis.len(),
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::catalog;

    fn assert_passes(x: &ManifoldData, l: u32) {
        let r = check_relations(x, l).unwrap();
        for o in &r.outcomes {
            assert_eq!(o.status, Status::Pass, "{}: {}", o.name, o.detail);
        }
    }

    #[test]
    fn p2_charge_4() {
        assert_passes(&catalog::p2(), 4);
    }

    #[test]
    fn point_and_p1xp1() {
        assert_passes(&catalog::point(), 4);
        assert_passes(&catalog::p1xp1(), 3);
    }

    #[test]
    fn k3_charge_3() {
        let r = check_relations(&catalog::k3(), 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.basis_size, 1 + 24 + 324 + 3200);
    }

    #[test]
    fn odd_classes_on_a_four_manifold() {
        // a real 4-manifold with an odd class pair, so the Koszul signs matter
        let x = ManifoldData::real("odd", 4, &[1, 2, 0, 2, 1]).unwrap();
        assert_passes(&x, 3);
    }
}
