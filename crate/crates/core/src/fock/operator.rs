use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

use super::basis::{Factor, FockBasis, FockState, FockVector};
use super::{FockSpace, Generator};

/// A homogeneous element `Σ cᵢ gᵢ` of `𝔥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    terms: Vec<(Generator, Rational)>,
}

impl Element {
    pub fn generator(g: Generator) -> Self {
        Element {
            terms: alloc::vec![(g, Rational::one())],
        }
    }

    /// Fails unless `terms` is nonempty and all generators share one degree.
    pub fn new(terms: Vec<(Generator, Rational)>) -> Result<Self> {
        let Some(&(first, _)) = terms.first() else {
            return Err(Error::usage("an element needs at least one term"));
        };
        if terms.iter().any(|(g, _)| g.degree != first.degree) {
            return Err(Error::usage("element is not homogeneous"));
        }
        Ok(Element { terms })
    }

    pub fn terms(&self) -> &[(Generator, Rational)] {
        &self.terms
    }

    /// Shifted degree.
    pub fn degree(&self) -> i32 {
        self.terms[0].0.degree
    }

    pub fn odd(&self) -> bool {
        self.terms[0].0.odd
    }
}

type Column = Vec<(usize, Rational)>;

/// A linear map on the span of a [`FockBasis`], stored column by column.
/// Output terms beyond the charge bound are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockOperator {
    charge: i32,
    degree: i32,
    odd: bool,
    columns: Vec<Column>,
}

fn accumulate(acc: &mut BTreeMap<usize, Rational>, i: usize, c: Rational) {
    match acc.entry(i) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl FockOperator {
    /// The operator `eᵢ ↦ action(stateᵢ)` with the given declared charge,
    /// degree and parity.
    pub fn from_action<F>(
        basis: &FockBasis,
        charge: i32,
        degree: i32,
        odd: bool,
        mut action: F,
    ) -> Self
    where
        F: FnMut(&FockState) -> FockVector,
    {
        let columns = basis
            .states()
            .iter()
            .map(|s| {
                let mut col: Column = action(s)
                    .iter()
                    .filter_map(|(t, c)| basis.index_of(t).map(|j| (j, c.clone())))
                    .collect();
                col.sort_by_key(|e| e.0);
                col
            })
            .collect();
        FockOperator {
            charge,
            degree,
            odd,
            columns,
        }
    }

    /// `c·Id`.
    pub fn scalar(basis: &FockBasis, c: &Rational) -> Self {
        FockOperator {
            charge: 0,
            degree: 0,
            odd: false,
            columns: (0..basis.len())
                .map(|i| {
                    if c.is_zero() {
                        Vec::new()
                    } else {
                        alloc::vec![(i, c.clone())]
                    }
                })
                .collect(),
        }
    }

    pub fn charge(&self) -> i32 {
        self.charge
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn odd(&self) -> bool {
        self.odd
    }

    pub fn column(&self, i: usize) -> &[(usize, Rational)] {
        &self.columns[i]
    }

    /// The image of a sparse coordinate vector.
    pub fn apply_coords(&self, v: &BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        let mut out = BTreeMap::new();
        for (&i, c) in v {
            for (j, x) in &self.columns[i] {
                accumulate(&mut out, *j, c * x);
            }
        }
        out
    }

    pub fn apply(&self, basis: &FockBasis, v: &FockVector) -> FockVector {
        let coords = v
            .iter()
            .filter_map(|(s, c)| basis.index_of(s).map(|i| (i, c.clone())))
            .collect();
        let mut out = FockVector::zero();
        for (j, c) in self.apply_coords(&coords) {
            out.add_term(basis.state(j).clone(), c);
        }
        out
    }

    fn column_map(&self, i: usize) -> BTreeMap<usize, Rational> {
        self.columns[i].iter().cloned().collect()
    }

    /// `(self ∘ other)(eᵢ)`.
    pub fn compose_column(&self, other: &FockOperator, i: usize) -> BTreeMap<usize, Rational> {
        self.apply_coords(&other.column_map(i))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FockOperator) -> FockOperator {
        FockOperator {
            charge: self.charge + other.charge,
            degree: self.degree + other.degree,
            odd: self.odd ^ other.odd,
            columns: (0..self.columns.len())
                .map(|i| self.compose_column(other, i).into_iter().collect())
                .collect(),
        }
    }

    /// `[A, B](eᵢ) = A(B eᵢ) - (-1)^{|A||B|} B(A eᵢ)`.
    pub fn supercommutator_column(
        &self,
        other: &FockOperator,
        i: usize,
    ) -> BTreeMap<usize, Rational> {
        let mut out = self.compose_column(other, i);
        let sign = if self.odd && other.odd {
            Rational::one()
        } else {
            -Rational::one()
        };
        for (j, c) in other.compose_column(self, i) {
            accumulate(&mut out, j, &sign * c);
        }
        out
    }

    pub fn supercommutator(&self, other: &FockOperator) -> FockOperator {
        FockOperator {
            charge: self.charge + other.charge,
            degree: self.degree + other.degree,
            odd: self.odd ^ other.odd,
            columns: (0..self.columns.len())
                .map(|i| self.supercommutator_column(other, i).into_iter().collect())
                .collect(),
        }
    }

    /// The first output term whose charge, degree or parity shift differs
    /// from the declared one.
    pub fn check_declared(&self, basis: &FockBasis) -> Option<String> {
        let d = basis.d();
        for (i, col) in self.columns.iter().enumerate() {
            let s = basis.state(i);
            for (j, _) in col {
                let t = basis.state(*j);
                let dc = t.charge() as i32 - s.charge() as i32;
                let dd = t.degree(d) - s.degree(d);
                if dc != self.charge || dd != self.degree || (t.odd() ^ s.odd()) != self.odd {
                    return Some(format!(
                        "{s} -> {t}: charge {dc}, degree {dd}; declared charge {}, degree {}",
                        self.charge, self.degree
                    ));
                }
            }
        }
        None
    }
}

/// `t^{-m}g · s` on one state.
pub(crate) fn create_state(m: u32, g: Generator, s: &FockState) -> Option<(bool, FockState)> {
    let factors = s.factors();
    let f: Factor = (m, g);
    let pos = factors.partition_point(|x| *x <= f);
    if g.odd && pos > 0 && factors[pos - 1] == f {
        return None;
    }
    let passed = factors[..pos].iter().filter(|x| x.1.odd).count();
    let mut out = factors.to_vec();
    out.insert(pos, f);
    let negative = g.odd && passed % 2 == 1;
    Some((negative, FockState::from_sorted(out)))
}

/// `m` times the contraction of `s` with `t^m a`.
pub(crate) fn annihilate_state(
    space: &FockSpace,
    m: u32,
    a: Generator,
    s: &FockState,
) -> FockVector {
    let mut out = FockVector::zero();
    let scale = Rational::from_integer(m.into());
    let mut odd_before = 0usize;
    for (i, &(l, g)) in s.factors().iter().enumerate() {
        if l == m {
            let eta = space.eta(a, g);
            if !eta.is_zero() {
                let c = &scale * eta;
                let c = if a.odd && odd_before % 2 == 1 { -c } else { c };
                out.add_term(s.without(i), c);
            }
        }
        if g.odd {
            odd_before += 1;
        }
    }
    out
}

fn check_level(m: u32) -> Result<()> {
    if m < 1 {
        return Err(Error::usage("mode index m must be at least 1"));
    }
    Ok(())
}

impl FockSpace {
    /// `q_m(α)`: multiplication by `t^{-m}α`. Charge `m`, degree `|α| + md`.
    pub fn create(&self, basis: &FockBasis, m: u32, alpha: &Element) -> Result<FockOperator> {
        check_level(m)?;
        let degree = alpha.degree() + (m * self.d()) as i32;
        Ok(FockOperator::from_action(
            basis,
            m as i32,
            degree,
            alpha.odd(),
            |s| {
                let mut v = FockVector::zero();
                for (g, c) in alpha.terms() {
                    if let Some((negative, t)) = create_state(m, *g, s) {
                        v.add_term(t, if negative { -c.clone() } else { c.clone() });
                    }
                }
                v
            },
        ))
    }

    /// `p_m(α)`: `m` times the contraction by `t^m α`, a super-derivation
    /// with `p_m(α)(t^{-m}β) = m·η(α, β)`. Charge `-m`; it meets only
    /// factors of degree `-|α|` and so has degree `|α| - md`.
    pub fn annihilate(&self, basis: &FockBasis, m: u32, alpha: &Element) -> Result<FockOperator> {
        check_level(m)?;
        let degree = alpha.degree() - (m * self.d()) as i32;
        Ok(FockOperator::from_action(
            basis,
            -(m as i32),
            degree,
            alpha.odd(),
            |s| {
                let mut v = FockVector::zero();
                for (g, c) in alpha.terms() {
                    v.add(&annihilate_state(self, m, *g, s).scale(c));
                }
                v
            },
        ))
    }
}
