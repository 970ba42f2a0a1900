use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::series::{Monomial, Series, VarId};
use crate::Rational;

use super::Generator;

/// A factor `t^{-l} g` of a Fock monomial.
pub type Factor = (u32, Generator);

/// A monomial `∏ t^{-lᵢ} gᵢ` of the Fock space, with factors sorted by
/// `(level, degree, id)`. No odd factor repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockState {
    factors: Vec<Factor>,
}

impl FockState {
    pub fn vacuum() -> Self {
        FockState::default()
    }

    /// Sorts `factors` into canonical order. Returns the Koszul sign of the
    /// reordering (`true` for `-1`) and the state, or `None` when an odd
    /// factor repeats and the product vanishes.
    pub fn canonical(mut factors: Vec<Factor>) -> Option<(bool, FockState)> {
        let mut negative = false;
        // insertion sort, one adjacent transposition at a time
        for i in 1..factors.len() {
            let mut j = i;
            while j > 0 && factors[j - 1] > factors[j] {
                if factors[j - 1].1.odd && factors[j].1.odd {
                    negative = !negative;
                }
                factors.swap(j - 1, j);
                j -= 1;
            }
        }
        if factors.windows(2).any(|w| w[0] == w[1] && w[0].1.odd) {
            return None;
        }
        Some((negative, FockState { factors }))
    }

    pub(crate) fn from_sorted(factors: Vec<Factor>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        FockState { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_vacuum(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Σ lᵢ`.
    pub fn charge(&self) -> u32 {
        self.factors.iter().map(|f| f.0).sum()
    }

    /// `Σ (|gᵢ| + lᵢ d)`.
    pub fn degree(&self, d: u32) -> i32 {
        self.factors
            .iter()
            .map(|&(l, g)| g.degree + (l * d) as i32)
            .sum()
    }

    pub fn odd(&self) -> bool {
        self.factors.iter().filter(|f| f.1.odd).count() % 2 == 1
    }

    /// The state with factor `i` removed; canonical order is preserved.
    pub fn without(&self, i: usize) -> FockState {
        let mut factors = self.factors.clone();
        factors.remove(i);
        FockState { factors }
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("|0>");
        }
        for (i, (l, g)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "e{}[-{}]", g.id, l)?;
        }
        Ok(())
    }
}

/// A finite rational combination of states.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<FockState, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn state(s: FockState) -> Self {
        let mut v = FockVector::zero();
        v.add_term(s, Rational::one());
        v
    }

    /// `c·(canonical form of factors)`, absorbing the Koszul sign.
    pub fn from_factors(factors: Vec<Factor>, c: Rational) -> Self {
        let mut v = FockVector::zero();
        if let Some((negative, s)) = FockState::canonical(factors) {
            v.add_term(s, if negative { -c } else { c });
        }
        v
    }

    pub fn add_term(&mut self, s: FockState, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &FockVector) {
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> FockVector {
        let mut v = FockVector::zero();
        for (s, x) in &self.terms {
            v.add_term(s.clone(), x * c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &FockState) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockState, &Rational)> + '_ {
        self.terms.iter()
    }
}

/// Every canonical state of charge at most `max_charge`, ordered by
/// `(charge, degree, factors)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockBasis {
    d: u32,
    max_charge: u32,
    states: Vec<FockState>,
    index: BTreeMap<FockState, usize>,
}

impl FockBasis {
    pub(crate) fn new(generators: &[Generator], d: u32, max_charge: u32) -> Self {
        let mut slots = Vec::new();
        for l in 1..=max_charge {
            let mut gens = generators.to_vec();
            gens.sort();
            slots.extend(gens.into_iter().map(|g| (l, g)));
        }
        let mut states = Vec::new();
        let mut current = Vec::new();
        enumerate(&slots, 0, max_charge, &mut current, &mut states);
        states.sort_by_cached_key(|s| (s.charge(), s.degree(d), s.clone()));
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        FockBasis {
            d,
            max_charge,
            states,
            index,
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn max_charge(&self) -> u32 {
        self.max_charge
    }

    pub fn states(&self) -> &[FockState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, i: usize) -> &FockState {
        &self.states[i]
    }

    pub fn index_of(&self, s: &FockState) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// `Σ_states q^{charge} t^{degree}`, to order `max_charge`.
    pub fn character(&self) -> Series {
        let mut out = Series::zero(VarId::Q, self.max_charge);
        for s in &self.states {
            let m = Monomial::ONE
                .with_int(VarId::Q, s.charge() as i32)
                .with_int(VarId::T, s.degree(self.d));
            out.push(m, Rational::one())
                .expect("basis states lie within the truncation");
        }
        out
    }
}

fn enumerate(
    slots: &[Factor],
    from: usize,
    remaining: u32,
    current: &mut Vec<Factor>,
    out: &mut Vec<FockState>,
) {
    out.push(FockState {
        factors: current.clone(),
    });
    for i in from..slots.len() {
        let (l, g) = slots[i];
        if l > remaining {
            break;
        }
        current.push(slots[i]);
        // an even factor may repeat, an odd one may not
        let next = if g.odd { i + 1 } else { i };
        enumerate(slots, next, remaining - l, current, out);
        current.pop();
    }
}
