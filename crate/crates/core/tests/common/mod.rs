//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code it checks.

#![allow(dead_code)]

use std::collections::BTreeMap;

use symprod_core::gvs::GradedDims;
use symprod_core::series::HalfExp;
use symprod_core::symgrp::CycleType;

/// All permutations of `0..n` in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Cycle lengths of a permutation, descending.
pub fn cycle_lengths(p: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// A permutation of the given cycle type: consecutive blocks are cycles.
pub fn representative(c: &CycleType) -> Vec<usize> {
    let mut p = Vec::new();
    for l in c.parts() {
        let base = p.len();
        for i in 0..l as usize {
            p.push(base + (i + 1) % l as usize);
        }
    }
    p
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// `|{τ : τσ = στ}|` by enumerating `Sₙ`.
pub fn brute_centralizer(sigma: &[usize], all: &[Vec<usize>]) -> u64 {
    all.iter()
        .filter(|t| compose(t, sigma) == compose(sigma, t))
        .count() as u64
}

/// `dim Sⁿ(V)` degree by degree, by listing the monomials in a basis of `V`:
/// non-decreasing index sequences, strictly increasing on odd elements.
pub fn sym_power_by_enumeration(betti: &[u64], n: usize) -> BTreeMap<i32, u64> {
    let basis: Vec<i32> = betti
        .iter()
        .enumerate()
        .flat_map(|(d, &b)| std::iter::repeat_n(d as i32, b as usize))
        .collect();
    let mut out = BTreeMap::new();
    fn go(basis: &[i32], from: usize, left: usize, deg: i32, out: &mut BTreeMap<i32, u64>) {
        if left == 0 {
            *out.entry(deg).or_insert(0) += 1;
            return;
        }
        for i in from..basis.len() {
            let next = if basis[i] % 2 == 1 { i + 1 } else { i };
            go(basis, next, left - 1, deg + basis[i], out);
        }
    }
    go(&basis, 0, n, 0, &mut out);
    out
}

pub fn as_map(v: &GradedDims) -> BTreeMap<i32, u64> {
    v.iter()
        .filter(|(_, b)| *b > 0)
        .map(|(d, b)| (d.to_integer().expect("integral degree"), b))
        .collect()
}

pub fn graded(betti: &[u64]) -> GradedDims {
    let mut v = GradedDims::new();
    for (d, &b) in betti.iter().enumerate() {
        v.add(HalfExp::from_int(d as i32), b);
    }
    v
}

/// Every Betti vector of length 4 with entries at most 2 and total
/// dimension between 1 and 6.
pub fn small_betti_vectors() -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for code in 0..81u32 {
        let v: Vec<u64> = (0..4).map(|i| ((code / 3u32.pow(i)) % 3) as u64).collect();
        let total: u64 = v.iter().sum();
        if (1..=6).contains(&total) {
            out.push(v);
        }
    }
    out
}

pub fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}
