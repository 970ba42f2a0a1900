use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::orbifold::{ManifoldData, PairingBlock};
use crate::{Error, Rational, Result};

use super::generators;

/// The pairing `η` on the basis of `H*(X)`, as a dense matrix indexed by
/// generator id.
///
/// Validated on construction: `η` has degree 0 (shifted degrees `j` and
/// `-j` pair), is graded symmetric `η(a,b) = (-1)^{āb̄} η(b,a)`, and is
/// nondegenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    entries: Vec<Vec<Rational>>,
}

fn offsets(x: &ManifoldData) -> Vec<usize> {
    let mut out = Vec::with_capacity(x.dim_real() as usize + 2);
    let mut acc = 0;
    for j in 0..=x.dim_real() {
        out.push(acc);
        acc += x.betti_at(j) as usize;
    }
    out.push(acc);
    out
}

fn sign(odd: bool, c: &Rational) -> Rational {
    if odd {
        -c.clone()
    } else {
        c.clone()
    }
}

impl PairingMatrix {
    /// Builds `η` from unshifted-degree blocks. A block `(i, j)` whose
    /// transpose `(j, i)` is absent determines it by graded symmetry.
    pub fn from_blocks(x: &ManifoldData, blocks: &[PairingBlock]) -> Result<Self> {
        let n = generators(x).len();
        let off = offsets(x);
        let top = x.dim_real();
        let mut entries = vec![vec![Rational::zero(); n]; n];
        let mut given = vec![vec![false; top as usize + 1]; top as usize + 1];
        for block in blocks {
            let (i, j) = block.degrees;
            if i > top || j > top || i + j != top {
                return Err(Error::input(format!(
                    "pairing block ({i}, {j}) does not pair complementary degrees of a {top}-manifold"
                )));
            }
            let (bi, bj) = (x.betti_at(i) as usize, x.betti_at(j) as usize);
            if block.matrix.len() != bi || block.matrix.iter().any(|r| r.len() != bj) {
                return Err(Error::input(format!(
                    "pairing block ({i}, {j}) must be {bi}x{bj}"
                )));
            }
            if given[i as usize][j as usize] {
                return Err(Error::input(format!(
                    "pairing block ({i}, {j}) given twice"
                )));
            }
            given[i as usize][j as usize] = true;
            for (r, row) in block.matrix.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    entries[off[i as usize] + r][off[j as usize] + c] = v.clone();
                }
            }
        }
        for i in 0..=top {
            let j = top - i;
            if given[i as usize][j as usize] && !given[j as usize][i as usize] {
                let odd = i % 2 == 1;
                for r in 0..x.betti_at(i) as usize {
                    for c in 0..x.betti_at(j) as usize {
                        let v = sign(odd, &entries[off[i as usize] + r][off[j as usize] + c]);
                        entries[off[j as usize] + c][off[i as usize] + r] = v;
                    }
                }
            }
        }
        let p = PairingMatrix { entries };
        p.validate(x)?;
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, a: usize, b: usize) -> &Rational {
        &self.entries[a][b]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    fn validate(&self, x: &ManifoldData) -> Result<()> {
        let gens = generators(x);
        for a in &gens {
            for b in &gens {
                let v = self.get(a.id, b.id);
                if v.is_zero() {
                    continue;
                }
                if a.degree + b.degree != 0 {
                    return Err(Error::input(format!(
                        "pairing is not of degree 0: η(e{}, e{}) ≠ 0",
                        a.id, b.id
                    )));
                }
                if *self.get(b.id, a.id) != sign(a.odd && b.odd, v) {
                    return Err(Error::input(format!(
                        "pairing is not graded symmetric at (e{}, e{})",
                        a.id, b.id
                    )));
                }
            }
        }
        if rank(&self.entries) != gens.len() {
            return Err(Error::input("pairing is degenerate"));
        }
        Ok(())
    }
}

/// Rank by exact Gaussian elimination.
fn rank(m: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        let (top, rest) = a.split_at_mut(r + 1);
        let row = &top[r];
        for other in rest {
            if other[c].is_zero() {
                continue;
            }
            let f = &other[c] / &pivot;
            for (x, y) in other[c..].iter_mut().zip(&row[c..]) {
                *x -= &f * y;
            }
        }
        r += 1;
    }
    r
}

/// Identity blocks between complementary degrees; the middle block is the
/// identity in even degree and the standard symplectic form in odd degree.
pub fn default_pairing(x: &ManifoldData) -> Result<PairingMatrix> {
    x.check_duality()?;
    let d = x.m();
    let mid = x.betti_at(d) as usize;
    let mut blocks = Vec::new();
    for i in 0..d {
        let b = x.betti_at(i) as usize;
        blocks.push(PairingBlock {
            degrees: (i, x.dim_real() - i),
            matrix: identity(b),
        });
    }
    if d.is_multiple_of(2) {
        blocks.push(PairingBlock {
            degrees: (d, d),
            matrix: identity(mid),
        });
    } else {
        if mid % 2 == 1 {
            return Err(Error::input(format!(
                "{} has odd b_{d}; no nondegenerate antisymmetric form exists",
                x.name()
            )));
        }
        let half = mid / 2;
        let mut m = vec![vec![Rational::zero(); mid]; mid];
        for i in 0..half {
            m[i][i + half] = Rational::one();
            m[i + half][i] = -Rational::one();
        }
        blocks.push(PairingBlock {
            degrees: (d, d),
            matrix: m,
        });
    }
    PairingMatrix::from_blocks(x, &blocks)
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::catalog;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn p2_default() {
        let p = default_pairing(&catalog::p2()).unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(*p.get(0, 2), int(1));
        assert_eq!(*p.get(2, 0), int(1));
        assert_eq!(*p.get(1, 1), int(1));
        assert_eq!(*p.get(0, 0), int(0));
    }

    #[test]
    fn k3_middle_block() {
        let p = default_pairing(&catalog::k3()).unwrap();
        assert_eq!(p.dim(), 24);
        for i in 1..23 {
            for j in 1..23 {
                assert_eq!(*p.get(i, j), int((i == j) as i64));
            }
        }
    }

    #[test]
    fn elliptic_symplectic() {
        let p = default_pairing(&catalog::elliptic_curve()).unwrap();
        assert_eq!(*p.get(1, 2), int(1));
        assert_eq!(*p.get(2, 1), int(-1));
    }

    #[test]
    fn odd_middle_of_odd_dimension() {
        let x = ManifoldData::real("odd", 2, &[1, 1, 1]).unwrap();
        assert!(matches!(default_pairing(&x), Err(Error::Input(_))));
    }

    #[test]
    fn rejects_bad_blocks() {
        let x = catalog::p2();
        let asym = PairingBlock {
            degrees: (0, 4),
            matrix: vec![vec![int(1)]],
        };
        let wrong = PairingBlock {
            degrees: (4, 0),
            matrix: vec![vec![int(2)]],
        };
        let mid = PairingBlock {
            degrees: (2, 2),
            matrix: vec![vec![int(1)]],
        };
        assert!(PairingMatrix::from_blocks(&x, &[asym.clone(), mid.clone()]).is_ok());
        assert!(PairingMatrix::from_blocks(&x, &[asym.clone(), wrong, mid.clone()]).is_err());
        let off_degree = PairingBlock {
            degrees: (0, 2),
            matrix: vec![vec![int(1)]],
        };
        assert!(PairingMatrix::from_blocks(&x, &[asym.clone(), mid, off_degree]).is_err());
        let zero_mid = PairingBlock {
            degrees: (2, 2),
            matrix: vec![vec![int(0)]],
        };
        assert!(matches!(
            PairingMatrix::from_blocks(&x, &[asym, zero_mid]),
            Err(Error::Input(_))
        ));
    }
}
