use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::gvs::{BigradedDims, GradedDims};
use crate::series::HalfExp;
use crate::{Error, Rational, Result};

/// Whether a manifold carries a complex structure (and hence Hodge data).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ManifoldKind {
    Real,
    Complex,
}

/// A user-supplied block of the cohomology pairing: entry `[i][j]` is
/// `η(e_i, f_j)` for the `i`-th basis class in degree `degrees.0` and the
/// `j`-th basis class in degree `degrees.1` (unshifted degrees).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingBlock {
    pub degrees: (u32, u32),
    pub matrix: Vec<Vec<Rational>>,
}

/// The input description of a closed manifold `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldData {
    name: String,
    dim_real: u32,
    dim_c: Option<u32>,
    betti: Vec<u64>,
    hodge: Option<Vec<Vec<u64>>>,
    hodge_b: Option<Vec<Vec<u64>>>,
    calabi_yau: bool,
    pairing: Option<Vec<PairingBlock>>,
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn check_table(table: &[Vec<u64>], dim_c: u32, what: &str) -> Result<()> {
    for (p, row) in table.iter().enumerate() {
        for (q, &h) in row.iter().enumerate() {
            if h > 0 && (p as u32 > dim_c || q as u32 > dim_c) {
                return Err(Error::input(format!(
                    "{} has h[{}][{}] = {} outside the range 0..={}",
                    what, p, q, h, dim_c
                )));
            }
        }
    }
    Ok(())
}

impl ManifoldData {
    /// A real manifold known only through its Betti numbers.
    pub fn real(name: impl Into<String>, dim_real: u32, betti: &[u64]) -> Result<Self> {
        if !dim_real.is_multiple_of(2) {
            return Err(Error::input(format!(
                "real dimension {} must be even",
                dim_real
            )));
        }
        let betti = trim(betti.to_vec());
        if betti.len() as u32 > dim_real + 1 {
            return Err(Error::input(format!(
                "Betti numbers extend past the real dimension {}",
                dim_real
            )));
        }
        if betti.first().copied().unwrap_or(0) == 0 {
            return Err(Error::input("b_0 must be positive"));
        }
        Ok(ManifoldData {
            name: name.into(),
            dim_real,
            dim_c: None,
            betti,
            hodge: None,
            hodge_b: None,
            calabi_yau: false,
            pairing: None,
        })
    }

    /// A complex manifold given by its Hodge table `h[p][q]`; Betti numbers
    /// are the antidiagonal sums.
    pub fn complex(name: impl Into<String>, dim_c: u32, hodge: &[Vec<u64>]) -> Result<Self> {
        check_table(hodge, dim_c, "Hodge table")?;
        let mut betti = alloc::vec![0u64; 2 * dim_c as usize + 1];
        for (p, row) in hodge.iter().enumerate() {
            for (q, &h) in row.iter().enumerate() {
                betti[p + q] += h;
            }
        }
        let mut x = ManifoldData::real(name, 2 * dim_c, &betti)?;
        x.dim_c = Some(dim_c);
        x.hodge = Some(hodge.to_vec());
        Ok(x)
    }

    /// Checks explicitly given Betti numbers against the Hodge table.
    pub fn check_betti(&self, betti: &[u64]) -> Result<()> {
        if trim(betti.to_vec()) != self.betti {
            return Err(Error::input(format!(
                "Betti numbers {:?} disagree with the Hodge table, which gives {:?}",
                betti, self.betti
            )));
        }
        Ok(())
    }

    /// Attaches an explicit table `ĥ[p][q] = h^{-p,q}`.
    pub fn with_hodge_b(mut self, table: &[Vec<u64>]) -> Result<Self> {
        let d = self.require_complex()?;
        check_table(table, d, "B-table")?;
        self.hodge_b = Some(table.to_vec());
        Ok(self)
    }

    /// Marks the manifold Calabi–Yau; derives the B-table from Serre duality
    /// unless one is already attached.
    pub fn with_calabi_yau(mut self) -> Result<Self> {
        self.require_complex()?;
        self.calabi_yau = true;
        if self.hodge_b.is_none() {
            let table = derive_b_table(&self)?;
            self.hodge_b = Some(table);
        }
        Ok(self)
    }

    pub fn with_pairing(mut self, blocks: Vec<PairingBlock>) -> Self {
        self.pairing = Some(blocks);
        self
    }

    fn require_complex(&self) -> Result<u32> {
        self.dim_c
            .ok_or_else(|| Error::input(format!("{} has no complex structure", self.name)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ManifoldKind {
        if self.dim_c.is_some() {
            ManifoldKind::Complex
        } else {
            ManifoldKind::Real
        }
    }

    pub fn dim_real(&self) -> u32 {
        self.dim_real
    }

    /// Half the real dimension.
    pub fn m(&self) -> u32 {
        self.dim_real / 2
    }

    pub fn dim_c(&self) -> Option<u32> {
        self.dim_c
    }

    /// `k = dim_C / 2` as a half-integer.
    pub fn k(&self) -> Result<HalfExp> {
        Ok(HalfExp::from_doubled(self.require_complex()? as i32))
    }

    pub fn is_calabi_yau(&self) -> bool {
        self.calabi_yau
    }

    /// `b_0, b_1, …, b_top` with trailing zeros removed.
    pub fn betti_numbers(&self) -> &[u64] {
        &self.betti
    }

    pub fn betti(&self) -> GradedDims {
        GradedDims::from_betti(&self.betti)
    }

    pub fn hodge_table(&self) -> Option<&[Vec<u64>]> {
        self.hodge.as_deref()
    }

    pub fn hodge_b_table(&self) -> Option<&[Vec<u64>]> {
        self.hodge_b.as_deref()
    }

    /// `h^{p,q}` as bigraded dimensions; input error when absent.
    pub fn hodge(&self) -> Result<BigradedDims> {
        self.hodge
            .as_deref()
            .map(BigradedDims::from_table)
            .ok_or_else(|| Error::input(format!("{} has no Hodge table", self.name)))
    }

    /// `h^{-p,q}` stored at `(p, q)`; input error when absent.
    pub fn hodge_b(&self) -> Result<BigradedDims> {
        self.hodge_b
            .as_deref()
            .map(BigradedDims::from_table)
            .ok_or_else(|| Error::input(format!("{} has no B-table", self.name)))
    }

    pub fn pairing(&self) -> Option<&[PairingBlock]> {
        self.pairing.as_deref()
    }

    pub fn betti_at(&self, d: u32) -> u64 {
        self.betti.get(d as usize).copied().unwrap_or(0)
    }

    /// Poincaré duality `b_d = b_{2m-d}`.
    pub fn check_duality(&self) -> Result<()> {
        for d in 0..=self.dim_real {
            if self.betti_at(d) != self.betti_at(self.dim_real - d) {
                return Err(Error::input(format!(
                    "Poincaré duality fails: b_{} = {} but b_{} = {}",
                    d,
                    self.betti_at(d),
                    self.dim_real - d,
                    self.betti_at(self.dim_real - d)
                )));
            }
        }
        Ok(())
    }

    /// `χ(X) = Σ (-1)^d b_d`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| {
                if d % 2 == 0 {
                    BigInt::from(b)
                } else {
                    -BigInt::from(b)
                }
            })
            .sum()
    }
}

/// The B-table of a Calabi–Yau manifold from Serre duality:
/// `h^{-p,q} = h^{d-p,q}` with `d = dim_C`.
pub fn derive_b_table(x: &ManifoldData) -> Result<Vec<Vec<u64>>> {
    let d = x.require_complex()? as usize;
    let hodge = x
        .hodge
        .as_ref()
        .ok_or_else(|| Error::input(format!("{} has no Hodge table", x.name)))?;
    let h = |p: usize, q: usize| hodge.get(p).and_then(|r| r.get(q)).copied().unwrap_or(0);
    Ok((0..=d)
        .map(|p| (0..=d).map(|q| h(d - p, q)).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn betti_from_hodge() {
        let k3 = ManifoldData::complex("K3", 2, &[vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]])
            .unwrap();
        assert_eq!(k3.betti_numbers(), &[1, 0, 22, 0, 1]);
        assert_eq!(k3.euler_characteristic(), BigInt::from(24));
        assert!(k3.check_duality().is_ok());
        let pt = ManifoldData::complex("point", 0, &[vec![1]]).unwrap();
        assert_eq!(pt.betti_numbers(), &[1]);
        assert_eq!(pt.dim_real(), 0);
    }

    #[test]
    fn duality_violation() {
        let x = ManifoldData::real("bad", 4, &[1, 1, 0, 0, 1]).unwrap();
        assert!(matches!(x.check_duality(), Err(Error::Input(_))));
    }

    #[test]
    fn inconsistent_betti() {
        let p1 = ManifoldData::complex("P1", 1, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(p1.check_betti(&[1, 0, 1]).is_ok());
        assert!(p1.check_betti(&[1, 2, 1]).is_err());
    }

    #[test]
    fn b_tables() {
        let e = ManifoldData::complex("E", 1, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(derive_b_table(&e).unwrap(), vec![vec![1, 1], vec![1, 1]]);
        let skew = ManifoldData::complex("skew", 1, &[vec![1, 2], vec![3, 4]]).unwrap();
        // rows swap when d = 1
        assert_eq!(derive_b_table(&skew).unwrap(), vec![vec![3, 4], vec![1, 2]]);
        let k3 = ManifoldData::complex("K3", 2, &[vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]])
            .unwrap();
        assert_eq!(
            derive_b_table(&k3).unwrap(),
            k3.hodge_table().unwrap().to_vec()
        );
        let pt = ManifoldData::complex("point", 0, &[vec![1]]).unwrap();
        assert_eq!(derive_b_table(&pt).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn rejects_out_of_range_table() {
        assert!(ManifoldData::complex("bad", 1, &[vec![1, 0, 1]]).is_err());
        assert!(ManifoldData::real("odd", 3, &[1]).is_err());
    }
}
