//! Hirzebruch genera read off bigraded dimensions.

use alloc::format;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::gvs::BigradedDims;
use crate::series::{HalfExp, Monomial, Series, VarId};
use crate::{Error, Rational, Result};

/// Which genus to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    /// `χ_y = Σ (-1)^t h^{s,t} y^s`; needs integer `t`.
    ChiY,
    /// `χ_{-y} = Σ (-1)^{s+t} h^{s,t} y^s`; defined whenever `s + t ∈ ℤ`.
    ChiNegY,
    /// `χ_1`.
    Signature,
    /// `χ_0`.
    Arithmetic,
    /// `χ_{-1} = Σ (-1)^{s+t} h^{s,t}`.
    Euler,
}

fn sign_of(e: HalfExp, what: &str) -> Result<i64> {
    match e.to_integer() {
        Some(i) if i.rem_euclid(2) == 1 => Ok(-1),
        Some(_) => Ok(1),
        None => Err(Error::domain(format!(
            "(-1)^({}) is undefined in {}",
            e, what
        ))),
    }
}

/// The genus as an exact series in `y` (a constant for the numeric genera).
pub fn genus(dims: &BigradedDims, which: Genus) -> Result<Series> {
    let mut out = Series::zero(VarId::Q, Series::EXACT);
    for (d, h) in dims.iter() {
        let h = BigInt::from(h);
        let (sign, y_exp) = match which {
            Genus::ChiY => (sign_of(d.q, "chi_y")?, d.p),
            Genus::ChiNegY => (sign_of(d.total(), "chi_-y")?, d.p),
            Genus::Signature => (sign_of(d.q, "the signature")?, HalfExp::ZERO),
            Genus::Arithmetic => {
                if d.p != HalfExp::ZERO {
                    continue;
                }
                (sign_of(d.q, "the arithmetic genus")?, HalfExp::ZERO)
            }
            Genus::Euler => (sign_of(d.total(), "the Euler number")?, HalfExp::ZERO),
        };
        let m = Monomial::ONE.with(VarId::Y, y_exp);
        out.push(m, Rational::from_integer(h * sign))?;
    }
    Ok(out)
}

/// A numeric genus as an integer; `ChiY` and `ChiNegY` are rejected.
pub fn genus_value(dims: &BigradedDims, which: Genus) -> Result<BigInt> {
    if matches!(which, Genus::ChiY | Genus::ChiNegY) {
        return Err(Error::usage("chi_y is a polynomial, not a number"));
    }
    let c = genus(dims, which)?.constant_term();
    debug_assert!(c.is_integer());
    Ok(if c.is_zero() {
        BigInt::zero()
    } else {
        c.to_integer()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gvs::BiDegree;
    use alloc::string::ToString;
    use alloc::vec;

    fn k3() -> BigradedDims {
        BigradedDims::from_table(&[vec![1u64, 0, 1], vec![0, 20, 0], vec![1, 0, 1]])
    }

    #[test]
    fn k3_genera() {
        assert_eq!(
            genus(&k3(), Genus::ChiY).unwrap().to_string(),
            "2 - 20*y + 2*y^2"
        );
        assert_eq!(
            genus(&k3(), Genus::ChiNegY).unwrap().to_string(),
            "2 + 20*y + 2*y^2"
        );
        assert_eq!(
            genus_value(&k3(), Genus::Signature).unwrap(),
            BigInt::from(-16)
        );
        assert_eq!(
            genus_value(&k3(), Genus::Arithmetic).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(genus_value(&k3(), Genus::Euler).unwrap(), BigInt::from(24));
    }

    #[test]
    fn point_genera() {
        let pt = BigradedDims::unit();
        for g in [
            Genus::ChiY,
            Genus::ChiNegY,
            Genus::Signature,
            Genus::Arithmetic,
            Genus::Euler,
        ] {
            assert_eq!(genus(&pt, g).unwrap().to_string(), "1");
        }
    }

    #[test]
    fn half_integer_bidegrees() {
        let mut w = BigradedDims::new();
        let h = HalfExp::from_doubled(1);
        w.add(BiDegree::new(h, h), 1).unwrap();
        assert_eq!(genus(&w, Genus::ChiNegY).unwrap().to_string(), "-y^(1/2)");
        assert_eq!(genus_value(&w, Genus::Euler).unwrap(), BigInt::from(-1));
        assert!(matches!(genus(&w, Genus::ChiY), Err(Error::Domain(_))));
        assert_eq!(genus_value(&w, Genus::Arithmetic).unwrap(), BigInt::zero());
    }
}
