use alloc::format;

use num_traits::{One, Zero};

use super::{HalfExp, Monomial, Series, VarId};
use crate::{Error, Rational, Result};

fn finite_order(order: u32) -> Result<u32> {
    if order == Series::EXACT {
        return Err(Error::usage("expansion needs a finite truncation order"));
    }
    Ok(order)
}

/// Truncation exponent of a monomial that must start a power series.
fn positive_level(trunc: VarId, m: &Monomial) -> Result<u32> {
    match m.exp(trunc).to_integer() {
        Some(e) if e > 0 => Ok(e as u32),
        _ => Err(Error::usage(format!(
            "monomial must carry a positive integer power of {}; the expansion would not be finite",
            trunc
        ))),
    }
}

impl Series {
    /// `(1 + sign·m)^alpha` by the generalized binomial series.
    pub fn binom_pow(
        trunc: VarId,
        order: u32,
        sign: i8,
        m: &Monomial,
        alpha: &Rational,
    ) -> Result<Series> {
        if sign != 1 && sign != -1 {
            return Err(Error::usage("sign must be +1 or -1"));
        }
        let order = finite_order(order)?;
        let step = positive_level(trunc, m)?;
        let mut out = Series::one(trunc, order);
        let mut coeff = Rational::one();
        let mut power = Monomial::ONE;
        let mut j: u32 = 0;
        while (j + 1) as u64 * step as u64 <= order as u64 {
            // C(alpha, j+1) = C(alpha, j) * (alpha - j) / (j + 1)
            coeff = coeff * (alpha - Rational::from_integer(j.into()))
                / Rational::from_integer((j + 1).into());
            j += 1;
            power = power.mul(m);
            if coeff.is_zero() {
                break;
            }
            let c = if sign < 0 && j % 2 == 1 {
                -&coeff
            } else {
                coeff.clone()
            };
            out.push(power, c)?;
        }
        Ok(out)
    }

    /// `exp(a)` for `a` without terms of truncation degree zero.
    pub fn exp_series(&self) -> Result<Series> {
        let order = finite_order(self.order)?;
        if self.terms.keys().any(|k| k[0] == 0) {
            return Err(Error::usage(
                "exp needs a series without terms of truncation degree zero",
            ));
        }
        let mut out = Series::one(self.trunc, order);
        let mut power = Series::one(self.trunc, order);
        for j in 1..=order {
            power = power.mul(self)?.scale(&Rational::new(One::one(), j.into()));
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// `log(1 - m) = -Σ_{j≥1} m^j / j`.
    pub fn log1m(trunc: VarId, order: u32, m: &Monomial) -> Result<Series> {
        let order = finite_order(order)?;
        let step = positive_level(trunc, m)?;
        let mut out = Series::zero(trunc, order);
        let mut power = Monomial::ONE;
        let mut j: u32 = 1;
        while j as u64 * step as u64 <= order as u64 {
            power = power.mul(m);
            out.push(power, -Rational::new(One::one(), j.into()))?;
            j += 1;
        }
        Ok(out)
    }

    /// `∏_{l=1}^{order} factor(l)`.
    ///
    /// Each factor must be `1 + O(trunc^l)`, so levels beyond the order
    /// contribute nothing. Factors are multiplied in increasing `l`.
    pub fn product_over_levels<F>(trunc: VarId, order: u32, mut factor: F) -> Result<Series>
    where
        F: FnMut(u32) -> Result<Series>,
    {
        let order = finite_order(order)?;
        let mut acc = Series::one(trunc, order);
        for l in 1..=order {
            let f = factor(l)?;
            if f.trunc != trunc {
                return Err(Error::usage("factor has a different truncation variable"));
            }
            if f.slice(0) != Series::one(trunc, Series::EXACT) {
                return Err(Error::usage(format!(
                    "factor at level {} does not have constant term 1",
                    l
                )));
            }
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    /// `1 / (1 - m)` as a truncated geometric series.
    pub fn geometric(trunc: VarId, order: u32, m: &Monomial) -> Result<Series> {
        Series::binom_pow(trunc, order, -1, m, &-Rational::one())
    }
}

/// Convenience: the monomial `v^e` for a half-integer `e`.
pub fn var_pow(v: VarId, e: HalfExp) -> Monomial {
    Monomial::ONE.with(v, e)
}
