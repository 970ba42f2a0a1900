//! Canonical text form: `1 + 2*q - 3/8*t^(3/2)*q^2`.
//!
//! Terms appear in canonical order (truncation exponent ascending, then
//! `t, x, y` and the other counting variable ascending). Inside a term the
//! variables are written `t, x, y`, other counting variable, truncation
//! variable. Coefficient 1 and exponent 1 are omitted; half-integer and
//! negative exponents are parenthesized.

use core::fmt;

use num_traits::{One, Signed};

use super::{HalfExp, Monomial, Series, VarId};

fn write_exp(f: &mut fmt::Formatter<'_>, e: HalfExp) -> fmt::Result {
    match e.to_integer() {
        Some(1) => Ok(()),
        Some(n) if n >= 0 => write!(f, "^{}", n),
        _ => write!(f, "^({})", e),
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, trunc: VarId, m: &Monomial) -> fmt::Result {
    let order = [
        VarId::T,
        VarId::X,
        VarId::Y,
        if trunc == VarId::Q {
            VarId::P
        } else {
            VarId::Q
        },
        trunc,
    ];
    let mut first = true;
    for v in order {
        let e = m.exp(v);
        if e.doubled() == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(v.name())?;
        write_exp(f, e)?;
    }
    Ok(())
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i == 0, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                write_monomial(f, self.trunc, &m)?;
            }
        }
        Ok(())
    }
}
