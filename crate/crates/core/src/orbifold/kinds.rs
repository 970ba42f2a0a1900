//! The closed-form families.
//!
//! Notation: `b_d`, `h^{s,t}`, `ĥ^{s,t} = h^{-s,t}` are the Betti, Hodge and
//! B-Hodge numbers of `X`; `2m = dim_R X`, `k = dim_C X / 2`, `χ` the Euler
//! number, `σ` the signature, `p_a = χ_0`. A factor `⟨w⟩^e` means
//! `(1 + w)^e` when `w` is odd and `(1 - w)^{-e}` when `w` is even; the
//! parity is given in each row.
//!
//! | tag | left side (brute) | right side (closed) |
//! |---|---|---|
//! | `euler_sym` | `Σ χ(X^{(n)}) qⁿ` | `(1 - q)^{-χ}` |
//! | `euler_orb` | `Σ_n Σ_N ∏_l χ(X^{(N_l)}) qⁿ` | `∏_l (1 - q^l)^{-χ}` |
//! | `poincare_sym` | `Σ p_t(X^{(n)}) qⁿ` | `∏_d ⟨t^d q⟩^{b_d}`, parity of `d` |
//! | `poincare_orb` | `Σ p_t(Xⁿ, Sₙ) qⁿ` | `∏_l ∏_d ⟨t^{d+m(l-1)} q^l⟩^{b_d}`, parity of `d + m(l-1)` |
//! | `hodge_sym` | `Σ h_{x,y}(X^{(n)}) qⁿ` | `∏_{s,t} ⟨x^s y^t q⟩^{h^{s,t}}`, parity of `s + t` |
//! | `hodge_orb` | `Σ h_{x,y}(Xⁿ, Sₙ) qⁿ` | `∏_l ∏_{s,t} ⟨x^{s+k(l-1)} y^{t+k(l-1)} q^l⟩^{h^{s,t}}`, parity of `s + t + 2k(l-1)` |
//! | `chiy_sym` | `Σ χ_{-y}(X^{(n)}) qⁿ` | `exp(Σ_{m≥1} χ_{-y^m}(X) q^m / m)` |
//! | `arith_sym` | `Σ χ_0(X^{(n)}) qⁿ` | `(1 - q)^{-p_a}` |
//! | `sign_sym` | `Σ χ_1(X^{(n)}) qⁿ` | `(1 - q²)^{-χ/2} ((1 + q)/(1 - q))^{σ/2}` |
//! | `chiy_orb` | `Σ_n Σ_N y^{F_N} χ_{-y}(∏_l X^{(N_l)}) qⁿ` | `exp(Σ_{n≥1} χ_{-yⁿ}(X) qⁿ / (n (1 - (y^k q)ⁿ)))` |
//! | `arith_orb` | `chiy_orb` at `y = 0` | `(1 - q)^{-p_a}`, needs `k > 0` |
//! | `sign_orb` | `Σ_n Σ_N (-1)^{F_N} χ_1(∏_l X^{(N_l)}) qⁿ` | `∏_m (1 - q^{2m})^{-χ/2} ((1 + q^m)/(1 - q^m))^{(-1)^{k(m+1)} σ/2}`, needs `k ∈ ℤ` |
//! | `hodge_sym_b` | `hodge_sym` on `ĥ` | `∏_{s,t} ⟨x^s y^t q⟩^{ĥ^{s,t}}` |
//! | `chiy_sym_b` | `chiy_sym` on `ĥ` | `exp(Σ_{m≥1} χ̂_{-y^m}(X) q^m / m)` |
//! | `hodge_orb_b` | `hodge_orb` on `ĥ` | `hodge_orb` formula on `ĥ` |
//! | `chiy_orb_b` | `chiy_orb` on `ĥ` | `chiy_orb` formula on `ĥ` |
//! | `gottsche_poincare` | `poincare_orb` sector assembly, surfaces only | `∏_l (1 + t^{2l-1}q^l)^{b_1} (1 + t^{2l+1}q^l)^{b_3} / ((1 - t^{2l-2}q^l)^{b_0} (1 - t^{2l}q^l)^{b_2} (1 - t^{2l+2}q^l)^{b_4})` |
//! | `gottsche_hodge` | `hodge_orb` sector assembly, surfaces only | `∏_l ∏_{s,t} (1 - (-1)^{s+t} x^{s+l-1} y^{t+l-1} q^l)^{-(-1)^{s+t} h^{s,t}}` |
//! | `dmvv_q0` | `Σ pⁿ y^{-kn} χ_{-y}(Xⁿ, Sₙ)` | `exp(Σ_{m≥1} y^{-km} χ_{-y^m}(X) p^m / (m (1 - p^m)))` |
//! | `dmvv_q0_b` | `dmvv_q0` on `ĥ` | `dmvv_q0` formula on `ĥ` |
//!
//! Here `F_N = k Σ_l (l-1) N_l` is the grading shift of the sector of cycle
//! type `N`, and `∏_l X^{(N_l)}` is that sector's geometric space.

use alloc::format;
use core::fmt;
use core::str::FromStr;

use crate::series::VarId;
use crate::{Error, Result};

use super::ManifoldData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeriesKind {
    EulerSym,
    EulerOrb,
    PoincareSym,
    PoincareOrb,
    HodgeSym,
    HodgeOrb,
    ChiySym,
    ArithSym,
    SignSym,
    ChiyOrb,
    ArithOrb,
    SignOrb,
    HodgeSymB,
    ChiySymB,
    HodgeOrbB,
    ChiyOrbB,
    GottschePoincare,
    GottscheHodge,
    DmvvQ0,
    DmvvQ0B,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 20] = [
        SeriesKind::EulerSym,
        SeriesKind::EulerOrb,
        SeriesKind::PoincareSym,
        SeriesKind::PoincareOrb,
        SeriesKind::HodgeSym,
        SeriesKind::HodgeOrb,
        SeriesKind::ChiySym,
        SeriesKind::ArithSym,
        SeriesKind::SignSym,
        SeriesKind::ChiyOrb,
        SeriesKind::ArithOrb,
        SeriesKind::SignOrb,
        SeriesKind::HodgeSymB,
        SeriesKind::ChiySymB,
        SeriesKind::HodgeOrbB,
        SeriesKind::ChiyOrbB,
        SeriesKind::GottschePoincare,
        SeriesKind::GottscheHodge,
        SeriesKind::DmvvQ0,
        SeriesKind::DmvvQ0B,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::EulerSym => "euler_sym",
            SeriesKind::EulerOrb => "euler_orb",
            SeriesKind::PoincareSym => "poincare_sym",
            SeriesKind::PoincareOrb => "poincare_orb",
            SeriesKind::HodgeSym => "hodge_sym",
            SeriesKind::HodgeOrb => "hodge_orb",
            SeriesKind::ChiySym => "chiy_sym",
            SeriesKind::ArithSym => "arith_sym",
            SeriesKind::SignSym => "sign_sym",
            SeriesKind::ChiyOrb => "chiy_orb",
            SeriesKind::ArithOrb => "arith_orb",
            SeriesKind::SignOrb => "sign_orb",
            SeriesKind::HodgeSymB => "hodge_sym_b",
            SeriesKind::ChiySymB => "chiy_sym_b",
            SeriesKind::HodgeOrbB => "hodge_orb_b",
            SeriesKind::ChiyOrbB => "chiy_orb_b",
            SeriesKind::GottschePoincare => "gottsche_poincare",
            SeriesKind::GottscheHodge => "gottsche_hodge",
            SeriesKind::DmvvQ0 => "dmvv_q0",
            SeriesKind::DmvvQ0B => "dmvv_q0_b",
        }
    }

    /// The counting variable of the series.
    pub fn counting_var(self) -> VarId {
        match self {
            SeriesKind::DmvvQ0 | SeriesKind::DmvvQ0B => VarId::P,
            _ => VarId::Q,
        }
    }

    /// Uses the B-table `h^{-p,q}`.
    pub fn is_b_kind(self) -> bool {
        matches!(
            self,
            SeriesKind::HodgeSymB
                | SeriesKind::ChiySymB
                | SeriesKind::HodgeOrbB
                | SeriesKind::ChiyOrbB
                | SeriesKind::DmvvQ0B
        )
    }

    /// Series carrying both `x` and `y`.
    pub fn is_hodge_kind(self) -> bool {
        matches!(
            self,
            SeriesKind::HodgeSym
                | SeriesKind::HodgeOrb
                | SeriesKind::HodgeSymB
                | SeriesKind::HodgeOrbB
                | SeriesKind::GottscheHodge
        )
    }

    fn needs_betti_only(self) -> bool {
        matches!(
            self,
            SeriesKind::EulerSym
                | SeriesKind::EulerOrb
                | SeriesKind::PoincareSym
                | SeriesKind::PoincareOrb
        )
    }

    /// Checks that `x` carries the data this family needs.
    pub fn check_applicable(self, x: &ManifoldData) -> Result<()> {
        if self.needs_betti_only() {
            return Ok(());
        }
        let dim_c = x.dim_c().ok_or_else(|| {
            Error::input(format!(
                "{} needs a complex manifold with a Hodge table",
                self
            ))
        })?;
        if self.is_b_kind() {
            x.hodge_b()?;
        } else {
            x.hodge()?;
        }
        match self {
            SeriesKind::ArithOrb if dim_c == 0 => Err(Error::input(
                "arith_orb: the closed form needs positive dimension (for a point every sector contributes)",
            )),
            SeriesKind::SignOrb if dim_c % 2 != 0 => Err(Error::input(
                "sign_orb: the closed form needs k = dim_C/2 to be an integer",
            )),
            SeriesKind::GottschePoincare | SeriesKind::GottscheHodge if dim_c != 2 => {
                Err(Error::input(format!("{} applies to surfaces only", self)))
            }
            _ => Ok(()),
        }
    }

    /// 8, or 6 for Hodge kinds on surfaces.
    pub fn default_order(self, x: &ManifoldData) -> u32 {
        if self.is_hodge_kind() && x.dim_c() == Some(2) {
            6
        } else {
            8
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::usage(format!("unknown series kind '{}'", s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::catalog;
    use alloc::string::ToString;

    #[test]
    fn names_round_trip() {
        for k in SeriesKind::ALL {
            assert_eq!(k.to_string().parse::<SeriesKind>().unwrap(), k);
        }
        assert!("nope".parse::<SeriesKind>().is_err());
    }

    #[test]
    fn applicability() {
        assert!(SeriesKind::ArithOrb
            .check_applicable(&catalog::point())
            .is_err());
        assert!(SeriesKind::SignOrb
            .check_applicable(&catalog::p1())
            .is_err());
        assert!(SeriesKind::SignOrb.check_applicable(&catalog::k3()).is_ok());
        assert!(SeriesKind::HodgeOrbB
            .check_applicable(&catalog::p2())
            .is_err());
        assert!(SeriesKind::GottscheHodge
            .check_applicable(&catalog::p1xp1())
            .is_ok());
        assert!(SeriesKind::GottscheHodge
            .check_applicable(&catalog::p1())
            .is_err());
        let real = ManifoldData::real("S4", 4, &[1, 0, 0, 0, 1]).unwrap();
        assert!(SeriesKind::PoincareOrb.check_applicable(&real).is_ok());
        assert!(SeriesKind::HodgeOrb.check_applicable(&real).is_err());
    }

    #[test]
    fn default_orders() {
        assert_eq!(SeriesKind::HodgeOrb.default_order(&catalog::k3()), 6);
        assert_eq!(SeriesKind::HodgeOrb.default_order(&catalog::p1()), 8);
        assert_eq!(SeriesKind::EulerOrb.default_order(&catalog::k3()), 8);
    }
}
