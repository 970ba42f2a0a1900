//! Theorem checking: brute against closed, plus cross-checks between
//! families. Failures are values, not errors.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::One;

use crate::series::{Difference, HalfExp, Monomial, Series, VarId};
use crate::{Rational, Result};

use super::closed::{hodge_orb_unshifted_parity, poincare_orb_unshifted_parity};
use super::genus::{genus, Genus};
use super::{brute_series, closed_series, ManifoldData, SeriesKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status,
            detail: detail.into(),
        }
    }

    fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        CheckOutcome::new(name, Status::Skipped, why)
    }

    fn from_result(name: &str, r: Result<CheckOutcome>) -> Self {
        r.unwrap_or_else(|e| CheckOutcome::new(name, Status::Fail, e.to_string()))
    }
}

/// Renders a difference as `at <monomial>: <left> vs <right>`.
pub fn describe_difference(trunc: VarId, d: &Difference) -> String {
    let mono = Series::monomial(trunc, Series::EXACT, d.monomial, Rational::one())
        .map(|s| s.to_string())
        .unwrap_or_default();
    format!("at {}: {} vs {}", mono, d.left, d.right)
}

/// Equality of two series, as a check line.
pub fn compare(name: &str, left: &Series, right: &Series) -> CheckOutcome {
    if left.trunc() != right.trunc() {
        return CheckOutcome::new(name, Status::Fail, "different counting variables");
    }
    match left.first_difference(right) {
        None => CheckOutcome::new(name, Status::Pass, "equal"),
        Some(d) => CheckOutcome::new(
            name,
            Status::Fail,
            format!("first difference {}", describe_difference(left.trunc(), &d)),
        ),
    }
}

/// Both sides of one family and how they compare.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub kind: SeriesKind,
    pub order: u32,
    pub brute: Series,
    pub closed: Series,
    pub difference: Option<Difference>,
    /// Every closed-side coefficient is an integer.
    pub integral: bool,
    /// The `n = 0` coefficient of both sides is `1`.
    pub unit_constant: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.difference.is_none() && self.integral && self.unit_constant
    }

    pub fn outcome(&self) -> CheckOutcome {
        let name = self.kind.name();
        let order = self.order;
        if let Some(d) = &self.difference {
            let trunc = self.brute.trunc();
            return CheckOutcome::new(
                name,
                Status::Fail,
                format!(
                    "order {}: brute and closed differ {}",
                    order,
                    describe_difference(trunc, d)
                ),
            );
        }
        if !self.integral {
            return CheckOutcome::new(
                name,
                Status::Fail,
                format!("order {}: closed side is not integral", order),
            );
        }
        if !self.unit_constant {
            return CheckOutcome::new(
                name,
                Status::Fail,
                format!("order {}: constant term is not 1", order),
            );
        }
        CheckOutcome::new(
            name,
            Status::Pass,
            format!("order {}: brute = closed", order),
        )
    }
}

/// Computes both sides of `kind` and compares them exactly.
pub fn verify(kind: SeriesKind, x: &ManifoldData, order: u32) -> Result<VerifyReport> {
    let brute = brute_series(kind, x, order)?;
    let closed = closed_series(kind, x, order)?;
    let one = Series::one(kind.counting_var(), Series::EXACT);
    Ok(VerifyReport {
        kind,
        order,
        difference: brute.first_difference(&closed),
        integral: closed.is_integral(),
        unit_constant: brute.slice(0) == one && closed.slice(0) == one,
        brute,
        closed,
    })
}

fn y_pow(e: HalfExp) -> Monomial {
    Monomial::ONE.with(VarId::Y, e)
}

fn signed_one(negative: bool) -> Rational {
    if negative {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `χ̂_{-y}(X) = (-y)^d χ_{-y^{-1}}(X)`, the identity Serre duality gives for
/// a Calabi–Yau `X` of dimension `d`.
pub fn serre_relation(x: &ManifoldData) -> Result<CheckOutcome> {
    let name = "serre duality on X";
    if !x.is_calabi_yau() {
        return Ok(CheckOutcome::skipped(name, "not Calabi-Yau"));
    }
    let d = x.dim_c().unwrap_or(0) as i32;
    let lhs = genus(&x.hodge_b()?, Genus::ChiNegY)?;
    let rhs = genus(&x.hodge()?, Genus::ChiNegY)?
        .substitute(VarId::Y, &y_pow(HalfExp::from_int(-1)))?
        .mul_term(&y_pow(HalfExp::from_int(d)), &signed_one(d % 2 == 1))?;
    Ok(compare(name, &lhs, &rhs))
}

/// `y^{d/2} χ̂_{-y}(X) = (-1)^{d/2} y^{-d/2} χ_{-y^{-1}}(X)`, checked
/// coefficientwise in `y` for even `d`.
pub fn serre_relation_symmetric_form(x: &ManifoldData) -> Result<CheckOutcome> {
    let name = "serre duality, symmetric form";
    if !x.is_calabi_yau() {
        return Ok(CheckOutcome::skipped(name, "not Calabi-Yau"));
    }
    let d = x.dim_c().unwrap_or(0) as i32;
    if d % 2 != 0 {
        return Ok(CheckOutcome::skipped(
            name,
            "(-1)^(d/2) is undefined for odd d",
        ));
    }
    let half = HalfExp::from_doubled(d);
    let lhs = genus(&x.hodge_b()?, Genus::ChiNegY)?.mul_term(&y_pow(half), &Rational::one())?;
    let rhs = genus(&x.hodge()?, Genus::ChiNegY)?
        .substitute(VarId::Y, &y_pow(HalfExp::from_int(-1)))?
        .mul_term(&y_pow(-half), &signed_one((d / 2) % 2 == 1))?;
    Ok(compare(name, &lhs, &rhs))
}

/// `χ̂_{-y}(Xⁿ, Sₙ) = y^{dn} χ_{-y^{-1}}(Xⁿ, Sₙ)` for Calabi–Yau `X` of even
/// dimension `d`.
fn serre_relation_orbifold(x: &ManifoldData, order: u32) -> Result<CheckOutcome> {
    let name = "serre duality on (X^n, S_n)";
    if !x.is_calabi_yau() {
        return Ok(CheckOutcome::skipped(name, "not Calabi-Yau"));
    }
    let d = x.dim_c().unwrap_or(0) as i32;
    if d % 2 != 0 {
        return Ok(CheckOutcome::skipped(
            name,
            "B-table parity differs for odd d",
        ));
    }
    let lhs = brute_series(SeriesKind::ChiyOrbB, x, order)?;
    let rhs = brute_series(SeriesKind::ChiyOrb, x, order)?
        .substitute(VarId::Y, &y_pow(HalfExp::from_int(-1)))?
        .substitute(VarId::Q, &y_pow(HalfExp::from_int(d)).with_int(VarId::Q, 1))?;
    Ok(compare(name, &lhs, &rhs))
}

fn hodge_to_poincare(x: &ManifoldData, order: u32) -> Result<CheckOutcome> {
    let name = "hodge_orb at x=y=t vs poincare_orb";
    if x.hodge_table().is_none() {
        return Ok(CheckOutcome::skipped(name, "no Hodge table"));
    }
    let t = Monomial::var(VarId::T);
    let h = brute_series(SeriesKind::HodgeOrb, x, order)?
        .substitute(VarId::X, &t)?
        .substitute(VarId::Y, &t)?;
    let p = brute_series(SeriesKind::PoincareOrb, x, order)?;
    Ok(compare(name, &h, &p))
}

fn poincare_unshifted(x: &ManifoldData, order: u32) -> Result<CheckOutcome> {
    let name = "poincare_orb, unshifted-parity form";
    if !x.m().is_multiple_of(2) {
        return Ok(CheckOutcome::skipped(name, "only valid for even m"));
    }
    let a = poincare_orb_unshifted_parity(x, order)?;
    let b = closed_series(SeriesKind::PoincareOrb, x, order)?;
    Ok(compare(name, &a, &b))
}

fn hodge_unshifted(x: &ManifoldData, order: u32) -> Result<CheckOutcome> {
    let name = "hodge_orb, unshifted-parity form";
    match x.dim_c() {
        Some(d) if d % 2 == 0 && x.hodge_table().is_some() => {}
        _ => {
            return Ok(CheckOutcome::skipped(
                name,
                "only valid for even complex dimension",
            ))
        }
    }
    let a = hodge_orb_unshifted_parity(x, order)?;
    let b = closed_series(SeriesKind::HodgeOrb, x, order)?;
    Ok(compare(name, &a, &b))
}

fn euler_from_poincare(x: &ManifoldData, order: u32) -> Result<CheckOutcome> {
    let name = "poincare_orb at t=-1 vs euler_orb";
    if !x.m().is_multiple_of(2) {
        return Ok(CheckOutcome::skipped(name, "only valid for even m"));
    }
    let p = brute_series(SeriesKind::PoincareOrb, x, order)?
        .specialize(&[(VarId::T, -Rational::one())])?;
    let e = brute_series(SeriesKind::EulerOrb, x, order)?;
    Ok(compare(name, &p, &e))
}

fn chiy_to_signature(x: &ManifoldData, order: u32) -> Result<CheckOutcome> {
    let name = "chiy_orb at y=-1 vs sign_orb";
    if SeriesKind::SignOrb.check_applicable(x).is_err() {
        return Ok(CheckOutcome::skipped(
            name,
            "needs Hodge data and integral k",
        ));
    }
    let c =
        brute_series(SeriesKind::ChiyOrb, x, order)?.specialize(&[(VarId::Y, -Rational::one())])?;
    let s = brute_series(SeriesKind::SignOrb, x, order)?;
    Ok(compare(name, &c, &s))
}

/// Relations between families that hold independently of any one theorem.
pub fn cross_checks(x: &ManifoldData, order: Option<u32>) -> Vec<CheckOutcome> {
    let plain = order.unwrap_or(8);
    let hodge = order.unwrap_or_else(|| SeriesKind::HodgeOrb.default_order(x));
    let mut out = Vec::new();
    let mut run =
        |name: &str, r: Result<CheckOutcome>| out.push(CheckOutcome::from_result(name, r));
    run(
        "hodge_orb at x=y=t vs poincare_orb",
        hodge_to_poincare(x, hodge),
    );
    run(
        "poincare_orb, unshifted-parity form",
        poincare_unshifted(x, plain),
    );
    run(
        "hodge_orb, unshifted-parity form",
        hodge_unshifted(x, hodge),
    );
    run(
        "poincare_orb at t=-1 vs euler_orb",
        euler_from_poincare(x, plain),
    );
    run("chiy_orb at y=-1 vs sign_orb", chiy_to_signature(x, plain));
    run("serre duality on X", serre_relation(x));
    run(
        "serre duality on (X^n, S_n)",
        serre_relation_orbifold(x, plain),
    );
    out
}

/// Every applicable family plus the cross-checks, in a fixed order.
pub fn verify_all(x: &ManifoldData, order: Option<u32>) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for kind in SeriesKind::ALL {
        if let Err(e) = kind.check_applicable(x) {
            out.push(CheckOutcome::skipped(kind.name(), e.to_string()));
            continue;
        }
        let n = order.unwrap_or_else(|| kind.default_order(x));
        out.push(CheckOutcome::from_result(
            kind.name(),
            verify(kind, x, n).map(|r| r.outcome()),
        ));
    }
    out.extend(cross_checks(x, order));
    out
}
