use clap::ValueEnum;
use symprod_core::fock::check_relations;
use symprod_core::orbifold::{
    brute_series, closed_series, describe_difference, verify_all, SeriesKind,
};
use symprod_core::series::Series;

use crate::catalog;
use crate::error::Result;
use crate::report::Report;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Brute,
    #[default]
    Closed,
    Both,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Brute => "brute",
            Mode::Closed => "closed",
            Mode::Both => "both",
        }
    }
}

fn print_series(r: &mut Report, label: Option<&str>, s: &Series) {
    match label {
        Some(l) => r.line(format!("{l}: {s}")),
        None => r.line(s.to_string()),
    }
    if !s.is_integral() {
        r.line("error: series has non-integer coefficients");
        r.fail();
    }
}

pub fn series(kind: SeriesKind, manifold: &str, order: Option<u32>, mode: Mode) -> Result<Report> {
    let x = catalog::resolve(manifold)?;
    kind.check_applicable(&x)?;
    let n = order.unwrap_or_else(|| kind.default_order(&x));
    let mut r = Report::new(&format!(
        "series {kind} --manifold {} --order {n} --mode {}",
        x.name(),
        mode.name()
    ));
    match mode {
        Mode::Brute => print_series(&mut r, None, &brute_series(kind, &x, n)?),
        Mode::Closed => print_series(&mut r, None, &closed_series(kind, &x, n)?),
        Mode::Both => {
            let b = brute_series(kind, &x, n)?;
            let c = closed_series(kind, &x, n)?;
            print_series(&mut r, Some("brute"), &b);
            print_series(&mut r, Some("closed"), &c);
            match b.first_difference(&c) {
                None => r.line("verdict: equal"),
                Some(d) => {
                    r.line(format!(
                        "verdict: differ {}",
                        describe_difference(b.trunc(), &d)
                    ));
                    r.fail();
                }
            }
        }
    }
    Ok(r)
}

pub const DEFAULT_MAX_CHARGE: u32 = 3;

pub fn fock_verify(manifold: &str, max_charge: Option<u32>) -> Result<Report> {
    let x = catalog::resolve(manifold)?;
    let l = max_charge.unwrap_or(DEFAULT_MAX_CHARGE);
    let report = check_relations(&x, l)?;
    let mut r = Report::new(&format!(
        "fock-verify --manifold {} --max-charge {l}",
        x.name()
    ));
    r.line(format!(
        "basis: {} states of charge <= {l}",
        report.basis_size
    ));
    r.checks(&report.outcomes);
    Ok(r)
}

pub fn verify_all_cmd(manifold: &str, order: Option<u32>) -> Result<Report> {
    let x = catalog::resolve(manifold)?;
    let echo = match order {
        Some(n) => format!("verify-all --manifold {} --order {n}", x.name()),
        None => format!("verify-all --manifold {}", x.name()),
    };
    let mut r = Report::new(&echo);
    r.checks(&verify_all(&x, order));
    Ok(r)
}

pub fn catalog_list() -> Result<Report> {
    let mut r = Report::new("catalog list");
    let width = catalog::names()?.iter().map(String::len).max().unwrap_or(0);
    for name in catalog::names()? {
        let desc = match catalog::lookup(&name)? {
            Some(x) => match x.dim_c() {
                Some(d) => format!(
                    "dim_C {d}, betti {:?}{}",
                    x.betti_numbers(),
                    if x.is_calabi_yau() {
                        ", Calabi-Yau"
                    } else {
                        ""
                    }
                ),
                None => format!("dim_R {}, betti {:?}", x.dim_real(), x.betti_numbers()),
            },
            None => String::new(),
        };
        r.line(format!("{name:width$}  {desc}"));
    }
    Ok(r)
}
