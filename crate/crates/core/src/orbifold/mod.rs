//! Symmetric-product orbifolds `(Xⁿ, Sₙ)`: sector assembly, closed
//! generating functions, genera and their verification.
//!
//! Every family in [`SeriesKind`] has two independent computations:
//! [`brute_series`] sums explicit sector spaces one cycle type at a time,
//! [`closed_series`] expands the product or exponential formula. [`verify`]
//! compares them exactly.

mod brute;
pub mod catalog;
mod closed;
mod genus;
mod kinds;
mod manifold;
mod sectors;
mod verify;

pub use brute::brute_series;
pub use closed::{closed_series, hodge_orb_unshifted_parity, poincare_orb_unshifted_parity};
pub use genus::{genus, genus_value, Genus};
pub use kinds::SeriesKind;
pub use manifold::{derive_b_table, ManifoldData, ManifoldKind, PairingBlock};
pub use sectors::{
    geometric_sectors, geometric_sectors_bigraded, sector_dims, sector_hodge, sector_hodge_b,
    symprod_dims, symprod_hodge, symprod_hodge_b, Sector, Table,
};
pub use verify::{
    compare, cross_checks, describe_difference, serre_relation, serre_relation_symmetric_form,
    verify, verify_all, CheckOutcome, Status, VerifyReport,
};
