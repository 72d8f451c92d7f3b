//! Exhaustive computation over finite unital rings.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`] holds the uniform [`Ring`] handle (element ids, operation
//!   tables, memoized structural sets, ideals, quotients and subrings).
//! * [`construct`] builds concrete rings: `Z_n`, products, full and
//!   triangular matrix rings, trivial and double trivial extensions,
//!   truncated (skew) polynomial rings, group rings, generalized and formal
//!   matrix rings, and entry-constrained matrix rings.
//! * [`classify`] searches nil-clean style decompositions and decides the
//!   ring classes (UU, WUU, UNC, UWNC, weakly nil-clean, ...).
//! * [`spec`] is the textual ring-spec grammar used by the CLI and catalogs.
//! * [`harness`] encodes results about these classes as executable checks.
//! * [`hunt`] searches ring families for counterexamples to open claims.

pub mod classify;
pub mod construct;
mod error;
pub mod harness;
pub mod hunt;
pub mod report;
pub mod ring;
pub mod spec;

pub use error::RingError;
pub use ring::{ElementId, Limits, Ring};

pub type Result<T, E = RingError> = std::result::Result<T, E>;
