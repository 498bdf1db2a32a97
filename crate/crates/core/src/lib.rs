//! Exact arithmetic engine for the Mariño–Vafa and ELSV generating functions.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact`]: rationals, Gaussian rationals, `τ`-polynomials, truncated
//!   Laurent series in `λ`, Bernoulli numbers.
//! - [`partitions`]: partitions, centralizer orders, contents, hook lengths and
//!   symmetric-group characters (Murnaghan–Nakayama).
//! - [`pseries`]: series in the power sums `p_1, p_2, ...`, exp/log, and the
//!   cut-and-join operator.
//! - [`mv`]: the character-sum side `R(λ;τ;p)` and its limits.
//! - [`hurwitz`]: Hurwitz numbers by Burnside, by enumeration and by
//!   cut-and-join recursion; linear Hodge integrals from ELSV.
//! - [`hodge_ring`]: λ-class polynomials modulo Mumford's relations.
//! - [`identities`]: closed forms and the verification suites.

pub mod error;
pub mod exact;
pub mod hodge_ring;
pub mod hurwitz;
pub mod identities;
pub mod mv;
pub mod partitions;
pub mod pseries;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
