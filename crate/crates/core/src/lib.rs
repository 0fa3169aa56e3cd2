//! Exact, three-route verification of Lehmer's partition identity
//! `p_e(n,2) = p_o(n,2) + q_o(n)`, its generalizations, and the Beck-type
//! companion identities that count excesses of parts.
//!
//! Every claim is checked by
//! * direct enumeration of the partitions (or pairs of partitions) involved,
//! * exact truncated q-series arithmetic, using first-order jets in `z` at
//!   `z = 1` for the part-counting derivatives, and
//! * executable injections between sets of pairs `(λ, (a^b))` whose
//!   complements account for the excess.
//!
//! The layers are [`partition`], [`series`], [`bijections`] and
//! [`identity`]; [`TheoremId`] names the individual checks.

pub mod bijections;
mod error;
pub mod identity;
pub mod partition;
pub mod series;
mod theorem;

pub use error::{Error, Result};
pub use theorem::TheoremId;

/// Default truncation order for generating series.
pub const DEFAULT_ORDER: usize = 200;

/// Largest `n` for which the enumeration routes will run.
pub const MAX_ENUMERATION_N: u32 = 60;
