//! Skew braces on groups of order `p^2 q` with cyclic Sylow `p`-subgroup
//! (and on groups of order `pq`), enumerated through gamma functions and
//! checked against closed-form counts.

pub mod arith;
pub mod brace;
pub mod counts;
pub mod enumerate;
pub mod error;
pub mod groups;
pub mod holomorph;
pub mod verify;

pub use error::{Error, ErrorKind, Result};
