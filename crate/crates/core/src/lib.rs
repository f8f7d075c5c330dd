//! Exact Hankel-transform toolkit.
//!
//! Sequences are finite prefixes of rationals ([`Seq`]). Hankel and
//! Hankel-like determinants are evaluated exactly by fraction-free
//! elimination, and every closed-form evaluation in [`closedforms`] is
//! polynomial in the parameters `(alpha, beta)`, so no square roots or floats
//! appear anywhere.

pub mod closedforms;
pub mod error;
pub mod orthopoly;
pub mod seqcore;
pub mod transforms;

pub use error::{Error, Result};
pub use seqcore::{Params, PowerSeries, Rat, Seq};
pub use transforms::{det_exact, OffsetList, SquareMatrix};
