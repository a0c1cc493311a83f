//! Exact truncated power-series arithmetic.
//!
//! Two flavours: [`UniSeries`] in a single variable t, and [`MultiSeries`]
//! in the semigroup ring of the cone monoid Λ, truncated by height. All
//! coefficients are arbitrary-precision integers; every division is exact
//! and errors out on a nonzero remainder instead of truncating silently.

mod json;
mod multi;
mod uni;

pub use json::{MultiTerm, SeriesJson, UniTerm};
pub use multi::{expand_inverse_one_plus, MultiSeries};
pub use uni::{uni_rational_eval, UniSeries};
