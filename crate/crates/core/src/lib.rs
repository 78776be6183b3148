//! Exact computation of p-Bell and poly-Bell numbers and polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, dense polynomials and truncated exponential
//!   generating functions.
//! * [`special`]: Stirling, r-Stirling, weighted Stirling, Whitney,
//!   Bernoulli and Bell numbers behind a shared [`special::TriangleCache`].
//! * [`pbell`]: p-Bell numbers through four independent backends, and the
//!   p-Bell polynomials.
//! * [`polybell`]: poly-Bell numbers for positive and negative upper index.
//! * [`verify`]: truncated-series and pointwise checks of the generating
//!   function identities, reported as [`verify::CheckReport`]s.
//! * [`numeric`]: floating point and Monte Carlo checks of the analytic
//!   representations.

pub mod exact;
pub mod numeric;
pub mod pbell;
pub mod polybell;
pub mod special;
pub mod verify;

pub use exact::{EgfSeries, Polynomial, Rational};
pub use pbell::PBellBackend;
pub use special::TriangleCache;
