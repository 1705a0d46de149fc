//! Exact computation of Bernoulli polynomials at non-negative integer points
//! through r-Stirling numbers of the second kind, together with the
//! Fubini-type polynomials and truncated generating-function machinery that
//! tie the two families together.
//!
//! Everything runs over arbitrary-precision rationals in canonical form;
//! there is no floating point and no tolerance anywhere. The crate computes
//! each quantity along at least two structurally independent routes —
//! alternating Stirling sums, classical recurrences, polynomial expansions,
//! and exponential-generating-function extraction — and its `verify` suite
//! insists on exact agreement between all of them.
//!
//! ```
//! use rstirling::{bernoulli_at_integer, bernoulli_polynomial, Rat};
//!
//! // B_2(x) = x^2 - x + 1/6 evaluated at 3, along two different routes
//! let by_stirling_sum = bernoulli_at_integer(2, 3);
//! let by_polynomial = bernoulli_polynomial(2).eval(&Rat::from(3));
//! assert_eq!(by_stirling_sum, by_polynomial);
//! assert_eq!(by_stirling_sum.to_string(), "37/6");
//! ```
//!
//! The narrative guide in `book/` walks through each concept; its code
//! samples are compiled and run as part of `cargo test` via the doctest
//! shims at the bottom of this file.

pub mod arith;
pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod fubini;
pub mod poly;
pub mod series;
pub mod stirling;
pub mod verify;

pub use arith::{binomial, factorial, Int, Rat};
pub use bernoulli::{
    bernoulli_at_integer, bernoulli_at_integer_from_triangle, bernoulli_numbers_recurrence,
    bernoulli_numbers_stirling, bernoulli_polynomial, BernoulliTable, Provenance,
};
pub use error::Error;
pub use fubini::{fubini_antiderivative, fubini_poly, ordered_bell, FubiniPolynomial};
pub use poly::Poly;
pub use series::{
    bernoulli_poly_egf, exp_minus_one_over_t, exp_rt, fubini_egf, integrated_identity_check,
    integrated_identity_sides, CoeffMismatch, Series,
};
pub use stirling::{r_stirling, r_stirling_shifted, stirling2, StirlingTriangle};
pub use verify::{run_suite, CheckOutcome, Mismatch, VerifyConfig};

// Compile and run the guide's code samples with `cargo test --doc`.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub struct GuideIntroduction;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/rationals.md")]
pub struct GuideRationals;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/stirling.md")]
pub struct GuideStirling;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/bernoulli.md")]
pub struct GuideBernoulli;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/fubini.md")]
pub struct GuideFubini;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/series.md")]
pub struct GuideSeries;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verification.md")]
pub struct GuideVerification;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub struct GuideCli;
