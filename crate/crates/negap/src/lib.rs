//! # negap
//!
//! Exact arithmetic for a family of generalized numeral systems and the
//! fractal geometry they induce:
//!
//! - base-`s` and base-`(−s)` positional expansions of eventually periodic
//!   digit words ([`numeral`]);
//! - the probability-weighted `Δ^P` and alternating `Δ^{−P}` representations
//!   and the Salem-type distribution functions behind them ([`salem`]);
//! - the run-length block encoding that carves out the restricted sets
//!   `S_(±s,u)` / `S_(±P,u)` ([`digits`]);
//! - exact cylinder geometry for all four systems: endpoints, diameters,
//!   child/parent ratios, sibling adjacency and separation ([`cylinder`]);
//! - rank-`n` covers, their exact Lebesgue measure sequence with its
//!   geometric-decay bound, and set extrema ([`moran`]);
//! - Hausdorff dimension: the self-similar root equations, the parity
//!   transfer matrix for the non-self-similar pre-dimension sequence `α_k`,
//!   and a box-counting estimator used as an independent numerical check
//!   ([`dimension`]).
//!
//! Everything except solver outputs is computed over arbitrary-precision
//! rationals, so the algebraic identities between the systems hold bit for
//! bit and the test suite can assert them exactly.
//!
//! A narrative guide with runnable examples lives in `book/`; the same
//! chapters are compiled as doc-tests through the [`guide`] module.

// Position parity reads as `n % 2` throughout; that is the domain concept,
// not a missed `is_multiple_of`.
#![allow(clippy::manual_is_multiple_of)]

pub mod cylinder;
pub mod digits;
pub mod dimension;
mod error;
pub mod guide;
pub mod moran;
pub mod numeral;
pub mod params;
pub mod rational;
pub mod salem;
pub mod verify;

pub use error::{Error, Result};
pub use params::SystemParams;
pub use rational::Rational;
