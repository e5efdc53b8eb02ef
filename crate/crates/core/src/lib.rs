//! Finite q-effect algebras with exact rational arithmetic.
//!
//! - [`algebra`]: partial-sum tables, (E1)-(E4) and (Q1)-(Q5) validation,
//!   order, lattice/MV classification, ideals, direct powers, bundled examples.
//! - [`terms`]: the clone generated by `q` and `d`, threshold terms.
//! - [`states`]: states, q-states, extreme q-states, q-semi-states.
//! - [`tense`]: Galois (q-)connections, time frames, canonical tense operators.
//! - [`representation`]: MV-morphisms, frame synthesis, diagram checks.
//! - [`io`]: the `.alg`, `.frame`, `.map` and `.states` text formats.
//!
//! Every check returns a [`report::VerificationReport`] with a verdict and
//! concrete witnesses on failure.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod io;
pub mod rational;
pub mod report;
pub mod representation;
pub mod states;
pub mod tense;
pub mod terms;

pub use error::{Error, Result};
