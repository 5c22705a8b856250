//! Exact arithmetic in the Yokonuma-Hecke algebras `Y(d,n)(u)`, the Markov
//! trace `tr_d`, the E-system and its subset solutions, and the two-variable
//! link invariants `Delta(d,S)` of braid closures together with their
//! coherent extension along finite divisor chains.
//!
//! Module map:
//!
//! - [`braid`]: braid words, parsing, Markov moves.
//! - [`exactnum`]: rationals, cyclotomic numbers, Laurent polynomials in `u`,
//!   trace polynomials and rational functions in `u, z`.
//! - [`yokonuma`]: the algebra itself.
//! - [`trace`]: the Markov trace.
//! - [`esystem`]: E-polynomials, subset solutions, liftings.
//! - [`invariant`]: the link invariant and its skein relation.
//! - [`adelic`]: divisor chains and coherent tuples.
//! - [`sample`]: seeded random braids and algebra elements for property checks.

pub mod adelic;
pub mod braid;
pub mod error;
pub mod esystem;
pub mod exactnum;
pub mod invariant;
pub mod sample;
pub mod trace;
pub mod yokonuma;

pub use error::{Error, ErrorKind, Result};
