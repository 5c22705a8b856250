//! Exact scalar tower used by the algebra and the invariants.
//!
//! - [`Rational`]: arbitrary precision rationals.
//! - [`Cyclotomic`]: elements of `Q(zeta_d)` in the power basis modulo `Phi_d`.
//! - [`LaurentU`]: Laurent polynomials in `u` with rational coefficients.
//! - [`TracePolynomial`]: polynomials in `z, x_1..x_{d-1}` over [`LaurentU`].
//! - [`BiPoly`] and [`RatFunc`]: polynomials and reduced fractions in `u, z`
//!   over `Q(zeta_d)`.
//!
//! Text rendering orders monomials by total degree, then lexicographically
//! with `z > u > x_1 > ... > x_{d-1}`, highest first.

mod bipoly;
mod cyclotomic;
mod laurent;
mod rational;
mod ratfunc;
mod tracepoly;
mod upoly;

pub use bipoly::{BiPoly, UzExp};
pub use cyclotomic::{cyclotomic_polynomial, cyclotomic_root, euler_phi, Cyclotomic};
pub use laurent::LaurentU;
pub use rational::{rat, rational_string, Rational};
pub use ratfunc::RatFunc;
pub use tracepoly::{trace_poly_substitute, TraceMonomial, TracePolynomial};
