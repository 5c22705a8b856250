//! The Yokonuma-Hecke algebra `Y(d,n)(u)`.
//!
//! Elements are finite combinations of basis words `t_1^a_1 ... t_n^a_n g_w`
//! with the framing monomial on the left and `g_w` the product along the
//! fixed reduced word of `w`. Products are computed by right multiplication
//! with generators, rewriting with `g_w t_j = t_w(j) g_w` and the quadratic
//! relation `g_i^2 = 1 + (u-1) e_i - (u-1) e_i g_i`.

mod element;
pub mod perm;

pub use element::{idempotent_e, power_formula, represent_braid, AlgebraElement, BasisWord};
pub use perm::canonical_reduced_word;
