//! Divide-curve presentations, braids and invariants for the Berge knot
//! families III to VI.
//!
//! Every knot in these families is encoded by a parameter tuple
//! `(type, delta, eps, A, k, t)`. The crate derives the surgery data of the
//! tuple ([`berge`]), the L-shaped region whose divide curve presents the
//! knot ([`lshape`]), the curve itself with its crossing combinatorics
//! ([`trace`]), braid words for the curve together with a word-problem
//! solver ([`braid`]), and computable invariants such as the Alexander
//! polynomial and the genus ([`invar`]). The [`ttk`] module relates the
//! small-parameter knots to twisted torus knots, and [`atlas`] sweeps
//! parameter grids into verified JSON tables and SVG pictures.

pub mod atlas;
pub mod berge;
pub mod braid;
pub mod invar;
pub mod laurent;
pub mod lshape;
pub mod sign;
pub mod trace;
pub mod ttk;
