//! Exact constructions of genus-2 and genus-3 curves over Q whose Jacobians
//! are isogenous to products of elliptic curves with large rational torsion.
//!
//! The crate builds the curves from explicit gluing data (2-torsion matchings
//! in genus 2, triples of curves with a vanishing or square twisting factor in
//! genus 3) and verifies every construction by finite-field point counting and
//! exact polynomial identities. See the `examples/` directory for one runnable
//! walkthrough per capability, and the `splitjac` binary for the command-line
//! interface.

pub mod algebra;
pub mod elliptic;
pub mod families;
pub mod ffcount;
pub mod glue2;
pub mod glue3;
pub mod torsion;
pub mod explorer;
pub mod rng;

pub use algebra::{Poly, Rat};
