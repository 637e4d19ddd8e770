//! Exact solvers and certified verifiers for k-quasi-m-isometric completion
//! problems.
//!
//! The crate works over two kinds of operators:
//!
//! * unilateral weighted shifts, where a finite positive weight sequence is
//!   extended to the weight sequence of a k-quasi-m-isometry ([`shift`]);
//! * (weighted) composition operators on a directed graph with a single
//!   circuit of length `kappa` and finitely many branches hanging off each
//!   circuit vertex ([`graph`], [`compops`], [`wcompops`]).
//!
//! Everything is computed in exact rational arithmetic ([`exact::Rational`]):
//! a reported zero defect is an identity, not a small number. Each solver is
//! paired with an independent brute-force oracle in [`verify`] that replays
//! the operator moments by preimage enumeration without reusing any closed
//! form.

pub mod compops;
pub mod exact;
pub mod graph;
pub mod linalg;
pub mod shift;
pub mod verify;
pub mod wcompops;

pub use exact::{Poly, Rational};
pub use graph::{CircuitGraph, Vertex};
