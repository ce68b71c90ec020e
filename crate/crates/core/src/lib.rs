//! Exact-arithmetic toolkit for the combinatorics of Minkowski sums of two
//! convex polytopes.
//!
//! The crate computes, over arbitrary-precision rationals:
//!
//! * complete face lattices of V-polytopes in small dimension ([`polytope`]),
//! * f-/h-/g-vector algebra and cyclic-polytope face counts ([`vectors`]),
//! * the tight per-dimension maxima for the number of k-faces of a Minkowski
//!   sum of two d-polytopes, together with the h-vector identities and caps
//!   that prove them ([`bounds`]),
//! * the lifting of a sum to one dimension higher and the face set carrying
//!   the sum's combinatorics ([`cayley`]),
//! * neighborliness and bineighborliness predicates ([`neighborly`]),
//! * extremal summand pairs attaining the maxima in every dimension, with
//!   exact positivity certificates for the odd-dimensional construction
//!   ([`witness`]).
//!
//! Everything is exact: all predicates reduce to signs of integer or rational
//! determinants, so results are reproducible bit for bit. The crate is
//! `no_std` (with `alloc`); IO, file formats and the command-line front end
//! live in the companion `minksum` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod cayley;
pub mod exact;
pub mod neighborly;
pub mod polytope;
pub mod vectors;
pub mod verify;
pub mod witness;

mod combo;

pub use exact::{Matrix, Rational};
pub use polytope::{convex_hull, FaceLattice, Point, VPolytope};
pub use vectors::{FVector, GVector, HVector};
