//! IO layer for the exact Minkowski-sum toolkit: polytope and certificate
//! file formats, report structures, and their JSON/CSV/table renderings.
//!
//! Wire formats: rationals are "p/q" strings with the denominator omitted
//! when it is 1; a polytope file is `{"dim": n, "vertices": [["p/q", …],
//! …]}`; f-vectors carry their f_{-1} entry explicitly. All report structs
//! serialize with fixed field order, so identical inputs produce
//! byte-identical output.

pub mod formats;
pub mod random;
pub mod render;

pub use formats::{read_polytope, write_polytope, PolytopeFile};
