//! Permanent indices of total-weighting matrices of graphs.
//!
//! A graph `G` with a fixed orientation determines an integer matrix `A_G`
//! whose rows are edges and whose columns are vertices and edges. An index
//! function `η` picks a multiset of columns; it is non-singular when some
//! valid sub-multiset has a nonzero permanent. This crate computes these
//! objects exactly, searches for witnesses, and builds and verifies vertex
//! deletion certificates for several graph families.

pub mod graph;
pub mod index;
pub mod matrix;
pub mod nullstellensatz;
pub mod permanent;
pub mod reduction;

pub use graph::{canonical_orientation, Element, Graph, GraphError, Orientation};
pub use index::{IndexFunction, MatrixKind, Nonsingularity, PindResult, Witness};
pub use matrix::{build_b, build_total_matrix, select_columns, Matrix, TotalMatrix};
pub use permanent::{permanent_naive, permanent_ryser, ExactInt, PermanentError};
