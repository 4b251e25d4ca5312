//! Exact computations with matroids represented over odd-characteristic
//! finite fields: characteristic and Tutte polynomials, the alpha-sum
//! representation of the dual characteristic polynomial, and finite-field
//! Feynman amplitudes of graphs.

pub mod amplitude;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod format;
pub mod graph;
pub mod identities;
pub mod kontsevich;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod report;
pub mod subset;

pub use enumerate::Budget;
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use graph::Multigraph;
pub use linalg::FqMatrix;
pub use matroid::{Matroid, MinorOp, RankOracleMatroid, RepMatroid};
pub use poly::{BiPoly, UniPoly};
pub use subset::Subset;
