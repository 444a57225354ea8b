//! Exact commutative algebra for deciding when a ring inclusion splits.

pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod univariate;
pub mod catalog;
pub mod error;
pub mod graded;
pub mod ringmap;
pub mod splitting;
pub mod surface;
pub mod torus;
pub use error::Error;
