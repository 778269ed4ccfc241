//! Integer matrices, Smith normal form, lattice quotients, and exact
//! rational linear algebra.

mod int_matrix;
pub mod linalg;
mod quotient;
mod snf;

pub use int_matrix::IntMatrix;
pub use quotient::LatticeQuotient;
pub use snf::{smith, SmithForm};
