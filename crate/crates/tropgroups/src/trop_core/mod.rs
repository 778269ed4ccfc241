//! The min-plus semiring 𝕋 = ℚ ∪ {∞}, tropical matrices, determinants,
//! and the defining forms of the classical tropical matrix groups.

mod det;
mod forms;
mod matrix;
mod poly;
mod value;

pub use det::{det_assignment, det_enumerate, trop_det};
pub use forms::{
    check_g2, check_orthogonal, check_symplectic, eval_cubic, eval_quadratic, g2_constraints,
    g2_identity, hexagon_symmetries, is_signed_permutation, orthogonal_constraints,
    orthogonal_identity, sign_involution, symplectic_constraints, symplectic_identity,
    Orthogonality,
};
pub use matrix::{invert_or_decompose, GenPermDecomposition, TropMatrix};
pub use poly::TropPoly;
pub use value::TropValue;
