//! sl(4,C): structure constants, conformal generators and gradings.

mod algebra;
mod conformal;
mod grading;

pub use algebra::{
    basis_index, build_sl4, root_at, root_matrix_position, sl4, AlgebraId, BasisLabel, Element, LieAlgebra,
    BASIS_NAMES, DIM,
};
pub use conformal::{
    compact_cartan, conformal_basis, lorentz_tensor, rank_of, real_generators, verify_o42_relations, O42Residual,
    Physical, ETA,
};
pub use grading::{basis_weights, d_weight_decomposition};
