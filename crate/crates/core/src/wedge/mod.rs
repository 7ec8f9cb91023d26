//! Exterior powers Λ²g, Λ³g and the Schouten bracket.

mod multivector;
mod schouten;

pub use multivector::{wedge, wedge3, wedge_bivector, BiVector, TriVector};
pub use schouten::{
    adjoint_action_triv, canonical_trivector, cybe_residual, cybe_vanishes, schouten_mixed, schouten_self, tensor_cube, CybeResidual,
};
