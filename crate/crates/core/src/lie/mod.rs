//! Restricted Lie algebras, their symmetric Poisson algebras, tensor
//! products, Hopf compatibility and a catalog of worked examples.

pub mod catalog;
pub mod fd;
pub mod hopf;
pub mod tensor;

pub use catalog::{catalog, default_prime, Params, CATALOG};
pub use fd::{
    symmetric_poisson, truncated_symmetric, verify_restricted_lie_fd, RestrictedLieAlgebra, Vector,
};
pub use hopf::hopf_check;
pub use tensor::{verify_tensor, TensorProduct};
