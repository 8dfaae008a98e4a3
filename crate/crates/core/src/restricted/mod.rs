//! Restricted structures: Jacobson's formulas, p-maps and their axioms.

pub mod jacobson;
pub mod modify;
pub mod pmap;
pub mod verify;

pub use jacobson::{lambda_p, phi_p, phi_p_prime, s_coeff, s_coeffs, LieBracket};
pub use modify::{add_semilinear_shift, modify_pmap, quotient_restricted, Derivation};
pub use pmap::{
    build_pmap, fold_pmap, fold_terms, JacobsonCheck, PMap, PMapEval, RestrictedPoissonAlgebra,
};
pub use verify::{
    verify_frobenius_condition, verify_phi_identities, verify_restricted_lie, FrobeniusMode,
};
