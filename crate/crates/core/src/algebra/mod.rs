//! Exact arithmetic: prime fields, sparse polynomials, monomial ideals and
//! truncated series in a formal parameter.

pub mod field;
pub mod ideal;
pub mod monomial;
pub mod poly;
pub mod random;
pub mod series;

pub use field::{PrimeChar, Scalar, MAX_PRIME};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use poly::Poly;
pub use random::Sampler;
pub use series::TSeries;
