//! Exact computation with restricted Poisson algebras over `F_p`.

pub mod algebra;
pub mod error;
pub mod lie;
pub mod lierinehart;
pub mod poisson;
pub mod quantize;
pub mod report;
pub mod restricted;
pub mod tograph;

pub use error::{Error, Result};
