//! Exact computations with deformed preprojective algebras of extended
//! Dynkin quivers and their corner rings `O^λ = e_0 Π^λ e_0`.

pub mod dynkin;
pub mod error;
pub mod field;
pub mod intersection;
pub mod fixtures;
pub mod knitting;
pub mod pathalg;
pub mod singularity;
pub mod typea;
pub mod weights;

pub use error::{Error, ParseError, Result};
pub use field::FieldElem;
