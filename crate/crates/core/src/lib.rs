pub mod arith;
pub mod combin;
pub mod error;
pub mod groebner;
pub mod lefschetz;
pub mod poly;
pub mod specht;
pub mod tableaux;
pub mod theorems;

pub use arith::{FieldSpec, Scalar};
pub use error::{Error, Result};
