//! Sparse multivariate polynomials and dense exact matrices.

pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use matrix::{in_column_space, matrix_kernel, matrix_rank, ExactMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use polynomial::{elementary_symmetric, vandermonde, Polynomial};
