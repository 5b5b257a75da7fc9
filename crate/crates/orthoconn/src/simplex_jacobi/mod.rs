//! Jacobi polynomials on the simplex: weight moments, the mutually orthogonal
//! product basis, its norms and the symmetric-group action.

mod basis;
mod permutation;

pub use basis::{
    a_coeffs, enumerate_basis, enumerate_upto, inner_product_simplex, jacobi_1d, jacobi_simplex_basis,
    norm_a, permute_vars, simplex_moment, KappaParams, Moments,
};
pub use permutation::Permutation;
