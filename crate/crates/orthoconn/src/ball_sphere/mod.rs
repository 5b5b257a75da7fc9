//! Ball and sphere bases built from simplex Jacobi polynomials by the parity
//! construction `x^eps P(x_1^2, ..., x_d^2)`.
//!
//! Everything stays polynomial: the factored form is expanded through
//! squared variables, and the sphere variant is homogenized by `r^2 = |y|^2`.

pub mod ball;
pub mod disk;
pub mod sphere;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{pochhammer, Scalar};
use crate::multipoly::SparsePoly;
use crate::simplex_jacobi::jacobi_1d;

pub use ball::{
    ball_basis_direct, ball_connection, ball_connection_gram, ball_inner_product, ball_inner_product_poly, q_ball,
    verify_ball_blocks, verify_ball_connection, verify_ball_equivalence, verify_ball_orthogonality, BallKappa,
};
pub use disk::{disk_polar_basis, verify_disk_polar, PolarBranch};
pub use sphere::{
    example_910_check, sphere_basis, sphere_connection, sphere_connection_gram, sphere_dimension, sphere_inner_product,
    verify_sphere_basis, verify_sphere_connection,
};

/// `x^eps core(x_1^2, ..., x_k^2)`; for the sphere the product is further
/// multiplied by `r^{n - |eps|}` when expanded.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct ParityPoly<S: Scalar> {
    pub eps: Vec<usize>,
    pub core: SparsePoly<S>,
}

impl<S: Scalar> ParityPoly<S> {
    pub fn new(eps: Vec<usize>, core: SparsePoly<S>) -> Result<Self> {
        if eps.iter().any(|&e| e > 1) {
            return Err(Error::InvalidParameter(format!("parity vector {eps:?} must be 0/1")));
        }
        Ok(Self { eps, core })
    }

    pub fn degree(&self) -> usize {
        self.eps.iter().sum::<usize>() + 2 * self.core.degree().unwrap_or(0)
    }

    /// The polynomial in `eps.len()` variables, with the core read in the
    /// squares of the first `core.nvars()` of them.
    pub fn expand(&self) -> SparsePoly<S> {
        let m = self.eps.len();
        let mut out = SparsePoly::zero(m);
        for (e, c) in self.core.terms() {
            let mut exp = self.eps.clone();
            for (i, k) in e.iter().enumerate() {
                exp[i] += 2 * k;
            }
            out = &out + &SparsePoly::monomial(m, exp, c.clone());
        }
        out
    }
}

/// `C_n^{(lambda, mu)}(t) = t^{n mod 2} core(t^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GegenbauerGen<S: Scalar> {
    pub parity: usize,
    /// Coefficients of `core` in `s = t^2`.
    pub core: Vec<S>,
}

impl<S: Scalar> GegenbauerGen<S> {
    /// Coefficients in `t`.
    pub fn coefficients(&self) -> Vec<S> {
        let mut out = vec![S::zero(); 2 * self.core.len() - 1 + self.parity];
        for (k, c) in self.core.iter().enumerate() {
            out[2 * k + self.parity] = c.clone();
        }
        out
    }
}

/// `f(2s - 1)` as coefficients in `s`.
fn shift_argument<S: Scalar>(f: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); f.len()];
    let mut pow = vec![S::one()];
    for c in f {
        for (i, p) in pow.iter().enumerate() {
            out[i] = out[i].clone() + c.clone() * p.clone();
        }
        let mut next = vec![S::zero(); pow.len() + 1];
        for (i, p) in pow.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + S::from_i64(2) * p.clone();
            next[i] = next[i].clone() - p.clone();
        }
        pow = next;
    }
    out
}

/// Generalized Gegenbauer polynomial orthogonal for `|t|^{2mu} (1-t^2)^{lambda-1/2}`:
/// `C_{2m} = (lambda+mu)_m / (mu+1/2)_m P_m^{(lambda-1/2, mu-1/2)}(2t^2-1)` and
/// `C_{2m+1} = (lambda+mu)_{m+1} / (mu+1/2)_{m+1} t P_m^{(lambda-1/2, mu+1/2)}(2t^2-1)`.
pub fn gegenbauer_gen<S: Scalar>(n: usize, lambda: &S, mu: &S) -> Result<GegenbauerGen<S>> {
    let half = S::from_frac(1, 2);
    let m = n / 2;
    let parity = n % 2;
    let steps = m + parity;
    let den = pochhammer(&(mu.clone() + half.clone()), steps);
    if den.is_zero() {
        return Err(Error::InvalidParameter("Gegenbauer normalization vanishes".into()));
    }
    let pre = pochhammer(&(lambda.clone() + mu.clone()), steps) / den;
    let b = if parity == 0 { mu.clone() - half.clone() } else { mu.clone() + half.clone() };
    let p = jacobi_1d(m, &(lambda.clone() - half), &b)?;
    let core = shift_argument(&p).into_iter().map(|c| c * pre.clone()).collect();
    Ok(GegenbauerGen { parity, core })
}

/// Componentwise `alpha mod 2` and `(alpha - eps) / 2`.
pub fn split_parity(alpha: &[usize]) -> (Vec<usize>, Vec<usize>) {
    (alpha.iter().map(|a| a % 2).collect(), alpha.iter().map(|a| a / 2).collect())
}
