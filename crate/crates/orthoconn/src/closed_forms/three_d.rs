//! All of `S_4` acting on the tetrahedron.
//!
//! Twelve permutations have their own formula; the other twelve are
//! `tau0 (34)` for one of them and pick up `(-1)^{nu_3}`.

use super::general::{cc_cyclic, CyclicForm};
use super::two_d::cc_2d_tau12;
use super::ClosedFormResult;
use crate::error::{Error, Result};
use crate::exact_arith::{neg_one_pow, sum_sqrt_terms, QSqrt, Scalar};
use crate::racah::{
    racah_1d, racah_multi, racah_norm_1d, racah_norm_sq, racah_weight_1d, racah_weight_multi, RacahParams1D,
    RacahParamsMulti,
};
use crate::simplex_jacobi::{enumerate_basis, Permutation};

const PRIMARY: [&str; 12] =
    ["(1)", "(12)", "(13)", "(14)", "(23)", "(24)", "(123)", "(124)", "(132)", "(142)", "(13)(24)", "(14)(23)"];

fn swap34<S: Clone>(k: &[S]) -> Vec<S> {
    vec![k[0].clone(), k[1].clone(), k[3].clone(), k[2].clone()]
}

fn parity(k: usize) -> bool {
    k % 2 == 1
}

fn total<S: Scalar>(k: &[S]) -> S {
    k.iter().cloned().fold(S::zero(), |a, b| a + b)
}

/// `c^{(12)}`: the triangle formula with the last parameter `k3 + k4 + 2 nu_3 + 1`.
pub fn cc_3d_12<S: Scalar>(nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<S> {
    if nu[2] != mu[2] {
        return Ok(S::zero());
    }
    let kh = [
        kappa[0].clone(),
        kappa[1].clone(),
        kappa[2].clone() + kappa[3].clone() + S::from_usize(2 * nu[2] + 1),
    ];
    cc_2d_tau12(nu[1], mu[1], &kh, nu[1] + nu[0])
}

/// `c^{(23)}`: the triangle formula on `(k2, k3, k4)` in degree `n - nu_1`.
pub fn cc_3d_23<S: Scalar>(nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<S> {
    if nu[0] != mu[0] {
        return Ok(S::zero());
    }
    cc_2d_tau12(nu[2], mu[2], &kappa[1..], nu[1] + nu[2])
}

/// `c^{(24)}(kappa) = (-1)^{nu_3 + mu_3} c^{(23)}((34) kappa)`.
pub fn cc_3d_24<S: Scalar>(nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<S> {
    Ok(neg_one_pow::<S>(nu[2] + mu[2]) * cc_3d_23(nu, mu, &swap34(kappa))?)
}

/// `c-hat^{(123)}`: bivariate Racah of degree `(mu_3, mu_2)` at `(nu_3, nu_2 + nu_3)`.
pub fn cc_3d_123<S: Scalar>(nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<QSqrt<S>> {
    cc_cyclic(CyclicForm::MuDegree, nu, mu, kappa)
}

/// `c-hat^{(132)}_{nu,mu}(kappa) = c-hat^{(123)}_{mu,nu}((132) kappa)`.
pub fn cc_3d_132<S: Scalar>(nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<QSqrt<S>> {
    let k = [kappa[2].clone(), kappa[0].clone(), kappa[1].clone(), kappa[3].clone()];
    cc_3d_123(mu, nu, &k)
}

/// `c-hat^{(13)}` as a single sum of products of a one-variable and a
/// bivariate Racah polynomial, collapsed to one square class.
pub fn cc_3d_13<S: Scalar>(nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<QSqrt<S>> {
    let n: usize = nu.iter().sum();
    let big1 = n - nu[2];
    let sigma = RacahParams1D::new(
        -S::from_usize(big1 + 1),
        S::from_usize(n + nu[2] + 2) + total(kappa) - kappa[2].clone(),
        kappa[0].clone() + kappa[3].clone() + S::from_usize(2 * nu[2] + 1),
        kappa[2].clone(),
        big1,
    );
    let beta = vec![
        kappa[0].clone(),
        kappa[0].clone() + kappa[3].clone() + S::one(),
        kappa[0].clone() + kappa[2].clone() + kappa[3].clone() + S::from_i64(2),
        total(kappa) + S::from_i64(3),
    ];
    let p = RacahParamsMulti::new(beta, n)?;
    let deg = [mu[2], mu[1]];
    let r1 = racah_norm_1d(nu[1], &sigma)?;
    let r2 = racah_norm_sq(&deg, &p)?;
    if r1.is_zero() || r2.is_zero() {
        return Err(Error::InvalidParameter("vanishing Racah norm in the single-sum formula".into()));
    }
    let mut terms = Vec::with_capacity(big1 + 1);
    for l in 0..=big1 {
        let x = [nu[2], l + nu[2]];
        let coef = neg_one_pow::<S>(nu[1] + l) * racah_1d(nu[1], l, &sigma)? * racah_multi(&deg, &x, &p)?;
        let rad = racah_weight_1d(l, &sigma)? * racah_weight_multi(&x, &p)? / (r1.clone() * r2.clone());
        terms.push((coef, rad));
    }
    sum_sqrt_terms(&terms)
}

/// `c-hat^{(14)}(kappa) = (-1)^{nu_3 + mu_3} c-hat^{(13)}((34) kappa)`.
pub fn cc_3d_14<S: Scalar>(nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<QSqrt<S>> {
    Ok(cc_3d_13(nu, mu, &swap34(kappa))?.with_sign_flip(parity(nu[2] + mu[2])))
}

fn tau_of(name: &str) -> Permutation {
    Permutation::parse(name, 4).expect("static cycle notation")
}

/// `sum_omega c^{t2}_{nu,omega}(t1 kappa) c^{t1}_{omega,mu}(kappa)` on raw values.
fn convolve<S: Scalar>(
    t1: &str,
    t2: &str,
    nu: &[usize],
    mu: &[usize],
    kappa: &[S],
) -> Result<S> {
    let (p1, p2) = (tau_of(t1), tau_of(t2));
    let k1 = p1.act(kappa);
    let n: usize = nu.iter().sum();
    let mut acc = S::zero();
    for om in enumerate_basis(n, 3) {
        let a = primary(t2, nu, &om, &k1)?.raw_value(&p2, nu, &om, &k1)?;
        if a.is_zero() {
            continue;
        }
        let b = primary(t1, &om, mu, kappa)?.raw_value(&p1, &om, mu, kappa)?;
        acc = acc + a * b;
    }
    Ok(acc)
}

fn primary<S: Scalar>(name: &str, nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<ClosedFormResult<S>> {
    let delta = if nu == mu { S::one() } else { S::zero() };
    let flip = parity(nu[2] + mu[2]);
    Ok(match name {
        "(1)" => ClosedFormResult::raw(delta, "identity"),
        "(12)" => ClosedFormResult::raw(cc_3d_12(nu, mu, kappa)?, "tetrahedron (12)"),
        "(23)" => ClosedFormResult::raw(cc_3d_23(nu, mu, kappa)?, "tetrahedron (23)"),
        "(24)" => ClosedFormResult::raw(cc_3d_24(nu, mu, kappa)?, "tetrahedron (24)"),
        "(123)" => ClosedFormResult::hat(cc_3d_123(nu, mu, kappa)?, "tetrahedron (123)"),
        "(132)" => ClosedFormResult::hat(cc_3d_132(nu, mu, kappa)?, "tetrahedron (132)"),
        "(124)" => ClosedFormResult::hat(cc_3d_123(nu, mu, &swap34(kappa))?.with_sign_flip(flip), "tetrahedron (124)"),
        "(142)" => ClosedFormResult::hat(cc_3d_132(nu, mu, &swap34(kappa))?.with_sign_flip(flip), "tetrahedron (142)"),
        "(13)" => ClosedFormResult::hat(cc_3d_13(nu, mu, kappa)?, "tetrahedron (13) single sum"),
        "(14)" => ClosedFormResult::hat(cc_3d_14(nu, mu, kappa)?, "tetrahedron (14) single sum"),
        "(13)(24)" => ClosedFormResult::raw(convolve("(13)", "(24)", nu, mu, kappa)?, "tetrahedron (13)(24) convolution"),
        "(14)(23)" => ClosedFormResult::raw(convolve("(14)", "(23)", nu, mu, kappa)?, "tetrahedron (14)(23) convolution"),
        _ => unreachable!("not a primary permutation"),
    })
}

/// Closed-form coefficient for any `tau` in `S_4`.
pub fn cc_3d<S: Scalar>(tau: &Permutation, nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<ClosedFormResult<S>> {
    if tau.size() != 4 || nu.len() != 3 || mu.len() != 3 || kappa.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: tau.size() });
    }
    if let Some(name) = PRIMARY.iter().find(|s| tau_of(s) == *tau) {
        return primary(name, nu, mu, kappa);
    }
    let tau0 = tau.compose(&Permutation::transposition(4, 2, 3));
    let name = PRIMARY.iter().find(|s| tau_of(s) == tau0).expect("cosets of (34) cover S_4");
    Ok(primary(name, nu, mu, kappa)?.flipped(parity(nu[2])).tagged("last-swap sign"))
}
