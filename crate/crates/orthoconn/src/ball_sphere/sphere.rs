//! Homogeneous parity bases on the sphere `S^d` in `d + 1` variables.

use std::collections::HashMap;

use num_traits::Zero;

use super::ball::{image_parity, parity_level, simplex_hat};
use super::ParityPoly;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, sign_of, QSqrt, Scalar};
use crate::multipoly::{MultiIndex, SparsePoly};
use crate::report::Report;
use crate::simplex_jacobi::{enumerate_basis, jacobi_simplex_basis, simplex_moment, KappaParams, Permutation};

/// `Q_{nu,eps}(y) = r^{n-|eps|} y^eps P_nu^{kappa+eps}(x_1^2, ..., x_d^2)` in factored form;
/// `eps` has `d + 1` entries, `kappa` is the sphere parameter of length `d + 1`.
pub fn sphere_basis<S: Scalar>(nu: &[usize], eps: &[usize], kappa: &KappaParams<S>, n: usize) -> Result<ParityPoly<S>> {
    let d = kappa.d();
    if nu.len() != d || eps.len() != d + 1 {
        return Err(Error::DimensionMismatch { expected: d, got: nu.len() });
    }
    let m = parity_level(n, eps)?;
    if nu.iter().sum::<usize>() != m {
        return Err(Error::ParityMismatch { n, eps: eps.iter().sum() });
    }
    ParityPoly::new(eps.to_vec(), jacobi_simplex_basis(nu, &kappa.shifted(eps))?)
}

/// The homogeneous polynomial of degree `n`: the core in `x_i^2 = y_i^2 / r^2`
/// is cleared by `r^{n - |eps|}`.
pub fn sphere_expand<S: Scalar>(p: &ParityPoly<S>, n: usize) -> Result<SparsePoly<S>> {
    let vars = p.eps.len();
    let m = parity_level(n, &p.eps)?;
    let r2 = (0..vars).fold(SparsePoly::zero(vars), |acc, i| &acc + &SparsePoly::var(vars, i).pow(2));
    let mut r_pows = vec![SparsePoly::one(vars)];
    for _ in 0..m {
        r_pows.push(r_pows.last().unwrap() * &r2);
    }
    let mut out = SparsePoly::zero(vars);
    for (k, c) in p.core.terms() {
        let deg: usize = k.iter().sum();
        if deg > m {
            return Err(Error::ParityMismatch { n, eps: p.eps.iter().sum() });
        }
        let mut e = p.eps.clone();
        for (i, ki) in k.iter().enumerate() {
            e[i] += 2 * ki;
        }
        out = &out + &(&SparsePoly::monomial(vars, e, c.clone()) * &r_pows[m - deg]);
    }
    Ok(out)
}

/// Normalized moment of `y^beta` on the sphere: zero unless every exponent is
/// even, then the Dirichlet moment of `beta / 2` on the `(d+1)`-coordinate simplex.
pub fn sphere_moment<S: Scalar>(beta: &[usize], kappa: &KappaParams<S>) -> S {
    if beta.iter().any(|b| b % 2 == 1) {
        return S::zero();
    }
    let g: Vec<usize> = beta.iter().map(|b| b / 2).collect();
    simplex_moment(&g, kappa)
}

/// `<p, q>` over the sphere for polynomials in `d + 1` variables, normalized to `<1, 1> = 1`.
pub fn sphere_inner_product<S: Scalar>(p: &SparsePoly<S>, q: &SparsePoly<S>, kappa: &KappaParams<S>) -> S {
    let mut cache: HashMap<MultiIndex, S> = HashMap::new();
    let mut s = S::zero();
    for (a, u) in p.terms() {
        for (b, v) in q.terms() {
            let e: MultiIndex = a.iter().zip(b).map(|(x, y)| x + y).collect();
            let m = cache.entry(e.clone()).or_insert_with(|| sphere_moment(&e, kappa)).clone();
            s = s + u.clone() * v.clone() * m;
        }
    }
    s
}

/// `dim H_n^{d+1} = C(n+d, d) - C(n+d-2, d)`, with `vars = d + 1`.
pub fn sphere_dimension(n: usize, vars: usize) -> usize {
    let d = vars - 1;
    let c = |k: usize| -> usize { binomial::<num_rational::BigRational>(k, d).to_integer().try_into().unwrap_or(0) };
    c(n + d) - if n >= 2 { c(n + d - 2) } else { 0 }
}

/// All parity vectors in `{0,1}^vars`, in increasing binary order.
pub fn parity_vectors(vars: usize) -> Vec<Vec<usize>> {
    (0..1usize << vars).map(|m| (0..vars).map(|i| (m >> i) & 1).collect()).collect()
}

/// Every `(nu, eps)` of degree `n` with its factored element.
pub fn sphere_basis_all<S: Scalar>(n: usize, kappa: &KappaParams<S>) -> Result<Vec<(MultiIndex, Vec<usize>, ParityPoly<S>)>> {
    let d = kappa.d();
    let mut out = Vec::new();
    for eps in parity_vectors(d + 1) {
        let Ok(m) = parity_level(n, &eps) else { continue };
        for nu in enumerate_basis(m, d) {
            let p = sphere_basis(&nu, &eps, kappa, n)?;
            out.push((nu, eps.clone(), p));
        }
    }
    Ok(out)
}

/// Homogeneity, count, mutual orthogonality and orthogonality to every
/// monomial of lower degree.
pub fn verify_sphere_basis<S: Scalar>(kappa: &KappaParams<S>, n: usize) -> Result<Report> {
    let vars = kappa.d() + 1;
    let mut rep = Report::new(format!("sphere basis vars={vars} n={n}"));
    let basis = sphere_basis_all(n, kappa)?;
    let dim = sphere_dimension(n, vars);
    rep.check(basis.len() == dim, || format!("{} elements, dimension {dim}", basis.len()));
    let polys: Vec<SparsePoly<S>> = basis.iter().map(|(_, _, p)| sphere_expand(p, n)).collect::<Result<_>>()?;
    for (i, p) in polys.iter().enumerate() {
        let homogeneous = p.terms().all(|(e, _)| e.iter().sum::<usize>() == n);
        rep.check(homogeneous, || format!("{:?}: not homogeneous of degree {n}", basis[i].0));
        for (j, q) in polys.iter().enumerate().skip(i) {
            let v = sphere_inner_product(p, q, kappa);
            if i == j {
                rep.check(!v.is_zero(), || format!("{:?}/{:?}: zero norm", basis[i].0, basis[i].1));
            } else {
                rep.check(v.is_zero(), || {
                    format!("{:?}/{:?} vs {:?}/{:?}: {v}", basis[i].0, basis[i].1, basis[j].0, basis[j].1)
                });
            }
        }
        for k in 0..n {
            for beta in enumerate_basis(k, vars) {
                let v = sphere_inner_product(p, &SparsePoly::monomial(vars, beta.clone(), S::one()), kappa);
                rep.check(v.is_zero(), || format!("{:?}/{:?} against y^{beta:?}: {v}", basis[i].0, basis[i].1));
            }
        }
    }
    Ok(rep)
}

/// The listed spherical harmonics of degrees `2n` and `2n + 1` on `S^2`:
/// pairwise orthogonal under the surface measure and annihilated by the Laplacian.
pub fn example_910_check(n: usize) -> Result<Report> {
    type Q = num_rational::BigRational;
    let mut rep = Report::new(format!("spherical harmonics on S^2, degrees {} and {}", 2 * n, 2 * n + 1));
    let half = Q::from_frac(1, 2);
    let kappa = KappaParams::new(vec![-half.clone(), -half.clone(), -half])?;
    let even: [[usize; 3]; 4] = [[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]];
    let odd: [[usize; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
    for (deg, families, expected) in [(2 * n, even, 4 * n + 1), (2 * n + 1, odd, 4 * n + 3)] {
        let mut elems: Vec<(String, SparsePoly<Q>)> = Vec::new();
        for eps in families {
            let Ok(m) = parity_level(deg, &eps) else { continue };
            for j in 0..=m {
                let p = sphere_basis(&[m - j, j], &eps, &kappa, deg)?;
                elems.push((format!("eps={eps:?} j={j}"), sphere_expand(&p, deg)?));
            }
        }
        rep.check(elems.len() == expected, || format!("degree {deg}: {} elements, expected {expected}", elems.len()));
        rep.check(elems.len() == sphere_dimension(deg, 3), || format!("degree {deg}: count differs from dimension"));
        for (i, (a, p)) in elems.iter().enumerate() {
            rep.check(p.laplacian().is_zero(), || format!("degree {deg}, {a}: not harmonic"));
            for (b, q) in elems.iter().skip(i + 1) {
                let v = sphere_inner_product(p, q, &kappa);
                rep.check(v.is_zero(), || format!("degree {deg}, {a} vs {b}: {v}"));
            }
        }
    }
    Ok(rep)
}

/// Normalized coefficient of `Q^kappa_{mu,eps'}` in `Q^{tau kappa}_{nu,eps}(tau y)`
/// for `tau` in `S_{d+1}`. Permuting `y` permutes `u = y^2 / r^2` on the full
/// simplex, so the value is `c-hat^tau_{nu,mu}(kappa + eps')` when `eps'` is
/// the image parity and zero otherwise.
pub fn sphere_connection<S: Scalar>(
    tau: &Permutation,
    (nu, eps): (&[usize], &[usize]),
    (mu, eps_b): (&[usize], &[usize]),
    kappa: &KappaParams<S>,
) -> Result<QSqrt<S>> {
    let d = kappa.d();
    if tau.size() != d + 1 || eps.len() != d + 1 || eps_b.len() != d + 1 {
        return Err(Error::DimensionMismatch { expected: d + 1, got: tau.size() });
    }
    let eps_img = image_parity(tau, eps);
    if eps_b != eps_img.as_slice() || nu.iter().sum::<usize>() != mu.iter().sum::<usize>() {
        return Ok(QSqrt::zero());
    }
    simplex_hat(tau, nu, mu, &kappa.shifted(&eps_img))
}

/// Labels `(nu, eps)` in the order of [`sphere_basis_all`] with the
/// normalized coefficients from sphere inner products.
#[allow(clippy::type_complexity)]
pub fn sphere_connection_gram<S: Scalar>(
    tau: &Permutation,
    kappa: &KappaParams<S>,
    n: usize,
) -> Result<(Vec<(MultiIndex, Vec<usize>)>, Vec<Vec<QSqrt<S>>>)> {
    let vars = kappa.d() + 1;
    let subs: Vec<SparsePoly<S>> = (0..vars).map(|i| SparsePoly::var(vars, tau.apply(i))).collect();
    let tk = kappa.permuted(tau);
    let right = sphere_basis_all(n, kappa)?;
    let labels: Vec<(MultiIndex, Vec<usize>)> = right.iter().map(|(nu, e, _)| (nu.clone(), e.clone())).collect();
    let polys: Vec<SparsePoly<S>> = right.iter().map(|(_, _, p)| sphere_expand(p, n)).collect::<Result<_>>()?;
    let norms: Vec<S> = polys.iter().map(|p| sphere_inner_product(p, p, kappa)).collect();
    let mut out = Vec::new();
    for (nu, eps) in &labels {
        let left = sphere_expand(&sphere_basis(nu, eps, &tk, n)?, n)?.compose(&subs)?;
        let ln = sphere_inner_product(&left, &left, kappa);
        out.push(
            polys
                .iter()
                .zip(&norms)
                .map(|(q, qn)| {
                    let b = sphere_inner_product(&left, q, kappa) / qn.clone();
                    QSqrt::new(sign_of(&b), b.clone() * b * qn.clone() / ln.clone())
                })
                .collect(),
        );
    }
    Ok((labels, out))
}

/// [`sphere_connection`] against [`sphere_connection_gram`].
pub fn verify_sphere_connection<S: Scalar>(tau: &Permutation, kappa: &KappaParams<S>, n: usize) -> Result<Report> {
    let mut rep = Report::new(format!("sphere connection tau={tau} n={n}"));
    let (labels, g) = sphere_connection_gram(tau, kappa, n)?;
    for (i, (nu, e)) in labels.iter().enumerate() {
        for (j, (mu, f)) in labels.iter().enumerate() {
            let v = sphere_connection(tau, (nu, e), (mu, f), kappa)?;
            rep.check(v == g[i][j], || format!("{nu:?}/{e:?},{mu:?}/{f:?}: {v} != gram {}", g[i][j]));
        }
    }
    Ok(rep)
}
