//! The product weight `prod |x_i|^{2 kappa_i + 1} (1 - |x|^2)^{kappa_{d+1}}` on the unit ball.

use std::collections::HashMap;

use super::{gegenbauer_gen, split_parity, ParityPoly};
use crate::closed_forms::closed_form_entry;
use crate::connection::gram_connection;
use crate::error::{Error, Result};
use crate::exact_arith::{sign_of, QSqrt, Scalar};
use crate::multipoly::{substitute_homogeneous, tail_sum, MultiIndex, SparsePoly};
use crate::report::Report;
use crate::simplex_jacobi::{
    enumerate_basis, inner_product_simplex, jacobi_simplex_basis, simplex_moment, KappaParams, Permutation,
};

/// Ball parameters: `kappa_1..kappa_d` on `|x_i|`, `kappa_{d+1}` on `1 - |x|^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BallKappa<S> {
    pub kappa: KappaParams<S>,
}

impl<S: Scalar> BallKappa<S> {
    pub fn new(kappa: Vec<S>) -> Result<Self> {
        Ok(Self { kappa: KappaParams::new(kappa)? })
    }

    pub fn d(&self) -> usize {
        self.kappa.d()
    }

    /// `kappa + (eps, 0)`.
    pub fn shifted(&self, eps: &[usize]) -> KappaParams<S> {
        self.kappa.shifted(eps)
    }

    /// `(tau (kappa_1..kappa_d), kappa_{d+1})` for `tau` in `S_d`.
    pub fn permuted(&self, tau: &Permutation) -> Self {
        Self { kappa: self.kappa.permuted(&extend(tau)) }
    }
}

/// `tau` in `S_d` as an element of `S_{d+1}` fixing the last point.
pub fn extend(tau: &Permutation) -> Permutation {
    let mut img = tau.images().to_vec();
    img.push(img.len());
    Permutation::from_images(img).expect("extension of a permutation")
}

/// Normalized moment of `x^beta`: zero unless every exponent is even, in
/// which case it is the simplex moment of `beta / 2`.
pub fn ball_moment<S: Scalar>(beta: &[usize], kappa: &BallKappa<S>) -> S {
    if beta.iter().any(|b| b % 2 == 1) {
        return S::zero();
    }
    let mut g: Vec<usize> = beta.iter().map(|b| b / 2).collect();
    g.push(0);
    simplex_moment(&g, &kappa.kappa)
}

/// `<p, q>` for genuine polynomials, normalized so that `<1, 1> = 1`.
pub fn ball_inner_product_poly<S: Scalar>(p: &SparsePoly<S>, q: &SparsePoly<S>, kappa: &BallKappa<S>) -> S {
    let mut cache: HashMap<MultiIndex, S> = HashMap::new();
    let mut s = S::zero();
    for (a, u) in p.terms() {
        for (b, v) in q.terms() {
            let e: MultiIndex = a.iter().zip(b).map(|(x, y)| x + y).collect();
            let m = cache.entry(e.clone()).or_insert_with(|| ball_moment(&e, kappa)).clone();
            s = s + u.clone() * v.clone() * m;
        }
    }
    s
}

/// `<x^eps P(x^2), x^eps' Q(x^2)>`: zero across parity classes, otherwise
/// the simplex inner product of the cores at `kappa + eps`, scaled by the
/// moment of `x^{2 eps}`.
pub fn ball_inner_product<S: Scalar>(p: &ParityPoly<S>, q: &ParityPoly<S>, kappa: &BallKappa<S>) -> Result<S> {
    let d = kappa.d();
    if p.eps.len() != d || q.eps.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: p.eps.len().max(q.eps.len()) });
    }
    if p.eps != q.eps {
        return Ok(S::zero());
    }
    let mut e = p.eps.clone();
    e.push(0);
    let scale = simplex_moment(&e, &kappa.kappa);
    Ok(scale * inner_product_simplex(&p.core, &q.core, &kappa.shifted(&p.eps)))
}

/// `Q_{nu,eps}(x) = x^eps P_nu^{kappa+eps}(x_1^2, ..., x_d^2)`.
pub fn q_ball<S: Scalar>(nu: &[usize], eps: &[usize], kappa: &BallKappa<S>) -> Result<ParityPoly<S>> {
    let d = kappa.d();
    if nu.len() != d || eps.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: nu.len().max(eps.len()) });
    }
    ParityPoly::new(eps.to_vec(), jacobi_simplex_basis(nu, &kappa.shifted(eps))?)
}

/// The element of degree `|alpha|` with parity `alpha mod 2`.
pub fn q_ball_alpha<S: Scalar>(alpha: &[usize], kappa: &BallKappa<S>) -> Result<ParityPoly<S>> {
    let (eps, nu) = split_parity(alpha);
    q_ball(&nu, &eps, kappa)
}

/// Checks `n - |eps|` is even and returns `(n - |eps|) / 2`.
pub fn parity_level(n: usize, eps: &[usize]) -> Result<usize> {
    let e: usize = eps.iter().sum();
    if e > n || (n - e) % 2 == 1 {
        return Err(Error::ParityMismatch { n, eps: e });
    }
    Ok((n - e) / 2)
}

/// The product of generalized Gegenbauer factors
/// `(1 - |x_{j-1}|^2)^{alpha_j / 2} C_{alpha_j}^{(lambda_j + 1/2, kappa_j + 1/2)}(x_j / sqrt(1 - |x_{j-1}|^2))`
/// with `lambda_j = |alpha^{j+1}| + |kappa^{j+1}| + d - j`, expanded without square roots.
pub fn ball_basis_direct<S: Scalar>(alpha: &[usize], kappa: &BallKappa<S>) -> Result<SparsePoly<S>> {
    let d = kappa.d();
    if alpha.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: alpha.len() });
    }
    let half = S::from_frac(1, 2);
    let mut out = SparsePoly::one(d);
    let mut rest = SparsePoly::one(d);
    for j in 0..d {
        let lam = S::from_usize(tail_sum(alpha, j + 2) + d - j - 1) + kappa.kappa.tail(j + 2);
        let g = gegenbauer_gen(alpha[j], &(lam + half.clone()), &(kappa.kappa.k(j + 1).clone() + half.clone()))?;
        let xj = SparsePoly::var(d, j);
        let sq = &xj * &xj;
        let mut factor = substitute_homogeneous(&g.core, &sq, &rest)?;
        if g.parity == 1 {
            factor = &factor * &xj;
        }
        out = &out * &factor;
        rest = &rest - &sq;
    }
    Ok(out)
}

/// Parity polynomial against the Gegenbauer product for `alpha`; the two are
/// scalar multiples and the scalar is returned with the report.
pub fn verify_ball_equivalence<S: Scalar>(alpha: &[usize], kappa: &BallKappa<S>) -> Result<(S, Report)> {
    let mut rep = Report::new(format!("ball equivalence alpha={alpha:?}"));
    let q = q_ball_alpha(alpha, kappa)?.expand();
    let p = ball_basis_direct(alpha, kappa)?;
    match p.proportionality(&q) {
        Ok(c) => {
            rep.check(!c.is_zero(), || "zero proportionality constant".into());
            Ok((c, rep))
        }
        Err(Error::NotProportional) => {
            rep.fail("not proportional");
            Ok((S::zero(), rep))
        }
        Err(e) => Err(e),
    }
}

/// Every `|alpha| = n` in basis order with its parity element.
pub fn ball_basis_all<S: Scalar>(n: usize, kappa: &BallKappa<S>) -> Result<Vec<(MultiIndex, ParityPoly<S>)>> {
    enumerate_basis(n, kappa.d()).into_iter().map(|a| Ok((a.clone(), q_ball_alpha(&a, kappa)?))).collect()
}

/// Mutual orthogonality of the degree-`n` family, by the factored inner
/// product and by monomial moments, and orthogonality to lower degrees.
pub fn verify_ball_orthogonality<S: Scalar>(kappa: &BallKappa<S>, n: usize) -> Result<Report> {
    let d = kappa.d();
    let mut rep = Report::new(format!("ball orthogonality d={d} n={n}"));
    let basis = ball_basis_all(n, kappa)?;
    let expanded: Vec<SparsePoly<S>> = basis.iter().map(|(_, p)| p.expand()).collect();
    for (i, (a, p)) in basis.iter().enumerate() {
        for (j, (b, q)) in basis.iter().enumerate().skip(i) {
            let f = ball_inner_product(p, q, kappa)?;
            let m = ball_inner_product_poly(&expanded[i], &expanded[j], kappa);
            rep.check(f == m, || format!("{a:?},{b:?}: factored {f} != moments {m}"));
            if i == j {
                rep.check(!f.is_zero(), || format!("{a:?}: zero norm"));
            } else {
                rep.check(f.is_zero(), || format!("{a:?},{b:?}: {f} != 0"));
            }
        }
    }
    for k in 0..n {
        for beta in enumerate_basis(k, d) {
            let mono = SparsePoly::monomial(d, beta.clone(), S::one());
            for (i, (a, _)) in basis.iter().enumerate() {
                let v = ball_inner_product_poly(&expanded[i], &mono, kappa);
                rep.check(v.is_zero(), || format!("{a:?} against x^{beta:?}: {v}"));
            }
        }
    }
    Ok(rep)
}

pub(crate) fn image_parity(tau: &Permutation, eps: &[usize]) -> Vec<usize> {
    let mut out = vec![0; eps.len()];
    for (i, &e) in eps.iter().enumerate() {
        out[tau.apply(i)] = e;
    }
    out
}

/// Normalized coefficient of `Q^kappa_beta` in `Q^{tau kappa}_alpha(tau x)`, `tau` in `S_d`.
///
/// `(tau x)^eps = x^{eps'}` with `eps'_{tau(i)} = eps_i`, so the only
/// nonzero block pairs `alpha = 2 nu + eps` with `beta = 2 mu + eps'`, where
/// the value is the simplex coefficient `c-hat^tau_{nu,mu}(kappa + eps')`.
pub fn ball_connection<S: Scalar>(
    tau: &Permutation,
    alpha: &[usize],
    beta: &[usize],
    kappa: &BallKappa<S>,
) -> Result<QSqrt<S>> {
    let d = kappa.d();
    if tau.size() != d {
        return Err(Error::DimensionMismatch { expected: d, got: tau.size() });
    }
    let (eps, nu) = split_parity(alpha);
    let (eps_b, mu) = split_parity(beta);
    let eps_img = image_parity(tau, &eps);
    if eps_b != eps_img || nu.iter().sum::<usize>() != mu.iter().sum::<usize>() {
        return Ok(QSqrt::zero());
    }
    simplex_hat(&extend(tau), &nu, &mu, &kappa.shifted(&eps_img))
}

/// `c-hat^tau_{nu,mu}(kappa)` from the closed forms, or from Gram where none applies.
pub(crate) fn simplex_hat<S: Scalar>(
    tau: &Permutation,
    nu: &[usize],
    mu: &[usize],
    kappa: &KappaParams<S>,
) -> Result<QSqrt<S>> {
    match closed_form_entry(tau, nu, mu, kappa.values())? {
        Some(r) => r.normalized_value(tau, nu, mu, kappa.values()),
        None => {
            let g = gram_connection(tau, kappa, nu.iter().sum())?.normalize();
            let (a, b) = (g.index_of(nu).unwrap(), g.index_of(mu).unwrap());
            Ok(g.normalized_entries()[a][b].clone())
        }
    }
}

/// Normalized coefficients from ball inner products of the expanded polynomials.
pub fn ball_connection_gram<S: Scalar>(tau: &Permutation, kappa: &BallKappa<S>, n: usize) -> Result<Vec<Vec<QSqrt<S>>>> {
    let d = kappa.d();
    let tk = kappa.permuted(tau);
    let subs: Vec<SparsePoly<S>> = (0..d).map(|i| SparsePoly::var(d, tau.apply(i))).collect();
    let order = enumerate_basis(n, d);
    let right: Vec<SparsePoly<S>> =
        order.iter().map(|b| Ok(q_ball_alpha(b, kappa)?.expand())).collect::<Result<_>>()?;
    let norms: Vec<S> = right.iter().map(|q| ball_inner_product_poly(q, q, kappa)).collect();
    let mut out = Vec::new();
    for a in &order {
        let left = q_ball_alpha(a, &tk)?.expand().compose(&subs)?;
        let ln = ball_inner_product_poly(&left, &left, kappa);
        out.push(
            right
                .iter()
                .zip(&norms)
                .map(|(q, qn)| {
                    let b = ball_inner_product_poly(&left, q, kappa) / qn.clone();
                    QSqrt::new(sign_of(&b), b.clone() * b * qn.clone() / ln.clone())
                })
                .collect(),
        );
    }
    Ok(out)
}

/// Parity blocks and values of [`ball_connection`] against [`ball_connection_gram`].
pub fn verify_ball_connection<S: Scalar>(tau: &Permutation, kappa: &BallKappa<S>, n: usize) -> Result<Report> {
    let mut rep = Report::new(format!("ball connection tau={tau} n={n}"));
    let g = ball_connection_gram(tau, kappa, n)?;
    let order = enumerate_basis(n, kappa.d());
    for (i, a) in order.iter().enumerate() {
        for (j, b) in order.iter().enumerate() {
            let v = ball_connection(tau, a, b, kappa)?;
            rep.check(v == g[i][j], || format!("{a:?},{b:?}: {v} != gram {}", g[i][j]));
        }
    }
    Ok(rep)
}

/// Ball Gram coefficients against simplex Gram matrices: zero outside the
/// blocks `(eps, eps')`, and inside each block the simplex normalized matrix
/// of `tau` at `kappa + eps'`.
pub fn verify_ball_blocks<S: Scalar>(tau: &Permutation, kappa: &BallKappa<S>, n: usize) -> Result<Report> {
    let d = kappa.d();
    let mut rep = Report::new(format!("ball blocks tau={tau} n={n}"));
    let g = ball_connection_gram(tau, kappa, n)?;
    let order = enumerate_basis(n, d);
    let t = extend(tau);
    let mut simplex: HashMap<(Vec<usize>, usize), crate::connection::ConnMatrix<S>> = HashMap::new();
    for (i, a) in order.iter().enumerate() {
        let (eps, nu) = split_parity(a);
        let eps_img = image_parity(tau, &eps);
        let m: usize = nu.iter().sum();
        let key = (eps_img.clone(), m);
        if !simplex.contains_key(&key) {
            simplex.insert(key.clone(), gram_connection(&t, &kappa.shifted(&eps_img), m)?.normalize());
        }
        let s = &simplex[&key];
        let hat = s.normalized_entries();
        for (j, b) in order.iter().enumerate() {
            let (eps_b, mu) = split_parity(b);
            if eps_b != eps_img {
                rep.check(g[i][j].is_zero(), || format!("{a:?},{b:?}: {} outside the parity block", g[i][j]));
                continue;
            }
            let e = &hat[s.index_of(&nu).unwrap()][s.index_of(&mu).unwrap()];
            rep.check(g[i][j] == *e, || format!("{a:?},{b:?}: ball {} != simplex {e}", g[i][j]));
        }
    }
    Ok(rep)
}
