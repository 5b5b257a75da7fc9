//! Connection coefficients on the triangle, indexed by `nu = (n-j, j)`.

use crate::error::{Error, Result};
use crate::exact_arith::{factorial, neg_one_pow, pochhammer, sign_of, HypSeries, QSqrt, Scalar};
use crate::multipoly::SparsePoly;
use crate::racah::{racah_1d, racah_norm_1d, racah_weight_1d, RacahParams1D};
use crate::report::Report;
use crate::simplex_jacobi::{jacobi_simplex_basis, permute_vars, KappaParams, Permutation};

fn sum<S: Scalar>(k: &[S]) -> S {
    k.iter().cloned().fold(S::zero(), |a, b| a + b)
}

fn check3<S>(kappa: &[S]) -> Result<()> {
    if kappa.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: kappa.len() });
    }
    Ok(())
}

/// The prefactor `D^n_{j,m}(kappa)` of the `(12)` coefficient.
pub fn d_coeff<S: Scalar>(j: usize, m: usize, kappa: &[S], n: usize) -> Result<S> {
    check3(kappa)?;
    let one = S::one();
    let (k2, k3) = (&kappa[1], &kappa[2]);
    let big = sum(kappa) + S::from_usize(n + 2);
    let k23 = k2.clone() + k3.clone();
    let num = pochhammer(&-S::from_usize(n), j)
        * pochhammer(&(k2.clone() + one.clone()), n - j)
        * pochhammer(&(k3.clone() + one.clone()), j)
        * pochhammer(&big, m);
    let den = factorial::<S>(j)
        * pochhammer(&(k2.clone() + one.clone()), m)
        * pochhammer(&(k23.clone() + S::from_usize(2 * m + 2)), n - m)
        * pochhammer(&(k23 + S::from_usize(m) + one), m);
    if den.is_zero() {
        return Err(Error::InvalidParameter("D prefactor has a vanishing denominator".into()));
    }
    Ok(neg_one_pow::<S>(n + m) * num / den)
}

/// The `4F3(-m, m+k2+k3+1, -j, j+k1+k3+1; -n, k3+1, n+|k|+2; 1)` shared by
/// the two-variable formulas.
pub fn racah_4f3<S: Scalar>(j: usize, m: usize, kappa: &[S], n: usize) -> Result<S> {
    let one = S::one();
    let (k1, k2, k3) = (&kappa[0], &kappa[1], &kappa[2]);
    HypSeries::unit(
        vec![
            -S::from_usize(m),
            S::from_usize(m) + k2.clone() + k3.clone() + one.clone(),
            -S::from_usize(j),
            S::from_usize(j) + k1.clone() + k3.clone() + one.clone(),
        ],
        vec![-S::from_usize(n), k3.clone() + one, sum(kappa) + S::from_usize(n + 2)],
    )
    .eval()
}

/// `c^{(12)}_{j,m}(kappa, n) = D^n_{j,m}(kappa) 4F3(...)`.
pub fn cc_2d_tau12<S: Scalar>(j: usize, m: usize, kappa: &[S], n: usize) -> Result<S> {
    check3(kappa)?;
    if j > n || m > n {
        return Err(Error::InvalidParameter(format!("indices ({j}, {m}) exceed n = {n}")));
    }
    Ok(d_coeff(j, m, kappa, n)? * racah_4f3(j, m, kappa, n)?)
}

/// All of `S_3`: the three trivial relations, `(12)` directly, and `(13)`,
/// `(132)` through `kappa -> (23) kappa`.
pub fn cc_2d<S: Scalar>(tau: &Permutation, j: usize, m: usize, kappa: &[S], n: usize) -> Result<S> {
    check3(kappa)?;
    if tau.size() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: tau.size() });
    }
    let delta = if j == m { S::one() } else { S::zero() };
    let swapped = [kappa[0].clone(), kappa[2].clone(), kappa[1].clone()];
    Ok(match tau.images() {
        [0, 1, 2] => delta,
        [0, 2, 1] => neg_one_pow::<S>(j) * delta,
        [1, 0, 2] => cc_2d_tau12(j, m, kappa, n)?,
        [1, 2, 0] => neg_one_pow::<S>(j) * cc_2d_tau12(j, m, kappa, n)?,
        [2, 1, 0] => neg_one_pow::<S>(m + j) * cc_2d_tau12(j, m, &swapped, n)?,
        [2, 0, 1] => neg_one_pow::<S>(m) * cc_2d_tau12(j, m, &swapped, n)?,
        _ => unreachable!("S_3 has six elements"),
    })
}

/// One-variable Racah parameters `sigma_1 = (-n-1, n+k1+k3+1, k3, k2)`.
pub fn sigma1<S: Scalar>(kappa: &[S], n: usize) -> RacahParams1D<S> {
    let nn = S::from_usize(n);
    RacahParams1D::new(
        -nn.clone() - S::one(),
        nn + kappa[0].clone() + kappa[2].clone() + S::one(),
        kappa[2].clone(),
        kappa[1].clone(),
        n,
    )
}

/// One-variable Racah parameters `sigma_2 = (-n-1, n+k2+k3+1, k3, k1)`.
pub fn sigma2<S: Scalar>(kappa: &[S], n: usize) -> RacahParams1D<S> {
    let nn = S::from_usize(n);
    RacahParams1D::new(
        -nn.clone() - S::one(),
        nn + kappa[1].clone() + kappa[2].clone() + S::one(),
        kappa[2].clone(),
        kappa[0].clone(),
        n,
    )
}

/// `sign * sqrt(w(x) R_deg(x)^2 / r_deg)` for a one-variable Racah family.
pub fn weighted_racah_1d<S: Scalar>(sign: i8, deg: usize, x: usize, p: &RacahParams1D<S>) -> Result<QSqrt<S>> {
    let r = racah_1d(deg, x, p)?;
    let norm = racah_norm_1d(deg, p)?;
    if norm.is_zero() {
        return Err(Error::InvalidParameter("one-variable Racah norm vanishes".into()));
    }
    let sq = racah_weight_1d(x, p)? * r.clone() * r.clone() / norm;
    Ok(QSqrt::new(sign * sign_of(&r), sq))
}

/// Normalized `(12)` coefficient as an orthonormal Racah polynomial of degree
/// `j` in the variable `m`, parameters `sigma_1`.
pub fn cc_2d_tau12_hat_sigma1<S: Scalar>(j: usize, m: usize, kappa: &[S], n: usize) -> Result<QSqrt<S>> {
    let s = if (n + m + j).is_multiple_of(2) { 1 } else { -1 };
    weighted_racah_1d(s, j, m, &sigma1(kappa, n))
}

/// The same coefficient as a polynomial of degree `m` in `j`, parameters `sigma_2`.
pub fn cc_2d_tau12_hat_sigma2<S: Scalar>(j: usize, m: usize, kappa: &[S], n: usize) -> Result<QSqrt<S>> {
    let s = if (n + m + j).is_multiple_of(2) { 1 } else { -1 };
    weighted_racah_1d(s, m, j, &sigma2(kappa, n))
}

/// `p(1, x_2)` as a coefficient list in `x_2`.
fn restrict_to_edge<S: Scalar>(p: &SparsePoly<S>) -> Vec<S> {
    let deg = p.degree().unwrap_or(0);
    let mut out = vec![S::zero(); deg + 1];
    for (e, c) in p.terms() {
        out[e[1]] = out[e[1]].clone() + c.clone();
    }
    out
}

/// The edge restrictions `P^kappa_{n-m,m}(1, x_2) = C_m x_2^m` and the
/// single-sum expansion of `P^{(12)kappa}_{n-j,j}(1, x_2)`, coefficient by coefficient.
pub fn verify_edge_restrictions<S: Scalar>(kappa: &KappaParams<S>, n: usize) -> Result<Report> {
    let k = kappa.values();
    check3(k)?;
    let mut rep = Report::new(format!("edge restrictions n={n}"));
    let one = S::one();
    let (k2, k3) = (&k[1], &k[2]);
    let big = kappa.total() + S::from_usize(n + 2);
    for m in 0..=n {
        let p = restrict_to_edge(&jacobi_simplex_basis(&[n - m, m], kappa)?);
        let k23 = k2.clone() + k3.clone();
        let c = pochhammer(&(k23.clone() + S::from_usize(2 * m + 2)), n - m)
            * pochhammer(&(k23 + S::from_usize(m) + one.clone()), m)
            / (factorial::<S>(n - m) * factorial::<S>(m));
        for (i, v) in p.iter().enumerate() {
            let e = if i == m { c.clone() } else { S::zero() };
            rep.check(*v == e, || format!("P_({},{})(1,x2): coefficient of x2^{i} is {v}, expected {e}", n - m, m));
        }
    }
    let tau = Permutation::parse("(12)", 3)?;
    let tk = kappa.permuted(&tau);
    for j in 0..=n {
        let p = restrict_to_edge(&permute_vars(&jacobi_simplex_basis(&[n - j, j], &tk)?, &tau)?);
        let pre = neg_one_pow::<S>(n - j)
            * pochhammer(&(k2.clone() + one.clone()), n - j)
            * pochhammer(&(k3.clone() + one.clone()), j)
            / (factorial::<S>(n - j) * factorial::<S>(j));
        for m in 0..=n {
            let e = pre.clone()
                * pochhammer(&-S::from_usize(n), m)
                * pochhammer(&big, m)
                / (factorial::<S>(m) * pochhammer(&(k2.clone() + one.clone()), m))
                * racah_4f3(j, m, k, n)?;
            let v = p.get(m).cloned().unwrap_or_else(S::zero);
            rep.check(v == e, || format!("(12) edge j={j}: coefficient of x2^{m} is {v}, expected {e}"));
        }
    }
    Ok(rep)
}

/// `u(x) = w(x; -n-1, n+|k|-k1+1, k3, k1) (k1+1)_x / (k3+1)_x`, the weight
/// that makes the summation identity hold for all kappa.
pub fn sum_identity_weight<S: Scalar>(x: usize, kappa: &[S], n: usize) -> Result<S> {
    let one = S::one();
    let p = sum_identity_params(kappa, n);
    Ok(racah_weight_1d(x, &p)? * pochhammer(&(kappa[0].clone() + one.clone()), x)
        / pochhammer(&(kappa[2].clone() + one), x))
}

/// The word-for-word reading `w(x; alpha, beta, gamma, gamma) (delta+1)_x / (gamma+1)_x`.
/// It coincides with [`sum_identity_weight`] only when `k1 = k3`.
pub fn sum_identity_weight_literal<S: Scalar>(x: usize, kappa: &[S], n: usize) -> Result<S> {
    let one = S::one();
    let mut p = sum_identity_params(kappa, n);
    p.delta = p.gamma.clone();
    Ok(racah_weight_1d(x, &p)? * pochhammer(&(kappa[0].clone() + one.clone()), x)
        / pochhammer(&(kappa[2].clone() + one), x))
}

fn sum_identity_params<S: Scalar>(kappa: &[S], n: usize) -> RacahParams1D<S> {
    let nn = S::from_usize(n);
    RacahParams1D::new(
        -nn.clone() - S::one(),
        nn + sum(kappa) - kappa[0].clone() + S::one(),
        kappa[2].clone(),
        kappa[0].clone(),
        n,
    )
}

/// Left and right sides of the summation identity between three `4F3`
/// families, under the weight `u`.
pub fn sum_identity_sides<S: Scalar>(
    kappa: &[S],
    n: usize,
    k: usize,
    l: usize,
    u: impl Fn(usize) -> Result<S>,
) -> Result<(S, S)> {
    check3(kappa)?;
    let one = S::one();
    let (k1, k2, k3) = (&kappa[0], &kappa[1], &kappa[2]);
    let rot = [k3.clone(), k1.clone(), k2.clone()];
    let mut lhs = S::zero();
    for m in 0..=n {
        // 4F3(-m, m+k1+k3+1, -k, k+k1+k2+1; -n, k1+1, n+|k|+2)
        let f1 = racah_4f3(k, m, &[k2.clone(), k3.clone(), k1.clone()], n)?;
        let f2 = racah_4f3(l, m, &[k2.clone(), k1.clone(), k3.clone()], n)?;
        lhs = lhs + neg_one_pow::<S>(m) * u(m)? * f1 * f2;
    }
    let f3 = racah_4f3(l, k, &rot, n)?;
    let rhs = neg_one_pow::<S>(n + k + l)
        * pochhammer(&(k2.clone() + one.clone()), k)
        * pochhammer(&(k2.clone() + one.clone()), l)
        / pochhammer(&(k2.clone() + one.clone()), n)
        * pochhammer(&(k1.clone() + k3.clone() + S::from_i64(2)), n)
        / (pochhammer(&(k1.clone() + one.clone()), k) * pochhammer(&(k3.clone() + one), l))
        * f3;
    Ok((lhs, rhs))
}

/// The summation identity for all `0 <= k, l <= n`.
pub fn verify_sum_identity<S: Scalar>(kappa: &[S], n: usize) -> Result<Report> {
    let mut rep = Report::new(format!("summation identity n={n}"));
    for k in 0..=n {
        for l in 0..=n {
            let (a, b) = sum_identity_sides(kappa, n, k, l, |x| sum_identity_weight(x, kappa, n))?;
            rep.check(a == b, || format!("k={k} l={l}: {a} != {b}"));
        }
    }
    Ok(rep)
}
