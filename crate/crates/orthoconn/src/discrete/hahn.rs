//! Hahn polynomials on `{alpha in N_0^{d+1} : |alpha| = N}`.

use std::collections::BTreeMap;

use crate::closed_forms::closed_form_entry;
use crate::connection::gram_connection;
use crate::error::{Error, Result};
use crate::exact_arith::{absorbed_series, factorial, neg_one_pow, pochhammer, HypSeries, Scalar};
use crate::multipoly::{head_sum, tail_sum, MultiIndex, SparsePoly};
use crate::report::Report;
use crate::simplex_jacobi::{a_coeffs, enumerate_basis, jacobi_simplex_basis, norm_a, KappaParams, Permutation};

/// Parameters `kappa` (with `d + 1` entries) and the lattice level `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct HahnContext<S> {
    pub kappa: KappaParams<S>,
    pub n_total: usize,
}

impl<S: Scalar> HahnContext<S> {
    pub fn new(kappa: KappaParams<S>, n_total: usize) -> Result<Self> {
        if n_total == 0 {
            return Err(Error::InvalidParameter("N must be positive".into()));
        }
        Ok(Self { kappa, n_total })
    }

    pub fn d(&self) -> usize {
        self.kappa.d()
    }

    /// `N! / (|kappa| + d + 1)_N`, the normalizing factor of the inner product.
    pub fn scale(&self) -> S {
        factorial::<S>(self.n_total) / pochhammer(&(self.kappa.total() + S::from_usize(self.d() + 1)), self.n_total)
    }
}

/// All `alpha in N_0^m` with `|alpha| = n`, in lexicographic order.
pub fn hahn_lattice(m: usize, n: usize) -> Vec<MultiIndex> {
    fn rec(left: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(left - v, i + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(n, 0, &mut vec![0; m], &mut out);
    }
    out
}

/// `Q_n(x; a, b, N) = 3F2(-n, n+a+b+1, -x; a+1, -N; 1)`.
pub fn hahn_1d<S: Scalar>(n: usize, x: usize, a: &S, b: &S, big_n: usize) -> Result<S> {
    HypSeries::unit(
        vec![-S::from_usize(n), S::from_usize(n + 1) + a.clone() + b.clone(), -S::from_usize(x)],
        vec![a.clone() + S::one(), -S::from_usize(big_n)],
    )
    .eval()
}

/// `H_{kappa,N}(alpha) = prod (kappa_i + 1)_{alpha_i} / alpha_i!`.
pub fn hahn_weight<S: Scalar>(alpha: &[usize], kappa: &KappaParams<S>) -> S {
    alpha
        .iter()
        .zip(kappa.values())
        .fold(S::one(), |acc, (&a, k)| acc * pochhammer(&(k.clone() + S::one()), a) / factorial::<S>(a))
}

/// Discrete inner product over the full lattice.
pub fn hahn_inner<S: Scalar>(
    ctx: &HahnContext<S>,
    mut f: impl FnMut(&[usize]) -> Result<S>,
    mut g: impl FnMut(&[usize]) -> Result<S>,
) -> Result<S> {
    let mut acc = S::zero();
    for al in hahn_lattice(ctx.d() + 1, ctx.n_total) {
        let w = hahn_weight(&al, &ctx.kappa);
        acc = acc + f(&al)? * g(&al)? * w;
    }
    Ok(acc * ctx.scale())
}

fn lattice_point<S>(x: &[usize], ctx: &HahnContext<S>) -> Result<Vec<usize>>
where
    S: Scalar,
{
    let d = ctx.d();
    let s: usize = x.iter().sum();
    match x.len() {
        l if l == d + 1 && s == ctx.n_total => Ok(x.to_vec()),
        l if l == d && s <= ctx.n_total => {
            let mut v = x.to_vec();
            v.push(ctx.n_total - s);
            Ok(v)
        }
        l => Err(Error::DimensionMismatch { expected: d + 1, got: l }),
    }
}

/// Product formula for `H_nu(x; kappa, N)`; `x` is a lattice point or its
/// first `d` coordinates.
///
/// Each factor `(-N')_{nu_j} Q_{nu_j}(x_j; kappa_j, a_j, N')` is summed in
/// absorbed form, so lattice points where `N'` is small stay finite.
pub fn hahn_multi<S: Scalar>(nu: &[usize], x: &[usize], ctx: &HahnContext<S>) -> Result<S> {
    let d = ctx.d();
    if nu.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: nu.len() });
    }
    let x = lattice_point(x, ctx)?;
    let n: usize = nu.iter().sum();
    let big = ctx.n_total;
    if n > big {
        return Err(Error::InvalidParameter(format!("|nu| = {n} exceeds N = {big}")));
    }
    let a = a_coeffs(nu, &ctx.kappa);
    let one = S::one();
    let mut r = neg_one_pow::<S>(n) / pochhammer(&-S::from_usize(big), n);
    for j in 0..d {
        let used = head_sum(&x, j) + tail_sum(nu, j + 2);
        let kj = ctx.kappa.k(j + 1).clone();
        r = r * pochhammer(&(kj.clone() + one.clone()), nu[j]) / pochhammer(&(a[j].clone() + one.clone()), nu[j]);
        let np = S::from_usize(used) - S::from_usize(big);
        r = r * absorbed_series(
            nu[j],
            &[S::from_usize(nu[j]) + kj.clone() + a[j].clone() + one.clone(), -S::from_usize(x[j])],
            &[kj + one.clone()],
            &[np],
            &one,
        )?;
        if r.is_zero() {
            break;
        }
    }
    Ok(r)
}

/// `p_nu^kappa = prod (a_j + 1)_{nu_j} / nu_j!`.
pub fn p_nu<S: Scalar>(nu: &[usize], kappa: &KappaParams<S>) -> S {
    a_coeffs(nu, kappa)
        .iter()
        .zip(nu)
        .fold(S::one(), |acc, (a, &v)| acc * pochhammer(&(a.clone() + S::one()), v) / factorial::<S>(v))
}

/// Reads `H_nu` off the homogenized simplex polynomial
/// `|y|^N P_nu(y' / |y|) / p_nu = sum N!/alpha! H_nu(alpha) y^alpha`.
pub fn hahn_from_generating<S: Scalar>(nu: &[usize], ctx: &HahnContext<S>) -> Result<BTreeMap<MultiIndex, S>> {
    let d = ctx.d();
    let big = ctx.n_total;
    let p = jacobi_simplex_basis(nu, &ctx.kappa)?;
    let m = d + 1;
    let ysum = (0..m).fold(SparsePoly::zero(m), |acc, i| &acc + &SparsePoly::var(m, i));
    let mut powers = vec![SparsePoly::one(m)];
    for _ in 0..big {
        let next = &powers[powers.len() - 1] * &ysum;
        powers.push(next);
    }
    let mut hom = SparsePoly::zero(m);
    for (e, c) in p.terms() {
        let deg: usize = e.iter().sum();
        let mut ext = e.clone();
        ext.push(0);
        hom = &hom + &(&SparsePoly::monomial(m, ext, c.clone()) * &powers[big - deg]);
    }
    let pn = p_nu(nu, &ctx.kappa);
    let nf = factorial::<S>(big);
    Ok(hahn_lattice(m, big)
        .into_iter()
        .map(|al| {
            let af = al.iter().fold(S::one(), |acc, &a| acc * factorial::<S>(a));
            let v = hom.coeff(&al) * af / (nf.clone() * pn.clone());
            (al, v)
        })
        .collect())
}

/// Closed-form squared norm `B_nu(kappa, N)`.
pub fn hahn_norm_b<S: Scalar>(nu: &[usize], ctx: &HahnContext<S>) -> S {
    let d = ctx.d();
    let n: usize = nu.iter().sum();
    let lam = ctx.kappa.total() + S::from_usize(d + 1);
    let big = ctx.n_total;
    let a = a_coeffs(nu, &ctx.kappa);
    let one = S::one();
    let mut r = neg_one_pow::<S>(n) * pochhammer(&lam, big + n)
        / (pochhammer(&-S::from_usize(big), n) * pochhammer(&lam, big) * pochhammer(&lam, 2 * n));
    for j in 0..d {
        let kj = ctx.kappa.k(j + 1).clone();
        let ka = kj.clone() + a[j].clone() + one.clone();
        r = r * pochhammer(&ka, 2 * nu[j]) * pochhammer(&(kj + one.clone()), nu[j]) * factorial::<S>(nu[j])
            / (pochhammer(&ka, nu[j]) * pochhammer(&(a[j].clone() + one.clone()), nu[j]));
    }
    r
}

/// `B_nu` through the simplex norm: `(-1)^n (lam)_{N+n} / ((-N)_n (lam)_N) A_nu / p_nu^2`.
pub fn hahn_norm_from_a<S: Scalar>(nu: &[usize], ctx: &HahnContext<S>) -> S {
    let n: usize = nu.iter().sum();
    let lam = ctx.kappa.total() + S::from_usize(ctx.d() + 1);
    let big = ctx.n_total;
    let p = p_nu(nu, &ctx.kappa);
    neg_one_pow::<S>(n) * pochhammer(&lam, big + n) / (pochhammer(&-S::from_usize(big), n) * pochhammer(&lam, big))
        * norm_a(nu, &ctx.kappa)
        / (p.clone() * p)
}

/// `B_nu` by formula, by lattice sum, and through `A_nu`.
pub fn verify_b_a<S: Scalar>(nu: &[usize], ctx: &HahnContext<S>) -> Result<Report> {
    let mut rep = Report::new(format!("Hahn norm nu={nu:?} N={}", ctx.n_total));
    let b = hahn_norm_b(nu, ctx);
    let direct = hahn_inner(ctx, |a| hahn_multi(nu, a, ctx), |a| hahn_multi(nu, a, ctx))?;
    rep.check(b == direct, || format!("formula {b} != lattice sum {direct}"));
    let via_a = hahn_norm_from_a(nu, ctx);
    rep.check(b == via_a, || format!("formula {b} != A-relation {via_a}"));
    Ok(rep)
}

/// Pairwise orthogonality and norms for every `|nu| <= n_max`.
pub fn verify_hahn_orthogonality<S: Scalar>(ctx: &HahnContext<S>, n_max: usize) -> Result<Report> {
    let d = ctx.d();
    let mut rep = Report::new(format!("Hahn orthogonality d={d} N={}", ctx.n_total));
    let idx: Vec<MultiIndex> = (0..=n_max.min(ctx.n_total)).flat_map(|n| enumerate_basis(n, d)).collect();
    let lattice = hahn_lattice(d + 1, ctx.n_total);
    let table: Vec<Vec<S>> =
        idx.iter().map(|nu| lattice.iter().map(|al| hahn_multi(nu, al, ctx)).collect()).collect::<Result<_>>()?;
    let weights: Vec<S> = lattice.iter().map(|al| hahn_weight(al, &ctx.kappa)).collect();
    let scale = ctx.scale();
    for (a, nu) in idx.iter().enumerate() {
        for (b, mu) in idx.iter().enumerate().skip(a) {
            let s = (0..lattice.len())
                .fold(S::zero(), |acc, i| acc + table[a][i].clone() * table[b][i].clone() * weights[i].clone())
                * scale.clone();
            let e = if a == b { hahn_norm_b(nu, ctx) } else { S::zero() };
            rep.check(s == e, || format!("<H_{nu:?}, H_{mu:?}> = {s}, expected {e}"));
        }
    }
    Ok(rep)
}

/// Product formula against generating-function extraction on the full lattice.
pub fn verify_hahn_generating<S: Scalar>(ctx: &HahnContext<S>, n_max: usize) -> Result<Report> {
    let d = ctx.d();
    let mut rep = Report::new(format!("Hahn generating function d={d} N={}", ctx.n_total));
    for n in 0..=n_max.min(ctx.n_total) {
        for nu in enumerate_basis(n, d) {
            for (al, v) in hahn_from_generating(&nu, ctx)? {
                let w = hahn_multi(&nu, &al, ctx)?;
                rep.check(v == w, || format!("nu={nu:?} alpha={al:?}: generating {v}, product {w}"));
            }
        }
    }
    Ok(rep)
}

/// `h^tau_{nu,mu}(kappa) = p_mu^kappa / p_nu^{tau kappa} c^tau_{nu,mu}(kappa)`.
pub fn hahn_connection<S: Scalar>(tau: &Permutation, nu: &[usize], mu: &[usize], kappa: &KappaParams<S>) -> Result<S> {
    let k = kappa.values();
    let c = match closed_form_entry(tau, nu, mu, k)? {
        Some(r) => r.raw_value(tau, nu, mu, k)?,
        None => {
            let n: usize = nu.iter().sum();
            let g = gram_connection(tau, kappa, n)?;
            g.entry(nu, mu).cloned().ok_or(Error::InvalidParameter("index outside the basis".into()))?
        }
    };
    Ok(p_nu(mu, kappa) / p_nu(nu, &kappa.permuted(tau)) * c)
}

/// Connection matrix by discrete inner products:
/// `h_{nu,mu} = <H_nu(tau .; tau kappa, N), H_mu(.; kappa, N)> / B_mu`.
pub fn hahn_connection_gram<S: Scalar>(tau: &Permutation, ctx: &HahnContext<S>, n: usize) -> Result<Vec<Vec<S>>> {
    let d = ctx.d();
    let tctx = HahnContext { kappa: ctx.kappa.permuted(tau), n_total: ctx.n_total };
    let order = enumerate_basis(n, d);
    let lattice = hahn_lattice(d + 1, ctx.n_total);
    let weights: Vec<S> = lattice.iter().map(|al| hahn_weight(al, &ctx.kappa)).collect();
    let left: Vec<Vec<S>> = order
        .iter()
        .map(|nu| lattice.iter().map(|al| hahn_multi(nu, &tau.act(al), &tctx)).collect())
        .collect::<Result<_>>()?;
    let right: Vec<Vec<S>> =
        order.iter().map(|mu| lattice.iter().map(|al| hahn_multi(mu, al, ctx)).collect()).collect::<Result<_>>()?;
    let scale = ctx.scale();
    order
        .iter()
        .enumerate()
        .map(|(a, _)| {
            order
                .iter()
                .enumerate()
                .map(|(b, mu)| {
                    let s = (0..lattice.len()).fold(S::zero(), |acc, i| {
                        acc + left[a][i].clone() * right[b][i].clone() * weights[i].clone()
                    });
                    Ok(s * scale.clone() / hahn_norm_b(mu, ctx))
                })
                .collect()
        })
        .collect()
}

/// Discrete Gram coefficients at every level in `levels` against the bridge
/// to the simplex coefficients, which shows independence of `N`.
pub fn verify_hahn_connection<S: Scalar>(
    tau: &Permutation,
    kappa: &KappaParams<S>,
    n: usize,
    levels: &[usize],
) -> Result<Report> {
    let d = kappa.d();
    let mut rep = Report::new(format!("Hahn connection tau={tau} n={n}"));
    let order = enumerate_basis(n, d);
    let bridge: Vec<Vec<S>> = order
        .iter()
        .map(|nu| order.iter().map(|mu| hahn_connection(tau, nu, mu, kappa)).collect())
        .collect::<Result<_>>()?;
    for &big in levels {
        let ctx = HahnContext::new(kappa.clone(), big)?;
        let g = hahn_connection_gram(tau, &ctx, n)?;
        for (a, nu) in order.iter().enumerate() {
            for (b, mu) in order.iter().enumerate() {
                rep.check(g[a][b] == bridge[a][b], || {
                    format!("N={big} {nu:?},{mu:?}: gram {} != bridge {}", g[a][b], bridge[a][b])
                });
            }
        }
    }
    Ok(rep)
}
