//! Krawtchouk polynomials on `{x in N_0^d : |x| <= N}` and their limit
//! relation to the Hahn family.

use num_traits::pow;

use super::hahn::{hahn_multi, HahnContext};
use crate::closed_forms::closed_form_entry;
use crate::connection::gram_connection;
use crate::error::{Error, Result};
use crate::exact_arith::{absorbed_series, factorial, neg_one_pow, pochhammer, sign_of, HypSeries, QSqrt, Scalar};
use crate::multipoly::{head_sum, head_sum_s, tail_sum, MultiIndex};
use crate::report::Report;
use crate::simplex_jacobi::{enumerate_basis, KappaParams, Permutation};

/// Probabilities `rho` with `0 < rho_i < 1`, `|rho| < 1`, and the level `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrawContext<S> {
    pub rho: Vec<S>,
    pub n_total: usize,
}

impl<S: Scalar> KrawContext<S> {
    pub fn new(rho: Vec<S>, n_total: usize) -> Result<Self> {
        if rho.is_empty() {
            return Err(Error::InvalidParameter("rho must have at least one entry".into()));
        }
        let ok = rho.iter().all(|r| r.is_positive() && *r < S::one()) && head_sum_s(&rho, rho.len()) < S::one();
        if !ok {
            return Err(Error::InvalidParameter("need 0 < rho_i < 1 and |rho| < 1".into()));
        }
        Ok(Self { rho, n_total })
    }

    pub fn d(&self) -> usize {
        self.rho.len()
    }

    /// `1 - |rho|`.
    pub fn rest(&self) -> S {
        S::one() - head_sum_s(&self.rho, self.d())
    }
}

/// `K_n(x; p, N) = 2F1(-n, -x; -N; 1/p)`.
pub fn krawtchouk_1d<S: Scalar>(n: usize, x: usize, p: &S, big_n: usize) -> Result<S> {
    HypSeries::new(
        vec![-S::from_usize(n), -S::from_usize(x)],
        vec![-S::from_usize(big_n)],
        S::one() / p.clone(),
    )
    .eval()
}

/// All `x in N_0^d` with `|x| <= N`.
pub fn kraw_points(d: usize, big_n: usize) -> Vec<MultiIndex> {
    super::hahn::hahn_lattice(d + 1, big_n)
        .into_iter()
        .map(|mut v| {
            v.pop();
            v
        })
        .collect()
}

/// `N! prod rho_i^{x_i} / x_i! (1-|rho|)^{N-|x|} / (N-|x|)!`.
pub fn kraw_weight<S: Scalar>(x: &[usize], ctx: &KrawContext<S>) -> S {
    let s: usize = x.iter().sum();
    let big = ctx.n_total;
    let mut r = factorial::<S>(big) * pow(ctx.rest(), big - s) / factorial::<S>(big - s);
    for (xi, p) in x.iter().zip(&ctx.rho) {
        r = r * pow(p.clone(), *xi) / factorial::<S>(*xi);
    }
    r
}

/// Product formula for `K_nu(x; rho, N)`, each `2F1` factor absorbed.
pub fn krawtchouk_multi<S: Scalar>(nu: &[usize], x: &[usize], ctx: &KrawContext<S>) -> Result<S> {
    let d = ctx.d();
    if nu.len() != d || x.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: nu.len().max(x.len()) });
    }
    let n: usize = nu.iter().sum();
    let big = ctx.n_total;
    if n > big || x.iter().sum::<usize>() > big {
        return Err(Error::InvalidParameter(format!("|nu| and |x| must not exceed N = {big}")));
    }
    let mut r = S::one() / pochhammer(&-S::from_usize(big), n);
    for j in 0..d {
        let np = S::from_usize(head_sum(x, j) + tail_sum(nu, j + 2)) - S::from_usize(big);
        let z = (S::one() - head_sum_s(&ctx.rho, j)) / ctx.rho[j].clone();
        r = r * absorbed_series(nu[j], &[-S::from_usize(x[j])], &[], &[np], &z)?;
        if r.is_zero() {
            break;
        }
    }
    Ok(r)
}

/// `C_nu = (-1)^n / (-N)_n prod nu_j! (1-|rho_j|)^{nu_j + nu_{j+1}} / rho_j^{nu_j}`.
pub fn krawtchouk_norm_c<S: Scalar>(nu: &[usize], ctx: &KrawContext<S>) -> S {
    let d = ctx.d();
    let n: usize = nu.iter().sum();
    let mut r = neg_one_pow::<S>(n) / pochhammer(&-S::from_usize(ctx.n_total), n);
    for j in 0..d {
        let next = if j + 1 < d { nu[j + 1] } else { 0 };
        r = r * factorial::<S>(nu[j]) * pow(S::one() - head_sum_s(&ctx.rho, j + 1), nu[j] + next)
            / pow(ctx.rho[j].clone(), nu[j]);
    }
    r
}

/// Pairwise orthogonality with norms `C_nu` for all `|nu| <= N`.
pub fn verify_kraw_orthogonality<S: Scalar>(ctx: &KrawContext<S>) -> Result<Report> {
    let d = ctx.d();
    let big = ctx.n_total;
    let mut rep = Report::new(format!("Krawtchouk orthogonality d={d} N={big}"));
    let pts = kraw_points(d, big);
    let idx: Vec<MultiIndex> = (0..=big).flat_map(|n| enumerate_basis(n, d)).collect();
    let w: Vec<S> = pts.iter().map(|x| kraw_weight(x, ctx)).collect();
    let table: Vec<Vec<S>> =
        idx.iter().map(|nu| pts.iter().map(|x| krawtchouk_multi(nu, x, ctx)).collect()).collect::<Result<_>>()?;
    for (a, nu) in idx.iter().enumerate() {
        for (b, mu) in idx.iter().enumerate().skip(a) {
            let s = (0..pts.len()).fold(S::zero(), |acc, i| acc + table[a][i].clone() * table[b][i].clone() * w[i].clone());
            let e = if a == b { krawtchouk_norm_c(nu, ctx) } else { S::zero() };
            rep.check(s == e, || format!("<K_{nu:?}, K_{mu:?}> = {s}, expected {e}"));
        }
    }
    Ok(rep)
}

/// `x~_j = nu_{d+1-j}`, `nu~_j = x_{d+1-j}`,
/// `rho~_j = rho_{d+1-j} (1-|rho|) / ((1-|rho_{d+1-j}|)(1-|rho_{d-j}|))`.
pub fn kraw_dual_map<S: Scalar>(x: &[usize], nu: &[usize], rho: &[S]) -> (MultiIndex, MultiIndex, Vec<S>) {
    let d = rho.len();
    let one = S::one();
    let rest = one.clone() - head_sum_s(rho, d);
    let xt = (0..d).map(|j| nu[d - 1 - j]).collect();
    let nt = (0..d).map(|j| x[d - 1 - j]).collect();
    let rt = (0..d)
        .map(|j| {
            rho[d - 1 - j].clone() * rest.clone()
                / ((one.clone() - head_sum_s(rho, d - j)) * (one.clone() - head_sum_s(rho, d - j - 1)))
        })
        .collect();
    (xt, nt, rt)
}

/// Involution, `|rho~| = |rho|`, the duality relation and
/// `C_nu K_{rho~,N}(x~) = (1-|rho|)^N` over the whole grid.
pub fn verify_kraw_duality<S: Scalar>(ctx: &KrawContext<S>) -> Result<Report> {
    let d = ctx.d();
    let big = ctx.n_total;
    let mut rep = Report::new(format!("Krawtchouk duality d={d} N={big}"));
    let (_, _, rt) = kraw_dual_map(&vec![0; d], &vec![0; d], &ctx.rho);
    let total = head_sum_s(&ctx.rho, d);
    let total_t = head_sum_s(&rt, d);
    rep.check(total == total_t, || format!("|rho~| = {total_t} != |rho| = {total}"));
    let dctx = KrawContext::new(rt.clone(), big)?;
    let target = pow(ctx.rest(), big);
    for n in 0..=big {
        for nu in enumerate_basis(n, d) {
            for x in kraw_points(d, big) {
                let (xt, nt, r2) = kraw_dual_map(&x, &nu, &ctx.rho);
                let back = kraw_dual_map(&xt, &nt, &r2);
                rep.check(back == (x.clone(), nu.clone(), ctx.rho.clone()), || format!("not an involution at {x:?},{nu:?}"));
                let a = krawtchouk_multi(&nu, &x, ctx)?;
                let b = krawtchouk_multi(&nt, &xt, &dctx)?;
                rep.check(a == b, || format!("K_{nu:?}({x:?}) = {a} != {b}"));
                let c = krawtchouk_norm_c(&nu, ctx) * kraw_weight(&xt, &dctx);
                rep.check(c == target, || format!("C_nu K(x~) = {c} != {target}"));
            }
        }
    }
    Ok(rep)
}

/// First `d` entries of `tau (rho, 1-|rho|)`.
pub fn tau_rho<S: Scalar>(tau: &Permutation, rho: &[S]) -> Vec<S> {
    let mut full = rho.to_vec();
    full.push(S::one() - head_sum_s(rho, rho.len()));
    let mut v = tau.act(&full);
    v.pop();
    v
}

/// Raw and normalized `k^tau_{nu,mu}` from discrete inner products at level `N`.
pub fn kraw_connection_gram<S: Scalar>(
    tau: &Permutation,
    ctx: &KrawContext<S>,
    n: usize,
) -> Result<(Vec<Vec<S>>, Vec<Vec<QSqrt<S>>>)> {
    let d = ctx.d();
    let big = ctx.n_total;
    let tctx = KrawContext::new(tau_rho(tau, &ctx.rho), big)?;
    let order = enumerate_basis(n, d);
    let pts = kraw_points(d, big);
    let w: Vec<S> = pts.iter().map(|x| kraw_weight(x, ctx)).collect();
    let tx = |x: &[usize]| {
        let mut full = x.to_vec();
        full.push(big - x.iter().sum::<usize>());
        let mut v = tau.act(&full);
        v.pop();
        v
    };
    let left: Vec<Vec<S>> =
        order.iter().map(|nu| pts.iter().map(|x| krawtchouk_multi(nu, &tx(x), &tctx)).collect()).collect::<Result<_>>()?;
    let right: Vec<Vec<S>> =
        order.iter().map(|mu| pts.iter().map(|x| krawtchouk_multi(mu, x, ctx)).collect()).collect::<Result<_>>()?;
    let mut raw = Vec::new();
    let mut hat = Vec::new();
    for (a, nu) in order.iter().enumerate() {
        let mut rr = Vec::new();
        let mut hh = Vec::new();
        for (b, mu) in order.iter().enumerate() {
            let cm = krawtchouk_norm_c(mu, ctx);
            let s = (0..pts.len()).fold(S::zero(), |acc, i| acc + left[a][i].clone() * right[b][i].clone() * w[i].clone());
            let k = s / cm.clone();
            hh.push(QSqrt::new(sign_of(&k), k.clone() * k.clone() * cm / krawtchouk_norm_c(nu, &tctx)));
            rr.push(k);
        }
        raw.push(rr);
        hat.push(hh);
    }
    Ok((raw, hat))
}

/// `rho^_j = rho_1 rho_{j+1} / ((1-rho_1)(1+rho_1-|rho_{j+1}|)(1+rho_1-|rho_j|))`, `j < d`.
pub fn hat_rho<S: Scalar>(rho: &[S]) -> Vec<S> {
    let one = S::one();
    let r1 = rho[0].clone();
    (1..rho.len())
        .map(|j| {
            r1.clone() * rho[j].clone()
                / ((one.clone() - r1.clone())
                    * (one.clone() + r1.clone() - head_sum_s(rho, j + 1))
                    * (one.clone() + r1.clone() - head_sum_s(rho, j)))
        })
        .collect()
}

/// `rho~_j = rho_1 rho_{d+1-j} (1-|rho|) / ((1-|rho_{d-j}|)(1-|rho_{d+1-j}|)(1+rho_1-|rho|))`, `j < d`.
pub fn tilde_rho_cyclic<S: Scalar>(rho: &[S]) -> Vec<S> {
    let d = rho.len();
    let one = S::one();
    let r1 = rho[0].clone();
    let tot = head_sum_s(rho, d);
    (1..d)
        .map(|j| {
            r1.clone() * rho[d - j].clone() * (one.clone() - tot.clone())
                / ((one.clone() - head_sum_s(rho, d - j))
                    * (one.clone() - head_sum_s(rho, d + 1 - j))
                    * (one.clone() + r1.clone() - tot.clone()))
        })
        .collect()
}

/// Which reduced Krawtchouk family represents the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrawCyclicForm {
    /// Degree `(mu_2, ..., mu_d)` at `(nu_1, ..., nu_{d-1})`, parameters `rho^`.
    Hat,
    /// Degree `(nu_{d-1}, ..., nu_1)` at `(mu_d, ..., mu_2)`, parameters `rho~`.
    Tilde,
}

/// Normalized `k^{(1 2 ... d)}_{nu,mu}(rho)` with sign `(-1)^{n + nu_d} sign(K)`.
pub fn kraw_cc_cyclic<S: Scalar>(form: KrawCyclicForm, nu: &[usize], mu: &[usize], rho: &[S]) -> Result<QSqrt<S>> {
    let d = rho.len();
    if d < 2 || nu.len() != d || mu.len() != d {
        return Err(Error::DimensionMismatch { expected: d.max(2), got: nu.len() });
    }
    let n: usize = nu.iter().sum();
    let (deg, x, r): (Vec<usize>, Vec<usize>, Vec<S>) = match form {
        KrawCyclicForm::Hat => (mu[1..].to_vec(), nu[..d - 1].to_vec(), hat_rho(rho)),
        KrawCyclicForm::Tilde => (nu[..d - 1].iter().rev().cloned().collect(), mu[1..].iter().rev().cloned().collect(), tilde_rho_cyclic(rho)),
    };
    let ctx = KrawContext::new(r, n)?;
    let v = krawtchouk_multi(&deg, &x, &ctx)?;
    let sq = kraw_weight(&x, &ctx) * v.clone() * v.clone() / krawtchouk_norm_c(&deg, &ctx);
    let flip = (n + nu[d - 1]) % 2 == 1;
    Ok(QSqrt::new(sign_of(&v), sq).with_sign_flip(flip))
}

/// `1 - |rho^| = (1-|rho|) / ((1-rho_1)(1+rho_1-|rho|))`.
pub fn hat_rho_total_identity<S: Scalar>(rho: &[S]) -> bool {
    let one = S::one();
    let d = rho.len();
    let lhs = one.clone() - head_sum_s(&hat_rho(rho), d - 1);
    let tot = head_sum_s(rho, d);
    lhs == (one.clone() - tot.clone()) / ((one.clone() - rho[0].clone()) * (one + rho[0].clone() - tot))
}

/// Ratio test for a deviation that should decay like `1/t`: nonincreasing on
/// the grid, and the last two values differ by a factor in `[5, 20]` (or both vanish).
fn decay_check(rep: &mut Report, label: &str, ts: &[f64], deltas: &[f64]) {
    for w in deltas.windows(2) {
        rep.check(w[1] <= w[0], || format!("{label}: deviation grows {} -> {}", w[0], w[1]));
    }
    if let [.., a, b] = deltas {
        if *a == 0.0 && *b == 0.0 {
            rep.check(true, String::new);
        } else {
            let r = a / b;
            rep.check((5.0..=20.0).contains(&r), || {
                format!("{label}: ratio {r} between t={} and t={} is outside [5, 20]", ts[ts.len() - 2], ts[ts.len() - 1])
            });
        }
    }
}

fn scaled_kappa<S: Scalar>(t: &S, rho: &[S]) -> Result<KappaParams<S>> {
    let mut k: Vec<S> = rho.iter().map(|r| t.clone() * r.clone()).collect();
    k.push(t.clone() * (S::one() - head_sum_s(rho, rho.len())));
    KappaParams::new(k)
}

/// `H_nu(x; t(rho, 1-|rho|), N) -> (-1)^{|nu|} prod rho_j^{nu_j} / (1-|rho_j|)^{nu_j} K_nu(x; rho, N)`.
pub fn hahn_to_kraw_limit_check<S: Scalar>(
    nu: &[usize],
    x: &[usize],
    rho: &[S],
    big_n: usize,
    ts: &[S],
) -> Result<Report> {
    let mut rep = Report::new(format!("Hahn to Krawtchouk limit nu={nu:?} x={x:?}"));
    let kctx = KrawContext::new(rho.to_vec(), big_n)?;
    let mut scale = neg_one_pow::<S>(nu.iter().sum());
    for (j, &v) in nu.iter().enumerate() {
        scale = scale * pow(rho[j].clone() / (S::one() - head_sum_s(rho, j + 1)), v);
    }
    let target = scale * krawtchouk_multi(nu, x, &kctx)?;
    let mut deltas = Vec::new();
    for t in ts {
        let hctx = HahnContext::new(scaled_kappa(t, rho)?, big_n)?;
        let h = hahn_multi(nu, x, &hctx)?;
        deltas.push((h - target.clone()).abs().to_f64());
    }
    let tf: Vec<f64> = ts.iter().map(|t| t.to_f64()).collect();
    decay_check(&mut rep, "H -> K", &tf, &deltas);
    Ok(rep)
}

/// Squared normalized Hahn coefficients at `kappa = t(rho, 1-|rho|)` approach
/// the squared normalized Krawtchouk coefficients.
pub fn connection_limit_check<S: Scalar>(
    tau: &Permutation,
    nu: &[usize],
    mu: &[usize],
    rho: &[S],
    ts: &[S],
) -> Result<Report> {
    let d = rho.len();
    let n: usize = nu.iter().sum();
    let mut rep = Report::new(format!("connection limit tau={tau} {nu:?},{mu:?}"));
    let kctx = KrawContext::new(rho.to_vec(), n.max(1))?;
    let (_, kh) = kraw_connection_gram(tau, &kctx, n)?;
    let order = enumerate_basis(n, d);
    let (a, b) = match (order.iter().position(|v| v == nu), order.iter().position(|v| v == mu)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidParameter("indices outside the basis".into())),
    };
    let target = kh[a][b].square();
    let mut deltas = Vec::new();
    for t in ts {
        let kappa = scaled_kappa(t, rho)?;
        let hat = match closed_form_entry(tau, nu, mu, kappa.values())? {
            Some(r) => r.normalized_value(tau, nu, mu, kappa.values())?,
            None => gram_connection(tau, &kappa, n)?.normalize().normalized_entries()[a][b].clone(),
        };
        deltas.push((hat.square() - target.clone()).abs().to_f64());
    }
    let tf: Vec<f64> = ts.iter().map(|t| t.to_f64()).collect();
    decay_check(&mut rep, "h^2 -> k^2", &tf, &deltas);
    Ok(rep)
}
