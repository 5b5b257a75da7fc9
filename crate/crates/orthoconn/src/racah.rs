//! Racah polynomials of one and several variables, their weights and norms,
//! the duality and conjugation maps, and the second family.

use crate::error::{Error, Result};
use crate::exact_arith::{absorbed_series, factorial, pochhammer, sign_of, HypSeries, QSqrt, Scalar};
use crate::multipoly::{head_sum, tail_sum, MultiIndex};
use crate::report::Report;
use crate::simplex_jacobi::enumerate_upto;

/// Parameters of the one-variable Racah polynomial on `{0, ..., N}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RacahParams1D<S> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
    pub delta: S,
    pub n_max: usize,
}

impl<S: Scalar> RacahParams1D<S> {
    pub fn new(alpha: S, beta: S, gamma: S, delta: S, n_max: usize) -> Self {
        Self { alpha, beta, gamma, delta, n_max }
    }

    /// True when one of `alpha+1`, `beta+delta+1`, `gamma+1` equals `-N`.
    pub fn is_truncated(&self) -> bool {
        let target = -S::from_usize(self.n_max);
        let one = S::one();
        [
            self.alpha.clone() + one.clone(),
            self.beta.clone() + self.delta.clone() + one.clone(),
            self.gamma.clone() + one,
        ].contains(&target)
    }
}

/// `R_n(lambda(x)) = 4F3(-n, n+a+b+1, -x, x+g+d+1; a+1, b+d+1, g+1; 1)`.
pub fn racah_1d<S: Scalar>(n: usize, x: usize, p: &RacahParams1D<S>) -> Result<S> {
    let one = S::one();
    let nn = S::from_usize(n);
    let xx = S::from_usize(x);
    HypSeries::unit(
        vec![
            -nn.clone(),
            nn + p.alpha.clone() + p.beta.clone() + one.clone(),
            -xx.clone(),
            xx + p.gamma.clone() + p.delta.clone() + one.clone(),
        ],
        vec![
            p.alpha.clone() + one.clone(),
            p.beta.clone() + p.delta.clone() + one.clone(),
            p.gamma.clone() + one,
        ],
    )
    .eval()
}

fn ratio<S: Scalar>(num: S, den: S, what: &str) -> Result<S> {
    if den.is_zero() {
        return Err(Error::InvalidParameter(format!("{what}: vanishing denominator")));
    }
    Ok(num / den)
}

/// The one-variable Racah weight `w(x; alpha, beta, gamma, delta)`.
pub fn racah_weight_1d<S: Scalar>(x: usize, p: &RacahParams1D<S>) -> Result<S> {
    let one = S::one();
    let two = S::from_i64(2);
    let (a, b, g, dl) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
    let gd1 = g.clone() + dl.clone() + one.clone();
    let num = pochhammer(&gd1, x)
        * pochhammer(&((gd1.clone() + two.clone()) / two.clone()), x)
        * pochhammer(&(a.clone() + one.clone()), x)
        * pochhammer(&(b.clone() + dl.clone() + one.clone()), x)
        * pochhammer(&(g.clone() + one.clone()), x);
    let den = factorial::<S>(x)
        * pochhammer(&(gd1.clone() / two), x)
        * pochhammer(&(gd1 - a.clone()), x)
        * pochhammer(&(g.clone() - b.clone() + one.clone()), x)
        * pochhammer(&(dl.clone() + one), x);
    ratio(num, den, "one-variable Racah weight")
}

/// `r_n = sum_x w(x) R_n(x)^2`, by direct summation over `{0, ..., N}`.
pub fn racah_norm_1d<S: Scalar>(n: usize, p: &RacahParams1D<S>) -> Result<S> {
    let mut s = S::zero();
    for x in 0..=p.n_max {
        let r = racah_1d(n, x, p)?;
        s = s + racah_weight_1d(x, p)? * r.clone() * r;
    }
    Ok(s)
}

/// `sign(R) sqrt(w R^2 / r)` for the one-variable family.
pub fn racah_orthonormal_1d<S: Scalar>(n: usize, x: usize, p: &RacahParams1D<S>) -> Result<QSqrt<S>> {
    let r = racah_1d(n, x, p)?;
    let w = racah_weight_1d(x, p)?;
    let norm = racah_norm_1d(n, p)?;
    let sq = ratio(w * r.clone() * r.clone(), norm, "one-variable Racah norm")?;
    Ok(QSqrt::new(sign_of(&r), sq))
}

/// The `(alpha, beta, gamma, delta)` matching the `d = 1` multivariable family:
/// `alpha = -N-1`, `beta = b2-b0-1+N`, `gamma = b1-b0-1`, `delta = b0`.
pub fn param_bridge_1d<S: Scalar>(beta: &[S; 3], n_max: usize) -> RacahParams1D<S> {
    let one = S::one();
    let nn = S::from_usize(n_max);
    RacahParams1D::new(
        -nn.clone() - one.clone(),
        beta[2].clone() - beta[0].clone() - one.clone() + nn,
        beta[1].clone() - beta[0].clone() - one,
        beta[0].clone(),
        n_max,
    )
}

/// Parameters `beta_0, ..., beta_{d+1}` and size `N` of the `d`-variable family.
#[derive(Debug, Clone, PartialEq)]
pub struct RacahParamsMulti<S> {
    pub beta: Vec<S>,
    pub n_max: usize,
}

impl<S: Scalar> RacahParamsMulti<S> {
    pub fn new(beta: Vec<S>, n_max: usize) -> Result<Self> {
        if beta.len() < 3 {
            return Err(Error::InvalidParameter("beta needs d+2 >= 3 entries".into()));
        }
        Ok(Self { beta, n_max })
    }

    pub fn d(&self) -> usize {
        self.beta.len() - 2
    }

    fn b(&self, j: usize) -> &S {
        &self.beta[j]
    }
}

/// Chains `0 <= x_1 <= ... <= x_d <= N`.
pub fn racah_lattice(d: usize, n_max: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, d: usize, lo: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == d {
            out.push(prefix.clone());
            return;
        }
        for v in lo..=n {
            prefix.push(v);
            rec(prefix, d, v, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(d), d, 0, n_max, &mut out);
    out
}

fn check_chain(x: &[usize], d: usize, n_max: usize) -> Result<Vec<usize>> {
    if x.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: x.len() });
    }
    let mut full = Vec::with_capacity(d + 2);
    full.push(0);
    full.extend_from_slice(x);
    full.push(n_max);
    if full.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter(format!("{x:?} is not a chain in [0, {n_max}]")));
    }
    Ok(full)
}

/// `R_nu(x; beta, N)`, evaluated with the bottom Pochhammer prefactors
/// absorbed into each `4F3` so that boundary lattice points stay finite.
pub fn racah_multi<S: Scalar>(nu: &[usize], x: &[usize], p: &RacahParamsMulti<S>) -> Result<S> {
    let d = p.d();
    if nu.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: nu.len() });
    }
    let xs = check_chain(x, d, p.n_max)?;
    let one = S::one();
    let mut r = S::one();
    for j in 1..=d {
        let nj = nu[j - 1];
        let s = S::from_usize(head_sum(nu, j - 1));
        let xj = S::from_usize(xs[j]);
        let xj1 = S::from_usize(xs[j + 1]);
        let two_s = s.clone() + s.clone();
        let top = [
            S::from_usize(nj) + two_s.clone() + p.b(j + 1).clone() - p.b(0).clone() - one.clone(),
            s.clone() - xj.clone(),
            s.clone() + p.b(j).clone() + xj,
        ];
        let bottom = [
            two_s + p.b(j).clone() - p.b(0).clone(),
            s.clone() + p.b(j + 1).clone() + xj1.clone(),
            s - xj1,
        ];
        r = r * absorbed_series(nj, &top, &[], &bottom, &one)?;
        if r.is_zero() {
            break;
        }
    }
    Ok(r)
}

/// The chain-lattice weight `w_R(x; beta, N)`.
pub fn racah_weight_multi<S: Scalar>(x: &[usize], p: &RacahParamsMulti<S>) -> Result<S> {
    let d = p.d();
    let xs = check_chain(x, d, p.n_max)?;
    let one = S::one();
    let two = S::from_i64(2);
    let mut num = S::one();
    let mut den = S::one();
    for j in 0..=d {
        let dx = xs[j + 1] - xs[j];
        num = num * pochhammer(&(p.b(j + 1).clone() - p.b(j).clone()), dx);
        den = den * factorial::<S>(dx) * pochhammer(&(p.b(j).clone() + one.clone()), xs[j + 1] + xs[j]);
    }
    num = num * pochhammer(p.b(d + 1), xs[d + 1] + xs[d]);
    // (b)_s ((b+2)/2)_x / (b/2)_x = (b+1)_{s-1} (b + 2x) for x >= 1, which
    // stays finite at b = 0.
    for j in 1..=d {
        let (s, x) = (xs[j - 1] + xs[j], xs[j]);
        let b = p.b(j).clone();
        num = num
            * if x == 0 {
                pochhammer(&b, s)
            } else {
                pochhammer(&(b.clone() + one.clone()), s - 1) * (b + two.clone() * S::from_usize(x))
            };
    }
    ratio(num, den, "Racah weight")
}

/// Closed-form squared norm `r_nu(beta, N)^2`.
pub fn racah_norm_sq<S: Scalar>(nu: &[usize], p: &RacahParamsMulti<S>) -> Result<S> {
    let d = p.d();
    let n = nu.iter().sum::<usize>();
    if nu.len() != d || n > p.n_max {
        return Err(Error::DimensionMismatch { expected: d, got: nu.len() });
    }
    let big = p.n_max;
    let nn = S::from_usize(n);
    let bn = S::from_usize(big);
    let one = S::one();
    let b0 = p.b(0).clone();
    let bd1 = p.b(d + 1).clone();
    let mut num = pochhammer(&bd1, big + n)
        * pochhammer(&-bn.clone(), n)
        * pochhammer(&(-bn - b0.clone()), n)
        * pochhammer(&(nn.clone() + nn + bd1 - b0.clone()), big - n);
    let den = factorial::<S>(big) * pochhammer(&(b0.clone() + one.clone()), big);
    for k in 1..=d {
        let nk = nu[k - 1];
        let s = S::from_usize(head_sum(nu, k - 1));
        let sk = s.clone() + S::from_usize(nk);
        num = num
            * factorial::<S>(nk)
            * pochhammer(&(p.b(k + 1).clone() - p.b(k).clone()), nk)
            * pochhammer(&(s.clone() + s.clone() + p.b(k).clone() - b0.clone()), nk)
            * pochhammer(&(sk + s + p.b(k + 1).clone() - b0.clone() - one.clone()), nk);
    }
    ratio(num, den, "Racah norm")
}

/// `sign(R) sqrt(w_R R^2 / r^2)`, the orthonormal value weighted by `sqrt(w_R)`.
pub fn racah_orthonormal<S: Scalar>(nu: &[usize], x: &[usize], p: &RacahParamsMulti<S>) -> Result<QSqrt<S>> {
    let r = racah_multi(nu, x, p)?;
    let sq = ratio(racah_weight_multi(x, p)? * r.clone() * r.clone(), racah_norm_sq(nu, p)?, "Racah norm")?;
    Ok(QSqrt::new(sign_of(&r), sq))
}

/// Dual variables, indices and parameters:
/// `x~_j = N - |nu_{d+1-j}|`, `nu~_j = x_{d+2-j} - x_{d+1-j}`,
/// `beta~_0 = beta_0`, `beta~_j = beta_0 - beta_{d+2-j} - 2N + 1`.
pub fn dual_map<S: Scalar>(
    x: &[usize],
    nu: &[usize],
    p: &RacahParamsMulti<S>,
) -> Result<(MultiIndex, MultiIndex, RacahParamsMulti<S>)> {
    let d = p.d();
    let big = p.n_max;
    let xs = check_chain(x, d, big)?;
    if nu.iter().sum::<usize>() > big {
        return Err(Error::InvalidParameter(format!("|{nu:?}| exceeds N = {big}")));
    }
    let xt = (1..=d).map(|j| big - head_sum(nu, d + 1 - j)).collect();
    let nt = (1..=d).map(|j| xs[d + 2 - j] - xs[d + 1 - j]).collect();
    let b0 = p.b(0).clone();
    let shift = S::from_usize(2 * big) - S::one();
    let mut bt = vec![b0.clone()];
    bt.extend((1..=d + 1).map(|j| b0.clone() - p.b(d + 2 - j).clone() - shift.clone()));
    Ok((xt, nt, RacahParamsMulti { beta: bt, n_max: big }))
}

/// `(-N)_{|nu|} (-N-beta_0)_{|nu|} prod (beta_{j+1}-beta_j)_{nu_j}`, the
/// sign-carrying normalizer of the duality relation.
pub fn dual_normalizer<S: Scalar>(nu: &[usize], p: &RacahParamsMulti<S>) -> S {
    let n = nu.iter().sum::<usize>();
    let bn = S::from_usize(p.n_max);
    let mut r = pochhammer(&-bn.clone(), n) * pochhammer(&(-bn - p.b(0).clone()), n);
    for j in 1..=p.d() {
        r = r * pochhammer(&(p.b(j + 1).clone() - p.b(j).clone()), nu[j - 1]);
    }
    r
}

/// `(beta_{d+1})_{2N} (beta~_{d+1})_{2N} / [N! (beta_0+1)_N]^2`.
pub fn duality_constant<S: Scalar>(p: &RacahParamsMulti<S>) -> Result<S> {
    let d = p.d();
    let big = p.n_max;
    let (_, _, pt) = dual_map(&vec![0; d], &vec![0; d], p)?;
    let f = factorial::<S>(big) * pochhammer(&(p.b(0).clone() + S::one()), big);
    ratio(
        pochhammer(p.b(d + 1), 2 * big) * pochhammer(pt.b(d + 1), 2 * big),
        f.clone() * f,
        "duality constant",
    )
}

/// `x'_j = N - x_{d+1-j}`, `nu'_j = nu_{d+1-j}`, `beta'_j = -2N - beta_{d+1-j}`.
pub fn conj_map<S: Scalar>(
    x: &[usize],
    nu: &[usize],
    p: &RacahParamsMulti<S>,
) -> Result<(MultiIndex, MultiIndex, RacahParamsMulti<S>)> {
    let d = p.d();
    check_chain(x, d, p.n_max)?;
    let big = p.n_max;
    let xp = (1..=d).map(|j| big - x[d - j]).collect();
    let np = (1..=d).map(|j| nu[d - j]).collect();
    let two_n = S::from_usize(2 * big);
    let bp = (0..=d + 1).map(|j| -two_n.clone() - p.b(d + 1 - j).clone()).collect();
    Ok((xp, np, RacahParamsMulti { beta: bp, n_max: big }))
}

/// The second family `R'_nu(x; beta, N)`, absorbed like [`racah_multi`].
pub fn racah_second_family<S: Scalar>(nu: &[usize], x: &[usize], p: &RacahParamsMulti<S>) -> Result<S> {
    let d = p.d();
    if nu.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: nu.len() });
    }
    let xs = check_chain(x, d, p.n_max)?;
    let one = S::one();
    let bn = S::from_usize(p.n_max);
    let bd1 = p.b(d + 1).clone();
    let mut r = S::one();
    for j in 1..=d {
        let nj = nu[j - 1];
        let s = S::from_usize(tail_sum(nu, j + 1));
        let two_s = s.clone() + s.clone();
        let xj = S::from_usize(xs[j]);
        let xjm = S::from_usize(xs[j - 1]);
        let base = s - bn.clone();
        let top = [
            S::from_usize(nj) + two_s.clone() + bd1.clone() - p.b(j - 1).clone() - one.clone(),
            base.clone() + xj.clone(),
            base.clone() - p.b(j).clone() - xj,
        ];
        let bottom = [
            two_s + bd1.clone() - p.b(j).clone(),
            base.clone() - p.b(j - 1).clone() - xjm.clone(),
            base + xjm,
        ];
        r = r * absorbed_series(nj, &top, &[], &bottom, &one)?;
        if r.is_zero() {
            break;
        }
    }
    Ok(r)
}

/// Squared norm of `R'_nu(.; beta)` under `w_R(.; beta)`.
///
/// With `(x, mu, b) = conj(0, nu, beta)` the conjugation carries `R'_nu` to
/// `R_mu(.; b)` and the two weights differ by the constant
/// `K = w_R(0; beta) / w_R(x; b)`, so the norm is `K r_mu(b)^2`.
pub fn racah_second_norm_sq<S: Scalar>(nu: &[usize], p: &RacahParamsMulti<S>) -> Result<S> {
    let d = p.d();
    let zero = vec![0; d];
    let (x, mu, b) = conj_map(&zero, nu, p)?;
    let k = ratio(racah_weight_multi(&zero, p)?, racah_weight_multi(&x, &b)?, "conjugation constant")?;
    Ok(k * racah_norm_sq(&mu, &b)?)
}

/// `sign(R') sqrt(w_R R'^2 / r'^2)` for the second family.
pub fn racah_second_orthonormal<S: Scalar>(
    nu: &[usize],
    x: &[usize],
    p: &RacahParamsMulti<S>,
) -> Result<QSqrt<S>> {
    let r = racah_second_family(nu, x, p)?;
    let sq = ratio(
        racah_weight_multi(x, p)? * r.clone() * r.clone(),
        racah_second_norm_sq(nu, p)?,
        "second-family norm",
    )?;
    Ok(QSqrt::new(sign_of(&r), sq))
}

/// Both sides of the balanced Whipple transformation, in absorbed form:
/// `(U)_m (V)_m (W)_m 4F3(-m, X, Y, Z; U, V, W)` and
/// `(1-V+Z-m)_m (1-W+Z-m)_m (U)_m 4F3(-m, U-X, U-Y, Z; 1-V+Z-m, 1-W+Z-m, U)`.
/// The identity requires `1 - m + X + Y + Z = U + V + W`.
pub fn whipple_sides<S: Scalar>(m: usize, xyz: [&S; 3], uvw: [&S; 3]) -> Result<(S, S)> {
    let [x, y, z] = xyz;
    let [u, v, w] = uvw;
    let one = S::one();
    let mm = S::from_usize(m);
    let lhs = absorbed_series(m, &[x.clone(), y.clone(), z.clone()], &[], &[u.clone(), v.clone(), w.clone()], &one)?;
    let v2 = one.clone() - v.clone() + z.clone() - mm.clone();
    let w2 = one.clone() - w.clone() + z.clone() - mm;
    let rhs = absorbed_series(
        m,
        &[u.clone() - x.clone(), u.clone() - y.clone(), z.clone()],
        &[],
        &[v2, w2, u.clone()],
        &one,
    )?;
    Ok((lhs, rhs))
}

/// `sum_x w_R R_nu R_mu = delta r_nu^2` over all `|nu|, |mu| <= N`.
pub fn verify_orthogonality_multi<S: Scalar>(p: &RacahParamsMulti<S>) -> Result<Report> {
    let d = p.d();
    let mut rep = Report::new(format!("racah orthogonality d={d} N={}", p.n_max));
    let xs = racah_lattice(d, p.n_max);
    let idx = enumerate_upto(p.n_max, d);
    let w: Vec<S> = xs.iter().map(|x| racah_weight_multi(x, p)).collect::<Result<_>>()?;
    let vals: Vec<Vec<S>> = idx
        .iter()
        .map(|nu| xs.iter().map(|x| racah_multi(nu, x, p)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for (a, nu) in idx.iter().enumerate() {
        for b in a..idx.len() {
            let mut s = S::zero();
            for (k, wk) in w.iter().enumerate() {
                s = s + wk.clone() * vals[a][k].clone() * vals[b][k].clone();
            }
            let expect = if a == b { racah_norm_sq(nu, p)? } else { S::zero() };
            rep.check(s == expect, || format!("nu={nu:?} mu={:?}: sum {s} != {expect}", idx[b]));
        }
    }
    Ok(rep)
}

/// The duality relation with normalizers, the involution property, the
/// nu-independence of the norm-weight constant and the orthonormal square
/// identity, over the full grid.
pub fn verify_duality<S: Scalar>(p: &RacahParamsMulti<S>) -> Result<Report> {
    let d = p.d();
    let mut rep = Report::new(format!("racah duality d={d} N={}", p.n_max));
    let c = duality_constant(p)?;
    for nu in enumerate_upto(p.n_max, d) {
        let norm = racah_norm_sq(&nu, p)?;
        let nz = dual_normalizer(&nu, p);
        let (xt0, _, pt) = dual_map(&vec![0; d], &nu, p)?;
        let k = norm.clone() * racah_weight_multi(&xt0, &pt)? / (nz.clone() * nz.clone());
        rep.check(k == c, || format!("norm-weight constant at nu={nu:?}: {k} != {c}"));
        for x in racah_lattice(d, p.n_max) {
            let (xt, nt, pt) = dual_map(&x, &nu, p)?;
            let back = dual_map(&xt, &nt, &pt)?;
            rep.check(back == (x.clone(), nu.clone(), p.clone()), || format!("not an involution at x={x:?}, nu={nu:?}"));
            let lhs = racah_multi(&nu, &x, p)? / nz.clone();
            let rhs = racah_multi(&nt, &xt, &pt)? / dual_normalizer(&nt, &pt);
            rep.check(lhs == rhs, || format!("duality at x={x:?}, nu={nu:?}: {lhs} != {rhs}"));
            let a = racah_orthonormal(&nu, &x, p)?;
            let b = racah_orthonormal(&nt, &xt, &pt)?;
            rep.check(a == b, || format!("orthonormal duality at x={x:?}, nu={nu:?}: {a} != {b}"));
        }
    }
    Ok(rep)
}

/// `R_nu(x; beta) = R'_{nu'}(x'; beta')`, the conjugation involution, and the
/// square identity `w R^2 / r^2 = w' R'^2 / r'^2` at the dual-conjugate point.
pub fn verify_conjugation<S: Scalar>(p: &RacahParamsMulti<S>) -> Result<Report> {
    let d = p.d();
    let mut rep = Report::new(format!("racah second family d={d} N={}", p.n_max));
    for nu in enumerate_upto(p.n_max, d) {
        for x in racah_lattice(d, p.n_max) {
            let (xp, np, pp) = conj_map(&x, &nu, p)?;
            rep.check(conj_map(&xp, &np, &pp)? == (x.clone(), nu.clone(), p.clone()), || {
                format!("conjugation not an involution at x={x:?}, nu={nu:?}")
            });
            let a = racah_multi(&nu, &x, p)?;
            let b = racah_second_family(&np, &xp, &pp)?;
            rep.check(a == b, || format!("R != R' at x={x:?}, nu={nu:?}: {a} != {b}"));
            let (xt, nt, pt) = dual_map(&x, &nu, p)?;
            let (xtp, ntp, ptp) = conj_map(&xt, &nt, &pt)?;
            let lhs = racah_orthonormal(&nu, &x, p)?.square();
            let rhs = racah_second_orthonormal(&ntp, &xtp, &ptp)?.square();
            rep.check(lhs == rhs, || format!("dual second-family square at x={x:?}, nu={nu:?}: {lhs} != {rhs}"));
        }
    }
    Ok(rep)
}

/// The `d = 1` bridge: equal `4F3` factors up to the prefactor fixed at
/// `x = 0`, and weights in constant ratio.
pub fn verify_bridge_1d<S: Scalar>(beta: &[S; 3], n_max: usize) -> Result<Report> {
    let mut rep = Report::new(format!("racah d=1 bridge N={n_max}"));
    let multi = RacahParamsMulti::new(beta.to_vec(), n_max)?;
    let one = param_bridge_1d(beta, n_max);
    rep.check(one.alpha == -S::from_usize(n_max + 1), || "alpha != -N-1".into());
    let w_ratio0 = racah_weight_1d(0, &one)? / racah_weight_multi(&[0], &multi)?;
    for x in 0..=n_max {
        let r = racah_weight_1d(x, &one)? / racah_weight_multi(&[x], &multi)?;
        rep.check(r == w_ratio0, || format!("weight ratio at x={x}: {r} != {w_ratio0}"));
    }
    for n in 0..=n_max {
        let f0 = racah_multi(&[n], &[0], &multi)?;
        for x in 0..=n_max {
            let m = racah_multi(&[n], &[x], &multi)?;
            let r = racah_1d(n, x, &one)?;
            rep.check(m == f0.clone() * r.clone(), || format!("n={n}, x={x}: {m} != {f0} * {r}"));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn sample2() -> RacahParamsMulti<Rational> {
        RacahParamsMulti::new(vec![q(1, 2), q(7, 3), q(5, 2), q(9, 2)], 3).unwrap()
    }

    #[test]
    fn one_variable_trivial_values() {
        let p = param_bridge_1d(&[q(1, 2), q(3, 1), q(11, 2)], 4);
        assert!(p.is_truncated());
        assert_eq!(racah_1d(0, 3, &p).unwrap(), q(1, 1));
        assert_eq!(racah_1d(3, 0, &p).unwrap(), q(1, 1));
        assert_eq!(racah_weight_1d(0, &p).unwrap(), q(1, 1));
        let r0 = racah_norm_1d(0, &p).unwrap();
        let s: Rational = (0..=4).map(|x| racah_weight_1d(x, &p).unwrap()).sum();
        assert_eq!(r0, s);
    }

    #[test]
    fn one_variable_orthogonality() {
        let p = param_bridge_1d(&[q(1, 3), q(2, 1), q(17, 5)], 5);
        for n in 0..=5 {
            for m in 0..n {
                let s: Rational = (0..=5)
                    .map(|x| racah_weight_1d(x, &p).unwrap() * racah_1d(n, x, &p).unwrap() * racah_1d(m, x, &p).unwrap())
                    .sum();
                assert_eq!(s, q(0, 1), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn multi_trivial_values() {
        let p = sample2();
        assert_eq!(racah_multi(&[0, 0], &[1, 2], &p).unwrap(), q(1, 1));
        let (xt, _, _) = dual_map(&[1, 2], &[0, 0], &p).unwrap();
        assert_eq!(xt, vec![3, 3]);
        // At x = 0 only the j = d boundary factor survives.
        let b = &p.beta;
        let expect = pochhammer(&(b[3].clone() - b[2].clone()), 3) * pochhammer(&b[3], 3)
            / (factorial::<Rational>(3) * pochhammer(&(b[2].clone() + q(1, 1)), 3));
        assert_eq!(racah_weight_multi(&[0, 0], &p).unwrap(), expect);
    }

    #[test]
    fn multi_orthogonality_and_duality() {
        let p = sample2();
        assert!(verify_orthogonality_multi(&p).unwrap().passed());
        assert!(verify_duality(&p).unwrap().passed());
        assert!(verify_conjugation(&p).unwrap().passed());
    }

    #[test]
    fn bridge() {
        assert!(verify_bridge_1d(&[q(1, 2), q(3, 1), q(11, 2)], 4).unwrap().passed());
    }

    #[test]
    fn whipple_balanced() {
        let (x, y, z, u, v) = (q(3, 2), q(-1, 3), q(5, 7), q(9, 4), q(2, 5));
        let m = 3;
        let w = q(1, 1) - Rational::from_usize(m) + x.clone() + y.clone() + z.clone() - u.clone() - v.clone();
        let (l, r) = whipple_sides(m, [&x, &y, &z], [&u, &v, &w]).unwrap();
        assert_eq!(l, r);
    }
}
