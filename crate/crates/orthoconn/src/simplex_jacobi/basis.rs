use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, pochhammer, Scalar};
use crate::multipoly::{grevlex_cmp, substitute_homogeneous, tail_sum, MultiIndex, SparsePoly};

use super::Permutation;

/// Parameters `kappa_1, ..., kappa_{d+1}` of the simplex weight
/// `x^kappa (1 - |x|)^{kappa_{d+1}}`.
#[derive(Debug, Clone, PartialEq)]
pub struct KappaParams<S> {
    kappa: Vec<S>,
}

impl<S: Scalar> KappaParams<S> {
    /// Validated construction: every entry must exceed `-1`.
    pub fn new(kappa: Vec<S>) -> Result<Self> {
        if kappa.len() < 2 {
            return Err(Error::InvalidParameter("kappa needs at least two entries".into()));
        }
        if let Some(k) = kappa.iter().find(|k| **k <= -S::one()) {
            return Err(Error::InvalidParameter(format!("kappa entry {k} is not > -1")));
        }
        Ok(Self { kappa })
    }

    /// Skips the positivity check; the closed-form Pochhammer products remain
    /// meaningful as rational functions of kappa.
    pub fn new_unchecked(kappa: Vec<S>) -> Self {
        Self { kappa }
    }

    pub fn d(&self) -> usize {
        self.kappa.len() - 1
    }

    pub fn values(&self) -> &[S] {
        &self.kappa
    }

    /// `kappa_i`, 1-based as in the formulas.
    pub fn k(&self, i: usize) -> &S {
        &self.kappa[i - 1]
    }

    /// `|kappa|`.
    pub fn total(&self) -> S {
        self.kappa.iter().cloned().fold(S::zero(), |a, b| a + b)
    }

    /// `|kappa^j| = kappa_j + ... + kappa_{d+1}`.
    pub fn tail(&self, j: usize) -> S {
        crate::multipoly::tail_sum_s(&self.kappa, j)
    }

    /// `tau kappa`.
    pub fn permuted(&self, tau: &Permutation) -> Self {
        Self { kappa: tau.act(&self.kappa) }
    }

    /// `kappa + eps`, with `eps` padded by zeros.
    pub fn shifted(&self, eps: &[usize]) -> Self {
        let kappa = self
            .kappa
            .iter()
            .enumerate()
            .map(|(i, k)| k.clone() + S::from_usize(eps.get(i).copied().unwrap_or(0)))
            .collect();
        Self { kappa }
    }
}

/// Coefficients in `t` of `((a+1)_n / n!) 2F1(-n, n+a+b+1; a+1; (1-t)/2)`.
pub fn jacobi_1d<S: Scalar>(n: usize, a: &S, b: &S) -> Result<Vec<S>> {
    let mut coef = vec![S::zero(); n + 1];
    let pre = pochhammer(&(a.clone() + S::one()), n) / factorial::<S>(n);
    let neg_n = -S::from_usize(n);
    let ab = S::from_usize(n) + a.clone() + b.clone() + S::one();
    let half = S::from_frac(1, 2);
    for k in 0..=n {
        let den = pochhammer(&(a.clone() + S::one()), k) * factorial::<S>(k);
        let num = pochhammer(&neg_n, k) * pochhammer(&ab, k);
        if den.is_zero() {
            if num.is_zero() {
                continue;
            }
            return Err(Error::BottomPole { index: 0, term: k });
        }
        let mut c = pre.clone() * num / den;
        for _ in 0..k {
            c = c * half.clone();
        }
        // (1 - t)^k
        for i in 0..=k {
            let term = c.clone() * binomial::<S>(k, i);
            coef[i] = if i % 2 == 0 { coef[i].clone() + term } else { coef[i].clone() - term };
        }
    }
    Ok(coef)
}

/// Normalized Dirichlet moment `prod (kappa_i+1)_{alpha_i} / (|kappa|+d+1)_{|alpha|}`
/// of `x^alpha (1-|x|)^{alpha_{d+1}}`.
pub fn simplex_moment<S: Scalar>(alpha: &[usize], kappa: &KappaParams<S>) -> S {
    assert_eq!(alpha.len(), kappa.values().len());
    let mut num = S::one();
    for (a, k) in alpha.iter().zip(kappa.values()) {
        num = num * pochhammer(&(k.clone() + S::one()), *a);
    }
    let lam = kappa.total() + S::from_usize(kappa.values().len());
    num / pochhammer(&lam, alpha.iter().sum())
}

/// Memoized moments of plain monomials `x^gamma` (last exponent zero).
#[derive(Debug, Clone)]
pub struct Moments<S> {
    kappa: KappaParams<S>,
    cache: HashMap<MultiIndex, S>,
}

impl<S: Scalar> Moments<S> {
    pub fn new(kappa: &KappaParams<S>) -> Self {
        Self { kappa: kappa.clone(), cache: HashMap::new() }
    }

    pub fn kappa(&self) -> &KappaParams<S> {
        &self.kappa
    }

    pub fn moment(&mut self, gamma: &[usize]) -> S {
        if let Some(v) = self.cache.get(gamma) {
            return v.clone();
        }
        let mut alpha = gamma.to_vec();
        alpha.push(0);
        let v = simplex_moment(&alpha, &self.kappa);
        self.cache.insert(gamma.to_vec(), v.clone());
        v
    }

    /// Integral of `p q` against the normalized weight.
    pub fn inner(&mut self, p: &SparsePoly<S>, q: &SparsePoly<S>) -> S {
        let mut s = S::zero();
        let mut e = vec![0; p.nvars()];
        for (a, u) in p.terms() {
            for (b, v) in q.terms() {
                for i in 0..e.len() {
                    e[i] = a[i] + b[i];
                }
                s = s + u.clone() * v.clone() * self.moment(&e);
            }
        }
        s
    }
}

/// `<p, q>` against the normalized simplex weight, from moments only.
pub fn inner_product_simplex<S: Scalar>(p: &SparsePoly<S>, q: &SparsePoly<S>, kappa: &KappaParams<S>) -> S {
    Moments::new(kappa).inner(p, q)
}

/// `a_j = |kappa^{j+1}| + 2|nu^{j+1}| + d - j` for `j = 1, ..., d`.
pub fn a_coeffs<S: Scalar>(nu: &[usize], kappa: &KappaParams<S>) -> Vec<S> {
    let d = nu.len();
    (1..=d)
        .map(|j| kappa.tail(j + 1) + S::from_usize(2 * tail_sum(nu, j + 1) + d - j))
        .collect()
}

/// The product basis element `P_nu^kappa`.
pub fn jacobi_simplex_basis<S: Scalar>(nu: &[usize], kappa: &KappaParams<S>) -> Result<SparsePoly<S>> {
    let d = nu.len();
    if kappa.d() != d {
        return Err(Error::DimensionMismatch { expected: kappa.d(), got: d });
    }
    let a = a_coeffs(nu, kappa);
    let mut p = SparsePoly::one(d);
    for j in 0..d {
        if nu[j] == 0 {
            continue;
        }
        let mut hom = SparsePoly::one(d);
        for i in 0..j {
            hom = &hom - &SparsePoly::var(d, i);
        }
        let lin = &SparsePoly::var(d, j).scale(&S::from_i64(2)) - &hom;
        let f = jacobi_1d(nu[j], &a[j], kappa.k(j + 1))?;
        p = &p * &substitute_homogeneous(&f, &lin, &hom)?;
    }
    Ok(p)
}

/// Squared norm `A_nu(kappa)` in closed form.
pub fn norm_a<S: Scalar>(nu: &[usize], kappa: &KappaParams<S>) -> S {
    let d = nu.len();
    let a = a_coeffs(nu, kappa);
    let lam = kappa.total() + S::from_usize(d + 1);
    let mut r = S::one() / pochhammer(&lam, 2 * nu.iter().sum::<usize>());
    for j in 0..d {
        let k = kappa.k(j + 1).clone();
        // (c)_{2n} / (c)_n written as (c+n)_n, which stays defined at c = 0
        let shifted = k.clone() + a[j].clone() + S::one() + S::from_usize(nu[j]);
        r = r * pochhammer(&shifted, nu[j]) * pochhammer(&(k + S::one()), nu[j])
            * pochhammer(&(a[j].clone() + S::one()), nu[j])
            / factorial::<S>(nu[j]);
    }
    r
}

/// `p(tau x)` where `tau x` takes the first `d` entries of `tau (x, 1 - |x|)`.
pub fn permute_vars<S: Scalar>(p: &SparsePoly<S>, tau: &Permutation) -> Result<SparsePoly<S>> {
    let d = p.nvars();
    if tau.size() != d + 1 {
        return Err(Error::DimensionMismatch { expected: d + 1, got: tau.size() });
    }
    if tau.is_identity() {
        return Ok(p.clone());
    }
    let mut slots: Vec<SparsePoly<S>> = (0..d).map(|i| SparsePoly::var(d, i)).collect();
    let mut last = SparsePoly::one(d);
    for s in &slots {
        last = &last - s;
    }
    slots.push(last);
    let subs: Vec<SparsePoly<S>> = (0..d).map(|i| slots[tau.apply(i)].clone()).collect();
    p.compose(&subs)
}

/// All `nu` with `|nu| = n` in `d` parts, descending graded reverse-lex.
pub fn enumerate_basis(n: usize, d: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0; d];
    compositions(n, 0, &mut cur, &mut out);
    out.sort_by(|a, b| grevlex_cmp(b, a));
    out
}

/// All `nu` with `|nu| <= n`, grouped by degree.
pub fn enumerate_upto(n: usize, d: usize) -> Vec<MultiIndex> {
    (0..=n).flat_map(|k| enumerate_basis(k, d)).collect()
}

fn compositions(rest: usize, i: usize, cur: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
    let d = cur.len();
    if d == 0 {
        if rest == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if i == d - 1 {
        cur[i] = rest;
        out.push(cur.clone());
        return;
    }
    for v in 0..=rest {
        cur[i] = v;
        compositions(rest - v, i + 1, cur, out);
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn zero_kappa(d: usize) -> KappaParams<Rational> {
        KappaParams::new(vec![q(0, 1); d + 1]).unwrap()
    }

    fn poly(terms: &[(&[usize], i64)]) -> SparsePoly<Rational> {
        SparsePoly::from_terms(terms[0].0.len(), terms.iter().map(|(e, c)| (e.to_vec(), q(*c, 1)))).unwrap()
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_1d(0, &q(1, 2), &q(1, 3)).unwrap(), vec![q(1, 1)]);
        assert_eq!(jacobi_1d(1, &q(0, 1), &q(0, 1)).unwrap(), vec![q(0, 1), q(1, 1)]);
        // n = 1, a = 1, b = 0: (a+1) + (a+b+2)(t-1)/2 = 1/2 + 3t/2
        assert_eq!(jacobi_1d(1, &q(1, 1), &q(0, 1)).unwrap(), vec![q(1, 2), q(3, 2)]);
        let f = jacobi_1d(4, &q(2, 3), &q(-1, 2)).unwrap();
        let at_one = f.iter().cloned().fold(q(0, 1), |a, b| a + b);
        assert_eq!(at_one, pochhammer(&q(5, 3), 4) / factorial::<Rational>(4));
    }

    #[test]
    fn moment_examples() {
        let k2 = zero_kappa(2);
        assert_eq!(simplex_moment(&[0, 0, 0], &k2), q(1, 1));
        assert_eq!(simplex_moment(&[1, 0, 0], &k2), q(1, 3));
        assert_eq!(simplex_moment(&[1, 0], &zero_kappa(1)), q(1, 2));
    }

    #[test]
    fn basis_examples() {
        let k = zero_kappa(2);
        assert_eq!(jacobi_simplex_basis(&[1, 0], &k).unwrap(), poly(&[(&[1, 0], 3), (&[0, 0], -1)]));
        assert_eq!(
            jacobi_simplex_basis(&[0, 1], &k).unwrap(),
            poly(&[(&[1, 0], 1), (&[0, 1], 2), (&[0, 0], -1)])
        );
        assert_eq!(jacobi_simplex_basis(&[0, 0], &k).unwrap(), SparsePoly::one(2));
        let p = jacobi_simplex_basis(&[1, 0], &k).unwrap();
        let r = jacobi_simplex_basis(&[0, 1], &k).unwrap();
        assert_eq!(inner_product_simplex(&p, &r, &k), q(0, 1));
        assert_eq!(inner_product_simplex(&p, &p, &k), norm_a(&[1, 0], &k));
    }

    #[test]
    fn a_coefficient_examples() {
        let k = KappaParams::new(vec![q(1, 2), q(1, 3), q(1, 4)]).unwrap();
        let a = a_coeffs(&[2, 3], &k);
        assert_eq!(a[0], q(1, 3) + q(1, 4) + q(7, 1));
        assert_eq!(a[1], q(1, 4));
        let k = KappaParams::new(vec![q(1, 2), q(1, 3), q(1, 4), q(1, 5)]).unwrap();
        assert_eq!(a_coeffs(&[1, 1, 2], &k)[1], q(1, 4) + q(1, 5) + q(5, 1));
    }

    #[test]
    fn permuted_variables() {
        let k = zero_kappa(2);
        let x1 = SparsePoly::<Rational>::var(2, 0);
        let t12 = Permutation::parse("(12)", 3).unwrap();
        assert_eq!(permute_vars(&x1, &t12).unwrap(), SparsePoly::var(2, 1));
        let t13 = Permutation::parse("(13)", 3).unwrap();
        assert_eq!(permute_vars(&x1, &t13).unwrap(), poly(&[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1)]));
        let p = jacobi_simplex_basis(&[1, 1], &k).unwrap();
        assert_eq!(permute_vars(&p, &Permutation::identity(3)).unwrap(), p);
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_basis(1, 2), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(
            enumerate_basis(2, 3),
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 2]]
        );
        assert_eq!(enumerate_basis(0, 4), vec![vec![0; 4]]);
    }
}
