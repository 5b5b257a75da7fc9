//! Sparse multivariate polynomials over a [`Scalar`] field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::exact_arith::Scalar;

/// Exponent or degree tuple `nu = (nu_1, ..., nu_d)`.
pub type MultiIndex = Vec<usize>;

/// `|nu|`.
pub fn total(nu: &[usize]) -> usize {
    nu.iter().sum()
}

/// `|nu_j| = nu_1 + ... + nu_j` (1-based `j`, empty sum for `j = 0`).
pub fn head_sum(nu: &[usize], j: usize) -> usize {
    nu[..j.min(nu.len())].iter().sum()
}

/// `|nu^j| = nu_j + ... + nu_d` (1-based `j`, empty sum for `j > d`).
pub fn tail_sum(nu: &[usize], j: usize) -> usize {
    if j > nu.len() {
        0
    } else {
        nu[j - 1..].iter().sum()
    }
}

/// Same prefix/suffix sums for scalar parameter tuples.
pub fn head_sum_s<S: Scalar>(v: &[S], j: usize) -> S {
    v[..j.min(v.len())].iter().cloned().fold(S::zero(), |a, b| a + b)
}

pub fn tail_sum_s<S: Scalar>(v: &[S], j: usize) -> S {
    if j > v.len() {
        S::zero()
    } else {
        v[j - 1..].iter().cloned().fold(S::zero(), |a, b| a + b)
    }
}

/// Graded reverse-lexicographic comparison: higher total degree first, ties
/// broken by the rightmost differing entry, where the smaller entry wins.
pub fn grevlex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    match total(a).cmp(&total(b)) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Polynomial in `nvars` variables with nonzero coefficients only.
#[derive(Debug, Clone, PartialEq)]
pub struct SparsePoly<S> {
    nvars: usize,
    terms: BTreeMap<MultiIndex, S>,
}

impl<S: Scalar> SparsePoly<S> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, unit_index(nvars, i), S::one())
    }

    pub fn monomial(nvars: usize, exp: MultiIndex, c: S) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exp, c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (MultiIndex, S)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[usize]) -> S {
        self.terms.get(exp).cloned().unwrap_or_else(S::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| total(k)).max()
    }

    /// Terms sorted in descending graded reverse-lex order.
    pub fn sorted_terms(&self) -> Vec<(&MultiIndex, &S)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grevlex_cmp(b.0, a.0));
        v
    }

    /// Leading term in graded reverse-lex order.
    pub fn leading_term(&self) -> Option<(&MultiIndex, &S)> {
        self.terms.iter().max_by(|a, b| grevlex_cmp(a.0, b.0))
    }

    fn add_term(&mut self, exp: MultiIndex, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut r = Self::zero(self.nvars);
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let e: MultiIndex = a.iter().zip(b).map(|(x, y)| x + y).collect();
                r.add_term(e, u.clone() * v.clone());
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut r = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            r.add_term(e.clone(), v.clone() * c.clone());
        }
        r
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut r = Self::one(self.nvars);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    pub fn eval(&self, point: &[S]) -> Result<S> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        let mut s = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            s = s + t;
        }
        Ok(s)
    }

    /// Replaces variable `i` by `subs[i]`; all substitutes share a variable count.
    pub fn compose(&self, subs: &[SparsePoly<S>]) -> Result<Self> {
        if subs.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: subs.len() });
        }
        let target = subs.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<SparsePoly<S>>> = subs.iter().map(|p| vec![SparsePoly::one(p.nvars)]).collect();
        let mut r = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().try_mul(&subs[i])?;
                    powers[i].push(next);
                }
                t = t.try_mul(&powers[i][k])?;
            }
            r = r.try_add(&t)?;
        }
        Ok(r)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            r.add_term(f, c.clone() * S::from_usize(e[i]));
        }
        r
    }

    /// Sum of second partial derivatives.
    pub fn laplacian(&self) -> Self {
        (0..self.nvars).fold(Self::zero(self.nvars), |acc, i| &acc + &self.derivative(i).derivative(i))
    }

    /// Appends `extra` variables that do not occur.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let mut r = Self::zero(self.nvars + extra);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.extend(std::iter::repeat_n(0, extra));
            r.add_term(f, c.clone());
        }
        r
    }

    /// `q` such that `self = q * other`, when `self` is a scalar multiple of `other`.
    ///
    /// The ratio is read off the leading terms and then checked on every term.
    pub fn proportionality(&self, other: &Self) -> Result<S> {
        self.check_same(other)?;
        let (e, a) = self.leading_term().ok_or(Error::NotProportional)?;
        let b = other.coeff(e);
        if b.is_zero() || self.len() != other.len() {
            return Err(Error::NotProportional);
        }
        let q = a.clone() / b;
        if *self == other.scale(&q) {
            Ok(q)
        } else {
            Err(Error::NotProportional)
        }
    }

    /// Converts the coefficients into another field.
    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparsePoly<T> {
        let mut r = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }
}

fn unit_index(nvars: usize, i: usize) -> MultiIndex {
    let mut e = vec![0; nvars];
    e[i] = 1;
    e
}

/// `hom^n * f(lin/hom)` for `f = sum c_k t^k` of degree `n`, computed as
/// `sum c_k lin^k hom^(n-k)` so that no division occurs.
pub fn substitute_homogeneous<S: Scalar>(
    f: &[S],
    lin: &SparsePoly<S>,
    hom: &SparsePoly<S>,
) -> Result<SparsePoly<S>> {
    lin.check_same(hom)?;
    let nvars = lin.nvars();
    if f.is_empty() {
        return Ok(SparsePoly::zero(nvars));
    }
    let n = f.len() - 1;
    let mut lin_pows = vec![SparsePoly::one(nvars)];
    let mut hom_pows = vec![SparsePoly::one(nvars)];
    for _ in 0..n {
        lin_pows.push(lin_pows.last().unwrap() * lin);
        hom_pows.push(hom_pows.last().unwrap() * hom);
    }
    let mut r = SparsePoly::zero(nvars);
    for (k, c) in f.iter().enumerate() {
        if !c.is_zero() {
            r = &r + &(&lin_pows[k] * &hom_pows[n - k]).scale(c);
        }
    }
    Ok(r)
}

pub fn poly_add<S: Scalar>(p: &SparsePoly<S>, q: &SparsePoly<S>) -> Result<SparsePoly<S>> {
    p.try_add(q)
}

pub fn poly_mul<S: Scalar>(p: &SparsePoly<S>, q: &SparsePoly<S>) -> Result<SparsePoly<S>> {
    p.try_mul(q)
}

pub fn poly_scale<S: Scalar>(p: &SparsePoly<S>, c: &S) -> SparsePoly<S> {
    p.scale(c)
}

pub fn poly_eval<S: Scalar>(p: &SparsePoly<S>, point: &[S]) -> Result<S> {
    p.eval(point)
}

// Operator sugar. Mismatched variable counts are programming errors here;
// the `try_*` methods report them as values instead.
impl<S: Scalar> Add for &SparsePoly<S> {
    type Output = SparsePoly<S>;
    fn add(self, rhs: Self) -> SparsePoly<S> {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<S: Scalar> Sub for &SparsePoly<S> {
    type Output = SparsePoly<S>;
    fn sub(self, rhs: Self) -> SparsePoly<S> {
        self.try_add(&-rhs).expect("variable count mismatch")
    }
}

impl<S: Scalar> Mul for &SparsePoly<S> {
    type Output = SparsePoly<S>;
    fn mul(self, rhs: Self) -> SparsePoly<S> {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl<S: Scalar> Neg for &SparsePoly<S> {
    type Output = SparsePoly<S>;
    fn neg(self) -> SparsePoly<S> {
        self.scale(&-S::one())
    }
}

/// JSON layout `{"d": d, "terms": [{"exp": [...], "coef": "p/q"}, ...]}` in
/// descending graded reverse-lex order.
impl<S: Scalar> Serialize for SparsePoly<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        struct Terms<'a, S>(&'a SparsePoly<S>);
        struct Term<'a, S>(&'a MultiIndex, &'a S);
        impl<S: Scalar> Serialize for Term<'_, S> {
            fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("exp", self.0)?;
                m.serialize_entry("coef", &self.1.to_string())?;
                m.end()
            }
        }
        impl<S: Scalar> Serialize for Terms<'_, S> {
            fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
                let sorted = self.0.sorted_terms();
                let mut seq = s.serialize_seq(Some(sorted.len()))?;
                for (e, c) in sorted {
                    seq.serialize_element(&Term(e, c))?;
                }
                seq.end()
            }
        }
        let mut m = serializer.serialize_map(Some(2))?;
        m.serialize_entry("d", &self.nvars)?;
        m.serialize_entry("terms", &Terms(self))?;
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn x(i: usize) -> SparsePoly<Rational> {
        SparsePoly::var(2, i)
    }

    #[test]
    fn ring_examples() {
        let p = &x(0) + &x(1);
        let sq = &p * &p;
        let expect = SparsePoly::from_terms(2, [(vec![2, 0], q(1, 1)), (vec![1, 1], q(2, 1)), (vec![0, 2], q(1, 1))]).unwrap();
        assert_eq!(sq, expect);
        assert_eq!(&p * &SparsePoly::one(2), p);
        assert!((&p * &SparsePoly::zero(2)).is_zero());
    }

    #[test]
    fn eval_examples() {
        let p = &(&x(0) + &x(1).scale(&q(2, 1))) - &SparsePoly::one(2);
        assert_eq!(p.eval(&[q(1, 1), q(0, 1)]).unwrap(), q(0, 1));
        assert_eq!(SparsePoly::constant(2, q(7, 3)).eval(&[q(5, 1), q(-1, 2)]).unwrap(), q(7, 3));
        let r = &x(0).scale(&q(3, 1)) - &SparsePoly::one(2);
        assert_eq!(r.eval(&[q(1, 3), q(9, 4)]).unwrap(), q(0, 1));
        assert!(matches!(r.eval(&[q(1, 1)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn homogeneous_substitution_examples() {
        let hom = &SparsePoly::one(2) - &x(0);
        let lin = &x(1).scale(&q(2, 1)) - &hom;
        let r = substitute_homogeneous(&[q(0, 1), q(1, 1)], &lin, &hom).unwrap();
        let expect = &(&x(0) + &x(1).scale(&q(2, 1))) - &SparsePoly::one(2);
        assert_eq!(r, expect);
        assert_eq!(substitute_homogeneous(&[q(1, 1)], &lin, &hom).unwrap(), SparsePoly::one(2));
        let r = substitute_homogeneous(&[q(0, 1), q(0, 1), q(1, 1)], &x(0), &SparsePoly::one(2)).unwrap();
        assert_eq!(r, x(0).pow(2));
    }

    #[test]
    fn grevlex_order() {
        assert_eq!(grevlex_cmp(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(grevlex_cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(grevlex_cmp(&[0, 0, 3], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn proportionality_detects_multiples() {
        let p = &x(0) + &x(1).pow(2);
        assert_eq!(p.scale(&q(-3, 2)).proportionality(&p).unwrap(), q(-3, 2));
        assert_eq!((&p + &SparsePoly::one(2)).proportionality(&p), Err(Error::NotProportional));
    }

    #[test]
    fn laplacian_of_harmonic() {
        // x^2 - y^2 and xy are harmonic.
        let h = &x(0).pow(2) - &x(1).pow(2);
        assert!(h.laplacian().is_zero());
        assert!((&x(0) * &x(1)).laplacian().is_zero());
        assert_eq!(x(0).pow(2).laplacian(), SparsePoly::constant(2, q(2, 1)));
    }

    #[test]
    fn serializes_in_canonical_order() {
        let p = &(&x(1) + &x(0).pow(2)) - &SparsePoly::one(2);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"{"d":2,"terms":[{"exp":[2,0],"coef":"1"},{"exp":[0,1],"coef":"1"},{"exp":[0,0],"coef":"-1"}]}"#
        );
    }
}
