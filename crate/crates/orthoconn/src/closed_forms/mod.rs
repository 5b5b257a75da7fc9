//! Closed-form connection coefficients and a dispatcher that falls back to
//! the Gram route where no formula is implemented.
//!
//! A formula yields either the raw coefficient `c^tau_{nu,mu}(kappa)` or the
//! normalized one `c-hat = c sqrt(A_mu(kappa) / A_nu(tau kappa))`. The
//! reductions and sign rules used here hold verbatim for both, so a result
//! carries whichever kind its formula produced.

pub mod general;
pub mod three_d;
pub mod two_d;

use serde::Serialize;

use crate::connection::{gram_connection, ConnMatrix};
use crate::error::{Error, Result};
use crate::exact_arith::{neg_one_pow, sign_of, QSqrt, Scalar};
use crate::report::Report;
use crate::simplex_jacobi::{norm_a, KappaParams, Permutation};

pub use general::{cc_adjacent, cc_cyclic, CyclicForm};
pub use three_d::cc_3d;
pub use two_d::{cc_2d, cc_2d_tau12, d_coeff, verify_sum_identity};

/// Provenance tag used when no formula applies.
pub const NO_CLOSED_FORM: &str = "no closed form implemented";

/// One coefficient from a formula, raw or normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormResult<S> {
    pub raw: Option<S>,
    pub normalized: Option<QSqrt<S>>,
    pub provenance: String,
}

fn kp<S: Scalar>(k: &[S]) -> KappaParams<S> {
    KappaParams::new_unchecked(k.to_vec())
}

impl<S: Scalar> ClosedFormResult<S> {
    pub fn raw(v: S, provenance: &str) -> Self {
        Self { raw: Some(v), normalized: None, provenance: provenance.into() }
    }

    pub fn hat(v: QSqrt<S>, provenance: &str) -> Self {
        Self { raw: None, normalized: Some(v), provenance: provenance.into() }
    }

    pub fn flipped(mut self, flip: bool) -> Self {
        if flip {
            self.raw = self.raw.map(|v| -v);
            self.normalized = self.normalized.map(|q| q.neg());
        }
        self
    }

    pub fn tagged(mut self, outer: &str) -> Self {
        self.provenance = format!("{outer} > {}", self.provenance);
        self
    }

    /// `A_nu(tau kappa) / A_mu(kappa)`, the factor between `c^2` and `c-hat^2`.
    fn norm_ratio(tau: &Permutation, nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<S> {
        let k = kp(kappa);
        let den = norm_a(mu, &k);
        if den.is_zero() {
            return Err(Error::InvalidParameter("vanishing basis norm".into()));
        }
        Ok(norm_a(nu, &k.permuted(tau)) / den)
    }

    /// The raw coefficient; fails if a normalized value has an irrational raw counterpart.
    pub fn raw_value(&self, tau: &Permutation, nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<S> {
        if let Some(v) = &self.raw {
            return Ok(v.clone());
        }
        let q = self.normalized.as_ref().expect("one of raw or normalized is set");
        let sq = q.square() * Self::norm_ratio(tau, nu, mu, kappa)?;
        let r = sq
            .exact_sqrt()
            .ok_or_else(|| Error::InvalidParameter(format!("c^2 = {sq} is not a square in the field")))?;
        Ok(if q.sign() < 0 { -r } else { r })
    }

    pub fn normalized_value(&self, tau: &Permutation, nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<QSqrt<S>> {
        if let Some(q) = &self.normalized {
            return Ok(q.clone());
        }
        let v = self.raw.clone().expect("one of raw or normalized is set");
        let ratio = Self::norm_ratio(tau, nu, mu, kappa)?;
        Ok(QSqrt::new(sign_of(&v), v.clone() * v / ratio))
    }
}

/// Closed-form `c^tau_{nu,mu}(kappa)`, or `None` when no formula covers `tau`.
///
/// Order of attempts: identity, one variable, the full tables for `d = 2, 3`,
/// reduction when `tau` fixes a block of leading or trailing points, the
/// cycle `(1 2 ... d)`, adjacent transpositions, and finally
/// `tau = tau0 (d, d+1)` for a covered `tau0`.
pub fn closed_form_entry<S: Scalar>(
    tau: &Permutation,
    nu: &[usize],
    mu: &[usize],
    kappa: &[S],
) -> Result<Option<ClosedFormResult<S>>> {
    let d = nu.len();
    if kappa.len() != d + 1 || mu.len() != d {
        return Err(Error::DimensionMismatch { expected: d + 1, got: kappa.len() });
    }
    if tau.size() != d + 1 {
        return Err(Error::DimensionMismatch { expected: d + 1, got: tau.size() });
    }
    let n: usize = nu.iter().sum();
    if mu.iter().sum::<usize>() != n {
        return Err(Error::InvalidParameter(format!("{nu:?} and {mu:?} differ in total degree")));
    }
    entry(tau, nu, mu, kappa, true)
}

fn entry<S: Scalar>(
    tau: &Permutation,
    nu: &[usize],
    mu: &[usize],
    kappa: &[S],
    allow_swap: bool,
) -> Result<Option<ClosedFormResult<S>>> {
    let d = nu.len();
    let delta = if nu == mu { S::one() } else { S::zero() };
    if tau.is_identity() {
        return Ok(Some(ClosedFormResult::raw(delta, "identity")));
    }
    if d == 1 {
        return Ok(Some(ClosedFormResult::raw(neg_one_pow::<S>(nu[0]) * delta, "interval reflection")));
    }
    if d == 2 {
        return Ok(Some(ClosedFormResult::raw(cc_2d(tau, nu[1], mu[1], kappa, nu[0] + nu[1])?, "triangle table")));
    }
    if d == 3 {
        return cc_3d(tau, nu, mu, kappa).map(Some);
    }
    if let Some(j) = general::fixed_prefix(tau) {
        return match general::fix_first_reduction(tau, j, nu, mu, kappa) {
            None => Ok(Some(ClosedFormResult::raw(S::zero(), "fix-first reduction"))),
            Some((t, a, b, k)) => Ok(entry(&t, &a, &b, &k, true)?.map(|r| r.tagged("fix-first reduction"))),
        };
    }
    if let Some(k) = general::moved_prefix(tau) {
        return match general::fix_last_reduction(tau, k, nu, mu, kappa) {
            None => Ok(Some(ClosedFormResult::raw(S::zero(), "fix-last reduction"))),
            Some((t, a, b, kh)) => Ok(entry(&t, &a, &b, &kh, true)?.map(|r| r.tagged("fix-last reduction"))),
        };
    }
    if general::is_prefix_cycle(tau) {
        return general::cyclic_result(nu, mu, kappa).map(Some);
    }
    if let Some(j) = general::adjacent_index(tau) {
        return general::adjacent_result(j, nu, mu, kappa).map(Some);
    }
    if allow_swap {
        let tau0 = tau.compose(&Permutation::transposition(d + 1, d - 1, d));
        if let Some(r) = entry(&tau0, nu, mu, kappa, false)? {
            return Ok(Some(r.flipped(nu[d - 1] % 2 == 1).tagged("last-swap sign")));
        }
    }
    Ok(None)
}

/// Connection matrix with per-entry provenance.
#[derive(Debug, Clone, Serialize)]
#[serde(bound = "")]
pub struct ClosedMatrix<S: Scalar> {
    pub matrix: ConnMatrix<S>,
    pub provenance: Vec<Vec<String>>,
    pub used_fallback: bool,
}

/// Whole matrix from closed forms, completed by the Gram route where needed.
pub fn closed_matrix<S: Scalar>(tau: &Permutation, kappa: &KappaParams<S>, n: usize) -> Result<ClosedMatrix<S>> {
    let k = kappa.values();
    let mut gram: Option<ConnMatrix<S>> = None;
    let mut prov: Vec<Vec<String>> = Vec::new();
    let mut hats: Vec<Vec<QSqrt<S>>> = Vec::new();
    let mut used_fallback = false;
    let mut matrix = ConnMatrix::from_fn(tau, kappa, n, |_, _| Ok(S::zero()))?;
    let order = matrix.order.clone();
    for (a, nu) in order.iter().enumerate() {
        prov.push(Vec::new());
        hats.push(Vec::new());
        for (b, mu) in order.iter().enumerate() {
            let (raw, hat, tag) = match closed_form_entry(tau, nu, mu, k)? {
                Some(r) => (r.raw_value(tau, nu, mu, k)?, r.normalized_value(tau, nu, mu, k)?, r.provenance),
                None => {
                    used_fallback = true;
                    if gram.is_none() {
                        gram = Some(gram_connection(tau, kappa, n)?.normalize());
                    }
                    let g = gram.as_ref().unwrap();
                    let q = g.normalized.as_ref().unwrap()[a][b].clone();
                    (g.entries[a][b].clone(), q, NO_CLOSED_FORM.to_string())
                }
            };
            matrix.entries[a][b] = raw;
            hats[a].push(hat);
            prov[a].push(tag);
        }
    }
    matrix.normalized = Some(hats);
    Ok(ClosedMatrix { matrix, provenance: prov, used_fallback })
}

/// Compares every closed-form entry with the Gram oracle: raw values exactly,
/// normalized values in sign and square.
pub fn verify_closed_vs_gram<S: Scalar>(tau: &Permutation, kappa: &KappaParams<S>, n: usize) -> Result<Report> {
    verify_closed_against(&gram_connection(tau, kappa, n)?.normalize())
}

/// Same comparison against an already computed Gram matrix.
pub fn verify_closed_against<S: Scalar>(g: &ConnMatrix<S>) -> Result<Report> {
    let gh = g.normalized_entries();
    let (tau, n) = (&g.tau, g.n);
    let k = g.kappa.values();
    let mut rep = Report::new(format!("closed vs gram tau={tau} n={n}"));
    for (a, nu) in g.order.iter().enumerate() {
        for (b, mu) in g.order.iter().enumerate() {
            let Some(r) = closed_form_entry(tau, nu, mu, k)? else {
                rep.fail(format!("{nu:?},{mu:?}: {NO_CLOSED_FORM}"));
                continue;
            };
            match (&r.raw, &r.normalized) {
                (Some(v), _) => {
                    let e = &g.entries[a][b];
                    rep.check(v == e, || format!("{nu:?},{mu:?} [{}]: {v} != {e}", r.provenance));
                }
                (None, Some(q)) => {
                    let e = &gh[a][b];
                    rep.check(q == e, || format!("{nu:?},{mu:?} [{}]: {q} != {e}", r.provenance));
                }
                _ => unreachable!(),
            }
        }
    }
    Ok(rep)
}
