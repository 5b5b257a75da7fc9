//! Closed forms valid in every dimension: reductions to fewer variables, the
//! cycle `(1 2 ... d)` in three Racah guises, and adjacent transpositions.

use super::ClosedFormResult;
use crate::error::Result;
use crate::exact_arith::{neg_one_pow, QSqrt, Scalar};
use crate::multipoly::{head_sum, tail_sum};
use crate::racah::{racah_orthonormal, racah_second_orthonormal, RacahParams1D, RacahParamsMulti};
use crate::simplex_jacobi::Permutation;

use super::two_d::weighted_racah_1d;

fn total<S: Scalar>(k: &[S]) -> S {
    k.iter().cloned().fold(S::zero(), |a, b| a + b)
}

/// `j` when `tau` fixes exactly the points `1..=j` at the front and `j >= 1`.
pub fn fixed_prefix(tau: &Permutation) -> Option<usize> {
    tau.min_moved().filter(|&j| j > 0)
}

/// `k` when `tau` only moves points among `1..=k` with `k < d`.
pub fn moved_prefix(tau: &Permutation) -> Option<usize> {
    let d = tau.size() - 1;
    tau.max_moved().map(|m| m + 1).filter(|&k| k < d)
}

/// Parameters and indices of the subproblem when `tau` fixes the first `j`
/// points: `kappa^{j+1}`, `nu^{j+1}`, `mu^{j+1}`; `None` if the heads differ.
pub fn fix_first_reduction<S: Scalar>(
    tau: &Permutation,
    j: usize,
    nu: &[usize],
    mu: &[usize],
    kappa: &[S],
) -> Option<(Permutation, Vec<usize>, Vec<usize>, Vec<S>)> {
    if nu[..j] != mu[..j] {
        return None;
    }
    Some((tau.drop_prefix(j), nu[j..].to_vec(), mu[j..].to_vec(), kappa[j..].to_vec()))
}

/// Subproblem when `tau` moves only `1..=k`: dimension `k`, with the tail
/// collapsed into `|kappa^{k+1}| + 2|nu^{k+1}| + d - k`; `None` if tails differ.
pub fn fix_last_reduction<S: Scalar>(
    tau: &Permutation,
    k: usize,
    nu: &[usize],
    mu: &[usize],
    kappa: &[S],
) -> Option<(Permutation, Vec<usize>, Vec<usize>, Vec<S>)> {
    let d = nu.len();
    if nu[k..] != mu[k..] {
        return None;
    }
    let mut kh = kappa[..k].to_vec();
    kh.push(total(&kappa[k..]) + S::from_usize(2 * tail_sum(nu, k + 1) + d - k));
    Some((tau.truncate(k + 1), nu[..k].to_vec(), mu[..k].to_vec(), kh))
}

fn cyclic_sign(nu: &[usize]) -> i8 {
    let d = nu.len();
    if (nu.iter().sum::<usize>() + nu[d - 1]).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Which Racah family represents the cycle `(1 2 ... d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicForm {
    /// Degree `(mu_d, ..., mu_2)` in the variable `(|nu^d|, ..., |nu^2|)`.
    MuDegree,
    /// Degree `(nu_1, ..., nu_{d-1})` in the variable `(|mu_1|, ..., |mu_{d-1}|)`.
    NuDegree,
    /// Second family, degree `(nu_{d-1}, ..., nu_1)` in `(|mu^d|, ..., |mu^2|)`.
    Conjugate,
}

/// Normalized coefficient for `tau = (1 2 ... d)` in `S_{d+1}`, `d >= 2`.
pub fn cc_cyclic<S: Scalar>(form: CyclicForm, nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<QSqrt<S>> {
    let d = nu.len();
    let n: usize = nu.iter().sum();
    let s = cyclic_sign(nu);
    let k0 = kappa[0].clone();
    let v = match form {
        CyclicForm::MuDegree => {
            let beta = (0..=d).map(|j| k0.clone() + total(&kappa[d + 1 - j..]) + S::from_usize(j)).collect();
            let p = RacahParamsMulti::new(beta, n)?;
            let deg: Vec<usize> = (0..d - 1).map(|i| mu[d - 1 - i]).collect();
            let x: Vec<usize> = (0..d - 1).map(|i| tail_sum(nu, d - i)).collect();
            racah_orthonormal(&deg, &x, &p)?
        }
        CyclicForm::NuDegree => {
            let mut beta = vec![k0.clone()];
            beta.extend((1..=d).map(|j| -total(&kappa[j..]) - S::from_usize(2 * n + d - j)));
            let p = RacahParamsMulti::new(beta, n)?;
            let x: Vec<usize> = (1..d).map(|j| head_sum(mu, j)).collect();
            racah_orthonormal(&nu[..d - 1], &x, &p)?
        }
        CyclicForm::Conjugate => {
            let mut beta: Vec<S> = (0..d).map(|j| total(&kappa[d - j..]) + S::from_usize(j)).collect();
            beta.push(-S::from_usize(2 * n) - k0.clone());
            let p = RacahParamsMulti::new(beta, n)?;
            let deg: Vec<usize> = (0..d - 1).map(|i| nu[d - 2 - i]).collect();
            let x: Vec<usize> = (0..d - 1).map(|i| tail_sum(mu, d - i)).collect();
            racah_second_orthonormal(&deg, &x, &p)?
        }
    };
    Ok(v.with_sign_flip(s < 0))
}

/// Normalized coefficient for the adjacent transposition `(j, j+1)`, `1 <= j <= d`.
pub fn cc_adjacent<S: Scalar>(j: usize, nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<QSqrt<S>> {
    let d = nu.len();
    if j == d {
        return Ok(if nu == mu {
            QSqrt::from_value(&neg_one_pow::<S>(nu[d - 1]))
        } else {
            QSqrt::zero()
        });
    }
    if nu[..j - 1] != mu[..j - 1] || nu[j + 1..] != mu[j + 1..] {
        return Ok(QSqrt::zero());
    }
    let (a, b) = (nu[j - 1], nu[j]);
    let big = a + b;
    let p = RacahParams1D::new(
        -S::from_usize(big + 1),
        total(&kappa[j..]) + S::from_usize(tail_sum(nu, j) + tail_sum(nu, j + 2) + d - j),
        total(&kappa[j + 1..]) + S::from_usize(2 * tail_sum(nu, j + 2) + d - j - 1),
        kappa[j - 1].clone(),
        big,
    );
    let s = if (mu[j - 1] + b).is_multiple_of(2) { 1 } else { -1 };
    weighted_racah_1d(s, mu[j], b, &p)
}

/// The cycle `(1 2 ... d)` inside `S_{d+1}`.
pub fn is_prefix_cycle(tau: &Permutation) -> bool {
    let m = tau.size();
    m >= 3 && *tau == Permutation::cycle_prefix(m, m - 1)
}

/// `Some(j)` when `tau = (j, j+1)`, 1-based.
pub fn adjacent_index(tau: &Permutation) -> Option<usize> {
    let lo = tau.min_moved()?;
    (tau.max_moved()? == lo + 1 && *tau == Permutation::transposition(tau.size(), lo, lo + 1)).then_some(lo + 1)
}

pub(super) fn cyclic_result<S: Scalar>(nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<ClosedFormResult<S>> {
    Ok(ClosedFormResult::hat(cc_cyclic(CyclicForm::MuDegree, nu, mu, kappa)?, "cyclic Racah form"))
}

pub(super) fn adjacent_result<S: Scalar>(j: usize, nu: &[usize], mu: &[usize], kappa: &[S]) -> Result<ClosedFormResult<S>> {
    Ok(ClosedFormResult::hat(cc_adjacent(j, nu, mu, kappa)?, "adjacent transposition"))
}
