//! Polar basis on the disk and its identification with parity images.

use serde::{Deserialize, Serialize};

use super::ball::{ball_inner_product_poly, BallKappa};
use super::ParityPoly;
use crate::error::{Error, Result};
use crate::exact_arith::Scalar;
use crate::multipoly::{substitute_homogeneous, SparsePoly};
use crate::report::Report;
use crate::simplex_jacobi::{jacobi_1d, jacobi_simplex_basis, permute_vars, KappaParams, Permutation};

/// Which harmonic factor multiplies the radial Jacobi part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolarBranch {
    /// `r^m cos(m theta)`.
    Cos,
    /// `r^m sin(m theta)`.
    Sin,
}

/// Real and imaginary parts of `(x_1 + i x_2)^m`.
pub fn harmonic_parts<S: Scalar>(m: usize) -> (SparsePoly<S>, SparsePoly<S>) {
    let x = SparsePoly::var(2, 0);
    let y = SparsePoly::var(2, 1);
    let mut re = SparsePoly::one(2);
    let mut im = SparsePoly::zero(2);
    for _ in 0..m {
        let r = &(&re * &x) - &(&im * &y);
        im = &(&re * &y) + &(&im * &x);
        re = r;
    }
    (re, im)
}

/// `P_j^{(mu, n-2j)}(2r^2 - 1) r^{n-2j} cos((n-2j) theta)` or the sine variant.
pub fn disk_polar_basis<S: Scalar>(j: usize, branch: PolarBranch, n: usize, mu: &S) -> Result<SparsePoly<S>> {
    if 2 * j > n {
        return Err(Error::InvalidParameter(format!("polar index j={j} exceeds n/2 for n={n}")));
    }
    let m = n - 2 * j;
    if branch == PolarBranch::Sin && m == 0 {
        return Err(Error::InvalidParameter("sine branch vanishes for n = 2j".into()));
    }
    let r2 = &(&SparsePoly::var(2, 0) * &SparsePoly::var(2, 0)) + &(&SparsePoly::var(2, 1) * &SparsePoly::var(2, 1));
    let lin = &r2.scale(&S::from_i64(2)) - &SparsePoly::one(2);
    let radial = substitute_homogeneous(&jacobi_1d(j, mu, &S::from_usize(m))?, &lin, &SparsePoly::one(2))?;
    let (re, im) = harmonic_parts(m);
    Ok(&radial * if branch == PolarBranch::Cos { &re } else { &im })
}

/// Every polar element of degree `n` as `(j, branch)`.
pub fn disk_polar_indices(n: usize) -> Vec<(usize, PolarBranch)> {
    let mut out = Vec::new();
    for j in 0..=n / 2 {
        out.push((j, PolarBranch::Cos));
        if 2 * j < n {
            out.push((j, PolarBranch::Sin));
        }
    }
    out
}

/// Parity image `x^eps [P^{tau(kappa+eps)}_{(N-l, l)}(tau u)]_{u = x^2}` with
/// `tau = (13)`, `kappa = (-1/2, -1/2, mu)` and `N = (n - |eps|)/2`.
pub fn disk_parity_image<S: Scalar>(eps: [usize; 2], l: usize, n: usize, mu: &S) -> Result<SparsePoly<S>> {
    let big = super::ball::parity_level(n, &eps)?;
    if l > big {
        return Err(Error::InvalidParameter(format!("l={l} exceeds {big}")));
    }
    let half = S::from_frac(1, 2);
    let kappa = KappaParams::new(vec![-half.clone(), -half, mu.clone()])?.shifted(&eps);
    let tau = Permutation::parse("(13)", 3)?;
    let core = permute_vars(&jacobi_simplex_basis(&[big - l, l], &kappa.permuted(&tau))?, &tau)?;
    Ok(ParityPoly::new(eps.to_vec(), core)?.expand())
}

/// Each polar element against its parity image, with constants recorded,
/// plus mutual orthogonality under the ball weight with `kappa = (-1/2, -1/2, mu)`.
pub fn verify_disk_polar<S: Scalar>(n: usize, mu: &S) -> Result<(Vec<(usize, PolarBranch, S)>, Report)> {
    let mut rep = Report::new(format!("disk polar n={n} mu={mu}"));
    let mut consts = Vec::new();
    let mut polys = Vec::new();
    for eps in [[0, 0], [1, 0], [0, 1], [1, 1]] {
        let Ok(big) = super::ball::parity_level(n, &eps) else { continue };
        for l in 0..=big {
            let j = big - l;
            let branch = if eps[1] == 0 { PolarBranch::Cos } else { PolarBranch::Sin };
            let polar = disk_polar_basis(j, branch, n, mu)?;
            let image = disk_parity_image(eps, l, n, mu)?;
            match polar.proportionality(&image) {
                Ok(c) => consts.push((j, branch, c)),
                Err(_) => rep.fail(format!("j={j} {branch:?} eps={eps:?}: not proportional to parity image")),
            }
            polys.push(((j, branch), polar));
        }
    }
    rep.check(polys.len() == n + 1, || format!("{} elements, expected {}", polys.len(), n + 1));
    let half = S::from_frac(1, 2);
    let kappa = BallKappa::new(vec![-half.clone(), -half, mu.clone()])?;
    for (i, (a, p)) in polys.iter().enumerate() {
        for (b, q) in polys.iter().skip(i) {
            let v = ball_inner_product_poly(p, q, &kappa);
            if a == b {
                rep.check(!v.is_zero(), || format!("{a:?}: zero norm"));
            } else {
                rep.check(v.is_zero(), || format!("{a:?},{b:?}: {v} != 0"));
            }
        }
    }
    Ok((consts, rep))
}
