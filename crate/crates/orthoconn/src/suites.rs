//! Verification suites shared by the command line and the acceptance target.
//!
//! Random parameters come from [`Sampler`], a ChaCha8 stream seeded with a
//! `u64`, so a fixed seed always checks the same cases.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use num_traits::Zero;
use rand_chacha::ChaCha8Rng;

use crate::ball_sphere::ball::ball_basis_all;
use crate::ball_sphere::disk::verify_disk_polar;
use crate::ball_sphere::sphere::{parity_vectors, sphere_basis_all};
use crate::ball_sphere::{
    example_910_check, sphere_dimension, verify_ball_blocks, verify_ball_equivalence, verify_ball_orthogonality,
    verify_sphere_basis, BallKappa,
};
use crate::closed_forms::general::{cc_cyclic, CyclicForm};
use crate::closed_forms::{verify_closed_against, verify_sum_identity};
use crate::connection::{gram_connection, verify_convolution, verify_inverse_pair, verify_orthogonality};
use crate::discrete::krawtchouk::hat_rho_total_identity;
use crate::discrete::*;
use crate::error::Result;
use crate::exact_arith::{binomial, Scalar};
use crate::racah::{
    verify_bridge_1d, verify_conjugation, verify_duality, verify_orthogonality_multi, whipple_sides, RacahParamsMulti,
};
use crate::report::Report;
use crate::simplex_jacobi::{enumerate_basis, Permutation};
use crate::{ConnMatrixQ, Kappa, Rational};

/// Deterministic parameter source.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// `p/q` with `q` uniform in `1..=den_max` and `p` uniform in `lo*q..=hi*q`.
    pub fn rational(&mut self, lo: i64, hi: i64, den_max: i64) -> Rational {
        let q = self.rng.gen_range(1..=den_max);
        let p = self.rng.gen_range(lo * q..=hi * q);
        Rational::from_frac(p, q)
    }

    /// A Jacobi parameter in `(-1, 3]` with denominator at most 6.
    pub fn kappa_entry(&mut self) -> Rational {
        let q = self.rng.gen_range(1..=6);
        let p = self.rng.gen_range(1 - q..=3 * q);
        Rational::from_frac(p, q)
    }

    pub fn kappa(&mut self, len: usize) -> Kappa {
        Kappa::new((0..len).map(|_| self.kappa_entry()).collect()).expect("entries exceed -1")
    }

    pub fn permutation(&mut self, m: usize) -> Permutation {
        let mut img: Vec<usize> = (0..m).collect();
        img.shuffle(&mut self.rng);
        Permutation::from_images(img).expect("shuffled identity")
    }
}

/// One-line names of the acceptance criteria, in order.
pub const CRITERIA: [&str; 10] = [
    "closed forms vs Gram, two variables",
    "closed forms vs Gram, three variables",
    "cyclic closed forms, four and five variables",
    "orthogonality, inverse and convolution identities",
    "Racah polynomials",
    "summation identity",
    "Hahn polynomials",
    "Krawtchouk polynomials",
    "ball and sphere bases",
    "dimension counts",
];

fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

fn kappa(v: &[(i64, i64)]) -> Kappa {
    Kappa::new(v.iter().map(|&(a, b)| q(a, b)).collect()).expect("valid sample")
}

/// Closed forms against Gram for every `tau` in `S_{d+1}` and `n <= n_max`;
/// the Gram matrices are appended to `sink`.
pub fn closed_vs_gram_suite(d: usize, kappas: &[Kappa], n_max: usize, sink: &mut Vec<ConnMatrixQ>) -> Result<Report> {
    let mut rep = Report::new(format!("closed forms vs Gram d={d}"));
    for k in kappas {
        for tau in Permutation::all(d + 1) {
            for n in 0..=n_max {
                let g = gram_connection(&tau, k, n)?.normalize();
                rep.absorb(verify_closed_against(&g)?);
                sink.push(g);
            }
        }
    }
    Ok(rep)
}

/// The three cyclic forms agree with each other and with Gram.
pub fn cyclic_suite(k: &Kappa, n_max: usize, sink: &mut Vec<ConnMatrixQ>) -> Result<Report> {
    let d = k.d();
    let mut rep = Report::new(format!("cyclic forms d={d}"));
    let tau = Permutation::cycle_prefix(d + 1, d);
    for n in 0..=n_max {
        let g = gram_connection(&tau, k, n)?.normalize();
        let gh = g.normalized_entries();
        for (a, nu) in g.order.iter().enumerate() {
            for (b, mu) in g.order.iter().enumerate() {
                let first = cc_cyclic(CyclicForm::MuDegree, nu, mu, k.values())?;
                for form in [CyclicForm::NuDegree, CyclicForm::Conjugate] {
                    let v = cc_cyclic(form, nu, mu, k.values())?;
                    rep.check(v == first, || format!("n={n} {nu:?},{mu:?}: {form:?} {v} != {first}"));
                }
                rep.check(first == gh[a][b], || format!("n={n} {nu:?},{mu:?}: {first} != gram {}", gh[a][b]));
            }
        }
        sink.push(g);
    }
    Ok(rep)
}

/// Unnormalized orthogonality and the inverse relation for every matrix,
/// then the convolution identity on `pairs` random `(tau_1, tau_2)`.
pub fn structural_suite(matrices: &[ConnMatrixQ], pairs: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("structural identities");
    for m in matrices {
        rep.absorb(verify_orthogonality(m));
        let inv = gram_connection(&m.tau.inverse(), &m.tau_kappa(), m.n)?;
        rep.absorb(verify_inverse_pair(m, &inv));
    }
    let mut s = Sampler::new(seed);
    for i in 0..pairs {
        let d = 2 + i % 2;
        let k = s.kappa(d + 1);
        let (t1, t2) = (s.permutation(d + 1), s.permutation(d + 1));
        let n = 1 + s.below(3);
        rep.absorb(verify_convolution(&k, &t1, &t2, n)?);
    }
    Ok(rep)
}

/// Multivariable orthogonality, duality, the second family, Whipple on
/// `whipple_cases` random balanced tuples, and the one-variable bridge.
pub fn racah_suite(whipple_cases: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("Racah");
    let samples = [
        vec![q(1, 2), q(7, 3), q(5, 2), q(9, 2)],
        vec![q(1, 3), q(3, 2), q(5, 2), q(13, 4), q(6, 1)],
    ];
    for beta in &samples {
        for big in 1..=5 {
            let p = RacahParamsMulti::new(beta.clone(), big)?;
            rep.absorb(verify_orthogonality_multi(&p)?);
            rep.absorb(verify_duality(&p)?);
            rep.absorb(verify_conjugation(&p)?);
        }
    }
    let mut s = Sampler::new(seed);
    for _ in 0..whipple_cases {
        let m = s.below(7);
        let [x, y, z, u, v] = std::array::from_fn(|_| s.rational(-3, 3, 7));
        let w = q(1, 1) - Rational::from_usize(m) + x.clone() + y.clone() + z.clone() - u.clone() - v.clone();
        let (l, r) = whipple_sides(m, [&x, &y, &z], [&u, &v, &w])?;
        rep.check(l == r, || format!("Whipple m={m} X={x} Y={y} Z={z} U={u} V={v}: {l} != {r}"));
    }
    for (beta, big) in [([q(1, 2), q(3, 1), q(11, 2)], 4), ([q(1, 3), q(2, 1), q(17, 5)], 5)] {
        rep.absorb(verify_bridge_1d(&beta, big)?);
    }
    Ok(rep)
}

pub fn sum_identity_suite(n_max: usize) -> Result<Report> {
    let mut rep = Report::new("summation identity");
    for k in [[q(1, 2), q(1, 3), q(1, 4)], [q(1, 5), q(3, 2), q(1, 5)]] {
        for n in 0..=n_max {
            rep.absorb(verify_sum_identity(&k, n)?);
        }
    }
    Ok(rep)
}

/// Generating function, lattice orthogonality, the norm relation and the
/// level-independent connection bridge.
pub fn hahn_suite() -> Result<Report> {
    let mut rep = Report::new("Hahn");
    let ks = [(1, 2), (1, 3), (1, 4), (2, 5)];
    for d in 1..=3 {
        let k = kappa(&ks[..d + 1]);
        for big in 1..=6 {
            let ctx = HahnContext::new(k.clone(), big)?;
            rep.absorb(verify_hahn_generating(&ctx, big.min(4))?);
            rep.absorb(verify_hahn_orthogonality(&ctx, big.min(4))?);
            for n in 0..=big.min(4) {
                for nu in enumerate_basis(n, d) {
                    rep.absorb(verify_b_a(&nu, &ctx)?);
                }
            }
        }
    }
    for d in 2..=3 {
        let k = kappa(&ks[..d + 1]);
        for tau in Permutation::all(d + 1) {
            for n in 1..=2 {
                rep.absorb(verify_hahn_connection(&tau, &k, n, &[n, n + 1, n + 2])?);
            }
        }
    }
    Ok(rep)
}

/// Orthogonality with `C_nu`, duality, the cyclic formulas against discrete
/// Gram, and the ratio test for the Hahn limit on `limit_cases` cases.
pub fn kraw_suite(limit_cases: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("Krawtchouk");
    let rhos = [vec![q(1, 3)], vec![q(1, 5), q(1, 3)], vec![q(1, 7), q(1, 5), q(1, 4)]];
    for rho in &rhos {
        for big in 1..=6 {
            let ctx = KrawContext::new(rho.clone(), big)?;
            rep.absorb(verify_kraw_orthogonality(&ctx)?);
            rep.absorb(verify_kraw_duality(&ctx)?);
        }
    }
    for rho in [vec![q(1, 4), q(1, 4)], rhos[1].clone(), rhos[2].clone()] {
        let d = rho.len();
        rep.check(hat_rho_total_identity(&rho), || format!("1-|rho-hat| identity fails for {rho:?}"));
        let tau = Permutation::cycle_prefix(d + 1, d);
        for n in 0..=4 {
            let ctx = KrawContext::new(rho.clone(), n + 2)?;
            let (_, hat) = kraw_connection_gram(&tau, &ctx, n)?;
            let order = enumerate_basis(n, d);
            for (a, nu) in order.iter().enumerate() {
                for (b, mu) in order.iter().enumerate() {
                    for form in [KrawCyclicForm::Hat, KrawCyclicForm::Tilde] {
                        let v = kraw_cc_cyclic(form, nu, mu, &rho)?;
                        rep.check(v == hat[a][b], || format!("{form:?} {nu:?},{mu:?}: {v} != gram {}", hat[a][b]));
                    }
                }
            }
        }
    }
    let ts = [q(1000, 1), q(10000, 1), q(100000, 1)];
    let mut s = Sampler::new(seed);
    for i in 0..limit_cases {
        let d = 1 + i % 2;
        let rho: Vec<Rational> = (0..d).map(|_| Rational::from_frac(1, 3 + s.below(4) as i64)).collect();
        let big = 2 + s.below(3);
        let x: Vec<usize> = kraw_points(d, big).choose(&mut s.rng).cloned().unwrap_or_default();
        let n = 1 + s.below(big);
        let nus = enumerate_basis(n, d);
        let nu = nus[s.below(nus.len())].clone();
        rep.absorb(hahn_to_kraw_limit_check(&nu, &x, &rho, big, &ts)?);
    }
    let tau = Permutation::parse("(12)", 3)?;
    rep.absorb(connection_limit_check(&tau, &[1, 1], &[2, 0], &[q(1, 4), q(1, 3)], &ts)?);
    Ok(rep)
}

/// Parity blocks, proportionality of the Gegenbauer and polar forms, block
/// equality with simplex matrices, sphere bases and the spherical harmonics on `S^2`.
pub fn ball_suite(n_max: usize) -> Result<Report> {
    let mut rep = Report::new("ball and sphere");
    let ks = [(1, 2), (-1, 3), (2, 3), (1, 4)];
    for d in 1..=3 {
        let k = BallKappa::new(ks[..d + 1].iter().map(|&(a, b)| q(a, b)).collect())?;
        for n in 0..=n_max.min(if d == 3 { 4 } else { n_max }) {
            rep.absorb(verify_ball_orthogonality(&k, n)?);
        }
        for n in 0..=n_max {
            for a in enumerate_basis(n, d) {
                let (c, r) = verify_ball_equivalence(&a, &k)?;
                rep.absorb(r);
                rep.check(!c.is_zero(), || format!("alpha={a:?}: zero constant"));
            }
        }
        for tau in Permutation::all(d) {
            for n in 0..=n_max.min(4) {
                rep.absorb(verify_ball_blocks(&tau, &k, n)?);
            }
        }
    }
    for mu in [q(1, 2), q(0, 1), q(-1, 3)] {
        for n in 0..=n_max {
            rep.absorb(verify_disk_polar(n, &mu)?.1);
        }
    }
    let sk = kappa(&[(1, 2), (-1, 3), (1, 4)]);
    for n in 0..=n_max.min(4) {
        rep.absorb(verify_sphere_basis(&sk, n)?);
    }
    for n in 0..=3 {
        rep.absorb(example_910_check(n)?);
    }
    Ok(rep)
}

/// Basis sizes against binomial counts, parity-class sums on the ball, and
/// sphere bases against `dim H_n^{d+1}`.
pub fn dimension_suite() -> Result<Report> {
    let mut rep = Report::new("dimensions");
    for d in 1..=6 {
        for n in 0..=8 {
            let e = binomial::<Rational>(n + d - 1, n);
            let got = Rational::from_usize(enumerate_basis(n, d).len());
            rep.check(got == e, || format!("d={d} n={n}: {got} != {e}"));
        }
    }
    for d in 1..=4 {
        let k = BallKappa::new(vec![q(0, 1); d + 1])?;
        let sk = Kappa::new(vec![q(0, 1); d + 1])?;
        for n in 0..=6 {
            let total = enumerate_basis(n, d).len();
            let classes: usize = parity_vectors(d)
                .iter()
                .filter_map(|e| crate::ball_sphere::ball::parity_level(n, e).ok())
                .map(|m| enumerate_basis(m, d).len())
                .sum();
            rep.check(classes == total, || format!("ball d={d} n={n}: classes {classes} != {total}"));
            let ball = ball_basis_all(n, &k)?.len();
            rep.check(ball == total, || format!("ball d={d} n={n}: {ball} elements != {total}"));
            let sphere = sphere_basis_all(n, &sk)?.len();
            let dim = sphere_dimension(n, d + 1);
            rep.check(sphere == dim, || format!("sphere vars={} n={n}: {sphere} != {dim}", d + 1));
            let harmonic = enumerate_basis(n, d + 1).len() - if n >= 2 { enumerate_basis(n - 2, d + 1).len() } else { 0 };
            rep.check(dim == harmonic, || format!("sphere vars={} n={n}: {dim} != {harmonic}", d + 1));
        }
    }
    Ok(rep)
}

/// Runs acceptance criterion `k` (1-based). Criterion 4 consumes the matrices
/// produced by criteria 1 to 3 through `matrices`, or builds them itself when
/// it is empty.
pub fn acceptance(k: usize, seed: u64, matrices: &mut Vec<ConnMatrixQ>) -> Result<Report> {
    let mut rep = match k {
        1 => closed_vs_gram_suite(
            2,
            &[kappa(&[(0, 1), (0, 1), (0, 1)]), kappa(&[(1, 2), (1, 3), (1, 4)]), kappa(&[(2, 1), (-1, 2), (3, 5)])],
            6,
            matrices,
        )?,
        2 => closed_vs_gram_suite(3, &[kappa(&[(1, 2), (1, 3), (1, 4), (1, 5)]), kappa(&[(2, 1), (0, 1), (-1, 2), (3, 4)])], 4, matrices)?,
        3 => {
            let mut r = Report::new("cyclic forms");
            r.absorb(cyclic_suite(&kappa(&[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]), 3, matrices)?);
            r.absorb(cyclic_suite(&kappa(&[(1, 2), (0, 1), (2, 3), (-1, 4), (1, 1), (1, 7)]), 3, matrices)?);
            r
        }
        4 => {
            if matrices.is_empty() {
                for c in 1..=3 {
                    acceptance(c, seed, matrices)?;
                }
            }
            structural_suite(matrices, 20, seed)?
        }
        5 => racah_suite(100, seed)?,
        6 => sum_identity_suite(6)?,
        7 => hahn_suite()?,
        8 => kraw_suite(10, seed)?,
        9 => ball_suite(5)?,
        10 => dimension_suite()?,
        _ => return Err(crate::Error::InvalidParameter(format!("no acceptance criterion {k}"))),
    };
    rep.name = format!("{k}. {}", CRITERIA[k - 1]);
    Ok(rep)
}
