use orthoconn::ball_sphere::ball::{ball_basis_all, ball_moment, parity_level, q_ball_alpha};
use orthoconn::ball_sphere::disk::{disk_parity_image, disk_polar_indices, harmonic_parts};
use orthoconn::ball_sphere::sphere::{sphere_basis_all, sphere_expand};
use orthoconn::ball_sphere::*;
use orthoconn::exact_arith::pochhammer;
use orthoconn::simplex_jacobi::enumerate_basis;
use orthoconn::{Error, Kappa, Permutation, Poly, QSqrtQ, Rational, Scalar};

fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

fn ball(v: &[(i64, i64)]) -> BallKappa<Rational> {
    BallKappa::new(v.iter().map(|&(a, b)| q(a, b)).collect()).unwrap()
}

fn ok(rep: orthoconn::Report) {
    assert!(rep.passed(), "{}: {:?}", rep.summary(), &rep.failures[..rep.failures.len().min(5)]);
}

#[test]
fn gegenbauer_small_cases() {
    let (lam, mu) = (q(3, 2), q(1, 3));
    let g0 = gegenbauer_gen(0, &lam, &mu).unwrap();
    assert_eq!((g0.parity, g0.coefficients()), (0, vec![q(1, 1)]));
    let g1 = gegenbauer_gen(1, &lam, &mu).unwrap();
    // (lam+mu)/(mu+1/2) t
    assert_eq!(g1.coefficients(), vec![q(0, 1), (lam.clone() + mu.clone()) / (mu.clone() + q(1, 2))]);
    // (lam+mu)/(mu+1/2) P_1^{(lam-1/2, mu-1/2)}(2t^2-1); the t^2 coefficient is twice the slope in s
    let (a, b) = (lam.clone() - q(1, 2), mu.clone() - q(1, 2));
    let pre = (lam.clone() + mu.clone()) / (mu.clone() + q(1, 2));
    let p1 = |s: Rational| (a.clone() + q(1, 1)) + (a.clone() + b.clone() + q(2, 1)) * (s - q(1, 1)) / q(2, 1);
    let g2 = gegenbauer_gen(2, &lam, &mu).unwrap().coefficients();
    let c0 = pre.clone() * p1(q(-1, 1));
    let c2 = pre * (p1(q(1, 1)) - p1(q(-1, 1)));
    assert_eq!(g2, vec![c0, q(0, 1), c2]);
}

#[test]
fn gegenbauer_orthogonality() {
    // normalized moments of |t|^{2mu} (1-t^2)^{lam-1/2}: t^{2k} -> (mu+1/2)_k / (lam+mu+1)_k
    let (lam, mu) = (q(2, 3), q(1, 4));
    let moment = |k: usize| -> Rational {
        if k % 2 == 1 {
            return q(0, 1);
        }
        pochhammer(&(mu.clone() + q(1, 2)), k / 2) / pochhammer(&(lam.clone() + mu.clone() + q(1, 1)), k / 2)
    };
    let polys: Vec<Vec<Rational>> = (0..6).map(|n| gegenbauer_gen(n, &lam, &mu).unwrap().coefficients()).collect();
    for (n, p) in polys.iter().enumerate() {
        for (m, r) in polys.iter().enumerate().take(n) {
            let mut s = q(0, 1);
            for (i, a) in p.iter().enumerate() {
                for (j, b) in r.iter().enumerate() {
                    s += a.clone() * b.clone() * moment(i + j);
                }
            }
            assert_eq!(s, q(0, 1), "n={n} m={m}");
        }
    }
}

#[test]
fn ball_inner_product_basics() {
    let k = ball(&[(1, 2), (0, 1), (1, 3)]);
    let one = ParityPoly::new(vec![0, 0], Poly::one(2)).unwrap();
    assert_eq!(ball_inner_product(&one, &one, &k).unwrap(), q(1, 1));
    assert_eq!(ball_moment(&[0, 0], &k), q(1, 1));
    assert_eq!(ball_moment(&[1, 2], &k), q(0, 1));
    let a = q_ball(&[1, 0], &[1, 0], &k).unwrap();
    let b = q_ball(&[0, 1], &[0, 1], &k).unwrap();
    assert_eq!(ball_inner_product(&a, &b, &k).unwrap(), q(0, 1));
    // factored route against the monomial route for a non-orthogonal pair
    let c = q_ball(&[0, 1], &[1, 0], &k).unwrap();
    let direct = ball_inner_product_poly(&(&a.expand() + &c.expand()), &a.expand(), &k);
    let factored = ball_inner_product(&a, &a, &k).unwrap() + ball_inner_product(&c, &a, &k).unwrap();
    assert_eq!(direct, factored);
}

#[test]
fn ball_counts_and_parity_errors() {
    let k = ball(&[(0, 1), (0, 1), (0, 1)]);
    assert_eq!(ball_basis_all(3, &k).unwrap().len(), 4);
    assert_eq!(q_ball(&[0, 0], &[0, 0], &k).unwrap().expand(), Poly::one(2));
    assert!(matches!(parity_level(3, &[1, 1]), Err(Error::ParityMismatch { .. })));
    for n in 0..=5 {
        let parts: usize = (0..8usize)
            .map(|m| [m & 1, (m >> 1) & 1, (m >> 2) & 1])
            .filter_map(|e| parity_level(n, &e).ok())
            .map(|l| enumerate_basis(l, 3).len())
            .sum();
        assert_eq!(parts, enumerate_basis(n, 3).len(), "n={n}");
    }
}

#[test]
fn ball_orthogonality_grid() {
    let k = ball(&[(1, 2), (-1, 3), (2, 3)]);
    for n in 0..=4 {
        ok(verify_ball_orthogonality(&k, n).unwrap());
    }
    let k3 = ball(&[(0, 1), (1, 2), (-1, 4), (1, 1)]);
    for n in 0..=3 {
        ok(verify_ball_orthogonality(&k3, n).unwrap());
    }
}

#[test]
fn ball_gegenbauer_equivalence() {
    let (c, rep) = verify_ball_equivalence(&[0, 0], &ball(&[(1, 2), (0, 1), (1, 3)])).unwrap();
    ok(rep);
    assert_eq!(c, q(1, 1));
    ok(verify_ball_equivalence(&[2, 1], &ball(&[(0, 1), (0, 1), (0, 1)])).unwrap().1);
    for k in [ball(&[(1, 2), (-1, 3), (2, 3)]), ball(&[(0, 1), (0, 1), (0, 1)])] {
        for n in 0..=4 {
            for a in enumerate_basis(n, 2) {
                let (c, rep) = verify_ball_equivalence(&a, &k).unwrap();
                ok(rep);
                assert_ne!(c, q(0, 1));
            }
        }
    }
    let k3 = ball(&[(0, 1), (1, 2), (-1, 4), (1, 1)]);
    for n in 0..=4 {
        for a in enumerate_basis(n, 3) {
            ok(verify_ball_equivalence(&a, &k3).unwrap().1);
        }
    }
}

#[test]
fn ball_connection_blocks() {
    let k = ball(&[(0, 1), (0, 1), (1, 2)]);
    let t12 = Permutation::parse("(12)", 2).unwrap();
    let id = Permutation::identity(2);
    for n in 0..=3 {
        for a in enumerate_basis(n, 2) {
            for b in enumerate_basis(n, 2) {
                let v = ball_connection(&id, &a, &b, &k).unwrap();
                assert_eq!(v, if a == b { QSqrtQ::one() } else { QSqrtQ::zero() });
            }
        }
    }
    // (12) swaps the parity, so (1,0) couples to (0,1) and not to itself
    assert!(ball_connection(&t12, &[1, 0], &[1, 0], &k).unwrap().is_zero());
    assert_eq!(ball_connection(&t12, &[1, 0], &[0, 1], &k).unwrap(), QSqrtQ::one());
    for n in 0..=4 {
        ok(verify_ball_connection(&t12, &k, n).unwrap());
    }
}

#[test]
fn ball_connection_all_of_s3() {
    let k = ball(&[(1, 2), (0, 1), (-1, 3), (1, 4)]);
    for tau in Permutation::all(3) {
        for n in 0..=3 {
            ok(verify_ball_connection(&tau, &k, n).unwrap());
        }
    }
}

#[test]
fn ball_connection_parity_preserving_block_matches_simplex() {
    // eps fixed by tau: the block is the simplex matrix at kappa + eps
    let k = ball(&[(1, 2), (1, 3), (0, 1)]);
    let t12 = Permutation::parse("(12)", 2).unwrap();
    let g = ball_connection_gram(&t12, &k, 4).unwrap();
    let order = enumerate_basis(4, 2);
    let simplex = orthoconn::connection::gram_connection(
        &Permutation::parse("(12)", 3).unwrap(),
        &k.shifted(&[1, 1]),
        1,
    )
    .unwrap()
    .normalize();
    let hat = simplex.normalized_entries();
    for (i, a) in order.iter().enumerate() {
        for (j, b) in order.iter().enumerate() {
            if a.iter().all(|x| x % 2 == 1) && b.iter().all(|x| x % 2 == 1) {
                let (ia, ib) = (simplex.index_of(&[a[0] / 2, a[1] / 2]).unwrap(), simplex.index_of(&[b[0] / 2, b[1] / 2]).unwrap());
                assert_eq!(g[i][j], hat[ia][ib], "{a:?} {b:?}");
            }
        }
    }
}

#[test]
fn harmonic_parts_are_harmonic() {
    for m in 0..=6 {
        let (re, im) = harmonic_parts::<Rational>(m);
        assert!(re.laplacian().is_zero() && im.laplacian().is_zero(), "m={m}");
        assert_eq!(re.coeff(&[m, 0]), q(1, 1));
    }
}

#[test]
fn disk_polar_against_parity_images() {
    let c = disk_polar_basis(0, PolarBranch::Cos, 0, &q(1, 2)).unwrap();
    assert_eq!(c, Poly::one(2));
    let p = disk_polar_basis(1, PolarBranch::Cos, 2, &q(0, 1)).unwrap();
    let img = disk_parity_image([0, 0], 0, 2, &q(0, 1)).unwrap();
    assert!(p.proportionality(&img).is_ok());
    for n in 0..=5 {
        let (consts, rep) = verify_disk_polar(n, &q(1, 2)).unwrap();
        ok(rep);
        assert_eq!(consts.len(), disk_polar_indices(n).len());
    }
    ok(verify_disk_polar(4, &q(-1, 3)).unwrap().1);
}

#[test]
fn sphere_dimensions_and_trivial_case() {
    assert_eq!(sphere_dimension(0, 3), 1);
    assert_eq!(sphere_dimension(3, 3), 7);
    assert_eq!(sphere_dimension(4, 4), 25);
    let k = Kappa::new(vec![q(1, 2), q(0, 1), q(1, 3)]).unwrap();
    let one = sphere_basis(&[0, 0], &[0, 0, 0], &k, 0).unwrap();
    assert_eq!(sphere_expand(&one, 0).unwrap(), Poly::one(3));
    assert!(matches!(sphere_basis(&[0, 0], &[1, 0, 0], &k, 2), Err(Error::ParityMismatch { .. })));
    for vars in 2..=4 {
        let kk = Kappa::new(vec![q(0, 1); vars]).unwrap();
        for n in 0..=5 {
            assert_eq!(sphere_basis_all(n, &kk).unwrap().len(), sphere_dimension(n, vars));
        }
    }
}

#[test]
fn sphere_orthogonality() {
    let k = Kappa::new(vec![q(1, 2), q(-1, 3), q(1, 4)]).unwrap();
    for n in 0..=4 {
        ok(verify_sphere_basis(&k, n).unwrap());
    }
    let k3 = Kappa::new(vec![q(0, 1), q(1, 2), q(-1, 2), q(1, 1)]).unwrap();
    for n in 0..=3 {
        ok(verify_sphere_basis(&k3, n).unwrap());
    }
    let a = sphere_expand(&sphere_basis(&[1, 0], &[0, 0, 0], &k, 2).unwrap(), 2).unwrap();
    let b = sphere_expand(&sphere_basis(&[0, 0], &[1, 1, 0], &k, 2).unwrap(), 2).unwrap();
    assert_eq!(sphere_inner_product(&a, &b, &k), q(0, 1));
}

#[test]
fn spherical_harmonics_on_s2() {
    for n in 0..=3 {
        ok(example_910_check(n).unwrap());
    }
}

#[test]
fn parity_alpha_degree() {
    let k = ball(&[(0, 1), (0, 1), (0, 1)]);
    for a in enumerate_basis(5, 2) {
        let p = q_ball_alpha(&a, &k).unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.expand().degree(), Some(5));
    }
}

#[test]
fn sphere_connection_matches_gram() {
    let k = Kappa::new(vec![q(1, 2), q(-1, 3), q(1, 4)]).unwrap();
    for tau in Permutation::all(3) {
        for n in 0..=4 {
            ok(verify_sphere_connection(&tau, &k, n).unwrap());
        }
    }
    let k3 = Kappa::new(vec![q(0, 1), q(1, 2), q(-1, 2), q(1, 1)]).unwrap();
    for s in ["(12)", "(14)", "(1234)", "(13)(24)"] {
        ok(verify_sphere_connection(&Permutation::parse(s, 4).unwrap(), &k3, 3).unwrap());
    }
}

#[test]
fn ball_blocks_equal_simplex_matrices() {
    let k = ball(&[(1, 2), (-1, 3), (2, 3), (1, 4)]);
    for tau in Permutation::all(3) {
        for n in 0..=4 {
            ok(verify_ball_blocks(&tau, &k, n).unwrap());
        }
    }
}
