use orthoconn::discrete::hahn::hahn_weight;
use orthoconn::discrete::krawtchouk::{hat_rho_total_identity, tau_rho};
use orthoconn::discrete::*;
use orthoconn::{Kappa, Permutation, Rational, Scalar};

fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

fn kappa(v: &[(i64, i64)]) -> Kappa {
    Kappa::new(v.iter().map(|&(a, b)| q(a, b)).collect()).unwrap()
}

fn ok(rep: orthoconn::Report) {
    assert!(rep.passed(), "{}: {:?}", rep.summary(), &rep.failures[..rep.failures.len().min(5)]);
}

#[test]
fn hahn_1d_basics_and_orthogonality() {
    let (a, b, big) = (q(1, 2), q(2, 3), 5);
    for x in 0..=big {
        assert_eq!(hahn_1d(0, x, &a, &b, big).unwrap(), q(1, 1));
    }
    for n in 0..=big {
        assert_eq!(hahn_1d(n, 0, &a, &b, big).unwrap(), q(1, 1));
    }
    // weight (a+1)_x (b+1)_{N-x} / (x! (N-x)!)
    let k = Kappa::new(vec![a.clone(), b.clone()]).unwrap();
    for n in 0..=big {
        for m in 0..n {
            let s = (0..=big).fold(q(0, 1), |acc, x| {
                acc + hahn_1d(n, x, &a, &b, big).unwrap()
                    * hahn_1d(m, x, &a, &b, big).unwrap()
                    * hahn_weight(&[x, big - x], &k)
            });
            assert_eq!(s, q(0, 1), "n={n} m={m}");
        }
    }
}

#[test]
fn generating_function_small_case() {
    let ctx = HahnContext::new(kappa(&[(0, 1), (0, 1)]), 2).unwrap();
    let g = hahn_from_generating(&[1], &ctx).unwrap();
    assert_eq!(g.len(), 3);
    for (al, v) in g {
        assert_eq!(v, hahn_multi(&[1], &al, &ctx).unwrap());
    }
    let g0 = hahn_from_generating(&[0, 0], &HahnContext::new(kappa(&[(1, 2), (1, 3), (1, 4)]), 4).unwrap()).unwrap();
    assert!(g0.values().all(|v| *v == q(1, 1)));
}

#[test]
fn generating_function_matches_product() {
    ok(verify_hahn_generating(&HahnContext::new(kappa(&[(1, 2), (1, 3), (1, 4)]), 5).unwrap(), 3).unwrap());
    ok(verify_hahn_generating(&HahnContext::new(kappa(&[(1, 2), (1, 3), (1, 4), (1, 5)]), 4).unwrap(), 2).unwrap());
}

#[test]
fn hahn_orthogonality_and_norms() {
    let ctx = HahnContext::new(kappa(&[(1, 2), (1, 3), (1, 4)]), 6).unwrap();
    ok(verify_hahn_orthogonality(&ctx, 4).unwrap());
    for n in 0..=4 {
        for nu in orthoconn::simplex_jacobi::enumerate_basis(n, 2) {
            ok(verify_b_a(&nu, &ctx).unwrap());
        }
    }
}

#[test]
fn hahn_connection_independent_of_level() {
    let k = kappa(&[(1, 2), (1, 3), (1, 4)]);
    for s in ["(12)", "(13)", "(23)", "(123)"] {
        let tau = Permutation::parse(s, 3).unwrap();
        for n in 1..=2 {
            ok(verify_hahn_connection(&tau, &k, n, &[n + 1, n + 2, n + 3]).unwrap());
        }
    }
    let k0 = kappa(&[(0, 1), (0, 1), (0, 1)]);
    let tau = Permutation::parse("(12)", 3).unwrap();
    ok(verify_hahn_connection(&tau, &k0, 1, &[3, 4]).unwrap());
}

#[test]
fn hahn_connection_for_23_is_signed_delta() {
    let k = kappa(&[(1, 2), (1, 3), (1, 4)]);
    let tau = Permutation::parse("(23)", 3).unwrap();
    let tk = k.permuted(&tau);
    for nu in orthoconn::simplex_jacobi::enumerate_basis(3, 2) {
        for mu in orthoconn::simplex_jacobi::enumerate_basis(3, 2) {
            let h = hahn_connection(&tau, &nu, &mu, &k).unwrap();
            let e = if nu == mu {
                let s = if nu[1] % 2 == 0 { q(1, 1) } else { q(-1, 1) };
                s * p_nu(&mu, &k) / p_nu(&nu, &tk)
            } else {
                q(0, 1)
            };
            assert_eq!(h, e);
        }
    }
}

#[test]
fn krawtchouk_1d_examples() {
    let (p, big) = (q(1, 3), 6);
    for x in 0..=big {
        assert_eq!(krawtchouk_1d(0, x, &p, big).unwrap(), q(1, 1));
        assert_eq!(krawtchouk_1d(1, x, &p, big).unwrap(), q(1, 1) - Rational::from_usize(x) / (q(6, 1) * p.clone()));
    }
    let ctx = KrawContext::new(vec![p.clone()], big).unwrap();
    for n in 0..=big {
        for m in 0..=big {
            let s = (0..=big).fold(q(0, 1), |acc, x| {
                acc + krawtchouk_1d(n, x, &p, big).unwrap() * krawtchouk_1d(m, x, &p, big).unwrap() * kraw_weight(&[x], &ctx)
            });
            let e = if n == m {
                orthoconn::exact_arith::factorial::<Rational>(n) * orthoconn::exact_arith::factorial::<Rational>(big - n)
                    * num_traits::pow(q(2, 3), n)
                    / (orthoconn::exact_arith::factorial::<Rational>(big) * num_traits::pow(p.clone(), n))
            } else {
                q(0, 1)
            };
            assert_eq!(s, e, "n={n} m={m}");
        }
    }
}

#[test]
fn krawtchouk_orthogonality() {
    ok(verify_kraw_orthogonality(&KrawContext::new(vec![q(1, 4), q(1, 4)], 5).unwrap()).unwrap());
    ok(verify_kraw_orthogonality(&KrawContext::new(vec![q(1, 5), q(1, 3)], 6).unwrap()).unwrap());
    ok(verify_kraw_orthogonality(&KrawContext::new(vec![q(1, 7), q(1, 5), q(1, 4)], 4).unwrap()).unwrap());
}

#[test]
fn krawtchouk_duality() {
    let (_, _, rt) = kraw_dual_map(&[0, 0], &[0, 0], &[q(1, 4), q(1, 4)]);
    assert_eq!(rt, vec![q(1, 3), q(1, 6)]);
    ok(verify_kraw_duality(&KrawContext::new(vec![q(1, 4), q(1, 4)], 4).unwrap()).unwrap());
    ok(verify_kraw_duality(&KrawContext::new(vec![q(1, 7), q(1, 5), q(1, 4)], 3).unwrap()).unwrap());
}

#[test]
fn krawtchouk_cyclic_matches_gram() {
    for (rho, nmax) in [(vec![q(1, 4), q(1, 4)], 4), (vec![q(1, 5), q(1, 3)], 3), (vec![q(1, 7), q(1, 5), q(1, 4)], 3)] {
        let d = rho.len();
        assert!(hat_rho_total_identity(&rho));
        let tau = Permutation::cycle_prefix(d + 1, d);
        for n in 0..=nmax {
            let ctx = KrawContext::new(rho.clone(), n + 2).unwrap();
            let (_, hat) = kraw_connection_gram(&tau, &ctx, n).unwrap();
            let order = orthoconn::simplex_jacobi::enumerate_basis(n, d);
            for (a, nu) in order.iter().enumerate() {
                for (b, mu) in order.iter().enumerate() {
                    for form in [KrawCyclicForm::Hat, KrawCyclicForm::Tilde] {
                        assert_eq!(kraw_cc_cyclic(form, nu, mu, &rho).unwrap(), hat[a][b], "{form:?} {nu:?} {mu:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn krawtchouk_connection_independent_of_level() {
    let rho = vec![q(1, 5), q(1, 3)];
    let tau = Permutation::parse("(13)", 3).unwrap();
    let a = kraw_connection_gram(&tau, &KrawContext::new(rho.clone(), 3).unwrap(), 2).unwrap().0;
    let b = kraw_connection_gram(&tau, &KrawContext::new(rho.clone(), 5).unwrap(), 2).unwrap().0;
    assert_eq!(a, b);
    assert_eq!(tau_rho(&tau, &rho), vec![q(7, 15), q(1, 3)]);
}

#[test]
fn hahn_to_krawtchouk_limits() {
    let ts = [q(1000, 1), q(10000, 1), q(100000, 1)];
    ok(hahn_to_kraw_limit_check(&[0], &[1], &[q(1, 3)], 3, &ts).unwrap());
    ok(hahn_to_kraw_limit_check(&[1], &[1], &[q(1, 3)], 3, &ts).unwrap());
    ok(hahn_to_kraw_limit_check(&[1, 1], &[1, 2], &[q(1, 4), q(1, 3)], 4, &ts).unwrap());
    let tau = Permutation::parse("(12)", 3).unwrap();
    ok(connection_limit_check(&tau, &[1, 1], &[2, 0], &[q(1, 4), q(1, 3)], &ts).unwrap());
}
