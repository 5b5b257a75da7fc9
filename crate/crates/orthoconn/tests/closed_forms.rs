use orthoconn::closed_forms::general::{cc_adjacent, cc_cyclic, CyclicForm};
use orthoconn::closed_forms::three_d::cc_3d_132;
use orthoconn::closed_forms::two_d::{
    cc_2d_tau12_hat_sigma1, cc_2d_tau12_hat_sigma2, sum_identity_sides, sum_identity_weight_literal,
    verify_edge_restrictions,
};
use orthoconn::closed_forms::{closed_matrix, verify_closed_vs_gram, verify_sum_identity, NO_CLOSED_FORM};
use orthoconn::connection::gram_connection;
use orthoconn::{Kappa, Permutation, Rational, Scalar};

fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

fn kappa(v: &[(i64, i64)]) -> Kappa {
    Kappa::new(v.iter().map(|&(a, b)| q(a, b)).collect()).unwrap()
}

fn assert_matches_gram(tau: &Permutation, k: &Kappa, n: usize) {
    let rep = verify_closed_vs_gram(tau, k, n).unwrap();
    assert!(rep.passed(), "{}: {:?}", rep.summary(), &rep.failures[..rep.failures.len().min(5)]);
}

#[test]
fn triangle_table_matches_gram() {
    for k in [kappa(&[(1, 2), (1, 3), (1, 4)]), kappa(&[(0, 1), (2, 1), (-1, 2)])] {
        for tau in Permutation::all(3) {
            for n in 0..=4 {
                assert_matches_gram(&tau, &k, n);
            }
        }
    }
}

#[test]
fn triangle_racah_forms_agree_with_normalized_gram() {
    let k = kappa(&[(1, 2), (1, 3), (1, 4)]);
    let tau = Permutation::parse("(12)", 3).unwrap();
    for n in 0..=4 {
        let g = gram_connection(&tau, &k, n).unwrap().normalize();
        let gh = g.normalized.as_ref().unwrap();
        for (a, nu) in g.order.iter().enumerate() {
            for (b, mu) in g.order.iter().enumerate() {
                let (j, m) = (nu[1], mu[1]);
                assert_eq!(cc_2d_tau12_hat_sigma1(j, m, k.values(), n).unwrap(), gh[a][b], "sigma1 {nu:?} {mu:?}");
                assert_eq!(cc_2d_tau12_hat_sigma2(j, m, k.values(), n).unwrap(), gh[a][b], "sigma2 {nu:?} {mu:?}");
            }
        }
    }
}

#[test]
fn edge_restrictions_hold() {
    for k in [kappa(&[(1, 2), (1, 3), (1, 4)]), kappa(&[(3, 1), (0, 1), (2, 5)])] {
        for n in 0..=4 {
            let rep = verify_edge_restrictions(&k, n).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures);
        }
    }
}

#[test]
fn summation_identity_holds_with_corrected_weight() {
    for k in [[q(1, 2), q(1, 3), q(1, 4)], [q(2, 1), q(0, 1), q(-1, 3)], [q(1, 5), q(3, 2), q(1, 5)]] {
        for n in 0..=4 {
            let rep = verify_sum_identity(&k, n).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures);
        }
    }
}

#[test]
fn literal_weight_reading_fails_unless_k1_equals_k3() {
    let k = [q(1, 2), q(1, 3), q(1, 4)];
    let (a, b) = sum_identity_sides(&k, 2, 1, 1, |x| sum_identity_weight_literal(x, &k, 2)).unwrap();
    assert_ne!(a, b);
    let k = [q(1, 5), q(3, 2), q(1, 5)];
    for (kk, l) in [(0, 1), (1, 1), (2, 0)] {
        let (a, b) = sum_identity_sides(&k, 2, kk, l, |x| sum_identity_weight_literal(x, &k, 2)).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn tetrahedron_all_24_match_gram() {
    let k = kappa(&[(1, 2), (1, 3), (1, 4), (1, 5)]);
    for tau in Permutation::all(4) {
        for n in 0..=3 {
            assert_matches_gram(&tau, &k, n);
        }
    }
}

#[test]
fn tetrahedron_second_kappa() {
    let k = kappa(&[(2, 1), (0, 1), (-1, 2), (3, 4)]);
    for tau in Permutation::all(4) {
        assert_matches_gram(&tau, &k, 2);
    }
}

#[test]
fn swap_companion_of_132_keeps_index_order() {
    let k = kappa(&[(1, 2), (1, 3), (1, 4), (1, 5)]);
    let tau = Permutation::parse("(1342)", 4).unwrap();
    let n = 2;
    let g = gram_connection(&tau, &k, n).unwrap().normalize();
    let gh = g.normalized.as_ref().unwrap();
    let mut swapped_ok = true;
    for (a, nu) in g.order.iter().enumerate() {
        for (b, mu) in g.order.iter().enumerate() {
            let flip = nu[2] % 2 == 1;
            let same = cc_3d_132(nu, mu, k.values()).unwrap().with_sign_flip(flip);
            assert_eq!(same, gh[a][b]);
            swapped_ok &= cc_3d_132(mu, nu, k.values()).unwrap().with_sign_flip(flip) == gh[a][b];
        }
    }
    assert!(!swapped_ok, "the index-swapped reading should not reproduce the matrix");
}

#[test]
fn cyclic_forms_match_gram() {
    let ks = [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)];
    for d in 2..=4 {
        let k = kappa(&ks[..d + 1]);
        let tau = Permutation::cycle_prefix(d + 1, d);
        for n in 0..=(if d == 4 { 2 } else { 3 }) {
            let g = gram_connection(&tau, &k, n).unwrap().normalize();
            let gh = g.normalized.as_ref().unwrap();
            for form in [CyclicForm::MuDegree, CyclicForm::NuDegree, CyclicForm::Conjugate] {
                for (a, nu) in g.order.iter().enumerate() {
                    for (b, mu) in g.order.iter().enumerate() {
                        let v = cc_cyclic(form, nu, mu, k.values()).unwrap();
                        assert_eq!(v, gh[a][b], "d={d} n={n} {form:?} {nu:?} {mu:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn adjacent_transpositions_match_gram() {
    let ks = [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)];
    for d in 2..=4 {
        let k = kappa(&ks[..d + 1]);
        for j in 1..=d {
            let tau = Permutation::transposition(d + 1, j - 1, j);
            for n in 0..=(if d == 4 { 2 } else { 3 }) {
                let g = gram_connection(&tau, &k, n).unwrap().normalize();
                let gh = g.normalized.as_ref().unwrap();
                for (a, nu) in g.order.iter().enumerate() {
                    for (b, mu) in g.order.iter().enumerate() {
                        assert_eq!(cc_adjacent(j, nu, mu, k.values()).unwrap(), gh[a][b], "d={d} j={j} {nu:?} {mu:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn four_variables_closed_where_covered() {
    let k = kappa(&[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]);
    let mut fallback = 0;
    for tau in Permutation::all(5) {
        let cm = closed_matrix(&tau, &k, 2).unwrap();
        let g = gram_connection(&tau, &k, 2).unwrap();
        assert_eq!(cm.matrix.entries, g.entries, "tau={tau}");
        if cm.used_fallback {
            fallback += 1;
            assert!(cm.provenance.iter().flatten().any(|p| p == NO_CLOSED_FORM));
        } else {
            assert_matches_gram(&tau, &k, 2);
        }
    }
    assert!(fallback < 120);
    eprintln!("d=4: {fallback} of 120 permutations use the Gram fallback");
}

#[test]
fn cyclic_form_with_a_zero_racah_parameter() {
    // (1243) reduces to (123) at (34) kappa, where beta_1 = k1 + k3 + 1 = 0.
    let k = kappa(&[(-1, 3), (0, 1), (-2, 3), (3, 2)]);
    for tau in ["(1243)", "(124)", "(123)"] {
        let t = Permutation::parse(tau, 4).unwrap();
        for n in 0..=3 {
            assert_matches_gram(&t, &k, n);
        }
    }
}
