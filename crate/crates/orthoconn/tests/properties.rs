use num_traits::Zero;
use orthoconn::ball_sphere::{ball_inner_product, ball_inner_product_poly, q_ball, BallKappa};
use orthoconn::closed_forms::verify_closed_vs_gram;
use orthoconn::connection::{gram_connection, verify_reconstruction};
use orthoconn::discrete::kraw_dual_map;
use orthoconn::exact_arith::{pochhammer, HypSeries};
use orthoconn::multipoly::substitute_homogeneous;
use orthoconn::racah::whipple_sides;
use orthoconn::simplex_jacobi::{enumerate_basis, inner_product_simplex, jacobi_simplex_basis, norm_a};
use orthoconn::{Kappa, Permutation, Poly, QSqrtQ, Rational, Scalar};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(p, q)| Rational::from_frac(p, q))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=7).prop_map(|(p, q)| Rational::from_frac(p, q))
}

fn kappa_entry() -> impl Strategy<Value = Rational> {
    (1i64..=6).prop_flat_map(|q| ((1 - q)..=3 * q).prop_map(move |p| Rational::from_frac(p, q)))
}

fn kappa(len: usize) -> impl Strategy<Value = Kappa> {
    prop::collection::vec(kappa_entry(), len).prop_map(|v| Kappa::new(v).unwrap())
}

fn permutation(m: usize) -> impl Strategy<Value = Permutation> {
    Just((0..m).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn poly(nvars: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0usize..3, nvars), rational()), 0..5)
        .prop_map(move |terms| Poly::from_terms(nvars, terms).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pochhammer_splits(a in rational(), m in 0usize..6, n in 0usize..6) {
        let lhs = pochhammer(&a, m + n);
        let rhs = pochhammer(&a, m) * pochhammer(&(a.clone() + Rational::from_usize(m)), n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hypergeometric_symmetric_in_parameters(
        m in 0usize..6, a in rational(), b in rational(), c in positive(), e in positive(), z in rational(),
    ) {
        let top = -Rational::from_usize(m);
        let f = HypSeries::new(vec![top.clone(), a.clone(), b.clone()], vec![c.clone(), e.clone()], z.clone()).eval().unwrap();
        let g = HypSeries::new(vec![b, top, a], vec![e, c], z).eval().unwrap();
        prop_assert_eq!(f, g);
    }

    #[test]
    fn whipple_transformation(m in 0usize..6, x in rational(), y in rational(), z in rational(), u in rational(), v in rational()) {
        let w = Rational::from_i64(1) - Rational::from_usize(m) + x.clone() + y.clone() + z.clone() - u.clone() - v.clone();
        let (l, r) = whipple_sides(m, [&x, &y, &z], [&u, &v, &w]).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn qsqrt_embedding_is_multiplicative(a in rational(), b in rational()) {
        let (qa, qb) = (QSqrtQ::from_value(&a), QSqrtQ::from_value(&b));
        prop_assert_eq!(qa.square(), a.clone() * a.clone());
        prop_assert_eq!(qa.mul(&qb), QSqrtQ::from_value(&(a.clone() * b.clone())));
        prop_assert_eq!(qa.exact_value(), Some(a));
    }

    #[test]
    fn polynomial_ring_axioms(p in poly(2), q in poly(2), r in poly(2), x in rational(), y in rational()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert!((&p - &p).is_zero());
        let pt = [x, y];
        prop_assert_eq!((&p * &q).eval(&pt).unwrap(), p.eval(&pt).unwrap() * q.eval(&pt).unwrap());
        let id = [Poly::var(2, 0), Poly::var(2, 1)];
        prop_assert_eq!(p.compose(&id).unwrap(), p);
    }

    #[test]
    fn homogeneous_substitution(f in prop::collection::vec(rational(), 1..5), lin in poly(2), x in rational(), y in rational()) {
        let hom = &Poly::var(2, 0) + &Poly::one(2);
        let s = substitute_homogeneous(&f, &lin, &hom).unwrap();
        let h = hom.eval(&[x.clone(), y.clone()]).unwrap();
        prop_assume!(!h.is_zero());
        let t = lin.eval(&[x.clone(), y.clone()]).unwrap() / h.clone();
        let n = f.len() - 1;
        let fv = f.iter().rev().fold(Rational::zero(), |acc, c| acc * t.clone() + c.clone());
        prop_assert_eq!(s.eval(&[x, y]).unwrap(), num_traits::pow(h, n) * fv);
    }

    #[test]
    fn permutation_action_composes(a in permutation(4), b in permutation(4)) {
        let v = vec![10, 20, 30, 40];
        prop_assert_eq!(a.act(&b.act(&v)), b.compose(&a).act(&v));
        prop_assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn krawtchouk_duality_is_involutive(p1 in 1i64..6, p2 in 1i64..6) {
        let rho = vec![Rational::from_frac(1, p1 + 2), Rational::from_frac(1, p2 + 3)];
        let (xt, nt, rt) = kraw_dual_map(&[1, 2], &[2, 0], &rho);
        let total: Rational = rt.iter().cloned().sum();
        prop_assert_eq!(total, rho.iter().cloned().sum::<Rational>());
        prop_assert_eq!(kraw_dual_map(&xt, &nt, &rt), (vec![1, 2], vec![2, 0], rho));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn simplex_basis_is_orthogonal(k in kappa(3), n in 1usize..4) {
        let basis: Vec<(Vec<usize>, Poly)> =
            enumerate_basis(n, 2).into_iter().chain(enumerate_basis(n - 1, 2)).map(|nu| {
                let p = jacobi_simplex_basis(&nu, &k).unwrap();
                (nu, p)
            }).collect();
        for (i, (a, p)) in basis.iter().enumerate() {
            for (b, q) in basis.iter().skip(i) {
                let v = inner_product_simplex(p, q, &k);
                let e = if a == b { norm_a(a, &k) } else { Rational::zero() };
                prop_assert_eq!(v, e, "{:?} {:?}", a, b);
            }
        }
    }

    #[test]
    fn connection_reconstructs(k in kappa(3), tau in permutation(3), n in 0usize..4) {
        let m = gram_connection(&tau, &k, n).unwrap();
        prop_assert!(verify_reconstruction(&m).unwrap().passed());
    }

    #[test]
    fn parity_classes_are_orthogonal(
        k in prop::collection::vec(kappa_entry(), 3),
        e1 in prop::collection::vec(0usize..2, 2),
        e2 in prop::collection::vec(0usize..2, 2),
        m in 0usize..3,
    ) {
        prop_assume!(e1 != e2);
        let k = BallKappa::new(k).unwrap();
        for nu in enumerate_basis(m, 2) {
            for mu in enumerate_basis(m, 2) {
                let (p, q) = (q_ball(&nu, &e1, &k).unwrap(), q_ball(&mu, &e2, &k).unwrap());
                prop_assert!(ball_inner_product(&p, &q, &k).unwrap().is_zero());
                prop_assert!(ball_inner_product_poly(&p.expand(), &q.expand(), &k).is_zero());
            }
        }
    }

    #[test]
    fn closed_forms_match_gram_at_random_kappa(k in kappa(3), tau in permutation(3), n in 0usize..4) {
        let rep = verify_closed_vs_gram(&tau, &k, n).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn tetrahedron_closed_forms_at_random_kappa(k in kappa(4), tau in permutation(4), n in 0usize..3) {
        let rep = verify_closed_vs_gram(&tau, &k, n).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.failures);
    }
}
