use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Rising factorial `(a)_n = a(a+1)...(a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer<S: Scalar>(a: &S, n: usize) -> S {
    let mut r = S::one();
    let mut t = a.clone();
    for _ in 0..n {
        r = r * t.clone();
        t = t + S::one();
    }
    r
}

pub fn factorial<S: Scalar>(n: usize) -> S {
    pochhammer(&S::one(), n)
}

pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    if k > n {
        return S::zero();
    }
    factorial::<S>(n) / (factorial::<S>(k) * factorial::<S>(n - k))
}

/// A terminating generalized hypergeometric series `pFq(top; bottom; z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypSeries<S> {
    pub top: Vec<S>,
    pub bottom: Vec<S>,
    pub argument: S,
}

impl<S: Scalar> HypSeries<S> {
    pub fn new(top: Vec<S>, bottom: Vec<S>, argument: S) -> Self {
        Self { top, bottom, argument }
    }

    /// Series at unit argument, the form every Racah-type polynomial uses.
    pub fn unit(top: Vec<S>, bottom: Vec<S>) -> Self {
        Self::new(top, bottom, S::one())
    }

    /// Minimal `m` such that some top parameter equals `-m`.
    pub fn termination_order(&self) -> Option<usize> {
        self.top
            .iter()
            .filter_map(|t| t.as_nonpositive_int())
            .min()
            .map(|m| m as usize)
    }

    pub fn eval(&self) -> Result<S> {
        hyp_terminating(self)
    }
}

/// Exact finite sum of a terminating series.
///
/// Fails with [`Error::BottomPole`] when a bottom Pochhammer symbol vanishes
/// at some `k` below the termination order.
pub fn hyp_terminating<S: Scalar>(s: &HypSeries<S>) -> Result<S> {
    let m = s.termination_order().ok_or(Error::NotTerminating)?;
    let mut sum = S::one();
    let mut term = S::one();
    for k in 0..m {
        let kk = S::from_usize(k);
        let mut num = S::one();
        for t in &s.top {
            num = num * (t.clone() + kk.clone());
        }
        let mut den = S::from_usize(k + 1);
        for (index, b) in s.bottom.iter().enumerate() {
            let f = b.clone() + kk.clone();
            if f.is_zero() {
                return Err(Error::BottomPole { index, term: k + 1 });
            }
            den = den * f;
        }
        term = term * num * s.argument.clone() / den;
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// `prod_b (b)_m * F(-m, tops; plain, absorbed; z)` summed without division
/// by the absorbed bottoms.
///
/// Each absorbed bottom contributes `(b+k)_{m-k}` to the `k`-th term, which is
/// the polynomial identity `(b)_m / (b)_k = (b+k)_{m-k}`. The product stays
/// finite where the quotient form would read `0/0`; only the `plain` bottoms
/// are divided out and may raise [`Error::BottomPole`].
pub fn absorbed_series<S: Scalar>(
    m: usize,
    top: &[S],
    plain: &[S],
    absorbed: &[S],
    z: &S,
) -> Result<S> {
    let neg_m = -S::from_usize(m);
    let mut sum = S::zero();
    let mut zk = S::one();
    for k in 0..=m {
        let mut t = pochhammer(&neg_m, k) / factorial::<S>(k) * zk.clone();
        for a in top {
            t = t * pochhammer(a, k);
        }
        for (index, b) in plain.iter().enumerate() {
            let p = pochhammer(b, k);
            if p.is_zero() {
                if t.is_zero() {
                    continue;
                }
                return Err(Error::BottomPole { index, term: k });
            }
            t = t / p;
        }
        let kk = S::from_usize(k);
        for b in absorbed {
            t = t * pochhammer(&(b.clone() + kk.clone()), m - k);
        }
        sum = sum + t;
        zk = zk * z.clone();
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(1, 2), 3), q(15, 8));
        assert_eq!(pochhammer(&q(7, 3), 0), q(1, 1));
        assert_eq!(pochhammer(&q(-3, 1), 5), q(0, 1));
    }

    #[test]
    fn zero_top_parameter_gives_one() {
        let s = HypSeries::unit(vec![q(0, 1), q(5, 7)], vec![q(1, 3)]);
        assert_eq!(s.eval().unwrap(), q(1, 1));
    }

    #[test]
    fn two_term_krawtchouk_series() {
        // 2F1(-1,-1;-N;1/p) = 1 - 1/(N p), i.e. K_1(1; p, N)
        let (n, p) = (q(5, 1), q(1, 3));
        let s = HypSeries::new(vec![q(-1, 1), q(-1, 1)], vec![-n.clone()], q(1, 1) / p.clone());
        assert_eq!(s.eval().unwrap(), q(1, 1) - q(1, 1) / (n * p));
    }

    #[test]
    fn bottom_pole_detected() {
        let s = HypSeries::unit(vec![q(-3, 1)], vec![q(-1, 1)]);
        assert!(matches!(s.eval(), Err(Error::BottomPole { .. })));
        // The pole sits beyond termination: fine.
        let s = HypSeries::unit(vec![q(-1, 1)], vec![q(-2, 1)]);
        assert_eq!(s.eval().unwrap(), q(1, 1) + q(1, 2));
    }

    #[test]
    fn non_terminating_rejected() {
        let s = HypSeries::unit(vec![q(1, 2)], vec![q(1, 1)]);
        assert_eq!(s.eval(), Err(Error::NotTerminating));
    }

    #[test]
    fn absorbed_matches_quotient_form_away_from_poles() {
        let top = [q(3, 2), q(-2, 1)];
        let bottom = [q(5, 3), q(7, 4)];
        let m = 3;
        let mut all_top = vec![-Rational::from_usize(m)];
        all_top.extend(top.iter().cloned());
        let direct = HypSeries::unit(all_top, bottom.to_vec()).eval().unwrap();
        let pref = pochhammer(&bottom[0], m) * pochhammer(&bottom[1], m);
        let abs = absorbed_series(m, &top, &[], &bottom, &q(1, 1)).unwrap();
        assert_eq!(abs, pref * direct);
    }

    #[test]
    fn float_scalar_agrees() {
        let s = HypSeries::unit(vec![-2.0f64, 1.5, 0.5], vec![2.5, 0.75]);
        let r = HypSeries::unit(
            vec![q(-2, 1), q(3, 2), q(1, 2)],
            vec![q(5, 2), q(3, 4)],
        );
        let exact = r.eval().unwrap().to_f64();
        assert!((s.eval().unwrap() - exact).abs() < 1e-12);
    }
}
