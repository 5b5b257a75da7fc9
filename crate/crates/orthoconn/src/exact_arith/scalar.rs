use std::fmt::{Debug, Display};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Field of coefficients used throughout the crate.
///
/// Every algorithm is written against this trait. `BigRational` gives exact
/// results; `f64`/`f32` are accepted for quick numerical evaluation, where the
/// "exact" predicates degrade to plain float comparisons.
pub trait Scalar:
    num_traits::Num + Signed + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }

    /// Square root when it lies in the field: perfect squares for rationals,
    /// any nonnegative value for floats.
    fn exact_sqrt(&self) -> Option<Self>;

    /// `Some(m)` when `self == -m` for an integer `m >= 0`.
    fn as_nonpositive_int(&self) -> Option<u64>;

    fn to_f64(&self) -> f64;

    /// True when arithmetic is exact, so that zero tests are meaningful.
    fn is_exact() -> bool;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = bigint_sqrt(self.numer())?;
        let d = bigint_sqrt(self.denom())?;
        Some(BigRational::new(n, d))
    }

    fn as_nonpositive_int(&self) -> Option<u64> {
        if !self.is_integer() || self.is_positive() {
            return None;
        }
        (-self.numer()).to_u64()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        true
    }
}

fn bigint_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.sign() == Sign::Minus {
        return None;
    }
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn exact_sqrt(&self) -> Option<Self> {
                (*self >= 0.0).then(|| self.sqrt())
            }

            fn as_nonpositive_int(&self) -> Option<u64> {
                (*self <= 0.0 && self.fract() == 0.0).then(|| (-*self) as u64)
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn is_exact() -> bool {
                false
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"0.25"` into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num: BigInt = digits.parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(num, den);
        return Some(if neg { -r } else { r });
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// Sign of a scalar as -1, 0 or 1.
pub fn sign_of<S: Scalar>(v: &S) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// `(-1)^k` in the scalar field.
pub fn neg_one_pow<S: Scalar>(k: usize) -> S {
    if k.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}
