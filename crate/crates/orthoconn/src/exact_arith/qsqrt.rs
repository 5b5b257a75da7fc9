use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::scalar::{sign_of, Scalar};
use crate::error::{Error, Result};

/// The number `sign * sqrt(radicand)`.
///
/// Normalized connection coefficients and orthonormal Racah values live here,
/// since their squares are rational while the values generally are not.
#[derive(Debug, Clone, PartialEq)]
pub struct QSqrt<S> {
    sign: i8,
    radicand: S,
}

impl<S: Scalar> QSqrt<S> {
    /// Builds `sign * sqrt(radicand)`; a zero radicand forces sign 0.
    pub fn new(sign: i8, radicand: S) -> Self {
        assert!(!radicand.is_negative(), "QSqrt radicand must be nonnegative");
        if radicand.is_zero() || sign == 0 {
            return Self::zero();
        }
        Self { sign: sign.signum(), radicand }
    }

    pub fn zero() -> Self {
        Self { sign: 0, radicand: S::zero() }
    }

    pub fn one() -> Self {
        Self { sign: 1, radicand: S::one() }
    }

    /// Embeds an element of the field: `v = sign(v) * sqrt(v^2)`.
    pub fn from_value(v: &S) -> Self {
        Self::new(sign_of(v), v.clone() * v.clone())
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &S {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The square of the value, which is always in the field.
    pub fn square(&self) -> S {
        self.radicand.clone()
    }

    pub fn neg(&self) -> Self {
        Self { sign: -self.sign, radicand: self.radicand.clone() }
    }

    pub fn with_sign_flip(&self, flip: bool) -> Self {
        if flip {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.sign * other.sign, self.radicand.clone() * other.radicand.clone())
    }

    /// Multiplies by an element of the field.
    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.sign * sign_of(c), self.radicand.clone() * c.clone() * c.clone())
    }

    /// Value in the field, when the radicand is a perfect square.
    pub fn exact_value(&self) -> Option<S> {
        let r = self.radicand.exact_sqrt()?;
        Some(if self.sign < 0 { -r } else { r })
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * self.radicand.to_f64().sqrt()
    }
}

pub fn qsqrt_mul<S: Scalar>(a: &QSqrt<S>, b: &QSqrt<S>) -> QSqrt<S> {
    a.mul(b)
}

pub fn qsqrt_square<S: Scalar>(a: &QSqrt<S>) -> S {
    a.square()
}

/// Adds terms `c_i * sqrt(r_i)` by grouping radicands into square classes.
///
/// Two radicands share a class when their ratio is a perfect square. The sum
/// is representable as a single [`QSqrt`] only when at most one class
/// survives cancellation; otherwise [`Error::IrreducibleSum`] is returned.
pub fn sum_sqrt_terms<S: Scalar>(terms: &[(S, S)]) -> Result<QSqrt<S>> {
    let mut classes: Vec<(S, S)> = Vec::new();
    for (c, r) in terms {
        if c.is_zero() || r.is_zero() {
            continue;
        }
        let mut placed = false;
        for (base, coef) in classes.iter_mut() {
            if let Some(s) = (r.clone() / base.clone()).exact_sqrt() {
                *coef = coef.clone() + c.clone() * s;
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((r.clone(), c.clone()));
        }
    }
    classes.retain(|(_, c)| !c.is_zero());
    match classes.len() {
        0 => Ok(QSqrt::zero()),
        1 => {
            let (r, c) = classes.pop().unwrap();
            Ok(QSqrt::new(sign_of(&c), c.clone() * c * r))
        }
        n => Err(Error::IrreducibleSum { classes: n }),
    }
}

impl<S: Scalar> fmt::Display for QSqrt<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            1 => write!(f, "sqrt({})", self.radicand),
            _ => write!(f, "-sqrt({})", self.radicand),
        }
    }
}

impl<S: Scalar> Serialize for QSqrt<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut st = serializer.serialize_struct("QSqrt", 2)?;
        st.serialize_field("sign", &self.sign)?;
        st.serialize_field("radicand", &self.radicand.to_string())?;
        st.end()
    }
}
