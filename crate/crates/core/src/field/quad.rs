use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FieldError, RatFunc};
use crate::series::{Coef, LaurentSeries, SeriesError};

/// `a + b*s` with `s^2 = u`, where `a`, `b` and the modulus `u` are rational
/// functions in `m`.
///
/// The operator impls assume matching moduli and panic otherwise; the
/// `checked_*` methods report [`FieldError::ModulusMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: RatFunc,
    b: RatFunc,
    u: RatFunc,
}

impl QuadExt {
    pub fn new(a: RatFunc, b: RatFunc, u: RatFunc) -> Self {
        QuadExt { a, b, u }
    }

    /// An element of the base field.
    pub fn rational(a: RatFunc, u: &RatFunc) -> Self {
        QuadExt::new(a, RatFunc::zero(), u.clone())
    }

    /// The generator `s` itself.
    pub fn generator(u: &RatFunc) -> Self {
        QuadExt::new(RatFunc::zero(), RatFunc::one(), u.clone())
    }

    pub fn from_int(c: i64, u: &RatFunc) -> Self {
        Self::rational(RatFunc::from_int(c), u)
    }

    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    pub fn b(&self) -> &RatFunc {
        &self.b
    }

    pub fn modulus(&self) -> &RatFunc {
        &self.u
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn canonicalize(&self) -> Self {
        QuadExt::new(self.a.canonicalize(), self.b.canonicalize(), self.u.clone())
    }

    fn same_modulus(&self, other: &Self) -> Result<(), FieldError> {
        if self.u == other.u {
            Ok(())
        } else {
            Err(FieldError::ModulusMismatch {
                left: self.u.to_string(),
                right: other.u.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_modulus(other)?;
        Ok(QuadExt::new(&self.a + &other.a, &self.b + &other.b, self.u.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_modulus(other)?;
        Ok(QuadExt::new(&self.a - &other.a, &self.b - &other.b, self.u.clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_modulus(other)?;
        let bd = &self.b * &other.b;
        let a = &(&self.a * &other.a) + &(&bd * &self.u);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(QuadExt::new(a, b, self.u.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_mul(&other.inv()?)
    }

    pub fn checked_equal(&self, other: &Self) -> Result<bool, FieldError> {
        self.same_modulus(other)?;
        Ok(self.a == other.a && self.b == other.b)
    }

    /// `a - b*s`.
    pub fn conj(&self) -> Self {
        QuadExt::new(self.a.clone(), -&self.b, self.u.clone())
    }

    /// `a^2 - b^2 u`.
    pub fn norm(&self) -> RatFunc {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.u)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(FieldError::ZeroNormInverse);
        }
        let ni = n.inv()?;
        Ok(QuadExt::new(&self.a * &ni, &(-&self.b) * &ni, self.u.clone()))
    }

    pub fn pow(&self, e: i32) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut result = QuadExt::from_int(1, &self.u);
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(result)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        QuadExt::new(&self.a * c, &self.b * c, self.u.clone())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&RatFunc::from_int(c))
    }

    pub fn scale_coef(&self, c: &Coef) -> Self {
        self.scale(&RatFunc::constant(c.clone()))
    }

    /// `a(m) + b(m)*s` with `m` and `s` replaced by series. The caller is
    /// responsible for `s^2` agreeing with `u(m)`.
    pub fn eval_series(
        &self,
        m: &LaurentSeries,
        s: &LaurentSeries,
    ) -> Result<LaurentSeries, SeriesError> {
        let a = self.a.eval_series(m)?;
        if self.b.is_zero() {
            return Ok(a);
        }
        let b = self.b.eval_series(m)?;
        Ok(&a + &(&b * s))
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.checked_add(rhs).expect("moduli must match")
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.checked_sub(rhs).expect("moduli must match")
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.checked_mul(rhs).expect("moduli must match")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b, self.u.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "[{}]*s", self.b),
            (false, false) => write!(f, "{} + [{}]*s", self.a, self.b),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self}; s^2 = {})", self.u)
    }
}
