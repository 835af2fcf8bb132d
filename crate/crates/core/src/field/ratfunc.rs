use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{FieldError, Poly};
use crate::series::{Coef, LaurentSeries, SeriesError};

/// A rational function `num / den` in `m`, kept canonical: `den` is monic and
/// coprime to `num`, and the zero function is `0 / 1`. Two values are equal
/// exactly when their fields are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZeroRatFunc);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.lead().expect("nonzero denominator").recip();
        RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Poly::from_ints(&[c]))
    }

    pub fn constant(c: Coef) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The variable `m`.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Re-runs canonicalization; a no-op on every constructed value.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, FieldError> {
        if rhs.is_zero() {
            return Err(FieldError::DivisionByZeroRatFunc);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: i32) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn scale(&self, c: &Coef) -> Self {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    /// Value at a rational point; errors when the denominator vanishes there.
    pub fn eval(&self, x: &Coef) -> Result<Coef, FieldError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(FieldError::DivisionByZeroRatFunc);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_series(&self, x: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
        self.num.eval_series(x).div_series(&self.den.eval_series(x))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        let terms = |p: &Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count();
        if terms(&self.num) > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if terms(&self.den) > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn r(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn sum_of_reciprocals() {
        let s = &r(&[1], &[-1, 1]) + &r(&[1], &[3, 1]);
        assert_eq!(s, r(&[2, 2], &[-3, 2, 1]));
    }

    #[test]
    fn product_cancels_to_one() {
        let a = r(&[-1, 1], &[3, 1]);
        let b = r(&[3, 1], &[-1, 1]);
        assert_eq!(&a * &b, RatFunc::one());
    }

    #[test]
    fn denominator_is_monic() {
        let a = r(&[2], &[4, 2]);
        assert_eq!(a.den(), &p(&[2, 1]));
        assert_eq!(a.num(), &p(&[1]));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            RatFunc::one().checked_div(&RatFunc::zero()).unwrap_err(),
            FieldError::DivisionByZeroRatFunc
        );
        assert!(RatFunc::new(p(&[1]), Poly::zero()).is_err());
        assert!(RatFunc::zero().inv().is_err());
    }

    #[test]
    fn degree3_alpha_times_beta() {
        // alpha = (m-1)(m+3)^3/(16m^3), beta = (m-1)^3(m+3)/(16m)
        let m1 = p(&[-1, 1]);
        let m3 = p(&[3, 1]);
        let alpha = RatFunc::new(&m1 * &m3.pow(3), p(&[0, 0, 0, 16])).unwrap();
        let beta = RatFunc::new(&m1.pow(3) * &m3, p(&[0, 16])).unwrap();
        let expected = RatFunc::new(&m1.pow(4) * &m3.pow(4), p(&[0, 0, 0, 0, 256])).unwrap();
        assert_eq!(&alpha * &beta, expected);
    }

    #[test]
    fn display_form() {
        assert_eq!(r(&[2, 2], &[-3, 2, 1]).to_string(), "(2*m + 2)/(m^2 + 2*m - 3)");
        assert_eq!(r(&[1], &[0, 4]).to_string(), "(1/4)/m");
    }
}
