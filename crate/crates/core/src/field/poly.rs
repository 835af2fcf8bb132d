use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::series::{Coef, LaurentSeries};

/// Dense univariate polynomial in `m`, coefficients from degree 0 upward,
/// never carrying trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Coef>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Coef>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Coef::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coef::one())
    }

    pub fn constant(c: Coef) -> Self {
        Self::new(vec![c])
    }

    /// The variable `m`.
    pub fn var() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Coef> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Coef {
        self.coeffs.get(i).cloned().unwrap_or_else(Coef::zero)
    }

    pub fn scale(&self, c: &Coef) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Poly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.lead().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Coef::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval(&self, x: &Coef) -> Coef {
        self.coeffs
            .iter()
            .rev()
            .fold(Coef::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a series argument, with constants carried at the
    /// argument's order.
    pub fn eval_series(&self, x: &LaurentSeries) -> LaurentSeries {
        let order = x.order().max(0);
        let mut acc = LaurentSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &LaurentSeries::constant(c.clone(), order);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Coef::from_integer((i as i64).into()))
                .collect(),
        )
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Coef::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let a = c.abs();
            let show_coef = i == 0 || !a.is_one();
            if show_coef {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            if i > 0 {
                if show_coef {
                    write!(f, "*")?;
                }
                write!(f, "m")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_common_factor() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-3, 2, 1])), p(&[-1, 1]));
    }

    #[test]
    fn product_of_linear_factors() {
        assert_eq!(&p(&[-1, 1]) * &p(&[3, 1]), p(&[-3, 2, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        assert_eq!(p(&[2, 4]).gcd(&Poly::zero()), Poly::new(vec![Coef::new(1.into(), 2.into()), Coef::one()]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 2, 7]);
        let d = p(&[1, 3]);
        let (q, r) = a.div_rem(&d);
        assert!(r.degree().unwrap_or(0) < 1);
        assert_eq!(&(&q * &d) + &r, a);
    }

    #[test]
    fn trailing_zeros_stripped() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(&p(&[0, 1]) - &p(&[0, 1]), Poly::zero());
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[-3, 2, 1]).to_string(), "m^2 + 2*m - 3");
        assert_eq!(p(&[0, -1]).to_string(), "-m");
    }

    #[test]
    fn eval_and_series_eval_agree_on_constants() {
        let poly = p(&[1, -2, 1]);
        assert_eq!(poly.eval(&Coef::from_integer(3.into())), Coef::from_integer(4.into()));
        let s = poly.eval_series(&LaurentSeries::constant(Coef::from_integer(3.into()), 5));
        assert_eq!(s, LaurentSeries::constant(Coef::from_integer(4.into()), 5));
    }
}
