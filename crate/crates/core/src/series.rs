//! Truncated Laurent series in one variable `t` over exact rationals.
//!
//! Every series carries an exclusive order bound: coefficients at exponents
//! `>= order` are unknown, not zero. All operations propagate that bound so a
//! reported coefficient is never read from the unknown tail.
//!
//! The identities in this crate are written in `q`; they are evaluated with
//! `q = t^4` so that `q^(1/4)` and `q^(1/2)` are integer powers of `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational coefficient. `BigRational` keeps itself gcd-reduced with a
/// positive denominator.
pub type Coef = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series that is zero up to t^{order}")]
    DivisionByZeroSeries { order: i64 },
    #[error("square root of a series with odd valuation {valuation}")]
    OddValuation { valuation: i64 },
    #[error("leading coefficient {coefficient} is not the square of a rational")]
    NonSquareLeadingCoefficient { coefficient: String },
    #[error("coefficient at t^{requested} requested but the series is only known below t^{available}")]
    InsufficientPrecision { requested: i64, available: i64 },
}

/// `sum_{i} coeffs[i] t^(valuation + i) + O(t^order)`.
///
/// Invariant: `coeffs.len() == order - valuation`, and either `coeffs` is
/// empty (the zero series, `valuation == order`) or `coeffs[0] != 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    coeffs: Vec<Coef>,
    order: i64,
}

impl LaurentSeries {
    /// `O(t^order)`.
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            valuation: order,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: i64) -> Self {
        Self::constant(Coef::one(), order)
    }

    pub fn constant(c: Coef, order: i64) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c t^exp + O(t^order)`; the zero series when `exp >= order`.
    pub fn monomial(c: Coef, exp: i64, order: i64) -> Self {
        if exp >= order || c.is_zero() {
            return Self::zero(order);
        }
        let mut coeffs = vec![Coef::zero(); (order - exp) as usize];
        coeffs[0] = c;
        LaurentSeries {
            valuation: exp,
            coeffs,
            order,
        }
    }

    /// Builds `sum coeffs[i] t^(valuation+i) + O(t^order)`. Coefficients past
    /// the order are dropped; missing ones below it are zero.
    pub fn from_coeffs(valuation: i64, mut coeffs: Vec<Coef>, order: i64) -> Self {
        let len = (order - valuation).max(0) as usize;
        coeffs.resize(len, Coef::zero());
        let mut s = LaurentSeries {
            valuation: valuation.min(order),
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    pub fn from_integers(valuation: i64, coeffs: &[i64], order: i64) -> Self {
        Self::from_coeffs(
            valuation,
            coeffs.iter().map(|&c| Coef::from_integer(c.into())).collect(),
            order,
        )
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.valuation = self.order;
            }
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.valuation += k as i64;
            }
        }
    }

    /// Exponent of the lowest nonzero term; equals `order` for the zero series.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Exclusive bound of the known range.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Number of known coefficients starting at the leading term.
    pub fn relative_precision(&self) -> i64 {
        self.order - self.valuation
    }

    /// True when the series is zero on its entire known range.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&Coef> {
        self.coeffs.first()
    }

    /// Stored coefficients, index `i` holding the coefficient of `t^(valuation+i)`.
    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    /// Coefficient of `t^n`. Exponents below the valuation are zero.
    pub fn coefficient(&self, n: i64) -> Result<Coef, SeriesError> {
        if n >= self.order {
            return Err(SeriesError::InsufficientPrecision {
                requested: n,
                available: self.order,
            });
        }
        if n < self.valuation {
            return Ok(Coef::zero());
        }
        Ok(self.coeffs[(n - self.valuation) as usize].clone())
    }

    /// Iterates `(exponent, coefficient)` over the nonzero stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coef)> + '_ {
        let v = self.valuation;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (v + i as i64, c))
    }

    /// Lowers the order bound to `min(self.order, order)`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        if order <= self.valuation {
            return Self::zero(order);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate((order - self.valuation) as usize);
        let mut s = LaurentSeries {
            valuation: self.valuation,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            valuation: self.valuation + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn scale(&self, c: &Coef) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            order: self.order,
        }
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let order = self.order.min(other.order);
        let lo = self.valuation.min(other.valuation).min(order);
        let mut coeffs = vec![Coef::zero(); (order - lo) as usize];
        for (e, c) in self.terms() {
            if e < order {
                coeffs[(e - lo) as usize] += c;
            }
        }
        for (e, c) in other.terms() {
            if e < order {
                let slot = &mut coeffs[(e - lo) as usize];
                if negate {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
        let mut s = LaurentSeries {
            valuation: lo,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    /// Lowest common denominator of the stored coefficients and the integer
    /// numerators over it.
    fn integer_form(&self) -> (BigInt, Vec<BigInt>) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (den, nums)
    }

    pub fn mul_series(&self, other: &Self) -> Self {
        let order = (self.order + other.valuation).min(other.order + self.valuation);
        if self.is_zero() || other.is_zero() {
            return Self::zero(order);
        }
        let valuation = self.valuation + other.valuation;
        let len = (order - valuation) as usize;
        let (da, na) = self.integer_form();
        let (db, nb) = other.integer_form();
        let sparse_b: Vec<(usize, &BigInt)> =
            nb.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut acc = vec![BigInt::zero(); len];
        for (i, x) in na.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for &(j, y) in &sparse_b {
                if i + j >= len {
                    break;
                }
                acc[i + j] += x * y;
            }
        }
        let den = da * db;
        let coeffs = acc
            .into_iter()
            .map(|n| Coef::new(n, den.clone()))
            .collect();
        LaurentSeries {
            valuation,
            coeffs,
            order,
        }
    }

    /// `self / other`, valid on the common relative precision.
    pub fn div_series(&self, other: &Self) -> Result<Self, SeriesError> {
        if other.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries { order: other.order });
        }
        let order = (self.order - other.valuation)
            .min(other.order - 2 * other.valuation + self.valuation);
        if self.is_zero() {
            return Ok(Self::zero(order));
        }
        let valuation = self.valuation - other.valuation;
        let len = (order - valuation) as usize;
        let lead = other.coeffs[0].clone();
        let monic: Vec<Coef> = other.coeffs.iter().take(len).map(|c| c / &lead).collect();

        let coeffs = if monic.iter().all(|c| c.is_integer()) {
            // Integer recurrence against a monic divisor, rescaled at the end.
            let (da, na) = self.integer_form();
            let b: Vec<(usize, BigInt)> = monic
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.to_integer()))
                .collect();
            let mut q: Vec<BigInt> = Vec::with_capacity(len);
            for n in 0..len {
                let mut v = na.get(n).cloned().unwrap_or_default();
                for (k, bk) in &b {
                    if *k > n {
                        break;
                    }
                    let prev = &q[n - k];
                    if !prev.is_zero() {
                        v -= bk * prev;
                    }
                }
                q.push(v);
            }
            let scale = Coef::from_integer(da) * lead;
            q.into_iter().map(|n| Coef::from_integer(n) / &scale).collect()
        } else {
            let mut q: Vec<Coef> = Vec::with_capacity(len);
            for n in 0..len {
                let mut v = self.coeffs.get(n).cloned().unwrap_or_else(Coef::zero);
                for k in 1..=n.min(monic.len() - 1) {
                    if !monic[k].is_zero() && !q[n - k].is_zero() {
                        v -= &monic[k] * &q[n - k];
                    }
                }
                q.push(v);
            }
            q.into_iter().map(|c| c / &lead).collect()
        };
        let mut s = LaurentSeries {
            valuation,
            coeffs,
            order,
        };
        s.normalize();
        Ok(s)
    }

    /// Multiplicative inverse: `1/self` with the relative precision of `self`.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries { order: self.order });
        }
        Self::one(self.relative_precision()).div_series(self)
    }

    /// Square root on the positive branch: the leading coefficient of the
    /// result is the positive rational root of the leading coefficient.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            // O(t^o) has root O(t^ceil(o/2)).
            return Ok(Self::zero(-(-self.order).div_euclid(2)));
        }
        if self.valuation.rem_euclid(2) != 0 {
            return Err(SeriesError::OddValuation {
                valuation: self.valuation,
            });
        }
        let r0 = rational_sqrt(&self.coeffs[0]).ok_or_else(|| {
            SeriesError::NonSquareLeadingCoefficient {
                coefficient: self.coeffs[0].to_string(),
            }
        })?;
        let len = self.coeffs.len();
        let two_r0 = &r0 * Coef::from_integer(2.into());
        let mut r: Vec<Coef> = Vec::with_capacity(len);
        r.push(r0);
        for n in 1..len {
            let mut v = self.coeffs[n].clone();
            for k in 1..n {
                if !r[k].is_zero() && !r[n - k].is_zero() {
                    v -= &r[k] * &r[n - k];
                }
            }
            r.push(v / &two_r0);
        }
        let valuation = self.valuation / 2;
        Ok(LaurentSeries {
            valuation,
            coeffs: r,
            order: valuation + len as i64,
        })
    }

    /// `t -> t^k`. The result order is `k * order`: exponents strictly between
    /// multiples of `k` are known to vanish.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        let k = k as i64;
        let order = self.order * k;
        if self.is_zero() {
            return Self::zero(order);
        }
        let valuation = self.valuation * k;
        let mut coeffs = vec![Coef::zero(); (order - valuation) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        LaurentSeries {
            valuation,
            coeffs,
            order,
        }
    }

    /// Integer power. `a^0` is `1` to the relative precision of `a`; negative
    /// exponents require a nonzero series.
    pub fn pow_int(&self, e: i64) -> Result<Self, SeriesError> {
        if e == 0 {
            return Ok(Self::one(self.relative_precision()));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut result: Option<LaurentSeries> = None;
        let mut sq = base;
        loop {
            if n & 1 == 1 {
                result = Some(match result {
                    None => sq.clone(),
                    Some(r) => r.mul_series(&sq),
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            sq = sq.mul_series(&sq);
        }
        Ok(result.expect("nonzero exponent"))
    }

    /// Whether every coefficient below `t^n` vanishes.
    pub fn is_zero_up_to(&self, n: i64) -> Result<bool, SeriesError> {
        if n > self.order {
            return Err(SeriesError::InsufficientPrecision {
                requested: n,
                available: self.order,
            });
        }
        Ok(self.valuation >= n)
    }

    /// Compares coefficients at exponents `< n`; both series must be known there.
    pub fn equal_up_to(&self, other: &Self, n: i64) -> Result<bool, SeriesError> {
        Ok(self.first_difference(other, n)?.is_none())
    }

    /// First exponent `< n` where the two series differ, with both coefficients.
    pub fn first_difference(
        &self,
        other: &Self,
        n: i64,
    ) -> Result<Option<(i64, Coef, Coef)>, SeriesError> {
        let available = self.order.min(other.order);
        if n > available {
            return Err(SeriesError::InsufficientPrecision {
                requested: n,
                available,
            });
        }
        let lo = self.valuation.min(other.valuation);
        for e in lo..n {
            let a = self.coefficient(e)?;
            let b = other.coefficient(e)?;
            if a != b {
                return Ok(Some((e, a, b)));
            }
        }
        Ok(None)
    }
}

/// Positive rational square root, when one exists.
pub fn rational_sqrt(c: &Coef) -> Option<Coef> {
    if c.is_negative() {
        return None;
    }
    let n = integer_sqrt(c.numer())?;
    let d = integer_sqrt(c.denom())?;
    Some(Coef::new(n, d))
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.add_signed(rhs, false)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.add_signed(rhs, true)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{a}*t^{e}")?,
            }
        }
        if first {
            write!(f, "O(t^{})", self.order)
        } else {
            write!(f, " + O(t^{})", self.order)
        }
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64, c: &[i64], o: i64) -> LaurentSeries {
        LaurentSeries::from_integers(v, c, o)
    }

    fn q(n: i64, d: i64) -> Coef {
        Coef::new(n.into(), d.into())
    }

    #[test]
    fn add_cancels_and_keeps_min_order() {
        let r = &s(0, &[1, 1], 10) + &s(0, &[1, -1], 7);
        assert_eq!(r, s(0, &[2], 7));
        assert_eq!(r.order(), 7);
    }

    #[test]
    fn add_zero_is_identity() {
        let a = s(-2, &[3, 0, 1], 6);
        assert_eq!(&LaurentSeries::zero(10) + &a, a);
    }

    #[test]
    fn add_normalizes_leading_cancellation() {
        let r = &s(-1, &[1, 1], 5) + &s(-1, &[-1], 5);
        assert_eq!(r.valuation(), 0);
        assert_eq!(r.coefficient(0).unwrap(), q(1, 1));
        assert_eq!(r.leading_coefficient(), Some(&q(1, 1)));
    }

    #[test]
    fn mul_difference_of_squares() {
        let r = &s(0, &[1, 1], 8) * &s(0, &[1, -1], 8);
        assert_eq!(r, s(0, &[1, 0, -1], 8));
    }

    #[test]
    fn mul_monomials_add_exponents() {
        let r = &s(-2, &[1], 10) * &s(5, &[1], 20);
        assert_eq!(r.valuation(), 3);
        assert_eq!(r.order(), 15);
        assert_eq!(r.coefficient(3).unwrap(), q(1, 1));
    }

    #[test]
    fn triangular_indicator_squared() {
        // brute-force convolution of the indicator of {0,1,3,6,10,...}
        let tri: Vec<usize> = (0..10).map(|n| n * (n + 1) / 2).collect();
        let mut ind = vec![0i64; 30];
        for &t in &tri {
            if t < 30 {
                ind[t] = 1;
            }
        }
        let mut brute = vec![0i64; 30];
        for i in 0..30 {
            for j in 0..30 - i {
                brute[i + j] += ind[i] * ind[j];
            }
        }
        assert_eq!(&brute[..7], &[1, 2, 1, 2, 2, 0, 3]);
        let a = s(0, &ind, 30);
        let sq = &a * &a;
        for (n, &b) in brute.iter().enumerate() {
            assert_eq!(sq.coefficient(n as i64).unwrap(), q(b, 1));
        }
    }

    #[test]
    fn geometric_series() {
        let r = s(0, &[1], 12).div_series(&s(0, &[1, -1], 12)).unwrap();
        assert_eq!(r, s(0, &[1; 12], 12));
    }

    #[test]
    fn monomial_division_goes_negative() {
        let r = s(2, &[1], 20).div_series(&s(6, &[1], 30)).unwrap();
        assert_eq!(r.valuation(), -4);
        assert_eq!(r.leading_coefficient(), Some(&q(1, 1)));
    }

    #[test]
    fn division_with_non_monic_rational_divisor() {
        let b = LaurentSeries::from_coeffs(0, vec![q(2, 3), q(1, 5), q(0, 1), q(-7, 2)], 10);
        let a = s(1, &[1, 2, 3], 10);
        let r = a.div_series(&b).unwrap();
        let back = &r * &b;
        assert!(back.equal_up_to(&a, back.order()).unwrap());
    }

    #[test]
    fn division_by_zero_series() {
        let err = s(0, &[1], 5).div_series(&LaurentSeries::zero(5)).unwrap_err();
        assert_eq!(err, SeriesError::DivisionByZeroSeries { order: 5 });
    }

    #[test]
    fn sqrt_of_perfect_square() {
        assert_eq!(s(0, &[1, 2, 1], 9).sqrt().unwrap(), s(0, &[1, 1], 9));
        let r = s(10, &[1], 30).sqrt().unwrap();
        assert_eq!(r.valuation(), 5);
        assert_eq!(r.order(), 25);
        assert_eq!(r.leading_coefficient(), Some(&q(1, 1)));
    }

    #[test]
    fn sqrt_four_plus_four_t() {
        let r = s(0, &[4, 4], 6).sqrt().unwrap();
        assert_eq!(r.coefficient(0).unwrap(), q(2, 1));
        assert_eq!(r.coefficient(1).unwrap(), q(1, 1));
        assert_eq!(r.coefficient(2).unwrap(), q(-1, 4));
        let sq = &r * &r;
        assert!(sq.equal_up_to(&s(0, &[4, 4], 6), 6).unwrap());
    }

    #[test]
    fn sqrt_errors() {
        assert_eq!(
            s(3, &[1], 10).sqrt().unwrap_err(),
            SeriesError::OddValuation { valuation: 3 }
        );
        assert!(matches!(
            s(0, &[2], 10).sqrt().unwrap_err(),
            SeriesError::NonSquareLeadingCoefficient { .. }
        ));
        assert!(matches!(
            s(0, &[-4], 10).sqrt().unwrap_err(),
            SeriesError::NonSquareLeadingCoefficient { .. }
        ));
    }

    #[test]
    fn substitute_power_cases() {
        let r = s(0, &[1, 1], 5).substitute_power(3);
        assert_eq!(r, s(0, &[1, 0, 0, 1], 15));
        let r = s(-1, &[1], 4).substitute_power(2);
        assert_eq!(r.valuation(), -2);
        assert_eq!(r.order(), 8);
    }

    #[test]
    fn pow_and_coefficient() {
        assert_eq!(s(0, &[1, 1], 10).pow_int(2).unwrap(), s(0, &[1, 2, 1], 10));
        assert_eq!(s(0, &[1, 2], 10).coefficient(1).unwrap(), q(2, 1));
        let inv2 = s(0, &[1, 1], 10).pow_int(-2).unwrap();
        assert_eq!(&inv2 * &s(0, &[1, 2, 1], 10), LaurentSeries::one(10));
    }

    #[test]
    fn precision_errors() {
        let a = s(0, &[1, 2], 5);
        assert!(matches!(
            a.coefficient(5),
            Err(SeriesError::InsufficientPrecision { requested: 5, available: 5 })
        ));
        assert!(a.is_zero_up_to(6).is_err());
        assert!(a.equal_up_to(&a, 6).is_err());
        assert!(a.equal_up_to(&a, 5).unwrap());
        assert!(LaurentSeries::zero(4).is_zero_up_to(5).is_err());
        assert!(LaurentSeries::zero(5).is_zero_up_to(5).unwrap());
    }

    #[test]
    fn zero_keeps_order_through_products() {
        let z = LaurentSeries::zero(6);
        let r = &z * &s(-2, &[1], 10);
        assert!(r.is_zero());
        assert_eq!(r.order(), 4);
    }

    #[test]
    fn display() {
        assert_eq!(s(-1, &[1, 0, -2, 3], 4).to_string(), "t^-1 - 2*t + 3*t^2 + O(t^4)");
        assert_eq!(LaurentSeries::zero(3).to_string(), "O(t^3)");
    }
}
