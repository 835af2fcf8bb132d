//! q-Pochhammer products, Ramanujan's theta functions and the Pi_q product, plus
//! the series-level modular quantities `z_n`, the multiplier `m`, `alpha`,
//! `beta` and `rho`.
//!
//! Everything is produced in `t` with `q = t^4`, so `f(q^k)` has its terms at
//! multiples of `4k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{Coef, LaurentSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuilderError {
    #[error("pochhammer factor (1 - t^0) vanishes")]
    ZeroFactor,
    #[error("degree {0} is not supported (expected 3 or 5)")]
    UnsupportedDegree(u32),
    #[error("builder order {order} is below 8k = {min}")]
    OrderTooSmall { order: i64, min: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn int(c: i64) -> Coef {
    Coef::from_integer(c.into())
}

/// `prod_{n >= 0} (1 - t^(e + p n))`, keeping only the factors that can reach
/// below `order`.
pub fn pochhammer(e: u32, p: u32, order: i64) -> Result<LaurentSeries, BuilderError> {
    if e == 0 {
        return Err(BuilderError::ZeroFactor);
    }
    assert!(p >= 1, "pochhammer step must be positive");
    if order <= 0 {
        return Ok(LaurentSeries::zero(order));
    }
    let len = order as usize;
    let mut c: Vec<BigInt> = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    let mut j = e as usize;
    while j < len {
        for i in (j..len).rev() {
            if !c[i - j].is_zero() {
                let d = c[i - j].clone();
                c[i] -= d;
            }
        }
        j += p as usize;
    }
    Ok(LaurentSeries::from_coeffs(
        0,
        c.into_iter().map(Coef::from_integer).collect(),
        order,
    ))
}

/// `psi(q^k) = sum_{n >= 0} q^(k n(n+1)/2)`.
pub fn psi(k: u32, order: i64) -> LaurentSeries {
    let step = 4 * k as i64;
    let mut coeffs = vec![Coef::zero(); order.max(0) as usize];
    let mut n = 0i64;
    loop {
        let e = step * n * (n + 1) / 2;
        if e >= order {
            break;
        }
        coeffs[e as usize] = Coef::one();
        n += 1;
    }
    LaurentSeries::from_coeffs(0, coeffs, order)
}

/// `psi(q^k)` through its product form `(q^{2k};q^{2k})_inf / (q^k;q^{2k})_inf`.
pub fn psi_product(k: u32, order: i64) -> Result<LaurentSeries, BuilderError> {
    if order <= 0 {
        return Ok(LaurentSeries::zero(order));
    }
    let num = pochhammer(8 * k, 8 * k, order)?;
    let den = pochhammer(4 * k, 8 * k, order)?;
    Ok(num.div_series(&den)?)
}

/// `phi(q^k) = sum_{n in Z} q^(k n^2)`.
pub fn phi(k: u32, order: i64) -> LaurentSeries {
    let step = 4 * k as i64;
    let mut coeffs = vec![Coef::zero(); order.max(0) as usize];
    if order > 0 {
        coeffs[0] = Coef::one();
    }
    let mut n = 1i64;
    while step * n * n < order {
        coeffs[(step * n * n) as usize] = int(2);
        n += 1;
    }
    LaurentSeries::from_coeffs(0, coeffs, order)
}

/// `Pi_{q^k} = q^{k/4} (q^{2k};q^{2k})_inf^2 / (q^k;q^{2k})_inf^2`.
pub fn pi_product(k: u32, order: i64) -> Result<LaurentSeries, BuilderError> {
    let rel = order - k as i64;
    if rel <= 0 {
        return Ok(LaurentSeries::zero(order));
    }
    let ratio = psi_product(k, rel)?;
    Ok((&ratio * &ratio).shift(k as i64))
}

/// `z_n = phi(q^n)^2`.
pub fn z_series(n: u32, order: i64) -> LaurentSeries {
    let p = phi(n, order);
    &p * &p
}

fn check_degree(n: u32) -> Result<(), BuilderError> {
    match n {
        3 | 5 => Ok(()),
        _ => Err(BuilderError::UnsupportedDegree(n)),
    }
}

/// The multiplier `m = z_1 / z_n` as a series.
pub fn m_series(n: u32, order: i64) -> Result<LaurentSeries, BuilderError> {
    check_degree(n)?;
    Ok(z_series(1, order).div_series(&z_series(n, order))?)
}

/// `16 q^k psi(q^{2k})^4 / phi(q^k)^4`, the modulus squared at nome `q^k`.
fn modulus_series(k: u32, order: i64) -> Result<LaurentSeries, BuilderError> {
    let shift = 4 * k as i64;
    let rel = order - shift;
    let p = psi(2 * k, rel).pow_int(4)?;
    let f = phi(k, rel).pow_int(4)?;
    Ok(p.div_series(&f)?.scale(&int(16)).shift(shift))
}

/// `alpha = 16 q psi(q^2)^4 / phi(q)^4`.
pub fn alpha_series(n: u32, order: i64) -> Result<LaurentSeries, BuilderError> {
    check_degree(n)?;
    modulus_series(1, order)
}

/// `beta = 16 q^n psi(q^{2n})^4 / phi(q^n)^4`.
pub fn beta_series(n: u32, order: i64) -> Result<LaurentSeries, BuilderError> {
    check_degree(n)?;
    modulus_series(n, order)
}

/// `m^3 - 2m^2 + 5m` for the degree-5 multiplier.
pub fn rho_squared_series(order: i64) -> Result<LaurentSeries, BuilderError> {
    let m = m_series(5, order)?;
    let m2 = &m * &m;
    let m3 = &m2 * &m;
    Ok(&(&m3 - &m2.scale(&int(2))) + &m.scale(&int(5)))
}

/// `rho = sqrt(m^3 - 2m^2 + 5m)` on the positive branch (constant term 2).
pub fn rho_series(order: i64) -> Result<LaurentSeries, BuilderError> {
    Ok(rho_squared_series(order)?.sqrt()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuilderKind {
    Pochhammer,
    Psi,
    Phi,
    Pi,
    Z,
    Multiplier,
    Alpha,
    Beta,
    Rho,
}

/// A single builder request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuilderSpec {
    pub kind: BuilderKind,
    pub k: u32,
    pub degree: u32,
    pub order: i64,
}

impl BuilderSpec {
    pub fn new(kind: BuilderKind, k: u32, order: i64) -> Self {
        BuilderSpec {
            kind,
            k,
            degree: 0,
            order,
        }
    }

    pub fn modular(kind: BuilderKind, degree: u32, order: i64) -> Self {
        BuilderSpec {
            kind,
            k: 1,
            degree,
            order,
        }
    }

    /// Smallest order at which the builder shows two nontrivial coefficients.
    pub fn min_order(&self) -> i64 {
        8 * self.k.max(1) as i64
    }

    pub fn validate(&self) -> Result<(), BuilderError> {
        if self.order < self.min_order() {
            return Err(BuilderError::OrderTooSmall {
                order: self.order,
                min: self.min_order(),
            });
        }
        match self.kind {
            BuilderKind::Multiplier | BuilderKind::Alpha | BuilderKind::Beta => {
                check_degree(self.degree)
            }
            BuilderKind::Rho if self.degree != 5 => {
                Err(BuilderError::UnsupportedDegree(self.degree))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<LaurentSeries, BuilderError> {
        self.validate()?;
        let (k, o) = (self.k, self.order);
        match self.kind {
            BuilderKind::Pochhammer => pochhammer(4 * k, 8 * k, o),
            BuilderKind::Psi => Ok(psi(k, o)),
            BuilderKind::Phi => Ok(phi(k, o)),
            BuilderKind::Pi => pi_product(k, o),
            BuilderKind::Z => Ok(z_series(k, o)),
            BuilderKind::Multiplier => m_series(self.degree, o),
            BuilderKind::Alpha => alpha_series(self.degree, o),
            BuilderKind::Beta => beta_series(self.degree, o),
            BuilderKind::Rho => rho_series(o),
        }
    }
}
