use super::{m_minus, poly, ParamTable3, ParamTable5, ProofError};
use crate::field::{Poly, QuadExt, RatFunc};
use crate::series::{Coef, LaurentSeries, SeriesError};
use crate::theta::{alpha_series, beta_series, m_series, rho_series};

/// `a(m) + b(m) s` at series values of `m` and `s`.
pub fn eval_at_series(
    x: &QuadExt,
    m_val: &LaurentSeries,
    s_val: &LaurentSeries,
) -> Result<LaurentSeries, SeriesError> {
    x.eval_series(m_val, s_val)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoBranch {
    Positive,
    Negative,
}

/// One series-level identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamCheck {
    pub name: String,
    pub valid_order: i64,
    /// `(exponent, lhs coefficient, rhs coefficient)` of the first mismatch.
    pub first_failure: Option<(i64, Coef, Coef)>,
}

impl ParamCheck {
    fn compare(name: &str, lhs: &LaurentSeries, rhs: &LaurentSeries, order: i64) -> Result<Self, SeriesError> {
        let valid_order = lhs.order().min(rhs.order()).min(order);
        Ok(ParamCheck {
            name: name.to_string(),
            valid_order,
            first_failure: lhs.first_difference(rhs, valid_order)?,
        })
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamReport {
    pub degree: u32,
    pub order: i64,
    pub checks: Vec<ParamCheck>,
}

impl ParamReport {
    pub fn verified(&self) -> bool {
        self.checks.iter().all(ParamCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&ParamCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

fn poly_at(p: &Poly, m: &LaurentSeries) -> LaurentSeries {
    p.eval_series(m)
}

/// Checks the imported parametrizations of `alpha` and `beta` in terms of
/// the multiplier against their theta-function expansions, with
/// denominators cleared.
pub fn check_param_series(degree: u32, order: i64) -> Result<ParamReport, ProofError> {
    check_param_series_with_branch(degree, order, RhoBranch::Positive)
}

/// As [`check_param_series`], choosing the sign of `rho` for degree 5. The
/// negative branch must fail.
pub fn check_param_series_with_branch(
    degree: u32,
    order: i64,
    branch: RhoBranch,
) -> Result<ParamReport, ProofError> {
    let m = m_series(degree, order)?;
    let alpha = alpha_series(degree, order)?;
    let beta = beta_series(degree, order)?;
    let one = LaurentSeries::one(order);
    let mut checks = Vec::new();
    match degree {
        3 => {
            let m1 = m_minus(1);
            let m3 = m_minus(-3);
            let lhs = &poly_at(&poly(&[0, 0, 0, 16]), &m) * &alpha;
            let rhs = poly_at(&(&m1 * &m3.pow(3)), &m);
            checks.push(ParamCheck::compare("16 m^3 alpha = (m-1)(m+3)^3", &lhs, &rhs, order)?);
            let lhs = &poly_at(&poly(&[0, 16]), &m) * &beta;
            let rhs = poly_at(&(&m1.pow(3) * &m3), &m);
            checks.push(ParamCheck::compare("16 m beta = (m-1)^3 (m+3)", &lhs, &rhs, order)?);
        }
        5 => {
            let t = ParamTable5::new();
            let rho = match branch {
                RhoBranch::Positive => rho_series(order)?,
                RhoBranch::Negative => -&rho_series(order)?,
            };
            let u = &t.modulus;
            let two_m = QuadExt::rational(RatFunc::from_poly(poly(&[0, 2])), u);
            let cubic = QuadExt::rational(RatFunc::from_poly(poly(&[0, 20, -16, 4])), u);
            let tail = &t.rho * &QuadExt::rational(RatFunc::from_poly(poly(&[-5, 0, 1])), u);
            let plus = (&two_m + &t.rho).pow(2)?;
            let minus = (&two_m - &t.rho).pow(2)?;
            let sab = &cubic + &tail;
            let s1ab = &cubic - &tail;
            // 16 m^2 (5-m)^2 and 16 m^2 * m^2 (m-1)^2
            let c_beta = &poly(&[0, 0, 16]) * &poly(&[5, -1]).pow(2);
            let c_alpha = &poly(&[0, 0, 0, 0, 16]) * &m_minus(1).pow(2);
            let cases = [
                ("16m^2(5-m)^2 beta = (2m-rho)^2 (4m^3-16m^2+20m+rho(m^2-5))", &c_beta, &beta, &minus * &sab),
                ("16m^4(m-1)^2 alpha = (2m+rho)^2 (4m^3-16m^2+20m+rho(m^2-5))", &c_alpha, &alpha, &plus * &sab),
                ("16m^2(5-m)^2 (1-beta) = (2m+rho)^2 (4m^3-16m^2+20m-rho(m^2-5))", &c_beta, &(&one - &beta), &plus * &s1ab),
                ("16m^4(m-1)^2 (1-alpha) = (2m-rho)^2 (4m^3-16m^2+20m-rho(m^2-5))", &c_alpha, &(&one - &alpha), &minus * &s1ab),
            ];
            for (name, cleared, value, rhs) in cases {
                let lhs = &poly_at(cleared, &m) * value;
                let rhs = rhs.eval_series(&m, &rho)?;
                checks.push(ParamCheck::compare(name, &lhs, &rhs, order)?);
            }
        }
        d => return Err(ProofError::UnsupportedDegree(d)),
    }
    Ok(ParamReport {
        degree,
        order,
        checks,
    })
}

fn root4(x: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
    x.sqrt()?.sqrt()
}

/// Evaluates every symbolic atom of the parametrization table at the series
/// multiplier and compares it with the same quantity built from the theta
/// expansions of `alpha` and `beta` by series roots.
pub fn check_atom_series(degree: u32, order: i64) -> Result<ParamReport, ProofError> {
    let m = m_series(degree, order)?;
    let alpha = alpha_series(degree, order)?;
    let beta = beta_series(degree, order)?;
    let one = LaurentSeries::one(order);
    let ba = beta.div_series(&alpha)?;
    let ab = alpha.div_series(&beta)?;
    let mut targets: Vec<(&str, QuadExt, LaurentSeries)> = Vec::new();
    let s = match degree {
        3 => {
            let t = ParamTable3::new();
            let s = t.modulus.eval_series(&m)?.sqrt()?;
            targets.push(("alpha", t.alpha, alpha.clone()));
            targets.push(("beta", t.beta, beta.clone()));
            targets.push(("alpha^(1/2)", t.sqrt_alpha, alpha.sqrt()?));
            targets.push(("beta^(1/2)", t.sqrt_beta, beta.sqrt()?));
            targets.push(("(beta/alpha)^(1/4)", t.beta_over_alpha_4, root4(&ba)?));
            targets.push(("(beta/alpha)^(1/2)", t.beta_over_alpha_2, ba.sqrt()?));
            targets.push(("(alpha/beta)^(1/4)", t.alpha_over_beta_4, root4(&ab)?));
            targets.push(("(alpha beta)^(1/8)", t.alpha_beta_8, root4(&(&alpha * &beta))?.sqrt()?));
            s
        }
        5 => {
            let t = ParamTable5::new();
            let co_a = &one - &alpha;
            let co_b = &one - &beta;
            targets.push(("(alpha/beta)^(1/4)", t.alpha_over_beta_4, root4(&ab)?));
            targets.push(("(beta/alpha)^(1/4)", t.beta_over_alpha_4, root4(&ba)?));
            targets.push(("((1-beta)/(1-alpha))^(1/4)", t.co_beta_over_co_alpha_4, root4(&co_b.div_series(&co_a)?)?));
            targets.push(("((1-alpha)/(1-beta))^(1/4)", t.co_alpha_over_co_beta_4, root4(&co_a.div_series(&co_b)?)?));
            targets.push(("(alpha beta)^(1/2)", t.sqrt_alpha_beta, (&alpha * &beta).sqrt()?));
            targets.push(("((1-alpha)(1-beta))^(1/2)", t.sqrt_co_alpha_co_beta, (&co_a * &co_b).sqrt()?));
            targets.push(("alpha", t.alpha, alpha.clone()));
            targets.push(("1-alpha", t.one_minus_alpha, co_a.clone()));
            targets.push(("beta", t.beta, beta.clone()));
            targets.push(("1-beta", t.one_minus_beta, co_b.clone()));
            rho_series(order)?
        }
        d => return Err(ProofError::UnsupportedDegree(d)),
    };
    let mut checks = Vec::new();
    for (name, atom, series) in targets {
        let value = eval_at_series(&atom, &m, &s)?;
        checks.push(ParamCheck::compare(name, &value, &series, order)?);
    }
    Ok(ParamReport {
        degree,
        order,
        checks,
    })
}
