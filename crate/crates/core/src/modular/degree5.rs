use super::{check_radicals, m_minus, normalize_goal, poly, rat, ProofError, ProofReport, Radical};
use crate::field::{Poly, QuadExt, RatFunc};

pub const DEGREE5_EQUATIONS: [&str; 5] = ["2-1", "2-2", "2-3", "2-4", "2-5"];

/// Degree-5 parametrization over `Q(m)[rho]` with `rho^2 = m^3 - 2m^2 + 5m`.
#[derive(Debug, Clone)]
pub struct ParamTable5 {
    pub modulus: RatFunc,
    pub m: QuadExt,
    pub rho: QuadExt,
    /// `(alpha/beta)^(1/4) = (2m+rho)/(m(m-1))`
    pub alpha_over_beta_4: QuadExt,
    /// `(beta/alpha)^(1/4) = (2m-rho)/(5-m)`
    pub beta_over_alpha_4: QuadExt,
    /// `((1-beta)/(1-alpha))^(1/4) = (2m+rho)/(5-m)`
    pub co_beta_over_co_alpha_4: QuadExt,
    /// `((1-alpha)/(1-beta))^(1/4) = (2m-rho)/(m(m-1))`
    pub co_alpha_over_co_beta_4: QuadExt,
    /// `(alpha beta)^(1/2)`
    pub sqrt_alpha_beta: QuadExt,
    /// `((1-alpha)(1-beta))^(1/2)`
    pub sqrt_co_alpha_co_beta: QuadExt,
    pub alpha: QuadExt,
    pub one_minus_alpha: QuadExt,
    pub beta: QuadExt,
    pub one_minus_beta: QuadExt,
}

impl ParamTable5 {
    pub fn new() -> Self {
        let u = RatFunc::from_poly(poly(&[0, 5, -2, 1]));
        let q = |r: RatFunc| QuadExt::rational(r, &u);
        let rho = QuadExt::generator(&u);
        let two_m = q(RatFunc::from_poly(poly(&[0, 2])));
        let m_m1 = RatFunc::from_poly(&poly(&[0, 1]) * &m_minus(1));
        let five_minus_m = RatFunc::from_poly(poly(&[5, -1]));
        let inv = |r: &RatFunc| r.inv().expect("nonzero");

        let plus = &two_m + &rho;
        let minus = &two_m - &rho;
        let alpha_over_beta_4 = plus.scale(&inv(&m_m1));
        let beta_over_alpha_4 = minus.scale(&inv(&five_minus_m));
        let co_beta_over_co_alpha_4 = plus.scale(&inv(&five_minus_m));
        let co_alpha_over_co_beta_4 = minus.scale(&inv(&m_m1));

        let cubic = q(RatFunc::from_poly(poly(&[0, 20, -16, 4])));
        let tail = &rho * &q(RatFunc::from_poly(poly(&[-5, 0, 1])));
        let over = rat(poly(&[1]), poly(&[0, 0, 16]));
        let sqrt_alpha_beta = (&cubic + &tail).scale(&over);
        let sqrt_co_alpha_co_beta = (&cubic - &tail).scale(&over);

        let sq = |x: &QuadExt| x * x;
        let alpha = &sq(&alpha_over_beta_4) * &sqrt_alpha_beta;
        let beta = &sq(&beta_over_alpha_4) * &sqrt_alpha_beta;
        let one_minus_alpha = &sq(&co_alpha_over_co_beta_4) * &sqrt_co_alpha_co_beta;
        let one_minus_beta = &sq(&co_beta_over_co_alpha_4) * &sqrt_co_alpha_co_beta;

        ParamTable5 {
            m: q(RatFunc::var()),
            rho,
            alpha_over_beta_4,
            beta_over_alpha_4,
            co_beta_over_co_alpha_4,
            co_alpha_over_co_beta_4,
            sqrt_alpha_beta,
            sqrt_co_alpha_co_beta,
            alpha,
            one_minus_alpha,
            beta,
            one_minus_beta,
            modulus: u,
        }
    }

    /// Consistency of the imported parametrization: the complements really
    /// are complements, the quarter powers are reciprocal, the square roots
    /// square back, and `(2m+rho)(2m-rho) = m(m-1)(5-m)`.
    pub fn validate(&self) -> Result<(), ProofError> {
        let one = QuadExt::from_int(1, &self.modulus);
        let checks = [
            ("alpha + (1-alpha) = 1", &self.alpha + &self.one_minus_alpha == one),
            ("beta + (1-beta) = 1", &self.beta + &self.one_minus_beta == one),
            (
                "(alpha/beta)^(1/4) (beta/alpha)^(1/4) = 1",
                &self.alpha_over_beta_4 * &self.beta_over_alpha_4 == one,
            ),
            (
                "((1-alpha)/(1-beta))^(1/4) ((1-beta)/(1-alpha))^(1/4) = 1",
                &self.co_alpha_over_co_beta_4 * &self.co_beta_over_co_alpha_4 == one,
            ),
            (
                "((alpha beta)^(1/2))^2 = alpha beta",
                self.sqrt_alpha_beta.pow(2)? == &self.alpha * &self.beta,
            ),
            (
                "(((1-alpha)(1-beta))^(1/2))^2 = (1-alpha)(1-beta)",
                self.sqrt_co_alpha_co_beta.pow(2)? == &self.one_minus_alpha * &self.one_minus_beta,
            ),
            (
                "((alpha/beta)^(1/4))^4 = alpha/beta",
                self.alpha_over_beta_4.pow(4)? == self.alpha.checked_div(&self.beta)?,
            ),
            (
                "(((1-alpha)/(1-beta))^(1/4))^4 = (1-alpha)/(1-beta)",
                self.co_alpha_over_co_beta_4.pow(4)?
                    == self.one_minus_alpha.checked_div(&self.one_minus_beta)?,
            ),
        ];
        for (name, ok) in checks {
            if !ok {
                return Err(ProofError::AtomCheck(name.to_string()));
            }
        }
        let two_m = QuadExt::rational(RatFunc::from_poly(poly(&[0, 2])), &self.modulus);
        let conj = &(&two_m + &self.rho) * &(&two_m - &self.rho);
        let expected = RatFunc::from_poly(&(&poly(&[0, 1]) * &m_minus(1)) * &poly(&[5, -1]));
        check_radicals(&[Radical {
            name: "rho",
            value: self.rho.clone(),
            power: 2,
            target: self.modulus.clone(),
        }])?;
        if conj != QuadExt::rational(expected, &self.modulus) {
            return Err(ProofError::AtomCheck("(2m+rho)(2m-rho)".into()));
        }
        Ok(())
    }
}

impl Default for ParamTable5 {
    fn default() -> Self {
        Self::new()
    }
}

/// `p + r*rho` from two coefficient lists (degree 0 upward).
fn with_rho(p: &[i64], r: &[i64], u: &RatFunc) -> QuadExt {
    QuadExt::new(
        RatFunc::from_poly(Poly::from_ints(p)),
        RatFunc::from_poly(Poly::from_ints(r)),
        u.clone(),
    )
}

/// The polynomials `A(m)`, `B(m)`, `C(m)`, `D(m)` exactly as printed in the
/// degree-5 proof, in that order.
pub fn printed_polynomials() -> [(&'static str, QuadExt); 4] {
    let u = ParamTable5::new().modulus;
    let a = with_rho(
        &[0, -28, -504, -1280, -40, -40, -200, 64, -24, 4],
        &[-1, -70, -470, -470, 80, -98, 6, -2, 1],
        &u,
    );
    let b = with_rho(&[0, -18, -102, -4, 4, -10, 2], &[-1, -27, -42, 10, -5, 1], &u);
    let c = with_rho(
        &[0, -1_562_500, 1_875_000, -1_000_000, 625_000, 25_000, 5_000, 32_000, 2_520, 28],
        &[390_625, -156_250, 93_750, -306_250, 50_000, -58_750, -11_750, -350, -1],
        &u,
    );
    let d = with_rho(
        &[0, -6_250, 6_250, -500, 100, 510, 18],
        &[3_125, -3_125, 1_250, -1_050, -135, -1],
        &u,
    );
    [("A", a), ("B", b), ("C", c), ("D", d)]
}

/// Replays one goal of the degree-5 theorem.
pub fn prove_degree5(eq_id: &str) -> Result<ProofReport, ProofError> {
    let t = ParamTable5::new();
    t.validate()?;
    let id = normalize_goal(eq_id);
    let u = &t.modulus;
    let int = |c: i64| QuadExt::from_int(c, u);
    let one = int(1);
    let m = &t.m;
    let inv_m = m.inv()?;
    let ab4 = &t.alpha_over_beta_4;
    let ba4 = &t.beta_over_alpha_4;
    let ab2 = ab4.pow(2)?;
    let ba2 = ba4.pow(2)?;
    let printed = printed_polynomials();
    let frac = |n: Poly, d: Poly| QuadExt::rational(rat(n, d), u);

    let (lhs, rhs, prefactor, printed_value) = match id.as_str() {
        "2-1" => {
            let x = m * &ab2;
            let inv_beta = t.beta.inv()?;
            let lhs = &(&x.scale_int(256) * &inv_beta) * &(&one - &inv_beta);
            let rhs = &(&int(5) - &x) * &(&x - &one).pow(5)?;
            // (2/(m-1))^2
            (lhs, rhs, Some(frac(poly(&[4]), m_minus(1).pow(2))), printed[0].1.clone())
        }
        "2-2" => {
            let x = &inv_m * &ba2;
            let inv_alpha = t.alpha.inv()?;
            let lhs = &(&x.scale_int(256) * &inv_alpha) * &(&one - &inv_alpha);
            let rhs = &(&x.scale_int(5) - &one).pow(5)? * &(&one - &x);
            // -2^12 m^2 / (m-5)^12
            (lhs, rhs, Some(frac(poly(&[0, 0, -4096]), m_minus(5).pow(12))), printed[2].1.clone())
        }
        "2-3" => {
            let x = &inv_m * ba4;
            let lhs = &x * &(&t.alpha - &one).pow(2)?;
            let rhs = &(&t.alpha.scale(&rat(poly(&[1]), poly(&[16]))) * &(&x.scale_int(5) - &one).pow(5)?)
                * &(&x - &one);
            // (1-m) / (256 m^6 (m-5))
            let den = &poly(&[0, 0, 0, 0, 0, 0, 256]) * &m_minus(5);
            (lhs, rhs, Some(frac(poly(&[1, -1]), den)), printed[3].1.clone())
        }
        "2-4" => {
            let x = m * ab4;
            let lhs = &x * &(&t.beta - &one).pow(2)?;
            let rhs = &(&t.beta.scale(&rat(poly(&[1]), poly(&[16]))) * &(&int(5) - &x))
                * &(&one - &x).pow(5)?;
            // (m-5) / (256 m (m-1))
            let den = &poly(&[0, 256]) * &m_minus(1);
            (lhs, rhs, Some(frac(m_minus(5), den)), printed[1].1.clone())
        }
        "2-5" => {
            let x = m * ab4;
            let y = m * &ab2;
            let lhs = (&x - &y).pow(2)?;
            let rhs = &(&y * &(&one - &x)) * &(&int(5) - &x);
            // (m-5)^2 (m^3 - m^2 + 7m + 1 + (2m+2) rho) / (m-1)^4
            let inner = with_rho(&[1, 7, -1, 1], &[2, 2], u);
            let value = &inner * &frac(m_minus(5).pow(2), m_minus(1).pow(4));
            (lhs, rhs, None, value)
        }
        _ => {
            return Err(ProofError::UnknownEquation {
                degree: 5,
                id: eq_id.to_string(),
            })
        }
    };
    let mut report = ProofReport::new(&id, lhs.clone(), rhs)?;
    let computed = match prefactor {
        Some(p) => lhs.checked_div(&p)?,
        None => lhs,
    };
    report.compare_printed(computed, printed_value)?;
    Ok(report)
}
