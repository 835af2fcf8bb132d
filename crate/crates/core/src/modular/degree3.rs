use super::{check_radicals, m_minus, normalize_goal, poly, rat, ProofError, ProofReport, Radical};
use crate::field::{QuadExt, RatFunc};

/// Proof goals for the degree-3 theorem; `±` goals are split by sign.
pub const DEGREE3_EQUATIONS: [&str; 9] = [
    "4-1", "4-2", "4-3", "4-4", "4-5", "4-6+", "4-6-", "44-7+", "44-7-",
];

/// Degree-3 parametrization in the multiplier `m`, over `Q(m)[s]` with
/// `s^2 = (m-1)(m+3)/m`.
#[derive(Debug, Clone)]
pub struct ParamTable3 {
    pub modulus: RatFunc,
    pub m: QuadExt,
    pub alpha: QuadExt,
    pub beta: QuadExt,
    /// `alpha^(1/2)`
    pub sqrt_alpha: QuadExt,
    /// `beta^(1/2)`
    pub sqrt_beta: QuadExt,
    /// `(beta/alpha)^(1/4)`
    pub beta_over_alpha_4: QuadExt,
    /// `(beta/alpha)^(1/2)`
    pub beta_over_alpha_2: QuadExt,
    /// `(alpha/beta)^(1/4)`
    pub alpha_over_beta_4: QuadExt,
    /// `(alpha beta)^(1/8)`
    pub alpha_beta_8: QuadExt,
}

impl ParamTable3 {
    pub fn new() -> Self {
        let u = rat(&m_minus(1) * &m_minus(-3), poly(&[0, 1]));
        let q = |r: RatFunc| QuadExt::rational(r, &u);
        let s = QuadExt::generator(&u);
        let m1 = m_minus(1);
        let m3 = m_minus(-3);

        let alpha = rat(&m1 * &m3.pow(3), poly(&[0, 0, 0, 16]));
        let beta = rat(&m1.pow(3) * &m3, poly(&[0, 16]));
        let sqrt_alpha = s.scale(&rat(m3.clone(), poly(&[0, 4])));
        let sqrt_beta = s.scale(&rat(m1.clone(), poly(&[4])));
        let beta_over_alpha_4 = s.scale(&rat(poly(&[0, 1]), m3.clone()));
        let beta_over_alpha_2 = q(rat(&poly(&[0, 1]) * &m1, m3.clone()));
        let alpha_over_beta_4 = beta_over_alpha_4.inv().expect("nonzero atom");
        let alpha_beta_8 = s.scale(&rat(poly(&[1]), poly(&[2])));

        ParamTable3 {
            m: q(RatFunc::var()),
            alpha: q(alpha),
            beta: q(beta),
            sqrt_alpha,
            sqrt_beta,
            beta_over_alpha_4,
            beta_over_alpha_2,
            alpha_over_beta_4,
            alpha_beta_8,
            modulus: u,
        }
    }

    fn radicals(&self) -> Vec<Radical> {
        let alpha = self.alpha.a().clone();
        let beta = self.beta.a().clone();
        let ba = beta.checked_div(&alpha).expect("alpha nonzero");
        vec![
            Radical { name: "alpha^(1/2)", value: self.sqrt_alpha.clone(), power: 2, target: alpha.clone() },
            Radical { name: "beta^(1/2)", value: self.sqrt_beta.clone(), power: 2, target: beta.clone() },
            Radical { name: "(beta/alpha)^(1/4)", value: self.beta_over_alpha_4.clone(), power: 4, target: ba.clone() },
            Radical { name: "(beta/alpha)^(1/2)", value: self.beta_over_alpha_2.clone(), power: 2, target: ba.clone() },
            Radical {
                name: "(alpha/beta)^(1/4)",
                value: self.alpha_over_beta_4.clone(),
                power: 4,
                target: ba.inv().expect("nonzero"),
            },
            Radical { name: "(alpha beta)^(1/8)", value: self.alpha_beta_8.clone(), power: 8, target: &alpha * &beta },
        ]
    }

    /// Every atom raised to its root index must give back its rational target.
    pub fn validate(&self) -> Result<(), ProofError> {
        check_radicals(&self.radicals())?;
        let quarter_product = &self.alpha_over_beta_4 * &self.beta_over_alpha_4;
        if quarter_product != QuadExt::from_int(1, &self.modulus) {
            return Err(ProofError::AtomCheck("(alpha/beta)^(1/4) * (beta/alpha)^(1/4)".into()));
        }
        Ok(())
    }

    fn int(&self, c: i64) -> QuadExt {
        QuadExt::from_int(c, &self.modulus)
    }

    fn m_pow(&self, e: i32) -> QuadExt {
        self.m.pow(e).expect("m is invertible")
    }
}

impl Default for ParamTable3 {
    fn default() -> Self {
        Self::new()
    }
}

/// Replays one goal of the degree-3 theorem.
pub fn prove_degree3(eq_id: &str) -> Result<ProofReport, ProofError> {
    let t = ParamTable3::new();
    t.validate()?;
    let id = normalize_goal(eq_id);
    let (base, sign) = match id.strip_suffix('+') {
        Some(b) => (b.to_string(), 1),
        None => match id.strip_suffix('-') {
            Some(b) if b.contains('-') => (b.to_string(), -1),
            _ => (id.clone(), 0),
        },
    };
    let u = &t.modulus;
    let one = t.int(1);
    let m = &t.m;
    let inv_m = t.m_pow(-1);
    let ba2 = &t.beta_over_alpha_2;
    let ba4 = &t.beta_over_alpha_4;
    let ab4 = &t.alpha_over_beta_4;
    let sg = |c: i64| t.int(sign * c);

    let report = match (base.as_str(), sign) {
        ("4-1", 0) => {
            let lhs = m - ba2;
            let rhs = &one + &(&t.int(3) * &(&inv_m * ba2));
            ProofReport::new(&id, lhs, rhs)?
        }
        ("4-2", 0) => {
            let m2 = t.m_pow(2);
            let lhs = &(&m2 * &t.alpha) + &t.beta.scale_int(3);
            let inner = &(&m2 * &t.sqrt_alpha) - &t.sqrt_beta.scale_int(3);
            let rhs = &t.alpha_beta_8.scale_int(2) * &inner;
            let mut r = ProofReport::new(&id, lhs.clone(), rhs)?;
            // (m-1)(3+m)(m^2+3) / (4m)
            let printed = rat(&(&m_minus(1) * &m_minus(-3)) * &poly(&[3, 0, 1]), poly(&[0, 4]));
            r.compare_printed(lhs, QuadExt::rational(printed, u))?;
            r
        }
        ("4-3", 0) => {
            let x = &inv_m * ba2;
            let lhs = &t.int(16) * &x;
            let rhs = &(&t.alpha * &(&one - &x)) * &(&one + &x.scale_int(3)).pow(3)?;
            ProofReport::new(&id, lhs, rhs)?
        }
        ("4-4", 0) => {
            let lhs = &(&inv_m * ba4) * &(&one + &t.alpha);
            let ba = ba2.pow(2)?;
            let bracket = &(&one + &(&t.m_pow(-2) * ba2).scale_int(18))
                - &(&t.m_pow(-4) * &ba).scale_int(27);
            let rhs = &t.sqrt_alpha.scale(&rat(poly(&[1]), poly(&[4]))) * &bracket;
            let mut r = ProofReport::new(&id, lhs.clone(), rhs)?;
            r.compare_printed(lhs, printed_4_4(&t)?)?;
            r
        }
        ("4-5", 0) => {
            let lhs = &(m * ab4) * &(&one + &t.beta);
            let ab = ab4.pow(4)?;
            let ab2 = ab4.pow(2)?;
            let bracket = &(&(&t.m_pow(4) * &ab) - &(&t.m_pow(2) * &ab2).scale_int(6)) - &t.int(3);
            let rhs = &t.sqrt_beta.scale(&rat(poly(&[1]), poly(&[4]))) * &bracket;
            let mut r = ProofReport::new(&id, lhs.clone(), rhs)?;
            r.compare_printed(lhs, printed_4_5(&t)?)?;
            r
        }
        ("4-6", 1 | -1) => {
            let lhs = &(&inv_m * ba4) * &(&one + &(&sg(1) * &t.sqrt_alpha)).pow(2)?;
            let y = &inv_m * ba4;
            let rhs = &(&t.sqrt_alpha.scale(&rat(poly(&[1]), poly(&[4]))) * &(&one - &(&sg(1) * &y)))
                * &(&one + &(&sg(3) * &y)).pow(3)?;
            let mut r = ProofReport::new(&id, lhs.clone(), rhs)?;
            let tail = rat(&m_minus(1) * &m_minus(-3), poly(&[0, 0, 2]));
            let printed = &printed_4_4(&t)? + &QuadExt::rational(tail, u).scale_int(sign);
            r.compare_printed(lhs, printed)?;
            r
        }
        ("44-7", 1 | -1) => {
            let w = m * ab4;
            let lhs = &w * &(&one + &(&sg(1) * &t.sqrt_beta)).pow(2)?;
            let rhs = &(&t.sqrt_beta.scale(&rat(poly(&[1]), poly(&[4]))) * &(&w - &sg(1)).pow(3)?)
                * &(&w + &sg(3));
            let mut r = ProofReport::new(&id, lhs.clone(), rhs)?;
            // (m^4-6m^2+24m-3)/(16m) * sqrt(m(3+m)/(m-1)) ± (m^2+2m-3)/2
            let root = Radical {
                name: "sqrt(m(3+m)/(m-1))",
                value: QuadExt::generator(u).scale(&rat(poly(&[0, 1]), m_minus(1))),
                power: 2,
                target: rat(&poly(&[0, 1]) * &m_minus(-3), m_minus(1)),
            };
            check_radicals(std::slice::from_ref(&root))?;
            let head = root.value.scale(&rat(poly(&[-3, 24, -6, 0, 1]), poly(&[0, 16])));
            let tail = rat(&m_minus(1) * &m_minus(-3), poly(&[2]));
            let printed = &head + &QuadExt::rational(tail, u).scale_int(sign);
            r.compare_printed(lhs, printed)?;
            r
        }
        _ => {
            return Err(ProofError::UnknownEquation {
                degree: 3,
                id: eq_id.to_string(),
            })
        }
    };
    Ok(report)
}

/// `(m^4+24m^3+18m^2-27)/(16m^3) * sqrt((m-1)/(m(3+m)))`
fn printed_4_4(t: &ParamTable3) -> Result<QuadExt, ProofError> {
    let root = Radical {
        name: "sqrt((m-1)/(m(3+m)))",
        value: QuadExt::generator(&t.modulus).scale(&rat(poly(&[1]), m_minus(-3))),
        power: 2,
        target: rat(m_minus(1), &poly(&[0, 1]) * &m_minus(-3)),
    };
    check_radicals(std::slice::from_ref(&root))?;
    Ok(root.value.scale(&rat(poly(&[-27, 0, 18, 24, 1]), poly(&[0, 0, 0, 16]))))
}

/// `(m^4-6m^2+24m-3)/16 * sqrt((3+m)/(m(m-1)))`
fn printed_4_5(t: &ParamTable3) -> Result<QuadExt, ProofError> {
    let root = Radical {
        name: "sqrt((3+m)/(m(m-1)))",
        value: QuadExt::generator(&t.modulus).scale(&rat(poly(&[1]), m_minus(1))),
        power: 2,
        target: rat(m_minus(-3), &poly(&[0, 1]) * &m_minus(1)),
    };
    check_radicals(std::slice::from_ref(&root))?;
    Ok(root.value.scale(&rat(poly(&[-3, 24, -6, 0, 1]), poly(&[16]))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_validates() {
        ParamTable3::new().validate().unwrap();
    }

    #[test]
    fn every_goal_holds() {
        for id in DEGREE3_EQUATIONS {
            let r = prove_degree3(id).unwrap();
            assert!(r.sides_equal, "{id}: {} vs {}", r.lhs_canonical, r.rhs_canonical);
        }
    }

    #[test]
    fn printed_common_value_of_4_2() {
        let r = prove_degree3("4-2").unwrap();
        assert_eq!(r.paper_form_match, Some(true));
        assert!(r.lhs_canonical.is_rational());
        assert_eq!(
            r.lhs_canonical.a().to_string(),
            "((1/4)*m^4 + (1/2)*m^3 + (3/2)*m - (9/4))/m"
        );
    }

    #[test]
    fn printed_forms_of_root_goals() {
        for id in ["4-4", "4-5", "4-6+", "4-6-", "44-7+", "44-7-"] {
            assert_eq!(prove_degree3(id).unwrap().paper_form_match, Some(true), "{id}");
        }
        assert_eq!(prove_degree3("4-1").unwrap().paper_form_match, None);
    }

    #[test]
    fn typographic_minus_and_unknown_goal() {
        assert!(prove_degree3("4-6−").unwrap().sides_equal);
        assert!(prove_degree3("EQ44-7-").unwrap().sides_equal);
        assert!(matches!(
            prove_degree3("4-7"),
            Err(ProofError::UnknownEquation { degree: 3, .. })
        ));
        assert!(prove_degree3("4-1+").is_err());
    }
}
