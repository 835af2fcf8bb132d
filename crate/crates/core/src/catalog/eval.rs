use std::collections::HashMap;

use super::expr::Expr;
use super::CatalogError;
use crate::series::{Coef, LaurentSeries};
use crate::theta::{phi, pi_product, psi, BuilderError};

/// Smallest order accepted by [`evaluate`].
pub const MIN_ORDER: i64 = 8;

/// Evaluates expressions at a fixed order, building each theta atom once.
pub struct Evaluator {
    order: i64,
    atoms: HashMap<Expr, LaurentSeries>,
}

impl Evaluator {
    pub fn new(order: i64) -> Result<Self, CatalogError> {
        if order < MIN_ORDER {
            return Err(CatalogError::InsufficientPrecision {
                order,
                needed: MIN_ORDER,
            });
        }
        Ok(Evaluator {
            order,
            atoms: HashMap::new(),
        })
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn eval(&mut self, e: &Expr) -> Result<LaurentSeries, CatalogError> {
        let mut path = Vec::new();
        self.walk(e, &mut path)
    }

    fn atom(&mut self, e: &Expr) -> Result<LaurentSeries, BuilderError> {
        if let Some(s) = self.atoms.get(e) {
            return Ok(s.clone());
        }
        let o = self.order;
        let s = match e {
            Expr::Pi(k) => pi_product(*k, o)?,
            Expr::Psi(k) => psi(*k, o),
            Expr::Phi(k) => phi(*k, o),
            _ => unreachable!("not a theta atom"),
        };
        self.atoms.insert(e.clone(), s.clone());
        Ok(s)
    }

    fn walk(&mut self, e: &Expr, path: &mut Vec<usize>) -> Result<LaurentSeries, CatalogError> {
        let fail = |path: &[usize], source: BuilderError| CatalogError::Eval {
            path: format_path(path),
            node: e.kind_name().to_string(),
            source,
        };
        let child = |me: &mut Self, i: usize, c: &Expr, path: &mut Vec<usize>| {
            path.push(i);
            let r = me.walk(c, path);
            path.pop();
            r
        };
        let o = self.order;
        Ok(match e {
            Expr::Pi(k) | Expr::Psi(k) | Expr::Phi(k) if *k == 0 => {
                return Err(fail(path, BuilderError::ZeroFactor))
            }
            Expr::Pi(_) | Expr::Psi(_) | Expr::Phi(_) => self.atom(e).map_err(|s| fail(path, s))?,
            Expr::QPow(r) => {
                let four = r * Coef::from_integer(4.into());
                let exp: i64 = four.to_integer().try_into().expect("q-power exponent fits in i64");
                LaurentSeries::monomial(Coef::from_integer(1.into()), exp, o + exp.max(0))
            }
            Expr::Const(c) => LaurentSeries::constant(c.clone(), o),
            Expr::Add(a, b) => &child(self, 0, a, path)? + &child(self, 1, b, path)?,
            Expr::Sub(a, b) => &child(self, 0, a, path)? - &child(self, 1, b, path)?,
            Expr::Mul(a, b) => &child(self, 0, a, path)? * &child(self, 1, b, path)?,
            Expr::Div(a, b) => {
                let x = child(self, 0, a, path)?;
                let y = child(self, 1, b, path)?;
                x.div_series(&y).map_err(|s| fail(path, s.into()))?
            }
            Expr::Pow(a, n) => child(self, 0, a, path)?
                .pow_int(*n)
                .map_err(|s| fail(path, s.into()))?,
            Expr::Sqrt(a) => child(self, 0, a, path)?
                .sqrt()
                .map_err(|s| fail(path, s.into()))?,
        })
    }
}

fn format_path(path: &[usize]) -> String {
    let mut s = String::from("$");
    for i in path {
        s.push('.');
        s.push_str(&i.to_string());
    }
    s
}

/// Expands `e` as a Laurent series in `t` (`q = t^4`). Theta atoms are
/// built to `order`; the result carries whatever order survives the
/// arithmetic.
pub fn evaluate(e: &Expr, order: i64) -> Result<LaurentSeries, CatalogError> {
    Evaluator::new(order)?.eval(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse;
    use crate::series::SeriesError;

    #[test]
    fn atom_valuations() {
        assert_eq!(evaluate(&Expr::pi(1), 40).unwrap().valuation(), 1);
        let e = Expr::sqrt(Expr::mul(Expr::pi(1), Expr::pi(9)));
        assert_eq!(evaluate(&e, 80).unwrap().valuation(), 5);
    }

    #[test]
    fn atoms_beyond_the_order_are_unknown() {
        let s = evaluate(&Expr::pi(300), 200).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.order(), 200);
    }

    #[test]
    fn quarter_powers_of_q() {
        let s = evaluate(&parse("q^{-3/4} * psi(q)").unwrap(), 40).unwrap();
        assert_eq!(s.valuation(), -3);
        assert_eq!(s.order(), 37);
        assert_eq!(s.coefficient(1).unwrap(), Coef::from_integer(1.into()));
    }

    #[test]
    fn constant_identity() {
        let e = parse("Pi(q)^2/(Pi(q^2)*Pi(q^4)) - Pi(q^2)^2/Pi(q^4)^2 - 4").unwrap();
        let s = evaluate(&e, 120).unwrap();
        assert!(s.order() > 60);
        assert!(s.is_zero_up_to(s.order()).unwrap());
    }

    #[test]
    fn errors_carry_the_path() {
        let e = parse("1 + psi(q) / (Pi(q) - Pi(q))").unwrap();
        match evaluate(&e, 40).unwrap_err() {
            CatalogError::Eval { path, node, source } => {
                assert_eq!(path, "$.1");
                assert_eq!(node, "/");
                assert!(matches!(
                    source,
                    BuilderError::Series(SeriesError::DivisionByZeroSeries { .. })
                ));
            }
            e => panic!("{e:?}"),
        }
        let e = parse("2 * sqrt(Pi(q))").unwrap();
        match evaluate(&e, 40).unwrap_err() {
            CatalogError::Eval { path, source, .. } => {
                assert_eq!(path, "$.1");
                assert!(matches!(source, BuilderError::Series(SeriesError::OddValuation { .. })));
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(
            evaluate(&Expr::pi(1), 7),
            Err(CatalogError::InsufficientPrecision { order: 7, needed: 8 })
        ));
    }
}
