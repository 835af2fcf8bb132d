use std::time::{Duration, Instant};

use super::eval::Evaluator;
use super::registry::{identities, lookup, IdentityRecord};
use super::CatalogError;
use crate::series::Coef;
use crate::theta::{BuilderKind, BuilderSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Falsified,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Falsified => "falsified",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstFailure {
    pub exponent: i64,
    pub lhs: Coef,
    pub rhs: Coef,
}

impl FirstFailure {
    /// `lhs - rhs` at the failing exponent.
    pub fn difference(&self) -> Coef {
        &self.lhs - &self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: String,
    pub status: Status,
    pub order: i64,
    /// Exclusive bound of the compared range; `None` when evaluation failed.
    pub valid_order: Option<i64>,
    pub first_failure: Option<FirstFailure>,
    pub error: Option<CatalogError>,
    pub elapsed: Duration,
}

impl VerifyReport {
    fn failed(id: &str, order: i64, err: CatalogError, start: Instant) -> Self {
        VerifyReport {
            id: id.to_string(),
            status: Status::Error,
            order,
            valid_order: None,
            first_failure: None,
            error: Some(err),
            elapsed: start.elapsed(),
        }
    }
}

fn precheck(record: &IdentityRecord, order: i64) -> Result<(), CatalogError> {
    let k = record.lhs.max_nome().max(record.rhs.max_nome());
    let spec = BuilderSpec::new(BuilderKind::Pi, k, order);
    if order < spec.min_order() {
        return Err(CatalogError::InsufficientPrecision {
            order,
            needed: spec.min_order(),
        });
    }
    Ok(())
}

/// Expands both sides and compares every coefficient both sides know.
pub fn verify_record(record: &IdentityRecord, order: i64) -> VerifyReport {
    let start = Instant::now();
    let id = record.id.as_str();
    if let Err(e) = precheck(record, order) {
        return VerifyReport::failed(id, order, e, start);
    }
    let sides = Evaluator::new(order).and_then(|mut ev| {
        let lhs = ev.eval(&record.lhs)?;
        let rhs = ev.eval(&record.rhs)?;
        Ok((lhs, rhs))
    });
    let (lhs, rhs) = match sides {
        Ok(s) => s,
        Err(e) => return VerifyReport::failed(id, order, e, start),
    };
    let valid_order = lhs.order().min(rhs.order());
    let lowest = lhs.valuation().min(rhs.valuation());
    if valid_order <= lowest {
        let e = CatalogError::InsufficientPrecision {
            order,
            needed: order + (lowest - valid_order) + 1,
        };
        return VerifyReport::failed(id, order, e, start);
    }
    let diff = match lhs.first_difference(&rhs, valid_order) {
        Ok(d) => d,
        Err(e) => return VerifyReport::failed(id, order, e.into(), start),
    };
    let first_failure = diff.map(|(exponent, lhs, rhs)| FirstFailure { exponent, lhs, rhs });
    VerifyReport {
        id: id.to_string(),
        status: if first_failure.is_some() {
            Status::Falsified
        } else {
            Status::Verified
        },
        order,
        valid_order: Some(valid_order),
        first_failure,
        error: None,
        elapsed: start.elapsed(),
    }
}

pub fn verify(id: &str, order: i64) -> Result<VerifyReport, CatalogError> {
    Ok(verify_record(lookup(id)?, order))
}

/// One report per registered identity, in registry order.
pub fn verify_all(order: i64) -> Vec<VerifyReport> {
    identities().iter().map(|r| verify_record(r, order)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::registry::{instantiate, Form, Sign, PRINTED_21_6_RHS};
    use crate::catalog::{evaluate, parse};

    #[test]
    fn constant_identity_and_its_mutation() {
        let r = verify("EQ1-1", 80).unwrap();
        assert_eq!(r.status, Status::Verified, "{r:?}");
        let base = lookup("EQ1-1").unwrap();
        let mutated = IdentityRecord {
            rhs: parse("5").unwrap(),
            ..base.clone()
        };
        let r = verify_record(&mutated, 80);
        assert_eq!(r.status, Status::Falsified);
        let f = r.first_failure.unwrap();
        assert_eq!(f.exponent, 0);
        assert_eq!(f.difference(), Coef::from_integer((-1).into()));
    }

    #[test]
    fn small_identities_hold() {
        for id in ["EQ11-2", "EQ21-1", "EQ21-6+", "EQ21-6-", "EQ21-7-"] {
            let r = verify(id, 80).unwrap();
            assert_eq!(r.status, Status::Verified, "{r:?}");
        }
    }

    #[test]
    fn printed_21_6_fails() {
        let base = lookup("EQ21-6+").unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let rec = IdentityRecord::from_text(
                "21-6",
                Some(sign),
                Form::Psi,
                &base.lhs.to_string(),
                &instantiate(PRINTED_21_6_RHS, sign),
            )
            .unwrap();
            let rec = IdentityRecord {
                lhs: lookup(&rec.id).unwrap().lhs.clone(),
                ..rec
            };
            assert_eq!(verify_record(&rec, 60).status, Status::Falsified);
        }
    }

    #[test]
    fn tiny_order_is_flagged() {
        let reports = verify_all(8);
        assert_eq!(reports.len(), 31);
        for r in &reports {
            assert_eq!(r.status, Status::Error);
            assert!(matches!(
                r.error,
                Some(CatalogError::InsufficientPrecision { order: 8, .. })
            ));
        }
    }

    #[test]
    fn unknown_identity() {
        assert!(matches!(verify("EQ9-9", 40), Err(CatalogError::UnknownIdentity(_))));
    }

    #[test]
    fn higher_order_extends_lower() {
        let e = &lookup("EQ11-7").unwrap().lhs;
        let lo = evaluate(e, 60).unwrap();
        let hi = evaluate(e, 100).unwrap();
        assert!(lo.equal_up_to(&hi, lo.order()).unwrap());
    }
}
