//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test -p qpi-core --test acceptance -- --nocapture`.

mod common;

use std::time::{Duration, Instant};

use qpi_core::catalog::{
    self, audit_homogeneity, identities, lookup, parse, verify_record, IdentityRecord, ParseError,
    Status,
};
use qpi_core::field::{Poly, QuadExt, RatFunc};
use qpi_core::modular::{
    check_param_series, check_param_series_with_branch, printed_polynomials, prove_degree3,
    prove_degree5, ParamTable5, RhoBranch, DEGREE3_EQUATIONS, DEGREE5_EQUATIONS,
};
use qpi_core::series::Coef;
use qpi_core::theta::{phi, pi_product, psi, psi_product};

fn gate(n: u32, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("criterion {n} PASS  {name}: {detail}"),
        Err(why) => {
            println!("criterion {n} FAIL  {name}: {why}");
            panic!("criterion {n} failed: {why}");
        }
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

#[test]
fn criterion_1_catalog_sweep() {
    let outcome = (|| {
        let start = Instant::now();
        let reports = catalog::verify_all(200);
        let elapsed = start.elapsed();
        ensure(reports.len() == 31, || format!("{} reports", reports.len()))?;
        for r in &reports {
            ensure(r.status == Status::Verified, || format!("{r:?}"))?;
        }
        for rec in identities() {
            let a = audit_homogeneity(rec);
            ensure(a.consistent(), || format!("valuation audit {a:?}"))?;
        }
        let shortest = reports.iter().filter_map(|r| r.valid_order).min().unwrap();
        ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
        Ok(format!(
            "31/31 verified at order 200, shortest compared range t^{shortest}, {:.2}s",
            elapsed.as_secs_f64()
        ))
    })();
    gate(1, "catalog sweep", outcome);
}

#[test]
fn criterion_2_degree_three_replay() {
    let outcome = (|| {
        for id in DEGREE3_EQUATIONS {
            let r = prove_degree3(id).map_err(|e| e.to_string())?;
            ensure(r.sides_equal, || format!("{id} sides differ"))?;
        }
        for id in ["4-2", "4-4", "4-5"] {
            let r = prove_degree3(id).unwrap();
            ensure(r.paper_form_match == Some(true), || format!("{id} printed form"))?;
        }
        // independent reading of the printed intermediates
        let m = p(&[0, 1]);
        let value = |id| prove_degree3(id).unwrap().lhs_canonical;
        let v = value("4-2");
        let want = &(&p(&[-1, 1]) * &p(&[3, 1])) * &p(&[3, 0, 1]);
        ensure(v.b().is_zero() && (v.a() * &RatFunc::from_poly(p(&[0, 4]))) == RatFunc::from_poly(want), || {
            format!("4-2 common value {v}")
        })?;
        let v = value("4-4");
        let scale = &(&m.pow(3) * &p(&[3, 1])).scale(&Coef::from_integer(16.into()));
        let got = v.b() * &RatFunc::from_poly(scale.clone());
        ensure(v.a().is_zero() && got == RatFunc::from_poly(p(&[-27, 0, 18, 24, 1])), || {
            format!("4-4 common value {v}")
        })?;
        let v = value("4-5");
        let got = v.b() * &RatFunc::from_poly(p(&[-16, 16]));
        ensure(v.a().is_zero() && got == RatFunc::from_poly(p(&[-3, 24, -6, 0, 1])), || {
            format!("4-5 common value {v}")
        })?;
        Ok("9/9 goals sides_equal; 4-2, 4-4, 4-5 match the printed intermediates".into())
    })();
    gate(2, "degree-3 proof replay", outcome);
}

#[test]
fn criterion_3_degree_five_replay() {
    let outcome = (|| {
        let mut notes = Vec::new();
        for id in DEGREE5_EQUATIONS {
            let r = prove_degree5(id).map_err(|e| e.to_string())?;
            ensure(r.sides_equal, || format!("{id} sides differ"))?;
            match r.paper_form_match {
                Some(true) => {}
                Some(false) => notes.push(format!("{id} printed form differs (informational)")),
                None => return Err(format!("{id} has no printed comparison")),
            }
        }
        for id in ["2-2", "2-3", "2-4", "2-5"] {
            ensure(prove_degree5(id).unwrap().paper_form_match == Some(true), || {
                format!("{id} printed form")
            })?;
        }
        let t = ParamTable5::new();
        let u = &t.modulus;
        // (m-5)^2 (m^3 - m^2 + 7m + 2m rho + 1 + 2 rho) / (m-1)^4
        let den = RatFunc::from_poly(p(&[-1, 1]).pow(4));
        let pre = RatFunc::from_poly(p(&[-5, 1]).pow(2)).checked_div(&den).unwrap();
        let common = QuadExt::new(
            &pre * &RatFunc::from_poly(p(&[1, 7, -1, 1])),
            &pre * &RatFunc::from_poly(p(&[2, 2])),
            u.clone(),
        );
        let v = prove_degree5("2-5").unwrap().lhs_canonical;
        ensure(v.checked_equal(&common).unwrap(), || format!("2-5 common value {v}"))?;
        let a = printed_polynomials()[0].1.clone();
        let v = prove_degree5("2-1").unwrap().lhs_canonical;
        let twelve = RatFunc::new(p(&[4096]), p(&[-1, 1]).pow(12)).unwrap();
        ensure(v.checked_equal(&a.scale(&twelve)).unwrap(), || "2-1 against (2/(m-1))^12 A".into())?;
        notes.push("2-1 equals (2/(m-1))^12 A(m)".into());
        Ok(format!("5/5 goals sides_equal; B, C, D and 2-5 match; {}", notes.join("; ")))
    })();
    gate(3, "degree-5 proof replay", outcome);
}

#[test]
fn criterion_4_parametrization_bridge() {
    let outcome = (|| {
        let r3 = check_param_series(3, 120).map_err(|e| e.to_string())?;
        ensure(r3.verified(), || format!("{:?}", r3.first_failure()))?;
        let r5 = check_param_series(5, 160).map_err(|e| e.to_string())?;
        ensure(r5.verified(), || format!("{:?}", r5.first_failure()))?;
        let flipped = check_param_series_with_branch(5, 160, RhoBranch::Negative).unwrap();
        let f = flipped.first_failure().ok_or("negative branch was not falsified")?;
        Ok(format!(
            "degree 3 at 120 ({} checks) and degree 5 at 160 ({} checks) hold; -rho fails at t^{}",
            r3.checks.len(),
            r5.checks.len(),
            f.first_failure.as_ref().unwrap().0
        ))
    })();
    gate(4, "parametrization bridge", outcome);
}

#[test]
fn criterion_5_builder_coherence() {
    let outcome = (|| {
        let n = 200;
        for k in [1u32, 2, 3, 4, 5, 6, 9, 10] {
            let pi = pi_product(k, n).unwrap();
            let s = psi(k, n);
            let shifted = (&s * &s).shift(k as i64);
            ensure(pi.order() >= n && shifted.order() >= n, || format!("k={k} lost precision"))?;
            ensure(pi.equal_up_to(&shifted, n).unwrap(), || format!("Pi vs t^k psi^2 at k={k}"))?;
            let prod = psi_product(k, n).unwrap();
            ensure(prod.equal_up_to(&s, n).unwrap(), || format!("psi sum vs product at k={k}"))?;
        }
        let f = phi(1, n);
        let s2 = psi(2, n);
        let s1 = psi(1, n);
        let lhs = &(&f * &f) * &(&s2 * &s2);
        let rhs = s1.pow_int(4).unwrap();
        ensure(lhs.equal_up_to(&rhs, n).unwrap(), || "phi^2 psi^2(q^2) = psi^4".into())?;
        Ok("k in {1,2,3,4,5,6,9,10} and phi^2(q)psi^2(q^2) = psi^4(q) exact below t^200".into())
    })();
    gate(5, "builder coherence", outcome);
}

#[test]
fn criterion_6_falsification_sensitivity() {
    let outcome = (|| {
        let base = lookup("EQ1-1").unwrap();
        let mutated = IdentityRecord {
            rhs: parse("5").unwrap(),
            ..base.clone()
        };
        let r = verify_record(&mutated, 200);
        ensure(r.status == Status::Falsified, || format!("{r:?}"))?;
        let f = r.first_failure.unwrap();
        ensure(f.exponent == 0 && f.difference() == Coef::from_integer((-1).into()), || {
            format!("first failure {f:?}")
        })?;
        let rec = lookup("EQ1-5").unwrap();
        let mut worst = 0;
        let mut count = 0;
        for on_lhs in [true, false] {
            let side = if on_lhs { &rec.lhs } else { &rec.rhs };
            for site in 0..side.pi_sites() {
                for k in 1..=10u32 {
                    let changed = side.with_pi_at(site, k);
                    if &changed == side {
                        continue;
                    }
                    let m = IdentityRecord {
                        lhs: if on_lhs { changed.clone() } else { rec.lhs.clone() },
                        rhs: if on_lhs { rec.rhs.clone() } else { changed },
                        ..rec.clone()
                    };
                    let r = verify_record(&m, 200);
                    let f = r.first_failure.as_ref().ok_or_else(|| format!("{} survived", m.lhs))?;
                    ensure(r.status == Status::Falsified && f.exponent <= 60, || format!("{r:?}"))?;
                    worst = worst.max(f.exponent);
                    count += 1;
                }
            }
        }
        Ok(format!(
            "(1-1) with 5 fails at t^0 by -1; {count} subscript mutations of (1-5) fail, latest at t^{worst}"
        ))
    })();
    gate(6, "falsification sensitivity", outcome);
}

#[test]
fn criterion_7_algebra_properties() {
    let outcome = (|| {
        let suite = common::algebra_suite();
        let total: u32 = suite.iter().map(|(_, n, _)| n).sum();
        for (name, _, r) in &suite {
            r.clone().map_err(|e| format!("{name}: {e}"))?;
        }
        ensure(total >= 1000, || format!("only {total} cases"))?;
        Ok(format!("{total} randomized exact checks over {} properties", suite.len()))
    })();
    gate(7, "algebra property suite", outcome);
}

#[test]
fn criterion_8_parser() {
    let outcome = (|| {
        let mut sides = 0;
        for r in identities() {
            for side in [&r.lhs, &r.rhs] {
                let back = parse(&side.to_string()).map_err(|e| format!("{}: {e}", r.id))?;
                ensure(&back == side, || format!("{} does not round-trip", r.id))?;
                sides += 1;
            }
        }
        match parse("Pi(q^2) +") {
            Err(ParseError::Syntax { offset: 9, expected, .. }) if expected.contains(&"'('".to_string()) => {}
            other => return Err(format!("syntax error case: {other:?}")),
        }
        match parse("1 + Pi(q, q^2)") {
            Err(ParseError::Arity { offset: 4, expected: 1, found: 2, .. }) => {}
            other => return Err(format!("arity case: {other:?}")),
        }
        match parse("q^{1/3} * Pi(q)") {
            Err(ParseError::QPowNotQuarterIntegral { offset: 0, .. }) => {}
            other => return Err(format!("q-power case: {other:?}")),
        }
        match parse("Pi(q) * q^{5/6}") {
            Err(ParseError::QPowNotQuarterIntegral { offset: 8, .. }) => {}
            other => return Err(format!("q-power case: {other:?}")),
        }
        Ok(format!("{sides} registry sides round-trip; syntax, arity and q-power errors at their offsets"))
    })();
    gate(8, "parser", outcome);
}
