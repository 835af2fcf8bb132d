//! Randomized algebra checks shared by the property tests and the
//! acceptance gate.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use qpi_core::field::{Poly, QuadExt, RatFunc};
use qpi_core::series::{Coef, LaurentSeries};

pub fn coef() -> impl Strategy<Value = Coef> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| Coef::new(n.into(), d.into()))
}

fn nonzero_coef() -> impl Strategy<Value = Coef> {
    coef().prop_filter("nonzero", |c| *c != Coef::from_integer(0.into()))
}

/// Random series with an unknown tail; the leading stored coefficient may
/// vanish.
pub fn series() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..=3, prop::collection::vec(coef(), 0..8), 0i64..3)
        .prop_map(|(v, c, extra)| {
            let order = v + c.len() as i64 + extra;
            LaurentSeries::from_coeffs(v, c, order)
        })
}

/// Series whose leading coefficient is nonzero and known.
pub fn unit_series() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..=3, nonzero_coef(), prop::collection::vec(coef(), 0..7))
        .prop_map(|(v, lead, mut rest)| {
            rest.insert(0, lead);
            let order = v + rest.len() as i64;
            LaurentSeries::from_coeffs(v, rest, order)
        })
}

pub fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(coef(), 0..4).prop_map(Poly::new)
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// The two moduli the proofs use: `(m-1)(m+3)/m` and `m^3 - 2m^2 + 5m`.
pub fn modulus() -> impl Strategy<Value = RatFunc> {
    prop_oneof![
        Just(RatFunc::new(Poly::from_ints(&[-3, 2, 1]), Poly::from_ints(&[0, 1])).unwrap()),
        Just(RatFunc::from_poly(Poly::from_ints(&[0, 5, -2, 1]))),
    ]
}

/// Components with at most a linear denominator, to keep products small.
fn component() -> impl Strategy<Value = RatFunc> {
    (
        prop::collection::vec(coef(), 0..3),
        prop::collection::vec(coef(), 1..3).prop_filter("nonzero", |c| c.iter().any(|x| *x != Coef::from_integer(0.into()))),
    )
        .prop_map(|(n, d)| RatFunc::new(Poly::new(n), Poly::new(d)).unwrap())
}

pub fn quad() -> impl Strategy<Value = (QuadExt, QuadExt)> {
    (modulus(), component(), component(), component(), component())
        .prop_map(|(u, a, b, c, d)| (QuadExt::new(a, b, u.clone()), QuadExt::new(c, d, u)))
}

fn agree(x: &LaurentSeries, y: &LaurentSeries, what: &str) -> Result<(), TestCaseError> {
    let n = x.order().min(y.order());
    if x.equal_up_to(y, n).unwrap() {
        Ok(())
    } else {
        Err(TestCaseError::fail(format!("{what}: {x} vs {y}")))
    }
}

fn same_quad(x: &QuadExt, y: &QuadExt, what: &str) -> Result<(), TestCaseError> {
    if x.checked_equal(y).unwrap() {
        Ok(())
    } else {
        Err(TestCaseError::fail(format!("{what}: {x} vs {y}")))
    }
}

pub fn series_ring_axioms(
    (a, b, c): (LaurentSeries, LaurentSeries, LaurentSeries),
) -> Result<(), TestCaseError> {
    agree(&(&a + &b), &(&b + &a), "a+b = b+a")?;
    agree(&(&(&a + &b) + &c), &(&a + &(&b + &c)), "(a+b)+c")?;
    agree(&(&a * &b), &(&b * &a), "ab = ba")?;
    agree(&(&(&a * &b) * &c), &(&a * &(&b * &c)), "(ab)c")?;
    agree(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)), "a(b+c)")?;
    agree(&(&a - &a), &LaurentSeries::zero(a.order()), "a-a")?;
    Ok(())
}

pub fn series_div_mul((a, b): (LaurentSeries, LaurentSeries)) -> Result<(), TestCaseError> {
    let q = a.div_series(&b).unwrap();
    agree(&(&q * &b), &a, "(a/b)b = a")?;
    let inv = b.inv().unwrap();
    agree(&(&b * &inv), &LaurentSeries::one(b.relative_precision()), "b/b = 1")?;
    Ok(())
}

pub fn series_sqrt_square(a: LaurentSeries) -> Result<(), TestCaseError> {
    let lead = a.leading_coefficient().unwrap().clone();
    let a = if lead < Coef::from_integer(0.into()) { -&a } else { a };
    let s = (&a * &a).sqrt().unwrap();
    agree(&s, &a, "sqrt(a^2) = a")?;
    let r = s.sqrt();
    if a.valuation() % 2 == 0 {
        if let Ok(r) = r {
            agree(&(&r * &r), &s, "sqrt(s)^2 = s")?;
        }
    }
    Ok(())
}

pub fn ratfunc_field((x, y, z): (RatFunc, RatFunc, RatFunc)) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z)));
    prop_assert_eq!(&(&(&x * &y) * &z), &(&x * &(&y * &z)));
    if !y.is_zero() {
        let q = x.checked_div(&y).unwrap();
        prop_assert_eq!(&(&q * &y), &x);
    }
    Ok(())
}

pub fn poly_division((a, b): (Poly, Poly)) -> Result<(), TestCaseError> {
    prop_assume!(!b.is_zero());
    let (q, r) = a.div_rem(&b);
    prop_assert_eq!(&(&(&q * &b) + &r), &a);
    prop_assert!(r.is_zero() || r.degree() < b.degree());
    let g = a.gcd(&b);
    prop_assert!(a.div_rem(&g).1.is_zero() && b.div_rem(&g).1.is_zero());
    Ok(())
}

pub fn quad_conjugation((x, y): (QuadExt, QuadExt)) -> Result<(), TestCaseError> {
    same_quad(&x.conj().conj(), &x, "conj conj")?;
    same_quad(&(&x * &y).conj(), &(&x.conj() * &y.conj()), "conj(xy)")?;
    let norm = QuadExt::rational(x.norm(), x.modulus());
    same_quad(&(&x * &x.conj()), &norm, "x conj(x) = N(x)")?;
    if !x.is_zero() {
        let one = QuadExt::from_int(1, x.modulus());
        same_quad(&(&x * &x.inv().unwrap()), &one, "x / x")?;
        let q = y.checked_div(&x).unwrap();
        same_quad(&(&q * &x), &y, "(y/x)x")?;
    }
    Ok(())
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

/// Runs one property for `cases` random inputs from a fixed seed.
pub fn check<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

/// The suite as (name, cases, outcome).
pub fn algebra_suite() -> Vec<(&'static str, u32, Result<(), String>)> {
    vec![
        ("series ring axioms", 200, check(200, (series(), series(), series()), series_ring_axioms)),
        ("series div-mul round trip", 200, check(200, (series(), unit_series()), series_div_mul)),
        ("series sqrt-square round trip", 200, check(200, unit_series(), series_sqrt_square)),
        ("rational function field axioms", 150, check(150, (ratfunc(), ratfunc(), ratfunc()), ratfunc_field)),
        ("polynomial division and gcd", 100, check(100, (poly(), poly()), poly_division)),
        ("quadratic extension conjugation and inverse", 150, check(150, quad(), quad_conjugation)),
    ]
}
