mod common;

use common::*;

#[test]
fn series_ring() {
    check(200, (series(), series(), series()), series_ring_axioms).unwrap();
}

#[test]
fn series_division() {
    check(200, (series(), unit_series()), series_div_mul).unwrap();
}

#[test]
fn series_sqrt() {
    check(200, unit_series(), series_sqrt_square).unwrap();
}

#[test]
fn ratfunc_axioms() {
    check(150, (ratfunc(), ratfunc(), ratfunc()), ratfunc_field).unwrap();
}

#[test]
fn poly_div_rem_gcd() {
    check(100, (poly(), poly()), poly_division).unwrap();
}

#[test]
fn quad_ext() {
    check(150, quad(), quad_conjugation).unwrap();
}
