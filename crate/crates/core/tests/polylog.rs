use std::f64::consts::{LN_2, PI};

use mathieu_core::hurwitz::dirichlet_eta;
use mathieu_core::polylog::{
    polylog, polylog_jonquiere, polylog_lindelof, polylog_neg_int, polylog_neg_int_exact, polylog_series,
    polylog_unit_circle, polylog_unit_circle_exact, EulerianTriangle, PolylogQuery, RationalAngle,
};
use mathieu_core::special::riemann_zeta_neg_int;
use mathieu_core::{Complex64, Method};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn query(alpha: Complex64, z: Complex64) -> PolylogQuery {
    PolylogQuery::new(alpha, z).unwrap()
}

fn series(alpha: Complex64, z: Complex64) -> Complex64 {
    polylog_series(&query(alpha, z), 1e-14).unwrap().value
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

/// `sum_{n=1}^{N} z^n n^{-alpha}` summed from the small end.
fn partial(alpha: f64, z: f64, n_max: u64) -> f64 {
    (1..=n_max).rev().map(|n| z.powi(n as i32) / (n as f64).powf(alpha)).sum()
}

#[test]
fn series_examples() {
    assert!((series(c(1.0, 0.0), c(0.5, 0.0)).re - LN_2).abs() < 1e-14);
    assert!((series(c(0.0, 0.0), c(0.5, 0.0)).re - 1.0).abs() < 1e-14);
    let li2 = series(c(2.0, 0.0), c(0.5, 0.0)).re;
    assert!((li2 - partial(2.0, 0.5, 1_000)).abs() < 1e-15);
    assert!((li2 - (PI * PI / 12.0 - LN_2 * LN_2 / 2.0)).abs() < 1e-14);
}

#[test]
fn series_at_i_by_parity_split() {
    // even n give sum (-1)^m / (2m)^2, odd n give i sum (-1)^m / (2m+1)^2
    let n_max = 2_000_000u64;
    let mut re = 0.0;
    let mut im = 0.0;
    for m in (0..n_max).rev() {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        if m >= 1 {
            re += sign / (2.0 * m as f64).powi(2);
        }
        im += sign / (2.0 * m as f64 + 1.0).powi(2);
    }
    let v = polylog_series(&query(c(2.0, 0.0), c(0.0, 1.0)), 1e-12).unwrap().value;
    assert!((v.re - re).abs() < 1e-12);
    assert!((v.im - im).abs() < 1e-12);
    assert!((v.re + PI * PI / 48.0).abs() < 1e-12);
}

#[test]
fn series_domain() {
    assert!(polylog_series(&query(c(2.0, 0.0), c(1.1, 0.5)), 1e-12).is_err());
    assert!(polylog_series(&query(c(1.0, 0.0), c(-1.0, 0.0)), 1e-12).is_err());
}

#[test]
fn closed_form_examples() {
    assert!((polylog_neg_int(1, c(0.5, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-14);
    assert!((polylog_neg_int(1, c(0.0, 1.0)).unwrap() - c(-0.5, 0.0)).norm() < 1e-15);
    assert!((polylog_neg_int(3, c(-1.0, 0.0)).unwrap() - c(0.125, 0.0)).norm() < 1e-15);
    assert!((polylog_neg_int(0, c(1.0 / 3.0, 0.0)).unwrap() - c(0.5, 0.0)).norm() < 1e-15);
    // sum n / 2^n
    let s: f64 = (1..200).map(|n| n as f64 / 2f64.powi(n)).sum();
    assert!((polylog_neg_int(1, c(0.5, 0.0)).unwrap().re - s).abs() < 1e-14);
    assert!(matches!(polylog_neg_int(2, c(1.0, 0.0)), Err(mathieu_core::Error::Singular(_))));
}

#[test]
fn closed_form_outside_disk() {
    // z/(1-z)^2 and z(1+z)/(1-z)^3
    for &z in &[c(-2.0, 0.0), c(3.0, 4.0), c(-0.5, 7.0)] {
        let one = c(1.0, 0.0);
        assert!(rel(polylog_neg_int(1, z).unwrap(), z / (one - z).powi(2)) < 1e-14);
        assert!(rel(polylog_neg_int(2, z).unwrap(), z * (one + z) / (one - z).powi(3)) < 1e-14);
    }
}

#[test]
fn eulerian_rows() {
    let t = EulerianTriangle::new(12);
    let mut fact = BigInt::one();
    for n in 1..=12usize {
        fact *= n;
        let sum: BigInt = t.row(n).iter().sum();
        assert_eq!(sum, fact, "n = {n}");
        let row = t.row(n);
        for k in 0..n {
            assert_eq!(row[k], row[n - 1 - k]);
        }
    }
}

#[test]
fn alternating_special_values_exact() {
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    for k in 0..=5u32 {
        let n = 2 * k + 1;
        let lhs = polylog_neg_int_exact(n, &minus_one).unwrap();
        let factor = BigRational::from_integer(BigInt::from(2).pow(2 * k + 2) - 1);
        assert_eq!(lhs, factor * riemann_zeta_neg_int(n).unwrap(), "k = {k}");
    }
}

#[test]
fn jonquiere_examples() {
    let v = polylog_jonquiere(&query(c(2.5, 0.0), c(-0.5, 0.0))).unwrap().value;
    assert!(rel(v, series(c(2.5, 0.0), c(-0.5, 0.0))) < 1e-9);
    let v = polylog_jonquiere(&query(c(-1.0, 0.0), c(-2.0, 0.0))).unwrap().value;
    assert!((v - c(-2.0 / 9.0, 0.0)).norm() < 1e-13);

    // -eta(s) by the alternating sum with half-term correction
    let s = c(2.5, 3.0);
    let n_max = 1_000_000u64;
    let mut acc = c(0.0, 0.0);
    for n in (1..=n_max).rev() {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        acc += sign * c(n as f64, 0.0).powc(-s);
    }
    acc += 0.5 * c((n_max + 1) as f64, 0.0).powc(-s);
    let v = polylog_jonquiere(&query(s, c(-1.0, 0.0))).unwrap().value;
    assert!(rel(v, -acc) < 1e-10, "{v} vs {}", -acc);
    assert!(rel(v, -dirichlet_eta(s).unwrap().value) < 1e-12);
}

#[test]
fn lindelof_examples() {
    let tol = 1e-12;
    let v = polylog_lindelof(&query(c(2.0, 0.0), c(-0.5, 0.0)), tol, None).unwrap().value;
    assert!((v.re - partial(2.0, -0.5, 200)).abs() < 1e-11);
    assert!((v.re + 0.4484142069).abs() < 1e-10);
    let v = polylog_lindelof(&query(c(1.0, 0.0), c(-1.0, 0.0)), tol, None).unwrap().value;
    assert!((v.re + LN_2).abs() < 1e-11);
    let v = polylog_lindelof(&query(c(0.0, 0.0), c(-3.0, 0.0)), tol, None).unwrap().value;
    assert!((v.re + 0.75).abs() < 1e-11);
}

#[test]
fn unit_circle_examples() {
    let half = RationalAngle::new(1, 1).unwrap();
    let v = polylog_unit_circle(c(2.0, 0.0), &half).unwrap().value;
    assert!((v.re + PI * PI / 12.0).abs() < 1e-13);
    let quarter = RationalAngle::new(1, 2).unwrap();
    let v = polylog_unit_circle(c(-1.0, 0.0), &quarter).unwrap().value;
    assert!((v - c(-0.5, 0.0)).norm() < 1e-14);
    let v = polylog_unit_circle(c(2.0, 0.0), &quarter).unwrap().value;
    assert!(rel(v, polylog_series(&query(c(2.0, 0.0), c(0.0, 1.0)), 1e-13).unwrap().value) < 1e-11);
}

#[test]
fn multisection_against_closed_form() {
    for &n in &[1u32, 3, 5] {
        for &(p, q) in &[(1, 1), (1, 2), (1, 3), (2, 3)] {
            let angle = RationalAngle::new(p, q).unwrap();
            let v = polylog_unit_circle(c(-(n as f64), 0.0), &angle).unwrap().value;
            let closed = polylog_neg_int(n, angle.z()).unwrap();
            assert!((v - closed).norm() <= 1e-10 * closed.norm().max(1.0), "n={n} p/q={p}/{q}");
        }
        // at z = -1 both routes give -eta(-n) exactly
        let (re, im) = polylog_unit_circle_exact(n, &RationalAngle::new(1, 1).unwrap()).unwrap();
        assert!(im.is_zero());
        let minus_one = BigRational::from_integer(BigInt::from(-1));
        assert_eq!(re, polylog_neg_int_exact(n, &minus_one).unwrap());
        let two = BigRational::from_integer(BigInt::from(2));
        let eta = (BigRational::one() - two.pow(n as i32 + 1)) * riemann_zeta_neg_int(n).unwrap();
        assert_eq!(re, -eta);
    }
}

#[test]
fn dispatcher_examples() {
    let out = polylog(&query(c(-3.0, 0.0), c(-1.0, 0.0)), 1e-12).unwrap();
    assert!((out.value - c(0.125, 0.0)).norm() < 1e-15);

    let out = polylog(&query(c(0.5, 0.0), c(0.3, 0.0)), 1e-13).unwrap();
    assert_eq!(out.method, Method::Series);
    assert!((out.value.re - partial(0.5, 0.3, 10_000)).abs() < 1e-13);

    let out = polylog(&query(c(2.5, 0.0), c(-0.99, 0.0)), 1e-12).unwrap();
    assert_eq!(out.method, Method::Jonquiere);
    let s = polylog_series(&query(c(2.5, 0.0), c(-0.99, 0.0)), 1e-14).unwrap().value;
    assert!(rel(out.value, s) < 1e-8);
}

#[test]
fn ladder_recurrence_by_finite_differences() {
    let h = 1e-6;
    for &z in &[c(0.4, 0.0), c(-0.7, 0.0), c(0.3, 0.2)] {
        for n in 1..=7u32 {
            let up = polylog_neg_int(n - 1, z + h).unwrap();
            let down = polylog_neg_int(n - 1, z - h).unwrap();
            let derivative = (up - down) / (2.0 * h);
            let expected = polylog_neg_int(n, z).unwrap();
            assert!(rel(z * derivative, expected) < 1e-5, "n={n} z={z}");
        }
    }
}

/// Every route whose preconditions hold at `(alpha, z)`.
fn routes(alpha: Complex64, z: Complex64) -> Vec<(&'static str, Complex64)> {
    let q = query(alpha, z);
    let mut out = Vec::new();
    if let Ok(v) = polylog_series(&q, 1e-13) {
        out.push(("series", v.value));
    }
    if let Ok(v) = polylog_jonquiere(&q) {
        out.push(("jonquiere", v.value));
    }
    if let Ok(v) = polylog_lindelof(&q, 1e-13, None) {
        out.push(("lindelof", v.value));
    }
    if let Some(angle) = RationalAngle::detect(z, 12) {
        if let Ok(v) = polylog_unit_circle(alpha, &angle) {
            out.push(("multisection", v.value));
        }
    }
    out
}

#[test]
fn cross_route_agreement() {
    let alphas = [c(0.5, 0.0), c(1.5, 0.0), c(2.5, 0.0), c(3.7, 0.0), c(2.5, 3.0), c(1.2, -0.8)];
    let points = [
        c(-0.5, 0.0),
        c(-0.9, 0.0),
        c(0.3, 0.4),
        c(-0.2, -0.6),
        RationalAngle::new(1, 1).unwrap().z(),
        RationalAngle::new(1, 2).unwrap().z(),
        RationalAngle::new(2, 3).unwrap().z(),
        RationalAngle::new(5, 4).unwrap().z(),
    ];
    let mut compared = 0;
    for &alpha in &alphas {
        for &z in &points {
            let found = routes(alpha, z);
            for i in 0..found.len() {
                for j in i + 1..found.len() {
                    let (ni, vi) = found[i];
                    let (nj, vj) = found[j];
                    assert!(rel(vi, vj) <= 1e-8, "alpha={alpha} z={z}: {ni} {vi} vs {nj} {vj}");
                    compared += 1;
                }
            }
        }
    }
    assert!(compared >= 20, "only {compared} comparisons");
}

#[test]
fn conjugate_symmetry_on_every_route() {
    for &alpha in &[0.5, 2.5, 3.7] {
        for &z in &[c(-0.5, 0.3), c(0.2, -0.7), RationalAngle::new(1, 3).unwrap().z()] {
            let a = routes(c(alpha, 0.0), z);
            let b = routes(c(alpha, 0.0), z.conj());
            assert_eq!(a.len(), b.len());
            for ((na, va), (_, vb)) in a.iter().zip(b.iter()) {
                assert!((*va - vb.conj()).norm() <= 1e-10 * va.norm(), "{na} alpha={alpha} z={z}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jonquiere_matches_series_in_disk(alpha in -3.0f64..5.0, im in -3.0f64..3.0, rho in 0.05f64..0.9, theta in -3.0f64..3.0) {
        let a = c(alpha, im);
        prop_assume!((a - a.re.round()).norm() > 1e-3 || a.re.round() < 0.0);
        let z = Complex64::from_polar(rho, theta);
        prop_assume!(!(z.im.abs() < 1e-6 && z.re > 0.0));
        let j = polylog_jonquiere(&query(a, z));
        prop_assume!(j.is_ok());
        let j = j.unwrap().value;
        let s = polylog_series(&query(a, z), 1e-15).unwrap().value;
        prop_assert!((j - s).norm() <= 1e-8 * s.norm().max(1e-3));
    }

    #[test]
    fn closed_form_conjugation(n in 0u32..20, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let z = c(re, im);
        prop_assume!((z - 1.0).norm() > 1e-3);
        let a = polylog_neg_int(n, z).unwrap();
        let b = polylog_neg_int(n, z.conj()).unwrap();
        prop_assert!((a - b.conj()).norm() <= 1e-13 * a.norm());
    }
}
