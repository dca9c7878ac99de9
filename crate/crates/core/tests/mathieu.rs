use std::f64::consts::PI;

use mathieu_core::mathieu::{
    asym_coeffs, asym_eval, growth_order_probe, mathieu_direct, mathieu_partial_sum, mellin_closed,
    mellin_numeric, MathieuParams, MellinQuery,
};
use mathieu_core::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn params(mu: f64, r: f64, z: Complex64) -> MathieuParams {
    MathieuParams::new(mu, r, z).unwrap()
}

#[test]
fn alternating_expansion_matches_direct_sum() {
    let p = params(1.0, 20.0, c(-1.0, 0.0));
    let direct = mathieu_direct(&p, 1e-15).unwrap();
    let asym = asym_eval(&p, None).unwrap();
    let diff = (asym.value - direct.value).norm();
    assert!(diff / direct.value.norm() <= 1e-10, "relative error {}", diff / direct.value.norm());
    assert!(diff <= 2.0 * (asym.error_bound + direct.error_bound));
}

#[test]
fn alternating_leading_term() {
    let p = params(1.0, 10.0, c(-1.0, 0.0));
    let direct = mathieu_direct(&p, 1e-14).unwrap().value;
    let leading = -0.5e-4;
    assert!(((direct.re - leading) / leading).abs() < 2e-2);
    assert!(direct.im == 0.0);
}

#[test]
fn leading_order_at_i() {
    let p = params(1.0, 10.0, c(0.0, 1.0));
    let direct = mathieu_direct(&p, 1e-14).unwrap().value;
    let k0 = asym_eval(&p, Some(0)).unwrap();
    assert!((k0.value - c(-1e-4, 0.0)).norm() < 1e-18);
    // |c_1| / (|c_0| r^2) with c_1 = -4
    let rel = (k0.value - direct).norm() / direct.norm();
    assert!(rel <= 1.5 * 4.0 / 100.0, "relative error {rel}");
}

#[test]
fn fixed_order_within_estimate() {
    let p = params(0.5, 5.0, c(-1.0, 0.0));
    let direct = mathieu_direct(&p, 1e-14).unwrap();
    let asym = asym_eval(&p, Some(3)).unwrap();
    assert!((asym.value - direct.value).norm() <= 2.0 * (asym.error_bound + direct.error_bound));
}

#[test]
fn expansion_tracks_direct_sum_on_grid() {
    let zs = [c(-1.0, 0.0), c(0.0, 1.0), c(1f64.cos(), 1f64.sin()), c(0.5, 0.0), c(-0.3, 0.6)];
    for &mu in &[0.5, 1.0, 2.5] {
        for &z in &zs {
            let r = 10.0 * (1.0 + mu);
            let p = params(mu, r, z);
            let direct = mathieu_direct(&p, 1e-15 * r.powf(-2.0 * mu)).unwrap();
            let asym = asym_eval(&p, None).unwrap();
            let diff = (asym.value - direct.value).norm();
            assert!(
                diff <= 2.0 * (asym.error_bound + direct.error_bound),
                "mu={mu} z={z}: diff {diff:e}, bounds {:e} {:e}",
                asym.error_bound,
                direct.error_bound
            );
        }
    }
}

#[test]
fn conjugation_symmetry() {
    for &(mu, r, z) in &[(1.0, 3.0, c(0.3, 0.8)), (0.5, 12.0, c(-0.6, -0.2)), (2.0, 25.0, c(0.0, 1.0))] {
        let a = mathieu_direct(&params(mu, r, z), 1e-12).unwrap().value;
        let b = mathieu_direct(&params(mu, r, z.conj()), 1e-12).unwrap().value;
        assert!((a - b.conj()).norm() <= 1e-13 * a.norm().max(1e-300));
        let a = asym_eval(&params(mu, 30.0, z), None).unwrap().value;
        let b = asym_eval(&params(mu, 30.0, z.conj()), None).unwrap().value;
        assert!((a - b.conj()).norm() <= 1e-13 * a.norm());
    }
}

#[test]
fn coefficients_do_not_depend_on_r() {
    let e1 = asym_coeffs(1.3, c(0.2, -0.9), 12).unwrap();
    let e2 = asym_coeffs(1.3, c(0.2, -0.9), 12).unwrap();
    assert_eq!(e1.coeffs, e2.coeffs);
    let a = asym_eval(&params(1.3, 15.0, c(0.2, -0.9)), Some(5)).unwrap().value;
    let b = asym_eval(&params(1.3, 15.0, c(0.2, -0.9)), Some(5)).unwrap().value;
    assert_eq!(a, b);
}

#[test]
fn certified_tail_survives_doubling() {
    let cases = [
        (1.0, 1.0, c(1.0, 0.0), 1e-6),
        (1.0, 20.0, c(-1.0, 0.0), 1e-12),
        (0.5, 5.0, c(0.0, 1.0), 1e-9),
        (2.0, 2.0, c(0.6, 0.3), 1e-12),
        (1.5, 8.0, c(-0.8, 0.6), 1e-10),
    ];
    for &(mu, r, z, tol) in &cases {
        let p = params(mu, r, z);
        let out = mathieu_direct(&p, tol).unwrap();
        let (doubled, _) = mathieu_partial_sum(&p, 2 * out.terms_used as u64);
        assert!(
            (doubled - out.value).norm() < out.error_bound,
            "mu={mu} r={r} z={z}: change {:e} vs bound {:e}",
            (doubled - out.value).norm(),
            out.error_bound
        );
    }
}

#[test]
fn mellin_closed_examples() {
    let v = mellin_closed(&MellinQuery::new(c(2.0, 0.0)).unwrap(), 1.0, c(0.5, 0.0), 1e-14).unwrap();
    // termwise: int_0^inf r 2n / (n^2+r^2)^2 dr = 1/n, and sum 2^-n / n = ln 2
    assert!((v.value.re - 2f64.ln()).abs() < 1e-13);
    let li2_half = PI * PI / 12.0 - 2f64.ln().powi(2) / 2.0;
    let v = mellin_closed(&MellinQuery::new(c(1.0, 0.0)).unwrap(), 1.0, c(0.5, 0.0), 1e-14).unwrap();
    assert!((v.value.re - PI / 2.0 * li2_half).abs() < 1e-13);
    let v = mellin_closed(&MellinQuery::new(c(1.0, 0.0)).unwrap(), 1.0, c(-1.0, 0.0), 1e-14).unwrap();
    assert!((v.value.re + PI.powi(3) / 24.0).abs() < 1e-12);
}

#[test]
fn mellin_numeric_matches_closed_form() {
    for &(u, mu, z) in &[
        (c(2.0, 0.0), 1.0, c(0.5, 0.0)),
        (c(1.0, 0.0), 1.0, c(-1.0, 0.0)),
        (c(0.5, 0.0), 0.5, c(0.0, 1.0)),
    ] {
        let q = MellinQuery::new(u).unwrap();
        let closed = mellin_closed(&q, mu, z, 1e-14).unwrap().value;
        let numeric = mellin_numeric(&q, mu, z, 1e-7 * closed.norm()).unwrap();
        let rel = (numeric.value - closed).norm() / closed.norm();
        assert!(rel <= 1e-5, "u={u} mu={mu} z={z}: relative {rel:e}");
    }
}

#[test]
fn decay_orders() {
    let grid = [20.0, 30.0, 40.0];
    let cases = [
        (1.0, c(-1.0, 0.0), -4.0),
        (1.0, c(1.0, 0.0), -2.0),
        (0.5, c(0.0, 1.0), -3.0),
        (0.5, c(1f64.cos(), 1f64.sin()), -3.0),
    ];
    for &(mu, z, expected) in &cases {
        let slope = growth_order_probe(mu, z, &grid).unwrap();
        assert!((slope - expected).abs() <= 0.05, "mu={mu} z={z}: slope {slope}");
    }
}
