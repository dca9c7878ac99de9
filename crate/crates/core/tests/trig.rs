use std::f64::consts::PI;

use mathieu_core::mathieu::{asym_coeffs, asym_eval, mathieu_direct, MathieuParams};
use mathieu_core::polylog::RationalAngle;
use mathieu_core::special::ln_gamma_real;
use mathieu_core::trig::{
    cosine_multisection_expansion, cosine_series, cosine_series_via_zastavnyi, general_cosine_series,
    general_sine_series, log_factorial_sine_series, sine_multisection_expansion, sine_series,
    smallx_hartman_wintner, smallx_leading_sine, trig_asym_eval, zastavnyi_direct, zastavnyi_expansion,
    CoefficientSequence, LogFactorialFamily, SeriesFamilyParams, TrigQuery, ZastavnyiParams,
};
use mathieu_core::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn family(alpha: f64, beta: f64, gamma: f64, delta: f64, mu: f64, r: f64) -> SeriesFamilyParams {
    SeriesFamilyParams::new(alpha, beta, gamma, delta, mu, r).unwrap()
}

#[test]
fn sine_vanishes_at_pi() {
    let q = TrigQuery::new(1.0, 1.0, PI).unwrap();
    assert!(sine_series(&q, 1e-12).unwrap().value.re.abs() < 1e-14);
}

#[test]
fn cosine_at_pi_is_alternating_series() {
    let q = TrigQuery::new(1.0, 10.0, PI).unwrap();
    let cos = cosine_series(&q, 1e-14).unwrap().value.re;
    let alt = mathieu_direct(&MathieuParams::new(1.0, 10.0, c(-1.0, 0.0)).unwrap(), 1e-14)
        .unwrap()
        .value
        .re;
    assert!((cos - alt).abs() < 1e-15);
}

#[test]
fn reflection_parity() {
    for &x in &[0.5, 1.0, 2.0, 3.0] {
        let a = TrigQuery::new(1.5, 4.0, x).unwrap();
        let b = TrigQuery::new(1.5, 4.0, 2.0 * PI - x).unwrap();
        let (ca, cb) = (cosine_series(&a, 1e-12).unwrap().value.re, cosine_series(&b, 1e-12).unwrap().value.re);
        let (sa, sb) = (sine_series(&a, 1e-12).unwrap().value.re, sine_series(&b, 1e-12).unwrap().value.re);
        assert!((ca - cb).abs() <= 1e-13 * ca.abs());
        assert!((sa + sb).abs() <= 1e-13 * sa.abs());
    }
}

#[test]
fn expansion_at_pi_is_alternating_expansion() {
    let q = TrigQuery::new(1.0, 20.0, PI).unwrap();
    let (cos, sin) = trig_asym_eval(&q, None).unwrap();
    let alt = asym_eval(&MathieuParams::new(1.0, 20.0, c(-1.0, 0.0)).unwrap(), None).unwrap();
    assert!((cos.value.re - alt.value.re).abs() <= 1e-13 * alt.value.re.abs());
    assert!(sin.value.re.abs() <= 1e-12 * alt.value.re.abs());
}

#[test]
fn expansion_at_quarter_turn_tracks_direct() {
    let q = TrigQuery::new(1.0, 20.0, PI / 2.0).unwrap();
    let (cos, sin) = trig_asym_eval(&q, None).unwrap();
    let dc = cosine_series(&q, 1e-16).unwrap();
    let ds = sine_series(&q, 1e-16).unwrap();
    assert!((cos.value - dc.value).norm() <= 2.0 * (cos.error_bound + dc.error_bound));
    assert!((sin.value - ds.value).norm() <= 2.0 * (sin.error_bound + ds.error_bound));
    let e = asym_coeffs(1.0, c(0.0, 1.0), 0).unwrap();
    assert!((e.coeffs[0].re + 1.0).abs() < 1e-15);
}

#[test]
fn zastavnyi_against_direct_sum() {
    let p = ZastavnyiParams::new(1.0, 1.0, 2.0, 2.0, 1e-4, 3).unwrap();
    assert!((p.leading_coefficient().unwrap() - 0.5).abs() < 1e-15);
    let expansion = zastavnyi_expansion(&p).unwrap();
    let direct = zastavnyi_direct(&p, 1e-6).unwrap();
    let rel = (expansion.value.re - direct.value.re).abs() / direct.value.re;
    assert!(rel <= 1e-6, "relative error {rel:e}");
}

#[test]
fn zastavnyi_with_continued_zeta_values() {
    for &(a, gamma, alpha, mu, y) in &[(0.3, 0.5, 1.5, 3.0, 1e-3), (2.0, -0.4, 1.0, 4.0, 1e-3), (0.75, 1.0, 2.0, 2.5, 1e-3)] {
        let p = ZastavnyiParams::new(a, gamma, alpha, mu, y, 4).unwrap();
        let expansion = zastavnyi_expansion(&p).unwrap();
        let direct = zastavnyi_direct(&p, 1e-9).unwrap();
        let diff = (expansion.value.re - direct.value.re).abs();
        assert!(
            diff <= 2.0 * (expansion.error_bound + direct.error_bound),
            "a={a} gamma={gamma} alpha={alpha}: diff {diff:e} bound {:e}",
            expansion.error_bound
        );
    }
}

#[test]
fn multisection_coefficients_match_polylog_route() {
    for &(p, q) in &[(1, 1), (1, 2), (1, 3), (2, 3), (3, 2)] {
        let angle = RationalAngle::new(p, q).unwrap();
        for &mu in &[0.5, 1.0, 2.3] {
            let cos = cosine_multisection_expansion(mu, &angle, 4).unwrap();
            let sin = sine_multisection_expansion(mu, &angle, 4).unwrap();
            let direct = asym_coeffs(mu, angle.z(), 4).unwrap();
            for k in 0..=4 {
                let d = direct.coeffs[k];
                let scale = d.norm().max(1.0);
                assert!((cos.coeffs[k].re - d.re).abs() <= 1e-10 * scale, "p/q={p}/{q} k={k}");
                assert!((sin.coeffs[k].re - d.im).abs() <= 1e-10 * scale, "p/q={p}/{q} k={k}");
            }
        }
    }
}

#[test]
fn segment_route_reproduces_expansion() {
    for &(p, q) in &[(1, 1), (1, 2), (1, 3), (2, 3), (3, 2)] {
        let angle = RationalAngle::new(p, q).unwrap();
        let query = TrigQuery::new(1.0, 30.0, angle.x()).unwrap();
        let (cos, _) = trig_asym_eval(&query, None).unwrap();
        let k = cos.terms_used - 1;
        let seg = cosine_series_via_zastavnyi(1.0, 30.0, &angle, k).unwrap();
        assert!(
            (seg.value.re - cos.value.re).abs() <= cos.error_bound + seg.error_bound,
            "p/q={p}/{q}: {} vs {}",
            seg.value.re,
            cos.value.re
        );
    }
}

#[test]
fn sine_over_n_closed_form() {
    let fam = family(0.0, 1.0, 0.0, 0.0, 0.0, 0.0);
    let out = general_sine_series(&fam, 1.0, 1e-7).unwrap();
    let expected = (PI - 1.0) / 2.0 - 1f64.sin();
    assert!((out.value.re - expected).abs() <= out.error_bound);
}

#[test]
fn cosine_over_n_closed_form() {
    // sum_{n>=1} cos(nx)/n = -ln(2 sin(x/2))
    let fam = family(0.0, 1.0, 0.0, 0.0, 0.0, 0.0);
    let out = general_cosine_series(&fam, 1.0, 1e-7).unwrap();
    let expected = -(2.0 * 0.5f64.sin()).ln() - 1f64.cos();
    assert!((out.value.re - expected).abs() <= out.error_bound);
}

#[test]
fn sine_near_pi_is_bounded() {
    let fam = family(0.0, 1.0, 0.0, 0.0, 0.0, 1.0);
    let x = 3.1;
    let out = general_sine_series(&fam, x, 1e-6).unwrap();
    let a2 = fam.coefficient(2);
    assert!(out.value.re.abs() <= a2 / (x / 2.0).sin() + a2);
}

#[test]
fn family_matches_mathieu_sine_series() {
    let fam = family(1.0, 2.0, 0.0, 0.0, 1.0, 1.0);
    let x = 0.5;
    let gen = general_sine_series(&fam, x, 1e-12).unwrap().value.re;
    let q = TrigQuery::new(1.0, 1.0, x).unwrap();
    let sin = sine_series(&q, 1e-12).unwrap().value.re;
    let first = 2.0 * x.sin() / 4.0;
    assert!((2.0 * gen - (sin - first)).abs() < 1e-11);
}

#[test]
fn bound_survives_tightening() {
    let cases = [
        (family(0.0, 1.0, 0.0, 0.0, 0.0, 1.0), 0.3),
        (family(1.0, 2.0, 0.0, 0.0, 1.0, 1.0), 0.5),
        (family(0.0, 0.5, 0.0, 0.0, 1.0, 2.0), 1.0),
        (family(0.5, 1.0, 1.0, 0.0, 0.5, 0.0), 2.0),
        (family(0.0, 1.0, 0.0, 1.0, 0.0, 3.0), 2.5),
    ];
    for (fam, x) in cases.iter() {
        let loose = general_sine_series(fam, *x, 1e-3).unwrap();
        let tight = general_sine_series(fam, *x, 1e-6).unwrap();
        assert!(tight.terms_used > loose.terms_used);
        assert!((loose.value.re - tight.value.re).abs() <= loose.error_bound, "{fam:?} x={x}");
    }
}

#[test]
fn small_x_sine_law() {
    let fam = family(0.0, 1.0, 0.0, 0.0, 0.0, 1.0);
    let mut last = f64::INFINITY;
    for &x in &[1e-1, 1e-2, 1e-3] {
        let series = general_sine_series(&fam, x, 1e-4).unwrap().value.re;
        let ratio = series / smallx_leading_sine(&fam, x).unwrap();
        let err = (ratio - 1.0).abs();
        assert!(err < last, "x={x}: ratio {ratio}");
        last = err;
    }
    assert!(last <= 0.05);
}

#[test]
fn hartman_wintner_regime() {
    let fam = family(0.0, 4.0, 0.0, 0.0, 0.0, 1.0);
    let x = 1e-2;
    let prediction = smallx_hartman_wintner(&fam, x, 1e-12).unwrap();
    // moment oracle: sum_{n=2}^{N} n/(n^4+1), tail below 1/(2 N^2)
    let n_max = 1_000_000u64;
    let moment: f64 = (2..=n_max).rev().map(|n| {
        let n = n as f64;
        n / (n.powi(4) + 1.0)
    }).sum();
    let oracle_error = x * (1e-15 + 1.0 / (2.0 * (n_max as f64).powi(2)));
    assert!((prediction.value.re - x * moment).abs() <= prediction.error_bound + oracle_error);
    let series = general_sine_series(&fam, x, 1e-10).unwrap().value.re;
    let ratio = series / prediction.value.re;
    assert!((ratio - 1.0).abs() <= 0.01, "ratio {ratio}");
    assert_eq!(smallx_hartman_wintner(&fam, 0.0, 1e-12).unwrap().value.re, 0.0);
}

#[test]
fn log_factorial_family() {
    let fam = LogFactorialFamily::new(0.0, 3.0, 0.0, 1.0).unwrap();
    let l2 = 2f64.ln();
    assert!((fam.coefficient(2) - 1.0 / (l2.powi(3) + 1.0)).abs() < 1e-15);
    let (series, prediction) = log_factorial_sine_series(&fam, 0.01, 1e-10).unwrap();
    let ratio = series.value.re / prediction.unwrap().value.re;
    assert!((ratio - 1.0).abs() <= 0.02, "ratio {ratio}");
}

#[test]
fn log_factorial_coefficients_approach_power_law() {
    // the ratio to (n log n)^{-theta} tends to 1 only like (1 - 1/log n)^{-theta}
    let fam = LogFactorialFamily::new(1.0, 2.0, 1.0, 1.0).unwrap();
    let theta = fam.theta();
    let mut last = f64::INFINITY;
    for &n in &[1e2, 1e4, 1e6, 1e9] {
        let nl = n * f64::ln(n);
        let ratio = fam.coefficient(n as u64) * nl.powf(theta);
        assert!((ratio - 1.0).abs() < last);
        last = (ratio - 1.0).abs();
        let stirling = ln_gamma_real(n + 1.0).unwrap();
        let corrected = fam.coefficient(n as u64) * stirling.powf(theta);
        assert!((corrected - 1.0).abs() < 1e-2, "n={n}: {corrected}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn parity_of_direct_evaluators(k in 1u32..2000, mu in 0.3f64..3.0, r in 0.5f64..20.0) {
        // multiples of 2^-10 keep 2 pi - x exact
        let x = k as f64 / 1024.0 * 3.0;
        prop_assume!(x < PI);
        let a = TrigQuery::new(mu, r, x).unwrap();
        let b = TrigQuery::new(mu, r, 2.0 * PI - x).unwrap();
        let fa = mathieu_direct(&a.params(), 1e-10).unwrap().value;
        let fb = mathieu_direct(&b.params(), 1e-10).unwrap().value;
        prop_assert!((fa - fb.conj()).norm() <= 1e-13 * fa.norm());
    }
}
