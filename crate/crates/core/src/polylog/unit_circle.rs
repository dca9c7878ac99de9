//! Multisection of the defining series at a root of unity:
//!
//! ```text
//! Li_a(e^{i p pi / q}) = (2q)^{-a} ( zeta(a) + sum_{m=1}^{2q-1} e^{i m p pi / q} zeta(a, m / 2q) ).
//! ```

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::{negative_integer, RationalAngle};
use crate::error::bail;
use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_neg_int, hurwitz_zeta_neg_int_exact, HurwitzQuery, POLE_EXCLUSION};
use crate::special::riemann_zeta_neg_int;
use crate::sum::ComplexSum;
use crate::{BoundKind, EvalOutcome, Method, Result};

/// `e^{i m p pi / q}` for `m = 0..2q`, reduced exactly before the trig call.
pub(crate) fn roots(angle: &RationalAngle) -> Vec<Complex64> {
    let (p, q) = (angle.p() as u64, angle.q() as u64);
    (0..2 * q)
        .map(|m| {
            let k = (m * p) % (2 * q);
            let t = PI * k as f64 / q as f64;
            Complex64::new(t.cos(), t.sin())
        })
        .collect()
}

pub fn polylog_unit_circle(alpha: Complex64, angle: &RationalAngle) -> Result<EvalOutcome> {
    if (alpha - 1.0).norm() < POLE_EXCLUSION {
        bail!(Order, "multisection needs alpha != 1, got {alpha}");
    }
    let q = angle.q() as u64;
    let two_q = 2 * q;
    let roots = roots(angle);

    if let Some(n) = negative_integer(alpha) {
        let mut acc = ComplexSum::new();
        acc.add(riemann_f64(n)?);
        for m in 1..two_q {
            let shift = Complex64::new(m as f64 / two_q as f64, 0.0);
            acc.add(roots[m as usize] * hurwitz_zeta_neg_int(n, shift)?);
        }
        let scale = (two_q as f64).powi(n as i32);
        let value = acc.value() * scale;
        let error = 64.0 * f64::EPSILON * acc.abs_sum() * scale;
        return EvalOutcome::new(value, error, BoundKind::Heuristic, two_q as usize, Method::Multisection);
    }

    let mut acc = ComplexSum::new();
    let mut error = 0.0;
    let mut terms = 0;
    for m in 0..two_q {
        let shift = if m == 0 { 1.0 } else { m as f64 / two_q as f64 };
        let z = hurwitz_zeta(&HurwitzQuery::new(alpha, Complex64::new(shift, 0.0))?, None)?;
        let root = roots[m as usize];
        acc.add(root * z.value);
        error += z.error_bound;
        terms += z.terms_used;
    }
    let scale = (-alpha * (two_q as f64).ln()).exp();
    let value = acc.value() * scale;
    let error = scale.norm() * (error + 16.0 * f64::EPSILON * acc.abs_sum());
    EvalOutcome::new(value, error, BoundKind::Heuristic, terms, Method::Multisection)
}

fn riemann_f64(n: u32) -> Result<Complex64> {
    Ok(Complex64::new(rational_to_f64(&riemann_zeta_neg_int(n)?), 0.0))
}

fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact `(Re, Im)` of `Li_{-n}(e^{i p pi / q})` for `q` in `{1, 2}`, where
/// every root of unity involved has rational coordinates.
pub fn polylog_unit_circle_exact(n: u32, angle: &RationalAngle) -> Result<(BigRational, BigRational)> {
    let q = angle.q() as u64;
    if q > 2 {
        bail!(Domain, "exact multisection needs q in {{1, 2}}, got q = {q}");
    }
    let two_q = 2 * q;
    let p = angle.p() as u64;
    let mut re = riemann_zeta_neg_int(n)?;
    let mut im = BigRational::zero();
    for m in 1..two_q {
        let shift = BigRational::new(BigInt::from(m), BigInt::from(two_q));
        let zeta = hurwitz_zeta_neg_int_exact(n, &shift)?;
        // e^{i k pi / q} with k = m p mod 2q is one of 1, i, -1, -i
        let quarter = ((m * p) % two_q) * (2 / q);
        match quarter {
            0 => re += zeta,
            1 => im += zeta,
            2 => re -= zeta,
            _ => im -= zeta,
        }
    }
    let scale = BigRational::from_integer(BigInt::from(two_q).pow(n));
    Ok((re * &scale, im * scale))
}
