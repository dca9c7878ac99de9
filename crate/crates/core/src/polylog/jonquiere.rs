//! Jonquière's representation of the polylogarithm through two Hurwitz
//! zeta values,
//!
//! ```text
//! Li_a(z) = Gamma(1-a) / (2 pi)^{1-a}
//!         * ( i^{1-a} zeta(1-a, 1/2 + log(-z)/(2 pi i))
//!           + i^{a-1} zeta(1-a, 1/2 - log(-z)/(2 pi i)) ),
//! ```
//!
//! valid for `z` off `[0, inf)` and `a` not a non-negative integer. The
//! logarithm is principal and `i^w = exp(i pi w / 2)`.

use core::f64::consts::PI;

use num_complex::Complex64;

use super::{near_nonnegative_integer, PolylogQuery};
use crate::error::bail;
use crate::hurwitz::{hurwitz_zeta, HurwitzQuery};
use crate::special::complex_gamma;
use crate::{BoundKind, EvalOutcome, Method, Result};

/// Distance from the non-negative integers below which the order is
/// rejected (poles of `Gamma(1 - alpha)`).
pub const ORDER_EXCLUSION: f64 = 1e-8;

/// `arg(-z)`, rejecting `z` on the ray `[0, inf)`.
pub(crate) fn arg_neg_z(z: Complex64) -> Result<f64> {
    if z.norm() == 0.0 {
        bail!(Domain, "z = 0 lies on [0, inf)");
    }
    if z.im == 0.0 && z.re > 0.0 {
        bail!(Domain, "z = {z} lies on [0, inf)");
    }
    let theta = (-z).arg();
    if PI - theta.abs() < 1e-12 {
        bail!(Domain, "z = {z} is within rounding of [0, inf)");
    }
    Ok(theta)
}

pub fn polylog_jonquiere(query: &PolylogQuery) -> Result<EvalOutcome> {
    let (alpha, z) = (query.alpha(), query.z());
    arg_neg_z(z)?;
    if near_nonnegative_integer(alpha, ORDER_EXCLUSION) {
        bail!(
            Order,
            "Jonquière's formula is singular at non-negative integer order (alpha = {alpha})"
        );
    }

    let i = Complex64::i();
    let shift = (-z).ln() / (i * (2.0 * PI));
    let q_plus = shift + 0.5;
    let q_minus = Complex64::new(0.5, 0.0) - shift;
    debug_assert!(q_plus.re > 0.0 && q_minus.re > 0.0);

    let s = Complex64::new(1.0, 0.0) - alpha;
    let zeta_plus = hurwitz_zeta(&HurwitzQuery::new(s, q_plus)?, None)?;
    let zeta_minus = hurwitz_zeta(&HurwitzQuery::new(s, q_minus)?, None)?;

    let prefactor = complex_gamma(s)? * (-s * (2.0 * PI).ln()).exp();
    let rot_plus = (s * i * (PI / 2.0)).exp();
    let rot_minus = (-s * i * (PI / 2.0)).exp();
    let a = rot_plus * zeta_plus.value;
    let b = rot_minus * zeta_minus.value;
    let value = prefactor * (a + b);

    let pn = prefactor.norm();
    let error = pn
        * (rot_plus.norm() * zeta_plus.error_bound
            + rot_minus.norm() * zeta_minus.error_bound
            + 16.0 * f64::EPSILON * (a.norm() + b.norm()));
    EvalOutcome::new(
        value,
        error,
        BoundKind::Heuristic,
        zeta_plus.terms_used + zeta_minus.terms_used,
        Method::Jonquiere,
    )
}
