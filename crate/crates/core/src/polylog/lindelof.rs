//! Lindelöf integral
//!
//! ```text
//! Li_a(z) = -1/(2 pi i) int_{1/2 - i inf}^{1/2 + i inf} (-z)^u u^{-a} pi / sin(pi u) du.
//! ```
//!
//! On `u = 1/2 + i t` we have `sin(pi u) = cosh(pi t)`, so the integrand in
//! `t` is `-(1/2) (-z)^u u^{-a} / cosh(pi t)`, decaying like
//! `exp((|arg(-z)| - pi) |t|)`. The line is truncated to `[-T, T]`.

use core::f64::consts::PI;

use num_complex::Complex64;

use super::jonquiere::arg_neg_z;
use super::PolylogQuery;
use crate::error::bail;
use crate::quad::integrate;
use crate::{BoundKind, EvalOutcome, Method, Result};

fn ln_cosh(x: f64) -> f64 {
    let ax = x.abs();
    ax + ((1.0 + (-2.0 * ax).exp()) * 0.5).ln()
}

/// Default half-width `T = ln(1/tol) / (pi - |arg(-z)|) + 5`.
pub fn default_half_width(z: Complex64, tol: f64) -> Result<f64> {
    let theta = arg_neg_z(z)?.abs();
    Ok((1.0 / tol).ln() / (PI - theta) + 5.0)
}

/// Bound on the integral over `|t| > T`.
pub(crate) fn truncation_bound(alpha: Complex64, z: Complex64, half_width: f64) -> Result<f64> {
    let theta = arg_neg_z(z)?.abs();
    let t = half_width.max(1.0);
    Ok(2.0 * z.norm().sqrt() * t.powf(-alpha.re) * (alpha.im.abs() * PI / 2.0).exp()
        * ((theta - PI) * half_width).exp()
        / (PI - theta))
}

/// `Li_alpha(z)` by quadrature of the Lindelöf integral over `[-T, T]`.
///
/// `half_width = None` uses [`default_half_width`]. Restricted to
/// `Re(alpha) >= 0`, where `|u^{-alpha}|` stays bounded along the line.
pub fn polylog_lindelof(query: &PolylogQuery, tol: f64, half_width: Option<f64>) -> Result<EvalOutcome> {
    let (alpha, z) = (query.alpha(), query.z());
    if !(tol > 0.0) {
        bail!(Domain, "tolerance must be positive, got {tol}");
    }
    let theta = arg_neg_z(z)?;
    if alpha.re < 0.0 {
        bail!(Domain, "Lindelöf route is restricted to Re(alpha) >= 0, got alpha = {alpha}");
    }
    let half_width = match half_width {
        Some(t) if t > 0.0 && t.is_finite() => t,
        Some(t) => bail!(Domain, "half-width must be positive, got {t}"),
        None => default_half_width(z, tol)?,
    };
    let truncation = truncation_bound(alpha, z, half_width)?;
    if truncation > 0.5 * tol {
        bail!(
            Convergence,
            "truncation error {truncation:e} at T = {half_width} exceeds tol {tol:e}"
        );
    }

    let log_neg_z = Complex64::new(0.5 * z.norm_sqr().ln(), theta);
    let integrand = |t: f64| -> Result<Complex64> {
        let u = Complex64::new(0.5, t);
        let log = u * log_neg_z - alpha * u.ln() - ln_cosh(PI * t);
        Ok(-0.5 * log.exp())
    };
    let panels = ((2.0 * half_width).ceil() as usize).clamp(8, 2000);
    let quad = integrate(integrand, -half_width, half_width, panels, 0.5 * tol, 0.0, 20_000)?;

    EvalOutcome::new(
        quad.value,
        quad.error + truncation,
        BoundKind::Heuristic,
        quad.evaluations,
        Method::Lindelof,
    )
}
