//! The polylogarithm `Li_alpha(z)`: defining series, closed form at
//! non-positive integer order, Jonquière's Hurwitz representation, the
//! Lindelöf integral and multisection at roots of unity.

mod eulerian;
mod jonquiere;
mod lindelof;
mod series;
mod unit_circle;

use core::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::bail;
use crate::{EvalOutcome, Method, Result};

pub use eulerian::{
    polylog_neg_int, polylog_neg_int_exact, EulerianTriangle, NEG_INT_MAX_ORDER, SINGULAR_EXCLUSION,
};
pub(crate) use eulerian::polylog_neg_int_scaled;
pub use jonquiere::{polylog_jonquiere, ORDER_EXCLUSION};
pub use lindelof::{default_half_width, polylog_lindelof};
pub use series::{polylog_series, MAX_SERIES_TERMS};
pub use unit_circle::{polylog_unit_circle, polylog_unit_circle_exact};
pub(crate) use unit_circle::roots as unit_roots;

/// Distance from the cut `[1, inf)` below which a query is rejected.
pub const CUT_EXCLUSION: f64 = 1e-12;

/// Radius up to which the dispatcher prefers the defining series.
pub const SERIES_RADIUS: f64 = 0.95;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolylogQuery {
    alpha: Complex64,
    z: Complex64,
}

impl PolylogQuery {
    pub fn new(alpha: Complex64, z: Complex64) -> Result<Self> {
        if !(alpha.re.is_finite() && alpha.im.is_finite() && z.re.is_finite() && z.im.is_finite()) {
            bail!(Domain, "non-finite polylog argument (alpha = {alpha}, z = {z})");
        }
        if z.re >= 1.0 && z.im.abs() < CUT_EXCLUSION {
            bail!(Domain, "z = {z} lies on the branch cut [1, inf)");
        }
        Ok(Self { alpha, z })
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }
}

/// `x = p pi / q` in `(0, 2 pi)` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    p: u32,
    q: u32,
}

impl RationalAngle {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 || p >= 2 * q {
            bail!(Domain, "angle p/q = {p}/{q} must lie in (0, 2)");
        }
        if p.gcd(&q) != 1 {
            bail!(Domain, "angle p/q = {p}/{q} is not in lowest terms");
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn x(&self) -> f64 {
        PI * self.p as f64 / self.q as f64
    }

    pub fn z(&self) -> Complex64 {
        let x = self.x();
        Complex64::new(x.cos(), x.sin())
    }

    /// Recognize `z` as `e^{i p pi / q}` with `q <= max_den`.
    pub fn detect(z: Complex64, max_den: u32) -> Option<Self> {
        if (z.norm() - 1.0).abs() > 1e-13 {
            return None;
        }
        let mut turns = z.arg() / PI;
        if turns <= 0.0 {
            turns += 2.0;
        }
        (1..=max_den).find_map(|q| {
            let p = (turns * q as f64).round();
            if p < 1.0 || (turns * q as f64 - p).abs() > 1e-12 * q as f64 {
                return None;
            }
            Self::new(p as u32, q).ok()
        })
    }
}

/// `n` when `alpha` is (within rounding) the integer `-n <= 0`.
pub(crate) fn negative_integer(alpha: Complex64) -> Option<u32> {
    let r = alpha.re.round();
    if alpha.im == 0.0 && r <= 0.0 && (alpha.re - r).abs() < 1e-14 && -r <= NEG_INT_MAX_ORDER as f64 {
        Some((-r) as u32)
    } else {
        None
    }
}

pub(crate) fn near_nonnegative_integer(alpha: Complex64, eps: f64) -> bool {
    let r = alpha.re.round();
    r >= 0.0 && (alpha - Complex64::new(r, 0.0)).norm() < eps
}

fn on_nonnegative_axis(z: Complex64) -> bool {
    z.im == 0.0 && z.re >= 0.0
}

/// Evaluate `Li_alpha(z)` by whichever route applies:
///
/// * closed form for `alpha` a non-positive integer;
/// * series for `|z| <= 0.95`, and for `z` in `[0, 1)`;
/// * for positive integer `alpha` near the unit circle, multisection when `z`
///   is a root of unity, the series otherwise (`alpha >= 2`);
/// * for positive integer `alpha` off the disk, the Lindelöf integral;
/// * Jonquière's formula everywhere else.
pub fn polylog(query: &PolylogQuery, tol: f64) -> Result<EvalOutcome> {
    let (alpha, z) = (query.alpha(), query.z());
    if let Some(n) = negative_integer(alpha) {
        let (value, scale) = polylog_neg_int_scaled(n, z)?;
        return EvalOutcome::new(
            value,
            (8.0 + n as f64) * f64::EPSILON * scale,
            crate::BoundKind::Heuristic,
            n.max(1) as usize,
            Method::NegIntClosedForm,
        );
    }
    let rho = z.norm();
    if rho <= SERIES_RADIUS || (on_nonnegative_axis(z) && rho < 1.0) {
        return polylog_series(query, tol);
    }
    if !near_nonnegative_integer(alpha, ORDER_EXCLUSION) {
        return polylog_jonquiere(query);
    }
    if (rho - 1.0).abs() <= 1e-13 {
        if alpha.re < 1.5 {
            bail!(NoMethod, "no route for Li_{alpha} on the unit circle at z = {z}");
        }
        if let Some(angle) = RationalAngle::detect(z, 64) {
            return polylog_unit_circle(alpha, &angle);
        }
        return polylog_series(query, tol);
    }
    if rho < 1.0 {
        return polylog_series(query, tol);
    }
    if on_nonnegative_axis(z) {
        bail!(NoMethod, "no route for Li_{alpha}({z})");
    }
    polylog_lindelof(query, tol, None)
}
