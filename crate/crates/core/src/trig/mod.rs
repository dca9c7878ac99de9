//! Trigonometric Mathieu series `sum 2n cos(nx) / (n^2+r^2)^{mu+1}` and
//! `sum 2n sin(nx) / (n^2+r^2)^{mu+1}`, their large-`r` expansions, the
//! segment-wise route at rational angles, and first-order small-`x` laws for
//! more general sine series.

mod family;
mod zastavnyi;

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::bail;
use crate::mathieu::{asym_eval, mathieu_direct, MathieuParams};
use crate::{EvalOutcome, Result};

pub use family::{
    general_cosine_series, general_sine_series, log_factorial_sine_series, monotone_start,
    smallx_hartman_wintner, smallx_leading_sine, theta_exponent, CoefficientSequence,
    LogFactorialFamily, SeriesFamilyParams, MONOTONE_SCAN_LIMIT, TRIG_MAX_TERMS,
};
pub use zastavnyi::{
    cosine_multisection_expansion, cosine_series_via_zastavnyi, sine_multisection_expansion,
    zastavnyi_direct, zastavnyi_expansion, ZastavnyiParams, ZASTAVNYI_EXCLUSION,
};

/// `e^{ix}`, built from `2 pi - x` for `x > pi` so that `x` and `2 pi - x`
/// give exact conjugates.
pub(crate) fn unit_point(x: f64) -> Complex64 {
    if x > PI {
        let t = 2.0 * PI - x;
        Complex64::new(t.cos(), -t.sin())
    } else {
        Complex64::new(x.cos(), x.sin())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigQuery {
    mu: f64,
    r: f64,
    x: f64,
}

impl TrigQuery {
    pub fn new(mu: f64, r: f64, x: f64) -> Result<Self> {
        if !(x > 0.0 && x < 2.0 * PI) {
            bail!(Domain, "x must lie in (0, 2 pi), got {x}");
        }
        MathieuParams::new(mu, r, unit_point(x))?;
        Ok(Self { mu, r, x })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn params(&self) -> MathieuParams {
        MathieuParams::new(self.mu, self.r, unit_point(self.x)).expect("validated in TrigQuery::new")
    }
}

pub fn cosine_series(query: &TrigQuery, tol: f64) -> Result<EvalOutcome> {
    Ok(mathieu_direct(&query.params(), tol)?.re())
}

pub fn sine_series(query: &TrigQuery, tol: f64) -> Result<EvalOutcome> {
    Ok(mathieu_direct(&query.params(), tol)?.im())
}

/// Cosine and sine parts of the large-`r` expansion at `z = e^{ix}`.
pub fn trig_asym_eval(query: &TrigQuery, k_max: Option<usize>) -> Result<(EvalOutcome, EvalOutcome)> {
    let out = asym_eval(&query.params(), k_max)?;
    Ok((out.re(), out.im()))
}
