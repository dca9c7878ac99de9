//! Defining series `Li_alpha(z) = sum_{n>=1} z^n / n^alpha` with a certified
//! tail bound.

use num_complex::Complex64;

use super::PolylogQuery;
use crate::error::bail;
use crate::sum::{first_index_below, ComplexSum, PowerIter};
use crate::{BoundKind, EvalOutcome, Method, Result};

/// Hard cap on the number of series terms.
pub const MAX_SERIES_TERMS: u64 = 100_000_000;

/// Certified bound on `|sum_{n>N} z^n n^{-alpha}|`, the minimum of every
/// bound that applies:
///
/// * geometric (`|z| = rho < 1`): `rho^{N+1} (N+1)^c / (1 - rho (1 + 1/(N+1))^c)`
///   with `c = max(0, -Re alpha)`, the ratio of consecutive term moduli being
///   at most `rho (1 + 1/(N+1))^c` beyond `N`;
/// * p-series (`Re alpha > 1`): `N^{1 - Re alpha} / (Re alpha - 1)`;
/// * summation by parts (`Re alpha > 0`, `z != 1`): partial sums of `z^n`
///   are at most `2/|1-z|` and `sum |Delta n^{-alpha}| <= |alpha| (N+1)^{-Re alpha} / Re alpha`.
pub(crate) fn tail_bound(alpha: Complex64, z: Complex64, n: u64) -> f64 {
    let rho = z.norm();
    let nf = n as f64;
    let mut best = f64::INFINITY;
    if rho < 1.0 {
        let c = (-alpha.re).max(0.0);
        let ratio = rho * (1.0 + 1.0 / (nf + 1.0)).powf(c);
        if ratio < 1.0 {
            let log_first = (nf + 1.0) * rho.ln() + c * (nf + 1.0).ln();
            best = best.min(log_first.exp() / (1.0 - ratio));
        }
    }
    if alpha.re > 1.0 && n >= 1 {
        best = best.min(nf.powf(1.0 - alpha.re) / (alpha.re - 1.0));
    }
    let gap = (Complex64::new(1.0, 0.0) - z).norm();
    if alpha.re > 0.0 && gap > 0.0 {
        best = best.min(2.0 * alpha.norm() * (nf + 1.0).powf(-alpha.re) / (alpha.re * gap));
    }
    if rho == 0.0 {
        best = 0.0;
    }
    best
}

/// Partial sum of the defining series, `N` chosen so that the certified tail
/// bound is at most `tol`.
///
/// Valid for `|z| < 1`, or `|z| = 1`, `z != 1` with `Re(alpha) > 1`.
pub fn polylog_series(query: &PolylogQuery, tol: f64) -> Result<EvalOutcome> {
    let (alpha, z) = (query.alpha(), query.z());
    let rho = z.norm();
    if !(tol > 0.0) {
        bail!(Domain, "tolerance must be positive, got {tol}");
    }
    if rho > 1.0 + 1e-14 {
        bail!(Domain, "series needs |z| <= 1, got |z| = {rho}");
    }
    if rho >= 1.0 - 1e-14 && alpha.re <= 1.0 {
        bail!(
            Domain,
            "series on the unit circle needs Re(alpha) > 1, got alpha = {alpha}"
        );
    }
    if (Complex64::new(1.0, 0.0) - z).norm() < 1e-12 {
        bail!(Domain, "series is not evaluated at z = 1");
    }

    let n_terms = match first_index_below(1, MAX_SERIES_TERMS, tol, |n| tail_bound(alpha, z, n)) {
        Some(n) => n,
        None => bail!(
            Tolerance,
            "series for Li_{alpha}({z}) needs more than {MAX_SERIES_TERMS} terms for tol {tol:e}"
        ),
    };

    let mut acc = ComplexSum::new();
    for (n, zn) in (1..=n_terms).zip(PowerIter::new(z)) {
        let term = zn * (-alpha * (n as f64).ln()).exp();
        acc.add(term);
    }
    let tail = tail_bound(alpha, z, n_terms);
    EvalOutcome::new(
        acc.value(),
        tail + 32.0 * f64::EPSILON * acc.abs_sum(),
        BoundKind::Certified,
        n_terms as usize,
        Method::Series,
    )
}
