//! The Mathieu power series
//!
//! ```text
//! F_mu(r, z) = sum_{n>=1} 2n z^n / (n^2 + r^2)^{mu+1},
//! ```
//!
//! by direct summation, through its Mellin transform in `r`, and by the
//! large-`r` expansion `F ~ sum_k c_k r^{-2k-2mu-2}` with
//! `c_k = 2 (-1)^k C(k+mu, k) Li_{-2k-1}(z)`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::bail;
use crate::polylog::{polylog, polylog_neg_int_scaled, PolylogQuery, NEG_INT_MAX_ORDER};
use crate::quad::integrate;
use crate::special::{binom_shifted, complex_gamma, gamma_real};
use crate::sum::{first_index_below, ComplexSum, PowerIter};
use crate::{BoundKind, EvalOutcome, Method, Result};

/// Largest number of terms the direct evaluator will sum.
pub const MAX_DIRECT_TERMS: u64 = 1_000_000_000;

/// Above this many terms the uniform tail bound gives way to the tightest
/// applicable bound.
pub const UNIFORM_TERMS_LIMIT: u64 = 100_000_000;

/// Largest expansion index considered by automatic truncation.
pub const ASYM_MAX_ORDER: usize = 60;

const UNIT_SLACK: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathieuParams {
    mu: f64,
    r: f64,
    z: Complex64,
}

impl MathieuParams {
    pub fn new(mu: f64, r: f64, z: Complex64) -> Result<Self> {
        if !(mu > 0.0 && mu.is_finite()) {
            bail!(Parameter, "mu must be positive and finite, got {mu}");
        }
        if !(r > 0.0 && r.is_finite()) {
            bail!(Parameter, "r must be positive and finite, got {r}");
        }
        if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > 1.0 + UNIT_SLACK {
            bail!(Domain, "z must satisfy |z| <= 1, got {z}");
        }
        Ok(Self { mu, r, z })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn with_r(&self, r: f64) -> Result<Self> {
        Self::new(self.mu, r, self.z)
    }

    fn require_off_pole(&self) -> Result<()> {
        if (Complex64::new(1.0, 0.0) - self.z).norm() < crate::polylog::SINGULAR_EXCLUSION {
            bail!(Singular, "the expansion needs z != 1");
        }
        Ok(())
    }
}

/// How [`mathieu_direct_with`] picks the number of terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailPolicy {
    /// The `|z| <= 1` worst case `(N^2 + r^2)^{-mu} / mu`, falling back to
    /// [`TailPolicy::Tightest`] past [`UNIFORM_TERMS_LIMIT`] terms.
    #[default]
    Uniform,
    /// The smallest `N` certified by any of the uniform, summation-by-parts
    /// or geometric bounds.
    Tightest,
}

fn coefficient(n: u64, r2: f64, mu: f64, integer_power: Option<i32>) -> f64 {
    let nf = n as f64;
    let base = nf * nf + r2;
    let denom = match integer_power {
        Some(m) => base.powi(m),
        None => base.powf(mu + 1.0),
    };
    2.0 * nf / denom
}

fn integer_power(mu: f64) -> Option<i32> {
    let m = mu + 1.0;
    (m == m.round() && m <= 64.0).then_some(m as i32)
}

/// `(sum_{n=1}^{N} 2n z^n / (n^2+r^2)^{mu+1}, sum |terms|)`.
pub fn mathieu_partial_sum(params: &MathieuParams, n_terms: u64) -> (Complex64, f64) {
    let (mu, z) = (params.mu, params.z);
    let r2 = params.r * params.r;
    let ip = integer_power(mu);
    let mut acc = ComplexSum::new();
    if z.norm() == 0.0 {
        return (Complex64::new(0.0, 0.0), 0.0);
    }
    if z.im == 0.0 && z.re.abs() == 1.0 {
        let sign = z.re;
        let mut s = 1.0;
        for n in 1..=n_terms {
            s *= sign;
            acc.add(Complex64::new(s * coefficient(n, r2, mu, ip), 0.0));
        }
    } else {
        for (n, zn) in (1..=n_terms).zip(PowerIter::new(z)) {
            acc.add(zn * coefficient(n, r2, mu, ip));
        }
    }
    (acc.value(), acc.abs_sum())
}

/// First index from which the coefficients `2n / (n^2+r^2)^{mu+1}` decrease.
fn turning_index(mu: f64, r: f64) -> u64 {
    (r / (2.0 * mu + 1.0).sqrt()).ceil() as u64 + 1
}

fn uniform_bound(mu: f64, r: f64, n: u64) -> f64 {
    let nf = n as f64;
    (-mu * (nf * nf + r * r).ln()).exp() / mu
}

/// Tail bound for `N >= turning_index`, minimum of the uniform,
/// summation-by-parts (`2 b_{N+1} / |1-z|`) and geometric
/// (`b_{N+1} |z|^{N+1} / (1-|z|)`) bounds.
fn tightest_bound(mu: f64, r: f64, z: Complex64, n: u64) -> f64 {
    let mut best = uniform_bound(mu, r, n);
    let rho = z.norm();
    let b_next = coefficient(n + 1, r * r, mu, None);
    let gap = (Complex64::new(1.0, 0.0) - z).norm();
    if gap > 0.0 {
        best = best.min(2.0 * b_next / gap);
    }
    if rho < 1.0 {
        let geometric = if rho == 0.0 {
            0.0
        } else {
            b_next * ((n + 1) as f64 * rho.ln()).exp() / (1.0 - rho)
        };
        best = best.min(geometric);
    }
    best
}

fn choose_terms(params: &MathieuParams, tol: f64, policy: TailPolicy) -> Result<(u64, f64)> {
    let (mu, r, z) = (params.mu, params.r, params.z);
    let start = turning_index(mu, r);
    if policy == TailPolicy::Uniform {
        let threshold = (mu * tol).ln() * (-1.0 / mu);
        let need = if threshold > (r * r).ln() {
            ((threshold.exp() - r * r).max(0.0)).sqrt().ceil()
        } else {
            0.0
        };
        if need <= UNIFORM_TERMS_LIMIT as f64 {
            let n = (need as u64).max(start);
            return Ok((n, uniform_bound(mu, r, n)));
        }
    }
    match first_index_below(start, MAX_DIRECT_TERMS, tol, |n| tightest_bound(mu, r, z, n)) {
        Some(n) => Ok((n, tightest_bound(mu, r, z, n))),
        None => bail!(
            Tolerance,
            "direct summation needs more than {MAX_DIRECT_TERMS} terms for tol {tol:e} (mu = {mu}, r = {r}, z = {z})"
        ),
    }
}

/// `F_mu(r, z)` by compensated summation with a certified tail bound,
/// using [`TailPolicy::Uniform`]. Accepts `z = 1`.
pub fn mathieu_direct(params: &MathieuParams, tol: f64) -> Result<EvalOutcome> {
    mathieu_direct_with(params, tol, TailPolicy::Uniform)
}

pub fn mathieu_direct_with(params: &MathieuParams, tol: f64, policy: TailPolicy) -> Result<EvalOutcome> {
    if !(tol > 0.0) {
        bail!(Domain, "tolerance must be positive, got {tol}");
    }
    if params.z.norm() == 0.0 {
        return EvalOutcome::new(Complex64::new(0.0, 0.0), 0.0, BoundKind::Certified, 0, Method::Direct);
    }
    let (n, tail) = choose_terms(params, tol, policy)?;
    let (value, abs_sum) = mathieu_partial_sum(params, n);
    let rounding = (16.0 + (n as f64).log2()) * f64::EPSILON * abs_sum;
    EvalOutcome::new(value, tail + rounding, BoundKind::Certified, n as usize, Method::Direct)
}

/// Coefficients of the large-`r` expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymExpansion {
    pub mu: f64,
    pub z: Complex64,
    pub coeffs: Vec<Complex64>,
    /// Modulus-sum scale of each coefficient, for rounding estimates.
    pub scales: Vec<f64>,
    pub k_max: usize,
}

impl AsymExpansion {
    /// `c_k r^{-2k-2mu-2}`.
    pub fn term(&self, k: usize, r: f64) -> Complex64 {
        self.coeffs[k] * (-(2.0 * k as f64 + 2.0 * self.mu + 2.0) * r.ln()).exp()
    }
}

pub fn asym_coeffs(mu: f64, z: Complex64, k_max: usize) -> Result<AsymExpansion> {
    if !(mu > 0.0 && mu.is_finite()) {
        bail!(Parameter, "mu must be positive and finite, got {mu}");
    }
    if z.norm() > 1.0 + UNIT_SLACK {
        bail!(Domain, "z must satisfy |z| <= 1, got {z}");
    }
    if 2 * k_max + 1 > NEG_INT_MAX_ORDER as usize {
        bail!(Range, "k_max = {k_max} exceeds the supported order {}", (NEG_INT_MAX_ORDER - 1) / 2);
    }
    let mut coeffs = Vec::with_capacity(k_max + 1);
    let mut scales = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let (li, scale) = polylog_neg_int_scaled(2 * k as u32 + 1, z)?;
        let factor = 2.0 * binom_shifted(mu, k as u32) * if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs.push(li * factor);
        scales.push(scale * factor.abs());
    }
    Ok(AsymExpansion { mu, z, coeffs, scales, k_max })
}

/// Truncated large-`r` expansion `sum_{k<=K} c_k r^{-2k-2mu-2}`.
///
/// `k_max = None` truncates at the smallest term (up to
/// [`ASYM_MAX_ORDER`]) and fails with a degenerate error when the terms
/// already grow from `k = 0` to `k = 1`. The error estimate is the first
/// omitted term plus rounding; with automatic truncation the omitted term is
/// scaled by `sqrt(K+1)`, the observed growth of the optimally truncated
/// remainder relative to the smallest term.
pub fn asym_eval(params: &MathieuParams, k_max: Option<usize>) -> Result<EvalOutcome> {
    params.require_off_pole()?;
    let (mu, r) = (params.mu, params.r);
    let (k_last, exp) = match k_max {
        Some(k) => (k, asym_coeffs(mu, params.z, k + 1)?),
        None => {
            let exp = asym_coeffs(mu, params.z, ASYM_MAX_ORDER + 1)?;
            let mags: Vec<f64> = (0..=ASYM_MAX_ORDER).map(|k| exp.term(k, r).norm()).collect();
            if mags[1] >= mags[0] {
                bail!(
                    Degenerate,
                    "r = {r} is too small for the expansion: |c_1 r^-2| >= |c_0|"
                );
            }
            let mut best = 0;
            for (k, &m) in mags.iter().enumerate() {
                if m > 0.0 && m < mags[best] {
                    best = k;
                }
            }
            (best, exp)
        }
    };
    let mut acc = ComplexSum::new();
    let mut rounding = 0.0;
    for k in 0..=k_last {
        let t = exp.term(k, r);
        acc.add(t);
        let n = 2 * k + 1;
        let weight = (-(2.0 * k as f64 + 2.0 * mu + 2.0) * r.ln()).exp();
        rounding += (8.0 + 2.0 * n as f64) * f64::EPSILON * exp.scales[k] * weight;
    }
    let mut omitted = exp.term(k_last + 1, r).norm();
    if k_max.is_none() {
        omitted *= ((k_last + 1) as f64).sqrt();
    }
    EvalOutcome::new(
        acc.value(),
        omitted + rounding,
        BoundKind::Heuristic,
        k_last + 1,
        Method::Asymptotic,
    )
}

/// Mellin variable `u` of `int_0^inf r^{u-1} F_mu(r, z) dr`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MellinQuery {
    u: Complex64,
}

impl MellinQuery {
    pub fn new(u: Complex64) -> Result<Self> {
        if !(u.re.is_finite() && u.im.is_finite()) {
            bail!(Domain, "non-finite Mellin variable {u}");
        }
        Ok(Self { u })
    }

    pub fn u(&self) -> Complex64 {
        self.u
    }
}

/// `Gamma(mu+1-u/2) Gamma(u/2) / Gamma(mu+1) Li_{2mu+1-u}(z)`, the Mellin
/// transform of `F_mu(., z)` continued in `u` through the polylogarithm.
pub fn mellin_closed(query: &MellinQuery, mu: f64, z: Complex64, tol: f64) -> Result<EvalOutcome> {
    if !(mu > 0.0 && mu.is_finite()) {
        bail!(Parameter, "mu must be positive and finite, got {mu}");
    }
    let u = query.u;
    let g1 = complex_gamma(Complex64::new(mu + 1.0, 0.0) - u / 2.0)?;
    let g2 = complex_gamma(u / 2.0)?;
    let prefactor = g1 * g2 / gamma_real(mu + 1.0)?;
    let li = polylog(&PolylogQuery::new(Complex64::new(2.0 * mu + 1.0, 0.0) - u, z)?, tol)?;
    let value = prefactor * li.value;
    let error = prefactor.norm() * (li.error_bound + 8.0 * f64::EPSILON * li.value.norm());
    EvalOutcome::new(value, error, li.bound_kind, li.terms_used, li.method)
}

/// Numerical Mellin transform: quadrature of `r^{u-1} F_mu(r, z)` over
/// `(0, R]`, `R = 50 (1+mu) / min(1, |1-z|)`, with `F` by direct summation,
/// plus the tail from the first two expansion terms. `tol` is absolute.
pub fn mellin_numeric(query: &MellinQuery, mu: f64, z: Complex64, tol: f64) -> Result<EvalOutcome> {
    let u = query.u;
    let params = MathieuParams::new(mu, 1.0, z)?;
    params.require_off_pole()?;
    if !(tol > 0.0) {
        bail!(Domain, "tolerance must be positive, got {tol}");
    }
    if !(u.re > 0.0 && u.re < 2.0 * mu + 2.0) {
        bail!(Domain, "numeric Mellin transform needs 0 < Re(u) < 2mu+2, got u = {u}");
    }
    let gap = (Complex64::new(1.0, 0.0) - z).norm();
    let big_r = 50.0 * (1.0 + mu) / gap.min(1.0);

    let exp = asym_coeffs(mu, z, 2)?;
    let tail_piece = |k: usize| {
        let p = Complex64::new(2.0 * k as f64 + 2.0 * mu + 2.0, 0.0) - u;
        exp.coeffs[k] * (-p * big_r.ln()).exp() / p
    };
    let tail = tail_piece(0) + tail_piece(1);
    let tail_error = tail_piece(2).norm();

    // r = s^m keeps the integrand bounded at the origin when Re(u) < 1
    let m = (1.0 / u.re).ceil().max(1.0);
    let s_max = big_r.powf(1.0 / m);
    let inner_tol = 0.1 * tol * u.re / big_r.powf(u.re);
    let mut inner_error: f64 = 0.0;
    let integrand = |s: f64| -> Result<Complex64> {
        if s == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let r = s.powf(m);
        let f = mathieu_direct_with(&params.with_r(r)?, inner_tol, TailPolicy::Tightest)?;
        inner_error = inner_error.max(f.error_bound);
        Ok(m * ((m * u - 1.0) * s.ln()).exp() * f.value)
    };
    let quad = integrate(integrand, 0.0, s_max, 16, 0.5 * tol, 0.0, 4000)?;

    let error = quad.error + tail_error + inner_tol * big_r.powf(u.re) / u.re;
    EvalOutcome::new(quad.value + tail, error, BoundKind::Heuristic, quad.evaluations, Method::Quadrature)
}

/// Least-squares slope of `log|F_mu(r, z)|` against `log r` over `r_grid`,
/// each value summed directly to relative accuracy about `1e-8`.
pub fn growth_order_probe(mu: f64, z: Complex64, r_grid: &[f64]) -> Result<f64> {
    if r_grid.len() < 3 {
        bail!(Parameter, "the probe needs at least 3 radii, got {}", r_grid.len());
    }
    if r_grid.windows(2).any(|w| !(w[1] > w[0])) {
        bail!(Parameter, "radii must be strictly increasing");
    }
    let mut points = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        let params = MathieuParams::new(mu, r, z)?;
        let mut tol = 1e-8 * r.powf(-2.0 * mu - 2.0);
        let value = loop {
            let f = mathieu_direct_with(&params, tol, TailPolicy::Tightest)?;
            let mag = f.value.norm();
            if f.error_bound <= 1e-6 * mag {
                break mag;
            }
            if mag == 0.0 || tol < 1e-300 {
                bail!(Convergence, "F_{mu}({r}, {z}) is not resolved above its error bound");
            }
            tol = tol.min(1e-8 * mag) * 0.1;
        };
        points.push((r.ln(), value.ln()));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Ok(sxy / sxx)
}
