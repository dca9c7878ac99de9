//! Zastavnyi's expansion of `sum_{nu>=0} (nu+a)^gamma / (y (nu+a)^alpha + 1)^mu`
//! as `y -> 0`, and the cosine series at `x = p pi / q` split into `2q`
//! residue classes, each expanded this way.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::bail;
use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_neg_int, HurwitzQuery};
use crate::mathieu::AsymExpansion;
use crate::polylog::{unit_roots, RationalAngle};
use crate::special::{binom_shifted, gamma_real, riemann_zeta_neg_int};
use crate::sum::{ComplexSum, NeumaierSum};
use crate::{BoundKind, EvalOutcome, Method, Result};

/// Minimum distance of `-(gamma+1)/alpha` from the non-negative integers.
pub const ZASTAVNYI_EXCLUSION: f64 = 1e-9;

const MAX_DIRECT_TERMS: f64 = 1e9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZastavnyiParams {
    a: f64,
    gamma: f64,
    alpha: f64,
    mu: f64,
    y: f64,
    k_max: usize,
}

impl ZastavnyiParams {
    pub fn new(a: f64, gamma: f64, alpha: f64, mu: f64, y: f64, k_max: usize) -> Result<Self> {
        for (name, v) in [("a", a), ("gamma", gamma), ("alpha", alpha), ("mu", mu), ("y", y)] {
            if !v.is_finite() {
                bail!(Parameter, "{name} must be finite, got {v}");
            }
        }
        if a <= 0.0 || alpha <= 0.0 || y <= 0.0 {
            bail!(Parameter, "a, alpha and y must be positive (a = {a}, alpha = {alpha}, y = {y})");
        }
        let rho = (gamma + 1.0) / alpha;
        if mu <= rho.max(0.0) {
            bail!(Parameter, "mu = {mu} must exceed max((gamma+1)/alpha, 0) = {}", rho.max(0.0));
        }
        let neg = -rho;
        if neg > -ZASTAVNYI_EXCLUSION && (neg - neg.round()).abs() < ZASTAVNYI_EXCLUSION {
            bail!(Parameter, "-(gamma+1)/alpha = {neg} is a non-negative integer");
        }
        Ok(Self { a, gamma, alpha, mu, y, k_max })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// `Gamma((gamma+1)/alpha) Gamma(mu - (gamma+1)/alpha) / (alpha Gamma(mu))`,
    /// the coefficient of `y^{-(gamma+1)/alpha}`.
    pub fn leading_coefficient(&self) -> Result<f64> {
        let rho = (self.gamma + 1.0) / self.alpha;
        Ok(gamma_real(rho)? * gamma_real(self.mu - rho)? / (self.alpha * gamma_real(self.mu)?))
    }

    fn summand(&self, t: f64) -> f64 {
        (self.gamma * t.ln() - self.mu * (self.y * t.powf(self.alpha)).ln_1p()).exp()
    }
}

/// `zeta(-alpha k - gamma, a)` and its error estimate.
fn zeta_at(params: &ZastavnyiParams, k: usize) -> Result<(f64, f64)> {
    let s = -params.alpha * k as f64 - params.gamma;
    let n = -s;
    if n >= 0.0 && n == n.round() && n < 128.0 {
        let v = hurwitz_zeta_neg_int(n as u32, Complex64::new(params.a, 0.0))?;
        return Ok((v.re, 16.0 * f64::EPSILON * v.re.abs()));
    }
    let out = hurwitz_zeta(&HurwitzQuery::new(Complex64::new(s, 0.0), Complex64::new(params.a, 0.0))?, None)?;
    Ok((out.value.re, out.error_bound))
}

/// `(mu)_k / k!`.
fn rising_over_factorial(mu: f64, k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, j| acc * (mu + j as f64 - 1.0) / j as f64)
}

/// The expansion through `y^{k_max}`; the error estimate is the first
/// omitted term.
pub fn zastavnyi_expansion(params: &ZastavnyiParams) -> Result<EvalOutcome> {
    let rho = (params.gamma + 1.0) / params.alpha;
    let lead = params.leading_coefficient()? * (-rho * params.y.ln()).exp();
    let mut acc = NeumaierSum::new();
    acc.add(lead);
    let mut error = 8.0 * f64::EPSILON * lead.abs();
    let term = |k: usize| -> Result<(f64, f64)> {
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        let weight = sign * rising_over_factorial(params.mu, k) * params.y.powi(k as i32);
        let (zeta, zeta_err) = zeta_at(params, k)?;
        Ok((weight * zeta, weight.abs() * zeta_err))
    };
    for k in 0..=params.k_max {
        let (t, e) = term(k)?;
        acc.add(t);
        error += e;
    }
    let (omitted, _) = term(params.k_max + 1)?;
    EvalOutcome::new(
        Complex64::new(acc.value(), 0.0),
        error + omitted.abs(),
        BoundKind::Heuristic,
        params.k_max + 2,
        Method::Zastavnyi,
    )
}

/// The defining series summed directly, with the integral-comparison tail
/// bound `y^{-mu} T^{-e} / e`, `e = alpha mu - gamma - 1`, `T = N - 1 + a`.
pub fn zastavnyi_direct(params: &ZastavnyiParams, tol: f64) -> Result<EvalOutcome> {
    if !(tol > 0.0) {
        bail!(Domain, "tolerance must be positive, got {tol}");
    }
    let (a, gamma, alpha, mu, y) = (params.a, params.gamma, params.alpha, params.mu, params.y);
    let e = alpha * mu - gamma - 1.0;
    let turning = if gamma > 0.0 {
        (gamma / (y * (mu * alpha - gamma))).powf(1.0 / alpha)
    } else {
        0.0
    };
    let t_needed = ((-mu * y.ln() - (e * tol).ln()) / e).exp().max(turning).max(a);
    let n = (t_needed - a + 1.0).ceil().max(1.0);
    if n > MAX_DIRECT_TERMS {
        bail!(Tolerance, "direct sum needs more than {MAX_DIRECT_TERMS:e} terms for tol {tol:e}");
    }
    let n = n as u64;
    let t_last = (n - 1) as f64 + a;
    let tail = (-mu * y.ln() - e * t_last.ln()).exp() / e;
    let mut acc = NeumaierSum::new();
    let mut abs_sum = 0.0;
    for nu in 0..n {
        let v = params.summand(nu as f64 + a);
        acc.add(v);
        abs_sum += v.abs();
    }
    let rounding = (16.0 + (n as f64).log2()) * f64::EPSILON * abs_sum;
    EvalOutcome::new(
        Complex64::new(acc.value(), 0.0),
        tail + rounding,
        BoundKind::Certified,
        n as usize,
        Method::Direct,
    )
}

fn rational_to_f64(x: &num_rational::BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `2 (-1)^k C(k+mu, k) (2q)^{2k+1} (zeta(-2k-1) + sum_m e^{i m p pi/q} zeta(-2k-1, m/2q))`
/// for `k = 0..=k_max`, with the modulus-sum scale of each.
fn multisection_coeffs(mu: f64, angle: &RationalAngle, k_max: usize) -> Result<(Vec<Complex64>, Vec<f64>)> {
    if !(mu > 0.0 && mu.is_finite()) {
        bail!(Parameter, "mu must be positive and finite, got {mu}");
    }
    let two_q = 2 * angle.q() as u64;
    let roots = unit_roots(angle);
    let mut coeffs = Vec::with_capacity(k_max + 1);
    let mut scales = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let n = 2 * k as u32 + 1;
        let mut acc = ComplexSum::new();
        acc.add(Complex64::new(rational_to_f64(&riemann_zeta_neg_int(n)?), 0.0));
        for m in 1..two_q {
            let zeta = hurwitz_zeta_neg_int(n, Complex64::new(m as f64 / two_q as f64, 0.0))?;
            acc.add(roots[m as usize] * zeta);
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let factor = 2.0 * sign * binom_shifted(mu, k as u32) * (two_q as f64).powi(n as i32);
        coeffs.push(acc.value() * factor);
        scales.push(acc.abs_sum() * factor.abs());
    }
    Ok((coeffs, scales))
}

fn project(mu: f64, angle: &RationalAngle, k_max: usize, part: fn(Complex64) -> f64) -> Result<AsymExpansion> {
    let (coeffs, scales) = multisection_coeffs(mu, angle, k_max)?;
    Ok(AsymExpansion {
        mu,
        z: angle.z(),
        coeffs: coeffs.into_iter().map(|c| Complex64::new(part(c), 0.0)).collect(),
        scales,
        k_max,
    })
}

/// Cosine-part expansion coefficients at `x = p pi / q` from Hurwitz zeta
/// values at the rational shifts `m / 2q`.
pub fn cosine_multisection_expansion(mu: f64, angle: &RationalAngle, k_max: usize) -> Result<AsymExpansion> {
    project(mu, angle, k_max, |c| c.re)
}

/// Sine-part counterpart of [`cosine_multisection_expansion`].
pub fn sine_multisection_expansion(mu: f64, angle: &RationalAngle, k_max: usize) -> Result<AsymExpansion> {
    project(mu, angle, k_max, |c| c.im)
}

/// The cosine series at `x = p pi / q` as `4q r^{-2mu-2}` times a
/// `cos(m p pi / q)`-weighted sum of Zastavnyi expansions over the residue
/// classes `n = 2q nu + m`, with `y = (2q/r)^2`.
///
/// The `y^{-1}` terms of the classes cancel because the weights sum to zero;
/// this is checked before it is relied upon.
pub fn cosine_series_via_zastavnyi(mu: f64, r: f64, angle: &RationalAngle, k_max: usize) -> Result<EvalOutcome> {
    if !(r > 0.0 && r.is_finite()) {
        bail!(Parameter, "r must be positive and finite, got {r}");
    }
    let q = angle.q() as f64;
    let two_q = 2 * angle.q() as usize;
    let weights: Vec<f64> = unit_roots(angle).iter().map(|w| w.re).collect();
    let weight_sum: f64 = weights.iter().sum();
    if weight_sum.abs() > 1e-12 {
        bail!(Degenerate, "cosine weights sum to {weight_sum:e}, not 0");
    }
    let y = (2.0 * q / r).powi(2);
    let mut acc = NeumaierSum::new();
    let mut error = 0.0;
    let mut terms = 0;
    for (m, &w) in weights.iter().enumerate() {
        let a = if m == 0 { 1.0 } else { m as f64 / two_q as f64 };
        let segment = zastavnyi_expansion(&ZastavnyiParams::new(a, 1.0, 2.0, mu + 1.0, y, k_max)?)?;
        acc.add(w * segment.value.re);
        error += w.abs() * segment.error_bound;
        terms += segment.terms_used;
    }
    let prefactor = 4.0 * q * (-(2.0 * mu + 2.0) * r.ln()).exp();
    EvalOutcome::new(
        Complex64::new(prefactor * acc.value(), 0.0),
        prefactor * error,
        BoundKind::Heuristic,
        terms,
        Method::Zastavnyi,
    )
}
