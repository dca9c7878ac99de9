//! Sine and cosine series `sum_{n>=2} a_n sin(nx)`, `sum_{n>=2} a_n cos(nx)`
//! with eventually decreasing coefficients, and their first-order behaviour
//! as `x -> 0`.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::bail;
use crate::special::{gamma_real, ln_gamma_real};
use crate::sum::{first_index_below, ComplexSum, NeumaierSum, PowerIter};
use crate::{BoundKind, EvalOutcome, Method, Result};

/// Coefficients are scanned for monotonicity up to this index.
pub const MONOTONE_SCAN_LIMIT: u64 = 1_000_000;

/// Hard cap on the number of series terms.
pub const TRIG_MAX_TERMS: u64 = 100_000_000;

const TRAILING_DECREASES: u64 = 50;

/// A coefficient sequence `a_n`, `n >= 2`, behaving like
/// `n^{-theta} (log n)^{log_power()}` for large `n`.
pub trait CoefficientSequence {
    fn coefficient(&self, n: u64) -> f64;

    fn theta(&self) -> f64;

    fn log_power(&self) -> f64;

    fn decays_to_zero(&self) -> bool {
        let theta = self.theta();
        theta > 0.0 || (theta == 0.0 && self.log_power() < 0.0)
    }
}

/// `a_n = n^alpha (log n)^gamma / (n^beta (log n)^delta + r^2)^{mu+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesFamilyParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub mu: f64,
    pub r: f64,
}

impl SeriesFamilyParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64, mu: f64, r: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta), ("mu", mu), ("r", r)] {
            if !v.is_finite() {
                bail!(Parameter, "{name} must be finite, got {v}");
            }
        }
        if mu < 0.0 || r < 0.0 {
            bail!(Parameter, "mu and r must be non-negative (mu = {mu}, r = {r})");
        }
        Ok(Self { alpha, beta, gamma, delta, mu, r })
    }
}

impl CoefficientSequence for SeriesFamilyParams {
    fn coefficient(&self, n: u64) -> f64 {
        let ln_n = (n as f64).ln();
        let lnln = ln_n.ln();
        let denom = (self.beta * ln_n + self.delta * lnln).exp() + self.r * self.r;
        (self.alpha * ln_n + self.gamma * lnln - (self.mu + 1.0) * denom.ln()).exp()
    }

    fn theta(&self) -> f64 {
        theta_exponent(self)
    }

    fn log_power(&self) -> f64 {
        self.gamma - self.delta * (self.mu + 1.0)
    }
}

/// `a_n = (log n!)^alpha / ((log n!)^beta + r^2)^{mu+1}`, asymptotically
/// `(n log n)^{-theta}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogFactorialFamily {
    pub alpha: f64,
    pub beta: f64,
    pub mu: f64,
    pub r: f64,
}

impl LogFactorialFamily {
    pub fn new(alpha: f64, beta: f64, mu: f64, r: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("mu", mu), ("r", r)] {
            if !v.is_finite() {
                bail!(Parameter, "{name} must be finite, got {v}");
            }
        }
        if mu < 0.0 || r < 0.0 {
            bail!(Parameter, "mu and r must be non-negative (mu = {mu}, r = {r})");
        }
        Ok(Self { alpha, beta, mu, r })
    }
}

impl CoefficientSequence for LogFactorialFamily {
    fn coefficient(&self, n: u64) -> f64 {
        let l = ln_gamma_real(n as f64 + 1.0).unwrap_or(f64::NAN);
        let ll = l.ln();
        let denom = (self.beta * ll).exp() + self.r * self.r;
        (self.alpha * ll - (self.mu + 1.0) * denom.ln()).exp()
    }

    fn theta(&self) -> f64 {
        self.beta * (self.mu + 1.0) - self.alpha
    }

    fn log_power(&self) -> f64 {
        -self.theta()
    }
}

/// `theta = beta (mu+1) - alpha`.
pub fn theta_exponent(fam: &SeriesFamilyParams) -> f64 {
    fam.beta * (fam.mu + 1.0) - fam.alpha
}

/// Smallest `n0 >= 2` with `f` strictly decreasing on `[n0, MONOTONE_SCAN_LIMIT]`.
fn decreasing_from(f: impl Fn(u64) -> f64) -> Result<u64> {
    let mut prev = f(2);
    let mut start = 2;
    for n in 3..=MONOTONE_SCAN_LIMIT {
        let v = f(n);
        if !v.is_finite() {
            bail!(Overflow, "coefficient at n = {n} is not finite");
        }
        if v >= prev {
            start = n;
        }
        prev = v;
    }
    if start + TRAILING_DECREASES > MONOTONE_SCAN_LIMIT {
        bail!(
            Parameter,
            "coefficients are not decreasing by n = {MONOTONE_SCAN_LIMIT} (last increase at {start})"
        );
    }
    Ok(start)
}

/// Index from which the coefficients decrease, found by scanning
/// `n <= MONOTONE_SCAN_LIMIT`; the asymptotic form guarantees the decrease
/// continues.
pub fn monotone_start<S: CoefficientSequence + ?Sized>(seq: &S) -> Result<u64> {
    if !seq.decays_to_zero() {
        bail!(
            Parameter,
            "coefficients do not decrease to zero (theta = {}, log power = {})",
            seq.theta(),
            seq.log_power()
        );
    }
    decreasing_from(|n| seq.coefficient(n))
}

#[derive(Clone, Copy, PartialEq)]
enum Part {
    Cos,
    Sin,
}

fn trig_sum<S: CoefficientSequence + ?Sized>(seq: &S, x: f64, tol: f64, part: Part) -> Result<EvalOutcome> {
    if !(x > 0.0 && x < PI) {
        bail!(Domain, "x must lie in (0, pi), got {x}");
    }
    if !(tol > 0.0) {
        bail!(Domain, "tolerance must be positive, got {tol}");
    }
    let n0 = monotone_start(seq)?;
    let dirichlet = (x / 2.0).sin();
    let n = match first_index_below(n0, TRIG_MAX_TERMS, tol * dirichlet, |n| seq.coefficient(n)) {
        Some(n) => n,
        None => bail!(
            Tolerance,
            "more than {TRIG_MAX_TERMS} terms needed at x = {x} for tol {tol:e}"
        ),
    };
    let tail = seq.coefficient(n) / dirichlet;
    let mut acc = NeumaierSum::new();
    let mut abs_sum = 0.0;
    let z = Complex64::new(x.cos(), x.sin());
    for (k, zk) in (1..=n).zip(PowerIter::new(z)) {
        if k < 2 {
            continue;
        }
        let w = match part {
            Part::Cos => zk.re,
            Part::Sin => zk.im,
        };
        let t = seq.coefficient(k) * w;
        acc.add(t);
        abs_sum += t.abs();
    }
    let rounding = (300.0 + (n as f64).log2()) * f64::EPSILON * abs_sum;
    EvalOutcome::new(
        Complex64::new(acc.value(), 0.0),
        tail + rounding,
        BoundKind::Certified,
        n as usize - 1,
        Method::SummationByParts,
    )
}

/// `sum_{n>=2} a_n sin(nx)` for `x` in `(0, pi)`, truncated at `N` past the
/// monotone start with the bound `a_N / sin(x/2)`.
pub fn general_sine_series(fam: &SeriesFamilyParams, x: f64, tol: f64) -> Result<EvalOutcome> {
    trig_sum(fam, x, tol, Part::Sin)
}

/// `sum_{n>=2} a_n cos(nx)`, same contract as [`general_sine_series`].
pub fn general_cosine_series(fam: &SeriesFamilyParams, x: f64, tol: f64) -> Result<EvalOutcome> {
    trig_sum(fam, x, tol, Part::Cos)
}

/// Leading behaviour of the sine series as `x -> 0` for `0 <= theta < 2`:
/// `pi / (2 Gamma(theta) sin(pi theta / 2)) x^{theta-1} (log 1/x)^e`, or
/// `(1/x) (log 1/x)^e` when `theta = 0`, with `e = gamma - delta (mu+1)`.
pub fn smallx_leading_sine(fam: &SeriesFamilyParams, x: f64) -> Result<f64> {
    let theta = theta_exponent(fam);
    let e = fam.log_power();
    if !(0.0..2.0).contains(&theta) {
        bail!(Range, "the small-x law needs 0 <= theta < 2, got theta = {theta}");
    }
    if theta == 0.0 && e >= 0.0 {
        bail!(Range, "theta = 0 needs gamma - delta (mu+1) < 0, got {e}");
    }
    if !(x > 0.0 && x < 1.0) {
        bail!(Domain, "x must lie in (0, 1), got {x}");
    }
    let log_factor = (e * (1.0 / x).ln().ln()).exp();
    if theta == 0.0 {
        return Ok(log_factor / x);
    }
    Ok(PI / (2.0 * gamma_real(theta)? * (PI * theta / 2.0).sin()) * x.powf(theta - 1.0) * log_factor)
}

/// Leading behaviour `x sum_{n>=2} n a_n` of the sine series as `x -> 0`
/// for `theta > 2`.
///
/// The moment sum is truncated at `N` past the point where `n^{p+1} a_n`
/// decreases, `p = theta/2`, which bounds the tail by `N^2 a_N / (p-1)`.
pub fn smallx_hartman_wintner<S: CoefficientSequence + ?Sized>(seq: &S, x: f64, tol: f64) -> Result<EvalOutcome> {
    let theta = seq.theta();
    if !(theta > 2.0) {
        bail!(Range, "the Hartman–Wintner regime needs theta > 2, got theta = {theta}");
    }
    if !(x >= 0.0 && x.is_finite()) {
        bail!(Domain, "x must be non-negative, got {x}");
    }
    if !(tol > 0.0) {
        bail!(Domain, "tolerance must be positive, got {tol}");
    }
    if x == 0.0 {
        return EvalOutcome::new(Complex64::new(0.0, 0.0), 0.0, BoundKind::Certified, 0, Method::HartmanWintner);
    }
    let p = theta / 2.0;
    let n1 = decreasing_from(|n| (p + 1.0) * (n as f64).ln() + seq.coefficient(n).ln())?;
    let tail_at = |n: u64| {
        let nf = n as f64;
        nf * nf * seq.coefficient(n) / (p - 1.0)
    };
    let n = match first_index_below(n1, TRIG_MAX_TERMS, tol / x, tail_at) {
        Some(n) => n,
        None => bail!(Tolerance, "moment sum needs more than {TRIG_MAX_TERMS} terms for tol {tol:e}"),
    };
    let mut acc = ComplexSum::new();
    for k in 2..=n {
        acc.add(Complex64::new(k as f64 * seq.coefficient(k), 0.0));
    }
    let moment = acc.value().re;
    let error = tail_at(n) + (16.0 + (n as f64).log2()) * f64::EPSILON * acc.abs_sum();
    EvalOutcome::new(
        Complex64::new(x * moment, 0.0),
        x * error,
        BoundKind::Certified,
        n as usize - 1,
        Method::HartmanWintner,
    )
}

/// The sine series with log-factorial coefficients, and for `theta > 2` its
/// Hartman–Wintner prediction.
pub fn log_factorial_sine_series(
    fam: &LogFactorialFamily,
    x: f64,
    tol: f64,
) -> Result<(EvalOutcome, Option<EvalOutcome>)> {
    let series = trig_sum(fam, x, tol, Part::Sin)?;
    let prediction = if fam.theta() > 2.0 {
        Some(smallx_hartman_wintner(fam, x, tol)?)
    } else {
        None
    };
    Ok((series, prediction))
}
