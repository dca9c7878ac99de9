//! Hurwitz zeta function `zeta(s, q) = sum_{n>=0} (n+q)^{-s}` continued to
//! `s != 1`, `Re(q) > 0`, by the Euler–Maclaurin identity
//!
//! ```text
//! zeta(s,q) = sum_{n<a} (n+q)^{-s} + (a+q)^{1-s}/(s-1) + (a+q)^{-s}/2
//!           + sum_{j=1}^{k} B_{2j}/(2j)! (s)_{2j-1} (a+q)^{-s-2j+1} + R_k
//! ```
//!
//! which holds for `Re(s) > -2k`. The remainder integral `R_k` is not
//! computed; it is estimated as twice the last correction term.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::bail;
use crate::special::{eval_poly_f64, shared, EM_MAX_ORDER, POLY_MAX_DEGREE};
use crate::sum::ComplexSum;
use crate::{BoundKind, EvalOutcome, Method, Result};

/// Minimum distance of `s` from the pole at 1.
pub const POLE_EXCLUSION: f64 = 1e-10;

/// Arguments of `zeta(s, q)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzQuery {
    s: Complex64,
    q: Complex64,
}

impl HurwitzQuery {
    pub fn new(s: Complex64, q: Complex64) -> Result<Self> {
        if !(s.re.is_finite() && s.im.is_finite() && q.re.is_finite() && q.im.is_finite()) {
            bail!(Domain, "non-finite Hurwitz zeta argument (s={s}, q={q})");
        }
        if q.re <= 0.0 {
            bail!(Domain, "Hurwitz zeta needs Re(q) > 0, got q={q}");
        }
        if (s - 1.0).norm() < POLE_EXCLUSION {
            bail!(Domain, "s={s} is within {POLE_EXCLUSION:e} of the pole at 1");
        }
        Ok(HurwitzQuery { s, q })
    }

    pub fn s(&self) -> Complex64 {
        self.s
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }
}

/// Head-sum length `a` and number of Bernoulli corrections `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerMaclaurinConfig {
    pub offset: usize,
    pub order: usize,
}

impl EulerMaclaurinConfig {
    /// The default configuration for a query:
    /// `a = max(ceil|Im s|, ceil|s|, 10) + ceil|q|`, `k = max(ceil((2 - Re s)/2), 8)`.
    pub fn for_query(query: &HurwitzQuery) -> Self {
        let s = query.s;
        let a = (s.im.abs().ceil() as usize)
            .max(s.norm().ceil() as usize)
            .max(10)
            + query.q.norm().ceil() as usize;
        let k = (((2.0 - s.re) / 2.0).ceil().max(0.0) as usize).max(8);
        EulerMaclaurinConfig { offset: a, order: k }
    }
}

/// One Euler–Maclaurin evaluation at fixed offset.
struct EmResult {
    value: Complex64,
    error: f64,
    terms: usize,
}

/// Evaluates the identity at offset `a`. With `fixed_order = Some(k)` exactly
/// `k` corrections are added; otherwise corrections are added until they
/// drop below rounding level or start to grow, but never fewer than needed
/// for `Re(s) > -2k`.
fn euler_maclaurin(s: Complex64, q: Complex64, a: usize, fixed_order: Option<usize>) -> EmResult {
    let eps = f64::EPSILON;
    let mut head = ComplexSum::new();
    for n in 0..a {
        head.add((q + n as f64).powc(-s));
    }

    let w = q + a as f64;
    let lw = w.ln();
    let w_neg_s = (-s * lw).exp();
    let integral = w * w_neg_s / (s - 1.0);
    let half = w_neg_s * 0.5;

    let mut total = ComplexSum::new();
    total.add(head.value());
    total.add(integral);
    total.add(half);
    let mut scale = head.abs_sum() + integral.norm() + half.norm();

    let coeffs = &shared().em_coeffs;
    let min_order = if s.re < 0.0 {
        ((-s.re / 2.0).floor() as usize + 1).max(1)
    } else {
        1
    };
    let max_order = fixed_order.unwrap_or(EM_MAX_ORDER).min(EM_MAX_ORDER);

    let inv_w2 = (w * w).inv();
    // (s)_{2j-1} (a+q)^{-s-2j+1}, starting at j = 1
    let mut factor = s * w_neg_s / w;
    let mut last = 0.0_f64;
    let mut used = 0;
    for (j, &coeff) in coeffs.iter().enumerate().take(max_order + 1).skip(1) {
        if j > 1 {
            let m = (2 * j - 3) as f64;
            factor = factor * (s + m) * (s + m + 1.0) * inv_w2;
        }
        let term = factor * coeff;
        let mag = term.norm();
        if fixed_order.is_none() && j > min_order && used > 0 && mag > last {
            break;
        }
        total.add(term);
        scale += mag;
        last = mag;
        used = j;
        if fixed_order.is_none() && j >= min_order && mag <= eps * total.value().norm() {
            break;
        }
    }

    let value = total.value();
    EmResult {
        value,
        error: 2.0 * last + 8.0 * eps * scale,
        terms: a + used,
    }
}

fn candidate_offsets(default_offset: usize) -> impl Iterator<Item = usize> {
    const LADDER: [usize; 16] = [1, 2, 3, 4, 6, 8, 11, 16, 23, 32, 45, 64, 90, 128, 181, 256];
    let cap = (2 * default_offset).max(16);
    LADDER
        .into_iter()
        .filter(move |&a| a <= cap)
        .chain(core::iter::once(default_offset))
}

/// `zeta(s, q)` by Euler–Maclaurin summation.
///
/// With `cfg = None` the head-sum length is picked from a ladder of offsets
/// (always including [`EulerMaclaurinConfig::for_query`]) to minimise the
/// estimated truncation plus rounding error; for `Re(s) < 1` a short head
/// sum avoids cancellation between the head and the integral term.
pub fn hurwitz_zeta(query: &HurwitzQuery, cfg: Option<EulerMaclaurinConfig>) -> Result<EvalOutcome> {
    let (s, q) = (query.s, query.q);
    let result = match cfg {
        Some(cfg) => {
            if cfg.offset < 1 {
                bail!(Order, "Euler–Maclaurin offset must be at least 1");
            }
            if cfg.order > EM_MAX_ORDER {
                bail!(Order, "order {} exceeds the table limit {EM_MAX_ORDER}", cfg.order);
            }
            if s.re <= -2.0 * cfg.order as f64 {
                bail!(
                    Order,
                    "Re(s) = {} is outside the validity half-plane Re(s) > -{}",
                    s.re,
                    2 * cfg.order
                );
            }
            euler_maclaurin(s, q, cfg.offset, Some(cfg.order))
        }
        None => {
            if s.re <= -2.0 * EM_MAX_ORDER as f64 {
                bail!(Order, "Re(s) = {} is below the supported range", s.re);
            }
            let default = EulerMaclaurinConfig::for_query(query);
            let mut best: Option<EmResult> = None;
            for a in candidate_offsets(default.offset) {
                let r = euler_maclaurin(s, q, a, None);
                if best.as_ref().is_none_or(|b| r.error < b.error) {
                    best = Some(r);
                }
            }
            best.expect("ladder is never empty")
        }
    };
    EvalOutcome::new(
        result.value,
        result.error,
        BoundKind::Heuristic,
        result.terms,
        Method::EulerMaclaurin,
    )
}

/// Riemann zeta function, `zeta(s, 1)`.
pub fn riemann_zeta(s: Complex64) -> Result<EvalOutcome> {
    hurwitz_zeta(&HurwitzQuery::new(s, Complex64::new(1.0, 0.0))?, None)
}

/// `1 - e^x`, accurate for small `|x|`.
fn one_minus_exp(x: Complex64) -> Complex64 {
    if x.norm() < 1e-3 {
        // -(x + x^2/2 + x^3/6 + x^4/24 + x^5/120)
        -x * (((((x / 5.0 + 1.0) * x / 4.0 + 1.0) * x / 3.0 + 1.0) * x / 2.0) + 1.0)
    } else {
        Complex64::new(1.0, 0.0) - x.exp()
    }
}

/// Dirichlet eta function `(1 - 2^{1-s}) zeta(s)`, with `eta(1) = ln 2`.
pub fn dirichlet_eta(s: Complex64) -> Result<EvalOutcome> {
    if (s - 1.0).norm() < POLE_EXCLUSION {
        return EvalOutcome::new(
            Complex64::new(core::f64::consts::LN_2, 0.0),
            f64::EPSILON,
            BoundKind::Heuristic,
            0,
            Method::EulerMaclaurin,
        );
    }
    let zeta = riemann_zeta(s)?;
    let factor = one_minus_exp((Complex64::new(1.0, 0.0) - s) * core::f64::consts::LN_2);
    EvalOutcome::new(
        factor * zeta.value,
        factor.norm() * zeta.error_bound,
        zeta.bound_kind,
        zeta.terms_used,
        zeta.method,
    )
}

/// `zeta(-n, q) = -B_{n+1}(q) / (n+1)` in floating point.
pub fn hurwitz_zeta_neg_int(n: u32, q: Complex64) -> Result<Complex64> {
    let m = n as usize + 1;
    if m > POLY_MAX_DEGREE {
        bail!(Range, "zeta(-{n}, q) needs B_{m}(q), beyond degree {POLY_MAX_DEGREE}");
    }
    let (b, _) = eval_poly_f64(m, q);
    Ok(-b / m as f64)
}

/// `zeta(-n, q)` for rational `q`, exactly.
pub fn hurwitz_zeta_neg_int_exact(n: u32, q: &BigRational) -> Result<BigRational> {
    let m = n as usize + 1;
    if m > POLY_MAX_DEGREE {
        bail!(Range, "zeta(-{n}, q) needs B_{m}(q), beyond degree {POLY_MAX_DEGREE}");
    }
    let b = shared().exact.eval_poly_exact(m, q);
    Ok(-b / BigRational::from_integer(BigInt::from(m)))
}
