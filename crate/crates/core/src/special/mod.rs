//! Foundation kernels shared by every other module: complex gamma,
//! Bernoulli numbers and polynomials, Pochhammer symbol, shifted binomial,
//! and the exact values of the Riemann zeta function at negative integers.

mod bernoulli;
mod gamma;

pub use bernoulli::{BernoulliTable, EM_MAX_ORDER, POLY_MAX_DEGREE};
pub(crate) use bernoulli::{eval_poly_f64, shared};
pub use gamma::{complex_gamma, gamma_real, ln_gamma, ln_gamma_real, POLE_TOLERANCE};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::bail;
use crate::Result;

/// Rising factorial `(s)_m = s (s+1) ... (s+m-1)` by direct product.
pub fn pochhammer(s: Complex64, m: u32) -> Complex64 {
    (0..m).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (s + j as f64))
}

/// `binom(k + mu, k) = prod_{j=1}^{k} (mu + j) / j`, which equals
/// `Gamma(k+mu+1) / (k! Gamma(mu+1))`.
pub fn binom_shifted(mu: f64, k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, j| acc * (mu + j as f64) / j as f64)
}

/// `zeta(-n)` as an exact rational, `(-1)^n B_{n+1} / (n+1)`.
pub fn riemann_zeta_neg_int(n: u32) -> Result<BigRational> {
    let idx = n as usize + 1;
    let table = shared();
    if idx > table.exact.n_max() {
        bail!(
            Range,
            "zeta(-{n}) needs B_{idx}, beyond the table limit {}",
            table.exact.n_max()
        );
    }
    let b = table.exact.number(idx).clone() / BigRational::from_integer(BigInt::from(idx));
    Ok(if n % 2 == 1 { -b } else { b })
}
