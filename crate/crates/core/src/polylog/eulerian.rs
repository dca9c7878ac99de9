//! Closed form of the polylogarithm at non-positive integer order,
//!
//! ```text
//! Li_{-n}(z) = sum_{k=0}^{n-1} A(n,k) z^{k+1} / (1-z)^{n+1},   Li_0(z) = z/(1-z),
//! ```
//!
//! with `A(n,k)` the Eulerian numbers. This is a rational function of `z`,
//! so it continues `Li_{-n}` to every `z != 1`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::race::OnceBox;

use crate::error::bail;
use crate::Result;

/// Rows `A(n, 0..n)` of the Eulerian triangle (row 0 is `[1]`).
#[derive(Debug, Clone)]
pub struct EulerianTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTriangle {
    /// Rows `0..=n_max`, from `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`.
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(alloc::vec![BigInt::one()]);
        if n_max >= 1 {
            rows.push(alloc::vec![BigInt::one()]);
        }
        for n in 2..=n_max {
            let prev = &rows[n - 1];
            let row = (0..n)
                .map(|k| {
                    let mut a = BigInt::zero();
                    if k < n - 1 {
                        a += &prev[k] * BigInt::from(k + 1);
                    }
                    if k >= 1 {
                        a += &prev[k - 1] * BigInt::from(n - k);
                    }
                    a
                })
                .collect();
            rows.push(row);
        }
        EulerianTriangle { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

/// Largest order served by the shared triangle.
pub const NEG_INT_MAX_ORDER: u32 = 127;

struct Shared {
    exact: EulerianTriangle,
    rows_f64: Vec<Vec<f64>>,
}

static SHARED: OnceBox<Shared> = OnceBox::new();

fn shared() -> &'static Shared {
    SHARED.get_or_init(|| {
        let exact = EulerianTriangle::new(NEG_INT_MAX_ORDER as usize);
        let rows_f64 = exact
            .rows
            .iter()
            .map(|row| row.iter().map(|a| a.to_f64().unwrap_or(f64::INFINITY)).collect())
            .collect();
        alloc::boxed::Box::new(Shared { exact, rows_f64 })
    })
}

/// Minimum distance of `z` from the pole at 1.
pub const SINGULAR_EXCLUSION: f64 = 1e-12;

/// `Li_{-n}(z)` together with the modulus-sum scale of the numerator, for
/// rounding estimates: `(value, sum_k A(n,k) |z|^{k+1} / |1-z|^{n+1})`.
pub(crate) fn polylog_neg_int_scaled(n: u32, z: Complex64) -> Result<(Complex64, f64)> {
    let one_minus = Complex64::new(1.0, 0.0) - z;
    if one_minus.norm() < SINGULAR_EXCLUSION {
        bail!(Singular, "Li_{{-{n}}}(z) has a pole at z = 1 (z = {z})");
    }
    if n > NEG_INT_MAX_ORDER {
        bail!(Range, "Li_{{-{n}}} exceeds the supported order {NEG_INT_MAX_ORDER}");
    }
    if n == 0 {
        let v = z / one_minus;
        return Ok((v, v.norm()));
    }
    let row = &shared().rows_f64[n as usize];
    let az = z.norm();
    let mut numer = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for a in row.iter().rev() {
        numer = numer * z + *a;
        scale = scale * az + *a;
    }
    let denom = one_minus.powi(n as i32 + 1);
    let dnorm = denom.norm();
    let value = numer * z / denom;
    Ok((value, scale * az / dnorm))
}

/// `Li_{-n}(z)` for any `z != 1`.
pub fn polylog_neg_int(n: u32, z: Complex64) -> Result<Complex64> {
    polylog_neg_int_scaled(n, z).map(|(v, _)| v)
}

/// `Li_{-n}(z)` for rational `z != 1`, exactly.
pub fn polylog_neg_int_exact(n: u32, z: &BigRational) -> Result<BigRational> {
    let one = BigRational::one();
    if *z == one {
        bail!(Singular, "Li_{{-{n}}}(z) has a pole at z = 1");
    }
    if n > NEG_INT_MAX_ORDER {
        bail!(Range, "Li_{{-{n}}} exceeds the supported order {NEG_INT_MAX_ORDER}");
    }
    let one_minus = &one - z;
    if n == 0 {
        return Ok(z / one_minus);
    }
    let numer = shared().exact.rows[n as usize]
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, a| acc * z + BigRational::from_integer(a.clone()));
    let mut denom = one.clone();
    for _ in 0..=n {
        denom *= &one_minus;
    }
    Ok(numer * z / denom)
}
