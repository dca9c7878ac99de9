//! Compensated (Neumaier) accumulators.
//!
//! The running compensation captures the low-order bits lost in every
//! addition, so the error of a long sum stays at a few ulps of the result
//! plus `eps^2` times the sum of magnitudes.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for NeumaierSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for v in iter {
            self.add(v);
        }
    }
}

/// Componentwise compensated sum of complex terms, also tracking the sum of
/// moduli for rounding estimates.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
    abs: f64,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
        self.abs += value.norm();
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    /// Sum of the moduli of all added terms.
    #[inline]
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}

impl Extend<Complex64> for ComplexSum {
    fn extend<I: IntoIterator<Item = Complex64>>(&mut self, iter: I) {
        for v in iter {
            self.add(v);
        }
    }
}

/// Successive powers `z, z^2, z^3, ...` by repeated multiplication,
/// re-anchored every 256 steps with binary exponentiation so the relative
/// error stays near `(256 + log2 n) eps` instead of growing with `n`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PowerIter {
    z: Complex64,
    current: Complex64,
    n: u64,
}

impl PowerIter {
    pub(crate) fn new(z: Complex64) -> Self {
        PowerIter {
            z,
            current: Complex64::new(1.0, 0.0),
            n: 0,
        }
    }
}

impl Iterator for PowerIter {
    type Item = Complex64;

    #[inline]
    fn next(&mut self) -> Option<Complex64> {
        self.n += 1;
        self.current = if self.n.is_multiple_of(256) {
            pow_u64(self.z, self.n)
        } else {
            self.current * self.z
        };
        Some(self.current)
    }
}

pub(crate) fn pow_u64(z: Complex64, mut n: u64) -> Complex64 {
    let mut base = z;
    let mut acc = Complex64::new(1.0, 0.0);
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        base = base * base;
        n >>= 1;
    }
    acc
}

/// Smallest `n >= start` (up to doubling-and-bisection resolution) with
/// `bound(n) <= tol`, for bounds that decrease once they start decreasing.
/// Returns `None` when no such `n <= cap` is found.
pub(crate) fn first_index_below<F>(start: u64, cap: u64, tol: f64, bound: F) -> Option<u64>
where
    F: Fn(u64) -> f64,
{
    if bound(start) <= tol {
        return Some(start);
    }
    let mut lo = start;
    let mut step = 1u64;
    let hi = loop {
        let candidate = start.saturating_add(step);
        if candidate > cap {
            if bound(cap) <= tol {
                break cap;
            }
            return None;
        }
        if bound(candidate) <= tol {
            break candidate;
        }
        lo = candidate;
        step = step.saturating_mul(2);
    };
    let mut hi = hi;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if bound(mid) <= tol {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}
