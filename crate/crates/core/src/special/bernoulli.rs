//! Exact Bernoulli numbers and polynomials.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::race::OnceBox;

/// Bernoulli numbers `B_0..=B_{n_max}` (with `B_1 = -1/2`) and the
/// coefficient rows of the Bernoulli polynomials `B_m(x)` for `m <= m_max`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    numbers: Vec<BigRational>,
    /// `rows[m][j]` is the coefficient of `x^j` in `B_m(x)`.
    rows: Vec<Vec<BigRational>>,
}

fn binomial_rows(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if k == 0 || k == n {
                row.push(BigInt::one());
            } else {
                let prev = &rows[n - 1];
                row.push(&prev[k - 1] + &prev[k]);
            }
        }
        rows.push(row);
    }
    rows
}

impl BernoulliTable {
    pub fn new(n_max: usize, m_max: usize) -> Self {
        let top = n_max.max(m_max);
        let binom = binomial_rows(top + 1);

        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut numbers: Vec<BigRational> = Vec::with_capacity(top + 1);
        numbers.push(BigRational::one());
        for m in 1..=top {
            if m > 1 && m % 2 == 1 {
                numbers.push(BigRational::zero());
                continue;
            }
            let mut acc = BigRational::zero();
            for (j, b) in numbers.iter().enumerate() {
                if !b.is_zero() {
                    acc += BigRational::from_integer(binom[m + 1][j].clone()) * b;
                }
            }
            let denom = BigRational::from_integer(BigInt::from(m + 1));
            numbers.push(-acc / denom);
        }

        let rows = (0..=m_max)
            .map(|m| {
                (0..=m)
                    .map(|j| BigRational::from_integer(binom[m][j].clone()) * &numbers[m - j])
                    .collect()
            })
            .collect();

        numbers.truncate(n_max + 1);
        BernoulliTable { numbers, rows }
    }

    pub fn n_max(&self) -> usize {
        self.numbers.len() - 1
    }

    pub fn m_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn number(&self, m: usize) -> &BigRational {
        &self.numbers[m]
    }

    pub fn numbers(&self) -> &[BigRational] {
        &self.numbers
    }

    /// Coefficients of `B_m(x)`, lowest degree first (`m + 1` entries).
    pub fn poly_row(&self, m: usize) -> &[BigRational] {
        &self.rows[m]
    }

    /// `B_m(x)` in exact arithmetic.
    pub fn eval_poly_exact(&self, m: usize, x: &BigRational) -> BigRational {
        self.rows[m]
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

/// Tables shared by the floating-point kernels, built once on first use.
pub(crate) struct SharedTables {
    pub exact: BernoulliTable,
    /// `B_{2j} / (2j)!` for `j = 0..=EM_MAX_ORDER`.
    pub em_coeffs: Vec<f64>,
    /// Bernoulli polynomial rows converted to `f64`.
    pub rows_f64: Vec<Vec<f64>>,
}

/// Highest Euler–Maclaurin correction order available from the shared table.
pub const EM_MAX_ORDER: usize = 64;
/// Highest Bernoulli polynomial degree available from the shared table.
pub const POLY_MAX_DEGREE: usize = 130;

static SHARED: OnceBox<SharedTables> = OnceBox::new();

pub(crate) fn shared() -> &'static SharedTables {
    SHARED.get_or_init(|| {
        let exact = BernoulliTable::new(POLY_MAX_DEGREE.max(2 * EM_MAX_ORDER), POLY_MAX_DEGREE);
        let mut factorial = BigInt::one();
        let mut em_coeffs = Vec::with_capacity(EM_MAX_ORDER + 1);
        for j in 0..=EM_MAX_ORDER {
            if j > 0 {
                factorial *= BigInt::from(2 * j - 1) * BigInt::from(2 * j);
            }
            let ratio = exact.number(2 * j) / BigRational::from_integer(factorial.clone());
            em_coeffs.push(ratio.to_f64().unwrap_or(0.0));
        }
        let rows_f64 = (0..=POLY_MAX_DEGREE)
            .map(|m| {
                exact
                    .poly_row(m)
                    .iter()
                    .map(|c| c.to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect();
        alloc::boxed::Box::new(SharedTables {
            exact,
            em_coeffs,
            rows_f64,
        })
    })
}

/// `B_m(z)` in floating point by Horner's rule, together with the sum of the
/// moduli of the monomials (a scale for rounding estimates).
pub(crate) fn eval_poly_f64(m: usize, z: Complex64) -> (Complex64, f64) {
    let row = &shared().rows_f64[m];
    let mut value = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let az = z.norm();
    for c in row.iter().rev() {
        value = value * z + *c;
        scale = scale * az + num_traits::Float::abs(*c);
    }
    (value, scale)
}
