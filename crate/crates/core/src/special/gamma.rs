//! Complex gamma function.
//!
//! Lanczos approximation with `g = 671/128` and 14 coefficients, evaluated in
//! logarithmic form so that large arguments do not overflow intermediate
//! powers. The left half-plane `Re(w) < 1/2` goes through the reflection
//! formula with an overflow-safe `log sin(pi w)`.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::bail;
use crate::{Error, Result};

const LANCZOS_G: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_092;
const LANCZOS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// Distance below which an argument counts as a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

fn check_pole(w: Complex64) -> Result<()> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        bail!(Domain, "gamma argument {w} is not finite");
    }
    let nearest = w.re.round();
    if nearest <= 0.0 && (w - Complex64::new(nearest, 0.0)).norm() < POLE_TOLERANCE {
        return Err(Error::Pole(alloc::format!(
            "gamma has a pole at {nearest}"
        )));
    }
    Ok(())
}

fn ln_gamma_right(w: Complex64) -> Complex64 {
    let tmp = w + LANCZOS_G;
    let tmp = (w + 0.5) * tmp.ln() - tmp;
    let mut ser = Complex64::new(LANCZOS_C0, 0.0);
    let mut y = w;
    for c in LANCZOS {
        y += 1.0;
        ser += c / y;
    }
    tmp + (ser * SQRT_TWO_PI / w).ln()
}

fn ln_gamma_right_real(x: f64) -> f64 {
    let tmp = x + LANCZOS_G;
    let tmp = (x + 0.5) * tmp.ln() - tmp;
    let mut ser = LANCZOS_C0;
    let mut y = x;
    for c in LANCZOS {
        y += 1.0;
        ser += c / y;
    }
    tmp + (SQRT_TWO_PI * ser / x).ln()
}

/// `log sin(pi w)` without overflowing for large `|Im w|`; the branch is
/// arbitrary, only `exp` of the result is meaningful.
fn ln_sin_pi(w: Complex64) -> Complex64 {
    let v = w * PI;
    let i = Complex64::i();
    if v.im.abs() < 20.0 {
        v.sin().ln()
    } else if v.im > 0.0 {
        // sin v = e^{-iv} (e^{2iv} - 1) / (2i)
        -i * v + (((i * v * 2.0).exp() - 1.0) / (i * 2.0)).ln()
    } else {
        // sin v = e^{iv} (1 - e^{-2iv}) / (2i)
        i * v + ((Complex64::new(1.0, 0.0) - (-i * v * 2.0).exp()) / (i * 2.0)).ln()
    }
}

/// Logarithm of the gamma function (not necessarily on the principal
/// branch of `log Gamma`; `exp` of it is `Gamma(w)`).
pub fn ln_gamma(w: Complex64) -> Result<Complex64> {
    check_pole(w)?;
    if w.re < 0.5 {
        let one = Complex64::new(1.0, 0.0);
        Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(w) - ln_gamma_right(one - w))
    } else {
        Ok(ln_gamma_right(w))
    }
}

/// `log |Gamma(x)|` for real `x` that is not a pole.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    check_pole(Complex64::new(x, 0.0))?;
    if x < 0.5 {
        Ok(PI.ln() - (PI * x).sin().abs().ln() - ln_gamma_right_real(1.0 - x))
    } else {
        Ok(ln_gamma_right_real(x))
    }
}

/// Real gamma function.
pub fn gamma_real(x: f64) -> Result<f64> {
    check_pole(Complex64::new(x, 0.0))?;
    let value = if x < 0.5 {
        PI / ((PI * x).sin() * ln_gamma_right_real(1.0 - x).exp())
    } else {
        ln_gamma_right_real(x).exp()
    };
    if !value.is_finite() {
        bail!(Overflow, "gamma({x}) overflows f64");
    }
    Ok(value)
}

/// Complex gamma function. Real arguments are routed through the real
/// evaluator so that the result has an exactly zero imaginary part.
pub fn complex_gamma(w: Complex64) -> Result<Complex64> {
    if w.im == 0.0 {
        return gamma_real(w.re).map(|g| Complex64::new(g, 0.0));
    }
    let value = ln_gamma(w)?.exp();
    if !(value.re.is_finite() && value.im.is_finite()) {
        bail!(Overflow, "gamma({w}) overflows f64");
    }
    Ok(value)
}
