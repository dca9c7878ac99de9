//! Command-line value parsers.

use num_complex::Complex64;

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i` and `-i` (exponents allowed).
pub fn complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let bad = || format!("cannot parse complex literal {s:?}");
    let number = |p: &str| p.parse::<f64>().map_err(|_| bad());
    let z = match t.strip_suffix('i') {
        Some(body) => imaginary_literal(body, &number)?,
        None => Complex64::new(number(&t)?, 0.0),
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

fn imaginary_literal(body: &str, number: &dyn Fn(&str) -> Result<f64, String>) -> Result<Complex64, String> {
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let imag = |p: &str| match p {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => number(p),
    };
    Ok(match split {
        Some(j) => Complex64::new(number(&body[..j])?, imag(&body[j..])?),
        None => Complex64::new(0.0, imag(body)?),
    })
}

/// Finite float.
pub fn finite(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("expected a finite number, got {s:?}")),
    }
}
