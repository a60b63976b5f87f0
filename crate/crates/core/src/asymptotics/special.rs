use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};

pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

/// Below this the power series is used for general orders.
const SERIES_LIMIT: f64 = 30.0;

fn check_args(nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || !x.is_finite() {
        return Err(Error::Domain(format!("non-finite argument nu={nu}, x={x}")));
    }
    if x <= 0.0 {
        return Err(Error::Domain(format!("bessel_i needs x > 0, got {x}")));
    }
    Ok(())
}

/// Modified Bessel function of the first kind `I_nu(x)` for real `nu` and `x > 0`.
///
/// Overflows to `inf` beyond `x ~ 709`; see [`bessel_i_scaled`].
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_i_scaled(nu, x)? * x.exp())
}

/// `e^{-x} I_nu(x)`.
///
/// Orders `1/2, -1/2, -3/2, -5/2` use closed forms in `sinh`/`cosh`. Other
/// orders use the power series up to `x = 30` and the large-argument
/// expansion beyond, which is accurate for moderate `|nu|`.
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    check_args(nu, x)?;
    if let Some(v) = half_integer_closed_form(nu, x) {
        return Ok(v);
    }
    // I_{-n} = I_n for integer n, and the series has 1/Gamma poles there
    let nu = if nu < 0.0 && nu.fract() == 0.0 { -nu } else { nu };
    if x <= SERIES_LIMIT {
        Ok(power_series(nu, x) * (-x).exp())
    } else {
        Ok(large_argument(nu, x))
    }
}

// e^{-x} sinh x and e^{-x} cosh x without overflow
fn scaled_sinh_cosh(x: f64) -> (f64, f64) {
    let e = (-2.0 * x).exp();
    (0.5 * (1.0 - e), 0.5 * (1.0 + e))
}

fn half_integer_closed_form(nu: f64, x: f64) -> Option<f64> {
    let twice = 2.0 * nu;
    if twice.fract() != 0.0 {
        return None;
    }
    let pre = (2.0 / (PI * x)).sqrt();
    let (sh, ch) = scaled_sinh_cosh(x);
    let v = match twice as i64 {
        1 => sh,
        -1 => ch,
        -3 => sh - ch / x,
        -5 => ch - 3.0 * sh / x + 3.0 * ch / (x * x),
        _ => return None,
    };
    Some(pre * v)
}

// sum_k (x/2)^{2k+nu} / (k! Gamma(k+nu+1))
fn power_series(nu: f64, x: f64) -> f64 {
    let half = x / 2.0;
    let q = half * half;
    let mut term = half.powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    for k in 1..500 {
        let k = k as f64;
        term *= q / (k * (k + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

// e^{-x} I_nu(x) ~ 1/sqrt(2 pi x) sum_k (-1)^k a_k(nu) / x^k
fn large_argument(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        let j = (2 * k - 1) as f64;
        let next = -term * (mu - j * j) / (k as f64 * 8.0 * x);
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum / (2.0 * PI * x).sqrt()
}
