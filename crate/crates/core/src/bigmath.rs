//! Conversions from exact integers to floating point that stay finite far
//! beyond the `f64` exponent range.

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};

/// Natural log of `|x|`. Returns `-inf` for zero.
pub fn ln_abs(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().abs().ln();
    }
    // keep the top 64 bits
    let shift = bits - 64;
    let top = (x.magnitude() >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `num / den` as a double, exact up to rounding even when both operands
/// exceed the `f64` range.
pub fn ratio(num: &BigInt, den: &BigInt) -> f64 {
    assert!(!den.is_zero(), "ratio with zero denominator");
    if num.is_zero() {
        return 0.0;
    }
    let sign = if (num.sign() == Sign::Minus) ^ (den.sign() == Sign::Minus) {
        -1.0
    } else {
        1.0
    };
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let n = scale_to_f64(num, nb);
    let d = scale_to_f64(den, db);
    sign * n / d * 2f64.powi((nb - db) as i32)
}

// |x| / 2^bits as a double in [0.5, 1)
fn scale_to_f64(x: &BigInt, bits: i64) -> f64 {
    let mag = x.magnitude();
    if bits <= 64 {
        mag.to_f64().unwrap() / 2f64.powi(bits as i32)
    } else {
        (mag >> (bits - 64) as u64).to_f64().unwrap() / 2f64.powi(64)
    }
}
