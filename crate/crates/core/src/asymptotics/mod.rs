//! Main terms and first corrections of the asymptotic formulas for `p(n)`,
//! `u(n)`, `u(m, n)` and the rank moments.
//!
//! The exponential factor `e^{pi sqrt(2n/3)}` overflows a double near
//! `n = 5e5`, so every estimate keeps its main term as a natural log and
//! comparisons with exact counts are made as ratios in log space.

pub mod analytic;
mod qeval;
mod special;

use std::f64::consts::PI;

use num_bigint::BigInt;

use crate::bigmath::ln_abs;

pub use qeval::{eval_q_series, Envelope, QEval};
pub use special::{bessel_i, bessel_i_scaled, gamma, normal_cdf};

/// An asymptotic value `main * (terms[0] + terms[1] + ...)`.
///
/// `terms` are expressed relative to the main term, so `terms[0] == 1` and
/// `terms.len() == order + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymEstimate {
    pub ln_main: f64,
    pub order: usize,
    pub terms: Vec<f64>,
}

impl AsymEstimate {
    fn new(ln_main: f64, terms: Vec<f64>) -> Self {
        AsymEstimate {
            ln_main,
            order: terms.len() - 1,
            terms,
        }
    }

    pub fn main(&self) -> f64 {
        self.ln_main.exp()
    }

    /// `NaN` when the corrections outweigh the main term, as happens for the
    /// first-order `u(m, n)` formula with `m^2` comparable to `sqrt(n)`.
    pub fn ln_value(&self) -> f64 {
        self.ln_main + self.terms.iter().sum::<f64>().ln()
    }

    /// May be `inf` once the main term leaves the `f64` range; use
    /// [`AsymEstimate::ln_value`] or [`AsymEstimate::ratio`] instead.
    pub fn value(&self) -> f64 {
        self.main() * self.terms.iter().sum::<f64>()
    }

    /// `exact / estimate`, computed in log space.
    pub fn ratio(&self, exact: &BigInt) -> f64 {
        (ln_abs(exact) - self.ln_value()).exp()
    }
}

/// `x = pi sqrt(2n/3)`, the common exponent.
pub fn hr_exponent(n: f64) -> f64 {
    PI * (2.0 * n / 3.0).sqrt()
}

pub fn ln_hr_partition_main(n: u64) -> f64 {
    let n = n as f64;
    hr_exponent(n) - (4.0 * 3f64.sqrt() * n).ln()
}

/// `e^{pi sqrt(2n/3)} / (4 sqrt(3) n)`.
pub fn hr_partition_main(n: u64) -> f64 {
    ln_hr_partition_main(n).exp()
}

/// First correction in the expansion of `u(n)`:
/// `-(2 pi^2 + 9) / (2^6 sqrt(24) pi)`.
pub fn beta_1() -> f64 {
    -(2.0 * PI * PI + 9.0) / (64.0 * 24f64.sqrt() * PI)
}

/// The `m`-independent part of the first correction to `u(m, n)`:
/// `sqrt(3)/(sqrt(2) pi) - 11 pi/(24 sqrt(6))`.
pub fn nu() -> f64 {
    3f64.sqrt() / (2f64.sqrt() * PI) - 11.0 * PI / (24.0 * 6f64.sqrt())
}

fn check_order(order: usize) {
    assert!(order <= 1, "only the first correction is known");
}

/// `u(n) ~ e^x / (8 * 6^{1/4} n^{3/4}) (1 + beta_1 / sqrt(n))`.
pub fn u_total_asymptotic(n: u64, order: usize) -> AsymEstimate {
    check_order(order);
    let nf = n as f64;
    let ln_main = hr_exponent(nf) - (8.0 * 6f64.powf(0.25) * nf.powf(0.75)).ln();
    let mut terms = vec![1.0];
    if order == 1 {
        terms.push(beta_1() / nf.sqrt());
    }
    AsymEstimate::new(ln_main, terms)
}

/// `u(m, n) ~ e^x / (16 sqrt(3) n) (1 - (pi m^2 / (2 sqrt 6) + nu) / sqrt(n))`.
pub fn u_mn_asymptotic(m: u64, n: u64, order: usize) -> AsymEstimate {
    check_order(order);
    let nf = n as f64;
    let ln_main = hr_exponent(nf) - (16.0 * 3f64.sqrt() * nf).ln();
    let mut terms = vec![1.0];
    if order == 1 {
        let mf = m as f64;
        terms.push(-(PI * mf * mf / (2.0 * 6f64.sqrt()) + nu()) / nf.sqrt());
    }
    AsymEstimate::new(ln_main, terms)
}

/// Natural log of the two-Bessel approximant
/// `c1 n^{-3/4} I_{-3/2}(x) - c2 (m^2/4 - 11/48) n^{-5/4} I_{-5/2}(x)` to `u(m, n)`,
/// from which [`u_mn_asymptotic`] is obtained by expanding the Bessel functions.
pub fn ln_u_mn_bessel(m: u64, n: u64) -> f64 {
    let nf = n as f64;
    let x = hr_exponent(nf);
    let c1 = PI / (8.0 * 2f64.powf(0.25) * 3f64.powf(0.75) * nf.powf(0.75));
    let mf = m as f64;
    let c2 = PI * PI * (mf * mf / 4.0 - 11.0 / 48.0)
        / (12.0 * 2f64.powf(0.75) * 3f64.powf(0.25) * nf.powf(1.25));
    let i32_ = bessel_i_scaled(-1.5, x).expect("x > 0");
    let i52 = bessel_i_scaled(-2.5, x).expect("x > 0");
    x + (c1 * i32_ - c2 * i52).ln()
}

/// Main terms for the first difference and the log-concavity gap, in log form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Structural {
    /// `ln[pi (2m+1) e^x / (96 sqrt(2) n^{3/2})]`, approximating `u(m,n) - u(m+1,n)`.
    pub ln_diff: f64,
    /// `ln[pi e^{2x} / (768 sqrt(6) n^{5/2})]`, approximating `u(m,n)^2 - u(m-1,n) u(m+1,n)`.
    pub ln_logconc: f64,
}

impl Structural {
    pub fn diff(&self) -> f64 {
        self.ln_diff.exp()
    }
    pub fn logconc(&self) -> f64 {
        self.ln_logconc.exp()
    }
}

pub fn structural_asymptotics(m: u64, n: u64) -> Structural {
    let nf = n as f64;
    let x = hr_exponent(nf);
    let ln_diff =
        x + (PI * (2 * m + 1) as f64).ln() - (96.0 * 2f64.sqrt()).ln() - 1.5 * nf.ln();
    let ln_logconc = 2.0 * x + PI.ln() - (768.0 * 6f64.sqrt()).ln() - 2.5 * nf.ln();
    Structural {
        ln_diff,
        ln_logconc,
    }
}

/// `(2k-1)!! = 1 * 3 * ... * (2k-1)`, with `(-1)!! = 1`.
pub fn double_factorial_odd(k: u32) -> f64 {
    (1..=k).map(|j| (2 * j - 1) as f64).product()
}

/// `E|Z|^r` for a standard normal `Z`: `2^{r/2} Gamma((r+1)/2) / sqrt(pi)`.
pub fn normal_abs_moment(r: u32) -> f64 {
    2f64.powf(r as f64 / 2.0) * gamma((r as f64 + 1.0) / 2.0) / PI.sqrt()
}

/// Variance scale of the rank: `6n / pi^2`.
pub fn rank_scale(n: u64) -> f64 {
    6.0 * n as f64 / (PI * PI)
}

/// `u_{2k}(n) ~ e^x / (8 * 6^{1/4} n^{3/4}) (2k-1)!! (6n/pi^2)^{k/2}` (main term only).
pub fn moment_asymptotic(k: u32, n: u64) -> AsymEstimate {
    let base = u_total_asymptotic(n, 0);
    let ln_main = base.ln_main
        + double_factorial_odd(k).ln()
        + (k as f64 / 2.0) * rank_scale(n).ln();
    AsymEstimate::new(ln_main, vec![1.0])
}

/// `u_r^+(n) ~ u(n) (6n/pi^2)^{r/4} 2^{r/2} Gamma((r+1)/2) / sqrt(pi)`, with
/// `u(n)` taken to first order.
pub fn abs_moment_asymptotic(r: u32, n: u64) -> AsymEstimate {
    let base = u_total_asymptotic(n, 1);
    let ln_main =
        base.ln_main + normal_abs_moment(r).ln() + (r as f64 / 4.0) * rank_scale(n).ln();
    AsymEstimate::new(ln_main, base.terms)
}
