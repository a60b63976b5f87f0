//! Numerical checks of the small-`t` behaviour of `V_m`, `1/(q)_inf` and the
//! moment generating functions, evaluated on the real axis `q = e^{-t}`.

use std::f64::consts::PI;

use num_bigint::BigInt;

use super::qeval::{eval_q_series, Envelope, QEval};
use super::double_factorial_odd;
use crate::error::Result;
use crate::genfun::{max_rank, v_m_terms};
use crate::series::{partition_series, TruncSeries};

/// `pi sqrt(2/3)`: `p(n)`, `u(n)` and `u_{2k}(n) / n^{2k}` are all below `e^{GROWTH sqrt(n)}`.
pub const GROWTH: f64 = 2.565_099_660_323_728;

/// Truncation order after which `e^{GROWTH sqrt(n) - nt}` is negligible.
pub fn order_for(t: f64) -> usize {
    let by_growth = 2.5 * (GROWTH / t).powi(2);
    by_growth.max(60.0 / t).ceil() as usize
}

fn partition_envelope() -> Envelope {
    Envelope::growth(1.0, 0.0, GROWTH)
}

// the theta coefficients count representations by a quadratic form
fn theta_envelope() -> Envelope {
    Envelope::growth(2.0, 1.0, 0.0)
}

/// One evaluation point of the `V_m` expansion `1/4 - (m^2/8 - 1/8) t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VmPoint {
    pub t: f64,
    pub value: f64,
    pub predicted: f64,
    /// `|value - predicted|` plus the tail bound.
    pub error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VmCheck {
    pub m: usize,
    pub points: Vec<VmPoint>,
    /// `error / t^2` at the first (largest) `t`.
    pub fitted_c: f64,
}

impl VmCheck {
    /// Every later point satisfies `error <= fitted_c * t^2`.
    pub fn quadratic(&self) -> bool {
        self.points
            .iter()
            .skip(1)
            .all(|p| p.error <= self.fitted_c * p.t * p.t)
    }
}

pub fn v_m_value(m: usize, t: f64) -> Result<QEval> {
    let order = order_for(t);
    let v = TruncSeries::from_terms(order, v_m_terms(m, order));
    eval_q_series(&v, t, &theta_envelope())
}

pub fn v_m_expansion(m: usize, t: f64) -> f64 {
    let mf = m as f64;
    0.25 - (mf * mf / 8.0 - 0.125) * t
}

/// Evaluate `V_m` at each `t` (largest first) and fit the quadratic constant
/// at the first point.
pub fn v_m_check(m: usize, ts: &[f64]) -> Result<VmCheck> {
    let mut points = Vec::with_capacity(ts.len());
    for &t in ts {
        let QEval { value, tail_bound } = v_m_value(m, t)?;
        let predicted = v_m_expansion(m, t);
        points.push(VmPoint {
            t,
            value,
            predicted,
            error: (value - predicted).abs() + tail_bound,
        });
    }
    let fitted_c = points.first().map_or(0.0, |p| p.error / (p.t * p.t));
    Ok(VmCheck {
        m,
        points,
        fitted_c,
    })
}

/// A value normalised by its predicted leading behaviour.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioPoint {
    pub t: f64,
    pub ratio: f64,
    /// Tail bound relative to the predicted value.
    pub tail: f64,
}

/// `|ratio - 1|` strictly decreases along the points.
pub fn moves_toward_one(points: &[RatioPoint]) -> bool {
    points
        .windows(2)
        .all(|w| (w[1].ratio - 1.0).abs() < (w[0].ratio - 1.0).abs())
}

/// `sum_n u_{2k}(n) q^n = (delta_{k,0} V_0 + 2 sum_{m>=1} m^{2k} V_m) / (q)_inf`.
pub fn moment_generating_series(k: u32, order: usize) -> TruncSeries {
    let mut coeffs = vec![BigInt::from(0); order + 1];
    if k == 0 {
        for (e, c) in v_m_terms(0, order) {
            coeffs[e] += c;
        }
    }
    for m in 1..=max_rank(order) {
        let weight = BigInt::from(m).pow(2 * k) * 2;
        for (e, c) in v_m_terms(m, order) {
            coeffs[e] += &weight * c;
        }
    }
    TruncSeries::from_coeffs(coeffs).mul(&partition_series(order))
}

/// Ratio of the moment generating function at `e^{-t}` to
/// `(2k-1)!!/4 * t^{-k} e^{pi^2/(6t)}`.
pub fn moment_gf_ratio(k: u32, t: f64) -> Result<RatioPoint> {
    let order = order_for(t);
    let series = moment_generating_series(k, order);
    let envelope = Envelope::growth(1.0, 2.0 * k as f64, GROWTH);
    let QEval { value, tail_bound } = eval_q_series(&series, t, &envelope)?;
    let predicted =
        double_factorial_odd(k) / 4.0 * t.powi(-(k as i32)) * (PI * PI / (6.0 * t)).exp();
    Ok(RatioPoint {
        t,
        ratio: value / predicted,
        tail: tail_bound / predicted,
    })
}

/// Ratio of `1/(e^{-t}; e^{-t})_inf` to `sqrt(t/(2 pi)) e^{pi^2/(6t)}`.
pub fn eta_ratio(t: f64) -> Result<RatioPoint> {
    let p = partition_series(order_for(t));
    let QEval { value, tail_bound } = eval_q_series(&p, t, &partition_envelope())?;
    let predicted = (t / (2.0 * PI)).sqrt() * (PI * PI / (6.0 * t)).exp();
    Ok(RatioPoint {
        t,
        ratio: value / predicted,
        tail: tail_bound / predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn growth_constant() {
        assert!((GROWTH - PI * (2.0f64 / 3.0).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn partition_value_matches_product() {
        let t = 1.0;
        let p = partition_series(80);
        let r = eval_q_series(&p, t, &partition_envelope()).unwrap();
        let prod: f64 = (1..200).map(|k| 1.0 / (1.0 - (-(k as f64) * t).exp())).product();
        assert!((r.value - prod).abs() <= r.tail_bound + 1e-12);
        assert!(r.tail_bound < 1e-20);
    }

    #[test]
    fn v0_near_quarter() {
        let r = v_m_value(0, 0.05).unwrap();
        assert!((r.value - (0.25 + 0.05 / 8.0)).abs() < 0.01);
    }

    #[test]
    fn eta_ratio_is_exp_minus_t_over_24() {
        // the exact transformation gives ratio = e^{-t/24}(1 + O(e^{-4 pi^2/t}))
        for t in [0.3, 0.2, 0.1] {
            let r = eta_ratio(t).unwrap();
            assert!((r.ratio - (-t / 24.0).exp()).abs() < 1e-9, "t = {t}");
        }
    }

    #[test]
    fn moment_series_small_coefficients() {
        let s = moment_generating_series(1, 10);
        assert_eq!(s.coeff(6).unwrap(), &BigInt::from(12));
        let z = moment_generating_series(0, 30);
        assert_eq!(z, crate::genfun::unimodal_total_series(30));
    }
}
