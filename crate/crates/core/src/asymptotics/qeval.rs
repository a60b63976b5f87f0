use crate::bigmath::ln_abs;
use crate::error::{Error, Result};
use crate::series::TruncSeries;

/// What is known about the coefficients past the truncation order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Envelope {
    /// The series is a polynomial: nothing beyond the truncation order.
    Exact,
    /// `|a_n| <= amplitude * (n+1)^power * e^{growth sqrt(n)}` for every `n`.
    Growth {
        amplitude: f64,
        power: f64,
        growth: f64,
    },
}

impl Envelope {
    pub fn growth(amplitude: f64, power: f64, growth: f64) -> Self {
        Envelope::Growth {
            amplitude,
            power,
            growth,
        }
    }

    fn ln_bound(&self, n: usize) -> Option<f64> {
        match *self {
            Envelope::Exact => None,
            Envelope::Growth {
                amplitude,
                power,
                growth,
            } => {
                let n = n as f64;
                Some(amplitude.ln() + power * (n + 1.0).ln() + growth * n.sqrt())
            }
        }
    }
}

/// A numerical value of a truncated series together with a rigorous bound on
/// the omitted tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QEval {
    pub value: f64,
    pub tail_bound: f64,
}

const TAIL_STEPS: usize = 50_000_000;

/// `sum_{n<=N} a_n e^{-nt}` and a bound on `sum_{n>N} |a_n| e^{-nt}` under `envelope`.
///
/// Each computed coefficient is checked against the envelope. The tail is
/// summed term by term until the log-bound becomes decreasing, after which it
/// is closed with a geometric series (the log-bound is concave in `n`).
pub fn eval_q_series(a: &TruncSeries, t: f64, envelope: &Envelope) -> Result<QEval> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("q = e^-t needs t > 0, got {t}")));
    }
    if let Envelope::Growth {
        amplitude,
        power,
        growth,
    } = *envelope
    {
        if !(amplitude > 0.0 && power >= 0.0 && growth >= 0.0) {
            return Err(Error::Domain("envelope parameters must be nonnegative".into()));
        }
    }
    let mut value = 0.0;
    for (n, c) in a.terms() {
        let ln_c = ln_abs(c);
        if let Some(bound) = envelope.ln_bound(n) {
            if ln_c > bound + 1e-9 * bound.abs().max(1.0) {
                return Err(Error::EnvelopeViolated { index: n });
            }
        }
        let term = (ln_c - n as f64 * t).exp();
        value += if c.sign() == num_bigint::Sign::Minus { -term } else { term };
    }
    let tail_bound = tail(a.trunc_order() + 1, t, envelope);
    if !tail_bound.is_finite() {
        return Err(Error::DivergentTail { t });
    }
    Ok(QEval { value, tail_bound })
}

fn tail(start: usize, t: f64, envelope: &Envelope) -> f64 {
    let f = |n: usize| envelope.ln_bound(n).map(|b| b - n as f64 * t);
    let Some(mut cur) = f(start) else {
        return 0.0;
    };
    let mut sum = 0.0;
    for n in start..start + TAIL_STEPS {
        let next = f(n + 1).expect("growth envelope");
        let step = next - cur;
        // once the terms shrink by a clear margin, the rest is dominated by a
        // geometric series with ratio e^step
        if step < -0.5 * t {
            return sum + cur.exp() / (1.0 - step.exp());
        }
        sum += cur.exp();
        cur = next;
    }
    f64::INFINITY
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_series() {
        let one = TruncSeries::one(0);
        let r = eval_q_series(&one, 0.7, &Envelope::Exact).unwrap();
        assert_eq!(r, QEval { value: 1.0, tail_bound: 0.0 });
    }

    #[test]
    fn geometric_series() {
        let t = 0.5;
        let order = 80;
        let g = TruncSeries::one(order).mul_geom_inverse(1).unwrap();
        let r = eval_q_series(&g, t, &Envelope::growth(1.0, 0.0, 0.0)).unwrap();
        let exact = 1.0 / (1.0 - (-t).exp());
        assert!((r.value - exact).abs() <= r.tail_bound + 1e-12);
        let true_tail = (-(order as f64 + 1.0) * t).exp() / (1.0 - (-t).exp());
        assert!(r.tail_bound >= true_tail);
        assert!(r.tail_bound < 2.0 * true_tail);
    }

    #[test]
    fn envelope_violation_detected() {
        let s = TruncSeries::from_i64s(&[1, 5, 1]);
        let err = eval_q_series(&s, 1.0, &Envelope::growth(1.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::EnvelopeViolated { index: 1 }));
    }

    #[test]
    fn domain_errors() {
        let s = TruncSeries::one(3);
        assert!(eval_q_series(&s, 0.0, &Envelope::Exact).is_err());
        assert!(eval_q_series(&s, f64::NAN, &Envelope::Exact).is_err());
    }
}
