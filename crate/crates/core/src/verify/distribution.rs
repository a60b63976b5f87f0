use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::Zero;

use super::report::CheckReport;
use crate::asymptotics::normal_cdf;
use crate::bigmath::ratio;
use crate::genfun::RowEvaluator;
use crate::oracles::StatTable;

/// The rank distribution at size `n`, rescaled by `(6n/pi^2)^{1/4}`.
///
/// Probabilities are kept as exact counts over `total` and only converted to
/// `f64` on output.
#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalDist {
    pub n: usize,
    pub scale: f64,
    /// `(m, u(m, n))` sorted by `m`, zero counts omitted.
    pub atoms: Vec<(i64, BigInt)>,
    pub total: BigInt,
}

/// One output row: an atom, its probability and the two CDFs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistRow {
    pub m: i64,
    pub x: f64,
    pub probability: f64,
    /// `F_n(x)`, including the atom.
    pub cdf: f64,
    pub normal: f64,
}

impl EmpiricalDist {
    pub fn from_row(row: &StatTable) -> Self {
        let atoms: Vec<(i64, BigInt)> = row
            .counts
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        let total = row.total();
        EmpiricalDist {
            n: row.n,
            scale: (6.0 * row.n as f64 / (PI * PI)).powf(0.25),
            atoms,
            total,
        }
    }

    pub fn x(&self, m: i64) -> f64 {
        m as f64 / self.scale
    }

    /// The atom masses add up to the total exactly.
    pub fn mass_is_one(&self) -> bool {
        self.atoms.iter().map(|(_, c)| c).sum::<BigInt>() == self.total
    }

    pub fn is_symmetric(&self) -> bool {
        self.atoms
            .iter()
            .zip(self.atoms.iter().rev())
            .all(|((m, c), (m2, c2))| *m == -m2 && c == c2)
    }

    /// Rows in increasing `x`; the last `cdf` is exactly 1.
    pub fn rows(&self) -> Vec<DistRow> {
        let mut cum = BigInt::zero();
        self.atoms
            .iter()
            .map(|(m, c)| {
                cum += c;
                let x = self.x(*m);
                DistRow {
                    m: *m,
                    x,
                    probability: ratio(c, &self.total),
                    cdf: ratio(&cum, &self.total),
                    normal: normal_cdf(x),
                }
            })
            .collect()
    }

    /// `sup_x |F_n(x) - Phi(x)|`, attained at one of the one-sided limits at an atom.
    pub fn kolmogorov_distance(&self) -> f64 {
        let mut cum = BigInt::zero();
        let mut d: f64 = 0.0;
        for (m, c) in &self.atoms {
            let phi = normal_cdf(self.x(*m));
            let before = ratio(&cum, &self.total);
            cum += c;
            let after = ratio(&cum, &self.total);
            d = d.max((before - phi).abs()).max((after - phi).abs());
        }
        d
    }
}

pub fn empirical_distribution(n: usize) -> EmpiricalDist {
    EmpiricalDist::from_row(&RowEvaluator::new(n).row(n))
}

pub fn kolmogorov_distance(n: usize) -> f64 {
    empirical_distribution(n).kolmogorov_distance()
}

/// Kolmogorov distance at each checkpoint: strictly decreasing, and at most
/// `bound` at the last one.
pub fn check_distribution(eval: &RowEvaluator, checkpoints: &[usize], bound: f64) -> CheckReport {
    let lo = checkpoints.first().copied().unwrap_or(0);
    let hi = checkpoints.last().copied().unwrap_or(0);
    let mut report = CheckReport::new("distribution", (lo, hi)).param("bound", bound);
    let mut prev: Option<(usize, f64)> = None;
    for &n in checkpoints {
        let dist = EmpiricalDist::from_row(&eval.row(n));
        report.expect(
            dist.mass_is_one() && dist.is_symmetric(),
            || format!("n={n}"),
            || "symmetric, total mass 1".into(),
            || "asymmetric or mass mismatch".into(),
        );
        let d = dist.kolmogorov_distance();
        report.metric(format!("d_{n}"), d);
        if let Some((pn, pd)) = prev {
            report.expect(
                d < pd,
                || format!("n={pn} -> n={n}"),
                || format!("d < {pd}"),
                || d.to_string(),
            );
        }
        prev = Some((n, d));
    }
    if let Some((n, d)) = prev {
        report.expect(
            d <= bound,
            || format!("n={n}"),
            || format!("d <= {bound}"),
            || d.to_string(),
        );
    }
    report
}
