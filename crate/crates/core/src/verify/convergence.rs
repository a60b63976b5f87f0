//! Exact values at large `n` against the asymptotic formulas, moment growth,
//! and the small-`t` analytic expansions.

use num_bigint::BigInt;

use super::report::CheckReport;
use crate::asymptotics::analytic::{eta_ratio, moment_gf_ratio, moves_toward_one, v_m_check};
use crate::asymptotics::{
    double_factorial_odd, normal_abs_moment, rank_scale, structural_asymptotics,
    u_mn_asymptotic, u_total_asymptotic,
};
use crate::bigmath::{ln_abs, ratio};
use crate::error::Result;
use crate::genfun::{unimodal_moments, RowEvaluator, UnimodalTableSet};

pub const DEFAULT_CHECKPOINTS: [usize; 3] = [250, 1000, 4000];

fn span(checkpoints: &[usize]) -> (usize, usize) {
    (
        checkpoints.first().copied().unwrap_or(0),
        checkpoints.last().copied().unwrap_or(0),
    )
}

/// Exact-over-main ratios for one quantity at each checkpoint; requires the
/// last ratio within `tolerance` of 1 and closer to 1 than the one before it.
fn ratio_series(
    id: &str,
    checkpoints: &[usize],
    tolerance: f64,
    mut ratio_at: impl FnMut(usize) -> f64,
) -> CheckReport {
    let mut c = CheckReport::new(id, span(checkpoints)).param("tolerance", tolerance);
    let ratios: Vec<(usize, f64)> = checkpoints.iter().map(|&n| (n, ratio_at(n))).collect();
    for &(n, r) in &ratios {
        c.metric(format!("ratio_{n}"), r);
    }
    if let [.., (n0, r0), (n1, r1)] = ratios[..] {
        c.expect(
            (r1 - 1.0).abs() < (r0 - 1.0).abs(),
            || format!("n={n0} -> n={n1}"),
            || format!("|ratio - 1| < {}", (r0 - 1.0).abs()),
            || format!("{}", (r1 - 1.0).abs()),
        );
    }
    if let Some(&(n, r)) = ratios.last() {
        c.expect(
            (r - 1.0).abs() <= tolerance,
            || format!("n={n}"),
            || format!("within {tolerance} of 1"),
            || r.to_string(),
        );
    }
    c
}

/// `u(0,n)`, `u(0,n) - u(1,n)` and `u(1,n)^2 - u(0,n)u(2,n)` against their main
/// terms, and first-order against main-term accuracy for `u(m,n)`, `m <= 3`,
/// and for `u(n)`.
pub fn check_asymptotics(eval: &RowEvaluator, checkpoints: &[usize], tolerance: f64) -> CheckReport {
    let mut report = CheckReport::new("asymptotics", span(checkpoints));
    let u = |m: i64, n: usize| eval.u(m, n);

    report.push_child(ratio_series("asymptotics/u0", checkpoints, tolerance, |n| {
        u_mn_asymptotic(0, n as u64, 0).ratio(&u(0, n))
    }));
    report.push_child(ratio_series("asymptotics/diff", checkpoints, tolerance, |n| {
        let exact = u(0, n) - u(1, n);
        (ln_abs(&exact) - structural_asymptotics(0, n as u64).ln_diff).exp()
    }));
    report.push_child(ratio_series("asymptotics/logconc", checkpoints, tolerance, |n| {
        let exact = u(1, n) * u(1, n) - u(0, n) * u(2, n);
        (ln_abs(&exact) - structural_asymptotics(1, n as u64).ln_logconc).exp()
    }));

    let mut c = CheckReport::new("asymptotics/first-order", span(checkpoints));
    for &n in checkpoints {
        let row = eval.row(n);
        let mut compare = |label: String, exact: &BigInt, r0: f64, r1: f64| {
            let (e0, e1) = ((r0 - 1.0).abs(), (r1 - 1.0).abs());
            c.metric(format!("{label}_err0"), e0);
            c.metric(format!("{label}_err1"), e1);
            c.expect(
                e1 < e0,
                || label.clone(),
                || format!("order-1 error < {e0}"),
                || format!("{e1} (exact {exact})"),
            );
        };
        for m in 0..=3u64 {
            let exact = u(m as i64, n);
            let r0 = u_mn_asymptotic(m, n as u64, 0).ratio(&exact);
            let r1 = u_mn_asymptotic(m, n as u64, 1).ratio(&exact);
            compare(format!("u({m},{n})"), &exact, r0, r1);
        }
        let total = row.total();
        let r0 = u_total_asymptotic(n as u64, 0).ratio(&total);
        let r1 = u_total_asymptotic(n as u64, 1).ratio(&total);
        compare(format!("u({n})"), &total, r0, r1);
    }
    report.push_child(c);
    report
}

fn normalized_signed(row: &crate::oracles::StatTable, k: u32) -> f64 {
    let scale = rank_scale(row.n as u64);
    ratio(&row.moment(2 * k, true), &row.total()) / scale.powf(k as f64 / 2.0)
}

fn normalized_abs(row: &crate::oracles::StatTable, r: u32) -> f64 {
    let scale = rank_scale(row.n as u64);
    ratio(&row.moment(r, false), &row.total()) / scale.powf(r as f64 / 4.0)
}

/// Exact monotonicity `u_{2k}(n+1) >= u_{2k}(n)` for `k <= k_max`, `n <= n_max`,
/// and normalised moments at the checkpoints against their Gaussian limits.
pub fn check_moments(
    n_max: usize,
    k_max: u32,
    eval: &RowEvaluator,
    checkpoints: &[usize],
    tolerance: f64,
) -> CheckReport {
    let mut report = CheckReport::new("moments", (1, n_max.max(span(checkpoints).1)));
    let tables = UnimodalTableSet::per_m(n_max + 1);
    let mut mono = CheckReport::new("moments/monotone", (0, n_max)).param("k_max", k_max);
    for k in 0..=k_max {
        let seq = unimodal_moments(&tables, 2 * k, true);
        for n in 0..=n_max {
            mono.expect(
                seq[n + 1] >= seq[n],
                || format!("k={k}, n={n}"),
                || format!(">= {}", seq[n]),
                || seq[n + 1].to_string(),
            );
        }
    }
    report.push_child(mono);

    for k in [1u32, 2] {
        let limit = double_factorial_odd(k);
        report.push_child(ratio_series(
            &format!("moments/signed-k{k}"),
            checkpoints,
            tolerance,
            |n| normalized_signed(&eval.row(n), k) / limit,
        ));
    }
    for r in [1u32, 3] {
        let limit = normal_abs_moment(r);
        report.push_child(ratio_series(
            &format!("moments/abs-r{r}"),
            checkpoints,
            tolerance,
            |n| normalized_abs(&eval.row(n), r) / limit,
        ));
    }
    report
}

/// The `V_m` quadratic remainder, the moment generating function ratios and
/// the eta ratio.
pub fn check_analytic() -> Result<CheckReport> {
    let mut report = CheckReport::new("analytic", (0, 0));

    let ts = [0.2, 0.1, 0.05];
    let mut c = CheckReport::new("analytic/v-m", (0, 0)).param("t", "0.2,0.1,0.05");
    for m in 0..=3 {
        let check = v_m_check(m, &ts)?;
        c.metric(format!("m{m}_C"), check.fitted_c);
        for p in &check.points {
            c.metric(format!("m{m}_err_t{}", p.t), p.error);
        }
        c.expect(
            check.quadratic(),
            || format!("m={m}"),
            || format!("error <= {} t^2", check.fitted_c),
            || {
                let e: Vec<String> = check.points.iter().map(|p| p.error.to_string()).collect();
                e.join(", ")
            },
        );
    }
    report.push_child(c);

    let ts = [0.2, 0.15, 0.1];
    for k in [1u32, 2] {
        let mut c = CheckReport::new(format!("analytic/moment-gf-k{k}"), (0, 0))
            .param("t", "0.2,0.15,0.1");
        let points = ts
            .iter()
            .map(|&t| moment_gf_ratio(k, t))
            .collect::<Result<Vec<_>>>()?;
        for p in &points {
            c.metric(format!("ratio_t{}", p.t), p.ratio);
        }
        c.expect(
            moves_toward_one(&points),
            || format!("k={k}"),
            || "monotone approach to 1".into(),
            || format!("{:?}", points.iter().map(|p| p.ratio).collect::<Vec<_>>()),
        );
        report.push_child(c);
    }

    let ts = [0.3, 0.2, 0.1];
    let mut c = CheckReport::new("analytic/eta", (0, 0)).param("t", "0.3,0.2,0.1");
    let points = ts
        .iter()
        .map(|&t| eta_ratio(t))
        .collect::<Result<Vec<_>>>()?;
    for p in &points {
        c.metric(format!("ratio_t{}", p.t), p.ratio);
    }
    c.expect(
        moves_toward_one(&points),
        || "eta".into(),
        || "monotone approach to 1".into(),
        || format!("{:?}", points.iter().map(|p| p.ratio).collect::<Vec<_>>()),
    );
    report.push_child(c);
    Ok(report)
}
