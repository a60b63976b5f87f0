//! Checks that hold with exact integer arithmetic.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::report::CheckReport;
use crate::genfun::{
    crank_zero_series, ospt_series, partition_stat_bivariate, psi_series, s_series,
    u_m_series_with, unimodal_total_series, PartitionStat, Route, UnimodalTableSet,
};
use crate::oracles::{count_s_pairs, partition_stats, rank_histogram};
use crate::series::partition_series;

/// The published values of `u(m, n)` for `0 <= m <= 4` and `1 <= n <= 20`;
/// blank cells are zero.
pub const TABLE1: [[u32; 20]; 5] = [
    [1, 1, 1, 2, 2, 4, 5, 7, 10, 13, 17, 24, 31, 40, 53, 69, 88, 113, 144, 183],
    [0, 0, 1, 1, 2, 2, 4, 5, 7, 10, 14, 18, 25, 33, 43, 56, 73, 94, 121, 153],
    [0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 6, 9, 12, 16, 23, 30, 40, 53, 69, 90],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 6, 10, 13, 19, 25, 34],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 7],
];

pub fn table1_value(m: usize, n: usize) -> u32 {
    TABLE1[m][n - 1]
}

/// Every route against every published cell.
pub fn check_table1() -> CheckReport {
    let mut report = CheckReport::new("table1", (1, 20)).param("max_m", 4);
    for route in Route::ALL {
        let tables = UnimodalTableSet::compute(route, 20);
        let mut child = CheckReport::new(format!("table1/{route}"), (1, 20));
        for m in 0..5 {
            for n in 1..=20 {
                let want = BigInt::from(table1_value(m, n));
                let got = tables.get(m as i64, n).unwrap_or_default();
                child.expect(
                    got == want,
                    || format!("u({m},{n})"),
                    || want.to_string(),
                    || got.to_string(),
                );
            }
        }
        report.push_child(child);
    }
    report
}

/// `u(m,n)^2 > u(m-1,n) u(m+1,n)` for `7 <= n <= n_max` and weak log-concavity
/// for `n <= 6`.
///
/// The strict inequality is asserted where `u(m, n) > 0`, i.e.
/// `n >= (m+1)(m+2)/2`. Cells with `n >= m(m+1)/2 + 1` below that threshold have
/// both sides zero; they are counted in the `degenerate_cells` metric.
pub fn check_log_concavity(n_max: usize) -> CheckReport {
    let tables = UnimodalTableSet::per_m(n_max);
    log_concavity_on(&tables)
}

pub fn log_concavity_on(tables: &UnimodalTableSet) -> CheckReport {
    let n_max = tables.trunc_order;
    let mut strict = CheckReport::new("log-concavity/strict", (7, n_max));
    let mut weak = CheckReport::new("log-concavity/weak", (1, 6.min(n_max)));
    let mut degenerate = 0usize;
    let mut strict_cells = 0usize;
    for n in 1..=n_max {
        let row = &tables.rows[n];
        let m_top = row.counts.keys().next_back().copied().unwrap_or(0);
        let mut m_lim = m_top.max(1);
        while (m_lim + 1) * (m_lim + 2) / 2 < n as i64 {
            m_lim += 1;
        }
        for m in 1..=m_lim {
            let (lo, mid, hi) = (row.get(m - 1), row.get(m), row.get(m + 1));
            let gap = &mid * &mid - &lo * &hi;
            let cell = || format!("m={m}, n={n}");
            let shown = || format!("{mid}^2 - {lo}*{hi} = {gap}");
            if n <= 6 {
                weak.expect(!gap.is_negative(), cell, || ">= 0".into(), shown);
                if gap.is_zero() && !mid.is_zero() {
                    weak.notes.push(format!("equality at {}", cell()));
                }
            } else {
                let mu = m as usize;
                if n < mu * (mu + 1) / 2 + 1 {
                    continue;
                }
                if mid.is_zero() {
                    degenerate += 1;
                    continue;
                }
                strict_cells += 1;
                strict.expect(gap.is_positive(), cell, || "> 0".into(), shown);
            }
        }
    }
    strict.metric("cells", strict_cells as f64);
    strict.metric("degenerate_cells", degenerate as f64);
    let mut report = CheckReport::new("log-concavity", (1, n_max));
    report.push_child(weak);
    report.push_child(strict);
    report
}

/// The exact identities and inequalities, one sub-report each.
pub fn check_identities(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("identities", (1, n_max));
    let p = partition_series(n_max);
    let tables = UnimodalTableSet::per_m(n_max);
    let u0 = |n: usize| tables.get(0, n).expect("within order");
    let ospt = ospt_series(n_max);
    let s = s_series(n_max);
    let m0 = crank_zero_series(n_max);
    let pn = |n: usize| p.coeff(n).expect("within order").clone();
    let half_gap = |n: usize| (pn(n) - m0.coeff(n).expect("within order")) / 2;

    let mut c = CheckReport::new("ospt-equals-u0", (1, n_max));
    for n in 1..=n_max {
        let (a, b) = (ospt.coeff(n).unwrap(), u0(n));
        c.expect(*a == b, || format!("n={n}"), || format!("u(0,n) = {b}"), || a.to_string());
    }
    report.push_child(c);

    let mut c = CheckReport::new("s-equals-half-p-minus-m0", (2, n_max));
    for n in 2..=n_max {
        // p(n) - M(0,n) is even, so the halving is exact
        let twice = pn(n) - m0.coeff(n).unwrap();
        let got = s.coeff(n).unwrap();
        c.expect(
            &twice == &(got * 2),
            || format!("n={n}"),
            || format!("(p - M0)/2 with p - M0 = {twice}"),
            || got.to_string(),
        );
    }
    report.push_child(c);

    let mut c = CheckReport::new("ospt-bound", (2, n_max));
    let mut equalities = Vec::new();
    for n in 2..=n_max {
        let (a, b) = (ospt.coeff(n).unwrap().clone(), half_gap(n));
        if a == b {
            equalities.push(n.to_string());
        }
        c.expect(a <= b, || format!("n={n}"), || format!("<= {b}"), || a.to_string());
    }
    if !equalities.is_empty() {
        c.notes.push(format!("equality at n = {}", equalities.join(", ")));
    }
    report.push_child(c);

    let mut c = CheckReport::new("refined-bound", (4, n_max));
    for n in 4..=n_max {
        let bound = s.coeff(n).unwrap() - BigInt::from((n - 1) / 2) + 1;
        let a = u0(n);
        c.expect(a <= bound, || format!("n={n}"), || format!("<= {bound}"), || a.to_string());
    }
    report.push_child(c);

    let mut c = CheckReport::new("crank-zero-positive", (3, n_max));
    for n in 3..=n_max {
        let a = m0.coeff(n).unwrap();
        c.expect(a.is_positive(), || format!("n={n}"), || "> 0".into(), || a.to_string());
    }
    report.push_child(c);

    report.push_child(check_partition_tail(30));

    let mut c = CheckReport::new("symmetry", (1, n_max));
    let bivariate = UnimodalTableSet::bivariate(n_max);
    for row in &bivariate.rows {
        for (&m, count) in &row.counts {
            let mirror = row.get(-m);
            c.expect(
                *count == mirror,
                || format!("m={m}, n={}", row.n),
                || count.to_string(),
                || mirror.to_string(),
            );
        }
    }
    report.push_child(c);

    let mut c = CheckReport::new("psi-specialisation", (1, n_max));
    let psi = psi_series(n_max);
    for n in 1..=n_max {
        let row = &tables.rows[n];
        // U(i;q): odd m cancel in pairs, even m = 2j contribute (-1)^j
        let folded: BigInt = row
            .counts
            .iter()
            .filter(|(m, _)| *m % 2 == 0)
            .map(|(m, c)| if (m / 2) % 2 == 0 { c.clone() } else { -c })
            .sum();
        let want = psi.coeff(n).unwrap();
        c.expect(
            folded == *want,
            || format!("n={n}"),
            || want.to_string(),
            || folded.to_string(),
        );
    }
    report.push_child(c);

    let mut c = CheckReport::new("row-sums", (1, n_max));
    let total = unimodal_total_series(n_max);
    for n in 1..=n_max {
        let (a, b) = (tables.rows[n].total(), total.coeff(n).unwrap());
        c.expect(a == *b, || format!("n={n}"), || b.to_string(), || a.to_string());
    }
    report.push_child(c);

    report
}

/// `u(m, (m+1)(m+2)/2 + j) = p(j)` for `0 <= j <= m+1`, `m <= m_max`.
pub fn check_partition_tail(m_max: usize) -> CheckReport {
    let first = |m: usize| (m + 1) * (m + 2) / 2;
    let order = first(m_max) + m_max + 1;
    let p = partition_series(order);
    let mut c = CheckReport::new("partition-tail", (1, order)).param("max_m", m_max);
    for m in 0..=m_max {
        let col = u_m_series_with(m, &p);
        for j in 0..=m + 1 {
            let n = first(m) + j;
            let (a, b) = (col.coeff(n).unwrap(), p.coeff(j).unwrap());
            c.expect(
                a == b,
                || format!("m={m}, n={n}"),
                || format!("p({j}) = {b}"),
                || a.to_string(),
            );
        }
    }
    c
}

/// Series results against enumeration: `u(m,n)` for `n <= n_unimodal`,
/// rank and crank for `n <= n_partitions` (crank from `n >= 2`), `s(n)` for
/// `n <= n_pairs`.
pub fn check_oracles(n_unimodal: usize, n_partitions: usize, n_pairs: usize) -> CheckReport {
    let mut report =
        CheckReport::new("oracles", (1, n_unimodal.max(n_partitions).max(n_pairs)));

    let mut c = CheckReport::new("oracles/unimodal-rank", (1, n_unimodal));
    let tables = UnimodalTableSet::per_m(n_unimodal);
    for n in 1..=n_unimodal {
        let want = rank_histogram(n as u32);
        c.expect(
            tables.rows[n].counts == want.counts,
            || format!("n={n}"),
            || format!("{:?}", want.counts),
            || format!("{:?}", tables.rows[n].counts),
        );
    }
    report.push_child(c);

    let rank = partition_stat_bivariate(PartitionStat::Rank, n_partitions);
    let crank = partition_stat_bivariate(PartitionStat::Crank, n_partitions);
    let mut rc = CheckReport::new("oracles/partition-rank", (1, n_partitions));
    let mut cc = CheckReport::new("oracles/partition-crank", (2, n_partitions));
    for n in 1..=n_partitions {
        let (r, k) = partition_stats(n as u32);
        let got = rank.row(n).unwrap();
        rc.expect(
            *got == r.counts,
            || format!("n={n}"),
            || format!("{:?}", r.counts),
            || format!("{got:?}"),
        );
        if n >= 2 {
            let got = crank.row(n).unwrap();
            cc.expect(
                *got == k.counts,
                || format!("n={n}"),
                || format!("{:?}", k.counts),
                || format!("{got:?}"),
            );
        }
    }
    report.push_child(rc);
    report.push_child(cc);

    let mut c = CheckReport::new("oracles/s-pairs", (0, n_pairs));
    let s = s_series(n_pairs);
    for n in 0..=n_pairs {
        let want = count_s_pairs(n as u32);
        let got = s.coeff(n).unwrap();
        c.expect(
            *got == want,
            || format!("n={n}"),
            || want.to_string(),
            || got.to_string(),
        );
    }
    report.push_child(c);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_cells() {
        assert_eq!(table1_value(2, 15), 23);
        assert_eq!(table1_value(1, 4), 1);
        assert_eq!(table1_value(4, 14), 0);
        // row m=3 from n=10 starts with p(0..=4)
        assert_eq!(&TABLE1[3][9..14], &[1, 1, 2, 3, 5]);
    }

    #[test]
    fn table1_passes() {
        let r = check_table1();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.children.len(), 4);
    }

    #[test]
    fn log_concavity_small_range() {
        let r = check_log_concavity(60);
        assert!(r.passed(), "{}", r.to_text());
        let weak = r.find("log-concavity/weak").unwrap();
        assert!(weak.notes.iter().any(|n| n == "equality at m=1, n=6"));
        assert!(r.find("log-concavity/strict").unwrap().metrics["degenerate_cells"] > 0.0);
    }

    #[test]
    fn log_concavity_failure_is_reported() {
        let mut t = UnimodalTableSet::per_m(20);
        t.rows[20].counts.insert(3, BigInt::from(1));
        let r = log_concavity_on(&t);
        assert!(!r.passed());
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn identities_small_range() {
        let r = check_identities(60);
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.count_skipped(), 0);
        let bound = r.find("ospt-bound").unwrap();
        let listed = bound.notes[0].trim_start_matches("equality at n = ");
        assert!(listed.split(", ").any(|n| n == "4"));
    }

    #[test]
    fn oracle_agreement_small() {
        let r = check_oracles(12, 12, 12);
        assert!(r.passed(), "{}", r.to_text());
    }
}
