use num_bigint::BigInt;

use crate::series::{partition_series, pochhammer, BivarSeries, PochhammerKind, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionStat {
    Rank,
    Crank,
}

/// `R(w;q)` or `C(w;q)`; `[w^m q^n]` is `N(m, n)` resp. `M(m, n)`.
pub fn partition_stat_bivariate(which: PartitionStat, order: usize) -> BivarSeries {
    match which {
        PartitionStat::Rank => rank_bivariate(order),
        PartitionStat::Crank => crank_bivariate(order),
    }
}

// sum_{n>=0} q^{n^2} / ((wq)_n (w^{-1}q)_n)
fn rank_bivariate(order: usize) -> BivarSeries {
    let mut out = BivarSeries::one(order);
    let mut term = BivarSeries::one(order);
    let mut n = 1;
    while n * n <= order {
        term.truncate_in_place(order - n * n);
        term.div_linear_factor_in_place(1, n);
        term.div_linear_factor_in_place(-1, n);
        out.add_shifted_assign(&term, n * n);
        n += 1;
    }
    out
}

// (q)_inf / ((wq)_inf (w^{-1}q)_inf)
fn crank_bivariate(order: usize) -> BivarSeries {
    let mut out = BivarSeries::from_univariate(&pochhammer(PochhammerKind::QQ, order, order));
    for j in 1..=order {
        out.div_linear_factor_in_place(1, j);
        out.div_linear_factor_in_place(-1, j);
    }
    out
}

/// `ospt(n)` from
/// `1/(q)_inf * sum_{n>=1} (-1)^{n+1} (q^{n(n+1)/2} - q^{n(3n+1)/2}) / (1 - q^n)`.
pub fn ospt_series(order: usize) -> TruncSeries {
    let mut numer = TruncSeries::zero(order);
    let mut n = 1;
    while n * (n + 1) / 2 <= order {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let pair = TruncSeries::from_terms(
            order,
            [(n * (n + 1) / 2, sign), (n * (3 * n + 1) / 2, -sign)],
        );
        let term = pair
            .mul_geom_inverse(n)
            .expect("stride n >= 1");
        numer = &numer + &term;
        n += 1;
    }
    numer.mul(&partition_series(order))
}

/// `(1 - q) sum_{n>=1} q^{n^2+2n} / (q)_n^2`; the coefficient of `q^n` is
/// `M(0, n)` for `n >= 2`.
pub fn crank_zero_series(order: usize) -> TruncSeries {
    let mut sum = TruncSeries::zero(order);
    let mut term = TruncSeries::one(order);
    let mut n = 1;
    while n * n + 2 * n <= order {
        for _ in 0..2 {
            term.mul_geom_inverse_in_place(n).expect("stride n >= 1");
        }
        sum.add_shifted_assign(&term, n * n + 2 * n);
        n += 1;
    }
    sum.mul_binomial_in_place(1, -1);
    sum
}

/// `S(q) = 1 + sum_{n>=1} q^{n(n+1)/2}/(q)_n * q^{n(n-1)/2}/(q)_{n-1}`.
pub fn s_series(order: usize) -> TruncSeries {
    let mut out = TruncSeries::one(order);
    // 1 / ((q)_n (q)_{n-1})
    let mut denom_inv = TruncSeries::one(order);
    let mut n = 1;
    while n * n <= order {
        denom_inv.mul_geom_inverse_in_place(n).expect("n >= 1");
        if n >= 2 {
            denom_inv.mul_geom_inverse_in_place(n - 1).expect("n >= 2");
        }
        out.add_shifted_assign(&denom_inv, n * n);
        n += 1;
    }
    out
}

/// The third-order mock theta function `sum_{n>=1} q^{n^2} / (q;q^2)_n`.
pub fn psi_series(order: usize) -> TruncSeries {
    let mut out = TruncSeries::zero(order);
    let mut term = TruncSeries::one(order);
    let mut n = 1;
    while n * n <= order {
        term.mul_geom_inverse_in_place(2 * n - 1).expect("odd stride");
        out.add_shifted_assign(&term, n * n);
        n += 1;
    }
    out
}

/// `ospt(n)` as the difference of positive crank and rank first moments,
/// read off the bivariate tables.
pub fn ospt_from_moments(order: usize) -> TruncSeries {
    let rank = rank_bivariate(order);
    let crank = crank_bivariate(order);
    let positive_moment = |row: &std::collections::BTreeMap<i64, BigInt>| -> BigInt {
        row.range(1..).map(|(m, c)| c * m).sum()
    };
    TruncSeries::from_coeffs(
        (0..=order)
            .map(|n| positive_moment(&crank.rows()[n]) - positive_moment(&rank.rows()[n]))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::u_m_series;

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    fn row(b: &BivarSeries, n: usize) -> Vec<(i64, i64)> {
        b.row(n)
            .unwrap()
            .iter()
            .map(|(m, c)| (*m, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn rank_row_four() {
        let r = partition_stat_bivariate(PartitionStat::Rank, 8);
        assert_eq!(row(&r, 4), vec![(-3, 1), (-1, 1), (0, 1), (1, 1), (3, 1)]);
        assert_eq!(r.at_w_one().coeff(5).unwrap(), &BigInt::from(7));
    }

    #[test]
    fn crank_row_one_convention() {
        let c = partition_stat_bivariate(PartitionStat::Crank, 6);
        assert_eq!(row(&c, 1), vec![(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(row(&c, 4), vec![(-4, 1), (-2, 1), (0, 1), (2, 1), (4, 1)]);
    }

    #[test]
    fn stat_tables_sum_to_partition_numbers() {
        let order = 40;
        let p = partition_series(order);
        let r = partition_stat_bivariate(PartitionStat::Rank, order).at_w_one();
        let c = partition_stat_bivariate(PartitionStat::Crank, order).at_w_one();
        for n in 2..=order {
            assert_eq!(r.coeff(n).unwrap(), p.coeff(n).unwrap());
            assert_eq!(c.coeff(n).unwrap(), p.coeff(n).unwrap());
        }
    }

    #[test]
    fn ospt_is_rank_zero_unimodal() {
        let order = 150;
        assert_eq!(ospt_series(order), u_m_series(0, order));
        assert_eq!(ints(&ospt_series(10))[5], 2);
        assert!(ospt_series(order).coeffs().iter().all(|c| c.sign() != num_bigint::Sign::Minus));
    }

    #[test]
    fn ospt_two_routes() {
        let order = 30;
        let a = ospt_series(order);
        let b = ospt_from_moments(order);
        assert_eq!(&a.coeffs()[1..], &b.coeffs()[1..]);
    }

    #[test]
    fn crank_zero_matches_bivariate_column() {
        let order = 40;
        let m0 = crank_zero_series(order);
        let col = partition_stat_bivariate(PartitionStat::Crank, order).column(0);
        for n in 2..=order {
            assert_eq!(m0.coeff(n).unwrap(), col.coeff(n).unwrap(), "n = {n}");
        }
        assert_eq!(ints(&m0)[4], 1);
        assert!(ints(&m0)[3..].iter().all(|&c| c > 0));
    }

    #[test]
    fn s_identity_with_crank_zero() {
        let order = 80;
        let s = s_series(order);
        let p = partition_series(order);
        let m0 = crank_zero_series(order);
        assert_eq!(ints(&s)[0], 1);
        for n in 2..=order {
            let lhs = s.coeff(n).unwrap() * 2 + m0.coeff(n).unwrap();
            assert_eq!(&lhs, p.coeff(n).unwrap());
        }
    }

    #[test]
    fn psi_small_coefficients() {
        let psi = psi_series(10);
        assert_eq!(ints(&psi)[1], 1);
        assert_eq!(ints(&psi)[6], 2);
    }
}
