use num_bigint::BigInt;
use num_traits::Zero;

use crate::oracles::StatTable;
use crate::series::{partition_series, BivarSeries, TruncSeries};

/// `U(w;q) = sum_{n>=0} (-wq)_n (-w^{-1}q)_n q^{n+1}`; `[w^m q^n] = u(m, n)`.
pub fn unimodal_bivariate(order: usize) -> BivarSeries {
    let mut out = BivarSeries::zero(order);
    let mut prod = BivarSeries::one(order);
    for n in 0..order {
        if n >= 1 {
            // only q^0..q^{order-n-1} of the product can still reach the result
            prod.truncate_in_place(order - n - 1);
            prod.mul_linear_factor_in_place(1, n, 1);
            prod.mul_linear_factor_in_place(-1, n, 1);
        }
        out.add_shifted_assign(&prod, n + 1);
    }
    out
}

/// `U(q) = sum_{n>=0} (-q)_n^2 q^{n+1}`, the total count `u(n)`.
pub fn unimodal_total_series(order: usize) -> TruncSeries {
    let mut out = TruncSeries::zero(order);
    let mut prod = TruncSeries::one(order);
    for n in 0..order {
        if n >= 1 {
            prod.truncate_in_place(order - n - 1);
            prod.mul_binomial_in_place(n, 1);
            prod.mul_binomial_in_place(n, 1);
        }
        out.add_shifted_assign(&prod, n + 1);
    }
    out
}

/// Largest `m` whose series `U_m` is nonzero below `q^{order+1}`.
pub fn max_rank(order: usize) -> usize {
    let mut m = 0;
    while (m + 2) * (m + 3) / 2 <= order {
        m += 1;
    }
    m
}

/// `V_m(q) = (q)_inf U_m(q)` as sparse `(exponent, coefficient)` terms,
/// from the finite geometric sum
/// `q^{m(m+1)/2} sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2 + mn} (1 + q^{n+m} + ... + q^{(n-1)(n+m)})`.
pub fn v_m_terms(m: usize, order: usize) -> Vec<(usize, i64)> {
    let base = m * (m + 1) / 2;
    let mut terms: Vec<(usize, i64)> = Vec::new();
    let mut n = 1;
    while base + n * (n + 1) / 2 + m * n <= order {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let lead = base + n * (n + 1) / 2 + m * n;
        for j in 0..n {
            let e = lead + j * (n + m);
            if e > order {
                break;
            }
            terms.push((e, sign));
        }
        n += 1;
    }
    terms.sort_unstable();
    // merge repeated exponents
    let mut merged: Vec<(usize, i64)> = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        match merged.last_mut() {
            Some((le, lc)) if *le == e => *lc += c,
            _ => merged.push((e, c)),
        }
    }
    merged.retain(|&(_, c)| c != 0);
    merged
}

/// `U_m(q) = sum_n u(m, n) q^n` for `m >= 0`.
pub fn u_m_series(m: usize, order: usize) -> TruncSeries {
    u_m_series_with(m, &partition_series(order))
}

/// As [`u_m_series`], reusing a precomputed `1/(q)_inf`.
pub fn u_m_series_with(m: usize, partitions: &TruncSeries) -> TruncSeries {
    let order = partitions.trunc_order();
    TruncSeries::from_terms(order, v_m_terms(m, order)).mul(partitions)
}

/// `V_m(q)` from the indefinite theta double sum
/// `sum_{a,b>=0} (-1)^{a+b} q^{Q(a + m + 1/2, b + 1/2)}` with
/// `Q(x, y) = x^2/2 + 3y^2/2 + 2xy`.
pub fn v_m_theta_series(m: usize, order: usize) -> TruncSeries {
    // with A = 2x and B = 2y both odd, 8Q = A^2 + 3B^2 + 4AB
    let exponent = |a: usize, b: usize| -> usize {
        let x = 2 * (a + m) + 1;
        let y = 2 * b + 1;
        (x * x + 3 * y * y + 4 * x * y) / 8
    };
    let mut out = TruncSeries::zero(order);
    let mut a = 0;
    while exponent(a, 0) <= order {
        let mut b = 0;
        loop {
            let e = exponent(a, b);
            if e > order {
                break;
            }
            if (a + b) % 2 == 0 {
                out.add_shifted_assign(&TruncSeries::one(0), e);
            } else {
                out.sub_shifted_assign(&TruncSeries::one(0), e);
            }
            b += 1;
        }
        a += 1;
    }
    out
}

/// Evaluates single rows `u(., n)` at large `n` without building whole
/// series: `u(m, n) = sum_j [q^j]V_m * p(n - j)`.
#[derive(Clone, Debug)]
pub struct RowEvaluator {
    partitions: TruncSeries,
    v_terms: Vec<Vec<(usize, i64)>>,
}

impl RowEvaluator {
    pub fn new(order: usize) -> Self {
        let partitions = partition_series(order);
        let v_terms = (0..=max_rank(order)).map(|m| v_m_terms(m, order)).collect();
        RowEvaluator {
            partitions,
            v_terms,
        }
    }

    pub fn trunc_order(&self) -> usize {
        self.partitions.trunc_order()
    }

    pub fn partitions(&self) -> &TruncSeries {
        &self.partitions
    }

    /// `u(m, n)`; panics if `n` exceeds the order.
    pub fn u(&self, m: i64, n: usize) -> BigInt {
        assert!(n <= self.trunc_order(), "row {n} beyond evaluator order");
        let m = m.unsigned_abs() as usize;
        let Some(terms) = self.v_terms.get(m) else {
            return BigInt::zero();
        };
        let p = self.partitions.coeffs();
        let mut acc = BigInt::zero();
        for &(e, c) in terms {
            if e > n {
                break;
            }
            acc += &p[n - e] * c;
        }
        acc
    }

    /// The full symmetric row `m -> u(m, n)`.
    pub fn row(&self, n: usize) -> StatTable {
        let mut t = StatTable::new(n);
        for m in 0..self.v_terms.len() {
            let c = self.u(m as i64, n);
            if c.is_zero() {
                // U_m starts at q^{(m+1)(m+2)/2}, so later m vanish as well
                break;
            }
            if m > 0 {
                t.add(-(m as i64), c.clone());
            }
            t.add(m as i64, c);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn bivariate_column_five() {
        let u = unimodal_bivariate(12);
        assert_eq!(u.coeff(0, 5).unwrap(), BigInt::from(2));
        assert_eq!(u.coeff(1, 5).unwrap(), BigInt::from(2));
        let row: Vec<(i64, i64)> = u
            .row(12)
            .unwrap()
            .iter()
            .map(|(m, c)| (*m, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(
            row,
            vec![(-3, 2), (-2, 9), (-1, 18), (0, 24), (1, 18), (2, 9), (3, 2)]
        );
        assert!(u.support_within_size());
        assert!(u.is_symmetric());
    }

    #[test]
    fn bivariate_leading_exponents() {
        let order = 40;
        let u = unimodal_bivariate(order);
        for m in 0..8i64 {
            let first = ((m + 1) * (m + 2) / 2) as usize;
            for n in 0..first.min(order + 1) {
                assert!(u.coeff(m, n).unwrap().is_zero(), "u({m},{n})");
            }
            if first <= order {
                assert_eq!(u.coeff(m, first).unwrap(), BigInt::from(1));
            }
        }
    }

    #[test]
    fn per_m_rows_of_table_one() {
        let u0 = u_m_series(0, 20);
        assert_eq!(&ints(&u0)[1..=10], &[1, 1, 1, 2, 2, 4, 5, 7, 10, 13]);
        let u4 = u_m_series(4, 20);
        assert!(ints(&u4)[..15].iter().all(|&c| c == 0));
        assert_eq!(ints(&u4)[15], 1);
        assert_eq!(ints(&u_m_series(3, 20))[20], 34);
    }

    #[test]
    fn theta_leading_term() {
        let v0 = v_m_theta_series(0, 10);
        assert_eq!(ints(&v0)[0], 0);
        assert_eq!(ints(&v0)[1], 1);
    }

    #[test]
    fn theta_and_finite_sum_agree() {
        let order = 300;
        for m in 0..10 {
            let theta = v_m_theta_series(m, order);
            let finite = TruncSeries::from_terms(order, v_m_terms(m, order));
            assert_eq!(theta, finite, "m = {m}");
        }
    }

    #[test]
    fn theta_coefficients_are_small() {
        let order = 500;
        for m in 0..6 {
            let v = v_m_theta_series(m, order);
            assert!(v.coeffs().iter().all(|c| c.magnitude().bits() <= 2));
        }
    }

    #[test]
    fn total_series_is_w_equals_one() {
        let order = 60;
        assert_eq!(unimodal_total_series(order), unimodal_bivariate(order).at_w_one());
        assert_eq!(ints(&unimodal_total_series(8))[5], 6);
    }

    #[test]
    fn row_evaluator_matches_series() {
        let order = 120;
        let ev = RowEvaluator::new(order);
        let p = partition_series(order);
        for m in 0..=max_rank(order) {
            let s = u_m_series_with(m, &p);
            for n in 0..=order {
                assert_eq!(&ev.u(m as i64, n), s.coeff(n).unwrap());
            }
        }
        let row = ev.row(20);
        assert_eq!(row.get(-4), BigInt::from(7));
        assert!(row.is_symmetric());
    }
}
