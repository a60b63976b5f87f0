use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::TruncSeries;
use crate::error::{Error, Result};

/// Truncated series in `q` whose coefficients are Laurent polynomials in `w`.
///
/// Row `n` holds the coefficient of `q^n` as a sparse map `m -> [w^m q^n]`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarSeries {
    rows: Vec<BTreeMap<i64, BigInt>>,
}

impl BivarSeries {
    pub fn zero(order: usize) -> Self {
        BivarSeries {
            rows: vec![BTreeMap::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 0, BigInt::from(1), order)
    }

    /// `c * w^m * q^n`
    pub fn monomial(m: i64, n: usize, c: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order && !c.is_zero() {
            s.rows[n].insert(m, c);
        }
        s
    }

    /// Build from `(m, n, coefficient)` triples, accumulating repeats.
    pub fn from_terms<I>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, usize, BigInt)>,
    {
        let mut s = Self::zero(order);
        for (m, n, c) in terms {
            if n <= order {
                add_entry(&mut s.rows[n], m, &c);
            }
        }
        s
    }

    /// Embed a univariate series as the `w^0` column.
    pub fn from_univariate(a: &TruncSeries) -> Self {
        let mut s = Self::zero(a.trunc_order());
        for (n, c) in a.terms() {
            s.rows[n].insert(0, c.clone());
        }
        s
    }

    pub fn trunc_order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Result<&BTreeMap<i64, BigInt>> {
        self.rows.get(n).ok_or(Error::BeyondTruncation {
            index: n,
            order: self.trunc_order(),
        })
    }

    pub fn rows(&self) -> &[BTreeMap<i64, BigInt>] {
        &self.rows
    }

    pub fn coeff(&self, m: i64, n: usize) -> Result<BigInt> {
        Ok(self.row(n)?.get(&m).cloned().unwrap_or_default())
    }

    /// The `w^m` coefficient as a series in `q`.
    pub fn column(&self, m: i64) -> TruncSeries {
        TruncSeries::from_coeffs(
            self.rows
                .iter()
                .map(|r| r.get(&m).cloned().unwrap_or_default())
                .collect(),
        )
    }

    /// Specialize `w = 1`.
    pub fn at_w_one(&self) -> TruncSeries {
        TruncSeries::from_coeffs(
            self.rows
                .iter()
                .map(|r| r.values().fold(BigInt::zero(), |a, c| a + c))
                .collect(),
        )
    }

    /// True when every row `n` is supported in `[-n, n]`.
    pub fn support_within_size(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, r)| {
            r.keys()
                .next()
                .is_none_or(|&lo| lo >= -(n as i64))
                && r.keys().next_back().is_none_or(|&hi| hi <= n as i64)
        })
    }

    /// True when `[w^m q^n] = [w^-m q^n]` everywhere.
    pub fn is_symmetric(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.iter().all(|(m, c)| r.get(&-m) == Some(c)))
    }

    pub(crate) fn truncate_in_place(&mut self, order: usize) {
        self.rows.truncate(order + 1);
    }

    /// Cauchy product in `q` with Laurent multiplication in `w`.
    pub fn mul(&self, other: &BivarSeries) -> BivarSeries {
        let order = self.trunc_order().min(other.trunc_order());
        let mut out = Self::zero(order);
        for (i, ra) in self.rows.iter().enumerate().take(order + 1) {
            if ra.is_empty() {
                continue;
            }
            for (j, rb) in other.rows.iter().enumerate().take(order + 1 - i) {
                for (ma, ca) in ra {
                    for (mb, cb) in rb {
                        add_entry(&mut out.rows[i + j], ma + mb, &(ca * cb));
                    }
                }
            }
        }
        out
    }

    /// Multiply in place by `1 + sign * w^a q^b` with `b >= 1`.
    pub(crate) fn mul_linear_factor_in_place(&mut self, a: i64, b: usize, sign: i64) {
        assert!(b >= 1);
        for n in (b..self.rows.len()).rev() {
            let (lo, hi) = self.rows.split_at_mut(n);
            let src = &lo[n - b];
            let dst = &mut hi[0];
            for (m, c) in src {
                if sign >= 0 {
                    add_entry(dst, m + a, c);
                } else {
                    add_entry(dst, m + a, &-c);
                }
            }
        }
    }

    /// Multiply in place by `1 / (1 - w^a q^b)` with `b >= 1`.
    pub(crate) fn div_linear_factor_in_place(&mut self, a: i64, b: usize) {
        assert!(b >= 1);
        for n in b..self.rows.len() {
            let (lo, hi) = self.rows.split_at_mut(n);
            let src = &lo[n - b];
            let dst = &mut hi[0];
            for (m, c) in src {
                add_entry(dst, m + a, c);
            }
        }
    }

    /// `self += q^shift * other`
    pub(crate) fn add_shifted_assign(&mut self, other: &BivarSeries, shift: usize) {
        let order = self.trunc_order();
        for (k, r) in other.rows.iter().enumerate() {
            let n = k + shift;
            if n > order {
                break;
            }
            for (m, c) in r {
                add_entry(&mut self.rows[n], *m, c);
            }
        }
    }
}

/// Bivariate Cauchy product; see [`BivarSeries::mul`].
pub fn bivar_mul(a: &BivarSeries, b: &BivarSeries) -> BivarSeries {
    a.mul(b)
}

fn add_entry(row: &mut BTreeMap<i64, BigInt>, m: i64, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = row.entry(m).or_default();
    *slot += c;
    if slot.is_zero() {
        row.remove(&m);
    }
}
