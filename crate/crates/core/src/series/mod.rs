//! Truncated power series in `q` with exact integer coefficients.
//!
//! A [`TruncSeries`] of order `N` knows the coefficients of `q^0..=q^N` and
//! nothing else. Binary operations return the smaller of the two orders and
//! reading past the order is an error rather than an implicit zero.

mod bivar;
mod pochhammer;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use bivar::{bivar_mul, BivarSeries};
pub use pochhammer::{partition_series, pochhammer, PochhammerKind};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigInt::one(), order)
    }

    /// `c * q^exp`, truncated (an exponent past `order` gives the zero series).
    pub fn monomial(exp: usize, c: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Order is `coeffs.len() - 1`; an empty vector is treated as the order-0 zero series.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        TruncSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Build from sparse `(exponent, coefficient)` terms; terms past `order` are dropped.
    pub fn from_terms<I>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or(Error::BeyondTruncation {
            index: k,
            order: self.trunc_order(),
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Restrict to a lower order. Raising the order is impossible.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.trunc_order() {
            return Err(Error::BeyondTruncation {
                index: order,
                order: self.trunc_order(),
            });
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub(crate) fn truncate_in_place(&mut self, order: usize) {
        self.coeffs.truncate(order + 1);
    }

    /// Multiply by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.trunc_order();
        let mut s = Self::zero(n);
        for i in k..=n {
            s.coeffs[i] = self.coeffs[i - k].clone();
        }
        s
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Schoolbook Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.trunc_order().min(other.trunc_order());
        // iterate over the sparser operand
        let (sparse, dense) = if self.nnz_upto(n) <= other.nnz_upto(n) {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(n);
        for (i, a) in sparse.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, b) in out.coeffs[i..].iter_mut().zip(&dense.coeffs[..=n - i]) {
                if !b.is_zero() {
                    *c += a * b;
                }
            }
        }
        out
    }

    fn nnz_upto(&self, n: usize) -> usize {
        self.coeffs[..=n].iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficient of `q^k` in `self * other` without forming the product.
    pub fn product_coeff(&self, other: &TruncSeries, k: usize) -> Result<BigInt> {
        let n = self.trunc_order().min(other.trunc_order());
        if k > n {
            return Err(Error::BeyondTruncation { index: k, order: n });
        }
        let mut acc = BigInt::zero();
        for i in 0..=k {
            let a = &self.coeffs[i];
            if !a.is_zero() {
                acc += a * &other.coeffs[k - i];
            }
        }
        Ok(acc)
    }

    /// `self / (1 - q^j)`: running sums with stride `j`.
    pub fn mul_geom_inverse(&self, j: usize) -> Result<TruncSeries> {
        let mut s = self.clone();
        s.mul_geom_inverse_in_place(j)?;
        Ok(s)
    }

    pub(crate) fn mul_geom_inverse_in_place(&mut self, j: usize) -> Result<()> {
        if j == 0 {
            return Err(Error::ZeroStride);
        }
        for k in j..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            hi[0] += &lo[k - j];
        }
        Ok(())
    }

    /// Multiply in place by `1 + sign * q^e`.
    pub(crate) fn mul_binomial_in_place(&mut self, e: usize, sign: i64) {
        if e == 0 {
            let f = BigInt::from(1 + sign);
            for c in &mut self.coeffs {
                *c *= &f;
            }
            return;
        }
        for k in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            if sign >= 0 {
                hi[0] += &lo[k - e];
            } else {
                hi[0] -= &lo[k - e];
            }
        }
    }

    pub(crate) fn add_shifted_assign(&mut self, other: &TruncSeries, shift: usize) {
        let n = self.trunc_order();
        for (k, c) in other.coeffs.iter().enumerate() {
            let e = k + shift;
            if e > n {
                break;
            }
            if !c.is_zero() {
                self.coeffs[e] += c;
            }
        }
    }

    pub(crate) fn sub_shifted_assign(&mut self, other: &TruncSeries, shift: usize) {
        let n = self.trunc_order();
        for (k, c) in other.coeffs.iter().enumerate() {
            let e = k + shift;
            if e > n {
                break;
            }
            if !c.is_zero() {
                self.coeffs[e] -= c;
            }
        }
    }
}

/// Cauchy product; see [`TruncSeries::mul`].
pub fn series_mul(a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
    a.mul(b)
}

/// `a / (1 - q^j)`; `j = 0` is rejected.
pub fn mul_geom_inverse(a: &TruncSeries, j: usize) -> Result<TruncSeries> {
    a.mul_geom_inverse(j)
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.trunc_order().min(rhs.trunc_order());
        TruncSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.trunc_order().min(rhs.trunc_order());
        TruncSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries(")?;
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*q^{k}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{}))", self.trunc_order() + 1)
    }
}
