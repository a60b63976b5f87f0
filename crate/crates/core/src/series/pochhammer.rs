use num_bigint::BigInt;
use num_traits::Zero;

use super::TruncSeries;

/// The three finite q-Pochhammer products used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PochhammerKind {
    /// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)`
    QQ,
    /// `(-q;q)_n = (1+q)(1+q^2)...(1+q^n)`
    NegQ,
    /// `(q;q^2)_n = (1-q)(1-q^3)...(1-q^{2n-1})`
    QOdd,
}

pub fn pochhammer(kind: PochhammerKind, n: usize, order: usize) -> TruncSeries {
    let mut s = TruncSeries::one(order);
    for j in 0..n {
        let (e, sign) = match kind {
            PochhammerKind::QQ => (j + 1, -1),
            PochhammerKind::NegQ => (j + 1, 1),
            PochhammerKind::QOdd => (2 * j + 1, -1),
        };
        if e > order {
            // every remaining factor is 1 modulo q^{order+1}
            break;
        }
        s.mul_binomial_in_place(e, sign);
    }
    s
}

/// `1/(q;q)_inf` through order `order`, i.e. the partition numbers `p(0..=order)`.
///
/// Uses Euler's pentagonal recurrence
/// `p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
pub fn partition_series(order: usize) -> TruncSeries {
    let mut p: Vec<BigInt> = Vec::with_capacity(order + 1);
    p.push(BigInt::from(1));
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            if k % 2 == 1 {
                acc += &p[n - g1];
                if g2 <= n {
                    acc += &p[n - g2];
                }
            } else {
                acc -= &p[n - g1];
                if g2 <= n {
                    acc -= &p[n - g2];
                }
            }
        }
        p.push(acc);
    }
    TruncSeries::from_coeffs(p)
}
