//! Brute-force enumeration of strongly unimodal sequences, partitions and
//! pairs of distinct-part partitions.
//!
//! Everything here is exponential in `n` and exists to check the series
//! code at small sizes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A strongly unimodal sequence `a_1 < ... < a_k > ... > a_s`.
///
/// `peak_index` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnimodalSeq {
    parts: Vec<u32>,
    peak_index: usize,
}

impl UnimodalSeq {
    /// Returns `None` unless `parts` is strictly increasing up to a unique
    /// peak and strictly decreasing after it.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return None;
        }
        let mut k = 0;
        while k + 1 < parts.len() && parts[k] < parts[k + 1] {
            k += 1;
        }
        if parts[k..].windows(2).all(|w| w[0] > w[1]) {
            Some(UnimodalSeq {
                parts,
                peak_index: k + 1,
            })
        } else {
            None
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn peak_index(&self) -> usize {
        self.peak_index
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&a| a as u64).sum()
    }

    /// Re-check the strict unimodality invariant.
    pub fn is_valid(&self) -> bool {
        let k = self.peak_index;
        k >= 1
            && k <= self.parts.len()
            && self.parts.iter().all(|&a| a > 0)
            && self.parts[..k].windows(2).all(|w| w[0] < w[1])
            && self.parts[k - 1..].windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for UnimodalSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Terms after the peak minus terms before it: `s - 2k + 1`.
pub fn unimodal_rank(sigma: &UnimodalSeq) -> i64 {
    sigma.parts.len() as i64 - 2 * sigma.peak_index as i64 + 1
}

/// All strongly unimodal sequences of size `n`.
///
/// Generated by peak value: pick a peak `p`, then a set of distinct values
/// below `p` for each side.
pub fn enumerate_unimodal(n: u32) -> Vec<UnimodalSeq> {
    let mut out = Vec::new();
    for peak in 1..=n {
        let rest = n - peak;
        for left_sum in 0..=rest {
            let lefts = distinct_below(left_sum, peak);
            if lefts.is_empty() {
                continue;
            }
            let rights = distinct_below(rest - left_sum, peak);
            for l in &lefts {
                for r in &rights {
                    // l and r are stored decreasing
                    let mut parts: Vec<u32> = l.iter().rev().copied().collect();
                    parts.push(peak);
                    parts.extend(r.iter().copied());
                    out.push(UnimodalSeq {
                        peak_index: l.len() + 1,
                        parts,
                    });
                }
            }
        }
    }
    out
}

/// Partitions of `n` into distinct parts all `< bound`, each in decreasing order.
fn distinct_below(n: u32, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        // max*(max+1)/2 is the largest reachable sum
        if (max as u64) * (max as u64 + 1) / 2 < n as u64 {
            return;
        }
        for a in (1..=max.min(n)).rev() {
            cur.push(a);
            go(n - a, a - 1, cur, out);
            cur.pop();
        }
    }
    go(n, bound.saturating_sub(1), &mut cur, &mut out);
    out
}

/// For a fixed size `n`, the count of objects at each statistic value `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StatTable {
    pub n: usize,
    pub counts: BTreeMap<i64, BigInt>,
}

impl StatTable {
    pub fn new(n: usize) -> Self {
        StatTable {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn get(&self, m: i64) -> BigInt {
        self.counts.get(&m).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, m: i64, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let slot = self.counts.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.counts.remove(&m);
        }
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts
            .iter()
            .all(|(m, c)| self.counts.get(&-m) == Some(c))
    }

    /// `sum_m m^r c(m)` when `signed`, else `sum_m |m|^r c(m)`.
    pub fn moment(&self, r: u32, signed: bool) -> BigInt {
        self.counts
            .iter()
            .map(|(&m, c)| {
                let base = if signed { BigInt::from(m) } else { BigInt::from(m).abs() };
                num_traits::pow(base, r as usize) * c
            })
            .sum()
    }

    /// The table with `m` replaced by `-m`.
    pub fn reflected(&self) -> StatTable {
        StatTable {
            n: self.n,
            counts: self.counts.iter().map(|(m, c)| (-m, c.clone())).collect(),
        }
    }

    /// False if any count is negative, except the conventional crank row at n = 1.
    pub fn counts_nonnegative(&self) -> bool {
        self.counts.values().all(|c| !c.is_negative()) || self.is_conventional_crank_row()
    }

    fn is_conventional_crank_row(&self) -> bool {
        self.n == 1 && *self == crank_row_one()
    }
}

/// `u(m, n)` for all `m` by direct enumeration.
pub fn rank_histogram(n: u32) -> StatTable {
    let mut t = StatTable::new(n as usize);
    for s in enumerate_unimodal(n) {
        t.add(unimodal_rank(&s), 1);
    }
    t
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&a| a as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part minus number of parts.
    pub fn rank(&self) -> i64 {
        match self.parts.first() {
            Some(&l) => l as i64 - self.parts.len() as i64,
            None => 1,
        }
    }

    /// Andrews–Garvan crank. Only meaningful for size > 1; the size-1 row of
    /// the crank table follows the series convention instead.
    pub fn crank(&self) -> i64 {
        let ones = self.parts.iter().filter(|&&a| a == 1).count() as i64;
        match self.parts.first() {
            None => 1,
            Some(&l) if ones == 0 => l as i64,
            Some(_) => {
                let mu = self.parts.iter().filter(|&&a| a as i64 > ones).count() as i64;
                mu - ones
            }
        }
    }

    pub fn conjugate(&self) -> Partition {
        let largest = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=largest)
            .map(|j| self.parts.iter().filter(|&&a| a >= j).count() as u32)
            .collect();
        Partition { parts }
    }
}

/// All partitions of `n`, each with parts in decreasing order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for a in (1..=max.min(n)).rev() {
            cur.push(a);
            go(n - a, a, cur, out);
            cur.pop();
        }
    }
    go(n, n, &mut cur, &mut out);
    out
}

fn crank_row_one() -> StatTable {
    let mut t = StatTable::new(1);
    t.add(1, 1);
    t.add(-1, 1);
    t.add(0, -1);
    t
}

/// Rank and crank tables `N(m, n)` and `M(m, n)` by enumeration.
///
/// The crank table at `n = 1` is the conventional `{±1: 1, 0: -1}` required by
/// the product generating function; the combinatorial definition does not
/// apply there.
pub fn partition_stats(n: u32) -> (StatTable, StatTable) {
    let mut rank = StatTable::new(n as usize);
    let mut crank = StatTable::new(n as usize);
    for p in enumerate_partitions(n) {
        rank.add(p.rank(), 1);
        if n != 1 {
            crank.add(p.crank(), 1);
        }
    }
    if n == 1 {
        crank = crank_row_one();
    }
    (rank, crank)
}

/// Number of pairs `(mu, nu)` of distinct-part partitions with
/// `len(mu) = len(nu) + 1` and `|mu| + |nu| = n`, plus the empty pair at `n = 0`.
pub fn count_s_pairs(n: u32) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    // distinct-part partitions of each size, bucketed by length
    let by_size: Vec<BTreeMap<usize, u64>> = (0..=n)
        .map(|k| {
            let mut lens = BTreeMap::new();
            for p in distinct_below(k, k + 1) {
                *lens.entry(p.len()).or_insert(0u64) += 1;
            }
            lens
        })
        .collect();
    let mut total = BigInt::zero();
    for a in 0..=n {
        let b = n - a;
        for (&len_mu, &cm) in &by_size[a as usize] {
            if len_mu == 0 {
                continue;
            }
            if let Some(&cn) = by_size[b as usize].get(&(len_mu - 1)) {
                total += BigInt::from(cm) * cn;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn table(pairs: &[(i64, i64)]) -> BTreeMap<i64, BigInt> {
        pairs.iter().map(|&(m, c)| (m, BigInt::from(c))).collect()
    }

    #[test]
    fn ranks_of_small_sequences() {
        assert_eq!(unimodal_rank(&UnimodalSeq::new(vec![5]).unwrap()), 0);
        assert_eq!(unimodal_rank(&UnimodalSeq::new(vec![4, 1]).unwrap()), 1);
        assert_eq!(unimodal_rank(&UnimodalSeq::new(vec![1, 3, 1]).unwrap()), 0);
        assert_eq!(unimodal_rank(&UnimodalSeq::new(vec![1, 4]).unwrap()), -1);
    }

    #[test]
    fn rejects_non_strict_sequences() {
        assert!(UnimodalSeq::new(vec![1, 1]).is_none());
        assert!(UnimodalSeq::new(vec![2, 1, 2]).is_none());
        assert!(UnimodalSeq::new(vec![3, 3]).is_none());
        assert!(UnimodalSeq::new(vec![]).is_none());
    }

    #[test]
    fn size_five_has_six_sequences() {
        let all = enumerate_unimodal(5);
        assert_eq!(all.len(), 6);
        let shown: BTreeSet<String> = all.iter().map(|s| s.to_string()).collect();
        for s in ["{5}", "{1,4}", "{4,1}", "{2,3}", "{3,2}", "{1,3,1}"] {
            assert!(shown.contains(s), "missing {s}");
        }
    }

    #[test]
    fn size_one_is_singleton() {
        let all = enumerate_unimodal(1);
        assert_eq!(all, vec![UnimodalSeq::new(vec![1]).unwrap()]);
    }

    #[test]
    fn size_eight_histogram() {
        let all = enumerate_unimodal(8);
        assert_eq!(all.len(), 21);
        let h = rank_histogram(8);
        assert_eq!(h.counts, table(&[(-2, 2), (-1, 5), (0, 7), (1, 5), (2, 2)]));
    }

    #[test]
    fn histograms_from_table_columns() {
        assert_eq!(
            rank_histogram(6).counts,
            table(&[(-2, 1), (-1, 2), (0, 4), (1, 2), (2, 1)])
        );
        assert_eq!(rank_histogram(2).counts, table(&[(0, 1)]));
        assert_eq!(rank_histogram(20).get(0), BigInt::from(183));
    }

    #[test]
    fn enumeration_is_valid_and_duplicate_free() {
        for n in 1..=20 {
            let all = enumerate_unimodal(n);
            let set: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            for s in &all {
                assert!(s.is_valid());
                assert_eq!(s.size(), n as u64);
            }
            let h = rank_histogram(n);
            assert_eq!(h.total(), BigInt::from(all.len()));
            assert!(h.is_symmetric());
        }
    }

    #[test]
    fn rank_and_crank_of_four() {
        let (rank, crank) = partition_stats(4);
        assert_eq!(rank.counts, table(&[(3, 1), (1, 1), (0, 1), (-1, 1), (-3, 1)]));
        assert_eq!(crank.counts, table(&[(4, 1), (2, 1), (0, 1), (-2, 1), (-4, 1)]));
    }

    #[test]
    fn conventional_crank_row() {
        let (_, crank) = partition_stats(1);
        assert_eq!(crank.counts, table(&[(1, 1), (-1, 1), (0, -1)]));
        assert!(crank.counts_nonnegative());
        // the raw definition disagrees, which is why the row is fixed
        assert_eq!(Partition::new(vec![1]).unwrap().crank(), -1);
    }

    #[test]
    fn partition_totals_and_conjugation() {
        let p = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for n in 2..=10u32 {
            let (rank, crank) = partition_stats(n);
            assert_eq!(rank.total(), BigInt::from(p[n as usize]));
            assert_eq!(crank.total(), BigInt::from(p[n as usize]));
        }
        for lam in enumerate_partitions(12) {
            assert_eq!(lam.conjugate().rank(), -lam.rank());
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn s_pairs_small() {
        assert_eq!(count_s_pairs(0), BigInt::from(1));
        assert_eq!(count_s_pairs(1), BigInt::from(1));
        assert_eq!(count_s_pairs(2), BigInt::from(1));
        assert_eq!(count_s_pairs(4), BigInt::from(2));
    }
}
