//! Enumerates strongly unimodal sequences and partitions directly.

use unimodal_rank::oracles::{enumerate_unimodal, partition_stats, rank_histogram, unimodal_rank};

fn main() {
    let n = 6;
    for s in enumerate_unimodal(n) {
        println!("{:?} rank {}", s.parts(), unimodal_rank(&s));
    }
    let h = rank_histogram(n);
    let cells: Vec<String> = (-3..=3).map(|m| format!("{m}:{}", h.get(m))).collect();
    println!("u(m,{n}): {}", cells.join(" "));
    let (rank, crank) = partition_stats(10);
    println!("N(0,10) = {}, M(0,10) = {}", rank.get(0), crank.get(0));
}
