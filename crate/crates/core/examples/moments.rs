//! Rank moments `u_k(n)` and their normalised limits.

use unimodal_rank::asymptotics::{abs_moment_asymptotic, moment_asymptotic};
use unimodal_rank::genfun::{unimodal_moments, RowEvaluator, UnimodalTableSet};

fn main() {
    let tables = UnimodalTableSet::per_m(12);
    for k in 0..=2 {
        let seq = unimodal_moments(&tables, 2 * k, true);
        let shown: Vec<String> = seq.iter().map(ToString::to_string).collect();
        println!("u_{}: {}", 2 * k, shown.join(" "));
    }
    let n = 2000;
    let row = RowEvaluator::new(n).row(n);
    for k in 1..=2 {
        let r = moment_asymptotic(k, n as u64).ratio(&row.moment(2 * k, true));
        println!("u_{}({n}) / estimate = {r:.4}", 2 * k);
    }
    for r in [1, 3] {
        let q = abs_moment_asymptotic(r, n as u64).ratio(&row.moment(r, false));
        println!("u+_{r}({n}) / estimate = {q:.4}");
    }
}
