//! Compares exact counts with the leading and first-order asymptotic formulas.

use unimodal_rank::asymptotics::{structural_asymptotics, u_mn_asymptotic, u_total_asymptotic};
use unimodal_rank::genfun::RowEvaluator;

fn main() {
    let checkpoints = [100usize, 400, 1600];
    let eval = RowEvaluator::new(*checkpoints.last().unwrap());
    for &n in &checkpoints {
        let row = eval.row(n);
        let total = row.total();
        println!(
            "n={n}: u(n)/estimate = {:.5} (order 0), {:.5} (order 1)",
            u_total_asymptotic(n as u64, 0).ratio(&total),
            u_total_asymptotic(n as u64, 1).ratio(&total)
        );
        for m in 0..=2u64 {
            let exact = row.get(m as i64);
            println!(
                "  u({m},{n})/estimate = {:.5} (order 0), {:.5} (order 1)",
                u_mn_asymptotic(m, n as u64, 0).ratio(&exact),
                u_mn_asymptotic(m, n as u64, 1).ratio(&exact)
            );
        }
        let s = structural_asymptotics(1, n as u64);
        println!("  ln diff estimate {:.3}, ln log-concavity gap estimate {:.3}", s.ln_diff, s.ln_logconc);
    }
}
