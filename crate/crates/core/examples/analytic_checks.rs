//! Evaluates the generating functions at `q = e^{-t}` and compares them with
//! their expansions as `t -> 0`.

use unimodal_rank::asymptotics::analytic::{eta_ratio, moment_gf_ratio, v_m_check};

fn main() -> unimodal_rank::Result<()> {
    let ts = [0.2, 0.1, 0.05];
    for m in 0..=2 {
        let check = v_m_check(m, &ts)?;
        for p in &check.points {
            println!(
                "V_{m}(e^-{}) = {:.6}, expansion {:.6}, error {:.2e}",
                p.t, p.value, p.predicted, p.error
            );
        }
        println!("  error / t^2 ~ {:.4}", check.fitted_c);
    }
    for t in ts {
        let e = eta_ratio(t)?;
        let k1 = moment_gf_ratio(1, t)?;
        println!("t={t}: partition ratio {:.8}, k=1 moment ratio {:.5}", e.ratio, k1.ratio);
    }
    Ok(())
}
