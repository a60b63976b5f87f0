//! Exact q-series identities: ospt, s(n), psi and the partition tails.

use unimodal_rank::genfun::{ospt_series, psi_series, s_series, u_m_series};
use unimodal_rank::series::partition_series;
use unimodal_rank::verify::check_identities;

fn main() {
    let order = 12;
    let p = partition_series(order);
    let ospt = ospt_series(order);
    let s = s_series(order);
    let psi = psi_series(order);
    let u0 = u_m_series(0, order);
    println!("n  p(n)  ospt(n)  u(0,n)  s(n)  psi(n)");
    for n in 1..=order {
        println!(
            "{n:<2} {:<5} {:<8} {:<7} {:<5} {}",
            p.coeff(n).unwrap(),
            ospt.coeff(n).unwrap(),
            u0.coeff(n).unwrap(),
            s.coeff(n).unwrap(),
            psi.coeff(n).unwrap()
        );
    }
    print!("{}", check_identities(200).to_text());
}
