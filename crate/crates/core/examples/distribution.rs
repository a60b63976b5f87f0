//! Normalised rank distribution at a single `n` against the standard normal.

use unimodal_rank::verify::empirical_distribution;

fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(1000);
    let dist = empirical_distribution(n);
    for row in dist.rows().iter().filter(|r| r.m.abs() <= 6) {
        println!(
            "m={:>3} x={:>7.4} P={:.6} F={:.6} Phi={:.6}",
            row.m, row.x, row.probability, row.cdf, row.normal
        );
    }
    println!("Kolmogorov distance at n={n}: {:.5}", dist.kolmogorov_distance());
}
