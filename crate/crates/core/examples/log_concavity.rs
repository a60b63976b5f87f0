//! Checks `u(m,n)^2 >= u(m-1,n) u(m+1,n)` across a range of `n`.

use unimodal_rank::verify::check_log_concavity;

fn main() {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(300);
    let report = check_log_concavity(n_max);
    print!("{}", report.to_text());
}
