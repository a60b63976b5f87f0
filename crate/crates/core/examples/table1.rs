//! Prints `u(m, n)` for `0 <= m <= 4`, `1 <= n <= 20` from each exact route
//! and confirms they agree.

use unimodal_rank::genfun::{Route, UnimodalTableSet};

fn main() {
    let reference = UnimodalTableSet::compute(Route::PerM, 20);
    for m in 0..=4i64 {
        let row: Vec<String> = (1..=20)
            .map(|n| reference.get(m, n).unwrap().to_string())
            .collect();
        println!("m={m}: {}", row.join(" "));
    }
    for route in [Route::Bivariate, Route::Theta, Route::Oracle] {
        let other = UnimodalTableSet::compute(route, 20);
        match reference.first_disagreement(&other) {
            None => println!("{route}: agrees"),
            Some((m, n)) => println!("{route}: differs at u({m},{n})"),
        }
    }
}
