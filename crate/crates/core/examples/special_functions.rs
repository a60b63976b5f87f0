//! Modified Bessel functions of half-integer order and the normal CDF.

use unimodal_rank::asymptotics::{bessel_i, bessel_i_scaled, gamma, normal_cdf};

fn main() -> unimodal_rank::Result<()> {
    for nu in [-2.5, -1.5, -0.5, 0.5, 1.0] {
        let small = bessel_i(nu, 1.0)?;
        let large = bessel_i_scaled(nu, 500.0)?;
        println!("I_{nu}(1) = {small:.12e}, e^-500 I_{nu}(500) = {large:.12e}");
    }
    println!("Gamma(-0.5) = {:.12}", gamma(-0.5));
    for x in [-1.959964, 0.0, 1.0] {
        println!("Phi({x}) = {:.15}", normal_cdf(x));
    }
    Ok(())
}
