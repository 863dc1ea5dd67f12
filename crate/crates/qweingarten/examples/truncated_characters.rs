//! Moments of truncated characters: the semicircle law at full rank, the
//! uniform-square law at n = 2, and the rescaled convergence in between.
//!
//! ```bash
//! cargo run -p qweingarten --example truncated_characters
//! ```

use num_rational::BigRational;
use qweingarten::exactalg::rational_to_string;
use qweingarten::integrator::{truncated_moment, MomentQuery};
use qweingarten::oracles;

fn main() {
    // Full character s = n: even moments are the Catalan numbers, i.e. the
    // variable is semicircular.
    println!("full character (s = n = 4):");
    let semicircle = oracles::semicircle_moments(12);
    for k in 1..=6u64 {
        let q = MomentQuery::new(4, 4, 2 * k).unwrap();
        let m = truncated_moment(&q).unwrap();
        println!(
            "  moment 2k={:>2}: {}   (semicircle: {})",
            2 * k,
            rational_to_string(&m),
            rational_to_string(semicircle.value(2 * k as usize))
        );
    }

    // Single coefficient at n = 2: the square of the coefficient is
    // uniform on [0, 1], so the even moments are 1 / (k + 1).
    println!("\nsingle coefficient (s = 1, n = 2):");
    let uniform = oracles::uniform01_moments(6);
    for k in 1..=6u64 {
        let q = MomentQuery::new(1, 2, 2 * k).unwrap();
        let m = truncated_moment(&q).unwrap();
        println!(
            "  moment 2k={:>2}: {}   (uniform [0,1]: {})",
            2 * k,
            rational_to_string(&m),
            rational_to_string(uniform.value(k as usize))
        );
    }

    // In between, the rescaled moments drift towards the Catalan numbers
    // as n grows.
    println!("\nrescaled fourth moment (n/s)^2 E[o^4] along s = 1:");
    for n in [2u64, 10, 100, 1000, 10000] {
        let q = MomentQuery::new(1, n, 4).unwrap();
        let m = truncated_moment(&q).unwrap();
        let scaled = m * BigRational::from_integer((n as i64).pow(2).into());
        // Printed as a decimal only for eyeballing the convergence.
        let approx = qweingarten::exactalg::rational_to_decimal(&scaled, 6);
        println!("  n = {n:>5}: {} ~ {approx}", rational_to_string(&scaled));
    }
    println!("  limit: 2 (the Catalan number C_2)");
}
