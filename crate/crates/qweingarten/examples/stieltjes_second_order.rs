//! The second-order Stieltjes expansion in closed form: the Catalan series
//! and the neighbor-count series, expanded exactly from their square-root
//! expressions.
//!
//! ```bash
//! cargo run -p qweingarten --example stieltjes_second_order
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use qweingarten::asymptotics::{catalan_series, neighbor_series, stieltjes_series};
use qweingarten::exactalg::{rational_to_string, PowerSeries};

fn main() {
    let order = 12;

    // C(z) = 2 / (1 + sqrt(1 - 4 z^2)) generates the Catalan numbers.
    let c = catalan_series(order);
    println!("C(z) coefficients at even powers:");
    for k in 0..=order / 2 {
        println!("  z^{:>2}: {}", 2 * k, rational_to_string(c.coeff(2 * k)));
    }

    // N(z) = 32 z^4 / ((1 + sqrt(1 - 4 z^2))^4 sqrt(1 - 4 z^2)) counts
    // ordered pairs of diagrams at loop distance 1.
    let n = neighbor_series(order);
    println!("\nN(z) coefficients at even powers:");
    for k in 0..=order / 2 {
        println!("  z^{:>2}: {}", 2 * k, rational_to_string(n.coeff(2 * k)));
    }

    // The functional equation N = 2 z^4 C^3 (C + z C') pins the closed form.
    let rhs = PowerSeries::monomial(BigRational::from_integer(BigInt::from(2)), 4, order)
        .mul(&c.pow(3))
        .mul(&c.add(&c.z_derivative()));
    println!("\nN = 2 z^4 C^3 (C + z C') through z^{order}: {}", n == rhs);

    // Assembled expansion: each z^(2k) coefficient is C_k - N_k / n.
    let expansion = stieltjes_series(order, true).unwrap();
    println!("\nStieltjes expansion coefficients:");
    for k in 0..=order / 2 {
        println!("  z^{:>2}: {}", 2 * k, expansion.coeff(2 * k));
    }
}
