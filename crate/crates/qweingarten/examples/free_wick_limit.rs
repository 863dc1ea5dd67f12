//! Asymptotic freeness at work: rescaled joint integrals approach the free
//! Wick counts, the number of diagrams compatible with both index tuples.
//!
//! ```bash
//! cargo run -p qweingarten --example free_wick_limit
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use qweingarten::diagrams::{ColorWord, MultiIndex};
use qweingarten::exactalg::{big_rational_pow, rational_to_decimal};
use qweingarten::integrator::{integrate, joint_moment_leading_order, Case, MonomialSpec};

fn main() {
    let tuples: [(&str, Vec<u64>, Vec<u64>); 4] = [
        ("diagonal blocks", vec![1, 1, 2, 2], vec![1, 1, 2, 2]),
        ("constant", vec![1, 1, 1, 1], vec![1, 1, 1, 1]),
        ("rotated blocks", vec![1, 1, 2, 2, 3, 3], vec![1, 2, 2, 3, 3, 1]),
        ("mismatched", vec![1, 2, 1, 2], vec![1, 1, 2, 2]),
    ];

    for (desc, i, j) in tuples {
        let k = i.len() / 2;
        let word = ColorWord::all_alpha(2 * k);
        let row = MultiIndex::new(i.clone());
        let col = MultiIndex::new(j.clone());
        let wick = joint_moment_leading_order(Case::Orthogonal, &word, &row, &col).unwrap();
        println!("{desc}: i = {row}, j = {col}");
        println!("  free Wick count: {wick}");
        for n in [10u64, 100, 10_000] {
            let m = MonomialSpec::orthogonal(row.clone(), col.clone(), n).unwrap();
            let scaled = integrate(&m).unwrap() * big_rational_pow(n, k);
            let gap = &scaled - BigRational::from_integer(BigInt::from(wick));
            println!(
                "  n = {n:>5}: n^{k} integral ~ {} (gap {})",
                rational_to_decimal(&scaled, 8),
                rational_to_decimal(&gap, 8)
            );
        }
    }
}
