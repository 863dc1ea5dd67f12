//! Expand Weingarten entries as signed path sums over the diagram set and
//! compare the truncations with the exact values.
//!
//! ```bash
//! cargo run -p qweingarten --example asymptotic_expansion
//! ```

use num_traits::Signed;
use qweingarten::asymptotics::{moment_series, DiagramGraph};
use qweingarten::exactalg::{big_rational_pow, rational_to_decimal, rational_to_string};
use qweingarten::weingarten::{build_weingarten, GramSpec};

fn main() {
    let k = 3;
    let graph = DiagramGraph::new(k).unwrap();

    // Paths between two diagrams, the supports of the expansion.
    println!("paths of distance <= 2 between the first two diagrams of D({k}):");
    for path in graph.enumerate_paths(0, 1, 2).unwrap() {
        let nodes: Vec<String> = path.nodes().iter().map(|p| p.to_string()).collect();
        println!(
            "  length {}, distance {}: {}",
            path.length(),
            path.distance(),
            nodes.join(" -> ")
        );
    }

    // The signed path counts are the coefficients of n^k W(p, q).
    println!("\nexpansion of n^{k} W(p, q) through order 4:");
    for (p, q) in [(0usize, 0usize), (0, 1), (0, 2)] {
        let series = graph.weingarten_series(p, q, 4).unwrap();
        println!("  ({}, {}): {series}", p + 1, q + 1);
    }

    // Truncations converge to the exact entries as n grows.
    println!("\ntruncation error at order 3 for the (1, 2) entry:");
    let series = graph.weingarten_series(0, 1, 3).unwrap();
    for n in [5u64, 10, 100] {
        let table = build_weingarten(&GramSpec::orthogonal(k, n)).unwrap();
        let exact = table.weingarten_entry(0, 1) * big_rational_pow(n, k);
        let gap = (series.eval_at(n) - exact).abs();
        println!(
            "  n = {n:>3}: truncation {} , |gap| ~ {}",
            rational_to_string(&series.eval_at(n)),
            rational_to_decimal(&gap, 10)
        );
    }

    // Summing over all endpoint pairs gives the moment expansion of the
    // rescaled single coefficient; order 0 is Catalan, order 1 counts
    // neighbors with a minus sign.
    println!("\nmoment series of the rescaled coefficient:");
    for k in 1..=5usize {
        let series = moment_series(k, 1).unwrap();
        println!(
            "  k={k}: C_k = {}, neighbor term = {}",
            rational_to_string(series.coeff(0)),
            rational_to_string(series.coeff(1))
        );
    }
}
