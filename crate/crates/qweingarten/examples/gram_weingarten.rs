//! Build Gram and Weingarten matrices and confirm the exact inversion.
//!
//! ```bash
//! cargo run -p qweingarten --example gram_weingarten
//! ```

use qweingarten::exactalg::rational_to_string;
use qweingarten::weingarten::{build_weingarten, symbolic_gram, GramSpec};

fn main() {
    // The half-size 2 table at n = 2: Gram [[4, 2], [2, 4]], Weingarten
    // entries 1/3 and -1/6.
    let table = build_weingarten(&GramSpec::orthogonal(2, 2)).unwrap();
    println!("orthogonal k=2, n=2");
    println!("  basis:");
    for p in table.basis().iter() {
        println!("    {p}");
    }
    println!("  gram:");
    for r in 0..table.dimension() {
        let row: Vec<String> = (0..table.dimension())
            .map(|c| rational_to_string(table.gram().get(r, c)))
            .collect();
        println!("    {}", row.join("  "));
    }
    println!("  weingarten:");
    for r in 0..table.dimension() {
        let row: Vec<String> = (0..table.dimension())
            .map(|c| rational_to_string(table.weingarten_entry(r, c)))
            .collect();
        println!("    {}", row.join("  "));
    }
    let product = table.gram().mul(table.weingarten()).unwrap();
    println!("  G * W is identity: {}", product.is_identity());

    // Larger tables stay exact; the inverse never sees floating point.
    for (k, n) in [(4usize, 3u64), (5, 2), (5, 6)] {
        let t = build_weingarten(&GramSpec::orthogonal(k, n)).unwrap();
        let ok = t.gram().mul(t.weingarten()).unwrap().is_identity();
        println!(
            "k={k} n={n}: dimension {} table, exact inverse verified: {ok}",
            t.dimension()
        );
    }

    // The symbolic Gram matrix keeps n as a variable.
    let (basis, sym) = symbolic_gram(3).unwrap();
    println!("\nsymbolic Gram entries for k=3 (first row):");
    for (j, q) in basis.iter().enumerate() {
        println!("  G(1, {}) = {}   (partner {q})", j + 1, sym.get(0, j));
    }
    let at_five = sym.eval(5);
    println!(
        "evaluated at n=5, first row: {}",
        (0..basis.len())
            .map(|j| rational_to_string(at_five.get(0, j)))
            .collect::<Vec<_>>()
            .join("  ")
    );
}
