//! Enumerate Temperley-Lieb diagrams in Frobenius form and inspect their
//! loop combinatorics.
//!
//! ```bash
//! cargo run -p qweingarten --example enumerate_diagrams
//! ```

use qweingarten::diagrams::{
    enumerate_colored_pairings, enumerate_pairings, loop_count, loop_distance, ColorWord,
};

fn main() {
    // Counts are the Catalan numbers.
    println!("diagram counts |D(k)|:");
    for k in 0..=8 {
        let d = enumerate_pairings(k).expect("within the default size guard");
        println!("  k = {k}: {}", d.len());
    }

    // The canonical order is ascending lexicographic on the partner array.
    println!("\nD(3) in canonical order (1-based partner arrays):");
    let d3 = enumerate_pairings(3).unwrap();
    for p in &d3 {
        println!("  {p}");
    }

    // Superimposing two diagrams closes every string into a loop.
    println!("\nloop counts and distances on D(3):");
    for p in &d3 {
        let row: Vec<String> = d3
            .iter()
            .map(|q| format!("{}", loop_count(p, q).unwrap()))
            .collect();
        println!("  loops {}", row.join(" "));
    }
    for p in &d3 {
        let row: Vec<String> = d3
            .iter()
            .map(|q| format!("{}", loop_distance(p, q).unwrap()))
            .collect();
        println!("  dist  {}", row.join(" "));
    }

    // The unitary case pairs letters of a two-letter word, alpha to beta.
    println!("\ncolored diagram sets:");
    for w in ["ab", "aa", "abab", "aabb", "ababab"] {
        let word = ColorWord::parse(w).unwrap();
        let d = enumerate_colored_pairings(&word).unwrap();
        println!("  |D({w})| = {}", d.len());
        for p in &d {
            println!("    {p}");
        }
    }
}
