//! Evaluate Haar-state integrals of generator monomials.
//!
//! ```bash
//! cargo run -p qweingarten --example haar_integration
//! ```

use qweingarten::diagrams::{ColorWord, MultiIndex};
use qweingarten::exactalg::rational_to_string;
use qweingarten::integrator::{integrate, integrate_batch, MonomialSpec};

fn orthogonal(i: &[u64], j: &[u64], n: u64) -> MonomialSpec {
    MonomialSpec::orthogonal(MultiIndex::new(i.to_vec()), MultiIndex::new(j.to_vec()), n)
        .expect("valid monomial")
}

fn main() {
    // Orthogonal case: moments of a single coefficient.
    println!("orthogonal integrals:");
    for (desc, i, j, n) in [
        ("u11^2 at n=2", vec![1, 1], vec![1, 1], 2),
        ("u11^4 at n=2", vec![1; 4], vec![1; 4], 2),
        ("u11^4 at n=5", vec![1; 4], vec![1; 4], 5),
        ("u11^3 at n=2 (odd, vanishes)", vec![1; 3], vec![1; 3], 2),
        ("u11 u12 u21 u22 at n=2", vec![1, 1, 2, 2], vec![1, 2, 1, 2], 2),
    ] {
        let value = integrate(&orthogonal(&i, &j, n)).unwrap();
        println!("  {desc}: {}", rational_to_string(&value));
    }

    // Unitary case: the word marks which letters are starred.
    println!("\nunitary integrals:");
    for (desc, word, i, j, n) in [
        ("v11 v11* at n=5", "ab", vec![1, 1], vec![1, 1], 5),
        ("v11 v11 (unbalanced, vanishes)", "aa", vec![1, 1], vec![1, 1], 5),
        ("v11 v11* v11 v11* at n=3", "abab", vec![1; 4], vec![1; 4], 3),
        ("v11 v11 v11* v11* at n=3", "aabb", vec![1; 4], vec![1; 4], 3),
    ] {
        let m = MonomialSpec::unitary(
            ColorWord::parse(word).unwrap(),
            MultiIndex::new(i),
            MultiIndex::new(j),
            n,
        )
        .unwrap();
        let value = integrate(&m).unwrap();
        println!("  {desc}: {}", rational_to_string(&value));
    }

    // Batches share one Weingarten table.
    println!("\nbatch over all fourth-order diagonal monomials at n=3:");
    let mut batch = Vec::new();
    for a in 1..=3u64 {
        for b in 1..=3u64 {
            let idx = vec![a, a, b, b];
            batch.push(orthogonal(&idx, &idx, 3));
        }
    }
    let values = integrate_batch(&batch).unwrap();
    for (m, v) in batch.iter().zip(&values) {
        println!(
            "  i = j = {}: {}",
            m.row_index(),
            rational_to_string(v)
        );
    }
}
