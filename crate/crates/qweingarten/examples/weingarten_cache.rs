//! Persist Weingarten tables as checksummed JSON records and watch the
//! cache reject tampered files.
//!
//! ```bash
//! cargo run -p qweingarten --example weingarten_cache
//! ```

use qweingarten::weingarten::{cache, GramSpec};

fn main() {
    let dir = std::env::temp_dir().join("qweingarten-cache-example");
    let _ = std::fs::remove_dir_all(&dir);
    let spec = GramSpec::orthogonal(4, 3);

    // Cold call computes and writes; warm call reads the file back.
    let (cold, status) = cache::load_or_build(Some(&dir), &spec).unwrap();
    println!("first build: {status}");
    let (warm, status) = cache::load_or_build(Some(&dir), &spec).unwrap();
    println!("second build: {status}");
    println!("tables identical: {}", cold == warm);

    let path = dir.join(spec.cache_file_name());
    println!("cache file: {}", path.display());
    let size = std::fs::metadata(&path).unwrap().len();
    println!("record size: {size} bytes");

    // Flip one digit inside the record; the checksum catches it and the
    // table is recomputed instead of trusted.
    let contents = std::fs::read_to_string(&path).unwrap();
    let poisoned = contents.replacen("81/1", "82/1", 1);
    std::fs::write(&path, poisoned).unwrap();
    match cache::load(&dir, &spec) {
        Err(err) => println!("tampered load rejected: {err}"),
        Ok(_) => println!("unexpected: tampered record accepted"),
    }
    let (fixed, status) = cache::load_or_build(Some(&dir), &spec).unwrap();
    println!("rebuild after tampering: {status}");
    println!("recomputed table is correct: {}", fixed == cold);

    let _ = std::fs::remove_dir_all(&dir);
}
