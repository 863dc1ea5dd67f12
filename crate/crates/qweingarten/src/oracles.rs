//! Independent reference implementations for the verification suites.
//!
//! Everything here is deliberately naive and shares no code with the fast
//! paths it cross-checks: pairings come from filtering all involutions
//! instead of the recursive enumerator, loops are traced string by string
//! instead of union-find, and paths are grown breadth-first instead of the
//! pruned depth-first search. Keep it that way; a shared helper would make
//! the checks circular.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::diagrams::{ColorWord, DiagramError, Pairing};

/// Cap on the point count for the filter-all-involutions oracles;
/// 16 points means 2,027,025 involutions, still fine for a test run.
pub const MAX_BRUTE_FORCE_POINTS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{points} points exceed the brute-force limit {limit}")]
    TooManyPoints { points: usize, limit: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// What a reference moment sequence describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentLabel {
    Semicircle,
    Circular,
    Uniform01,
    Catalan,
}

/// A sequence of exact moments indexed by power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    label: MomentLabel,
    values: Vec<BigRational>,
}

impl MomentSequence {
    pub fn label(&self) -> MomentLabel {
        self.label
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, power: usize) -> &BigRational {
        &self.values[power]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Catalan number `C_k = binom(2k, k) / (k + 1)` by direct binomial
/// evaluation.
pub fn catalan_number(k: usize) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= BigInt::from((2 * k - i) as u64);
        den *= BigInt::from((i + 1) as u64);
    }
    // binom(2k, k) is divisible by k + 1.
    num / den / BigInt::from((k + 1) as u64)
}

/// Moments of the standard semicircle law: even moment `2k` is the Catalan
/// number `C_k`, odd moments vanish. Indexed by power `0..=max_power`.
pub fn semicircle_moments(max_power: usize) -> MomentSequence {
    let values = (0..=max_power)
        .map(|m| {
            if m % 2 == 0 {
                BigRational::from_integer(catalan_number(m / 2))
            } else {
                BigRational::from_integer(BigInt::from(0))
            }
        })
        .collect();
    MomentSequence {
        label: MomentLabel::Semicircle,
        values,
    }
}

/// Moments of the uniform measure on `[0, 1]`: `k` maps to `1 / (k + 1)`.
pub fn uniform01_moments(max_k: usize) -> MomentSequence {
    let values = (0..=max_k)
        .map(|k| BigRational::new(BigInt::from(1), BigInt::from((k + 1) as u64)))
        .collect();
    MomentSequence {
        label: MomentLabel::Uniform01,
        values,
    }
}

/// All perfect matchings of `points` elements as 0-based partner arrays,
/// by matching the first free point with every later free point. There are
/// `(points - 1)!!` of them; crossings are not filtered here.
fn all_involutions(points: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut partner = vec![usize::MAX; points];
    fn recurse(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let first = match partner.iter().position(|&p| p == usize::MAX) {
            Some(i) => i,
            None => {
                out.push(partner.clone());
                return;
            }
        };
        for second in first + 1..partner.len() {
            if partner[second] != usize::MAX {
                continue;
            }
            partner[first] = second;
            partner[second] = first;
            recurse(partner, out);
            partner[first] = usize::MAX;
            partner[second] = usize::MAX;
        }
    }
    if points % 2 == 0 {
        recurse(&mut partner, &mut out);
    }
    out
}

fn has_crossing(partner: &[usize]) -> bool {
    // Quadratic scan for interleaved strings a < b < c < d with (a, c) and
    // (b, d) paired.
    for a in 0..partner.len() {
        let c = partner[a];
        if c <= a {
            continue;
        }
        for b in a + 1..c {
            let d = partner[b];
            if d > c {
                return true;
            }
        }
    }
    false
}

/// Non-crossing pairings of `2k` points by filtering all involutions, in
/// the same canonical order as the fast enumerator.
pub fn noncrossing_pairings_by_filter(k: usize) -> Result<Vec<Pairing>, OracleError> {
    let points = 2 * k;
    if points > MAX_BRUTE_FORCE_POINTS {
        return Err(OracleError::TooManyPoints {
            points,
            limit: MAX_BRUTE_FORCE_POINTS,
        });
    }
    let mut arrays: Vec<Vec<usize>> = all_involutions(points)
        .into_iter()
        .filter(|partner| !has_crossing(partner))
        .collect();
    arrays.sort();
    arrays
        .into_iter()
        .map(|partner| {
            let one_based: Vec<usize> = partner.iter().map(|&p| p + 1).collect();
            Ok(Pairing::from_partner_one_based(&one_based)?)
        })
        .collect()
}

/// The `a`-th joint moment of a circular variable: the number of
/// non-crossing pairings of the letters of `a` joining each alpha to a
/// beta, counted by brute force over all involutions.
pub fn circular_star_moments(word: &ColorWord) -> Result<u64, OracleError> {
    if word.len() > MAX_BRUTE_FORCE_POINTS {
        return Err(OracleError::TooManyPoints {
            points: word.len(),
            limit: MAX_BRUTE_FORCE_POINTS,
        });
    }
    let count = all_involutions(word.len())
        .into_iter()
        .filter(|partner| !has_crossing(partner))
        .filter(|partner| {
            partner
                .iter()
                .enumerate()
                .all(|(i, &p)| word.letter(i) != word.letter(p))
        })
        .count();
    Ok(count as u64)
}

/// Loop count by explicit tracing: start at an unvisited point, alternately
/// follow the string of `p` and the string of `q` until the walk closes,
/// repeat. Independent of the union-find implementation.
pub fn brute_force_loops(p: &Pairing, q: &Pairing) -> Result<usize, DiagramError> {
    if p.len() != q.len() {
        return Err(DiagramError::SizeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let mut visited = vec![false; p.len()];
    let mut loops = 0;
    for start in 0..p.len() {
        if visited[start] {
            continue;
        }
        loops += 1;
        let mut current = start;
        loop {
            visited[current] = true;
            let after_p = p.partner(current);
            visited[after_p] = true;
            current = q.partner(after_p);
            if current == start {
                break;
            }
        }
    }
    Ok(loops)
}

/// All paths between two diagrams with total loop distance at most
/// `max_distance`, grown breadth-first and returned as node-index
/// sequences. Distances are measured with [`brute_force_loops`], keeping
/// this oracle fully independent of the depth-first enumerator.
pub fn breadth_first_paths(
    basis: &[Pairing],
    from: usize,
    to: usize,
    max_distance: usize,
) -> Result<Vec<Vec<usize>>, OracleError> {
    let dim = basis.len();
    let mut dist = vec![vec![0usize; dim]; dim];
    for (i, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            dist[i][j] = p.half_size() - brute_force_loops(p, q)?;
        }
    }
    let mut complete = Vec::new();
    let mut frontier = vec![(vec![from], 0usize)];
    while let Some((path, used)) = frontier.pop() {
        let last = *path.last().expect("paths are nonempty");
        if last == to {
            complete.push(path.clone());
        }
        for next in 0..dim {
            if next == last {
                continue;
            }
            let total = used + dist[last][next];
            if total > max_distance {
                continue;
            }
            let mut extended = path.clone();
            extended.push(next);
            frontier.push((extended, total));
        }
    }
    complete.sort();
    Ok(complete)
}
