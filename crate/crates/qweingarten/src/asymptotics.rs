//! The `1/n` expansion of the Weingarten matrix via loop-distance paths.
//!
//! Since the rescaled Gram matrix is the entry-wise exponential
//! `n^(-d(p, q))` of the loop-distance matrix, its inverse expands as a
//! Neumann series whose terms are walks on the diagram set: the coefficient
//! of `n^-d` in `n^k W_kn(p, q)` is the signed count, by parity of length,
//! of all paths from `p` to `q` of total distance `d`. Summing over all
//! endpoint pairs gives the moment expansion of the rescaled single
//! coefficient, whose orders 0 and 1 are the Catalan generating series and
//! minus the neighbor-count series; both admit closed forms in
//! `sqrt(1 - 4 z^2)` that this module expands exactly for cross-checking.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::diagrams::{enumerate_pairings, loop_distance, DiagramError, Pairing};
use crate::exactalg::{InverseNSeries, PowerSeries};

/// Default cap on the number of paths a single enumeration may produce.
pub const DEFAULT_MAX_PATHS: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AsymptoticsError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("path enumeration exceeded the budget of {budget} paths")]
    PathBudget { budget: usize },
    #[error("diagram does not belong to the half-size {half_size} basis")]
    UnknownDiagram { half_size: usize },
    #[error("consecutive path nodes must be distinct (position {0})")]
    RepeatedNode(usize),
    #[error("path nodes have mixed sizes (position {0})")]
    MixedSizes(usize),
    #[error("empty node list does not describe a path")]
    EmptyPath,
    #[error("series order in z must be even, got {0}")]
    OddZOrder(usize),
}

/// A walk on the diagram set with distinct consecutive nodes. A length-0
/// path is a single point at distance 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramPath {
    nodes: Vec<Pairing>,
    distance: usize,
}

impl DiagramPath {
    pub fn new(nodes: Vec<Pairing>) -> Result<Self, AsymptoticsError> {
        if nodes.is_empty() {
            return Err(AsymptoticsError::EmptyPath);
        }
        let mut distance = 0;
        for (i, pair) in nodes.windows(2).enumerate() {
            if pair[0].len() != pair[1].len() {
                return Err(AsymptoticsError::MixedSizes(i + 1));
            }
            if pair[0] == pair[1] {
                return Err(AsymptoticsError::RepeatedNode(i + 1));
            }
            distance += loop_distance(&pair[0], &pair[1])?;
        }
        Ok(DiagramPath { nodes, distance })
    }

    pub fn nodes(&self) -> &[Pairing] {
        &self.nodes
    }

    /// Number of steps, the length `l(P)`.
    pub fn length(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Total loop distance along the path.
    pub fn distance(&self) -> usize {
        self.distance
    }
}

/// The diagram set of one half-size together with its loop-distance matrix,
/// the arena for all path enumeration.
#[derive(Debug, Clone)]
pub struct DiagramGraph {
    half_size: usize,
    basis: Vec<Pairing>,
    dist: Vec<Vec<usize>>,
}

impl DiagramGraph {
    pub fn new(half_size: usize) -> Result<Self, AsymptoticsError> {
        let basis = enumerate_pairings(half_size)?;
        let dist = basis
            .iter()
            .map(|p| {
                basis
                    .iter()
                    .map(|q| loop_distance(p, q).expect("basis diagrams share a size"))
                    .collect()
            })
            .collect();
        Ok(DiagramGraph {
            half_size,
            basis,
            dist,
        })
    }

    pub fn half_size(&self) -> usize {
        self.half_size
    }

    pub fn basis(&self) -> &[Pairing] {
        &self.basis
    }

    /// Number of diagrams, the dimension of the Gram matrix.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn distance(&self, p: usize, q: usize) -> usize {
        self.dist[p][q]
    }

    pub fn index_of(&self, p: &Pairing) -> Result<usize, AsymptoticsError> {
        self.basis
            .binary_search(p)
            .map_err(|_| AsymptoticsError::UnknownDiagram {
                half_size: self.half_size,
            })
    }

    /// All paths from `from` to `to` of total distance at most
    /// `max_distance`, depth-first in canonical basis order. Finite because
    /// every step has distance at least 1. The triangle inequality prunes
    /// branches that can no longer reach `to` within budget.
    pub fn enumerate_paths(
        &self,
        from: usize,
        to: usize,
        max_distance: usize,
    ) -> Result<Vec<DiagramPath>, AsymptoticsError> {
        self.enumerate_paths_with_limit(from, to, max_distance, DEFAULT_MAX_PATHS)
    }

    pub fn enumerate_paths_with_limit(
        &self,
        from: usize,
        to: usize,
        max_distance: usize,
        max_paths: usize,
    ) -> Result<Vec<DiagramPath>, AsymptoticsError> {
        let mut paths = Vec::new();
        let mut stack = vec![from];
        self.dfs_collect(&mut stack, to, 0, max_distance, max_paths, &mut paths)?;
        Ok(paths)
    }

    fn dfs_collect(
        &self,
        stack: &mut Vec<usize>,
        to: usize,
        used: usize,
        max_distance: usize,
        max_paths: usize,
        paths: &mut Vec<DiagramPath>,
    ) -> Result<(), AsymptoticsError> {
        let current = *stack.last().expect("stack never empty");
        if current == to {
            if paths.len() == max_paths {
                return Err(AsymptoticsError::PathBudget { budget: max_paths });
            }
            let nodes = stack.iter().map(|&i| self.basis[i].clone()).collect();
            paths.push(DiagramPath {
                nodes,
                distance: used,
            });
        }
        for next in 0..self.basis.len() {
            if next == current {
                continue;
            }
            let step = self.dist[current][next];
            if used + step + self.dist[next][to] > max_distance {
                continue;
            }
            stack.push(next);
            self.dfs_collect(stack, to, used + step, max_distance, max_paths, paths)?;
            stack.pop();
        }
        Ok(())
    }

    /// The expansion of `n^k W_kn(p, q)`: the coefficient of `n^-d` is the
    /// signed path count `sum_paths (-1)^length` over paths from `p` to `q`
    /// of distance `d`. Same walk as [`Self::enumerate_paths`], without
    /// materializing the paths.
    pub fn weingarten_series(
        &self,
        from: usize,
        to: usize,
        order: usize,
    ) -> Result<InverseNSeries, AsymptoticsError> {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        self.dfs_signed(from, to, 0, true, order, &mut coeffs);
        Ok(InverseNSeries::from_coeffs(coeffs))
    }

    fn dfs_signed(
        &self,
        current: usize,
        to: usize,
        used: usize,
        even_length: bool,
        order: usize,
        coeffs: &mut [BigRational],
    ) {
        if current == to {
            let unit = BigRational::one();
            if even_length {
                coeffs[used] += unit;
            } else {
                coeffs[used] -= unit;
            }
        }
        for next in 0..self.basis.len() {
            if next == current {
                continue;
            }
            let step = self.dist[current][next];
            if used + step + self.dist[next][to] > order {
                continue;
            }
            self.dfs_signed(next, to, used + step, !even_length, order, coeffs);
        }
    }

    /// Even/odd path counts per endpoint pair and distance, one depth-first
    /// sweep per start point.
    pub fn path_counts(&self, max_distance: usize) -> PathCountTable {
        let dim = self.basis.len();
        let mut even = vec![vec![0u64; max_distance + 1]; dim * dim];
        let mut odd = vec![vec![0u64; max_distance + 1]; dim * dim];
        for start in 0..dim {
            self.dfs_count(start, start, 0, true, max_distance, &mut even, &mut odd);
        }
        PathCountTable {
            half_size: self.half_size,
            dimension: dim,
            max_distance,
            even,
            odd,
        }
    }

    fn dfs_count(
        &self,
        start: usize,
        current: usize,
        used: usize,
        even_length: bool,
        max_distance: usize,
        even: &mut [Vec<u64>],
        odd: &mut [Vec<u64>],
    ) {
        let cell = start * self.basis.len() + current;
        if even_length {
            even[cell][used] += 1;
        } else {
            odd[cell][used] += 1;
        }
        for next in 0..self.basis.len() {
            if next == current {
                continue;
            }
            let step = self.dist[current][next];
            if used + step > max_distance {
                continue;
            }
            self.dfs_count(start, next, used + step, !even_length, max_distance, even, odd);
        }
    }

    /// The moment expansion of the rescaled single coefficient: coefficient
    /// `d` is the signed path count over all endpoint pairs, equivalently
    /// the sum of [`Self::weingarten_series`] over all pairs.
    pub fn moment_series(&self, order: usize) -> InverseNSeries {
        let counts = self.path_counts(order);
        let coeffs = (0..=order)
            .map(|d| BigRational::from_integer(BigInt::from(counts.signed_total(d))))
            .collect();
        InverseNSeries::from_coeffs(coeffs)
    }
}

/// Counts of even- and odd-length paths of each total distance, per ordered
/// endpoint pair of one diagram set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountTable {
    half_size: usize,
    dimension: usize,
    max_distance: usize,
    even: Vec<Vec<u64>>,
    odd: Vec<Vec<u64>>,
}

impl PathCountTable {
    pub fn half_size(&self) -> usize {
        self.half_size
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn max_distance(&self) -> usize {
        self.max_distance
    }

    pub fn even_count(&self, from: usize, to: usize, distance: usize) -> u64 {
        self.even[from * self.dimension + to][distance]
    }

    pub fn odd_count(&self, from: usize, to: usize, distance: usize) -> u64 {
        self.odd[from * self.dimension + to][distance]
    }

    /// Total even-length paths of the given distance over all pairs.
    pub fn total_even(&self, distance: usize) -> u64 {
        self.even.iter().map(|row| row[distance]).sum()
    }

    /// Total odd-length paths of the given distance over all pairs.
    pub fn total_odd(&self, distance: usize) -> u64 {
        self.odd.iter().map(|row| row[distance]).sum()
    }

    /// `E_d - O_d` over all pairs.
    pub fn signed_total(&self, distance: usize) -> i128 {
        self.total_even(distance) as i128 - self.total_odd(distance) as i128
    }
}

/// All paths between two diagrams of the same half-size with total distance
/// at most `max_distance`.
pub fn enumerate_paths(
    k: usize,
    from: &Pairing,
    to: &Pairing,
    max_distance: usize,
) -> Result<Vec<DiagramPath>, AsymptoticsError> {
    let graph = DiagramGraph::new(k)?;
    let from = graph.index_of(from)?;
    let to = graph.index_of(to)?;
    graph.enumerate_paths(from, to, max_distance)
}

/// Truncated expansion of `n^k W_kn(p, q)` in powers of `n^-1`.
pub fn weingarten_series(
    k: usize,
    from: &Pairing,
    to: &Pairing,
    order: usize,
) -> Result<InverseNSeries, AsymptoticsError> {
    let graph = DiagramGraph::new(k)?;
    let from = graph.index_of(from)?;
    let to = graph.index_of(to)?;
    graph.weingarten_series(from, to, order)
}

/// Truncated expansion of `n^k` times the `2k`-th moment of a single
/// coefficient.
pub fn moment_series(k: usize, order: usize) -> Result<InverseNSeries, AsymptoticsError> {
    Ok(DiagramGraph::new(k)?.moment_series(order))
}

/// `sqrt(1 - 4 z^2)` as an exact power series, via the generalized binomial
/// series: the coefficient of `z^(2m)` is `binom(1/2, m) (-4)^m`.
fn sqrt_one_minus_four_z2(order: usize) -> PowerSeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut binom = BigRational::one(); // binom(1/2, 0)
    let mut power = BigRational::one(); // (-4)^0
    let minus_four = BigRational::from_integer(BigInt::from(-4));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut m = 0usize;
    loop {
        if 2 * m > order {
            break;
        }
        coeffs[2 * m] = &binom * &power;
        m += 1;
        // binom(1/2, m) = binom(1/2, m-1) * (1/2 - (m-1)) / m
        let step = (&half - BigRational::from_integer(BigInt::from(m as i64 - 1)))
            / BigRational::from_integer(BigInt::from(m as i64));
        binom *= step;
        power *= &minus_four;
    }
    PowerSeries::from_coeffs(coeffs)
}

/// The Catalan generating series `C(z) = 2 / (1 + sqrt(1 - 4 z^2))`, whose
/// coefficient at `z^(2k)` is the Catalan number `C_k`.
pub fn catalan_series(order: usize) -> PowerSeries {
    let sqrt = sqrt_one_minus_four_z2(order);
    let denom = PowerSeries::one(order).add(&sqrt);
    denom
        .reciprocal()
        .expect("1 + sqrt(1 - 4 z^2) has constant term 2")
        .scale(&BigRational::from_integer(BigInt::from(2)))
}

/// The neighbor generating series
/// `N(z) = 32 z^4 / ((1 + sqrt(1 - 4 z^2))^4 sqrt(1 - 4 z^2))`, whose
/// coefficient at `z^(2k)` counts ordered pairs of diagrams at loop
/// distance 1.
pub fn neighbor_series(order: usize) -> PowerSeries {
    let sqrt = sqrt_one_minus_four_z2(order);
    let one_plus = PowerSeries::one(order).add(&sqrt);
    let denom = one_plus.pow(4).mul(&sqrt);
    let inv = denom
        .reciprocal()
        .expect("denominator has constant term 16");
    PowerSeries::monomial(BigRational::from_integer(BigInt::from(32)), 4, order).mul(&inv)
}

/// The two computed orders of the Stieltjes-transform expansion of the
/// rescaled single coefficient: the coefficient of `z^(2k)` is the
/// truncated series `C_k - N_k n^-1` (or just `C_k` at order zero in
/// `n^-1`). Odd powers of `z` carry the zero series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StieltjesExpansion {
    coeffs: Vec<InverseNSeries>,
}

impl StieltjesExpansion {
    /// Truncation order in `z`.
    pub fn z_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Truncation order in `n^-1` of each coefficient.
    pub fn n_order(&self) -> usize {
        self.coeffs[0].order()
    }

    /// Coefficient of `z^power` as a truncated series in `n^-1`.
    pub fn coeff(&self, power: usize) -> &InverseNSeries {
        &self.coeffs[power]
    }
}

/// Assemble the formal Stieltjes expansion through `z^order`: the Catalan
/// term plus, when `include_second_order` is set, the `n^-1` neighbor term
/// with its negative sign (distance-1 paths have odd length). The order in
/// `z` must be even.
pub fn stieltjes_series(
    order: usize,
    include_second_order: bool,
) -> Result<StieltjesExpansion, AsymptoticsError> {
    if order % 2 != 0 {
        return Err(AsymptoticsError::OddZOrder(order));
    }
    let n_order = if include_second_order { 1 } else { 0 };
    let catalan = catalan_series(order);
    let neighbor = neighbor_series(order);
    let coeffs = (0..=order)
        .map(|j| {
            let mut c = vec![catalan.coeff(j).clone()];
            if include_second_order {
                c.push(-neighbor.coeff(j));
            }
            debug_assert_eq!(c.len(), n_order + 1);
            InverseNSeries::from_coeffs(c)
        })
        .collect();
    Ok(StieltjesExpansion { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn single_point_path_at_distance_zero() {
        let graph = DiagramGraph::new(2).unwrap();
        let paths = graph.enumerate_paths(0, 0, 0).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].length(), 0);
        assert_eq!(paths[0].distance(), 0);
        // No path reaches a different diagram within distance 0.
        assert!(graph.enumerate_paths(0, 1, 0).unwrap().is_empty());
    }

    #[test]
    fn two_diagram_set_has_one_short_path() {
        let graph = DiagramGraph::new(2).unwrap();
        let paths = graph.enumerate_paths(0, 1, 1).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].length(), 1);
        assert_eq!(paths[0].distance(), 1);
    }

    #[test]
    fn paths_match_breadth_first_oracle() {
        for k in 1..=3 {
            let graph = DiagramGraph::new(k).unwrap();
            for max_d in 0..=3 {
                for from in 0..graph.dimension() {
                    for to in 0..graph.dimension() {
                        let fast: Vec<Vec<usize>> = graph
                            .enumerate_paths(from, to, max_d)
                            .unwrap()
                            .iter()
                            .map(|p| {
                                p.nodes()
                                    .iter()
                                    .map(|node| graph.index_of(node).unwrap())
                                    .collect()
                            })
                            .collect();
                        let mut slow =
                            oracles::breadth_first_paths(graph.basis(), from, to, max_d).unwrap();
                        let mut fast_sorted = fast.clone();
                        fast_sorted.sort();
                        slow.sort();
                        assert_eq!(fast_sorted, slow, "k={k} d={max_d} {from}->{to}");
                    }
                }
            }
        }
    }

    #[test]
    fn path_budget_is_enforced() {
        let graph = DiagramGraph::new(2).unwrap();
        assert!(matches!(
            graph.enumerate_paths_with_limit(0, 0, 6, 3).unwrap_err(),
            AsymptoticsError::PathBudget { budget: 3 }
        ));
    }

    #[test]
    fn path_constructor_validates() {
        let d2 = enumerate_pairings(2).unwrap();
        assert!(DiagramPath::new(vec![d2[0].clone(), d2[0].clone()]).is_err());
        assert!(DiagramPath::new(vec![]).is_err());
        let ok = DiagramPath::new(vec![d2[0].clone(), d2[1].clone(), d2[0].clone()]).unwrap();
        assert_eq!(ok.length(), 2);
        assert_eq!(ok.distance(), 2);
    }

    #[test]
    fn weingarten_series_on_the_diagonal_starts_at_one() {
        for k in 1..=3 {
            let graph = DiagramGraph::new(k).unwrap();
            for p in 0..graph.dimension() {
                let s = graph.weingarten_series(p, p, 2).unwrap();
                assert_eq!(s.coeff(0), &rat(1, 1), "k={k} p={p}");
            }
        }
    }

    #[test]
    fn weingarten_series_off_diagonal_half_size_two() {
        let graph = DiagramGraph::new(2).unwrap();
        let s = graph.weingarten_series(0, 1, 3).unwrap();
        // One distance-1 path of odd length, nothing at distance 0 or 2,
        // and the single back-and-forth walk at distance 3.
        assert_eq!(s.coeffs(), &[rat(0, 1), rat(-1, 1), rat(0, 1), rat(-1, 1)]);
    }

    #[test]
    fn truncations_approach_exact_weingarten_entries() {
        // Evaluated at concrete n, the order-D truncation is within the
        // first omitted order of the exact rescaled Weingarten entry.
        use crate::weingarten::{build_weingarten, GramSpec};
        use num_traits::Signed;
        for k in 1..=3usize {
            let graph = DiagramGraph::new(k).unwrap();
            for n in [5u64, 10] {
                let table = build_weingarten(&GramSpec::orthogonal(k, n)).unwrap();
                let scale = crate::exactalg::big_rational_pow(n, k);
                for order in 1..=3usize {
                    for p in 0..graph.dimension() {
                        for q in 0..graph.dimension() {
                            let exact = table.weingarten_entry(p, q) * &scale;
                            let series = graph.weingarten_series(p, q, order).unwrap();
                            let gap = (series.eval_at(n) - exact).abs();
                            let budget = rat(10, 1)
                                * BigRational::new(BigInt::one(), BigInt::from(n))
                                    .pow(order as i32 + 1);
                            assert!(gap < budget, "k={k} n={n} D={order} ({p},{q})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn truncation_at_huge_n_is_sharp() {
        // At n = 10^6 the order-D truncation pins the exact rescaled entry
        // to within 10 n^-(D+1); the entries have magnitude at most 1, so
        // this doubles as a relative bound.
        use crate::weingarten::{build_weingarten, GramSpec};
        use num_traits::Signed;
        let n = 1_000_000u64;
        let order = 2;
        let budget = rat(10, 1)
            * BigRational::new(BigInt::one(), BigInt::from(n)).pow(order as i32 + 1);
        for k in 1..=3usize {
            let graph = DiagramGraph::new(k).unwrap();
            let table = build_weingarten(&GramSpec::orthogonal(k, n)).unwrap();
            let scale = crate::exactalg::big_rational_pow(n, k);
            for p in 0..graph.dimension() {
                for q in 0..graph.dimension() {
                    let exact = table.weingarten_entry(p, q) * &scale;
                    let series = graph.weingarten_series(p, q, order).unwrap();
                    let gap = (series.eval_at(n) - exact).abs();
                    assert!(gap <= budget, "k={k} ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn moment_series_leading_coefficients() {
        let catalan = [1i128, 1, 2, 5, 14, 42];
        let neighbors = [0i128, 0, 2, 12, 56, 240];
        for k in 0..=4usize {
            let s = moment_series(k, 1).unwrap();
            assert_eq!(s.coeff(0), &rat(catalan[k] as i64, 1), "d=0 at k={k}");
            assert_eq!(s.coeff(1), &rat(-neighbors[k] as i64, 1), "d=1 at k={k}");
        }
    }

    #[test]
    fn moment_series_equals_pairwise_sum() {
        for k in 1..=3usize {
            let graph = DiagramGraph::new(k).unwrap();
            let order = 3;
            let mut total = InverseNSeries::zero(order);
            for p in 0..graph.dimension() {
                for q in 0..graph.dimension() {
                    total = total.add(&graph.weingarten_series(p, q, order).unwrap());
                }
            }
            assert_eq!(total, graph.moment_series(order), "k={k}");
        }
    }

    #[test]
    fn path_count_table_invariants() {
        for k in 0..=3usize {
            let graph = DiagramGraph::new(k).unwrap();
            let counts = graph.path_counts(2);
            // Only length-0 paths have distance 0, one per diagram.
            assert_eq!(counts.total_even(0) as usize, graph.dimension());
            assert_eq!(counts.total_odd(0), 0);
            for p in 0..graph.dimension() {
                assert_eq!(counts.even_count(p, p, 0), 1);
            }
            // Distance-1 paths are single steps between neighbors.
            let neighbors = (0..graph.dimension())
                .flat_map(|p| (0..graph.dimension()).map(move |q| (p, q)))
                .filter(|&(p, q)| graph.distance(p, q) == 1)
                .count() as u64;
            assert_eq!(counts.total_odd(1), neighbors);
            assert_eq!(counts.total_even(1), 0);
        }
    }

    #[test]
    fn neighbor_pairs_differ_in_exactly_two_strings() {
        // Distance 1 is equivalent to sharing all but two strings; the four
        // exceptional strings close up into a single circle. Half-sizes
        // below 2 have no distance-1 pairs at all.
        for k in 2..=4usize {
            let graph = DiagramGraph::new(k).unwrap();
            for p in 0..graph.dimension() {
                for q in 0..graph.dimension() {
                    let shared = graph.basis()[p]
                        .strings()
                        .filter(|s| {
                            let (a, b) = *s;
                            graph.basis()[q].partner(a) == b
                        })
                        .count();
                    let claim = graph.distance(p, q) == 1;
                    assert_eq!(claim, shared == k - 2 && p != q, "k={k} ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn catalan_series_coefficients() {
        let c = catalan_series(12);
        let expected = [1i64, 1, 2, 5, 14, 42, 132];
        for (k, &ck) in expected.iter().enumerate() {
            assert_eq!(c.coeff(2 * k), &rat(ck, 1), "k={k}");
            if 2 * k + 1 <= c.order() {
                assert!(c.coeff(2 * k + 1).is_zero());
            }
        }
    }

    #[test]
    fn neighbor_series_starts_at_two_z_fourth() {
        let n = neighbor_series(8);
        assert!(n.coeff(0).is_zero());
        assert!(n.coeff(2).is_zero());
        assert_eq!(n.coeff(4), &rat(2, 1));
        assert_eq!(n.coeff(6), &rat(12, 1));
        assert_eq!(n.coeff(8), &rat(56, 1));
    }

    #[test]
    fn neighbor_series_satisfies_functional_equation() {
        // N(z) = 2 z^4 C(z)^3 (C(z) + z C'(z)) through z^12.
        let order = 12;
        let c = catalan_series(order);
        let n = neighbor_series(order);
        let rhs = PowerSeries::monomial(rat(2, 1), 4, order)
            .mul(&c.pow(3))
            .mul(&c.add(&c.z_derivative()));
        assert_eq!(n, rhs);
    }

    #[test]
    fn stieltjes_expansion_assembles_both_orders() {
        let first = stieltjes_series(10, false).unwrap();
        assert_eq!(first.n_order(), 0);
        let both = stieltjes_series(10, true).unwrap();
        assert_eq!(both.n_order(), 1);
        assert_eq!(both.z_order(), 10);
        for k in 0..=5usize {
            let c = catalan_series(10);
            assert_eq!(both.coeff(2 * k).coeff(0), c.coeff(2 * k));
            assert_eq!(first.coeff(2 * k).coeff(0), c.coeff(2 * k));
            let n = neighbor_series(10);
            assert_eq!(both.coeff(2 * k).coeff(1), &(-n.coeff(2 * k)));
        }
        // Odd powers vanish identically.
        assert!(both.coeff(3).coeffs().iter().all(|c| c.is_zero()));
        assert!(stieltjes_series(7, true).is_err());
    }

    #[test]
    fn stieltjes_matches_path_counts() {
        // The closed forms agree with the combinatorial moment expansion.
        for k in 0..=5usize {
            let combinatorial = moment_series(k, 1).unwrap();
            let assembled = stieltjes_series(12, true).unwrap();
            assert_eq!(assembled.coeff(2 * k), &combinatorial, "k={k}");
        }
    }

    #[test]
    fn free_function_wrappers_agree_with_graph_methods() {
        let d2 = enumerate_pairings(2).unwrap();
        let graph = DiagramGraph::new(2).unwrap();
        assert_eq!(
            enumerate_paths(2, &d2[0], &d2[1], 2).unwrap(),
            graph.enumerate_paths(0, 1, 2).unwrap()
        );
        assert_eq!(
            weingarten_series(2, &d2[0], &d2[1], 3).unwrap(),
            graph.weingarten_series(0, 1, 3).unwrap()
        );
        let other = enumerate_pairings(3).unwrap();
        assert!(matches!(
            enumerate_paths(2, &other[0], &d2[0], 1).unwrap_err(),
            AsymptoticsError::Diagram(_) | AsymptoticsError::UnknownDiagram { .. }
        ));
    }
}
