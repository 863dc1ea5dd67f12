//! Haar-state integration of generator monomials, exactly.
//!
//! A monomial is a product of matrix coefficients of the fundamental
//! corepresentation, described by a color word (which letters are starred,
//! unitary case only), a row multi-index and a column multi-index. Its Haar
//! integral is the double sum of Weingarten entries over the pairs of
//! diagrams compatible with both indices; odd-length orthogonal monomials
//! and unbalanced unitary words integrate to zero outright.
//!
//! The truncated character `u_11 + ... + u_ss` has even moments given by
//! the trace formula `Tr(W_kn G_ks)`, which this module evaluates without
//! expanding the power into monomials; the expansion route is kept as a
//! consistency check in the verification suites.

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::diagrams::{delta_symbol, ColorWord, DiagramError, MultiIndex, Pairing};
use crate::exactalg::ExactAlgError;
use crate::weingarten::{
    build_weingarten, gram_over_basis, GramSpec, WeingartenError, WeingartenTable,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntegratorError {
    #[error("row index has length {rows}, column index has length {cols}, word has length {word}")]
    IndexLengthMismatch {
        word: usize,
        rows: usize,
        cols: usize,
    },
    #[error("index entry out of range: {0}")]
    IndexOutOfRange(#[source] DiagramError),
    #[error("dimension parameter n = {0} is out of range, need n >= 2")]
    DimensionTooSmall(u64),
    #[error("truncation rank s = {s} must satisfy 1 <= s <= n = {n}")]
    TruncationRank { s: u64, n: u64 },
    #[error("monomial does not match the supplied table ({expected}, got {found})")]
    TableMismatch { expected: String, found: String },
    #[error(transparent)]
    Weingarten(#[from] WeingartenError),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Which quantum group the monomial lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    Orthogonal,
    Unitary,
}

impl Case {
    pub fn label(self) -> &'static str {
        match self {
            Case::Orthogonal => "orthogonal",
            Case::Unitary => "unitary",
        }
    }
}

/// A generator monomial `prod_t v^(a_t)_(i_t j_t)` at dimension `n`.
///
/// In the unitary case the word letter decides between the generator
/// (alpha) and its adjoint (beta). The orthogonal case accepts any word but
/// treats every letter as the self-adjoint generator; only its length
/// matters there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSpec {
    case: Case,
    word: ColorWord,
    row_index: MultiIndex,
    col_index: MultiIndex,
    n: u64,
}

impl MonomialSpec {
    /// Orthogonal monomial `u_(i_1 j_1) ... u_(i_l j_l)`.
    pub fn orthogonal(
        row_index: MultiIndex,
        col_index: MultiIndex,
        n: u64,
    ) -> Result<Self, IntegratorError> {
        let word = ColorWord::all_alpha(row_index.len());
        Self::with_case(Case::Orthogonal, word, row_index, col_index, n)
    }

    /// Unitary monomial with the starred pattern given by `word`.
    pub fn unitary(
        word: ColorWord,
        row_index: MultiIndex,
        col_index: MultiIndex,
        n: u64,
    ) -> Result<Self, IntegratorError> {
        Self::with_case(Case::Unitary, word, row_index, col_index, n)
    }

    pub fn with_case(
        case: Case,
        word: ColorWord,
        row_index: MultiIndex,
        col_index: MultiIndex,
        n: u64,
    ) -> Result<Self, IntegratorError> {
        if word.len() != row_index.len() || word.len() != col_index.len() {
            return Err(IntegratorError::IndexLengthMismatch {
                word: word.len(),
                rows: row_index.len(),
                cols: col_index.len(),
            });
        }
        if n < 2 {
            return Err(IntegratorError::DimensionTooSmall(n));
        }
        row_index
            .check_range(n)
            .map_err(IntegratorError::IndexOutOfRange)?;
        col_index
            .check_range(n)
            .map_err(IntegratorError::IndexOutOfRange)?;
        Ok(MonomialSpec {
            case,
            word,
            row_index,
            col_index,
            n,
        })
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn word(&self) -> &ColorWord {
        &self.word
    }

    pub fn row_index(&self) -> &MultiIndex {
        &self.row_index
    }

    pub fn col_index(&self) -> &MultiIndex {
        &self.col_index
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `true` when the integral is zero for parity reasons alone: an odd
    /// orthogonal length or an unbalanced unitary word.
    pub fn vanishes_trivially(&self) -> bool {
        match self.case {
            Case::Orthogonal => self.word.len() % 2 != 0,
            Case::Unitary => !self.word.is_balanced(),
        }
    }

    /// The Gram/Weingarten spec whose table evaluates this monomial.
    pub fn gram_spec(&self) -> GramSpec {
        match self.case {
            Case::Orthogonal => GramSpec::orthogonal(self.word.len() / 2, self.n),
            Case::Unitary => GramSpec::unitary(self.word.clone(), self.n),
        }
    }
}

fn delta_vector(basis: &[Pairing], index: &MultiIndex) -> Result<Vec<bool>, DiagramError> {
    basis.iter().map(|p| delta_symbol(p, index)).collect()
}

/// Haar integral of a monomial, building (and discarding) the Weingarten
/// table it needs. Use [`integrate_with_table`] or [`integrate_batch`] to
/// amortize the inversion across many monomials.
pub fn integrate(monomial: &MonomialSpec) -> Result<BigRational, IntegratorError> {
    if monomial.vanishes_trivially() {
        return Ok(BigRational::zero());
    }
    let table = build_weingarten(&monomial.gram_spec())?;
    integrate_with_table(monomial, &table)
}

/// Haar integral using a prebuilt table for the monomial's spec.
pub fn integrate_with_table(
    monomial: &MonomialSpec,
    table: &WeingartenTable,
) -> Result<BigRational, IntegratorError> {
    if monomial.vanishes_trivially() {
        return Ok(BigRational::zero());
    }
    let expected = monomial.gram_spec();
    if table.spec() != &expected {
        return Err(IntegratorError::TableMismatch {
            expected: expected.to_string(),
            found: table.spec().to_string(),
        });
    }
    let basis = table.basis();
    let row_delta = delta_vector(basis, monomial.row_index())?;
    let col_delta = delta_vector(basis, monomial.col_index())?;
    let mut acc = BigRational::zero();
    for (p, &dp) in row_delta.iter().enumerate() {
        if !dp {
            continue;
        }
        for (q, &dq) in col_delta.iter().enumerate() {
            if !dq {
                continue;
            }
            acc += table.weingarten_entry(p, q);
        }
    }
    Ok(acc)
}

/// Integrate a batch of monomials sharing one Gram spec (same case, same
/// word for unitary / same length for orthogonal, same `n`), reusing a
/// single Weingarten table.
pub fn integrate_batch(monomials: &[MonomialSpec]) -> Result<Vec<BigRational>, IntegratorError> {
    let Some(first) = monomials.first() else {
        return Ok(Vec::new());
    };
    if first.vanishes_trivially() {
        // A shared spec means they all vanish; still validate uniformity.
        let spec = first.gram_spec();
        for m in monomials {
            if m.gram_spec() != spec {
                return Err(IntegratorError::TableMismatch {
                    expected: spec.to_string(),
                    found: m.gram_spec().to_string(),
                });
            }
        }
        return Ok(vec![BigRational::zero(); monomials.len()]);
    }
    let table = build_weingarten(&first.gram_spec())?;
    monomials
        .iter()
        .map(|m| integrate_with_table(m, &table))
        .collect()
}

/// Moments of the truncated character `o_sn = u_11 + ... + u_ss`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MomentQuery {
    s: u64,
    n: u64,
    power: u64,
}

impl MomentQuery {
    pub fn new(s: u64, n: u64, power: u64) -> Result<Self, IntegratorError> {
        if n < 2 {
            return Err(IntegratorError::DimensionTooSmall(n));
        }
        if s < 1 || s > n {
            return Err(IntegratorError::TruncationRank { s, n });
        }
        Ok(MomentQuery { s, n, power })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn power(&self) -> u64 {
        self.power
    }
}

/// Exact moment of the truncated character: `Tr(W_kn G_ks)` for even
/// powers `2k`, zero for odd powers.
pub fn truncated_moment(query: &MomentQuery) -> Result<BigRational, IntegratorError> {
    if query.power % 2 != 0 {
        return Ok(BigRational::zero());
    }
    let k = (query.power / 2) as usize;
    let table = build_weingarten(&GramSpec::orthogonal(k, query.n))?;
    truncated_moment_with_table(query, &table)
}

/// [`truncated_moment`] against a prebuilt orthogonal table for
/// `(power / 2, n)`.
pub fn truncated_moment_with_table(
    query: &MomentQuery,
    table: &WeingartenTable,
) -> Result<BigRational, IntegratorError> {
    if query.power % 2 != 0 {
        return Ok(BigRational::zero());
    }
    let k = (query.power / 2) as usize;
    let expected = GramSpec::orthogonal(k, query.n);
    if table.spec() != &expected {
        return Err(IntegratorError::TableMismatch {
            expected: expected.to_string(),
            found: table.spec().to_string(),
        });
    }
    let gram_s = gram_over_basis(table.basis(), query.s);
    Ok(table.weingarten().trace_product(&gram_s)?)
}

/// The free Wick count: how many diagrams are compatible with both
/// multi-indices. This is the limit of `n^k` times the monomial integral as
/// `n` grows, i.e. the joint moment of the limiting free (semi)circular
/// family. The word only selects the diagram set; no dimension is involved.
pub fn joint_moment_leading_order(
    case: Case,
    word: &ColorWord,
    row_index: &MultiIndex,
    col_index: &MultiIndex,
) -> Result<u64, IntegratorError> {
    if word.len() != row_index.len() || word.len() != col_index.len() {
        return Err(IntegratorError::IndexLengthMismatch {
            word: word.len(),
            rows: row_index.len(),
            cols: col_index.len(),
        });
    }
    let basis = match case {
        Case::Orthogonal => {
            if word.len() % 2 != 0 {
                return Ok(0);
            }
            crate::diagrams::enumerate_pairings(word.len() / 2)?
        }
        Case::Unitary => crate::diagrams::enumerate_colored_pairings(word)?,
    };
    let mut count = 0;
    for p in &basis {
        if delta_symbol(p, row_index)? && delta_symbol(p, col_index)? {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn orthogonal_monomial(i: &[u64], j: &[u64], n: u64) -> MonomialSpec {
        MonomialSpec::orthogonal(
            MultiIndex::new(i.to_vec()),
            MultiIndex::new(j.to_vec()),
            n,
        )
        .unwrap()
    }

    #[test]
    fn odd_length_orthogonal_integral_vanishes() {
        let m = orthogonal_monomial(&[1, 1, 1], &[1, 1, 1], 2);
        assert!(integrate(&m).unwrap().is_zero());
    }

    #[test]
    fn fourth_moment_of_a_coefficient_at_n_two() {
        let m = orthogonal_monomial(&[1; 4], &[1; 4], 2);
        assert_eq!(integrate(&m).unwrap(), rat(1, 3));
    }

    #[test]
    fn second_moment_of_a_coefficient_is_inverse_dimension() {
        for n in 2..=6 {
            let m = orthogonal_monomial(&[1, 1], &[1, 1], n);
            assert_eq!(integrate(&m).unwrap(), rat(1, n as i64));
        }
    }

    #[test]
    fn empty_monomial_integrates_to_one() {
        let m = orthogonal_monomial(&[], &[], 2);
        assert_eq!(integrate(&m).unwrap(), rat(1, 1));
    }

    #[test]
    fn unbalanced_unitary_word_vanishes() {
        let word = ColorWord::parse("aa").unwrap();
        let m = MonomialSpec::unitary(
            word,
            MultiIndex::new(vec![1, 1]),
            MultiIndex::new(vec![1, 1]),
            4,
        )
        .unwrap();
        assert!(integrate(&m).unwrap().is_zero());
    }

    #[test]
    fn unitary_second_moment_is_inverse_dimension() {
        for n in 2..=6 {
            let m = MonomialSpec::unitary(
                ColorWord::parse("ab").unwrap(),
                MultiIndex::new(vec![1, 1]),
                MultiIndex::new(vec![1, 1]),
                n,
            )
            .unwrap();
            assert_eq!(integrate(&m).unwrap(), rat(1, n as i64));
        }
    }

    #[test]
    fn integral_is_symmetric_in_row_and_column_indices() {
        let cases = [
            (vec![1, 2, 2, 1], vec![1, 1, 2, 2]),
            (vec![1, 1, 2, 2], vec![2, 2, 1, 1]),
            (vec![1, 2, 3, 3, 2, 1], vec![1, 1, 2, 2, 3, 3]),
        ];
        for (i, j) in cases {
            let n = 3;
            let a = integrate(&orthogonal_monomial(&i, &j, n)).unwrap();
            let b = integrate(&orthogonal_monomial(&j, &i, n)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn integral_is_invariant_under_relabeling() {
        // Conjugating by a permutation matrix fixes the Haar state, so
        // relabeling index values leaves integrals unchanged.
        let relabel = |v: &[u64]| -> Vec<u64> { v.iter().map(|&x| (x % 3) + 1).collect() };
        let tuples = [
            (vec![1, 1, 2, 2], vec![1, 1, 1, 1]),
            (vec![1, 2, 2, 1], vec![3, 3, 2, 2]),
            (vec![2, 2, 3, 3], vec![2, 3, 3, 2]),
        ];
        for (i, j) in tuples {
            let base = integrate(&orthogonal_monomial(&i, &j, 4)).unwrap();
            let moved = integrate(&orthogonal_monomial(&relabel(&i), &relabel(&j), 4)).unwrap();
            assert_eq!(base, moved);
        }
    }

    #[test]
    fn constant_index_integral_is_weingarten_entry_sum() {
        for (k, n) in [(1usize, 2u64), (2, 2), (2, 5), (3, 3)] {
            let table = build_weingarten(&GramSpec::orthogonal(k, n)).unwrap();
            let m = orthogonal_monomial(&vec![1; 2 * k], &vec![1; 2 * k], n);
            assert_eq!(
                integrate_with_table(&m, &table).unwrap(),
                table.weingarten().entry_sum()
            );
        }
    }

    #[test]
    fn batch_reuses_one_table_and_matches_single_calls() {
        let monomials = vec![
            orthogonal_monomial(&[1, 1, 2, 2], &[1, 1, 2, 2], 3),
            orthogonal_monomial(&[1, 2, 2, 1], &[1, 1, 1, 1], 3),
            orthogonal_monomial(&[3, 3, 3, 3], &[2, 2, 3, 3], 3),
        ];
        let batch = integrate_batch(&monomials).unwrap();
        for (m, b) in monomials.iter().zip(&batch) {
            assert_eq!(&integrate(m).unwrap(), b);
        }
        let mismatched = vec![
            orthogonal_monomial(&[1, 1], &[1, 1], 3),
            orthogonal_monomial(&[1, 1, 2, 2], &[1, 1, 2, 2], 3),
        ];
        assert!(matches!(
            integrate_batch(&mismatched).unwrap_err(),
            IntegratorError::TableMismatch { .. }
        ));
    }

    #[test]
    fn monomial_validation_errors() {
        assert!(matches!(
            MonomialSpec::orthogonal(
                MultiIndex::new(vec![1, 1]),
                MultiIndex::new(vec![1]),
                2
            )
            .unwrap_err(),
            IntegratorError::IndexLengthMismatch { .. }
        ));
        assert!(matches!(
            MonomialSpec::orthogonal(
                MultiIndex::new(vec![1, 3]),
                MultiIndex::new(vec![1, 1]),
                2
            )
            .unwrap_err(),
            IntegratorError::IndexOutOfRange(_)
        ));
        assert!(matches!(
            MonomialSpec::orthogonal(MultiIndex::new(vec![1, 1]), MultiIndex::new(vec![1, 1]), 1)
                .unwrap_err(),
            IntegratorError::DimensionTooSmall(1)
        ));
    }

    #[test]
    fn truncated_moment_examples() {
        // Full character: Catalan numbers.
        for (k, c) in [(1u64, 1i64), (2, 2), (3, 5), (4, 14)] {
            let q = MomentQuery::new(3, 3, 2 * k).unwrap();
            assert_eq!(truncated_moment(&q).unwrap(), rat(c, 1));
        }
        for (s, k, c) in [(4u64, 5u64, 42i64), (2, 6, 132)] {
            let q = MomentQuery::new(s, s, 2 * k).unwrap();
            assert_eq!(truncated_moment(&q).unwrap(), rat(c, 1));
        }
        // Single coefficient at n = 2: uniform-square moments.
        let q = MomentQuery::new(1, 2, 2).unwrap();
        assert_eq!(truncated_moment(&q).unwrap(), rat(1, 2));
        // 1x1 matrices: Tr((1/n) * (s)) = s/n.
        let q = MomentQuery::new(1, 4, 2).unwrap();
        assert_eq!(truncated_moment(&q).unwrap(), rat(1, 4));
        // Odd powers vanish.
        let q = MomentQuery::new(2, 3, 5).unwrap();
        assert!(truncated_moment(&q).unwrap().is_zero());
    }

    #[test]
    fn truncation_rank_is_validated() {
        assert!(matches!(
            MomentQuery::new(4, 3, 2).unwrap_err(),
            IntegratorError::TruncationRank { s: 4, n: 3 }
        ));
        assert!(matches!(
            MomentQuery::new(0, 3, 2).unwrap_err(),
            IntegratorError::TruncationRank { s: 0, n: 3 }
        ));
        assert!(MomentQuery::new(3, 3, 2).is_ok());
    }

    #[test]
    fn moment_via_trace_equals_moment_via_expansion() {
        // Expanding (u_11 + ... + u_ss)^(2k) into monomials and summing
        // integrals, the computation the trace formula shortcuts.
        for (s, n, k) in [(1u64, 2u64, 2usize), (2, 3, 2), (2, 2, 3)] {
            let table = build_weingarten(&GramSpec::orthogonal(k, n)).unwrap();
            let mut total = BigRational::zero();
            let tuples = (s as usize).pow(2 * k as u32);
            for code in 0..tuples {
                let mut digits = Vec::with_capacity(2 * k);
                let mut rest = code;
                for _ in 0..2 * k {
                    digits.push((rest % s as usize) as u64 + 1);
                    rest /= s as usize;
                }
                let idx = MultiIndex::new(digits);
                let m = MonomialSpec::orthogonal(idx.clone(), idx, n).unwrap();
                total += integrate_with_table(&m, &table).unwrap();
            }
            let q = MomentQuery::new(s, n, 2 * k as u64).unwrap();
            assert_eq!(truncated_moment(&q).unwrap(), total, "s={s} n={n} k={k}");
        }
    }

    #[test]
    fn wick_count_of_constant_indices_is_catalan() {
        for (k, c) in [(0usize, 1u64), (1, 1), (2, 2), (3, 5)] {
            let word = ColorWord::all_alpha(2 * k);
            let idx = MultiIndex::constant(2 * k, 1);
            assert_eq!(
                joint_moment_leading_order(Case::Orthogonal, &word, &idx, &idx).unwrap(),
                c
            );
        }
    }

    #[test]
    fn wick_count_with_no_matching_diagram_is_zero() {
        let word = ColorWord::all_alpha(2);
        let i = MultiIndex::new(vec![1, 2]);
        let j = MultiIndex::constant(2, 1);
        assert_eq!(
            joint_moment_leading_order(Case::Orthogonal, &word, &i, &j).unwrap(),
            0
        );
    }

    #[test]
    fn scaled_integrals_approach_wick_counts() {
        // n^k * integral vs the Wick count at n = 10^4; the gap is O(1/n).
        let n = 10_000u64;
        let pairs: [(Vec<u64>, Vec<u64>); 3] = [
            (vec![1, 1], vec![1, 1]),
            (vec![1, 1, 2, 2], vec![1, 1, 2, 2]),
            (vec![1, 1, 2, 2, 3, 3], vec![1, 2, 2, 3, 3, 1]),
        ];
        for (i, j) in pairs {
            let k = i.len() / 2;
            let word = ColorWord::all_alpha(i.len());
            let wick = joint_moment_leading_order(
                Case::Orthogonal,
                &word,
                &MultiIndex::new(i.clone()),
                &MultiIndex::new(j.clone()),
            )
            .unwrap();
            let exact = integrate(&orthogonal_monomial(&i, &j, n)).unwrap();
            let scaled = exact * crate::exactalg::big_rational_pow(n, k);
            let gap = (scaled - rat(wick as i64, 1)).abs();
            assert!(gap <= rat(10, n as i64), "gap {gap} too large");
        }
    }

    #[test]
    fn scaled_truncated_moments_approach_catalan() {
        // (n/s)^k * moment -> C_k with an O(1/n) budget pinned by the
        // distance-1 neighbor count.
        let neighbor_counts = [0i64, 0, 2, 12]; // ordered pairs at distance 1 in D(k)
        for n in [1_000u64, 10_000] {
            for k in 1usize..=3 {
                for s in [1u64, n] {
                    let q = MomentQuery::new(s, n, 2 * k as u64).unwrap();
                    let m = truncated_moment(&q).unwrap();
                    let scaled = m * BigRational::new(BigInt::from(n), BigInt::from(s))
                        .pow(k as i32);
                    let expect = rat([1i64, 1, 2, 5][k], 1);
                    let budget = rat(2 * (neighbor_counts[k] + 1), n as i64);
                    assert!(
                        (scaled - expect).abs() <= budget,
                        "k={k} s={s} n={n} outside budget"
                    );
                }
            }
        }
    }
}
