//! Gram and Weingarten matrices over the canonical diagram bases.
//!
//! The Gram matrix of half-size `k` at dimension `n` has entry
//! `n^l(p, q)` for diagrams `p, q`; the Weingarten matrix is its exact
//! inverse and carries the coefficients of the Haar-state integration
//! formula. The unitary case is identical except that the basis is the
//! colored diagram set of a word. Both are guaranteed invertible for
//! integer `n >= 2`, which is the only regime this module accepts;
//! symbolic-`n` questions go through the path expansion instead.

pub mod cache;

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use thiserror::Error;

use crate::diagrams::{
    enumerate_colored_pairings, enumerate_pairings, loop_count, ColorWord, DiagramError, Pairing,
};
use crate::exactalg::{big_rational_pow, ExactAlgError, PolyInN, PolyMatrix, RationalMatrix};

pub use cache::{CacheError, CacheStatus, CACHE_ENV_VAR, CACHE_FORMAT_VERSION};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeingartenError {
    #[error("dimension parameter n = {0} is out of range, need n >= 2")]
    DimensionTooSmall(u64),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
    #[error(transparent)]
    Cache(#[from] CacheError),
}

/// Which diagram set indexes the matrices: plain diagrams of a given
/// half-size (orthogonal case) or the colored diagrams of a word (unitary
/// case).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GramCase {
    Orthogonal { half_size: usize },
    Unitary { word: ColorWord },
}

impl GramCase {
    pub fn label(&self) -> &'static str {
        match self {
            GramCase::Orthogonal { .. } => "orthogonal",
            GramCase::Unitary { .. } => "unitary",
        }
    }
}

/// A Gram/Weingarten matrix request: the diagram set plus the dimension
/// parameter `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramSpec {
    case: GramCase,
    n: u64,
}

impl GramSpec {
    pub fn orthogonal(half_size: usize, n: u64) -> Self {
        GramSpec {
            case: GramCase::Orthogonal { half_size },
            n,
        }
    }

    pub fn unitary(word: ColorWord, n: u64) -> Self {
        GramSpec {
            case: GramCase::Unitary { word },
            n,
        }
    }

    pub fn case(&self) -> &GramCase {
        &self.case
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The canonical diagram basis for this spec. An unbalanced unitary
    /// word yields the empty basis, not an error.
    pub fn basis(&self) -> Result<Vec<Pairing>, DiagramError> {
        match &self.case {
            GramCase::Orthogonal { half_size } => enumerate_pairings(*half_size),
            GramCase::Unitary { word } => enumerate_colored_pairings(word),
        }
    }

    /// Cache file name, `{case}_{k-or-word}_{n}.wgt.json`.
    pub fn cache_file_name(&self) -> String {
        match &self.case {
            GramCase::Orthogonal { half_size } => {
                format!("orthogonal_{half_size}_{}.wgt.json", self.n)
            }
            GramCase::Unitary { word } => format!("unitary_{word}_{}.wgt.json", self.n),
        }
    }
}

impl fmt::Display for GramSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.case {
            GramCase::Orthogonal { half_size } => {
                write!(f, "orthogonal k={half_size} n={}", self.n)
            }
            GramCase::Unitary { word } => write!(f, "unitary word={word} n={}", self.n),
        }
    }
}

/// A Gram matrix together with its exact inverse over the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeingartenTable {
    spec: GramSpec,
    basis: Arc<Vec<Pairing>>,
    gram: RationalMatrix,
    weingarten: RationalMatrix,
}

impl WeingartenTable {
    pub fn spec(&self) -> &GramSpec {
        &self.spec
    }

    pub fn basis(&self) -> &Arc<Vec<Pairing>> {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    pub fn weingarten(&self) -> &RationalMatrix {
        &self.weingarten
    }

    /// Weingarten entry by basis position.
    pub fn weingarten_entry(&self, p: usize, q: usize) -> &BigRational {
        self.weingarten.get(p, q)
    }
}

/// Gram matrix with entries `param^l(p, q)` over an explicit basis. No
/// dimension check: the truncated-character trace formula needs these for
/// every rank `1 <= s <= n`, and they are never inverted there.
pub(crate) fn gram_over_basis(basis: &Arc<Vec<Pairing>>, param: u64) -> RationalMatrix {
    RationalMatrix::from_fn(basis.len(), basis.len(), |r, c| {
        let loops = loop_count(&basis[r], &basis[c]).expect("basis diagrams share a size");
        big_rational_pow(param, loops)
    })
    .with_basis(Arc::clone(basis))
}

/// The Gram matrix of a spec: square over the canonical basis, symmetric,
/// diagonal `n^k`. Rejects `n < 2`; an unbalanced unitary word gives the
/// empty 0x0 matrix.
pub fn build_gram(spec: &GramSpec) -> Result<RationalMatrix, WeingartenError> {
    if spec.n < 2 {
        return Err(WeingartenError::DimensionTooSmall(spec.n));
    }
    let basis = Arc::new(spec.basis()?);
    Ok(gram_over_basis(&basis, spec.n))
}

/// Gram matrix plus exact Weingarten inverse. For `n >= 2` the Gram matrix
/// is positive definite, so a singularity report here means a genuine bug
/// or data corruption rather than an expected failure mode.
pub fn build_weingarten(spec: &GramSpec) -> Result<WeingartenTable, WeingartenError> {
    if spec.n < 2 {
        return Err(WeingartenError::DimensionTooSmall(spec.n));
    }
    let basis = Arc::new(spec.basis()?);
    let gram = gram_over_basis(&basis, spec.n);
    let weingarten = gram.invert()?;
    Ok(WeingartenTable {
        spec: spec.clone(),
        basis,
        gram,
        weingarten,
    })
}

/// Symbolic Gram matrix of half-size `k`: entries are the monomials
/// `n^l(p, q)` as integer polynomials. Evaluating at a concrete `n >= 2`
/// reproduces [`build_gram`] exactly.
pub fn symbolic_gram(k: usize) -> Result<(Vec<Pairing>, PolyMatrix), WeingartenError> {
    let basis = enumerate_pairings(k)?;
    let matrix = PolyMatrix::from_fn(basis.len(), basis.len(), |r, c| {
        let loops = loop_count(&basis[r], &basis[c]).expect("basis diagrams share a size");
        PolyInN::monomial(loops)
    });
    Ok((basis, matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn half_size_one_gram_is_n() {
        for n in 2..=6 {
            let g = build_gram(&GramSpec::orthogonal(1, n)).unwrap();
            assert_eq!(g.rows(), 1);
            assert_eq!(g.get(0, 0), &int(n as i64));
        }
    }

    #[test]
    fn half_size_two_gram_in_canonical_order() {
        let g = build_gram(&GramSpec::orthogonal(2, 3)).unwrap();
        assert_eq!(g.rows(), 2);
        assert_eq!(g.get(0, 0), &int(9));
        assert_eq!(g.get(0, 1), &int(3));
        assert_eq!(g.get(1, 0), &int(3));
        assert_eq!(g.get(1, 1), &int(9));
    }

    #[test]
    fn unitary_alternating_word_matches_orthogonal_gram() {
        for n in 2..=4 {
            let orth = build_gram(&GramSpec::orthogonal(2, n)).unwrap();
            let unit = build_gram(&GramSpec::unitary(ColorWord::alternating(2), n)).unwrap();
            assert_eq!(orth.entries(), unit.entries());
        }
    }

    #[test]
    fn dimension_below_two_is_rejected() {
        for n in 0..2 {
            assert_eq!(
                build_gram(&GramSpec::orthogonal(2, n)).unwrap_err(),
                WeingartenError::DimensionTooSmall(n)
            );
            assert!(build_weingarten(&GramSpec::orthogonal(2, n)).is_err());
        }
    }

    #[test]
    fn unbalanced_word_gives_empty_matrix() {
        let g = build_gram(&GramSpec::unitary(ColorWord::parse("aab").unwrap(), 3)).unwrap();
        assert_eq!(g.rows(), 0);
        assert_eq!(g.cols(), 0);
    }

    #[test]
    fn weingarten_of_single_diagram_is_inverse_dimension() {
        for n in 2..=6u64 {
            let t = build_weingarten(&GramSpec::orthogonal(1, n)).unwrap();
            assert_eq!(t.weingarten_entry(0, 0), &rat(1, n as i64));
        }
    }

    #[test]
    fn weingarten_half_size_two_at_n_two() {
        let t = build_weingarten(&GramSpec::orthogonal(2, 2)).unwrap();
        assert_eq!(t.weingarten_entry(0, 0), &rat(1, 3));
        assert_eq!(t.weingarten_entry(0, 1), &rat(-1, 6));
        assert_eq!(t.weingarten_entry(1, 0), &rat(-1, 6));
        assert_eq!(t.weingarten_entry(1, 1), &rat(1, 3));
    }

    #[test]
    fn gram_times_weingarten_is_identity() {
        for k in 0..=5 {
            for n in 2..=6 {
                let t = build_weingarten(&GramSpec::orthogonal(k, n)).unwrap();
                assert!(t.gram().mul(t.weingarten()).unwrap().is_identity());
                assert!(t.weingarten().mul(t.gram()).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn gram_and_weingarten_are_symmetric() {
        for k in 1..=4 {
            let t = build_weingarten(&GramSpec::orthogonal(k, 3)).unwrap();
            assert!(t.gram().is_symmetric());
            assert!(t.weingarten().is_symmetric());
        }
        let t = build_weingarten(&GramSpec::unitary(ColorWord::parse("aabb").unwrap(), 3)).unwrap();
        assert!(t.weingarten().is_symmetric());
    }

    #[test]
    fn gram_entries_are_powers_between_n_and_n_pow_k() {
        let k = 3;
        let n = 5u64;
        let g = build_gram(&GramSpec::orthogonal(k, n)).unwrap();
        let lo = int(n as i64);
        let hi = big_rational_pow(n, k);
        for r in 0..g.rows() {
            for c in 0..g.cols() {
                let e = g.get(r, c);
                assert!(e >= &lo && e <= &hi);
                if r == c {
                    assert_eq!(e, &hi);
                }
            }
        }
    }

    #[test]
    fn symbolic_gram_evaluates_to_concrete_gram() {
        for k in 0..=3 {
            let (basis, sym) = symbolic_gram(k).unwrap();
            for n in 2..=5 {
                let concrete = build_gram(&GramSpec::orthogonal(k, n)).unwrap();
                let evaluated = sym.eval(n).with_basis(Arc::new(basis.clone()));
                assert_eq!(evaluated, concrete);
            }
        }
    }

    #[test]
    fn empty_half_size_zero_table() {
        let t = build_weingarten(&GramSpec::orthogonal(0, 2)).unwrap();
        assert_eq!(t.dimension(), 1);
        assert!(t.gram().get(0, 0).is_one());
        assert!(t.weingarten_entry(0, 0).is_one());
        assert!(!t.weingarten_entry(0, 0).is_zero());
    }

    #[test]
    fn cache_file_names() {
        assert_eq!(
            GramSpec::orthogonal(3, 4).cache_file_name(),
            "orthogonal_3_4.wgt.json"
        );
        assert_eq!(
            GramSpec::unitary(ColorWord::parse("abab").unwrap(), 5).cache_file_name(),
            "unitary_abab_5.wgt.json"
        );
    }
}
