//! Dense matrices over big rationals with exact Gauss-Jordan inversion.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::{one, zero, ExactAlgError};
use crate::diagrams::Pairing;

/// A dense row-major matrix of exact rationals, optionally tagged with the
/// canonical diagram basis it is indexed by. Gram and Weingarten matrices
/// carry their basis so that mixed-basis products are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
    basis: Option<Arc<Vec<Pairing>>>,
}

impl RationalMatrix {
    /// Build from a row-major entry vector; `entries.len()` must equal
    /// `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        RationalMatrix {
            rows,
            cols,
            entries,
            basis: None,
        }
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BigRational,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |r, c| if r == c { one() } else { zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![zero(); rows * cols])
    }

    /// Attach the diagram basis this matrix is indexed by.
    pub fn with_basis(mut self, basis: Arc<Vec<Pairing>>) -> Self {
        assert_eq!(self.rows, basis.len(), "basis length mismatch");
        assert_eq!(self.cols, basis.len(), "basis length mismatch");
        self.basis = Some(basis);
        self
    }

    pub fn basis(&self) -> Option<&Arc<Vec<Pairing>>> {
        self.basis.as_ref()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e == &one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix, ExactAlgError> {
        if self.cols != rhs.rows {
            return Err(ExactAlgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = zero();
                for m in 0..self.cols {
                    let a = self.get(r, m);
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * rhs.get(m, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Exact inverse by Gauss-Jordan elimination on the augmented matrix.
    /// The pivot at each step is the first row with a nonzero entry in the
    /// pivot column, which keeps the elimination fully deterministic; exact
    /// arithmetic needs no magnitude-based pivoting. A singular input is
    /// reported together with the step at which rank deficiency appeared.
    pub fn invert(&self) -> Result<RationalMatrix, ExactAlgError> {
        if !self.is_square() {
            return Err(ExactAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let dim = self.rows;
        let mut work = self.entries.clone();
        let mut inv = RationalMatrix::identity(dim);
        let at = |store: &Vec<BigRational>, r: usize, c: usize| store[r * dim + c].clone();

        for step in 0..dim {
            let pivot_row = (step..dim)
                .find(|&r| !work[r * dim + step].is_zero())
                .ok_or(ExactAlgError::Singular { pivot_step: step })?;
            if pivot_row != step {
                for c in 0..dim {
                    work.swap(pivot_row * dim + c, step * dim + c);
                    inv.entries.swap(pivot_row * dim + c, step * dim + c);
                }
            }
            let pivot = at(&work, step, step);
            for c in 0..dim {
                work[step * dim + c] /= &pivot;
                inv.entries[step * dim + c] /= &pivot;
            }
            for r in 0..dim {
                if r == step {
                    continue;
                }
                let factor = at(&work, r, step);
                if factor.is_zero() {
                    continue;
                }
                for c in 0..dim {
                    let w = &at(&work, step, c) * &factor;
                    work[r * dim + c] -= w;
                    let v = &at(&inv.entries, step, c) * &factor;
                    inv.entries[r * dim + c] -= v;
                }
            }
        }
        inv.basis = self.basis.clone();
        Ok(inv)
    }

    /// `Tr(self * rhs)` without forming the product: the sum over `p` of
    /// `sum_q self(p, q) * rhs(q, p)`. Requires equal square dimensions and,
    /// when both matrices carry one, the same diagram basis.
    pub fn trace_product(&self, rhs: &RationalMatrix) -> Result<BigRational, ExactAlgError> {
        if !self.is_square() || !rhs.is_square() || self.rows != rhs.rows {
            return Err(ExactAlgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        if let (Some(a), Some(b)) = (&self.basis, &rhs.basis) {
            if !Arc::ptr_eq(a, b) && a != b {
                return Err(ExactAlgError::BasisMismatch);
            }
        }
        let mut acc = zero();
        for p in 0..self.rows {
            for q in 0..self.cols {
                let a = self.get(p, q);
                if a.is_zero() {
                    continue;
                }
                acc += a * rhs.get(q, p);
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<BigRational, ExactAlgError> {
        if !self.is_square() {
            return Err(ExactAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|r| self.get(r, r)).sum())
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> BigRational {
        self.entries.iter().sum()
    }
}
