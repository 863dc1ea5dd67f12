//! Integer polynomials in the dimension parameter `n`, and dense matrices
//! of them. These hold the symbolic Gram matrices whose entries are powers
//! `n^l`; symbolic inversion is deliberately out of scope (the symbolic
//! inverse is served by the path expansion instead).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactAlgError, RationalMatrix};

/// A polynomial in `n` with arbitrary-precision integer coefficients,
/// stored densely by power with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyInN {
    coeffs: Vec<BigInt>,
}

impl PolyInN {
    pub fn zero() -> Self {
        PolyInN { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyInN {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `n^power`.
    pub fn monomial(power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = BigInt::one();
        PolyInN { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyInN { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, rhs: &PolyInN) -> PolyInN {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        PolyInN::from_coeffs(coeffs)
    }

    pub fn mul(&self, rhs: &PolyInN) -> PolyInN {
        if self.is_zero() || rhs.is_zero() {
            return PolyInN::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyInN::from_coeffs(coeffs)
    }

    /// Evaluate at an integer value of `n` (Horner).
    pub fn eval(&self, n: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c;
        }
        acc
    }

    pub fn eval_u64(&self, n: u64) -> BigInt {
        self.eval(&BigInt::from(n))
    }
}

impl fmt::Display for PolyInN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match power {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "n")?,
                1 => write!(f, "{c}*n")?,
                _ if c.is_one() => write!(f, "n^{power}")?,
                _ => write!(f, "{c}*n^{power}")?,
            }
        }
        Ok(())
    }
}

/// A dense matrix of [`PolyInN`] entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<PolyInN>,
}

impl PolyMatrix {
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> PolyInN,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &PolyInN {
        &self.entries[row * self.cols + col]
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, ExactAlgError> {
        if self.cols != rhs.rows {
            return Err(ExactAlgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        Ok(PolyMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = PolyInN::zero();
            for m in 0..self.cols {
                acc = acc.add(&self.get(r, m).mul(rhs.get(m, c)));
            }
            acc
        }))
    }

    /// Evaluate every entry at an integer `n`, yielding a rational matrix.
    pub fn eval(&self, n: u64) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| {
            BigRational::from_integer(self.get(r, c).eval_u64(n))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> PolyInN {
        PolyInN::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
    }

    #[test]
    fn arithmetic_and_evaluation() {
        // (n + 1)(n - 1) = n^2 - 1
        let a = poly(&[1, 1]);
        let b = poly(&[-1, 1]);
        assert_eq!(a.mul(&b), poly(&[-1, 0, 1]));
        assert_eq!(a.add(&b), poly(&[0, 2]));
        assert_eq!(a.mul(&b).eval_u64(7), BigInt::from(48));
        assert_eq!(PolyInN::monomial(3).eval_u64(10), BigInt::from(1000));
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[-1, 0, 1]).to_string(), "n^2 + -1");
        assert_eq!(poly(&[0, 2]).to_string(), "2*n");
        assert_eq!(PolyInN::zero().to_string(), "0");
        assert_eq!(PolyInN::monomial(1).to_string(), "n");
    }

    #[test]
    fn matrix_multiplication_matches_evaluation() {
        let m = PolyMatrix::from_fn(2, 2, |r, c| {
            if r == c {
                PolyInN::monomial(2)
            } else {
                PolyInN::monomial(1)
            }
        });
        let sq = m.mul(&m).unwrap();
        for n in 2u64..6 {
            let direct = m.eval(n).mul(&m.eval(n)).unwrap();
            assert_eq!(sq.eval(n), direct);
        }
    }
}
