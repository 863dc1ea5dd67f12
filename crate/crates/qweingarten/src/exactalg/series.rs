//! Truncated formal series with exact rational coefficients.
//!
//! [`InverseNSeries`] is a series in `n^-1` truncated at a fixed order `D`:
//! exactly `D + 1` coefficients are stored and arithmetic never reads past
//! the truncation. [`PowerSeries`] is the analogous dense series in an
//! abstract variable `z`, with the reciprocal needed to expand the
//! closed-form generating functions of the second-order machinery.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{rational_to_string, zero, ExactAlgError};

/// A truncated series `c_0 + c_1 n^-1 + ... + c_D n^-D`.
///
/// Binary operations re-truncate to the smaller of the two orders, so a
/// result is only ever claimed through coefficients both operands know.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseNSeries {
    coeffs: Vec<BigRational>,
}

impl InverseNSeries {
    pub fn zero(order: usize) -> Self {
        InverseNSeries {
            coeffs: vec![zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Build from coefficients indexed by the power of `n^-1`; the
    /// truncation order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores order + 1 coefficients");
        InverseNSeries { coeffs }
    }

    /// Truncation order `D`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `n^-d` for `d` up to the truncation order.
    pub fn coeff(&self, d: usize) -> &BigRational {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-truncate to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        InverseNSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &InverseNSeries) -> InverseNSeries {
        let order = self.order().min(rhs.order());
        InverseNSeries {
            coeffs: (0..=order).map(|d| &self.coeffs[d] + &rhs.coeffs[d]).collect(),
        }
    }

    pub fn sub(&self, rhs: &InverseNSeries) -> InverseNSeries {
        let order = self.order().min(rhs.order());
        InverseNSeries {
            coeffs: (0..=order).map(|d| &self.coeffs[d] - &rhs.coeffs[d]).collect(),
        }
    }

    pub fn neg(&self) -> InverseNSeries {
        InverseNSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &InverseNSeries) -> InverseNSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        InverseNSeries { coeffs }
    }

    pub fn scale(&self, factor: &BigRational) -> InverseNSeries {
        InverseNSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Exact value of the truncation at a concrete integer `n >= 1`.
    pub fn eval_at(&self, n: u64) -> BigRational {
        assert!(n >= 1);
        let inv = BigRational::new(BigInt::one(), BigInt::from(n));
        let mut acc = zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &inv + c;
        }
        acc
    }
}

impl fmt::Display for InverseNSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{}", rational_to_string(c))?,
                1 => write!(f, "({})*n^-1", rational_to_string(c))?,
                _ => write!(f, "({})*n^-{d}", rational_to_string(c))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(n^-{})", self.order() + 1)
    }
}

/// A dense truncated power series in `z` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// `c * z^power`, truncated at `order`.
    pub fn monomial(c: BigRational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> &BigRational {
        &self.coeffs[power]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order).map(|d| &self.coeffs[d] + &rhs.coeffs[d]).collect(),
        }
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order).map(|d| &self.coeffs[d] - &rhs.coeffs[d]).collect(),
        }
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    pub fn scale(&self, factor: &BigRational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// The operator `z d/dz`: coefficient `c_j` becomes `j * c_j`. Keeps the
    /// truncation order, unlike a bare derivative.
    pub fn z_derivative(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * BigRational::from_integer(BigInt::from(j)))
                .collect(),
        }
    }

    /// Multiplicative inverse as a power series; requires a nonzero
    /// constant term.
    pub fn reciprocal(&self) -> Result<PowerSeries, ExactAlgError> {
        if self.coeffs[0].is_zero() {
            return Err(ExactAlgError::NoReciprocal);
        }
        let order = self.order();
        let mut coeffs = vec![zero(); order + 1];
        coeffs[0] = self.coeffs[0].recip();
        for d in 1..=order {
            let mut acc = zero();
            for i in 1..=d {
                acc += &self.coeffs[i] * &coeffs[d - i];
            }
            coeffs[d] = -acc / &self.coeffs[0];
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn pow(&self, exponent: usize) -> PowerSeries {
        let mut acc = PowerSeries::one(self.order());
        for _ in 0..exponent {
            acc = acc.mul(self);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn series(coeffs: &[i64]) -> InverseNSeries {
        InverseNSeries::from_coeffs(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn product_of_conjugates() {
        // (1 + n^-1)(1 - n^-1) = 1 - n^-2 at order 2.
        let a = series(&[1, 1, 0]);
        let b = series(&[1, -1, 0]);
        assert_eq!(a.mul(&b), series(&[1, 0, -1]));
    }

    #[test]
    fn squared_geometric_prefix() {
        // (1 + n^-1 + n^-2)^2 = 1 + 2 n^-1 + 3 n^-2 at order 2.
        let s = series(&[1, 1, 1]);
        assert_eq!(s.mul(&s), series(&[1, 2, 3]));
    }

    #[test]
    fn binary_ops_retruncate_to_min_order() {
        let a = series(&[1, 2, 3, 4]);
        let b = series(&[1, 1]);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b), series(&[1, 3]));
        assert_eq!(a.truncate(1), series(&[1, 2]));
    }

    #[test]
    fn multiplication_is_commutative_and_associative() {
        let a = series(&[1, -2, 3, 1]);
        let b = series(&[0, 1, 5, -1]);
        let c = series(&[2, 0, -1, 4]);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn evaluation_is_exact() {
        let s = series(&[1, -1, 2]);
        // 1 - 1/4 + 2/16 = 7/8
        assert_eq!(s.eval_at(4), rat(7, 8));
        assert_eq!(series(&[5]).eval_at(1000), rat(5, 1));
    }

    #[test]
    fn display_renders_orders() {
        assert_eq!(series(&[1, 0, -1]).to_string(), "1/1 + (-1/1)*n^-2 + O(n^-3)");
        assert_eq!(InverseNSeries::zero(1).to_string(), "0 + O(n^-2)");
    }

    #[test]
    fn power_series_reciprocal() {
        // 1/(1 - z) = 1 + z + z^2 + ...
        let mut one_minus_z = PowerSeries::one(5);
        one_minus_z = one_minus_z.sub(&PowerSeries::monomial(BigRational::one(), 1, 5));
        let inv = one_minus_z.reciprocal().unwrap();
        assert!(inv.coeffs().iter().all(|c| c == &BigRational::one()));
        assert!(PowerSeries::zero(3).reciprocal().is_err());
        // r * s = 1 through the truncation order.
        let round = one_minus_z.mul(&inv);
        assert_eq!(round, PowerSeries::one(5));
    }

    #[test]
    fn z_derivative_scales_by_power() {
        let s = PowerSeries::from_coeffs(vec![rat(7, 1), rat(5, 1), rat(1, 2)]);
        assert_eq!(
            s.z_derivative(),
            PowerSeries::from_coeffs(vec![rat(0, 1), rat(5, 1), rat(1, 1)])
        );
    }
}
