//! Exact dense linear algebra over arbitrary-precision rationals, integer
//! polynomials in the dimension parameter `n`, and truncated formal series
//! in `n^-1`. No floating point anywhere.

mod matrix;
mod poly;
mod series;

pub use matrix::RationalMatrix;
pub use poly::{PolyInN, PolyMatrix};
pub use series::{InverseNSeries, PowerSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("matrix is singular: no nonzero pivot at elimination step {pivot_step}")]
    Singular { pivot_step: usize },
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrices are indexed by different diagram bases")]
    BasisMismatch,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("constant term is zero, series has no reciprocal")]
    NoReciprocal,
}

/// Canonical string form of an exact rational: always `num/den` with the
/// denominator positive, e.g. `-1/6` or `5/1`. This is the wire format used
/// in cache files and JSON payloads.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse the `num/den` form accepted by [`rational_to_string`]; a bare
/// integer is also accepted.
pub fn rational_from_string(s: &str) -> Result<BigRational, ExactAlgError> {
    let bad = || ExactAlgError::ParseRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Decimal approximation with the given number of fractional digits,
/// correctly rounded half away from zero. Only used behind explicit
/// `--approx` requests; exact values stay exact everywhere else.
pub fn rational_to_decimal(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let abs = rounded.magnitude().to_string();
    let mut int_part;
    let frac_part;
    if abs.len() > digits as usize {
        let split = abs.len() - digits as usize;
        int_part = abs[..split].to_string();
        frac_part = abs[split..].to_string();
    } else {
        int_part = "0".to_string();
        frac_part = format!("{:0>width$}", abs, width = digits as usize);
    }
    if negative && (int_part != "0" || frac_part.bytes().any(|b| b != b'0')) {
        int_part.insert(0, '-');
    }
    if digits == 0 {
        int_part
    } else {
        format!("{int_part}.{frac_part}")
    }
}

/// Exact `base^exp` as a rational.
pub fn big_rational_pow(base: u64, exp: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(exp as u32))
}

pub(crate) fn one() -> BigRational {
    BigRational::one()
}

pub(crate) fn zero() -> BigRational {
    BigRational::zero()
}
