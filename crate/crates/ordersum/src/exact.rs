//! Exact rational arithmetic for threshold comparisons.
//!
//! All comparisons reduce to cross-multiplication of arbitrary-precision
//! integers; no floating point is involved anywhere. The CLI may render
//! decimal approximations for display, but those never feed back into a
//! comparison.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A reduced fraction with positive denominator, totally ordered by
/// cross-multiplication. Backed by [`num_rational::BigRational`], which
/// maintains the reduced-form invariant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: i64, denominator: i64) -> ExactRational {
        assert!(denominator != 0, "zero denominator");
        ExactRational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_big(numerator: BigInt, denominator: BigInt) -> ExactRational {
        assert!(!denominator.is_zero(), "zero denominator");
        ExactRational(BigRational::new(numerator, denominator))
    }

    pub fn from_integer(n: u64) -> ExactRational {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> ExactRational {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> ExactRational {
        ExactRational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn mul(&self, other: &ExactRational) -> ExactRational {
        ExactRational(&self.0 * &other.0)
    }

    pub fn div(&self, other: &ExactRational) -> ExactRational {
        assert!(!other.0.is_zero(), "division by zero");
        ExactRational(&self.0 / &other.0)
    }

    pub fn add(&self, other: &ExactRational) -> ExactRational {
        ExactRational(&self.0 + &other.0)
    }

    /// Compares `self` against the unsigned integer `n`.
    pub fn cmp_biguint(&self, n: &BigUint) -> Ordering {
        let rhs = BigRational::from_integer(BigInt::from(n.clone()));
        self.0.cmp(&rhs)
    }

    /// Decimal rendering with `digits` significant digits, display only.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        let neg = self.0.is_negative();
        let num = self.0.numer().abs().to_biguint().expect("abs");
        let den = self.0.denom().abs().to_biguint().expect("abs");
        // Scale so the integer division keeps `digits` significant digits.
        let int_digits = (&num / &den).to_string();
        let int_len = if int_digits == "0" { 0 } else { int_digits.len() };
        let frac_digits = digits.saturating_sub(int_len).max(1);
        let scale = BigUint::from(10u32).pow(frac_digits as u32);
        let scaled = (&num * &scale) / &den;
        let s = scaled.to_string();
        let (int_part, frac_part) = if s.len() > frac_digits {
            let (a, b) = s.split_at(s.len() - frac_digits);
            (a.to_string(), b.to_string())
        } else {
            ("0".to_string(), format!("{s:0>frac_digits$}"))
        };
        let frac_part = frac_part.trim_end_matches('0');
        let body = if frac_part.is_empty() {
            int_part
        } else {
            format!("{int_part}.{frac_part}")
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_display() {
        let r = ExactRational::new(62, 154);
        assert_eq!(r.to_string(), "31/77");
        assert_eq!(ExactRational::new(4, 2).to_string(), "2");
        assert_eq!(ExactRational::new(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn order_by_cross_multiplication() {
        let a = ExactRational::new(31, 77);
        let b = ExactRational::new(271, 3647);
        assert!(b < a);
        assert!(a < ExactRational::one());
        assert_eq!(a.cmp(&ExactRational::new(31, 77)), Ordering::Equal);
    }

    #[test]
    fn cmp_against_integers() {
        let r = ExactRational::new(7, 2);
        assert_eq!(r.cmp_biguint(&3u32.into()), Ordering::Greater);
        assert_eq!(r.cmp_biguint(&4u32.into()), Ordering::Less);
    }

    #[test]
    fn decimal_rendering_is_display_only() {
        assert_eq!(ExactRational::new(31, 77).to_decimal_string(6), "0.402597");
        assert_eq!(ExactRational::new(1, 4).to_decimal_string(6), "0.25");
        assert_eq!(ExactRational::new(385, 96).to_decimal_string(6), "4.01041");
        assert_eq!(ExactRational::new(3, 1).to_decimal_string(6), "3");
    }
}
