//! Exact coefficient rings.
//!
//! Every coefficient type implements [`Ring`]. Values carry whatever context
//! they need (number of variables, conductor), so constants are produced from
//! an existing value with `zero_like`/`one_like`.

mod coefficient;
mod cyclotomic;
mod laurent;
mod mpoly;
mod rational;
mod ratfunc;

pub use coefficient::{Coefficient, RingKind, RingSpec, Specialization};
pub use cyclotomic::{euler_phi, Cyclotomic};
pub use laurent::Laurent;
pub use mpoly::MPoly;
pub use rational::{parse_rational, Rational};
pub use ratfunc::RatFunc;

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not available in {0}")]
    NotAField(String),
    #[error("element is not a unit: {0}")]
    NotUnit(String),
    #[error("operands belong to different rings: {0} vs {1}")]
    Mismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid specialization: {0}")]
    Specialization(String),
}

pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Inverse of a unit. Fields invert every nonzero element; the Laurent
    /// ring inverts signed monomials only.
    fn try_inv(&self) -> Result<Self, RingError>;
    /// Field division. Non-field rings return [`RingError::NotAField`].
    fn try_div(&self, o: &Self) -> Result<Self, RingError>;
    fn is_field() -> bool;
    fn ring_name(&self) -> String;

    /// Rough size used to choose pivots in elimination; units of the
    /// underlying ring should be cheapest.
    fn pivot_cost(&self) -> usize {
        1
    }
    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
    /// Integer power allowing negative exponents for units.
    fn zpow(&self, e: i64) -> Result<Self, RingError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.try_inv()?.pow(e.unsigned_abs()))
        }
    }
}

/// Marker for rings where `try_div` succeeds on every nonzero divisor.
pub trait Field: Ring {}

pub(crate) fn fmt_terms(parts: Vec<String>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "0");
    }
    write!(f, "{}", parts.join(" + "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_and_zpow() {
        let two = Rational::from_integer(2.into());
        assert_eq!(two.pow(10), Rational::from_integer(1024.into()));
        assert_eq!(two.zpow(-2).unwrap(), Rational::new(1.into(), 4.into()));
        let x = Laurent::var(2, 0);
        assert_eq!(x.zpow(-3).unwrap().mul(&x.pow(3)), x.one_like());
        let y = x.add(&x.one_like());
        assert!(y.try_inv().is_err());
    }
}
