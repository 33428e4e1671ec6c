use super::{Field, Ring, RingError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rationals; `num` keeps them reduced with a positive
/// denominator.
pub type Rational = BigRational;

impl Ring for BigRational {
    fn pivot_cost(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn int_like(&self, v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn try_inv(&self) -> Result<Self, RingError> {
        if Zero::is_zero(self) {
            return Err(RingError::DivisionByZero);
        }
        Ok(self.recip())
    }
    fn try_div(&self, o: &Self) -> Result<Self, RingError> {
        if Zero::is_zero(o) {
            return Err(RingError::DivisionByZero);
        }
        Ok(self / o)
    }
    fn is_field() -> bool {
        true
    }
    fn ring_name(&self) -> String {
        "Q".into()
    }
}

impl Field for BigRational {}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational, RingError> {
    let s = s.trim();
    let err = || RingError::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| err())?;
            let b: BigInt = b.trim().parse().map_err(|_| err())?;
            if b.is_zero() {
                return Err(RingError::DivisionByZero);
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
