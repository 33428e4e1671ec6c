use super::laurent::Laurent;
use super::mpoly::{gcd, MPoly};
use super::{Field, Rational, Ring, RingError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use std::fmt;

/// Element of the fraction field of the Laurent ring ℤ[ξ^±, Q^±].
///
/// Canonical form: the denominator is a polynomial with no monomial factor
/// and positive leading coefficient, coprime to the numerator, so equality
/// is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Laurent,
    den: Laurent,
}

impl RatFunc {
    pub fn from_laurent(p: Laurent) -> Self {
        let nv = p.nvars;
        RatFunc {
            num: p,
            den: Laurent::constant(nv, BigInt::one()),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_laurent(Laurent::var(nvars, i))
    }

    pub fn new(num: Laurent, den: Laurent) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    pub fn denom(&self) -> &Laurent {
        &self.den
    }

    /// The underlying Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<Laurent> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational, RingError> {
        let d = self.den.evaluate(values)?;
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(self.num.evaluate(values)? / d)
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    fn normalize(num: Laurent, den: Laurent) -> Self {
        let nv = num.nvars;
        if num.is_zero() {
            return RatFunc {
                num,
                den: Laurent::constant(nv, BigInt::one()),
            };
        }
        let (pn, sn) = num.to_poly();
        let (pd, sd) = den.to_poly();
        let shift: Vec<i32> = sn.iter().zip(&sd).map(|(a, b)| a - b).collect();
        let g = if pd.is_constant() {
            let c = pd.terms().next().unwrap().1.clone();
            let content = pn.terms().fold(c, |acc, (_, x)| acc.gcd(x));
            MPoly::constant(nv, content)
        } else {
            gcd(&pn, &pd)
        };
        let (mut pn, mut pd) = if g.is_constant() && g.terms().all(|(_, c)| c.is_one()) {
            (pn, pd)
        } else {
            (
                pn.exact_div(&g).expect("gcd divides numerator"),
                pd.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        if pd.leading_is_negative() {
            pn = pn.neg();
            pd = pd.neg();
        }
        RatFunc {
            num: Laurent::from_poly(&pn, &shift),
            den: Laurent::from_poly(&pd, &vec![0; nv]),
        }
    }

    pub fn parse(nvars: usize, s: &str) -> Result<Self, RingError> {
        match s.split_once(")/(") {
            Some((a, b)) => {
                let a = a.trim().trim_start_matches('(');
                let b = b.trim().trim_end_matches(')');
                Self::new(Laurent::parse(nvars, a)?, Laurent::parse(nvars, b)?)
            }
            None => Ok(Self::from_laurent(Laurent::parse(nvars, s)?)),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Ring for RatFunc {
    fn pivot_cost(&self) -> usize {
        if self.den.is_one() {
            self.num.pivot_cost()
        } else {
            self.num.terms.len() + 2 * self.den.terms.len()
        }
    }
    fn zero_like(&self) -> Self {
        Self::from_laurent(self.num.zero_like())
    }
    fn one_like(&self) -> Self {
        Self::from_laurent(self.num.one_like())
    }
    fn int_like(&self, v: i64) -> Self {
        Self::from_laurent(self.num.int_like(v))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return self.zero_like();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_laurent(self.num.mul(&o.num));
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn try_inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }
    fn try_div(&self, o: &Self) -> Result<Self, RingError> {
        if o.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalize(self.num.mul(&o.den), self.den.mul(&o.num)))
    }
    fn is_field() -> bool {
        true
    }
    fn ring_name(&self) -> String {
        format!("fraction({})", self.num.nvars - 1)
    }
}

impl Field for RatFunc {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_common_factor() {
        let xi = RatFunc::var(2, 0);
        let one = xi.one_like();
        let a = xi.mul(&xi).sub(&one);
        let b = xi.sub(&one);
        assert_eq!(a.try_div(&b).unwrap(), xi.add(&one));
    }

    #[test]
    fn same_value_same_form() {
        let xi = RatFunc::var(3, 0);
        let q2 = RatFunc::var(3, 2);
        assert_eq!(q2.try_div(&q2).unwrap(), q2.one_like());
        let a = xi.try_div(&xi.sub(&q2)).unwrap();
        let b = xi.mul(&xi).try_div(&xi.mul(&xi).sub(&xi.mul(&q2))).unwrap();
        assert_eq!(a, b);
        let c = a.sub(&b);
        assert!(c.is_zero());
    }

    #[test]
    fn parse_round_trip() {
        let xi = RatFunc::var(3, 0);
        let q1 = RatFunc::var(3, 1);
        let v = xi.try_div(&q1.sub(&xi.mul(&xi))).unwrap();
        assert_eq!(RatFunc::parse(3, &v.to_string()).unwrap(), v);
    }
}
