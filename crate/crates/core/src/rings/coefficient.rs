//! Runtime-tagged coefficients for serialization and the command line.

use super::rational::{fmt_rational, parse_rational};
use super::{Cyclotomic, Laurent, RatFunc, Rational, Ring, RingError};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "param")]
pub enum RingKind {
    Rational,
    Cyclotomic(u32),
    Laurent(usize),
    Fraction(usize),
    RationalSpecialization(usize),
}

/// Values for ξ and Q₁..Q_r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specialization {
    pub xi: Rational,
    pub q: Vec<Rational>,
}

impl Specialization {
    pub fn new(xi: Rational, q: Vec<Rational>) -> Result<Self, RingError> {
        if Zero::is_zero(&xi) {
            return Err(RingError::Specialization("xi must be a unit".into()));
        }
        if let Some(l) = q.iter().position(Zero::is_zero) {
            return Err(RingError::Specialization(format!("Q{} must be a unit", l + 1)));
        }
        Ok(Specialization { xi, q })
    }

    /// Parses `xi=V,Q=V1,V2,...`.
    pub fn parse(s: &str) -> Result<Self, RingError> {
        let s = s.trim();
        let (xi_part, q_part) = match s.find("Q=") {
            Some(i) => (&s[..i], &s[i + 2..]),
            None => return Err(RingError::Parse(format!("missing Q= in '{s}'"))),
        };
        let xi_str = xi_part
            .trim()
            .trim_end_matches(',')
            .strip_prefix("xi=")
            .ok_or_else(|| RingError::Parse(format!("missing xi= in '{s}'")))?;
        let xi = parse_rational(xi_str)?;
        let q = q_part
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(xi, q)
    }

    pub fn values(&self) -> Vec<Rational> {
        let mut v = vec![self.xi.clone()];
        v.extend(self.q.iter().cloned());
        v
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q: Vec<String> = self.q.iter().map(fmt_rational).collect();
        write!(f, "xi={},Q={}", fmt_rational(&self.xi), q.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub kind: RingKind,
    pub specialization: Option<Specialization>,
}

impl RingSpec {
    pub fn rational() -> Self {
        RingSpec {
            kind: RingKind::Rational,
            specialization: None,
        }
    }

    pub fn specialization(spec: Specialization) -> Self {
        RingSpec {
            kind: RingKind::RationalSpecialization(spec.q.len()),
            specialization: Some(spec),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self.kind, RingKind::Laurent(_))
    }

    pub fn zero(&self) -> Coefficient {
        match &self.kind {
            RingKind::Rational | RingKind::RationalSpecialization(_) => {
                Coefficient::Rational(Rational::zero())
            }
            RingKind::Cyclotomic(e) => Coefficient::Cyclotomic(Cyclotomic::zeta(*e).zero_like()),
            RingKind::Laurent(r) => Coefficient::Laurent(Laurent::zero(r + 1)),
            RingKind::Fraction(r) => {
                Coefficient::Fraction(RatFunc::from_laurent(Laurent::zero(r + 1)))
            }
        }
    }

    pub fn parse(&self, s: &str) -> Result<Coefficient, RingError> {
        Ok(match &self.kind {
            RingKind::Rational | RingKind::RationalSpecialization(_) => {
                Coefficient::Rational(parse_rational(s)?)
            }
            RingKind::Cyclotomic(e) => Coefficient::Cyclotomic(Cyclotomic::zeta(*e).parse_in(s)?),
            RingKind::Laurent(r) => Coefficient::Laurent(Laurent::parse(r + 1, s)?),
            RingKind::Fraction(r) => Coefficient::Fraction(RatFunc::parse(r + 1, s)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Coefficient {
    Rational(Rational),
    Cyclotomic(Cyclotomic),
    Laurent(Laurent),
    Fraction(RatFunc),
}

macro_rules! binop {
    ($name:ident, $op:ident) => {
        pub fn $name(&self, o: &Self) -> Result<Self, RingError> {
            Ok(match (self, o) {
                (Coefficient::Rational(a), Coefficient::Rational(b)) => {
                    Coefficient::Rational(a.$op(b))
                }
                (Coefficient::Cyclotomic(a), Coefficient::Cyclotomic(b))
                    if a.conductor() == b.conductor() =>
                {
                    Coefficient::Cyclotomic(a.$op(b))
                }
                (Coefficient::Laurent(a), Coefficient::Laurent(b)) if a.nvars() == b.nvars() => {
                    Coefficient::Laurent(a.$op(b))
                }
                (Coefficient::Fraction(a), Coefficient::Fraction(b))
                    if a.nvars() == b.nvars() =>
                {
                    Coefficient::Fraction(a.$op(b))
                }
                _ => return Err(self.mismatch(o)),
            })
        }
    };
}

impl Coefficient {
    pub fn ring_name(&self) -> String {
        match self {
            Coefficient::Rational(a) => a.ring_name(),
            Coefficient::Cyclotomic(a) => a.ring_name(),
            Coefficient::Laurent(a) => a.ring_name(),
            Coefficient::Fraction(a) => a.ring_name(),
        }
    }

    fn mismatch(&self, o: &Self) -> RingError {
        RingError::Mismatch(self.ring_name(), o.ring_name())
    }

    binop!(ring_add, add);
    binop!(ring_sub, sub);
    binop!(ring_mul, mul);

    pub fn ring_neg(&self) -> Self {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Cyclotomic(a) => Coefficient::Cyclotomic(a.neg()),
            Coefficient::Laurent(a) => Coefficient::Laurent(a.neg()),
            Coefficient::Fraction(a) => Coefficient::Fraction(a.neg()),
        }
    }

    pub fn ring_div(&self, o: &Self) -> Result<Self, RingError> {
        Ok(match (self, o) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => {
                Coefficient::Rational(a.try_div(b)?)
            }
            (Coefficient::Cyclotomic(a), Coefficient::Cyclotomic(b))
                if a.conductor() == b.conductor() =>
            {
                Coefficient::Cyclotomic(a.try_div(b)?)
            }
            (Coefficient::Laurent(a), Coefficient::Laurent(b)) if a.nvars() == b.nvars() => {
                if b.is_zero() {
                    return Err(RingError::DivisionByZero);
                }
                return Err(RingError::NotAField(a.ring_name()));
            }
            (Coefficient::Fraction(a), Coefficient::Fraction(b)) if a.nvars() == b.nvars() => {
                Coefficient::Fraction(a.try_div(b)?)
            }
            _ => return Err(self.mismatch(o)),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(a) => Zero::is_zero(a),
            Coefficient::Cyclotomic(a) => Ring::is_zero(a),
            Coefficient::Laurent(a) => Ring::is_zero(a),
            Coefficient::Fraction(a) => Ring::is_zero(a),
        }
    }

    /// Evaluation homomorphism from the Laurent ring (or its fraction field)
    /// to ℚ.
    pub fn specialize(&self, spec: &Specialization) -> Result<Self, RingError> {
        let vals = spec.values();
        match self {
            Coefficient::Laurent(p) if p.nvars() == vals.len() => {
                Ok(Coefficient::Rational(p.evaluate(&vals)?))
            }
            Coefficient::Fraction(p) if p.nvars() == vals.len() => {
                Ok(Coefficient::Rational(p.evaluate(&vals)?))
            }
            Coefficient::Laurent(_) | Coefficient::Fraction(_) => Err(RingError::Specialization(
                format!("specialization has {} values, ring needs more or fewer", vals.len()),
            )),
            _ => Err(RingError::Specialization(format!(
                "cannot specialize an element of {}",
                self.ring_name()
            ))),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(a) => write!(f, "{}", fmt_rational(a)),
            Coefficient::Cyclotomic(a) => write!(f, "{a}"),
            Coefficient::Laurent(a) => write!(f, "{a}"),
            Coefficient::Fraction(a) => write!(f, "{a}"),
        }
    }
}
