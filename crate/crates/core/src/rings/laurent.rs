use super::mpoly::MPoly;
use super::rational::{fmt_rational, parse_rational};
use super::{fmt_terms, Rational, Ring, RingError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial over ℤ in ξ, Q₁, …, Q_{nvars-1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    pub(crate) nvars: usize,
    pub(crate) terms: BTreeMap<Vec<i32>, BigInt>,
}

pub(crate) fn var_names(nvars: usize) -> Vec<String> {
    (0..nvars)
        .map(|i| if i == 0 { "xi".to_string() } else { format!("Q{i}") })
        .collect()
}

pub(crate) fn fmt_monomial(coef: String, exps: &[i32], names: &[String]) -> String {
    let mut s = coef;
    for (e, name) in exps.iter().zip(names) {
        match e {
            0 => {}
            1 => s.push_str(&format!("*{name}")),
            _ => s.push_str(&format!("*{name}^{e}")),
        }
    }
    s
}

/// Parses a sum of monomials `c*x^a*y^b + ...` over the given variable names.
pub(crate) fn parse_monomials<S: AsRef<str>>(
    s: &str,
    names: &[S],
) -> Result<Vec<(Rational, Vec<i32>)>, RingError> {
    let s = s.replace(" - ", " + -");
    let mut out = vec![];
    for term in s.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(RingError::Parse(format!("empty term in '{s}'")));
        }
        let mut coef = Rational::one();
        let mut exps = vec![0i32; names.len()];
        for factor in term.split('*') {
            let mut factor = factor.trim();
            if let Some(rest) = factor.strip_prefix('-') {
                if rest.starts_with(|c: char| c.is_alphabetic()) {
                    coef = -coef;
                    factor = rest;
                }
            }
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (
                    b.trim(),
                    e.trim()
                        .parse::<i32>()
                        .map_err(|_| RingError::Parse(format!("bad exponent in '{factor}'")))?,
                ),
                None => (factor, 1),
            };
            if let Some(i) = names.iter().position(|n| n.as_ref() == base) {
                exps[i] += exp;
            } else if base.starts_with(|c: char| c.is_alphabetic()) {
                return Err(RingError::Parse(format!("unknown variable '{base}'")));
            } else {
                if exp != 1 {
                    return Err(RingError::Parse(format!("power of constant in '{factor}'")));
                }
                coef *= parse_rational(base)?;
            }
        }
        out.push((coef, exps));
    }
    Ok(out)
}

impl Laurent {
    pub fn zero(nvars: usize) -> Self {
        Laurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn insert_add(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Splits into a polynomial and a monomial shift: self = x^shift · poly,
    /// where the poly has no monomial factor.
    pub(crate) fn to_poly(&self) -> (MPoly, Vec<i32>) {
        let mut shift = vec![i32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (s, x) in shift.iter_mut().zip(e) {
                *s = (*s).min(*x);
            }
        }
        if self.terms.is_empty() {
            shift = vec![0; self.nvars];
        }
        let mut p = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let pe = e.iter().zip(&shift).map(|(a, b)| (a - b) as u32).collect();
            p.terms.insert(pe, c.clone());
        }
        (p, shift)
    }

    pub(crate) fn from_poly(p: &MPoly, shift: &[i32]) -> Self {
        let mut l = Laurent::zero(p.nvars);
        for (e, c) in &p.terms {
            let le = e.iter().zip(shift).map(|(a, b)| *a as i32 + b).collect();
            l.terms.insert(le, c.clone());
        }
        l
    }

    /// Exact quotient in the Laurent ring, if it exists.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.terms.is_empty() {
            return None;
        }
        let (pn, sn) = self.to_poly();
        let (pd, sd) = d.to_poly();
        let q = pn.exact_div(&pd)?;
        let shift: Vec<i32> = sn.iter().zip(&sd).map(|(a, b)| a - b).collect();
        Some(Laurent::from_poly(&q, &shift))
    }

    /// Evaluates at rational values of all variables (each must be nonzero
    /// when a negative power occurs).
    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational, RingError> {
        assert_eq!(values.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for (x, k) in values.iter().zip(e) {
                t *= x.zpow(*k as i64)?;
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn parse(nvars: usize, s: &str) -> Result<Self, RingError> {
        let names = var_names(nvars);
        let mut acc = Laurent::zero(nvars);
        for (c, e) in parse_monomials(s, &names)? {
            if !c.denom().is_one() {
                return Err(RingError::Parse(format!(
                    "non-integral coefficient in Laurent polynomial '{s}'"
                )));
            }
            acc.insert_add(e, c.numer().clone());
        }
        Ok(acc)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = var_names(self.nvars);
        let parts = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| fmt_monomial(fmt_rational(&Rational::from_integer(c.clone())), e, &names))
            .collect();
        fmt_terms(parts, f)
    }
}

impl Ring for Laurent {
    fn pivot_cost(&self) -> usize {
        if self.is_monomial() && self.terms.values().all(|c| c.magnitude().is_one()) {
            0
        } else {
            self.terms.len() + 1
        }
    }
    fn zero_like(&self) -> Self {
        Laurent::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        Laurent::constant(self.nvars, BigInt::one())
    }
    fn int_like(&self, v: i64) -> Self {
        Laurent::constant(self.nvars, v.into())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }
    fn add_assign(&mut self, o: &Self) {
        assert_eq!(self.nvars, o.nvars, "mixed Laurent rings");
        for (e, c) in &o.terms {
            self.insert_add(e.clone(), c.clone());
        }
    }
    fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "mixed Laurent rings");
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.insert_add(e.clone(), -c);
        }
        r
    }
    fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "mixed Laurent rings");
        let mut r = Laurent::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.insert_add(e, c1 * c2);
            }
        }
        r
    }
    fn neg(&self) -> Self {
        Laurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn try_inv(&self) -> Result<Self, RingError> {
        if self.terms.is_empty() {
            return Err(RingError::DivisionByZero);
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if c.abs().is_one() {
                let ne = e.iter().map(|x| -x).collect();
                return Ok(Laurent::monomial(self.nvars, ne, c.clone()));
            }
        }
        Err(RingError::NotUnit(self.to_string()))
    }
    fn try_div(&self, _o: &Self) -> Result<Self, RingError> {
        Err(RingError::NotAField(self.ring_name()))
    }
    fn is_field() -> bool {
        false
    }
    fn ring_name(&self) -> String {
        format!("laurent({})", self.nvars - 1)
    }
}
