use super::rational::fmt_rational;
use super::{fmt_terms, Field, Rational, Ring, RingError};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
struct CycloCtx {
    e: u32,
    /// Monic Φ_e, low degree first.
    phi: Vec<Rational>,
}

/// Element of ℚ(ζ_e), stored as a residue modulo Φ_e of degree < φ(e).
#[derive(Clone)]
pub struct Cyclotomic {
    ctx: Arc<CycloCtx>,
    coeffs: Vec<Rational>,
}

pub fn euler_phi(e: u32) -> u32 {
    (1..=e).filter(|k| num_integer::gcd(*k, e) == 1).count() as u32
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if Zero::is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    poly_trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[shift + i] -= t;
        }
        q[shift] = c;
        r.pop();
        poly_trim(&mut r);
    }
    poly_trim(&mut q);
    (q, r)
}

fn cyclotomic_poly(e: u32) -> Vec<Rational> {
    let mut num = vec![Rational::zero(); e as usize + 1];
    num[0] = -Rational::one();
    num[e as usize] = Rational::one();
    for d in 1..e {
        if e.is_multiple_of(d) {
            let (q, r) = poly_divmod(&num, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

impl Cyclotomic {
    /// ζ_e, a primitive e-th root of unity.
    pub fn zeta(e: u32) -> Self {
        assert!(e >= 1, "conductor must be positive");
        let ctx = Arc::new(CycloCtx {
            e,
            phi: cyclotomic_poly(e),
        });
        Self::from_poly(ctx, vec![Rational::zero(), Rational::one()])
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.e
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn from_rational(&self, q: Rational) -> Self {
        Self::from_poly(self.ctx.clone(), vec![q])
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> Self {
        let e = self.ctx.e as i64;
        let k = k.rem_euclid(e) as usize;
        let mut p = vec![Rational::zero(); k + 1];
        p[k] = Rational::one();
        Self::from_poly(self.ctx.clone(), p)
    }

    fn from_poly(ctx: Arc<CycloCtx>, p: Vec<Rational>) -> Self {
        let (_, mut r) = poly_divmod(&p, &ctx.phi);
        poly_trim(&mut r);
        Cyclotomic { ctx, coeffs: r }
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.ctx.e, o.ctx.e, "mixed cyclotomic conductors");
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub(crate) fn parse_in(&self, s: &str) -> Result<Self, RingError> {
        let mut acc = self.zero_like();
        for (coef, exps) in super::laurent::parse_monomials(s, &["z"])? {
            acc = acc.add(&self.from_rational(coef).mul(&self.zeta_pow(exps[0] as i64)));
        }
        Ok(acc)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        self.ctx.e == o.ctx.e && self.coeffs == o.coeffs
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({})", self.ctx.e, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                1 => format!("{}*z", fmt_rational(c)),
                _ => format!("{}*z^{}", fmt_rational(c), k),
            })
            .collect();
        fmt_terms(parts, f)
    }
}

impl Ring for Cyclotomic {
    fn pivot_cost(&self) -> usize {
        self.coeffs.iter().filter(|c| !Zero::is_zero(*c)).count()
    }
    fn zero_like(&self) -> Self {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: vec![],
        }
    }
    fn one_like(&self) -> Self {
        self.from_rational(Rational::one())
    }
    fn int_like(&self, v: i64) -> Self {
        self.from_rational(Rational::from_integer(v.into()))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        self.check(o);
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut c: Vec<Rational> = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => Rational::zero(),
            })
            .collect();
        poly_trim(&mut c);
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: c,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.check(o);
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: poly_sub(&self.coeffs, &o.coeffs),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        self.check(o);
        Self::from_poly(self.ctx.clone(), poly_mul(&self.coeffs, &o.coeffs))
    }
    fn neg(&self) -> Self {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn try_inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        // Extended Euclid: find s with s*a ≡ 1 mod Φ_e.
        let (mut r0, mut r1) = (self.ctx.phi.clone(), self.coeffs.clone());
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_e is irreducible, so the final remainder is a nonzero constant.
        let c = r1[0].clone();
        let s: Vec<Rational> = s1.iter().map(|x| x / &c).collect();
        Ok(Self::from_poly(self.ctx.clone(), s))
    }
    fn try_div(&self, o: &Self) -> Result<Self, RingError> {
        Ok(self.mul(&o.try_inv()?))
    }
    fn is_field() -> bool {
        true
    }
    fn ring_name(&self) -> String {
        format!("Q(zeta_{})", self.ctx.e)
    }
}

impl Field for Cyclotomic {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_degrees() {
        for e in 1..=12u32 {
            assert_eq!(cyclotomic_poly(e).len() as u32 - 1, euler_phi(e));
        }
    }

    #[test]
    fn zeta_two_is_minus_one() {
        let z = Cyclotomic::zeta(2);
        assert_eq!(z.mul(&z), z.one_like());
        assert_eq!(z, z.int_like(-1));
        let m1 = z.int_like(-1);
        assert_eq!(z.one_like().try_div(&m1).unwrap(), m1);
    }

    #[test]
    fn zeta_three_relations() {
        let z = Cyclotomic::zeta(3);
        let one = z.one_like();
        assert_eq!(z.pow(3), one);
        assert!(one.add(&z).add(&z.pow(2)).is_zero());
        let a = z.add(&z.int_like(2));
        assert_eq!(a.mul(&a.try_inv().unwrap()), one);
        assert_eq!(z.zeta_pow(-1), z.pow(2));
    }

    #[test]
    fn parse_round_trip() {
        let z = Cyclotomic::zeta(5);
        let a = z.pow(3).add(&z.int_like(-2)).add(&z.mul(&z.int_like(3)));
        let b = z.parse_in(&a.to_string()).unwrap();
        assert_eq!(a, b);
    }
}
