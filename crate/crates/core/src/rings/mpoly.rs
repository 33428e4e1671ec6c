//! Sparse multivariate polynomials over ℤ with exact division and gcd.
//!
//! The gcd is the classical recursive one: split off the content with
//! respect to the first live variable, run a primitive pseudo-remainder
//! sequence on the primitive parts, and recurse on the contents.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    pub(crate) nvars: usize,
    /// Exponent vector → nonzero coefficient; lexicographic order, so the
    /// last entry is the leading term.
    pub(crate) terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
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

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: BigInt) -> Self {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| *x == 0))
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    fn lead(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, e: Vec<u32>, c: BigInt) {
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

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.insert_add(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.insert_add(e.clone(), -c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.insert_add(e, c1 * c2);
            }
        }
        r
    }

    fn mul_term(&self, e: &[u32], c: &BigInt) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e1, c1)| (e1.iter().zip(e).map(|(a, b)| a + b).collect(), c1 * c))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (de, dc) = d.lead()?;
        let (de, dc) = (de.clone(), dc.clone());
        if d.terms.len() == 1 {
            let mut q = Self::zero(self.nvars);
            for (e, c) in &self.terms {
                let (qc, rc) = c.div_rem(&dc);
                if !rc.is_zero() || e.iter().zip(&de).any(|(a, b)| a < b) {
                    return None;
                }
                q.terms.insert(e.iter().zip(&de).map(|(a, b)| a - b).collect(), qc);
            }
            return Some(q);
        }
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((re, rc)) = r.lead() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let (qc, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let t = d.mul_term(&qe, &qc);
            r = r.sub(&t);
            q.insert_add(qe, qc);
        }
        Some(q)
    }

    pub fn deg_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Coefficients with respect to variable `v` (index k ↦ coefficient of v^k).
    fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let d = self.deg_in(v) as usize;
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            let mut e2 = e.clone();
            e2[v] = 0;
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    fn lc_in(&self, v: usize) -> MPoly {
        self.coeffs_in(v).pop().unwrap_or_else(|| Self::zero(self.nvars))
    }

    fn shift_in(&self, v: usize, k: u32) -> Self {
        let mut e = vec![0; self.nvars];
        e[v] = k;
        self.mul_term(&e, &BigInt::one())
    }

    fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Makes the leading coefficient positive.
    pub fn sign_normalized(mut self) -> Self {
        if self.lead().is_some_and(|(_, c)| c.is_negative()) {
            self = self.neg();
        }
        self
    }

    pub fn leading_is_negative(&self) -> bool {
        self.lead().is_some_and(|(_, c)| c.is_negative())
    }

    fn content_in(&self, v: usize) -> MPoly {
        let mut g = Self::zero(self.nvars);
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_constant() && g.terms.values().all(|x| x.is_one()) {
                break;
            }
        }
        g
    }

    fn primpart_in(&self, v: usize) -> MPoly {
        let c = self.content_in(v);
        self.exact_div(&c).expect("content divides")
    }

    fn prem_in(&self, b: &Self, v: usize) -> MPoly {
        let db = b.deg_in(v);
        let lb = b.lc_in(v);
        let mut r = self.clone();
        while !r.is_zero() && r.deg_in(v) >= db {
            let dr = r.deg_in(v);
            let lr = r.lc_in(v);
            r = r.mul(&lb).sub(&b.mul(&lr).shift_in(v, dr - db));
        }
        r
    }
}

/// Greatest common divisor with positive leading coefficient.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone().sign_normalized();
    }
    if b.is_zero() {
        return a.clone().sign_normalized();
    }
    let nv = a.nvars;
    let live = (0..nv).find(|&v| a.deg_in(v) > 0 || b.deg_in(v) > 0);
    let Some(v) = live else {
        return MPoly::constant(nv, a.integer_content().gcd(&b.integer_content()));
    };
    if a.deg_in(v) == 0 {
        return gcd(a, &b.content_in(v));
    }
    if b.deg_in(v) == 0 {
        return gcd(&a.content_in(v), b);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let (mut f, mut g) = if pa.deg_in(v) >= pb.deg_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = f.prem_in(&g, v);
        if r.is_zero() {
            break;
        }
        if r.deg_in(v) == 0 {
            g = MPoly::constant(nv, BigInt::one());
            break;
        }
        f = g;
        g = r.primpart_in(v);
    }
    let g = g.primpart_in(v);
    c.mul(&g).sign_normalized()
}
