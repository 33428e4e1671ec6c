use crate::rings::Ring;
use std::collections::BTreeMap;

/// Sparse combination of Ariki–Koike basis elements, keyed by basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<R> {
    pub terms: BTreeMap<usize, R>,
}

impl<R: Ring> HeckeElement<R> {
    pub fn zero() -> Self {
        HeckeElement { terms: BTreeMap::new() }
    }

    pub fn monomial(j: usize, a: R) -> Self {
        let mut x = Self::zero();
        x.add_term(j, &a);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, j: usize) -> Option<R> {
        self.terms.get(&j).cloned()
    }

    pub fn add_term(&mut self, j: usize, a: &R) {
        if a.is_zero() {
            return;
        }
        match self.terms.get_mut(&j) {
            Some(v) => {
                *v = v.add(a);
                if v.is_zero() {
                    self.terms.remove(&j);
                }
            }
            None => {
                self.terms.insert(j, a.clone());
            }
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (j, a) in &o.terms {
            self.add_term(*j, a);
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &R) {
        if k.is_zero() {
            return;
        }
        for (j, a) in &o.terms {
            self.add_term(*j, &a.mul(k));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        x.add_assign(o);
        x
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for (j, a) in &o.terms {
            x.add_term(*j, &a.neg());
        }
        x
    }

    pub fn neg(&self) -> Self {
        HeckeElement {
            terms: self.terms.iter().map(|(j, a)| (*j, a.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut x = Self::zero();
        x.add_scaled(self, k);
        x
    }

    /// Dense coordinate vector of length `dim`.
    pub fn to_dense(&self, dim: usize, zero: &R) -> Vec<R> {
        let mut v = vec![zero.clone(); dim];
        for (j, a) in &self.terms {
            v[*j] = a.clone();
        }
        v
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> HeckeElement<S> {
        let mut x = HeckeElement::zero();
        for (j, a) in &self.terms {
            x.add_term(*j, &f(a));
        }
        x
    }
}
