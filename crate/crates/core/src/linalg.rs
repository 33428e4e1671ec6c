//! Sparse exact linear algebra over a field.

use crate::rings::Ring;
use std::collections::{BTreeMap, HashMap};

pub type SparseVec<R> = BTreeMap<usize, R>;

fn axpy<R: Ring>(v: &mut SparseVec<R>, k: &R, x: &SparseVec<R>) {
    for (c, a) in x {
        let t = a.mul(k);
        match v.get_mut(c) {
            Some(e) => {
                *e = e.add(&t);
                if e.is_zero() {
                    v.remove(c);
                }
            }
            None => {
                if !t.is_zero() {
                    v.insert(*c, t);
                }
            }
        }
    }
}

struct Row<R> {
    vec: SparseVec<R>,
    /// The row as a combination of the inserted vectors.
    combo: SparseVec<R>,
}

/// Reduced row echelon form built incrementally. Each row is zero at every
/// other row's pivot column and has a 1 at its own; pivots are chosen by
/// [`Ring::pivot_cost`], so units are preferred.
pub struct Echelon<R> {
    rows: Vec<Row<R>>,
    pivots: HashMap<usize, usize>,
    inserted: usize,
    /// Present when rows track their combinations.
    one: Option<R>,
}

impl<R: Ring> Echelon<R> {
    pub fn new() -> Self {
        assert!(R::is_field(), "echelon forms need a field");
        Echelon {
            rows: vec![],
            pivots: HashMap::new(),
            inserted: 0,
            one: None,
        }
    }

    /// Each row remembers how it arose from the inserted vectors, so
    /// `insert` reports kernel relations and `solve` works.
    pub fn tracking(one: R) -> Self {
        let mut e = Self::new();
        e.one = Some(one);
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivots.keys().copied().collect();
        p.sort_unstable();
        p
    }

    fn reduce_tracked(&self, mut v: SparseVec<R>, mut combo: SparseVec<R>) -> (SparseVec<R>, SparseVec<R>) {
        let hits: Vec<(usize, R)> = v
            .iter()
            .filter(|(c, _)| self.pivots.contains_key(c))
            .map(|(c, a)| (*c, a.neg()))
            .collect();
        for (c, k) in hits {
            let row = &self.rows[self.pivots[&c]];
            axpy(&mut v, &k, &row.vec);
            if self.one.is_some() {
                axpy(&mut combo, &k, &row.combo);
            }
        }
        (v, combo)
    }

    /// Canonical remainder of v modulo the span: zero at every pivot column.
    pub fn reduce(&self, v: &SparseVec<R>) -> SparseVec<R> {
        self.reduce_tracked(v.clone(), SparseVec::new()).0
    }

    pub fn contains(&self, v: &SparseVec<R>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds v. Returns `Ok(true)` if the rank grew; otherwise `Err(relation)`
    /// with the combination of inserted vectors that vanishes (empty without
    /// tracking).
    pub fn insert(&mut self, v: &SparseVec<R>) -> Result<bool, SparseVec<R>> {
        let id = self.inserted;
        self.inserted += 1;
        let mut combo = SparseVec::new();
        if let Some(one) = &self.one {
            combo.insert(id, one.clone());
        }
        let (rem, combo) = self.reduce_tracked(v.clone(), combo);
        let Some((&c, lead)) = rem.iter().min_by_key(|(c, a)| (a.pivot_cost(), **c)) else {
            return Err(combo);
        };
        let inv = lead.try_inv().expect("nonzero in a field");
        let scale = |x: &SparseVec<R>| -> SparseVec<R> { x.iter().map(|(k, a)| (*k, a.mul(&inv))).collect() };
        let row = Row {
            vec: scale(&rem),
            combo: if self.one.is_some() { scale(&combo) } else { SparseVec::new() },
        };
        for other in self.rows.iter_mut() {
            if let Some(a) = other.vec.get(&c) {
                let k = a.neg();
                axpy(&mut other.vec, &k, &row.vec);
                if self.one.is_some() {
                    axpy(&mut other.combo, &k, &row.combo);
                }
            }
        }
        self.pivots.insert(c, self.rows.len());
        self.rows.push(row);
        Ok(true)
    }

    /// Expresses v in terms of the inserted vectors, if v lies in the span.
    pub fn solve(&self, v: &SparseVec<R>) -> Option<SparseVec<R>> {
        assert!(self.one.is_some(), "solve needs tracking");
        let (rem, combo) = self.reduce_tracked(v.clone(), SparseVec::new());
        rem.is_empty().then(|| combo.into_iter().map(|(k, a)| (k, a.neg())).collect())
    }
}

impl<R: Ring> Default for Echelon<R> {
    fn default() -> Self {
        Self::new()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<R: Ring>(vs: &[SparseVec<R>]) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        let _ = e.insert(v);
    }
    e.rank()
}

/// Basis of {z : Σ z_j vs[j] = 0}, as combinations over indices of `vs`.
pub fn kernel<R: Ring>(vs: &[SparseVec<R>], one: &R) -> Vec<SparseVec<R>> {
    let mut e = Echelon::tracking(one.clone());
    vs.iter().filter_map(|v| e.insert(v).err()).collect()
}

/// Dense square solve A·x = b; `None` when A is singular.
pub fn solve_dense<R: Ring>(a: &[Vec<R>], b: &[R]) -> Option<Vec<R>> {
    let n = a.len();
    let mut m: Vec<Vec<R>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].try_inv().ok()?;
        for x in m[col].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let k = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                    *x = x.sub(&k.mul(y));
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a dense square matrix; `None` when it is singular.
pub fn inverse_dense<R: Ring>(a: &[Vec<R>], one: &R) -> Option<Vec<Vec<R>>> {
    let n = a.len();
    let zero = one.zero_like();
    let mut m: Vec<Vec<R>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].try_inv().ok()?;
        for x in m[col].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let k = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                    *x = x.sub(&k.mul(y));
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank of a dense matrix.
pub fn dense_rank<R: Ring>(a: &[Vec<R>]) -> usize {
    let vs: Vec<SparseVec<R>> = a
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
        .collect();
    rank(&vs)
}
