//! Semisimple structure: idempotents F_t, seminormal bases, Schur elements
//! and characters, all computed inside the algebra.

use crate::hecke::{Hecke, HeckeElement};
use crate::linalg::{Echelon, SparseVec};
use crate::par;
use crate::rings::Ring;
use crate::tableaux::{enumerate_multipartitions, initial_tableau_row, MultiPartition, StdTableau};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeminormalError {
    #[error("not semisimple: {0} vanishes")]
    NotSemisimple(String),
    #[error("a field is required")]
    NotAField,
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// Evaluates the semisimplicity product factor by factor and names the first
/// vanishing factor.
pub fn check_semisimple<R: Ring>(h: &Hecke<R>) -> Result<(), SeminormalError> {
    if !R::is_field() {
        return Err(SeminormalError::NotAField);
    }
    let n = h.n() as i64;
    let mut partial = h.zero_coeff();
    for k in 1..=n {
        partial = partial.add(&h.xi.pow(k as u64 - 1));
        if partial.is_zero() {
            let terms: Vec<String> = (0..k).map(|j| format!("xi^{j}")).collect();
            return Err(SeminormalError::NotSemisimple(terms.join("+")));
        }
    }
    for l in 0..h.r() {
        for lp in l + 1..h.r() {
            for k in (1 - n)..n {
                let f = h.xi.zpow(k).expect("unit").mul(&h.q[l]).sub(&h.q[lp]);
                if f.is_zero() {
                    return Err(SeminormalError::NotSemisimple(format!("xi^{k}*Q{} - Q{}", l + 1, lp + 1)));
                }
            }
        }
    }
    Ok(())
}

/// Elementary symmetric polynomial e_m evaluated at a vector.
fn elementary<R: Ring>(m: usize, xs: &[R], one: &R) -> R {
    let mut e = vec![one.zero_like(); m + 1];
    e[0] = one.clone();
    for x in xs {
        for k in (1..=m).rev() {
            e[k] = e[k].add(&e[k - 1].mul(x));
        }
    }
    e[m].clone()
}

pub struct Seminormal<'a, R: Ring> {
    pub h: &'a Hecke<R>,
    pub shapes: Vec<MultiPartition>,
    pub tableaux: Vec<Vec<StdTableau>>,
    contents: Vec<Vec<Vec<R>>>,
    /// C(k) for k = 1..n.
    pub content_sets: Vec<Vec<R>>,
    f_idem: Vec<Vec<HeckeElement<R>>>,
    elementary_jm: Vec<HeckeElement<R>>,
}

impl<'a, R: Ring> Seminormal<'a, R> {
    pub fn new(h: &'a Hecke<R>) -> Result<Self, SeminormalError> {
        check_semisimple(h)?;
        let shapes = enumerate_multipartitions(h.r(), h.n());
        let tableaux: Vec<Vec<StdTableau>> = shapes.iter().map(|s| s.std_tableaux()).collect();
        let content_value = |t: &StdTableau, k: usize| {
            let c = t.content(k);
            h.xi.zpow(c.diag).expect("unit").mul(&h.q[c.comp - 1])
        };
        let contents: Vec<Vec<Vec<R>>> = tableaux
            .iter()
            .map(|ts| ts.iter().map(|t| (1..=h.n()).map(|k| content_value(t, k)).collect()).collect())
            .collect();
        let mut content_sets: Vec<Vec<R>> = vec![vec![]; h.n()];
        for cs in contents.iter().flatten() {
            for (k, c) in cs.iter().enumerate() {
                if !content_sets[k].contains(c) {
                    content_sets[k].push(c.clone());
                }
            }
        }
        let mut sn = Seminormal {
            h,
            shapes,
            tableaux,
            contents,
            content_sets,
            f_idem: vec![],
            elementary_jm: vec![],
        };
        let flat: Vec<(usize, usize)> = sn
            .tableaux
            .iter()
            .enumerate()
            .flat_map(|(a, ts)| (0..ts.len()).map(move |b| (a, b)))
            .collect();
        let idems = par::map(&flat, |&(a, b)| sn.compute_f_t(&sn.contents[a][b]));
        let mut it = idems.into_iter();
        sn.f_idem = sn.tableaux.iter().map(|ts| ts.iter().map(|_| it.next().unwrap()).collect()).collect();
        sn.elementary_jm = (1..=h.n()).map(|m| h.elementary_jm(m)).collect();
        Ok(sn)
    }

    fn compute_f_t(&self, cont: &[R]) -> HeckeElement<R> {
        let h = self.h;
        let mut x = h.one();
        for (k, ck) in cont.iter().enumerate() {
            for c in &self.content_sets[k] {
                if c == ck {
                    continue;
                }
                let denom = ck.sub(c).try_inv().expect("contents are distinct");
                let lx = h.left_mul_jm(k + 1, &x);
                x = lx.sub(&x.scale(c)).scale(&denom);
            }
        }
        x
    }

    pub fn shape_index(&self, shape: &MultiPartition) -> Option<usize> {
        self.shapes.iter().position(|s| s == shape)
    }

    /// (shape index, tableau index) of a standard tableau.
    pub fn locate(&self, t: &StdTableau) -> Option<(usize, usize)> {
        let a = self.shape_index(&t.shape)?;
        let b = self.tableaux[a].iter().position(|u| u == t)?;
        Some((a, b))
    }

    pub fn content_vector(&self, a: usize, b: usize) -> &[R] {
        &self.contents[a][b]
    }

    pub fn f_t(&self, a: usize, b: usize) -> &HeckeElement<R> {
        &self.f_idem[a][b]
    }

    pub fn f_lambda(&self, a: usize) -> HeckeElement<R> {
        let mut x = HeckeElement::zero();
        for f in &self.f_idem[a] {
            x.add_assign(f);
        }
        x
    }

    /// m_{t^λ t^λ} = (Σ_{w∈S_λ} T_w)·Π_{k≥2}Π_{m ≤ |λ^(1)|+⋯+|λ^(k−1)|}(𝓛_m − Q_k).
    pub fn m_lambda(&self, shape: &MultiPartition) -> HeckeElement<R> {
        let h = self.h;
        let rows = row_blocks(&initial_tableau_row(shape).rows());
        let sym = young_sum(h, &rows, |_| h.one_coeff());
        let mut u = h.one();
        let mut size = 0;
        for k in 1..h.r() {
            size += shape.components[k - 1].iter().sum::<usize>();
            for m in 1..=size {
                u = h.left_mul_jm(m, &u).sub(&u.scale(&h.q[k]));
            }
        }
        h.mul(&sym, &u)
    }

    /// n_{t_λ t_λ} with the conjugate Young subgroup and the reversed
    /// cyclotomic factors.
    pub fn n_lambda(&self, shape: &MultiPartition) -> HeckeElement<R> {
        let h = self.h;
        let r = h.r();
        let cols = row_blocks(&initial_tableau_row(&shape.conjugate()).rows());
        let mxi_inv = h.xi.neg().try_inv().expect("unit");
        let sym = young_sum(h, &cols, |len| mxi_inv.pow(len as u64));
        let mut u = h.one();
        let mut size = 0;
        for k in 2..=r {
            size += shape.components[r - k + 1].iter().sum::<usize>();
            for m in 1..=size {
                u = h.left_mul_jm(m, &u).sub(&u.scale(&h.q[r - k]));
            }
        }
        h.mul(&sym, &u)
    }

    pub fn m_basis(&self, s: &StdTableau, t: &StdTableau) -> Result<HeckeElement<R>, SeminormalError> {
        if s.shape != t.shape {
            return Err(SeminormalError::ShapeMismatch);
        }
        let h = self.h;
        let core = self.m_lambda(&s.shape);
        let left = h.star(&h.t_perm(&s.d_perm()));
        Ok(h.mul(&h.mul(&left, &core), &h.t_perm(&t.d_perm())))
    }

    pub fn n_basis(&self, s: &StdTableau, t: &StdTableau) -> Result<HeckeElement<R>, SeminormalError> {
        if s.shape != t.shape {
            return Err(SeminormalError::ShapeMismatch);
        }
        let h = self.h;
        let core = self.n_lambda(&s.shape);
        let left = h.star(&h.t_perm(&s.d_perm_col()));
        Ok(h.mul(&h.mul(&left, &core), &h.t_perm(&t.d_perm_col())))
    }

    fn idem(&self, t: &StdTableau) -> &HeckeElement<R> {
        let (a, b) = self.locate(t).expect("tableau of this algebra");
        &self.f_idem[a][b]
    }

    pub fn f_basis(&self, s: &StdTableau, t: &StdTableau) -> Result<HeckeElement<R>, SeminormalError> {
        let m = self.m_basis(s, t)?;
        Ok(self.h.mul(&self.h.mul(self.idem(s), &m), self.idem(t)))
    }

    pub fn g_basis(&self, s: &StdTableau, t: &StdTableau) -> Result<HeckeElement<R>, SeminormalError> {
        let m = self.n_basis(s, t)?;
        Ok(self.h.mul(&self.h.mul(self.idem(s), &m), self.idem(t)))
    }

    /// The scalar c with x·x = c·x.
    fn square_ratio(&self, x: &HeckeElement<R>) -> Result<R, SeminormalError> {
        let sq = self.h.mul(x, x);
        let (j, a) = x
            .terms
            .iter()
            .next()
            .ok_or_else(|| SeminormalError::Inconsistent("zero seminormal element".into()))?;
        let b = sq.coeff(*j).unwrap_or_else(|| self.h.zero_coeff());
        let c = b.try_div(a).expect("field");
        if sq != x.scale(&c) {
            return Err(SeminormalError::Inconsistent("square is not a multiple".into()));
        }
        Ok(c)
    }

    /// γ_t from f_tt² = γ_t f_tt.
    pub fn gamma(&self, t: &StdTableau) -> Result<R, SeminormalError> {
        self.square_ratio(&self.f_basis(t, t)?)
    }

    /// γ′ from g_tt² = γ′ g_tt.
    pub fn gamma_prime(&self, t: &StdTableau) -> Result<R, SeminormalError> {
        self.square_ratio(&self.g_basis(t, t)?)
    }

    fn shape_contents(&self, a: usize) -> &[R] {
        &self.contents[a][0]
    }

    /// g_λ(𝓛₁..𝓛_n) built from elementary symmetric separators.
    pub fn central_idempotent_via_symmetric(&self, a: usize) -> Result<HeckeElement<R>, SeminormalError> {
        let h = self.h;
        let one = h.one_coeff();
        let cl = self.shape_contents(a);
        let mut x = h.one();
        for b in 0..self.shapes.len() {
            if b == a {
                continue;
            }
            let cm = self.shape_contents(b);
            let (m, el, em) = (1..=h.n())
                .map(|m| (m, elementary(m, cl, &one), elementary(m, cm, &one)))
                .find(|(_, el, em)| el != em)
                .ok_or_else(|| {
                    SeminormalError::Inconsistent(format!("no separator between {} and {}", self.shapes[a], self.shapes[b]))
                })?;
            let inv = el.sub(&em).try_inv().expect("field");
            let factor = self.elementary_jm[m - 1].sub(&h.scalar(em)).scale(&inv);
            x = h.mul(&x, &factor);
        }
        Ok(x)
    }

    /// s_λ = 1/τ(F_t), checked to be independent of t.
    pub fn schur_element(&self, a: usize) -> Result<R, SeminormalError> {
        let h = self.h;
        let mut val: Option<R> = None;
        for f in &self.f_idem[a] {
            let tau = h.tau(f);
            let s = tau
                .try_inv()
                .map_err(|_| SeminormalError::Inconsistent("tau(F_t) vanishes".into()))?;
            match &val {
                None => val = Some(s),
                Some(v) if *v != s => {
                    return Err(SeminormalError::Inconsistent(format!("Schur element of {} depends on t", self.shapes[a])))
                }
                _ => {}
            }
        }
        Ok(val.expect("shapes have tableaux"))
    }

    /// χ_λ(x) = s_λ·τ(x F_λ).
    pub fn character(&self, a: usize, x: &HeckeElement<R>) -> Result<R, SeminormalError> {
        let s = self.schur_element(a)?;
        Ok(s.mul(&self.h.tau(&self.h.mul(x, &self.f_lambda(a)))))
    }

    /// Trace of left multiplication by x F_λ on H, divided by |Std(λ)|.
    pub fn character_via_trace(&self, a: usize, x: &HeckeElement<R>) -> R {
        let h = self.h;
        let y = h.mul(x, &self.f_lambda(a));
        let diag = par::map_range(h.dim(), |j| h.mul(&y, &h.basis(j)).coeff(j).unwrap_or_else(|| h.zero_coeff()));
        let tr = diag.iter().fold(h.zero_coeff(), |acc, v| acc.add(v));
        let d = h.one_coeff().int_like(self.tableaux[a].len() as i64);
        tr.try_div(&d).expect("field")
    }

    /// All pairs (s, t) in shape order.
    pub fn pairs(&self) -> Vec<(StdTableau, StdTableau)> {
        let mut out = vec![];
        for ts in &self.tableaux {
            for s in ts {
                for t in ts {
                    out.push((s.clone(), t.clone()));
                }
            }
        }
        out
    }

    /// Expansion of m_st in the seminormal basis, keyed by pair index.
    pub fn m_in_f_basis(&self) -> Result<Vec<SparseVec<R>>, SeminormalError> {
        let pairs = self.pairs();
        let fs = par::map(&pairs, |(s, t)| self.f_basis(s, t));
        let mut e = Echelon::tracking(self.h.one_coeff());
        for f in fs {
            let f = f?;
            if e.insert(&f.terms).is_err() {
                return Err(SeminormalError::Inconsistent("seminormal basis is dependent".into()));
            }
        }
        let ms = par::map(&pairs, |(s, t)| self.m_basis(s, t));
        ms.into_iter()
            .map(|m| {
                e.solve(&m?.terms)
                    .ok_or_else(|| SeminormalError::Inconsistent("m_st outside the seminormal span".into()))
            })
            .collect()
    }

    /// (u, v) ⊵ (s, t) on pairs of standard tableaux.
    pub fn pair_dominates(u: &StdTableau, v: &StdTableau, s: &StdTableau, t: &StdTableau) -> bool {
        if u.shape != s.shape {
            return u.shape.dominates(&s.shape);
        }
        u.dominates(s) && v.dominates(t)
    }
}

/// Maximal runs of consecutive entries in rows, as (start, len) 0-based.
fn row_blocks(rows: &[Vec<Vec<usize>>]) -> Vec<(usize, usize)> {
    rows.iter()
        .flatten()
        .filter(|row| !row.is_empty())
        .map(|row| (row[0] - 1, row.len()))
        .collect()
}

/// Σ_{w ∈ Young subgroup} weight(ℓ(w))·T_w.
fn young_sum<R: Ring>(h: &Hecke<R>, blocks: &[(usize, usize)], weight: impl Fn(usize) -> R) -> HeckeElement<R> {
    let n = h.n();
    let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
    for &(start, len) in blocks {
        let mut next = vec![];
        for p in &perms {
            for sub in crate::hecke::all_perms(len) {
                let mut q = p.clone();
                for (i, &x) in sub.iter().enumerate() {
                    q[start + i] = start + x;
                }
                next.push(q);
            }
        }
        perms = next;
    }
    let mut out = HeckeElement::zero();
    for p in perms {
        let l = crate::group::perm_length(&p);
        out.add_term(h.index_of(&vec![0u32; n], &p), &weight(l));
    }
    out
}
