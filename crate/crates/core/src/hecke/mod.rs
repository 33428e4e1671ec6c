//! The cyclotomic Hecke algebra H_n(ξ; Q₁..Q_r) on the Ariki–Koike basis
//! 𝓛₁^{c₁}⋯𝓛_n^{c_n}T_w.
//!
//! Products are computed by left multiplication with generators. Moving T_i
//! past 𝓛_i^a𝓛_{i+1}^b never raises an exponent above max(a, b), so the only
//! reduction ever needed is 𝓛₁^r via the cyclotomic relation.

mod element;

pub use element::HeckeElement;

use crate::group::{
    bm_normal_form, perm_length, perm_reduced_word, w_alpha_word, ColoredSemiBicomposition, Gen, GroupElement,
    GroupError, GroupParams,
};
use crate::par;
use crate::rings::{Laurent, RatFunc, Rational, Ring};
use std::collections::HashMap;
use std::sync::OnceLock;

type Sparse<R> = Vec<(usize, R)>;

pub struct Hecke<R: Ring> {
    pub params: GroupParams,
    pub xi: R,
    pub q: Vec<R>,
    xi_inv: R,
    nfact: usize,
    dim: usize,
    perms: Vec<Vec<usize>>,
    perm_index: HashMap<Vec<usize>, usize>,
    /// (rank of s_i·w, whether the length goes up), indexed [w][i-1].
    left_s: Vec<Vec<(usize, bool)>>,
    /// 𝓛₁^r = Σ_k cyc[k]·𝓛₁^k.
    cyc: Vec<R>,
    /// Left multiplication by T₀..T_{n−1} on basis elements.
    left_gen: Vec<Vec<Sparse<R>>>,
    /// Left multiplication by 𝓛₁..𝓛_n on basis elements.
    left_jm: Vec<Vec<Sparse<R>>>,
    right_gen: OnceLock<Vec<Vec<Sparse<R>>>>,
}

pub(crate) fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        out.push(p.clone());
    }
}

/// A basis label (c, w) with 0 ≤ c_m < r and w ∈ S_n (0-based images).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub c: Vec<u32>,
    pub w: Vec<usize>,
}

impl<R: Ring> Hecke<R> {
    pub fn new(params: GroupParams, xi: R, q: Vec<R>) -> Result<Self, GroupError> {
        let (r, n) = (params.r as usize, params.n);
        if q.len() != r {
            return Err(GroupError::BadParams { r: params.r, n });
        }
        let xi_inv = xi.try_inv().map_err(|_| GroupError::BadElement("xi must be a unit".into()))?;
        let perms = all_perms(n);
        let nfact = perms.len();
        let perm_index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let left_s = perms
            .iter()
            .map(|w| {
                let lw = perm_length(w);
                (1..n)
                    .map(|i| {
                        let sw: Vec<usize> = w
                            .iter()
                            .map(|&x| if x == i - 1 { i } else if x == i { i - 1 } else { x })
                            .collect();
                        (perm_index[&sw], perm_length(&sw) > lw)
                    })
                    .collect()
            })
            .collect();
        // Π(x − Q_l) = x^r + Σ_k p_k x^k, so x^r = −Σ_k p_k x^k.
        let mut poly = vec![xi.one_like()];
        for ql in &q {
            let mut next = vec![xi.zero_like(); poly.len() + 1];
            for (k, a) in poly.iter().enumerate() {
                next[k + 1] = next[k + 1].add(a);
                next[k] = next[k].sub(&a.mul(ql));
            }
            poly = next;
        }
        let cyc = poly[..r].iter().map(|p| p.neg()).collect();
        let mut h = Hecke {
            params,
            xi,
            q,
            xi_inv,
            nfact,
            dim: r.pow(n as u32) * nfact,
            perms,
            perm_index,
            left_s,
            cyc,
            left_gen: vec![],
            left_jm: vec![],
            right_gen: OnceLock::new(),
        };
        h.left_gen = (0..n).map(|g| (0..h.dim).map(|j| h.compute_left_gen(g, j)).collect()).collect();
        h.left_jm = (1..=n).map(|m| (0..h.dim).map(|j| h.compute_left_jm(m, j)).collect()).collect();
        Ok(h)
    }

    pub fn r(&self) -> usize {
        self.params.r as usize
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero_coeff(&self) -> R {
        self.xi.zero_like()
    }

    pub fn one_coeff(&self) -> R {
        self.xi.one_like()
    }

    pub fn index_of(&self, c: &[u32], w: &[usize]) -> usize {
        let r = self.r();
        let code = c.iter().rev().fold(0usize, |acc, &x| acc * r + x as usize);
        code * self.nfact + self.perm_index[w]
    }

    pub fn basis_index(&self, j: usize) -> BasisIndex {
        let r = self.r();
        let (mut code, w) = (j / self.nfact, j % self.nfact);
        let mut c = vec![0; self.n()];
        for x in c.iter_mut() {
            *x = (code % r) as u32;
            code /= r;
        }
        BasisIndex {
            c,
            w: self.perms[w].clone(),
        }
    }

    fn split(&self, j: usize) -> (Vec<u32>, usize) {
        let b = self.basis_index(j);
        (b.c, j % self.nfact)
    }

    fn join(&self, c: &[u32], w: usize) -> usize {
        let r = self.r();
        let code = c.iter().rev().fold(0usize, |acc, &x| acc * r + x as usize);
        code * self.nfact + w
    }

    pub fn zero(&self) -> HeckeElement<R> {
        HeckeElement::zero()
    }

    pub fn one(&self) -> HeckeElement<R> {
        self.basis(0)
    }

    pub fn basis(&self, j: usize) -> HeckeElement<R> {
        HeckeElement::monomial(j, self.one_coeff())
    }

    pub fn scalar(&self, a: R) -> HeckeElement<R> {
        HeckeElement::monomial(0, a)
    }

    /// T₀ for g = 0, T_g otherwise.
    pub fn generator(&self, g: usize) -> HeckeElement<R> {
        assert!(g < self.n(), "generator T{g} out of range");
        if g == 0 {
            return self.jm(1);
        }
        let mut w: Vec<usize> = (0..self.n()).collect();
        w.swap(g - 1, g);
        self.basis(self.index_of(&vec![0; self.n()], &w))
    }

    /// 𝓛_m, a single basis element when r ≥ 2.
    pub fn jm(&self, m: usize) -> HeckeElement<R> {
        assert!((1..=self.n()).contains(&m), "jm index out of range");
        let mut c = vec![0; self.n()];
        let id: Vec<usize> = (0..self.n()).collect();
        if self.r() == 1 {
            return self.jm_word_product(m);
        }
        c[m - 1] = 1;
        self.basis(self.index_of(&c, &id))
    }

    /// ξ^{1−m}T_{m−1}⋯T₁T₀T₁⋯T_{m−1} evaluated through generator products.
    pub fn jm_word_product(&self, m: usize) -> HeckeElement<R> {
        let word = Self::jm_word(m);
        self.word_product(&word).scale(&self.xi_inv.pow(m as u64 - 1))
    }

    fn jm_word(m: usize) -> Vec<usize> {
        let mut word: Vec<usize> = (0..m).rev().collect();
        word.extend(1..m);
        word
    }

    fn compute_left_gen(&self, g: usize, j: usize) -> Sparse<R> {
        let (c, w) = self.split(j);
        let one = self.one_coeff();
        if g == 0 {
            if (c[0] as usize) + 1 < self.r() {
                let mut c2 = c.clone();
                c2[0] += 1;
                return vec![(self.join(&c2, w), one)];
            }
            return (0..self.r())
                .filter(|&k| !self.cyc[k].is_zero())
                .map(|k| {
                    let mut c2 = c.clone();
                    c2[0] = k as u32;
                    (self.join(&c2, w), self.cyc[k].clone())
                })
                .collect();
        }
        let i = g;
        let (a, b) = (c[i - 1], c[i]);
        let m = a.min(b);
        let xm1 = self.xi.sub(&one);
        let with = |ci: u32, cj: u32| {
            let mut c2 = c.clone();
            c2[i - 1] = ci;
            c2[i] = cj;
            c2
        };
        let mut out: HashMap<usize, R> = HashMap::new();
        let mut push = |idx: usize, v: R| {
            let e = out.entry(idx).or_insert_with(|| v.zero_like());
            *e = e.add(&v);
        };
        // Terms 𝓛^{c'} T_i T_w.
        let ti_term = if a >= b { with(m, m + (a - b)) } else { with(m + (b - a), m) };
        let (sw, up) = self.left_s[w][i - 1];
        if up {
            push(self.join(&ti_term, sw), one.clone());
        } else {
            push(self.join(&ti_term, w), xm1.clone());
            push(self.join(&ti_term, sw), self.xi.clone());
        }
        // Terms 𝓛^{c''} T_w.
        if a > b {
            let k = a - b;
            for jj in 1..=k {
                push(self.join(&with(m + k - jj, m + jj), w), xm1.neg());
            }
        } else if b > a {
            let k = b - a;
            for jj in 0..k {
                push(self.join(&with(m + jj, m + k - jj), w), xm1.clone());
            }
        }
        let mut v: Sparse<R> = out.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    fn compute_left_jm(&self, m: usize, j: usize) -> Sparse<R> {
        let (c, w) = self.split(j);
        if (c[m - 1] as usize) + 1 < self.r() {
            let mut c2 = c;
            c2[m - 1] += 1;
            return vec![(self.join(&c2, w), self.one_coeff())];
        }
        let mut x = self.basis(j);
        for &g in Self::jm_word(m).iter().rev() {
            x = self.apply(&self.left_gen[g], &x);
        }
        let x = x.scale(&self.xi_inv.pow(m as u64 - 1));
        x.terms.into_iter().collect()
    }

    fn apply(&self, table: &[Sparse<R>], x: &HeckeElement<R>) -> HeckeElement<R> {
        let mut out = HeckeElement::zero();
        for (j, a) in &x.terms {
            for (k, v) in &table[*j] {
                out.add_term(*k, &a.mul(v));
            }
        }
        out
    }

    /// T_g·x, with g = 0 meaning T₀.
    pub fn left_mul_generator(&self, g: usize, x: &HeckeElement<R>) -> HeckeElement<R> {
        self.apply(&self.left_gen[g], x)
    }

    /// 𝓛_m·x.
    pub fn left_mul_jm(&self, m: usize, x: &HeckeElement<R>) -> HeckeElement<R> {
        self.apply(&self.left_jm[m - 1], x)
    }

    /// x·T_g.
    pub fn mul_by_generator_right(&self, x: &HeckeElement<R>, g: usize) -> HeckeElement<R> {
        self.apply(&self.right_table()[g], x)
    }

    fn right_table(&self) -> &Vec<Vec<Sparse<R>>> {
        self.right_gen.get_or_init(|| {
            (0..self.n())
                .map(|g| {
                    let tg = self.generator(g);
                    par::map_range(self.dim, |j| {
                        self.mul(&self.basis(j), &tg).terms.into_iter().collect()
                    })
                })
                .collect()
        })
    }

    /// T_{x₁}⋯T_{x_k} for a word over 0..n−1 (0 meaning T₀).
    pub fn word_product(&self, word: &[usize]) -> HeckeElement<R> {
        let mut x = self.one();
        for &g in word.iter().rev() {
            x = self.left_mul_generator(g, &x);
        }
        x
    }

    pub fn gen_word_product(&self, word: &[Gen]) -> HeckeElement<R> {
        let idx: Vec<usize> = word.iter().map(|g| g.index()).collect();
        self.word_product(&idx)
    }

    /// Parent of w in the left weak order: (i, s_i·w) with ℓ(s_i·w) < ℓ(w).
    fn left_parent(&self, w: usize) -> Option<(usize, usize)> {
        (1..self.n()).find_map(|i| {
            let (sw, up) = self.left_s[w][i - 1];
            (!up).then_some((i, sw))
        })
    }

    pub fn mul(&self, x: &HeckeElement<R>, y: &HeckeElement<R>) -> HeckeElement<R> {
        if x.is_zero() || y.is_zero() {
            return HeckeElement::zero();
        }
        let mut groups: HashMap<usize, Vec<(Vec<u32>, R)>> = HashMap::new();
        for (j, a) in &x.terms {
            let (c, w) = self.split(*j);
            groups.entry(w).or_default().push((c, a.clone()));
        }
        // T_w·y along left-weak-order chains.
        let mut tw: HashMap<usize, HeckeElement<R>> = HashMap::new();
        let id = 0usize;
        tw.insert(id, y.clone());
        let mut keys: Vec<usize> = groups.keys().copied().collect();
        keys.sort_unstable();
        for &w in &keys {
            let mut chain = vec![];
            let mut cur = w;
            while !tw.contains_key(&cur) {
                let (i, p) = self.left_parent(cur).expect("non-identity has a descent");
                chain.push((cur, i));
                cur = p;
            }
            for &(node, i) in chain.iter().rev() {
                let (_, p) = self.left_parent(node).unwrap();
                let v = self.left_mul_generator(i, &tw[&p]);
                tw.insert(node, v);
            }
        }
        let parts = par::map(&keys, |w| {
            let base = &tw[w];
            let mut memo: HashMap<Vec<u32>, HeckeElement<R>> = HashMap::new();
            memo.insert(vec![0; self.n()], base.clone());
            let mut acc = HeckeElement::zero();
            for (c, a) in &groups[w] {
                let v = self.jm_power(c, &mut memo);
                acc.add_scaled(&v, a);
            }
            acc
        });
        let mut out = HeckeElement::zero();
        for p in parts {
            out.add_assign(&p);
        }
        out
    }

    fn jm_power(&self, c: &[u32], memo: &mut HashMap<Vec<u32>, HeckeElement<R>>) -> HeckeElement<R> {
        if let Some(v) = memo.get(c) {
            return v.clone();
        }
        let m = c.iter().rposition(|&x| x > 0).unwrap();
        let mut prev = c.to_vec();
        prev[m] -= 1;
        let p = self.jm_power(&prev, memo);
        let v = self.left_mul_jm(m + 1, &p);
        memo.insert(c.to_vec(), v.clone());
        v
    }

    pub fn commutator(&self, x: &HeckeElement<R>, y: &HeckeElement<R>) -> HeckeElement<R> {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    pub fn pow(&self, x: &HeckeElement<R>, e: u32) -> HeckeElement<R> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Coefficient of the identity basis element.
    pub fn tau(&self, x: &HeckeElement<R>) -> R {
        x.coeff(0).unwrap_or_else(|| self.zero_coeff())
    }

    /// The anti-involution fixing T₀..T_{n−1}: 𝓛^cT_w ↦ T_{w⁻¹}𝓛^c.
    pub fn star(&self, x: &HeckeElement<R>) -> HeckeElement<R> {
        let mut out = HeckeElement::zero();
        for (j, a) in &x.terms {
            let (c, w) = self.split(*j);
            let mut v = self.basis(self.join(&c, 0));
            for &i in &perm_reduced_word(&self.perms[w]) {
                v = self.left_mul_generator(i, &v);
            }
            out.add_scaled(&v, a);
        }
        out
    }

    /// T_w for w ∈ S_n (0-based images).
    pub fn t_perm(&self, w: &[usize]) -> HeckeElement<R> {
        self.basis(self.index_of(&vec![0; self.n()], w))
    }

    /// T_w for a group element via its BM word.
    pub fn t_element(&self, w: &GroupElement) -> HeckeElement<R> {
        self.gen_word_product(&bm_normal_form(w).word())
    }

    /// T_{w_β} via the block word of w_β.
    pub fn t_class_rep(&self, beta: &ColoredSemiBicomposition) -> Result<HeckeElement<R>, GroupError> {
        Ok(self.gen_word_product(&w_alpha_word(self.params, beta)?))
    }

    /// 𝓛-monomial Π𝓛_m^{c_m} for exponents of any size.
    pub fn jm_monomial(&self, c: &[u32]) -> HeckeElement<R> {
        let mut x = self.one();
        for (m, &e) in c.iter().enumerate() {
            for _ in 0..e {
                x = self.left_mul_jm(m + 1, &x);
            }
        }
        x
    }

    /// Elementary symmetric polynomial e_k(𝓛₁..𝓛_n).
    pub fn elementary_jm(&self, k: usize) -> HeckeElement<R> {
        let n = self.n();
        let mut out = HeckeElement::zero();
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let mut c = vec![0; n];
            for &s in &subset {
                c[s] = 1;
            }
            out.add_assign(&self.jm_monomial(&c));
            let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
                return out;
            };
            subset[i] += 1;
            for t in i + 1..k {
                subset[t] = subset[t - 1] + 1;
            }
        }
    }

    /// Σ coef·word applied on the left to x.
    fn apply_relation(&self, rel: &[(R, Vec<usize>)], x: &HeckeElement<R>) -> HeckeElement<R> {
        let mut out = HeckeElement::zero();
        for (a, word) in rel {
            let mut v = x.clone();
            for &g in word.iter().rev() {
                v = self.left_mul_generator(g, &v);
            }
            out.add_scaled(&v, a);
        }
        out
    }

    /// The defining relations as (name, Σ coef·word) with zero right side.
    pub fn defining_relations(&self) -> Vec<(String, Vec<(R, Vec<usize>)>)> {
        let n = self.n();
        let one = self.one_coeff();
        let mut rels = vec![];
        // Π(T₀ − Q_l) expanded through the cyclotomic coefficients.
        let mut cyc: Vec<(R, Vec<usize>)> = vec![(one.clone(), vec![0; self.r()])];
        for (k, ck) in self.cyc.iter().enumerate() {
            cyc.push((ck.neg(), vec![0; k]));
        }
        rels.push(("cyclotomic".to_string(), cyc));
        for i in 1..n {
            rels.push((
                format!("quadratic T{i}"),
                vec![
                    (one.clone(), vec![i, i]),
                    (one.sub(&self.xi), vec![i]),
                    (self.xi.neg(), vec![]),
                ],
            ));
        }
        if n >= 2 {
            rels.push((
                "braid T0 T1".to_string(),
                vec![(one.clone(), vec![0, 1, 0, 1]), (one.neg(), vec![1, 0, 1, 0])],
            ));
        }
        for i in 1..n.saturating_sub(1) {
            rels.push((
                format!("braid T{i} T{}", i + 1),
                vec![(one.clone(), vec![i, i + 1, i]), (one.neg(), vec![i + 1, i, i + 1])],
            ));
        }
        for i in 0..n {
            for j in i + 2..n {
                rels.push((
                    format!("commute T{i} T{j}"),
                    vec![(one.clone(), vec![i, j]), (one.neg(), vec![j, i])],
                ));
            }
        }
        rels
    }

    /// Checks every defining relation as an operator on all basis elements.
    pub fn relation_checks(&self) -> Vec<(String, bool)> {
        self.defining_relations()
            .into_iter()
            .map(|(name, rel)| {
                let ok = par::map_range(self.dim, |j| self.apply_relation(&rel, &self.basis(j)).is_zero())
                    .into_iter()
                    .all(|b| b);
                (name, ok)
            })
            .collect()
    }

    pub fn to_json(&self, x: &HeckeElement<R>) -> serde_json::Value {
        serde_json::Value::Array(
            x.terms
                .iter()
                .map(|(j, a)| {
                    let b = self.basis_index(*j);
                    serde_json::json!({
                        "c": b.c,
                        "w": b.w.iter().map(|p| p + 1).collect::<Vec<_>>(),
                        "coeff": a.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl Hecke<Laurent> {
    /// Generic parameters: ξ and Q_l are the ring variables.
    pub fn generic(params: GroupParams) -> Self {
        let nv = params.r as usize + 1;
        let q = (1..nv).map(|l| Laurent::var(nv, l)).collect();
        Hecke::new(params, Laurent::var(nv, 0), q).expect("variables are units")
    }
}

impl Hecke<RatFunc> {
    pub fn generic_field(params: GroupParams) -> Self {
        let nv = params.r as usize + 1;
        let q = (1..nv).map(|l| RatFunc::var(nv, l)).collect();
        Hecke::new(params, RatFunc::var(nv, 0), q).expect("variables are units")
    }
}

impl Hecke<Rational> {
    pub fn rational(params: GroupParams, xi: i64, q: &[i64]) -> Result<Self, GroupError> {
        let q = q.iter().map(|&v| Rational::from_integer(v.into())).collect();
        Hecke::new(params, Rational::from_integer(xi.into()), q)
    }

    /// ξ = 2, Q_l = 100^{l−1}.
    pub fn default_semisimple(params: GroupParams) -> Self {
        let q: Vec<i64> = (0..params.r).map(|l| 100i64.pow(l)).collect();
        Self::rational(params, 2, &q).expect("valid parameters")
    }
}

#[cfg(test)]
mod tests;
