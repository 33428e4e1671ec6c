use super::normal_form::{d_element, dc_normal_form, DKind};
use super::{Gen, GroupElement, GroupError, GroupParams, Word};
use crate::tableaux::{enumerate_multipartitions, MultiPartition};
use serde::{Deserialize, Serialize};
use std::fmt;

/// t_{k,a} = s_k⋯s₁tᵃ (1 when a = 0).
pub fn t_ka(p: GroupParams, k: usize, a: u32) -> Result<GroupElement, GroupError> {
    if a.is_multiple_of(p.r) {
        return Ok(p.identity());
    }
    let mut w: Word = (1..=k).rev().map(Gen::S).collect();
    w.extend(std::iter::repeat_n(Gen::T, a as usize));
    p.eval_word(&w)
}

fn sprime_word(k: usize, l: u32) -> Word {
    let mut w: Word = (1..=k).rev().map(Gen::S).collect();
    w.extend(std::iter::repeat_n(Gen::T, l as usize));
    w.extend((1..=k).map(Gen::S));
    w
}

/// s'_{k,l} = s_k⋯s₁tˡs₁⋯s_k.
pub fn sprime(p: GroupParams, k: usize, l: u32) -> Result<GroupElement, GroupError> {
    p.eval_word(&sprime_word(k, l))
}

/// The word ∏ s'_{r_i,ε_i} s_{r_i+1}⋯s_{r_{i+1}−1}.
pub fn w_lambda_eps_word(p: GroupParams, lambda: &[usize], eps: &[u32]) -> Result<Word, GroupError> {
    if lambda.len() != eps.len() {
        return Err(GroupError::BadShape("eps length differs from number of parts".into()));
    }
    if lambda.contains(&0) || lambda.iter().sum::<usize>() != p.n {
        return Err(GroupError::BadShape(format!("{lambda:?} is not a composition of {}", p.n)));
    }
    if let Some(e) = eps.iter().find(|e| **e >= p.r) {
        return Err(GroupError::BadShape(format!("color {e} out of range")));
    }
    let mut w = vec![];
    let mut start = 0;
    for (&len, &e) in lambda.iter().zip(eps) {
        if e != 0 {
            w.extend(sprime_word(start, e));
        }
        w.extend((start + 1..start + len).map(Gen::S));
        start += len;
    }
    Ok(w)
}

pub fn w_lambda_eps(p: GroupParams, lambda: &[usize], eps: &[u32]) -> Result<GroupElement, GroupError> {
    p.eval_word(&w_lambda_eps_word(p, lambda, eps)?)
}

/// (λ with row colors, μ): λ weakly increasing with colors in 1..r−1,
/// non-increasing along equal rows; μ a composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredSemiBicomposition {
    pub lambda: Vec<usize>,
    pub colors: Vec<u32>,
    pub mu: Vec<usize>,
}

impl ColoredSemiBicomposition {
    pub fn validate(&self, p: GroupParams) -> Result<(), GroupError> {
        let bad = |m: &str| Err(GroupError::BadShape(m.to_string()));
        if self.lambda.len() != self.colors.len() {
            return bad("one color per row of lambda");
        }
        if self.lambda.iter().chain(&self.mu).any(|x| *x == 0) {
            return bad("parts must be positive");
        }
        if self.lambda.iter().sum::<usize>() + self.mu.iter().sum::<usize>() != p.n {
            return bad("sizes do not add up to n");
        }
        if self.colors.iter().any(|c| *c == 0 || *c >= p.r) {
            return bad("colors must lie in 1..r-1");
        }
        for i in 1..self.lambda.len() {
            if self.lambda[i - 1] > self.lambda[i] {
                return bad("lambda must be weakly increasing");
            }
            if self.lambda[i - 1] == self.lambda[i] && self.colors[i - 1] < self.colors[i] {
                return bad("colors must not increase along equal rows");
            }
        }
        Ok(())
    }

    pub fn is_bipartition(&self) -> bool {
        self.mu.windows(2).all(|w| w[0] >= w[1])
    }

    /// The composition λ ++ μ and color vector (c, 0, …, 0).
    pub fn composition(&self) -> (Vec<usize>, Vec<u32>) {
        let mut comp = self.lambda.clone();
        comp.extend(&self.mu);
        let mut eps = self.colors.clone();
        eps.extend(std::iter::repeat_n(0, self.mu.len()));
        (comp, eps)
    }
}

impl fmt::Display for ColoredSemiBicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lam: Vec<String> = self
            .lambda
            .iter()
            .zip(&self.colors)
            .map(|(l, c)| format!("{l}^{c}"))
            .collect();
        let mu: Vec<String> = self.mu.iter().map(|x| x.to_string()).collect();
        write!(f, "([{}], [{}])", lam.join(","), mu.join(","))
    }
}

pub fn w_alpha_word(p: GroupParams, alpha: &ColoredSemiBicomposition) -> Result<Word, GroupError> {
    alpha.validate(p)?;
    let (comp, eps) = alpha.composition();
    w_lambda_eps_word(p, &comp, &eps)
}

pub fn w_alpha(p: GroupParams, alpha: &ColoredSemiBicomposition) -> Result<GroupElement, GroupError> {
    p.eval_word(&w_alpha_word(p, alpha)?)
}

/// Component 1 is μ; component i collects the rows of λ colored i−1.
pub fn phi_bijection(r: u32, beta: &ColoredSemiBicomposition) -> MultiPartition {
    let mut comps = vec![vec![]; r as usize];
    comps[0] = beta.mu.clone();
    for (&len, &c) in beta.lambda.iter().zip(&beta.colors) {
        comps[c as usize].push(len);
    }
    for c in comps.iter_mut() {
        c.sort_unstable_by(|a, b| b.cmp(a));
    }
    MultiPartition { components: comps }
}

pub fn phi_inverse(lam: &MultiPartition) -> ColoredSemiBicomposition {
    let mut rows: Vec<(usize, u32)> = vec![];
    for (i, comp) in lam.components.iter().enumerate().skip(1) {
        rows.extend(comp.iter().map(|&len| (len, i as u32)));
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    ColoredSemiBicomposition {
        lambda: rows.iter().map(|x| x.0).collect(),
        colors: rows.iter().map(|x| x.1).collect(),
        mu: lam.components[0].clone(),
    }
}

/// All colored semi-bipartitions of n, in the order of the r-partitions
/// they correspond to.
pub fn colored_semi_bipartitions(r: u32, n: usize) -> Vec<ColoredSemiBicomposition> {
    enumerate_multipartitions(r as usize, n).iter().map(phi_inverse).collect()
}

/// Splits w = w_{λ,ε} as d₁⋯d_n with d_m ∈ 𝒟_m and reads off (λ, ε).
pub fn theta_factorization(w: &GroupElement) -> Result<(Vec<DKind>, Vec<usize>, Vec<u32>), GroupError> {
    let n = w.n();
    let mut ds = vec![DKind::One; n];
    let mut cur = w.clone();
    for m in (2..=n).rev() {
        let dc = dc_normal_form(&cur)?;
        if !dc.b.is_identity() {
            return Err(GroupError::NotBlockForm);
        }
        ds[m - 1] = dc.d_kind;
        cur = dc.a.restrict(m - 1).ok_or(GroupError::NotBlockForm)?;
    }
    if cur.perm[0] != 0 {
        return Err(GroupError::NotBlockForm);
    }
    ds[0] = DKind::TPow(cur.colors[0]);
    let (mut lambda, mut eps) = (vec![], vec![]);
    for (m, d) in ds.iter().enumerate() {
        match d {
            DKind::S if m > 0 => *lambda.last_mut().unwrap() += 1,
            DKind::One => {
                lambda.push(1);
                eps.push(0);
            }
            DKind::SPrime(a) | DKind::TPow(a) => {
                lambda.push(1);
                eps.push(*a);
            }
            DKind::S => return Err(GroupError::NotBlockForm),
        }
    }
    let rebuilt = w_lambda_eps(w.params(), &lambda, &eps)?;
    if rebuilt != *w {
        return Err(GroupError::NotBlockForm);
    }
    Ok((ds, lambda, eps))
}

/// (λ, ε) ↦ (d₁, …, d_n).
pub fn theta_inverse(lambda: &[usize], eps: &[u32]) -> Vec<DKind> {
    let mut ds = vec![];
    for (&len, &e) in lambda.iter().zip(eps) {
        ds.push(if ds.is_empty() {
            DKind::TPow(e)
        } else if e == 0 {
            DKind::One
        } else {
            DKind::SPrime(e)
        });
        ds.extend(std::iter::repeat_n(DKind::S, len - 1));
    }
    ds
}

/// d₁⋯d_n as an element of W_n.
pub fn d_product(p: GroupParams, ds: &[DKind]) -> GroupElement {
    let mut acc = p.identity();
    for (m, d) in ds.iter().enumerate() {
        let dm = d_element(GroupParams { r: p.r, n: m + 1 }, *d).extend(p.n);
        acc = acc.mul(&dm);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::parse_word;
    use super::*;
    use crate::tableaux::partitions;

    fn gp(r: u32, n: usize) -> GroupParams {
        GroupParams::new(r, n).unwrap()
    }

    #[test]
    fn special_examples() {
        let p = gp(3, 4);
        assert!(w_lambda_eps(p, &[1, 1, 1, 1], &[0, 0, 0, 0]).unwrap().is_identity());
        assert_eq!(
            w_lambda_eps(p, &[4], &[0]).unwrap(),
            p.eval_word(&parse_word("s1 s2 s3").unwrap()).unwrap()
        );
        let p2 = gp(2, 3);
        let alpha = ColoredSemiBicomposition {
            lambda: vec![3],
            colors: vec![1],
            mu: vec![],
        };
        assert_eq!(w_alpha(p2, &alpha).unwrap(), p2.eval_word(&parse_word("t s1 s2").unwrap()).unwrap());
        for k in 0..4 {
            for l in 1..3 {
                assert_eq!(super::super::length(&sprime(p, k, l).unwrap()), 2 * k + l as usize);
            }
        }
        assert!(w_lambda_eps(p, &[2, 2], &[0]).is_err());
        assert!(w_lambda_eps(p, &[2, 2], &[0, 3]).is_err());
    }

    #[test]
    fn phi_examples() {
        let beta = ColoredSemiBicomposition {
            lambda: vec![],
            colors: vec![],
            mu: vec![3],
        };
        assert_eq!(phi_bijection(3, &beta).components, vec![vec![3], vec![], vec![]]);
        let beta = ColoredSemiBicomposition {
            lambda: vec![1, 1],
            colors: vec![2, 1],
            mu: vec![],
        };
        beta.validate(gp(3, 2)).unwrap();
        assert_eq!(phi_bijection(3, &beta).components, vec![vec![], vec![1], vec![1]]);
    }

    /// Direct enumeration of colored semi-bipartitions, independent of φ.
    fn direct_enumeration(r: u32, n: usize) -> Vec<ColoredSemiBicomposition> {
        fn colored_rows(m: usize, max: usize, maxc: u32, r: u32) -> Vec<Vec<(usize, u32)>> {
            // Rows listed from largest to smallest; colors non-decreasing
            // along equal rows in this reversed order.
            if m == 0 {
                return vec![vec![]];
            }
            let mut out = vec![];
            for len in (1..=max.min(m)).rev() {
                let cap = if len == max { maxc } else { 1 };
                for c in cap..r {
                    for mut rest in colored_rows(m - len, len, c, r) {
                        rest.insert(0, (len, c));
                        out.push(rest);
                    }
                }
            }
            out
        }
        let mut out = vec![];
        for m in 0..=n {
            for rows in colored_rows(m, m, 1, r) {
                for mu in partitions(n - m) {
                    let mut rows = rows.clone();
                    rows.reverse();
                    out.push(ColoredSemiBicomposition {
                        lambda: rows.iter().map(|x| x.0).collect(),
                        colors: rows.iter().map(|x| x.1).collect(),
                        mu,
                    });
                }
            }
        }
        out
    }

    #[test]
    fn phi_round_trip() {
        for (r, n) in [(2, 3), (3, 3), (4, 2), (2, 5)] {
            let direct = direct_enumeration(r, n);
            let via_phi = colored_semi_bipartitions(r, n);
            assert_eq!(direct.len(), via_phi.len());
            let mut seen = std::collections::HashSet::new();
            for beta in &direct {
                beta.validate(gp(r, n)).unwrap();
                let lam = phi_bijection(r, beta);
                assert_eq!(phi_inverse(&lam), *beta);
                assert!(seen.insert(lam));
            }
        }
        assert_eq!(direct_enumeration(2, 3).len(), 10);
    }

    #[test]
    fn theta_examples() {
        let p = gp(2, 2);
        let sp = sprime(p, 1, 1).unwrap();
        let (ds, lam, eps) = theta_factorization(&sp).unwrap();
        assert_eq!(ds, vec![DKind::TPow(0), DKind::SPrime(1)]);
        assert_eq!((lam, eps), (vec![1, 1], vec![0, 1]));
        let p = gp(3, 4);
        let (ds, lam, eps) = theta_factorization(&p.identity()).unwrap();
        assert_eq!(ds, vec![DKind::TPow(0), DKind::One, DKind::One, DKind::One]);
        assert_eq!((lam, eps), (vec![1; 4], vec![0; 4]));
        let w = w_lambda_eps(p, &[4], &[2]).unwrap();
        let (ds, _, _) = theta_factorization(&w).unwrap();
        assert_eq!(ds, vec![DKind::TPow(2), DKind::S, DKind::S, DKind::S]);
        assert_eq!(d_product(p, &ds), w);
        let not_block = p.eval_word(&parse_word("s2 s1").unwrap()).unwrap();
        assert_eq!(theta_factorization(&not_block), Err(GroupError::NotBlockForm));
    }

    #[test]
    fn theta_is_bijective() {
        fn compositions(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = vec![];
            for first in 1..=n {
                for mut rest in compositions(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        let p = gp(3, 4);
        let mut seen = std::collections::HashSet::new();
        for lam in compositions(4) {
            let k = lam.len();
            for code in 0..3u32.pow(k as u32) {
                let eps: Vec<u32> = (0..k).map(|i| (code / 3u32.pow(i as u32)) % 3).collect();
                let w = w_lambda_eps(p, &lam, &eps).unwrap();
                let ds = theta_inverse(&lam, &eps);
                assert_eq!(d_product(p, &ds), w);
                let (ds2, lam2, eps2) = theta_factorization(&w).unwrap();
                assert_eq!((ds2, lam2, eps2), (ds, lam.clone(), eps));
                assert!(seen.insert(w));
            }
        }
    }
}
