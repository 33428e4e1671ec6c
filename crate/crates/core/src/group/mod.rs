//! The group W_n = G(r,1,n) of colored permutations.

mod classes;
mod normal_form;
mod reduce;
mod special;

pub use classes::{conjugacy_invariant, enumerate_classes, enumerate_group, ClassInfo, GroupTable};
pub use normal_form::{
    bm_normal_form, dc_normal_form, length, perm_length, perm_reduced_word, BMNormalForm, DCNormalForm,
    DKind,
};
pub use reduce::{
    check_certificate, reduce_to_minimal, Phase, ReductionCertificate, Route, SideCondition, Step, StrongConjugation,
};
pub use special::{
    colored_semi_bipartitions, d_product, phi_bijection, phi_inverse, sprime, t_ka, theta_factorization,
    theta_inverse, w_alpha, w_alpha_word, w_lambda_eps, w_lambda_eps_word, ColoredSemiBicomposition,
};

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid parameters r={r}, n={n}")]
    BadParams { r: u32, n: usize },
    #[error("generator s{0} out of range for n={1}")]
    BadGenerator(usize, usize),
    #[error("cannot parse word token '{0}'")]
    BadToken(String),
    #[error("parameter mismatch")]
    Mismatch,
    #[error("invalid element: {0}")]
    BadElement(String),
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("group of order {0} exceeds the enumeration budget {1}")]
    Budget(u128, usize),
    #[error("element is not of the form w_(lambda,eps)")]
    NotBlockForm,
    #[error("reduction failed: {0}")]
    Reduction(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    pub r: u32,
    pub n: usize,
}

impl GroupParams {
    pub fn new(r: u32, n: usize) -> Result<Self, GroupError> {
        if r == 0 || n == 0 {
            return Err(GroupError::BadParams { r, n });
        }
        Ok(GroupParams { r, n })
    }

    pub fn order(&self) -> u128 {
        let mut o: u128 = 1;
        for k in 1..=self.n as u128 {
            o = o.saturating_mul(k).saturating_mul(self.r as u128);
        }
        o
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            r: self.r,
            colors: vec![0; self.n],
            perm: (0..self.n).collect(),
        }
    }

    pub fn generator(&self, g: Gen) -> Result<GroupElement, GroupError> {
        let mut e = self.identity();
        match g {
            Gen::T => e.colors[0] = 1 % self.r,
            Gen::S(i) => {
                if i == 0 || i >= self.n {
                    return Err(GroupError::BadGenerator(i, self.n));
                }
                e.perm.swap(i - 1, i);
            }
        }
        Ok(e)
    }

    pub fn generators(&self) -> Vec<Gen> {
        std::iter::once(Gen::T).chain((1..self.n).map(Gen::S)).collect()
    }

    pub fn eval_word(&self, w: &[Gen]) -> Result<GroupElement, GroupError> {
        let mut acc = self.identity();
        for g in w {
            acc = acc.mul(&self.generator(*g)?);
        }
        Ok(acc)
    }
}

/// A standard generator: `t` or `s_i` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    T,
    S(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T => write!(f, "t"),
            Gen::S(i) => write!(f, "s{i}"),
        }
    }
}

impl Gen {
    /// Hecke generator index: 0 for t, i for s_i.
    pub fn index(&self) -> usize {
        match self {
            Gen::T => 0,
            Gen::S(i) => *i,
        }
    }

    pub fn from_index(i: usize) -> Gen {
        if i == 0 {
            Gen::T
        } else {
            Gen::S(i)
        }
    }
}

pub type Word = Vec<Gen>;

/// Parses whitespace-separated `t`, `T0`, `s1`, ... tokens.
pub fn parse_word(s: &str) -> Result<Word, GroupError> {
    s.split_whitespace()
        .map(|tok| {
            if tok == "t" || tok == "T0" {
                return Ok(Gen::T);
            }
            let rest = tok
                .strip_prefix('s')
                .or_else(|| tok.strip_prefix('T'))
                .ok_or_else(|| GroupError::BadToken(tok.into()))?;
            let i: usize = rest.parse().map_err(|_| GroupError::BadToken(tok.into()))?;
            Ok(Gen::from_index(i))
        })
        .collect()
}

pub fn format_word(w: &[Gen]) -> String {
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
}

/// Colored permutation: basis index i goes to position `perm[i]` with color
/// `colors[i]`. Positions are 0-based internally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub r: u32,
    pub colors: Vec<u32>,
    pub perm: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    colors: Vec<u32>,
    perm: Vec<usize>,
}

impl GroupElement {
    pub fn new(r: u32, colors: Vec<u32>, perm: Vec<usize>) -> Result<Self, GroupError> {
        let n = perm.len();
        if colors.len() != n || r == 0 {
            return Err(GroupError::BadElement("length mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(GroupError::BadElement("perm is not a bijection".into()));
            }
            seen[p] = true;
        }
        Ok(GroupElement {
            r,
            colors: colors.into_iter().map(|c| c % r).collect(),
            perm,
        })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn params(&self) -> GroupParams {
        GroupParams {
            r: self.r,
            n: self.n(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.colors.iter().all(|c| *c == 0) && self.perm.iter().enumerate().all(|(i, p)| i == *p)
    }

    /// (d,τ)·(c,σ) = (i ↦ c_i + d_{σ(i)}, τ∘σ).
    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.params(), o.params());
        let n = self.n();
        let mut colors = vec![0; n];
        let mut perm = vec![0; n];
        for i in 0..n {
            let s = o.perm[i];
            colors[i] = (o.colors[i] + self.colors[s]) % self.r;
            perm[i] = self.perm[s];
        }
        GroupElement {
            r: self.r,
            colors,
            perm,
        }
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, GroupError> {
        if self.params() != o.params() {
            return Err(GroupError::Mismatch);
        }
        Ok(self.mul(o))
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut colors = vec![0; n];
        let mut perm = vec![0; n];
        for i in 0..n {
            let j = self.perm[i];
            perm[j] = i;
            colors[j] = (self.r - self.colors[i]) % self.r;
        }
        GroupElement {
            r: self.r,
            colors,
            perm,
        }
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    /// Image of `self` under the inclusion W_n ⊂ W_m (m ≥ n).
    pub fn extend(&self, m: usize) -> Self {
        let mut e = self.clone();
        for i in self.n()..m {
            e.colors.push(0);
            e.perm.push(i);
        }
        e
    }

    /// Restriction to W_m when every index ≥ m is fixed with color 0.
    pub fn restrict(&self, m: usize) -> Option<Self> {
        for i in m..self.n() {
            if self.perm[i] != i || self.colors[i] != 0 {
                return None;
            }
        }
        Some(GroupElement {
            r: self.r,
            colors: self.colors[..m].to_vec(),
            perm: self.perm[..m].to_vec(),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ElementJson {
            colors: self.colors.clone(),
            perm: self.perm.iter().map(|p| p + 1).collect(),
        })
        .expect("serializable")
    }

    pub fn from_json(r: u32, v: &serde_json::Value) -> Result<Self, GroupError> {
        let j: ElementJson =
            serde_json::from_value(v.clone()).map_err(|e| GroupError::BadElement(e.to_string()))?;
        if j.perm.contains(&0) {
            return Err(GroupError::BadElement("perm is one-based".into()));
        }
        Self::new(r, j.colors, j.perm.iter().map(|p| p - 1).collect())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}
