//! Block idempotents and KLR generators inside H^Λ, built from the spectral
//! calculus of the Jucys–Murphy elements.

use crate::cocenter::{is_central, Subspace};
use crate::hecke::{Hecke, HeckeElement};
use crate::par;
use crate::rings::Ring;
use crate::tableaux::{enumerate_multipartitions, ResidueData};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KlrError {
    #[error("a field is required")]
    NotAField,
    #[error("only e > 1 is supported")]
    Unsupported,
    #[error("xi has quantum characteristic {found}, expected {expected}")]
    WrongCharacteristic { expected: u32, found: u32 },
    #[error("Q{0} differs from xi^kappa{0}")]
    WrongWeight(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// Least k > 1 with 1 + ξ + ⋯ + ξ^{k−1} = 0, or 0, searching up to `bound`.
pub fn quantum_characteristic<R: Ring>(xi: &R, bound: u32) -> u32 {
    let mut s = xi.one_like();
    let mut p = xi.one_like();
    for k in 2..=bound {
        p = p.mul(xi);
        s = s.add(&p);
        if s.is_zero() {
            return k;
        }
    }
    0
}

/// Residue content α as counts m_0..m_{e−1}.
pub type BlockLabel = Vec<usize>;

pub fn content_of(seq: &[usize], e: u32) -> BlockLabel {
    let mut m = vec![0; e as usize];
    for &i in seq {
        m[i] += 1;
    }
    m
}

/// Repeats x ↦ 3x² − 2x³ until x² = x; returns the idempotent and the number
/// of steps.
fn refine_idempotent<R: Ring>(h: &Hecke<R>, mut x: HeckeElement<R>, max_steps: usize) -> Result<(HeckeElement<R>, usize), KlrError> {
    let three = h.one_coeff().int_like(3);
    let two = h.one_coeff().int_like(2);
    for step in 0..=max_steps {
        let x2 = h.mul(&x, &x);
        if x2 == x {
            return Ok((x, step));
        }
        let x3 = h.mul(&x2, &x);
        x = x2.scale(&three).sub(&x3.scale(&two));
    }
    Err(KlrError::Inconsistent("spectral projector did not converge".into()))
}

pub struct KlrBlocks<'a, R: Ring> {
    pub h: &'a Hecke<R>,
    pub residues: ResidueData,
    /// ξ^a for a = 0..e−1.
    powers: Vec<R>,
    /// e(i) for every i with e(i) ≠ 0.
    pub idempotents: BTreeMap<Vec<usize>, HeckeElement<R>>,
    /// Largest number of refinement steps used for a single 𝓛_k.
    pub refinement_steps: usize,
}

impl<'a, R: Ring> KlrBlocks<'a, R> {
    pub fn new(h: &'a Hecke<R>, e: u32, kappa: &[i64]) -> Result<Self, KlrError> {
        if !R::is_field() {
            return Err(KlrError::NotAField);
        }
        if e < 2 {
            return Err(KlrError::Unsupported);
        }
        let found = quantum_characteristic(&h.xi, e);
        if found != e {
            return Err(KlrError::WrongCharacteristic { expected: e, found });
        }
        if kappa.len() != h.r() {
            return Err(KlrError::WrongWeight(kappa.len().min(h.r()) + 1));
        }
        let powers: Vec<R> = (0..e).map(|a| h.xi.pow(a as u64)).collect();
        let residues = ResidueData {
            e,
            kappa: kappa.to_vec(),
        };
        for (l, &k) in kappa.iter().enumerate() {
            if h.q[l] != powers[residues.reduce(k) as usize] {
                return Err(KlrError::WrongWeight(l + 1));
            }
        }
        let mut kb = KlrBlocks {
            h,
            residues,
            powers,
            idempotents: BTreeMap::new(),
            refinement_steps: 0,
        };
        kb.build()?;
        Ok(kb)
    }

    pub fn e(&self) -> u32 {
        self.residues.e
    }

    /// Projector of 𝓛_k onto the generalized eigenvalue ξ^a.
    fn spectral_projector(&self, k: usize, a: usize) -> Result<(HeckeElement<R>, usize), KlrError> {
        let h = self.h;
        let l = h.jm(k);
        let mut x = h.one();
        for (j, pj) in self.powers.iter().enumerate() {
            if j == a {
                continue;
            }
            let inv = self.powers[a].sub(pj).try_inv().expect("distinct powers");
            x = h.mul(&x, &l.sub(&h.scalar(pj.clone())).scale(&inv));
        }
        refine_idempotent(h, x, 2 * h.dim().max(2).ilog2() as usize + 4)
    }

    fn build(&mut self) -> Result<(), KlrError> {
        let h = self.h;
        let e = self.e() as usize;
        let tasks: Vec<(usize, usize)> = (1..=h.n()).flat_map(|k| (0..e).map(move |a| (k, a))).collect();
        let projs = par::map(&tasks, |&(k, a)| self.spectral_projector(k, a));
        let mut table = vec![vec![]; h.n()];
        for ((k, _), p) in tasks.iter().zip(projs) {
            let (p, steps) = p?;
            self.refinement_steps = self.refinement_steps.max(steps);
            table[k - 1].push(p);
        }
        let mut layer: Vec<(Vec<usize>, HeckeElement<R>)> = vec![(vec![], h.one())];
        for projs in &table {
            let next = par::map(&layer, |(seq, x)| {
                projs
                    .iter()
                    .enumerate()
                    .map(|(a, p)| {
                        let mut s = seq.clone();
                        s.push(a);
                        (s, h.mul(x, p))
                    })
                    .filter(|(_, y)| !y.is_zero())
                    .collect::<Vec<_>>()
            });
            layer = next.into_iter().flatten().collect();
        }
        self.idempotents = layer.into_iter().collect();
        Ok(())
    }

    /// e(i); zero when i is not in the support.
    pub fn residue_idempotent(&self, i: &[usize]) -> HeckeElement<R> {
        self.idempotents.get(i).cloned().unwrap_or_else(HeckeElement::zero)
    }

    pub fn support(&self) -> BTreeSet<Vec<usize>> {
        self.idempotents.keys().cloned().collect()
    }

    /// Residue sequences of standard tableaux.
    pub fn tableau_support(&self) -> BTreeSet<Vec<usize>> {
        enumerate_multipartitions(self.h.r(), self.h.n())
            .iter()
            .flat_map(|s| s.std_tableaux())
            .map(|t| t.residue_sequence(&self.residues).into_iter().map(|x| x as usize).collect())
            .collect()
    }

    pub fn blocks(&self) -> Vec<BlockLabel> {
        let set: BTreeSet<BlockLabel> = self.idempotents.keys().map(|i| content_of(i, self.e())).collect();
        set.into_iter().collect()
    }

    pub fn block_idempotent(&self, alpha: &BlockLabel) -> HeckeElement<R> {
        let mut x = HeckeElement::zero();
        for (i, ei) in &self.idempotents {
            if content_of(i, self.e()) == *alpha {
                x.add_assign(ei);
            }
        }
        x
    }

    /// dim e(α)H.
    pub fn block_dimension(&self, alpha: &BlockLabel) -> usize {
        let h = self.h;
        let ea = self.block_idempotent(alpha);
        let mut s = Subspace::new(h.dim());
        for j in 0..h.dim() {
            s.insert(&h.mul(&ea, &h.basis(j)));
        }
        s.dim()
    }

    /// y_m = Σ_i (1 − ξ^{−i_m}𝓛_m) e(i).
    pub fn klr_y(&self, m: usize) -> HeckeElement<R> {
        let h = self.h;
        let l = h.jm(m);
        let mut y = HeckeElement::zero();
        for (i, ei) in &self.idempotents {
            let c = self.powers[i[m - 1]].try_inv().expect("unit");
            let factor = h.one().sub(&l.scale(&c));
            y.add_assign(&h.mul(&factor, ei));
        }
        y
    }

    /// z(i, α) = Σ_{ν ∈ I^α} Π_{ν_k = i} y_k e(ν).
    pub fn z_element(&self, i: usize, alpha: &BlockLabel) -> HeckeElement<R> {
        let h = self.h;
        let ys: Vec<HeckeElement<R>> = (1..=h.n()).map(|m| self.klr_y(m)).collect();
        let mut z = HeckeElement::zero();
        for (nu, en) in &self.idempotents {
            if content_of(nu, self.e()) != *alpha {
                continue;
            }
            let mut x = en.clone();
            for (k, &v) in nu.iter().enumerate() {
                if v == i {
                    x = h.mul(&ys[k], &x);
                }
            }
            z.add_assign(&x);
        }
        z
    }

    /// ⟨Λ, α_i^∨⟩ = #{l : κ_l ≡ i}.
    pub fn lambda_pairing(&self, i: usize) -> usize {
        self.residues.kappa.iter().filter(|&&k| self.residues.reduce(k) as usize == i).count()
    }

    /// Least N ≤ dim with x^N = 0.
    pub fn nilpotency_index(&self, x: &HeckeElement<R>) -> Option<usize> {
        let h = self.h;
        let mut p = x.clone();
        for k in 1..=h.dim() {
            if p.is_zero() {
                return Some(k);
            }
            p = h.mul(&p, x);
        }
        None
    }

    pub fn checks(&self) -> Vec<(String, bool)> {
        let h = self.h;
        let mut out = vec![];
        let mut total = HeckeElement::zero();
        for x in self.idempotents.values() {
            total.add_assign(x);
        }
        out.push(("sum of e(i) is 1".to_string(), total == h.one()));
        let keys: Vec<&Vec<usize>> = self.idempotents.keys().collect();
        let orth = keys.iter().enumerate().all(|(a, i)| {
            keys.iter().enumerate().all(|(b, j)| {
                let p = h.mul(&self.idempotents[*i], &self.idempotents[*j]);
                if a == b {
                    p == self.idempotents[*i]
                } else {
                    p.is_zero()
                }
            })
        });
        out.push(("e(i) orthogonal idempotents".to_string(), orth));
        out.push(("support matches tableau residues".to_string(), self.support() == self.tableau_support()));
        let blocks = self.blocks();
        let eas: Vec<HeckeElement<R>> = blocks.iter().map(|a| self.block_idempotent(a)).collect();
        out.push(("e(alpha) central".to_string(), eas.iter().all(|x| is_central(h, x))));
        let ys: Vec<HeckeElement<R>> = (1..=h.n()).map(|m| self.klr_y(m)).collect();
        out.push((
            "y_m nilpotent".to_string(),
            ys.iter().all(|y| self.nilpotency_index(y).is_some()),
        ));
        let commute = ys.iter().all(|y| {
            self.idempotents.values().all(|e| h.mul(y, e) == h.mul(e, y)) && ys.iter().all(|z| h.mul(y, z) == h.mul(z, y))
        });
        out.push(("y_m commute with e(i) and y_k".to_string(), commute));
        let cyc = self.idempotents.iter().all(|(nu, en)| {
            let p = h.pow(&ys[0], self.lambda_pairing(nu[0]) as u32);
            h.mul(&p, en).is_zero()
        });
        out.push(("cyclotomic relation on y_1".to_string(), cyc));
        let zc = blocks.iter().zip(&eas).all(|(alpha, ea)| {
            (0..self.e() as usize).all(|i| {
                let z = self.z_element(i, alpha);
                (0..h.n()).all(|g| {
                    let c = h.left_mul_generator(g, &z).sub(&h.mul_by_generator_right(&z, g));
                    h.mul(&c, ea).is_zero()
                })
            })
        });
        out.push(("z(i,alpha) central in its block".to_string(), zc));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupParams;
    use crate::rings::{Cyclotomic, Rational};

    fn at(r: u32, n: usize, q: &[i64]) -> Hecke<Rational> {
        Hecke::rational(GroupParams::new(r, n).unwrap(), -1, q).unwrap()
    }

    #[test]
    fn checks_pass_at_level_one_and_two() {
        let h = at(1, 3, &[1]);
        let kb = KlrBlocks::new(&h, 2, &[0]).unwrap();
        for (name, ok) in kb.checks() {
            assert!(ok, "{name}");
        }
        let h = at(2, 2, &[1, -1]);
        let kb = KlrBlocks::new(&h, 2, &[0, 1]).unwrap();
        for (name, ok) in kb.checks() {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn single_node_has_one_idempotent() {
        let h = at(1, 1, &[1]);
        let kb = KlrBlocks::new(&h, 2, &[0]).unwrap();
        assert_eq!(kb.support().into_iter().collect::<Vec<_>>(), vec![vec![0]]);
        assert_eq!(kb.residue_idempotent(&[0]), h.one());
    }

    #[test]
    fn z_without_residue_is_block_idempotent() {
        let h = at(1, 3, &[1]);
        let kb = KlrBlocks::new(&h, 2, &[0]).unwrap();
        for alpha in kb.blocks() {
            for i in 0..2 {
                let z = kb.z_element(i, &alpha);
                if alpha[i] == 0 {
                    assert_eq!(z, kb.block_idempotent(&alpha));
                } else {
                    assert!(kb.nilpotency_index(&z).is_some());
                }
            }
        }
    }

    #[test]
    fn block_dimensions_add_up() {
        let h = at(2, 3, &[1, -1]);
        let kb = KlrBlocks::new(&h, 2, &[0, 1]).unwrap();
        let total: usize = kb.blocks().iter().map(|a| kb.block_dimension(a)).sum();
        assert_eq!(total, h.dim());
    }

    #[test]
    fn cube_root_of_unity() {
        let z = Cyclotomic::zeta(3);
        let h = Hecke::new(GroupParams::new(1, 3).unwrap(), z.clone(), vec![z.one_like()]).unwrap();
        let kb = KlrBlocks::new(&h, 3, &[0]).unwrap();
        assert!(kb.checks().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn wrong_weight_is_rejected() {
        let h = at(2, 2, &[1, 1]);
        assert_eq!(KlrBlocks::new(&h, 2, &[0, 1]).err(), Some(KlrError::WrongWeight(2)));
        let h = Hecke::rational(GroupParams::new(1, 2).unwrap(), 2, &[1]).unwrap();
        assert!(matches!(KlrBlocks::new(&h, 2, &[0]), Err(KlrError::WrongCharacteristic { .. })));
    }
}
