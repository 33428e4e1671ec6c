//! Commutator subspace, center, cocenter bases and class polynomials.

use crate::group::{
    bm_normal_form, colored_semi_bipartitions, conjugacy_invariant, enumerate_classes, enumerate_group, format_word,
    length, w_alpha, w_alpha_word, ColoredSemiBicomposition, GroupElement, GroupError, GroupParams, Word,
};
use crate::hecke::{Hecke, HeckeElement};
use crate::linalg::{inverse_dense, kernel, solve_dense, Echelon, SparseVec};
use crate::par;
use crate::rings::Ring;
use crate::seminormal::{Seminormal, SeminormalError};
use crate::tableaux::MultiPartition;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CocenterError {
    #[error("a field is required")]
    NotAField,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Seminormal(#[from] SeminormalError),
    #[error("the Gram matrix of the T-basis is singular")]
    SingularGram,
    #[error("xi = 1 is excluded: symmetric polynomials in the Jucys-Murphy elements need not span the center there")]
    XiIsOne,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// A subspace of H in echelon form, together with the vectors spanning it.
pub struct Subspace<R: Ring> {
    pub ambient: usize,
    pub basis: Vec<HeckeElement<R>>,
    echelon: Echelon<R>,
}

impl<R: Ring> Subspace<R> {
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: vec![],
            echelon: Echelon::new(),
        }
    }

    /// Adds x; returns whether the dimension grew.
    pub fn insert(&mut self, x: &HeckeElement<R>) -> bool {
        let grew = self.echelon.insert(&x.terms).is_ok();
        if grew {
            self.basis.push(x.clone());
        }
        grew
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn contains(&self, x: &HeckeElement<R>) -> bool {
        self.echelon.contains(&x.terms)
    }

    /// Canonical representative of x modulo the subspace.
    pub fn reduce(&self, x: &HeckeElement<R>) -> HeckeElement<R> {
        HeckeElement {
            terms: self.echelon.reduce(&x.terms),
        }
    }

    pub fn contains_subspace(&self, o: &Subspace<R>) -> bool {
        o.basis.iter().all(|x| self.contains(x))
    }
}

/// A conjugacy class with its canonical minimal representative w_β.
#[derive(Clone, Debug)]
pub struct ClassRep {
    pub label: MultiPartition,
    pub beta: ColoredSemiBicomposition,
    pub word: Word,
    pub element: GroupElement,
    pub size: usize,
    pub min_length: usize,
}

/// Class data in the order of the r-partitions labelling the classes.
pub fn class_data(p: GroupParams, budget: usize) -> Result<Vec<ClassRep>, GroupError> {
    let classes = enumerate_classes(p, budget)?;
    let by_label: HashMap<&MultiPartition, (usize, usize)> =
        classes.iter().map(|c| (&c.invariant, (c.members.len(), c.min_length))).collect();
    colored_semi_bipartitions(p.r, p.n)
        .into_iter()
        .map(|beta| {
            let element = w_alpha(p, &beta)?;
            let label = conjugacy_invariant(&element);
            let &(size, min_length) = by_label
                .get(&label)
                .ok_or_else(|| GroupError::BadShape(format!("no class with label {label}")))?;
            Ok(ClassRep {
                word: w_alpha_word(p, &beta)?,
                label,
                beta,
                element,
                size,
                min_length,
            })
        })
        .collect()
}

/// [b, T_g] for every basis element b and generator g.
fn commutator_vectors<R: Ring>(h: &Hecke<R>) -> Vec<HeckeElement<R>> {
    let gens = h.n();
    let all = par::map_range(h.dim(), |j| {
        let b = h.basis(j);
        (0..gens)
            .map(|g| h.mul_by_generator_right(&b, g).sub(&h.left_mul_generator(g, &b)))
            .collect::<Vec<_>>()
    });
    all.into_iter().flatten().collect()
}

/// Span of {[b, T_g]}, which is all of [H,H].
pub fn commutator_subspace<R: Ring>(h: &Hecke<R>) -> Result<Subspace<R>, CocenterError> {
    if !R::is_field() {
        return Err(CocenterError::NotAField);
    }
    let mut s = Subspace::new(h.dim());
    for v in commutator_vectors(h) {
        s.insert(&v);
    }
    Ok(s)
}

/// Kernel of z ↦ ([z, T_g])_g.
pub fn center<R: Ring>(h: &Hecke<R>) -> Result<Subspace<R>, CocenterError> {
    if !R::is_field() {
        return Err(CocenterError::NotAField);
    }
    let dim = h.dim();
    let gens = h.n();
    let images = par::map_range(dim, |j| {
        let b = h.basis(j);
        let mut v = SparseVec::new();
        for g in 0..gens {
            let c = h.left_mul_generator(g, &b).sub(&h.mul_by_generator_right(&b, g));
            v.extend(c.terms.into_iter().map(|(k, a)| (g * dim + k, a)));
        }
        v
    });
    let mut s = Subspace::new(dim);
    for rel in kernel(&images, &h.one_coeff()) {
        s.insert(&HeckeElement { terms: rel });
    }
    Ok(s)
}

/// Unital subalgebra generated by e₁(𝓛),…,e_n(𝓛), by product closure.
pub fn symmetric_jm_subalgebra<R: Ring>(h: &Hecke<R>) -> Result<Subspace<R>, CocenterError> {
    if !R::is_field() {
        return Err(CocenterError::NotAField);
    }
    let gens: Vec<HeckeElement<R>> = (1..=h.n()).map(|k| h.elementary_jm(k)).collect();
    let mut s = Subspace::new(h.dim());
    s.insert(&h.one());
    let mut frontier = vec![h.one()];
    while !frontier.is_empty() {
        let products: Vec<HeckeElement<R>> = par::map(&frontier, |x| gens.iter().map(|g| h.mul(g, x)).collect::<Vec<_>>())
            .into_iter()
            .flatten()
            .collect();
        frontier = products.into_iter().filter(|y| s.insert(y)).collect();
    }
    Ok(s)
}

/// Whether [x, T_g] = 0 for every generator.
pub fn is_central<R: Ring>(h: &Hecke<R>, x: &HeckeElement<R>) -> bool {
    (0..h.n()).all(|g| h.left_mul_generator(g, x) == h.mul_by_generator_right(x, g))
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CenterReport {
    pub dim_center: usize,
    pub dim_symmetric: usize,
    pub classes: usize,
    pub equal: bool,
}

pub fn center_conjecture_check<R: Ring>(h: &Hecke<R>) -> Result<CenterReport, CocenterError> {
    if h.xi.is_one() {
        return Err(CocenterError::XiIsOne);
    }
    let z = center(h)?;
    let sym = symmetric_jm_subalgebra(h)?;
    let classes = crate::tableaux::enumerate_multipartitions(h.r(), h.n()).len();
    Ok(CenterReport {
        dim_center: z.dim(),
        dim_symmetric: sym.dim(),
        classes,
        equal: z.dim() == sym.dim() && z.contains_subspace(&sym),
    })
}

/// Class polynomials, the T-basis with its dual, and the central bases built
/// from them.
pub struct Cocenter<'a, R: Ring> {
    pub h: &'a Hecke<R>,
    pub classes: Vec<ClassRep>,
    pub elements: Vec<GroupElement>,
    pub words: Vec<Word>,
    pub commutators: Subspace<R>,
    t_basis: Vec<HeckeElement<R>>,
    index: HashMap<GroupElement, usize>,
    reps: Echelon<R>,
}

impl<'a, R: Ring> Cocenter<'a, R> {
    pub fn new(h: &'a Hecke<R>) -> Result<Self, CocenterError> {
        Self::with_budget(h, usize::MAX)
    }

    pub fn with_budget(h: &'a Hecke<R>, budget: usize) -> Result<Self, CocenterError> {
        let p = h.params;
        let classes = class_data(p, budget)?;
        let elements = enumerate_group(p, budget)?.elements;
        let rep_word: HashMap<&GroupElement, &Word> = classes.iter().map(|c| (&c.element, &c.word)).collect();
        let words: Vec<Word> = elements
            .iter()
            .map(|w| rep_word.get(w).map(|x| (*x).clone()).unwrap_or_else(|| bm_normal_form(w).word()))
            .collect();
        let t_basis = par::map(&words, |w| h.gen_word_product(w));
        let index = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let commutators = commutator_subspace(h)?;
        let mut reps = Echelon::tracking(h.one_coeff());
        for c in &classes {
            let t = h.gen_word_product(&c.word);
            if reps.insert(&commutators.reduce(&t).terms).is_err() {
                return Err(CocenterError::Inconsistent(format!(
                    "T_w for the class {} is dependent modulo commutators",
                    c.label
                )));
            }
        }
        Ok(Cocenter {
            h,
            classes,
            elements,
            words,
            commutators,
            t_basis,
            index,
            reps,
        })
    }

    pub fn element_index(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// T_w with the fixed word of w.
    pub fn t(&self, i: usize) -> &HeckeElement<R> {
        &self.t_basis[i]
    }

    pub fn class_rep_element(&self, k: usize) -> HeckeElement<R> {
        self.h.gen_word_product(&self.classes[k].word)
    }

    /// Coordinates of x + [H,H] in the basis {T_{w_C} + [H,H]}.
    pub fn cocenter_coordinates(&self, x: &HeckeElement<R>) -> Result<Vec<R>, CocenterError> {
        let combo = self
            .reps
            .solve(&self.commutators.reduce(x).terms)
            .ok_or_else(|| CocenterError::Inconsistent("class representatives do not span the cocenter".into()))?;
        Ok((0..self.classes.len())
            .map(|k| combo.get(&k).cloned().unwrap_or_else(|| self.h.zero_coeff()))
            .collect())
    }

    /// f_{w,C} for the i-th group element, by projection onto the cocenter.
    pub fn class_polynomials(&self, i: usize) -> Result<Vec<R>, CocenterError> {
        self.cocenter_coordinates(&self.t_basis[i])
    }

    /// All f_{w,C}, row i for the i-th group element.
    pub fn class_polynomial_table(&self) -> Result<Vec<Vec<R>>, CocenterError> {
        par::map_range(self.elements.len(), |i| self.class_polynomials(i))
            .into_iter()
            .collect()
    }

    /// f_{w,C} from characters: solves Σ_C f_{w,C} χ_λ(T_{w_C}) = χ_λ(T_w).
    pub fn class_polynomials_by_characters(&self, sn: &Seminormal<R>, i: usize) -> Result<Vec<R>, CocenterError> {
        let m = self.character_matrix(sn)?;
        let rhs = (0..sn.shapes.len())
            .map(|a| sn.character(a, &self.t_basis[i]))
            .collect::<Result<Vec<_>, _>>()?;
        solve_dense(&m, &rhs).ok_or_else(|| CocenterError::Inconsistent("character matrix is singular".into()))
    }

    /// (χ_λ(T_{w_C}))_{λ,C}.
    pub fn character_matrix(&self, sn: &Seminormal<R>) -> Result<Vec<Vec<R>>, CocenterError> {
        let reps: Vec<HeckeElement<R>> = (0..self.classes.len()).map(|k| self.class_rep_element(k)).collect();
        (0..sn.shapes.len())
            .map(|a| reps.iter().map(|x| sn.character(a, x).map_err(CocenterError::from)).collect())
            .collect()
    }

    /// τ(T_u T_v).
    pub fn gram_matrix(&self) -> Vec<Vec<R>> {
        let h = self.h;
        par::map_range(self.t_basis.len(), |u| {
            self.t_basis.iter().map(|tv| h.tau(&h.mul(&self.t_basis[u], tv))).collect()
        })
    }

    /// T_v^∨ with τ(T_u T_v^∨) = δ_uv.
    pub fn dual_basis(&self) -> Result<Vec<HeckeElement<R>>, CocenterError> {
        let inv = inverse_dense(&self.gram_matrix(), &self.h.one_coeff()).ok_or(CocenterError::SingularGram)?;
        let n = self.t_basis.len();
        Ok(par::map_range(n, |v| {
            let mut x = HeckeElement::zero();
            for (t, row) in self.t_basis.iter().zip(&inv) {
                x.add_scaled(t, &row[v]);
            }
            x
        }))
    }

    /// g_{w,C}: coordinates of T_{w⁻¹} in the basis {T_{w_β}}, the class of
    /// w_β⁻¹ being the label. Row i is for the i-th group element.
    pub fn g_class_polynomials(&self, i: usize) -> Result<Vec<R>, CocenterError> {
        let inv = self.element_index(&self.elements[i].inverse()).expect("closed under inverses");
        self.class_polynomials(inv)
    }

    /// Label of the class C with w_C = w_β⁻¹, for each β.
    pub fn dual_labels(&self) -> Vec<MultiPartition> {
        self.classes.iter().map(|c| conjugacy_invariant(&c.element.inverse())).collect()
    }

    /// y_C = Σ_w f_{w,C} T_w^∨ and z_C = Σ_w g_{w,C} (T_{w⁻¹})^∨.
    pub fn center_bases(&self) -> Result<(Vec<HeckeElement<R>>, Vec<HeckeElement<R>>), CocenterError> {
        let dual = self.dual_basis()?;
        let f = self.class_polynomial_table()?;
        let k = self.classes.len();
        let mut ys = vec![HeckeElement::zero(); k];
        let mut zs = vec![HeckeElement::zero(); k];
        for (i, w) in self.elements.iter().enumerate() {
            let inv = self.element_index(&w.inverse()).expect("closed under inverses");
            for c in 0..k {
                ys[c].add_scaled(&dual[i], &f[i][c]);
                zs[c].add_scaled(&dual[inv], &f[inv][c]);
            }
        }
        Ok((ys, zs))
    }

    /// For each class, the minimal members whose T_w differs from T_{w_C}
    /// modulo commutators.
    pub fn representative_dependence(&self, budget: usize) -> Result<Vec<RepresentativeReport>, CocenterError> {
        let classes = enumerate_classes(self.h.params, budget)?;
        let out = par::map(&self.classes, |c| {
            let info = classes.iter().find(|x| x.invariant == c.label).expect("label present");
            let rep = self.class_rep_element_of(c);
            let mut differing = vec![];
            let mut checked = 0;
            for w in info.members.iter().filter(|w| length(w) == c.min_length) {
                checked += 1;
                let tw = self.h.gen_word_product(&bm_normal_form(w).word());
                if !self.commutators.contains(&tw.sub(&rep)) {
                    differing.push(format_word(&bm_normal_form(w).word()));
                }
            }
            let bm_word = bm_normal_form(&c.element).word();
            RepresentativeReport {
                label: c.label.to_string(),
                minimal_members: checked,
                differing,
                word_dependent: self.h.gen_word_product(&bm_word) != rep,
            }
        });
        Ok(out)
    }

    fn class_rep_element_of(&self, c: &ClassRep) -> HeckeElement<R> {
        self.h.gen_word_product(&c.word)
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct RepresentativeReport {
    pub label: String,
    pub minimal_members: usize,
    /// BM words of minimal members w with T_w ≢ T_{w_C}.
    pub differing: Vec<String>,
    /// Whether the BM word and the block word of w_C give different T.
    pub word_dependent: bool,
}
