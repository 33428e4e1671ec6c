use super::{Gen, GroupElement, GroupError, GroupParams, Word};

/// Coxeter length of a permutation (number of inversions).
pub fn perm_length(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut inv = 0;
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// Reduced word i₁..i_k with perm = s_{i₁}⋯s_{i_k}, built by stripping the
/// first right descent.
pub fn perm_reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = vec![];
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        word.push(i + 1);
    }
    word.reverse();
    word
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMNormalForm {
    pub a: Vec<u32>,
    pub v: Vec<usize>,
    pub v_word: Vec<usize>,
}

impl BMNormalForm {
    /// The word t_{0,a₀}⋯t_{n−1,a_{n−1}} v with t_{k,a} = s_k⋯s₁tᵃ.
    pub fn word(&self) -> Word {
        let mut w = vec![];
        for (k, &a) in self.a.iter().enumerate() {
            if a > 0 {
                w.extend((1..=k).rev().map(Gen::S));
                w.extend(std::iter::repeat_n(Gen::T, a as usize));
            }
        }
        w.extend(self.v_word.iter().map(|&i| Gen::S(i)));
        w
    }

    pub fn length(&self) -> usize {
        self.a
            .iter()
            .enumerate()
            .filter(|(_, a)| **a > 0)
            .map(|(k, a)| k + *a as usize)
            .sum::<usize>()
            + self.v_word.len()
    }
}

/// Diagonal part t_{0,a₀}⋯t_{n−1,a_{n−1}} as an element.
fn t_product(r: u32, a: &[u32]) -> GroupElement {
    let p = GroupParams { r, n: a.len() };
    let mut w = vec![];
    for (k, &ak) in a.iter().enumerate() {
        if ak > 0 {
            w.extend((1..=k).rev().map(Gen::S));
            w.extend(std::iter::repeat_n(Gen::T, ak as usize));
        }
    }
    p.eval_word(&w).expect("valid word")
}

pub fn bm_normal_form(w: &GroupElement) -> BMNormalForm {
    let n = w.n();
    // The color landing at position p is a_p.
    let mut a = vec![0; n];
    for i in 0..n {
        a[w.perm[i]] = w.colors[i];
    }
    let t = t_product(w.r, &a);
    let v = t.inverse().mul(w);
    assert!(v.colors.iter().all(|c| *c == 0), "BM remainder must be uncolored");
    let v_word = perm_reduced_word(&v.perm);
    BMNormalForm { a, v: v.perm, v_word }
}

pub fn length(w: &GroupElement) -> usize {
    let n = w.n();
    let mut a = vec![0; n];
    for i in 0..n {
        a[w.perm[i]] = w.colors[i];
    }
    // Same count as BMNormalForm::length without building a reduced word.
    let t = t_product(w.r, &a);
    let v = t.inverse().mul(w);
    a.iter()
        .enumerate()
        .filter(|(_, x)| **x > 0)
        .map(|(k, x)| k + *x as usize)
        .sum::<usize>()
        + perm_length(&v.perm)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DKind {
    One,
    /// s_{n−1}
    S,
    /// s'_{n−1,l}
    SPrime(u32),
    /// tᵃ (only in 𝒟₁)
    TPow(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCNormalForm {
    pub a: GroupElement,
    pub d: GroupElement,
    pub d_kind: DKind,
    pub b: GroupElement,
    pub b_word: Word,
}

impl DCNormalForm {
    pub fn reconstruct(&self) -> GroupElement {
        self.a.mul(&self.d).mul(&self.b)
    }
}

pub(crate) fn d_element(p: GroupParams, kind: DKind) -> GroupElement {
    let n = p.n;
    let w: Word = match kind {
        DKind::One => vec![],
        DKind::S => vec![Gen::S(n - 1)],
        DKind::SPrime(l) => {
            let mut w: Word = (1..n).rev().map(Gen::S).collect();
            w.extend(std::iter::repeat_n(Gen::T, l as usize));
            w.extend((1..n).map(Gen::S));
            w
        }
        DKind::TPow(a) => vec![Gen::T; a as usize],
    };
    p.eval_word(&w).expect("valid word")
}

/// w = a·d·b with a, b ∈ W_{n−1} and d ∈ 𝒟_n. The elements a, b are
/// returned embedded in W_n.
pub fn dc_normal_form(w: &GroupElement) -> Result<DCNormalForm, GroupError> {
    let p = w.params();
    let n = p.n;
    if n < 2 {
        return Err(GroupError::BadParams { r: p.r, n });
    }
    let bm = bm_normal_form(w);
    let (kind, b_word): (DKind, Word) = if bm.a[n - 1] == 0 {
        let k = bm.v.iter().position(|x| *x == n - 1).unwrap() + 1;
        if k == n {
            (DKind::One, vec![])
        } else {
            (DKind::S, (k..=n - 2).rev().map(Gen::S).collect())
        }
    } else {
        let l = bm.a[n - 1];
        let k = bm.v.iter().position(|x| *x == 0).unwrap();
        if k == n - 1 {
            (DKind::SPrime(l), vec![])
        } else {
            let mut bw: Word = (1..=n - 2).rev().map(Gen::S).collect();
            bw.extend(std::iter::repeat_n(Gen::T, l as usize));
            bw.extend((1..=k).map(Gen::S));
            (DKind::S, bw)
        }
    };
    let d = d_element(p, kind);
    let b = p.eval_word(&b_word)?;
    let a = w.mul(&b.inverse()).mul(&d.inverse());
    debug_assert!(a.restrict(n - 1).is_some(), "a must lie in W_(n-1)");
    Ok(DCNormalForm {
        a,
        d,
        d_kind: kind,
        b,
        b_word,
    })
}
