//! Multipartitions, standard tableaux, contents, residues and degrees.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A node (component, row, column), all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub l: usize,
    pub a: usize,
    pub c: usize,
}

impl Node {
    /// `self` is below `o` when its component is later, or the same
    /// component and a later row.
    pub fn is_below(&self, o: &Node) -> bool {
        self.l > o.l || (self.l == o.l && self.a > o.a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    pub components: Vec<Vec<usize>>,
}

impl MultiPartition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self, String> {
        if components.is_empty() {
            return Err("a multipartition needs at least one component".into());
        }
        for p in &components {
            if p.contains(&0) {
                return Err(format!("zero part in {p:?}"));
            }
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(format!("{p:?} is not weakly decreasing"));
            }
        }
        Ok(MultiPartition { components })
    }

    pub fn empty(r: usize) -> Self {
        MultiPartition {
            components: vec![vec![]; r],
        }
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    pub fn contains(&self, nd: &Node) -> bool {
        nd.l >= 1
            && nd.l <= self.r()
            && nd.a >= 1
            && self.components[nd.l - 1].get(nd.a - 1).is_some_and(|len| nd.c <= *len && nd.c >= 1)
    }

    /// Nodes in row-reading order: rows of component 1, then 2, ...
    pub fn nodes(&self) -> Vec<Node> {
        let mut v = vec![];
        for (l, p) in self.components.iter().enumerate() {
            for (a, len) in p.iter().enumerate() {
                for c in 1..=*len {
                    v.push(Node { l: l + 1, a: a + 1, c });
                }
            }
        }
        v
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut v = vec![];
        for (l, p) in self.components.iter().enumerate() {
            for a in 0..=p.len() {
                let len = p.get(a).copied().unwrap_or(0);
                if a == 0 || p[a - 1] > len {
                    v.push(Node { l: l + 1, a: a + 1, c: len + 1 });
                }
            }
        }
        v
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut v = vec![];
        for (l, p) in self.components.iter().enumerate() {
            for a in 0..p.len() {
                if a + 1 == p.len() || p[a + 1] < p[a] {
                    v.push(Node { l: l + 1, a: a + 1, c: p[a] });
                }
            }
        }
        v
    }

    pub fn add_node(&self, nd: &Node) -> Self {
        let mut m = self.clone();
        let p = &mut m.components[nd.l - 1];
        if nd.a > p.len() {
            p.push(1);
        } else {
            p[nd.a - 1] += 1;
        }
        m
    }

    pub fn remove_node(&self, nd: &Node) -> Self {
        let mut m = self.clone();
        let p = &mut m.components[nd.l - 1];
        p[nd.a - 1] -= 1;
        if p[nd.a - 1] == 0 {
            p.pop();
        }
        m
    }

    /// Dominance: all partial sums of `self` are at least those of `o`.
    pub fn dominates(&self, o: &Self) -> bool {
        assert_eq!(self.r(), o.r());
        let (mut base_s, mut base_o) = (0usize, 0usize);
        for l in 0..self.r() {
            let (ps, po) = (&self.components[l], &o.components[l]);
            let rows = ps.len().max(po.len());
            let (mut acc_s, mut acc_o) = (base_s, base_o);
            for i in 0..rows {
                acc_s += ps.get(i).copied().unwrap_or(0);
                acc_o += po.get(i).copied().unwrap_or(0);
                if acc_s < acc_o {
                    return false;
                }
            }
            if base_s < base_o {
                return false;
            }
            base_s = acc_s;
            base_o = acc_o;
        }
        true
    }

    /// Reverses the components and transposes each one.
    pub fn conjugate(&self) -> Self {
        MultiPartition {
            components: self.components.iter().rev().map(|p| conjugate_partition(p)).collect(),
        }
    }

    pub fn std_tableaux(&self) -> Vec<StdTableau> {
        standard_tableaux(self)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|p| {
                if p.is_empty() {
                    "∅".to_string()
                } else {
                    format!("({})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn conjugate_partition(p: &[usize]) -> Vec<usize> {
    let first = p.first().copied().unwrap_or(0);
    (1..=first).map(|j| p.iter().filter(|x| **x >= j).count()).collect()
}

/// Partitions of n with parts at most `max`, in reverse lexicographic order.
fn partitions_bounded(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions_bounded(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    partitions_bounded(n, n)
}

pub fn enumerate_multipartitions(r: usize, n: usize) -> Vec<MultiPartition> {
    fn rec(r: usize, n: usize) -> Vec<Vec<Vec<usize>>> {
        if r == 0 {
            return if n == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = vec![];
        for k in (0..=n).rev() {
            for p in partitions(k) {
                for mut rest in rec(r - 1, n - k) {
                    rest.insert(0, p.clone());
                    out.push(rest);
                }
            }
        }
        out
    }
    rec(r, n)
        .into_iter()
        .map(|components| MultiPartition { components })
        .collect()
}

/// A standard tableau; `pos[k-1]` is the node holding k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StdTableau {
    pub shape: MultiPartition,
    pub pos: Vec<Node>,
}

impl StdTableau {
    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn from_rows(rows: Vec<Vec<Vec<usize>>>) -> Result<Self, String> {
        let shape = MultiPartition::new(rows.iter().map(|c| c.iter().map(|r| r.len()).collect()).collect())?;
        let n = shape.size();
        let mut pos = vec![None; n];
        for (l, comp) in rows.iter().enumerate() {
            for (a, row) in comp.iter().enumerate() {
                for (c, &k) in row.iter().enumerate() {
                    if k == 0 || k > n || pos[k - 1].is_some() {
                        return Err(format!("entry {k} invalid or repeated"));
                    }
                    pos[k - 1] = Some(Node { l: l + 1, a: a + 1, c: c + 1 });
                }
            }
        }
        let t = StdTableau {
            shape,
            pos: pos.into_iter().map(|p| p.unwrap()).collect(),
        };
        if !t.is_standard() {
            return Err("rows and columns must increase".into());
        }
        Ok(t)
    }

    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let mut rows: Vec<Vec<Vec<usize>>> = self
            .shape
            .components
            .iter()
            .map(|p| p.iter().map(|len| vec![0; *len]).collect())
            .collect();
        for (k, nd) in self.pos.iter().enumerate() {
            rows[nd.l - 1][nd.a - 1][nd.c - 1] = k + 1;
        }
        rows
    }

    fn entry(&self, nd: &Node) -> Option<usize> {
        self.pos.iter().position(|x| x == nd).map(|k| k + 1)
    }

    fn is_standard(&self) -> bool {
        self.pos.iter().enumerate().all(|(k, nd)| {
            let left = Node { c: nd.c.wrapping_sub(1), ..*nd };
            let up = Node { a: nd.a.wrapping_sub(1), ..*nd };
            [left, up]
                .iter()
                .all(|m| !self.shape.contains(m) || self.entry(m).unwrap() < k + 1)
        })
    }

    /// Shape of the subtableau holding 1..m.
    pub fn shape_restricted(&self, m: usize) -> MultiPartition {
        let mut s = MultiPartition::empty(self.shape.r());
        for nd in &self.pos[..m] {
            s = s.add_node(nd);
        }
        s
    }

    pub fn restrict(&self, m: usize) -> StdTableau {
        StdTableau {
            shape: self.shape_restricted(m),
            pos: self.pos[..m].to_vec(),
        }
    }

    pub fn dominates(&self, o: &Self) -> bool {
        (1..=self.n()).all(|m| self.shape_restricted(m).dominates(&o.shape_restricted(m)))
    }

    /// Component and ξ-exponent j − i of the node holding k.
    pub fn content(&self, k: usize) -> Content {
        let nd = self.pos[k - 1];
        Content {
            comp: nd.l,
            diag: nd.c as i64 - nd.a as i64,
        }
    }

    pub fn contents(&self) -> Vec<Content> {
        (1..=self.n()).map(|k| self.content(k)).collect()
    }

    pub fn residue_sequence(&self, rd: &ResidueData) -> Vec<i64> {
        self.pos.iter().map(|nd| rd.residue(nd)).collect()
    }

    /// The permutation d(t) with t = t^λ d(t), as 0-based images:
    /// `d[t(γ)-1] = t^λ(γ)-1`.
    pub fn d_perm(&self) -> Vec<usize> {
        let init = initial_tableau_row(&self.shape);
        relative_perm(&init, self)
    }

    /// The permutation d'(t) with t = t_λ d'(t).
    pub fn d_perm_col(&self) -> Vec<usize> {
        let init = initial_tableau_col(&self.shape);
        relative_perm(&init, self)
    }

    pub fn degree(&self, rd: &ResidueData) -> i64 {
        let mut deg = 0;
        let mut shape = MultiPartition::empty(self.shape.r());
        for nd in &self.pos {
            deg += degree_d(&shape, nd, rd);
            shape = shape.add_node(nd);
        }
        deg
    }
}

fn relative_perm(from: &StdTableau, to: &StdTableau) -> Vec<usize> {
    let n = from.n();
    let mut d = vec![0; n];
    for k in 0..n {
        let nd = to.pos[k];
        d[k] = from.entry(&nd).unwrap() - 1;
    }
    d
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.rows()).unwrap())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content {
    /// 1-based component, selecting Q_comp.
    pub comp: usize,
    /// Exponent of ξ.
    pub diag: i64,
}

pub fn initial_tableau_row(shape: &MultiPartition) -> StdTableau {
    StdTableau {
        shape: shape.clone(),
        pos: shape.nodes(),
    }
}

pub fn initial_tableau_col(shape: &MultiPartition) -> StdTableau {
    let mut pos = vec![];
    for (l, p) in shape.components.iter().enumerate().rev() {
        let conj = conjugate_partition(p);
        for (c, len) in conj.iter().enumerate() {
            for a in 1..=*len {
                pos.push(Node { l: l + 1, a, c: c + 1 });
            }
        }
    }
    StdTableau {
        shape: shape.clone(),
        pos,
    }
}

/// All standard tableaux of the given shape, ordered by the sequence of
/// nodes holding 1, 2, ... in row-reading order.
pub fn standard_tableaux(shape: &MultiPartition) -> Vec<StdTableau> {
    fn rec(target: &MultiPartition, cur: &MultiPartition, pos: &mut Vec<Node>, out: &mut Vec<StdTableau>) {
        if cur == target {
            out.push(StdTableau {
                shape: target.clone(),
                pos: pos.clone(),
            });
            return;
        }
        for nd in cur.addable_nodes() {
            if target.contains(&nd) {
                pos.push(nd);
                rec(target, &cur.add_node(&nd), pos, out);
                pos.pop();
            }
        }
    }
    let mut out = vec![];
    rec(shape, &MultiPartition::empty(shape.r()), &mut vec![], &mut out);
    out
}

/// Integral parameters e and κ₁..κ_r; e = 0 means residues in ℤ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueData {
    pub e: u32,
    pub kappa: Vec<i64>,
}

impl ResidueData {
    pub fn reduce(&self, x: i64) -> i64 {
        if self.e == 0 {
            x
        } else {
            x.rem_euclid(self.e as i64)
        }
    }

    pub fn residue(&self, nd: &Node) -> i64 {
        self.reduce(self.kappa[nd.l - 1] + nd.c as i64 - nd.a as i64)
    }
}

/// d_A(μ): addable minus removable nodes of μ below A with A's residue.
pub fn degree_d(mu: &MultiPartition, a: &Node, rd: &ResidueData) -> i64 {
    let i = rd.residue(a);
    let add = mu
        .addable_nodes()
        .iter()
        .filter(|b| b.is_below(a) && rd.residue(b) == i)
        .count() as i64;
    let rem = mu
        .removable_nodes()
        .iter()
        .filter(|b| b.is_below(a) && rd.residue(b) == i)
        .count() as i64;
    add - rem
}

/// (d₁..d_n) with d_m = d_{A_m}(μ restricted to m) along t^μ.
pub fn y_exponents(mu: &MultiPartition, rd: &ResidueData) -> Vec<i64> {
    let t = initial_tableau_row(mu);
    (1..=t.n())
        .map(|m| degree_d(&t.shape_restricted(m), &t.pos[m - 1], rd))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(c: Vec<Vec<usize>>) -> MultiPartition {
        MultiPartition::new(c).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        assert_eq!(enumerate_multipartitions(1, 5).len(), 7);
        assert_eq!(enumerate_multipartitions(3, 2).len(), 9);
    }

    #[test]
    fn dominance_chain() {
        let a = mp(vec![vec![2], vec![]]);
        let b = mp(vec![vec![1, 1], vec![]]);
        let c = mp(vec![vec![1], vec![1]]);
        assert!(a.dominates(&b) && b.dominates(&c) && a.dominates(&c));
        assert!(!c.dominates(&a));
    }

    #[test]
    fn conjugate_example() {
        assert_eq!(mp(vec![vec![2], vec![1]]).conjugate(), mp(vec![vec![1], vec![1, 1]]));
    }

    #[test]
    fn initial_tableaux() {
        let lam = mp(vec![vec![2, 1, 1], vec![1, 1], vec![2, 1]]);
        let t = initial_tableau_row(&lam);
        assert_eq!(t.rows(), vec![vec![vec![1, 2], vec![3], vec![4]], vec![vec![5], vec![6]], vec![vec![7, 8], vec![9]]]);
        let tc = initial_tableau_col(&lam);
        assert_eq!(tc.rows()[2], vec![vec![1, 3], vec![2]]);
        assert!(t.d_perm().iter().enumerate().all(|(i, x)| i == *x));
        assert_eq!(t.content(5), Content { comp: 2, diag: 0 });
    }

    #[test]
    fn std_counts() {
        assert_eq!(standard_tableaux(&mp(vec![vec![2, 1]])).len(), 2);
        for (r, n) in [(1, 4), (2, 3), (3, 2)] {
            let total: usize = enumerate_multipartitions(r, n)
                .iter()
                .map(|l| standard_tableaux(l).len().pow(2))
                .sum();
            let order = (1..=n).product::<usize>() * r.pow(n as u32);
            assert_eq!(total, order);
        }
    }

    #[test]
    fn residues() {
        let rd = ResidueData { e: 2, kappa: vec![0] };
        let t = initial_tableau_row(&mp(vec![vec![2]]));
        assert_eq!(t.residue_sequence(&rd), vec![0, 1]);
        let mu = mp(vec![vec![1]]);
        assert_eq!(degree_d(&mu, &Node { l: 1, a: 1, c: 1 }, &rd), 0);
        let empty = StdTableau { shape: MultiPartition::empty(1), pos: vec![] };
        assert_eq!(empty.degree(&rd), 0);
    }

    #[test]
    fn from_rows_rejects_nonstandard() {
        assert!(StdTableau::from_rows(vec![vec![vec![2, 1]]]).is_err());
        assert!(StdTableau::from_rows(vec![vec![vec![1, 2], vec![3]]]).is_ok());
    }
}
