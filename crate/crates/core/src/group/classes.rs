use super::normal_form::length;
use super::{GroupElement, GroupError, GroupParams};
use crate::tableaux::MultiPartition;
use std::collections::{HashMap, VecDeque};

/// Component j+1 lists the lengths of the cycles whose color sum is j mod r.
pub fn conjugacy_invariant(w: &GroupElement) -> MultiPartition {
    let n = w.n();
    let mut comps = vec![vec![]; w.r as usize];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut i, mut len, mut sum) = (start, 0usize, 0u32);
        while !seen[i] {
            seen[i] = true;
            len += 1;
            sum = (sum + w.colors[i]) % w.r;
            i = w.perm[i];
        }
        comps[sum as usize].push(len);
    }
    for c in comps.iter_mut() {
        c.sort_unstable_by(|a, b| b.cmp(a));
    }
    MultiPartition { components: comps }
}

/// All elements in breadth-first order from the identity, with their
/// Cayley-graph distances.
pub struct GroupTable {
    pub params: GroupParams,
    pub elements: Vec<GroupElement>,
    pub lengths: Vec<usize>,
    pub index: HashMap<GroupElement, usize>,
}

pub fn enumerate_group(p: GroupParams, budget: usize) -> Result<GroupTable, GroupError> {
    if p.order() > budget as u128 {
        return Err(GroupError::Budget(p.order(), budget));
    }
    let gens: Vec<GroupElement> = p.generators().iter().map(|g| p.generator(*g).unwrap()).collect();
    let mut elements = vec![p.identity()];
    let mut lengths = vec![0];
    let mut index = HashMap::new();
    index.insert(p.identity(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let x = elements[i].mul(g);
            if !index.contains_key(&x) {
                index.insert(x.clone(), elements.len());
                queue.push_back(elements.len());
                lengths.push(lengths[i] + 1);
                elements.push(x);
            }
        }
    }
    Ok(GroupTable {
        params: p,
        elements,
        lengths,
        index,
    })
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub invariant: MultiPartition,
    pub members: Vec<GroupElement>,
    pub min_length: usize,
}

impl ClassInfo {
    pub fn minimal_members(&self) -> Vec<&GroupElement> {
        self.members.iter().filter(|w| length(w) == self.min_length).collect()
    }
}

/// Conjugacy classes as orbits under conjugation by the generators.
pub fn enumerate_classes(p: GroupParams, budget: usize) -> Result<Vec<ClassInfo>, GroupError> {
    let table = enumerate_group(p, budget)?;
    let gens: Vec<GroupElement> = p.generators().iter().map(|g| p.generator(*g).unwrap()).collect();
    let mut class_of = vec![usize::MAX; table.elements.len()];
    let mut classes = vec![];
    for start in 0..table.elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        class_of[start] = cid;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let j = table.index[&table.elements[i].conjugate_by(g)];
                if class_of[j] == usize::MAX {
                    class_of[j] = cid;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        let min_length = members.iter().map(|&i| table.lengths[i]).min().unwrap();
        classes.push(ClassInfo {
            invariant: conjugacy_invariant(&table.elements[start]),
            members: members.iter().map(|&i| table.elements[i].clone()).collect(),
            min_length,
        });
    }
    Ok(classes)
}
