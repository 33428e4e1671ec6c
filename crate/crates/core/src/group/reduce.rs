//! Conjugation by single generators down to a minimal length representative
//! w_α, then length-additive conjugations sorting the uncolored tail to w_β.

use super::normal_form::{dc_normal_form, length, DKind};
use super::special::{theta_factorization, w_alpha, w_lambda_eps, ColoredSemiBicomposition};
use super::{Gen, GroupElement, GroupError, GroupParams};
use serde_json::json;
use std::collections::{HashMap, VecDeque};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideCondition {
    /// ℓ(xw) < ℓ(w)
    Left,
    /// ℓ(wx⁻¹) < ℓ(w)
    Right,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Phase {
    Peel,
    BlockSwap,
}

/// How a block exchange was realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Schedule,
    Search,
}

#[derive(Clone, Debug)]
pub struct Step {
    pub conjugator: Gen,
    pub before: GroupElement,
    pub after: GroupElement,
    pub len_before: usize,
    pub len_after: usize,
    pub side: SideCondition,
    pub phase: Phase,
}

#[derive(Clone, Debug)]
pub struct ReductionCertificate {
    pub start: GroupElement,
    pub steps: Vec<Step>,
    /// (d₁, …, d_n) after peeling.
    pub peeled: Vec<DKind>,
    pub routes: Vec<(Phase, Route)>,
    /// Endpoint of the move chain; its uncolored tail may be unsorted.
    pub terminal: ColoredSemiBicomposition,
    pub terminal_element: GroupElement,
    pub sort: Vec<StrongConjugation>,
    pub beta: ColoredSemiBicomposition,
    pub beta_element: GroupElement,
}

fn side_name(s: SideCondition) -> &'static str {
    match s {
        SideCondition::Left => "l(xw)<l(w)",
        SideCondition::Right => "l(wx^-1)<l(w)",
        SideCondition::Both => "both",
    }
}

impl ReductionCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<_> = self
            .steps
            .iter()
            .map(|s| {
                json!({
                    "conjugator": s.conjugator.to_string(),
                    "before": s.before.to_json(),
                    "after": s.after.to_json(),
                    "lenBefore": s.len_before,
                    "lenAfter": s.len_after,
                    "sideCondition": side_name(s.side),
                    "phase": format!("{:?}", s.phase),
                })
            })
            .collect();
        json!({
            "start": self.start.to_json(),
            "steps": steps,
            "routes": self.routes.iter().map(|(p, r)| format!("{p:?}:{r:?}")).collect::<Vec<_>>(),
            "terminal": {
                "lambda": self.terminal.lambda,
                "colors": self.terminal.colors,
                "mu": self.terminal.mu,
            },
            "terminalElement": self.terminal_element.to_json(),
            "terminalLength": length(&self.terminal_element),
            "sort": self.sort.iter().map(|c| json!({
                "y": c.y_word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" "),
                "before": c.before.to_json(),
                "after": c.after.to_json(),
                "length": c.length,
            })).collect::<Vec<_>>(),
            "beta": {
                "lambda": self.beta.lambda,
                "colors": self.beta.colors,
                "mu": self.beta.mu,
            },
            "betaElement": self.beta_element.to_json(),
        })
    }
}

/// A valid move w → xwx⁻¹, if any.
fn try_step(w: &GroupElement, x: Gen, phase: Phase) -> Option<Step> {
    let p = w.params();
    let g = p.generator(x).ok()?;
    let gi = g.inverse();
    let lw = length(w);
    let after = g.mul(w).mul(&gi);
    let la = length(&after);
    if la > lw {
        return None;
    }
    let left = length(&g.mul(w)) < lw;
    let right = length(&w.mul(&gi)) < lw;
    let side = match (left, right) {
        (true, true) => SideCondition::Both,
        (true, false) => SideCondition::Left,
        (false, true) => SideCondition::Right,
        (false, false) => return None,
    };
    Some(Step {
        conjugator: x,
        before: w.clone(),
        after,
        len_before: lw,
        len_after: la,
        side,
        phase,
    })
}

fn run_sequence(w: &GroupElement, seq: &[Gen], phase: Phase) -> Option<Vec<Step>> {
    let mut cur = w.clone();
    let mut steps = vec![];
    for &x in seq {
        let s = try_step(&cur, x, phase)?;
        cur = s.after.clone();
        steps.push(s);
    }
    Some(steps)
}

/// Breadth-first search for a chain of valid moves from `w` to `target`
/// using only the given generators.
fn search(w: &GroupElement, target: &GroupElement, gens: &[Gen], phase: Phase) -> Option<Vec<Step>> {
    const CAP: usize = 200_000;
    let mut parent: HashMap<GroupElement, Option<(GroupElement, Step)>> = HashMap::new();
    parent.insert(w.clone(), None);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        if cur == *target {
            let mut steps = vec![];
            let mut node = cur;
            while let Some(Some((prev, step))) = parent.get(&node).cloned() {
                steps.push(step);
                node = prev;
            }
            steps.reverse();
            return Some(steps);
        }
        if parent.len() > CAP {
            return None;
        }
        for &x in gens {
            if let Some(s) = try_step(&cur, x, phase) {
                if !parent.contains_key(&s.after) {
                    parent.insert(s.after.clone(), Some((cur.clone(), s.clone())));
                    queue.push_back(s.after);
                }
            }
        }
    }
    None
}

fn dec(hi: usize, lo: usize) -> Vec<Gen> {
    if hi < lo {
        return vec![];
    }
    (lo..=hi).rev().map(Gen::S).collect()
}

fn inc(lo: usize, hi: usize) -> Vec<Gen> {
    if hi < lo {
        return vec![];
    }
    (lo..=hi).map(Gen::S).collect()
}

/// Uncolored block of size m+1 followed by a colored block of size k+1.
fn schedule_a(m: usize, k: usize, j: usize) -> Vec<Gen> {
    if k == 0 {
        return dec(m + 1 + j, 1 + j);
    }
    let mut s = vec![];
    for i in 1..=k {
        s.extend(dec(m + i + j, i + j));
    }
    s.extend(dec(m + 1 + k + j, 1 + k + j));
    s
}

/// Colored block of size m+1 followed by a smaller colored block of size k+1.
fn schedule_b(m: usize, k: usize, j: usize) -> Vec<Gen> {
    if k == 0 {
        return dec(m + j + 1, j + 1);
    }
    let mut s = vec![];
    for i in 1..=k {
        s.extend(dec(m + i + j, m - k + 2 * i + j - 1));
    }
    s.push(Gen::S(m + k + j + 1));
    for i in (1..=k).rev() {
        s.extend(inc(m - k + 2 * i + j, m + i + j));
    }
    for i in (2..=m - k).rev() {
        s.extend(inc(i + j, i + k + j));
    }
    s.extend(inc(j + 1, j + 1 + k));
    s
}

/// Two colored blocks of size m+1 whose colors are in increasing order.
fn schedule_c(m: usize, j: usize) -> Vec<Gen> {
    if m == 0 {
        return vec![Gen::S(j + 1)];
    }
    let mut s = vec![];
    for i in 1..=m {
        s.extend(dec(m + j + i, 2 * i + j));
    }
    for i in (2..=m + 1).rev() {
        s.extend(inc(2 * i + j - 1, m + i + j));
    }
    s.extend(inc(j + 1, m + j + 1));
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Block {
    size: usize,
    color: u32,
}

fn blocks_element(p: GroupParams, blocks: &[Block]) -> GroupElement {
    let lam: Vec<usize> = blocks.iter().map(|b| b.size).collect();
    let eps: Vec<u32> = blocks.iter().map(|b| b.color).collect();
    w_lambda_eps(p, &lam, &eps).expect("valid blocks")
}

fn out_of_order(a: &Block, b: &Block) -> bool {
    match (a.color, b.color) {
        (0, 0) => false,
        (0, _) => true,
        (_, 0) => false,
        _ => a.size > b.size || (a.size == b.size && a.color < b.color),
    }
}

struct Engine {
    p: GroupParams,
    cur: GroupElement,
    steps: Vec<Step>,
    routes: Vec<(Phase, Route)>,
}

impl Engine {
    fn push(&mut self, steps: Vec<Step>) {
        if let Some(last) = steps.last() {
            self.cur = last.after.clone();
        }
        self.steps.extend(steps);
    }

    fn step(&mut self, x: Gen, phase: Phase) -> Result<(), GroupError> {
        let s = try_step(&self.cur, x, phase).ok_or_else(|| {
            GroupError::Reduction(format!("conjugation by {x} is not a valid move from {}", self.cur))
        })?;
        self.push(vec![s]);
        Ok(())
    }

    /// Moves the current element to `target`, trying each candidate
    /// sequence before falling back to search over `gens`.
    fn reach(
        &mut self,
        target: &GroupElement,
        candidates: &[Vec<Gen>],
        gens: &[Gen],
        phase: Phase,
    ) -> Result<(), GroupError> {
        for seq in candidates {
            if let Some(steps) = run_sequence(&self.cur, seq, phase) {
                let end = steps.last().map(|s| &s.after).unwrap_or(&self.cur);
                if end == target {
                    self.push(steps);
                    self.routes.push((phase, Route::Schedule));
                    return Ok(());
                }
            }
        }
        let steps = search(&self.cur, target, gens, phase)
            .ok_or_else(|| GroupError::Reduction(format!("no chain of moves reaches {target}")))?;
        self.push(steps);
        self.routes.push((phase, Route::Search));
        Ok(())
    }

    /// Peels d_n, d_{n−1}, … off the right, leaving d₁⋯d_n.
    fn peel(&mut self) -> Result<Vec<DKind>, GroupError> {
        let n = self.p.n;
        let mut ds = vec![DKind::One; n];
        let mut tail = self.p.identity();
        for m in (1..=n).rev() {
            let bound = 16 * (length(&self.cur) + 1) * (length(&self.cur) + 1) + 64;
            let mut guard = 0;
            loop {
                let a = self.cur.mul(&tail.inverse());
                let am = a
                    .restrict(m)
                    .ok_or_else(|| GroupError::Reduction(format!("prefix left W_{m}")))?;
                if m == 1 {
                    ds[0] = DKind::TPow(am.colors[0]);
                    tail = a.mul(&tail);
                    break;
                }
                let dc = dc_normal_form(&am)?;
                match dc.b_word.last() {
                    None => {
                        ds[m - 1] = dc.d_kind;
                        tail = dc.d.extend(n).mul(&tail);
                        break;
                    }
                    Some(&x) => self.step(x, Phase::Peel)?,
                }
                guard += 1;
                if guard > bound {
                    return Err(GroupError::Reduction("peeling did not terminate".into()));
                }
            }
        }
        if tail != self.cur {
            return Err(GroupError::Reduction("peeled factors do not multiply back".into()));
        }
        Ok(ds)
    }

    fn sort_blocks(&mut self, blocks: &mut [Block]) -> Result<(), GroupError> {
        loop {
            let mut swapped = false;
            for l in 0..blocks.len().saturating_sub(1) {
                let (a, b) = (blocks[l], blocks[l + 1]);
                if !out_of_order(&a, &b) {
                    continue;
                }
                let j: usize = blocks[..l].iter().map(|x| x.size).sum();
                let (m, k) = (a.size - 1, b.size - 1);
                let seq = if a.color == 0 {
                    schedule_a(m, k, j)
                } else if a.size > b.size {
                    schedule_b(m, k, j)
                } else {
                    schedule_c(m, j)
                };
                blocks.swap(l, l + 1);
                let target = blocks_element(self.p, blocks);
                let gens: Vec<Gen> = (j + 1..j + a.size + b.size).map(Gen::S).collect();
                self.reach(&target, &[seq], &gens, Phase::BlockSwap)?;
                swapped = true;
            }
            if !swapped {
                return Ok(());
            }
        }
    }

}

/// y⁻¹·before·y = after with ℓ(before·y) = ℓ(before) + ℓ(y); lengths of
/// before and after agree.
#[derive(Clone, Debug)]
pub struct StrongConjugation {
    pub y_word: Vec<usize>,
    pub before: GroupElement,
    pub after: GroupElement,
    pub length: usize,
}

impl StrongConjugation {
    pub fn check(&self) -> bool {
        let p = self.before.params();
        let word: Vec<Gen> = self.y_word.iter().map(|&i| Gen::S(i)).collect();
        let Ok(y) = p.eval_word(&word) else {
            return false;
        };
        length(&y) == self.y_word.len()
            && y.inverse().mul(&self.before).mul(&y) == self.after
            && length(&self.before.mul(&y)) == length(&self.before) + self.y_word.len()
            && length(&self.before) == self.length
            && length(&self.after) == self.length
    }
}

/// Sorts the uncolored tail into a partition by strong conjugations.
fn sort_mu(p: GroupParams, start: &GroupElement, blocks: &mut [Block]) -> Result<Vec<StrongConjugation>, GroupError> {
    let mut cur = start.clone();
    let mut out = vec![];
    loop {
        let mut swapped = false;
        for l in 0..blocks.len().saturating_sub(1) {
            let (a, b) = (blocks[l], blocks[l + 1]);
            if a.color != 0 || b.color != 0 || a.size >= b.size {
                continue;
            }
            let j: usize = blocks[..l].iter().map(|x| x.size).sum();
            blocks.swap(l, l + 1);
            let target = blocks_element(p, blocks);
            let sc = conjugators(&cur, &target, j, a.size, b.size)
                .into_iter()
                .map(|y_word| StrongConjugation {
                    y_word,
                    before: cur.clone(),
                    after: target.clone(),
                    length: length(&cur),
                })
                .find(|sc| sc.check())
                .ok_or_else(|| GroupError::Reduction(format!("no length-additive conjugator reaches {target}")))?;
            cur = target;
            out.push(sc);
            swapped = true;
        }
        if !swapped {
            return Ok(out);
        }
    }
}

fn cycle_from(w: &GroupElement, start: usize) -> Vec<usize> {
    let mut c = vec![start];
    let mut i = w.perm[start];
    while i != start {
        c.push(i);
        i = w.perm[i];
    }
    c
}

/// Reduced words of the permutations y with y⁻¹wy = u that match the two
/// cycles on positions j..j+a+b, one per choice of rotation.
fn conjugators(w: &GroupElement, u: &GroupElement, j: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    let (wa, wb) = (cycle_from(w, j), cycle_from(w, j + a));
    let (ub, ua) = (cycle_from(u, j), cycle_from(u, j + b));
    let mut out: Vec<Vec<usize>> = vec![];
    for ra in 0..a {
        for rb in 0..b {
            let mut y: Vec<usize> = (0..w.n()).collect();
            for i in 0..a {
                y[ua[i]] = wa[(i + ra) % a];
            }
            for i in 0..b {
                y[ub[i]] = wb[(i + rb) % b];
            }
            out.push(super::perm_reduced_word(&y));
        }
    }
    out.sort_by_key(|w| w.len());
    out
}

/// Reduces w to the unique w_β (β a colored semi-bipartition) in its class.
pub fn reduce_to_minimal(w: &GroupElement) -> Result<ReductionCertificate, GroupError> {
    let p = w.params();
    let mut eng = Engine {
        p,
        cur: w.clone(),
        steps: vec![],
        routes: vec![],
    };
    let peeled = eng.peel()?;
    let (_, lam, eps) = theta_factorization(&eng.cur)?;
    let mut blocks: Vec<Block> = lam
        .iter()
        .zip(&eps)
        .map(|(&size, &color)| Block { size, color })
        .collect();
    eng.sort_blocks(&mut blocks)?;
    let terminal = to_alpha(&blocks);
    let terminal_element = w_alpha(p, &terminal)?;
    if terminal_element != eng.cur {
        return Err(GroupError::Reduction("terminal element differs from w_alpha".into()));
    }
    let sort = sort_mu(p, &terminal_element, &mut blocks)?;
    let beta = to_alpha(&blocks);
    let beta_element = w_alpha(p, &beta)?;
    Ok(ReductionCertificate {
        start: w.clone(),
        steps: eng.steps,
        peeled,
        routes: eng.routes,
        terminal,
        terminal_element,
        sort,
        beta,
        beta_element,
    })
}

fn to_alpha(blocks: &[Block]) -> ColoredSemiBicomposition {
    let colored: Vec<&Block> = blocks.iter().filter(|b| b.color != 0).collect();
    ColoredSemiBicomposition {
        lambda: colored.iter().map(|b| b.size).collect(),
        colors: colored.iter().map(|b| b.color).collect(),
        mu: blocks.iter().filter(|b| b.color == 0).map(|b| b.size).collect(),
    }
}

/// Re-verifies every recorded step and the terminal element.
pub fn check_certificate(c: &ReductionCertificate) -> Result<(), String> {
    let p = c.start.params();
    let mut cur = c.start.clone();
    for (i, s) in c.steps.iter().enumerate() {
        if s.before != cur {
            return Err(format!("step {i} does not continue the chain"));
        }
        let g = p.generator(s.conjugator).map_err(|e| e.to_string())?;
        if s.after != g.mul(&s.before).mul(&g.inverse()) {
            return Err(format!("step {i}: after is not x*before*x^-1"));
        }
        let (lb, la) = (length(&s.before), length(&s.after));
        if lb != s.len_before || la != s.len_after || la > lb {
            return Err(format!("step {i}: length condition fails"));
        }
        let left = length(&g.mul(&s.before)) < lb;
        let right = length(&s.before.mul(&g.inverse())) < lb;
        let ok = match s.side {
            SideCondition::Left => left,
            SideCondition::Right => right,
            SideCondition::Both => left && right,
        };
        if !ok {
            return Err(format!("step {i}: recorded side condition does not hold"));
        }
        cur = s.after.clone();
    }
    if cur != c.terminal_element {
        return Err("chain does not end at the terminal element".into());
    }
    c.terminal.validate(p).map_err(|e| e.to_string())?;
    if w_alpha(p, &c.terminal).map_err(|e| e.to_string())? != cur {
        return Err("terminal element is not w_alpha".into());
    }
    for (i, sc) in c.sort.iter().enumerate() {
        if sc.before != cur {
            return Err(format!("sort step {i} does not continue the chain"));
        }
        if !sc.check() {
            return Err(format!("sort step {i} is not a length-additive conjugation"));
        }
        cur = sc.after.clone();
    }
    c.beta.validate(p).map_err(|e| e.to_string())?;
    if !c.beta.is_bipartition() {
        return Err("beta is not a colored semi-bipartition".into());
    }
    if cur != c.beta_element || w_alpha(p, &c.beta).map_err(|e| e.to_string())? != cur {
        return Err("sorting does not end at w_beta".into());
    }
    Ok(())
}
