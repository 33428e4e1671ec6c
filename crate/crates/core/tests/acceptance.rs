//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use cyclohecke::cocenter::{
    center, center_conjecture_check, commutator_subspace, is_central, Cocenter, Subspace,
};
use cyclohecke::group::{
    check_certificate, colored_semi_bipartitions, conjugacy_invariant, enumerate_classes, enumerate_group, length,
    reduce_to_minimal, w_alpha, Gen, GroupParams,
};
use cyclohecke::hecke::{Hecke, HeckeElement};
use cyclohecke::klr::KlrBlocks;
use cyclohecke::linalg::dense_rank;
use cyclohecke::rings::{Cyclotomic, Laurent, RatFunc, Rational, Ring};
use cyclohecke::seminormal::Seminormal;
use cyclohecke::tableaux::{enumerate_multipartitions, MultiPartition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const BUDGET: usize = 2_000_000;

fn params(r: u32, n: usize) -> GroupParams {
    GroupParams::new(r, n).unwrap()
}

fn class_count(r: u32, n: usize) -> usize {
    enumerate_multipartitions(r as usize, n).len()
}

fn random_element<R: Ring>(h: &Hecke<R>, rng: &mut ChaCha8Rng, terms: usize) -> HeckeElement<R> {
    let one = h.one_coeff();
    let mut x = h.zero();
    for _ in 0..terms {
        let c = rng.gen_range(-3i64..=3);
        x.add_scaled(&h.basis(rng.gen_range(0..h.dim())), &one.int_like(c));
    }
    x
}

fn span<R: Ring>(h: &Hecke<R>, xs: &[HeckeElement<R>]) -> Subspace<R> {
    let mut s = Subspace::new(h.dim());
    for x in xs {
        s.insert(x);
    }
    s
}

fn group_layer() -> Outcome {
    for (r, n) in [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4)] {
        let p = params(r, n);
        let table = enumerate_group(p, BUDGET).map_err(|e| e.to_string())?;
        ensure!(table.elements.len() as u128 == p.order(), "order at ({r},{n})");
        for (w, &d) in table.elements.iter().zip(&table.lengths) {
            ensure!(length(w) == d, "length formula differs from BFS distance at ({r},{n})");
        }
        let classes = enumerate_classes(p, BUDGET).map_err(|e| e.to_string())?;
        ensure!(classes.len() == class_count(r, n), "class count at ({r},{n})");
        let by_label: HashMap<MultiPartition, usize> =
            classes.iter().enumerate().map(|(k, c)| (c.invariant.clone(), k)).collect();
        let mut hits = vec![0usize; classes.len()];
        for beta in colored_semi_bipartitions(r, n) {
            let w = w_alpha(p, &beta).map_err(|e| e.to_string())?;
            let k = by_label[&conjugacy_invariant(&w)];
            ensure!(classes[k].members.contains(&w), "w_beta outside its class at ({r},{n})");
            ensure!(length(&w) == classes[k].min_length, "w_beta not of minimal length at ({r},{n})");
            hits[k] += 1;
        }
        ensure!(hits.iter().all(|&c| c == 1), "classes without exactly one w_beta at ({r},{n})");
    }
    ensure!(enumerate_classes(params(2, 2), BUDGET).unwrap().len() == 5, "five classes at (2,2)");
    ensure!(enumerate_classes(params(2, 3), BUDGET).unwrap().len() == 10, "ten classes at (2,3)");
    Ok(())
}

fn reduction_certificates() -> Outcome {
    for (r, n) in [(2, 3), (3, 2), (3, 3)] {
        let p = params(r, n);
        let classes = enumerate_classes(p, BUDGET).map_err(|e| e.to_string())?;
        let min: HashMap<MultiPartition, usize> =
            classes.iter().map(|c| (c.invariant.clone(), c.min_length)).collect();
        let table = enumerate_group(p, BUDGET).unwrap();
        for w in &table.elements {
            let c = reduce_to_minimal(w).map_err(|e| format!("{e} at ({r},{n})"))?;
            check_certificate(&c).map_err(|e| format!("{e} at ({r},{n})"))?;
            let label = conjugacy_invariant(w);
            let mut cur = w.clone();
            for s in &c.steps {
                ensure!(s.before == cur, "steps do not chain");
                ensure!(conjugacy_invariant(&s.after) == label, "step leaves the class");
                ensure!(length(&s.after) <= length(&s.before), "step increases length");
                ensure!(s.len_before == length(&s.before) && s.len_after == length(&s.after), "recorded lengths");
                cur = s.after.clone();
            }
            ensure!(length(&c.beta_element) == min[&label], "terminal length above class minimum");
            ensure!(conjugacy_invariant(&c.beta_element) == label, "terminal element in another class");
        }
    }
    Ok(())
}

fn hecke_relations_and_associativity() -> Outcome {
    fn check<R: Ring>(h: &Hecke<R>, rng: &mut ChaCha8Rng, trials: usize, terms: usize) -> Outcome {
        for (name, ok) in h.relation_checks() {
            ensure!(ok, "relation {name} fails at ({},{})", h.r(), h.n());
        }
        for _ in 0..trials {
            let (a, b, c) = (random_element(h, rng, terms), random_element(h, rng, terms), random_element(h, rng, terms));
            let ab = h.mul(&a, &b);
            ensure!(ab.to_dense(h.dim(), &h.zero_coeff()).len() == h.dim(), "product leaves the span");
            ensure!(h.mul(&ab, &c) == h.mul(&a, &h.mul(&b, &c)), "associativity fails at ({},{})", h.r(), h.n());
        }
        Ok(())
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (r, n) in [(2, 2), (3, 2), (2, 3)] {
        check(&Hecke::<Laurent>::generic(params(r, n)), &mut rng, 100, 3)?;
    }
    check(&Hecke::default_semisimple(params(2, 4)), &mut rng, 100, 6)
}

fn seminormal_suite() -> Outcome {
    for (r, n) in [(2, 2), (1, 3), (3, 2), (2, 3)] {
        let h = Hecke::default_semisimple(params(r, n));
        let sn = Seminormal::new(&h).map_err(|e| e.to_string())?;
        let total = (0..sn.shapes.len()).fold(h.zero(), |acc, a| acc.add(&sn.f_lambda(a)));
        ensure!(total == h.one(), "F_t do not sum to 1 at ({r},{n})");
        for a in 0..sn.shapes.len() {
            let g = sn.central_idempotent_via_symmetric(a).map_err(|e| e.to_string())?;
            ensure!(g == sn.f_lambda(a), "symmetric separator differs from F_lambda at ({r},{n})");
        }
        let cc = Cocenter::new(&h).map_err(|e| e.to_string())?;
        let chi = cc.character_matrix(&sn).map_err(|e| e.to_string())?;
        ensure!(dense_rank(&chi) == cc.classes.len(), "character matrix singular at ({r},{n})");
        if (r, n) != (2, 2) && (r, n) != (1, 3) {
            continue;
        }
        let pairs = sn.pairs();
        let f: Vec<_> = pairs.iter().map(|(s, t)| sn.f_basis(s, t).unwrap()).collect();
        for (i, (s, t)) in pairs.iter().enumerate() {
            let a = sn.locate(s).unwrap().0;
            let lhs = h.tau(&f[i]);
            let rhs = if s == t {
                sn.gamma(t).unwrap().try_div(&sn.schur_element(a).unwrap()).unwrap()
            } else {
                h.zero_coeff()
            };
            ensure!(lhs == rhs, "trace of f_st at ({r},{n})");
            for (j, (u, v)) in pairs.iter().enumerate() {
                let prod = h.mul(&f[i], &f[j]);
                let expect = if t == u {
                    let k = pairs.iter().position(|(x, y)| x == s && y == v).unwrap();
                    f[k].scale(&sn.gamma(t).unwrap())
                } else {
                    h.zero()
                };
                ensure!(prod == expect, "seminormal product rule at ({r},{n})");
            }
        }
    }
    Ok(())
}

fn center_and_cocenter_dimensions() -> Outcome {
    let mut algebras = vec![
        Hecke::default_semisimple(params(2, 2)),
        Hecke::default_semisimple(params(2, 3)),
        Hecke::default_semisimple(params(1, 4)),
    ];
    for (r, n, q) in [(1, 3, vec![1]), (1, 4, vec![1]), (2, 2, vec![1, -1]), (2, 3, vec![1, -1])] {
        algebras.push(Hecke::rational(params(r, n), -1, &q).unwrap());
    }
    for h in &algebras {
        let k = class_count(h.r() as u32, h.n());
        let comm = commutator_subspace(h).map_err(|e| e.to_string())?;
        let z = center(h).map_err(|e| e.to_string())?;
        ensure!(z.dim() == k, "dim Z = {} at ({},{}), expected {k}", z.dim(), h.r(), h.n());
        ensure!(comm.dim() == h.dim() - k, "rank [H,H] = {} at ({},{})", comm.dim(), h.r(), h.n());
    }
    Ok(())
}

fn class_polynomials() -> Outcome {
    for (r, n) in [(2, 2), (1, 3)] {
        let h = Hecke::default_semisimple(params(r, n));
        let cc = Cocenter::new(&h).map_err(|e| e.to_string())?;
        let k = cc.classes.len();
        for c in 0..k {
            let i = cc.element_index(&cc.classes[c].element).unwrap();
            let f = cc.class_polynomials(i).map_err(|e| e.to_string())?;
            ensure!((0..k).all(|d| f[d].is_one() == (c == d) && (c == d || f[d].is_zero())), "indicator");
        }
        for i in 0..cc.elements.len() {
            let f = cc.class_polynomials(i).map_err(|e| e.to_string())?;
            let mut res = cc.t(i).clone();
            for (c, fc) in f.iter().enumerate() {
                res = res.sub(&cc.class_rep_element(c).scale(fc));
            }
            ensure!(cc.commutators.contains(&res), "residual outside [H,H] at ({r},{n})");
        }
        let (ys, zs) = cc.center_bases().map_err(|e| e.to_string())?;
        ensure!(ys.iter().chain(&zs).all(|x| is_central(&h, x)), "y_C or z_C not central");
        ensure!(span(&h, &ys).dim() == k && span(&h, &zs).dim() == k, "y_C or z_C not a basis");
        let gram: Vec<Vec<Rational>> = ys
            .iter()
            .map(|y| (0..k).map(|d| h.tau(&h.mul(y, &cc.class_rep_element(d)))).collect())
            .collect();
        ensure!(dense_rank(&gram) == k, "Gram rank of y_C");
    }
    for (r, n) in [(2, 2), (3, 2)] {
        let h = Hecke::<RatFunc>::generic_field(params(r, n));
        let cc = Cocenter::new(&h).map_err(|e| e.to_string())?;
        for i in 0..cc.elements.len() {
            let f = cc.class_polynomials(i).map_err(|e| e.to_string())?;
            let g = cc.g_class_polynomials(i).map_err(|e| e.to_string())?;
            for v in f.iter().chain(&g) {
                ensure!(v.as_laurent().is_some(), "{v} is not a Laurent polynomial at ({r},{n})");
            }
        }
    }
    Ok(())
}

fn center_conjecture() -> Outcome {
    let cases: Vec<(u32, usize, Vec<i64>)> =
        vec![(1, 3, vec![1]), (1, 4, vec![1]), (2, 2, vec![1, -1]), (2, 3, vec![1, -1])];
    for (r, n, q) in cases {
        let h = Hecke::rational(params(r, n), -1, &q).unwrap();
        let rep = center_conjecture_check(&h).map_err(|e| e.to_string())?;
        ensure!(rep.equal && rep.dim_center == rep.classes, "symmetric span differs from center at ({r},{n},2)");
    }
    let z = Cyclotomic::zeta(3);
    let h = Hecke::new(params(1, 3), z.clone(), vec![z.zeta_pow(0)]).unwrap();
    let rep = center_conjecture_check(&h).map_err(|e| e.to_string())?;
    ensure!(rep.equal && rep.dim_center == 3, "symmetric span differs from center over Q(zeta_3)");
    Ok(())
}

fn klr_blocks() -> Outcome {
    for (r, n, q, kappa) in [(1, 3, vec![1], vec![0]), (2, 2, vec![1, -1], vec![0, 1])] {
        let h = Hecke::rational(params(r, n), -1, &q).unwrap();
        let kb = KlrBlocks::new(&h, 2, &kappa).map_err(|e| e.to_string())?;
        for (name, ok) in kb.checks() {
            ensure!(ok, "{name} fails at ({r},{n},e=2)");
        }
        let es: Vec<_> = kb.idempotents.values().collect();
        let sum = es.iter().fold(h.zero(), |acc, e| acc.add(e));
        ensure!(sum == h.one(), "e(i) do not sum to 1");
        for (a, x) in es.iter().enumerate() {
            for (b, y) in es.iter().enumerate() {
                let p = h.mul(x, y);
                ensure!(if a == b { p == **x } else { p.is_zero() }, "e(i) not orthogonal idempotents");
            }
        }
        ensure!(kb.support() == kb.tableau_support(), "support differs from tableau residues");
        for alpha in kb.blocks() {
            ensure!(is_central(&h, &kb.block_idempotent(&alpha)), "e(alpha) not central");
        }
    }
    Ok(())
}

mod oracle {
    use cyclohecke::rings::Rational;
    use num_traits::{One, Zero};

    /// Iwahori-Hecke algebra of S_3 over Q with T_s^2 = (q-1)T_s + q, on the basis
    /// T_w indexed by permutations of {0,1,2}.
    pub struct S3Oracle {
        q: Rational,
        perms: Vec<[usize; 3]>,
    }

    impl S3Oracle {
        pub fn new(q: i64) -> Self {
            let mut perms = vec![];
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..3 {
                        if a != b && b != c && a != c {
                            perms.push([a, b, c]);
                        }
                    }
                }
            }
            S3Oracle { q: Rational::from_integer(q.into()), perms }
        }

        fn inversions(p: &[usize; 3]) -> usize {
            (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
        }

        fn idx(&self, p: &[usize; 3]) -> usize {
            self.perms.iter().position(|x| x == p).unwrap()
        }

        /// T_{s_i} x, with s_i swapping the values i-1 and i.
        fn left_s(&self, i: usize, x: &[Rational]) -> Vec<Rational> {
            let mut out = vec![Rational::zero(); 6];
            for (j, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let w = self.perms[j];
                let sw = w.map(|v| if v == i - 1 { i } else if v == i { i - 1 } else { v });
                let k = self.idx(&sw);
                if Self::inversions(&sw) > Self::inversions(&w) {
                    out[k] += c;
                } else {
                    out[j] += c * (&self.q - Rational::one());
                    out[k] += c * &self.q;
                }
            }
            out
        }

        pub fn word(&self, w: &[usize]) -> Vec<Rational> {
            let mut x = vec![Rational::zero(); 6];
            x[self.idx(&[0, 1, 2])] = Rational::one();
            for &i in w.iter().rev() {
                x = self.left_s(i, &x);
            }
            x
        }

        fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
            let mut out = vec![Rational::zero(); 6];
            for (j, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut v = y.to_vec();
                for &i in self.reduced_word(&self.perms[j]).iter().rev() {
                    v = self.left_s(i, &v);
                }
                for (o, a) in out.iter_mut().zip(&v) {
                    *o += c * a;
                }
            }
            out
        }

        fn reduced_word(&self, p: &[usize; 3]) -> Vec<usize> {
            // Breadth-first search over words in s1, s2.
            let mut frontier = vec![(vec![], [0, 1, 2])];
            loop {
                for (w, q) in &frontier {
                    if q == p {
                        return w.clone();
                    }
                }
                frontier = frontier
                    .iter()
                    .flat_map(|(w, q)| {
                        [1, 2].map(|i| {
                            let mut w2 = vec![i];
                            w2.extend(w);
                            (w2, q.map(|v| if v == i - 1 { i } else if v == i { i - 1 } else { v }))
                        })
                    })
                    .collect();
            }
        }

        /// Coordinates c with x - Σ c_k reps_k in the span of all commutators.
        pub fn class_coordinates(&self, x: &[Rational], reps: &[Vec<Rational>]) -> Vec<Rational> {
            let basis: Vec<Vec<Rational>> = (0..6).map(|j| self.word(&self.reduced_word(&self.perms[j]))).collect();
            let mut cols: Vec<Vec<Rational>> = reps.to_vec();
            for a in &basis {
                for b in &basis {
                    let (ab, ba) = (self.mul(a, b), self.mul(b, a));
                    cols.push(ab.iter().zip(&ba).map(|(u, v)| u - v).collect());
                }
            }
            // Row-reduce [cols | x] and read off the first reps.len() unknowns.
            let m = cols.len();
            let mut rows: Vec<Vec<Rational>> = (0..6)
                .map(|i| cols.iter().map(|c| c[i].clone()).chain([x[i].clone()]).collect())
                .collect();
            let mut pivots = vec![];
            let mut row = 0;
            for col in 0..m {
                let Some(p) = (row..6).find(|&i| !rows[i][col].is_zero()) else {
                    continue;
                };
                rows.swap(row, p);
                let inv = rows[row][col].recip();
                rows[row] = rows[row].iter().map(|v| v * &inv).collect();
                for i in 0..6 {
                    if i != row && !rows[i][col].is_zero() {
                        let f = rows[i][col].clone();
                        let pivot_row = rows[row].clone();
                        for (a, b) in rows[i].iter_mut().zip(&pivot_row) {
                            *a -= &f * b;
                        }
                    }
                }
                pivots.push(col);
                row += 1;
            }
            assert!(pivots.iter().take(reps.len()).copied().eq(0..reps.len()), "representatives independent");
            (0..reps.len()).map(|k| rows[k][m].clone()).collect()
        }
    }
}

use oracle::S3Oracle;

fn cross_oracles() -> Outcome {
    for (r, n) in [(2, 2), (1, 3), (2, 3)] {
        let h = Hecke::default_semisimple(params(r, n));
        let sn = Seminormal::new(&h).map_err(|e| e.to_string())?;
        for j in 0..h.dim() {
            for a in 0..sn.shapes.len() {
                let x = h.basis(j);
                ensure!(
                    sn.character(a, &x).unwrap() == sn.character_via_trace(a, &x),
                    "characters disagree at ({r},{n})"
                );
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (r, n) in [(2, 2), (3, 2)] {
        let hg = Hecke::<RatFunc>::generic_field(params(r, n));
        let gen = Cocenter::new(&hg).map_err(|e| e.to_string())?;
        let table = gen.class_polynomial_table().map_err(|e| e.to_string())?;
        for _ in 0..3 {
            let xi = rng.gen_range(2i64..=9);
            let mut q: Vec<i64> = vec![];
            while q.len() < r as usize {
                let v = rng.gen_range(-9i64..=9);
                if v != 0 && !q.contains(&v) {
                    q.push(v);
                }
            }
            let values: Vec<Rational> =
                std::iter::once(xi).chain(q.iter().copied()).map(|v| Rational::from_integer(v.into())).collect();
            let hs = Hecke::rational(params(r, n), xi, &q).unwrap();
            let spec = Cocenter::new(&hs).map_err(|e| e.to_string())?;
            for (i, row) in table.iter().enumerate() {
                let direct = spec.class_polynomials(i).map_err(|e| e.to_string())?;
                for (f, d) in row.iter().zip(&direct) {
                    ensure!(&f.evaluate(&values).unwrap() == d, "specialization mismatch at xi={xi}, Q={q:?}");
                }
            }
        }
    }

    for xi in [2i64, 3, -1] {
        let oracle = S3Oracle::new(xi);
        let h = Hecke::rational(params(1, 3), xi, &[1]).unwrap();
        let cc = Cocenter::new(&h).map_err(|e| e.to_string())?;
        let to_indices = |w: &[Gen]| -> Vec<usize> {
            w.iter()
                .map(|g| match g {
                    Gen::S(i) => *i,
                    Gen::T => panic!("t in a symmetric group word"),
                })
                .collect()
        };
        let reps: Vec<Vec<Rational>> = cc.classes.iter().map(|c| oracle.word(&to_indices(&c.word))).collect();
        for i in 0..cc.elements.len() {
            let x = oracle.word(&to_indices(&cc.words[i]));
            let expected = oracle.class_coordinates(&x, &reps);
            let got = cc.class_polynomials(i).map_err(|e| e.to_string())?;
            ensure!(got == expected, "S_3 oracle disagrees at xi={xi} for {:?}", cc.words[i]);
        }
    }
    Ok(())
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("group layer exactness", Duration::from_secs(60), group_layer),
        ("reduction certificates", Duration::from_secs(120), reduction_certificates),
        ("Hecke relations and dimension", Duration::from_secs(600), hecke_relations_and_associativity),
        ("seminormal suite", Duration::from_secs(600), seminormal_suite),
        ("center and cocenter dimensions", Duration::from_secs(300), center_and_cocenter_dimensions),
        ("class polynomials", Duration::from_secs(600), class_polynomials),
        ("center conjecture instances", Duration::from_secs(600), center_conjecture),
        ("KLR blocks", Duration::from_secs(600), klr_blocks),
        ("cross-oracle consistency", Duration::from_secs(600), cross_oracles),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= limit {
                Ok(())
            } else {
                Err(format!("exceeded {}s", limit.as_secs()))
            }
        });
        match outcome {
            Ok(()) => println!("[PASS] criterion {}: {name} ({:.2}s)", k + 1, elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name} ({:.2}s): {e}", k + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} failed", failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
