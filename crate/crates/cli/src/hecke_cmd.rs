use crate::group_cmd::BUDGET;
use crate::report::{table, Report};
use crate::CliError;
use cyclohecke::cocenter::{center, center_conjecture_check, commutator_subspace, is_central, CocenterError, Cocenter};
use cyclohecke::group::{bm_normal_form, format_word, parse_word};
use cyclohecke::hecke::Hecke;
use cyclohecke::linalg::dense_rank;
use cyclohecke::rings::Ring;
use cyclohecke::seminormal::{Seminormal, SeminormalError};
use cyclohecke::tableaux::enumerate_multipartitions;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

fn need_field<R: Ring>() -> Result<(), CliError> {
    if R::is_field() {
        Ok(())
    } else {
        Err(CliError::Usage("this command needs a field; use --ring fraction, Q, cyclo:E or --spec".into()))
    }
}

impl From<CocenterError> for CliError {
    fn from(e: CocenterError) -> Self {
        match e {
            CocenterError::NotAField | CocenterError::XiIsOne | CocenterError::Group(_) => CliError::Usage(e.to_string()),
            CocenterError::Seminormal(s) => s.into(),
            _ => CliError::Inconsistent(e.to_string()),
        }
    }
}

impl From<SeminormalError> for CliError {
    fn from(e: SeminormalError) -> Self {
        match e {
            SeminormalError::Inconsistent(_) => CliError::Inconsistent(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn word_element<R: Ring>(h: &Hecke<R>, s: &str) -> Result<cyclohecke::hecke::HeckeElement<R>, CliError> {
    let w = parse_word(s).map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(i) = w.iter().map(|g| g.index()).find(|&i| i >= h.n()) {
        return Err(CliError::Usage(format!("generator index {i} out of range")));
    }
    Ok(h.gen_word_product(&w))
}

pub fn mult<R: Ring>(h: &Hecke<R>, x: &str, y: &str, r: &mut Report) -> Result<(), CliError> {
    let a = word_element(h, x)?;
    let b = word_element(h, y)?;
    let p = h.mul(&a, &b);
    r.param("x", x).param("y", y);
    r.result = json!({ "product": h.to_json(&p), "terms": p.len() });
    let joined = word_element(h, &format!("{x} {y}"))?;
    r.check("product agrees with the concatenated word", joined == p, "");
    Ok(())
}

pub fn relations<R: Ring>(h: &Hecke<R>, seed: u64, trials: usize, r: &mut Report) -> Result<(), CliError> {
    for (name, ok) in h.relation_checks() {
        r.check(name, ok, "");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = h.one_coeff();
    let mut random = || {
        let mut x = h.zero();
        for _ in 0..3 {
            x.add_term(rng.gen_range(0..h.dim()), &one.int_like(rng.gen_range(-3..=3)));
        }
        x
    };
    let mut assoc = true;
    for _ in 0..trials {
        let (a, b, c) = (random(), random(), random());
        assoc &= h.mul(&h.mul(&a, &b), &c) == h.mul(&a, &h.mul(&b, &c));
    }
    r.check("associativity on random triples", assoc, format!("{trials} trials, seed {seed}"));
    r.result = json!({ "dimension": h.dim(), "relations": h.defining_relations().len() });
    Ok(())
}

fn matrix<R: Ring>(cc: &Cocenter<R>, rows: &[Vec<R>]) -> serde_json::Value {
    let mut header = vec!["w".to_string()];
    header.extend(cc.classes.iter().map(|c| c.label.to_string()));
    let body = cc
        .elements
        .iter()
        .zip(rows)
        .map(|(w, row)| {
            let mut v = vec![format_word(&bm_normal_form(w).word())];
            v.extend(row.iter().map(|x| x.to_string()));
            v
        })
        .collect();
    table(header, body)
}

pub fn class_polys<R: Ring>(h: &Hecke<R>, characters: bool, r: &mut Report) -> Result<(), CliError> {
    need_field::<R>()?;
    let cc = Cocenter::with_budget(h, BUDGET)?;
    let rows = if characters {
        let sn = Seminormal::new(h)?;
        (0..cc.elements.len())
            .map(|i| cc.class_polynomials_by_characters(&sn, i))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        cc.class_polynomial_table()?
    };
    r.param("method", if characters { "characters" } else { "projection" });
    indicator_check(&cc, &rows, "f", r);
    let mut resid_ok = true;
    for (i, row) in rows.iter().enumerate() {
        let mut x = cc.t(i).clone();
        for (k, c) in row.iter().enumerate() {
            x = x.sub(&cc.class_rep_element(k).scale(c));
        }
        resid_ok &= cc.commutators.contains(&x);
    }
    r.check("T_w minus its expansion lies in [H,H]", resid_ok, "");
    r.result = json!({ "table": matrix(&cc, &rows) });
    Ok(())
}

fn indicator_check<R: Ring>(cc: &Cocenter<R>, rows: &[Vec<R>], name: &str, r: &mut Report) {
    let ok = cc.classes.iter().enumerate().all(|(k, c)| {
        let i = cc.element_index(&c.element).expect("representative present");
        rows[i].iter().enumerate().all(|(j, v)| if j == k { v.is_one() } else { v.is_zero() })
    });
    r.check(format!("{name} on class representatives is an indicator"), ok, "");
}

pub fn dual_class_polys<R: Ring>(h: &Hecke<R>, r: &mut Report) -> Result<(), CliError> {
    need_field::<R>()?;
    let cc = Cocenter::with_budget(h, BUDGET)?;
    let rows = (0..cc.elements.len())
        .map(|i| cc.g_class_polynomials(i))
        .collect::<Result<Vec<_>, _>>()?;
    let labels = cc.dual_labels();
    let ok = cc.classes.iter().enumerate().all(|(k, c)| {
        let i = cc.element_index(&c.element.inverse()).expect("closed under inverses");
        rows[i].iter().enumerate().all(|(j, v)| if j == k { v.is_one() } else { v.is_zero() })
    });
    r.check("g on class representatives is an indicator", ok, "");
    let (_, zs) = cc.center_bases()?;
    r.check("z_C central", zs.iter().all(|z| is_central(h, z)), format!("{} elements", zs.len()));
    let mut table = matrix(&cc, &rows);
    table["header"] = json!(std::iter::once("w".to_string())
        .chain(labels.iter().map(|l| l.to_string()))
        .collect::<Vec<_>>());
    r.result = json!({ "table": table });
    Ok(())
}

pub fn center_cmd<R: Ring>(h: &Hecke<R>, symmetric: bool, r: &mut Report) -> Result<(), CliError> {
    need_field::<R>()?;
    let classes = enumerate_multipartitions(h.r(), h.n()).len();
    if symmetric {
        let rep = center_conjecture_check(h)?;
        r.check("center dimension equals the class count", rep.dim_center == classes, format!("{}", rep.dim_center));
        r.check("symmetric Jucys-Murphy span equals the center", rep.equal, format!("{}", rep.dim_symmetric));
        r.result = json!({
            "dim_center": rep.dim_center,
            "dim_symmetric": rep.dim_symmetric,
            "classes": classes,
            "verdict": if rep.equal { "equal" } else { "different" },
        });
    } else {
        let z = center(h)?;
        r.check("center dimension equals the class count", z.dim() == classes, format!("{}", z.dim()));
        r.result = json!({ "dim_center": z.dim(), "classes": classes });
    }
    Ok(())
}

pub fn cocenter_rank<R: Ring>(h: &Hecke<R>, r: &mut Report) -> Result<(), CliError> {
    need_field::<R>()?;
    let classes = enumerate_multipartitions(h.r(), h.n()).len();
    let c = commutator_subspace(h)?;
    r.check(
        "rank [H,H] = dim H - class count",
        c.dim() + classes == h.dim(),
        format!("{} = {} - {}", c.dim(), h.dim(), classes),
    );
    r.result = json!({ "rank_commutators": c.dim(), "dim": h.dim(), "cocenter_rank": h.dim() - c.dim() });
    Ok(())
}

pub fn seminormal<R: Ring>(h: &Hecke<R>, r: &mut Report) -> Result<(), CliError> {
    need_field::<R>()?;
    let sn = Seminormal::new(h)?;
    let mut rows = vec![];
    let mut total = h.zero();
    for (a, ts) in sn.tableaux.iter().enumerate() {
        let s = sn.schur_element(a)?;
        for (b, t) in ts.iter().enumerate() {
            total.add_assign(sn.f_t(a, b));
            rows.push(vec![sn.shapes[a].to_string(), t.to_string(), sn.gamma(t)?.to_string(), s.to_string()]);
        }
    }
    r.check("sum of F_t is 1", total == h.one(), "");
    let central = (0..sn.shapes.len()).all(|a| sn.central_idempotent_via_symmetric(a).ok() == Some(sn.f_lambda(a)));
    r.check("symmetric separators give F_lambda", central, "");
    if let Ok(cc) = Cocenter::with_budget(h, BUDGET) {
        let m = cc.character_matrix(&sn)?;
        r.check("character matrix invertible", dense_rank(&m) == m.len(), format!("{}x{}", m.len(), m.len()));
        let agree = (0..sn.shapes.len()).all(|a| {
            (0..cc.classes.len()).all(|k| {
                let x = cc.class_rep_element(k);
                sn.character(a, &x).ok() == Some(sn.character_via_trace(a, &x))
            })
        });
        r.check("characters agree with regular trace", agree, "");
    }
    let header = ["shape", "tableau", "gamma", "schur"].map(String::from).to_vec();
    r.result = json!({ "table": table(header, rows) });
    Ok(())
}
