use crate::report::Report;
use crate::{group_cmd, hecke_cmd, klr_cmd, CliError};
use cyclohecke::group::{check_certificate, enumerate_group, length, reduce_to_minimal, GroupParams};
use cyclohecke::hecke::Hecke;
use cyclohecke::rings::{Cyclotomic, RatFunc, Rational};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

fn params(r: u32, n: usize) -> GroupParams {
    GroupParams::new(r, n).expect("valid parameters")
}

/// Copies the checks of a sub-report under a prefix; errors become failures.
fn absorb(out: &mut Report, prefix: &str, sub: Result<Report, CliError>) {
    match sub {
        Ok(s) => {
            for c in s.checks {
                out.check(format!("{prefix}: {}", c.name), c.passed, c.detail);
            }
        }
        Err(e) => {
            out.check(format!("{prefix}: ran"), false, e.to_string());
        }
    }
}

fn run<F>(name: &str, f: F) -> Result<Report, CliError>
where
    F: FnOnce(&mut Report) -> Result<(), CliError>,
{
    let mut r = Report::new(name);
    f(&mut r)?;
    Ok(r)
}

fn group_layer(p: GroupParams) -> Result<Report, CliError> {
    let mut r = Report::new("group");
    let table = enumerate_group(p, group_cmd::BUDGET).map_err(|e| CliError::Inconsistent(e.to_string()))?;
    let ok = table.elements.iter().zip(&table.lengths).all(|(w, &l)| length(w) == l);
    r.check("length formula equals Cayley distance", ok, format!("{} elements", table.elements.len()));
    r.check("order is r^n n!", table.elements.len() as u128 == p.order(), "");
    let classes = group_cmd::classes(p)?;
    r.checks.extend(classes.checks);
    Ok(r)
}

fn certificates(p: GroupParams) -> Result<Report, CliError> {
    let mut r = Report::new("certificates");
    let table = enumerate_group(p, group_cmd::BUDGET).map_err(|e| CliError::Inconsistent(e.to_string()))?;
    let bad = table
        .elements
        .iter()
        .filter(|w| reduce_to_minimal(w).map(|c| check_certificate(&c).is_err()).unwrap_or(true))
        .count();
    r.check("every element reduces with a valid certificate", bad == 0, format!("{bad} failures"));
    Ok(r)
}

pub fn selftest(level: Level, seed: u64, trials: usize) -> Report {
    let start = Instant::now();
    let mut out = Report::new("selftest");
    out.param("level", format!("{level:?}").to_lowercase()).param("seed", seed).param("trials", trials);
    let mut groups = vec![(2, 2), (3, 2), (2, 3)];
    if level == Level::Full {
        groups.extend([(3, 3), (2, 4)]);
    }
    for &(r, n) in &groups {
        absorb(&mut out, &format!("group ({r},{n})"), group_layer(params(r, n)));
    }
    for &(r, n) in &[(2, 3), (3, 2)] {
        absorb(&mut out, &format!("reduce ({r},{n})"), certificates(params(r, n)));
    }
    if level == Level::Full {
        absorb(&mut out, "reduce (3,3)", certificates(params(3, 3)));
    }
    absorb(&mut out, "relations (2,2) generic", run("relations", |rep| {
        hecke_cmd::relations(&Hecke::generic(params(2, 2)), seed, trials, rep)
    }));
    let mut specialized = vec![(2, 3)];
    if level == Level::Full {
        specialized.extend([(2, 4), (3, 3)]);
    }
    for &(r, n) in &specialized {
        absorb(&mut out, &format!("relations ({r},{n})"), run("relations", |rep| {
            hecke_cmd::relations(&Hecke::default_semisimple(params(r, n)), seed, trials, rep)
        }));
    }
    let mut semisimple = vec![(2, 2), (1, 3)];
    if level == Level::Full {
        semisimple.push((2, 3));
    }
    for &(r, n) in &semisimple {
        let h = Hecke::default_semisimple(params(r, n));
        absorb(&mut out, &format!("seminormal ({r},{n})"), run("seminormal", |rep| hecke_cmd::seminormal(&h, rep)));
        absorb(&mut out, &format!("class polynomials ({r},{n})"), run("class-polys", |rep| {
            hecke_cmd::class_polys(&h, false, rep)
        }));
        absorb(&mut out, &format!("cocenter rank ({r},{n})"), run("cocenter-rank", |rep| hecke_cmd::cocenter_rank(&h, rep)));
    }
    absorb(&mut out, "dual class polynomials (2,2) generic", run("dual-class-polys", |rep| {
        hecke_cmd::dual_class_polys(&Hecke::<RatFunc>::generic_field(params(2, 2)), rep)
    }));
    let mut conj: Vec<(u32, usize, i64, Vec<i64>)> = vec![(1, 3, -1, vec![1]), (2, 2, -1, vec![1, -1])];
    if level == Level::Full {
        conj.extend([(1, 4, -1, vec![1]), (2, 3, -1, vec![1, -1])]);
    }
    for (r, n, xi, q) in &conj {
        let h = Hecke::<Rational>::rational(params(*r, *n), *xi, q).expect("valid parameters");
        absorb(&mut out, &format!("center ({r},{n},xi={xi})"), run("center", |rep| hecke_cmd::center_cmd(&h, true, rep)));
        absorb(&mut out, &format!("cocenter rank ({r},{n},xi={xi})"), run("cocenter-rank", |rep| {
            hecke_cmd::cocenter_rank(&h, rep)
        }));
    }
    if level == Level::Full {
        let z = Cyclotomic::zeta(3);
        let h = Hecke::new(params(1, 3), z.clone(), vec![z.zeta_pow(0)]).expect("valid parameters");
        absorb(&mut out, "center (1,3,e=3)", run("center", |rep| hecke_cmd::center_cmd(&h, true, rep)));
    }
    let mut klr: Vec<(u32, usize, u32, Vec<i64>)> = vec![(1, 3, 2, vec![0]), (2, 2, 2, vec![0, 1])];
    if level == Level::Full {
        klr.extend([(2, 3, 2, vec![0, 1]), (1, 3, 3, vec![0])]);
    }
    for (r, n, e, kappa) in &klr {
        absorb(&mut out, &format!("klr ({r},{n},e={e})"), run("klr", |rep| klr_cmd::blocks(params(*r, *n), *e, kappa, rep)));
    }
    out.result = serde_json::json!({
        "checks": out.checks.len(),
        "failed": out.checks.iter().filter(|c| !c.passed).count(),
        "seconds": start.elapsed().as_secs_f64(),
    });
    out
}
