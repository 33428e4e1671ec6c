use crate::report::{table, Report};
use crate::CliError;
use cyclohecke::group::GroupParams;
use cyclohecke::hecke::Hecke;
use cyclohecke::klr::{KlrBlocks, KlrError};
use cyclohecke::rings::{Cyclotomic, Ring};
use serde_json::json;

impl From<KlrError> for CliError {
    fn from(e: KlrError) -> Self {
        match e {
            KlrError::Inconsistent(_) => CliError::Inconsistent(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn fmt_seq(i: &[usize]) -> String {
    i.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")
}

fn report<R: Ring>(h: &Hecke<R>, e: u32, kappa: &[i64], r: &mut Report) -> Result<(), CliError> {
    let kb = KlrBlocks::new(h, e, kappa)?;
    let rows = kb
        .blocks()
        .iter()
        .map(|alpha| {
            let seqs: Vec<String> = kb
                .support()
                .iter()
                .filter(|i| cyclohecke::klr::content_of(i, e) == *alpha)
                .map(|i| fmt_seq(i))
                .collect();
            vec![
                format!("{alpha:?}"),
                kb.block_dimension(alpha).to_string(),
                seqs.join(" "),
            ]
        })
        .collect();
    for (name, ok) in kb.checks() {
        r.check(name, ok, "");
    }
    let header = ["alpha", "dim e(alpha)H", "residue sequences"].map(String::from).to_vec();
    r.result = json!({
        "table": table(header, rows),
        "refinement_steps": kb.refinement_steps,
        "xi": h.xi.to_string(),
        "q": h.q.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
    });
    Ok(())
}

/// ℚ with ξ = −1 for e = 2, otherwise ℚ(ζ_e).
pub fn blocks(p: GroupParams, e: u32, kappa: &[i64], r: &mut Report) -> Result<(), CliError> {
    if kappa.len() != p.r as usize {
        return Err(CliError::Usage(format!("--kappa needs {} entries", p.r)));
    }
    if e < 2 {
        return Err(CliError::Usage("--e must be at least 2".into()));
    }
    let usage = |x: cyclohecke::group::GroupError| CliError::Usage(x.to_string());
    if e == 2 {
        let q: Vec<i64> = kappa.iter().map(|k| if k.rem_euclid(2) == 0 { 1 } else { -1 }).collect();
        let h = Hecke::rational(p, -1, &q).map_err(usage)?;
        report(&h, e, kappa, r)
    } else {
        let z = Cyclotomic::zeta(e);
        let q = kappa.iter().map(|&k| z.zeta_pow(k)).collect();
        let h = Hecke::new(p, z, q).map_err(usage)?;
        report(&h, e, kappa, r)
    }
}

