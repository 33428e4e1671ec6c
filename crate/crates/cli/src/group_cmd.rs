use crate::report::{table, Report};
use crate::CliError;
use cyclohecke::group::{
    bm_normal_form, check_certificate, dc_normal_form, enumerate_classes, format_word, length, parse_word,
    reduce_to_minimal, GroupElement, GroupParams,
};
use cyclohecke::cocenter::class_data;
use cyclohecke::tableaux::enumerate_multipartitions;
use serde_json::json;

/// Groups up to this order are enumerated for class data.
pub const BUDGET: usize = 2_000_000;

pub fn element(p: GroupParams, word: &str) -> Result<GroupElement, CliError> {
    let w = parse_word(word).map_err(|e| CliError::Usage(e.to_string()))?;
    p.eval_word(&w).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn normal_form(p: GroupParams, word: &str) -> Result<Report, CliError> {
    let w = element(p, word)?;
    let bm = bm_normal_form(&w);
    let dc = dc_normal_form(&w).map_err(|e| CliError::Inconsistent(e.to_string()))?;
    let mut r = Report::new("group normal-form");
    r.param("r", p.r).param("n", p.n).param("word", word);
    r.result = json!({
        "element": w.to_json(),
        "bm": { "word": format_word(&bm.word()), "a": bm.a, "v": bm.v.iter().map(|x| x + 1).collect::<Vec<_>>() },
        "length": bm.length(),
        "dc": {
            "a": w_json(&dc.a),
            "d": w_json(&dc.d),
            "d_kind": format!("{:?}", dc.d_kind),
            "b": format_word(&dc.b_word),
        },
    });
    let back = p.eval_word(&bm.word()).map_err(|e| CliError::Inconsistent(e.to_string()))?;
    r.check("BM word evaluates to the element", back == w, "");
    r.check("BM word is reduced", bm.word().len() == bm.length(), format!("length {}", bm.length()));
    r.check("double coset form reconstructs", dc.reconstruct() == w, "");
    Ok(r)
}

fn w_json(w: &GroupElement) -> serde_json::Value {
    json!(format_word(&bm_normal_form(w).word()))
}

pub fn length_cmd(p: GroupParams, word: &str) -> Result<Report, CliError> {
    let w = element(p, word)?;
    let l = length(&w);
    let mut r = Report::new("group length");
    r.param("r", p.r).param("n", p.n).param("word", word);
    r.result = json!({ "length": l });
    r.check("length at most word length", l <= parse_word(word).map(|x| x.len()).unwrap_or(0), "");
    Ok(r)
}

pub fn reduce(p: GroupParams, word: &str) -> Result<Report, CliError> {
    let w = element(p, word)?;
    let cert = reduce_to_minimal(&w).map_err(|e| CliError::Inconsistent(e.to_string()))?;
    let mut r = Report::new("group reduce");
    r.param("r", p.r).param("n", p.n).param("word", word);
    let valid = check_certificate(&cert);
    r.result = cert.to_json();
    r.result["valid"] = json!(valid.is_ok());
    r.check("certificate valid", valid.is_ok(), valid.err().unwrap_or_default());
    if p.order() <= BUDGET as u128 {
        let classes = enumerate_classes(p, BUDGET).map_err(|e| CliError::Inconsistent(e.to_string()))?;
        let label = cyclohecke::group::conjugacy_invariant(&w);
        let min = classes.iter().find(|c| c.invariant == label).map(|c| c.min_length);
        let got = length(&cert.beta_element);
        r.check("terminal length is the class minimum", min == Some(got), format!("{got} vs {min:?}"));
    }
    Ok(r)
}

pub fn classes(p: GroupParams) -> Result<Report, CliError> {
    let cd = class_data(p, BUDGET).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut r = Report::new("group classes");
    r.param("r", p.r).param("n", p.n);
    let rows = cd
        .iter()
        .map(|c| {
            vec![
                c.label.to_string(),
                c.beta.to_string(),
                format_word(&c.word),
                c.size.to_string(),
                c.min_length.to_string(),
            ]
        })
        .collect();
    let header = ["label", "beta", "representative", "size", "min_length"].map(String::from).to_vec();
    r.result = json!({ "count": cd.len(), "table": table(header, rows) });
    let expected = enumerate_multipartitions(p.r as usize, p.n).len();
    r.check("class count is the number of r-partitions", cd.len() == expected, format!("{} classes", cd.len()));
    let total: usize = cd.iter().map(|c| c.size).sum();
    r.check("class sizes add up to the group order", total as u128 == p.order(), format!("{total}"));
    r.check(
        "representatives have minimal length",
        cd.iter().all(|c| length(&c.element) == c.min_length),
        "",
    );
    Ok(r)
}
