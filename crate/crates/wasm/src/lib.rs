//! Browser bindings: each operation takes plain arguments and returns JSON,
//! with errors as `{"error": "..."}`.

use lehmer_core::identity::Suite;
use lehmer_core::partition::ResidueSpec;
use lehmer_core::series::named_series;
use lehmer_core::{Error, TheoremId};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest series order the page may request.
pub const MAX_DEMO_ORDER: usize = 400;

fn to_json<T: Serialize>(result: Result<T, Error>) -> String {
    match result {
        Ok(v) => serde_json::to_string(&v).expect("serializable"),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// `set` is a comma list of residues; empty means `L = O = ∅`.
fn residues(r: u32, set: &str) -> Result<ResidueSpec, Error> {
    let parts = set
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u32>().map_err(|_| Error::InvalidParameter(format!("`{s}` is not a residue"))))
        .collect::<Result<Vec<_>, _>>()?;
    ResidueSpec::from_set(r, &parts)
}

/// Checks an identity for `0 ≤ n ≤ n_max`: `{"thm","params","rows"}`.
pub fn check_json(thm: &str, n_max: u32, r: u32, set: &str) -> String {
    to_json((|| {
        let thm: TheoremId = thm.parse()?;
        let rep = Suite::new().check(thm, n_max, &residues(r, set)?)?;
        Ok(json!({ "thm": rep.thm, "params": rep.params, "rows": rep.rows, "all_ok": rep.all_ok() }))
    })())
}

/// Coefficients `c_0..c_order` of a named series, as decimal strings.
pub fn series_json(name: &str, order: usize, r: u32, set: &str) -> String {
    to_json((|| {
        if order > MAX_DEMO_ORDER {
            return Err(Error::InvalidParameter(format!("order is capped at {MAX_DEMO_ORDER}")));
        }
        let s = named_series(name, &residues(r, set)?, order)?;
        Ok(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
    })())
}

/// The objects counted on the right-hand side at `n`, as display strings.
pub fn witnesses_json(thm: &str, n: u32, r: u32, set: &str) -> String {
    to_json((|| {
        let thm: TheoremId = thm.parse()?;
        let ws = Suite::new().witnesses(thm, n, &residues(r, set)?)?;
        Ok(ws.iter().map(ToString::to_string).collect::<Vec<_>>())
    })())
}

#[wasm_bindgen(js_name = checkIdentity)]
pub fn check_identity(thm: &str, n_max: u32, r: u32, set: &str) -> String {
    check_json(thm, n_max, r, set)
}

#[wasm_bindgen(js_name = seriesCoefficients)]
pub fn series_coefficients(name: &str, order: usize, r: u32, set: &str) -> String {
    series_json(name, order, r, set)
}

#[wasm_bindgen(js_name = listWitnesses)]
pub fn list_witnesses(thm: &str, n: u32, r: u32, set: &str) -> String {
    witnesses_json(thm, n, r, set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn check_reports_rows() {
        let v = parse(check_json("lehmer", 10, 1, ""));
        assert_eq!(v["rows"].as_array().unwrap().len(), 11);
        assert_eq!(v["all_ok"], true);
        let v = parse(check_json("t1_12", 8, 3, "2"));
        assert_eq!(v["rows"][4]["lhs"], -1);
    }

    #[test]
    fn series_and_witnesses() {
        assert_eq!(parse(series_json("qo", 4, 1, "")), json!(["1", "1", "0", "1", "1"]));
        assert_eq!(parse(witnesses_json("t1_2", 4, 1, "")), json!(["[4]", "[2,2]"]));
    }

    #[test]
    fn errors_are_reported() {
        assert!(parse(check_json("nope", 4, 1, ""))["error"].is_string());
        assert!(parse(check_json("t1_12", 4, 2, "x"))["error"].is_string());
        assert!(parse(series_json("qo", 10_000, 1, ""))["error"].is_string());
    }
}
