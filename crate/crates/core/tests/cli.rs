use std::process::Command;

use serde_json::Value;

fn magbialg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_magbialg")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, out, _) = magbialg(&all);
    (code, serde_json::from_str(&out).expect("JSON output"))
}

#[test]
fn enum_trees_counts() {
    let (code, out, _) = magbialg(&["enum-trees", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 14);
    let (_, v) = json(&["enum-trees", "4"]);
    assert_eq!(v["count"], 5);
    assert_eq!(v["trees"][0]["tree"], "(((||)|)|)");
}

#[test]
fn mtree_of_the_right_comb() {
    let (code, v) = json(&["mtree", "(|(||))"]);
    assert_eq!(code, 0);
    let mut terms: Vec<(String, i64)> = v["moebius"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["tree"].as_str().unwrap().to_string(), t["coeff"].as_i64().unwrap()))
        .collect();
    terms.sort();
    assert_eq!(terms, vec![("((||)|)".to_string(), -1), ("(|(||))".to_string(), 1)]);
}

#[test]
fn prim_dims_sequences() {
    let (code, out, _) = magbialg(&["prim-dims", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1,0,1,2,6,18");
    let (_, v) = json(&["prim-dims", "--max-n", "4", "--colors", "2"]);
    assert_eq!(v["dims"], serde_json::json!([1, 1, 5, 25]));
}

#[test]
fn hasse_and_moebius_matrix() {
    let (code, out, _) = magbialg(&["hasse", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("->").count(), 5);
    let (_, v) = json(&["hasse", "3", "--order", "bruhat"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 6);
    assert_eq!(v["covers"].as_array().unwrap().len(), 6);
    let (_, v) = json(&["moebius-matrix", "4"]);
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 5);
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row[i], 1);
    }
}

#[test]
fn xi_of_relations() {
    let (code, v) = json(&["xi", "--rel", r#"{"n":2,"arcs":[[1,2]]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["primitive"], true);
    assert_eq!(v["xi"].as_array().unwrap().len(), 2);
    let (code, _, err) = magbialg(&["xi", "--rel", r#"{"n":2,"arcs":[]}"#]);
    assert_eq!(code, 2);
    assert!(err.contains("irreducible"));
    let (code, _, _) = magbialg(&["xi", "--rel", "not json"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(magbialg(&["no-such-command"]).0, 2);
    assert_eq!(magbialg(&["mtree", "(||"]).0, 2);
    assert_eq!(magbialg(&["enum-trees", "99"]).0, 2);
    assert_eq!(magbialg(&["--help"]).0, 0);
}

#[test]
fn verification_commands() {
    let (code, v) = json(&["verify-as", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(magbialg(&["verify-order", "--max-n", "5"]).0, 0);
    let (code, v) = json(&["verify-colored", "--max-n", "3", "--colors", "2"]);
    assert_eq!(code, 0, "{v:#}");
}

/// The quick profile fails exactly on the statements that are false as written.
#[test]
fn verify_all_quick() {
    let (code, v) = json(&["verify-all", "--profile", "quick"]);
    assert_eq!(code, 1);
    assert_eq!(v["profile"], "quick");
    let mut failed: Vec<String> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| {
            let suite = r["suite"].as_str().unwrap().to_string();
            r["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).map(move |c| format!("{suite}: {}", c["name"].as_str().unwrap())).collect::<Vec<_>>()
        })
        .collect();
    failed.sort();
    assert_eq!(
        failed,
        vec![
            "comb-operators: comb operators on three relations are unitriangular otherwise",
            "operator-calculus: the two operator families span the same space",
            "relation-laws: word criterion for ⊔-irreducibility, clause (a) read as i < n-1",
            "relation-laws: ∗_α rebrackets exactly when s(α) ≤ |Q|",
        ]
    );
}
