use std::path::Path;
use std::process::{Command, Output};

fn thetamap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetamap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn degree_prints_thirty_and_golden_rows() {
    let o = thetamap(&["degree"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(&golden("p_table.csv")));
    assert!(text.contains(&golden("alpha_table.csv")));
    assert!(text.contains("c_15 = 46"));
    assert!(text.contains("base locus count = 16"));
    assert!(text.lines().any(|l| l == "deg theta = 30"));
}

#[test]
fn degree_json() {
    let o = thetamap(&["degree", "--rank", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], 30);
    assert_eq!(v["coefficients"]["c_top"], 46);
    assert_eq!(v["p_values"][7]["value"], 984539);
    assert_eq!(v["base_locus_count"], 16);
}

#[test]
fn degree_other_rank_is_usage_error() {
    let o = thetamap(&["degree", "--rank", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("only rank 4"));
}

#[test]
fn tables_match_golden_files_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    for (which, file) in [("P", "p_table.csv"), ("alpha", "alpha_table.csv")] {
        let path = dir.path().join(file);
        let o = thetamap(&["tables", "--which", which, "--csv", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(std::fs::read(&path).unwrap(), golden(file).into_bytes());
        let o = thetamap(&["tables", "--which", which]);
        assert_eq!(stdout(&o), golden(file));
    }
}

#[test]
fn tables_ssets_has_sixteen_rows() {
    let o = thetamap(&["tables", "--which", "ssets"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 17);
    assert!(text.starts_with("kappa,parity,s_set\n"));
}

#[test]
fn ssets_examples() {
    let o = thetamap(&["ssets", "--kappa", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{1} (odd): {} {1,2} {1,3} {1,4} {1,5} {2,3,4,5}\n");

    let o = thetamap(&["ssets", "--kappa", "1,2,3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["parity"], "even");
    assert_eq!(
        v[0]["s_set"],
        serde_json::json!(["1,2", "1,2,3,4", "1,2,3,5", "1,3", "2,3", "4,5"])
    );

    let o = thetamap(&["ssets"]);
    assert_eq!(stdout(&o).lines().count(), 16);

    let o = thetamap(&["ssets", "--kappa", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd cardinality"));
}

#[test]
fn verlinde_examples() {
    let o = thetamap(&["verlinde", "--rank", "4", "--level", "5", "--genus", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], 21024);
    assert!(v["error_bound"].as_f64().unwrap() < 1e-6);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 5);

    let o = thetamap(&["verlinde", "--rank", "4", "--level", "0", "--genus", "2"]);
    assert!(stdout(&o).contains("= 1 "));
    let o = thetamap(&["verlinde", "--rank", "3", "--level", "2", "--genus", "1"]);
    assert!(stdout(&o).contains("= 6 "));
}

#[test]
fn verlinde_exit_codes() {
    let o = thetamap(&["verlinde", "--rank", "4", "--level", "8", "--genus", "2", "--precision", "16"]);
    assert_eq!(o.status.code(), Some(3));
    let o = thetamap(&["verlinde", "--rank", "4", "--level", "8", "--genus", "2", "--precision", "256"]);
    assert_eq!(o.status.code(), Some(0));
    let o = thetamap(&["verlinde", "--rank", "1", "--level", "1", "--genus", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = thetamap(&["verlinde", "--rank", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = thetamap(&["nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let o = thetamap(&["verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["overall"], "pass");
    let suites = v["suites"].as_array().unwrap();
    let checks = |name: &str| {
        suites
            .iter()
            .find(|s| s["name"] == name)
            .map(|s| s["checks"].as_u64().unwrap())
    };
    assert_eq!(checks("pair-law"), Some(120));
    assert_eq!(checks("s-set"), Some(16));
    assert_eq!(checks("end0"), Some(16));
    assert_eq!(checks("translation"), Some(256));
    assert!(suites.iter().all(|s| s["failures"].as_array().unwrap().is_empty()));
}
