use std::process::Command;

use hypident::cli::run;
use hypident::registry::Registry;
use hypident::series::int;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hypident"));
    c.env_remove("HYPIDENT_ORDER");
    c
}

fn run_bin(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out, err) = run_bin(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}"));
    (code, v)
}

fn data_rows(text: &str) -> Vec<&str> {
    text.lines().skip(1).filter(|l| !l.is_empty()).collect()
}

#[test]
fn list_all_and_filters() {
    let (code, out, _) = run_bin(&["list"]);
    assert_eq!(code, 0);
    assert_eq!(data_rows(&out).len(), 18);

    let (_, out, _) = run_bin(&["list", "--provenance", "Berndt"]);
    let ids: Vec<_> = data_rows(&out).iter().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids, ["EQ3", "EQ4"]);

    let (_, out, _) = run_bin(&["list", "--expected", "FAILS"]);
    let ids: Vec<_> = data_rows(&out).iter().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids, ["EQ1", "EQ3", "EQ4", "D1", "D3", "D4"]);
}

#[test]
fn verify_all_json_report() {
    let (code, v) = json(&["verify", "--all", "--mode", "both", "--order", "24", "--tol", "1e-9", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["overall"]["agree"], true);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 18);
    let mut ids: Vec<_> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), 18);
    assert!(v["timestamp"].as_str().unwrap().ends_with('Z'));
    assert_eq!(v["tool_version"], env!("CARGO_PKG_VERSION"));
    let eq4 = entries.iter().find(|e| e["id"] == "EQ4").unwrap();
    assert_eq!(eq4["numeric_verdict"], "FAIL");
    assert!(eq4["residual_stats"]["max_abs"].as_f64().unwrap() > 0.05);
}

#[test]
fn residuals_use_seventeen_significant_digits() {
    let (_, out, _) = run_bin(&["verify", "EQ4", "--mode", "numeric", "--format", "json"]);
    let line = out.lines().find(|l| l.contains("\"max_abs\"")).unwrap();
    let num = line.split(':').nth(1).unwrap().trim().trim_end_matches(',');
    let mantissa = num.split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17, "{num}");
}

#[test]
fn eq3_exact_reports_first_mismatch() {
    let (code, v) = json(&["verify", "EQ3", "--mode", "exact", "--order", "8", "--format", "json"]);
    assert_eq!(code, 0);
    let e = &v["entries"][0];
    assert_eq!(e["exact_verdict"], "FAIL");
    assert_eq!(e["exact_via"], "D3");
    assert_eq!(e["first_mismatch"]["order"], 1);
    assert_eq!(e["first_mismatch"]["symbol"], "ETA");
    assert_eq!(e["first_mismatch"]["difference"], "-1/1");
    assert!(e.get("numeric_verdict").is_none());
}

#[test]
fn eq6_exact_is_not_decidable() {
    let (code, v) = json(&["verify", "EQ6", "--mode", "exact", "--format", "json"]);
    assert_eq!(code, 0);
    let e = &v["entries"][0];
    assert_eq!(e["exact_verdict"], "NOT_EXACTLY_DECIDABLE");
    assert!(e["notes"][0].as_str().unwrap().contains("1/2"));
}

#[test]
fn json_is_deterministic_apart_from_timestamp() {
    let strip = |s: String| -> String {
        s.lines().filter(|l| !l.contains("\"timestamp\"")).collect::<Vec<_>>().join("\n")
    };
    let args = ["verify", "--all", "--format", "json", "--order", "8"];
    let a = strip(run_bin(&args).1);
    let b = strip(run_bin(&args).1);
    assert_eq!(a, b);
}

#[test]
fn csv_rows_per_entry_and_mode() {
    let (code, out, _) = run_bin(&["verify", "--all", "--format", "csv", "--order", "8"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id,mode,status,mismatch_order,mismatch_symbol,mismatch_diff,max_residual,argmax_x"
    );
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 36);
    assert!(rows.contains(&"D1,exact,FAIL,1,ETA,1/1,,"));
}

#[test]
fn empty_grid_gives_exact_only_report() {
    let (code, v) = json(&["verify", "--all", "--grid", "none", "--format", "json", "--order", "4"]);
    assert_eq!(code, 0);
    for e in v["entries"].as_array().unwrap() {
        assert!(e.get("numeric_verdict").is_none());
        assert!(e.get("residual_stats").is_none());
    }
}

#[test]
fn order_from_environment() {
    let out = bin()
        .env("HYPIDENT_ORDER", "3")
        .args(["verify", "D1", "--mode", "exact", "--format", "json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["settings"]["order"], 3);
    let out = bin()
        .env("HYPIDENT_ORDER", "3")
        .args(["verify", "D1", "--mode", "exact", "--format", "json", "--order", "5"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["settings"]["order"], 5);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hypident_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) = run_bin(&["verify", "D4", "--mode", "exact", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["entries"][0]["id"], "D4");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run_bin(&["verify"]).0, 2);
    assert_eq!(run_bin(&["verify", "EQ99"]).0, 2);
    assert_eq!(run_bin(&["verify", "--all", "--order", "0"]).0, 2);
    assert_eq!(run_bin(&["verify", "--all", "--tol", "-1"]).0, 2);
    assert_eq!(run_bin(&["verify", "--all", "--grid", "1:0:1"]).0, 2);
    assert_eq!(run_bin(&["frobnicate"]).0, 2);
    assert_eq!(run_bin(&["list", "--provenance", "Gauss"]).0, 2);
}

#[test]
fn expand_outputs() {
    let (code, out, _) = run_bin(&["expand", "EQ5", "rhs", "--order", "4"]);
    assert_eq!(code, 0);
    let eta = out.lines().find(|l| l.trim_start().starts_with("ETA:")).unwrap();
    assert!(eta.contains("2x + x^3"), "{eta}");

    let (code, out, _) = run_bin(&["expand", "EQ9", "lhs", "--order", "4"]);
    assert_eq!(code, 0);
    let one = out.lines().find(|l| l.trim_start().starts_with("ONE:")).unwrap();
    assert!(one.contains("1 + (1/2)x^2"), "{one}");

    let (code, v) = json(&["expand", "EQ9", "lhs", "--order", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["cases"][0]["components"]["ONE"], serde_json::json!(["1/1", "0/1", "1/2"]));

    let (code, out, _) = run_bin(&["expand", "EQ2", "lhs"]);
    assert_eq!(code, 1);
    assert!(out.contains("NOT_EXACTLY_DECIDABLE"));
}

#[test]
fn corrupted_registry_exits_one() {
    let mut reg = Registry::builtin();
    let args = ["hypident", "verify", "--all", "--order", "8"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run(args, &reg, &mut out, &mut err), 0);

    reg.get_mut("EQ5").unwrap().cases[0].rhs[1].multiplier = int(1);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run(args, &reg, &mut out, &mut err), 1);
    assert!(String::from_utf8(out).unwrap().contains("MISMATCH"));
}
