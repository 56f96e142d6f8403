use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn hitcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hitcalc"))
        .args(args)
        .env_remove("HITCALC_COLUMN_CAP")
        .output()
        .expect("run hitcalc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn core_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn files(dir: &Path, ext: &str) -> Vec<String> {
    let mut v: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == ext))
        .map(|p| p.display().to_string())
        .collect();
    v.sort();
    v
}

#[test]
fn cohit_prints_dimension_and_basis() {
    let o = hitcalc(&["cohit", "--vars", "4", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k=4 degree=5 monomials=56 hit_rank=41 dimension=15"));
    assert_eq!(lines.count(), 15);
}

#[test]
fn cohit_q_r_split_adds_up() {
    let o = hitcalc(&["cohit", "--vars", "4", "--degree", "5", "--q-r"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "Q=12 R=3"));
}

#[test]
fn cohit_json_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = hitcalc(&["cohit", "--vars", "3", "--degree", "6", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["degree"], 6);
    let dim = v["dimension"].as_u64().unwrap();
    assert_eq!(v["admissible"].as_array().unwrap().len() as u64, dim);

    let o = hitcalc(&["cohit", "--vars", "3", "--degree", "6", "--json", "-"]);
    let line = stdout(&o).lines().last().unwrap().to_owned();
    let w: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v, w);
}

#[test]
fn accelerated_agrees() {
    let plain = hitcalc(&["cohit", "--vars", "4", "--degree", "10"]);
    let fast = hitcalc(&["cohit", "--vars", "4", "--degree", "10", "--accelerated"]);
    assert_eq!(stdout(&plain), stdout(&fast));
}

#[test]
fn is_hit_exit_codes() {
    let o = hitcalc(&["is-hit", "--vars", "2", "--poly", "(2,0)"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_owned()), (Some(0), "hit".into()));
    // Sq^1(x1 x2 x3 x4) summed over all four positions.
    let sq1 = "(2,1,1,1)+(1,2,1,1)+(1,1,2,1)+(1,1,1,2)";
    assert_eq!(hitcalc(&["is-hit", "--vars", "4", "--poly", sq1]).status.code(), Some(0));
    let o = hitcalc(&["is-hit", "--vars", "4", "--poly", "(2,1,1,1)"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_owned()), (Some(1), "not hit".into()));
    assert_eq!(hitcalc(&["is-hit", "--vars", "3", "--poly", "(2,1,1,1)"]).status.code(), Some(2));
    assert_eq!(hitcalc(&["is-hit", "--vars", "2", "--poly", "(2,0)+(1,"]).status.code(), Some(2));
}

#[test]
fn verify_relations_on_corpus_and_errata() {
    let rel = core_fixtures().join("relations");
    let corpus = files(&rel, "rel");
    let args: Vec<&str> = std::iter::once("verify-relations").chain(corpus.iter().map(String::as_str)).collect();
    let o = hitcalc(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap().ends_with(" verified, 0 failed"));

    let errata = files(&rel.join("errata"), "rel");
    let args: Vec<&str> = std::iter::once("verify-relations").chain(errata.iter().map(String::as_str)).collect();
    let o = hitcalc(&args);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).matches("FAIL").count(), 2);
}

#[test]
fn verify_relations_rejects_malformed_and_missing_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.rel");
    std::fs::write(&bad, "(1,1) = Sq^1(1,\n").unwrap();
    assert_eq!(hitcalc(&["verify-relations", bad.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("missing.rel");
    assert_eq!(hitcalc(&["verify-relations", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_relations_reports_false_relation() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("wrong.rel");
    std::fs::write(&p, "(2,1) = Sq^1[(1,1)]\n").unwrap();
    let o = hitcalc(&["verify-relations", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

const SMALL_TABLE: &str = "family,s,t,u,degree,expected_dim,tier\n\
                           2^{s+1}-3,1,,,1,4,required\n\
                           2^{s+1}-3,2,,,5,15,required\n\
                           2^{s+1}+2^s-2,2,,,10,70,optional\n";

#[test]
fn verify_table_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.csv");
    std::fs::write(&good, SMALL_TABLE).unwrap();
    let o = hitcalc(&["verify-table", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 passed, 0 failed, 0 skipped"));
    let o = hitcalc(&["verify-table", good.to_str().unwrap(), "--tier", "all"]);
    assert!(stdout(&o).contains("3 passed, 0 failed, 0 skipped"));

    let wrong = dir.path().join("wrong.csv");
    std::fs::write(&wrong, SMALL_TABLE.replace(",5,15,", ",5,16,")).unwrap();
    assert_eq!(hitcalc(&["verify-table", wrong.to_str().unwrap()]).status.code(), Some(1));

    let capped = Command::new(env!("CARGO_BIN_EXE_hitcalc"))
        .args(["verify-table", good.to_str().unwrap()])
        .env("HITCALC_COLUMN_CAP", "20")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(stdout(&capped).contains("1 passed, 0 failed, 1 skipped"));

    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "family,degree\n2^s,1\n").unwrap();
    assert_eq!(hitcalc(&["verify-table", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn column_cap_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_hitcalc"))
        .args(["cohit", "--vars", "4", "--degree", "9"])
        .env("HITCALC_COLUMN_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column cap"));
}

#[test]
fn verify_basis_fixtures() {
    let bases = files(&core_fixtures().join("bases"), "json");
    let args: Vec<&str> = std::iter::once("verify-basis").chain(bases.iter().map(String::as_str)).collect();
    let o = hitcalc(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("ok")).count(), bases.len());

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("short.json");
    std::fs::write(&p, r#"{"k":4,"degree":1,"expected":[[1,0,0,0],[0,1,0,0],[0,0,1,0]]}"#).unwrap();
    let o = hitcalc(&["verify-basis", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not in file   (0,0,0,1)"));
}

#[test]
fn kameko_pass_and_not_applicable() {
    let o = hitcalc(&["kameko", "--vars", "4", "--degree", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass: dimension 21"));
    let o = hitcalc(&["kameko", "--vars", "4", "--degree", "14"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not applicable"));
}

#[test]
fn filters_never_contradict() {
    let o = hitcalc(&["filters", "--vars", "4", "--degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 85);
    assert!(out.lines().last().unwrap().ends_with("44 hit, wood flags 20, singer flags 44, 0 contradictions"));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(hitcalc(&["cohit", "--vars", "4"]).status.code(), Some(2));
    assert_eq!(hitcalc(&["nonsense"]).status.code(), Some(2));
}
