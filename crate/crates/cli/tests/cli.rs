use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn mhurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhurwitz"))
        .args(args)
        .env_remove("MHURWITZ_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn all_pipelines_agree_on_the_s3_example() {
    let o = mhurwitz(&["--format", "json", "hurwitz", "--g", "0", "--mu", "1,2", "--pipeline", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "AGREE");
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 3);
    assert!(records.iter().all(|r| r["value"] == "2"));
}

#[test]
fn single_values() {
    assert_eq!(stdout(&mhurwitz(&["--format", "csv", "hurwitz", "--g", "1", "--mu", "1"])), "pipeline,g,mu,value\ncutjoin,1,1,0\n");
    let o = mhurwitz(&["--format", "csv", "hurwitz", "--g", "0", "--mu", "1", "--pipeline", "oracle"]);
    assert_eq!(stdout(&o), "pipeline,g,mu,value\noracle,0,1,1\n");
}

#[test]
fn caps_and_usage_errors_exit_2() {
    let o = mhurwitz(&["hurwitz", "--g", "4", "--mu", "1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2g - 2 + n = 9"));
    let o = mhurwitz(&["hurwitz", "--g", "0", "--mu", "7,6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("|μ| = 13"));
    assert_eq!(mhurwitz(&["hurwitz", "--g", "0", "--mu", "a"]).status.code(), Some(2));
    assert_eq!(mhurwitz(&["omega", "--g", "0", "--n", "2"]).status.code(), Some(2));
    assert_eq!(mhurwitz(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn table_rows() {
    let v = json(&mhurwitz(&["--format", "json", "table", "--gmax", "1", "--nmax", "3", "--amax", "3"]));
    let row = |g: u64, n: u64| {
        v["p"]
            .as_array()
            .unwrap()
            .iter()
            .find(|t| t["g"] == g && t["n"] == n)
            .cloned()
            .unwrap()
    };
    assert_eq!(row(0, 3)["monomials"], serde_json::json!([{"a": [0, 0, 0], "c": "1"}]));
    // (2μ₁² + 2μ₂² + 2μ₁μ₂ - μ₁ - μ₂ - 1)/12
    assert_eq!(
        row(1, 2)["monomials"],
        serde_json::json!([
            {"a": [2, 0], "c": "1/6"},
            {"a": [1, 1], "c": "1/6"},
            {"a": [1, 0], "c": "-1/12"},
            {"a": [0, 0], "c": "-1/12"},
        ])
    );
    let f3 = v["f"].as_array().unwrap().iter().find(|f| f["a"] == 3).unwrap()["f"].as_str().unwrap().to_string();
    assert_eq!(f3, hurwitz_core::structure::f_basis(3).value().to_string());
}

#[test]
fn table_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = mhurwitz(&["--format", "csv", "table", "--gmax", "0", "--nmax", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(path).unwrap();
    assert!(text.starts_with("table,g,n,index,value\nP,0,3,0 0 0,1\n"));
}

#[test]
fn omega_small_case() {
    let v = json(&mhurwitz(&["--format", "json", "omega", "--g", "1", "--n", "1"]));
    assert_eq!(v, serde_json::json!({"g": 1, "n": 1, "terms": [{"c": "1", "k": [3]}, {"c": "1", "k": [4]}]}));
}

#[test]
fn wave_constructions_agree() {
    let o = mhurwitz(&["--format", "json", "wave", "--D", "4", "--M", "4", "--pipeline", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "AGREE");
    assert_eq!(v["residual_zero"], true);
}

#[test]
fn verify_suites() {
    let o = mhurwitz(&["verify", "--suite", "quantum", "--D", "8", "--M", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = mhurwitz(&["verify", "--suite", "string-dilaton", "--gmax", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = mhurwitz(&["verify", "--suite", "airy"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("= 1/24"));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    for args in [
        &["--format", "json", "hurwitz", "--g", "1", "--mu", "3,1", "--pipeline", "all"][..],
        &["--format", "json", "table", "--gmax", "1", "--nmax", "2"][..],
        &["--format", "json", "verify", "--suite", "airy"][..],
    ] {
        assert_eq!(mhurwitz(args).stdout, mhurwitz(args).stdout, "{args:?}");
    }
}

fn cached_record(dir: &Path, pipeline: &str, file: &str) -> std::path::PathBuf {
    dir.join(hurwitz_core::ENGINE_VERSION).join("hurwitz").join(pipeline).join(file)
}

#[test]
fn cache_is_reused_and_disagreement_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache-dir", d, "--format", "json", "hurwitz", "--g", "1", "--mu", "1,2", "--pipeline", "all"];
    let first = mhurwitz(&args);
    assert_eq!(first.status.code(), Some(0));
    let path = cached_record(dir.path(), "cutjoin", "g1-mu2_1.json");
    assert!(path.exists());
    assert!(dir.path().join(hurwitz_core::ENGINE_VERSION).join("omega").join("monotone").join("g1-n2.json").exists());
    assert_eq!(mhurwitz(&args).stdout, first.stdout);

    // a corrupted cache entry must surface as a disagreement, never silently win
    let text = fs::read_to_string(&path).unwrap().replace("\"10\"", "\"11\"");
    fs::write(&path, text).unwrap();
    let o = mhurwitz(&args);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "DISAGREE");
    assert!(stderr(&o).contains("cutjoin = 11"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_mhurwitz"))
        .args(["hurwitz", "--g", "0", "--mu", "3"])
        .env("MHURWITZ_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(cached_record(dir.path(), "cutjoin", "g0-mu3.json").exists());
}
