use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn data(name: &str) -> String {
    dir("data").join(name).to_string_lossy().into_owned()
}

fn qhpp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhpp"))
        .args(args)
        .env_remove("QHPP_TOL")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

/// Compares against `tests/golden/<name>`; `QHPP_BLESS=1` rewrites it.
fn golden(name: &str, out: &Output) {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let path = dir("golden").join(name);
    if std::env::var_os("QHPP_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), want, "golden {name}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| qhpp(args).status.code();
    assert_eq!(code(&["analyze", &data("malformed.txt")]), Some(2));
    assert_eq!(code(&["analyze", &data("missing.txt")]), Some(2));
    assert_eq!(code(&["analyze", &data("not_qh.txt")]), Some(3));
    assert_eq!(code(&["analyze", &data("x011_unit.txt")]), Some(4));
    assert_eq!(code(&["catalog", "--degree", "4"]), Some(5));
    assert_eq!(code(&["plot", &data("center.txt"), "--window", "1:1,0:1"]), Some(6));
    assert_eq!(code(&["plot", &data("center.txt"), "--window", "0:1"]), Some(6));
    assert_eq!(code(&["analyze", &data("x011.txt"), "--tol", "0.5"]), Some(2));
}

#[test]
fn malformed_input_reports_position() {
    let out = qhpp(&["analyze", &data("malformed.txt")]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn bad_env_tolerance_is_rejected() {
    let out = Command::new(env!("CARGO_BIN_EXE_qhpp"))
        .args(["analyze", &data("x011.txt")])
        .env("QHPP_TOL", "fine")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_tolerance_reaches_the_oracle() {
    let out = Command::new(env!("CARGO_BIN_EXE_qhpp"))
        .args(["analyze", &data("x011.txt")])
        .env("QHPP_TOL", "1e-8")
        .output()
        .unwrap();
    assert_eq!(json(&out)["oracle"]["tol"], 1e-8);
    let out = Command::new(env!("CARGO_BIN_EXE_qhpp"))
        .args(["analyze", &data("x011.txt"), "--tol", "1e-9"])
        .env("QHPP_TOL", "1e-8")
        .output()
        .unwrap();
    assert_eq!(json(&out)["oracle"]["tol"], 1e-9);
}

#[test]
fn catalog_lists_fifteen_families() {
    let out = qhpp(&["catalog"]);
    let v = json(&out);
    let fams = v["families"].as_array().unwrap();
    assert_eq!(fams.len(), 15);
    assert_eq!(v["count"], 15);
    let x132 = fams.iter().find(|f| f["name"] == "X_132").unwrap();
    assert_eq!(x132["weight"], serde_json::json!({"s1": 5, "s2": 2, "d": 9}));
    golden("catalog.json", &out);
}

#[test]
fn census_counts() {
    let out = qhpp(&["census"]);
    let v = json(&out);
    assert_eq!(v["a14>1"], 24);
    assert_eq!(v["a14<1"], 14);
    assert_eq!(v["a14=1"], 14);
    assert_eq!(v["total"], 52);
    golden("census.json", &out);
}

#[test]
fn analyze_x011() {
    let out = qhpp(&["analyze", &data("x011.txt"), "--no-oracle"]);
    let v = json(&out);
    assert_eq!(v["weights"]["minimal"], serde_json::json!({"s1": 2, "s2": 1, "d": 4}));
    assert_eq!(v["structure"]["name"], "X_011");
    let min = v["transforms"].as_array().unwrap().iter().find(|t| t["path"] == "min").unwrap();
    assert_eq!(min["target_class"], "H2");
    assert!(v["h2"].is_object());
    assert!(v["oracle"].is_null());
    golden("analyze_x011.json", &out);
}

#[test]
fn analyze_degree_one() {
    let out = qhpp(&["analyze", &data("x1.txt"), "--no-oracle"]);
    let v = json(&out);
    assert_eq!(v["structure"]["form"], "degree-one");
    assert_eq!(v["weights"]["minimal"]["d"], 1);
    let min = v["transforms"].as_array().unwrap().iter().find(|t| t["path"] == "min").unwrap();
    assert_eq!(min["target"]["degree"], 1);
    golden("analyze_x1.json", &out);
}

#[test]
fn analyze_x111_and_center() {
    let out = qhpp(&["analyze", &data("x111.txt"), "--no-oracle"]);
    let v = json(&out);
    assert_eq!(v["x111"]["regime"], "a14=1");
    assert!(v["portrait"]["figure_label"].is_string());
    golden("analyze_x111.json", &out);

    let out = qhpp(&["analyze", &data("center.txt"), "--no-oracle"]);
    let v = json(&out);
    assert_eq!(v["center"], "global-center");
    assert_eq!(v["portrait"]["canonical"], "C");
    golden("analyze_center.json", &out);
}

#[test]
fn roots_carry_polynomial_and_interval() {
    let v = json(&qhpp(&["analyze", &data("x111.txt"), "--no-oracle"]));
    for d in v["directions"].as_array().unwrap() {
        if d["slope"].is_null() {
            continue;
        }
        assert!(d["slope"]["polynomial"].is_string());
        assert_eq!(d["slope"]["interval"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn analyze_is_deterministic() {
    for f in ["x011.txt", "x111.txt"] {
        let a = qhpp(&["analyze", &data(f)]);
        let b = qhpp(&["analyze", &data(f)]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{f}");
    }
}

#[test]
fn oracle_check_agrees() {
    let v = json(&qhpp(&["oracle-check", &data("x111.txt")]));
    assert_eq!(v["oracle"]["disagreements"], 0);
    assert!(v["oracle"]["agreements"].as_u64().unwrap() > 0);
}

#[test]
fn plot_outputs() {
    let out = qhpp(&["plot", &data("center.txt"), "--window=-1:1,-1:1", "--streamlines", "0"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "t,x,y\n");

    let out = qhpp(&["plot", &data("center.txt"), "--window=-1:1,-1:1", "--streamlines", "4", "--format", "svg"]);
    let svg = String::from_utf8_lossy(&out.stdout);
    assert!(svg.starts_with("<svg"), "{svg}");
    assert_eq!(svg.matches("<polyline").count(), 4);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("qhpp-census-{}.json", std::process::id()));
    let out = qhpp(&["census", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text, std::fs::read_to_string(dir("golden").join("census.json")).unwrap());
}
