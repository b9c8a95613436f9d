use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

fn rectilink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectilink")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn diameter_fast_on_donut() {
    let donut = fixture("donut");
    let v = json(&rectilink(&["diameter", donut.to_str().unwrap(), "--algo", "fast"]));
    assert_eq!(v["value"], 3);
    assert_eq!(v["engine"], "fast");
    assert_eq!(v["pair"], serde_json::json!([[3, 7], [11, 7]]));
    assert!(v["timings"]["seconds"].is_number());
}

#[test]
fn routing_is_reported() {
    let square = fixture("square");
    let v = json(&rectilink(&["diameter", square.to_str().unwrap(), "--algo", "edge-scan"]));
    assert_eq!(v["routed_to_fallback"], true);
    assert_eq!(v["engine"], "fallback");
    assert_eq!(v["value"], 2);
    let lshape = fixture("lshape");
    let v = json(&rectilink(&["radius", lshape.to_str().unwrap(), "--algo", "matmul"]));
    assert_eq!((v["value"].as_u64(), v["routed_to_fallback"].as_bool()), (Some(2), Some(true)));
}

#[test]
fn verify_lshape_ok() {
    let lshape = fixture("lshape");
    let out = rectilink(&["verify", lshape.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "ok");
    assert_eq!(v["oracle_diameter"], 2);
    assert_eq!(v["oracle_radius"], 2);
    assert_eq!(v["diameter"].as_array().unwrap().len(), 4);
}

#[test]
fn dist_square() {
    let square = fixture("square");
    let out = rectilink(&["--format", "text", "dist", square.to_str().unwrap(), "--p", "1,1", "--q", "7,3"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");
    let out = rectilink(&["dist", square.to_str().unwrap(), "--p", "1,1", "--q", "1,7", "--oracle"]);
    assert_eq!(json(&out)["distance"], 1);
    let out = rectilink(&["dist", square.to_str().unwrap(), "--p", "0.5,1.5", "--q", "9.5,1.5"]);
    assert_eq!(json(&out)["distance"], 1);
}

#[test]
fn input_errors_exit_1() {
    let donut = fixture("donut");
    let d = donut.to_str().unwrap();
    for args in [
        vec!["dist", d, "--p", "7,7", "--q", "1,1"],
        vec!["dist", d, "--p", "0.3,1", "--q", "1,1"],
        vec!["diameter", "/nonexistent.json"],
        vec!["diameter", d, "--algo", "quantum"],
        vec!["frobnicate"],
    ] {
        assert_eq!(rectilink(&args).status.code(), Some(1), "{args:?}");
    }

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[2,2],[4,2],[4,4],[2,4]], [[2,6],[4,6],[4,8],[2,8]]]}"#).unwrap();
    let out = rectilink(&["decompose", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("general position"));

    let skew = dir.path().join("skew.json");
    std::fs::write(&skew, r#"{"outer": [[0,0],[10,0],[10,10],[1,9]]}"#).unwrap();
    let out = rectilink(&["decompose", skew.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-rectilinear edge"));
}

#[test]
fn decompose_json_schema() {
    let donut = fixture("donut");
    let v = json(&rectilink(&["decompose", "--json", donut.to_str().unwrap()]));
    assert_eq!((v["n"].as_u64(), v["h"].as_u64(), v["chi"].as_u64()), (Some(8), Some(1), Some(8)));
    assert_eq!((v["ordiam"].as_u64(), v["orrad"].as_u64()), (Some(5), Some(4)));
    let rects = v["rects"].as_array().unwrap();
    assert_eq!(rects.len(), 8);
    assert_eq!(rects.iter().filter(|r| r["orientation"] == "horizontal").count(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 8);
}

#[test]
fn gen_is_deterministic_and_verifiable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let p = path.to_str().unwrap();
    let args = ["gen", "--width", "9", "--height", "7", "--cells", "40", "--holes", "1", "--seed", "5"];
    let a = rectilink(&args);
    let b = rectilink(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let mut with_out = args.to_vec();
    with_out.extend(["--out", p]);
    let v = json(&rectilink(&with_out));
    assert_eq!(v["h"], 1);
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), String::from_utf8_lossy(&a.stdout).trim());
    assert_eq!(rectilink(&["verify", p]).status.code(), Some(0));

    let out = rectilink(&["gen", "--width", "2", "--height", "2", "--cells", "4", "--holes", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn byte_stable_without_timings() {
    let donut = fixture("donut");
    let d = donut.to_str().unwrap();
    for args in [
        vec!["diameter", d, "--algo", "matmul", "--no-timings"],
        vec!["radius", d, "--algo", "oracle", "--no-timings"],
        vec!["verify", d, "--no-timings"],
    ] {
        assert_eq!(rectilink(&args).stdout, rectilink(&args).stdout, "{args:?}");
    }
}

#[test]
fn bench_rows() {
    let out = rectilink(&["bench", "--count", "20", "--width", "8", "--height", "8", "--cells", "30"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    for col in ["n", "m", "chi", "diam_fast_s", "diam_matmul_s", "setup_s"] {
        assert!(header.contains(&col), "missing {col}");
    }
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 20);
    let fast = header.iter().position(|&c| c == "diam_fast_s").unwrap();
    let matmul = header.iter().position(|&c| c == "diam_matmul_s").unwrap();
    assert!(rows.iter().all(|r| !r[fast].is_empty() && !r[matmul].is_empty()));

    let donut = fixture("donut");
    let out = rectilink(&["bench", donut.to_str().unwrap(), "--rows", "json", "--engines", "diam-oracle,rad-oracle"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["diameter"].as_u64(), v["radius"].as_u64()), (Some(3), Some(2)));
    assert!(v["diam_fast_s"].is_null());
}

#[test]
fn render_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("d.svg");
    let donut = fixture("donut");
    let out = rectilink(&[
        "render",
        donut.to_str().unwrap(),
        "--overlay",
        "horizontal,vertical,diameter,radius",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(svg.matches("<rect").count(), 8);
    assert_eq!(svg.matches("<circle").count(), 3);
    assert_eq!(svg.matches("class=\"hole\"").count(), 1);
}
