use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const TET: &str = "sc2 4 full\nf 1 2 3\nf 1 2 4\nf 1 3 4\nf 2 3 4\n";
const RP6: &str = "sc2 6 full\nf 1 2 3\nf 1 2 4\nf 1 3 5\nf 1 4 6\nf 1 5 6\nf 2 3 6\nf 2 4 5\nf 2 5 6\nf 3 4 5\nf 3 4 6\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_randcomplex"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    serde_json::from_str(text.lines().next().unwrap()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn gen_is_deterministic_and_parses() {
    let a = run(&["gen", "--n", "12", "--p", "0.3", "--seed", "9"]);
    let b = run(&["gen", "--n", "12", "--p", "0.3", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("sc2 12 full\n"));
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "y.sc2", &text);
    let v = json(&["homology", &f]);
    assert_eq!(v["betti"]["b0"], 1);
}

#[test]
fn fixture_reports() {
    let dir = tempfile::tempdir().unwrap();
    let tet = write(dir.path(), "tet.sc2", TET);
    let rp6 = write(dir.path(), "rp6.sc2", RP6);

    let v = json(&["homology", &rp6, "--coeff", "q"]);
    assert_eq!((v["betti"]["b1"].as_u64(), v["betti"]["b2"].as_u64()), (Some(0), Some(0)));
    let v = json(&["homology", &rp6, "--coeff", "z"]);
    assert_eq!(v["h1_integral"]["torsion"], serde_json::json!([2]));
    let v = json(&["density", &rp6]);
    assert_eq!(v["value"], "3/5");
    let v = json(&["density", &tet, "--anchor", "3"]);
    assert_eq!(v["value"], "0");
    let v = json(&["sparse", &tet, "--eps", "0.6", "--m", "4"]);
    assert_eq!(v["outcome"]["kind"], "dense_witness");
    let v = json(&["sparse", &tet, "--eps", "0.4", "--m", "4"]);
    assert_eq!(v["outcome"]["kind"], "sparse");
    let v = json(&["certify-sc", &tet]);
    assert_eq!(v["outcome"], "certified");
    let v = json(&["pi1", &tet, "--presentation"]);
    assert_eq!(v["presentation"]["relators"].as_array().unwrap().len(), 4);
    let v = json(&["id3", &tet, "--area-budget", "2"]);
    assert_eq!(v["id3"]["noncontractible"], false);
    assert_eq!(v["area"]["area"], 1);
    let v = json(&["evidence", &tet, "--eps", "0.1", "--m", "1"]);
    assert_eq!(v["kind"], "evidence");
    let v = json(&["classify", &rp6]);
    assert_eq!(v["components"][0]["projective_planes"], 1);
    let v = json(&["bound", &rp6, "--w", "0"]);
    assert_eq!((v["bound"].as_str(), v["holds"].as_bool()), (Some("10"), Some(true)));
    let v = json(&["collapse", &tet]);
    assert_eq!(v["f_vector"], serde_json::json!([4, 6, 4]));
}

#[test]
fn errors_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.sc2", "sc2 3 full\nf 1 2 2\n");
    let out = run(&["homology", &bad]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let k4 = write(dir.path(), "k4.sc2", "sc2 4 full\n");
    assert!(!run(&["density", &k4]).status.success());
}

#[test]
fn sweep_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let cfg = format!(
        "n = [20]\np = [0.0, 1.0]\ntrials = 1\nseed = 1\nchecks = [\"sc_certify\"]\nout = {:?}\n",
        csv.to_string_lossy()
    );
    let cfg_path = write(dir.path(), "cfg.toml", &cfg);
    let out = run(&["sweep", "--config", &cfg_path]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let first = std::fs::read(&csv).unwrap();
    let text = String::from_utf8(first.clone()).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(run(&["sweep", "--config", &cfg_path]).status.success());
    assert_eq!(std::fs::read(&csv).unwrap(), first);

    let svg_path = dir.path().join("plot.svg");
    let out = run(&["plot", &csv.to_string_lossy(), "-o", &svg_path.to_string_lossy()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(svg_path).unwrap();
    assert_eq!(svg.matches("<circle").count(), 2);
}

#[test]
fn gen_matches_snapshot() {
    let out = run(&["gen", "--n", "50", "--p", "0.02", "--seed", "7"]);
    assert!(out.status.success());
    let want = std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/y_50_0.02_seed7.sc2")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), String::from_utf8(want).unwrap());
}
