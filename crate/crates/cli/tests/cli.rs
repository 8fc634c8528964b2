use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dotbinom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn bracket_examples() {
    assert_eq!(stdout(&["bracket", "--q", "5", "--n", "4"]), "60\n");
    assert_eq!(stdout(&["bracket", "--q", "5", "--n", "0"]), "1\n");
    let cmp = stdout(&["bracket", "--q", "3", "--n", "2", "--compare-paper"]);
    assert_eq!(cmp, "normative = 2\nverbatim = 1\noracle = 2\nstatus = PaperDiscrepancy\n");
}

#[test]
fn triangle_examples() {
    assert_eq!(stdout(&["triangle", "--q", "3", "--rows", "2"]), "1\n1 1\n1 2 1\n");
    assert_eq!(stdout(&["triangle", "--q", "5", "--rows", "0"]), "1\n");
    let csv = stdout(&["triangle", "--q", "5", "--rows", "2", "--format", "csv"]);
    assert_eq!(csv, "n,k,value\n0,0,1\n1,0,1\n1,1,1\n2,0,1\n2,1,2\n2,2,1\n");
}

#[test]
fn binom_variants() {
    assert_eq!(stdout(&["binom", "--q", "5", "--n", "4", "--k", "2"]), "450\n");
    assert_eq!(stdout(&["binom", "--q", "3", "--n", "2", "--k", "1", "--variant", "dl"]), "2\n");
    assert_eq!(stdout(&["binom", "--q", "3", "--n", "2", "--k", "1", "--variant", "ld"]), "1\n");
}

#[test]
fn poly_output() {
    let out = stdout(&["poly", "--class", "1", "--n", "4", "--k", "2"]);
    assert!(out.starts_with("p_{4,2} = 1/2*q^4 + q^3 + 1/2*q^2\n"), "{out}");
    let out = stdout(&["poly", "--class", "3", "--n", "4", "--k", "2", "--format", "csv"]);
    assert!(out.contains("3,4,2,1/2*q^4 - q^3 + 1/2*q^2,4,2,+,2\n"), "{out}");
}

#[test]
fn group_order_mobius_limits() {
    assert_eq!(stdout(&["group-order", "--q", "5", "--n", "4"]), "28800\n");
    assert_eq!(
        stdout(&["group-order", "--q", "3", "--n", "3", "--enumerate"]),
        "formula = 48\nenumerated = 48\n"
    );
    assert_eq!(stdout(&["mobius", "--q", "3", "--n", "3"]), "b = 1 1 1 1\nmu = 1 -1 1 -1\n");
    assert_eq!(stdout(&["limits", "--n", "6", "--k", "2"]), "k=2 limit=3 ksets=3\n");
}

#[test]
fn oracle_count_and_flags() {
    let out = stdout(&["oracle", "count", "--q", "3", "--n", "3"]);
    assert!(out.contains("k1.dot = 3\nk1.lambda_dot = 6\n"), "{out}");
    assert!(out.contains("flag_count = 6\n"));
    assert_eq!(
        stdout(&["flags", "--q", "3", "--n", "3"]),
        "flags = 6\nexplicit = 6\nbracket_factorial = 6\n"
    );
}

#[test]
fn poset_graph_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hasse.dot");
    let p = path.to_str().unwrap();
    let out = stdout(&["oracle", "poset", "--q", "5", "--n", "2", "--emit-graph", p]);
    assert!(out.contains("rank_sizes = 1 2 1\n"), "{out}");
    let graph = std::fs::read_to_string(&path).unwrap();
    assert!(graph.starts_with("digraph hasse {\n"));
    assert_eq!(graph.matches(" -> ").count(), 4);
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["verify", "--q", "3,5", "--max-n", "3", "--format", "json"][..],
        &["oracle", "count", "--q", "5", "--n", "3", "--format", "json"],
        &["bracket", "--q", "3", "--n", "2", "--compare-paper", "--format", "json"],
        &["poly", "--class", "3", "--n", "5", "--format", "json"],
        &["triangle", "--q", "7", "--rows", "6", "--format", "json"],
    ] {
        let text = stdout(args);
        let value: Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let base = ["verify", "--q", "3,5", "--max-n", "4", "--format", "json"];
    let one = stdout(&[&base[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
    let count = ["oracle", "count", "--q", "7", "--n", "3"];
    assert_eq!(
        stdout(&[&count[..], &["--jobs", "1"]].concat()),
        stdout(&[&count[..], &["--jobs", "3"]].concat())
    );
}

#[test]
fn verify_examples() {
    let report: Value = serde_json::from_str(&stdout(&["verify", "--q", "5", "--max-n", "2", "--format", "json"])).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    let order = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["check"] == "group_order" && r["params"] == "q=5 n=2")
        .unwrap();
    assert_eq!((order["actual"].as_str(), order["status"].as_str()), (Some("8"), Some("Pass")));

    let gf9: Value = serde_json::from_str(&stdout(&["verify", "--q", "9", "--max-n", "3", "--format", "json"])).unwrap();
    assert_eq!(gf9["summary"]["fail"], 0);

    let plain = stdout(&["verify", "--q", "3", "--max-n", "2", "--no-paper"]);
    assert!(!plain.contains("PaperDiscrepancy"));
    assert!(plain.ends_with("0 fail, 0 paper discrepancy, 1 skipped\n"), "{plain}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bracket", "--q", "4", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["bracket", "--q", "5"]).status.code(), Some(2));
    assert_eq!(run(&["triangle", "--q", "5", "--rows", "31"]).status.code(), Some(2));
    assert_eq!(run(&["binom", "--q", "5", "--n", "2", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "count", "--q", "13", "--n", "5", "--budget", "1000"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--q", "3,6", "--max-n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}
