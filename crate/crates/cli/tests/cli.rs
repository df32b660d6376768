use std::process::{Command, Output};

use serde_json::Value;
use stanley_core::jp::{jp_tree, reduce_tree};
use stanley_core::ls::LsTree;
use stanley_core::ls::{ls_tree, stanley_via_ls};
use stanley_core::{Diagram, JpTree, Permutation, SchurExpansion};
use stanley_lab::ScanReport;

fn stanley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stanley"))
        .args(args)
        .env_remove("STANLEY_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = stanley(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    stanley(args).status.code()
}

#[test]
fn expansion_of_316524() {
    assert_eq!(
        stdout(&["fw", "316524"]),
        "s[3,2,2] + s[3,3,1] + s[4,2,1]\n"
    );
}

#[test]
fn methods_agree() {
    let mut perms: Vec<String> = Permutation::all(4).map(|w| w.to_string()).collect();
    perms.extend(["21543", "316524", "4261735", "351624"].map(String::from));
    for w in &perms {
        let ls = stdout(&["fw", w, "--method", "ls"]);
        assert_eq!(stdout(&["fw", w, "--method", "eg"]), ls, "{w}");
        assert_eq!(stdout(&["fw", w, "--method", "oracle"]), ls, "{w}");
    }
}

#[test]
fn classify_2143() {
    let text = stdout(&["classify", "2143"]);
    assert!(text.contains("EG=2\n"));
    assert!(text.contains("min-k=2\n"));
    assert!(text.contains("mult-bound=1\n"));
    assert!(text.contains("vexillary=false\n"));
    let v = json(&["classify", "2143", "--json"]);
    assert_eq!(v["eg"], 2);
    assert_eq!(v["forest"], true);
}

#[test]
fn vexillary_scan() {
    assert!(stdout(&["scan", "--pred", "vexillary", "--max-n", "4"])
        .contains("n=4 vexillary: 23 of 24"));
    let report = ScanReport::from_json(&stdout(&[
        "scan",
        "--pred",
        "vexillary",
        "--max-n",
        "5",
        "--minimal",
        "--json",
    ]))
    .unwrap();
    assert_eq!(report.count(4), Some(23));
    assert_eq!(report.minimal_patterns, Some(vec!["2143".to_string()]));
    let csv = stdout(&["scan", "--pred", "kvex:2", "--max-n", "5", "--csv"]);
    assert!(csv.ends_with("kvex(2),5,120,118\n"));
}

#[test]
fn scans_are_identical_across_workers() {
    let args = |w: &'static str| {
        [
            "scan",
            "--pred",
            "kvex(2)",
            "--max-n",
            "7",
            "--minimal",
            "--json",
            "--workers",
            w,
        ]
    };
    let one = stdout(&args("1"));
    assert_eq!(stdout(&args("4")), one);
    assert_eq!(stdout(&args("8")), one);
}

#[test]
fn json_outputs_round_trip() {
    for w in ["321465", "316524", "4261735", "2143"] {
        let p: Permutation = w.parse().unwrap();
        let f = SchurExpansion::from_json(&json(&["fw", w, "--json"])).unwrap();
        assert_eq!(f, stanley_via_ls(&p).unwrap());
        let t = LsTree::from_json(&json(&["lstree", w, "--json"])).unwrap();
        assert_eq!(t, ls_tree(&p).unwrap());
        let root = JpTree::root_from_json(&json(&["jptree", w, "--reduced", "--json"])).unwrap();
        let expected = reduce_tree(&jp_tree(&p).unwrap());
        assert_eq!(root.diagram, expected.root.diagram);
        assert_eq!(root.edges.len(), expected.root.edges.len());
        let d = Diagram::from_json(&json(&["diagram", w, "--json"])).unwrap();
        assert_eq!(d, Diagram::rothe(&p));
    }
}

#[test]
fn tree_views() {
    let text = stdout(&["lstree", "321465"]);
    assert_eq!(
        text,
        "321465\n  321546\n    324156 (2,1,1)\n    341256 (2,2)\n    421356 (3,1)\n"
    );
    assert!(stdout(&["lstree", "321465", "--dot"]).starts_with("digraph"));
    assert!(stdout(&["jptree", "316524", "--dot"]).starts_with("digraph"));
}

#[test]
fn diagram_views() {
    assert_eq!(stdout(&["diagram", "316524", "--dmin"]), "(3,2,2)\n");
    assert_eq!(stdout(&["diagram", "316524", "--dmax"]), "(4,2,1)\n");
    assert_eq!(
        stdout(&["diagram", "316524", "--essential"]),
        "(1,2)\n(3,5)\n(4,2)\n(4,4)\n"
    );
}

#[test]
fn words_and_patterns() {
    assert_eq!(stdout(&["redwords", "321"]), "1 2 1\n2 1 2\n");
    assert_eq!(stdout(&["redwords", "654321", "--count"]), "292864\n");
    assert_eq!(stdout(&["witness", "32154", "--k", "2"]), "32154\n");
    assert!(stdout(&["witness", "2143", "--k", "2"]).starts_with("none"));
    assert_eq!(stdout(&["skeleton", "2143"]), "2143\n");
    assert_eq!(stdout(&["eg-tableaux", "2143"]), "1\n3\n\n1 3\n");
}

#[test]
fn verify_suites() {
    assert!(stdout(&["verify", "--suite", "kvex(2)", "--max-n", "7"]).contains("0 counterexamples"));
    let v = json(&[
        "verify",
        "--suite",
        "code-patterns",
        "--max-n",
        "5",
        "--json",
    ]);
    assert_eq!(v["positivity_failures"].as_array().unwrap().len(), 0);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&[]), Some(2));
    assert_eq!(code(&["fw", "3125x"]), Some(2));
    assert_eq!(code(&["fw", "3115"]), Some(2));
    assert_eq!(
        code(&["scan", "--pred", "nonsense", "--max-n", "3"]),
        Some(2)
    );
    assert_eq!(code(&["witness", "2143", "--k", "0"]), Some(1));
    assert_eq!(code(&["fw", "87654321", "--method", "oracle"]), Some(3));
    assert_eq!(code(&["redwords", "654321", "--cap", "10"]), Some(3));
    assert_eq!(
        code(&["scan", "--pred", "vexillary", "--max-n", "11"]),
        Some(3)
    );
    assert_eq!(code(&["lstree", "321465", "--budget", "2"]), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_stanley"))
        .args(["lstree", "321465"])
        .env("STANLEY_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_errors_name_the_position() {
    let out = stanley(&["fw", "3125x"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 5"));
}
