//! End-to-end tests of the installed binary: output formats are pinned
//! byte-for-byte and exit codes are part of the contract (0 = verified,
//! 1 = a checked property failed, 2 = usage or input error).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treegraft"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn gen_bfile_is_one_indexed_pairs() {
    let out = run(&["gen", "--preset", "conolly", "-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 1\n2 2\n3 2\n4 3\n5 4\n6 4\n7 4\n8 5\n");
}

#[test]
fn gen_csv_is_a_single_joined_line() {
    let out = run(&["gen", "--preset", "conolly", "-n", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1,2,2,3,4,4,4,5\n");
}

#[test]
fn gen_json_carries_config_and_values() {
    let out = run(&["gen", "--preset", "conolly", "-n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["values"], serde_json::json!([1, 2, 2, 3, 4, 4]));
    assert_eq!(doc["n_max"], 6);
    assert_eq!(doc["config"]["arity"], 2);
    assert_eq!(doc["config"]["seed"], "(())");
    assert_eq!(doc["config"]["source"], "conolly");
}

#[test]
fn gen_accepts_explicit_tree_and_flags() {
    let preset = run(&["gen", "--preset", "conolly", "-n", "12"]);
    let manual =
        run(&["gen", "--tree-expr", "(())", "-k", "2", "-j", "1", "-s", "0", "-n", "12"]);
    assert_eq!(manual.status.code(), Some(0));
    assert_eq!(stdout(&manual), stdout(&preset));
}

#[test]
fn verify_pass_exits_zero_and_reports_range() {
    let out = run(&["verify", "--preset", "fig5", "-n", "500"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "recursion with nu = -2 checked for n in [33, 500]: PASS\n"
    );
}

#[test]
fn verify_with_wrong_constant_exits_one() {
    let out = run(&["verify", "--preset", "conolly", "-n", "500", "--force-nu", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_json_stdout_is_a_single_document() {
    let out = run(&["verify", "--preset", "fig5", "-n", "500", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["nu"], -2);
    assert_eq!(doc["shift"], 0);
    assert_eq!(doc["report"]["passed"], true);
    assert_eq!(doc["report"]["checked_from"], 33);
    assert_eq!(doc["report"]["checked_to"], 500);
}

#[test]
fn verify_spine_mode_checks_the_two_node_family() {
    let out = run(&[
        "verify", "--tree-expr", "(())", "-k", "2", "-j", "1", "--spine", "--s1", "1",
        "-s", "0", "--j1", "1", "--j2", "1", "--mode", "fig7", "-n", "800",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("nu_eff = 0"), "{text}");
    assert!(text.contains("PASS"), "{text}");
}

#[test]
fn verify_perturb_mode_samples_random_prefixes() {
    let out = run(&[
        "verify", "--preset", "golomb", "--mode", "perturb", "--trials", "3", "--seed",
        "7", "-n", "2000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("matches").count(), 3, "{text}");
    assert!(text.trim_end().ends_with("PASS"), "{text}");
}

#[test]
fn nu_text_lists_all_three_routes() {
    let out = run(&["nu", "--preset", "fig5", "-n", "500"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "alpha       = 10\nbeta        = 4\nfrom counts = -2\nsimplified  = -2\nempirical   = -2\nconsistent  = true\n"
    );
}

#[test]
fn nu_json_reports_agreement() {
    let out = run(&["nu", "--preset", "golomb", "-n", "500", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["report"]["nu_from_counts"], 1);
    assert_eq!(doc["report"]["nu_simplified"], 1);
    assert_eq!(doc["report"]["nu_empirical"], 1);
    assert_eq!(doc["report"]["consistent"], true);
}

#[test]
fn prune_reports_self_similarity() {
    let out = run(&["prune", "--preset", "fig5", "-n", "27"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "R(27) = 14; prefix incomplete (delta = 5)\npruned: 15 labels remain, 9 of them on new leaves\npruned tree equals the prefix with 15 labels: yes\n"
    );

    let out = run(&["prune", "--preset", "fig5", "-n", "27", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["r"], 14);
    assert_eq!(doc["complete"], false);
    assert_eq!(doc["delta"], 5);
    assert_eq!(doc["outcome"]["pruned_label_count"], 15);
    assert_eq!(doc["outcome"]["pruned_leaf_labels"], 9);
    assert_eq!(doc["outcome"]["isomorphic_to_prefix"], true);
}

#[test]
fn freq_lists_value_frequencies() {
    let out = run(&["freq", "--preset", "conolly", "-m", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 1\n2 2\n3 1\n4 3\n5 1\n6 2\n7 1\n8 4\n");
}

#[test]
fn freq_blocks_shows_decomposition_and_rule() {
    let out = run(&["freq", "--preset", "conolly", "--mode", "blocks", "--levels", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("level  3: 2 1 2 1 1"), "{text}");
    assert!(
        text.contains("starred concatenation: 1 2 1 3 1 2 1 4 1 2 1 3 1 2 1"),
        "{text}"
    );
    assert!(text.contains("level-step rule from level 2: holds"), "{text}");
}

#[test]
fn preset_lists_all_known_names() {
    let out = run(&["preset"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["conolly", "conolly-shifted", "golomb", "golomb-chain", "fig5"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "missing {name}: {text}");
    }
}

#[test]
fn preset_detail_prints_seed_and_arity() {
    let out = run(&["preset", "golomb"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("seed  ((()))"), "{text}");
    assert!(text.contains("arity 1"), "{text}");
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["bogus-subcommand"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--tree-expr", "((("]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--preset", "no-such-preset"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--tree-expr", "(())", "-j", "0"]).status.code(), Some(2));
    assert_eq!(run(&["prune", "--preset", "conolly"]).status.code(), Some(2));
}
