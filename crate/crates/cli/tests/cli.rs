use std::process::Command;

fn partred(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_partred"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = partred(args);
    assert_eq!(code, 0, "stderr: {err}");
    out
}

#[test]
fn reduce_example() {
    assert_eq!(
        stdout_of(&["reduce", "--partition", "(1,3,5)(2)(4)"]),
        "(1,2)(3,4)\n"
    );
    assert_eq!(
        stdout_of(&["reduce", "--partition", "(1,5)(2,4)(3)", "--format", "json"]),
        "{\"n\":4,\"blocks\":[[1,4],[2,3]]}\n"
    );
}

#[test]
fn reduce_to_arcs_accepts_one_regular_input() {
    assert_eq!(
        stdout_of(&["reduce", "--arcs", "--partition", "(1,2,6)(3,4)(5)"]),
        "{\"n\":5,\"arcs\":[[1,1],[2,5],[3,3]]}\n"
    );
}

#[test]
fn motzkin_both_directions() {
    assert_eq!(
        stdout_of(&["motzkin", "--partition", "(1,2,6)(3,4)(5)"]),
        "LULWD\n"
    );
    assert_eq!(
        stdout_of(&["motzkin", "--path", "lulwd"]),
        "(1,2,6)(3,4)(5)\n"
    );
    assert_eq!(stdout_of(&["motzkin", "--path", ""]), "(1)\n");
}

#[test]
fn count_and_enumerate() {
    assert_eq!(
        stdout_of(&["count", "--n", "5", "--k", "3", "--m", "2"]),
        "7\n"
    );
    assert_eq!(
        stdout_of(&[
            "count",
            "--n",
            "5",
            "--k",
            "3",
            "--m",
            "2",
            "--noncrossing",
            "--format",
            "json"
        ]),
        "{\"count\":\"2\"}\n"
    );
    assert_eq!(
        stdout_of(&[
            "enumerate",
            "--n",
            "5",
            "--k",
            "3",
            "--m",
            "2",
            "--noncrossing"
        ]),
        "(1,3,5)(2)(4)\n(1,5)(2,4)(3)\n"
    );
    assert_eq!(
        stdout_of(&["enumerate", "--n", "3", "--m", "inf"]),
        "(1)(2)(3)\n"
    );
    assert_eq!(
        stdout_of(&["count", "--n", "30", "--k", "30", "--poor"]),
        "1\n"
    );
}

#[test]
fn expand_inputs() {
    assert_eq!(
        stdout_of(&["expand", "--partition", "(1,4)(2,3)"]),
        "(1,5)(2,4)(3)\n"
    );
    let json = r#"{"n":5,"arcs":[[1,1],[2,5],[3,3]]}"#;
    assert_eq!(stdout_of(&["expand", "--arcs", json]), "(1,2,6)(3,4)(5)\n");
    assert_eq!(
        stdout_of(&["expand", "--arcs", json, "--format", "json"]),
        "{\"n\":6,\"arcs\":[[1,2],[2,6],[3,4]]}\n"
    );
}

#[test]
fn render_outputs() {
    assert_eq!(
        stdout_of(&["render", "--partition", "(1,5)(2,4)(3)"]),
        "/_______\\\n| /___\\ |\n1 2 3 4 5\n"
    );
    assert_eq!(
        stdout_of(&["render", "--arcs", r#"{"n":1,"arcs":[[1,1]]}"#]),
        "o\n1\n"
    );
}

#[test]
fn reducing_a_single_point_leaves_the_empty_partition() {
    assert_eq!(stdout_of(&["reduce", "--partition", "(1)"]), "\n");
}

#[test]
fn pipe_closure() {
    for input in [
        "(1,5)(2,4)(3)",
        "(1,3,5)(2)(4)",
        "(1)(2)",
        "(1,4,7)(2,5)(3,6)",
    ] {
        let reduced = stdout_of(&["reduce", "--partition", input]);
        let expanded = stdout_of(&["expand", "--partition", reduced.trim_end()]);
        assert_eq!(expanded, format!("{input}\n"));
    }
    for input in ["(1,2,6)(3,4)(5)", "(1,3)(2)(4,5)", "(1)"] {
        let path = stdout_of(&["motzkin", "--partition", input]);
        let back = stdout_of(&["motzkin", "--path", path.trim_end()]);
        assert_eq!(back, format!("{input}\n"));
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--identity", "eq2", "--max-n", "6"];
    let first = stdout_of(&args);
    assert_eq!(first, stdout_of(&args));
    assert_eq!(
        first,
        stdout_of(&["verify", "--identity", "eq2", "--max-n", "6", "--jobs", "3"])
    );
}

#[test]
fn verify_reports_are_json_lines() {
    let out = stdout_of(&["verify", "--identity", "motzkin", "--max-n", "5"]);
    for line in out.lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["identity"], "motzkin");
        assert_eq!(value["status"], "pass");
        assert!(value["lhs"].is_string() && value["rhs"].is_string());
    }
    let first = out.lines().next().unwrap();
    assert_eq!(
        first,
        r#"{"identity":"motzkin","n":1,"k":1,"m":null,"lhs":"1","rhs":"1","roundtrip":true,"status":"pass","empty":false}"#
    );
    for identity in ["eq2", "eq3", "narayana", "eq5", "rna"] {
        let (code, out, _) = partred(&["verify", "--identity", identity, "--max-n", "5"]);
        assert_eq!(code, 0, "{identity}");
        assert!(!out.is_empty());
    }
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        vec!["reduce", "--partition", "(1,2)(3)"],
        vec!["reduce", "--partition", "(1,2"],
        vec!["reduce", "--partition", "(1,3)"],
        vec!["motzkin", "--partition", "(1,3)(2,4)"],
        vec!["motzkin", "--path", "UU"],
        vec!["motzkin", "--path", "UXD"],
        vec!["render", "--arcs", "{\"n\":2}"],
        vec!["expand", "--arcs", r#"{"n":3,"arcs":[[1,2],[1,3]]}"#],
    ] {
        let (code, out, err) = partred(&args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with("error: "));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec![],
        vec!["frobnicate"],
        vec!["count"],
        vec!["count", "--n", "x"],
        vec!["count", "--n", "3", "--m", "0"],
        vec!["verify", "--identity", "eq9", "--max-n", "3"],
        vec!["verify", "--identity", "eq2", "--max-n", "0"],
        vec!["expand", "--partition", "(1)", "--arcs", "{}"],
        vec!["motzkin"],
    ] {
        let (code, _, _) = partred(&args);
        assert_eq!(code, 2, "{args:?}");
    }
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = partred::run(
        ["partred", "motzkin", "--partition", "(1,2,6)(3,4)(5)"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "LULWD\n");
    let mut out = Vec::new();
    let code = partred::run(["partred", "--help"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert!(String::from_utf8(out).unwrap().contains("verify"));
}
