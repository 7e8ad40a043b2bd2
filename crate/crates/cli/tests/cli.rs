use std::path::PathBuf;
use std::process::{Command, Output};

fn descriptor(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../descriptors")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_virasoro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(name: &str) -> String {
    descriptor(name).to_string_lossy().into_owned()
}

#[test]
fn describe_gamma() {
    let o = run(&["describe", &path("gamma_rank2.toml")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("family gamma, effective rank 2, valid\n"));
}

#[test]
fn describe_qlambda_reference_descriptors() {
    for f in ["qlambda_r5.toml", "qlambda_r8.toml"] {
        let o = run(&["describe", &path(f)]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stderr(&o));
        assert!(stdout(&o).contains(", valid\n"));
        assert!(stdout(&o).contains("conditions (I)-(III): satisfied"));
    }
}

#[test]
fn describe_reports_condition_one() {
    let o = run(&["describe", &path("qlambda_bad.toml")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("invalid"));
    assert!(stdout(&o).contains("violation: condition (I)"));
}

#[test]
fn describe_output_is_a_fixed_point() {
    let dir = tempfile::tempdir().unwrap();
    for f in [
        "gamma_twisted.toml",
        "qlambda_r8.toml",
        "onedim_third.toml",
        "mw_degenerate.toml",
    ] {
        let first = stdout(&run(&["describe", &path(f)]));
        let canonical = first.split_once("\n\n").unwrap().1;
        let copy = dir.path().join(f);
        std::fs::write(&copy, canonical).unwrap();
        let second = stdout(&run(&["describe", copy.to_str().unwrap()]));
        assert_eq!(first, second, "{f}");
    }
}

#[test]
fn parse_errors_name_line_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(
        &bad,
        "family = \"gamma\"\n[parameters]\nalpha1 = \"0.5\"\nlambda1 = \"1\"\nlambda2 = \"1\"\n",
    )
    .unwrap();
    let o = run(&["describe", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parameters.alpha1"), "{}", stderr(&o));
    std::fs::write(&bad, "family = \"gamma\"\nparameters = 3\n").unwrap();
    let o = run(&["describe", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn act_weight_scalar() {
    let o = run(&[
        "act",
        &path("onedim_third.toml"),
        "--op",
        "d(0)",
        "--vector",
        "1 @ grade 2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(7/3)·1 @ grade 2\n");
}

#[test]
fn act_omega_and_central_element_vanish() {
    for op in ["omega(0,1,3)", "c"] {
        let o = run(&[
            "act",
            &path("onedim_third.toml"),
            "--op",
            op,
            "--vector",
            "1 @ grade 2",
        ]);
        assert_eq!(stdout(&o), "0\n", "{op}");
    }
}

#[test]
fn act_json_and_errors() {
    let o = run(&[
        "act",
        &path("gamma_rank2.toml"),
        "--op",
        "t(3)",
        "--vector",
        "[x + 1/2] @ grade -1",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["components"][0]["grade"], 2);
    assert_eq!(v["components"][0]["terms"][0]["coeff"], "1/2");

    let o = run(&[
        "act",
        &path("gamma_rank2.toml"),
        "--op",
        "d(1)",
        "--vector",
        "d1·vac @ grade 0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "act",
        &path("gamma_rank2.toml"),
        "--op",
        "e(1)",
        "--vector",
        "x @ grade 0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_mw_guard_is_a_configuration_error() {
    let o = run(&["verify", &path("mw_degenerate.toml"), "--suite", "mw"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("z*m3 != m4"), "{}", stderr(&o));
}

#[test]
fn verify_mutant_fails_with_counterexample() {
    // On gamma the mutant is a rescaled gamma module and passes; qlambda catches it.
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&[
        "verify",
        &path("qlambda_r5.toml"),
        "--suite",
        "bracket",
        "--window",
        "2",
        "--samples",
        "2",
        "--mutant",
        "drop-factorial",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL bracket"));
    assert!(stdout(&o).contains("counterexample"));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(doc["passed"], false);
    assert!(!doc["suites"][0]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_rejects_unknown_or_inapplicable_suites() {
    let o = run(&["verify", &path("gamma_rank2.toml"), "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", &path("onedim_third.toml"), "--suite", "constant"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let mut docs = Vec::new();
    for i in 0..2 {
        let out = dir.path().join(format!("r{i}.json"));
        let o = run(&[
            "verify",
            &path("gamma_twisted.toml"),
            "--suite",
            "bracket,eh,mw,ab",
            "--seed",
            "17",
            "--window",
            "3",
            "--samples",
            "4",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        docs.push(std::fs::read(out).unwrap());
    }
    assert_eq!(docs[0], docs[1]);
    let text = String::from_utf8(docs.pop().unwrap()).unwrap();
    assert!(text.contains("\"seed\": 17"));
    assert!(text.contains("\"window\": \"3\""));
}

#[test]
fn verify_all_reports_measured_constant() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("all.json");
    let o = run(&[
        "verify",
        &path("gamma_quarter.toml"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(doc["derived_constants"]["constant.c_2"], "-20");
    assert_eq!(doc["derived_constants"]["constant.c_2_stated"], "-720");
    let flags = doc["discrepancy_flags"].as_array().unwrap();
    assert!(flags
        .iter()
        .any(|f| f.as_str().unwrap().starts_with("constant:")));
    assert_eq!(doc["passed"], true);
}

#[test]
fn verify_without_out_prints_document() {
    let o = run(&["verify", &path("onedim_third.toml"), "--suite", "eh"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["tool"], "virasoro");
    assert!(stderr(&o).contains("PASS eh"));
}

#[test]
fn probe_reports_full_rank_and_deficit() {
    let o = run(&["probe", &path("gamma_rank2.toml")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("rank 20 of slice dimension 20 (full)"));

    let dir = tempfile::tempdir().unwrap();
    let trivial = dir.path().join("b0.toml");
    std::fs::write(&trivial, "family = \"onedim\"\n[parameters]\nb = \"0\"\n").unwrap();
    let o = run(&["probe", trivial.to_str().unwrap()]);
    assert!(
        stdout(&o).starts_with("rank 1 of slice dimension 5 (deficient)"),
        "{}",
        stdout(&o)
    );

    let o = run(&["probe", &path("gamma_rank2.toml"), "--vector", "0"]);
    assert!(stdout(&o).starts_with("rank 0 of slice dimension 20"));

    let o = run(&["probe", &path("gamma_rank2.toml"), "--degree-cap", "500"]);
    assert_eq!(o.status.code(), Some(2));
}
