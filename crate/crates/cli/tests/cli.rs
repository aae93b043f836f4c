//! End-to-end command tests: exit codes, file pipelines, and the determinism
//! gate on machine-readable output.

use std::path::PathBuf;

use poset_forge_cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["poset-forge".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("poset-forge-test-{name}"))
}

#[test]
fn verify_xkd_reports_three_claims() {
    let (code, out, _) = invoke(&["verify", "xkd", "--k", "1", "--d", "3"]);
    assert_eq!(code, 0, "output: {out}");
    assert_eq!(out.matches("[pass]").count(), 3);
    assert!(out.contains("verdict: PASS"));

    let (code, out, _) = invoke(&[
        "verify", "xkd", "--k", "2", "--d", "4", "--field", "f2", "--format", "records",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict status=pass claims=3 failed=0"));
}

#[test]
fn records_output_is_byte_identical() {
    let args = ["sweep", "--max-d", "3", "--format", "records"];
    let (c1, out1, _) = invoke(&args);
    let (c2, out2, _) = invoke(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2);
    assert!(out1.contains("sweep status=pass"));
}

#[test]
fn missing_file_is_a_usage_error() {
    let (code, _, err) = invoke(&["homology", "/definitely/not/here.graph"]);
    assert_eq!(code, 2);
    assert!(err.contains("not/here.graph"));
}

#[test]
fn malformed_file_names_the_offending_field() {
    let path = tmp("malformed.graph");
    std::fs::write(
        &path,
        "poset-forge graph v1\nd 3\nvertex a\nvertex b\nedge a b x\n",
    )
    .unwrap();
    let (code, _, err) = invoke(&["homology", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("edge"), "stderr: {err}");
}

#[test]
fn unknown_arguments_exit_two_and_help_exits_zero() {
    let (code, _, _) = invoke(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("poset-forge"));
}

#[test]
fn generate_then_inspect_pipeline() {
    let cpath = tmp("x13.complex");
    let gpath = tmp("g13.graph");
    let dpath = tmp("g13.dot");
    let (code, _, _) = invoke(&[
        "generate",
        "xkd",
        "--k",
        "1",
        "--d",
        "3",
        "--out",
        cpath.to_str().unwrap(),
        "--graph-out",
        gpath.to_str().unwrap(),
        "--dot",
        dpath.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);

    let (code, out, _) = invoke(&["invariants", cpath.to_str().unwrap(), "--format", "records"]);
    assert_eq!(code, 0);
    assert!(out.contains("f (1,3,6,3)"), "output: {out}");
    assert!(out.contains("h (1,0,3,-1)"));
    assert!(out.contains("hprime (1,0,3,0)"));
    assert!(out.contains("ns status=pass"));

    // the graph file describes the same complex
    let (code, out, _) = invoke(&[
        "homology",
        gpath.to_str().unwrap(),
        "--field",
        "f2",
        "--format",
        "records",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("betti (0,0,1,0)"));

    let dot = std::fs::read_to_string(&dpath).unwrap();
    assert!(dot.contains("doublecircle"));
}

#[test]
fn generate_k_zero_has_no_graph() {
    let cpath = tmp("x04.complex");
    let gpath = tmp("x04.graph");
    let (code, _, err) = invoke(&[
        "generate",
        "xkd",
        "--k",
        "0",
        "--d",
        "4",
        "--out",
        cpath.to_str().unwrap(),
        "--graph-out",
        gpath.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("no encoding graph"), "stderr: {err}");
}

#[test]
fn homology_matrices_listing() {
    let cpath = tmp("x23.complex");
    invoke(&[
        "generate",
        "xkd",
        "--k",
        "2",
        "--d",
        "3",
        "--out",
        cpath.to_str().unwrap(),
    ]);
    let (code, out, _) = invoke(&[
        "homology",
        cpath.to_str().unwrap(),
        "--matrices",
        "--format",
        "records",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("matrix r=1 rows=1 cols=3"));
    assert!(out.contains("matrix r=3 rows=3 cols=2"));
    assert!(out.lines().filter(|l| l.starts_with("entry")).count() >= 9);
}

#[test]
fn shelling_verify_pass_and_fail() {
    let gpath = tmp("g12.graph");
    invoke(&[
        "generate",
        "xkd",
        "--k",
        "1",
        "--d",
        "2",
        "--out",
        tmp("x12.complex").to_str().unwrap(),
        "--graph-out",
        gpath.to_str().unwrap(),
    ]);
    let (code, out, _) = invoke(&[
        "shelling",
        "verify",
        "--graph",
        gpath.to_str().unwrap(),
        "--order",
        "alpha,10",
    ]);
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("step i=2 facet=10 r=1,2"));
    assert!(out.contains("verdict status=pass"));

    let gpath = tmp("g13b.graph");
    invoke(&[
        "generate",
        "xkd",
        "--k",
        "1",
        "--d",
        "3",
        "--out",
        tmp("x13b.complex").to_str().unwrap(),
        "--graph-out",
        gpath.to_str().unwrap(),
    ]);
    let (code, out, _) = invoke(&[
        "shelling",
        "verify",
        "--graph",
        gpath.to_str().unwrap(),
        "--order",
        "100,alpha,110",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("r=none"));
    assert!(out.contains("verdict status=fail"));
}

#[test]
fn shelling_verify_cw_on_files() {
    let sphere = tmp("sphere.complex");
    invoke(&[
        "generate",
        "xkd",
        "--k",
        "2",
        "--d",
        "3",
        "--out",
        sphere.to_str().unwrap(),
    ]);
    let (code, out, _) = invoke(&[
        "shelling",
        "verify-cw",
        "--complex",
        sphere.to_str().unwrap(),
        "--order",
        "alpha,101",
    ]);
    assert_eq!(code, 0, "output: {out}");

    let pair = tmp("pair.complex");
    invoke(&[
        "generate",
        "xkd",
        "--k",
        "0",
        "--d",
        "3",
        "--out",
        pair.to_str().unwrap(),
    ]);
    let (code, out, _) = invoke(&[
        "shelling",
        "verify-cw",
        "--complex",
        pair.to_str().unwrap(),
        "--order",
        "s1,s2",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("verdict status=fail"));
}

#[test]
fn glue_command_renames_and_writes() {
    let a = tmp("glue-a.complex");
    let b = tmp("glue-b.complex");
    let q = tmp("glue-q.complex");
    invoke(&[
        "generate",
        "xkd",
        "--k",
        "1",
        "--d",
        "3",
        "--out",
        a.to_str().unwrap(),
    ]);
    invoke(&[
        "generate",
        "xkd",
        "--k",
        "2",
        "--d",
        "3",
        "--out",
        b.to_str().unwrap(),
    ]);
    let (code, out, _) = invoke(&[
        "glue",
        "--a",
        a.to_str().unwrap(),
        "--facet-a",
        "alpha",
        "--b",
        b.to_str().unwrap(),
        "--facet-b",
        "101",
        "--out",
        q.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("renamed=a./b."));

    let (code, out, _) = invoke(&["homology", q.to_str().unwrap(), "--format", "records"]);
    assert_eq!(code, 0);
    assert!(out.contains("betti (0,0,1,1)"), "output: {out}");
}

#[test]
fn synthesize_command_hits_the_target() {
    let q = tmp("synth.complex");
    let (code, out, _) = invoke(&[
        "synthesize",
        "--d",
        "3",
        "--betti",
        "0,1,1",
        "--out",
        q.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("betti=(0,0,1,1)"));
    assert!(out.contains("hprime=(1,0,3,1)"));

    let (code, _, err) = invoke(&[
        "synthesize",
        "--d",
        "3",
        "--betti",
        "0,1",
        "--out",
        q.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("betti"), "stderr: {err}");
}

#[test]
fn sweep_small_matrix_passes() {
    let (code, out, _) = invoke(&["sweep", "--max-d", "3", "--seed", "7"]);
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("sweep: PASS"));
    // 2+3 cells plus the global report
    assert_eq!(out.matches("== xkd(").count(), 5);
    assert_eq!(out.matches("== global ==").count(), 1);
}
