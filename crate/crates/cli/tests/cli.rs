//! End-to-end tests of the `noetherline` binary: output shapes, golden
//! rows, and the exit-code contract (0 success, 2 usage, 3 failed check).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noetherline"))
        .args(args)
        .output()
        .expect("the binary launches")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("the process exits normally")
}

const GRID_CSV: &str = "\
e,a,region,kobayashi,K3,pg,k,degSigma,slack
0,2,RegionC,false,10,10,4,8,0
0,3,RegionC,false,18,16,7,14,0
0,4,RegionC,false,26,22,10,20,0
1,2,RegionB,false,6,7,2,5,0
1,3,RegionB,false,14,13,5,11,0
1,4,RegionB,false,22,19,8,17,0
2,3,RegionB,false,10,10,3,8,0
2,4,RegionB,false,18,16,6,14,0
3,3,RegionA,true,6,7,1,5,0
3,4,RegionA,false,14,13,4,11,0
";

#[test]
fn invariants_reports_the_reference_member() {
    let out = run(&["invariants", "--e", "3", "--a", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"K_cubed\":6,\"p_g\":7"), "got: {text}");
    assert!(text.contains("\"region\":\"RegionA\""));
    assert!(text.contains("\"kobayashi\":true"));
    assert!(text.contains("\"noether_slack\":{\"num\":0,\"den\":1}"));
}

#[test]
fn invariants_table_is_the_default_format() {
    let out = run(&["invariants", "--e", "3", "--a", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("kobayashi subfamily"));
    assert!(text.contains("divisor"));
    assert!(text.contains("3H-K_Y"));
}

#[test]
fn invariants_rejects_a_negative_surface_parameter() {
    let out = run(&["invariants", "--e", "-1", "--a", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn invariants_refuses_inadmissible_pairs_without_explore() {
    let out = run(&["invariants", "--e", "1", "--a", "1"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("admissible_region"));
}

#[test]
fn boundary_pair_requires_explore() {
    let strict = run(&["invariants", "--e", "0", "--a", "1"]);
    assert_eq!(code(&strict), 3);

    let explored = run(&[
        "invariants",
        "--e",
        "0",
        "--a",
        "1",
        "--explore",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&explored), 0);
    let text = stdout(&explored);
    assert!(
        text.contains("0,1,BoundaryPair01,false,2,4,1,2,0"),
        "got: {text}"
    );
}

#[test]
fn enumerate_matches_the_frozen_grid() {
    let out = run(&["enumerate", "--e", "0..3", "--a", "1..4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), GRID_CSV);
}

#[test]
fn enumerate_accepts_the_range_aliases() {
    let out = run(&[
        "enumerate",
        "--e-range",
        "3..3",
        "--a-range",
        "3..3",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "e,a,region,kobayashi,K3,pg,k,degSigma,slack\n3,3,RegionA,true,6,7,1,5,0\n"
    );
}

#[test]
fn enumerate_with_no_members_prints_the_header_only() {
    let out = run(&["enumerate", "--e", "4", "--a", "1..2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "e,a,region,kobayashi,K3,pg,k,degSigma,slack\n"
    );
}

#[test]
fn enumerate_rejects_reversed_ranges() {
    let out = run(&["enumerate", "--e", "3..2", "--a", "1..4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn enumerate_with_negative_twist_needs_explore() {
    let refused = run(&["enumerate", "--e", "0..1", "--a", "-3..0"]);
    assert_eq!(code(&refused), 2);

    let explored = run(&[
        "enumerate",
        "--e",
        "0..1",
        "--a",
        "-3..0",
        "--explore",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&explored), 0);
    let text = stdout(&explored);
    // 2 values of e times 4 values of a, plus the header.
    assert_eq!(text.lines().count(), 9, "got: {text}");
    assert!(text.contains("0,-3,Inadmissible"));
    assert!(text.contains("0,0,Inadmissible"));
}

#[test]
fn explore_keeps_boundary_and_inadmissible_members() {
    let out = run(&[
        "enumerate",
        "--e",
        "0..1",
        "--a",
        "1..1",
        "--explore",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("0,1,BoundaryPair01,false,2,4,1,2,0"));
    assert!(text.contains("1,1,Inadmissible"));
}

#[test]
fn cohomology_reports_exact_ranks() {
    let out = run(&[
        "cohomology",
        "--alpha",
        "1",
        "--beta",
        "4",
        "--e",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"h0\":7"), "got: {text}");
    assert!(text.contains("\"h1\":0"));
    assert!(text.contains("\"chi\":7"));
    assert!(text.contains("\"very_ample\":true"));
}

#[test]
fn cohomology_accepts_negative_coefficients() {
    let out = run(&[
        "cohomology",
        "--alpha",
        "-2",
        "--beta",
        "-5",
        "--e",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"h0\":0"));
    assert!(text.contains("\"h2\":1"));
}

#[test]
fn cohomology_rejects_symbolic_coefficients() {
    let out = run(&["cohomology", "--alpha", "a", "--beta", "4", "--e", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("integer"));
}

#[test]
fn probe_reports_the_pairing_table() {
    let out = run(&["probe", "--e", "3", "--a", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"H.C\":1"));
    assert!(text.contains("\"H.s_E0\":1"));
    assert!(text.contains("\"3H-K_Y.s_E0\":2"));
}

#[test]
fn probe_outside_the_family_needs_explore() {
    let refused = run(&["probe", "--e", "0", "--a", "-2"]);
    assert_eq!(code(&refused), 2);

    let explored = run(&["probe", "--e", "0", "--a", "-2", "--explore"]);
    assert_eq!(code(&explored), 0);
}

#[test]
fn audit_chain_defaults_are_tight() {
    let out = run(&["audit-chain", "--pg", "7"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("all tight: yes"));
}

#[test]
fn audit_chain_reports_slack_for_a_perturbed_degree() {
    let out = run(&[
        "audit-chain",
        "--pg",
        "7",
        "--d-sigma",
        "6",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("sigma_degree_bound,6,5,1,false"));
}

#[test]
fn audit_chain_rejects_a_tiny_genus() {
    let out = run(&["audit-chain", "--pg", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_identities_passes_and_prints_a_line_per_check() {
    let out = run(&["verify-identities"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert_eq!(text.matches("PASS ").count(), 16, "got: {text}");
    assert!(text.contains("16 checks, 16 passed"));
}
