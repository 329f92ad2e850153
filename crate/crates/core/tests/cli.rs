use std::path::Path;

use hopfcleft::cli::format::DefinitionFile;
use hopfcleft::cli::{resolve_path, run, Outcome};

fn hopfcleft(args: &[&str]) -> Outcome {
    run(std::iter::once("hopfcleft").chain(args.iter().copied()))
}

fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(resolve_path(name).unwrap()).unwrap()
}

const FIXTURES: [&str; 4] = [
    "kc2",
    "quantum_line_kc2",
    "quantum_line_kc4",
    "corrupt_cocycle_kc2",
];

#[test]
fn shipped_fixtures_are_canonical() {
    for name in FIXTURES {
        let text = fixture_text(name);
        let parsed = DefinitionFile::parse(&text).unwrap();
        assert_eq!(parsed.serialize(), text, "{name}");
    }
}

#[test]
fn verify_hopf_on_kc2() {
    let out = hopfcleft(&["verify-hopf", "kc2"]);
    assert_eq!(out.code, 0, "{}", out.output);
    assert!(out.output.contains("PASS id ∗ S = ηε"));
}

#[test]
fn every_check_passes_on_the_quantum_lines() {
    for cmd in [
        "verify-hopf",
        "verify-yd",
        "verify-measuring",
        "verify-cocycle",
        "round-trip",
    ] {
        for fixture in ["quantum_line_kc2", "quantum_line_kc4"] {
            let out = hopfcleft(&[cmd, fixture]);
            assert_eq!(out.code, 0, "{cmd} {fixture}\n{}", out.output);
        }
    }
    assert_eq!(hopfcleft(&["coinvariants", "quantum_line_kc2"]).code, 0);
}

#[test]
fn gr_check_reports_per_degree() {
    let out = hopfcleft(&["gr-check", "quantum_line_kc4"]);
    assert_eq!(out.code, 0, "{}", out.output);
    assert!(out
        .output
        .contains("PASS degrees (1,1): degree-2 part equals the product of 𝓗"));
    assert!(out.output.contains("# gr of the deformation by Φ(pi0)\n"));
    assert!(out
        .output
        .contains("NOTE 0 products with nonzero lower-degree part"));
    assert!(out
        .output
        .contains("NOTE 16 products with nonzero lower-degree part"));
}

#[test]
fn corrupted_cocycle_fails_with_a_witness() {
    let out = hopfcleft(&["verify-cocycle", "corrupt_cocycle_kc2"]);
    assert_eq!(out.code, 1, "{}", out.output);
    let fail = out
        .output
        .lines()
        .find(|l| l.starts_with("FAIL (5)"))
        .unwrap();
    assert!(fail.contains("[at "), "{fail}");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hopf");
    std::fs::write(
        &bad,
        "field: F(3)\nspace H: 1 g\ntensor H.counit counit: H -> 1\n  (1, h, 1)\n",
    )
    .unwrap();
    let out = hopfcleft(&["verify-hopf", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.output.contains("line 4, column 7"), "{}", out.output);
    assert_eq!(hopfcleft(&["verify-hopf", "no-such-fixture"]).code, 2);
    assert_eq!(hopfcleft(&["no-such-command", "kc2"]).code, 2);
    assert_eq!(hopfcleft(&["verify-cocycle", "kc2"]).code, 2);
}

#[test]
fn reports_are_byte_stable() {
    for args in [
        ["census", "quantum_line_kc4"],
        ["verify-cocycle", "quantum_line_kc2"],
    ] {
        let a = hopfcleft(&args);
        let b = hopfcleft(&args);
        assert_eq!(a, b);
    }
}

#[test]
fn json_report_shape() {
    let out = hopfcleft(&["verify-cocycle", "corrupt_cocycle_kc2", "--report", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
    assert_eq!(v["status"], 1);
    assert_eq!(v["command"], "verify-cocycle");
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["passed"] == false && c["witness"].is_string()));
}

#[test]
fn phi_then_phi_inverse_returns_the_input() {
    let dir = tempfile::tempdir().unwrap();
    let phi_out = dir.path().join("phi.hopf");
    let back = dir.path().join("back.hopf");
    let p = phi_out.to_str().unwrap();
    assert_eq!(hopfcleft(&["phi", "quantum_line_kc4", "--out", p]).code, 0);
    let out = hopfcleft(&["phi-inverse", p, "--out", back.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.output);
    let original = DefinitionFile::parse(&fixture_text("quantum_line_kc4")).unwrap();
    let recovered = DefinitionFile::parse(&std::fs::read_to_string(&back).unwrap()).unwrap();
    for l in 0..5 {
        let a = &original.tensor(&format!("pi{l}.cocycle")).unwrap().map;
        let b = &recovered
            .tensor(&format!("pi{l}_phi_pi.cocycle"))
            .unwrap()
            .map;
        assert_eq!(a, b);
    }
    for cmd in ["deform", "gr-check", "verify-cocycle"] {
        assert_eq!(hopfcleft(&[cmd, p]).code, 0, "{cmd}");
    }
}

#[test]
fn constructive_outputs_load_again() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("crossed-product", "coinvariants"),
        ("cleft-from-cocycle", "round-trip"),
        ("cocycle-from-cleft", "verify-cocycle"),
        ("psi", "round-trip"),
        ("bosonize", "verify-hopf"),
        ("smash", "coinvariants"),
    ];
    for (make, check) in cases {
        let path = dir.path().join(format!("{make}.hopf"));
        let p = path.to_str().unwrap();
        let out = hopfcleft(&[make, "quantum_line_kc2", "--out", p]);
        assert_eq!(out.code, 0, "{make}\n{}", out.output);
        assert!(Path::new(p).is_file());
        let out = hopfcleft(&[check, p]);
        assert_eq!(out.code, 0, "{make} then {check}\n{}", out.output);
    }
}

#[test]
fn field_override_rereads_scalars() {
    let out = hopfcleft(&["verify-hopf", "kc2", "--field-override", "F(5)"]);
    assert_eq!(out.code, 0, "{}", out.output);
    let out = hopfcleft(&["verify-hopf", "kc2", "--field-override", "Q"]);
    assert_eq!(out.code, 0, "{}", out.output);
}

#[test]
fn oracle_commands_agree_with_closed_forms() {
    for op in ["antipode", "cocycles", "zprime"] {
        let out = hopfcleft(&["oracle", op, "quantum_line_kc2"]);
        assert_eq!(out.code, 0, "{op}\n{}", out.output);
    }
    let out = hopfcleft(&["oracle", "cocycles", "quantum_line_kc2", "--bound", "10"]);
    assert_eq!(out.code, 2, "{}", out.output);
    assert!(out.output.contains("exceeds bound 10"));
}

#[test]
fn census_classes_over_f3_and_f5() {
    let out = hopfcleft(&["census", "quantum_line_kc2"]);
    assert_eq!(out.code, 0);
    assert!(out.output.contains("NOTE 3 isomorphism classes"));
    let out = hopfcleft(&["census", "quantum_line_kc4"]);
    assert!(
        out.output.contains("NOTE class 1: {π1, π4}"),
        "{}",
        out.output
    );
    assert!(out.output.contains("NOTE class 2: {π2, π3}"));
}
