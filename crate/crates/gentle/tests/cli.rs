//! End-to-end CLI tests; every command from the README is exercised here.

mod common;

use common::fixture_path;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["gentle"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gentle::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_json(args: &[&str]) -> Value {
    let mut argv: Vec<&str> = args.to_vec();
    argv.push("--json");
    let (code, out, err) = run(&argv);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).expect("valid JSON")
}

#[test]
fn validate_accepts_the_fixtures() {
    for name in ["a2.quiver", "a3.quiver", "ex3.quiver", "ex5.quiver"] {
        let path = fixture_path(name);
        let (code, out, _) = run(&["validate", &path]);
        assert_eq!(code, 0);
        assert!(out.contains("gentle"));
    }
    let v = run_json(&["validate", &fixture_path("a2.quiver")]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["gentle"], true);
    assert_eq!(v["relations"].as_array().unwrap().len(), 2);
}

#[test]
fn validate_rejects_the_butterfly_naming_axiom_3() {
    let path = fixture_path("butterfly.quiver");
    let (code, _, err) = run(&["validate", &path]);
    assert_eq!(code, 1);
    assert!(err.contains("gentle axiom (3)"), "{err}");
    assert!(err.contains("vertex \"3\""), "{err}");
}

#[test]
fn decompose_a2_matches_the_stated_summands() {
    let path = fixture_path("a2.quiver");
    let v = run_json(&[
        "decompose",
        &path,
        "--dim",
        "1=2,2=2,3=2",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
    ]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["trdeg"], 0);
    assert_eq!(v["maximal"], true);
    assert_eq!(v["regular"], false);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    for c in comps {
        assert_eq!(c["kind"], "string");
        assert_eq!(c["multiplicity"], 1);
        assert_eq!(c["dim"]["1"], 1);
        assert_eq!(c["dim"]["2"], 1);
        assert_eq!(c["dim"]["3"], 1);
    }
    let ranks: Vec<&Value> = comps.iter().map(|c| &c["rank"]).collect();
    assert!(ranks
        .iter()
        .any(|r| r["a1"] == 1 && r["b2"] == 1 && r["a2"] == 0 && r["b1"] == 0));
    assert!(ranks
        .iter()
        .any(|r| r["a2"] == 1 && r["b1"] == 1 && r["a1"] == 0 && r["b2"] == 0));
}

#[test]
fn decompose_six_vertex_with_sign_override() {
    let path = fixture_path("ex5.quiver");
    let v = run_json(&[
        "decompose",
        &path,
        "--dim",
        "1=3,2=4,3=1,4=2,5=3,6=2",
        "--rank",
        "r1=3,r2=1,g1=2,g2=1,p1=2,p2=2,b1=2,b2=1",
        "--sign",
        "1:green=+,2:pink=+,3:red=+,4:blue=+,5:blue=+,6:pink=+",
    ]);
    let comps = v["components"].as_array().unwrap();
    let bands: Vec<&Value> = comps.iter().filter(|c| c["kind"] == "band").collect();
    let strings: Vec<&Value> = comps.iter().filter(|c| c["kind"] == "string").collect();
    assert_eq!(bands.len(), 1);
    assert_eq!(strings.len(), 1);
    assert_eq!(v["trdeg"], 1);
    assert_eq!(bands[0]["dim"]["2"], 3);
    assert_eq!(strings[0]["dim"]["6"], 1);
}

#[test]
fn components_lists_maximal_rank_functions() {
    let path = fixture_path("ex3.quiver");
    let v = run_json(&["components", &path, "--dim", "1=1,2=1,3=1,4=1,5=1,6=1"]);
    let maxes = v["maximal"].as_array().unwrap();
    assert_eq!(maxes.len(), 2);
    assert_eq!(
        maxes.iter().filter(|m| m["regular"] == true).count(),
        1
    );
    assert!(v["regular_rank_function"].is_object());
}

#[test]
fn euler_frozen_values() {
    let path = fixture_path("ex5.quiver");
    let v = run_json(&["euler", &path, "--dim", "1=3,2=4,3=1,4=2,5=3,6=2"]);
    assert_eq!(v["value"], 1);
    let v = run_json(&["euler", &path, "--dim", "1=1,2=2,3=1,4=1,5=2,6=1"]);
    assert_eq!(v["value"], 0);
}

#[test]
fn module_emits_matrices() {
    let path = fixture_path("a2.quiver");
    let v = run_json(&[
        "module",
        &path,
        "--dim",
        "1=1,2=2,3=1",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
        "--lambda",
        "b1=2/3",
    ]);
    assert_eq!(v["lambdas"]["b1"], "2/3");
    let b2 = v["matrices"]["b2"].as_array().unwrap();
    assert_eq!(b2[0].as_array().unwrap()[1], "2/3");
    // symbolic by default
    let v = run_json(&[
        "module",
        &path,
        "--dim",
        "1=1,2=2,3=1",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
    ]);
    assert_eq!(v["lambdas"]["b1"], "l1");
    assert_eq!(v["matrices"]["b2"].as_array().unwrap()[0][1], "l1");
}

#[test]
fn module_accepts_base_point_override() {
    let path = fixture_path("ex5.quiver");
    let v = run_json(&[
        "module",
        &path,
        "--dim",
        "1=3,2=4,3=1,4=2,5=3,6=2",
        "--rank",
        "r1=3,r2=1,g1=2,g2=1,p1=2,p2=2,b1=2,b2=1",
        "--sign",
        "1:green=+,2:pink=+,3:red=+,4:blue=+,5:blue=+,6:pink=+",
        "--basepoint",
        "b1=6:1",
    ]);
    assert_eq!(v["basepoints"]["b1"], "6:1");
    // with the pinned choices the parameter sits in M(b2) at (1, 1)
    assert_eq!(v["matrices"]["b2"].as_array().unwrap()[0][0], "l1");
}

#[test]
fn hom_and_ext_match_band_theory() {
    let path = fixture_path("a2.quiver");
    let band = [
        "--dim",
        "1=1,2=2,3=1",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
    ];
    let mut args = vec!["hom", &path[..]];
    args.extend_from_slice(&band);
    args.extend_from_slice(&["--lambda", "b1=2", "--dim2", "1=1,2=2,3=1", "--rank2", "a1=1,a2=1,b1=1,b2=1", "--lambda2", "b1=2"]);
    let v = run_json(&args);
    assert_eq!(v["hom"], 1); // End of a Schur module

    let mut args = vec!["ext", &path[..]];
    args.extend_from_slice(&band);
    args.extend_from_slice(&["--lambda", "b1=2", "--dim2", "1=1,2=2,3=1", "--rank2", "a1=1,a2=1,b1=1,b2=1", "--lambda2", "b1=7"]);
    let v = run_json(&args);
    assert_eq!(v["ext1"], 0);

    let mut args = vec!["ext", &path[..]];
    args.extend_from_slice(&band);
    args.extend_from_slice(&["--lambda", "b1=2", "--dim2", "1=1,2=2,3=1", "--rank2", "a1=1,a2=1,b1=1,b2=1", "--lambda2", "b1=2"]);
    let v = run_json(&args);
    assert_eq!(v["ext1"], 1);
}

#[test]
fn presentation_of_the_smallest_band() {
    let path = fixture_path("a2.quiver");
    let (code, out, _) = run(&[
        "presentation",
        &path,
        "--dim",
        "1=1,2=2,3=1",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("P1 = P(3)"), "{out}");
    assert!(out.contains("P0 = P(1)"), "{out}");
    assert!(out.contains("l1*a2*b1 - b2*a1"), "{out}");
    let v = run_json(&[
        "presentation",
        &path,
        "--dim",
        "1=1,2=2,3=1",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
    ]);
    assert_eq!(v["weight"]["1"], 1);
    assert_eq!(v["weight"]["3"], -1);
    assert_eq!(v["minimal"], true);
}

#[test]
fn presentation_of_a_non_regular_pair_uses_the_cover() {
    let path = fixture_path("a2.quiver");
    let v = run_json(&[
        "presentation",
        &path,
        "--dim",
        "1=2,2=2,3=2",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
    ]);
    // the generic module of this component is a sum of two string modules
    assert_eq!(v["schema"], 1);
    assert!(v["p0"].as_array().unwrap().len() >= 1);
}

#[test]
fn semiinvariant_symbolic_and_evaluated() {
    let path = fixture_path("a2.quiver");
    let v = run_json(&[
        "semiinvariant",
        &path,
        "--dim",
        "1=1,2=2,3=1",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
    ]);
    assert_eq!(v["value"], "lambda - mu");
    assert_eq!(v["exponents"]["p"], 0);
    assert_eq!(v["exponents"]["l"], 0);
    assert_eq!(v["weight"]["1"], 1);
    assert_eq!(v["weight"]["3"], -1);

    // multiplicity-two family evaluated at rational parameters
    let v = run_json(&[
        "semiinvariant",
        &path,
        "--dim",
        "1=2,2=4,3=2",
        "--rank",
        "a1=2,a2=2,b1=2,b2=2",
        "--at-lambda",
        "5",
        "--at-mu",
        "2,3",
    ]);
    assert_eq!(v["value"], "6"); // (5-2)(5-3), unit 1
}

#[test]
fn semiinvariant_ratios_separate() {
    let path = fixture_path("a2.quiver");
    let base = [
        "semiinvariant",
        &path[..],
        "--dim",
        "1=2,2=4,3=2",
        "--rank",
        "a1=2,a2=2,b1=2,b2=2",
        "--ratios",
        "--grid",
        "5,7,11",
        "--mu",
        "2,3",
    ];
    let mut args = base.to_vec();
    args.extend_from_slice(&["--nu", "3,2"]);
    let v = run_json(&args);
    assert_eq!(v["ratios_agree"], true);
    let mut args = base.to_vec();
    args.extend_from_slice(&["--nu", "2,13"]);
    let v = run_json(&args);
    assert_eq!(v["ratios_agree"], false);
}

#[test]
fn stability_certificates_via_cli() {
    let path = fixture_path("a2.quiver");
    // default theta comes from the band presentation of the regular pair
    let v = run_json(&[
        "stability",
        &path,
        "--dim",
        "1=1,2=2,3=1",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
        "--lambda",
        "b1=2",
        "--prime",
        "7",
    ]);
    assert_eq!(v["verdict"], "stable");
    assert_eq!(v["theta"]["1"], 1);
    assert_eq!(v["theta"]["3"], -1);
    assert!(v["witness"].is_null());
    // explicit destabilizing weight
    let v = run_json(&[
        "stability",
        &path,
        "--dim",
        "1=1,2=2,3=1",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
        "--lambda",
        "b1=2",
        "--theta",
        "1=-1,3=1",
    ]);
    assert_eq!(v["verdict"], "unstable");
    assert_eq!(v["witness"]["3"], 1);
}

#[test]
fn selfcheck_passes_and_respects_seed() {
    let path = fixture_path("ex5.quiver");
    let (code, out, _) = run(&["selfcheck", &path, "--seed", "42"]);
    assert_eq!(code, 0);
    assert!(out.contains("euler-bilinearity: pass"));
    let v = run_json(&["selfcheck", &path, "--seed", "42"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 42);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let path = fixture_path("ex5.quiver");
    let args = [
        "decompose",
        &path[..],
        "--dim",
        "1=3,2=4,3=1,4=2,5=3,6=2",
        "--rank",
        "r1=3,r2=1,g1=2,g2=1,p1=2,p2=2,b1=2,b2=1",
        "--json",
    ];
    let (c1, o1, _) = run(&args);
    let (c2, o2, _) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(o1, o2);
    // and the JSON round-trips
    let _: Value = serde_json::from_str(&o1).unwrap();
}

#[test]
fn exit_codes() {
    let path = fixture_path("a2.quiver");
    // usage error: malformed flag value
    let (code, _, _) = run(&["decompose", &path, "--dim", "nonsense", "--rank", "a1=1"]);
    assert_eq!(code, 2);
    // usage error: unknown subcommand
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    // domain error: unknown vertex name in a flag
    let (code, _, err) = run(&["euler", &path, "--dim", "9=1"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown vertex"));
    // domain error: invalid rank function
    let (code, _, err) = run(&[
        "decompose",
        &path,
        "--dim",
        "1=1,2=1,3=1",
        "--rank",
        "a1=5",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid rank function"), "{err}");
}

#[test]
fn stability_requires_theta_on_non_regular_pairs() {
    let path = fixture_path("a2.quiver");
    let (code, _, err) = run(&[
        "stability",
        &path,
        "--dim",
        "1=2,2=2,3=2",
        "--rank",
        "a1=1,a2=1,b1=1,b2=1",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("theta"), "{err}");
}

#[test]
fn budget_env_var_is_honored() {
    // run the real binary so the environment variable stays isolated
    let exe = env!("CARGO_BIN_EXE_gentle");
    let output = std::process::Command::new(exe)
        .args([
            "stability",
            &fixture_path("a2.quiver"),
            "--dim",
            "1=1,2=2,3=1",
            "--rank",
            "a1=1,a2=1,b1=1,b2=1",
            "--lambda",
            "b1=2",
        ])
        .env("GENTLE_BUDGET", "3")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("budget"), "{err}");
}
