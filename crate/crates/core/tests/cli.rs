use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use invder_core::catalog::entry;
use invder_core::AlgebraFile;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invder(args: &[&str]) -> Run {
    invder_env(args, &[])
}

fn invder_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_invder"));
    cmd.args(args).env_remove("INVDER_MAX_DIM");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let Output { status, stdout, stderr } = cmd.output().expect("binary runs");
    Run {
        code: status.code().expect("exited normally"),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn export(dir: &Path, id: &str) -> PathBuf {
    let path = dir.join(format!("{id}.json"));
    entry(id).unwrap().to_file().save(&path).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let heis = export(dir.path(), "heisenberg3");
    let so3 = export(dir.path(), "so3");

    let ok = invder(&["check", s(&heis), "--op", "bracket", "--axiom", "lie"]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
    assert!(ok.stdout.contains("jacobi: holds"));
    assert!(ok.stdout.contains("skew_symmetry: holds"));

    let bad = invder(&["check", s(&so3), "--axiom", "invder-lie", "--map", "ad_e1"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.contains("[0, 1, 2]"));

    let json = invder(&["--json", "check", s(&so3), "--axiom", "invder_jacobi", "--map", "ad_e1"]);
    assert_eq!(json.code, 1);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["reports"][0]["witness"]["indices"], serde_json::json!([0, 1, 2]));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let heis = export(dir.path(), "heisenberg3");
    let malformed = dir.path().join("bad.json");
    std::fs::write(&malformed, "{\"name\": ").unwrap();
    let wrong_dim = dir.path().join("dim.json");
    std::fs::write(
        &wrong_dim,
        r#"{"name":"x","dimension":2,"basis":["a","b"],"operations":{"m":{"table":[]}},"maps":{"d":[["1","0","0"]]}}"#,
    )
    .unwrap();

    for args in [
        vec!["check", s(&malformed), "--axiom", "lie"],
        vec!["check", s(&wrong_dim), "--axiom", "associativity"],
        vec!["check", "/nonexistent/file.json", "--axiom", "lie"],
        vec!["check", s(&heis), "--axiom", "jordan"],
        vec!["check", s(&heis), "--axiom", "invder-lie"],
        vec!["check", s(&heis), "--axiom", "lie", "--map", "nope"],
        vec!["check", s(&heis), "--axiom", "lie", "--op", "mu"],
        vec!["check", s(&heis), "--bogus-flag"],
        vec!["verify-theorem", "thm-9.9", s(&heis)],
        vec!["verify-theorem", "thm-2.1", s(&heis)],
        vec!["transform", "no-such-functor", s(&heis)],
        vec!["rota-baxter", s(&heis), "--map", "center_projection", "--weight", "1/0"],
        vec!["search-counterexample", "--family", "heisenberg_like", "--max-dim", "9"],
        vec!["catalog", "no_such_entry"],
    ] {
        let r = invder(&args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(!r.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn twist_output_reparses_and_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let heis = export(dir.path(), "heisenberg3");
    let before = std::fs::read(&heis).unwrap();
    let out = dir.path().join("out.json");
    let r = invder(&["twist", s(&heis), "--map", "delta_w", "-o", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(std::fs::read(&heis).unwrap(), before, "input untouched");

    let file = AlgebraFile::load(&out).unwrap();
    let bracket = file.algebra.op("bracket").unwrap();
    assert_eq!(bracket.product(0, 1), invder_core::Vector::from_integers(&[0, 0, 2]));
    assert_eq!(invder(&["check", s(&out), "--axiom", "lie"]).code, 0);
    assert_eq!(invder(&["invder", s(&out), "--map", "delta"]).code, 0);
    assert_eq!(invder(&["check", s(&out), "--axiom", "invder-lie", "--map", "delta"]).code, 0);
}

#[test]
fn twist_precondition_and_force() {
    let dir = tempfile::tempdir().unwrap();
    let heis = export(dir.path(), "heisenberg3");
    let r = invder(&["twist", s(&heis), "--map", "diag112"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--force"));
    let forced = invder(&["twist", s(&heis), "--map", "diag112", "--force"]);
    // the forced twist is Lie but the map is still not an Inv-derivation of it
    assert_eq!(forced.code, 1);
    assert!(forced.stdout.contains("jacobi: holds"));
    assert!(forced.stdout.contains("leibniz_inverse: fails"));
}

#[test]
fn theorem_examples() {
    let dir = tempfile::tempdir().unwrap();
    let heis = export(dir.path(), "heisenberg3");
    let a3 = export(dir.path(), "A3");
    assert_eq!(invder(&["verify-theorem", "prop-2.1", s(&heis), "--map", "delta_w"]).code, 0);
    let yau = invder(&["verify-theorem", "thm-yau", s(&a3), "--map", "delta_A"]);
    assert_eq!(yau.code, 0);
    assert!(yau.stdout.contains("forward = true, backward = true"));
    let pre = invder(&["verify-theorem", "thm-2.1", s(&heis), "--map", "diag112"]);
    assert_eq!(pre.code, 2);
    assert!(pre.stderr.contains("--force"));
}

#[test]
fn every_theorem_name_runs() {
    let dir = tempfile::tempdir().unwrap();
    let heis = export(dir.path(), "heisenberg3");
    let a3 = export(dir.path(), "A3");
    // identity is idempotent, multiplicative and commutes with everything
    let mut a3_file = entry("A3").unwrap().to_file();
    a3_file.maps.insert("id".into(), invder_core::LinearMap::identity(3));
    let a3_id = dir.path().join("A3_id.json");
    a3_file.save(&a3_id).unwrap();
    let zz = export(dir.path(), "zero_zinbiel_2");
    let zp = export(dir.path(), "zero_prelie_2");
    let zd = export(dir.path(), "zero_dendriform_2");
    let cases: &[(&str, &PathBuf, &[&str])] = &[
        ("thm-2.1", &heis, &["--map", "delta_w"]),
        ("thm-2.2", &zp, &["--map", "shear"]),
        ("prop-2.1", &heis, &["--map", "delta_w"]),
        ("prop-2.2", &heis, &["--map", "delta_w"]),
        ("prop-2.3", &zp, &["--map", "id"]),
        ("prop-3.1", &zp, &["--map", "id"]),
        ("prop-3.2", &heis, &["--map", "delta_w", "--operator", "center_projection"]),
        ("thm-3.4", &a3, &["--map", "delta_A"]),
        ("prop-3.4", &a3, &["--map", "delta_A"]),
        ("prop-3.5", &a3, &["--map", "delta_A"]),
        ("prop-3.6", &a3_id, &["--map", "delta_A", "--operator", "id"]),
        ("thm-3-rbo", &a3, &["--map", "delta_A", "--operator", "R_z"]),
        ("thm-4.2", &zz, &["--map", "shear"]),
        ("prop-4.3", &zz, &["--map", "shear"]),
        ("prop-4.4-4.5", &zz, &["--map", "shear"]),
        ("prop-4-zinbiel-assoc", &zz, &["--map", "id"]),
        ("thm-4-zinbiel-lie", &zz, &["--map", "id"]),
        ("thm-4-dendriform", &zd, &["--map", "shear"]),
        ("prop-4.7-4.9", &zd, &["--map", "shear"]),
        ("prop-4-dendriform-zinbiel", &zd, &["--map", "id"]),
        ("prop-4-dendriform-assoc", &zd, &["--map", "id"]),
        ("prop-4-dendriform-prelie", &zd, &["--map", "id"]),
        ("thm-yau", &a3, &["--map", "delta_A"]),
        ("cor-yau", &heis, &["--map", "delta_w"]),
    ];
    for (name, file, extra) in cases {
        let mut args = vec!["verify-theorem", name, s(file)];
        args.extend_from_slice(extra);
        let r = invder(&args);
        assert_eq!(r.code, 0, "{name}: {}{}", r.stdout, r.stderr);
        let mut json_args = vec!["--json"];
        json_args.extend(args);
        let j = invder(&json_args);
        let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
        assert_eq!(v["theorem"], *name);
        assert_eq!(v["verified"], true);
    }
}

#[test]
fn other_commands() {
    let dir = tempfile::tempdir().unwrap();
    let heis = export(dir.path(), "heisenberg3");
    let so3 = export(dir.path(), "so3");
    let a3 = export(dir.path(), "A3");
    let z3 = export(dir.path(), "Z3");

    let d = invder(&["--json", "derivations", s(&so3)]);
    assert_eq!(d.code, 0);
    let v: serde_json::Value = serde_json::from_str(&d.stdout).unwrap();
    assert_eq!(v["dim"], 3);

    assert_eq!(invder(&["invder", s(&heis), "--map", "delta_w"]).code, 0);
    assert_eq!(invder(&["invder", s(&heis), "--map", "diag112"]).code, 1);

    assert_eq!(invder(&["invder-search", s(&heis), "--seed", "0"]).code, 0);
    let none = invder(&["invder-search", s(&so3)]);
    assert_eq!(none.code, 1);
    assert!(none.stdout.contains("generic determinant vanishes"));

    let rb = invder(&["rota-baxter", s(&heis), "--map", "center_projection"]);
    assert_eq!(rb.code, 0);
    assert_eq!(invder(&["rota-baxter", s(&heis), "--map", "center_projection", "--weight=-1"]).code, 1);

    let out = dir.path().join("comm.json");
    let c = invder(&["transform", "commutator-lie", s(&a3), "--delta", "delta_A", "-o", s(&out)]);
    assert_eq!(c.code, 0, "{}", c.stderr);
    assert_eq!(invder(&["check", s(&out), "--axiom", "lie"]).code, 0);

    let z = invder(&["transform", "zinbiel-to-lie", s(&z3)]);
    assert_eq!(z.code, 0);
    assert!(z.stdout.contains("bracket(u, v) = 1/2*w"));
    assert_eq!(invder(&["transform", "zinbiel-to-assoc", s(&z3), "--delta", "diag123"]).code, 2);
    assert_eq!(invder(&["transform", "zinbiel-to-assoc", s(&z3), "--delta", "diag123", "--force"]).code, 1);

    let cat = invder(&["catalog"]);
    assert_eq!(cat.code, 0);
    assert!(cat.stdout.contains("heisenberg3"));
    assert_eq!(invder(&["catalog", "so3", "--recheck"]).code, 0);
    let exported = invder(&["catalog", "so3"]);
    assert_eq!(AlgebraFile::from_json(&exported.stdout).unwrap(), entry("so3").unwrap().to_file());
}

#[test]
fn search_counterexample_honours_env_and_is_deterministic() {
    let args = ["--json", "search-counterexample", "--family", "random_nilpotent_tables", "--seed", "7"];
    let a = invder_env(&args, &[("INVDER_MAX_DIM", "4")]);
    let b = invder_env(&args, &[("INVDER_MAX_DIM", "4")]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["bounds"]["dims"], serde_json::json!([3, 4]));
    assert_eq!(invder_env(&args, &[("INVDER_MAX_DIM", "seven")]).code, 2);
}

#[test]
fn suite_command() {
    let r = invder(&["--json", "suite", "--samples", "5"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["violations"], serde_json::json!([]));
}
