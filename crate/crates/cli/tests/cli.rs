use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use homcert::document::{to_json, AlgebraDocument, CertDocument, ModuleDocument};
use homcert_core::exactlin::{Matrix, Tensor3};
use homcert_core::homcore::{HomAlgebra, Kind, BRACKET, MUL};
use homcert_core::hommod::adjoint_postlie_module;
use homcert_core::search::{affine_lie, catalog, unit_like};
use serde_json::Value;
use tempfile::TempDir;

fn homcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homcert"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_algebra(dir: &Path, name: &str, a: &HomAlgebra) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, to_json(&AlgebraDocument::from_algebra(a))).unwrap();
    p
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn failing_associative() -> HomAlgebra {
    let mul = Tensor3::from_terms(2, &[(0, 0, 1, 1), (0, 1, 0, 1)]);
    HomAlgebra::with_product(Kind::HomAssociative, MUL, mul, Matrix::identity(2)).unwrap()
}

fn postlie_self_module_doc(dir: &Path, name: &str) -> PathBuf {
    let l = catalog(Kind::HomPostLie)
        .into_iter()
        .find(|e| e.algebra.op(MUL).is_ok_and(|m| !m.is_zero()))
        .expect("a post-Lie entry with a product")
        .algebra;
    let md = adjoint_postlie_module(Arc::new(l), 0).unwrap();
    assert!(md.passed());
    let p = dir.join(name);
    fs::write(&p, to_json(&ModuleDocument::from_module(&md.value))).unwrap();
    p
}

#[test]
fn check_zero_lie_passes() {
    let dir = TempDir::new().unwrap();
    let a = HomAlgebra::zero(Kind::HomLie, Matrix::identity(3)).unwrap();
    let p = write_algebra(dir.path(), "zero.json", &a);
    let o = homcert(&["check", arg(&p)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("PASSED\n"));
}

#[test]
fn check_failing_associative_prints_the_witness() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "bad.json", &failing_associative());
    let o = homcert(&["check", arg(&p)]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL  hom-associativity at (1, 1, 1)"), "{text}");
    assert!(text.contains("lhs = [0, 0], rhs = [1, 0]"), "{text}");
}

#[test]
fn check_truncated_file_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "t.json", &unit_like());
    let full = fs::read_to_string(&p).unwrap();
    fs::write(&p, &full[..full.len() / 2]).unwrap();
    let o = homcert(&["check", arg(&p)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("t.json"));
}

#[test]
fn check_malformed_rational_names_its_location() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("r.json");
    let doc = r#"{"schema_version": "1", "kind": "hom-associative", "dim": 1,
        "alpha": [["1/0"]], "ops": {"mul": [[["1"]]]}}"#;
    fs::write(&p, doc).unwrap();
    let o = homcert(&["check", arg(&p)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alpha[0][0]: cannot parse rational `1/0`"));
}

#[test]
fn check_rota_baxter_predicate() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "u.json", &unit_like());
    let r = dir.path().join("r.json");
    fs::write(&r, r#"[["0", "0"], ["1", "0"]]"#).unwrap();
    let o = homcert(&["check", arg(&p), "--predicate", "rota-baxter", "--operator", arg(&r)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("operator commutes with alpha: yes"));

    let id = dir.path().join("id.json");
    fs::write(&id, r#"[["1", "0"], ["0", "1"]]"#).unwrap();
    let o = homcert(&[
        "check",
        arg(&p),
        "--predicate",
        "rota-baxter",
        "--operator",
        arg(&id),
        "--weight",
        "-1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = homcert(&["check", arg(&p), "--predicate", "rota-baxter", "--operator", arg(&id)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_predicates_by_name() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "u.json", &unit_like());
    for pred in ["left-commutative", "multiplicative", "lie-admissible"] {
        assert_eq!(
            homcert(&["check", arg(&p), "--predicate", pred]).status.code(),
            Some(0),
            "{pred}"
        );
    }
    assert_eq!(
        homcert(&["check", arg(&p), "--predicate", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn derive_commutator_of_unit_like_is_zero() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "u.json", &unit_like());
    let out = dir.path().join("lie.json");
    let o = homcert(&["derive", "commutator-lie", arg(&p), "--out", arg(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let doc: AlgebraDocument = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.kind, "hom-lie");
    let bracket = &doc.ops[BRACKET];
    assert!(bracket.iter().flatten().flatten().all(|c| c == "0"));
    let prov = doc.provenance.expect("provenance");
    assert_eq!(prov.construction, "commutator-lie");
    assert_eq!(prov.inputs, vec![unit_like().digest()]);

    let cert: CertDocument =
        serde_json::from_str(&fs::read_to_string(dir.path().join("lie.cert.json")).unwrap()).unwrap();
    assert!(cert.passed);
}

#[test]
fn derive_tensor_of_self_modules_certifies() {
    let dir = TempDir::new().unwrap();
    let m1 = postlie_self_module_doc(dir.path(), "m1.json");
    let m2 = postlie_self_module_doc(dir.path(), "m2.json");
    let out = dir.path().join("t.json");
    let o = homcert(&[
        "derive",
        "tensor-modules",
        arg(&m1),
        arg(&m2),
        "--k",
        "1",
        "--out",
        arg(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["kind"], "postlie-module");
    assert_eq!(homcert(&["check", arg(&out)]).status.code(), Some(0));
}

#[test]
fn derive_scale_by_zero_is_rejected() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "a.json", &affine_lie(Matrix::identity(2)));
    let out = dir.path().join("s.json");
    let o = homcert(&["derive", "scale", arg(&p), "--k", "0", "--out", arg(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn derive_precondition_failure_exits_one() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "bad.json", &failing_associative());
    let out = dir.path().join("lie.json");
    let o = homcert(&["derive", "commutator-lie", arg(&p), "--out", arg(&out)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("hom-associativity"));
}

#[test]
fn derive_unknown_functor_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "u.json", &unit_like());
    let o = homcert(&[
        "derive",
        "no-such-thing",
        arg(&p),
        "--out",
        arg(&dir.path().join("x.json")),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn derive_replays_bit_identically() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "u.json", &unit_like());
    let r = dir.path().join("r.json");
    fs::write(&r, r#"[["0", "0"], ["1", "0"]]"#).unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = homcert(&[
            "derive",
            "rb-dendriform",
            arg(&p),
            "--operator",
            arg(&r),
            "--weight",
            "0",
            "--out",
            arg(&out),
        ]);
        assert!(o.status.code() == Some(0) || o.status.code() == Some(1));
        (
            fs::read(&out).unwrap(),
            fs::read(dir.path().join(name.replace(".json", ".cert.json"))).unwrap(),
        )
    };
    assert_eq!(run("d1.json"), run("d2.json"));
}

#[test]
fn documents_round_trip_through_the_binary() {
    let dir = TempDir::new().unwrap();
    let a = catalog(Kind::HomPreLie).into_iter().last().unwrap().algebra;
    let p = write_algebra(dir.path(), "p.json", &a);
    let out = dir.path().join("twisted.json");
    fs::write(
        dir.path().join("g.json"),
        to_json(&homcert::document::matrix_rows(&Matrix::identity(a.dim()))),
    )
    .unwrap();
    let o = homcert(&[
        "derive",
        "yau-twist",
        arg(&p),
        "--operator",
        arg(&dir.path().join("g.json")),
        "--out",
        arg(&out),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}{}",
        stdout(&o),
        String::from_utf8_lossy(&o.stderr)
    );
    let mut doc: AlgebraDocument = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    doc.provenance = None;
    assert_eq!(to_json(&doc), fs::read_to_string(&p).unwrap());
}

#[test]
fn search_abelian_plane_at_bound_one() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(
        dir.path(),
        "ab.json",
        &HomAlgebra::zero(Kind::HomLie, Matrix::identity(2)).unwrap(),
    );
    let out = dir.path().join("found");
    let o = homcert(&["search-postlie", arg(&p), "--bound", "1", "--out", arg(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("nullspace dim 8, candidates tested 6561, survivors 173"),
        "{}",
        stdout(&o)
    );
    let summary: Value = serde_json::from_str(&fs::read_to_string(out.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["survivors"], 173);
    assert_eq!(summary["survivor_files"].as_array().unwrap().len(), 173);
    assert_eq!(
        homcert(&["check", arg(&out.join("survivor-0172.json"))]).status.code(),
        Some(0)
    );
}

#[test]
fn search_at_bound_zero_finds_only_the_zero_product() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(dir.path(), "aff.json", &affine_lie(Matrix::identity(2)));
    let out = dir.path().join("found");
    let o = homcert(&["search-postlie", arg(&p), "--bound", "0", "--out", arg(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let doc: AlgebraDocument =
        serde_json::from_str(&fs::read_to_string(out.join("survivor-0000.json")).unwrap()).unwrap();
    assert!(doc.ops[MUL].iter().flatten().flatten().all(|c| c == "0"));
    assert!(!out.join("survivor-0001.json").exists());
}

#[test]
fn search_over_budget_exits_three() {
    let dir = TempDir::new().unwrap();
    let p = write_algebra(
        dir.path(),
        "ab3.json",
        &HomAlgebra::zero(Kind::HomLie, Matrix::identity(3)).unwrap(),
    );
    let o = homcert(&[
        "search-postlie",
        arg(&p),
        "--bound",
        "1",
        "--out",
        arg(&dir.path().join("x")),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("27"));
}

#[test]
fn certify_corpus_with_no_trials_passes() {
    let o = homcert(&["certify-corpus", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("result: PASS\n"));
}

#[test]
fn certify_corpus_writes_its_summary() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("run");
    let o = homcert(&[
        "certify-corpus",
        "--trials",
        "4",
        "--max-dim",
        "2",
        "--seed",
        "3",
        "--out",
        arg(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(fs::read_to_string(out.join("summary.txt")).unwrap(), stdout(&o));
}
