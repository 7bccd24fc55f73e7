//! JSON documents for algebras, modules, matrices and certification reports.
//!
//! Rationals are always strings (`"3"`, `"-1/2"`) so no tool ever rounds
//! them. Arrays are row-major; `ops[name][i][j][k]` is the coefficient of
//! `e_k` in `e_i ∘ e_j`, and `actions[name][i]` is the matrix by which `e_i`
//! acts.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use homcert_core::exactlin::{Matrix, Rational, Tensor3};
use homcert_core::homcore::{CertReport, EpsilonHomBialgebra, HomAlgebra, Kind, Provenance, MUL};
use homcert_core::hommod::{HomModule, ModuleKind};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: &str = "1";

pub type MatrixRows = Vec<Vec<String>>;
pub type TensorRows = Vec<Vec<Vec<String>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProvenanceDocument {
    pub construction: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    #[serde(default)]
    pub inputs: Vec<String>,
}

impl From<&Provenance> for ProvenanceDocument {
    fn from(p: &Provenance) -> Self {
        ProvenanceDocument {
            construction: p.construction.clone(),
            params: p.params.clone(),
            inputs: p.inputs.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub schema_version: String,
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub alpha: MatrixRows,
    pub ops: BTreeMap<String, TensorRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<TensorRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceDocument>,
}

/// The algebra of a module document: inline, or a path relative to the
/// module document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    Inline(Box<AlgebraDocument>),
    File(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDocument {
    pub schema_version: String,
    pub kind: String,
    pub algebra: AlgebraSource,
    pub mdim: usize,
    pub beta: MatrixRows,
    pub actions: BTreeMap<String, Vec<MatrixRows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    /// 1-based basis labels.
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomDocument {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDocument>,
}

/// Sibling `.cert.json` written next to every derived document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertDocument {
    pub schema_version: String,
    pub subject: String,
    pub passed: bool,
    pub axioms: Vec<AxiomDocument>,
}

impl CertDocument {
    pub fn new(subject: impl Into<String>, report: &CertReport) -> Self {
        CertDocument {
            schema_version: SCHEMA_VERSION.into(),
            subject: subject.into(),
            passed: report.passed,
            axioms: report
                .axioms
                .iter()
                .map(|a| AxiomDocument {
                    name: a.name.clone(),
                    passed: a.passed,
                    witness: a.witness.as_ref().map(|w| WitnessDocument {
                        indices: w.indices.iter().map(|i| i + 1).collect(),
                        lhs: strings(&w.lhs),
                        rhs: strings(&w.rhs),
                    }),
                })
                .collect(),
        }
    }
}

/// Where in a document a value sits, e.g. `ops.mul[1][0]`.
type Located<T> = Result<T, (String, String)>;

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(Rational::to_string).collect()
}

pub fn matrix_rows(m: &Matrix) -> MatrixRows {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

pub fn tensor_rows(t: &Tensor3) -> TensorRows {
    let (d1, d2, _) = t.dims();
    (0..d1)
        .map(|i| (0..d2).map(|j| strings(t.fiber(i, j))).collect())
        .collect()
}

fn parse_rational(s: &str, at: impl FnOnce() -> String) -> Located<Rational> {
    s.parse().map_err(|_| (at(), format!("cannot parse rational `{s}`")))
}

fn expect_len<T>(xs: &[T], n: usize, at: &str) -> Located<()> {
    if xs.len() == n {
        Ok(())
    } else {
        Err((at.to_string(), format!("expected {n} entries, found {}", xs.len())))
    }
}

pub fn parse_matrix(rows: &MatrixRows, r: usize, c: usize, at: &str) -> Located<Matrix> {
    expect_len(rows, r, at)?;
    let mut entries = Vec::with_capacity(r * c);
    for (i, row) in rows.iter().enumerate() {
        let here = format!("{at}[{i}]");
        expect_len(row, c, &here)?;
        for (j, s) in row.iter().enumerate() {
            entries.push(parse_rational(s, || format!("{here}[{j}]"))?);
        }
    }
    Ok(Matrix::new(r, c, entries).expect("checked shape"))
}

fn parse_tensor(rows: &TensorRows, n: usize, at: &str) -> Located<Tensor3> {
    expect_len(rows, n, at)?;
    let mut entries = Vec::with_capacity(n * n * n);
    for (i, plane) in rows.iter().enumerate() {
        let here = format!("{at}[{i}]");
        expect_len(plane, n, &here)?;
        for (j, fiber) in plane.iter().enumerate() {
            let there = format!("{here}[{j}]");
            expect_len(fiber, n, &there)?;
            for (k, s) in fiber.iter().enumerate() {
                entries.push(parse_rational(s, || format!("{there}[{k}]"))?);
            }
        }
    }
    Ok(Tensor3::new(n, n, n, entries).expect("checked shape"))
}

fn check_schema(version: &str) -> Located<()> {
    if version == SCHEMA_VERSION {
        Ok(())
    } else {
        Err((
            "schema_version".into(),
            format!("unsupported schema version `{version}` (expected `{SCHEMA_VERSION}`)"),
        ))
    }
}

impl AlgebraDocument {
    pub fn from_algebra(a: &HomAlgebra) -> Self {
        AlgebraDocument {
            schema_version: SCHEMA_VERSION.into(),
            kind: a.kind().to_string(),
            dim: a.dim(),
            basis: None,
            alpha: matrix_rows(a.alpha()),
            ops: a.ops().iter().map(|(k, t)| (k.clone(), tensor_rows(t))).collect(),
            delta: None,
            provenance: None,
        }
    }

    pub fn from_bialgebra(b: &EpsilonHomBialgebra) -> Self {
        let a = HomAlgebra::with_product(Kind::HomAssociative, MUL, b.mul().clone(), b.alpha().clone())
            .expect("consistent dimensions");
        AlgebraDocument {
            delta: Some(tensor_rows(b.delta())),
            ..AlgebraDocument::from_algebra(&a)
        }
    }

    pub fn with_provenance(mut self, p: &Provenance) -> Self {
        self.provenance = Some(p.into());
        self
    }

    fn parse(&self) -> Located<(HomAlgebra, Option<Tensor3>)> {
        check_schema(&self.schema_version)?;
        let kind: Kind = self
            .kind
            .parse()
            .map_err(|e: homcert_core::Error| ("kind".to_string(), e.to_string()))?;
        let n = self.dim;
        if let Some(basis) = &self.basis {
            expect_len(basis, n, "basis")?;
        }
        let alpha = parse_matrix(&self.alpha, n, n, "alpha")?;
        let mut ops = BTreeMap::new();
        for (name, rows) in &self.ops {
            ops.insert(name.clone(), parse_tensor(rows, n, &format!("ops.{name}"))?);
        }
        let a = HomAlgebra::new(kind, n, ops, alpha).map_err(|e| ("ops".to_string(), e.to_string()))?;
        a.require_products().map_err(|e| ("ops".to_string(), e.to_string()))?;
        let delta = match &self.delta {
            Some(rows) => {
                if kind != Kind::HomAssociative {
                    return Err(("delta".into(), "a coproduct needs a hom-associative algebra".into()));
                }
                Some(parse_tensor(rows, n, "delta")?)
            }
            None => None,
        };
        Ok((a, delta))
    }
}

impl ModuleDocument {
    pub fn from_module(md: &HomModule) -> Self {
        ModuleDocument {
            schema_version: SCHEMA_VERSION.into(),
            kind: md.kind().to_string(),
            algebra: AlgebraSource::Inline(Box::new(AlgebraDocument::from_algebra(md.algebra()))),
            mdim: md.mdim(),
            beta: matrix_rows(md.beta()),
            actions: md
                .actions()
                .iter()
                .map(|(k, family)| (k.clone(), family.iter().map(matrix_rows).collect()))
                .collect(),
            provenance: None,
        }
    }

    pub fn with_provenance(mut self, p: &Provenance) -> Self {
        self.provenance = Some(p.into());
        self
    }
}

/// A parsed algebra document, with its coproduct when present.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub algebra: HomAlgebra,
    pub delta: Option<Tensor3>,
}

impl LoadedAlgebra {
    pub fn bialgebra(&self) -> Option<EpsilonHomBialgebra> {
        let delta = self.delta.clone()?;
        let mul = self.algebra.op(MUL).ok()?.clone();
        EpsilonHomBialgebra::new(mul, delta, self.algebra.alpha().clone()).ok()
    }
}

/// Either kind of document, as found on disk.
#[derive(Clone, Debug)]
pub enum Loaded {
    Algebra(LoadedAlgebra),
    Module(HomModule),
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn from_str<T: DeserializeOwned>(path: &Path, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::json(path, &e))
}

fn located(path: &Path, r: (String, String)) -> CliError {
    CliError::Document {
        path: path.to_path_buf(),
        location: r.0,
        message: r.1,
    }
}

pub fn algebra_from_document(doc: &AlgebraDocument, path: &Path) -> CliResult<LoadedAlgebra> {
    let (algebra, delta) = doc.parse().map_err(|r| located(path, r))?;
    Ok(LoadedAlgebra { algebra, delta })
}

pub fn module_from_document(doc: &ModuleDocument, path: &Path) -> CliResult<HomModule> {
    check_schema(&doc.schema_version).map_err(|r| located(path, r))?;
    let kind: ModuleKind = doc
        .kind
        .parse()
        .map_err(|e: homcert_core::Error| located(path, ("kind".into(), e.to_string())))?;
    let algebra = match &doc.algebra {
        AlgebraSource::Inline(a) => algebra_from_document(a, path)?.algebra,
        AlgebraSource::File(rel) => {
            let target = path.parent().unwrap_or(Path::new(".")).join(rel);
            load_algebra(&target)?.algebra
        }
    };
    let (n, m) = (algebra.dim(), doc.mdim);
    let beta = parse_matrix(&doc.beta, m, m, "beta").map_err(|r| located(path, r))?;
    let mut actions = BTreeMap::new();
    for (name, family) in &doc.actions {
        let at = format!("actions.{name}");
        expect_len(family, n, &at).map_err(|r| located(path, r))?;
        let mats = family
            .iter()
            .enumerate()
            .map(|(i, rows)| parse_matrix(rows, m, m, &format!("{at}[{i}]")))
            .collect::<Located<Vec<_>>>()
            .map_err(|r| located(path, r))?;
        actions.insert(name.clone(), mats);
    }
    HomModule::new(kind, Arc::new(algebra), beta, actions).map_err(|e| located(path, ("actions".into(), e.to_string())))
}

pub fn load_algebra(path: &Path) -> CliResult<LoadedAlgebra> {
    let doc: AlgebraDocument = from_str(path, &read(path)?)?;
    algebra_from_document(&doc, path)
}

pub fn load_module(path: &Path) -> CliResult<HomModule> {
    let doc: ModuleDocument = from_str(path, &read(path)?)?;
    module_from_document(&doc, path)
}

/// Load an algebra or module document, telling them apart by the
/// presence of `actions`.
pub fn load_any(path: &Path) -> CliResult<Loaded> {
    let text = read(path)?;
    let value: serde_json::Value = from_str(path, &text)?;
    if value.get("actions").is_some() {
        let doc: ModuleDocument = from_str(path, &text)?;
        Ok(Loaded::Module(module_from_document(&doc, path)?))
    } else {
        let doc: AlgebraDocument = from_str(path, &text)?;
        Ok(Loaded::Algebra(algebra_from_document(&doc, path)?))
    }
}

/// A bare matrix file: an array of rows of rational strings.
pub fn load_matrix(path: &Path, rows: usize, cols: usize) -> CliResult<Matrix> {
    let doc: MatrixRows = from_str(path, &read(path)?)?;
    parse_matrix(&doc, rows, cols, "matrix").map_err(|r| located(path, r))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Write through a temporary sibling and rename, so readers never see a
/// partial file.
pub fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = path.with_file_name(format!(".{name}.tmp"));
    fs::write(&tmp, contents).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}

/// `out.json` → `out.cert.json`.
pub fn cert_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    out.with_file_name(format!("{stem}.cert.json"))
}
