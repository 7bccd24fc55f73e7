//! The theorem suite run by `homcert certify-corpus`.
//!
//! Corpora are drawn from the seeded instance generators; every property is
//! evaluated on every instance in a fixed order, so the summary depends only
//! on the configuration and never on thread count.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use homcert_core::exactlin::{Matrix, Rational};
use homcert_core::functors::{self, PreLieMode};
use homcert_core::homcore::{
    check_axioms, check_predicate, check_rota_baxter, convolution_rb, find_epsilon_bialgebras, is_multiplicative,
    CertReport, HomAlgebra, Kind, Predicate, BRACKET, MUL,
};
use homcert_core::hommod::{
    adjoint_postlie_module, bimodule_to_lie_module, check_module_axioms, check_oop, direct_sum, regular_module,
    tensor_product, twist_0k, twist_beta, twist_beta_unchecked, twist_n0, HomModule,
};
use homcert_core::search::{
    affine_lie, brute_force_oop_search, catalog, postlie_search, random_instance, unit_like, Generator,
    RandomInstanceSpec, DEFAULT_OOP_BUDGET, DEFAULT_SEARCH_BUDGET,
};
use homcert_core::Error;

use crate::document::{matrix_rows, AlgebraDocument, CertDocument, ModuleDocument, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    /// Instances per corpus.
    pub trials: usize,
    pub max_dim: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    MustPass,
    /// Tabulated, never asserted.
    Empirical,
}

impl Tier {
    fn as_str(self) -> &'static str {
        match self {
            Tier::MustPass => "must-pass",
            Tier::Empirical => "empirical",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub instance: String,
    pub detail: String,
    pub evidence: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub property: String,
    pub tier: Tier,
    pub tried: usize,
    pub passed: usize,
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl Row {
    pub fn failed(&self) -> usize {
        self.counterexamples.len()
    }

    pub fn holds(&self) -> bool {
        self.failed() == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub config: CorpusConfig,
    pub corpora: Vec<(String, usize)>,
    pub rows: Vec<Row>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.rows.iter().filter(|r| r.tier == Tier::MustPass).all(Row::holds)
    }

    pub fn row(&self, property: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.property == property)
    }

    pub fn render(&self) -> String {
        let c = &self.config;
        let mut s = format!(
            "certify-corpus seed={} trials={} max-dim={}\n\n",
            c.seed, c.trials, c.max_dim
        );
        s.push_str("corpus                              instances\n");
        for (name, n) in &self.corpora {
            let _ = writeln!(s, "{name:<36}{n:>9}");
        }
        s.push('\n');
        let _ = writeln!(
            s,
            "{:<48}{:<11}{:>7}{:>8}{:>8}{:>9}",
            "property", "tier", "tried", "passed", "failed", "skipped"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<48}{:<11}{:>7}{:>8}{:>8}{:>9}",
                r.property,
                r.tier.as_str(),
                r.tried,
                r.passed,
                r.failed(),
                r.skipped
            );
        }
        let must: Vec<&Row> = self.rows.iter().filter(|r| r.tier == Tier::MustPass).collect();
        let held = must.iter().filter(|r| r.holds()).count();
        let _ = writeln!(
            s,
            "\n{held}/{} must-pass properties hold; {} empirical counterexamples",
            must.len(),
            self.rows
                .iter()
                .filter(|r| r.tier == Tier::Empirical)
                .map(Row::failed)
                .sum::<usize>()
        );
        s.push_str(if self.passed() {
            "result: PASS\n"
        } else {
            "result: FAIL\n"
        });
        s
    }

    /// `(file name, contents)` for every counterexample, in row order.
    pub fn counterexample_documents(&self) -> Vec<(String, Value)> {
        let mut out = Vec::new();
        for r in &self.rows {
            for (i, c) in r.counterexamples.iter().enumerate() {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "property": r.property,
                    "tier": r.tier.as_str(),
                    "instance": c.instance,
                    "detail": c.detail,
                    "evidence": c.evidence,
                });
                out.push((format!("{}-{i:04}.json", slug(&r.property)), doc));
            }
        }
        out
    }
}

fn slug(s: &str) -> String {
    s.replace("=-", "-minus-")
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '-' })
        .collect::<String>()
        .split('-')
        .filter(|p| !p.is_empty())
        .collect::<Vec<_>>()
        .join("-")
}

/// A labelled algebra of the corpus.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub algebra: HomAlgebra,
}

enum Outcome {
    Pass,
    Fail(String, Value),
    Skip,
}

/// One trial per operator, instance or pair.
struct Trial {
    label: String,
    outcome: Outcome,
}

fn algebra_doc(a: &HomAlgebra) -> Value {
    serde_json::to_value(AlgebraDocument::from_algebra(a)).expect("serializes")
}

fn module_doc(md: &HomModule) -> Value {
    serde_json::to_value(ModuleDocument::from_module(md)).expect("serializes")
}

fn report_doc(subject: &str, r: &CertReport) -> Value {
    serde_json::to_value(CertDocument::new(subject, r)).expect("serializes")
}

fn first_failure(r: &CertReport) -> String {
    match r.first_failure() {
        Some(a) => match &a.witness {
            Some(w) => format!("{} fails at {}", a.name, w.label()),
            None => format!("{} fails", a.name),
        },
        None => "passed".into(),
    }
}

/// Pass iff the report passed; failures carry the input and the report.
fn judge(report: &CertReport, input: impl FnOnce() -> Value) -> Outcome {
    if report.passed {
        Outcome::Pass
    } else {
        Outcome::Fail(
            first_failure(report),
            json!({ "input": input(), "report": report_doc("output", report) }),
        )
    }
}

/// Precondition failures are skipped; any other error is a failure.
fn guard(r: Result<Outcome, Error>, input: impl FnOnce() -> Value) -> Outcome {
    match r {
        Ok(o) => o,
        Err(Error::Precondition { .. }) => Outcome::Skip,
        Err(e) => Outcome::Fail(e.to_string(), json!({ "input": input() })),
    }
}

fn row<T: Sync>(
    property: impl Into<String>,
    tier: Tier,
    items: &[T],
    f: impl Fn(&T) -> Vec<Trial> + Sync + Send,
) -> Row {
    let trials: Vec<Trial> = items.par_iter().flat_map_iter(f).collect();
    let mut r = Row {
        property: property.into(),
        tier,
        tried: 0,
        passed: 0,
        skipped: 0,
        counterexamples: Vec::new(),
    };
    for t in trials {
        match t.outcome {
            Outcome::Skip => r.skipped += 1,
            Outcome::Pass => {
                r.tried += 1;
                r.passed += 1;
            }
            Outcome::Fail(detail, evidence) => {
                r.tried += 1;
                r.counterexamples.push(Counterexample {
                    instance: t.label,
                    detail,
                    evidence,
                });
            }
        }
    }
    r
}

fn single(label: &str, outcome: Outcome) -> Vec<Trial> {
    vec![Trial {
        label: label.to_string(),
        outcome,
    }]
}

fn on_instances(
    property: impl Into<String>,
    tier: Tier,
    items: &[Instance],
    f: impl Fn(&HomAlgebra) -> Result<Outcome, Error> + Sync + Send,
) -> Row {
    row(property, tier, items, |i| {
        let outcome = match guard(f(&i.algebra), || algebra_doc(&i.algebra)) {
            Outcome::Fail(d, mut ev) => {
                if ev.get("input").is_none_or(Value::is_null) {
                    ev["input"] = algebra_doc(&i.algebra);
                }
                Outcome::Fail(d, ev)
            }
            o => o,
        };
        single(&i.label, outcome)
    })
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Up to `cfg.trials` distinct certified instances of `kind` accepted by
/// `keep`, cycling through dimensions and generators.
pub fn corpus(kind: Kind, cfg: &CorpusConfig, keep: impl Fn(&HomAlgebra) -> bool + Sync) -> Vec<Instance> {
    let want = cfg.trials;
    let max_dim = cfg.max_dim.max(1);
    let tag = mix(Kind::ALL.iter().position(|k| *k == kind).unwrap_or(0) as u64);
    let limit = 40 * want + 64;
    let batch = (2 * want).max(16);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut start = 0;
    while out.len() < want && start < limit {
        let found: Vec<Option<Instance>> = (start..start + batch)
            .into_par_iter()
            .map(|t| {
                let dim = 1 + t % max_dim;
                let generator = Generator::ALL[(t / max_dim) % Generator::ALL.len()];
                let seed = mix(cfg.seed ^ tag ^ mix(t as u64));
                let spec = RandomInstanceSpec::new(kind, dim, seed, generator);
                let a = random_instance(&spec).ok()?;
                keep(&a).then(|| Instance {
                    label: format!("{kind}/{generator}/dim-{dim}/seed-{seed:016x}"),
                    algebra: a,
                })
            })
            .collect();
        for i in found.into_iter().flatten() {
            if out.len() < want && seen.insert(i.algebra.digest()) {
                out.push(i);
            }
        }
        start += batch;
    }
    out
}

fn regular_certifies(a: &HomAlgebra) -> bool {
    regular_module(Arc::new(a.clone()))
        .and_then(|md| check_module_axioms(&md))
        .is_ok_and(|r| r.passed)
}

/// Entries in `{−1, 0, 1}`: every matrix for at most four cells, otherwise
/// the diagonal and strictly triangular ones.
fn small_matrices(rows: usize, cols: usize) -> Vec<Matrix> {
    let cells = rows * cols;
    let from = |pattern: &[(usize, usize)], mut idx: usize| {
        let mut m = Matrix::zeros(rows, cols);
        for &(i, j) in pattern {
            m.set(i, j, Rational::from(idx as i64 % 3 - 1));
            idx /= 3;
        }
        m
    };
    let mut patterns: Vec<Vec<(usize, usize)>> = Vec::new();
    if cells <= 4 {
        patterns.push((0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).collect());
    } else {
        patterns.push((0..rows.min(cols)).map(|i| (i, i)).collect());
        patterns.push(
            (0..rows)
                .flat_map(|i| (0..cols).filter(move |&j| j > i).map(move |j| (i, j)))
                .collect(),
        );
        patterns.push(
            (0..rows)
                .flat_map(|i| (0..cols).filter(move |&j| j < i).map(move |j| (i, j)))
                .collect(),
        );
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in patterns {
        for idx in 0..3usize.pow(p.len() as u32) {
            let m = from(&p, idx);
            if seen.insert(matrix_rows(&m)) {
                out.push(m);
            }
        }
    }
    out
}

/// Nonzero O-operators for `md`: exhaustive over `{−1, 0, 1}` when the
/// operator has at most four entries, structured candidates otherwise.
pub fn nonzero_oops(md: &HomModule) -> Vec<Matrix> {
    let (n, m) = (md.algebra().dim(), md.mdim());
    let found = if n * m <= 4 {
        brute_force_oop_search(md, 1, DEFAULT_OOP_BUDGET).unwrap_or_default()
    } else {
        small_matrices(n, m)
            .into_iter()
            .filter(|t| check_oop(t, md).is_ok_and(|r| r.passed))
            .collect()
    };
    found.into_iter().filter(|t| !t.is_zero()).collect()
}

/// Rota-Baxter operators of the given weight commuting with `α`: `−λ·Id`,
/// then every other one with entries in `{−1, 0, 1}` in dimension ≤ 2.
pub fn rota_baxter_operators(a: &HomAlgebra, weight: &Rational) -> Vec<Matrix> {
    let n = a.dim();
    let trivial = Matrix::identity(n).scale(&-weight.clone());
    let mut out = vec![trivial.clone()];
    if n <= 2 {
        out.extend(small_matrices(n, n).into_iter().filter(|r| {
            *r != trivial
                && r.commutes_with(a.alpha())
                && check_rota_baxter(a, r, weight).is_ok_and(|rb| rb.cert.passed)
        }));
    }
    out
}

type OopFunctor = fn(&HomModule, &Matrix) -> Result<functors::FunctorResult, Error>;

/// `(instance, module, operators)` for the O-operator rows.
struct OopCase {
    label: String,
    md: HomModule,
    ops: Vec<Matrix>,
}

fn oop_cases(items: &[Instance]) -> Vec<OopCase> {
    items
        .par_iter()
        .map(|i| {
            let md = regular_module(Arc::new(i.algebra.clone())).expect("regular module exists");
            let ops = nonzero_oops(&md);
            OopCase {
                label: i.label.clone(),
                md,
                ops,
            }
        })
        .collect()
}

fn oop_rows(name: &str, cases: &[OopCase], f: OopFunctor) -> [Row; 2] {
    let run = |case: &OopCase, t: &Matrix| -> Trial {
        let outcome = guard(f(&case.md, t).map(|r| judge(&r.cert, || Value::Null)), || Value::Null);
        let outcome = match outcome {
            Outcome::Fail(d, ev) => Outcome::Fail(
                d,
                json!({ "module": module_doc(&case.md), "operator": matrix_rows(t), "result": ev }),
            ),
            o => o,
        };
        Trial {
            label: case.label.clone(),
            outcome,
        }
    };
    let zero = row(format!("{name} T=0"), Tier::MustPass, cases, |c| {
        let (n, m) = (c.md.algebra().dim(), c.md.mdim());
        vec![run(c, &Matrix::zeros(n, m))]
    });
    let found = row(format!("{name} T brute-forced"), Tier::MustPass, cases, |c| {
        c.ops.iter().map(|t| run(c, t)).collect()
    });
    [zero, found]
}

/// Equal action matrices and module twist. The algebras are allowed to
/// differ: the composite twists the bracket by `α^{2^k−1}` as well.
fn same_actions(a: &HomModule, b: &HomModule) -> bool {
    a.actions() == b.actions() && a.beta() == b.beta()
}

fn postlie_rows(items: &[Instance]) -> Vec<Row> {
    let selfmod = |a: &HomAlgebra| regular_module(Arc::new(a.clone()));
    let mut rows = Vec::new();
    for k in 0..3u32 {
        rows.push(on_instances(
            format!("adjoint-postlie-module k={k}"),
            Tier::MustPass,
            items,
            |a| {
                Ok(judge(
                    &adjoint_postlie_module(Arc::new(a.clone()), k)?.cert,
                    Value::default,
                ))
            },
        ));
    }
    rows.push(on_instances("direct-sum", Tier::MustPass, items, |a| {
        let md = selfmod(a)?;
        Ok(judge(&direct_sum(&md, &md)?.cert, Value::default))
    }));
    for k in 0..2u32 {
        rows.push(on_instances(
            format!("tensor-product k={k}"),
            Tier::MustPass,
            items,
            |a| {
                let md = selfmod(a)?;
                Ok(judge(&tensor_product(&md, &md, k)?.cert, Value::default))
            },
        ));
    }
    for n in 0..3u32 {
        rows.push(on_instances(format!("twist-n0 n={n}"), Tier::MustPass, items, |a| {
            Ok(judge(&twist_n0(&selfmod(a)?, n)?.cert, Value::default))
        }));
    }
    for k in 0..2u32 {
        rows.push(on_instances(format!("twist-0k k={k}"), Tier::MustPass, items, |a| {
            Ok(judge(&twist_0k(&selfmod(a)?, k)?.cert, Value::default))
        }));
    }
    rows.push(on_instances(
        "twist-beta b=alpha bM=alpha",
        Tier::MustPass,
        items,
        |a| {
            let md = selfmod(a)?;
            Ok(judge(&twist_beta(&md, a.alpha(), md.beta())?.cert, Value::default))
        },
    ));
    rows.push(on_instances(
        "twist-beta equals composite twist",
        Tier::MustPass,
        items,
        |a| {
            let md = selfmod(a)?;
            for n in 0..3u32 {
                for k in 0..2u32 {
                    let composite = twist_0k(&twist_n0(&md, n)?.value, k)?.value;
                    let b = a.alpha().pow(n as u64)?;
                    let bm = md.beta().pow((1u64 << k) - 1)?;
                    let direct = twist_beta_unchecked(&md, &b, &bm)?;
                    if !same_actions(&direct, &composite) {
                        return Ok(Outcome::Fail(format!("differs at n={n}, k={k}"), Value::Null));
                    }
                }
            }
            Ok(Outcome::Pass)
        },
    ));
    rows
}

fn ldend_rows(items: &[Instance]) -> Vec<Row> {
    let mut rows = Vec::new();
    for mode in [PreLieMode::Horizontal, PreLieMode::Vertical] {
        rows.push(on_instances(
            format!("ldend-to-prelie {mode}"),
            Tier::MustPass,
            items,
            move |a| {
                let p = functors::ldend_to_prelie(a, mode)?;
                let lie = functors::prelie_to_lie(&p.value)?;
                Ok(judge(&p.cert.merge(lie.cert.prefixed("commutator: ")), Value::default))
            },
        ));
    }
    rows.push(on_instances("ldend-brackets", Tier::MustPass, items, |a| {
        let pair = functors::ldend_brackets(a)?;
        let report = pair
            .horizontal
            .cert
            .prefixed("horizontal: ")
            .merge(pair.vertical.cert.prefixed("vertical: "))
            .merge(CertReport::single("brackets-agree", pair.equal));
        Ok(judge(&report, Value::default))
    }));
    rows.push(on_instances("ldend-transpose involution", Tier::MustPass, items, |a| {
        let once = functors::ldend_transpose(a)?;
        let twice = functors::transpose_unchecked(&once.value)?;
        let swapped = functors::induced_product(&once.value, PreLieMode::Horizontal)?
            == functors::induced_product(a, PreLieMode::Vertical)?;
        let report = once
            .cert
            .merge(CertReport::single("involution", twice == *a))
            .merge(CertReport::single("swaps-modes", swapped));
        Ok(judge(&report, Value::default))
    }));
    for mode in [PreLieMode::Horizontal, PreLieMode::Vertical] {
        rows.push(on_instances(
            format!("prelie-module-split {mode}"),
            Tier::MustPass,
            items,
            move |a| {
                let split = functors::prelie_module_split(a, mode)?;
                let back = functors::ldend_from_prelie_module(&split.module.value, mode)?;
                let report = split
                    .algebra
                    .cert
                    .prefixed("algebra: ")
                    .merge(split.module.cert.prefixed("module: "))
                    .merge(back.cert.prefixed("reassembled: "))
                    .merge(CertReport::single("reassembles-input", back.value.ops() == a.ops()));
                Ok(judge(&report, Value::default))
            },
        ));
    }
    rows.push(on_instances("ldend-semidirect", Tier::MustPass, items, |a| {
        let md = regular_module(Arc::new(a.clone()))?;
        if !check_module_axioms(&md)?.passed {
            return Ok(Outcome::Skip);
        }
        Ok(judge(&functors::ldend_semidirect(&md)?.cert, Value::default))
    }));
    rows
}

/// The fixed Hom-Lie inputs of the search-consistency check, with bounds.
pub fn search_inputs() -> Vec<(String, HomAlgebra, u32)> {
    let d12 = Matrix::from_rows(vec![
        vec![Rational::one(), Rational::zero()],
        vec![Rational::zero(), Rational::from(2)],
    ])
    .expect("square");
    let abelian = |alpha: Matrix| HomAlgebra::zero(Kind::HomLie, alpha).expect("square");
    vec![
        ("abelian dim 2".into(), abelian(Matrix::identity(2)), 1),
        ("abelian dim 2 alpha=diag(1,2)".into(), abelian(d12.clone()), 1),
        ("abelian dim 3".into(), abelian(Matrix::identity(3)), 0),
        ("affine alpha=Id".into(), affine_lie(Matrix::identity(2)), 1),
        ("affine alpha=diag(1,2)".into(), affine_lie(d12), 1),
    ]
}

/// Survivors and rejects of the bounded search agree with a fresh
/// certification; for abelian inputs the survivors are exactly the
/// Hom-preLie products in the candidate box.
fn search_consistent(l: &HomAlgebra, bound: u32) -> Result<Outcome, Error> {
    let s = postlie_search(l, bound, DEFAULT_SEARCH_BUDGET)?;
    if let Some(bad) = s.survivors.iter().position(|x| !x.passed()) {
        return Ok(Outcome::Fail(
            format!("survivor {bad} fails certification"),
            Value::Null,
        ));
    }
    let br = l.op(BRACKET)?;
    for (i, m) in s.rejects.iter().enumerate() {
        let a = HomAlgebra::with_products(
            Kind::HomPostLie,
            (BRACKET, br.clone()),
            (MUL, m.clone()),
            l.alpha().clone(),
        )?;
        if check_axioms(&a)?.passed {
            return Ok(Outcome::Fail(format!("reject {i} certifies"), Value::Null));
        }
    }
    if br.is_zero() {
        let mut prelie = BTreeSet::new();
        for m in s
            .rejects
            .iter()
            .chain(s.survivors.iter().map(|x| x.value.op(MUL).expect("mul")))
        {
            let p = HomAlgebra::with_product(Kind::HomPreLie, MUL, m.clone(), l.alpha().clone())?;
            if check_axioms(&p)?.passed {
                prelie.insert(format!("{:?}", m.entries()));
            }
        }
        let survivors: BTreeSet<String> = s
            .survivors
            .iter()
            .map(|x| format!("{:?}", x.value.op(MUL).expect("mul").entries()))
            .collect();
        if survivors != prelie {
            return Ok(Outcome::Fail(
                "survivors differ from the preLie filter".into(),
                Value::Null,
            ));
        }
    }
    Ok(Outcome::Pass)
}

/// Run every property of the suite.
pub fn run_suite(cfg: &CorpusConfig) -> Summary {
    let assoc = corpus(Kind::HomAssociative, cfg, |_| true);
    let prelie = corpus(Kind::HomPreLie, cfg, |_| true);
    let postlie = corpus(Kind::HomPostLie, cfg, is_multiplicative);
    let assoc_oop = {
        let mut v = vec![Instance {
            label: "unit-like fixture".into(),
            algebra: unit_like(),
        }];
        v.extend(corpus(Kind::HomAssociative, cfg, regular_certifies));
        v.truncate(cfg.trials);
        v
    };
    let lie_oop = corpus(Kind::HomLie, cfg, regular_certifies);
    let prelie_oop = corpus(Kind::HomPreLie, cfg, regular_certifies);

    let assoc_cases = oop_cases(&assoc_oop);
    let lie_cases = oop_cases(&lie_oop);
    let prelie_cases = oop_cases(&prelie_oop);

    let ldend = {
        let derived: Vec<Instance> = assoc_cases
            .par_iter()
            .flat_map_iter(|c| {
                c.ops.iter().filter_map(move |t| {
                    let r = functors::oop_assoc_to_ldendriform(&c.md, t).ok()?;
                    r.passed().then(|| Instance {
                        label: format!("{} via O-operator {}", c.label, crate::derive::matrix_param(t)),
                        algebra: r.value,
                    })
                })
            })
            .collect();
        let mut seen = BTreeSet::new();
        let mut v: Vec<Instance> = derived
            .into_iter()
            .filter(|i| seen.insert(i.algebra.digest()))
            .take(cfg.trials / 4)
            .collect();
        for i in corpus(Kind::HomLDendriform, cfg, |_| true) {
            if v.len() >= cfg.trials {
                break;
            }
            if seen.insert(i.algebra.digest()) {
                v.push(i);
            }
        }
        v
    };
    let novikov: Vec<Instance> = catalog(Kind::HomNovikov)
        .into_iter()
        .map(|e| Instance {
            label: format!("catalog {}", e.name),
            algebra: e.algebra,
        })
        .collect();
    let catalog_all: Vec<Instance> = Kind::ALL
        .into_iter()
        .flat_map(|k| {
            catalog(k).into_iter().map(move |e| Instance {
                label: format!("catalog {k} {}", e.name),
                algebra: e.algebra,
            })
        })
        .collect();

    let mut rows = Vec::new();
    rows.push(on_instances("catalog certifies", Tier::MustPass, &catalog_all, |a| {
        Ok(judge(&check_axioms(a)?, Value::default))
    }));
    rows.push(on_instances("lie-admissible", Tier::MustPass, &assoc, |a| {
        Ok(judge(&check_predicate(a, Predicate::LieAdmissible)?, Value::default))
    }));
    rows.push(on_instances("commutator-lie", Tier::MustPass, &assoc, |a| {
        Ok(judge(&functors::commutator_lie(a)?.cert, Value::default))
    }));
    rows.push(on_instances(
        "rota-baxter R=Id weight=-1",
        Tier::MustPass,
        &assoc,
        |a| {
            let id = Matrix::identity(a.dim());
            Ok(judge(
                &check_rota_baxter(a, &id, &Rational::from(-1))?.cert,
                Value::default,
            ))
        },
    ));
    rows.push(on_instances("prelie-to-lie", Tier::MustPass, &prelie, |a| {
        Ok(judge(&functors::prelie_to_lie(a)?.cert, Value::default))
    }));
    rows.push(on_instances(
        "bimodule-to-lie-module (multiplicative)",
        Tier::MustPass,
        &assoc_oop,
        |a| {
            if !is_multiplicative(a) {
                return Ok(Outcome::Skip);
            }
            let md = regular_module(Arc::new(a.clone()))?;
            Ok(judge(&bimodule_to_lie_module(&md)?.cert, Value::default))
        },
    ));
    rows.push(on_instances(
        "bimodule-to-lie-module (any twist)",
        Tier::Empirical,
        &assoc_oop,
        |a| {
            let md = regular_module(Arc::new(a.clone()))?;
            Ok(judge(&bimodule_to_lie_module(&md)?.cert, Value::default))
        },
    ));
    rows.extend(postlie_rows(&postlie));
    rows.push(on_instances("novikov-to-postlie", Tier::MustPass, &novikov, |a| {
        Ok(judge(&functors::novikov_to_postlie(a)?.cert, Value::default))
    }));
    rows.extend(oop_rows("oop-lie-to-prelie", &lie_cases, functors::oop_lie_to_prelie));
    rows.extend(oop_rows(
        "oop-assoc-to-dendriform",
        &assoc_cases,
        functors::oop_assoc_to_dendriform,
    ));
    rows.extend(oop_rows(
        "oop-assoc-to-prelie",
        &assoc_cases,
        functors::oop_assoc_to_prelie,
    ));
    rows.extend(oop_rows(
        "oop-assoc-to-ldendriform",
        &assoc_cases,
        functors::oop_assoc_to_ldendriform,
    ));
    rows.extend(ldend_rows(&ldend));

    let inputs = search_inputs();
    rows.push(row(
        "postlie-search consistency",
        Tier::MustPass,
        &inputs,
        |(label, l, bound)| single(label, guard(search_consistent(l, *bound), || algebra_doc(l))),
    ));

    let bialgebras: Vec<_> = (1..=2).flat_map(|d| find_epsilon_bialgebras(d, &[-1, 0, 1])).collect();
    rows.push(row("convolution-rota-baxter", Tier::MustPass, &bialgebras, |b| {
        let report = convolution_rb(b);
        let outcome = judge(&report, || {
            serde_json::to_value(AlgebraDocument::from_bialgebra(b)).expect("serializes")
        });
        single(&format!("bialgebra dim-{}", b.dim()), outcome)
    }));

    for w in [0i64, -1, 1] {
        let weight = Rational::from(w);
        rows.push(row(format!("rb-dendriform weight={w}"), Tier::Empirical, &assoc, |i| {
            rota_baxter_operators(&i.algebra, &weight)
                .into_iter()
                .map(|r| {
                    let outcome = guard(
                        functors::rb_dendriform(&i.algebra, &r, &weight).map(|out| judge(&out.cert, Value::default)),
                        Value::default,
                    );
                    let outcome = match outcome {
                        Outcome::Fail(d, ev) => Outcome::Fail(
                            d,
                            json!({
                                "algebra": algebra_doc(&i.algebra),
                                "operator": matrix_rows(&r),
                                "weight": weight.to_string(),
                                "result": ev,
                            }),
                        ),
                        o => o,
                    };
                    Trial {
                        label: i.label.clone(),
                        outcome,
                    }
                })
                .collect()
        }));
    }
    for (target, pick) in [("dendriform", false), ("l-dendriform", true)] {
        rows.push(row(
            format!("oop-prelie-to-dendriform as {target}"),
            Tier::Empirical,
            &prelie_cases,
            |c| {
                let (n, m) = (c.md.algebra().dim(), c.md.mdim());
                std::iter::once(Matrix::zeros(n, m))
                    .chain(c.ops.iter().cloned())
                    .map(|t| {
                        let r = functors::oop_prelie_to_dendriform(&c.md, &t).map(|d| {
                            let res = if pick { d.l_dendriform } else { d.dendriform };
                            judge(&res.cert, Value::default)
                        });
                        let outcome = match guard(r, Value::default) {
                            Outcome::Fail(d, ev) => Outcome::Fail(
                                d,
                                json!({ "module": module_doc(&c.md), "operator": matrix_rows(&t), "result": ev }),
                            ),
                            o => o,
                        };
                        Trial {
                            label: c.label.clone(),
                            outcome,
                        }
                    })
                    .collect()
            },
        ));
    }

    let corpora = vec![
        ("hom-associative".to_string(), assoc.len()),
        ("hom-prelie".to_string(), prelie.len()),
        ("hom-postlie (multiplicative)".to_string(), postlie.len()),
        ("hom-novikov (catalog)".to_string(), novikov.len()),
        ("hom-associative (certified bimodule)".to_string(), assoc_oop.len()),
        ("hom-lie (certified representation)".to_string(), lie_oop.len()),
        ("hom-prelie (certified bimodule)".to_string(), prelie_oop.len()),
        ("hom-l-dendriform".to_string(), ldend.len()),
        ("epsilon-hom-bialgebras dim<=2".to_string(), bialgebras.len()),
    ];
    Summary {
        config: *cfg,
        corpora,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices_cover_the_box_for_four_cells() {
        assert_eq!(small_matrices(2, 2).len(), 81);
        assert_eq!(small_matrices(3, 3).len(), 27 + 27 + 27 - 2);
    }

    #[test]
    fn corpus_is_deterministic_and_distinct() {
        let cfg = CorpusConfig {
            trials: 12,
            max_dim: 2,
            seed: 3,
        };
        let a = corpus(Kind::HomAssociative, &cfg, |_| true);
        let b = corpus(Kind::HomAssociative, &cfg, |_| true);
        assert_eq!(a.len(), 12);
        let digests: BTreeSet<String> = a.iter().map(|i| i.algebra.digest()).collect();
        assert_eq!(digests.len(), 12);
        assert!(a
            .iter()
            .zip(&b)
            .all(|(x, y)| x.label == y.label && x.algebra == y.algebra));
    }

    #[test]
    fn trivial_rota_baxter_operator_comes_first() {
        let ops = rota_baxter_operators(&unit_like(), &Rational::from(1));
        assert_eq!(ops[0], Matrix::identity(2).scale(&Rational::from(-1)));
    }

    #[test]
    fn slug_is_file_safe() {
        assert_eq!(slug("rb-dendriform weight=-1"), "rb-dendriform-weight-minus-1");
        assert_eq!(slug("rb-dendriform weight=1"), "rb-dendriform-weight-1");
    }
}
