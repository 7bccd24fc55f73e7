//! End-to-end acceptance run: one line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::fs;
use std::process::{Command, ExitCode};
use std::sync::Arc;

use homcert::suite::{run_suite, CorpusConfig, Summary, Tier};
use homcert_core::exactlin::{vector, Matrix, Rational, Tensor3};
use homcert_core::functors::{
    oop_assoc_to_dendriform, oop_assoc_to_ldendriform, oop_assoc_to_prelie, oop_lie_to_prelie,
};
use homcert_core::homcore::{
    check_axioms, check_morphism, check_rota_baxter, convolution_rb, find_epsilon_bialgebras, hom_associator,
    is_multiplicative, yau_twist, HomAlgebra, Kind, BRACKET, MUL,
};
use homcert_core::hommod::{check_oop, regular_module};
use homcert_core::search::{affine_lie, catalog, postlie_search, unit_like, DEFAULT_SEARCH_BUDGET};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const CONFIG: CorpusConfig = CorpusConfig {
    trials: 100,
    max_dim: 3,
    seed: 0,
};

/// A must-pass row with at least `min` passing instances and no failures.
fn row_holds(s: &Summary, name: &str, min: usize) -> Check {
    let r = s.row(name).ok_or_else(|| format!("no row `{name}`"))?;
    ensure!(r.tier == Tier::MustPass, "`{name}` is not must-pass");
    ensure!(r.holds(), "`{name}` has {} counterexamples", r.failed());
    ensure!(r.passed + r.skipped == r.tried, "`{name}` lost instances");
    ensure!(r.passed >= min, "`{name}` passed only {} (< {min})", r.passed);
    Ok(format!("{name} {}/{}", r.passed, r.tried))
}

fn rows_hold(s: &Summary, names: &[&str], min: usize) -> Check {
    let parts = names
        .iter()
        .map(|n| row_holds(s, n, min))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{} rows, min {}", parts.len(), min))
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn basis(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vector::zeros(n);
    v[i] = q(1);
    v
}

/// Integer structure constants `c[i][j][k]` = coefficient of `e_k` in `e_i·e_j`.
struct IntProduct {
    n: usize,
    c: Vec<i64>,
    alpha: Vec<i64>,
}

impl IntProduct {
    fn new(n: usize, c: Vec<i64>, alpha: Vec<i64>) -> Self {
        IntProduct { n, c, alpha }
    }

    fn mul(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0; n];
        for (i, &xi) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (j, &yj) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += xi * yj * self.c[(i * n + j) * n + k];
                }
            }
        }
        out
    }

    fn twist(&self, x: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.alpha[r * self.n + c] * x[c]).sum())
            .collect()
    }

    fn unit(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    /// `(x·y)·α(z) − α(x)·(y·z)` on basis vectors.
    fn associator(&self, i: usize, j: usize, k: usize) -> Vec<i64> {
        let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
        let l = self.mul(&self.mul(&x, &y), &self.twist(&z));
        let r = self.mul(&self.twist(&x), &self.mul(&y, &z));
        l.iter().zip(&r).map(|(a, b)| a - b).collect()
    }

    fn is_hom_prelie(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.associator(i, j, k) == self.associator(j, i, k))))
    }
}

fn int_entries(t: &Tensor3) -> Vec<i64> {
    t.entries()
        .iter()
        .map(|r| r.to_string().parse().expect("integer entry"))
        .collect()
}

fn int_matrix(m: &Matrix) -> Vec<i64> {
    m.entries()
        .iter()
        .map(|r| r.to_string().parse().expect("integer entry"))
        .collect()
}

fn criterion_1() -> Check {
    let mut checked = 0;
    for kind in Kind::ALL {
        for e in catalog(kind) {
            let r = check_axioms(&e.algebra).map_err(|e| e.to_string())?;
            ensure!(r.passed, "catalog {} `{}` fails", kind.as_str(), e.name);
            checked += 1;
        }
        if kind != Kind::Generic {
            let z = HomAlgebra::zero(kind, Matrix::from_i64(&[&[2, 1], &[0, -1]])).map_err(|e| e.to_string())?;
            ensure!(check_axioms(&z).unwrap().passed, "zero {} fails", kind.as_str());
        }
    }

    let field = HomAlgebra::with_product(
        Kind::HomAssociative,
        MUL,
        Tensor3::from_terms(1, &[(0, 0, 0, 1)]),
        Matrix::identity(1),
    )
    .unwrap();
    let b1 = basis(1, 0);
    ensure!(
        vector::is_zero(&hom_associator(&field, &b1, &b1, &b1).unwrap()),
        "field associator"
    );

    let bad = HomAlgebra::with_product(
        Kind::HomAssociative,
        MUL,
        Tensor3::from_terms(2, &[(0, 0, 1, 1), (0, 1, 0, 1)]),
        Matrix::identity(2),
    )
    .unwrap();
    let oracle = IntProduct::new(2, int_entries(bad.op(MUL).unwrap()), int_matrix(bad.alpha()));
    ensure!(oracle.associator(0, 0, 0) == vec![-1, 0], "oracle associator");
    let e1 = basis(2, 0);
    ensure!(
        hom_associator(&bad, &e1, &e1, &e1).unwrap() == vector::from_i64(&oracle.associator(0, 0, 0)),
        "associator disagrees with the oracle"
    );
    let r = check_axioms(&bad).unwrap();
    let w = r
        .axiom("hom-associativity")
        .and_then(|a| a.witness.clone())
        .ok_or("no associativity witness")?;
    ensure!(!r.passed && w.label() == "(1, 1, 1)", "witness {}", w.label());
    ensure!(
        w.defect() == vector::from_i64(&oracle.associator(0, 0, 0)),
        "witness defect"
    );

    let lie = HomAlgebra::with_product(
        Kind::HomLie,
        BRACKET,
        Tensor3::from_terms(2, &[(0, 1, 1, 1), (1, 0, 1, -1)]),
        Matrix::from_i64(&[&[1, 0], &[0, 2]]),
    )
    .unwrap();
    ensure!(check_axioms(&lie).unwrap().passed, "Lie with alpha=diag(1,2)");

    let u = unit_like();
    let zero2 = Matrix::zeros(2, 2);
    ensure!(check_rota_baxter(&u, &zero2, &q(0)).unwrap().cert.passed, "R=0");
    for e in catalog(Kind::HomAssociative) {
        let id = Matrix::identity(e.algebra.dim());
        ensure!(
            check_rota_baxter(&e.algebra, &id, &q(-1)).unwrap().cert.passed,
            "R=Id on {}",
            e.name
        );
    }
    let r = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
    let rb = check_rota_baxter(&u, &r, &q(0)).unwrap();
    ensure!(rb.cert.passed && rb.commutes_with_twist, "unit-like R");

    for kind in Kind::ALL {
        for e in catalog(kind) {
            let a = &e.algebra;
            let n = a.dim();
            ensure!(
                check_morphism(&Matrix::identity(n), a, a).unwrap().passed,
                "Id morphism {}",
                e.name
            );
            ensure!(
                check_morphism(&Matrix::zeros(n, n), a, a).unwrap().passed,
                "zero morphism {}",
                e.name
            );
            if is_multiplicative(a) {
                ensure!(
                    check_morphism(a.alpha(), a, a).unwrap().passed,
                    "alpha morphism {}",
                    e.name
                );
            }
        }
    }

    let t = yau_twist(&affine_lie(Matrix::identity(2)), &Matrix::from_i64(&[&[1, 0], &[0, 2]])).unwrap();
    ensure!(
        *t.op(BRACKET).unwrap() == Tensor3::from_terms(2, &[(0, 1, 1, 2), (1, 0, 1, -2)])
            && *t.alpha() == Matrix::from_i64(&[&[1, 0], &[0, 2]])
            && check_axioms(&t).unwrap().passed,
        "yau twist of the affine algebra"
    );
    Ok(format!("{checked} catalog instances and the worked examples"))
}

fn criterion_2(s: &Summary) -> Check {
    rows_hold(s, &["lie-admissible", "commutator-lie", "prelie-to-lie"], 100)
}

fn criterion_3(s: &Summary) -> Check {
    rows_hold(
        s,
        &[
            "adjoint-postlie-module k=0",
            "adjoint-postlie-module k=1",
            "adjoint-postlie-module k=2",
            "direct-sum",
            "tensor-product k=0",
            "tensor-product k=1",
            "twist-n0 n=0",
            "twist-n0 n=1",
            "twist-n0 n=2",
            "twist-0k k=0",
            "twist-0k k=1",
            "twist-beta b=alpha bM=alpha",
            "twist-beta equals composite twist",
        ],
        100,
    )
}

fn criterion_4(s: &Summary) -> Check {
    let novikov = catalog(Kind::HomNovikov);
    let square = Tensor3::from_terms(2, &[(1, 1, 0, 1)]);
    ensure!(
        novikov.iter().any(|e| *e.algebra.op(MUL).unwrap() == square),
        "missing e2∘e2=e1"
    );
    ensure!(
        novikov.iter().any(|e| e.algebra.op(MUL).unwrap().is_zero()),
        "missing zero product"
    );
    row_holds(s, "novikov-to-postlie", 10)
}

fn criterion_5(s: &Summary) -> Check {
    let md = regular_module(Arc::new(unit_like())).unwrap();
    let t = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
    ensure!(check_oop(&t, &md).unwrap().passed, "fixture is not an O-operator");
    ensure!(oop_assoc_to_dendriform(&md, &t).unwrap().passed(), "fixture dendriform");
    ensure!(oop_assoc_to_prelie(&md, &t).unwrap().passed(), "fixture preLie");
    ensure!(
        oop_assoc_to_ldendriform(&md, &t).unwrap().passed(),
        "fixture L-dendriform"
    );
    let lie_md = regular_module(Arc::new(affine_lie(Matrix::identity(2)))).unwrap();
    ensure!(
        oop_lie_to_prelie(&lie_md, &Matrix::zeros(2, 2)).unwrap().passed(),
        "Lie T=0"
    );
    let mut names = Vec::new();
    for f in [
        "oop-lie-to-prelie",
        "oop-assoc-to-dendriform",
        "oop-assoc-to-prelie",
        "oop-assoc-to-ldendriform",
    ] {
        names.push(format!("{f} T=0"));
        names.push(format!("{f} T brute-forced"));
    }
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    rows_hold(s, &names, 100)
}

fn criterion_6(s: &Summary) -> Check {
    rows_hold(
        s,
        &[
            "ldend-to-prelie horizontal",
            "ldend-to-prelie vertical",
            "ldend-brackets",
            "ldend-transpose involution",
            "prelie-module-split horizontal",
            "prelie-module-split vertical",
            "ldend-semidirect",
        ],
        100,
    )
}

fn prelie_box(n: usize, alpha: &Matrix) -> BTreeSet<Vec<i64>> {
    let cells = n * n * n;
    let alpha = int_matrix(alpha);
    let mut out = BTreeSet::new();
    let mut c = vec![-1i64; cells];
    loop {
        let p = IntProduct::new(n, c.clone(), alpha.clone());
        if p.is_hom_prelie() {
            out.insert(c.clone());
        }
        let mut i = 0;
        while i < cells && c[i] == 1 {
            c[i] = -1;
            i += 1;
        }
        if i == cells {
            return out;
        }
        c[i] += 1;
    }
}

fn criterion_7() -> Check {
    let inputs = homcert::suite::search_inputs();
    ensure!(inputs.len() >= 5, "only {} inputs", inputs.len());
    let mut total = 0;
    for (name, l, bound) in &inputs {
        let s = postlie_search(l, *bound, DEFAULT_SEARCH_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        let br = l.op(BRACKET).unwrap();
        for m in &s.survivors {
            ensure!(check_axioms(&m.value).unwrap().passed, "{name}: survivor fails");
        }
        for m in &s.rejects {
            let a = HomAlgebra::with_products(
                Kind::HomPostLie,
                (BRACKET, br.clone()),
                (MUL, m.clone()),
                l.alpha().clone(),
            )
            .unwrap();
            ensure!(!check_axioms(&a).unwrap().passed, "{name}: reject certifies");
        }
        ensure!(
            s.survivors.iter().any(|m| m.value.op(MUL).unwrap().is_zero()),
            "{name}: zero product missing"
        );
        if br.is_zero() {
            let found: BTreeSet<Vec<i64>> = s
                .survivors
                .iter()
                .map(|m| int_entries(m.value.op(MUL).unwrap()))
                .collect();
            let expected = if *bound == 0 {
                BTreeSet::from([vec![0; l.dim().pow(3)]])
            } else {
                prelie_box(l.dim(), l.alpha())
            };
            ensure!(
                found == expected,
                "{name}: {} survivors, oracle {}",
                found.len(),
                expected.len()
            );
        }
        total += s.survivors.len();
    }
    Ok(format!("{} inputs, {total} survivors", inputs.len()))
}

fn empirical_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| l.contains(" empirical ")).collect()
}

fn homcert_corpus(jobs: &str, out: Option<&std::path::Path>) -> Result<String, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_homcert"));
    cmd.args([
        "certify-corpus",
        "--trials",
        "100",
        "--max-dim",
        "3",
        "--seed",
        "0",
        "--jobs",
        jobs,
    ])
    .env("NO_COLOR", "1");
    if let Some(dir) = out {
        cmd.arg("--out").arg(dir);
    }
    let o = cmd.output().map_err(|e| e.to_string())?;
    ensure!(
        o.status.code() == Some(0),
        "certify-corpus --jobs {jobs} exited {:?}",
        o.status.code()
    );
    String::from_utf8(o.stdout).map_err(|e| e.to_string())
}

fn criterion_8(s: &Summary, rerun: &str, out_dir: &std::path::Path) -> Check {
    let mut failures = 0;
    for name in [
        "rb-dendriform weight=0",
        "rb-dendriform weight=-1",
        "rb-dendriform weight=1",
        "oop-prelie-to-dendriform as dendriform",
        "oop-prelie-to-dendriform as l-dendriform",
    ] {
        let r = s.row(name).ok_or_else(|| format!("no row `{name}`"))?;
        ensure!(r.tier == Tier::Empirical && r.tried > 0, "`{name}` did not run");
        failures += r.failed();
    }
    let first = s.render();
    ensure!(
        empirical_lines(&first) == empirical_lines(rerun),
        "tabulation differs between reruns"
    );
    let written = fs::read_dir(out_dir).map_err(|e| e.to_string())?.count() - 1;
    let expected: usize = s
        .rows
        .iter()
        .filter(|r| r.tier == Tier::Empirical)
        .map(|r| r.failed())
        .sum();
    ensure!(
        written == expected,
        "{written} counterexample documents for {expected} counterexamples"
    );
    Ok(format!(
        "{} empirical rows, {failures} recorded counterexamples",
        empirical_lines(&first).len()
    ))
}

fn criterion_9(s: &Summary) -> Check {
    let found = find_epsilon_bialgebras(2, &[-1, 0, 1]);
    let delta_zero = found
        .iter()
        .filter(|b| b.delta().is_zero() && !b.mul().is_zero())
        .count();
    let mul_zero = found
        .iter()
        .filter(|b| b.mul().is_zero() && !b.delta().is_zero())
        .count();
    ensure!(delta_zero > 0 && mul_zero > 0, "degenerate families missing");
    for b in found.iter().filter(|b| b.delta().is_zero() || b.mul().is_zero()) {
        ensure!(convolution_rb(b).passed, "degenerate bialgebra fails");
    }
    row_holds(s, "convolution-rota-baxter", 1).map(|r| format!("{r}; Δ=0: {delta_zero}, μ=0: {mul_zero}"))
}

fn criterion_10(s: &Summary, jobs1: &str, jobs4: &str) -> Check {
    ensure!(jobs1 == jobs4, "--jobs 1 and --jobs 4 differ");
    ensure!(jobs1 == s.render(), "binary and in-process summaries differ");
    ensure!(s.passed(), "must-pass properties fail");
    Ok(format!("{} bytes, identical across 3 runs", jobs1.len()))
}

fn main() -> ExitCode {
    let summary = run_suite(&CONFIG);
    let dir = tempfile::TempDir::new().expect("temp dir");
    let reruns = homcert_corpus("1", Some(dir.path())).and_then(|a| homcert_corpus("4", None).map(|b| (a, b)));

    let results: Vec<(&str, Check)> = vec![
        ("axiom checker soundness", criterion_1()),
        ("algebra-level implications", criterion_2(&summary)),
        ("post-Lie module theorems", criterion_3(&summary)),
        ("Novikov bridge", criterion_4(&summary)),
        ("O-operator functors", criterion_5(&summary)),
        ("L-dendriform layer", criterion_6(&summary)),
        ("post-Lie search consistency", criterion_7()),
        (
            "empirical tabulation",
            reruns.clone().and_then(|(a, _)| criterion_8(&summary, &a, dir.path())),
        ),
        ("ε-Hom-bialgebra convolution", criterion_9(&summary)),
        ("determinism", reruns.and_then(|(a, b)| criterion_10(&summary, &a, &b))),
    ];

    let mut all = true;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {:>2}  PASS  {name}: {detail}", i + 1),
            Err(why) => {
                all = false;
                println!("criterion {:>2}  FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
