//! Command implementations. Each writes its report to `out`, diagnostics
//! to `err`, and returns the exit status.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use homcert_core::exactlin::Rational;
use homcert_core::homcore::{check_axioms, check_predicate, check_rota_baxter, convolution_rb, Predicate};
use homcert_core::hommod::check_module_axioms;
use homcert_core::search::postlie_search;
use homcert_core::Error;

use crate::derive::{derive, DeriveParams, Derived, Functor};
use crate::document::{
    cert_path, load_any, load_matrix, to_json, write_atomic, AlgebraDocument, CertDocument, Loaded, ModuleDocument,
};
use crate::error::{CliError, CliResult, Exit};
use crate::render::{report_text, Style};
use crate::suite::{run_suite, CorpusConfig};

/// Print an error and map it to its exit status. Precondition failures
/// also print the failing report.
pub fn report_error(e: &CliError, style: Style, err: &mut dyn Write) -> Exit {
    let _ = writeln!(err, "error: {e}");
    if let CliError::Core(Error::Precondition {
        report: Some(report), ..
    }) = e
    {
        let _ = write!(err, "{}", report_text(report, style));
    }
    e.exit()
}

fn finish(r: CliResult<Exit>, style: Style, err: &mut dyn Write) -> Exit {
    r.unwrap_or_else(|e| report_error(&e, style, err))
}

#[derive(Clone, Debug, Default)]
pub struct CheckArgs {
    pub path: PathBuf,
    pub predicate: Option<String>,
    pub weight: Option<String>,
    pub operator: Option<PathBuf>,
}

pub fn check(args: &CheckArgs, style: Style, out: &mut dyn Write, err: &mut dyn Write) -> Exit {
    finish(check_inner(args, style, out), style, err)
}

fn check_inner(args: &CheckArgs, style: Style, out: &mut dyn Write) -> CliResult<Exit> {
    let report = match (load_any(&args.path)?, args.predicate.as_deref()) {
        (Loaded::Module(md), None) => check_axioms(md.algebra())?
            .prefixed("algebra: ")
            .merge(check_module_axioms(&md)?),
        (Loaded::Module(_), Some(_)) => {
            return Err(CliError::Usage("predicates apply to algebra documents".into()));
        }
        (Loaded::Algebra(loaded), None) => {
            let report = check_axioms(&loaded.algebra)?;
            match loaded.bialgebra() {
                Some(b) => report.merge(convolution_rb(&b).prefixed("bialgebra: ")),
                None => report,
            }
        }
        (Loaded::Algebra(loaded), Some("rota-baxter")) => {
            let a = &loaded.algebra;
            let path = args
                .operator
                .as_ref()
                .ok_or_else(|| CliError::Usage("--predicate rota-baxter needs --operator".into()))?;
            let r = load_matrix(path, a.dim(), a.dim())?;
            let weight: Rational = match &args.weight {
                Some(w) => w
                    .parse()
                    .map_err(|_| CliError::Usage(format!("--weight: cannot parse `{w}`")))?,
                None => Rational::zero(),
            };
            let rb = check_rota_baxter(a, &r, &weight)?;
            let _ = writeln!(
                out,
                "operator commutes with alpha: {}",
                if rb.commutes_with_twist { "yes" } else { "no" }
            );
            rb.cert
        }
        (Loaded::Algebra(loaded), Some(name)) => {
            let p: Predicate = name.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
            check_predicate(&loaded.algebra, p)?
        }
    };
    let _ = write!(out, "{}", report_text(&report, style));
    Ok(Exit::from_passed(report.passed))
}

pub fn derive_cmd(
    functor: &str,
    inputs: &[PathBuf],
    params: &DeriveParams,
    out_path: &Path,
    style: Style,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Exit {
    let r = (|| -> CliResult<Exit> {
        let functor: Functor = functor.parse()?;
        let derived = derive(functor, inputs, params)?;
        let (doc, subject) = match &derived {
            Derived::Algebra(c) => (
                to_json(&AlgebraDocument::from_algebra(&c.value).with_provenance(&c.provenance)),
                c.value.digest(),
            ),
            Derived::Module(c) => (
                to_json(&ModuleDocument::from_module(&c.value).with_provenance(&c.provenance)),
                c.value.digest(),
            ),
        };
        write_atomic(out_path, &doc)?;
        let cert = cert_path(out_path);
        write_atomic(&cert, &to_json(&CertDocument::new(subject, derived.cert())))?;
        let _ = write!(out, "{}", report_text(derived.cert(), style));
        let _ = writeln!(out, "wrote {} and {}", out_path.display(), cert.display());
        Ok(Exit::from_passed(derived.passed()))
    })();
    finish(r, style, err)
}

#[derive(Clone, Debug, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct SearchSummary {
    pub schema_version: String,
    pub input: String,
    pub bound: u32,
    pub ambient_dim: usize,
    pub nullspace_dim: usize,
    pub rank: usize,
    pub candidates_tested: usize,
    pub survivors: usize,
    pub rejects: usize,
    pub survivor_files: Vec<String>,
}

pub fn search_postlie(
    path: &Path,
    bound: u32,
    budget: u128,
    out_dir: &Path,
    style: Style,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Exit {
    let r = (|| -> CliResult<Exit> {
        let l = match load_any(path)? {
            Loaded::Algebra(a) => a.algebra,
            Loaded::Module(_) => return Err(CliError::Usage("search-postlie needs an algebra document".into())),
        };
        let s = postlie_search(&l, bound, budget)?;
        let mut files = Vec::new();
        let mut all_passed = true;
        for (i, c) in s.survivors.iter().enumerate() {
            let name = format!("survivor-{i:04}.json");
            let doc = AlgebraDocument::from_algebra(&c.value).with_provenance(&c.provenance);
            write_atomic(&out_dir.join(&name), &to_json(&doc))?;
            all_passed &= c.passed();
            files.push(name);
        }
        let summary = SearchSummary {
            schema_version: crate::document::SCHEMA_VERSION.into(),
            input: l.digest(),
            bound,
            ambient_dim: s.space.ambient_dim,
            nullspace_dim: s.space.basis.len(),
            rank: s.space.rank,
            candidates_tested: s.candidates_tested,
            survivors: s.survivors.len(),
            rejects: s.rejects.len(),
            survivor_files: files,
        };
        write_atomic(&out_dir.join("summary.json"), &to_json(&summary))?;
        let verdict = if all_passed {
            style.good("PASSED")
        } else {
            style.bad("FAILED")
        };
        let _ = writeln!(
            out,
            "nullspace dim {}, candidates tested {}, survivors {}\n{verdict}",
            summary.nullspace_dim, summary.candidates_tested, summary.survivors
        );
        Ok(Exit::from_passed(all_passed))
    })();
    finish(r, style, err)
}

/// Run the theorem suite on `jobs` threads (0 = rayon's default) and
/// print the summary; counterexample documents go to `out_dir`.
pub fn certify_corpus(
    cfg: &CorpusConfig,
    jobs: usize,
    out_dir: Option<&Path>,
    style: Style,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Exit {
    let r = (|| -> CliResult<Exit> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
        let summary = pool.install(|| run_suite(cfg));
        if let Some(dir) = out_dir {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            for (name, doc) in summary.counterexample_documents() {
                write_atomic(&dir.join(name), &to_json(&doc))?;
            }
            write_atomic(&dir.join("summary.txt"), &summary.render())?;
        }
        let _ = write!(out, "{}", summary.render());
        Ok(Exit::from_passed(summary.passed()))
    })();
    finish(r, style, err)
}
