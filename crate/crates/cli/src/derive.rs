//! The constructions reachable from `homcert derive`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use homcert_core::exactlin::{Matrix, Rational};
use homcert_core::functors::{self, PreLieMode};
use homcert_core::homcore::{yau_twist, CertReport, Certified, HomAlgebra, Provenance};
use homcert_core::hommod::{self, check_module_axioms, regular_module, HomModule};

use crate::document::{load_algebra, load_matrix, load_module};
use crate::error::{CliError, CliResult};

macro_rules! functors {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum Functor {
            $($variant,)*
        }

        impl Functor {
            pub const ALL: &'static [Functor] = &[$(Functor::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(Functor::$variant => $name,)*
                }
            }
        }
    };
}

functors! {
    CommutatorLie => "commutator-lie",
    PrelieToLie => "prelie-to-lie",
    NovikovToPostlie => "novikov-to-postlie",
    Scale => "scale",
    RbDendriform => "rb-dendriform",
    YauTwist => "yau-twist",
    RegularModule => "regular-module",
    AdjointBimodule => "adjoint-bimodule",
    BimoduleToLieModule => "bimodule-to-lie-module",
    AdjointModule => "adjoint-module",
    DirectSum => "direct-sum",
    TensorModules => "tensor-modules",
    TwistN0 => "twist-n0",
    Twist0k => "twist-0k",
    TwistBeta => "twist-beta",
    OopLieToPrelie => "oop-lie-to-prelie",
    OopAssocToDendriform => "oop-assoc-to-dendriform",
    OopAssocToPrelie => "oop-assoc-to-prelie",
    OopAssocToLdendriform => "oop-assoc-to-ldendriform",
    OopPrelieToDendriform => "oop-prelie-to-dendriform",
    LdendToPrelie => "ldend-to-prelie",
    LdendBrackets => "ldend-brackets",
    LdendTranspose => "ldend-transpose",
    LdendSemidirect => "ldend-semidirect",
    PrelieModuleSplit => "prelie-module-split",
    LdendFromPrelieModule => "ldend-from-prelie-module",
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Functor {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Functor::ALL.iter().copied().find(|f| f.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = Functor::ALL.iter().map(|f| f.as_str()).collect();
            CliError::Usage(format!("unknown functor `{s}`; expected one of: {}", names.join(", ")))
        })
    }
}

/// Parameters shared by all functors; each reads only the ones it needs.
#[derive(Clone, Debug, Default)]
pub struct DeriveParams {
    /// A rational for `scale`, a non-negative integer elsewhere.
    pub k: Option<String>,
    pub n: Option<u32>,
    pub weight: Option<String>,
    pub mode: Option<String>,
    /// `T`, `R` or `g`, depending on the functor.
    pub operator: Option<PathBuf>,
    pub b: Option<PathBuf>,
    pub bm: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub enum Derived {
    Algebra(Certified<HomAlgebra>),
    Module(Certified<HomModule>),
}

impl Derived {
    pub fn cert(&self) -> &CertReport {
        match self {
            Derived::Algebra(c) => &c.cert,
            Derived::Module(c) => &c.cert,
        }
    }

    pub fn passed(&self) -> bool {
        self.cert().passed
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn rational(s: &str, flag: &str) -> CliResult<Rational> {
    s.parse()
        .map_err(|_| usage(format!("{flag}: cannot parse rational `{s}`")))
}

fn int_k(p: &DeriveParams, default: Option<u32>) -> CliResult<u32> {
    match (&p.k, default) {
        (Some(s), _) => s
            .parse()
            .map_err(|_| usage(format!("--k: expected a non-negative integer, found `{s}`"))),
        (None, Some(d)) => Ok(d),
        (None, None) => Err(usage("--k is required")),
    }
}

fn weight(p: &DeriveParams) -> CliResult<Rational> {
    p.weight
        .as_deref()
        .map_or(Ok(Rational::zero()), |w| rational(w, "--weight"))
}

fn mode(p: &DeriveParams) -> CliResult<PreLieMode> {
    match p.mode.as_deref() {
        None => Ok(PreLieMode::Horizontal),
        Some(m) => m.parse().map_err(|e: homcert_core::Error| usage(e.to_string())),
    }
}

fn matrix(path: &Option<PathBuf>, flag: &str, rows: usize, cols: usize) -> CliResult<Matrix> {
    let path = path.as_ref().ok_or_else(|| usage(format!("{flag} is required")))?;
    load_matrix(path, rows, cols)
}

fn inputs<const N: usize>(functor: Functor, paths: &[PathBuf]) -> CliResult<[&Path; N]> {
    let v: Vec<&Path> = paths.iter().map(PathBuf::as_path).collect();
    v.try_into()
        .map_err(|v: Vec<&Path>| usage(format!("{functor} takes {N} input document(s), found {}", v.len())))
}

fn module_result(md: HomModule, provenance: Provenance) -> CliResult<Derived> {
    let cert = check_module_axioms(&md)?;
    Ok(Derived::Module(Certified {
        value: md,
        cert,
        provenance,
    }))
}

pub fn derive(functor: Functor, paths: &[PathBuf], p: &DeriveParams) -> CliResult<Derived> {
    use Functor::*;
    let algebra = |paths: &[PathBuf]| -> CliResult<HomAlgebra> {
        let [a] = inputs::<1>(functor, paths)?;
        Ok(load_algebra(a)?.algebra)
    };
    let module = |paths: &[PathBuf]| -> CliResult<HomModule> {
        let [m] = inputs::<1>(functor, paths)?;
        load_module(m)
    };
    let op_for = |md: &HomModule| matrix(&p.operator, "--operator", md.algebra().dim(), md.mdim());
    Ok(match functor {
        CommutatorLie => Derived::Algebra(functors::commutator_lie(&algebra(paths)?)?),
        PrelieToLie => Derived::Algebra(functors::prelie_to_lie(&algebra(paths)?)?),
        NovikovToPostlie => Derived::Algebra(functors::novikov_to_postlie(&algebra(paths)?)?),
        Scale => {
            let k = rational(p.k.as_deref().ok_or_else(|| usage("--k is required"))?, "--k")?;
            if k.is_zero() {
                return Err(usage("--k: the scale factor must be nonzero"));
            }
            Derived::Algebra(functors::scale(&algebra(paths)?, &k)?)
        }
        RbDendriform => {
            let a = algebra(paths)?;
            let r = matrix(&p.operator, "--operator", a.dim(), a.dim())?;
            Derived::Algebra(functors::rb_dendriform(&a, &r, &weight(p)?)?)
        }
        YauTwist => {
            let a = algebra(paths)?;
            let g = matrix(&p.operator, "--operator", a.dim(), a.dim())?;
            let out = yau_twist(&a, &g)?;
            let cert = homcert_core::homcore::check_axioms(&out)?;
            let provenance = Provenance::new("yau-twist")
                .param("g", matrix_param(&g))
                .input(a.digest());
            Derived::Algebra(Certified {
                value: out,
                cert,
                provenance,
            })
        }
        RegularModule => {
            let a = algebra(paths)?;
            let digest = a.digest();
            module_result(
                regular_module(Arc::new(a))?,
                Provenance::new("regular-module").input(digest),
            )?
        }
        AdjointBimodule => Derived::Module(functors::adjoint_bimodule(Arc::new(algebra(paths)?))?),
        BimoduleToLieModule => Derived::Module(hommod::bimodule_to_lie_module(&module(paths)?)?),
        AdjointModule => {
            let k = int_k(p, Some(1))?;
            Derived::Module(hommod::adjoint_postlie_module(Arc::new(algebra(paths)?), k)?)
        }
        DirectSum => {
            let [a, b] = inputs::<2>(functor, paths)?;
            Derived::Module(hommod::direct_sum(&load_module(a)?, &load_module(b)?)?)
        }
        TensorModules => {
            let [a, b] = inputs::<2>(functor, paths)?;
            let k = int_k(p, Some(1))?;
            Derived::Module(hommod::tensor_product(&load_module(a)?, &load_module(b)?, k)?)
        }
        TwistN0 => {
            let n = p.n.ok_or_else(|| usage("--n is required"))?;
            Derived::Module(hommod::twist_n0(&module(paths)?, n)?)
        }
        Twist0k => Derived::Module(hommod::twist_0k(&module(paths)?, int_k(p, None)?)?),
        TwistBeta => {
            let md = module(paths)?;
            let n = md.algebra().dim();
            let b = matrix(&p.b, "--b", n, n)?;
            let bm = matrix(&p.bm, "--bm", md.mdim(), md.mdim())?;
            Derived::Module(hommod::twist_beta(&md, &b, &bm)?)
        }
        OopLieToPrelie => {
            let md = module(paths)?;
            Derived::Algebra(functors::oop_lie_to_prelie(&md, &op_for(&md)?)?)
        }
        OopAssocToDendriform => {
            let md = module(paths)?;
            Derived::Algebra(functors::oop_assoc_to_dendriform(&md, &op_for(&md)?)?)
        }
        OopAssocToPrelie => {
            let md = module(paths)?;
            Derived::Algebra(functors::oop_assoc_to_prelie(&md, &op_for(&md)?)?)
        }
        OopAssocToLdendriform => {
            let md = module(paths)?;
            Derived::Algebra(functors::oop_assoc_to_ldendriform(&md, &op_for(&md)?)?)
        }
        OopPrelieToDendriform => {
            let md = module(paths)?;
            let dual = functors::oop_prelie_to_dendriform(&md, &op_for(&md)?)?;
            match p.mode.as_deref() {
                None | Some("dendriform") => Derived::Algebra(dual.dendriform),
                Some("l-dendriform") => Derived::Algebra(dual.l_dendriform),
                Some(other) => {
                    return Err(usage(format!(
                        "--mode: expected dendriform or l-dendriform, found `{other}`"
                    )))
                }
            }
        }
        LdendToPrelie => Derived::Algebra(functors::ldend_to_prelie(&algebra(paths)?, mode(p)?)?),
        LdendBrackets => {
            let pair = functors::ldend_brackets(&algebra(paths)?)?;
            let mut chosen = match mode(p)? {
                PreLieMode::Horizontal => pair.horizontal,
                PreLieMode::Vertical => pair.vertical,
            };
            chosen.cert = chosen.cert.merge(CertReport::single("brackets-agree", pair.equal));
            Derived::Algebra(chosen)
        }
        LdendTranspose => Derived::Algebra(functors::ldend_transpose(&algebra(paths)?)?),
        LdendSemidirect => Derived::Algebra(functors::ldend_semidirect(&module(paths)?)?),
        PrelieModuleSplit => {
            let split = functors::prelie_module_split(&algebra(paths)?, mode(p)?)?;
            let mut out = split.module;
            out.cert = split.algebra.cert.prefixed("algebra: ").merge(out.cert);
            Derived::Module(out)
        }
        LdendFromPrelieModule => Derived::Algebra(functors::ldend_from_prelie_module(&module(paths)?, mode(p)?)?),
    })
}

/// Row-major `[[a, b], [c, d]]` text used in provenance parameters.
pub fn matrix_param(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let r: Vec<String> = m.row(i).iter().map(Rational::to_string).collect();
            format!("[{}]", r.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
