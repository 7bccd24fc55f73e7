use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational, Tensor3, Vector};
use crate::homcore::algebra::{hex_string, push_entries};
use crate::homcore::{HomAlgebra, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleKind {
    AssocBimodule,
    LieModule,
    LieRepresentation,
    PreLieBimodule,
    PostLieModule,
    LDendBimodule,
}

pub const L: &str = "l";
pub const R: &str = "r";
pub const RHO: &str = "rho";
/// `⋄`, written `l_⋆` in operator form.
pub const DIAMOND: &str = "diamond";
/// `•`, written `l_∗` in operator form.
pub const BULLET: &str = "bullet";
/// `l_◁`.
pub const LT: &str = "lt";
/// `r_◁`.
pub const RT: &str = "rt";
/// `l_▷`.
pub const LR: &str = "lr";
/// `r_▷`.
pub const RR: &str = "rr";

impl ModuleKind {
    pub const ALL: [ModuleKind; 6] = [
        ModuleKind::AssocBimodule,
        ModuleKind::LieModule,
        ModuleKind::LieRepresentation,
        ModuleKind::PreLieBimodule,
        ModuleKind::PostLieModule,
        ModuleKind::LDendBimodule,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ModuleKind::AssocBimodule => "assoc-bimodule",
            ModuleKind::LieModule => "lie-module",
            ModuleKind::LieRepresentation => "lie-representation",
            ModuleKind::PreLieBimodule => "prelie-bimodule",
            ModuleKind::PostLieModule => "postlie-module",
            ModuleKind::LDendBimodule => "ldend-bimodule",
        }
    }

    pub fn action_names(self) -> &'static [&'static str] {
        match self {
            ModuleKind::AssocBimodule | ModuleKind::PreLieBimodule => &[L, R],
            ModuleKind::LieModule => &[L],
            ModuleKind::LieRepresentation => &[RHO],
            ModuleKind::PostLieModule => &[BULLET, DIAMOND],
            ModuleKind::LDendBimodule => &[LR, LT, RR, RT],
        }
    }

    /// The algebra kind this module kind is defined over.
    pub fn algebra_kind(self) -> Kind {
        match self {
            ModuleKind::AssocBimodule => Kind::HomAssociative,
            ModuleKind::LieModule | ModuleKind::LieRepresentation => Kind::HomLie,
            ModuleKind::PreLieBimodule => Kind::HomPreLie,
            ModuleKind::PostLieModule => Kind::HomPostLie,
            ModuleKind::LDendBimodule => Kind::HomLDendriform,
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModuleKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Input(format!("unknown module kind `{s}`")))
    }
}

/// A Hom-module `(M, β)` over an algebra with named action families.
///
/// Each family holds one `m × m` matrix per algebra basis vector; a general
/// element acts by the linear extension. As with algebras, the kind's
/// axioms are certified separately.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomModule {
    kind: ModuleKind,
    algebra: Arc<HomAlgebra>,
    mdim: usize,
    beta: Matrix,
    actions: BTreeMap<String, Vec<Matrix>>,
}

impl HomModule {
    pub fn new(
        kind: ModuleKind,
        algebra: Arc<HomAlgebra>,
        beta: Matrix,
        actions: BTreeMap<String, Vec<Matrix>>,
    ) -> Result<Self> {
        let m = beta.rows();
        if beta.cols() != m {
            return Err(Error::dim(
                "HomModule::new (beta)",
                "square matrix",
                format!("{}x{}", beta.rows(), beta.cols()),
            ));
        }
        let names: Vec<&str> = actions.keys().map(String::as_str).collect();
        if names != kind.action_names() {
            return Err(Error::Input(format!(
                "{kind} needs actions {:?}, found {names:?}",
                kind.action_names()
            )));
        }
        for (name, family) in &actions {
            if family.len() != algebra.dim() {
                return Err(Error::Dimension {
                    op: "HomModule::new (action family)",
                    expected: format!("{} matrices for `{name}`", algebra.dim()),
                    found: family.len().to_string(),
                });
            }
            if let Some(bad) = family.iter().find(|a| a.rows() != m || a.cols() != m) {
                return Err(Error::Dimension {
                    op: "HomModule::new (action matrix)",
                    expected: format!("{m}x{m} for `{name}`"),
                    found: format!("{}x{}", bad.rows(), bad.cols()),
                });
            }
        }
        Ok(HomModule {
            kind,
            algebra,
            mdim: m,
            beta,
            actions,
        })
    }

    /// Build from `(name, family)` pairs.
    pub fn from_actions<'a>(
        kind: ModuleKind,
        algebra: Arc<HomAlgebra>,
        beta: Matrix,
        actions: impl IntoIterator<Item = (&'a str, Vec<Matrix>)>,
    ) -> Result<Self> {
        let actions = actions.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        HomModule::new(kind, algebra, beta, actions)
    }

    /// All actions zero.
    pub fn zero(kind: ModuleKind, algebra: Arc<HomAlgebra>, beta: Matrix) -> Result<Self> {
        let m = beta.rows();
        let n = algebra.dim();
        let actions = kind
            .action_names()
            .iter()
            .map(|name| (*name, vec![Matrix::zeros(m, m); n]))
            .collect::<Vec<_>>();
        HomModule::from_actions(kind, algebra, beta, actions)
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn algebra(&self) -> &Arc<HomAlgebra> {
        &self.algebra
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn actions(&self) -> &BTreeMap<String, Vec<Matrix>> {
        &self.actions
    }

    pub fn action(&self, name: &str) -> Result<&[Matrix]> {
        self.actions
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Input(format!("{} has no action named `{name}`", self.kind)))
    }

    /// Matrix by which the algebra element `x` acts.
    pub fn act(&self, name: &str, x: &[Rational]) -> Result<Matrix> {
        let family = self.action(name)?;
        if x.len() != family.len() {
            return Err(Error::dim("HomModule::act", family.len(), x.len()));
        }
        Ok(combine_family(family, self.mdim, x))
    }

    /// The action as a bilinear map `A × M → M`: entry `(i, j, k)` is row
    /// `k`, column `j` of the matrix for `e_i`.
    pub fn action_tensor(&self, name: &str) -> Result<Tensor3> {
        Ok(family_tensor(self.action(name)?, self.mdim))
    }

    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.canonical_text().as_bytes());
        hex_string(&h.finalize())
    }

    pub(crate) fn canonical_text(&self) -> String {
        let mut s = format!(
            "module;{};{};over:{};beta:",
            self.kind,
            self.mdim,
            self.algebra.canonical_text()
        );
        push_entries(&mut s, self.beta.entries());
        for (name, family) in &self.actions {
            s.push_str(&format!(";{name}:"));
            for (i, a) in family.iter().enumerate() {
                if i > 0 {
                    s.push('|');
                }
                push_entries(&mut s, a.entries());
            }
        }
        s
    }
}

pub(crate) fn combine_family(family: &[Matrix], m: usize, x: &[Rational]) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (a, c) in family.iter().zip(x) {
        if !c.is_zero() {
            out = out.add(&a.scale(c)).expect("same shape");
        }
    }
    out
}

pub(crate) fn family_tensor(family: &[Matrix], m: usize) -> Tensor3 {
    let mut t = Tensor3::zeros(family.len(), m, m);
    for (i, a) in family.iter().enumerate() {
        for j in 0..m {
            for k in 0..m {
                let v = a.get(k, j);
                if !v.is_zero() {
                    t.set(i, j, k, v.clone());
                }
            }
        }
    }
    t
}

/// Apply a matrix-valued map to every basis vector of the algebra.
pub(crate) fn family_from(n: usize, f: impl Fn(&Vector) -> Matrix) -> Vec<Matrix> {
    (0..n).map(|i| f(&crate::exactlin::vector::unit(n, i))).collect()
}
