//! Hom-L-dendriform algebras: associated preLie algebras, brackets,
//! transpose, semidirect sums and the preLie-module decomposition.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{vector, Tensor3};
use crate::functors::common::{certified, require_certified, require_kind, require_report, FunctorResult};
use crate::functors::oop::product_from;
use crate::homcore::{Certified, HomAlgebra, Kind, Provenance, BRACKET, MUL, TLEFT, TRIGHT};
use crate::hommod::module::{family_from, L, LR, LT, R, RR, RT};
use crate::hommod::{check_module_axioms, HomModule, ModuleKind};

/// Which preLie product an L-dendriform algebra induces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreLieMode {
    /// `x·y = x▷y + x◁y`.
    Horizontal,
    /// `x∗y = x▷y − y◁x`.
    Vertical,
}

impl PreLieMode {
    pub fn as_str(self) -> &'static str {
        match self {
            PreLieMode::Horizontal => "horizontal",
            PreLieMode::Vertical => "vertical",
        }
    }
}

impl fmt::Display for PreLieMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PreLieMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "horizontal" => Ok(PreLieMode::Horizontal),
            "vertical" => Ok(PreLieMode::Vertical),
            _ => Err(Error::Input(format!("unknown mode `{s}` (horizontal|vertical)"))),
        }
    }
}

fn products(a: &HomAlgebra) -> Result<(&Tensor3, &Tensor3)> {
    Ok((a.op(TLEFT)?, a.op(TRIGHT)?))
}

/// The induced product tensor, without certification.
pub fn induced_product(a: &HomAlgebra, mode: PreLieMode) -> Result<Tensor3> {
    let (tl, tr) = products(a)?;
    match mode {
        PreLieMode::Horizontal => tr.add(tl),
        PreLieMode::Vertical => tr.sub(&tl.opposite()),
    }
}

pub fn ldend_to_prelie(a: &HomAlgebra, mode: PreLieMode) -> Result<FunctorResult> {
    require_certified(a, Kind::HomLDendriform)?;
    let out = HomAlgebra::with_product(Kind::HomPreLie, MUL, induced_product(a, mode)?, a.alpha().clone())?;
    certified(
        out,
        Provenance::new("ldend-to-prelie").param("mode", mode).input(a.digest()),
    )
}

/// The commutator brackets of the horizontal and vertical products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketPair {
    pub horizontal: FunctorResult,
    pub vertical: FunctorResult,
    /// Whether the two brackets agree as tensors.
    pub equal: bool,
}

pub fn ldend_brackets(a: &HomAlgebra) -> Result<BracketPair> {
    require_certified(a, Kind::HomLDendriform)?;
    let bracket = |mode: PreLieMode| -> Result<FunctorResult> {
        let p = induced_product(a, mode)?;
        let out = HomAlgebra::with_product(Kind::HomLie, BRACKET, p.sub(&p.opposite())?, a.alpha().clone())?;
        certified(
            out,
            Provenance::new("ldend-bracket").param("mode", mode).input(a.digest()),
        )
    };
    let horizontal = bracket(PreLieMode::Horizontal)?;
    let vertical = bracket(PreLieMode::Vertical)?;
    let equal = horizontal.value.op(BRACKET)? == vertical.value.op(BRACKET)?;
    Ok(BracketPair {
        horizontal,
        vertical,
        equal,
    })
}

/// `x ▷ᵗ y = x ▷ y` and `x ◁ᵗ y = −y ◁ x`, without certification.
pub fn transpose_unchecked(a: &HomAlgebra) -> Result<HomAlgebra> {
    let (tl, tr) = products(a)?;
    HomAlgebra::with_products(
        a.kind(),
        (TLEFT, tl.opposite().scale(&-crate::exactlin::Rational::one())),
        (TRIGHT, tr.clone()),
        a.alpha().clone(),
    )
}

pub fn ldend_transpose(a: &HomAlgebra) -> Result<FunctorResult> {
    require_certified(a, Kind::HomLDendriform)?;
    certified(
        transpose_unchecked(a)?,
        Provenance::new("ldend-transpose").input(a.digest()),
    )
}

/// `A ⊕ M` with `(x+m) ▷ (y+n) = x▷y + l▷(x)n + r▷(y)m`, likewise for `◁`,
/// and twist `α ⊕ β`. Basis: algebra first, then module.
///
/// Built whether or not the bimodule certifies; the result is an
/// L-dendriform algebra exactly when the bimodule axioms hold.
pub fn ldend_semidirect(md: &HomModule) -> Result<FunctorResult> {
    if md.kind() != ModuleKind::LDendBimodule {
        return Err(Error::Input(format!(
            "expected an ldend-bimodule, found a {}",
            md.kind()
        )));
    }
    let a = md.algebra();
    require_certified(a, Kind::HomLDendriform)?;
    let (n, m) = (a.dim(), md.mdim());
    let (tl, tr) = products(a)?;
    let build = |prod: &Tensor3, left: &str, right: &str| -> Result<Tensor3> {
        let (l, r) = (md.action_tensor(left)?, md.action_tensor(right)?);
        Ok(product_from(n + m, |u, v| {
            let (x, p) = u.split_at(n);
            let (y, q) = v.split_at(n);
            let mut out = prod.eval(x, y);
            let module = vector::add(&l.eval(x, q), &r.eval(y, p));
            out.extend(module);
            out
        }))
    };
    let sl = build(tl, LT, RT)?;
    let sr = build(tr, LR, RR)?;
    let eta = a.alpha().direct_sum(md.beta());
    let out = HomAlgebra::with_products(Kind::HomLDendriform, (TLEFT, sl), (TRIGHT, sr), eta)?;
    certified(out, Provenance::new("ldend-semidirect").input(md.digest()))
}

/// A preLie algebra together with a bimodule over it on its own carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieSplit {
    pub algebra: FunctorResult,
    pub module: Certified<HomModule>,
}

/// `(A, ·, α)` with the bimodule `(A, l_▷, r_◁, α)` (horizontal), or
/// `(A, ∗, α)` with `(A, l_▷, −l_◁, α)` (vertical).
pub fn prelie_module_split(a: &HomAlgebra, mode: PreLieMode) -> Result<PreLieSplit> {
    require_certified(a, Kind::HomLDendriform)?;
    let algebra = ldend_to_prelie(a, mode)?;
    let n = a.dim();
    let (tl, tr) = products(a)?;
    let l = family_from(n, |x| tr.left_mult(x));
    let r = match mode {
        PreLieMode::Horizontal => family_from(n, |y| tl.right_mult(y)),
        PreLieMode::Vertical => family_from(n, |y| tl.left_mult(y).neg()),
    };
    let md = HomModule::from_actions(
        ModuleKind::PreLieBimodule,
        Arc::new(algebra.value.clone()),
        a.alpha().clone(),
        [(L, l), (R, r)],
    )?;
    let cert = check_module_axioms(&md)?;
    Ok(PreLieSplit {
        algebra,
        module: Certified {
            value: md,
            cert,
            provenance: Provenance::new("prelie-module-split")
                .param("mode", mode)
                .input(a.digest()),
        },
    })
}

/// The reverse of [`prelie_module_split`]: from a preLie algebra and a
/// bimodule on its own carrier whose actions recover the product
/// (`l(x)y + r(y)x = x·y`), rebuild `▷` and `◁`.
pub fn ldend_from_prelie_module(md: &HomModule, mode: PreLieMode) -> Result<FunctorResult> {
    if md.kind() != ModuleKind::PreLieBimodule {
        return Err(Error::Input(format!(
            "expected a prelie-bimodule, found a {}",
            md.kind()
        )));
    }
    let a = md.algebra();
    require_kind(a, Kind::HomPreLie)?;
    require_certified(a, Kind::HomPreLie)?;
    require_report("input is a certified prelie-bimodule", check_module_axioms(md)?)?;
    let n = a.dim();
    if md.mdim() != n || md.beta() != a.alpha() {
        return Err(Error::precondition_msg("module lives on the algebra with twist α"));
    }
    let (l, r) = (md.action_tensor(L)?, md.action_tensor(R)?);
    let recovered = product_from(n, |x, y| vector::add(&l.eval(x, y), &r.eval(y, x)));
    if &recovered != a.op(MUL)? {
        return Err(Error::precondition_msg("l(x)y + r(y)x equals the product"));
    }
    let tright = product_from(n, |x, y| l.eval(x, y));
    let tleft = match mode {
        PreLieMode::Horizontal => product_from(n, |x, y| r.eval(y, x)),
        PreLieMode::Vertical => product_from(n, |x, y| vector::neg(&r.eval(x, y))),
    };
    let out = HomAlgebra::with_products(
        Kind::HomLDendriform,
        (TLEFT, tleft),
        (TRIGHT, tright),
        a.alpha().clone(),
    )?;
    certified(
        out,
        Provenance::new("ldend-from-prelie-module")
            .param("mode", mode)
            .input(md.digest()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;
    use crate::hommod::regular_module;
    use crate::search::catalog::catalog;

    fn instances() -> Vec<HomAlgebra> {
        let mut v: Vec<HomAlgebra> = catalog(Kind::HomLDendriform).into_iter().map(|e| e.algebra).collect();
        v.push(HomAlgebra::zero(Kind::HomLDendriform, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap());
        v
    }

    #[test]
    fn both_induced_products_are_prelie() {
        for a in instances() {
            for mode in [PreLieMode::Horizontal, PreLieMode::Vertical] {
                let p = ldend_to_prelie(&a, mode).unwrap();
                assert!(p.passed());
                assert!(crate::functors::prelie_to_lie(&p.value).unwrap().passed());
            }
        }
    }

    #[test]
    fn brackets_agree() {
        for a in instances() {
            let b = ldend_brackets(&a).unwrap();
            assert!(b.horizontal.passed() && b.vertical.passed() && b.equal);
        }
    }

    #[test]
    fn transpose_is_an_involution_swapping_modes() {
        for a in instances() {
            let t = ldend_transpose(&a).unwrap();
            assert!(t.passed());
            assert_eq!(transpose_unchecked(&t.value).unwrap(), a);
            assert_eq!(
                induced_product(&t.value, PreLieMode::Horizontal).unwrap(),
                induced_product(&a, PreLieMode::Vertical).unwrap()
            );
        }
    }

    #[test]
    fn split_and_reassemble() {
        for a in instances() {
            for mode in [PreLieMode::Horizontal, PreLieMode::Vertical] {
                let s = prelie_module_split(&a, mode).unwrap();
                assert!(s.algebra.passed() && s.module.passed());
                let back = ldend_from_prelie_module(&s.module.value, mode).unwrap();
                assert!(back.passed());
                assert_eq!(back.value, a);
            }
        }
    }

    #[test]
    fn semidirect_with_regular_bimodule() {
        for a in instances() {
            let md = regular_module(Arc::new(a.clone())).unwrap();
            let s = ldend_semidirect(&md).unwrap();
            assert!(s.passed());
            assert_eq!(s.value.dim(), 2 * a.dim());
        }
    }

    #[test]
    fn failing_bimodule_gives_failing_semidirect_sum() {
        let a = Arc::new(catalog(Kind::HomLDendriform).swap_remove(0).algebra);
        let md = regular_module(a.clone()).unwrap();
        let mut actions = md.actions().clone();
        actions.get_mut(LR).unwrap()[0] = Matrix::identity(md.mdim());
        let bad = HomModule::new(md.kind(), a, md.beta().clone(), actions).unwrap();
        assert!(!check_module_axioms(&bad).unwrap().passed);
        assert!(!ldend_semidirect(&bad).unwrap().passed());
    }

    #[test]
    fn trivial_module_extends_by_zero() {
        let a = Arc::new(catalog(Kind::HomLDendriform).swap_remove(0).algebra);
        let md = HomModule::zero(ModuleKind::LDendBimodule, a.clone(), Matrix::identity(1)).unwrap();
        let s = ldend_semidirect(&md).unwrap();
        assert!(s.passed());
        let n = a.dim();
        let tr = s.value.op(TRIGHT).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(&tr.fiber(i, j)[..n], a.op(TRIGHT).unwrap().fiber(i, j));
                assert!(tr.fiber(i, j)[n].is_zero());
            }
        }
    }
}
