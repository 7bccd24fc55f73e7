//! Structures induced on a module by an O-operator `T : V → A`.

use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Tensor3, Vector};
use crate::functors::common::{certified, require_certified, require_report, FunctorResult};
use crate::homcore::{HomAlgebra, Kind, Provenance, LEFT, MUL, RIGHT, TLEFT, TRIGHT};
use crate::hommod::constructions::matrix_text;
use crate::hommod::module::{L, R, RHO};
use crate::hommod::{check_module_axioms, check_oop, HomModule, ModuleKind};

/// Tensor of the bilinear map `f` on the standard basis of a space of dimension `m`.
pub(crate) fn product_from(m: usize, f: impl Fn(&Vector, &Vector) -> Vector) -> Tensor3 {
    let mut t = Tensor3::cube(m);
    for i in 0..m {
        let u = vector::unit(m, i);
        for j in 0..m {
            for (k, x) in f(&u, &vector::unit(m, j)).into_iter().enumerate() {
                t.set(i, j, k, x);
            }
        }
    }
    t
}

fn require_oop(t: &Matrix, md: &HomModule, kinds: &[ModuleKind]) -> Result<()> {
    if !kinds.contains(&md.kind()) {
        return Err(Error::Input(format!(
            "expected one of {kinds:?}, found a {}",
            md.kind()
        )));
    }
    require_certified(md.algebra(), md.kind().algebra_kind())?;
    require_report(&format!("input is a certified {}", md.kind()), check_module_axioms(md)?)?;
    require_report("T is an O-operator", check_oop(t, md)?)
}

fn provenance(name: &str, t: &Matrix, md: &HomModule) -> Provenance {
    Provenance::new(name).param("t", matrix_text(t)).input(md.digest())
}

/// `u ∗ v = ρ(T(u))v` from a Hom-Lie representation.
pub fn oop_lie_to_prelie(md: &HomModule, t: &Matrix) -> Result<FunctorResult> {
    require_oop(t, md, &[ModuleKind::LieRepresentation, ModuleKind::LieModule])?;
    let name = if md.kind() == ModuleKind::LieModule { L } else { RHO };
    let rho = md.action_tensor(name)?;
    let prod = product_from(md.mdim(), |u, v| rho.eval(&t.apply(u), v));
    let out = HomAlgebra::with_product(Kind::HomPreLie, MUL, prod, md.beta().clone())?;
    certified(out, provenance("oop-lie-to-prelie", t, md))
}

fn assoc_parts(md: &HomModule, t: &Matrix) -> Result<(Tensor3, Tensor3)> {
    require_oop(t, md, &[ModuleKind::AssocBimodule])?;
    Ok((md.action_tensor(L)?, md.action_tensor(R)?))
}

/// `u ⊣ v = r(T(v))u` and `u ⊢ v = l(T(u))v`.
pub fn oop_assoc_to_dendriform(md: &HomModule, t: &Matrix) -> Result<FunctorResult> {
    let (l, r) = assoc_parts(md, t)?;
    let m = md.mdim();
    let left = product_from(m, |u, v| r.eval(&t.apply(v), u));
    let right = product_from(m, |u, v| l.eval(&t.apply(u), v));
    let out = HomAlgebra::with_products(Kind::HomDendriform, (LEFT, left), (RIGHT, right), md.beta().clone())?;
    certified(out, provenance("oop-assoc-to-dendriform", t, md))
}

/// `u ∗ v = l(T(u))v − r(T(u))v`.
pub fn oop_assoc_to_prelie(md: &HomModule, t: &Matrix) -> Result<FunctorResult> {
    let (l, r) = assoc_parts(md, t)?;
    let prod = product_from(md.mdim(), |u, v| {
        let tu = t.apply(u);
        vector::sub(&l.eval(&tu, v), &r.eval(&tu, v))
    });
    let out = HomAlgebra::with_product(Kind::HomPreLie, MUL, prod, md.beta().clone())?;
    certified(out, provenance("oop-assoc-to-prelie", t, md))
}

/// `u ▷ v = l(T(u))v` and `u ◁ v = r(T(v))u`.
pub fn oop_assoc_to_ldendriform(md: &HomModule, t: &Matrix) -> Result<FunctorResult> {
    let (l, r) = assoc_parts(md, t)?;
    let m = md.mdim();
    let tright = product_from(m, |u, v| l.eval(&t.apply(u), v));
    let tleft = product_from(m, |u, v| r.eval(&t.apply(v), u));
    let out = HomAlgebra::with_products(
        Kind::HomLDendriform,
        (TLEFT, tleft),
        (TRIGHT, tright),
        md.beta().clone(),
    )?;
    certified(out, provenance("oop-assoc-to-ldendriform", t, md))
}

/// The same pair of products certified against two axiom systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualResult {
    /// `◁` as `⊣` and `▷` as `⊢`.
    pub dendriform: FunctorResult,
    pub l_dendriform: FunctorResult,
}

/// `u ◁ v = l(T(u))v` and `u ▷ v = −r(T(u))v` from a preLie bimodule,
/// certified both as a dendriform and as an L-dendriform algebra.
pub fn oop_prelie_to_dendriform(md: &HomModule, t: &Matrix) -> Result<DualResult> {
    require_oop(t, md, &[ModuleKind::PreLieBimodule])?;
    let (l, r) = (md.action_tensor(L)?, md.action_tensor(R)?);
    let m = md.mdim();
    let tl = product_from(m, |u, v| l.eval(&t.apply(u), v));
    let tr = product_from(m, |u, v| vector::neg(&r.eval(&t.apply(u), v)));
    let beta = md.beta().clone();
    let dend = HomAlgebra::with_products(
        Kind::HomDendriform,
        (LEFT, tl.clone()),
        (RIGHT, tr.clone()),
        beta.clone(),
    )?;
    let ldend = HomAlgebra::with_products(Kind::HomLDendriform, (TLEFT, tl), (TRIGHT, tr), beta)?;
    let prov = provenance("oop-prelie-to-dendriform", t, md);
    Ok(DualResult {
        dendriform: certified(dend, prov.clone())?,
        l_dendriform: certified(ldend, prov)?,
    })
}

impl DualResult {
    /// `(dendriform passed, L-dendriform passed)`.
    pub fn outcome(&self) -> (bool, bool) {
        (self.dendriform.passed(), self.l_dendriform.passed())
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::homcore::BRACKET;
    use crate::hommod::regular_module;
    use crate::search::catalog::{affine_lie, catalog, unit_like};
    use crate::search::oop::{brute_force_oop_search, DEFAULT_OOP_BUDGET};

    fn rb() -> Matrix {
        Matrix::from_i64(&[&[0, 0], &[1, 0]])
    }

    #[test]
    fn zero_operator_gives_zero_products() {
        for e in catalog(Kind::HomAssociative) {
            let n = e.algebra.dim();
            let md = regular_module(Arc::new(e.algebra)).unwrap();
            let z = Matrix::zeros(n, n);
            for out in [
                oop_assoc_to_dendriform(&md, &z).unwrap(),
                oop_assoc_to_prelie(&md, &z).unwrap(),
                oop_assoc_to_ldendriform(&md, &z).unwrap(),
            ] {
                assert!(out.passed());
                assert!(out.value.ops().values().all(Tensor3::is_zero));
            }
        }
    }

    #[test]
    fn unit_like_rota_baxter_dendriform() {
        let md = regular_module(Arc::new(unit_like())).unwrap();
        let out = oop_assoc_to_dendriform(&md, &rb()).unwrap();
        assert!(out.passed());
        let e1 = vector::unit(2, 0);
        assert_eq!(out.value.product(LEFT, &e1, &e1).unwrap(), vector::unit(2, 1));
        // ⊣ + ⊢ = x·R(y) + R(x)·y
        let mul = unit_like().op(MUL).unwrap().clone();
        let id = Matrix::identity(2);
        let total = mul
            .pre_compose(&id, &rb())
            .unwrap()
            .add(&mul.pre_compose(&rb(), &id).unwrap())
            .unwrap();
        assert_eq!(
            out.value.op(LEFT).unwrap().add(out.value.op(RIGHT).unwrap()).unwrap(),
            total
        );
        assert!(oop_assoc_to_prelie(&md, &rb()).unwrap().passed());
        assert!(oop_assoc_to_ldendriform(&md, &rb()).unwrap().passed());
    }

    #[test]
    fn commutative_adjoint_gives_zero_prelie() {
        let md = regular_module(Arc::new(unit_like())).unwrap();
        assert!(oop_assoc_to_prelie(&md, &rb())
            .unwrap()
            .value
            .op(MUL)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn lie_adjoint_with_rota_baxter_gives_bracket_of_r() {
        let l = affine_lie(Matrix::identity(2));
        let md = regular_module(Arc::new(l.clone())).unwrap();
        let found = brute_force_oop_search(&md, 1, DEFAULT_OOP_BUDGET).unwrap();
        assert!(found.len() > 1);
        let br = l.op(BRACKET).unwrap();
        for t in found {
            let out = oop_lie_to_prelie(&md, &t).unwrap();
            assert!(out.passed());
            let id = Matrix::identity(2);
            assert_eq!(out.value.op(MUL).unwrap(), &br.pre_compose(&t, &id).unwrap());
        }
    }

    #[test]
    fn non_operator_is_rejected() {
        let md = regular_module(Arc::new(unit_like())).unwrap();
        let t = Matrix::identity(2);
        assert!(matches!(
            oop_assoc_to_dendriform(&md, &t),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn prelie_dual_certification_with_zero_operator() {
        for e in catalog(Kind::HomPreLie) {
            let n = e.algebra.dim();
            let md = regular_module(Arc::new(e.algebra)).unwrap();
            let out = oop_prelie_to_dendriform(&md, &Matrix::zeros(n, n)).unwrap();
            assert_eq!(out.outcome(), (true, true));
        }
    }
}
