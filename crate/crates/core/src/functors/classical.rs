//! Constructions between algebras that need no module: commutators, the
//! Novikov-to-post-Lie bridge, scaling and the Rota-Baxter splitting.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational};
use crate::functors::common::{certified, require_certified, require_kind, require_report, FunctorResult};
use crate::homcore::{
    check_predicate, check_rota_baxter, Certified, HomAlgebra, Kind, Predicate, Provenance, BRACKET, LEFT, MUL, RIGHT,
};
use crate::hommod::{check_module_axioms, commutator_algebra, regular_module, HomModule};

/// `[x, y] = x·y − y·x` on a Hom-associative algebra.
pub fn commutator_lie(a: &HomAlgebra) -> Result<FunctorResult> {
    require_certified(a, Kind::HomAssociative)?;
    certified(
        commutator_algebra(a)?,
        Provenance::new("commutator-lie").input(a.digest()),
    )
}

/// `[x, y] = x·y − y·x` on a Hom-preLie algebra.
pub fn prelie_to_lie(a: &HomAlgebra) -> Result<FunctorResult> {
    require_certified(a, Kind::HomPreLie)?;
    certified(
        commutator_algebra(a)?,
        Provenance::new("prelie-to-lie").input(a.digest()),
    )
}

/// A left-commutative Hom-Novikov algebra as a Hom-post-Lie algebra with
/// the commutator bracket and the original product.
pub fn novikov_to_postlie(a: &HomAlgebra) -> Result<FunctorResult> {
    require_certified(a, Kind::HomNovikov)?;
    require_report(
        "input is left-commutative",
        check_predicate(a, Predicate::LeftCommutative)?,
    )?;
    let mul = a.op(MUL)?.clone();
    let br = mul.sub(&mul.opposite())?;
    let out = HomAlgebra::with_products(Kind::HomPostLie, (BRACKET, br), (MUL, mul), a.alpha().clone())?;
    certified(out, Provenance::new("novikov-to-postlie").input(a.digest()))
}

/// `[·,·]_k = k[·,·]` and `·_k = k·` on a Hom-post-Lie algebra, `k ≠ 0`.
pub fn scale(l: &HomAlgebra, k: &Rational) -> Result<FunctorResult> {
    if k.is_zero() {
        return Err(Error::Input("scale factor must be nonzero".into()));
    }
    require_certified(l, Kind::HomPostLie)?;
    let ops = l.ops().iter().map(|(name, t)| (name.clone(), t.scale(k))).collect();
    let out = HomAlgebra::new(l.kind(), l.dim(), ops, l.alpha().clone())?;
    certified(out, Provenance::new("scale").param("k", k).input(l.digest()))
}

/// `x ⊣ y = x·R(y) − x·y` and `x ⊢ y = R(x)·y + x·y`.
///
/// Requires `R` to be a Rota-Baxter operator of the given weight that
/// commutes with `α`. The output is certified, not assumed to be dendriform.
pub fn rb_dendriform(a: &HomAlgebra, r: &Matrix, weight: &Rational) -> Result<FunctorResult> {
    require_certified(a, Kind::HomAssociative)?;
    let rb = check_rota_baxter(a, r, weight)?;
    require_report(&format!("R is a Rota-Baxter operator of weight {weight}"), rb.cert)?;
    if !rb.commutes_with_twist {
        return Err(Error::precondition_msg("R commutes with the twisting map"));
    }
    let mul = a.op(MUL)?;
    let id = Matrix::identity(a.dim());
    let left = mul.pre_compose(&id, r)?.sub(mul)?;
    let right = mul.pre_compose(r, &id)?.add(mul)?;
    let out = HomAlgebra::with_products(Kind::HomDendriform, (LEFT, left), (RIGHT, right), a.alpha().clone())?;
    certified(
        out,
        Provenance::new("rb-dendriform")
            .param("weight", weight)
            .param("r", crate::hommod::constructions::matrix_text(r))
            .input(a.digest()),
    )
}

/// The regular bimodule `(A, l_·, r_·, α)` of a Hom-associative or
/// Hom-preLie algebra, certified for the matching bimodule kind.
pub fn adjoint_bimodule(a: Arc<HomAlgebra>) -> Result<Certified<HomModule>> {
    if !matches!(a.kind(), Kind::HomAssociative | Kind::HomPreLie) {
        require_kind(&a, Kind::HomAssociative)?;
    }
    let digest = a.digest();
    let md = regular_module(a)?;
    let cert = check_module_axioms(&md)?;
    Ok(Certified {
        value: md,
        cert,
        provenance: Provenance::new("adjoint-bimodule").input(digest),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rational::q, vector, Tensor3};
    use crate::search::catalog::{catalog, unit_like};

    #[test]
    fn unit_like_commutator_is_zero() {
        let out = commutator_lie(&unit_like()).unwrap();
        assert!(out.passed());
        assert!(out.value.op(BRACKET).unwrap().is_zero());
    }

    #[test]
    fn associative_catalog_is_lie_admissible() {
        for e in catalog(Kind::HomAssociative) {
            assert!(check_predicate(&e.algebra, Predicate::LieAdmissible).unwrap().passed);
            let a = commutator_lie(&e.algebra).unwrap();
            let p = prelie_to_lie(&e.algebra.relabel(Kind::HomPreLie)).unwrap();
            assert!(a.passed() && p.passed());
            assert_eq!(a.value.op(BRACKET).unwrap(), p.value.op(BRACKET).unwrap());
        }
    }

    #[test]
    fn wrong_kind_is_an_input_error() {
        let a = unit_like().relabel(Kind::HomPreLie);
        assert!(matches!(commutator_lie(&a), Err(Error::Input(_))));
    }

    #[test]
    fn uncertified_input_is_a_precondition_error() {
        let a = HomAlgebra::with_product(
            Kind::HomAssociative,
            MUL,
            Tensor3::from_terms(2, &[(0, 0, 1, 1), (1, 0, 0, 1)]),
            Matrix::identity(2),
        )
        .unwrap();
        assert!(matches!(commutator_lie(&a), Err(Error::Precondition { .. })));
    }

    #[test]
    fn novikov_catalog_gives_postlie() {
        for e in catalog(Kind::HomNovikov) {
            let out = novikov_to_postlie(&e.algebra).unwrap();
            assert!(out.passed(), "{}", e.name);
        }
    }

    #[test]
    fn commutative_novikov_gives_zero_bracket() {
        let a = unit_like().relabel(Kind::HomNovikov);
        let out = novikov_to_postlie(&a).unwrap();
        assert!(out.value.op(BRACKET).unwrap().is_zero());
    }

    #[test]
    fn scaling_preserves_postlie() {
        for e in catalog(Kind::HomPostLie) {
            for k in [q(1), q(-1), Rational::new(1, 2)] {
                let out = scale(&e.algebra, &k).unwrap();
                assert!(out.passed(), "{} k={k}", e.name);
                if k.is_one() {
                    assert_eq!(out.value, e.algebra);
                }
            }
        }
        let e = catalog(Kind::HomPostLie).swap_remove(0);
        assert!(matches!(scale(&e.algebra, &q(0)), Err(Error::Input(_))));
    }

    #[test]
    fn rb_dendriform_on_unit_like() {
        let r = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let out = rb_dendriform(&unit_like(), &r, &q(0)).unwrap();
        let e1 = vector::unit(2, 0);
        // x⊣y = x·R(y) − x·y, so e₁⊣e₁ = e₂ − e₁
        assert_eq!(out.value.product(LEFT, &e1, &e1).unwrap(), vector::from_i64(&[-1, 1]));
        assert_eq!(out.provenance.params["weight"], "0");
    }

    #[test]
    fn rb_dendriform_zero_operator_formula() {
        let a = unit_like();
        let out = rb_dendriform(&a, &Matrix::zeros(2, 2), &q(0)).unwrap();
        let mul = a.op(MUL).unwrap();
        assert_eq!(out.value.op(LEFT).unwrap(), &mul.scale(&q(-1)));
        assert_eq!(out.value.op(RIGHT).unwrap(), mul);
    }

    #[test]
    fn rb_dendriform_requires_a_rota_baxter_operator() {
        let r = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(matches!(
            rb_dendriform(&unit_like(), &r, &q(0)),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn adjoint_bimodules_certify() {
        for kind in [Kind::HomAssociative, Kind::HomPreLie] {
            for e in catalog(kind) {
                assert!(adjoint_bimodule(Arc::new(e.algebra)).unwrap().passed());
            }
        }
        let lie = catalog(Kind::HomLie).swap_remove(0);
        assert!(adjoint_bimodule(Arc::new(lie.algebra)).is_err());
    }
}
