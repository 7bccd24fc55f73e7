//! Linear maps between and on Hom-algebras: morphisms, Rota-Baxter
//! operators and Yau twists.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Rational};
use crate::homcore::algebra::HomAlgebra;
use crate::homcore::axioms::main_product;
use crate::homcore::cert::{certify, CertReport, Identity};

/// Checks `f∘α = α'∘f` and `f(x∘y) = f(x)∘'f(y)` for every named product.
pub fn check_morphism(f: &Matrix, a: &HomAlgebra, b: &HomAlgebra) -> Result<CertReport> {
    if a.kind() != b.kind() {
        return Err(Error::Input(format!(
            "morphism between different kinds: {} -> {}",
            a.kind(),
            b.kind()
        )));
    }
    if f.rows() != b.dim() || f.cols() != a.dim() {
        return Err(Error::dim(
            "check_morphism",
            format!("{}x{}", b.dim(), a.dim()),
            format!("{}x{}", f.rows(), f.cols()),
        ));
    }
    if a.ops().keys().ne(b.ops().keys()) {
        return Err(Error::Input("morphism between algebras with different products".into()));
    }
    let mut ids = Vec::new();
    let (fa, aa, ab) = (f.clone(), a.alpha().clone(), b.alpha().clone());
    ids.push(Identity::new("twist-compatibility", vec![a.dim()], move |x| {
        (fa.apply(&aa.apply(&x[0])), ab.apply(&fa.apply(&x[0])))
    }));
    for (name, ta) in a.ops() {
        let tb = b.op(name)?.clone();
        let (ta, fm) = (ta.clone(), f.clone());
        ids.push(Identity::new(format!("preserves:{name}"), vec![a.dim(); 2], move |x| {
            (
                fm.apply(&ta.eval(&x[0], &x[1])),
                tb.eval(&fm.apply(&x[0]), &fm.apply(&x[1])),
            )
        }));
    }
    Ok(certify(&ids))
}

/// Result of [`check_rota_baxter`]: the identity itself, plus whether the
/// operator commutes with the twist (which downstream constructions need).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterReport {
    pub cert: CertReport,
    pub commutes_with_twist: bool,
}

/// `R(x)·R(y) = R(R(x)·y + x·R(y) + λ x·y)` on all basis pairs. Uses the
/// product `mul`, or `bracket` for Lie-type algebras.
pub fn check_rota_baxter(a: &HomAlgebra, r: &Matrix, weight: &Rational) -> Result<RotaBaxterReport> {
    let n = a.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::dim(
            "check_rota_baxter",
            format!("{n}x{n}"),
            format!("{}x{}", r.rows(), r.cols()),
        ));
    }
    let mul = main_product(a)?.clone();
    let (rm, w) = (r.clone(), weight.clone());
    let id = Identity::new("rota-baxter", vec![n; 2], move |x| {
        let (u, v) = (&x[0], &x[1]);
        let (ru, rv) = (rm.apply(u), rm.apply(v));
        let lhs = mul.eval(&ru, &rv);
        let mut inner = vector::add(&mul.eval(&ru, v), &mul.eval(u, &rv));
        if !w.is_zero() {
            vector::add_assign(&mut inner, &vector::scale(&mul.eval(u, v), &w));
        }
        (lhs, rm.apply(&inner))
    });
    Ok(RotaBaxterReport {
        cert: certify(&[id]),
        commutes_with_twist: r.commutes_with(a.alpha()),
    })
}

/// Twist every product `μ` into `g∘μ` and the twisting map into `g∘α`.
///
/// Requires `g` to be an endomorphism of `a` (which includes `g∘α = α∘g`);
/// the result then satisfies the same axiom system as `a`.
pub fn yau_twist(a: &HomAlgebra, g: &Matrix) -> Result<HomAlgebra> {
    let report = check_morphism(g, a, a)?;
    if !report.passed {
        return Err(Error::precondition("twisting map is an endomorphism", report));
    }
    yau_twist_unchecked(a, g)
}

pub(crate) fn yau_twist_unchecked(a: &HomAlgebra, g: &Matrix) -> Result<HomAlgebra> {
    let ops: BTreeMap<_, _> = a
        .ops()
        .iter()
        .map(|(k, t)| Ok((k.clone(), t.post_compose(g)?)))
        .collect::<Result<_>>()?;
    HomAlgebra::new(a.kind(), a.dim(), ops, g.mat_mul(a.alpha())?)
}
