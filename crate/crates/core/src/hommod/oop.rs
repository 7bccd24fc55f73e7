use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix};
use crate::homcore::{certify, CertReport, Identity, BRACKET, MUL};
use crate::hommod::module::{HomModule, ModuleKind, L, R, RHO};

/// The identities making `t : M → A` an O-operator for `md`, plus
/// `α∘T = T∘β` (required for every kind).
///
/// Lie kinds: `[T(u), T(v)] = T(ρ(T(u))v − ρ(T(v))u)`. Associative and
/// preLie bimodules: `T(u)·T(v) = T(l(T(u))v + r(T(v))u)`.
pub fn oop_identities(t: &Matrix, md: &HomModule) -> Result<Vec<Identity<'static>>> {
    let a = md.algebra();
    let (n, m) = (a.dim(), md.mdim());
    if t.rows() != n || t.cols() != m {
        return Err(Error::dim(
            "check_oop",
            format!("{n}x{m}"),
            format!("{}x{}", t.rows(), t.cols()),
        ));
    }
    if a.kind() != md.kind().algebra_kind() {
        return Err(Error::Input(format!("{} over a {} algebra", md.kind(), a.kind())));
    }
    let mut ids = Vec::new();
    match md.kind() {
        ModuleKind::LieRepresentation | ModuleKind::LieModule => {
            let name = if md.kind() == ModuleKind::LieModule { L } else { RHO };
            let (br, rho, tm) = (a.op(BRACKET)?.clone(), md.action_tensor(name)?, t.clone());
            ids.push(Identity::new("o-operator", vec![m, m], move |x| {
                let (u, v) = (&x[0], &x[1]);
                let (tu, tv) = (tm.apply(u), tm.apply(v));
                let inner = vector::sub(&rho.eval(&tu, v), &rho.eval(&tv, u));
                (br.eval(&tu, &tv), tm.apply(&inner))
            }));
        }
        ModuleKind::AssocBimodule | ModuleKind::PreLieBimodule => {
            let (mul, l, r, tm) = (
                a.op(MUL)?.clone(),
                md.action_tensor(L)?,
                md.action_tensor(R)?,
                t.clone(),
            );
            ids.push(Identity::new("o-operator", vec![m, m], move |x| {
                let (u, v) = (&x[0], &x[1]);
                let (tu, tv) = (tm.apply(u), tm.apply(v));
                let inner = vector::add(&l.eval(&tu, v), &r.eval(&tv, u));
                (mul.eval(&tu, &tv), tm.apply(&inner))
            }));
        }
        other => return Err(Error::Unsupported(format!("O-operators for {other}"))),
    }
    let (alpha, beta, tm) = (a.alpha().clone(), md.beta().clone(), t.clone());
    ids.push(Identity::new("twist-intertwining", vec![m], move |x| {
        (alpha.apply(&tm.apply(&x[0])), tm.apply(&beta.apply(&x[0])))
    }));
    Ok(ids)
}

pub fn check_oop(t: &Matrix, md: &HomModule) -> Result<CertReport> {
    Ok(certify(&oop_identities(t, md)?))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::homcore::Kind;
    use crate::hommod::constructions::regular_module;
    use crate::search::catalog::{catalog, unit_like};

    #[test]
    fn zero_operator_passes_for_every_supported_kind() {
        for kind in [Kind::HomAssociative, Kind::HomLie, Kind::HomPreLie] {
            for e in catalog(kind) {
                let n = e.algebra.dim();
                let md = regular_module(Arc::new(e.algebra)).unwrap();
                assert!(check_oop(&Matrix::zeros(n, n), &md).unwrap().passed);
            }
        }
    }

    #[test]
    fn unit_like_rota_baxter_operator_is_an_o_operator() {
        let md = regular_module(Arc::new(unit_like())).unwrap();
        let t = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(check_oop(&t, &md).unwrap().passed);
        let not = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(!check_oop(&not, &md).unwrap().passed);
    }

    #[test]
    fn shape_is_checked() {
        let md = regular_module(Arc::new(unit_like())).unwrap();
        assert!(matches!(
            check_oop(&Matrix::zeros(2, 3), &md),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn twist_intertwining_is_required() {
        let md = regular_module(Arc::new(unit_like())).unwrap();
        let twisted = HomModule::new(
            md.kind(),
            md.algebra().clone(),
            Matrix::from_i64(&[&[2, 0], &[0, 1]]),
            md.actions().clone(),
        )
        .unwrap();
        let report = certify(&oop_identities(&Matrix::from_i64(&[&[0, 0], &[1, 0]]), &twisted).unwrap());
        assert!(!report.axiom("twist-intertwining").unwrap().passed);
    }

    #[test]
    fn postlie_modules_are_unsupported() {
        let e = catalog(Kind::HomPostLie).swap_remove(0);
        let n = e.algebra.dim();
        let md = regular_module(Arc::new(e.algebra)).unwrap();
        assert!(matches!(
            check_oop(&Matrix::zeros(n, n), &md),
            Err(Error::Unsupported(_))
        ));
    }
}
