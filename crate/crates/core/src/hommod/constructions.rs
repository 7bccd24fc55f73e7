//! Module constructions: regular modules, sums, tensor products and twists.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Tensor3, Vector};
use crate::homcore::axioms::check_predicate;
use crate::homcore::maps::{check_morphism, yau_twist_unchecked};
use crate::homcore::{
    certify, check_axioms, Certified, HomAlgebra, Identity, Kind, Predicate, Provenance, BRACKET, MUL, TLEFT, TRIGHT,
};
use crate::hommod::axioms::check_module_axioms;
use crate::hommod::module::{
    combine_family, family_from, HomModule, ModuleKind, BULLET, DIAMOND, L, LR, LT, R, RHO, RR, RT,
};

/// The commutator `[x, y] = x·y − y·x` of the product `mul`, as a Hom-Lie
/// candidate with the same twist.
pub fn commutator_algebra(a: &HomAlgebra) -> Result<HomAlgebra> {
    let mul = a.op(MUL)?;
    HomAlgebra::with_product(Kind::HomLie, BRACKET, mul.sub(&mul.opposite())?, a.alpha().clone())
}

fn left_family(t: &Tensor3, n: usize) -> Vec<Matrix> {
    family_from(n, |x| t.left_mult(x))
}

fn right_family(t: &Tensor3, n: usize) -> Vec<Matrix> {
    family_from(n, |y| t.right_mult(y))
}

/// The algebra acting on itself by its products, with `β = α`.
///
/// Associative and preLie algebras give `l`, `r` = left and right
/// multiplication; Lie algebras the adjoint representation; post-Lie
/// algebras `⋄`, `•` = left bracket and left product; L-dendriform algebras
/// the left and right multiplications of `◁` and `▷`.
pub fn regular_module(a: Arc<HomAlgebra>) -> Result<HomModule> {
    a.require_products()?;
    let n = a.dim();
    let beta = a.alpha().clone();
    let (kind, actions): (ModuleKind, Vec<(&str, Vec<Matrix>)>) = match a.kind() {
        Kind::HomAssociative => {
            let mul = a.op(MUL)?;
            (
                ModuleKind::AssocBimodule,
                vec![(L, left_family(mul, n)), (R, right_family(mul, n))],
            )
        }
        Kind::HomPreLie => {
            let mul = a.op(MUL)?;
            (
                ModuleKind::PreLieBimodule,
                vec![(L, left_family(mul, n)), (R, right_family(mul, n))],
            )
        }
        Kind::HomLie => (
            ModuleKind::LieRepresentation,
            vec![(RHO, left_family(a.op(BRACKET)?, n))],
        ),
        Kind::HomPostLie => (
            ModuleKind::PostLieModule,
            vec![
                (DIAMOND, left_family(a.op(BRACKET)?, n)),
                (BULLET, left_family(a.op(MUL)?, n)),
            ],
        ),
        Kind::HomLDendriform => {
            let (tl, tr) = (a.op(TLEFT)?, a.op(TRIGHT)?);
            (
                ModuleKind::LDendBimodule,
                vec![
                    (LT, left_family(tl, n)),
                    (RT, right_family(tl, n)),
                    (LR, left_family(tr, n)),
                    (RR, right_family(tr, n)),
                ],
            )
        }
        other => return Err(Error::Unsupported(format!("no regular module for {other} algebras"))),
    };
    HomModule::from_actions(kind, a, beta, actions)
}

fn require_certified(md: &HomModule, what: &str) -> Result<()> {
    let report = check_module_axioms(md)?;
    if report.passed {
        Ok(())
    } else {
        Err(Error::precondition(
            format!("{what} is a certified {}", md.kind()),
            report,
        ))
    }
}

fn require_multiplicative(a: &HomAlgebra) -> Result<()> {
    let report = check_predicate(a, Predicate::Multiplicative)?;
    if report.passed {
        Ok(())
    } else {
        Err(Error::precondition("algebra is multiplicative", report))
    }
}

fn require_kind(md: &HomModule, kind: ModuleKind) -> Result<()> {
    if md.kind() == kind {
        Ok(())
    } else {
        Err(Error::Input(format!("expected a {kind}, found a {}", md.kind())))
    }
}

fn certified_module(md: HomModule, provenance: Provenance) -> Result<Certified<HomModule>> {
    let cert = check_module_axioms(&md)?;
    Ok(Certified {
        value: md,
        cert,
        provenance,
    })
}

/// Certifies both the (new) algebra and the module over it.
fn certified_pair(md: HomModule, provenance: Provenance) -> Result<Certified<HomModule>> {
    let alg = check_axioms(md.algebra())?.prefixed("algebra: ");
    let cert = alg.merge(check_module_axioms(&md)?);
    Ok(Certified {
        value: md,
        cert,
        provenance,
    })
}

/// `(V, l − r, β)` as a module over the commutator Hom-Lie algebra.
pub fn bimodule_to_lie_module(md: &HomModule) -> Result<Certified<HomModule>> {
    require_kind(md, ModuleKind::AssocBimodule)?;
    require_certified(md, "input bimodule")?;
    let lie = Arc::new(commutator_algebra(md.algebra())?);
    let (l, r) = (md.action(L)?, md.action(R)?);
    let diff = l.iter().zip(r).map(|(a, b)| a.sub(b)).collect::<Result<Vec<_>>>()?;
    let out = HomModule::from_actions(ModuleKind::LieModule, lie, md.beta().clone(), [(L, diff)])?;
    certified_module(out, Provenance::new("bimodule-to-lie-module").input(md.digest()))
}

/// `L` as a module over itself with `x ⋄ y = [α^k(x), y]`, `x • y = α^k(x)·y`
/// and `β = α`.
pub fn adjoint_postlie_module(l: Arc<HomAlgebra>, k: u32) -> Result<Certified<HomModule>> {
    if l.kind() != Kind::HomPostLie {
        return Err(Error::Input(format!(
            "expected a hom-postlie algebra, found {}",
            l.kind()
        )));
    }
    l.require_products()?;
    require_multiplicative(&l)?;
    let n = l.dim();
    let ak = l.alpha().pow(k as u64)?;
    let (br, mul) = (l.op(BRACKET)?.clone(), l.op(MUL)?.clone());
    let dia = family_from(n, |x| br.left_mult(&ak.apply(x)));
    let bul = family_from(n, |x| mul.left_mult(&ak.apply(x)));
    let digest = l.digest();
    let beta = l.alpha().clone();
    let md = HomModule::from_actions(ModuleKind::PostLieModule, l, beta, [(DIAMOND, dia), (BULLET, bul)])?;
    certified_module(
        md,
        Provenance::new("adjoint-postlie-module").param("k", k).input(digest),
    )
}

/// Block-diagonal actions and twist on `M₁ ⊕ M₂`.
pub fn direct_sum(m1: &HomModule, m2: &HomModule) -> Result<Certified<HomModule>> {
    if m1.algebra() != m2.algebra() {
        return Err(Error::Input("direct sum of modules over different algebras".into()));
    }
    if m1.kind() != m2.kind() {
        return Err(Error::Input(format!(
            "direct sum of a {} and a {}",
            m1.kind(),
            m2.kind()
        )));
    }
    require_certified(m1, "first summand")?;
    require_certified(m2, "second summand")?;
    let actions: BTreeMap<String, Vec<Matrix>> = m1
        .actions()
        .iter()
        .map(|(name, f1)| {
            let f2 = m2.action(name)?;
            Ok((name.clone(), f1.iter().zip(f2).map(|(a, b)| a.direct_sum(b)).collect()))
        })
        .collect::<Result<_>>()?;
    let md = HomModule::new(
        m1.kind(),
        m1.algebra().clone(),
        m1.beta().direct_sum(m2.beta()),
        actions,
    )?;
    certified_module(md, Provenance::new("direct-sum").input(m1.digest()).input(m2.digest()))
}

/// `M₁ ⊗ M₂` with `x ⋄ (a ⊗ b) = (α^k(x) ⋄₁ a) ⊗ β₂(b) + β₁(a) ⊗ (α^k(x) ⋄₂ b)`,
/// the same for `•`, and twist `β₁ ⊗ β₂`. Basis `fᵢ ⊗ gⱼ` in lexicographic order.
pub fn tensor_product(m1: &HomModule, m2: &HomModule, k: u32) -> Result<Certified<HomModule>> {
    require_kind(m1, ModuleKind::PostLieModule)?;
    require_kind(m2, ModuleKind::PostLieModule)?;
    if m1.algebra() != m2.algebra() {
        return Err(Error::Input("tensor product of modules over different algebras".into()));
    }
    require_multiplicative(m1.algebra())?;
    require_certified(m1, "first factor")?;
    require_certified(m2, "second factor")?;
    let a = m1.algebra();
    let ak = a.alpha().pow(k as u64)?;
    let (b1, b2) = (m1.beta(), m2.beta());
    let mut actions = BTreeMap::new();
    for name in [BULLET, DIAMOND] {
        let (f1, f2) = (m1.action(name)?, m2.action(name)?);
        let family = family_from(a.dim(), |x| {
            let y = ak.apply(x);
            let left = combine_family(f1, m1.mdim(), &y).kron(b2);
            let right = b1.kron(&combine_family(f2, m2.mdim(), &y));
            left.add(&right).expect("same shape")
        });
        actions.insert(name.to_string(), family);
    }
    let md = HomModule::new(ModuleKind::PostLieModule, a.clone(), b1.kron(b2), actions)?;
    certified_module(
        md,
        Provenance::new("tensor-product")
            .param("k", k)
            .input(m1.digest())
            .input(m2.digest()),
    )
}

/// Precompose every action with `g`: `x ↦ action(g(x))`.
fn precompose_actions(md: &HomModule, g: &Matrix) -> BTreeMap<String, Vec<Matrix>> {
    let n = md.algebra().dim();
    md.actions()
        .iter()
        .map(|(name, f)| {
            (
                name.clone(),
                family_from(n, |x| combine_family(f, md.mdim(), &g.apply(x))),
            )
        })
        .collect()
}

/// `⋄^{n,0} = ⋄ ∘ (α^n ⊗ Id)` and likewise for `•`, over the same algebra.
pub fn twist_n0(md: &HomModule, n: u32) -> Result<Certified<HomModule>> {
    require_kind(md, ModuleKind::PostLieModule)?;
    require_multiplicative(md.algebra())?;
    require_certified(md, "input module")?;
    let an = md.algebra().alpha().pow(n as u64)?;
    let out = HomModule::new(
        md.kind(),
        md.algebra().clone(),
        md.beta().clone(),
        precompose_actions(md, &an),
    )?;
    certified_module(out, Provenance::new("twist-n0").param("n", n).input(md.digest()))
}

pub(crate) fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn power_of_two_minus_one(k: u32) -> Result<u64> {
    1u64.checked_shl(k)
        .filter(|_| k < 63)
        .map(|p| p - 1)
        .ok_or_else(|| Error::Input(format!("twist exponent k = {k} is too large")))
}

/// Twists the algebra to `(L, α^{2^k−1}∘[·,·], α^{2^k−1}∘·, α^{2^k})` and the
/// module to `α_M^{2^k−1}∘⋄`, `α_M^{2^k−1}∘•` with twist `α_M^{2^k}`.
pub fn twist_0k(md: &HomModule, k: u32) -> Result<Certified<HomModule>> {
    require_kind(md, ModuleKind::PostLieModule)?;
    require_multiplicative(md.algebra())?;
    require_certified(md, "input module")?;
    let e = power_of_two_minus_one(k)?;
    let g = md.algebra().alpha().pow(e)?;
    let gm = md.beta().pow(e)?;
    let algebra = Arc::new(yau_twist_unchecked(md.algebra(), &g)?);
    let actions = md
        .actions()
        .iter()
        .map(|(name, f)| (name.clone(), f.iter().map(|a| gm.mat_mul(a)).collect::<Result<_>>()))
        .map(|(name, f)| f.map(|f| (name, f)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let out = HomModule::new(md.kind(), algebra, gm.mat_mul(md.beta())?, actions)?;
    certified_pair(out, Provenance::new("twist-0k").param("k", k).input(md.digest()))
}

/// `⋄̃ = β_M ∘ ⋄ ∘ (β ⊗ Id)` over `(L, β∘[·,·], β∘·, β∘α)` with module twist
/// `α_M∘β_M`, without checking any hypothesis.
pub fn twist_beta_unchecked(md: &HomModule, b: &Matrix, bm: &Matrix) -> Result<HomModule> {
    let algebra = Arc::new(yau_twist_unchecked(md.algebra(), b)?);
    let actions = precompose_actions(md, b)
        .into_iter()
        .map(|(name, f)| Ok((name, f.iter().map(|a| bm.mat_mul(a)).collect::<Result<_>>()?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    HomModule::new(md.kind(), algebra, md.beta().mat_mul(bm)?, actions)
}

/// `β_M∘⋆(x) = ⋆(b(x))∘β_M` for every action `⋆`.
fn intertwining_identities(md: &HomModule, b: &Matrix, bm: &Matrix) -> Result<Vec<Identity<'static>>> {
    let (n, m) = (md.algebra().dim(), md.mdim());
    let mut ids = Vec::new();
    let (beta, bm1) = (md.beta().clone(), bm.clone());
    ids.push(Identity::new("module-twists-commute", vec![m], move |x| {
        (beta.apply(&bm1.apply(&x[0])), bm1.apply(&beta.apply(&x[0])))
    }));
    for name in md.actions().keys() {
        let act = md.action_tensor(name)?;
        let (b, bm) = (b.clone(), bm.clone());
        ids.push(Identity::new(format!("intertwines:{name}"), vec![n, m], move |x| {
            let (y, v): (&Vector, &Vector) = (&x[0], &x[1]);
            (bm.apply(&act.eval(y, v)), act.eval(&b.apply(y), &bm.apply(v)))
        }));
    }
    Ok(ids)
}

/// The twist by an algebra endomorphism `b` and module map `bm`. Checks
/// that `b` is an endomorphism, that `bm` commutes with `β`, and that
/// `bm ∘ ⋆(x) = ⋆(b(x)) ∘ bm` for every action.
pub fn twist_beta(md: &HomModule, b: &Matrix, bm: &Matrix) -> Result<Certified<HomModule>> {
    require_kind(md, ModuleKind::PostLieModule)?;
    let a = md.algebra();
    let (n, m) = (a.dim(), md.mdim());
    if (b.rows(), b.cols()) != (n, n) || (bm.rows(), bm.cols()) != (m, m) {
        return Err(Error::dim(
            "twist_beta",
            format!("{n}x{n} and {m}x{m}"),
            format!("{}x{} and {}x{}", b.rows(), b.cols(), bm.rows(), bm.cols()),
        ));
    }
    require_certified(md, "input module")?;
    let endo = check_morphism(b, a, a)?;
    if !endo.passed {
        return Err(Error::precondition("b is an algebra endomorphism", endo));
    }
    let compat = certify(&intertwining_identities(md, b, bm)?);
    if !compat.passed {
        let name = compat.first_failure().map(|f| f.name.clone()).unwrap_or_default();
        return Err(Error::precondition(name, compat));
    }
    let out = twist_beta_unchecked(md, b, bm)?;
    certified_pair(
        out,
        Provenance::new("twist-beta")
            .param("b", matrix_text(b))
            .param("bm", matrix_text(bm))
            .input(md.digest()),
    )
}
