//! Axiom systems for modules, bimodules and representations.
//!
//! Every identity takes two algebra arguments `x, y` and one module
//! argument `v` and compares vectors in `M`.

use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Tensor3, Vector};
use crate::homcore::{certify, CertReport, Identity, BRACKET, MUL, TLEFT, TRIGHT};
use crate::hommod::module::{HomModule, ModuleKind, BULLET, DIAMOND, L, LR, LT, R, RHO, RR, RT};

/// Switches for the literal printed forms of two axioms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ModuleCheckOptions {
    /// Post-Lie modules: require `β` to commute with every action matrix
    /// instead of the twisted equivariance `β(x⋄v) = α(x)⋄β(v)`.
    pub literal_commuting: bool,
    /// PreLie bimodules: use `l(α(x))l(x)` on the right of the first axiom,
    /// as literally printed, instead of `l(α(y))l(x)`.
    pub literal_prelie_first: bool,
}

/// Shared data for building module identities.
#[derive(Clone)]
struct Ctx {
    n: usize,
    m: usize,
    alpha: Matrix,
    beta: Matrix,
}

impl Ctx {
    fn dims3(&self) -> Vec<usize> {
        vec![self.n, self.n, self.m]
    }
}

fn sum(m: usize, terms: &[(i64, &Vector)]) -> Vector {
    vector::combine(m, terms.iter().copied())
}

/// `β(x ⋆ v) = α(x) ⋆ β(v)`.
fn equivariance(name: &str, c: &Ctx, act: Tensor3) -> Identity<'static> {
    let c = c.clone();
    Identity::new(name, vec![c.n, c.m], move |a| {
        let (x, v) = (&a[0], &a[1]);
        (
            c.beta.apply(&act.eval(x, v)),
            act.eval(&c.alpha.apply(x), &c.beta.apply(v)),
        )
    })
}

/// `β(x ⋆ v) = x ⋆ β(v)`.
fn commuting(name: &str, c: &Ctx, act: Tensor3) -> Identity<'static> {
    let c = c.clone();
    Identity::new(name, vec![c.n, c.m], move |a| {
        let (x, v) = (&a[0], &a[1]);
        (c.beta.apply(&act.eval(x, v)), act.eval(x, &c.beta.apply(v)))
    })
}

/// `ρ([x, y])β = ρ(α(x))ρ(y) − ρ(α(y))ρ(x)` for a bracket `br`.
fn bracket_rep(name: &str, c: &Ctx, br: Tensor3, rho: Tensor3) -> Identity<'static> {
    let c = c.clone();
    Identity::new(name, c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let lhs = rho.eval(&br.eval(x, y), &c.beta.apply(v));
        let t1 = rho.eval(&c.alpha.apply(x), &rho.eval(y, v));
        let t2 = rho.eval(&c.alpha.apply(y), &rho.eval(x, v));
        (lhs, vector::sub(&t1, &t2))
    })
}

fn assoc_bimodule(c: &Ctx, mul: Tensor3, l: Tensor3, r: Tensor3) -> Vec<Identity<'static>> {
    let (c1, mul1, l1) = (c.clone(), mul.clone(), l.clone());
    let left = Identity::new("bimodule-left", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let lhs = l1.eval(&mul1.eval(x, y), &c1.beta.apply(v));
        (lhs, l1.eval(&c1.alpha.apply(x), &l1.eval(y, v)))
    });
    let (c2, l2, r2) = (c.clone(), l.clone(), r.clone());
    let middle = Identity::new("bimodule-middle", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let lhs = r2.eval(&c2.alpha.apply(y), &l2.eval(x, v));
        (lhs, l2.eval(&c2.alpha.apply(x), &r2.eval(y, v)))
    });
    let c3 = c.clone();
    let right = Identity::new("bimodule-right", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let lhs = r.eval(&c3.alpha.apply(y), &r.eval(x, v));
        (lhs, r.eval(&mul.eval(x, y), &c3.beta.apply(v)))
    });
    vec![left, middle, right]
}

fn prelie_bimodule(c: &Ctx, mul: Tensor3, l: Tensor3, r: Tensor3, literal: bool) -> Vec<Identity<'static>> {
    let (c1, mul1, l1) = (c.clone(), mul.clone(), l.clone());
    let first = Identity::new("prelie-bimodule-left", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let bv = c1.beta.apply(v);
        let lhs = vector::sub(
            &l1.eval(&mul1.eval(x, y), &bv),
            &l1.eval(&c1.alpha.apply(x), &l1.eval(y, v)),
        );
        let last = if literal {
            l1.eval(&c1.alpha.apply(x), &l1.eval(x, v))
        } else {
            l1.eval(&c1.alpha.apply(y), &l1.eval(x, v))
        };
        (lhs, vector::sub(&l1.eval(&mul1.eval(y, x), &bv), &last))
    });
    let c2 = c.clone();
    let second = Identity::new("prelie-bimodule-right", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let (ax, ay) = (c2.alpha.apply(x), c2.alpha.apply(y));
        let lhs = vector::sub(&l.eval(&ax, &r.eval(y, v)), &r.eval(&ay, &l.eval(x, v)));
        let rhs = vector::sub(&r.eval(&mul.eval(x, y), &c2.beta.apply(v)), &r.eval(&ay, &r.eval(x, v)));
        (lhs, rhs)
    });
    vec![first, second]
}

fn postlie_module(
    c: &Ctx,
    br: Tensor3,
    mul: Tensor3,
    dia: Tensor3,
    bul: Tensor3,
    literal: bool,
) -> Vec<Identity<'static>> {
    let mut ids = if literal {
        vec![
            commuting("commuting-diamond", c, dia.clone()),
            commuting("commuting-bullet", c, bul.clone()),
        ]
    } else {
        vec![
            equivariance("equivariance-diamond", c, dia.clone()),
            equivariance("equivariance-bullet", c, bul.clone()),
        ]
    };
    ids.push(bracket_rep("module-bracket-diamond", c, br.clone(), dia.clone()));

    let (c3, mul3, dia3, bul3) = (c.clone(), mul.clone(), dia.clone(), bul.clone());
    ids.push(Identity::new("module-product-diamond", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let lhs = dia3.eval(&mul3.eval(x, y), &c3.beta.apply(v));
        let t1 = bul3.eval(&c3.alpha.apply(x), &dia3.eval(y, v));
        let t2 = dia3.eval(&c3.alpha.apply(y), &bul3.eval(x, v));
        (lhs, vector::sub(&t1, &t2))
    }));

    let c4 = c.clone();
    ids.push(Identity::new("module-bracket-bullet", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let bv = c4.beta.apply(v);
        let lhs = bul.eval(&br.eval(x, y), &bv);
        let t1 = bul.eval(&c4.alpha.apply(x), &bul.eval(y, v));
        let t2 = bul.eval(&c4.alpha.apply(y), &bul.eval(x, v));
        let t3 = bul.eval(&mul.eval(x, y), &bv);
        let t4 = bul.eval(&mul.eval(y, x), &bv);
        (lhs, sum(c4.m, &[(1, &t1), (-1, &t2), (-1, &t3), (1, &t4)]))
    }));
    ids
}

/// The five conditions making `A ⊕ M` an L-dendriform algebra, where
/// `(x + m) ▷ (y + n) = x ▷ y + l▷(x)n + r▷(y)m` and likewise for `◁`.
#[allow(clippy::too_many_arguments)]
fn ldend_bimodule(
    c: &Ctx,
    tl: Tensor3,
    tr: Tensor3,
    lt: Tensor3,
    rt: Tensor3,
    lr: Tensor3,
    rr: Tensor3,
) -> Vec<Identity<'static>> {
    let m = c.m;
    // x·y = x▷y + x◁y and x∗y = x▷y − y◁x.
    let dot = {
        let (tl, tr) = (tl.clone(), tr.clone());
        move |x: &Vector, y: &Vector| vector::add(&tr.eval(x, y), &tl.eval(x, y))
    };
    let star = {
        let (tl, tr) = (tl.clone(), tr.clone());
        move |x: &Vector, y: &Vector| vector::sub(&tr.eval(x, y), &tl.eval(y, x))
    };
    let mut ids = Vec::new();

    let (c1, lr1, dot1) = (c.clone(), lr.clone(), dot.clone());
    ids.push(Identity::new("ldend-bimodule-1", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let commutator = vector::sub(&dot1(x, y), &dot1(y, x));
        let lhs = lr1.eval(&commutator, &c1.beta.apply(v));
        let t1 = lr1.eval(&c1.alpha.apply(x), &lr1.eval(y, v));
        let t2 = lr1.eval(&c1.alpha.apply(y), &lr1.eval(x, v));
        (lhs, vector::sub(&t1, &t2))
    }));

    let (c2, tr2, lr2, lt2, rr2, rt2) = (c.clone(), tr.clone(), lr.clone(), lt.clone(), rr.clone(), rt.clone());
    ids.push(Identity::new("ldend-bimodule-2", c.dims3(), move |a| {
        let (x, z, v) = (&a[0], &a[1], &a[2]);
        let az = c2.alpha.apply(z);
        let lhs = rr2.eval(&tr2.eval(x, z), &c2.beta.apply(v));
        let t1 = lr2.eval(&c2.alpha.apply(x), &rr2.eval(z, v));
        let t2 = rr2.eval(&az, &lr2.eval(x, v));
        let t3 = rr2.eval(&az, &lt2.eval(x, v));
        let t4 = rr2.eval(&az, &rt2.eval(x, v));
        let t5 = rr2.eval(&az, &rr2.eval(x, v));
        (lhs, sum(m, &[(1, &t1), (-1, &t2), (-1, &t3), (1, &t4), (1, &t5)]))
    }));

    let (c3, lr3, lt3) = (c.clone(), lr.clone(), lt.clone());
    ids.push(Identity::new("ldend-bimodule-3", c.dims3(), move |a| {
        let (x, y, v) = (&a[0], &a[1], &a[2]);
        let ay = c3.alpha.apply(y);
        let lhs = lt3.eval(&star(x, y), &c3.beta.apply(v));
        let t1 = lr3.eval(&c3.alpha.apply(x), &lt3.eval(y, v));
        let t2 = lt3.eval(&ay, &lr3.eval(x, v));
        let t3 = lt3.eval(&ay, &lt3.eval(x, v));
        (lhs, sum(m, &[(1, &t1), (-1, &t2), (-1, &t3)]))
    }));

    let (c4, lr4, rt4) = (c.clone(), lr.clone(), rt.clone());
    ids.push(Identity::new("ldend-bimodule-4", c.dims3(), move |a| {
        let (x, z, v) = (&a[0], &a[1], &a[2]);
        let az = c4.alpha.apply(z);
        let lhs = rt4.eval(&dot(x, z), &c4.beta.apply(v));
        let t1 = lr4.eval(&c4.alpha.apply(x), &rt4.eval(z, v));
        let t2 = rt4.eval(&az, &lr4.eval(x, v));
        let t3 = rt4.eval(&az, &rt4.eval(x, v));
        (lhs, sum(m, &[(1, &t1), (-1, &t2), (1, &t3)]))
    }));

    let c5 = c.clone();
    ids.push(Identity::new("ldend-bimodule-5", c.dims3(), move |a| {
        let (y, z, v) = (&a[0], &a[1], &a[2]);
        let (ay, az) = (c5.alpha.apply(y), c5.alpha.apply(z));
        let lhs = rr.eval(&tl.eval(y, z), &c5.beta.apply(v));
        let t1 = rt.eval(&az, &rr.eval(y, v));
        let t2 = lt.eval(&ay, &rr.eval(z, v));
        let t3 = lt.eval(&ay, &rt.eval(z, v));
        let t4 = rt.eval(&az, &lt.eval(y, v));
        (lhs, sum(m, &[(1, &t1), (1, &t2), (1, &t3), (-1, &t4)]))
    }));
    ids
}

/// The identities certifying `md` as a member of its kind.
pub fn module_identities(md: &HomModule, opts: ModuleCheckOptions) -> Result<Vec<Identity<'static>>> {
    let a = md.algebra();
    let expected = md.kind().algebra_kind();
    if a.kind() != expected {
        return Err(Error::Input(format!(
            "{} requires a {expected} algebra, found {}",
            md.kind(),
            a.kind()
        )));
    }
    a.require_products()?;
    let c = Ctx {
        n: a.dim(),
        m: md.mdim(),
        alpha: a.alpha().clone(),
        beta: md.beta().clone(),
    };
    let op = |name: &str| a.op(name).cloned();
    let act = |name: &str| md.action_tensor(name);
    Ok(match md.kind() {
        ModuleKind::AssocBimodule => assoc_bimodule(&c, op(MUL)?, act(L)?, act(R)?),
        ModuleKind::LieModule => vec![
            equivariance("equivariance", &c, act(L)?),
            bracket_rep("module-bracket", &c, op(BRACKET)?, act(L)?),
        ],
        ModuleKind::LieRepresentation => {
            vec![bracket_rep("representation", &c, op(BRACKET)?, act(RHO)?)]
        }
        ModuleKind::PreLieBimodule => prelie_bimodule(&c, op(MUL)?, act(L)?, act(R)?, opts.literal_prelie_first),
        ModuleKind::PostLieModule => postlie_module(
            &c,
            op(BRACKET)?,
            op(MUL)?,
            act(DIAMOND)?,
            act(BULLET)?,
            opts.literal_commuting,
        ),
        ModuleKind::LDendBimodule => {
            ldend_bimodule(&c, op(TLEFT)?, op(TRIGHT)?, act(LT)?, act(RT)?, act(LR)?, act(RR)?)
        }
    })
}

pub fn check_module_axioms(md: &HomModule) -> Result<CertReport> {
    check_module_axioms_with(md, ModuleCheckOptions::default())
}

pub fn check_module_axioms_with(md: &HomModule, opts: ModuleCheckOptions) -> Result<CertReport> {
    Ok(certify(&module_identities(md, opts)?))
}
