//! Axiom systems for every algebra kind, as multilinear identities in the
//! structure constants.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Tensor3, Vector};
use crate::homcore::algebra::{HomAlgebra, Kind, BRACKET, LEFT, MUL, RIGHT, TLEFT, TRIGHT};
use crate::homcore::cert::{certify, CertReport, Identity};

fn sum(n: usize, terms: &[(i64, &Vector)]) -> Vector {
    vector::combine(n, terms.iter().copied())
}

/// `(x·y)·α(z) = α(x)·(y·z)`.
pub fn hom_associativity(name: &str, mul: Tensor3, alpha: Matrix) -> Identity<'static> {
    let n = alpha.rows();
    Identity::new(name, vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let lhs = mul.eval(&mul.eval(x, y), &alpha.apply(z));
        let rhs = mul.eval(&alpha.apply(x), &mul.eval(y, z));
        (lhs, rhs)
    })
}

/// `[x, y] = −[y, x]`.
pub fn skew_symmetry(name: &str, br: Tensor3) -> Identity<'static> {
    let n = br.dims().0;
    Identity::new(name, vec![n; 2], move |a| {
        (br.eval(&a[0], &a[1]), vector::neg(&br.eval(&a[1], &a[0])))
    })
}

/// `[α(x), [y, z]] + [α(y), [z, x]] + [α(z), [x, y]] = 0`.
pub fn hom_jacobi(name: &str, br: Tensor3, alpha: Matrix) -> Identity<'static> {
    let n = alpha.rows();
    Identity::new(name, vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let t1 = br.eval(&alpha.apply(x), &br.eval(y, z));
        let t2 = br.eval(&alpha.apply(y), &br.eval(z, x));
        let t3 = br.eval(&alpha.apply(z), &br.eval(x, y));
        (sum(n, &[(1, &t1), (1, &t2), (1, &t3)]), vector::zeros(n))
    })
}

/// `as(x, y, z) = as(y, x, z)` with `as(x, y, z) = (x·y)·α(z) − α(x)·(y·z)`.
pub fn hom_left_symmetry(name: &str, mul: Tensor3, alpha: Matrix) -> Identity<'static> {
    let n = alpha.rows();
    Identity::new(name, vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let az = alpha.apply(z);
        let lhs = vector::sub(
            &mul.eval(&mul.eval(x, y), &az),
            &mul.eval(&alpha.apply(x), &mul.eval(y, z)),
        );
        let rhs = vector::sub(
            &mul.eval(&mul.eval(y, x), &az),
            &mul.eval(&alpha.apply(y), &mul.eval(x, z)),
        );
        (lhs, rhs)
    })
}

/// `(x·y)·α(z) = (y·x)·α(z)`.
pub fn left_commutativity(name: &str, mul: Tensor3, alpha: Matrix) -> Identity<'static> {
    let n = alpha.rows();
    Identity::new(name, vec![n; 3], move |a| {
        let az = alpha.apply(&a[2]);
        (
            mul.eval(&mul.eval(&a[0], &a[1]), &az),
            mul.eval(&mul.eval(&a[1], &a[0]), &az),
        )
    })
}

/// `(x·y)·α(z) = (x·z)·α(y)`.
pub fn novikov_right_commutativity(name: &str, mul: Tensor3, alpha: Matrix) -> Identity<'static> {
    let n = alpha.rows();
    Identity::new(name, vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        (
            mul.eval(&mul.eval(x, y), &alpha.apply(z)),
            mul.eval(&mul.eval(x, z), &alpha.apply(y)),
        )
    })
}

/// `α(x ∘ y) = α(x) ∘ α(y)`.
pub fn multiplicativity(name: &str, op: Tensor3, alpha: Matrix) -> Identity<'static> {
    let n = alpha.rows();
    Identity::new(name, vec![n; 2], move |a| {
        (
            alpha.apply(&op.eval(&a[0], &a[1])),
            op.eval(&alpha.apply(&a[0]), &alpha.apply(&a[1])),
        )
    })
}

/// The three Hom-dendriform identities for `⊣` (`left`) and `⊢` (`right`).
pub fn dendriform(left: Tensor3, right: Tensor3, alpha: Matrix) -> Vec<Identity<'static>> {
    let n = alpha.rows();
    let (l1, r1, a1) = (left.clone(), right.clone(), alpha.clone());
    let t1 = Identity::new("dendriform-left", vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let lhs = l1.eval(&l1.eval(x, y), &a1.apply(z));
        let inner = vector::add(&l1.eval(y, z), &r1.eval(y, z));
        (lhs, l1.eval(&a1.apply(x), &inner))
    });
    let (l2, r2, a2) = (left.clone(), right.clone(), alpha.clone());
    let t2 = Identity::new("dendriform-middle", vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let lhs = l2.eval(&r2.eval(x, y), &a2.apply(z));
        (lhs, r2.eval(&a2.apply(x), &l2.eval(y, z)))
    });
    let t3 = Identity::new("dendriform-right", vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let lhs = right.eval(&alpha.apply(x), &right.eval(y, z));
        let outer = vector::add(&left.eval(x, y), &right.eval(x, y));
        (lhs, right.eval(&outer, &alpha.apply(z)))
    });
    vec![t1, t2, t3]
}

/// `α(z)·[x, y] = [z·x, α(y)] + [α(x), z·y]`: left multiplications are
/// twisted derivations of the bracket.
pub fn postlie_derivation(br: Tensor3, mul: Tensor3, alpha: Matrix) -> Identity<'static> {
    let n = alpha.rows();
    Identity::new("postlie-derivation", vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let lhs = mul.eval(&alpha.apply(z), &br.eval(x, y));
        let rhs = vector::add(
            &br.eval(&mul.eval(z, x), &alpha.apply(y)),
            &br.eval(&alpha.apply(x), &mul.eval(z, y)),
        );
        (lhs, rhs)
    })
}

/// `α(z)·(y·x) − α(y)·(z·x) + (y·z)·α(x) − (z·y)·α(x) + [y, z]·α(x) = 0`.
pub fn postlie_left_symmetry(br: Tensor3, mul: Tensor3, alpha: Matrix) -> Identity<'static> {
    let n = alpha.rows();
    Identity::new("postlie-left-symmetry", vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let ax = alpha.apply(x);
        let t1 = mul.eval(&alpha.apply(z), &mul.eval(y, x));
        let t2 = mul.eval(&alpha.apply(y), &mul.eval(z, x));
        let t3 = mul.eval(&mul.eval(y, z), &ax);
        let t4 = mul.eval(&mul.eval(z, y), &ax);
        let t5 = mul.eval(&br.eval(y, z), &ax);
        (sum(n, &[(1, &t1), (1, &t3), (1, &t5)]), sum(n, &[(1, &t2), (1, &t4)]))
    })
}

/// The two Hom-L-dendriform identities for `◁` (`tleft`) and `▷` (`tright`).
pub fn l_dendriform(tleft: Tensor3, tright: Tensor3, alpha: Matrix) -> Vec<Identity<'static>> {
    let n = alpha.rows();
    let (lt, rt, al) = (tleft.clone(), tright.clone(), alpha.clone());
    let lhd1 = Identity::new("l-dendriform-1", vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let az = al.apply(z);
        let lhs = rt.eval(&al.apply(x), &rt.eval(y, z));
        let t1 = rt.eval(&rt.eval(x, y), &az);
        let t2 = rt.eval(&lt.eval(x, y), &az);
        let t3 = rt.eval(&al.apply(y), &rt.eval(x, z));
        let t4 = rt.eval(&lt.eval(y, x), &az);
        let t5 = rt.eval(&rt.eval(y, x), &az);
        let rhs = sum(n, &[(1, &t1), (1, &t2), (1, &t3), (-1, &t4), (-1, &t5)]);
        (lhs, rhs)
    });
    let lhd2 = Identity::new("l-dendriform-2", vec![n; 3], move |a| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let az = alpha.apply(z);
        let ay = alpha.apply(y);
        let lhs = tright.eval(&alpha.apply(x), &tleft.eval(y, z));
        let t1 = tleft.eval(&tright.eval(x, y), &az);
        let t2 = tleft.eval(&ay, &tright.eval(x, z));
        let t3 = tleft.eval(&ay, &tleft.eval(x, z));
        let t4 = tleft.eval(&tleft.eval(y, x), &az);
        let rhs = sum(n, &[(1, &t1), (1, &t2), (1, &t3), (-1, &t4)]);
        (lhs, rhs)
    });
    vec![lhd1, lhd2]
}

/// The identities certifying `a` as a member of its kind.
pub fn kind_identities(a: &HomAlgebra) -> Result<Vec<Identity<'static>>> {
    a.require_products()?;
    let alpha = a.alpha().clone();
    let op = |name: &str| a.op(name).cloned();
    Ok(match a.kind() {
        Kind::Generic => Vec::new(),
        Kind::HomAssociative => vec![hom_associativity("hom-associativity", op(MUL)?, alpha)],
        Kind::HomLie => vec![
            skew_symmetry("skew-symmetry", op(BRACKET)?),
            hom_jacobi("hom-jacobi", op(BRACKET)?, alpha),
        ],
        Kind::HomPreLie => vec![hom_left_symmetry("hom-left-symmetry", op(MUL)?, alpha)],
        Kind::HomDendriform => dendriform(op(LEFT)?, op(RIGHT)?, alpha),
        Kind::HomPostLie => vec![
            skew_symmetry("skew-symmetry", op(BRACKET)?),
            hom_jacobi("hom-jacobi", op(BRACKET)?, alpha.clone()),
            postlie_derivation(op(BRACKET)?, op(MUL)?, alpha.clone()),
            postlie_left_symmetry(op(BRACKET)?, op(MUL)?, alpha),
        ],
        Kind::HomLDendriform => l_dendriform(op(TLEFT)?, op(TRIGHT)?, alpha),
        Kind::HomNovikov => vec![
            novikov_right_commutativity("novikov-right-commutativity", op(MUL)?, alpha.clone()),
            hom_left_symmetry("hom-left-symmetry", op(MUL)?, alpha),
        ],
    })
}

/// Certify `a` against the axiom system selected by its kind.
pub fn check_axioms(a: &HomAlgebra) -> Result<CertReport> {
    Ok(certify(&kind_identities(a)?))
}

/// Auxiliary properties that are not part of any kind's axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    LeftCommutative,
    Multiplicative,
    LieAdmissible,
}

impl Predicate {
    pub const ALL: [Predicate; 3] = [
        Predicate::LeftCommutative,
        Predicate::Multiplicative,
        Predicate::LieAdmissible,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Predicate::LeftCommutative => "left-commutative",
            Predicate::Multiplicative => "multiplicative",
            Predicate::LieAdmissible => "lie-admissible",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Input(format!("unknown predicate `{s}`")))
    }
}

/// The single product used by one-product predicates: `mul`, else `bracket`.
pub(crate) fn main_product(a: &HomAlgebra) -> Result<&Tensor3> {
    a.op(MUL).or_else(|_| a.op(BRACKET))
}

pub fn predicate_identities(a: &HomAlgebra, p: Predicate) -> Result<Vec<Identity<'static>>> {
    let alpha = a.alpha().clone();
    Ok(match p {
        Predicate::LeftCommutative => vec![left_commutativity(
            "left-commutativity",
            main_product(a)?.clone(),
            alpha,
        )],
        Predicate::Multiplicative => a
            .ops()
            .iter()
            .map(|(name, t)| multiplicativity(&format!("multiplicative:{name}"), t.clone(), alpha.clone()))
            .collect(),
        Predicate::LieAdmissible => {
            let mul = main_product(a)?;
            let commutator = mul.sub(&mul.opposite())?;
            vec![hom_jacobi("lie-admissibility", commutator, alpha)]
        }
    })
}

pub fn check_predicate(a: &HomAlgebra, p: Predicate) -> Result<CertReport> {
    Ok(certify(&predicate_identities(a, p)?))
}

pub fn is_multiplicative(a: &HomAlgebra) -> bool {
    check_predicate(a, Predicate::Multiplicative)
        .map(|r| r.passed)
        .unwrap_or(false)
}

/// `(x·y)·α(z) − α(x)·(y·z)` for the product named `mul`.
pub fn hom_associator(
    a: &HomAlgebra,
    x: &[crate::exactlin::Rational],
    y: &[crate::exactlin::Rational],
    z: &[crate::exactlin::Rational],
) -> Result<Vector> {
    let mul = a.op(MUL)?;
    let n = a.dim();
    for (v, which) in [(x, "x"), (y, "y"), (z, "z")] {
        if v.len() != n {
            return Err(Error::Dimension {
                op: "hom_associator",
                expected: format!("{n} entries for {which}"),
                found: v.len().to_string(),
            });
        }
    }
    let lhs = mul.eval(&mul.eval(x, y), &a.apply_alpha(z));
    let rhs = mul.eval(&a.apply_alpha(x), &mul.eval(y, z));
    Ok(vector::sub(&lhs, &rhs))
}
