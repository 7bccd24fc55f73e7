//! Small hand-written algebras of every kind, all with `α = Id` unless
//! stated. Each entry certifies against its kind.

use crate::exactlin::{Matrix, Tensor3};
use crate::homcore::{HomAlgebra, Kind, BRACKET, LEFT, MUL, RIGHT, TLEFT, TRIGHT};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: HomAlgebra,
}

type Terms = &'static [(usize, usize, usize, i64)];

/// Skew-symmetric closure of bracket terms given for `i < j`.
fn skew(n: usize, terms: Terms) -> Tensor3 {
    let mut all = Vec::with_capacity(2 * terms.len());
    for &(i, j, k, c) in terms {
        all.push((i, j, k, c));
        all.push((j, i, k, -c));
    }
    Tensor3::from_terms(n, &all)
}

fn one(kind: Kind, name: &str, t: Tensor3, alpha: Matrix) -> HomAlgebra {
    HomAlgebra::with_product(kind, name, t, alpha).expect("catalog shapes")
}

fn two(kind: Kind, a: (&str, Tensor3), b: (&str, Tensor3)) -> HomAlgebra {
    let n = a.1.dims().0;
    HomAlgebra::with_products(kind, a, b, Matrix::identity(n)).expect("catalog shapes")
}

/// `(name, dim, terms)` of associative products.
const ASSOCIATIVE: &[(&str, usize, Terms)] = &[
    ("field", 1, &[(0, 0, 0, 1)]),
    ("unit-like", 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
    ("nilpotent-2", 2, &[(0, 0, 1, 1)]),
    ("product-field", 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]),
    (
        "left-zero",
        2,
        &[(0, 0, 0, 1), (0, 1, 0, 1), (1, 0, 1, 1), (1, 1, 1, 1)],
    ),
    (
        "truncated-3",
        3,
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 1, 2, 1),
        ],
    ),
    (
        "upper-triangular",
        3,
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
    ),
    ("nilpotent-3", 3, &[(0, 0, 1, 1), (0, 1, 2, 1), (1, 0, 2, 1)]),
    (
        "matrix-2",
        4,
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 2, 0, 1),
            (1, 3, 1, 1),
            (2, 0, 2, 1),
            (2, 1, 3, 1),
            (3, 2, 2, 1),
            (3, 3, 3, 1),
        ],
    ),
];

/// Commutative associative entries, which are left-commutative Novikov.
const COMMUTATIVE: &[&str] = &[
    "field",
    "unit-like",
    "nilpotent-2",
    "product-field",
    "truncated-3",
    "nilpotent-3",
];

const LIE: &[(&str, usize, Terms)] = &[
    ("affine", 2, &[(0, 1, 1, 1)]),
    ("heisenberg", 3, &[(0, 1, 2, 1)]),
    ("sl2", 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]),
    ("so3", 3, &[(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)]),
    ("affine-plus-line", 3, &[(0, 1, 1, 1)]),
];

/// Left-symmetric, not associative.
const PRELIE: &[(&str, usize, Terms)] = &[
    ("prelie-a", 2, &[(0, 0, 0, -1), (0, 1, 1, 1)]),
    ("prelie-b", 2, &[(0, 0, 0, -1), (0, 0, 1, -1), (0, 1, 1, -1)]),
    (
        "prelie-c",
        2,
        &[(0, 0, 1, -1), (0, 1, 0, -1), (1, 0, 1, -1), (1, 1, 0, -1)],
    ),
    ("prelie-d", 2, &[(0, 0, 0, -1), (0, 0, 1, 1), (0, 1, 1, 1)]),
];

fn associative_entries(kind: Kind) -> Vec<CatalogEntry> {
    ASSOCIATIVE
        .iter()
        .map(|&(name, n, terms)| CatalogEntry {
            name,
            algebra: one(kind, MUL, Tensor3::from_terms(n, terms), Matrix::identity(n)),
        })
        .collect()
}

fn novikov_entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (1..=3)
        .map(|n| CatalogEntry {
            name: ["zero-1", "zero-2", "zero-3"][n - 1],
            algebra: HomAlgebra::zero(Kind::HomNovikov, Matrix::identity(n)).expect("square"),
        })
        .collect();
    let square = Tensor3::from_terms(2, &[(1, 1, 0, 1)]);
    out.push(CatalogEntry {
        name: "square-to-first",
        algebra: one(Kind::HomNovikov, MUL, square.clone(), Matrix::identity(2)),
    });
    out.push(CatalogEntry {
        name: "square-to-first-twisted",
        algebra: one(Kind::HomNovikov, MUL, square, Matrix::from_i64(&[&[2, 1], &[0, -1]])),
    });
    out.extend(
        associative_entries(Kind::HomNovikov)
            .into_iter()
            .filter(|e| COMMUTATIVE.contains(&e.name)),
    );
    out
}

fn prelie_entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = PRELIE
        .iter()
        .map(|&(name, n, terms)| CatalogEntry {
            name,
            algebra: one(Kind::HomPreLie, MUL, Tensor3::from_terms(n, terms), Matrix::identity(n)),
        })
        .collect();
    out.extend(associative_entries(Kind::HomPreLie));
    out
}

fn lie_entries() -> Vec<CatalogEntry> {
    LIE.iter()
        .map(|&(name, n, terms)| CatalogEntry {
            name,
            algebra: one(Kind::HomLie, BRACKET, skew(n, terms), Matrix::identity(n)),
        })
        .collect()
}

fn commutator(t: &Tensor3) -> Tensor3 {
    t.sub(&t.opposite()).expect("same shape")
}

fn postlie_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for e in lie_entries() {
        let br = e.algebra.op(BRACKET).expect("bracket").clone();
        let n = e.algebra.dim();
        out.push(CatalogEntry {
            name: e.name,
            algebra: two(Kind::HomPostLie, (BRACKET, br.clone()), (MUL, Tensor3::cube(n))),
        });
        // `x·y = −[x, y]`.
        out.push(CatalogEntry {
            name: e.name,
            algebra: two(Kind::HomPostLie, (BRACKET, br.clone()), (MUL, br.opposite())),
        });
    }
    for e in prelie_entries() {
        let mul = e.algebra.op(MUL).expect("mul").clone();
        let n = e.algebra.dim();
        out.push(CatalogEntry {
            name: e.name,
            algebra: two(Kind::HomPostLie, (BRACKET, Tensor3::cube(n)), (MUL, mul)),
        });
    }
    for e in novikov_entries() {
        if e.algebra.alpha().is_identity() {
            let mul = e.algebra.op(MUL).expect("mul").clone();
            out.push(CatalogEntry {
                name: e.name,
                algebra: two(Kind::HomPostLie, (BRACKET, commutator(&mul)), (MUL, mul)),
            });
        }
    }
    out
}

fn dendriform_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for e in associative_entries(Kind::HomDendriform) {
        let mul = e.algebra.op(MUL).expect("mul").clone();
        let zero = Tensor3::cube(e.algebra.dim());
        out.push(CatalogEntry {
            name: e.name,
            algebra: two(Kind::HomDendriform, (LEFT, mul.clone()), (RIGHT, zero.clone())),
        });
        out.push(CatalogEntry {
            name: e.name,
            algebra: two(Kind::HomDendriform, (LEFT, zero), (RIGHT, mul)),
        });
    }
    let square = Tensor3::from_terms(2, &[(0, 0, 1, 1)]);
    out.push(CatalogEntry {
        name: "square-both",
        algebra: two(Kind::HomDendriform, (LEFT, square.clone()), (RIGHT, square)),
    });
    out
}

fn ldendriform_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for e in prelie_entries() {
        let mul = e.algebra.op(MUL).expect("mul").clone();
        let zero = Tensor3::cube(e.algebra.dim());
        out.push(CatalogEntry {
            name: e.name,
            algebra: two(Kind::HomLDendriform, (TLEFT, zero), (TRIGHT, mul)),
        });
    }
    for e in associative_entries(Kind::HomLDendriform) {
        let mul = e.algebra.op(MUL).expect("mul").clone();
        let zero = Tensor3::cube(e.algebra.dim());
        out.push(CatalogEntry {
            name: e.name,
            algebra: two(Kind::HomLDendriform, (TLEFT, mul), (TRIGHT, zero)),
        });
    }
    out
}

/// Every catalog entry of the given kind. `Generic` has none.
pub fn catalog(kind: Kind) -> Vec<CatalogEntry> {
    match kind {
        Kind::Generic => Vec::new(),
        Kind::HomAssociative => associative_entries(kind),
        Kind::HomLie => lie_entries(),
        Kind::HomPreLie => prelie_entries(),
        Kind::HomDendriform => dendriform_entries(),
        Kind::HomPostLie => postlie_entries(),
        Kind::HomLDendriform => ldendriform_entries(),
        Kind::HomNovikov => novikov_entries(),
    }
}

/// The dimension-2 unit-like algebra `e₁e₁ = e₁`, `e₁e₂ = e₂e₁ = e₂`.
pub fn unit_like() -> HomAlgebra {
    associative_entries(Kind::HomAssociative)
        .into_iter()
        .find(|e| e.name == "unit-like")
        .expect("catalog entry")
        .algebra
}

/// `[e₁, e₂] = e₂` with the given twist.
pub fn affine_lie(alpha: Matrix) -> HomAlgebra {
    one(Kind::HomLie, BRACKET, skew(2, &[(0, 1, 1, 1)]), alpha)
}
