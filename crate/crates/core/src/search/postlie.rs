//! Hom-post-Lie products on a fixed Hom-Lie algebra.
//!
//! The derivation identity is linear in the unknown product, so its
//! solutions form a subspace; the left-symmetry identity is quadratic and is
//! imposed by enumerating integer combinations of a basis of that subspace.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Rational, Tensor3, Vector};
use crate::functors::FunctorResult;
use crate::homcore::{check_axioms, Certified, HomAlgebra, Kind, Provenance, BRACKET, MUL};

/// Largest number of candidates [`postlie_search`] enumerates by default.
pub const DEFAULT_SEARCH_BUDGET: u128 = 200_000;

/// Solutions of the linearized derivation identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostLieCandidateSpace {
    pub homlie: Arc<HomAlgebra>,
    pub basis: Vec<Tensor3>,
    pub ambient_dim: usize,
    pub rank: usize,
}

fn require_lie(l: &HomAlgebra) -> Result<()> {
    if l.kind() != Kind::HomLie {
        return Err(Error::Input(format!("expected a hom-lie algebra, found {}", l.kind())));
    }
    let report = check_axioms(l)?;
    if !report.passed {
        return Err(Error::precondition("input is a certified hom-lie algebra", report));
    }
    Ok(())
}

/// `α(z)·[x, y] − [z·x, α(y)] − [α(x), z·y]` for the product `m`.
fn derivation_defect(br: &Tensor3, m: &Tensor3, alpha: &Matrix, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let lhs = m.eval(&alpha.apply(z), &br.eval(x, y));
    let r1 = br.eval(&m.eval(z, x), &alpha.apply(y));
    let r2 = br.eval(&alpha.apply(x), &m.eval(z, y));
    vector::sub(&vector::sub(&lhs, &r1), &r2)
}

/// Coefficient matrix (`n⁴ × n³`) of the derivation identity in the unknown
/// structure constants `m_{ij}^k`, with rows indexed by `(k, i, j, coordinate)`
/// for the identity at `(x, y, z) = (e_i, e_j, e_k)` and columns by `(i, j, k)`.
pub fn postlie_linear_system(l: &HomAlgebra) -> Result<Matrix> {
    require_lie(l)?;
    let n = l.dim();
    let br = l.op(BRACKET)?;
    let alpha = l.alpha();
    let unknowns = n * n * n;
    let units: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
    let columns: Vec<Vector> = (0..unknowns)
        .into_par_iter()
        .map(|u| {
            let mut m = Tensor3::cube(n);
            m.set(u / (n * n), (u / n) % n, u % n, Rational::one());
            let mut col = Vec::with_capacity(n * unknowns);
            for z in &units {
                for x in &units {
                    for y in &units {
                        col.extend(derivation_defect(br, &m, alpha, x, y, z));
                    }
                }
            }
            col
        })
        .collect();
    if unknowns == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_columns(n * unknowns, &columns)
}

pub fn candidate_space(l: &HomAlgebra) -> Result<PostLieCandidateSpace> {
    let system = postlie_linear_system(l)?;
    let n = l.dim();
    let rank = system.rank();
    let basis = system
        .nullspace()
        .into_iter()
        .map(|v| Tensor3::new(n, n, n, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(PostLieCandidateSpace {
        homlie: Arc::new(l.clone()),
        basis,
        ambient_dim: n * n * n,
        rank,
    })
}

/// Left-symmetry with bracket, evaluated directly on basis triples.
fn left_symmetry_holds(br: &Tensor3, m: &Tensor3, alpha: &Matrix) -> bool {
    let n = alpha.rows();
    let units: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
    let images: Vec<Vector> = units.iter().map(|e| alpha.apply(e)).collect();
    for (x, ax) in units.iter().zip(&images) {
        for (y, ay) in units.iter().zip(&images) {
            for (z, az) in units.iter().zip(&images) {
                let mut d = m.eval(az, &m.eval(y, x));
                vector::sub_assign(&mut d, &m.eval(ay, &m.eval(z, x)));
                vector::add_assign(&mut d, &m.eval(&m.eval(y, z), ax));
                vector::sub_assign(&mut d, &m.eval(&m.eval(z, y), ax));
                vector::add_assign(&mut d, &m.eval(&br.eval(y, z), ax));
                if !vector::is_zero(&d) {
                    return false;
                }
            }
        }
    }
    true
}

/// Outcome of a bounded post-Lie search.
#[derive(Clone, Debug)]
pub struct PostLieSearch {
    pub space: PostLieCandidateSpace,
    pub bound: u32,
    pub candidates_tested: usize,
    /// Candidates satisfying both identities, certified, in enumeration order.
    pub survivors: Vec<FunctorResult>,
    /// Products that failed the quadratic filter, in enumeration order.
    pub rejects: Vec<Tensor3>,
}

/// Number of integer points in `[−bound, bound]^d`, or `None` on overflow.
pub(crate) fn box_size(bound: u32, d: usize) -> Option<u128> {
    (2 * bound as u128 + 1).checked_pow(u32::try_from(d).ok()?)
}

/// The `index`-th point of `[−bound, bound]^d` in lexicographic order.
pub(crate) fn box_point(bound: u32, d: usize, mut index: u128) -> Vec<i64> {
    let side = 2 * bound as u128 + 1;
    let mut c = vec![0i64; d];
    for slot in c.iter_mut().rev() {
        *slot = (index % side) as i64 - bound as i64;
        index /= side;
    }
    c
}

/// Enumerate all combinations of the candidate basis with integer
/// coefficients in `[−bound, bound]`, keep those satisfying left-symmetry
/// and certify each survivor as a Hom-post-Lie algebra.
pub fn postlie_search(l: &HomAlgebra, bound: u32, budget: u128) -> Result<PostLieSearch> {
    let space = candidate_space(l)?;
    let d = space.basis.len();
    let total = box_size(bound, d)
        .filter(|&t| t <= budget)
        .ok_or_else(|| Error::Budget {
            what: format!("post-Lie search over a {d}-dimensional candidate space at bound {bound}"),
            needed: box_size(bound, d).map_or_else(|| format!("(2·{bound}+1)^{d}"), |t| t.to_string()),
            limit: budget,
        })?;
    let n = l.dim();
    let br = l.op(BRACKET)?;
    let alpha = l.alpha();
    let outcomes: Vec<(Tensor3, bool)> = (0..total as usize)
        .into_par_iter()
        .map(|idx| {
            let c = box_point(bound, d, idx as u128);
            let mut m = Tensor3::cube(n);
            for (ci, b) in c.iter().zip(&space.basis) {
                if *ci != 0 {
                    m = m.add(&b.scale(&Rational::from(*ci))).expect("same shape");
                }
            }
            let ok = left_symmetry_holds(br, &m, alpha);
            (m, ok)
        })
        .collect();
    let digest = l.digest();
    let mut survivors = Vec::new();
    let mut rejects = Vec::new();
    for (i, (m, ok)) in outcomes.into_iter().enumerate() {
        if !ok {
            rejects.push(m);
            continue;
        }
        let a = HomAlgebra::with_products(Kind::HomPostLie, (BRACKET, br.clone()), (MUL, m), alpha.clone())?;
        let cert = check_axioms(&a)?;
        survivors.push(Certified {
            value: a,
            cert,
            provenance: Provenance::new("postlie-search")
                .param("bound", bound)
                .param("index", i)
                .input(digest.clone()),
        });
    }
    Ok(PostLieSearch {
        space,
        bound,
        candidates_tested: total as usize,
        survivors,
        rejects,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie(alpha: Matrix) -> HomAlgebra {
        let br = Tensor3::from_terms(2, &[(0, 1, 1, 1), (1, 0, 1, -1)]);
        HomAlgebra::with_product(Kind::HomLie, BRACKET, br, alpha).unwrap()
    }

    #[test]
    fn abelian_system_is_zero() {
        let l = HomAlgebra::zero(Kind::HomLie, Matrix::identity(2)).unwrap();
        let s = postlie_linear_system(&l).unwrap();
        assert_eq!((s.rows(), s.cols()), (16, 8));
        assert!(s.is_zero());
    }

    #[test]
    fn nullspace_satisfies_derivation_identity() {
        let l = lie(Matrix::identity(2));
        let space = candidate_space(&l).unwrap();
        assert_eq!(space.basis.len() + space.rank, 8);
        let br = l.op(BRACKET).unwrap();
        for m in &space.basis {
            for (i, j, k) in itertools(2) {
                let (x, y, z) = (vector::unit(2, i), vector::unit(2, j), vector::unit(2, k));
                assert!(vector::is_zero(&derivation_defect(br, m, l.alpha(), &x, &y, &z)));
            }
        }
    }

    fn itertools(n: usize) -> Vec<(usize, usize, usize)> {
        let mut v = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    v.push((i, j, k));
                }
            }
        }
        v
    }

    #[test]
    fn bound_zero_gives_only_zero_product() {
        let l = lie(Matrix::identity(2));
        let s = postlie_search(&l, 0, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(s.candidates_tested, 1);
        assert_eq!(s.survivors.len(), 1);
        assert!(s.survivors[0].value.op(MUL).unwrap().is_zero());
        assert!(s.survivors[0].passed());
    }

    #[test]
    fn abelian_dim_three_bound_one_exceeds_budget() {
        let l = HomAlgebra::zero(Kind::HomLie, Matrix::identity(3)).unwrap();
        let err = postlie_search(&l, 1, DEFAULT_SEARCH_BUDGET).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
        assert_eq!(postlie_search(&l, 0, DEFAULT_SEARCH_BUDGET).unwrap().survivors.len(), 1);
    }

    #[test]
    fn box_enumeration_is_lexicographic() {
        assert_eq!(box_point(1, 2, 0), vec![-1, -1]);
        assert_eq!(box_point(1, 2, 1), vec![-1, 0]);
        assert_eq!(box_point(1, 2, 8), vec![1, 1]);
        assert_eq!(box_size(1, 27), Some(3u128.pow(27)));
    }
}
