//! Seeded generators of certified instances for the test corpus.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Rational, Tensor3, Vector};
use crate::homcore::axioms::kind_identities;
use crate::homcore::{check_axioms, yau_twist, HomAlgebra, Kind};
use crate::search::catalog::catalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// All products zero, random twist.
    ZeroProduct,
    /// A catalog algebra twisted by a random endomorphism.
    YauTwistCatalog,
    /// Catalog products with a twist sampled from the solutions of the
    /// (linear in `α`) axiom system.
    NullspaceSample,
    /// The first catalog entry of the requested dimension.
    HandCatalog,
}

impl Generator {
    pub const ALL: [Generator; 4] = [
        Generator::ZeroProduct,
        Generator::YauTwistCatalog,
        Generator::NullspaceSample,
        Generator::HandCatalog,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Generator::ZeroProduct => "zero-product",
            Generator::YauTwistCatalog => "yau-twist-catalog",
            Generator::NullspaceSample => "nullspace-sample",
            Generator::HandCatalog => "hand-catalog",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::Input(format!("unknown generator `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RandomInstanceSpec {
    pub kind: Kind,
    pub dim: usize,
    pub seed: u64,
    pub generator: Generator,
}

impl RandomInstanceSpec {
    pub fn new(kind: Kind, dim: usize, seed: u64, generator: Generator) -> Self {
        RandomInstanceSpec {
            kind,
            dim,
            seed,
            generator,
        }
    }
}

/// Build the instance described by `spec` and certify it before returning.
pub fn random_instance(spec: &RandomInstanceSpec) -> Result<HomAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let a = match spec.generator {
        Generator::ZeroProduct => HomAlgebra::zero(spec.kind, small_matrix(&mut rng, spec.dim, 2))?,
        Generator::HandCatalog => classical(spec)?.swap_remove(0),
        Generator::YauTwistCatalog => {
            let base = classical(spec)?.choose(&mut rng).cloned().expect("nonempty");
            let ends = endomorphisms(&base, &mut rng)?;
            let g = ends.choose(&mut rng).expect("identity is an endomorphism");
            conjugate_randomly(&yau_twist(&base, g)?, &mut rng)?
        }
        Generator::NullspaceSample => {
            let base = classical(spec)?.choose(&mut rng).cloned().expect("nonempty");
            let alpha = sample_twist(&base, &mut rng)?;
            conjugate_randomly(&base.with_alpha(alpha)?, &mut rng)?
        }
    };
    let report = check_axioms(&a)?;
    if !report.passed {
        return Err(Error::Unsupported(format!(
            "{} produced an uncertified {} instance: {report}",
            spec.generator, spec.kind
        )));
    }
    Ok(a)
}

/// Catalog entries of the spec's kind and dimension with `α = Id`.
fn classical(spec: &RandomInstanceSpec) -> Result<Vec<HomAlgebra>> {
    let found: Vec<HomAlgebra> = catalog(spec.kind)
        .into_iter()
        .map(|e| e.algebra)
        .filter(|a| a.dim() == spec.dim && a.alpha().is_identity())
        .collect();
    if found.is_empty() {
        return Err(Error::Unsupported(format!(
            "{} has no catalog {} of dimension {}",
            spec.generator, spec.kind, spec.dim
        )));
    }
    Ok(found)
}

fn small_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let entries = (0..n * n)
        .map(|_| Rational::from(rng.gen_range(-bound..=bound)))
        .collect();
    Matrix::new(n, n, entries).expect("square")
}

/// A product of random elementary integer matrices, so the inverse is
/// integral too.
fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut p = Matrix::identity(n);
    if n < 2 {
        return p;
    }
    for _ in 0..n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut e = Matrix::identity(n);
        e.set(i, j, Rational::from(c));
        p = e.mat_mul(&p).expect("square");
    }
    p
}

fn conjugate_randomly(a: &HomAlgebra, rng: &mut ChaCha8Rng) -> Result<HomAlgebra> {
    a.conjugate(&unimodular(rng, a.dim()))
}

type SmallTensor = Vec<i64>;

fn to_small(t: &Tensor3) -> Result<SmallTensor> {
    t.entries()
        .iter()
        .map(|x| {
            if x.is_integer() {
                i64::try_from(x.numer()).map_err(|_| Error::Unsupported("large structure constant".into()))
            } else {
                Err(Error::Unsupported("non-integral structure constant".into()))
            }
        })
        .collect()
}

/// Whether the integer matrix `g` (row-major) preserves the product `t`.
fn preserves(t: &SmallTensor, g: &[i64], n: usize) -> bool {
    let at = |i: usize, j: usize, k: usize| t[(i * n + j) * n + k];
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                // g(e_i e_j) at coordinate r
                let lhs: i64 = (0..n).map(|k| g[r * n + k] * at(i, j, k)).sum();
                let mut rhs = 0;
                for p in 0..n {
                    let gi = g[p * n + i];
                    if gi == 0 {
                        continue;
                    }
                    for q in 0..n {
                        rhs += gi * g[q * n + j] * at(p, q, r);
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Nonzero integer endomorphisms of `a` (which has `α = Id`): all of them
/// with entries in a small box for `n ≤ 3`, a random sample for larger `n`.
/// The identity is always included.
fn endomorphisms(a: &HomAlgebra, rng: &mut ChaCha8Rng) -> Result<Vec<Matrix>> {
    let n = a.dim();
    let ops = a.ops().values().map(to_small).collect::<Result<Vec<_>>>()?;
    let ok = |g: &[i64]| g.iter().any(|&x| x != 0) && ops.iter().all(|t| preserves(t, g, n));
    let to_matrix = |g: &[i64]| Matrix::new(n, n, g.iter().map(|&x| Rational::from(x)).collect()).expect("square");
    let mut found = vec![Matrix::identity(n)];
    let mut push = |g: &[i64]| {
        let m = to_matrix(g);
        if !m.is_identity() {
            found.push(m);
        }
    };
    if n <= 3 {
        let bound: i64 = if n <= 2 { 2 } else { 1 };
        let side = (2 * bound + 1) as usize;
        let total = side.pow((n * n) as u32);
        let mut g = vec![0i64; n * n];
        for mut idx in 0..total {
            for slot in g.iter_mut().rev() {
                *slot = (idx % side) as i64 - bound;
                idx /= side;
            }
            if ok(&g) {
                push(&g);
            }
        }
    } else {
        for _ in 0..20_000 {
            let g: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-1..=1)).collect();
            if ok(&g) {
                push(&g);
            }
        }
    }
    Ok(found)
}

/// The kind's axioms with the products of `a` fixed are linear in `α`;
/// returns the coefficient matrix over the `n²` entries of `α`.
pub(crate) fn twist_system(a: &HomAlgebra) -> Result<Matrix> {
    let n = a.dim();
    let mut columns = Vec::with_capacity(n * n);
    for u in 0..n * n {
        let mut e = Matrix::zeros(n, n);
        e.set(u / n, u % n, Rational::one());
        let mut col: Vector = Vec::new();
        for id in kind_identities(&a.with_alpha(e)?)? {
            let total: usize = id.arg_dims.iter().product();
            for mut flat in 0..total {
                let mut args = vec![Vec::new(); id.arity()];
                for (slot, &d) in args.iter_mut().zip(&id.arg_dims).rev() {
                    *slot = vector::unit(d, flat % d);
                    flat /= d;
                }
                col.extend(id.defect(&args));
            }
        }
        columns.push(col);
    }
    let rows = columns.first().map_or(0, Vec::len);
    Matrix::from_columns(rows, &columns)
}

fn sample_twist(a: &HomAlgebra, rng: &mut ChaCha8Rng) -> Result<Matrix> {
    let n = a.dim();
    let basis = twist_system(a)?.nullspace();
    for _ in 0..16 {
        let mut alpha = vector::zeros(n * n);
        for b in &basis {
            let c = Rational::from(rng.gen_range(-2i64..=2));
            vector::add_assign(&mut alpha, &vector::scale(b, &c));
        }
        if !vector::is_zero(&alpha) {
            return Matrix::new(n, n, alpha);
        }
    }
    Ok(Matrix::identity(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcore::BRACKET;
    use crate::search::catalog::unit_like;

    #[test]
    fn hand_catalog_associative_dim_two_is_unit_like() {
        for seed in [0, 7, 12345] {
            let spec = RandomInstanceSpec::new(Kind::HomAssociative, 2, seed, Generator::HandCatalog);
            assert_eq!(random_instance(&spec).unwrap(), unit_like());
        }
    }

    #[test]
    fn zero_product_lie_dim_three() {
        let spec = RandomInstanceSpec::new(Kind::HomLie, 3, 5, Generator::ZeroProduct);
        let a = random_instance(&spec).unwrap();
        assert!(a.op(BRACKET).unwrap().is_zero());
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn same_spec_same_instance() {
        for generator in Generator::ALL {
            let spec = RandomInstanceSpec::new(Kind::HomPreLie, 2, 99, generator);
            let a = random_instance(&spec).unwrap();
            let b = random_instance(&spec).unwrap();
            assert_eq!(a.digest(), b.digest());
        }
    }

    #[test]
    fn affine_lie_endomorphisms_include_diagonal_twists() {
        let spec = RandomInstanceSpec::new(Kind::HomLie, 2, 0, Generator::HandCatalog);
        let a = random_instance(&spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let ends = endomorphisms(&a, &mut rng).unwrap();
        assert!(ends.contains(&Matrix::from_i64(&[&[1, 0], &[0, 2]])));
        assert!(ends.contains(&Matrix::from_i64(&[&[1, 0], &[0, -1]])));
    }

    #[test]
    fn identity_solves_the_twist_system() {
        for kind in Kind::ALL {
            for e in catalog(kind) {
                let n = e.algebra.dim();
                let s = twist_system(&e.algebra).unwrap();
                let id: Vec<Rational> = Matrix::identity(n).entries().to_vec();
                assert!(vector::is_zero(&s.mul_vec(&id).unwrap()), "{kind} {}", e.name);
            }
        }
    }

    #[test]
    fn unsupported_when_catalog_has_no_such_dim() {
        let spec = RandomInstanceSpec::new(Kind::HomLie, 7, 0, Generator::HandCatalog);
        assert!(matches!(random_instance(&spec), Err(Error::Unsupported(_))));
    }
}
