//! ε-Hom-bialgebras and the convolution Rota-Baxter operator on `End_α`.

use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Rational, Tensor3, Vector};
use crate::homcore::axioms::hom_associativity;
use crate::homcore::cert::{certify, CertReport, Identity};

/// `(A, μ, Δ, α)` with `Δ(e_i) = Σ delta[i][j][k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonHomBialgebra {
    dim: usize,
    mul: Tensor3,
    delta: Tensor3,
    alpha: Matrix,
}

impl EpsilonHomBialgebra {
    pub fn new(mul: Tensor3, delta: Tensor3, alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        if alpha.cols() != dim {
            return Err(Error::dim(
                "EpsilonHomBialgebra (alpha)",
                "square",
                format!("{}x{}", alpha.rows(), alpha.cols()),
            ));
        }
        for (what, t) in [("mul", &mul), ("delta", &delta)] {
            if !t.is_cube(dim) {
                return Err(Error::Dimension {
                    op: "EpsilonHomBialgebra",
                    expected: format!("{dim}x{dim}x{dim} for {what}"),
                    found: format!("{:?}", t.dims()),
                });
            }
        }
        Ok(EpsilonHomBialgebra { dim, mul, delta, alpha })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn delta(&self) -> &Tensor3 {
        &self.delta
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// `Δ` as an `n² × n` matrix; rows are indexed lexicographically by `(j, k)`.
    pub fn coproduct_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut d = Matrix::zeros(n * n, n);
        for i in 0..n {
            for (r, v) in self.delta.fiber_block(i).iter().enumerate() {
                d.set(r, i, v.clone());
            }
        }
        d
    }

    /// `μ` as an `n × n²` matrix.
    pub fn product_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n * n);
        for j in 0..n {
            for k in 0..n {
                for (o, v) in self.mul.fiber(j, k).iter().enumerate() {
                    m.set(o, j * n + k, v.clone());
                }
            }
        }
        m
    }

    /// `R(f) = μ ∘ (α ⊗ f) ∘ Δ`, i.e. `a ↦ α(a₁)·f(a₂)`.
    pub fn convolution(&self, f: &Matrix) -> Matrix {
        let m = self.product_matrix();
        let d = self.coproduct_matrix();
        m.mul_unchecked(&self.alpha.kron(f)).mul_unchecked(&d)
    }

    /// Prerequisite identities: Hom-associativity, Hom-coassociativity,
    /// the compatibility of `Δ` with `μ`, and that `α` is an involutive
    /// bicentroid.
    pub fn prerequisite_identities(&self) -> Vec<Identity<'static>> {
        let n = self.dim;
        let id = Matrix::identity(n);
        let a = self.alpha.clone();
        let d = self.coproduct_matrix();
        let mut ids = vec![hom_associativity("hom-associativity", self.mul.clone(), a.clone())];

        let (l, r) = (a.kron(&d).mul_unchecked(&d), d.kron(&a).mul_unchecked(&d));
        ids.push(Identity::new("hom-coassociativity", vec![n], move |x| {
            (l.apply(&x[0]), r.apply(&x[0]))
        }));

        let (mul, am, dm) = (self.mul.clone(), a.clone(), d.clone());
        ids.push(Identity::new("compatibility", vec![n; 2], move |x| {
            let (u, v) = (&x[0], &x[1]);
            let lhs = dm.apply(&mul.eval(u, v));
            let first = mul.left_mult(&am.apply(u)).kron(&am).apply(&dm.apply(v));
            let second = am.kron(&mul.right_mult(&am.apply(v))).apply(&dm.apply(u));
            (lhs, vector::add(&first, &second))
        }));

        let (mul, am) = (self.mul.clone(), a.clone());
        ids.push(Identity::new("centroid-left", vec![n; 2], move |x| {
            (mul.eval(&am.apply(&x[0]), &x[1]), am.apply(&mul.eval(&x[0], &x[1])))
        }));
        let (mul, am) = (self.mul.clone(), a.clone());
        ids.push(Identity::new("centroid-right", vec![n; 2], move |x| {
            (am.apply(&mul.eval(&x[0], &x[1])), mul.eval(&x[0], &am.apply(&x[1])))
        }));

        let (al, dm, da) = (a.kron(&id).mul_unchecked(&d), d.clone(), a.clone());
        ids.push(Identity::new("cocentroid-left", vec![n], move |x| {
            (al.apply(&x[0]), dm.apply(&da.apply(&x[0])))
        }));
        let (ar, dm, da) = (id.kron(&a).mul_unchecked(&d), d, a.clone());
        ids.push(Identity::new("cocentroid-right", vec![n], move |x| {
            (dm.apply(&da.apply(&x[0])), ar.apply(&x[0]))
        }));

        let a2 = a.mul_unchecked(&a);
        ids.push(Identity::new("involutive", vec![n], move |x| {
            (a2.apply(&x[0]), x[0].clone())
        }));
        ids
    }
}

impl Tensor3 {
    /// The `d2·d3` entries with first index `i`, in row-major order.
    pub(crate) fn fiber_block(&self, i: usize) -> &[Rational] {
        let (_, d2, d3) = self.dims();
        &self.entries()[i * d2 * d3..(i + 1) * d2 * d3]
    }
}

/// Basis of `End_α = {f : f∘α = α∘f}`.
pub fn commutant_basis(alpha: &Matrix) -> Vec<Matrix> {
    let n = alpha.rows();
    let mut cols = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let mut e = Matrix::zeros(n, n);
            e.set(p, q, Rational::one());
            let c = e.mul_unchecked(alpha).sub(&alpha.mul_unchecked(&e)).expect("square");
            cols.push(c.entries().to_vec());
        }
    }
    let system = Matrix::from_columns(n * n, &cols).expect("consistent columns");
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::new(n, n, v).expect("n*n entries"))
        .collect()
}

fn combination(basis: &[Matrix], n: usize, coeffs: &[Rational]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            m = m.add(&b.scale(c)).expect("same shape");
        }
    }
    m
}

/// Certifies the prerequisites and, if they hold, that the convolution
/// operator `R(f) = α ⋆ f` is a weight-0 Rota-Baxter operator on
/// `(End_α, ∘, γ)` with `γ(f) = α∘f`.
///
/// Identities on `End_α` are checked on pairs (or triples) of its basis
/// elements.
pub fn convolution_rb(b: &EpsilonHomBialgebra) -> CertReport {
    let pre = certify(&b.prerequisite_identities());
    if !pre.passed {
        return pre;
    }
    let n = b.dim;
    let basis = commutant_basis(&b.alpha);
    let m = basis.len();
    let flat = |x: Matrix| -> Vector { x.entries().to_vec() };

    let (bs, alpha) = (basis.clone(), b.alpha.clone());
    let hom_assoc = Identity::new("end-hom-associativity", vec![m; 3], move |x| {
        let f = combination(&bs, n, &x[0]);
        let g = combination(&bs, n, &x[1]);
        let h = combination(&bs, n, &x[2]);
        let lhs = f.mul_unchecked(&g).mul_unchecked(&alpha.mul_unchecked(&h));
        let rhs = alpha.mul_unchecked(&f).mul_unchecked(&g.mul_unchecked(&h));
        (flat(lhs), flat(rhs))
    });

    let (bs, bi) = (basis, b.clone());
    let rb = Identity::new("rota-baxter", vec![m; 2], move |x| {
        let g = combination(&bs, n, &x[0]);
        let f = combination(&bs, n, &x[1]);
        let (rg, rf) = (bi.convolution(&g), bi.convolution(&f));
        let lhs = rg.mul_unchecked(&rf);
        let inner = rg.mul_unchecked(&f).add(&g.mul_unchecked(&rf)).expect("same shape");
        (flat(lhs), flat(bi.convolution(&inner)))
    });
    pre.merge(certify(&[hom_assoc, rb]))
}

/// Exhaustive search for ε-Hom-bialgebras of dimension `dim` whose `α`,
/// `μ` and `Δ` have entries in `coeffs`, with `α` an involutive bicentroid.
///
/// The search prefilters in machine integers (`α`, then `μ`, then `Δ`, then
/// compatible pairs); callers certify the survivors exactly.
pub fn find_epsilon_bialgebras(dim: usize, coeffs: &[i64]) -> Vec<EpsilonHomBialgebra> {
    let n = dim;
    let mut out = Vec::new();
    for a in tuples(coeffs, n * n) {
        let a = SmallMat { n, e: a };
        if a.mul(&a) != SmallMat::identity(n) {
            continue;
        }
        let muls: Vec<Vec<i64>> = tuples(coeffs, n * n * n).filter(|m| small_mul_ok(n, m, &a)).collect();
        let deltas: Vec<Vec<i64>> = tuples(coeffs, n * n * n).filter(|d| small_delta_ok(n, d, &a)).collect();
        for m in &muls {
            for d in &deltas {
                if small_compatible(n, m, d, &a) {
                    out.push(
                        EpsilonHomBialgebra::new(small_tensor(n, m), small_tensor(n, d), a.to_matrix())
                            .expect("consistent dimensions"),
                    );
                }
            }
        }
    }
    out
}

fn tuples(coeffs: &[i64], len: usize) -> impl Iterator<Item = Vec<i64>> + '_ {
    let total = coeffs.len().pow(len as u32);
    (0..total).map(move |mut t| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = coeffs[t % coeffs.len()];
            t /= coeffs.len();
        }
        v
    })
}

#[derive(Clone, PartialEq, Eq)]
struct SmallMat {
    n: usize,
    e: Vec<i64>,
}

impl SmallMat {
    fn identity(n: usize) -> Self {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        SmallMat { n, e }
    }

    fn mul(&self, o: &SmallMat) -> SmallMat {
        let n = self.n;
        let mut e = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                e[i * n + j] = (0..n).map(|k| self.e[i * n + k] * o.e[k * n + j]).sum();
            }
        }
        SmallMat { n, e }
    }

    fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n).map(|i| (0..n).map(|j| self.e[i * n + j] * v[j]).sum()).collect()
    }

    fn to_matrix(&self) -> Matrix {
        Matrix::new(self.n, self.n, self.e.iter().map(|&x| Rational::from(x)).collect()).expect("n*n entries")
    }
}

fn small_tensor(n: usize, t: &[i64]) -> Tensor3 {
    Tensor3::new(n, n, n, t.iter().map(|&x| Rational::from(x)).collect()).expect("n^3 entries")
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn prod(n: usize, m: &[i64], x: &[i64], y: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            let c = x[i] * y[j];
            if c != 0 {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += c * m[(i * n + j) * n + k];
                }
            }
        }
    }
    out
}

/// `Δ(x)` flattened over `(j, k)`.
fn coprod(n: usize, d: &[i64], x: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for (i, xi) in x.iter().enumerate() {
        if *xi != 0 {
            for (r, o) in out.iter_mut().enumerate() {
                *o += xi * d[i * n * n + r];
            }
        }
    }
    out
}

/// `(f ⊗ g)` applied to a flattened `n²` tensor with `f`, `g` given as closures on vectors.
fn tensor_apply(n: usize, v: &[i64], f: impl Fn(&[i64]) -> Vec<i64>, g: impl Fn(&[i64]) -> Vec<i64>) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for j in 0..n {
        for k in 0..n {
            let c = v[j * n + k];
            if c != 0 {
                let (fj, gk) = (f(&unit(n, j)), g(&unit(n, k)));
                for p in 0..n {
                    for q in 0..n {
                        out[p * n + q] += c * fj[p] * gk[q];
                    }
                }
            }
        }
    }
    out
}

fn small_mul_ok(n: usize, m: &[i64], a: &SmallMat) -> bool {
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let xy = prod(n, m, &x, &y);
            let axy = a.apply(&xy);
            if prod(n, m, &a.apply(&x), &y) != axy || prod(n, m, &x, &a.apply(&y)) != axy {
                return false;
            }
            for k in 0..n {
                let z = unit(n, k);
                if prod(n, m, &xy, &a.apply(&z)) != prod(n, m, &a.apply(&x), &prod(n, m, &y, &z)) {
                    return false;
                }
            }
        }
    }
    true
}

fn small_delta_ok(n: usize, d: &[i64], a: &SmallMat) -> bool {
    let id = |v: &[i64]| v.to_vec();
    let av = |v: &[i64]| a.apply(v);
    for i in 0..n {
        let x = unit(n, i);
        let dx = coprod(n, d, &x);
        let dax = coprod(n, d, &a.apply(&x));
        if tensor_apply(n, &dx, av, id) != dax || tensor_apply(n, &dx, id, av) != dax {
            return false;
        }
        // (α ⊗ Δ)Δ(x) = (Δ ⊗ α)Δ(x), both flattened over n³.
        let mut left = vec![0; n * n * n];
        let mut right = vec![0; n * n * n];
        for j in 0..n {
            for k in 0..n {
                let c = dx[j * n + k];
                if c == 0 {
                    continue;
                }
                let (aj, dk) = (a.apply(&unit(n, j)), coprod(n, d, &unit(n, k)));
                let (dj, ak) = (coprod(n, d, &unit(n, j)), a.apply(&unit(n, k)));
                for p in 0..n {
                    for r in 0..n * n {
                        left[p * n * n + r] += c * aj[p] * dk[r];
                        right[r * n + p] += c * dj[r] * ak[p];
                    }
                }
            }
        }
        if left != right {
            return false;
        }
    }
    true
}

fn small_compatible(n: usize, m: &[i64], d: &[i64], a: &SmallMat) -> bool {
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let lhs = coprod(n, d, &prod(n, m, &x, &y));
            let ax = a.apply(&x);
            let ay = a.apply(&y);
            let first = tensor_apply(n, &coprod(n, d, &y), |v| prod(n, m, &ax, v), |v| a.apply(v));
            let second = tensor_apply(n, &coprod(n, d, &x), |v| a.apply(v), |v| prod(n, m, v, &ay));
            let rhs: Vec<i64> = first.iter().zip(&second).map(|(p, q)| p + q).collect();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
