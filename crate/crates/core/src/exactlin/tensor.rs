use crate::error::{Error, Result};
use crate::exactlin::matrix::Matrix;
use crate::exactlin::rational::Rational;
use crate::exactlin::vector::{self, Vector};

/// Rank-3 array of rationals. Entry `(i, j, k)` lives at `i·d2·d3 + j·d3 + k`.
///
/// As a bilinear product on a based space, `t[i][j][k]` is the coefficient of
/// `e_k` in `e_i ∘ e_j`. As a coproduct, it is the coefficient of `e_j ⊗ e_k`
/// in `Δ(e_i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    d1: usize,
    d2: usize,
    d3: usize,
    entries: Vec<Rational>,
}

impl Tensor3 {
    pub fn new(d1: usize, d2: usize, d3: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != d1 * d2 * d3 {
            return Err(Error::dim("Tensor3::new", d1 * d2 * d3, entries.len()));
        }
        Ok(Tensor3 { d1, d2, d3, entries })
    }

    pub fn zeros(d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 {
            d1,
            d2,
            d3,
            entries: vec![Rational::zero(); d1 * d2 * d3],
        }
    }

    /// Cubic `n×n×n` zero tensor.
    pub fn cube(n: usize) -> Self {
        Tensor3::zeros(n, n, n)
    }

    /// Builds a cubic tensor from `(i, j, k, coefficient)` triples (0-based).
    pub fn from_terms(n: usize, terms: &[(usize, usize, usize, i64)]) -> Self {
        let mut t = Tensor3::cube(n);
        for &(i, j, k, c) in terms {
            t.set(i, j, k, Rational::from_integer(c));
        }
        t
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d1, self.d2, self.d3)
    }

    pub fn is_cube(&self, n: usize) -> bool {
        self.d1 == n && self.d2 == n && self.d3 == n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.d2 + j) * self.d3 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let at = self.idx(i, j, k);
        self.entries[at] = value;
    }

    /// The vector `t[i][j][·]`, i.e. `e_i ∘ e_j`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Rational] {
        let start = self.idx(i, j, 0);
        &self.entries[start..start + self.d3]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn bilinear_eval(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        if x.len() != self.d1 {
            return Err(Error::dim("bilinear_eval (left)", self.d1, x.len()));
        }
        if y.len() != self.d2 {
            return Err(Error::dim("bilinear_eval (right)", self.d2, y.len()));
        }
        Ok(self.eval(x, y))
    }

    /// `Σ_{i,j} x_i y_j t[i][j][·]` without dimension checks.
    pub(crate) fn eval(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vector::zeros(self.d3);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (o, t) in out.iter_mut().zip(self.fiber(i, j)) {
                    if !t.is_zero() {
                        *o += &coeff * t;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x ∘ y` (size `d3 × d2`).
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.d3, self.d2);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.d2 {
                for (k, t) in self.fiber(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        let v = m.get(k, j) + &(xi * t);
                        m.set(k, j, v);
                    }
                }
            }
        }
        m
    }

    /// Matrix of `x ↦ x ∘ y` (size `d3 × d1`).
    pub fn right_mult(&self, y: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.d3, self.d1);
        for i in 0..self.d1 {
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, t) in self.fiber(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        let v = m.get(k, i) + &(yj * t);
                        m.set(k, i, v);
                    }
                }
            }
        }
        m
    }

    /// `g ∘ t`: apply `g` (size `d × d3`) to every output fiber.
    pub fn post_compose(&self, g: &Matrix) -> Result<Tensor3> {
        if g.cols() != self.d3 {
            return Err(Error::dim("post_compose", self.d3, g.cols()));
        }
        let mut out = Tensor3::zeros(self.d1, self.d2, g.rows());
        for i in 0..self.d1 {
            for j in 0..self.d2 {
                let image = g.apply(self.fiber(i, j));
                for (k, v) in image.into_iter().enumerate() {
                    out.set(i, j, k, v);
                }
            }
        }
        Ok(out)
    }

    /// `t ∘ (a ⊗ b)`: the product `(x, y) ↦ t(a x, b y)`.
    pub fn pre_compose(&self, a: &Matrix, b: &Matrix) -> Result<Tensor3> {
        if a.rows() != self.d1 {
            return Err(Error::dim("pre_compose (left)", self.d1, a.rows()));
        }
        if b.rows() != self.d2 {
            return Err(Error::dim("pre_compose (right)", self.d2, b.rows()));
        }
        let mut out = Tensor3::zeros(a.cols(), b.cols(), self.d3);
        for i in 0..a.cols() {
            let ai = a.column(i);
            for j in 0..b.cols() {
                let v = self.eval(&ai, &b.column(j));
                for (k, x) in v.into_iter().enumerate() {
                    out.set(i, j, k, x);
                }
            }
        }
        Ok(out)
    }

    /// Swap the first two indices: `(x, y) ↦ t(y, x)`.
    pub fn opposite(&self) -> Tensor3 {
        let mut out = Tensor3::zeros(self.d2, self.d1, self.d3);
        for i in 0..self.d1 {
            for j in 0..self.d2 {
                for k in 0..self.d3 {
                    out.set(j, i, k, self.get(i, j, k).clone());
                }
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Tensor3 {
        Tensor3 {
            d1: self.d1,
            d2: self.d2,
            d3: self.d3,
            entries: self.entries.iter().map(|x| x * k).collect(),
        }
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3> {
        self.zip_with(other, "Tensor3::add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Tensor3) -> Result<Tensor3> {
        self.zip_with(other, "Tensor3::sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Tensor3,
        op: &'static str,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Tensor3> {
        if self.dims() != other.dims() {
            return Err(Error::dim(
                op,
                format!("{:?}", self.dims()),
                format!("{:?}", other.dims()),
            ));
        }
        Ok(Tensor3 {
            d1: self.d1,
            d2: self.d2,
            d3: self.d3,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Transport a cubic product along an invertible change of basis `p`:
    /// `(x, y) ↦ p · t(p⁻¹x, p⁻¹y)`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> Result<Tensor3> {
        self.pre_compose(p_inv, p_inv)?.post_compose(p)
    }
}
