//! Column vectors as plain `Vec<Rational>`.

use crate::exactlin::rational::Rational;

pub type Vector = Vec<Rational>;

pub fn zeros(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

/// Standard basis vector `e_i` (0-based).
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Rational::one();
    v
}

pub fn from_i64(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Rational::from_integer(x)).collect()
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rational], k: &Rational) -> Vector {
    a.iter().map(|x| x * k).collect()
}

pub fn neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn add_assign(acc: &mut [Rational], b: &[Rational]) {
    for (x, y) in acc.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += y;
        }
    }
}

pub fn sub_assign(acc: &mut [Rational], b: &[Rational]) {
    for (x, y) in acc.iter_mut().zip(b) {
        if !y.is_zero() {
            *x -= y;
        }
    }
}

/// Sum of signed terms; used to assemble both sides of an identity.
pub fn combine<'a>(n: usize, terms: impl IntoIterator<Item = (i64, &'a Vector)>) -> Vector {
    let mut acc = zeros(n);
    for (sign, v) in terms {
        match sign {
            1 => add_assign(&mut acc, v),
            -1 => sub_assign(&mut acc, v),
            k => add_assign(&mut acc, &scale(v, &Rational::from_integer(k))),
        }
    }
    acc
}

/// Exact linear independence test via rank.
pub fn independent(vs: &[Vector]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let m = crate::exactlin::Matrix::from_rows(vs.to_vec()).expect("equal-length vectors");
    m.rank() == vs.len()
}
