use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational, Tensor3, Vector};

/// Which axiom system an algebra is meant to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Generic,
    HomAssociative,
    HomLie,
    HomPreLie,
    HomDendriform,
    HomPostLie,
    HomLDendriform,
    HomNovikov,
}

pub const MUL: &str = "mul";
pub const BRACKET: &str = "bracket";
/// `⊣` of a dendriform algebra.
pub const LEFT: &str = "left";
/// `⊢` of a dendriform algebra.
pub const RIGHT: &str = "right";
/// `◁` of an L-dendriform algebra.
pub const TLEFT: &str = "tleft";
/// `▷` of an L-dendriform algebra.
pub const TRIGHT: &str = "tright";

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Generic,
        Kind::HomAssociative,
        Kind::HomLie,
        Kind::HomPreLie,
        Kind::HomDendriform,
        Kind::HomPostLie,
        Kind::HomLDendriform,
        Kind::HomNovikov,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Generic => "generic",
            Kind::HomAssociative => "hom-associative",
            Kind::HomLie => "hom-lie",
            Kind::HomPreLie => "hom-prelie",
            Kind::HomDendriform => "hom-dendriform",
            Kind::HomPostLie => "hom-postlie",
            Kind::HomLDendriform => "hom-l-dendriform",
            Kind::HomNovikov => "hom-novikov",
        }
    }

    /// Product names the kind's axioms refer to. `Generic` accepts anything.
    pub fn product_names(self) -> &'static [&'static str] {
        match self {
            Kind::Generic => &[],
            Kind::HomAssociative | Kind::HomPreLie | Kind::HomNovikov => &[MUL],
            Kind::HomLie => &[BRACKET],
            Kind::HomDendriform => &[LEFT, RIGHT],
            Kind::HomPostLie => &[BRACKET, MUL],
            Kind::HomLDendriform => &[TLEFT, TRIGHT],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Input(format!("unknown algebra kind `{s}`")))
    }
}

/// A finite-dimensional Hom-algebra given by structure constants.
///
/// The kind's axioms are *not* invariants of this type; a value may be a
/// mere candidate until [`check_axioms`](crate::homcore::check_axioms) says otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomAlgebra {
    dim: usize,
    kind: Kind,
    ops: BTreeMap<String, Tensor3>,
    alpha: Matrix,
}

impl HomAlgebra {
    pub fn new(kind: Kind, dim: usize, ops: BTreeMap<String, Tensor3>, alpha: Matrix) -> Result<Self> {
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(Error::dim(
                "HomAlgebra::new (alpha)",
                format!("{dim}x{dim}"),
                format!("{}x{}", alpha.rows(), alpha.cols()),
            ));
        }
        for (name, t) in &ops {
            if !t.is_cube(dim) {
                return Err(Error::Dimension {
                    op: "HomAlgebra::new (product)",
                    expected: format!("{dim}x{dim}x{dim} for `{name}`"),
                    found: format!("{:?}", t.dims()),
                });
            }
        }
        Ok(HomAlgebra { dim, kind, ops, alpha })
    }

    /// Single-product algebra.
    pub fn with_product(kind: Kind, name: &str, product: Tensor3, alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        let mut ops = BTreeMap::new();
        ops.insert(name.to_string(), product);
        HomAlgebra::new(kind, dim, ops, alpha)
    }

    /// Two-product algebra.
    pub fn with_products(kind: Kind, first: (&str, Tensor3), second: (&str, Tensor3), alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        let mut ops = BTreeMap::new();
        ops.insert(first.0.to_string(), first.1);
        ops.insert(second.0.to_string(), second.1);
        HomAlgebra::new(kind, dim, ops, alpha)
    }

    /// All products of the kind set to zero.
    pub fn zero(kind: Kind, alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        let ops = kind
            .product_names()
            .iter()
            .map(|name| (name.to_string(), Tensor3::cube(dim)))
            .collect();
        HomAlgebra::new(kind, dim, ops, alpha)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn ops(&self) -> &BTreeMap<String, Tensor3> {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Result<&Tensor3> {
        self.ops
            .get(name)
            .ok_or_else(|| Error::Input(format!("{} algebra has no product named `{name}`", self.kind)))
    }

    /// Same data, different kind tag.
    pub fn relabel(&self, kind: Kind) -> HomAlgebra {
        HomAlgebra { kind, ..self.clone() }
    }

    /// Same kind and products, different twisting map.
    pub fn with_alpha(&self, alpha: Matrix) -> Result<HomAlgebra> {
        HomAlgebra::new(self.kind, self.dim, self.ops.clone(), alpha)
    }

    /// Verifies that every product the kind needs is present.
    pub fn require_products(&self) -> Result<()> {
        let needed = self.kind.product_names();
        for name in needed {
            if !self.ops.contains_key(*name) {
                return Err(Error::Input(format!(
                    "{} algebra requires a product named `{name}`; found {:?}",
                    self.kind,
                    self.ops.keys().collect::<Vec<_>>()
                )));
            }
        }
        Ok(())
    }

    pub fn apply_alpha(&self, x: &[Rational]) -> Vector {
        self.alpha.apply(x)
    }

    /// `x ∘ y` for the named product, with dimension checks.
    pub fn product(&self, name: &str, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.op(name)?.bilinear_eval(x, y)
    }

    /// Change of basis by an invertible `p`: products and twist are transported
    /// so that `p` becomes an isomorphism onto the result.
    pub fn conjugate(&self, p: &Matrix) -> Result<HomAlgebra> {
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::Input("change of basis is singular".into()))?;
        let ops = self
            .ops
            .iter()
            .map(|(k, t)| Ok((k.clone(), t.conjugate(p, &p_inv)?)))
            .collect::<Result<_>>()?;
        let alpha = p.mat_mul(&self.alpha)?.mat_mul(&p_inv)?;
        HomAlgebra::new(self.kind, self.dim, ops, alpha)
    }

    /// Hex SHA-256 over a canonical text rendering (kind, dim, twist, products by name).
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.canonical_text().as_bytes());
        hex_string(&h.finalize())
    }

    pub(crate) fn canonical_text(&self) -> String {
        let mut s = format!("algebra;{};{};alpha:", self.kind, self.dim);
        push_entries(&mut s, self.alpha.entries());
        for (name, t) in &self.ops {
            s.push_str(&format!(";{name}:"));
            push_entries(&mut s, t.entries());
        }
        s
    }
}

pub(crate) fn push_entries(s: &mut String, xs: &[Rational]) {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&x.to_string());
    }
}

pub(crate) fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_roundtrip() {
        for k in Kind::ALL {
            assert_eq!(k.as_str().parse::<Kind>().unwrap(), k);
        }
        assert!("hom-jordan".parse::<Kind>().is_err());
    }

    #[test]
    fn rejects_inconsistent_dimensions() {
        let err = HomAlgebra::with_product(Kind::HomLie, BRACKET, Tensor3::cube(3), Matrix::identity(2));
        assert!(matches!(err, Err(Error::Dimension { .. })));
    }

    #[test]
    fn digest_depends_on_data() {
        let a = HomAlgebra::zero(Kind::HomLie, Matrix::identity(2)).unwrap();
        let b = HomAlgebra::zero(Kind::HomLie, Matrix::zeros(2, 2)).unwrap();
        assert_ne!(a.digest(), b.digest());
        assert_eq!(a.digest(), a.clone().digest());
    }
}
