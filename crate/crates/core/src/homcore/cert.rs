use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::exactlin::{vector, Vector};

/// A basis tuple at which an identity fails, with both sides evaluated there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// 0-based basis indices, in the argument order of the identity.
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Witness {
    pub fn defect(&self) -> Vector {
        vector::sub(&self.lhs, &self.rhs)
    }

    /// The indices as 1-based basis labels, e.g. `(1, 1, 1)`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Outcome of certifying a structure: one entry per axiom, with the
/// lexicographically first failing basis tuple for each failed axiom.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CertReport {
    pub passed: bool,
    pub axioms: Vec<AxiomResult>,
}

impl CertReport {
    pub fn new(axioms: Vec<AxiomResult>) -> Self {
        CertReport {
            passed: axioms.iter().all(|a| a.passed),
            axioms,
        }
    }

    /// A report with no axioms (vacuously passing).
    pub fn empty() -> Self {
        CertReport::new(Vec::new())
    }

    /// A single named verdict without a basis witness (e.g. a matrix identity).
    pub fn single(name: impl Into<String>, passed: bool) -> Self {
        CertReport::new(vec![AxiomResult {
            name: name.into(),
            passed,
            witness: None,
        }])
    }

    pub fn merge(mut self, other: CertReport) -> Self {
        self.axioms.extend(other.axioms);
        self.passed = self.axioms.iter().all(|a| a.passed);
        self
    }

    /// Prefix every axiom name, e.g. `"input: "`.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for a in &mut self.axioms {
            a.name = format!("{prefix}{}", a.name);
        }
        self
    }

    pub fn axiom(&self, name: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.axioms.iter().filter(|a| !a.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.failures().next()
    }
}

impl fmt::Display for CertReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.axioms {
            if a.passed {
                writeln!(f, "  PASS  {}", a.name)?;
            } else {
                write!(f, "  FAIL  {}", a.name)?;
                if let Some(w) = &a.witness {
                    write!(f, " at {}: lhs = {:?}, rhs = {:?}", w.label(), w.lhs, w.rhs)?;
                }
                writeln!(f)?;
            }
        }
        write!(f, "{}", if self.passed { "PASSED" } else { "FAILED" })
    }
}

type EvalFn<'a> = dyn Fn(&[Vector]) -> (Vector, Vector) + Send + Sync + 'a;

/// A multilinear identity `lhs(x₁,…,x_k) = rhs(x₁,…,x_k)`.
///
/// Each argument ranges over a space of the given dimension; certification
/// evaluates the identity on every tuple of basis vectors, which is
/// exhaustive because both sides are multilinear and arithmetic is exact.
pub struct Identity<'a> {
    pub name: String,
    pub arg_dims: Vec<usize>,
    eval: Box<EvalFn<'a>>,
}

impl<'a> Identity<'a> {
    pub fn new(
        name: impl Into<String>,
        arg_dims: Vec<usize>,
        eval: impl Fn(&[Vector]) -> (Vector, Vector) + Send + Sync + 'a,
    ) -> Self {
        Identity {
            name: name.into(),
            arg_dims,
            eval: Box::new(eval),
        }
    }

    pub fn arity(&self) -> usize {
        self.arg_dims.len()
    }

    pub fn eval(&self, args: &[Vector]) -> (Vector, Vector) {
        (self.eval)(args)
    }

    pub fn defect(&self, args: &[Vector]) -> Vector {
        let (l, r) = self.eval(args);
        vector::sub(&l, &r)
    }

    fn tuple(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.arg_dims.len()];
        for (slot, &d) in idx.iter_mut().zip(&self.arg_dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    }

    fn eval_at(&self, indices: &[usize]) -> (Vector, Vector) {
        let args: Vec<Vector> = indices
            .iter()
            .zip(&self.arg_dims)
            .map(|(&i, &d)| vector::unit(d, i))
            .collect();
        self.eval(&args)
    }

    /// Checks every basis tuple; the witness is the lexicographically
    /// smallest failing tuple regardless of evaluation order.
    pub fn check(&self) -> AxiomResult {
        let total: usize = self.arg_dims.iter().product();
        let witness = (0..total).into_par_iter().find_map_first(|flat| {
            let indices = self.tuple(flat);
            let (lhs, rhs) = self.eval_at(&indices);
            (lhs != rhs).then_some(Witness { indices, lhs, rhs })
        });
        AxiomResult {
            name: self.name.clone(),
            passed: witness.is_none(),
            witness,
        }
    }

    /// Re-evaluate at a witness's indices.
    pub fn replay(&self, w: &Witness) -> (Vector, Vector) {
        self.eval_at(&w.indices)
    }
}

/// Certify a list of identities, in order.
pub fn certify(identities: &[Identity<'_>]) -> CertReport {
    CertReport::new(identities.iter().map(Identity::check).collect())
}

/// Which construction produced a value, with what parameters, from which
/// inputs (by digest).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Provenance {
    pub construction: String,
    pub params: BTreeMap<String, String>,
    pub inputs: Vec<String>,
}

impl Provenance {
    pub fn new(construction: impl Into<String>) -> Self {
        Provenance {
            construction: construction.into(),
            ..Provenance::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn input(mut self, digest: impl Into<String>) -> Self {
        self.inputs.push(digest.into());
        self
    }
}

/// A constructed value together with the certification of its target axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certified<T> {
    pub value: T,
    pub cert: CertReport,
    pub provenance: Provenance,
}

impl<T> Certified<T> {
    pub fn passed(&self) -> bool {
        self.cert.passed
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Certified<U> {
        Certified {
            value: f(self.value),
            cert: self.cert,
            provenance: self.provenance,
        }
    }
}
