//! Exact coefficient-field arithmetic.
//!
//! Two backends expose a primitive n-th root of unity: prime fields F_p
//! with n | p - 1 (fast, characteristic-p evidence) and the cyclotomic
//! rationals Q[t]/(Phi_n) (characteristic 0, proof grade). All core
//! machinery is generic over [`Field`].

mod cyclo;
mod prime;
mod univar;

pub use cyclo::{CycloElem, CyclotomicField};
pub use prime::PrimeField;
pub use univar::cyclotomic_poly;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::hash::Hash;

/// Which coefficient field a computation ran over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Prime { p: u64, n: u64 },
    Cyclotomic { n: u64 },
}

impl FieldSpec {
    pub fn prime(p: u64, n: u64) -> Self {
        FieldSpec::Prime { p, n }
    }

    pub fn cyclotomic(n: u64) -> Self {
        FieldSpec::Cyclotomic { n }
    }

    pub fn order(&self) -> u64 {
        match self {
            FieldSpec::Prime { n, .. } | FieldSpec::Cyclotomic { n } => *n,
        }
    }

    /// Human label, also used in report JSON.
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Prime { p, n } => format!("prime(p={p}, n={n})"),
            FieldSpec::Cyclotomic { n } => format!("cyclotomic(n={n})"),
        }
    }

    /// How a noncontainment verdict over this field should be graded.
    /// Only characteristic 0 carries the theorem; finite characteristic
    /// is reported as evidence.
    pub fn verdict_grade(&self) -> &'static str {
        match self {
            FieldSpec::Prime { .. } => "characteristic-p evidence",
            FieldSpec::Cyclotomic { .. } => "theorem (characteristic 0)",
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Rendering data for one coefficient inside a polynomial term.
#[derive(Clone, Debug)]
pub struct CoeffDisplay {
    /// Print a leading minus and use `body` as the magnitude.
    pub negative: bool,
    pub body: String,
    /// Multi-term scalars need parentheses when multiplied by a monomial.
    pub parenthesize: bool,
    /// Magnitude is exactly 1, so `1 * x` collapses to `x`.
    pub is_unit_one: bool,
}

/// An exact field with a distinguished primitive root of unity.
///
/// Implementations are value objects (cheap to clone, equality = same
/// field); elements are self-contained data manipulated through the field.
/// Everything is pure and deterministic, safe for concurrent use.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Errors with [`Error::DivisionByZero`] on 0.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// The canonical primitive n-th root of unity epsilon.
    fn root_of_unity(&self) -> Self::Elem;
    /// The order n of the distinguished root.
    fn unity_order(&self) -> u64;
    fn coeff_display(&self, a: &Self::Elem) -> CoeffDisplay;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(v))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Standalone textual form of a scalar ("2", "-1/2", "e^2", "1 + e").
    fn format_elem(&self, a: &Self::Elem) -> String {
        if self.is_zero(a) {
            return "0".into();
        }
        let d = self.coeff_display(a);
        if d.negative {
            format!("-{}", d.body)
        } else {
            d.body
        }
    }
}

/// Validates a field spec and reports why it is unusable, if it is.
/// Used by front ends before dispatching to a concrete backend.
pub fn validate_spec(spec: &FieldSpec) -> Result<()> {
    match spec {
        FieldSpec::Prime { p, n } => {
            PrimeField::new(*p, *n)?;
            Ok(())
        }
        FieldSpec::Cyclotomic { n } => {
            if *n == 0 {
                Err(Error::InvalidField("n must be >= 1".into()))
            } else {
                Ok(())
            }
        }
    }
}
