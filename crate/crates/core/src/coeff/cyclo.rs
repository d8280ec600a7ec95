//! The cyclotomic rational field Q[t] / (Phi_n(t)), the authoritative
//! characteristic-0 coefficient field. The class of t is the canonical
//! primitive n-th root of unity.

use super::univar;
use super::{CoeffDisplay, Field, FieldSpec};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

/// Element of Q[t]/(Phi_n): rational coefficients of 1, t, ..., t^(d-1)
/// where d = deg Phi_n. Always fully reduced; num-rational keeps each
/// coefficient in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElem {
    coeffs: Vec<BigRational>,
}

impl CycloElem {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

#[derive(Clone, Debug)]
pub struct CyclotomicField {
    n: u64,
    degree: usize,
    /// Phi_n as rational coefficients (ascending, monic), shared.
    phi: Arc<Vec<BigRational>>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}
impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidField("n must be >= 1".into()));
        }
        let phi_int = univar::cyclotomic_poly(n);
        let phi: Vec<BigRational> = phi_int.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let degree = phi.len() - 1;
        Ok(CyclotomicField { n, degree, phi: Arc::new(phi) })
    }

    /// deg Phi_n = phi(n), the degree of the extension over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn from_rational(&self, q: BigRational) -> CycloElem {
        let mut coeffs = vec![BigRational::zero(); self.degree];
        coeffs[0] = q;
        CycloElem { coeffs }
    }

    /// Reduces an arbitrary-length coefficient vector modulo Phi_n and
    /// pads to the fixed representation length.
    fn reduce(&self, mut v: Vec<BigRational>) -> CycloElem {
        let d = self.degree;
        let mut k = v.len();
        while k > d {
            k -= 1;
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[k], BigRational::zero());
            // t^k = -c * (Phi_n - t^d) * t^(k-d) since Phi_n is monic.
            for i in 0..d {
                let t = &c * &self.phi[i];
                v[k - d + i] -= t;
            }
        }
        v.resize(d, BigRational::zero());
        CycloElem { coeffs: v }
    }
}

impl Field for CyclotomicField {
    type Elem = CycloElem;

    fn spec(&self) -> FieldSpec {
        FieldSpec::cyclotomic(self.n)
    }

    fn zero(&self) -> CycloElem {
        CycloElem { coeffs: vec![BigRational::zero(); self.degree] }
    }

    fn one(&self) -> CycloElem {
        self.from_rational(BigRational::one())
    }

    fn from_bigint(&self, v: &BigInt) -> CycloElem {
        self.from_rational(BigRational::from_integer(v.clone()))
    }

    fn is_zero(&self, a: &CycloElem) -> bool {
        a.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycloElem { coeffs }
    }

    fn neg(&self, a: &CycloElem) -> CycloElem {
        CycloElem { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        let d = self.degree;
        let mut conv = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        self.reduce(conv)
    }

    fn inv(&self, a: &CycloElem) -> Result<CycloElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let mut v = a.coeffs.clone();
        univar::trim(&mut v);
        let inv = univar::invert_mod(&v, &self.phi).ok_or(Error::DivisionByZero)?;
        Ok(self.reduce(inv))
    }

    fn root_of_unity(&self) -> CycloElem {
        // The class of t. For deg Phi_n = 1 this reduces to a rational.
        let mut v = vec![BigRational::zero(); 2];
        v[1] = BigRational::one();
        self.reduce(v)
    }

    fn unity_order(&self) -> u64 {
        self.n
    }

    fn coeff_display(&self, a: &CycloElem) -> CoeffDisplay {
        let nonzero: Vec<usize> =
            (0..self.degree).filter(|&i| !a.coeffs[i].is_zero()).collect();
        if nonzero.is_empty() {
            return CoeffDisplay {
                negative: false,
                body: "0".into(),
                parenthesize: false,
                is_unit_one: false,
            };
        }
        let all_negative = nonzero.iter().all(|&i| a.coeffs[i].is_negative());
        let (negative, display) = if all_negative {
            (true, self.neg(a))
        } else {
            (false, a.clone())
        };
        let mut body = String::new();
        let mut first = true;
        for i in 0..self.degree {
            let c = &display.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    body.push('-');
                }
                first = false;
            } else {
                body.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if i == 0 {
                body.push_str(&mag.to_string());
            } else {
                if !unit {
                    body.push_str(&mag.to_string());
                    body.push('*');
                }
                if i == 1 {
                    body.push('e');
                } else {
                    body.push_str(&format!("e^{i}"));
                }
            }
        }
        let single_term = nonzero.len() == 1;
        let is_unit_one = single_term && nonzero[0] == 0 && display.coeffs[0].is_one();
        CoeffDisplay { negative, body, parenthesize: !single_term, is_unit_one }
    }
}
