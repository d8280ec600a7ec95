//! Univariate polynomial helpers over Q, used for cyclotomic polynomials
//! and extended-Euclid inversion modulo Phi_n. Coefficients are ascending,
//! with no trailing zeros (zero polynomial = empty vec).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn trim(v: &mut Vec<BigRational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn degree(v: &[BigRational]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

/// Long division: returns (quotient, remainder) with deg r < deg d.
pub(crate) fn divrem(n: &[BigRational], d: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!d.is_empty(), "division by zero polynomial");
    let mut rem = n.to_vec();
    trim(&mut rem);
    let dd = d.len() - 1;
    let lead_inv = d[dd].recip();
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = &rem[rem.len() - 1] * &lead_inv;
        for i in 0..=dd {
            let t = &c * &d[i];
            rem[k + i] -= t;
        }
        quot[k] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
/// Returns None when gcd(a, m) is not a unit (for irreducible m this
/// means a = 0 mod m).
pub(crate) fn invert_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    // Half-extended EEA: track s with s*a = r (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r2) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let g_inv = r0[0].recip();
    let mut inv: Vec<BigRational> = s0.iter().map(|c| c * &g_inv).collect();
    let (_, reduced) = divrem(&inv, m);
    inv = reduced;
    trim(&mut inv);
    Some(inv)
}

/// The n-th cyclotomic polynomial, integer coefficients ascending, monic.
/// Computed as (t^n - 1) / prod of Phi_d over proper divisors d | n.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_poly requires n >= 1");
    let mut table: Vec<Option<Vec<BigRational>>> = vec![None; (n + 1) as usize];
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        // t^d - 1
        let mut num = vec![BigRational::zero(); (d + 1) as usize];
        num[0] = -BigRational::one();
        num[d as usize] = BigRational::one();
        for e in 1..d {
            if d % e == 0 {
                let phi_e = table[e as usize].as_ref().expect("divisors visited in order");
                let (q, r) = divrem(&num, phi_e);
                assert!(r.is_empty(), "t^d - 1 divisible by each Phi_e, e | d");
                num = q;
            }
        }
        table[d as usize] = Some(num);
    }
    let phi = table[n as usize].take().expect("computed above");
    phi.iter()
        .map(|c| {
            assert!(c.is_integer(), "cyclotomic polynomials have integer coefficients");
            c.to_integer()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn cyclotomic_base_case() {
        // n = 1: t - 1
        assert_eq!(cyclotomic_poly(1), vec![BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn cyclotomic_of_3_matches_division_oracle() {
        // Oracle: (t^3 - 1) / (t - 1) by long division.
        let num = vec![q(-1), q(0), q(0), q(1)];
        let den = vec![q(-1), q(1)];
        let (quot, rem) = divrem(&num, &den);
        assert!(rem.is_empty());
        let expect: Vec<BigInt> = quot.iter().map(|c| c.to_integer()).collect();
        assert_eq!(cyclotomic_poly(3), expect);
        assert_eq!(expect, vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn cyclotomic_of_4_matches_division_oracle() {
        // Oracle: (t^4 - 1) / ((t - 1)(t + 1)).
        let num = vec![q(-1), q(0), q(0), q(0), q(1)];
        let den = mul(&[q(-1), q(1)], &[q(1), q(1)]);
        let (quot, rem) = divrem(&num, &den);
        assert!(rem.is_empty());
        let expect: Vec<BigInt> = quot.iter().map(|c| c.to_integer()).collect();
        assert_eq!(cyclotomic_poly(4), expect);
        assert_eq!(expect, vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn cyclotomic_product_recovers_t_n_minus_1() {
        for n in 1..=30u64 {
            let mut prod = vec![BigRational::one()];
            for d in 1..=n {
                if n % d == 0 {
                    let phi: Vec<BigRational> = cyclotomic_poly(d)
                        .iter()
                        .map(|c| BigRational::from_integer(c.clone()))
                        .collect();
                    prod = mul(&prod, &phi);
                }
            }
            let mut expect = vec![BigRational::zero(); (n + 1) as usize];
            expect[0] = -BigRational::one();
            expect[n as usize] = BigRational::one();
            assert_eq!(prod, expect, "product of Phi_d for d | {n}");
        }
    }

    #[test]
    fn invert_mod_phi3() {
        // t * t^2 = t^3 = 1 mod Phi_3, and t^2 = -1 - t reduced.
        let phi: Vec<BigRational> = cyclotomic_poly(3)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let t = vec![q(0), q(1)];
        let inv = invert_mod(&t, &phi).unwrap();
        assert_eq!(inv, vec![q(-1), q(-1)]);
        let (_, prod) = divrem(&mul(&t, &inv), &phi);
        assert_eq!(prod, vec![q(1)]);
    }
}
