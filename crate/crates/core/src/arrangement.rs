//! The Fermat configuration: the form F = prod_{i<j} (x_i^n - x_j^n), its
//! hyperplane factors, and the explicit list of codimension-two primes
//! cutting out the triple-intersection flats. Verification runs in both
//! directions: every listed prime really carries >= 3 hyperplanes, and a
//! brute-force enumeration over hyperplane pairs finds exactly the listed
//! flats.

use crate::coeff::{Field, FieldSpec};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg;
use crate::multipoly::{Poly, Ring};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Label of a codimension-two prime in the configuration.
///
/// C(i, j) is (x_i, x_j); J(i, j, l, a, b) is
/// (x_i - eps^a x_j, x_i - eps^b x_l) with i < j < l and 0 <= a, b < n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum PrimeTag {
    C { i: usize, j: usize },
    J { i: usize, j: usize, l: usize, a: u64, b: u64 },
}

impl fmt::Display for PrimeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeTag::C { i, j } => write!(f, "C({i},{j})"),
            PrimeTag::J { i, j, l, a, b } => write!(f, "J({i},{j},{l};a={a},b={b})"),
        }
    }
}

/// A codimension-two prime given by two independent linear forms.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearPrime<F: Field> {
    pub tag: PrimeTag,
    pub forms: [Poly<F>; 2],
}

impl<F: Field> LinearPrime<F> {
    pub fn ideal(&self) -> Ideal<F> {
        Ideal::new(self.forms[0].ring().clone(), self.forms.to_vec())
    }

    /// Coefficient rows of the two forms.
    pub fn rows(&self) -> [Vec<F::Elem>; 2] {
        let take = |p: &Poly<F>| linear_coeffs(p).expect("prime forms are linear");
        [take(&self.forms[0]), take(&self.forms[1])]
    }

    /// Canonical identifier of the flat: the reduced row echelon form of
    /// the coefficient matrix, printed. Two linear-form ideals are equal
    /// exactly when their row spaces, hence their RREFs, coincide.
    pub fn canonical_key(&self) -> String {
        let ring = self.forms[0].ring();
        let mut rows = self.rows().to_vec();
        linalg::rref(&ring.field, &mut rows);
        span_key(&ring.field, &rows)
    }
}

/// Coefficient vector of a homogeneous linear form; None when the
/// polynomial is zero or has a term of degree other than 1.
pub(crate) fn linear_coeffs<F: Field>(p: &Poly<F>) -> Option<Vec<F::Elem>> {
    if p.is_zero() {
        return None;
    }
    let ring = p.ring();
    let mut out = vec![ring.field.zero(); ring.nvars];
    for (m, c) in p.terms() {
        if m.degree() != 1 {
            return None;
        }
        let i = m.exps().iter().position(|&e| e == 1).expect("degree-1 monomial");
        out[i] = c.clone();
    }
    Some(out)
}

fn span_key<F: Field>(field: &F, rref_rows: &[Vec<F::Elem>]) -> String {
    rref_rows
        .iter()
        .map(|row| row.iter().map(|c| field.format_elem(c)).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// The full configuration at (N, n): all listed primes and the form F.
#[derive(Clone, Debug)]
pub struct Configuration<F: Field> {
    /// Ambient projective dimension N; the ring has N + 1 variables.
    pub dim: usize,
    /// Order of the root of unity (degree of each Fermat binomial).
    pub n: u64,
    pub ring: Ring<F>,
    pub primes: Vec<LinearPrime<F>>,
    /// F = prod_{0 <= i < j <= N} (x_i^n - x_j^n), fully expanded.
    pub fermat: Poly<F>,
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Number of primes the configuration must list: C(N+1,3) n^2 + C(N+1,2).
pub fn expected_prime_count(dim: usize, n: u64) -> usize {
    binom(dim + 1, 3) * (n as usize) * (n as usize) + binom(dim + 1, 2)
}

/// The n * C(N+1,2) linear factors x_i - eps^a x_j of F, each monic under
/// grevlex, enumerated by (i, j, a).
pub fn fermat_factors<F: Field>(ring: &Ring<F>, n: u64) -> Vec<Poly<F>> {
    let field = &ring.field;
    let eps = field.root_of_unity();
    let mut out = Vec::new();
    for i in 0..ring.nvars {
        for j in (i + 1)..ring.nvars {
            for a in 0..n {
                let scaled = ring.var(j).scale(&field.pow(&eps, a));
                out.push(ring.var(i).sub(&scaled));
            }
        }
    }
    out
}

/// F = prod_{i<j} (x_i^n - x_j^n), expanded exactly.
pub fn fermat_form<F: Field>(ring: &Ring<F>, n: u64) -> Poly<F> {
    let mut f = ring.one();
    for i in 0..ring.nvars {
        for j in (i + 1)..ring.nvars {
            let factor = ring.var(i).pow(n as u32).sub(&ring.var(j).pow(n as u32));
            f = f.mul(&factor);
        }
    }
    f
}

/// Builds the configuration at (N, n) over the given field.
///
/// Enumerates the C- and J-type primes with deduplication of labels that
/// define the same flat, and expands F. Rejects invalid combinations.
pub fn build_config<F: Field>(dim: usize, n: u64, field: &F) -> Result<Configuration<F>> {
    if dim < 2 {
        return Err(Error::Invalid(format!("configuration needs N >= 2, got N = {dim}")));
    }
    if n < 3 {
        return Err(Error::Invalid(format!("configuration needs n >= 3, got n = {n}")));
    }
    if field.unity_order() != n {
        return Err(Error::InvalidField(format!(
            "field provides a root of order {}, configuration needs order {n}",
            field.unity_order()
        )));
    }
    let ring = Ring::new(field.clone(), dim + 1);
    let eps = field.root_of_unity();
    let mut primes: Vec<LinearPrime<F>> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for i in 0..=dim {
        for j in (i + 1)..=dim {
            for l in (j + 1)..=dim {
                for a in 0..n {
                    for b in 0..n {
                        let f1 = ring.var(i).sub(&ring.var(j).scale(&field.pow(&eps, a)));
                        let f2 = ring.var(i).sub(&ring.var(l).scale(&field.pow(&eps, b)));
                        let p = LinearPrime {
                            tag: PrimeTag::J { i, j, l, a, b },
                            forms: [f1, f2],
                        };
                        if seen.insert(p.canonical_key()) {
                            primes.push(p);
                        }
                    }
                }
            }
        }
    }
    for i in 0..=dim {
        for j in (i + 1)..=dim {
            let p = LinearPrime {
                tag: PrimeTag::C { i, j },
                forms: [ring.var(i), ring.var(j)],
            };
            if seen.insert(p.canonical_key()) {
                primes.push(p);
            }
        }
    }
    let expected = expected_prime_count(dim, n);
    if primes.len() != expected {
        return Err(Error::Check(format!(
            "prime enumeration produced {} flats, expected {expected}",
            primes.len()
        )));
    }
    let fermat = fermat_form(&ring, n);
    let expected_deg = n as u32 * binom(dim + 1, 2) as u32;
    debug_assert_eq!(fermat.degree(), Some(expected_deg));
    Ok(Configuration { dim, n, ring, primes, fermat })
}

/// The linear factors of the configuration's F.
pub fn hyperplane_factors<F: Field>(cfg: &Configuration<F>) -> Vec<Poly<F>> {
    fermat_factors(&cfg.ring, cfg.n)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PrimeFactorRow {
    pub tag: String,
    pub vanishing_factors: usize,
    pub expected: usize,
    pub ok: bool,
}

/// Outcome of the two-directional verification of the flat list.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub schema: u32,
    pub dim: usize,
    pub n: u64,
    pub backend: String,
    pub listed_primes: usize,
    pub enumerated_flats: usize,
    pub expected_count: usize,
    /// Per-prime count of hyperplane factors vanishing on the flat.
    pub rows: Vec<PrimeFactorRow>,
    /// Flats found by brute force that are not listed (canonical keys).
    pub missing: Vec<String>,
    /// Listed primes the brute force did not find.
    pub extra: Vec<String>,
    pub pass: bool,
}

/// Checks the flat list both ways.
///
/// Inclusion: every listed prime carries exactly 3 (J-type) or n (C-type)
/// hyperplane factors. Completeness: enumerate all independent pairs of
/// hyperplane factors, count the factors vanishing on each pair's flat,
/// and require the flats with count >= 3 to match the listed primes
/// exactly (by canonical row-space identity).
pub fn verify_lemma1<F: Field>(cfg: &Configuration<F>) -> Lemma1Report {
    let field = &cfg.ring.field;
    let factors = hyperplane_factors(cfg);
    let factor_rows: Vec<Vec<F::Elem>> = factors
        .iter()
        .map(|f| linear_coeffs(f).expect("hyperplane factors are linear"))
        .collect();

    let mut rows = Vec::with_capacity(cfg.primes.len());
    for p in &cfg.primes {
        let span = p.rows();
        let count = factor_rows
            .iter()
            .filter(|f| linalg::in_span(field, &span, f))
            .count();
        let expected = match p.tag {
            PrimeTag::C { .. } => cfg.n as usize,
            PrimeTag::J { .. } => 3,
        };
        rows.push(PrimeFactorRow {
            tag: p.tag.to_string(),
            vanishing_factors: count,
            expected,
            ok: count == expected,
        });
    }

    // Brute-force enumeration over pairs of hyperplane factors.
    let mut flats: BTreeMap<String, usize> = BTreeMap::new();
    for s in 0..factor_rows.len() {
        for t in (s + 1)..factor_rows.len() {
            let pair = [factor_rows[s].clone(), factor_rows[t].clone()];
            if linalg::rank(field, &pair) != 2 {
                continue;
            }
            let count = factor_rows
                .iter()
                .filter(|f| linalg::in_span(field, &pair, f))
                .count();
            if count >= 3 {
                let mut rref_rows = pair.to_vec();
                linalg::rref(field, &mut rref_rows);
                flats.insert(span_key(field, &rref_rows), count);
            }
        }
    }

    let listed_keys: BTreeSet<String> = cfg.primes.iter().map(|p| p.canonical_key()).collect();
    let found_keys: BTreeSet<String> = flats.keys().cloned().collect();
    let missing: Vec<String> = found_keys.difference(&listed_keys).cloned().collect();
    let extra: Vec<String> = listed_keys.difference(&found_keys).cloned().collect();

    let pass = rows.iter().all(|r| r.ok)
        && missing.is_empty()
        && extra.is_empty()
        && flats.len() == cfg.primes.len();

    Lemma1Report {
        schema: 1,
        dim: cfg.dim,
        n: cfg.n,
        backend: field.spec().label(),
        listed_primes: cfg.primes.len(),
        enumerated_flats: flats.len(),
        expected_count: expected_prime_count(cfg.dim, cfg.n),
        rows,
        missing,
        extra,
        pass,
    }
}

/// Serializable dump of a configuration (tags and forms in the text
/// grammar).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigDump {
    pub schema: u32,
    pub dim: usize,
    pub n: u64,
    pub field: FieldSpec,
    pub primes: Vec<PrimeDumpEntry>,
    pub fermat: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PrimeDumpEntry {
    pub tag: PrimeTag,
    pub forms: [String; 2],
}

pub fn config_dump<F: Field>(cfg: &Configuration<F>) -> ConfigDump {
    ConfigDump {
        schema: 1,
        dim: cfg.dim,
        n: cfg.n,
        field: cfg.ring.field.spec(),
        primes: cfg
            .primes
            .iter()
            .map(|p| PrimeDumpEntry {
                tag: p.tag.clone(),
                forms: [p.forms[0].to_string(), p.forms[1].to_string()],
            })
            .collect(),
        fermat: cfg.fermat.to_string(),
    }
}

/// SHA-256 of the canonical JSON dump; certificates pin configurations
/// by this hash.
pub fn config_hash<F: Field>(cfg: &Configuration<F>) -> String {
    let json = serde_json::to_string(&config_dump(cfg)).expect("dump serializes");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
