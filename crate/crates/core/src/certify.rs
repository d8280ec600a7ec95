//! Containment verdicts and their transport to higher dimension.
//!
//! The base case at N = 2 is a direct Groebner computation: the normal
//! form of F against a basis of I^2 is a nonzero witness of
//! noncontainment, while the vanishing orders certify F in I^(3). Each
//! higher level carries a reduction certificate for the evaluation map
//! pi: x_N -> 1, checked by three exact conditions: pi(F_N) = F_{N-1} * g,
//! g has nonzero constant term (g outside the homogeneous maximal ideal),
//! and every level-(N-1) prime is matched by a level-N prime whose forms
//! pi maps into it. Together with noncontainment one level below, these
//! transport F_N outside I_N^2.

use crate::arrangement::{build_config, config_hash, Configuration};
use crate::coeff::{Field, FieldSpec};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal, Limits};
use crate::linalg;
use crate::multipoly::{Poly, RingHom, TermOrder};
use crate::symbolic::{symbolic_power_ideal, symbolic_report, SymbolicReport};
use serde::{Deserialize, Serialize};
use std::time::Instant;

pub const CODIMENSION: u32 = 2;

/// Verdict of one containment question I^(m) vs I^r, with the threshold
/// bookkeeping of the general containment theorems.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ContainmentReport {
    pub schema: u32,
    pub dim: usize,
    pub n: u64,
    pub m: u32,
    pub r: u32,
    pub codim: u32,
    /// e*r - (e - 1) with e = codim.
    pub harbourne_threshold: u32,
    /// N*r.
    pub els_threshold: u32,
    pub m_meets_harbourne: bool,
    pub m_meets_els: bool,
    pub contained: bool,
    pub verdict: String,
    /// "theorem (characteristic 0)" or "characteristic-p evidence".
    pub grade: String,
    pub backend: String,
    /// What the witness is the normal form of, when present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_of: Option<String>,
    /// Nonzero normal form witnessing noncontainment, in the text grammar.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub counterexample_to_harbourne: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbolic_member_m: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbolic_order_min: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

fn make_report(
    dim: usize,
    n: u64,
    m: u32,
    r: u32,
    contained: bool,
    spec: &FieldSpec,
) -> ContainmentReport {
    let harbourne = CODIMENSION * r - (CODIMENSION - 1);
    let els = dim as u32 * r;
    ContainmentReport {
        schema: 1,
        dim,
        n,
        m,
        r,
        codim: CODIMENSION,
        harbourne_threshold: harbourne,
        els_threshold: els,
        m_meets_harbourne: m >= harbourne,
        m_meets_els: m >= els,
        contained,
        verdict: if contained { "containment" } else { "noncontainment" }.into(),
        grade: spec.verdict_grade().into(),
        backend: spec.label(),
        witness_of: None,
        witness: None,
        counterexample_to_harbourne: !contained && m >= harbourne,
        symbolic_member_m: None,
        symbolic_order_min: None,
        timing_ms: None,
    }
}

/// The explicit radical ideal I of the configuration, as the iterated
/// intersection of its primes.
pub fn explicit_ideal<F: Field>(cfg: &Configuration<F>, limits: &Limits) -> Result<Ideal<F>> {
    symbolic_power_ideal(cfg, 1, limits)
}

/// Membership report of F in I^r, with the basis it was decided against.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrdinaryReport {
    pub schema: u32,
    pub dim: usize,
    pub n: u64,
    pub r: u32,
    pub member: bool,
    pub backend: String,
    pub grade: String,
    pub basis_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

/// Decides F in I^r by normal form against the reduced basis of I^r,
/// where I is the explicit intersection of the listed primes.
pub fn ordinary_power_check<F: Field>(
    cfg: &Configuration<F>,
    r: u32,
    limits: &Limits,
) -> Result<(OrdinaryReport, GroebnerBasis<F>)> {
    let start = Instant::now();
    let ideal = explicit_ideal(cfg, limits)?;
    let power = ideal.power(r)?;
    let gb = power.groebner(TermOrder::Grevlex, limits)?;
    let nf = gb.normal_form(&cfg.fermat);
    let member = nf.is_zero();
    let report = OrdinaryReport {
        schema: 1,
        dim: cfg.dim,
        n: cfg.n,
        r,
        member,
        backend: cfg.ring.field.spec().label(),
        grade: cfg.ring.field.spec().verdict_grade().into(),
        basis_size: gb.len(),
        witness: (!member).then(|| nf.to_string()),
        timing_ms: Some(start.elapsed().as_millis() as u64),
    };
    Ok((report, gb))
}

/// The direct N = 2 computation: F in I^(3) (vanishing orders) while the
/// normal form of F against a basis of I^2 is nonzero.
///
/// Errors with [`Error::Check`] when the symbolic side fails; a zero
/// normal form is reported as containment (and invalidates any chain
/// built on it).
pub fn base_case<F: Field>(n: u64, field: &F, limits: &Limits) -> Result<ContainmentReport> {
    let start = Instant::now();
    let cfg = build_config(2, n, field)?;
    let (ordinary, _) = ordinary_power_check(&cfg, 2, limits)?;
    let sym = symbolic_report(&cfg.fermat, &cfg, 3);
    if !sym.all_pass {
        return Err(Error::Check(format!(
            "F is expected in I^(3) at (2, {n}) but a vanishing order fell short: {:?}",
            sym.rows.iter().find(|r| !r.pass)
        )));
    }
    let mut report = make_report(2, n, 3, 2, ordinary.member, &field.spec());
    report.witness_of = Some(format!("F_{{2,{n}}} against the reduced basis of I^2"));
    report.witness = ordinary.witness;
    report.symbolic_member_m = Some(true);
    report.symbolic_order_min = sym.rows.iter().filter_map(|r| r.order).min();
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// One row of the prime-match table: a target prime of the lower level
/// and the source prime whose forms map into it under pi.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatchRow {
    pub target: String,
    pub source: String,
}

/// Machine-checkable record of one reduction step from level N to N - 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub schema: u32,
    /// Level N of the source configuration.
    pub dim: usize,
    pub n: u64,
    pub backend: String,
    pub field: FieldSpec,
    /// Images of x_0, ..., x_N under pi, in the text grammar of the
    /// target ring.
    pub hom: Vec<String>,
    /// Cofactor g with pi(F_N) = F_{N-1} * g.
    pub cofactor: String,
    /// g(0, ..., 0); nonzero constant term is the executable meaning of
    /// g outside the homogeneous maximal ideal.
    pub constant_term: String,
    pub match_table: Vec<MatchRow>,
    pub config_hash_source: String,
    pub config_hash_target: String,
    /// Where the induction bottoms out.
    pub base_case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

/// Builds and internally checks the certificate for one reduction step
/// at level N >= 3.
pub fn reduction_certificate<F: Field>(
    dim: usize,
    n: u64,
    field: &F,
) -> Result<ReductionCertificate> {
    if dim < 3 {
        return Err(Error::Invalid(format!(
            "reduction steps run at N >= 3; N = 2 is the direct base case (got {dim})"
        )));
    }
    let start = Instant::now();
    let hi = build_config(dim, n, field)?;
    let lo = build_config(dim - 1, n, field)?;
    let pi = RingHom::eval_last_at_one(&hi.ring);
    let pi_f = pi.apply(&hi.fermat);
    let g = pi_f.exact_div(&lo.fermat).ok_or_else(|| {
        Error::Certificate(format!("pi(F_{{{dim},{n}}}) is not divisible by F_{{{},{n}}}", dim - 1))
    })?;
    // g must be the product of the x_i^n - 1 over the target variables.
    let mut expected = lo.ring.one();
    for i in 0..lo.ring.nvars {
        expected = expected.mul(&lo.ring.var(i).pow(n as u32).sub(&lo.ring.one()));
    }
    if g != expected {
        return Err(Error::Certificate(format!(
            "cofactor mismatch at level {dim}: expected the product of x_i^{n} - 1"
        )));
    }
    let c0 = g.constant_term();
    let expected_c0 = field.from_i64(if dim % 2 == 0 { 1 } else { -1 });
    if field.is_zero(&c0) || c0 != expected_c0 {
        return Err(Error::Certificate(format!(
            "constant term of g at level {dim} is {} but (-1)^{dim} was expected",
            field.format_elem(&c0)
        )));
    }
    let mut match_table = Vec::with_capacity(lo.primes.len());
    for q in &lo.primes {
        let source = hi
            .primes
            .iter()
            .find(|p| p.tag == q.tag)
            .ok_or_else(|| {
                Error::Certificate(format!("no level-{dim} prime with tag {}", q.tag))
            })?;
        let span = q.rows();
        for form in &source.forms {
            let image = pi.apply(form);
            let coeffs = crate::arrangement::linear_coeffs(&image).ok_or_else(|| {
                Error::Certificate(format!(
                    "pi image of a form of {} is not a linear form",
                    source.tag
                ))
            })?;
            if !linalg::in_span(&lo.ring.field, &span, &coeffs) {
                return Err(Error::Certificate(format!(
                    "pi image of a form of {} does not lie in {}",
                    source.tag, q.tag
                )));
            }
        }
        match_table.push(MatchRow { target: q.tag.to_string(), source: source.tag.to_string() });
    }
    Ok(ReductionCertificate {
        schema: 1,
        dim,
        n,
        backend: field.spec().label(),
        field: field.spec(),
        hom: pi.images().iter().map(|p| p.to_string()).collect(),
        cofactor: g.to_string(),
        constant_term: field.format_elem(&c0),
        match_table,
        config_hash_source: config_hash(&hi),
        config_hash_target: config_hash(&lo),
        base_case: format!("direct Groebner computation at N = 2, n = {n}"),
        timing_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Re-checks a certificate from its own data: configuration hashes, the
/// factorization pi(F_N) = F_{N-1} * g with g parsed from the record, the
/// nonzero constant term, and the full prime-match table. Any failed
/// condition makes the certificate unsound.
pub fn verify_certificate<F: Field>(cert: &ReductionCertificate, field: &F) -> Result<()> {
    if cert.field != field.spec() {
        return Err(Error::Certificate(format!(
            "certificate was issued over {} but is being verified over {}",
            cert.field.label(),
            field.spec().label()
        )));
    }
    let hi = build_config(cert.dim, cert.n, field)?;
    let lo = build_config(cert.dim - 1, cert.n, field)?;
    if config_hash(&hi) != cert.config_hash_source {
        return Err(Error::Certificate("source configuration hash mismatch".into()));
    }
    if config_hash(&lo) != cert.config_hash_target {
        return Err(Error::Certificate("target configuration hash mismatch".into()));
    }
    if cert.hom.len() != hi.ring.nvars {
        return Err(Error::Certificate("homomorphism arity mismatch".into()));
    }
    let images: Vec<Poly<F>> = cert
        .hom
        .iter()
        .map(|s| lo.ring.parse(s))
        .collect::<Result<_>>()?;
    let pi = RingHom::new(hi.ring.clone(), lo.ring.clone(), images)?;
    let g = lo.ring.parse(&cert.cofactor)?;
    // Condition 1: pi(F_N) = F_{N-1} * g, exactly.
    if pi.apply(&hi.fermat) != lo.fermat.mul(&g) {
        return Err(Error::Certificate(
            "pi(F) does not equal F * g for the recorded cofactor".into(),
        ));
    }
    // Condition 2: g has nonzero constant term (g not in (x_0, ..., x_{N-1})).
    let c0 = g.constant_term();
    if field.is_zero(&c0) {
        return Err(Error::Certificate("recorded cofactor has zero constant term".into()));
    }
    let recorded = crate::multipoly::text::parse_scalar(&cert.constant_term, field)?;
    if recorded != c0 {
        return Err(Error::Certificate(
            "recorded constant term disagrees with the cofactor".into(),
        ));
    }
    // Condition 3: every target prime is matched by a source prime whose
    // forms map into it.
    if cert.match_table.len() != lo.primes.len() {
        return Err(Error::Certificate(format!(
            "match table covers {} primes, target configuration lists {}",
            cert.match_table.len(),
            lo.primes.len()
        )));
    }
    for (q, row) in lo.primes.iter().zip(&cert.match_table) {
        if row.target != q.tag.to_string() {
            return Err(Error::Certificate(format!(
                "match table row targets {} but the configuration lists {}",
                row.target, q.tag
            )));
        }
        let source = hi
            .primes
            .iter()
            .find(|p| p.tag.to_string() == row.source)
            .ok_or_else(|| {
                Error::Certificate(format!("match table names unknown source {}", row.source))
            })?;
        let span = q.rows();
        for form in &source.forms {
            let image = pi.apply(form);
            let coeffs = crate::arrangement::linear_coeffs(&image).ok_or_else(|| {
                Error::Certificate(format!(
                    "pi image of a form of {} is not a linear form",
                    source.tag
                ))
            })?;
            if !linalg::in_span(&lo.ring.field, &span, &coeffs) {
                return Err(Error::Certificate(format!(
                    "pi image of a form of {} is outside {}",
                    source.tag, q.tag
                )));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainLevel {
    pub dim: usize,
    /// "direct" at the base, "reduction" above it.
    pub method: String,
    pub report: ContainmentReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ReductionCertificate>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainReport {
    pub schema: u32,
    pub n: u64,
    pub backend: String,
    pub levels: Vec<ChainLevel>,
    pub all_noncontainment: bool,
}

/// Runs the full chain: direct base case at N = 2, then one verified
/// reduction certificate per level up to `dim_max`. The symbolic side
/// F in I^(3) is re-checked directly at every level. A failed level
/// invalidates all higher levels (the function errors out).
pub fn verify_chain<F: Field>(
    dim_max: usize,
    n: u64,
    field: &F,
    limits: &Limits,
) -> Result<ChainReport> {
    if dim_max < 2 {
        return Err(Error::Invalid(format!("chain needs N_max >= 2, got {dim_max}")));
    }
    let base = base_case(n, field, limits)?;
    if base.contained {
        return Err(Error::Check(
            "base case reports containment; the chain has nothing to transport".into(),
        ));
    }
    let mut levels = vec![ChainLevel {
        dim: 2,
        method: "direct".into(),
        report: base,
        certificate: None,
    }];
    for dim in 3..=dim_max {
        let start = Instant::now();
        let cert = reduction_certificate(dim, n, field)?;
        verify_certificate(&cert, field)?;
        let cfg = build_config(dim, n, field)?;
        let sym = symbolic_report(&cfg.fermat, &cfg, 3);
        if !sym.all_pass {
            return Err(Error::Check(format!(
                "symbolic membership failed at level {dim}: {:?}",
                sym.rows.iter().find(|r| !r.pass)
            )));
        }
        let mut report = make_report(dim, n, 3, 2, false, &field.spec());
        report.witness_of = Some(format!(
            "noncontainment transported from N = {} by the verified certificate",
            dim - 1
        ));
        report.symbolic_member_m = Some(true);
        report.symbolic_order_min = sym.rows.iter().filter_map(|r| r.order).min();
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
        levels.push(ChainLevel {
            dim,
            method: "reduction".into(),
            report,
            certificate: Some(cert),
        });
    }
    Ok(ChainReport {
        schema: 1,
        n,
        backend: field.spec().label(),
        levels,
        all_noncontainment: true,
    })
}

/// Generic containment check I^(m) vs I^r on a configuration: computes
/// explicit generators of the symbolic power and reduces each against a
/// basis of I^r. Reports how (m, r) sits against the N*r and
/// e*r - (e - 1) thresholds.
pub fn check_containment<F: Field>(
    cfg: &Configuration<F>,
    m: u32,
    r: u32,
    limits: &Limits,
) -> Result<ContainmentReport> {
    if m == 0 || r == 0 {
        return Err(Error::Invalid("containment check needs m, r >= 1".into()));
    }
    let start = Instant::now();
    let sym = symbolic_power_ideal(cfg, m, limits)?;
    let ideal = explicit_ideal(cfg, limits)?;
    let power = ideal.power(r)?;
    let gb = power.groebner(TermOrder::Grevlex, limits)?;
    let mut offending = None;
    for (k, gen) in sym.gens().iter().enumerate() {
        let nf = gb.normal_form(gen);
        if !nf.is_zero() {
            offending = Some((k, nf));
            break;
        }
    }
    let contained = offending.is_none();
    let mut report = make_report(cfg.dim, cfg.n, m, r, contained, &cfg.ring.field.spec());
    if let Some((k, nf)) = offending {
        report.witness_of = Some(format!(
            "generator {k} of I^({m}) against the reduced basis of I^{r}"
        ));
        report.witness = Some(nf.to_string());
    }
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Fast symbolic-only report used by the check-symbolic front end.
pub fn symbolic_check<F: Field>(cfg: &Configuration<F>, m: u32) -> SymbolicReport {
    let start = Instant::now();
    let mut report = symbolic_report(&cfg.fermat, cfg, m);
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CyclotomicField, PrimeField};

    #[test]
    fn base_case_over_f7() {
        let f = PrimeField::new(7, 3).unwrap();
        let report = base_case(3, &f, &Limits::default()).unwrap();
        assert!(!report.contained, "F_{{2,3}} is not in I^2");
        assert_eq!(report.verdict, "noncontainment");
        assert_eq!(report.symbolic_member_m, Some(true));
        assert_eq!(report.symbolic_order_min, Some(3));
        assert!(report.witness.is_some());
        assert_eq!(report.harbourne_threshold, 3);
        assert_eq!(report.els_threshold, 4);
        assert!(report.m_meets_harbourne);
        assert!(report.counterexample_to_harbourne);
        assert_eq!(report.grade, "characteristic-p evidence");
    }

    #[test]
    fn members_of_i_squared_reduce_to_zero() {
        let f = PrimeField::new(7, 3).unwrap();
        let cfg = build_config(2, 3, &f).unwrap();
        let limits = Limits::default();
        let ideal = explicit_ideal(&cfg, &limits).unwrap();
        let sq = ideal.power(2).unwrap();
        let gb = sq.groebner(TermOrder::Grevlex, &limits).unwrap();
        for (i, a) in ideal.gens().iter().enumerate() {
            for b in ideal.gens().iter().skip(i) {
                assert!(gb.normal_form(&a.mul(b)).is_zero());
            }
        }
    }

    #[test]
    fn base_case_witness_is_replayable() {
        let f = PrimeField::new(7, 3).unwrap();
        let limits = Limits::default();
        let cfg = build_config(2, 3, &f).unwrap();
        let (report, gb) = ordinary_power_check(&cfg, 2, &limits).unwrap();
        assert!(!report.member);
        let witness = cfg.ring.parse(report.witness.as_ref().unwrap()).unwrap();
        assert_eq!(gb.normal_form(&witness), witness, "witness is its own normal form");
    }

    #[test]
    fn certificate_at_level_3() {
        let f = CyclotomicField::new(3).unwrap();
        let cert = reduction_certificate(3, 3, &f).unwrap();
        let lo_ring = build_config(2, 3, &f).unwrap().ring;
        let g = lo_ring.parse(&cert.cofactor).unwrap();
        let expected = lo_ring.parse("(x0^3 - 1)*(x1^3 - 1)*(x2^3 - 1)").unwrap();
        assert_eq!(g, expected);
        assert_eq!(cert.constant_term, "-1");
        assert_eq!(cert.match_table.len(), 12);
        for row in &cert.match_table {
            assert_eq!(row.target, row.source, "level-2 primes are fixed by pi");
        }
        verify_certificate(&cert, &f).unwrap();
    }

    #[test]
    fn corrupted_cofactor_rejected() {
        let f = CyclotomicField::new(3).unwrap();
        let mut cert = reduction_certificate(3, 3, &f).unwrap();
        // Zero out the constant term of g.
        cert.cofactor = format!("{} + 1", cert.cofactor);
        let err = verify_certificate(&cert, &f).unwrap_err();
        assert!(matches!(err, Error::Certificate(_)), "{err}");
    }

    #[test]
    fn corrupted_match_table_rejected() {
        let f = CyclotomicField::new(3).unwrap();
        let mut cert = reduction_certificate(3, 3, &f).unwrap();
        cert.match_table[0].source = "J(0,1,3;a=0,b=0)".into();
        let err = verify_certificate(&cert, &f).unwrap_err();
        assert!(matches!(err, Error::Certificate(_)), "{err}");
    }

    #[test]
    fn wrong_field_rejected() {
        let f = CyclotomicField::new(3).unwrap();
        let cert = reduction_certificate(3, 3, &f).unwrap();
        let other = PrimeField::new(7, 3).unwrap();
        assert!(verify_certificate(&cert, &other).is_err());
    }

    #[test]
    fn chain_to_level_4_over_f7() {
        let f = PrimeField::new(7, 3).unwrap();
        let chain = verify_chain(4, 3, &f, &Limits::default()).unwrap();
        assert_eq!(chain.levels.len(), 3);
        assert_eq!(chain.levels[0].method, "direct");
        assert_eq!(chain.levels[1].method, "reduction");
        assert_eq!(chain.levels[2].method, "reduction");
        assert!(chain.all_noncontainment);
        for level in &chain.levels {
            assert!(!level.report.contained);
            assert_eq!(level.report.symbolic_member_m, Some(true));
            assert_eq!(level.report.symbolic_order_min, Some(3));
        }
        assert!(chain.levels[1].certificate.is_some());
    }

    #[test]
    fn containment_thresholds_at_2_3() {
        let f = PrimeField::new(7, 3).unwrap();
        let cfg = build_config(2, 3, &f).unwrap();
        let limits = Limits::default();
        // m = r = 1: I^(1) = I for the radical configuration ideal.
        let rr = check_containment(&cfg, 1, 1, &limits).unwrap();
        assert!(rr.contained);
        assert!(!rr.counterexample_to_harbourne);
        // (3, 2) is the counterexample to the e = 2 bound.
        let report = check_containment(&cfg, 3, 2, &limits).unwrap();
        assert!(!report.contained);
        assert_eq!(report.harbourne_threshold, 3);
        assert!(report.m_meets_harbourne);
        assert!(report.counterexample_to_harbourne);
        assert!(report.witness.is_some());
        assert!(matches!(check_containment(&cfg, 0, 1, &limits), Err(Error::Invalid(_))));
    }
}
