//! Text rendering of reports and the timing-stripping pass for
//! deterministic JSON.

use ceva_core::certify::{ChainReport, ContainmentReport, OrdinaryReport};
use ceva_core::{Configuration, Field, Lemma1Report, SymbolicReport};

/// Removes every "timing_ms" key, recursively. With timings gone,
/// identical inputs produce byte-identical reports.
pub fn strip_timings(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("timing_ms");
            for v in map.values_mut() {
                strip_timings(v);
            }
        }
        serde_json::Value::Array(items) => {
            for v in items {
                strip_timings(v);
            }
        }
        _ => {}
    }
}

pub fn config_text<F: Field>(cfg: &Configuration<F>) -> String {
    let c_count = cfg
        .primes
        .iter()
        .filter(|p| matches!(p.tag, ceva_core::PrimeTag::C { .. }))
        .count();
    let mut out = format!(
        "configuration (N = {}, n = {}) over {}\n",
        cfg.dim,
        cfg.n,
        cfg.ring.field.spec().label()
    );
    out.push_str(&format!(
        "primes: {} ({} J-type + {} C-type)\n",
        cfg.primes.len(),
        cfg.primes.len() - c_count,
        c_count
    ));
    out.push_str(&format!(
        "deg F = {}, {} terms\n",
        cfg.fermat.degree().unwrap_or(0),
        cfg.fermat.num_terms()
    ));
    for p in &cfg.primes {
        out.push_str(&format!("  {}: ({}, {})\n", p.tag, p.forms[0], p.forms[1]));
    }
    out.trim_end().to_string()
}

pub fn lemma1_text(report: &Lemma1Report) -> String {
    let mut out = format!(
        "lemma-1 verification at (N = {}, n = {}) over {}\n",
        report.dim, report.n, report.backend
    );
    out.push_str(&format!(
        "listed primes: {} | enumerated flats: {} | expected: {}\n",
        report.listed_primes, report.enumerated_flats, report.expected_count
    ));
    for row in &report.rows {
        out.push_str(&format!(
            "  {:<22} factors: {} (expected {}) {}\n",
            row.tag,
            row.vanishing_factors,
            row.expected,
            if row.ok { "ok" } else { "MISMATCH" }
        ));
    }
    for key in &report.missing {
        out.push_str(&format!("  UNLISTED FLAT: {key}\n"));
    }
    for key in &report.extra {
        out.push_str(&format!("  UNMATCHED PRIME: {key}\n"));
    }
    out.push_str(if report.pass { "result: PASS" } else { "result: FAIL" });
    out
}

pub fn symbolic_text(report: &SymbolicReport) -> String {
    let mut out = format!(
        "symbolic membership of F at (N = {}, n = {}), threshold m = {} over {}\n",
        report.dim, report.n, report.m, report.backend
    );
    for row in &report.rows {
        let order = row
            .order
            .map(|o| o.to_string())
            .unwrap_or_else(|| "inf".into());
        out.push_str(&format!(
            "  {:<22} order: {:<4} threshold: {} {}\n",
            row.tag,
            order,
            row.threshold,
            if row.pass { "pass" } else { "fail" }
        ));
    }
    out.push_str(&format!(
        "result: {}",
        if report.all_pass { "PASS (F in I^(m))" } else { "FAIL (F not in I^(m))" }
    ));
    out
}

pub fn ordinary_text(report: &OrdinaryReport) -> String {
    let mut out = format!(
        "ordinary membership of F in I^{} at (N = {}, n = {}) over {}\n",
        report.r, report.dim, report.n, report.backend
    );
    out.push_str(&format!("basis size: {}\n", report.basis_size));
    match &report.witness {
        Some(w) => out.push_str(&format!(
            "verdict: nonmember ({})\nwitness normal form: {w}",
            report.grade
        )),
        None => out.push_str(&format!("verdict: member ({})", report.grade)),
    }
    out
}

pub fn containment_text(report: &ContainmentReport) -> String {
    let mut out = format!(
        "containment I^({}) in I^{} at (N = {}, n = {}) over {}\n",
        report.m, report.r, report.dim, report.n, report.backend
    );
    out.push_str(&format!(
        "thresholds: e*r - (e-1) = {} ({}), N*r = {} ({})\n",
        report.harbourne_threshold,
        if report.m_meets_harbourne { "m meets it" } else { "m below" },
        report.els_threshold,
        if report.m_meets_els { "m meets it" } else { "m below" },
    ));
    out.push_str(&format!("verdict: {} ({})", report.verdict, report.grade));
    if report.counterexample_to_harbourne {
        out.push_str("\ncounterexample to the e = 2 bound");
    }
    if let Some(w) = &report.witness {
        out.push_str(&format!("\nwitness normal form: {w}"));
    }
    out
}

pub fn chain_text(chain: &ChainReport) -> String {
    let mut out = format!(
        "certificate chain for n = {} over {}\n",
        chain.n, chain.backend
    );
    for level in &chain.levels {
        let report = &level.report;
        out.push_str(&format!(
            "  N = {}: {} ({}), F in I^(3): {}, minimal vanishing order: {}\n",
            level.dim,
            report.verdict,
            level.method,
            report.symbolic_member_m.unwrap_or(false),
            report
                .symbolic_order_min
                .map(|o| o.to_string())
                .unwrap_or_else(|| "-".into()),
        ));
        if let Some(cert) = &level.certificate {
            out.push_str(&format!(
                "        certificate: g with constant term {}, {} matched primes\n",
                cert.constant_term,
                cert.match_table.len()
            ));
        }
    }
    out.push_str(&format!(
        "result: {}",
        if chain.all_noncontainment { "noncontainment at every level" } else { "FAILED" }
    ));
    out
}
