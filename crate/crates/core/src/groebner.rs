//! Buchberger engine and ideal arithmetic: normal forms, reduced bases,
//! membership, products, powers, and intersections via elimination.
//!
//! Everything is deterministic: the pair selection is the normal strategy
//! (smallest lcm under the active order, ties by input index), and reduced
//! bases are sorted by leading term.

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::multipoly::{Monomial, Poly, Ring, TermOrder};
use itertools::Itertools;
use std::cmp::Ordering;
use std::time::{Duration, Instant};

/// Resource caps for Groebner computations. Exceeding a cap aborts with
/// [`Error::Resource`]; an abort is an operational failure, never a
/// mathematical verdict.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Maximum number of basis elements during completion.
    pub max_basis: usize,
    /// Maximum total degree of any inserted basis element.
    pub max_degree: u32,
    /// Wall-clock budget for a single completion.
    pub time_budget: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 4096, max_degree: 256, time_budget: None }
    }
}

impl Limits {
    fn check(&self, start: Instant, basis_len: usize) -> Result<()> {
        if basis_len > self.max_basis {
            return Err(Error::Resource(format!(
                "basis size {basis_len} exceeds cap {}",
                self.max_basis
            )));
        }
        if let Some(budget) = self.time_budget {
            let used = start.elapsed();
            if used > budget {
                return Err(Error::Resource(format!(
                    "time budget {budget:?} exhausted after {used:?}"
                )));
            }
        }
        Ok(())
    }

    fn check_degree(&self, deg: u32) -> Result<()> {
        if deg > self.max_degree {
            return Err(Error::Resource(format!(
                "intermediate degree {deg} exceeds cap {}",
                self.max_degree
            )));
        }
        Ok(())
    }
}

/// A finitely generated ideal. Identity is membership-based; the stored
/// generator list is just one presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Poly<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: Ring<F>, gens: Vec<Poly<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Groebner basis under `ord`.
    pub fn groebner(&self, ord: TermOrder, limits: &Limits) -> Result<GroebnerBasis<F>> {
        let basis = buchberger_engine(&self.ring, &self.gens, ord, limits)?;
        Ok(GroebnerBasis::from_reduced(self.ring.clone(), ord, basis))
    }

    /// I^r, generated by all r-fold products of generators (with
    /// repetition). r = 0 is rejected: the unit ideal is out of scope.
    pub fn power(&self, r: u32) -> Result<Ideal<F>> {
        if r == 0 {
            return Err(Error::Invalid("ideal power r = 0 rejected (unit ideal excluded)".into()));
        }
        let mut products: Vec<Poly<F>> = Vec::new();
        for combo in (0..self.gens.len()).combinations_with_replacement(r as usize) {
            let mut p = self.ring.one();
            for i in combo {
                p = p.mul(&self.gens[i]);
            }
            if !p.is_zero() && !products.contains(&p) {
                products.push(p);
            }
        }
        Ok(Ideal::new(self.ring.clone(), products))
    }

    /// I ∩ J by the auxiliary-variable construction <t·I, (1−t)·J>
    /// eliminated with a block order on t. The returned generators are the
    /// reduced grevlex basis of the intersection.
    pub fn intersect(&self, other: &Ideal<F>, limits: &Limits) -> Result<Ideal<F>> {
        assert!(self.ring == other.ring, "ideals from different rings");
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::new(self.ring.clone(), Vec::new()));
        }
        let ext = Ring::new(self.ring.field.clone(), self.ring.nvars + 1);
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            // t * f
            gens.push(f.prepend_var(&ext, 1));
        }
        for g in &other.gens {
            // (1 - t) * g
            gens.push(g.prepend_var(&ext, 0).sub(&g.prepend_var(&ext, 1)));
        }
        let gb = buchberger_engine(&ext, &gens, TermOrder::Block { first: 1 }, limits)?;
        let eliminated: Vec<Poly<F>> = gb
            .into_iter()
            .filter(|p| {
                p.leading(TermOrder::Block { first: 1 })
                    .map_or(false, |(m, _)| m.exps()[0] == 0)
            })
            .map(|p| p.drop_first_var(&self.ring))
            .collect();
        let reduced = reduce_basis(&self.ring.field, eliminated, TermOrder::Grevlex);
        Ok(Ideal::new(self.ring.clone(), reduced))
    }

    /// Membership f ∈ I, via a grevlex basis.
    pub fn member(&self, f: &Poly<F>, limits: &Limits) -> Result<bool> {
        let gb = self.groebner(TermOrder::Grevlex, limits)?;
        Ok(gb.normal_form(f).is_zero())
    }

    /// J ⊆ I: every generator of J reduces to zero against a basis of I.
    pub fn contains_ideal(&self, other: &Ideal<F>, limits: &Limits) -> Result<bool> {
        let gb = self.groebner(TermOrder::Grevlex, limits)?;
        Ok(other.gens.iter().all(|g| gb.normal_form(g).is_zero()))
    }

    /// Membership-based equality.
    pub fn ideal_eq(&self, other: &Ideal<F>, limits: &Limits) -> Result<bool> {
        Ok(self.contains_ideal(other, limits)? && other.contains_ideal(self, limits)?)
    }
}

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading term of another, sorted by leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    order: TermOrder,
    basis: Vec<Poly<F>>,
    prepared: Vec<Prepared<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    fn from_reduced(ring: Ring<F>, order: TermOrder, basis: Vec<Poly<F>>) -> Self {
        let prepared = basis.iter().map(|g| Prepared::new(g, order, &ring.field)).collect();
        GroebnerBasis { ring, order, basis, prepared }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn elements(&self) -> &[Poly<F>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// The unique remainder of f: no remainder term is divisible by any
    /// leading term of the basis. normal_form(f) = 0 iff f is a member.
    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        assert!(*f.ring() == self.ring, "polynomial not in the basis ring");
        normal_form_prepared(f, &self.prepared, &self.ring.field, self.order)
    }

    pub fn contains_poly(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks the defining property directly: every S-polynomial of basis
    /// pairs reduces to zero.
    pub fn all_spolys_reduce_to_zero(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let s = spoly(&self.ring.field, &self.basis[i], &self.basis[j], self.order);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks reducedness: leading coefficients 1 and no term of any
    /// element divisible by another element's leading term.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.basis.iter().enumerate() {
            let Some((_, lc)) = g.leading(self.order) else { return false };
            if !self.ring.field.is_one(lc) {
                return false;
            }
            for (j, other) in self.prepared.iter().enumerate() {
                if i == j {
                    continue;
                }
                if g.terms().any(|(m, _)| other.lt.divides(m)) {
                    return false;
                }
            }
        }
        true
    }

    /// One polynomial per line in the text grammar, preceded by a header
    /// naming the order and field.
    pub fn dump(&self) -> String {
        let mut out = format!(
            "# groebner basis | field: {} | order: {} | elements: {}\n",
            self.ring.field.spec().label(),
            self.order.name(),
            self.basis.len()
        );
        for g in &self.basis {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }
}

/// Basis element prepared for division: leading term split off, tail
/// sorted ascending under the order.
#[derive(Clone, Debug)]
struct Prepared<F: Field> {
    lt: Monomial,
    lc_inv: F::Elem,
    tail: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Prepared<F> {
    fn new(g: &Poly<F>, ord: TermOrder, field: &F) -> Self {
        let mut terms = sorted_terms_asc(g, ord);
        let (lt, lc) = terms.pop().expect("nonzero basis element");
        Prepared { lt, lc_inv: field.inv(&lc).expect("nonzero leading coefficient"), tail: terms }
    }
}

fn sorted_terms_asc<F: Field>(p: &Poly<F>, ord: TermOrder) -> Vec<(Monomial, F::Elem)> {
    let mut v: Vec<(Monomial, F::Elem)> =
        p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    if ord != TermOrder::Grevlex {
        v.sort_by(|a, b| ord.compare(&a.0, &b.0));
    }
    v
}

/// work -= qc * qm * tail, both lists ascending under ord.
fn merge_sub<F: Field>(
    work: Vec<(Monomial, F::Elem)>,
    tail: &[(Monomial, F::Elem)],
    qm: &Monomial,
    qc: &F::Elem,
    field: &F,
    ord: TermOrder,
) -> Vec<(Monomial, F::Elem)> {
    // Multiplying by a fixed monomial preserves the (multiplicative) order.
    let sub: Vec<(Monomial, F::Elem)> =
        tail.iter().map(|(m, c)| (m.mul(qm), field.mul(c, qc))).collect();
    let mut out = Vec::with_capacity(work.len() + sub.len());
    let mut wi = work.into_iter().peekable();
    let mut si = sub.into_iter().peekable();
    loop {
        match (wi.peek(), si.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(wi.next().unwrap()),
            (None, Some(_)) => {
                let (m, c) = si.next().unwrap();
                out.push((m, field.neg(&c)));
            }
            (Some((wm, _)), Some((sm, _))) => match ord.compare(wm, sm) {
                Ordering::Less => out.push(wi.next().unwrap()),
                Ordering::Greater => {
                    let (m, c) = si.next().unwrap();
                    out.push((m, field.neg(&c)));
                }
                Ordering::Equal => {
                    let (m, wc) = wi.next().unwrap();
                    let (_, sc) = si.next().unwrap();
                    let c = field.sub(&wc, &sc);
                    if !field.is_zero(&c) {
                        out.push((m, c));
                    }
                }
            },
        }
    }
    out
}

fn normal_form_prepared<F: Field>(
    f: &Poly<F>,
    basis: &[Prepared<F>],
    field: &F,
    ord: TermOrder,
) -> Poly<F> {
    let ring = f.ring().clone();
    let mut work = sorted_terms_asc(f, ord);
    let mut remainder = ring.zero();
    while let Some((m, c)) = work.pop() {
        match basis.iter().find(|g| g.lt.divides(&m)) {
            None => remainder.add_term(m, c),
            Some(g) => {
                let qm = m.div(&g.lt).expect("divisibility just checked");
                let qc = field.mul(&c, &g.lc_inv);
                work = merge_sub(work, &g.tail, &qm, &qc, field, ord);
            }
        }
    }
    remainder
}

fn spoly<F: Field>(field: &F, f: &Poly<F>, g: &Poly<F>, ord: TermOrder) -> Poly<F> {
    let (fm, fc) = f.leading(ord).expect("nonzero");
    let (gm, gc) = g.leading(ord).expect("nonzero");
    let l = fm.lcm(gm);
    let fc_inv = field.inv(fc).expect("nonzero leading coefficient");
    let gc_inv = field.inv(gc).expect("nonzero leading coefficient");
    let a = f.mul_term(&l.div(fm).unwrap(), &fc_inv);
    let b = g.mul_term(&l.div(gm).unwrap(), &gc_inv);
    a.sub(&b)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger completion returning the reduced basis. Pair selection is
/// the normal strategy; Buchberger's coprime-leading-term and chain
/// criteria prune the queue.
pub(crate) fn buchberger_engine<F: Field>(
    ring: &Ring<F>,
    gens: &[Poly<F>],
    ord: TermOrder,
    limits: &Limits,
) -> Result<Vec<Poly<F>>> {
    let field = ring.field.clone();
    let start = Instant::now();
    let mut basis: Vec<Poly<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(ord)).collect();
    let mut prepared: Vec<Prepared<F>> =
        basis.iter().map(|g| Prepared::new(g, ord, &field)).collect();
    let mut pairs: Vec<Pair> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(Pair { i, j, lcm: prepared[i].lt.lcm(&prepared[j].lt) });
        }
    }
    while !pairs.is_empty() {
        limits.check(start, basis.len())?;
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                ord.compare(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j))
            })
            .map(|(idx, _)| idx)
            .expect("nonempty");
        let pair = pairs.remove(best);
        let (i, j) = (pair.i, pair.j);
        if prepared[i].lt.coprime(&prepared[j].lt) {
            continue;
        }
        let still_pending = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            pairs.iter().any(|p| p.i == a && p.j == b)
        };
        let chain_redundant = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && prepared[k].lt.divides(&pair.lcm)
                && !still_pending(i, k)
                && !still_pending(j, k)
        });
        if chain_redundant {
            continue;
        }
        let s = spoly(&field, &basis[i], &basis[j], ord);
        let r = normal_form_prepared(&s, &prepared, &field, ord);
        if r.is_zero() {
            continue;
        }
        limits.check_degree(r.degree().expect("nonzero"))?;
        let r = r.monic(ord);
        let t = basis.len();
        let r_prepared = Prepared::new(&r, ord, &field);
        for k in 0..t {
            pairs.push(Pair { i: k, j: t, lcm: prepared[k].lt.lcm(&r_prepared.lt) });
        }
        basis.push(r);
        prepared.push(r_prepared);
    }
    Ok(reduce_basis(&field, basis, ord))
}

/// Minimalizes and interreduces a Groebner basis: drops elements whose
/// leading term another element's leading term divides, fully reduces
/// each survivor against the others, normalizes to monic, and sorts by
/// leading term. The result is the reduced basis (unique per order).
pub(crate) fn reduce_basis<F: Field>(
    field: &F,
    basis: Vec<Poly<F>>,
    ord: TermOrder,
) -> Vec<Poly<F>> {
    let basis: Vec<Poly<F>> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    let lts: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading(ord).expect("nonzero").0.clone())
        .collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if lts[j].divides(&lts[i]) && (lts[j] != lts[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly<F>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Prepared<F>> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, h)| (j != i).then(|| Prepared::new(h, ord, field)))
            .collect();
        let reduced = normal_form_prepared(g, &others, field, ord);
        debug_assert!(!reduced.is_zero(), "minimal element vanished in interreduction");
        out.push(reduced.monic(ord));
    }
    out.sort_by(|a, b| {
        ord.compare(
            a.leading(ord).expect("nonzero").0,
            b.leading(ord).expect("nonzero").0,
        )
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CyclotomicField, PrimeField};

    fn qring(nvars: usize) -> Ring<CyclotomicField> {
        Ring::new(CyclotomicField::new(3).unwrap(), nvars)
    }

    fn ideal_of(ring: &Ring<CyclotomicField>, gens: &[&str]) -> Ideal<CyclotomicField> {
        Ideal::new(ring.clone(), gens.iter().map(|s| ring.parse(s).unwrap()).collect())
    }

    #[test]
    fn single_monomial_is_its_own_basis() {
        let r = qring(2);
        let gb = ideal_of(&r, &["x0"]).groebner(TermOrder::Grevlex, &Limits::default()).unwrap();
        assert_eq!(gb.elements(), &[r.parse("x0").unwrap()]);
        assert!(gb.is_reduced());
    }

    #[test]
    fn monomial_pair_already_a_basis() {
        // S(x0^2, x0*x1) reduces to zero.
        let r = qring(2);
        let gb = ideal_of(&r, &["x0^2", "x0*x1"])
            .groebner(TermOrder::Grevlex, &Limits::default())
            .unwrap();
        assert_eq!(
            gb.elements(),
            &[r.parse("x0*x1").unwrap(), r.parse("x0^2").unwrap()]
        );
        assert!(gb.all_spolys_reduce_to_zero());
    }

    #[test]
    fn linear_forms_reduce_like_row_reduction() {
        // {x0 - e*x1, x0 - e^2*x2} -> two monic linear forms whose span
        // matches Gaussian elimination on the coefficient matrix.
        let r = qring(3);
        let gb = ideal_of(&r, &["x0 - e*x1", "x0 - e^2*x2"])
            .groebner(TermOrder::Grevlex, &Limits::default())
            .unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.is_reduced());
        for g in gb.elements() {
            assert_eq!(g.degree(), Some(1));
            let (_, lc) = g.leading(TermOrder::Grevlex).unwrap();
            assert!(r.field.is_one(lc));
        }
        // Row reduction oracle: x0 - e*x1 and (x0 - e*x1) - (x0 - e^2*x2)
        // = e^2*x2 - e*x1 span the same plane; check membership both ways.
        let l = Limits::default();
        let oracle = ideal_of(&r, &["x0 - e*x1", "e^2*x2 - e*x1"]);
        assert!(ideal_of(&r, &["x0 - e*x1", "x0 - e^2*x2"]).ideal_eq(&oracle, &l).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let r = qring(2);
        let l = Limits::default();
        let i = ideal_of(&r, &["x0^2 - x1", "x0*x1 - 1"]);
        let gb = i.groebner(TermOrder::Grevlex, &l).unwrap();
        for g in i.gens() {
            assert!(gb.normal_form(g).is_zero());
        }
        // Unit stays itself against a proper homogeneous ideal.
        let homog = ideal_of(&r, &["x0^2", "x0*x1"]).groebner(TermOrder::Grevlex, &l).unwrap();
        assert_eq!(homog.normal_form(&r.one()), r.one());
        // Substitute the leading term twice.
        let lin = ideal_of(&r, &["x0 - x1"]).groebner(TermOrder::Grevlex, &l).unwrap();
        assert_eq!(lin.normal_form(&r.parse("x0^2").unwrap()), r.parse("x1^2").unwrap());
    }

    #[test]
    fn normal_form_is_idempotent() {
        let r = qring(2);
        let l = Limits::default();
        let gb = ideal_of(&r, &["x0^2 - x1", "x1^2 - e"]).groebner(TermOrder::Grevlex, &l).unwrap();
        let f = r.parse("x0^5 + x0^2*x1^2 - 2*x0 + e^2").unwrap();
        let nf = gb.normal_form(&f);
        assert_eq!(gb.normal_form(&nf), nf);
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = qring(2);
        let l = Limits::default();
        let i = ideal_of(&r, &["x0"]);
        let j = ideal_of(&r, &["x1"]);
        let meet = i.intersect(&j, &l).unwrap();
        // Oracle: brute force over all monomials of degree <= 3.
        let gb = meet.groebner(TermOrder::Grevlex, &l).unwrap();
        let gbi = i.groebner(TermOrder::Grevlex, &l).unwrap();
        let gbj = j.groebner(TermOrder::Grevlex, &l).unwrap();
        for e0 in 0..=3u16 {
            for e1 in 0..=3u16 {
                if e0 as u32 + e1 as u32 > 3 {
                    continue;
                }
                let m = r.monomial(Monomial::new(vec![e0, e1]), r.field.one());
                let both = gbi.contains_poly(&m) && gbj.contains_poly(&m);
                assert_eq!(gb.contains_poly(&m), both, "monomial {m}");
            }
        }
        assert!(meet.ideal_eq(&ideal_of(&r, &["x0*x1"]), &l).unwrap());
    }

    #[test]
    fn intersection_is_idempotent() {
        let r = qring(2);
        let l = Limits::default();
        let i = ideal_of(&r, &["x0 - x1", "x1^2"]);
        let meet = i.intersect(&i, &l).unwrap();
        assert!(meet.ideal_eq(&i, &l).unwrap());
    }

    #[test]
    fn intersection_of_two_planes() {
        let r = qring(3);
        let l = Limits::default();
        let i = ideal_of(&r, &["x0", "x1"]);
        let j = ideal_of(&r, &["x0", "x2"]);
        let meet = i.intersect(&j, &l).unwrap();
        assert!(meet.ideal_eq(&ideal_of(&r, &["x0", "x1*x2"]), &l).unwrap());
    }

    #[test]
    fn power_examples() {
        let r = qring(2);
        let l = Limits::default();
        let i = ideal_of(&r, &["x0", "x1"]);
        assert!(i.power(1).unwrap().ideal_eq(&i, &l).unwrap());
        let sq = i.power(2).unwrap();
        assert_eq!(
            sq.gens().len(),
            3,
            "C(2+2-1, 2) = 3 products before pruning, all distinct here"
        );
        assert!(sq.ideal_eq(&ideal_of(&r, &["x0^2", "x0*x1", "x1^2"]), &l).unwrap());
        assert!(matches!(i.power(0), Err(Error::Invalid(_))));
        // Stars and bars: 3 generators, r = 2 -> C(4, 2) = 6.
        let three = ideal_of(&r, &["x0", "x1", "x0 + x1"]);
        assert_eq!(three.power(2).unwrap().gens().len(), 6);
    }

    #[test]
    fn containment_examples() {
        let r = qring(2);
        let l = Limits::default();
        let i = ideal_of(&r, &["x0", "x1"]);
        assert!(i.contains_ideal(&i.power(2).unwrap(), &l).unwrap());
        assert!(!ideal_of(&r, &["x0"]).contains_ideal(&ideal_of(&r, &["x1"]), &l).unwrap());
        let meet = ideal_of(&r, &["x0"]).intersect(&ideal_of(&r, &["x1"]), &l).unwrap();
        assert!(meet.member(&r.parse("x0*x1").unwrap(), &l).unwrap());
    }

    #[test]
    fn membership_agrees_across_orders() {
        let r = qring(3);
        let l = Limits::default();
        let i = ideal_of(&r, &["x0^2 - x1*x2", "x1^2 - x0", "x0*x2 - x1"]);
        let lex = i.groebner(TermOrder::Lex, &l).unwrap();
        let grevlex = i.groebner(TermOrder::Grevlex, &l).unwrap();
        assert!(lex.all_spolys_reduce_to_zero());
        assert!(grevlex.all_spolys_reduce_to_zero());
        for s in ["x0^3 - x1^3", "x0*x1 - x2", "x1^4 - x0^2", "x2^2 - 1", "x0 + x1 + x2"] {
            let f = r.parse(s).unwrap();
            assert_eq!(
                lex.contains_poly(&f),
                grevlex.contains_poly(&f),
                "membership of {s} must not depend on the order"
            );
        }
    }

    #[test]
    fn resource_caps_abort() {
        let f = PrimeField::new(7, 3).unwrap();
        let r = Ring::new(f, 3);
        let gens: Vec<_> = ["x0^2*x1 - x2", "x1^2*x2 - x0", "x2^2*x0 - x1"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let i = Ideal::new(r, gens);
        let tiny = Limits { max_basis: 3, max_degree: 256, time_budget: None };
        assert!(matches!(
            i.groebner(TermOrder::Lex, &tiny),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn dump_has_header_and_lines() {
        let r = qring(2);
        let gb = ideal_of(&r, &["x0 - x1"]).groebner(TermOrder::Grevlex, &Limits::default()).unwrap();
        let dump = gb.dump();
        let mut lines = dump.lines();
        let header = lines.next().unwrap();
        assert!(header.contains("cyclotomic(n=3)") && header.contains("grevlex"));
        assert_eq!(lines.next().unwrap(), "x0 - x1");
    }
}
