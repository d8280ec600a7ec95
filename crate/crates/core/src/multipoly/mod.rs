//! Multivariate polynomial ring S_N = k[x_0, ..., x_N]: dense exponent
//! monomials, term orders, exact arithmetic, and substitution homomorphisms.
//!
//! Terms are stored in a BTreeMap keyed by the structural [`Monomial`]
//! ordering, which is grevlex; this doubles as the canonical serialization
//! order (descending).

pub mod text;

use crate::coeff::Field;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector, one entry per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        assert!(i < nvars, "variable index {i} out of range (nvars = {nvars})");
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// self / other, or None when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

fn grevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    debug_assert_eq!(a.len(), b.len(), "monomials from different rings");
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // Equal degree: the monomial with the larger exponent at the last
    // differing position is the smaller one.
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    debug_assert_eq!(a.len(), b.len(), "monomials from different rings");
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

/// Structural ordering = grevlex (ascending). BTreeMap iteration is thus
/// grevlex ascending; canonical output iterates in reverse.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.exps, &other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial orders: all total, multiplicative, and well-founded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    Grevlex,
    /// Elimination order: the first `first` variables dominate, so a
    /// Groebner basis intersected with the remaining variables generates
    /// the elimination ideal. Grevlex within each block.
    Block { first: usize },
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            TermOrder::Lex => lex_cmp(&a.exps, &b.exps),
            TermOrder::Grevlex => grevlex_cmp(&a.exps, &b.exps),
            TermOrder::Block { first } => grevlex_cmp(&a.exps[..first], &b.exps[..first])
                .then_with(|| grevlex_cmp(&a.exps[first..], &b.exps[first..])),
        }
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::Grevlex => "grevlex".into(),
            TermOrder::Block { first } => format!("block({first})"),
        }
    }
}

/// Ambient ring: a coefficient field plus a variable count.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring<F: Field> {
    pub field: F,
    pub nvars: usize,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, nvars: usize) -> Self {
        Ring { field, nvars }
    }

    pub fn zero(&self) -> Poly<F> {
        Poly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        let mut terms = BTreeMap::new();
        if !self.field.is_zero(&c) {
            terms.insert(Monomial::one(self.nvars), c);
        }
        Poly { ring: self.clone(), terms }
    }

    pub fn from_i64(&self, v: i64) -> Poly<F> {
        self.constant(self.field.from_i64(v))
    }

    /// The variable x_i as a polynomial.
    pub fn var(&self, i: usize) -> Poly<F> {
        self.monomial(Monomial::var(self.nvars, i, 1), self.field.one())
    }

    pub fn monomial(&self, m: Monomial, c: F::Elem) -> Poly<F> {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !self.field.is_zero(&c) {
            terms.insert(m, c);
        }
        Poly { ring: self.clone(), terms }
    }

    pub fn parse(&self, s: &str) -> Result<Poly<F>> {
        text::parse_poly(s, self)
    }
}

/// Exact multivariate polynomial. No zero coefficients are stored; the
/// map's key order (grevlex) makes every representation canonical.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    ring: Ring<F>,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms in grevlex-ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn constant_term(&self) -> F::Elem {
        self.coeff(&Monomial::one(self.ring.nvars))
    }

    fn assert_same_ring(&self, other: &Poly<F>) {
        assert!(
            self.ring == other.ring,
            "operands from different rings ({} vs {} variables)",
            self.ring.nvars,
            other.ring.nvars
        );
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub(crate) fn add_term(&mut self, m: Monomial, c: F::Elem) {
        let field = self.ring.field.clone();
        if field.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = field.add(e.get(), &c);
                if field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly<F>) -> Poly<F> {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly<F> {
        let field = &self.ring.field;
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Poly<F>) -> Poly<F> {
        self.assert_same_ring(other);
        let field = self.ring.field.clone();
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), field.neg(c));
        }
        out
    }

    pub fn mul(&self, other: &Poly<F>) -> Poly<F> {
        self.assert_same_ring(other);
        let mut out = self.ring.zero();
        let field = self.ring.field.clone();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), field.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly<F> {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &F::Elem) -> Poly<F> {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), field.mul(k, c))).collect(),
        }
    }

    /// self * c * m (used by division loops; never introduces zeros).
    pub(crate) fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Poly<F> {
        let field = &self.ring.field;
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), field.mul(k, c)))
                .collect(),
        }
    }

    /// Leading term under `ord`.
    pub fn leading(&self, ord: TermOrder) -> Option<(&Monomial, &F::Elem)> {
        match ord {
            // Structural order is grevlex, so the maximum is the last key.
            TermOrder::Grevlex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| ord.compare(a.0, b.0)),
        }
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn monic(&self, ord: TermOrder) -> Poly<F> {
        match self.leading(ord) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.ring.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Exact division: Some(q) with self = d * q, or None when not
    /// divisible. Repeated grevlex leading-term elimination with a single
    /// divisor; the result is verified by re-multiplication.
    ///
    /// Panics when d = 0.
    pub fn exact_div(&self, d: &Poly<F>) -> Option<Poly<F>> {
        self.assert_same_ring(d);
        assert!(!d.is_zero(), "exact division by the zero polynomial");
        let field = self.ring.field.clone();
        let (dm, dc) = d.leading(TermOrder::Grevlex).expect("nonzero divisor");
        let dm = dm.clone();
        let dc_inv = field.inv(dc).expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((rm, rc)) = rem.leading(TermOrder::Grevlex) {
            let qm = rm.div(&dm)?;
            let qc = field.mul(rc, &dc_inv);
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        assert_eq!(d.mul(&quot), *self, "exact_div re-multiplication check");
        Some(quot)
    }

    /// Shifts every variable index up by one, inserting a fresh variable
    /// at index 0 with exponent `aux_exp`. Used by the intersection trick.
    pub(crate) fn prepend_var(&self, ext: &Ring<F>, aux_exp: u16) -> Poly<F> {
        debug_assert_eq!(ext.nvars, self.ring.nvars + 1);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = Vec::with_capacity(m.exps.len() + 1);
                exps.push(aux_exp);
                exps.extend_from_slice(&m.exps);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Poly { ring: ext.clone(), terms }
    }

    /// Drops variable 0, which must not appear in any term.
    pub(crate) fn drop_first_var(&self, base: &Ring<F>) -> Poly<F> {
        debug_assert_eq!(base.nvars + 1, self.ring.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                assert_eq!(m.exps[0], 0, "variable 0 still present");
                (Monomial::new(m.exps[1..].to_vec()), c.clone())
            })
            .collect();
        Poly { ring: base.clone(), terms }
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly(self))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident) => {
        impl<F: Field> std::ops::$trait for &Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: &Poly<F>) -> Poly<F> {
                Poly::$method(self, rhs)
            }
        }
        impl<F: Field> std::ops::$trait for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                Poly::$method(&self, &rhs)
            }
        }
    };
}
poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl<F: Field> std::ops::Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::neg(self)
    }
}

/// A ring homomorphism given by the images of the source variables.
/// Coefficients pass through unchanged (a k-algebra map).
#[derive(Clone, Debug)]
pub struct RingHom<F: Field> {
    source: Ring<F>,
    target: Ring<F>,
    images: Vec<Poly<F>>,
}

impl<F: Field> RingHom<F> {
    /// Errors when the image count does not match the source arity or an
    /// image lives in the wrong ring.
    pub fn new(source: Ring<F>, target: Ring<F>, images: Vec<Poly<F>>) -> Result<Self> {
        if images.len() != source.nvars {
            return Err(Error::Invalid(format!(
                "homomorphism arity mismatch: {} images for {} variables",
                images.len(),
                source.nvars
            )));
        }
        if let Some(bad) = images.iter().find(|p| p.ring != target) {
            return Err(Error::Invalid(format!(
                "homomorphism image {bad} not in the target ring"
            )));
        }
        Ok(RingHom { source, target, images })
    }

    pub fn identity(ring: &Ring<F>) -> Self {
        let images = (0..ring.nvars).map(|i| ring.var(i)).collect();
        RingHom { source: ring.clone(), target: ring.clone(), images }
    }

    /// The evaluation map x_last -> 1, x_i -> x_i, from nvars variables
    /// down to nvars - 1.
    pub fn eval_last_at_one(source: &Ring<F>) -> Self {
        assert!(source.nvars >= 1);
        let target = Ring::new(source.field.clone(), source.nvars - 1);
        let mut images: Vec<Poly<F>> = (0..target.nvars).map(|i| target.var(i)).collect();
        images.push(target.one());
        RingHom { source: source.clone(), target, images }
    }

    pub fn source(&self) -> &Ring<F> {
        &self.source
    }

    pub fn target(&self) -> &Ring<F> {
        &self.target
    }

    pub fn images(&self) -> &[Poly<F>] {
        &self.images
    }

    /// Substitutes each variable of `f` by its image.
    pub fn apply(&self, f: &Poly<F>) -> Poly<F> {
        assert!(f.ring == self.source, "polynomial not in the homomorphism source ring");
        // Per-variable power cache; exponents repeat heavily across terms.
        let mut powers: Vec<Vec<Poly<F>>> =
            self.images.iter().map(|p| vec![self.target.one(), p.clone()]).collect();
        let mut out = self.target.zero();
        for (m, c) in &f.terms {
            let mut acc = self.target.constant(c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&self.images[i]);
                    cache.push(next);
                }
                acc = acc.mul(&cache[e as usize]);
            }
            for (m, c) in acc.terms {
                out.add_term(m, c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CyclotomicField, PrimeField};

    fn qring(nvars: usize) -> Ring<CyclotomicField> {
        Ring::new(CyclotomicField::new(3).unwrap(), nvars)
    }

    #[test]
    fn difference_of_squares() {
        let r = qring(2);
        let lhs = r.parse("(x0 - x1)*(x0 + x1)").unwrap();
        assert_eq!(lhs, r.parse("x0^2 - x1^2").unwrap());
    }

    #[test]
    fn multiply_by_zero() {
        let r = qring(2);
        let f = r.parse("x0^2 - x1 + 3").unwrap();
        assert!(f.mul(&r.zero()).is_zero());
    }

    #[test]
    fn binomial_cube_coefficients() {
        let r = qring(2);
        let cube = r.parse("x0 - x1").unwrap().pow(3);
        assert_eq!(cube.num_terms(), 4);
        assert_eq!(cube, r.parse("x0^3 - 3*x0^2*x1 + 3*x0*x1^2 - x1^3").unwrap());
    }

    #[test]
    fn product_degree_adds() {
        let r = qring(3);
        let f = r.parse("x0^2*x1 - x2").unwrap();
        let g = r.parse("x1*x2 + 1").unwrap();
        assert_eq!(
            f.mul(&g).degree(),
            Some(f.degree().unwrap() + g.degree().unwrap())
        );
    }

    #[test]
    fn grevlex_example_from_definition() {
        // exponents (1,0,1) vs (0,2,0): x1^2 is larger.
        let a = Monomial::new(vec![1, 0, 1]);
        let b = Monomial::new(vec![0, 2, 0]);
        assert_eq!(TermOrder::Grevlex.compare(&a, &b), Ordering::Less);
        assert_eq!(TermOrder::Grevlex.compare(&a, &a), Ordering::Equal);
    }

    #[test]
    fn lex_compares_first_coordinate() {
        let a = Monomial::new(vec![1, 0]);
        let b = Monomial::new(vec![0, 100]);
        assert_eq!(TermOrder::Lex.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block()
    {
        // Any monomial containing the first variable dominates.
        let ord = TermOrder::Block { first: 1 };
        let t = Monomial::new(vec![1, 0, 0]);
        let big = Monomial::new(vec![0, 5, 5]);
        assert_eq!(ord.compare(&t, &big), Ordering::Greater);
    }

    #[test]
    fn eval_hom_sends_last_variable_to_one() {
        let r = qring(3);
        let pi = RingHom::eval_last_at_one(&r);
        let xn = r.var(2);
        assert_eq!(pi.apply(&xn), pi.target().one());
        let f = r.parse("x0^3 - x2^3").unwrap();
        assert_eq!(pi.apply(&f), pi.target().parse("x0^3 - 1").unwrap());
    }

    #[test]
    fn identity_hom_is_identity() {
        let r = qring(3);
        let id = RingHom::identity(&r);
        let f = r.parse("x0*x1^2 - e*x2 + 1/2").unwrap();
        assert_eq!(id.apply(&f), f);
    }

    #[test]
    fn hom_arity_mismatch_rejected() {
        let r = qring(3);
        let t = qring(2);
        let err = RingHom::new(r.clone(), t.clone(), vec![t.var(0), t.var(1)]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn exact_division_examples() {
        let r = qring(2);
        let f = r.parse("x0^2 - x1^2").unwrap();
        let d = r.parse("x0 - x1").unwrap();
        assert_eq!(f.exact_div(&d).unwrap(), r.parse("x0 + x1").unwrap());
        assert_eq!(f.exact_div(&f).unwrap(), r.one());
        assert!(r.parse("x0^2 + x1").unwrap().exact_div(&d).is_none());
    }

    #[test]
    #[should_panic(expected = "zero polynomial")]
    fn exact_division_by_zero_rejected() {
        let r = qring(2);
        let f = r.parse("x0").unwrap();
        let _ = f.exact_div(&r.zero());
    }

    #[test]
    #[should_panic(expected = "different rings")]
    fn mixed_arity_arithmetic_rejected() {
        let a = qring(2).parse("x0").unwrap();
        let b = qring(3).parse("x0").unwrap();
        let _ = a.add(&b);
    }

    #[test]
    fn fermat_factorization_instance() {
        // pi(F_{2,3}) / F_{1,3} = (x0^3 - 1)(x1^3 - 1), with
        // pi: x2 -> 1 applied to the product of the three x_i^3 - x_j^3.
        let r = qring(3);
        let f23 = r.parse("(x0^3 - x1^3)*(x0^3 - x2^3)*(x1^3 - x2^3)").unwrap();
        let pi = RingHom::eval_last_at_one(&r);
        let image = pi.apply(&f23);
        let f13 = pi.target().parse("x0^3 - x1^3").unwrap();
        let q = image.exact_div(&f13).unwrap();
        let expect = pi.target().parse("(x0^3 - 1)*(x1^3 - 1)").unwrap();
        assert_eq!(q, expect);
        assert_eq!(q.mul(&f13), image);
    }

    #[test]
    fn prime_field_polys_work_too() {
        let r = Ring::new(PrimeField::new(7, 3).unwrap(), 2);
        let f = r.parse("x0 - e*x1").unwrap();
        let g = r.parse("x0 - e^2*x1").unwrap();
        let h = r.parse("x0 - x1").unwrap();
        // (x0 - x1)(x0 - e x1)(x0 - e^2 x1) = x0^3 - x1^3 over F_7.
        assert_eq!(h.mul(&f).mul(&g), r.parse("x0^3 - x1^3").unwrap());
    }
}
