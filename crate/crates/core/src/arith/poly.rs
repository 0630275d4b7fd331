use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::{ArithError, Coeff, PowerProduct, Ring};

/// A monomial `coeff * pp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub pp: PowerProduct,
}

impl Term {
    pub fn new(coeff: Coeff, pp: PowerProduct) -> Self {
        Term { coeff, pp }
    }
}

/// A polynomial in canonical form: terms strictly descending under the ring's
/// order, no zero coefficients. The zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Self::monomial(ring, c, ring.one_pp())
    }

    pub fn monomial(ring: &Arc<Ring>, c: Coeff, pp: PowerProduct) -> Self {
        debug_assert_eq!(pp.nvars(), ring.nvars());
        let terms = if ring.field().is_zero(&c) { Vec::new() } else { vec![Term::new(c, pp)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from terms in any order, combining duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = Term>) -> Result<Self, ArithError> {
        let field = ring.field();
        let order = ring.order();
        let mut terms: Vec<Term> = terms.into_iter().collect();
        for t in &terms {
            if t.pp.nvars() != ring.nvars() {
                return Err(ArithError::Dimension { left: t.pp.nvars(), right: ring.nvars() });
            }
            if !field.contains(&t.coeff) {
                return Err(ArithError::ForeignCoefficient(t.coeff.to_string()));
            }
        }
        terms.sort_by(|a, b| order.cmp(&b.pp, &a.pp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pp == t.pp => last.coeff = field.add(&last.coeff, &t.coeff),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.coeff) {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|t| field.is_zero(&t.coeff)) {
            out.pop();
        }
        Ok(Polynomial { ring: ring.clone(), terms: out })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term, `None` for zero.
    pub fn head(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lm(&self) -> Result<&Term, ArithError> {
        self.head().ok_or(ArithError::ZeroPolynomial)
    }

    pub fn lpp(&self) -> Result<&PowerProduct, ArithError> {
        self.lm().map(|t| &t.pp)
    }

    pub fn lc(&self) -> Result<&Coeff, ArithError> {
        self.lm().map(|t| &t.coeff)
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.pp.degree()).max()
    }

    fn same_ring(&self, other: &Self) -> Result<(), ArithError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(ArithError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_ring(other)?;
        let terms = merge(&self.ring, self.terms.iter().cloned(), other.terms.iter().cloned());
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_ring(other)?;
        Ok(self.sub_term_multiple(&self.ring.field().one(), &self.ring.one_pp(), other))
    }

    pub fn neg(&self) -> Self {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|t| Term::new(field.neg(&t.coeff), t.pp.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * t * self`.
    pub fn mul_term(&self, c: &Coeff, t: &PowerProduct) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|s| Term::new(field.mul(c, &s.coeff), s.pp.mul(t)))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self - c * t * other`; both operands must share the ring.
    pub fn sub_term_multiple(&self, c: &Coeff, t: &PowerProduct, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign_term_multiple(c, t, other);
        out
    }

    /// In-place form of [`Polynomial::sub_term_multiple`].
    pub fn sub_assign_term_multiple(&mut self, c: &Coeff, t: &PowerProduct, other: &Self) {
        debug_assert!(self.same_ring(other).is_ok());
        let field = self.ring.field();
        let neg_c = field.neg(c);
        if field.is_zero(&neg_c) {
            return;
        }
        let scaled = other
            .terms
            .iter()
            .map(|s| Term::new(field.mul(&neg_c, &s.coeff), s.pp.mul(t)));
        let terms = std::mem::take(&mut self.terms);
        self.terms = merge(&self.ring, terms, scaled);
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_ring(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        for t in &other.terms {
            let part = self.mul_term(&t.coeff, &t.pp);
            acc = Polynomial { ring: self.ring.clone(), terms: merge(&self.ring, acc.terms, part.terms) };
        }
        Ok(acc)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Polynomial::constant(&self.ring, self.ring.field().one());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.head() {
            None => self.clone(),
            Some(h) => {
                let inv = self.ring.field().inv(&h.coeff);
                self.mul_term(&inv, &self.ring.one_pp())
            }
        }
    }

    /// The same polynomial read in `ring`, re-sorted for its order. The rings
    /// must agree on variables and field.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Self, ArithError> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(ArithError::RingMismatch);
        }
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }
}

/// Merges two descending term lists, adding coefficients of equal power products.
fn merge(ring: &Ring, a: impl IntoIterator<Item = Term>, b: impl IntoIterator<Item = Term>) -> Vec<Term> {
    let field = ring.field();
    let order = ring.order();
    let a = a.into_iter();
    let mut out = Vec::with_capacity(a.size_hint().0 + 4);
    let mut a = a.peekable();
    for tb in b {
        while let Some(ta) = a.peek() {
            match order.cmp(&ta.pp, &tb.pp) {
                Ordering::Greater => out.push(a.next().unwrap()),
                _ => break,
            }
        }
        match a.peek() {
            Some(ta) if ta.pp == tb.pp => {
                let c = field.add(&ta.coeff, &tb.coeff);
                a.next();
                if !field.is_zero(&c) {
                    out.push(Term::new(c, tb.pp));
                }
            }
            _ => out.push(tb),
        }
    }
    out.extend(a);
    out
}

/// Full classical reduction of `f` by `divisors`; zero divisors are skipped.
/// No term of the result is divisible by any divisor's leading power product.
pub fn normal_form<P: Borrow<Polynomial>>(f: &Polynomial, divisors: &[P]) -> Polynomial {
    reduce_fully(f, divisors, None)
}

/// Division with quotients: returns `(q, r)` with `f = sum q_i * divisors_i + r`
/// and `r` the same remainder [`normal_form`] produces.
pub fn divide<P: Borrow<Polynomial>>(f: &Polynomial, divisors: &[P]) -> (Vec<Polynomial>, Polynomial) {
    let mut quotients = vec![Polynomial::zero(&f.ring); divisors.len()];
    let r = reduce_fully(f, divisors, Some(&mut quotients));
    (quotients, r)
}

fn reduce_fully<P: Borrow<Polynomial>>(
    f: &Polynomial,
    divisors: &[P],
    mut quotients: Option<&mut Vec<Polynomial>>,
) -> Polynomial {
    let field = f.ring.field();
    let mut rest = f.terms.clone();
    let mut pos = 0;
    let mut remainder: Vec<Term> = Vec::new();
    while pos < rest.len() {
        let head = &rest[pos];
        let reducer = divisors
            .iter()
            .map(Borrow::borrow)
            .position(|g| g.head().is_some_and(|h| h.pp.divides(&head.pp)));
        match reducer {
            Some(i) => {
                let g = divisors[i].borrow();
                let gh = g.head().expect("nonzero reducer");
                let c = field.div(&head.coeff, &gh.coeff);
                let t = head.pp.div(&gh.pp).expect("divisible");
                let neg_c = field.neg(&c);
                let scaled = g.terms.iter().map(|s| Term::new(field.mul(&neg_c, &s.coeff), s.pp.mul(&t)));
                rest = merge(&f.ring, rest.drain(pos..), scaled);
                pos = 0;
                if let Some(q) = quotients.as_deref_mut() {
                    let m = Polynomial::monomial(&f.ring, c, t);
                    q[i] = q[i].add(&m).expect("same ring");
                }
            }
            None => {
                remainder.push(head.clone());
                pos += 1;
            }
        }
    }
    Polynomial { ring: f.ring.clone(), terms: remainder }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.vars();
        let field = self.ring.field();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let unit = field.is_one(&t.coeff) || field.is_one(&field.neg(&t.coeff)) && neg;
            if t.pp.is_one() {
                f.write_str(&t.coeff.abs_string())?;
            } else {
                if !unit {
                    write!(f, "{}*", t.coeff.abs_string())?;
                }
                t.pp.fmt_with(names, f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, MonomialOrder};
    use crate::cli::parse_polynomial;
    use proptest::prelude::*;

    fn ring(order: MonomialOrder) -> Arc<Ring> {
        Ring::new(["x", "y", "z"], Field::Rational, order).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn leading_data() {
        let r = ring(MonomialOrder::Grevlex);
        let f = p(&r, "y^2+y*z-x");
        assert_eq!(f.lpp().unwrap(), &PowerProduct::new(vec![0, 2, 0]));
        assert_eq!(f.lc().unwrap(), &r.field().one());
        let c = p(&r, "5");
        assert!(c.lpp().unwrap().is_one());
        assert_eq!(Polynomial::zero(&r).lpp(), Err(ArithError::ZeroPolynomial));

        let rl = Ring::new(["x", "y"], Field::Rational, MonomialOrder::Lex).unwrap();
        let g = p(&rl, "2*x^2+y^2");
        let lm = g.lm().unwrap();
        assert_eq!(lm.pp, PowerProduct::new(vec![2, 0]));
        assert_eq!(lm.coeff, rl.field().from_i64(2));
    }

    #[test]
    fn addition_and_scaling() {
        let r = ring(MonomialOrder::Grevlex);
        let f1 = p(&r, "y^2+y*z-x");
        let f2 = p(&r, "y^2-z^2+z");
        assert_eq!(f1.sub(&f2).unwrap(), p(&r, "y*z+z^2-x-z"));
        assert_eq!(f1.sub(&f2).unwrap().to_string(), "y*z+z^2-x-z");
        assert_eq!(f1.add(&Polynomial::zero(&r)).unwrap(), f1);
        let y = PowerProduct::var(3, 1);
        assert_eq!(f1.mul_term(&r.field().one(), &y), p(&r, "y^3+y^2*z-x*y"));
        let other = ring(MonomialOrder::Lex);
        assert_eq!(f1.add(&p(&other, "x")), Err(ArithError::RingMismatch));
    }

    #[test]
    fn display_keeps_coefficients() {
        let r = ring(MonomialOrder::Grevlex);
        let f = p(&r, "-2*x*z^2+y*z^2+x^2+x*z");
        assert_eq!(f.to_string(), "-2*x*z^2+y*z^2+x^2+x*z");
        assert_eq!(p(&r, "-y/2 + 1/3").to_string(), "-1/2*y+1/3");
        assert_eq!(p(&r, "-1").to_string(), "-1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        let rp = Ring::new(["x"], Field::prime(7).unwrap(), MonomialOrder::Lex).unwrap();
        assert_eq!(p(&rp, "x - 1").to_string(), "x+6");
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(MonomialOrder::Grevlex);
        let f = p(&r, "y^2+y*z-x");
        let g = p(&r, "y^2-z^2+z");
        let nf = normal_form(&f, &[g.clone()]);
        assert_eq!(nf, p(&r, "y*z+z^2-x-z"));
        // f - nf is a multiple of g
        assert_eq!(f.sub(&nf).unwrap(), g);
        assert_eq!(normal_form::<Polynomial>(&f, &[]), f);
        assert!(normal_form(&g, &[g.clone()]).is_zero());
        assert_eq!(normal_form(&f, &[Polynomial::zero(&r)]), f);
    }

    #[test]
    fn monic_and_pow() {
        let r = ring(MonomialOrder::Grevlex);
        let f = p(&r, "-2*x + 4");
        assert_eq!(f.monic(), p(&r, "x - 2"));
        assert_eq!(p(&r, "x+1").pow(2), p(&r, "x^2+2*x+1"));
        assert_eq!(f.pow(0), p(&r, "1"));
    }

    fn arb_poly(r: Arc<Ring>) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..3, 3)), 0..6).prop_map(move |ts| {
            let terms = ts
                .into_iter()
                .map(|(c, e)| Term::new(r.field().from_i64(c), PowerProduct::new(e)));
            Polynomial::from_terms(&r, terms).unwrap()
        })
    }

    fn is_canonical(f: &Polynomial) -> bool {
        let ord = f.ring().order();
        f.terms().iter().all(|t| !f.ring().field().is_zero(&t.coeff))
            && f.terms().windows(2).all(|w| ord.cmp(&w[0].pp, &w[1].pp) == Ordering::Greater)
    }

    proptest! {
        #[test]
        fn addition_laws(
            (f, g, h) in prop::sample::select(MonomialOrder::ALL.to_vec()).prop_flat_map(|o| {
                let r = ring(o);
                (arb_poly(r.clone()), arb_poly(r.clone()), arb_poly(r))
            })
        ) {
            let fg = f.add(&g).unwrap();
            prop_assert!(is_canonical(&fg));
            prop_assert_eq!(&fg, &g.add(&f).unwrap());
            prop_assert_eq!(fg.add(&h).unwrap(), f.add(&g.add(&h).unwrap()).unwrap());
            prop_assert!(f.sub(&f).unwrap().is_zero());
            let again = Polynomial::from_terms(f.ring(), f.terms().iter().cloned()).unwrap();
            prop_assert_eq!(again, f);
        }

        #[test]
        fn normal_form_is_irreducible_and_congruent(
            (f, gs) in prop::sample::select(MonomialOrder::ALL.to_vec()).prop_flat_map(|o| {
                let r = ring(o);
                (arb_poly(r.clone()), prop::collection::vec(arb_poly(r), 0..3))
            })
        ) {
            let nf = normal_form(&f, &gs);
            prop_assert!(is_canonical(&nf));
            for t in nf.terms() {
                for g in &gs {
                    if let Some(h) = g.head() {
                        prop_assert!(!h.pp.divides(&t.pp));
                    }
                }
            }
            // f - nf lies in the ideal: it is the quotient combination
            let (qs, r) = divide(&f, &gs);
            prop_assert_eq!(&r, &nf);
            let mut combo = Polynomial::zero(f.ring());
            for (q, g) in qs.iter().zip(&gs) {
                combo = combo.add(&q.mul(g).unwrap()).unwrap();
            }
            prop_assert_eq!(f.sub(&nf).unwrap(), combo);
        }
    }
}
