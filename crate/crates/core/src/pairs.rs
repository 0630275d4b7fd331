//! Critical pairs, S-polynomials and pair selection.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{PowerProduct, Term};
use crate::signatures::{LabeledPolynomial, ModuleOrder, Signature};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("critical pairs need nonzero polynomials")]
    ZeroOperand,
    #[error("no critical pair to select from")]
    EmptySet,
}

/// `[F, G] = (u, F, v, G)` with `u lm(F) = v lm(G) = lcm(lpp F, lpp G)` and
/// `uF ⊳ vG`.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub u: Term,
    pub first: Arc<LabeledPolynomial>,
    pub v: Term,
    pub second: Arc<LabeledPolynomial>,
    pub lcm: PowerProduct,
    first_sig: Signature,
    second_sig: Signature,
}

impl CriticalPair {
    /// Total degree of the lcm of the two leading power products.
    pub fn degree(&self) -> u32 {
        self.lcm.degree()
    }

    /// Label `(u Sign(F), Num(F))` of the first component.
    pub fn first_label(&self) -> (&Signature, usize) {
        (&self.first_sig, self.first.num)
    }

    pub fn second_label(&self) -> (&Signature, usize) {
        (&self.second_sig, self.second.num)
    }

    /// The S-polynomial `uF - vG`, labeled with `Sign(uF)` and `Num(F)`.
    pub fn spoly(&self) -> LabeledPolynomial {
        let mut poly = self.first.poly.mul_term(&self.u.coeff, &self.u.pp);
        poly.sub_assign_term_multiple(&self.v.coeff, &self.v.pp, &self.second.poly);
        debug_assert!(poly.head().map_or(true, |h| h.pp != self.lcm), "heads must cancel");
        LabeledPolynomial::new(self.first_sig.clone(), poly, self.first.num)
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        struct D<'a>(&'a CriticalPair);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let ring = self.0.first.poly.ring();
                let u = crate::arith::Polynomial::monomial(ring, self.0.u.coeff.clone(), self.0.u.pp.clone());
                let v = crate::arith::Polynomial::monomial(ring, self.0.v.coeff.clone(), self.0.v.pp.clone());
                write!(f, "({u}, F{}, {v}, F{})", self.0.first.num, self.0.second.num)
            }
        }
        D(self)
    }
}

/// Builds `[A, B]`, ordering the components so that the first is `⊳` the second.
pub fn make_pair(
    a: &Arc<LabeledPolynomial>,
    b: &Arc<LabeledPolynomial>,
    mo: &ModuleOrder,
) -> Result<CriticalPair, PairError> {
    let (ha, hb) = match (a.poly.head(), b.poly.head()) {
        (Some(ha), Some(hb)) => (ha, hb),
        _ => return Err(PairError::ZeroOperand),
    };
    let field = a.poly.ring().field();
    let lcm = ha.pp.lcm(&hb.pp);
    let u = Term::new(field.inv(&ha.coeff), lcm.div(&ha.pp).expect("lcm divisible"));
    let v = Term::new(field.inv(&hb.coeff), lcm.div(&hb.pp).expect("lcm divisible"));
    let sa = a.sig.mul_pp(&u.pp);
    let sb = b.sig.mul_pp(&v.pp);
    let pair = if mo.cmp_labels((&sa, a.num), (&sb, b.num)).to_ordering() == Ordering::Less {
        CriticalPair { u: v, first: b.clone(), v: u, second: a.clone(), lcm, first_sig: sb, second_sig: sa }
    } else {
        CriticalPair { u, first: a.clone(), v, second: b.clone(), lcm, first_sig: sa, second_sig: sb }
    };
    Ok(pair)
}

/// `p ⊲ q` as `Less`: first components under `⊲`/`⋈`, then second components.
pub fn cmp_pair(p: &CriticalPair, q: &CriticalPair, mo: &ModuleOrder) -> Ordering {
    mo.cmp_labels(p.first_label(), q.first_label())
        .to_ordering()
        .then_with(|| mo.cmp_labels(p.second_label(), q.second_label()).to_ordering())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SelectionStrategy {
    /// Lowest lcm degree first, then the `⊳`-largest pair at that degree.
    #[serde(rename = "mindeg-maxpair")]
    MinDegMaxPair,
    /// The `⊲`-smallest pair.
    #[serde(rename = "minpair")]
    MinPair,
    /// Oldest pair first.
    #[serde(rename = "fifo")]
    Fifo,
}

impl SelectionStrategy {
    pub const ALL: [SelectionStrategy; 3] =
        [SelectionStrategy::MinDegMaxPair, SelectionStrategy::MinPair, SelectionStrategy::Fifo];

    pub fn name(&self) -> &'static str {
        match self {
            SelectionStrategy::MinDegMaxPair => "mindeg-maxpair",
            SelectionStrategy::MinPair => "minpair",
            SelectionStrategy::Fifo => "fifo",
        }
    }
}

impl fmt::Display for SelectionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SelectionStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SelectionStrategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown selection strategy `{s}`"))
    }
}

fn tie_break(p: &CriticalPair, q: &CriticalPair) -> Ordering {
    p.first.num.cmp(&q.first.num).then_with(|| p.second.num.cmp(&q.second.num))
}

/// Index of the pair `strategy` picks from `pairs`, given in insertion order.
pub fn select(strategy: SelectionStrategy, pairs: &[CriticalPair], mo: &ModuleOrder) -> Result<usize, PairError> {
    if pairs.is_empty() {
        return Err(PairError::EmptySet);
    }
    let preferred = |p: &CriticalPair, q: &CriticalPair| -> Ordering {
        // Less means p is picked before q
        match strategy {
            SelectionStrategy::MinDegMaxPair => p
                .degree()
                .cmp(&q.degree())
                .then_with(|| cmp_pair(q, p, mo))
                .then_with(|| tie_break(p, q)),
            SelectionStrategy::MinPair => cmp_pair(p, q, mo).then_with(|| tie_break(p, q)),
            SelectionStrategy::Fifo => Ordering::Equal,
        }
    };
    let mut best = 0;
    for (i, p) in pairs.iter().enumerate().skip(1) {
        if preferred(p, &pairs[best]) == Ordering::Less {
            best = i;
        }
    }
    Ok(best)
}

/// The engine's pair set: an ordered map keyed so that the first entry is the
/// pair [`select`] would pick.
#[derive(Debug)]
pub struct PairQueue {
    strategy: SelectionStrategy,
    entries: BTreeMap<(Vec<i64>, u64), CriticalPair>,
    seq: u64,
}

impl PairQueue {
    pub fn new(strategy: SelectionStrategy) -> Self {
        PairQueue { strategy, entries: BTreeMap::new(), seq: 0 }
    }

    fn label_key(mo: &ModuleOrder, label: (&Signature, usize)) -> Vec<i64> {
        let mut key = mo.sig_key(label.0);
        key.push(-(label.1 as i64));
        key
    }

    pub fn push(&mut self, pair: CriticalPair, mo: &ModuleOrder) {
        let mut key = Vec::new();
        match self.strategy {
            SelectionStrategy::MinDegMaxPair => {
                key.push(pair.degree() as i64);
                key.extend(Self::label_key(mo, pair.first_label()).into_iter().map(|k| -k));
                key.extend(Self::label_key(mo, pair.second_label()).into_iter().map(|k| -k));
            }
            SelectionStrategy::MinPair => {
                key.extend(Self::label_key(mo, pair.first_label()));
                key.extend(Self::label_key(mo, pair.second_label()));
            }
            SelectionStrategy::Fifo => {}
        }
        if self.strategy != SelectionStrategy::Fifo {
            key.push(pair.first.num as i64);
            key.push(pair.second.num as i64);
        }
        self.entries.insert((key, self.seq), pair);
        self.seq += 1;
    }

    pub fn pop(&mut self) -> Option<CriticalPair> {
        self.entries.pop_first().map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pairs in insertion order.
    pub fn pairs(&self) -> Vec<&CriticalPair> {
        let mut v: Vec<_> = self.entries.iter().map(|((_, seq), p)| (*seq, p)).collect();
        v.sort_by_key(|(seq, _)| *seq);
        v.into_iter().map(|(_, p)| p).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, MonomialOrder, Polynomial, Ring};
    use crate::cli::parse_polynomial;
    use crate::signatures::LabeledOrdering;
    use proptest::prelude::*;

    fn toy() -> (Arc<Ring>, Vec<Arc<LabeledPolynomial>>) {
        let r = Ring::new(["x", "y", "z"], Field::Rational, MonomialOrder::Grevlex).unwrap();
        let lp = |sig: &[u32], idx, poly: &str, num| {
            Arc::new(LabeledPolynomial::new(
                Signature::new(PowerProduct::new(sig.to_vec()), idx),
                parse_polynomial(&r, poly).unwrap(),
                num,
            ))
        };
        let basis = vec![
            lp(&[0, 0, 0], 1, "y^2+y*z-x", 1),
            lp(&[0, 0, 0], 2, "y^2-z^2+z", 2),
            lp(&[0, 0, 0], 1, "y*z+z^2-x-z", 3),
            lp(&[0, 1, 0], 1, "-x*y-y*z+x*z", 4),
            lp(&[0, 1, 1], 1, "-2*x*z^2+y*z^2+x^2+x*z", 5),
        ];
        (r, basis)
    }

    fn mono(r: &Arc<Ring>, t: &Term) -> String {
        Polynomial::monomial(r, t.coeff.clone(), t.pp.clone()).to_string()
    }

    fn pot() -> ModuleOrder {
        ModuleOrder::pot(MonomialOrder::Grevlex)
    }

    #[test]
    fn toy_pairs_match_trace() {
        let (r, b) = toy();
        let mo = pot();
        let p31 = make_pair(&b[2], &b[0], &mo).unwrap();
        assert_eq!((p31.first.num, p31.second.num), (3, 1));
        assert_eq!((mono(&r, &p31.u), mono(&r, &p31.v)), ("y".into(), "z".into()));
        // argument order does not matter
        let p13 = make_pair(&b[0], &b[2], &mo).unwrap();
        assert_eq!((p13.first.num, p13.second.num), (3, 1));

        let p54 = make_pair(&b[4], &b[3], &mo).unwrap();
        assert_eq!((mono(&r, &p54.u), mono(&r, &p54.v)), ("-1/2*y".into(), "-z^2".into()));
        assert_eq!(p54.to_string_for_test(), "(-1/2*y, F5, -z^2, F4)");
        assert_eq!(p54.degree(), 4);

        let p41 = make_pair(&b[3], &b[0], &mo).unwrap();
        assert_eq!((mono(&r, &p41.u), mono(&r, &p41.v)), ("-y".into(), "x".into()));
    }

    impl CriticalPair {
        fn to_string_for_test(&self) -> String {
            self.display().to_string()
        }
    }

    #[test]
    fn toy_spolys() {
        let (r, b) = toy();
        let mo = pot();
        let names = r.vars();
        let s12 = make_pair(&b[0], &b[1], &mo).unwrap().spoly();
        assert_eq!(s12.display().to_string(), "(e1, y*z+z^2-x-z, 1)");
        let s32 = make_pair(&b[2], &b[1], &mo).unwrap().spoly();
        assert_eq!(s32.sig.display(names).to_string(), "y*e1");
        assert_eq!(s32.poly, parse_polynomial(&r, "y*z^2+z^3-x*y-y*z-z^2").unwrap());
        assert_eq!(s32.num, 3);
        let s43 = make_pair(&b[3], &b[2], &mo).unwrap().spoly();
        assert_eq!(s43.display().to_string(), "(y*z*e1, -2*x*z^2+y*z^2+x^2+x*z, 4)");
    }

    #[test]
    fn self_pair_degenerates() {
        let (r, b) = toy();
        let p = make_pair(&b[0], &b[0], &pot()).unwrap();
        let one = Term::new(r.field().one(), r.one_pp());
        assert_eq!((&p.u, &p.v), (&one, &one));
        assert!(p.spoly().poly.is_zero());
        assert!(make_pair(&b[4], &b[4], &pot()).unwrap().spoly().poly.is_zero());
    }

    #[test]
    fn zero_operand_rejected() {
        let (r, b) = toy();
        let z = Arc::new(LabeledPolynomial::new(Signature::unit(3, 1), Polynomial::zero(&r), 6));
        assert_eq!(make_pair(&z, &b[0], &pot()).unwrap_err(), PairError::ZeroOperand);
    }

    #[test]
    fn mindeg_maxpair_picks_trace_pairs() {
        let (_, b) = toy();
        let mo = pot();
        let cp1 = vec![make_pair(&b[2], &b[0], &mo).unwrap(), make_pair(&b[2], &b[1], &mo).unwrap()];
        assert_eq!(select(SelectionStrategy::MinDegMaxPair, &cp1, &mo), Ok(0));
        let rev: Vec<_> = cp1.iter().rev().cloned().collect();
        assert_eq!(select(SelectionStrategy::MinDegMaxPair, &rev, &mo), Ok(1));
        assert_eq!(select(SelectionStrategy::Fifo, &rev, &mo), Ok(0));
        assert_eq!(select(SelectionStrategy::MinPair, &cp1[..1], &mo), Ok(0));
        assert_eq!(select(SelectionStrategy::MinPair, &[], &mo), Err(PairError::EmptySet));

        // CP6: degree-4 pairs [F5,F4] and [F5,F3] come before the degree-5 ones
        let cp6: Vec<_> = (0..4).map(|j| make_pair(&b[4], &b[j], &mo).unwrap()).collect();
        let picked = &cp6[select(SelectionStrategy::MinDegMaxPair, &cp6, &mo).unwrap()];
        assert_eq!(picked.second.num, 4);
    }

    #[test]
    fn pair_comparison_by_components() {
        let (_, b) = toy();
        let mo = pot();
        let p32 = make_pair(&b[2], &b[1], &mo).unwrap();
        let p41 = make_pair(&b[3], &b[0], &mo).unwrap();
        let p43 = make_pair(&b[3], &b[2], &mo).unwrap();
        // first components: y e1 (num 3) vs y^2 e1 (num 4) vs yz e1 (num 4)
        assert_eq!(mo.cmp_labels(p32.first_label(), p41.first_label()), LabeledOrdering::Below);
        assert_eq!(cmp_pair(&p32, &p41, &mo), Ordering::Less);
        assert_eq!(cmp_pair(&p43, &p41, &mo), Ordering::Less);
        assert_eq!(cmp_pair(&p41, &p41, &mo), Ordering::Equal);
        // equal first components: decided by the second
        let p42 = make_pair(&b[3], &b[1], &mo).unwrap();
        assert_eq!(mo.cmp_labels(p41.first_label(), p42.first_label()), LabeledOrdering::Bowtie);
        assert_eq!(cmp_pair(&p42, &p41, &mo), Ordering::Less);
    }

    #[test]
    fn queue_agrees_with_select() {
        let (_, b) = toy();
        let mo = pot();
        let all: Vec<CriticalPair> = (0..5)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .map(|(i, j)| make_pair(&b[i], &b[j], &mo).unwrap())
            .collect();
        for strategy in SelectionStrategy::ALL {
            let mut queue = PairQueue::new(strategy);
            for p in &all {
                queue.push(p.clone(), &mo);
            }
            let mut remaining = all.clone();
            while let Some(p) = queue.pop() {
                let i = select(strategy, &remaining, &mo).unwrap();
                let q = remaining.remove(i);
                assert_eq!((p.first.num, p.second.num), (q.first.num, q.second.num), "{strategy}");
            }
            assert!(remaining.is_empty());
        }
    }

    proptest! {
        #[test]
        fn heads_cancel(
            i in 0usize..5, j in 0usize..5,
            order in prop::sample::select(MonomialOrder::ALL.to_vec())
        ) {
            let (r, b) = toy();
            let r = r.with_order(order);
            let b: Vec<_> = b
                .iter()
                .map(|f| Arc::new(LabeledPolynomial::new(f.sig.clone(), f.poly.with_ring(&r).unwrap(), f.num)))
                .collect();
            let mo = ModuleOrder::pot(order);
            let p = make_pair(&b[i], &b[j], &mo).unwrap();
            let field = r.field();
            let fh = p.first.poly.head().unwrap();
            let gh = p.second.poly.head().unwrap();
            prop_assert_eq!(field.mul(&p.u.coeff, &fh.coeff), field.mul(&p.v.coeff, &gh.coeff));
            prop_assert_eq!(p.u.pp.mul(&fh.pp), p.lcm.clone());
            prop_assert_eq!(p.v.pp.mul(&gh.pp), p.lcm.clone());
            prop_assert!(mo.cmp_labels(p.first_label(), p.second_label()) != LabeledOrdering::Below);
            let s = p.spoly();
            prop_assert_eq!(&s.sig, p.first_label().0);
            prop_assert!(s.poly.head().map_or(true, |h| h.pp != p.lcm));
        }
    }
}
