//! The Syzygy and Rewritten criteria.
//!
//! All predicates look at a multiple `t * F` of a labeled polynomial through
//! its signature `t * Sign(F)` only; the polynomial `t * Poly(F)` is never
//! formed. Witnesses are searched in ascending number order and the first one
//! found is returned.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::PowerProduct;
use crate::pairs::CriticalPair;
use crate::signatures::{LabeledOrdering, LabeledPolynomial, ModuleOrder, ModuleOrderKind, Signature};

/// `t * F` is comparable by `basis` when some `G` with a later index
/// (`Sign(G) = x^b e_j`, `j > i`) has `lpp(G) | t * Sign(F).pp`.
pub fn is_comparable<'b>(
    t: &PowerProduct,
    f: &LabeledPolynomial,
    basis: &'b [Arc<LabeledPolynomial>],
) -> Option<&'b Arc<LabeledPolynomial>> {
    let target = f.sig.pp.mul(t);
    basis
        .iter()
        .find(|g| g.sig.index > f.sig.index && g.lpp().is_some_and(|l| l.divides(&target)))
}

/// `t * F` is rewritable by `basis` when a later-created `G` (`Num(G) >
/// Num(F)`) has a signature dividing `t * Sign(F)`. Zero polynomials count.
pub fn is_rewritable<'b>(
    t: &PowerProduct,
    f: &LabeledPolynomial,
    basis: &'b [Arc<LabeledPolynomial>],
) -> Option<&'b Arc<LabeledPolynomial>> {
    let target = f.sig.mul_pp(t);
    basis.iter().find(|g| g.num > f.num && g.sig.divides(&target))
}

/// Comparable test for the TOP order: `G` with `lpp(G) | t * Sign(F).pp =: x^l lpp(G)`
/// and `t F ⊳' x^l lpp(f_i) G`, where `i` is the index of `Sign(F)`.
pub fn is_new_comparable<'b>(
    t: &PowerProduct,
    f: &LabeledPolynomial,
    basis: &'b [Arc<LabeledPolynomial>],
    mo: &ModuleOrder,
) -> Option<&'b Arc<LabeledPolynomial>> {
    debug_assert_eq!(mo.kind(), ModuleOrderKind::Top);
    let target = f.sig.mul_pp(t);
    let weight = mo.initial_lpp(f.sig.index);
    basis.iter().find(|g| {
        let Some(lpp) = g.lpp() else { return false };
        let Ok(lambda) = target.pp.div(lpp) else { return false };
        let multiple: Signature = g.sig.mul_pp(&lambda.mul(weight));
        mo.cmp_labels((&target, f.num), (&multiple, g.num)) == LabeledOrdering::Above
    })
}

/// The index-only form of [`is_new_comparable`]: `G` is an initial element
/// (`Sign(G) = e_j` and `lpp(G) = lpp(f_j)`) with `j > i` and
/// `lpp(G) | t * Sign(F).pp`. Both agree on bases the engine builds, where
/// `lpp(G) < x^b lpp(f_j)` for every other `G = (x^b e_j, g, k)`.
pub fn new_comparable_by_index<'b>(
    t: &PowerProduct,
    f: &LabeledPolynomial,
    basis: &'b [Arc<LabeledPolynomial>],
    mo: &ModuleOrder,
) -> Option<&'b Arc<LabeledPolynomial>> {
    let target = f.sig.pp.mul(t);
    basis.iter().find(|g| {
        g.sig.pp.is_one()
            && g.sig.index > f.sig.index
            && g.lpp().is_some_and(|l| l == mo.initial_lpp(g.sig.index) && l.divides(&target))
    })
}

/// The comparable test matching the module order: plain under POT, new under TOP.
pub fn syzygy_witness<'b>(
    t: &PowerProduct,
    f: &LabeledPolynomial,
    basis: &'b [Arc<LabeledPolynomial>],
    mo: &ModuleOrder,
) -> Option<&'b Arc<LabeledPolynomial>> {
    match mo.kind() {
        ModuleOrderKind::Pot => is_comparable(t, f, basis),
        ModuleOrderKind::Top => is_new_comparable(t, f, basis, mo),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Syzygy,
    Rewritten,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Debug)]
pub enum PairVerdict {
    Pass,
    Rejected { criterion: Criterion, side: Side, witness: Arc<LabeledPolynomial> },
}

impl PairVerdict {
    pub fn passes(&self) -> bool {
        matches!(self, PairVerdict::Pass)
    }
}

/// Checks, in order: Syzygy on `uF`, Syzygy on `vG`, Rewritten on `uF`,
/// Rewritten on `vG`. The first hit rejects the pair.
pub fn pair_passes(cp: &CriticalPair, basis: &[Arc<LabeledPolynomial>], mo: &ModuleOrder) -> PairVerdict {
    let sides = [(Side::First, &cp.u.pp, &cp.first), (Side::Second, &cp.v.pp, &cp.second)];
    for (side, t, f) in sides {
        if let Some(w) = syzygy_witness(t, f, basis, mo) {
            return PairVerdict::Rejected { criterion: Criterion::Syzygy, side, witness: w.clone() };
        }
    }
    for (side, t, f) in sides {
        if let Some(w) = is_rewritable(t, f, basis) {
            return PairVerdict::Rejected { criterion: Criterion::Rewritten, side, witness: w.clone() };
        }
    }
    PairVerdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, MonomialOrder, Polynomial, Ring};
    use crate::cli::parse_polynomial;
    use crate::pairs::make_pair;
    use proptest::prelude::*;

    fn pp(e: &[u32]) -> PowerProduct {
        PowerProduct::new(e.to_vec())
    }

    /// F1..F5 of the worked toy system in `Q[x,y,z]`, grevlex.
    fn toy() -> Vec<Arc<LabeledPolynomial>> {
        let r = Ring::new(["x", "y", "z"], Field::Rational, MonomialOrder::Grevlex).unwrap();
        let lp = |sig: &[u32], idx, poly: &str, num| {
            Arc::new(LabeledPolynomial::new(Signature::new(pp(sig), idx), parse_polynomial(&r, poly).unwrap(), num))
        };
        vec![
            lp(&[0, 0, 0], 1, "y^2+y*z-x", 1),
            lp(&[0, 0, 0], 2, "y^2-z^2+z", 2),
            lp(&[0, 0, 0], 1, "y*z+z^2-x-z", 3),
            lp(&[0, 1, 0], 1, "-x*y-y*z+x*z", 4),
            lp(&[0, 1, 1], 1, "-2*x*z^2+y*z^2+x^2+x*z", 5),
        ]
    }

    #[test]
    fn comparable_examples() {
        let b = toy();
        let y = pp(&[0, 1, 0]);
        // -y F4 has signature y^2 e1; F2 = (e2, y^2 - z^2 + z, 2) witnesses
        assert_eq!(is_comparable(&y, &b[3], &b[..4]).unwrap().num, 2);
        // -y/2 F5 has signature y^2 z e1
        assert_eq!(is_comparable(&y, &b[4], &b).unwrap().num, 2);
        // nothing lies past the last index
        for t in [pp(&[0, 0, 0]), pp(&[3, 3, 3])] {
            assert!(is_comparable(&t, &b[1], &b).is_none());
        }
        // z F4: yz e1, no witness
        assert!(is_comparable(&pp(&[0, 0, 1]), &b[3], &b).is_none());
    }

    #[test]
    fn rewritable_examples() {
        let b = toy();
        let z = pp(&[0, 0, 1]);
        // z F1 (z e1, num 1) rewritten by F3 (e1, num 3)
        assert_eq!(is_rewritable(&z, &b[0], &b[..3]).unwrap().num, 3);
        // never by F itself
        assert!(is_rewritable(&pp(&[0, 0, 0]), &b[0], &b[..1]).is_none());
        // y F3 (y e1, num 3) rewritten by F4 (y e1, num 4) in the final basis
        assert_eq!(is_rewritable(&pp(&[0, 1, 0]), &b[2], &b).unwrap().num, 4);
        // index must match
        assert!(is_rewritable(&z, &b[1], &b).is_none());
    }

    #[test]
    fn verdicts_on_trace_pairs() {
        let b = toy();
        let mo = ModuleOrder::pot(MonomialOrder::Grevlex);
        // LOOP 2 with B = {F1, F2, F3}
        let p31 = make_pair(&b[2], &b[0], &mo).unwrap();
        match pair_passes(&p31, &b[..3], &mo) {
            PairVerdict::Rejected { criterion, side, witness } => {
                assert_eq!((criterion, side, witness.num), (Criterion::Rewritten, Side::Second, 3));
            }
            PairVerdict::Pass => panic!("pair [F3, F1] must be rejected"),
        }
        // LOOP 5 with B = {F1..F4}
        let p42 = make_pair(&b[3], &b[1], &mo).unwrap();
        match pair_passes(&p42, &b[..4], &mo) {
            PairVerdict::Rejected { criterion, side, witness } => {
                assert_eq!((criterion, side, witness.num), (Criterion::Syzygy, Side::First, 2));
            }
            PairVerdict::Pass => panic!("pair [F4, F2] must be rejected"),
        }
        // LOOP 6
        let p43 = make_pair(&b[3], &b[2], &mo).unwrap();
        assert!(pair_passes(&p43, &b[..4], &mo).passes());
        // pure: same answer twice
        assert!(pair_passes(&p43, &b[..4], &mo).passes());
    }

    #[test]
    fn top_comparable_on_toy() {
        let b = toy();
        let lpps = vec![pp(&[0, 2, 0]), pp(&[0, 2, 0])];
        let mo = ModuleOrder::top(MonomialOrder::Grevlex, lpps).unwrap();
        let y = pp(&[0, 1, 0]);
        // y * F4: signature y^2 e1; F2 = (e2, ...) gives x^l = 1 and
        // y^2 lpp(f1) e1 vs y^2 e2 ties on weight, index 1 < 2 decides
        let full = is_new_comparable(&y, &b[3], &b, &mo).map(|g| g.num);
        let by_index = new_comparable_by_index(&y, &b[3], &b, &mo).map(|g| g.num);
        assert_eq!(full, Some(2));
        assert_eq!(full, by_index);
        // F2 multiples have the last index: never
        assert!(is_new_comparable(&y, &b[1], &b, &mo).is_none());
    }

    #[test]
    fn top_signature_e_j_below_initial_lpp() {
        let b = toy();
        let r = b[0].poly.ring().clone();
        let lpps = vec![pp(&[0, 2, 0]), pp(&[0, 2, 0])];
        let mo = ModuleOrder::top(MonomialOrder::Grevlex, lpps).unwrap();
        // signature e2 but lpp y*z < y^2: x^l lpp(f1) G outweighs y*z * F4
        let g = Arc::new(LabeledPolynomial::new(
            Signature::new(pp(&[0, 0, 0]), 2),
            parse_polynomial(&r, "y*z-z^2").unwrap(),
            6,
        ));
        let only = vec![b[0].clone(), b[3].clone(), g];
        let t = pp(&[0, 1, 1]);
        assert!(is_new_comparable(&t, &b[3], &only, &mo).is_none());
        assert!(new_comparable_by_index(&t, &b[3], &only, &mo).is_none());
        let with_f2 = vec![only[2].clone(), b[1].clone()];
        assert_eq!(is_new_comparable(&t, &b[3], &with_f2, &mo).map(|g| g.num), Some(2));
        assert_eq!(new_comparable_by_index(&t, &b[3], &with_f2, &mo).map(|g| g.num), Some(2));
    }

    #[test]
    fn zero_polynomials_only_rewrite() {
        let mut b = toy();
        let r = b[0].poly.ring().clone();
        b.push(Arc::new(LabeledPolynomial::new(Signature::new(pp(&[0, 0, 1]), 2), Polynomial::zero(&r), 6)));
        // zero element with index 2 cannot witness comparability
        assert!(is_comparable(&pp(&[0, 0, 1]), &b[0], &b[2..]).is_none());
        // but rewrites z * F2
        assert_eq!(is_rewritable(&pp(&[0, 0, 1]), &b[1], &b).unwrap().num, 6);
    }

    proptest! {
        #[test]
        fn witnesses_survive_supersets(
            t in prop::collection::vec(0u32..3, 3),
            fi in 0usize..5,
            subset in prop::collection::vec(prop::bool::ANY, 5),
        ) {
            let b = toy();
            let t = PowerProduct::new(t);
            let small: Vec<_> = b.iter().zip(&subset).filter(|(_, keep)| **keep).map(|(g, _)| g.clone()).collect();
            if let Some(w) = is_comparable(&t, &b[fi], &small) {
                prop_assert!(w.sig.index > b[fi].sig.index);
                prop_assert!(is_comparable(&t, &b[fi], &b).is_some());
            }
            if let Some(w) = is_rewritable(&t, &b[fi], &small) {
                prop_assert!(w.num != b[fi].num);
                prop_assert!(is_rewritable(&t, &b[fi], &b).is_some());
            }
        }
    }
}
