//! F5-reduction: top-reduction restricted by signatures.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{Coeff, PowerProduct};
use crate::criteria::{is_rewritable, syzygy_witness};
use crate::signatures::{LabeledOrdering, LabeledPolynomial, ModuleOrder};

use super::Stats;

/// How condition 2 compares `Sign(F)` with `Sign(x^γ G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignatureGuard {
    /// `Sign(F) ≻ Sign(x^γ G)`.
    Strict,
    /// `F ⊳ x^γ G`: equal signatures are allowed when `Num(G) > Num(F)`.
    Labeled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductionConfig {
    /// Skip reducers `x^γ G` that are comparable by `B`.
    pub cond3: bool,
    /// Skip reducers `x^γ G` that are rewritable by `B`.
    pub cond4: bool,
    pub guard: SignatureGuard,
}

impl Default for ReductionConfig {
    fn default() -> Self {
        ReductionConfig { cond3: true, cond4: true, guard: SignatureGuard::Strict }
    }
}

impl ReductionConfig {
    /// Plain top-reduction by labeled multiples that do not exceed `F`.
    pub fn relaxed() -> Self {
        ReductionConfig { cond3: false, cond4: false, guard: SignatureGuard::Labeled }
    }
}

/// One step `F' = F - c x^γ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub coeff: Coeff,
    pub multiplier: PowerProduct,
    pub reducer: usize,
    pub lpp_before: PowerProduct,
    pub lpp_after: Option<PowerProduct>,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub input: LabeledPolynomial,
    pub output: LabeledPolynomial,
    pub steps: Vec<ReductionStep>,
}

impl Reduction {
    /// Signature and number unchanged, and every step lowers the leading
    /// power product.
    pub fn is_well_behaved(&self, mo: &ModuleOrder) -> bool {
        let base = mo.base();
        self.input.sig == self.output.sig
            && self.input.num == self.output.num
            && self.steps.iter().all(|s| match &s.lpp_after {
                None => true,
                Some(after) => base.cmp(after, &s.lpp_before) == Ordering::Less,
            })
    }
}

/// First reducer of `f` in ascending number order, with `x^γ` and `c`.
fn find_reducer<'b>(
    f: &LabeledPolynomial,
    basis: &'b [Arc<LabeledPolynomial>],
    mo: &ModuleOrder,
    cfg: &ReductionConfig,
    stats: &mut Stats,
) -> Option<(&'b Arc<LabeledPolynomial>, PowerProduct, Coeff)> {
    let head = f.poly.head()?;
    let field = f.poly.ring().field();
    for g in basis {
        let Some(gh) = g.poly.head() else { continue };
        if !gh.pp.divides(&head.pp) {
            continue;
        }
        let gamma = head.pp.div(&gh.pp).expect("divisibility checked");
        let sig = g.sig.mul_pp(&gamma);
        let below = match cfg.guard {
            SignatureGuard::Strict => mo.cmp_sig(&f.sig, &sig) == Ordering::Greater,
            SignatureGuard::Labeled => mo.cmp_labels((&f.sig, f.num), (&sig, g.num)) == LabeledOrdering::Above,
        };
        if !below {
            continue;
        }
        if cfg.cond3 && syzygy_witness(&gamma, g, basis, mo).is_some() {
            stats.comparable_hits += 1;
            continue;
        }
        if cfg.cond4 && is_rewritable(&gamma, g, basis).is_some() {
            stats.rewritable_hits += 1;
            continue;
        }
        return Some((g, gamma, field.div(&head.coeff, &gh.coeff)));
    }
    None
}

/// F5-reduces `f` by `basis` until no eligible reducer remains. Only the head
/// term is ever reduced.
pub fn f5_reduce(
    f: LabeledPolynomial,
    basis: &[Arc<LabeledPolynomial>],
    mo: &ModuleOrder,
    cfg: &ReductionConfig,
    stats: &mut Stats,
) -> Reduction {
    let input = f.clone();
    let mut cur = f;
    let mut steps = Vec::new();
    while let Some((g, gamma, c)) = find_reducer(&cur, basis, mo, cfg, stats) {
        let lpp_before = cur.lpp().expect("reducible polynomial is nonzero").clone();
        cur.poly.sub_assign_term_multiple(&c, &gamma, &g.poly);
        let lpp_after = cur.lpp().cloned();
        debug_assert!(lpp_after.as_ref().map_or(true, |a| mo.base().cmp(a, &lpp_before) == Ordering::Less));
        steps.push(ReductionStep { coeff: c, multiplier: gamma, reducer: g.num, lpp_before, lpp_after });
    }
    Reduction { input, output: cur, steps }
}
