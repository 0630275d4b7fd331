//! The F5B main loop, its F5M variant, statistics and rejected-pair checks.

mod reduce;
mod trace;

pub use reduce::{f5_reduce, Reduction, ReductionConfig, ReductionStep, SignatureGuard};
pub use trace::{write_jsonl, Outcome, TraceEvent};

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{Polynomial, Ring};
use crate::criteria::{pair_passes, Criterion, PairVerdict};
use crate::pairs::{make_pair, CriticalPair, PairQueue, SelectionStrategy};
use crate::signatures::{LabeledPolynomial, ModuleOrder, ModuleOrderKind, Signature, SignatureError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("no input polynomials")]
    EmptyInput,
    #[error("input polynomial {0} is zero")]
    ZeroInput(usize),
    #[error("input polynomial {0} lives in a different ring")]
    RingMismatch(usize),
    #[error("loop ceiling of {limit} selections reached with {pending} pairs pending")]
    LoopLimit { limit: usize, pending: usize },
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Rejected pairs are dropped.
    F5b,
    /// Rejected pairs are archived.
    F5m,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub algorithm: Algorithm,
    pub mode: ModuleOrderKind,
    pub strategy: SelectionStrategy,
    pub reduction: ReductionConfig,
    /// Skip new pairs whose leading power products are coprime.
    pub coprime_shortcut: bool,
    pub max_loops: usize,
    /// Keep every [`Reduction`] of the run in [`RunResult::reductions`].
    pub record_reductions: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            algorithm: Algorithm::F5m,
            mode: ModuleOrderKind::Pot,
            strategy: SelectionStrategy::MinDegMaxPair,
            reduction: ReductionConfig::default(),
            coprime_shortcut: false,
            max_loops: 1_000_000,
            record_reductions: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Successful comparable tests, in the criteria and in reduction.
    pub comparable_hits: usize,
    /// Successful rewritable tests, in the criteria and in reduction.
    pub rewritable_hits: usize,
    /// Pairs that passed both criteria.
    pub useful_cps: usize,
    /// Reductions that ended at zero.
    pub zero_polys: usize,
    pub syzygy_rejections: usize,
    pub rewritten_rejections: usize,
}

impl Stats {
    /// `key=value` lines.
    pub fn to_block(&self) -> String {
        format!(
            "comparable={}\nrewritable={}\nuseful cp's={}\n0-polys={}\nsyzygy_rejections={}\nrewritten_rejections={}\n",
            self.comparable_hits,
            self.rewritable_hits,
            self.useful_cps,
            self.zero_polys,
            self.syzygy_rejections,
            self.rewritten_rejections
        )
    }
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub ring: Arc<Ring>,
    pub module_order: ModuleOrder,
    /// All labeled polynomials in number order, zero ones included.
    pub basis: Vec<Arc<LabeledPolynomial>>,
    /// Rejected pairs in rejection order (F5M only).
    pub archived: Vec<CriticalPair>,
    pub stats: Stats,
    pub trace: Vec<TraceEvent>,
    pub reductions: Vec<Reduction>,
    pub loops: usize,
}

impl RunResult {
    /// Nonzero polynomial parts of the basis, in number order.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.basis.iter().filter(|f| !f.poly.is_zero()).map(|f| f.poly.clone()).collect()
    }
}

pub fn collect_stats(result: &RunResult) -> Stats {
    result.stats
}

fn pair_event(loop_index: usize, cp: &CriticalPair, outcome: Outcome) -> TraceEvent {
    let ring = cp.first.poly.ring();
    let u = Polynomial::monomial(ring, cp.u.coeff.clone(), cp.u.pp.clone());
    let v = Polynomial::monomial(ring, cp.v.coeff.clone(), cp.v.pp.clone());
    TraceEvent {
        loop_index,
        pair: (cp.first.num, cp.second.num, u.to_string(), v.to_string()),
        outcome,
        reason: None,
        side: None,
        witness_num: None,
        new_poly: None,
        new_sig: None,
        new_num: None,
    }
}

/// Runs F5B or F5M on `f_1, ..., f_m`; `f_i` gets signature `e_i` and number `i`.
pub fn run(generators: &[Polynomial], cfg: &EngineConfig) -> Result<RunResult, EngineError> {
    let first = generators.first().ok_or(EngineError::EmptyInput)?;
    let ring = first.ring().clone();
    for (i, f) in generators.iter().enumerate() {
        if !Arc::ptr_eq(f.ring(), &ring) && **f.ring() != *ring {
            return Err(EngineError::RingMismatch(i + 1));
        }
        if f.is_zero() {
            return Err(EngineError::ZeroInput(i + 1));
        }
    }
    let mo = ModuleOrder::for_generators(cfg.mode, generators)?;
    let nvars = ring.nvars();

    let mut basis: Vec<Arc<LabeledPolynomial>> = generators
        .iter()
        .enumerate()
        .map(|(i, f)| Arc::new(LabeledPolynomial::new(Signature::unit(nvars, i + 1), f.clone(), i + 1)))
        .collect();
    let mut queue = PairQueue::new(cfg.strategy);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            push_pair(&mut queue, &basis[i], &basis[j], &mo, cfg);
        }
    }

    let mut stats = Stats::default();
    let mut archived = Vec::new();
    let mut trace = Vec::new();
    let mut reductions = Vec::new();
    let mut k = basis.len();
    let mut loops = 0;
    while let Some(cp) = queue.pop() {
        if loops == cfg.max_loops {
            return Err(EngineError::LoopLimit { limit: cfg.max_loops, pending: queue.len() + 1 });
        }
        loops += 1;
        match pair_passes(&cp, &basis, &mo) {
            PairVerdict::Rejected { criterion, side, witness } => {
                match criterion {
                    Criterion::Syzygy => {
                        stats.comparable_hits += 1;
                        stats.syzygy_rejections += 1;
                    }
                    Criterion::Rewritten => {
                        stats.rewritable_hits += 1;
                        stats.rewritten_rejections += 1;
                    }
                }
                let mut ev = pair_event(loops, &cp, Outcome::Rejected);
                ev.reason = Some(criterion);
                ev.side = Some(side);
                ev.witness_num = Some(witness.num);
                trace.push(ev);
                if cfg.algorithm == Algorithm::F5m {
                    archived.push(cp);
                }
            }
            PairVerdict::Pass => {
                stats.useful_cps += 1;
                let red = f5_reduce(cp.spoly(), &basis, &mo, &cfg.reduction, &mut stats);
                let reduced = &red.output;
                let p = Arc::new(LabeledPolynomial::new(reduced.sig.clone(), reduced.poly.clone(), k + 1));
                let mut ev = pair_event(loops, &cp, Outcome::Reduced);
                ev.new_poly = Some(p.poly.to_string());
                ev.new_sig = Some(p.sig.display(ring.vars()).to_string());
                ev.new_num = Some(p.num);
                if p.poly.is_zero() {
                    stats.zero_polys += 1;
                    ev.outcome = Outcome::Zero;
                } else {
                    for q in &basis {
                        if !q.poly.is_zero() {
                            push_pair(&mut queue, &p, q, &mo, cfg);
                        }
                    }
                }
                trace.push(ev);
                if cfg.record_reductions {
                    reductions.push(red);
                }
                k += 1;
                basis.push(p);
            }
        }
    }

    Ok(RunResult { ring, module_order: mo, basis, archived, stats, trace, reductions, loops })
}

fn push_pair(
    queue: &mut PairQueue,
    a: &Arc<LabeledPolynomial>,
    b: &Arc<LabeledPolynomial>,
    mo: &ModuleOrder,
    cfg: &EngineConfig,
) {
    if cfg.coprime_shortcut {
        if let (Some(la), Some(lb)) = (a.lpp(), b.lpp()) {
            if la.is_coprime(lb) {
                return;
            }
        }
    }
    let cp = make_pair(a, b, mo).expect("pairs are only formed from nonzero polynomials");
    queue.push(cp, mo);
}

/// Outcome of reducing one archived pair's S-polynomial by the final basis.
#[derive(Clone, Debug)]
pub struct VerifiedPair {
    pub pair: CriticalPair,
    pub reduction: Reduction,
}

impl VerifiedPair {
    pub fn reduces_to_zero(&self) -> bool {
        self.reduction.output.poly.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub pairs: Vec<VerifiedPair>,
}

impl VerifyReport {
    pub fn zero_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.reduces_to_zero()).count()
    }

    pub fn all_zero(&self) -> bool {
        self.zero_count() == self.pairs.len()
    }

    pub fn summary(&self) -> String {
        format!("{}/{} pairs reduce to 0", self.zero_count(), self.pairs.len())
    }
}

/// Reduces the S-polynomial of every archived pair by the final basis.
///
/// Reducers may share the reducee's signature when their number is larger
/// (`F ⊳ x^γ G`); conditions 3 and 4 stay on.
pub fn verify_rejected(result: &RunResult) -> VerifyReport {
    let cfg = ReductionConfig { guard: SignatureGuard::Labeled, ..ReductionConfig::default() };
    let pairs = result
        .archived
        .iter()
        .map(|cp| {
            let mut scratch = Stats::default();
            let reduction = f5_reduce(cp.spoly(), &result.basis, &result.module_order, &cfg, &mut scratch);
            VerifiedPair { pair: cp.clone(), reduction }
        })
        .collect();
    VerifyReport { pairs }
}
