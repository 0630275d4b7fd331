//! Signatures, labeled polynomials and the two module orders (POT and TOP).
//!
//! A signature `t * e_i` stands for the leading module term of a
//! representation `sum g_j f_j` of a polynomial; only that term is tracked.
//! Under POT, the generator index dominates (`e_m < ... < e_1`) and the base
//! order breaks ties. Under TOP, `t * e_i` is weighed by `t * lpp(f_i)`, with
//! the larger index smaller on ties.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{Coeff, MonomialOrder, Polynomial, PowerProduct};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("labeled polynomials cannot be multiplied by zero")]
    ZeroScalar,
    #[error("TOP order needs the leading power products of all initial polynomials")]
    MissingInitialLpps,
}

/// A module term `pp * e_index`, with `index` counted from 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub pp: PowerProduct,
    pub index: usize,
}

impl Signature {
    pub fn new(pp: PowerProduct, index: usize) -> Self {
        debug_assert!(index >= 1);
        Signature { pp, index }
    }

    /// `e_index`.
    pub fn unit(nvars: usize, index: usize) -> Self {
        Signature::new(PowerProduct::one(nvars), index)
    }

    /// `t * self`.
    pub fn mul_pp(&self, t: &PowerProduct) -> Self {
        Signature { pp: self.pp.mul(t), index: self.index }
    }

    /// `self | other`: same index and componentwise divisibility.
    pub fn divides(&self, other: &Signature) -> bool {
        self.index == other.index && self.pp.divides(&other.pp)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Signature, &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if !self.0.pp.is_one() {
                    self.0.pp.fmt_with(self.1, f)?;
                    f.write_str("*")?;
                }
                write!(f, "e{}", self.0.index)
            }
        }
        D(self, names)
    }
}

/// Free-function form of [`Signature::divides`].
pub fn sig_divides(a: &Signature, b: &Signature) -> bool {
    a.divides(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleOrderKind {
    /// Position over term.
    Pot,
    /// Term over position, weighted by the initial leading power products.
    Top,
}

/// Outcome of comparing two labeled polynomials: `⊲`, `⋈` or `⊳`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabeledOrdering {
    Below,
    Bowtie,
    Above,
}

impl LabeledOrdering {
    pub fn to_ordering(self) -> Ordering {
        match self {
            LabeledOrdering::Below => Ordering::Less,
            LabeledOrdering::Bowtie => Ordering::Equal,
            LabeledOrdering::Above => Ordering::Greater,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    kind: ModuleOrderKind,
    base: MonomialOrder,
    initial_lpps: Vec<PowerProduct>,
}

impl ModuleOrder {
    pub fn pot(base: MonomialOrder) -> Self {
        ModuleOrder { kind: ModuleOrderKind::Pot, base, initial_lpps: Vec::new() }
    }

    pub fn top(base: MonomialOrder, initial_lpps: Vec<PowerProduct>) -> Result<Self, SignatureError> {
        Self::new(ModuleOrderKind::Top, base, Some(initial_lpps))
    }

    pub fn new(
        kind: ModuleOrderKind,
        base: MonomialOrder,
        initial_lpps: Option<Vec<PowerProduct>>,
    ) -> Result<Self, SignatureError> {
        match kind {
            ModuleOrderKind::Pot => Ok(ModuleOrder { kind, base, initial_lpps: initial_lpps.unwrap_or_default() }),
            ModuleOrderKind::Top => match initial_lpps {
                Some(lpps) if !lpps.is_empty() => Ok(ModuleOrder { kind, base, initial_lpps: lpps }),
                _ => Err(SignatureError::MissingInitialLpps),
            },
        }
    }

    /// The order of `kind` for the given initial polynomials (all nonzero).
    pub fn for_generators(kind: ModuleOrderKind, generators: &[Polynomial]) -> Result<Self, SignatureError> {
        let base = generators.first().map(|g| g.ring().order()).ok_or(SignatureError::MissingInitialLpps)?;
        let lpps = generators
            .iter()
            .map(|g| g.lpp().cloned().map_err(|_| SignatureError::MissingInitialLpps))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(kind, base, Some(lpps))
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn base(&self) -> MonomialOrder {
        self.base
    }

    pub fn initial_lpps(&self) -> &[PowerProduct] {
        &self.initial_lpps
    }

    /// `lpp(f_index)`, the TOP weight of `e_index`.
    pub fn initial_lpp(&self, index: usize) -> &PowerProduct {
        &self.initial_lpps[index - 1]
    }

    pub fn cmp_sig(&self, a: &Signature, b: &Signature) -> Ordering {
        match self.kind {
            ModuleOrderKind::Pot => b.index.cmp(&a.index).then_with(|| self.base.cmp(&a.pp, &b.pp)),
            ModuleOrderKind::Top => {
                let wa = a.pp.mul(self.initial_lpp(a.index));
                let wb = b.pp.mul(self.initial_lpp(b.index));
                self.base
                    .cmp(&wa, &wb)
                    .then_with(|| b.index.cmp(&a.index))
                    .then_with(|| self.base.cmp(&a.pp, &b.pp))
            }
        }
    }

    /// Integer key whose lexicographic order equals [`ModuleOrder::cmp_sig`].
    pub fn sig_key(&self, s: &Signature) -> Vec<i64> {
        let mut key = Vec::new();
        match self.kind {
            ModuleOrderKind::Pot => {
                key.push(-(s.index as i64));
                key.extend(self.base.sort_key(&s.pp));
            }
            ModuleOrderKind::Top => {
                key.extend(self.base.sort_key(&s.pp.mul(self.initial_lpp(s.index))));
                key.push(-(s.index as i64));
                key.extend(self.base.sort_key(&s.pp));
            }
        }
        key
    }

    /// Compares the labels `(sig, num)` of two labeled polynomials.
    pub fn cmp_labels(&self, a: (&Signature, usize), b: (&Signature, usize)) -> LabeledOrdering {
        match self.cmp_sig(a.0, b.0).then_with(|| b.1.cmp(&a.1)) {
            Ordering::Less => LabeledOrdering::Below,
            Ordering::Equal => LabeledOrdering::Bowtie,
            Ordering::Greater => LabeledOrdering::Above,
        }
    }

    pub fn cmp_labeled(&self, a: &LabeledPolynomial, b: &LabeledPolynomial) -> LabeledOrdering {
        self.cmp_labels((&a.sig, a.num), (&b.sig, b.num))
    }
}

/// `(signature, polynomial, number)`. The polynomial may be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPolynomial {
    pub sig: Signature,
    pub poly: Polynomial,
    pub num: usize,
}

impl LabeledPolynomial {
    pub fn new(sig: Signature, poly: Polynomial, num: usize) -> Self {
        LabeledPolynomial { sig, poly, num }
    }

    pub fn lpp(&self) -> Option<&PowerProduct> {
        self.poly.head().map(|h| &h.pp)
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        struct D<'a>(&'a LabeledPolynomial);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let names = self.0.poly.ring().vars();
                write!(f, "({}, {}, {})", self.0.sig.display(names), self.0.poly, self.0.num)
            }
        }
        D(self)
    }
}

/// `c * t * F = (t * Sign(F), c * t * Poly(F), Num(F))`.
pub fn mul_labeled(c: &Coeff, t: &PowerProduct, f: &LabeledPolynomial) -> Result<LabeledPolynomial, SignatureError> {
    if f.poly.ring().field().is_zero(c) {
        return Err(SignatureError::ZeroScalar);
    }
    Ok(LabeledPolynomial { sig: f.sig.mul_pp(t), poly: f.poly.mul_term(c, t), num: f.num })
}
