//! Power products and admissible monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ArithError;

/// A power product `x1^a1 * ... * xn^an`, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerProduct {
    exps: Vec<u32>,
}

impl PowerProduct {
    pub fn new(exps: Vec<u32>) -> Self {
        PowerProduct { exps }
    }

    /// The power product `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        PowerProduct { exps: vec![0; nvars] }
    }

    /// The single variable `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        PowerProduct { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_dims(&self, other: &Self) -> Result<(), ArithError> {
        if self.exps.len() != other.exps.len() {
            return Err(ArithError::Dimension {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        PowerProduct {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        PowerProduct {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self | other`, componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`; fails unless `divisor | self`.
    pub fn div(&self, divisor: &Self) -> Result<Self, ArithError> {
        self.check_dims(divisor)?;
        if !divisor.divides(self) {
            return Err(ArithError::NotDivisible);
        }
        Ok(PowerProduct {
            exps: self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Checked variants of the componentwise operations.
    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_dims(other)?;
        Ok(self.mul(other))
    }

    pub fn try_lcm(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_dims(other)?;
        Ok(self.lcm(other))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Writes the product with the given variable names, `1` for the empty product.
    pub fn fmt_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (name, &e) in names.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a PowerProduct, &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(self.1, f)
            }
        }
        D(self, names)
    }
}

/// The admissible orders supported on power products. Variable precedence is
/// the ring's variable order: the first variable is the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    Grlex,
    Grevlex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [MonomialOrder::Lex, MonomialOrder::Grlex, MonomialOrder::Grevlex];

    /// Compares two power products of equal length.
    pub fn cmp(&self, a: &PowerProduct, b: &PowerProduct) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grlex => a.degree().cmp(&b.degree()).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                // the smaller exponent on the last differing variable wins
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// [`MonomialOrder::cmp`] with a dimension check.
    pub fn try_cmp(&self, a: &PowerProduct, b: &PowerProduct) -> Result<Ordering, ArithError> {
        a.check_dims(b)?;
        Ok(self.cmp(a, b))
    }

    /// A key whose lexicographic order on integer vectors coincides with this
    /// order on power products.
    pub fn sort_key(&self, a: &PowerProduct) -> Vec<i64> {
        let exps = a.exps.iter().map(|&e| e as i64);
        match self {
            MonomialOrder::Lex => exps.collect(),
            MonomialOrder::Grlex => std::iter::once(a.degree() as i64).chain(exps).collect(),
            MonomialOrder::Grevlex => std::iter::once(a.degree() as i64)
                .chain(a.exps.iter().rev().map(|&e| -(e as i64)))
                .collect(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grlex => "grlex",
            MonomialOrder::Grevlex => "grevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" | "plex" => Ok(MonomialOrder::Lex),
            "grlex" | "deglex" => Ok(MonomialOrder::Grlex),
            "grevlex" | "degrevlex" | "drl" => Ok(MonomialOrder::Grevlex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}
