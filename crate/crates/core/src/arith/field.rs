//! Coefficient fields: exact rationals and prime fields GF(p).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithError;

/// Descriptor of the coefficient field of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// Arbitrary-precision rationals, always kept in lowest terms.
    Rational,
    /// The prime field with `p` elements, elements stored as residues in `[0, p)`.
    Prime(u64),
}

/// A field element. Which variant is valid is decided by the owning [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Zp(u64),
}

impl Field {
    /// GF(p); fails unless `p` is a prime.
    pub fn prime(p: u64) -> Result<Self, ArithError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ArithError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::zero()),
            Field::Prime(_) => Coeff::Zp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::one()),
            Field::Prime(_) => Coeff::Zp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Zp((n as i128).rem_euclid(*p as i128) as u64),
        }
    }

    /// Image of an integer in the field.
    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coeff::Zp(r.to_u64().expect("residue fits in u64"))
            }
        }
    }

    /// Image of `num / den`; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coeff, ArithError> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.div(&self.from_bigint(num), &d))
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(q) => q.is_zero(),
            Coeff::Zp(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(q) => q.is_one(),
            Coeff::Zp(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            (Field::Prime(p), Coeff::Zp(x), Coeff::Zp(y)) => {
                Coeff::Zp(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("coefficient does not belong to field {self}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rational, Coeff::Q(x)) => Coeff::Q(-x),
            (Field::Prime(p), Coeff::Zp(x)) => Coeff::Zp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("coefficient does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            (Field::Prime(p), Coeff::Zp(x), Coeff::Zp(y)) => {
                Coeff::Zp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("coefficient does not belong to field {self}"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (Field::Rational, Coeff::Q(x)) => Coeff::Q(x.recip()),
            (Field::Prime(p), Coeff::Zp(x)) => Coeff::Zp(inv_mod(*x, *p)),
            _ => panic!("coefficient does not belong to field {self}"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// Whether `a` belongs to this field's representation.
    pub fn contains(&self, a: &Coeff) -> bool {
        match (self, a) {
            (Field::Rational, Coeff::Q(_)) => true,
            (Field::Prime(p), Coeff::Zp(v)) => v < p,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Coeff {
    /// Sign used by the printer: rationals print their own sign, residues never.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_negative(),
            Coeff::Zp(_) => false,
        }
    }

    pub(crate) fn abs_string(&self) -> String {
        match self {
            Coeff::Q(q) => q.abs().to_string(),
            Coeff::Zp(v) => v.to_string(),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => write!(f, "{q}"),
            Coeff::Zp(v) => write!(f, "{v}"),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
