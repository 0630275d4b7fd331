//! Reader for polynomial system files.
//!
//! A system file is a sequence of statements separated by newlines or `;`.
//! `#` starts a comment. Header statements come first:
//!
//! ```text
//! vars x, y, z        # variable precedence x > y > z
//! field Q             # or GF(p) for a prime p
//! order grevlex       # lex | grlex | grevlex, optional (default grevlex)
//! y^2 + y*z - x       # f1
//! y^2 - z^2 + z       # f2
//! ```
//!
//! Every remaining statement is one generator, in order `f1, f2, ...`.
//! Coefficients are integers or fractions (`2/3*x`, `-y/2`). `*` may be
//! omitted between factors (`3x^2 y`), but identifiers are read greedily so
//! `xy` is a single name. Powers take non-negative integer exponents.
//!
//! Variables are ordered as declared. `grevlex` compares total degree first;
//! on a tie, the power product with the larger exponent in the last variable
//! where the two differ is the smaller one (`y*z < y^2`, `y*z < x*z`).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::{ArithError, Field, MonomialOrder, Polynomial, PowerProduct, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownIdentifier(String),
    MalformedExponent(String),
    ZeroPolynomial,
    NonPrimeModulus(String),
    UnknownField(String),
    UnknownOrder(String),
    InvalidVariable(String),
    DuplicateVariable(String),
    MissingVars,
    DuplicateHeader(&'static str),
    HeaderAfterBody,
    EmptyBody,
    UnexpectedChar(char),
    UnexpectedEnd,
    DivisionByZero,
    NonConstantDivisor,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            UnknownIdentifier(s) => write!(f, "unknown identifier `{s}`"),
            MalformedExponent(s) => write!(f, "malformed exponent `{s}`"),
            ZeroPolynomial => write!(f, "generator is the zero polynomial"),
            NonPrimeModulus(s) => write!(f, "modulus `{s}` is not a prime"),
            UnknownField(s) => write!(f, "unknown field `{s}` (expected Q or GF(p))"),
            UnknownOrder(s) => write!(f, "unknown order `{s}` (expected lex, grlex or grevlex)"),
            InvalidVariable(s) => write!(f, "invalid variable name `{s}`"),
            DuplicateVariable(s) => write!(f, "duplicate variable `{s}`"),
            MissingVars => write!(f, "missing `vars` declaration before the first generator"),
            DuplicateHeader(h) => write!(f, "`{h}` declared twice"),
            HeaderAfterBody => write!(f, "header statement after the first generator"),
            EmptyBody => write!(f, "system has no generators"),
            UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            UnexpectedEnd => write!(f, "unexpected end of expression"),
            DivisionByZero => write!(f, "division by zero"),
            NonConstantDivisor => write!(f, "divisor must be a nonzero constant"),
        }
    }
}

/// A parsed system: the ring and the generators `f1..fm` in file order.
#[derive(Debug, Clone)]
pub struct System {
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial>,
}

struct Statement<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn statements(text: &str) -> Vec<Statement<'_>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let code = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let mut start = 0;
        for piece in code.split(';') {
            let lead = piece.len() - piece.trim_start().len();
            let trimmed = piece.trim();
            if !trimmed.is_empty() {
                out.push(Statement {
                    text: trimmed,
                    line: lineno + 1,
                    col: line[..start + lead].chars().count() + 1,
                });
            }
            start += piece.len() + 1;
        }
    }
    out
}

fn keyword<'a>(stmt: &'a str, word: &str) -> Option<&'a str> {
    let rest = stmt.strip_prefix(word)?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest)
    } else {
        None
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_field(spec: &str) -> Result<Field, ParseErrorKind> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "Q" | "QQ" => return Ok(Field::Rational),
        _ => {}
    }
    let modulus = compact
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| compact.strip_prefix("GF"))
        .or_else(|| compact.strip_prefix("Z/").and_then(|s| s.strip_suffix('Z')))
        .ok_or_else(|| ParseErrorKind::UnknownField(spec.trim().to_string()))?;
    let p: u64 = modulus.parse().map_err(|_| ParseErrorKind::NonPrimeModulus(modulus.to_string()))?;
    Field::prime(p).map_err(|_| ParseErrorKind::NonPrimeModulus(modulus.to_string()))
}

/// Parses a whole system file.
pub fn parse_system(text: &str) -> Result<System, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    let mut field: Option<Field> = None;
    let mut order: Option<MonomialOrder> = None;
    let mut ring: Option<Arc<Ring>> = None;
    let mut generators = Vec::new();
    let err = |st: &Statement, kind| ParseError { line: st.line, col: st.col, kind };

    for st in statements(text) {
        let header = [("vars", 0), ("field", 1), ("order", 2)]
            .into_iter()
            .find_map(|(w, i)| keyword(st.text, w).map(|rest| (w, i, rest)));
        if let Some((word, which, rest)) = header {
            if ring.is_some() {
                return Err(err(&st, ParseErrorKind::HeaderAfterBody));
            }
            match which {
                0 => {
                    if vars.is_some() {
                        return Err(err(&st, ParseErrorKind::DuplicateHeader(word)));
                    }
                    let mut names: Vec<String> = Vec::new();
                    for name in rest.split([',', ' ', '\t']).filter(|s| !s.is_empty()) {
                        if !is_identifier(name) {
                            return Err(err(&st, ParseErrorKind::InvalidVariable(name.into())));
                        }
                        if names.iter().any(|n| n == name) {
                            return Err(err(&st, ParseErrorKind::DuplicateVariable(name.into())));
                        }
                        names.push(name.to_string());
                    }
                    if names.is_empty() {
                        return Err(err(&st, ParseErrorKind::MissingVars));
                    }
                    vars = Some(names);
                }
                1 => {
                    if field.is_some() {
                        return Err(err(&st, ParseErrorKind::DuplicateHeader(word)));
                    }
                    field = Some(parse_field(rest).map_err(|k| err(&st, k))?);
                }
                _ => {
                    if order.is_some() {
                        return Err(err(&st, ParseErrorKind::DuplicateHeader(word)));
                    }
                    let name = rest.trim();
                    order = Some(
                        name.parse().map_err(|_| err(&st, ParseErrorKind::UnknownOrder(name.into())))?,
                    );
                }
            }
            continue;
        }

        let r = match &ring {
            Some(r) => r.clone(),
            None => {
                let names = vars.clone().ok_or_else(|| err(&st, ParseErrorKind::MissingVars))?;
                let built = Ring::new(
                    names,
                    field.clone().unwrap_or(Field::Rational),
                    order.unwrap_or(MonomialOrder::Grevlex),
                )
                .map_err(|e| match e {
                    ArithError::DuplicateVariable(v) => err(&st, ParseErrorKind::DuplicateVariable(v)),
                    other => err(&st, ParseErrorKind::InvalidVariable(other.to_string())),
                })?;
                ring = Some(built.clone());
                built
            }
        };
        let f = parse_at(&r, st.text, st.line, st.col)?;
        if f.is_zero() {
            return Err(err(&st, ParseErrorKind::ZeroPolynomial));
        }
        generators.push(f);
    }

    match ring {
        Some(ring) => Ok(System { ring, generators }),
        None => Err(ParseError { line: text.lines().count().max(1), col: 1, kind: ParseErrorKind::EmptyBody }),
    }
}

/// Parses a single polynomial expression in `ring`.
pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial, ParseError> {
    parse_at(ring, text, 1, 1)
}

fn parse_at(ring: &Arc<Ring>, text: &str, line: usize, col: usize) -> Result<Polynomial, ParseError> {
    let mut p = ExprParser { ring, chars: text.chars().collect(), pos: 0, line, col };
    let f = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(f),
        Some(c) => Err(p.error(ParseErrorKind::UnexpectedChar(c))),
    }
}

struct ExprParser<'r> {
    ring: &'r Arc<Ring>,
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl ExprParser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        self.error_at(self.pos, kind)
    }

    fn error_at(&self, pos: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, col: self.col + pos, kind }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t).expect("same ring");
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = acc.mul(&f).expect("same ring");
                }
                Some('/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let d = self.unary()?;
                    let constant = d.head().filter(|h| d.len() == 1 && h.pp.is_one());
                    let c = match (d.is_zero(), constant) {
                        (true, _) => return Err(self.error_at(at, ParseErrorKind::DivisionByZero)),
                        (false, None) => return Err(self.error_at(at, ParseErrorKind::NonConstantDivisor)),
                        (false, Some(h)) => self.ring.field().inv(&h.coeff),
                    };
                    acc = acc.mul_term(&c, &self.ring.one_pp());
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(' => {
                    let f = self.power()?;
                    acc = acc.mul(&f).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '.' || c == '_') {
            self.pos += 1;
        }
        if start == self.pos && self.peek() == Some('-') {
            self.pos += 1;
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                self.pos += 1;
            }
        }
        let raw: String = self.chars[start..self.pos].iter().collect();
        let exp: u32 = raw
            .parse()
            .map_err(|_| self.error_at(start, ParseErrorKind::MalformedExponent(raw.clone())))?;
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(c) => Err(self.error(ParseErrorKind::UnexpectedChar(c))),
                    None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits.parse().expect("digit run");
                Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let index = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| self.error_at(start, ParseErrorKind::UnknownIdentifier(name.clone())))?;
                Ok(Polynomial::monomial(
                    self.ring,
                    self.ring.field().one(),
                    PowerProduct::var(self.ring.nvars(), index),
                ))
            }
            Some(c) => Err(self.error(ParseErrorKind::UnexpectedChar(c))),
        }
    }
}
