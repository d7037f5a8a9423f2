//! Sparse multivariate polynomials over GF(p).
//!
//! A [`Polynomial`] is a list of `(Monomial, coefficient)` pairs kept sorted
//! in decreasing order under the ring's [`TermOrder`], with no zero
//! coefficients. Multiplying by a monomial preserves that order, which is
//! what the reduction loop in the Gröbner engine relies on.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};

/// Per-variable exponent bound.
pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; nvars],
        }
    }

    /// The variable `t_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { degree: 1, exps }
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            degree: other.degree - self.degree,
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of variables with a positive exponent.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Value at a point, by fast exponentiation per variable.
    pub fn evaluate(&self, field: &PrimeField, x: &[Fp]) -> Fp {
        self.exps.iter().zip(x).fold(Fp::ONE, |acc, (&e, &xi)| {
            if e == 0 {
                acc
            } else {
                field.mul(acc, field.pow(xi, e as u64))
            }
        })
    }
}

/// All monomials of total degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(nvars, 0, d, &mut vec![0; nvars], &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Graded reverse lexicographic, `t1 > t2 > ... > ts`.
    DegRevLex,
    Lex,
    /// Block order: degrevlex on the first `k` variables, ties broken by
    /// degrevlex on the rest. Any monomial involving the first block beats
    /// every monomial free of it.
    Elimination(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            TermOrder::DegRevLex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::Elimination(k) => {
                degrevlex(&a.exps[..k], &b.exps[..k]).then_with(|| degrevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    /// Whether every monomial of degree `d` precedes every monomial of degree `d + 1`.
    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::DegRevLex)
    }
}

/// `GF(p)[t_1, ..., t_s]` with a fixed term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Arc<PrimeField>,
    nvars: usize,
    order: TermOrder,
}

impl PolyRing {
    pub fn new(field: Arc<PrimeField>, nvars: usize, order: TermOrder) -> Arc<Self> {
        if let TermOrder::Elimination(k) = order {
            assert!(k <= nvars, "elimination block larger than the ring");
        }
        assert!(nvars <= 64, "at most 64 variables");
        Arc::new(PolyRing { field, nvars, order })
    }

    pub fn field(&self) -> &Arc<PrimeField> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: TermOrder) -> Arc<Self> {
        PolyRing::new(self.field.clone(), self.nvars, order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomialShape {
    Zero,
    Monomial,
    /// `c·(t^a − t^b)`, coefficient ratio −1.
    PureBinomial,
    /// Two terms with coefficient ratio other than −1.
    NonPureBinomial,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Fp)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Fp) -> Self {
        Self::term(ring, Monomial::one(ring.nvars), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Fp::ONE)
    }

    /// The variable `t_{index+1}`.
    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars, index), Fp::ONE)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Fp) -> Self {
        assert_eq!(m.nvars(), ring.nvars);
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Fp)>,
    {
        let field = &ring.field;
        let order = ring.order;
        let mut terms: Vec<(Monomial, Fp)> = terms.into_iter().collect();
        for (m, _) in &terms {
            assert_eq!(m.nvars(), ring.nvars);
        }
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Fp)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusted constructor for terms already sorted and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Fp)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Fp)> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    /// Integer-coefficient convenience constructor: `(coefficient, exponents)`.
    pub fn from_integer_terms(ring: &Arc<PolyRing>, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), ring.field.element(*c))),
        )
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> &PrimeField {
        &self.ring.field
    }

    /// Terms in decreasing order.
    pub fn terms(&self) -> &[(Monomial, Fp)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, Fp)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<Fp> {
        self.terms.first().map(|(_, c)| *c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> Fp {
        let order = self.ring.order;
        self.terms
            .binary_search_by(|(x, _)| order.cmp(m, x))
            .map(|i| self.terms[i].1)
            .unwrap_or(Fp::ZERO)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(Fp::ONE, None, other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(self.field().neg(Fp::ONE), None, other))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field().neg(Fp::ONE))
    }

    pub fn scale(&self, c: Fp) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// `c · m · self`; the term order is preserved so no sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: Fp) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(x, a)| (x.mul(m), field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.field();
        let mut acc = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), field.mul(*ca, *cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc))
    }

    /// `self + c · m · other`, merging two sorted term lists.
    pub(crate) fn merge(&self, c: Fp, m: Option<&Monomial>, other: &Polynomial) -> Polynomial {
        let field = self.field();
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.len() + other.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(x, k)| (m.map_or_else(|| x.clone(), |m| x.mul(m)), field.mul(*k, c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match order.cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (ma, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = field.add(*ca, cb);
                        if !s.is_zero() {
                            out.push((ma.clone(), s));
                        }
                    }
                },
            }
        }
        out.retain(|(_, k)| !k.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) => self.scale(self.field().inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Re-sorts the terms under another ring with the same variables and field.
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.nvars != self.ring.nvars || ring.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(ring, self.terms.iter().cloned()))
    }

    /// Degree `d` when all terms have degree `d`; the zero polynomial reports 0.
    pub fn is_homogeneous(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree);
        match it.next() {
            None => Some(0),
            Some(d) => it.all(|e| e == d).then_some(d),
        }
    }

    pub fn evaluate(&self, x: &[Fp]) -> Result<Fp> {
        if x.len() != self.ring.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars,
                found: x.len(),
            });
        }
        let field = self.field();
        Ok(self.terms.iter().fold(Fp::ZERO, |acc, (m, c)| {
            field.add(acc, field.mul(*c, m.evaluate(field, x)))
        }))
    }

    /// Whether a homogeneous polynomial vanishes at the class of `point`.
    /// Any representative gives the same answer since `f(cα) = c^d f(α)`.
    pub fn vanishes_at_projective(&self, point: &[Fp]) -> Result<bool> {
        if self.is_homogeneous().is_none() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.evaluate(point)?.is_zero())
    }

    pub fn binomial_shape(&self) -> BinomialShape {
        match self.terms.as_slice() {
            [] => BinomialShape::Zero,
            [_] => BinomialShape::Monomial,
            [(_, a), (_, b)] => {
                if self.field().add(*a, *b).is_zero() {
                    BinomialShape::PureBinomial
                } else {
                    BinomialShape::NonPureBinomial
                }
            }
            _ => BinomialShape::Other,
        }
    }

    /// Parses the text grammar `t1^2*t2 - 3*t3^3`; coefficients are reduced mod p.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
        Parser::new(ring, text).parse()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let signed = field.signed(*c);
            let mag = signed.unsigned_abs();
            match (i, signed < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            let mut first = true;
            for (v, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "t{}", v + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Arc<PolyRing>, text: &'a str) -> Self {
        Parser {
            ring,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match digits.parse::<u64>() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.error("number too large")
            }
        }
    }

    fn parse(mut self) -> Result<Polynomial> {
        let field = self.ring.field.clone();
        let nvars = self.ring.nvars;
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return self.error("empty polynomial");
        }
        let mut negative = false;
        if let Some(b @ (b'+' | b'-')) = self.peek() {
            negative = b == b'-';
            self.pos += 1;
            self.skip_ws();
        }
        loop {
            let mut coeff = if negative { field.neg(Fp::ONE) } else { Fp::ONE };
            let mut exps = vec![0u32; nvars];
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b) if b.is_ascii_digit() => {
                        let n = self.number()?;
                        coeff = field.mul(coeff, field.element((n % field.modulus() as u64) as i64));
                    }
                    Some(b't') => {
                        let var_pos = self.pos;
                        self.pos += 1;
                        let idx = self.number()? as usize;
                        if idx == 0 || idx > nvars {
                            self.pos = var_pos;
                            return self.error(format!("variable t{idx} outside t1..t{nvars}"));
                        }
                        self.skip_ws();
                        let mut e = 1u64;
                        if self.peek() == Some(b'^') {
                            self.pos += 1;
                            self.skip_ws();
                            let exp_pos = self.pos;
                            e = self.number()?;
                            if e >= MAX_EXPONENT as u64 {
                                self.pos = exp_pos;
                                return self.error(format!("exponent {e} too large"));
                            }
                        }
                        let slot = &mut exps[idx - 1];
                        *slot += e as u32;
                        if *slot >= MAX_EXPONENT {
                            return self.error("exponent too large");
                        }
                    }
                    Some(_) => return self.error("expected a coefficient or a variable"),
                    None => return self.error("unexpected end of input"),
                }
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
            terms.push((Monomial::new(exps), coeff));
            match self.peek() {
                None => break,
                Some(b @ (b'+' | b'-')) => {
                    negative = b == b'-';
                    self.pos += 1;
                }
                Some(_) => return self.error("expected '+', '-' or '*'"),
            }
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}
