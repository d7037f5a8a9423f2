//! Arithmetic in the prime field GF(p) and its cyclic unit group.
//!
//! Elements are plain residues ([`Fp`]); all arithmetic goes through a
//! [`PrimeField`], which owns the modulus, a primitive root and a
//! discrete-log table. Products of two residues fit in `u64` comfortably,
//! the modulus bound keeps them inside `u32` as well.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported modulus; `p * p` stays below `2^31`.
pub const MAX_MODULUS: u32 = 46337;

/// Log tables are built for moduli up to this bound.
const LOG_TABLE_BOUND: u32 = 1 << 16;

/// A residue in `[0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp(u32);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    /// Wraps a residue the caller knows to be reduced.
    #[cfg(test)]
    pub(crate) const fn from_raw(v: u32) -> Fp {
        Fp(v)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The field GF(p) together with a primitive root and its log table.
#[derive(Clone)]
pub struct PrimeField {
    p: u32,
    generator: u32,
    // factors of p - 1, used for element orders and BSGS
    group_factors: Vec<u32>,
    log: Option<Vec<u32>>,
    exp: Vec<u32>,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrimeField")
            .field("p", &self.p)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Eq for PrimeField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pow_mod(base: u32, mut e: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let mut b = base as u64 % p64;
    let mut acc = 1 % p64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        e >>= 1;
    }
    acc as u32
}

/// Modular inverse of `a` modulo `m` for coprime arguments.
fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i64, (a % m) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(m as i64) as u64
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_MODULUS as u64 {
            if p >= 2 && !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let p = p as u32;
        let group_factors = prime_factors(p - 1);
        let generator = (1..p)
            .find(|&g| {
                group_factors
                    .iter()
                    .all(|&q| pow_mod(g, ((p - 1) / q) as u64, p) != 1)
            })
            .expect("GF(p)* is cyclic");

        let mut exp = Vec::with_capacity(p as usize - 1);
        let mut x = 1u32;
        for _ in 0..p - 1 {
            exp.push(x);
            x = ((x as u64 * generator as u64) % p as u64) as u32;
        }
        let log = (p <= LOG_TABLE_BOUND).then(|| {
            let mut log = vec![0u32; p as usize];
            for (k, &v) in exp.iter().enumerate() {
                log[v as usize] = k as u32;
            }
            log
        });

        Ok(PrimeField {
            p,
            generator,
            group_factors,
            log,
            exp,
        })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Smallest primitive root of GF(p)*.
    #[inline]
    pub fn primitive_root(&self) -> Fp {
        Fp(self.generator)
    }

    /// Order of the unit group, `p - 1`.
    #[inline]
    pub fn group_order(&self) -> u64 {
        self.p as u64 - 1
    }

    /// Reduces an arbitrary integer into the field.
    pub fn element(&self, v: i64) -> Fp {
        Fp(v.rem_euclid(self.p as i64) as u32)
    }

    /// Signed representative in `(-p/2, p/2]`, used for display.
    pub fn signed(&self, a: Fp) -> i64 {
        if a.0 as u64 * 2 > self.p as u64 {
            a.0 as i64 - self.p as i64
        } else {
            a.0 as i64
        }
    }

    #[inline]
    pub fn add(&self, a: Fp, b: Fp) -> Fp {
        let s = a.0 + b.0;
        Fp(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: Fp, b: Fp) -> Fp {
        Fp(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    #[inline]
    pub fn neg(&self, a: Fp) -> Fp {
        if a.0 == 0 {
            a
        } else {
            Fp(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: Fp, b: Fp) -> Fp {
        Fp(a.0 * b.0 % self.p)
    }

    pub fn pow(&self, a: Fp, e: u64) -> Fp {
        Fp(pow_mod(a.0, e, self.p))
    }

    pub fn inv(&self, a: Fp) -> Result<Fp> {
        if a.is_zero() {
            return Err(Error::ZeroInversion);
        }
        Ok(Fp(inv_mod(a.0 as u64, self.p as u64) as u32))
    }

    /// `g^k` for the primitive root `g`.
    pub fn exp(&self, k: u64) -> Fp {
        Fp(self.exp[(k % self.group_order()) as usize])
    }

    /// Logarithm base the primitive root.
    fn log(&self, a: Fp) -> u64 {
        debug_assert!(!a.is_zero());
        match &self.log {
            Some(table) => table[a.0 as usize] as u64,
            None => self
                .bsgs(Fp(self.generator), self.group_order(), a)
                .expect("primitive root generates every unit"),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fp) -> u64 {
        let mut ord = self.group_order();
        for &q in &self.group_factors {
            while ord.is_multiple_of(q as u64) && pow_mod(a.0, ord / q as u64, self.p) == 1 {
                ord /= q as u64;
            }
        }
        ord
    }

    /// Smallest `k` in `[0, order(base))` with `base^k = target`.
    pub fn discrete_log(&self, base: Fp, target: Fp) -> Result<u64> {
        if base.is_zero() || target.is_zero() {
            return Err(Error::NotInSubgroup {
                base: base.0,
                target: target.0,
            });
        }
        if self.log.is_none() {
            return self.discrete_log_bsgs(base, target);
        }
        let n = self.group_order();
        let a = self.log(base);
        let b = self.log(target);
        // solve a*k = b (mod n)
        let g = gcd(a, n);
        if !b.is_multiple_of(g) {
            return Err(Error::NotInSubgroup {
                base: base.0,
                target: target.0,
            });
        }
        let ord = n / g;
        if ord == 1 {
            return Ok(0);
        }
        let k = (b / g) % ord * inv_mod((a / g) % ord, ord) % ord;
        Ok(k)
    }

    /// Baby-step giant-step discrete logarithm, independent of the log table.
    pub fn discrete_log_bsgs(&self, base: Fp, target: Fp) -> Result<u64> {
        let not_found = Error::NotInSubgroup {
            base: base.0,
            target: target.0,
        };
        if base.is_zero() || target.is_zero() {
            return Err(not_found);
        }
        self.bsgs(base, self.order(base), target).ok_or(not_found)
    }

    fn bsgs(&self, base: Fp, ord: u64, target: Fp) -> Option<u64> {
        let m = (ord as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(m as usize);
        let mut x = Fp::ONE;
        for j in 0..m {
            baby.entry(x.0).or_insert(j);
            x = self.mul(x, base);
        }
        // base^{-m}
        let giant = self.pow(self.inv(base).ok()?, m);
        let mut y = target;
        for i in 0..=m {
            if let Some(&j) = baby.get(&y.0) {
                let k = (i * m + j) % ord;
                return Some(k);
            }
            y = self.mul(y, giant);
        }
        None
    }

    /// Smallest residue `x` with `x^n = a`.
    pub fn nth_root(&self, a: Fp, n: u64) -> Result<Fp> {
        let no_root = Error::NoRoot { value: a.0, n };
        if a.is_zero() || n == 0 {
            return Err(no_root);
        }
        let q = self.group_order();
        let b = self.log(a);
        // n*y = b (mod q)
        let g = gcd(n % q, q);
        let g = if g == 0 { q } else { g };
        if !b.is_multiple_of(g) {
            return Err(no_root);
        }
        let step = q / g;
        let y0 = if step == 1 {
            0
        } else {
            (b / g) % step * inv_mod((n / g) % step, step) % step
        };
        (0..g).map(|k| self.exp(y0 + k * step)).min().ok_or(no_root)
    }

    /// The unique subgroup of order `d` of GF(p)*, sorted by residue.
    pub fn subgroup_of_order(&self, d: u64) -> Result<Vec<Fp>> {
        let q = self.group_order();
        if d == 0 || !q.is_multiple_of(d) {
            return Err(Error::InvalidOrder { d, group_order: q });
        }
        let step = q / d;
        let mut out: Vec<Fp> = (0..d).map(|k| self.exp(k * step)).collect();
        out.sort();
        Ok(out)
    }

    /// Smallest-residue generator of the subgroup of order `d`.
    pub fn subgroup_generator(&self, d: u64) -> Result<Fp> {
        let elems = self.subgroup_of_order(d)?;
        Ok(elems
            .into_iter()
            .find(|&x| self.order(x) == d)
            .expect("cyclic subgroup has a generator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert_eq!(PrimeField::new(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(PrimeField::new(1).unwrap_err(), Error::ModulusOutOfRange(1));
        assert_eq!(
            PrimeField::new(46349).unwrap_err(),
            Error::ModulusOutOfRange(46349)
        );
        assert!(PrimeField::new(46337).is_ok());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(f(7).inv(Fp(1)).unwrap(), Fp(1));
        assert_eq!(f(7).inv(Fp(3)).unwrap(), Fp(5));
        assert_eq!(f(5).inv(Fp(4)).unwrap(), Fp(4));
        assert_eq!(f(5).inv(Fp(0)).unwrap_err(), Error::ZeroInversion);
    }

    #[test]
    fn discrete_log_examples() {
        let k = f(7);
        assert_eq!(k.discrete_log(Fp(3), Fp(1)).unwrap(), 0);
        assert_eq!(k.discrete_log(Fp(3), Fp(2)).unwrap(), 2);
        assert!(matches!(
            f(5).discrete_log(Fp(4), Fp(2)),
            Err(Error::NotInSubgroup { .. })
        ));
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(f(7).nth_root(Fp(1), 3).unwrap(), Fp(1));
        assert_eq!(f(7).nth_root(Fp(2), 2).unwrap(), Fp(3));
        assert!(matches!(f(5).nth_root(Fp(2), 2), Err(Error::NoRoot { .. })));
    }

    #[test]
    fn subgroup_examples() {
        assert_eq!(f(7).subgroup_of_order(1).unwrap(), vec![Fp(1)]);
        assert_eq!(f(7).subgroup_of_order(3).unwrap(), vec![Fp(1), Fp(2), Fp(4)]);
        assert_eq!(f(5).subgroup_of_order(2).unwrap(), vec![Fp(1), Fp(4)]);
        assert!(matches!(
            f(7).subgroup_of_order(4),
            Err(Error::InvalidOrder { .. })
        ));
    }

    #[test]
    fn exhaustive_small_primes() {
        for p in (2..=101u64).filter(|&n| is_prime(n)) {
            let k = f(p);
            let g = k.primitive_root();
            let powers: std::collections::BTreeSet<_> = (0..p - 1).map(|e| k.pow(g, e)).collect();
            assert_eq!(powers.len() as u64, p - 1);
            for a in 1..p as u32 {
                let a = Fp(a);
                assert_eq!(k.pow(a, p - 1), Fp::ONE);
                let ai = k.inv(a).unwrap();
                assert_eq!(k.mul(a, ai), Fp::ONE);
                assert_eq!(k.inv(ai).unwrap(), a);
                // brute-force order
                let ord = (1..=p - 1).find(|&e| k.pow(a, e) == Fp::ONE).unwrap();
                assert_eq!(k.order(a), ord);
                for t in 1..p as u32 {
                    let t = Fp(t);
                    let brute = (0..ord).find(|&e| k.pow(a, e) == t);
                    let table = k.discrete_log(a, t).ok();
                    let bsgs = k.discrete_log_bsgs(a, t).ok();
                    assert_eq!(table, brute, "p={p} base={a} target={t}");
                    assert_eq!(bsgs, brute, "p={p} base={a} target={t}");
                }
                for n in 1..=6u64 {
                    let brute = (1..p as u32).map(Fp).find(|&x| k.pow(x, n) == a);
                    assert_eq!(k.nth_root(a, n).ok(), brute, "p={p} a={a} n={n}");
                }
            }
            for d in 1..p {
                if (p - 1) % d == 0 {
                    let h = k.subgroup_of_order(d).unwrap();
                    assert_eq!(h.len() as u64, d);
                    for &x in &h {
                        assert_eq!(k.pow(x, d), Fp::ONE);
                        assert!(h.contains(&k.inv(x).unwrap()));
                        for &y in &h {
                            assert!(h.contains(&k.mul(x, y)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn large_modulus_bsgs_agrees_with_table() {
        let k = f(46337);
        let g = k.primitive_root();
        for e in [0u64, 1, 17, 9999, 46335] {
            let t = k.pow(g, e);
            assert_eq!(k.discrete_log(g, t).unwrap(), e);
            assert_eq!(k.discrete_log_bsgs(g, t).unwrap(), e);
        }
    }

    #[test]
    fn signed_representative() {
        let k = f(5);
        assert_eq!(k.signed(Fp(3)), -2);
        assert_eq!(k.signed(Fp(2)), 2);
        assert_eq!(f(2).signed(Fp(1)), 1);
    }
}
