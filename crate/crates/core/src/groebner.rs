//! Buchberger's algorithm and the ideal operations built on it.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::points::{enumerate_affine, enumerate_projective, Ambient, PointSet};
use crate::polyring::{Monomial, PolyRing, Polynomial, TermOrder};

/// Full reduction of `f` by `divisors`: the result has no term divisible by
/// any leading monomial of `divisors`, and `f - result` lies in their ideal.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let field = f.field();
    let mut rest = f.clone();
    let mut remainder: Vec<(Monomial, Fp)> = Vec::new();
    while let Some((m, c)) = rest.leading_term() {
        let reducer = divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)));
        match reducer {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero divisor");
                let shift = lm.quotient(m).expect("divisibility checked");
                let factor = field.neg(field.mul(c, field.inv(lc).expect("nonzero")));
                rest = rest.merge(factor, Some(&shift), g);
            }
            None => remainder.push(rest.pop_leading().expect("nonzero")),
        }
    }
    Polynomial::from_sorted_terms(f.ring(), remainder)
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.field();
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let lcm = mf.lcm(mg);
    let uf = mf.quotient(&lcm).expect("lcm");
    let ug = mg.quotient(&lcm).expect("lcm");
    let left = f.mul_term(&uf, field.inv(cf).expect("nonzero"));
    left.merge(field.neg(field.inv(cg).expect("nonzero")), Some(&ug), g)
}

/// Whether every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !normal_form(&s_polynomial(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Reduced Gröbner basis of the ideal generated by `gens`, in the order of
/// their ring, sorted by increasing leading monomial.
///
/// Pairs are selected by the normal strategy (smallest lcm first, ties by
/// index) and pruned with the coprime and chain criteria, so the output is
/// fully determined by the input list.
pub fn buchberger(gens: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let order = ring.order();

    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if basis
        .iter()
        .any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    {
        return vec![Polynomial::one(&ring)];
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        let lm = |k: usize| basis[k].leading_monomial().expect("nonzero");
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lm(a.0).lcm(lm(a.1));
                let lb = lm(b.0).lcm(lm(b.1));
                order.cmp(&la, &lb).then_with(|| a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));

        if lm(i).is_coprime(lm(j)) {
            continue;
        }
        let lcm = lm(i).lcm(lm(j));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(k).divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.leading_monomial().is_some_and(Monomial::is_one) {
            return vec![Polynomial::one(&ring)];
        }
        let n = basis.len();
        basis.push(r);
        for k in 0..n {
            pending.insert((k, n));
        }
    }

    reduce_basis(basis)
}

/// Minimalizes and interreduces a Gröbner basis.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = match basis.first() {
        Some(g) => g.ring().order(),
        None => return basis,
    };
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(normal_form(&minimal[k], &others).monic());
    }
    reduced
}

/// An ideal of a polynomial ring, with its reduced Gröbner basis computed
/// on first use.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    basis: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            basis,
        }
    }
}

impl PartialEq for Ideal {
    /// Equality of ideals, decided by their reduced bases.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.basis() == other.basis()
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            basis: OnceLock::new(),
        })
    }

    /// An ideal whose generators are already its reduced basis.
    pub(crate) fn from_reduced_basis(ring: &Arc<PolyRing>, basis: Vec<Polynomial>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(basis.clone());
        Ideal {
            ring: ring.clone(),
            generators: basis,
            basis: cell,
        }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::from_reduced_basis(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Gröbner basis, sorted by increasing leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        self.basis.get_or_init(|| buchberger(&self.generators))
    }

    /// The same ideal under a different term order.
    pub fn with_order(&self, order: TermOrder) -> Ideal {
        let ring = self.ring.with_order(order);
        let gens = self
            .basis()
            .iter()
            .map(|g| g.to_ring(&ring).expect("same variables"))
            .collect();
        Ideal::new(&ring, gens).expect("same ring")
    }

    pub fn is_zero(&self) -> bool {
        self.basis().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis()
            .first()
            .is_some_and(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    /// All reduced-basis elements are homogeneous.
    pub fn is_graded(&self) -> bool {
        self.basis().iter().all(|g| g.is_homogeneous().is_some())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form(f, self.basis()).is_zero())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self.basis())
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.basis() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `I ∩ J` via `⟨w·I, (1 − w)·J⟩ ∩ S` under an order eliminating `w`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::from_reduced_basis(&self.ring, Vec::new()));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let ext = PolyRing::new(self.ring.field().clone(), n + 1, TermOrder::Elimination(1));
        let field = self.ring.field();
        let w = Monomial::var(n + 1, 0);
        let mut gens = Vec::new();
        for f in self.basis() {
            gens.push(lift(f, &ext).mul_term(&w, Fp::ONE));
        }
        for g in other.basis() {
            let g = lift(g, &ext);
            // (1 - w)·g
            gens.push(g.merge(field.neg(Fp::ONE), Some(&w), &g));
        }
        let eliminated: Vec<Polynomial> = buchberger(&gens)
            .into_iter()
            .filter(|g| g.leading_monomial().is_some_and(|m| m.exponents()[0] == 0))
            .map(|g| project(&g, &self.ring))
            .collect();
        // The block order restricts to degrevlex on the original variables, so
        // the w-free part is already the reduced basis in that case.
        if self.ring.order() == TermOrder::DegRevLex {
            Ok(Ideal::from_reduced_basis(&self.ring, eliminated))
        } else {
            Ideal::new(&self.ring, eliminated)
        }
    }

    /// `(I : t_i) = {f : t_i·f ∈ I}` for the 1-based variable index `i`.
    pub fn colon_by_variable(&self, i: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        if i == 0 || i > n {
            return Err(Error::VariableOutOfRange { index: i, nvars: n });
        }
        let var = Monomial::var(n, i - 1);
        let principal = Ideal::from_reduced_basis(&self.ring, vec![Polynomial::var(&self.ring, i - 1)]);
        let meet = self.intersect(&principal)?;
        let quotients = meet
            .basis()
            .iter()
            .map(|g| {
                Polynomial::from_terms(
                    &self.ring,
                    g.terms()
                        .iter()
                        .map(|(m, c)| (var.quotient(m).expect("divisible by t_i"), *c)),
                )
            })
            .collect();
        Ideal::new(&self.ring, quotients)
    }

    /// Krull dimension of `S/I`: the largest set of variables containing
    /// the support of no leading monomial of the reduced basis.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.nvars();
        assert!(n <= 24, "dimension search is exhaustive over variable subsets");
        let supports: Vec<u64> = self
            .basis()
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").support())
            .collect();
        let best = (0u64..1 << n)
            .filter(|&u| supports.iter().all(|&s| s & !u != 0))
            .map(|u| u.count_ones() as usize)
            .max()
            .unwrap_or(0);
        Ok(best)
    }

    /// Points of `P^{s-1}(GF(p))` where every basis element vanishes.
    pub fn zero_set_projective(&self, limit: usize) -> Result<PointSet> {
        if !self.is_graded() {
            return Err(Error::NotGraded);
        }
        let field = self.ring.field();
        let n = self.ring.nvars();
        let candidates = enumerate_projective(field, n, limit)?;
        let pts = candidates.into_iter().filter(|x| {
            self.basis()
                .iter()
                .all(|g| g.evaluate(x).expect("dimension").is_zero())
        });
        Ok(PointSet::from_canonical(
            field.clone(),
            n,
            Ambient::Projective,
            pts.collect(),
        ))
    }

    /// Points of `A^s(GF(p))` where every basis element vanishes.
    pub fn zero_set_affine(&self, limit: usize) -> Result<PointSet> {
        let field = self.ring.field();
        let n = self.ring.nvars();
        let candidates = enumerate_affine(field, n, limit)?;
        let pts = candidates.into_iter().filter(|x| {
            self.basis()
                .iter()
                .all(|g| g.evaluate(x).expect("dimension").is_zero())
        });
        Ok(PointSet::from_canonical(
            field.clone(),
            n,
            Ambient::Affine,
            pts.collect(),
        ))
    }
}

/// Embeds `f` into `ext`, which has one extra leading variable.
fn lift(f: &Polynomial, ext: &Arc<PolyRing>) -> Polynomial {
    Polynomial::from_terms(
        ext,
        f.terms().iter().map(|(m, c)| {
            let mut e = Vec::with_capacity(m.nvars() + 1);
            e.push(0);
            e.extend_from_slice(m.exponents());
            (Monomial::new(e), *c)
        }),
    )
}

/// Drops the (absent) extra leading variable.
fn project(f: &Polynomial, base: &Arc<PolyRing>) -> Polynomial {
    Polynomial::from_terms(
        base,
        f.terms().iter().map(|(m, c)| {
            debug_assert_eq!(m.exponents()[0], 0);
            (Monomial::new(m.exponents()[1..].to_vec()), *c)
        }),
    )
}
