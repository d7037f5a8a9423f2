//! Binomial and lattice classification of vanishing ideals.
//!
//! The verdict on binomiality is the monoid test on the recomputed zero set
//! `V(I(Y))`; whether the reduced Gröbner basis consists of pure binomials is
//! checked alongside and any disagreement is an error.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::groebner::Ideal;
use crate::points::{Ambient, MonoidCheck, PointSet, DEFAULT_ENUM_LIMIT};
use crate::polyring::{BinomialShape, Monomial, Polynomial, TermOrder};
use crate::vanishing::{vanishing_ideal, Method};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Reduced Gröbner basis made of pure binomials.
    BinomialBasis(Vec<Polynomial>),
    /// The identity `[1]` (or `(1, ..., 1)`) is not in `V(I(Y))`.
    MissingIdentity,
    /// `a * b` lies outside `V(I(Y))` (and is not `[0]`).
    NonClosedPair {
        a: Vec<Fp>,
        b: Vec<Fp>,
        product: Vec<Fp>,
    },
    /// `polynomial` lies in `(I : t_variable)` but not in `I`. The index is 1-based.
    ZeroDivisor { variable: usize, polynomial: Polynomial },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::BinomialBasis(_) => "binomial_basis",
            Witness::MissingIdentity => "missing_identity",
            Witness::NonClosedPair { .. } => "non_closed_pair",
            Witness::ZeroDivisor { .. } => "zero_divisor",
        }
    }
}

/// Outcomes of the independent tests behind a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossChecks {
    /// `V(I(Y)) = Y`.
    pub zero_set_matches: bool,
    pub monoid: bool,
    /// Every element of the reduced basis is a pure binomial.
    pub pure_binomial_basis: bool,
    /// `(I : t_i) = I` for all `i`; absent when not computed.
    pub colon_stable: Option<bool>,
    pub torus_subgroup: Option<bool>,
    /// Buchberger–Möller and intersection bases agree; absent unless requested.
    pub methods_agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub is_binomial: bool,
    /// Absent when only binomiality was decided.
    pub is_lattice: Option<bool>,
    pub dimension: usize,
    pub ideal: Ideal,
    pub witness: Witness,
    pub cross_checks: CrossChecks,
}

impl Certificate {
    pub fn basis(&self) -> &[Polynomial] {
        self.ideal.basis()
    }
}

/// Settings shared by the classification entry points.
#[derive(Clone, Debug)]
pub struct Classifier {
    pub order: TermOrder,
    pub method: Method,
    /// Also compute the ideal by the other method and compare.
    pub compare_methods: bool,
    pub limit: usize,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier {
            order: TermOrder::DegRevLex,
            method: Method::BuchbergerMoller,
            compare_methods: false,
            limit: DEFAULT_ENUM_LIMIT,
        }
    }
}

pub fn classify_binomial(points: &PointSet) -> Result<Certificate> {
    Classifier::default().binomial(points)
}

pub fn classify_lattice(points: &PointSet) -> Result<Certificate> {
    Classifier::default().lattice(points)
}

pub fn classify_affine_binomial(points: &PointSet) -> Result<Certificate> {
    Classifier::default().affine_binomial(points)
}

fn is_pure(g: &Polynomial) -> bool {
    g.binomial_shape() == BinomialShape::PureBinomial
}

impl Classifier {
    fn ideal(&self, points: &PointSet) -> Result<(Ideal, Option<bool>)> {
        let ideal = vanishing_ideal(points, self.order, self.method)?;
        let agree = if self.compare_methods {
            let other = match self.method {
                Method::BuchbergerMoller => Method::Intersection,
                Method::Intersection => Method::BuchbergerMoller,
            };
            Some(vanishing_ideal(points, self.order, other)? == ideal)
        } else {
            None
        };
        Ok((ideal, agree))
    }

    fn certify(&self, points: &PointSet, ambient: Ambient) -> Result<Certificate> {
        points.require(ambient)?;
        let (ideal, methods_agree) = self.ideal(points)?;
        let zeros = match ambient {
            Ambient::Projective => ideal.zero_set_projective(self.limit)?,
            Ambient::Affine => ideal.zero_set_affine(self.limit)?,
        };
        let check = match ambient {
            Ambient::Projective => zeros.is_extended_submonoid()?,
            Ambient::Affine => zeros.is_affine_submonoid()?,
        };
        let pure = ideal.basis().iter().all(is_pure);
        let cross_checks = CrossChecks {
            zero_set_matches: &zeros == points,
            monoid: check.is_monoid(),
            pure_binomial_basis: pure,
            colon_stable: None,
            torus_subgroup: None,
            methods_agree,
        };
        if !cross_checks.zero_set_matches {
            return Err(Error::InternalInconsistency(
                "zero set of I(Y) differs from Y".into(),
            ));
        }
        if methods_agree == Some(false) {
            return Err(Error::InternalInconsistency(
                "vanishing ideal methods disagree".into(),
            ));
        }
        if cross_checks.monoid != pure {
            return Err(Error::InternalInconsistency(format!(
                "monoid test says {}, basis purity says {}",
                cross_checks.monoid, pure
            )));
        }
        let witness = match check {
            MonoidCheck::Monoid => Witness::BinomialBasis(ideal.basis().to_vec()),
            MonoidCheck::MissingIdentity => Witness::MissingIdentity,
            MonoidCheck::NotClosed { a, b, product } => Witness::NonClosedPair { a, b, product },
        };
        Ok(Certificate {
            is_binomial: cross_checks.monoid,
            is_lattice: None,
            dimension: ideal.krull_dimension()?,
            ideal,
            witness,
            cross_checks,
        })
    }

    /// Decides whether `I(Y)` is a binomial ideal, for a projective set.
    pub fn binomial(&self, points: &PointSet) -> Result<Certificate> {
        self.certify(points, Ambient::Projective)
    }

    /// Decides whether `I(Y)` is an affine binomial ideal.
    pub fn affine_binomial(&self, points: &PointSet) -> Result<Certificate> {
        self.certify(points, Ambient::Affine)
    }

    /// Decides whether `I(Y)` is a lattice ideal: binomial, and no variable
    /// is a zero divisor modulo it.
    pub fn lattice(&self, points: &PointSet) -> Result<Certificate> {
        let mut cert = self.binomial(points)?;
        let mut zero_divisor = None;
        for i in 1..=points.dim() {
            let colon = cert.ideal.colon_by_variable(i)?;
            if colon != cert.ideal {
                let mut extra = Vec::new();
                for g in colon.basis() {
                    if !cert.ideal.contains(g)? {
                        extra.push(g.clone());
                    }
                }
                let polynomial = extra.into_iter().next().ok_or_else(|| {
                    Error::InternalInconsistency("colon ideal differs without witness".into())
                })?;
                zero_divisor = Some(Witness::ZeroDivisor {
                    variable: i,
                    polynomial,
                });
                break;
            }
        }
        let colon_stable = zero_divisor.is_none();
        let torus = points.is_torus_subgroup()?.is_subgroup();
        let is_lattice = cert.is_binomial && colon_stable;
        cert.cross_checks.colon_stable = Some(colon_stable);
        cert.cross_checks.torus_subgroup = Some(torus);
        if is_lattice != torus {
            return Err(Error::InternalInconsistency(format!(
                "lattice test says {is_lattice}, torus subgroup test says {torus}"
            )));
        }
        if cert.is_binomial {
            if let Some(w) = zero_divisor {
                cert.witness = w;
            }
        }
        cert.is_lattice = Some(is_lattice);
        Ok(cert)
    }
}

/// Equal-degree monomials share a key exactly when their difference
/// vanishes on the canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterKey {
    pub degree: u32,
    pub values: Vec<Fp>,
}

impl CharacterKey {
    pub fn of(m: &Monomial, points: &PointSet) -> Self {
        CharacterKey {
            degree: m.degree(),
            values: points.iter().map(|x| m.evaluate(points.field(), x)).collect(),
        }
    }
}

/// Writes a homogeneous `f ∈ I(Y)` as `Σ λ_j (t^{a_j} − t^{a})`, one anchor
/// `t^a` per character class, the anchor being the smallest monomial of the
/// class.
pub fn decompose_to_binomials(f: &Polynomial, points: &PointSet) -> Result<Vec<(Fp, Polynomial)>> {
    points.require(Ambient::Projective)?;
    if f.ring().nvars() != points.dim() || f.ring().field() != points.field() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(Vec::new());
    }
    if f.is_homogeneous().is_none() {
        return Err(Error::NotHomogeneous);
    }
    if !points.is_extended_submonoid()?.is_monoid() {
        return Err(Error::NotAMonoid);
    }
    for x in points.iter() {
        if !f.evaluate(x)?.is_zero() {
            return Err(Error::NotInIdeal);
        }
    }
    let field = points.field();
    // terms arrive in descending order, so each group's last entry is its anchor
    let mut groups: BTreeMap<CharacterKey, Vec<(&Monomial, Fp)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        groups
            .entry(CharacterKey::of(m, points))
            .or_default()
            .push((m, *c));
    }
    let mut out = Vec::new();
    for group in groups.values() {
        let total = group.iter().fold(Fp::ZERO, |acc, &(_, c)| field.add(acc, c));
        if !total.is_zero() {
            return Err(Error::InternalInconsistency(
                "character class coefficients do not cancel".into(),
            ));
        }
        let (anchor, _) = group[group.len() - 1];
        for &(m, c) in &group[..group.len() - 1] {
            let binomial = Polynomial::from_terms(
                f.ring(),
                [(m.clone(), Fp::ONE), (anchor.clone(), field.neg(Fp::ONE))],
            );
            out.push((c, binomial));
        }
    }
    let order = f.ring().order();
    out.sort_by(|a, b| order.cmp(b.1.leading_monomial().unwrap(), a.1.leading_monomial().unwrap()));
    Ok(out)
}

/// Maps each `t^b − t^c` to `τ^{−|b|} t^b − τ^{−|c|} t^c`; when the inputs
/// generate `I(Y)` the outputs generate `I(τY)`.
pub fn affine_scale_generators(gens: &[Polynomial], tau: Fp) -> Result<Vec<Polynomial>> {
    if tau.is_zero() {
        return Err(Error::ZeroScalar);
    }
    gens.iter()
        .enumerate()
        .map(|(i, g)| {
            if !is_pure(g) {
                return Err(Error::NotPureBinomial(i));
            }
            let field = g.field();
            let inv = field.inv(tau)?;
            let lead = g.leading_coefficient().unwrap();
            let terms = g.terms().iter().map(|(m, c)| {
                let sign = if *c == lead { Fp::ONE } else { field.neg(Fp::ONE) };
                (m.clone(), field.mul(sign, field.pow(inv, m.degree() as u64)))
            });
            Ok(Polynomial::from_terms(g.ring(), terms))
        })
        .collect()
}
