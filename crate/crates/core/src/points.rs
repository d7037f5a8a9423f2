//! Points of projective and affine space over GF(p) and the componentwise
//! multiplicative monoid structure on them.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};

/// Default bound on closures and exhaustive enumerations.
pub const DEFAULT_ENUM_LIMIT: usize = 1_000_000;

/// A point of `P^{s-1}` stored by its canonical representative: the first
/// nonzero coordinate is 1, so equality of points is equality of vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint(Vec<Fp>);

impl ProjectivePoint {
    /// Scales `raw` so that its first nonzero entry becomes 1.
    pub fn normalize(field: &PrimeField, raw: &[Fp]) -> Result<Self> {
        let lead = raw
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroVector)?;
        let scale = field.inv(lead)?;
        Ok(ProjectivePoint(
            raw.iter().map(|&c| field.mul(c, scale)).collect(),
        ))
    }

    /// The identity `[(1, ..., 1)]`.
    pub fn one(dim: usize) -> Self {
        ProjectivePoint(vec![Fp::ONE; dim])
    }

    pub fn coords(&self) -> &[Fp] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<Fp> {
        self.0
    }

    /// Every coordinate is a unit.
    pub fn in_torus(&self) -> bool {
        self.0.iter().all(|c| !c.is_zero())
    }
}

/// An element of the monoid `P^{s-1} ∪ {[0]}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedPoint {
    Zero,
    Point(ProjectivePoint),
}

impl From<ProjectivePoint> for ExtendedPoint {
    fn from(p: ProjectivePoint) -> Self {
        ExtendedPoint::Point(p)
    }
}

/// Componentwise product of two classes, `[0]` when the product vector vanishes.
pub fn proj_product(field: &PrimeField, a: &ExtendedPoint, b: &ExtendedPoint) -> Result<ExtendedPoint> {
    let (ExtendedPoint::Point(a), ExtendedPoint::Point(b)) = (a, b) else {
        return Ok(ExtendedPoint::Zero);
    };
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(product_of_coords(field, a.coords(), b.coords()))
}

fn product_of_coords(field: &PrimeField, a: &[Fp], b: &[Fp]) -> ExtendedPoint {
    let raw: Vec<Fp> = a.iter().zip(b).map(|(&x, &y)| field.mul(x, y)).collect();
    match ProjectivePoint::normalize(field, &raw) {
        Ok(p) => ExtendedPoint::Point(p),
        Err(_) => ExtendedPoint::Zero,
    }
}

/// A point of `A^s`; any coordinates allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePoint(Vec<Fp>);

impl AffinePoint {
    pub fn new(coords: Vec<Fp>) -> Self {
        AffinePoint(coords)
    }

    pub fn coords(&self) -> &[Fp] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Projective,
    Affine,
}

impl Ambient {
    fn name(self) -> &'static str {
        match self {
            Ambient::Projective => "projective",
            Ambient::Affine => "affine",
        }
    }
}

/// Outcome of a monoid test; failures carry a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidCheck {
    Monoid,
    MissingIdentity,
    /// `a * b` is a point outside the set (never `[0]` in the projective case).
    NotClosed {
        a: Vec<Fp>,
        b: Vec<Fp>,
        product: Vec<Fp>,
    },
}

impl MonoidCheck {
    pub fn is_monoid(&self) -> bool {
        matches!(self, MonoidCheck::Monoid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorusCheck {
    Subgroup,
    Empty,
    ZeroCoordinate(Vec<Fp>),
    MissingIdentity,
    NotClosed {
        a: Vec<Fp>,
        b: Vec<Fp>,
        product: Vec<Fp>,
    },
}

impl TorusCheck {
    pub fn is_subgroup(&self) -> bool {
        matches!(self, TorusCheck::Subgroup)
    }
}

/// A finite, deduplicated, lexicographically sorted set of points sharing a
/// field and a dimension. Projective elements are canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    field: Arc<PrimeField>,
    dim: usize,
    ambient: Ambient,
    points: Vec<Vec<Fp>>,
}

impl PointSet {
    pub fn empty(field: Arc<PrimeField>, dim: usize, ambient: Ambient) -> Self {
        PointSet {
            field,
            dim,
            ambient,
            points: Vec::new(),
        }
    }

    pub fn projective<I>(field: Arc<PrimeField>, dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = ProjectivePoint>,
    {
        let points = points.into_iter().map(|p| p.into_coords()).collect();
        Self::build(field, dim, Ambient::Projective, points)
    }

    pub fn affine<I>(field: Arc<PrimeField>, dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = AffinePoint>,
    {
        let points = points.into_iter().map(|p| p.0).collect();
        Self::build(field, dim, Ambient::Affine, points)
    }

    /// Builds a set from integer vectors, reducing mod p and normalizing
    /// projective points.
    pub fn from_integers(
        field: Arc<PrimeField>,
        dim: usize,
        ambient: Ambient,
        raw: &[Vec<i64>],
    ) -> Result<Self> {
        let mut points = Vec::with_capacity(raw.len());
        for r in raw {
            let v: Vec<Fp> = r.iter().map(|&x| field.element(x)).collect();
            points.push(match ambient {
                Ambient::Projective => {
                    if v.len() != dim {
                        return Err(Error::DimensionMismatch {
                            expected: dim,
                            found: v.len(),
                        });
                    }
                    ProjectivePoint::normalize(&field, &v)?.into_coords()
                }
                Ambient::Affine => v,
            });
        }
        Self::build(field, dim, ambient, points)
    }

    fn build(field: Arc<PrimeField>, dim: usize, ambient: Ambient, mut points: Vec<Vec<Fp>>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if p.iter().any(|c| c.value() >= field.modulus()) {
                return Err(Error::InternalInconsistency(format!(
                    "coordinate not reduced mod {}",
                    field.modulus()
                )));
            }
            if ambient == Ambient::Projective {
                let lead = p.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
                if *lead != Fp::ONE {
                    return Err(Error::InternalInconsistency(
                        "projective point is not in canonical form".into(),
                    ));
                }
            }
        }
        points.sort();
        points.dedup();
        Ok(PointSet {
            field,
            dim,
            ambient,
            points,
        })
    }

    /// Trusted constructor for sorted canonical coordinate vectors.
    pub(crate) fn from_canonical(
        field: Arc<PrimeField>,
        dim: usize,
        ambient: Ambient,
        points: Vec<Vec<Fp>>,
    ) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        PointSet {
            field,
            dim,
            ambient,
            points,
        }
    }

    /// All points of `P^{dim-1}(GF(p))` or `A^dim(GF(p))`.
    pub fn full_space(field: Arc<PrimeField>, dim: usize, ambient: Ambient, limit: usize) -> Result<Self> {
        let points = match ambient {
            Ambient::Projective => enumerate_projective(&field, dim, limit)?,
            Ambient::Affine => enumerate_affine(&field, dim, limit)?,
        };
        Ok(PointSet {
            field,
            dim,
            ambient,
            points,
        })
    }

    pub fn field(&self) -> &Arc<PrimeField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_projective(&self) -> bool {
        self.ambient == Ambient::Projective
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Coordinate vectors in sorted order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[Fp]> + '_ {
        self.points.iter().map(|p| p.as_slice())
    }

    pub fn contains(&self, coords: &[Fp]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(coords)).is_ok()
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.iter().all(|p| other.contains(p))
    }

    /// Sub-collection selected by index, in the same ambient space.
    pub fn subset<I: IntoIterator<Item = usize>>(&self, indices: I) -> PointSet {
        let mut points: Vec<Vec<Fp>> = indices.into_iter().map(|i| self.points[i].clone()).collect();
        points.sort();
        points.dedup();
        PointSet {
            field: self.field.clone(),
            dim: self.dim,
            ambient: self.ambient,
            points,
        }
    }

    pub(crate) fn require(&self, ambient: Ambient) -> Result<()> {
        if self.ambient != ambient {
            return Err(Error::AmbientMismatch {
                expected: ambient.name(),
            });
        }
        Ok(())
    }

    fn monoid_check(&self, product: impl Fn(&[Fp], &[Fp]) -> Option<Vec<Fp>>) -> MonoidCheck {
        let one = vec![Fp::ONE; self.dim];
        if !self.contains(&one) {
            return MonoidCheck::MissingIdentity;
        }
        for (i, a) in self.points.iter().enumerate() {
            for b in &self.points[i..] {
                if let Some(prod) = product(a, b) {
                    if !self.contains(&prod) {
                        return MonoidCheck::NotClosed {
                            a: a.clone(),
                            b: b.clone(),
                            product: prod,
                        };
                    }
                }
            }
        }
        MonoidCheck::Monoid
    }

    /// Whether `Y ∪ {[0]}` is a submonoid of `P^{s-1} ∪ {[0]}` containing `[1]`.
    pub fn is_extended_submonoid(&self) -> Result<MonoidCheck> {
        self.require(Ambient::Projective)?;
        Ok(
            self.monoid_check(|a, b| match product_of_coords(&self.field, a, b) {
                ExtendedPoint::Zero => None,
                ExtendedPoint::Point(p) => Some(p.into_coords()),
            }),
        )
    }

    /// Whether an affine set is a submonoid of `A^s` with identity `(1, ..., 1)`.
    pub fn is_affine_submonoid(&self) -> Result<MonoidCheck> {
        self.require(Ambient::Affine)?;
        Ok(self.monoid_check(|a, b| Some(a.iter().zip(b).map(|(&x, &y)| self.field.mul(x, y)).collect())))
    }

    /// Whether the set is a finite subgroup of the projective torus. Over a
    /// finite set with cancellation, closure plus identity suffices.
    pub fn is_torus_subgroup(&self) -> Result<TorusCheck> {
        self.require(Ambient::Projective)?;
        if self.is_empty() {
            return Ok(TorusCheck::Empty);
        }
        if let Some(p) = self.points.iter().find(|p| p.iter().any(|c| c.is_zero())) {
            return Ok(TorusCheck::ZeroCoordinate(p.clone()));
        }
        Ok(match self.is_extended_submonoid()? {
            MonoidCheck::Monoid => TorusCheck::Subgroup,
            MonoidCheck::MissingIdentity => TorusCheck::MissingIdentity,
            MonoidCheck::NotClosed { a, b, product } => TorusCheck::NotClosed { a, b, product },
        })
    }

    /// `{τ·y : y ∈ Y}` for an affine set.
    pub fn scale_set(&self, tau: Fp) -> Result<PointSet> {
        self.require(Ambient::Affine)?;
        if tau.is_zero() {
            return Err(Error::ZeroScalar);
        }
        let points = self
            .points
            .iter()
            .map(|p| p.iter().map(|&c| self.field.mul(tau, c)).collect())
            .collect();
        Self::build(self.field.clone(), self.dim, Ambient::Affine, points)
    }
}

/// Result of closing a generating set under the projective product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    /// The nonzero classes, always containing `[1]`.
    pub points: PointSet,
    /// Whether `[0]` arose as a product.
    pub contains_zero: bool,
}

/// Smallest submonoid of `P^{s-1} ∪ {[0]}` containing the generators and `[1]`.
pub fn monoid_closure(generators: &PointSet, limit: usize) -> Result<Closure> {
    generators.require(Ambient::Projective)?;
    let field = generators.field.clone();
    let (seen, contains_zero) =
        close_under_product(generators, limit, |a, b| match product_of_coords(&field, a, b) {
            ExtendedPoint::Zero => None,
            ExtendedPoint::Point(p) => Some(p.into_coords()),
        })?;
    Ok(Closure {
        points: PointSet {
            field: generators.field.clone(),
            dim: generators.dim,
            ambient: Ambient::Projective,
            points: seen.into_iter().collect(),
        },
        contains_zero,
    })
}

/// Smallest submonoid of `A^s` containing the generators and `(1, ..., 1)`.
pub fn affine_monoid_closure(generators: &PointSet, limit: usize) -> Result<PointSet> {
    generators.require(Ambient::Affine)?;
    let field = generators.field.clone();
    let (seen, _) = close_under_product(generators, limit, |a, b| {
        Some(a.iter().zip(b).map(|(&x, &y)| field.mul(x, y)).collect())
    })?;
    Ok(PointSet {
        field: generators.field.clone(),
        dim: generators.dim,
        ambient: Ambient::Affine,
        points: seen.into_iter().collect(),
    })
}

// Breadth-first: each new element is multiplied by every generator.
fn close_under_product(
    generators: &PointSet,
    limit: usize,
    product: impl Fn(&[Fp], &[Fp]) -> Option<Vec<Fp>>,
) -> Result<(BTreeSet<Vec<Fp>>, bool)> {
    let one = vec![Fp::ONE; generators.dim];
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut contains_zero = false;
    seen.insert(one.clone());
    queue.push_back(one);
    while let Some(x) = queue.pop_front() {
        for g in &generators.points {
            match product(&x, g) {
                None => contains_zero = true,
                Some(y) => {
                    if !seen.contains(&y) {
                        if seen.len() >= limit {
                            return Err(Error::ClosureTooLarge { limit });
                        }
                        seen.insert(y.clone());
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    Ok((seen, contains_zero))
}

/// Number of points of `P^{dim-1}(GF(p))`, saturating.
pub fn projective_space_size(p: u32, dim: usize) -> u128 {
    let p = p as u128;
    let mut total: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..dim {
        total = total.saturating_add(pow);
        pow = pow.saturating_mul(p);
    }
    total
}

/// Canonical representatives of `P^{dim-1}(GF(p))`, sorted.
pub(crate) fn enumerate_projective(field: &PrimeField, dim: usize, limit: usize) -> Result<Vec<Vec<Fp>>> {
    let size = projective_space_size(field.modulus(), dim);
    if size > limit as u128 {
        return Err(Error::EnumerationTooLarge { size, limit });
    }
    let p = field.modulus();
    let mut out = Vec::with_capacity(size as usize);
    // leading 1 at position `lead`, zeros before, free coordinates after
    for lead in 0..dim {
        let free = dim - lead - 1;
        let mut tail = vec![0u32; free];
        loop {
            let mut v = vec![Fp::ZERO; dim];
            v[lead] = Fp::ONE;
            for (k, &t) in tail.iter().enumerate() {
                v[lead + 1 + k] = field.element(t as i64);
            }
            out.push(v);
            if !odometer(&mut tail, p) {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

pub(crate) fn enumerate_affine(field: &PrimeField, dim: usize, limit: usize) -> Result<Vec<Vec<Fp>>> {
    let size = (field.modulus() as u128).saturating_pow(dim as u32);
    if size > limit as u128 {
        return Err(Error::EnumerationTooLarge { size, limit });
    }
    let mut digits = vec![0u32; dim];
    let mut out = Vec::with_capacity(size as usize);
    loop {
        out.push(digits.iter().map(|&d| field.element(d as i64)).collect());
        if !odometer(&mut digits, field.modulus()) {
            break;
        }
    }
    Ok(out)
}

// Increments the last digit first; returns false after wrapping around.
fn odometer(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Arc<PrimeField> {
        Arc::new(PrimeField::new(p).unwrap())
    }

    fn fp(v: &[u32]) -> Vec<Fp> {
        v.iter().map(|&x| Fp::from_raw(x)).collect()
    }

    fn pt(field: &PrimeField, v: &[i64]) -> ProjectivePoint {
        let raw: Vec<Fp> = v.iter().map(|&x| field.element(x)).collect();
        ProjectivePoint::normalize(field, &raw).unwrap()
    }

    fn pset(field: &Arc<PrimeField>, pts: &[&[i64]]) -> PointSet {
        let raw: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
        let dim = pts.first().map_or(2, |p| p.len());
        PointSet::from_integers(field.clone(), dim, Ambient::Projective, &raw).unwrap()
    }

    fn aset(field: &Arc<PrimeField>, pts: &[&[i64]]) -> PointSet {
        let raw: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
        let dim = pts.first().map_or(2, |p| p.len());
        PointSet::from_integers(field.clone(), dim, Ambient::Affine, &raw).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let k5 = gf(5);
        assert_eq!(pt(&k5, &[2, 4]).coords(), fp(&[1, 2]).as_slice());
        assert_eq!(pt(&k5, &[1, 3]).coords(), fp(&[1, 3]).as_slice());
        assert_eq!(pt(&gf(7), &[0, 3, 5]).coords(), fp(&[0, 1, 4]).as_slice());
        assert_eq!(
            ProjectivePoint::normalize(&k5, &[Fp::ZERO, Fp::ZERO]).unwrap_err(),
            Error::ZeroVector
        );
    }

    #[test]
    fn product_examples() {
        let k3 = gf(3);
        let a: ExtendedPoint = pt(&k3, &[1, 1]).into();
        let b: ExtendedPoint = pt(&k3, &[1, 2]).into();
        assert_eq!(proj_product(&k3, &a, &b).unwrap(), b);
        let e1: ExtendedPoint = pt(&k3, &[1, 0]).into();
        let e2: ExtendedPoint = pt(&k3, &[0, 1]).into();
        assert_eq!(proj_product(&k3, &e1, &e2).unwrap(), ExtendedPoint::Zero);
        let k5 = gf(5);
        let c: ExtendedPoint = pt(&k5, &[1, 2]).into();
        assert_eq!(proj_product(&k5, &c, &c).unwrap(), pt(&k5, &[1, 4]).into());
        let d: ExtendedPoint = pt(&k5, &[1, 2, 3]).into();
        assert!(matches!(
            proj_product(&k5, &c, &d),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(
            proj_product(&k5, &ExtendedPoint::Zero, &c).unwrap(),
            ExtendedPoint::Zero
        );
    }

    #[test]
    fn submonoid_examples() {
        let k3 = gf(3);
        assert!(pset(&k3, &[&[1, 1], &[1, 2]])
            .is_extended_submonoid()
            .unwrap()
            .is_monoid());
        assert_eq!(
            pset(&k3, &[&[1, 2]]).is_extended_submonoid().unwrap(),
            MonoidCheck::MissingIdentity
        );
        assert!(pset(&k3, &[&[1, 1], &[1, 0]])
            .is_extended_submonoid()
            .unwrap()
            .is_monoid());
        assert!(aset(&k3, &[&[1, 1]]).is_extended_submonoid().is_err());
    }

    #[test]
    fn torus_examples() {
        let k5 = gf(5);
        assert!(pset(&k5, &[&[1, 1], &[1, 4]])
            .is_torus_subgroup()
            .unwrap()
            .is_subgroup());
        assert!(matches!(
            pset(&gf(3), &[&[1, 1], &[1, 0]]).is_torus_subgroup().unwrap(),
            TorusCheck::ZeroCoordinate(_)
        ));
        match pset(&k5, &[&[1, 1], &[1, 2]]).is_torus_subgroup().unwrap() {
            TorusCheck::NotClosed { product, .. } => assert_eq!(product, fp(&[1, 4])),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            PointSet::empty(k5, 2, Ambient::Projective)
                .is_torus_subgroup()
                .unwrap(),
            TorusCheck::Empty
        );
    }

    #[test]
    fn closure_examples() {
        let k5 = gf(5);
        let c = monoid_closure(&pset(&k5, &[&[1, 2]]), DEFAULT_ENUM_LIMIT).unwrap();
        assert_eq!(c.points, pset(&k5, &[&[1, 1], &[1, 2], &[1, 4], &[1, 3]]));
        assert!(!c.contains_zero);

        let k3 = gf(3);
        let c = monoid_closure(&PointSet::empty(k3.clone(), 2, Ambient::Projective), 10).unwrap();
        assert_eq!(c.points, pset(&k3, &[&[1, 1]]));
        let c = monoid_closure(&pset(&k3, &[&[1, 0]]), 10).unwrap();
        assert_eq!(c.points, pset(&k3, &[&[1, 1], &[1, 0]]));

        let c = monoid_closure(&pset(&k3, &[&[1, 0], &[0, 1]]), 10).unwrap();
        assert!(c.contains_zero);

        assert_eq!(
            monoid_closure(&pset(&gf(7), &[&[1, 3]]), 3).unwrap_err(),
            Error::ClosureTooLarge { limit: 3 }
        );
    }

    #[test]
    fn affine_examples() {
        let k7 = gf(7);
        assert!(aset(&k7, &[&[1, 1], &[0, 0]])
            .is_affine_submonoid()
            .unwrap()
            .is_monoid());
        assert_eq!(
            aset(&k7, &[&[2, 2]]).is_affine_submonoid().unwrap(),
            MonoidCheck::MissingIdentity
        );
        let scaled = aset(&k7, &[&[1, 1]]).scale_set(Fp::ONE).unwrap();
        assert_eq!(scaled, aset(&k7, &[&[1, 1]]));
        let two = k7.element(2);
        assert_eq!(
            aset(&k7, &[&[1, 1]]).scale_set(two).unwrap(),
            aset(&k7, &[&[2, 2]])
        );
        assert_eq!(
            aset(&k7, &[&[1, 1]]).scale_set(Fp::ZERO).unwrap_err(),
            Error::ZeroScalar
        );
        let closure = affine_monoid_closure(&aset(&k7, &[&[2, 0]]), 100).unwrap();
        // powers of 2 are {1,2,4}; second coordinate collapses to 0 after one step
        assert_eq!(closure, aset(&k7, &[&[1, 1], &[2, 0], &[4, 0], &[1, 0]]));
    }

    #[test]
    fn full_space_counts() {
        for (p, dim) in [(2u64, 3usize), (3, 2), (3, 3), (5, 2), (7, 3)] {
            let k = gf(p);
            let all = PointSet::full_space(k.clone(), dim, Ambient::Projective, DEFAULT_ENUM_LIMIT).unwrap();
            assert_eq!(all.len() as u128, projective_space_size(p as u32, dim));
            // every normalized nonzero vector appears exactly once
            let aff = PointSet::full_space(k.clone(), dim, Ambient::Affine, DEFAULT_ENUM_LIMIT).unwrap();
            assert_eq!(aff.len() as u64, p.pow(dim as u32));
            let mut seen = BTreeSet::new();
            for v in aff.iter().filter(|v| v.iter().any(|c| !c.is_zero())) {
                seen.insert(ProjectivePoint::normalize(&k, v).unwrap().into_coords());
            }
            assert_eq!(seen.into_iter().collect::<Vec<_>>(), all.points);
        }
        assert!(matches!(
            PointSet::full_space(gf(7), 8, Ambient::Projective, 1000),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn product_is_a_commutative_monoid_on_p1_gf3() {
        let k3 = gf(3);
        let all = PointSet::full_space(k3.clone(), 2, Ambient::Projective, 100).unwrap();
        let mut elems: Vec<ExtendedPoint> = all
            .iter()
            .map(|c| ExtendedPoint::Point(ProjectivePoint(c.to_vec())))
            .collect();
        elems.push(ExtendedPoint::Zero);
        let one: ExtendedPoint = ProjectivePoint::one(2).into();
        let mul = |a: &ExtendedPoint, b: &ExtendedPoint| proj_product(&k3, a, b).unwrap();
        for a in &elems {
            assert_eq!(&mul(a, &one), a);
            assert_eq!(mul(a, &ExtendedPoint::Zero), ExtendedPoint::Zero);
            for b in &elems {
                assert_eq!(mul(a, b), mul(b, a));
                for c in &elems {
                    assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn normalize_is_constant_on_orbits() {
        let k7 = gf(7);
        for v in enumerate_affine(&k7, 3, 1000).unwrap() {
            if v.iter().all(|c| c.is_zero()) {
                continue;
            }
            let canon = ProjectivePoint::normalize(&k7, &v).unwrap();
            assert_eq!(ProjectivePoint::normalize(&k7, canon.coords()).unwrap(), canon);
            for c in 1..7 {
                let scaled: Vec<Fp> = v.iter().map(|&x| k7.mul(x, k7.element(c))).collect();
                assert_eq!(ProjectivePoint::normalize(&k7, &scaled).unwrap(), canon);
            }
        }
    }

    #[test]
    fn closures_are_submonoids_and_torus_groups_have_inverses() {
        let k5 = gf(5);
        let all = PointSet::full_space(k5.clone(), 3, Ambient::Projective, 1000).unwrap();
        let pts: Vec<Vec<Fp>> = all.iter().map(|c| c.to_vec()).collect();
        for i in 0..pts.len() {
            for j in (i..pts.len()).step_by(5) {
                let gens = all.subset([i, j]);
                let c = monoid_closure(&gens, 1000).unwrap();
                assert!(c.points.is_extended_submonoid().unwrap().is_monoid());
                if c.points.is_torus_subgroup().unwrap().is_subgroup() {
                    for a in c.points.iter() {
                        let has_inverse = c.points.iter().any(|b| {
                            product_of_coords(&k5, a, b) == ExtendedPoint::Point(ProjectivePoint::one(3))
                        });
                        assert!(has_inverse);
                    }
                }
            }
        }
    }
}
