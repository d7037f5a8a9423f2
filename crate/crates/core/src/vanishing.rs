//! Vanishing ideals of finite point sets.
//!
//! Two independent routes: folding the per-point prime ideals through
//! [`Ideal::intersect`], and a Buchberger–Möller style elimination on
//! evaluation matrices that reads relations straight off the linear
//! dependencies between monomial columns.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::groebner::Ideal;
use crate::points::{Ambient, PointSet};
use crate::polyring::{monomials_of_degree, Monomial, PolyRing, Polynomial, TermOrder};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Evaluation-matrix kernels, degree by degree.
    #[default]
    BuchbergerMoller,
    /// Intersection of the ideals of the individual points.
    Intersection,
}

/// Values of a list of monomials at a list of points; one row per point.
#[derive(Clone, Debug)]
pub struct EvaluationMatrix {
    monomials: Vec<Monomial>,
    rows: Vec<Vec<Fp>>,
}

impl EvaluationMatrix {
    pub fn new(field: &PrimeField, points: &PointSet, monomials: Vec<Monomial>) -> Self {
        let rows = points
            .iter()
            .map(|x| monomials.iter().map(|m| m.evaluate(field, x)).collect())
            .collect();
        EvaluationMatrix { monomials, rows }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn entry(&self, row: usize, col: usize) -> Fp {
        self.rows[row][col]
    }

    pub fn column(&self, col: usize) -> Vec<Fp> {
        self.rows.iter().map(|r| r[col]).collect()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
}

/// Column echelon form over the standard monomials seen so far. Each stored
/// column carries the polynomial whose evaluation vector it is.
struct ColumnEchelon<'a> {
    ring: &'a Arc<PolyRing>,
    columns: Vec<(usize, Vec<Fp>, Polynomial)>,
}

impl<'a> ColumnEchelon<'a> {
    fn new(ring: &'a Arc<PolyRing>) -> Self {
        ColumnEchelon {
            ring,
            columns: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.columns.len()
    }

    /// Adds the column of `m`. Returns the relation `m - Σ c_k s_k` over
    /// earlier standard monomials when the column is dependent.
    fn insert(&mut self, m: &Monomial, mut column: Vec<Fp>) -> Option<Polynomial> {
        let field = self.ring.field();
        let mut poly = Polynomial::term(self.ring, m.clone(), Fp::ONE);
        for (pivot, col, expr) in &self.columns {
            let c = column[*pivot];
            if c.is_zero() {
                continue;
            }
            for (v, w) in column.iter_mut().zip(col) {
                *v = field.sub(*v, field.mul(c, *w));
            }
            poly = poly.merge(field.neg(c), None, expr);
        }
        match column.iter().position(|v| !v.is_zero()) {
            None => Some(poly),
            Some(pivot) => {
                let scale = field.inv(column[pivot]).expect("nonzero pivot");
                for v in column.iter_mut() {
                    *v = field.mul(*v, scale);
                }
                self.columns.push((pivot, column, poly.scale(scale)));
                None
            }
        }
    }
}

fn ascending(ring: &PolyRing, mut monos: Vec<Monomial>) -> Vec<Monomial> {
    let order = ring.order();
    monos.sort_by(|a, b| order.cmp(a, b));
    monos
}

fn sort_by_leading(ring: &PolyRing, basis: &mut [Polynomial]) {
    let order = ring.order();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
}

/// `I_[P]`, generated by `α_k t_i − α_i t_k` for all `i ≠ k`.
pub fn point_ideal_projective(ring: &Arc<PolyRing>, point: &[Fp]) -> Result<Ideal> {
    let n = ring.nvars();
    if point.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: point.len(),
        });
    }
    if point.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let field = ring.field();
    let mut gens = Vec::new();
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            let g = Polynomial::from_terms(
                ring,
                [
                    (Monomial::var(n, i), point[k]),
                    (Monomial::var(n, k), field.neg(point[i])),
                ],
            );
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    Ideal::new(ring, gens)
}

/// `I_P = ⟨t_1 − α_1, …, t_s − α_s⟩`.
pub fn point_ideal_affine(ring: &Arc<PolyRing>, point: &[Fp]) -> Result<Ideal> {
    let n = ring.nvars();
    if point.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: point.len(),
        });
    }
    let field = ring.field();
    let gens = (0..n)
        .map(|i| {
            Polynomial::from_terms(
                ring,
                [
                    (Monomial::var(n, i), Fp::ONE),
                    (Monomial::one(n), field.neg(point[i])),
                ],
            )
        })
        .collect();
    Ideal::new(ring, gens)
}

/// The vanishing ideal of a finite nonempty point set, with its reduced
/// basis in `order`.
pub fn vanishing_ideal(points: &PointSet, order: TermOrder, method: Method) -> Result<Ideal> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let ring = PolyRing::new(points.field().clone(), points.dim(), order);
    match method {
        Method::Intersection => by_intersection(points, &ring),
        Method::BuchbergerMoller => match points.ambient() {
            Ambient::Projective => Ok(projective_bm(points, &ring)),
            Ambient::Affine if order.is_graded() => Ok(affine_bm(points, &ring)),
            Ambient::Affine => {
                let graded = ring.with_order(TermOrder::DegRevLex);
                Ok(affine_bm(points, &graded).with_order(order))
            }
        },
    }
}

fn by_intersection(points: &PointSet, ring: &Arc<PolyRing>) -> Result<Ideal> {
    let point_ideal = match points.ambient() {
        Ambient::Projective => point_ideal_projective,
        Ambient::Affine => point_ideal_affine,
    };
    let mut iter = points.iter();
    let first = iter.next().ok_or(Error::EmptySet)?;
    let mut acc = point_ideal(ring, first)?;
    for x in iter {
        acc = acc.intersect(&point_ideal(ring, x)?)?;
    }
    // force the cached basis so clones share it
    acc.basis();
    Ok(acc)
}

// Processes degrees 1, 2, ... until the Hilbert function has equalled |Y|
// in two consecutive degrees; by then every minimal generator has been
// seen. A final Buchberger pass completes the Gröbner basis, which for
// non-generic coordinates may need higher degrees.
fn projective_bm(points: &PointSet, ring: &Arc<PolyRing>) -> Ideal {
    let field = ring.field();
    let n = points.len();
    let mut relations: Vec<Polynomial> = Vec::new();
    let mut prev_rank = 1;
    for d in 1u32.. {
        let monos: Vec<Monomial> = ascending(ring, monomials_of_degree(ring.nvars(), d))
            .into_iter()
            .filter(|m| !relations.iter().any(|g| g.leading_monomial().unwrap().divides(m)))
            .collect();
        let matrix = EvaluationMatrix::new(field, points, monos);
        let mut echelon = ColumnEchelon::new(ring);
        let mut fresh = Vec::new();
        for (c, m) in matrix.monomials().iter().enumerate() {
            if let Some(rel) = echelon.insert(m, matrix.column(c)) {
                fresh.push(rel);
            }
        }
        relations.extend(fresh);
        let rank = echelon.rank();
        if rank == n && prev_rank == n {
            break;
        }
        prev_rank = rank;
    }
    let ideal = Ideal::new(ring, relations).expect("same ring");
    ideal.basis();
    ideal
}

// With a degree-compatible order the dependent columns whose monomials are
// minimal in the leading-term ideal give the reduced basis directly: their
// tails consist of standard monomials only. The degree after the Hilbert
// function reaches |Y| is the last one that can contain such a monomial.
fn affine_bm(points: &PointSet, ring: &Arc<PolyRing>) -> Ideal {
    let field = ring.field();
    let n = points.len();
    let mut echelon = ColumnEchelon::new(ring);
    let mut basis: Vec<Polynomial> = Vec::new();
    for d in 0u32.. {
        let saturated = echelon.rank() == n;
        let monos: Vec<Monomial> = ascending(ring, monomials_of_degree(ring.nvars(), d))
            .into_iter()
            .filter(|m| !basis.iter().any(|g| g.leading_monomial().unwrap().divides(m)))
            .collect();
        let matrix = EvaluationMatrix::new(field, points, monos);
        for (c, m) in matrix.monomials().iter().enumerate() {
            if let Some(rel) = echelon.insert(m, matrix.column(c)) {
                basis.push(rel);
            }
        }
        if saturated {
            break;
        }
    }
    sort_by_leading(ring, &mut basis);
    debug_assert!(crate::groebner::is_groebner_basis(&basis));
    Ideal::from_reduced_basis(ring, basis)
}

/// Every basis element vanishes on `points`, and the zero set of the ideal
/// is exactly `points`.
pub fn verify_vanishing(ideal: &Ideal, points: &PointSet, limit: usize) -> Result<bool> {
    if ideal.ring().nvars() != points.dim() || ideal.ring().field() != points.field() {
        return Err(Error::RingMismatch);
    }
    for g in ideal.basis() {
        for x in points.iter() {
            if !g.evaluate(x)?.is_zero() {
                return Ok(false);
            }
        }
    }
    let zeros = match points.ambient() {
        Ambient::Projective => ideal.zero_set_projective(limit)?,
        Ambient::Affine => ideal.zero_set_affine(limit)?,
    };
    Ok(&zeros == points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::{PointSet, DEFAULT_ENUM_LIMIT};

    fn gf(p: u64) -> Arc<PrimeField> {
        Arc::new(PrimeField::new(p).unwrap())
    }

    fn proj(field: &Arc<PrimeField>, pts: &[&[i64]]) -> PointSet {
        let raw: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
        PointSet::from_integers(field.clone(), pts[0].len(), Ambient::Projective, &raw).unwrap()
    }

    fn aff(field: &Arc<PrimeField>, pts: &[&[i64]]) -> PointSet {
        let raw: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
        PointSet::from_integers(field.clone(), pts[0].len(), Ambient::Affine, &raw).unwrap()
    }

    fn basis_of(i: &Ideal) -> Vec<String> {
        i.basis().iter().map(|g| g.to_string()).collect()
    }

    fn both(y: &PointSet) -> Vec<String> {
        let bm = vanishing_ideal(y, TermOrder::DegRevLex, Method::BuchbergerMoller).unwrap();
        let oracle = vanishing_ideal(y, TermOrder::DegRevLex, Method::Intersection).unwrap();
        assert_eq!(bm.basis(), oracle.basis(), "method disagreement on {y:?}");
        basis_of(&bm)
    }

    #[test]
    fn projective_point_ideals() {
        let k5 = gf(5);
        let r = PolyRing::new(k5.clone(), 2, TermOrder::DegRevLex);
        let i = point_ideal_projective(&r, proj(&k5, &[&[1, 2]]).iter().next().unwrap()).unwrap();
        assert_eq!(basis_of(&i), ["t1 + 2*t2"]);
        let expected = Ideal::new(&r, vec![Polynomial::parse(&r, "t2 - 2*t1").unwrap()]).unwrap();
        assert_eq!(i, expected);
        let i = point_ideal_projective(&r, proj(&k5, &[&[1, 0]]).iter().next().unwrap()).unwrap();
        assert_eq!(basis_of(&i), ["t2"]);
        let k3 = gf(3);
        let r3 = PolyRing::new(k3.clone(), 3, TermOrder::DegRevLex);
        let i = point_ideal_projective(&r3, proj(&k3, &[&[1, 1, 1]]).iter().next().unwrap()).unwrap();
        let expected = Ideal::new(
            &r3,
            vec![
                Polynomial::parse(&r3, "t2 - t1").unwrap(),
                Polynomial::parse(&r3, "t3 - t1").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(i, expected);
    }

    #[test]
    fn affine_point_ideals() {
        let k7 = gf(7);
        let r = PolyRing::new(k7.clone(), 2, TermOrder::DegRevLex);
        let zero = [Fp::ZERO, Fp::ZERO];
        assert_eq!(basis_of(&point_ideal_affine(&r, &zero).unwrap()), ["t2", "t1"]);
        let p = [k7.element(3), k7.element(5)];
        assert_eq!(
            basis_of(&point_ideal_affine(&r, &p).unwrap()),
            ["t2 + 2", "t1 - 3"]
        );
        let r1 = PolyRing::new(k7.clone(), 1, TermOrder::DegRevLex);
        assert_eq!(
            basis_of(&point_ideal_affine(&r1, &[k7.element(2)]).unwrap()),
            ["t1 - 2"]
        );
    }

    #[test]
    fn vanishing_examples() {
        let k3 = gf(3);
        assert_eq!(both(&proj(&k3, &[&[1, 1], &[1, 2]])), ["t1^2 - t2^2"]);
        assert_eq!(both(&proj(&k3, &[&[1, 1], &[1, 0]])), ["t1*t2 - t2^2"]);
        let k5 = gf(5);
        let single = proj(&k5, &[&[1, 2, 3]]);
        let r = PolyRing::new(k5.clone(), 3, TermOrder::DegRevLex);
        let expected = point_ideal_projective(&r, single.iter().next().unwrap()).unwrap();
        assert_eq!(
            vanishing_ideal(&single, TermOrder::DegRevLex, Method::BuchbergerMoller).unwrap(),
            expected
        );
        assert_eq!(
            vanishing_ideal(
                &PointSet::empty(k5, 2, Ambient::Projective),
                TermOrder::DegRevLex,
                Method::default()
            )
            .unwrap_err(),
            Error::EmptySet
        );
    }

    #[test]
    fn affine_examples() {
        let k3 = gf(3);
        assert_eq!(both(&aff(&k3, &[&[1, 1], &[0, 0]])), ["t1 - t2", "t2^2 - t2"]);
        assert_eq!(both(&aff(&k3, &[&[1, 1]])), ["t2 - 1", "t1 - 1"]);
        let k7 = gf(7);
        let line: Vec<Vec<i64>> = (0..7).map(|x| vec![x, 2 * x + 1]).collect();
        let y = PointSet::from_integers(k7.clone(), 2, Ambient::Affine, &line).unwrap();
        let b = both(&y);
        assert_eq!(b.len(), 2);
        assert_eq!(
            vanishing_ideal(&y, TermOrder::DegRevLex, Method::BuchbergerMoller)
                .unwrap()
                .krull_dimension()
                .unwrap(),
            0
        );
    }

    #[test]
    fn lex_order_matches_oracle() {
        let k5 = gf(5);
        let y = proj(&k5, &[&[1, 2, 0], &[1, 1, 1], &[0, 1, 4], &[1, 3, 3]]);
        let bm = vanishing_ideal(&y, TermOrder::Lex, Method::BuchbergerMoller).unwrap();
        let oracle = vanishing_ideal(&y, TermOrder::Lex, Method::Intersection).unwrap();
        assert_eq!(bm.basis(), oracle.basis());
        let a = aff(&k5, &[&[1, 2, 0], &[1, 1, 1], &[0, 1, 4]]);
        let bm = vanishing_ideal(&a, TermOrder::Lex, Method::BuchbergerMoller).unwrap();
        let oracle = vanishing_ideal(&a, TermOrder::Lex, Method::Intersection).unwrap();
        assert_eq!(bm.basis(), oracle.basis());
    }

    #[test]
    fn verification_examples() {
        let k3 = gf(3);
        let y = proj(&k3, &[&[1, 1], &[1, 2]]);
        let i = vanishing_ideal(&y, TermOrder::DegRevLex, Method::default()).unwrap();
        assert!(verify_vanishing(&i, &y, DEFAULT_ENUM_LIMIT).unwrap());
        let one = proj(&k3, &[&[1, 1]]);
        assert!(!verify_vanishing(&i, &one, DEFAULT_ENUM_LIMIT).unwrap());
        let r = PolyRing::new(k3.clone(), 2, TermOrder::DegRevLex);
        let t1 = Ideal::new(&r, vec![Polynomial::var(&r, 0)]).unwrap();
        assert!(!verify_vanishing(&t1, &one, DEFAULT_ENUM_LIMIT).unwrap());
    }

    #[test]
    fn exhaustive_p1_gf3_and_monotonicity() {
        let k3 = gf(3);
        let all = PointSet::full_space(k3.clone(), 2, Ambient::Projective, 100).unwrap();
        let mut ideals = Vec::new();
        for mask in 1u32..16 {
            let y = all.subset((0..4).filter(|i| mask >> i & 1 == 1));
            both(&y);
            let i = vanishing_ideal(&y, TermOrder::DegRevLex, Method::default()).unwrap();
            assert!(i.is_graded());
            assert!(verify_vanishing(&i, &y, 100).unwrap());
            assert_eq!(i.krull_dimension().unwrap(), 1);
            ideals.push((mask, i));
        }
        for (m1, i1) in &ideals {
            for (m2, i2) in &ideals {
                if m1 & m2 == *m1 {
                    // Y1 ⊆ Y2 ⇒ I(Y2) ⊆ I(Y1)
                    assert!(i1.contains_ideal(i2).unwrap());
                }
            }
        }
    }

    #[test]
    fn evaluation_matrix_entries() {
        let k5 = gf(5);
        let y = proj(&k5, &[&[1, 2], &[1, 3]]);
        let m = EvaluationMatrix::new(&k5, &y, monomials_of_degree(2, 2));
        for (r, x) in y.iter().enumerate() {
            for (c, mono) in m.monomials().iter().enumerate() {
                let f = Polynomial::term(
                    &PolyRing::new(k5.clone(), 2, TermOrder::DegRevLex),
                    mono.clone(),
                    Fp::ONE,
                );
                assert_eq!(m.entry(r, c), f.evaluate(x).unwrap());
            }
        }
        assert_eq!(m.nrows(), 2);
    }
}
