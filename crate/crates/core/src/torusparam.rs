//! Finite subgroups of the projective torus as images of `H^n`, for a
//! cyclic subgroup `H` of `GF(p)*`.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{gcd, Fp, PrimeField};
use crate::points::{Ambient, PointSet, ProjectivePoint};

/// `Y = {[(x^{v_1}, ..., x^{v_s})] : x ∈ H^n}` with `H = ⟨beta⟩` of order `d`.
/// Row `j` of `v` holds the exponents of coordinate `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parameterization {
    pub p: u32,
    pub n: usize,
    pub d: u64,
    pub beta: u32,
    pub v: Vec<Vec<u64>>,
}

impl Parameterization {
    pub fn dim(&self) -> usize {
        self.v.len()
    }

    /// Checks the invariants and returns the field.
    pub fn validate(&self) -> Result<Arc<PrimeField>> {
        let field = PrimeField::new(self.p as u64)?;
        if self.d == 0 || field.group_order() % self.d != 0 {
            return Err(Error::InvalidOrder {
                d: self.d,
                group_order: field.group_order(),
            });
        }
        let beta = field.element(self.beta as i64);
        if beta.value() != self.beta || beta.is_zero() || field.order(beta) != self.d {
            return Err(Error::InvalidParameterization(format!(
                "beta = {} does not have order {}",
                self.beta, self.d
            )));
        }
        if self.v.is_empty() {
            return Err(Error::InvalidParameterization("no coordinates".into()));
        }
        for (j, row) in self.v.iter().enumerate() {
            if row.len() != self.n {
                return Err(Error::InvalidParameterization(format!(
                    "row {} has {} exponents, expected {}",
                    j + 1,
                    row.len(),
                    self.n
                )));
            }
            if let Some(e) = row.iter().find(|&&e| e >= self.d) {
                return Err(Error::InvalidParameterization(format!(
                    "exponent {e} not reduced mod {}",
                    self.d
                )));
            }
        }
        Ok(Arc::new(field))
    }
}

fn point_order(field: &PrimeField, coords: &[Fp]) -> u64 {
    coords.iter().fold(1, |acc, &c| {
        let o = field.order(c);
        acc / gcd(acc, o) * o
    })
}

fn mul(field: &PrimeField, a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    a.iter().zip(b).map(|(&x, &y)| field.mul(x, y)).collect()
}

// compares from the last coordinate backwards
fn colex(a: &[Fp], b: &[Fp]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// A generating list of a torus subgroup, built greedily: repeatedly adjoin
/// an element of maximal order outside the current span, ties going to the
/// colexicographically smallest. Each generator comes with its order.
pub fn abelian_generators(points: &PointSet) -> Result<Vec<(ProjectivePoint, u64)>> {
    if !points.is_torus_subgroup()?.is_subgroup() {
        return Err(Error::NotAGroup);
    }
    let field = points.field();
    let mut span = vec![vec![Fp::ONE; points.dim()]];
    let mut gens = Vec::new();
    while span.len() < points.len() {
        let g = points
            .iter()
            .filter(|x| !span.iter().any(|s| s.as_slice() == *x))
            .max_by(|a, b| {
                point_order(field, a)
                    .cmp(&point_order(field, b))
                    .then(colex(b, a))
            })
            .expect("span is a proper subset")
            .to_vec();
        let order = point_order(field, &g);
        let mut grown = Vec::with_capacity(span.len() * order as usize);
        let mut power = vec![Fp::ONE; points.dim()];
        for _ in 0..order {
            grown.extend(span.iter().map(|s| mul(field, s, &power)));
            power = mul(field, &power, &g);
        }
        grown.sort();
        grown.dedup();
        span = grown;
        gens.push((ProjectivePoint::normalize(field, &g)?, order));
    }
    Ok(gens)
}

/// Recovers `(H, beta, v)` from a torus subgroup. With first coordinates
/// equal to 1, every generator already has equal `m_i`-th powers of 1, so no
/// roots need extracting; `H` is generated by all generator coordinates.
pub fn extract_parameterization(points: &PointSet) -> Result<Parameterization> {
    let gens = abelian_generators(points)?;
    let field = points.field();
    let d = gens
        .iter()
        .flat_map(|(g, _)| g.coords().iter())
        .fold(1, |acc, &c| {
            let o = field.order(c);
            acc / gcd(acc, o) * o
        });
    let beta = field.subgroup_generator(d)?;
    let mut v = vec![Vec::with_capacity(gens.len()); points.dim()];
    for (g, _) in &gens {
        for (j, &c) in g.coords().iter().enumerate() {
            v[j].push(field.discrete_log(beta, c)? % d);
        }
    }
    Ok(Parameterization {
        p: field.modulus(),
        n: gens.len(),
        d,
        beta: beta.value(),
        v,
    })
}

/// Enumerates the parameterized set, iterating exponent tuples of `x` in
/// lexicographic order. Fails when `d^n` exceeds `limit`.
pub fn enumerate_parameterized(param: &Parameterization, limit: usize) -> Result<PointSet> {
    let field = param.validate()?;
    let size = (param.d as u128).checked_pow(param.n as u32).unwrap_or(u128::MAX);
    if size > limit as u128 {
        return Err(Error::EnumerationTooLarge { size, limit });
    }
    let beta = field.element(param.beta as i64);
    let mut exps = vec![0u64; param.n];
    let mut points = Vec::with_capacity(size as usize);
    loop {
        let coords: Vec<Fp> = param
            .v
            .iter()
            .map(|row| {
                let e = row
                    .iter()
                    .zip(&exps)
                    .fold(0u64, |acc, (&vk, &xk)| (acc + vk * xk) % param.d);
                field.pow(beta, e)
            })
            .collect();
        points.push(ProjectivePoint::normalize(&field, &coords)?);
        let Some(k) = (0..param.n).rev().find(|&k| exps[k] + 1 < param.d) else {
            break;
        };
        exps[k] += 1;
        exps[k + 1..].iter_mut().for_each(|e| *e = 0);
    }
    PointSet::projective(field.clone(), param.dim(), points)
}

/// Whether the extracted parameterization enumerates back to the set.
pub fn round_trips(points: &PointSet, limit: usize) -> Result<bool> {
    points.require(Ambient::Projective)?;
    let param = extract_parameterization(points)?;
    Ok(&enumerate_parameterized(&param, limit)? == points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::{monoid_closure, DEFAULT_ENUM_LIMIT};

    fn gf(p: u64) -> Arc<PrimeField> {
        Arc::new(PrimeField::new(p).unwrap())
    }

    fn set(field: &Arc<PrimeField>, pts: &[Vec<i64>]) -> PointSet {
        PointSet::from_integers(field.clone(), pts[0].len(), Ambient::Projective, pts).unwrap()
    }

    fn ints(p: &ProjectivePoint) -> Vec<u32> {
        p.coords().iter().map(|c| c.value()).collect()
    }

    #[test]
    fn generator_examples() {
        let k5 = gf(5);
        assert!(abelian_generators(&set(&k5, &[vec![1]])).unwrap().is_empty());
        let g = abelian_generators(&set(&k5, &[vec![1, 1], vec![1, 4]])).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!((ints(&g[0].0), g[0].1), (vec![1, 4], 2));

        let k3 = gf(3);
        let klein = set(&k3, &[vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 1], vec![1, 2, 2]]);
        let g = abelian_generators(&klein).unwrap();
        let shown: Vec<(Vec<u32>, u64)> = g.iter().map(|(p, m)| (ints(p), *m)).collect();
        assert_eq!(shown, [(vec![1, 2, 1], 2), (vec![1, 1, 2], 2)]);

        assert_eq!(
            abelian_generators(&set(&k3, &[vec![1, 2]])).unwrap_err(),
            Error::NotAGroup
        );
    }

    #[test]
    fn extraction_examples() {
        let k5 = gf(5);
        let p = extract_parameterization(&set(&k5, &[vec![1]])).unwrap();
        assert_eq!((p.n, p.d, p.beta, p.v.clone()), (0, 1, 1, vec![vec![]]));
        assert_eq!(enumerate_parameterized(&p, 10).unwrap(), set(&k5, &[vec![1]]));

        let p = extract_parameterization(&set(&k5, &[vec![1, 1], vec![1, 4]])).unwrap();
        assert_eq!(
            p,
            Parameterization {
                p: 5,
                n: 1,
                d: 2,
                beta: 4,
                v: vec![vec![0], vec![1]]
            }
        );

        let k3 = gf(3);
        let klein = set(&k3, &[vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 1], vec![1, 2, 2]]);
        let p = extract_parameterization(&klein).unwrap();
        assert_eq!((p.d, p.beta), (2, 2));
        assert_eq!(p.v, [vec![0, 0], vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn enumeration_examples() {
        let k5 = gf(5);
        let p = Parameterization {
            p: 5,
            n: 1,
            d: 2,
            beta: 4,
            v: vec![vec![0], vec![1]],
        };
        assert_eq!(
            enumerate_parameterized(&p, 10).unwrap(),
            set(&k5, &[vec![1, 1], vec![1, 4]])
        );
        let k7 = gf(7);
        let p = Parameterization {
            p: 7,
            n: 1,
            d: 3,
            beta: 2,
            v: vec![vec![0], vec![1]],
        };
        assert_eq!(
            enumerate_parameterized(&p, 10).unwrap(),
            set(&k7, &[vec![1, 1], vec![1, 2], vec![1, 4]])
        );
        let p = Parameterization {
            p: 7,
            n: 0,
            d: 1,
            beta: 1,
            v: vec![vec![], vec![]],
        };
        assert_eq!(enumerate_parameterized(&p, 10).unwrap(), set(&k7, &[vec![1, 1]]));
        let big = Parameterization {
            p: 7,
            n: 8,
            d: 6,
            beta: 3,
            v: vec![vec![0; 8], vec![1; 8]],
        };
        assert_eq!(
            enumerate_parameterized(&big, 1000).unwrap_err(),
            Error::EnumerationTooLarge {
                size: 1_679_616,
                limit: 1000
            }
        );
    }

    #[test]
    fn invalid_parameterizations() {
        let bad = [
            Parameterization {
                p: 6,
                n: 1,
                d: 2,
                beta: 5,
                v: vec![vec![0]],
            },
            Parameterization {
                p: 7,
                n: 1,
                d: 4,
                beta: 2,
                v: vec![vec![0]],
            },
            Parameterization {
                p: 7,
                n: 1,
                d: 3,
                beta: 6,
                v: vec![vec![0]],
            },
            Parameterization {
                p: 7,
                n: 1,
                d: 3,
                beta: 2,
                v: vec![vec![3]],
            },
            Parameterization {
                p: 7,
                n: 2,
                d: 3,
                beta: 2,
                v: vec![vec![0]],
            },
            Parameterization {
                p: 7,
                n: 1,
                d: 3,
                beta: 9,
                v: vec![vec![0]],
            },
            Parameterization {
                p: 7,
                n: 0,
                d: 1,
                beta: 1,
                v: vec![],
            },
        ];
        for p in bad {
            assert!(p.validate().is_err(), "{p:?}");
        }
    }

    #[test]
    fn round_trip_all_subgroups_small() {
        for (p, s) in [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2)] {
            let k = gf(p);
            let torus: Vec<Vec<Fp>> = PointSet::full_space(k.clone(), s, Ambient::Projective, 1000)
                .unwrap()
                .iter()
                .filter(|x| x.iter().all(|c| !c.is_zero()))
                .map(|x| x.to_vec())
                .collect();
            for a in &torus {
                for b in &torus {
                    let pair = [a, b].map(|x| ProjectivePoint::normalize(&k, x).unwrap());
                    let gens = PointSet::projective(k.clone(), s, pair).unwrap();
                    let y = monoid_closure(&gens, DEFAULT_ENUM_LIMIT).unwrap().points;
                    assert!(y.is_torus_subgroup().unwrap().is_subgroup());
                    let param = extract_parameterization(&y).unwrap();
                    let back = enumerate_parameterized(&param, DEFAULT_ENUM_LIMIT).unwrap();
                    assert_eq!(back, y);
                    assert_eq!((param.d as usize).pow(param.n as u32) % y.len(), 0);
                }
            }
        }
    }
}
