//! JSON results. Field order in each struct is the key order on output.

use std::fmt::Write as _;

use binomideal_core::{Certificate, Fp, PointSet, Polynomial, PrimeField, Witness};
use serde::Serialize;

use crate::documents::ParameterizationDocument;

fn residues(v: &[Fp]) -> Vec<u32> {
    v.iter().map(|c| c.value()).collect()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|g| g.to_string()).collect()
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessOut {
    BinomialBasis,
    MissingIdentity,
    NonClosedPair {
        a: Vec<u32>,
        b: Vec<u32>,
        product: Vec<u32>,
    },
    ZeroDivisor {
        variable: usize,
        polynomial: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossChecksOut {
    pub zero_set_matches: bool,
    pub monoid: bool,
    pub pure_binomial_basis: bool,
    pub colon_stable: Option<bool>,
    pub torus_subgroup: Option<bool>,
    pub methods_agree: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateOut {
    pub is_binomial: bool,
    pub is_lattice: Option<bool>,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub witness: WitnessOut,
    pub cross_checks: CrossChecksOut,
}

impl From<&Certificate> for CertificateOut {
    fn from(c: &Certificate) -> Self {
        let witness = match &c.witness {
            Witness::BinomialBasis(_) => WitnessOut::BinomialBasis,
            Witness::MissingIdentity => WitnessOut::MissingIdentity,
            Witness::NonClosedPair { a, b, product } => WitnessOut::NonClosedPair {
                a: residues(a),
                b: residues(b),
                product: residues(product),
            },
            Witness::ZeroDivisor { variable, polynomial } => WitnessOut::ZeroDivisor {
                variable: *variable,
                polynomial: polynomial.to_string(),
            },
        };
        let x = &c.cross_checks;
        CertificateOut {
            is_binomial: c.is_binomial,
            is_lattice: c.is_lattice,
            dimension: c.dimension,
            basis: strings(c.basis()),
            witness,
            cross_checks: CrossChecksOut {
                zero_set_matches: x.zero_set_matches,
                monoid: x.monoid,
                pure_binomial_basis: x.pure_binomial_basis,
                colon_stable: x.colon_stable,
                torus_subgroup: x.torus_subgroup,
                methods_agree: x.methods_agree,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealOut {
    pub order: &'static str,
    pub basis: Vec<String>,
    pub dimension: usize,
}

impl IdealOut {
    pub fn new(order: &'static str, basis: &[Polynomial], dimension: usize) -> Self {
        IdealOut {
            order,
            basis: strings(basis),
            dimension,
        }
    }
}

/// A point set in the same shape as the input documents, so results can be
/// fed back in.
#[derive(Clone, Debug, Serialize)]
pub struct PointsOut {
    pub p: u32,
    pub s: usize,
    pub projective: bool,
    pub points: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contains_zero: Option<bool>,
}

impl PointsOut {
    pub fn new(set: &PointSet, contains_zero: Option<bool>) -> Self {
        PointsOut {
            p: set.field().modulus(),
            s: set.dim(),
            projective: set.is_projective(),
            points: set.iter().map(residues).collect(),
            contains_zero,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermOut {
    pub coefficient: i64,
    pub binomial: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionOut {
    pub terms: Vec<TermOut>,
}

impl DecompositionOut {
    pub fn new(field: &PrimeField, parts: &[(Fp, Polynomial)]) -> Self {
        DecompositionOut {
            terms: parts
                .iter()
                .map(|(c, b)| TermOut {
                    coefficient: field.signed(*c),
                    binomial: b.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Output {
    Certificate(CertificateOut),
    Ideal(IdealOut),
    Points(PointsOut),
    Parameterization(ParameterizationDocument),
    Decomposition(DecompositionOut),
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn point(v: &[u32]) -> String {
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

impl Output {
    /// Plain-text rendering for terminals.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        match self {
            Output::Certificate(c) => {
                let _ = writeln!(out, "binomial: {}", yes_no(c.is_binomial));
                if let Some(l) = c.is_lattice {
                    let _ = writeln!(out, "lattice: {}", yes_no(l));
                }
                let _ = writeln!(out, "dimension: {}", c.dimension);
                let _ = match &c.witness {
                    WitnessOut::BinomialBasis => writeln!(out, "witness: basis of pure binomials"),
                    WitnessOut::MissingIdentity => writeln!(out, "witness: [1] is not in the zero set"),
                    WitnessOut::NonClosedPair { a, b, product } => writeln!(
                        out,
                        "witness: {} * {} = {} is not in the zero set",
                        point(a),
                        point(b),
                        point(product)
                    ),
                    WitnessOut::ZeroDivisor { variable, polynomial } => writeln!(
                        out,
                        "witness: t{variable} * ({polynomial}) lies in I but {polynomial} does not"
                    ),
                };
                let _ = writeln!(out, "basis:");
                for g in &c.basis {
                    let _ = writeln!(out, "  {g}");
                }
            }
            Output::Ideal(i) => {
                let _ = writeln!(out, "order: {}", i.order);
                let _ = writeln!(out, "dimension: {}", i.dimension);
                for g in &i.basis {
                    let _ = writeln!(out, "  {g}");
                }
            }
            Output::Points(p) => {
                let kind = if p.projective { "projective" } else { "affine" };
                let _ = writeln!(out, "{} {kind} points over GF({}):", p.points.len(), p.p);
                for x in &p.points {
                    let _ = writeln!(out, "  {}", point(x));
                }
                if p.contains_zero == Some(true) {
                    let _ = writeln!(out, "  [0]");
                }
            }
            Output::Parameterization(p) => {
                let _ = writeln!(
                    out,
                    "GF({}), H = <{}> of order {}, {} parameters",
                    p.p, p.beta, p.d, p.n
                );
                for (j, row) in p.v.iter().enumerate() {
                    let row: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                    let _ = writeln!(out, "  v{} = ({})", j + 1, row.join(", "));
                }
            }
            Output::Decomposition(d) => {
                for t in &d.terms {
                    let _ = writeln!(out, "  {} * ({})", t.coefficient, t.binomial);
                }
            }
        }
        out
    }
}
