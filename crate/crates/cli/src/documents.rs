//! JSON input documents.

use std::sync::Arc;

use binomideal_core::{
    Ambient, Ideal, Parameterization, PointSet, PolyRing, Polynomial, PrimeField, TermOrder,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

fn yes() -> bool {
    true
}

/// A finite point set. `s` may be omitted when `points` is nonempty.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct PointSetDocument {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default = "yes")]
    pub projective: bool,
    pub points: Vec<Vec<i64>>,
}

impl PointSetDocument {
    fn dim(&self) -> Result<usize, CliError> {
        let s = match (self.s, self.points.first()) {
            (Some(s), _) => s,
            (None, Some(first)) => first.len(),
            (None, None) => return Err(CliError::Semantic("s is required when points is empty".into())),
        };
        if s == 0 {
            return Err(CliError::Semantic("s must be at least 1".into()));
        }
        Ok(s)
    }

    /// Reduces entries mod p and builds the set; `force_affine` overrides the
    /// document's `projective` flag.
    pub fn load(&self, force_affine: bool) -> Result<PointSet, CliError> {
        let field = Arc::new(PrimeField::new(self.p)?);
        let ambient = if self.projective && !force_affine {
            Ambient::Projective
        } else {
            Ambient::Affine
        };
        Ok(PointSet::from_integers(
            field,
            self.dim()?,
            ambient,
            &self.points,
        )?)
    }
}

/// Polynomials whose common zeros are wanted.
#[derive(Clone, Debug, Deserialize)]
pub struct GeneratorDocument {
    pub p: u64,
    pub s: usize,
    #[serde(default = "yes")]
    pub projective: bool,
    pub generators: Vec<String>,
}

impl GeneratorDocument {
    pub fn load(&self, order: TermOrder) -> Result<(Ideal, Ambient), CliError> {
        if self.s == 0 {
            return Err(CliError::Semantic("s must be at least 1".into()));
        }
        let field = Arc::new(PrimeField::new(self.p)?);
        let ring = PolyRing::new(field, self.s, order);
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, text)| parse_polynomial(&ring, text, &format!("generators[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let ambient = if self.projective {
            Ambient::Projective
        } else {
            Ambient::Affine
        };
        Ok((Ideal::new(&ring, gens)?, ambient))
    }
}

pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str, context: &str) -> Result<Polynomial, CliError> {
    Polynomial::parse(ring, text).map_err(|e| match e {
        binomideal_core::Error::Parse { column, message } => CliError::Polynomial {
            context: context.to_string(),
            column,
            message,
        },
        other => other.into(),
    })
}

/// Serialized form of a torus parameterization.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
pub struct ParameterizationDocument {
    pub p: u32,
    pub n: usize,
    pub d: u64,
    pub beta: u32,
    pub v: Vec<Vec<u64>>,
}

impl From<Parameterization> for ParameterizationDocument {
    fn from(p: Parameterization) -> Self {
        ParameterizationDocument {
            p: p.p,
            n: p.n,
            d: p.d,
            beta: p.beta,
            v: p.v,
        }
    }
}

impl From<ParameterizationDocument> for Parameterization {
    fn from(p: ParameterizationDocument) -> Self {
        Parameterization {
            p: p.p,
            n: p.n,
            d: p.d,
            beta: p.beta,
            v: p.v,
        }
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| {
        let position = format!(" at line {} column {}", e.line(), e.column());
        let message = e.to_string();
        CliError::Json {
            line: e.line(),
            column: e.column(),
            message: message.strip_suffix(&position).unwrap_or(&message).to_string(),
        }
    })
}
