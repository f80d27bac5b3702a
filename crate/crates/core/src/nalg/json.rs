use serde::{Deserialize, Serialize};

use super::AlgebraSC;
use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldDescriptor, GaloisField, PrimeField, RatFunField};

/// Serialized form of an algebra: a dense `N x N x N` table of canonical
/// element strings plus the unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub field: FieldDescriptor,
    pub sc: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
}

/// An algebra over whichever concrete field its descriptor names.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyAlgebra {
    Prime(AlgebraSC<PrimeField>),
    Extension(AlgebraSC<GaloisField>),
    RationalFunction(AlgebraSC<RatFunField>),
}

impl AlgebraJson {
    pub fn from_algebra<F: Field>(a: &AlgebraSC<F>) -> Self {
        let f = a.field();
        let n = a.dim();
        let sc = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| f.format(a.sc(i, j, k))).collect())
                    .collect()
            })
            .collect();
        AlgebraJson {
            dim: n,
            field: f.descriptor(),
            sc,
            unit: a.unit().iter().map(|c| f.format(c)).collect(),
        }
    }

    /// Sorted-key JSON, stable across runs.
    pub fn to_canonical_string(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_algebra_over<F: Field>(&self, field: &F) -> Result<AlgebraSC<F>> {
        if field.descriptor() != self.field {
            return Err(Error::Validation("field does not match descriptor".into()));
        }
        let n = self.dim;
        if self.sc.len() != n || self.sc.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::Validation(format!("structure constants must be {n}x{n}x{n}")));
        }
        let sc = self
            .sc
            .iter()
            .flatten()
            .flatten()
            .map(|s| field.parse(s))
            .collect::<Result<Vec<_>>>()?;
        let unit = self.unit.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?;
        AlgebraSC::new(field, n, sc, unit)
    }

    pub fn to_any(&self) -> Result<AnyAlgebra> {
        Ok(match &self.field {
            FieldDescriptor::Prime { p } => AnyAlgebra::Prime(self.to_algebra_over(&PrimeField::new(*p)?)?),
            FieldDescriptor::Extension { p, modulus, .. } => {
                AnyAlgebra::Extension(self.to_algebra_over(&GaloisField::with_modulus(*p, modulus)?)?)
            }
            FieldDescriptor::RationalFunction { p, var } => {
                AnyAlgebra::RationalFunction(self.to_algebra_over(&RatFunField::new(*p, var))?)
            }
        })
    }
}

impl AnyAlgebra {
    pub fn to_json(&self) -> AlgebraJson {
        match self {
            AnyAlgebra::Prime(a) => AlgebraJson::from_algebra(a),
            AnyAlgebra::Extension(a) => AlgebraJson::from_algebra(a),
            AnyAlgebra::RationalFunction(a) => AlgebraJson::from_algebra(a),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Prime(a) => a.dim(),
            AnyAlgebra::Extension(a) => a.dim(),
            AnyAlgebra::RationalFunction(a) => a.dim(),
        }
    }
}
