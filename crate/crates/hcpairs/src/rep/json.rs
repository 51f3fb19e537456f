use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{GroupKind, RepError, Weight, WeightModule};
use crate::exactla::{FieldCtx, Matrix, Scalar};

/// A matrix entry as [numerator, denominator].
pub type Fraction = [i64; 2];

/// Serialized form of a weight: an integer or a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightJson {
    Sl2(i64),
    Gl2([i64; 2]),
}

/// JSON layout of a weight module; operators are dense row-major fraction matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightModuleJson {
    pub kind: GroupKind,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub weights: Vec<WeightJson>,
    #[serde(rename = "E")]
    pub e: Vec<Vec<Vec<Fraction>>>,
    #[serde(rename = "F")]
    pub f: Vec<Vec<Vec<Fraction>>>,
}

pub(crate) fn scalar_to_fraction(x: &Scalar) -> Result<Fraction, RepError> {
    let (n, d) = x.to_fraction();
    match (n.to_i64(), d.to_i64()) {
        (Some(n), Some(d)) => Ok([n, d]),
        _ => Err(RepError::Json(format!("entry {x} does not fit in 64 bits"))),
    }
}

pub(crate) fn fraction_to_scalar(ctx: FieldCtx, f: Fraction) -> Result<Scalar, RepError> {
    ctx.frac(f[0], f[1]).map_err(|e| RepError::Json(e.to_string()))
}

fn matrix_to_json(m: &Matrix) -> Result<Vec<Vec<Fraction>>, RepError> {
    (0..m.rows()).map(|r| m.row(r).iter().map(scalar_to_fraction).collect()).collect()
}

fn matrix_from_json(ctx: FieldCtx, n: usize, rows: &[Vec<Fraction>]) -> Result<Matrix, RepError> {
    if rows.len() != n {
        return Err(RepError::Json(format!("matrix with {} rows in a {n}-dimensional module", rows.len())));
    }
    let data = rows
        .iter()
        .map(|r| r.iter().map(|&f| fraction_to_scalar(ctx, f)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(ctx, n, data).map_err(|e| RepError::Json(e.to_string()))
}

impl WeightModule {
    pub fn to_json_value(&self) -> Result<WeightModuleJson, RepError> {
        Ok(WeightModuleJson {
            kind: self.kind,
            characteristic: self.ctx.characteristic(),
            dim: self.dim(),
            labels: self.labels.clone(),
            weights: self
                .weights
                .iter()
                .map(|w| match *w {
                    Weight::Sl2(a) => WeightJson::Sl2(a),
                    Weight::Gl2(a, b) => WeightJson::Gl2([a, b]),
                })
                .collect(),
            e: self.e.iter().map(matrix_to_json).collect::<Result<_, _>>()?,
            f: self.f.iter().map(matrix_to_json).collect::<Result<_, _>>()?,
        })
    }

    pub fn from_json_value(j: &WeightModuleJson) -> Result<Self, RepError> {
        let ctx = FieldCtx::new(j.characteristic)?;
        if j.weights.len() != j.dim {
            return Err(RepError::Json(format!("{} weights for dimension {}", j.weights.len(), j.dim)));
        }
        let weights = j
            .weights
            .iter()
            .map(|w| match (j.kind, w) {
                (GroupKind::SL2, WeightJson::Sl2(a)) => Ok(Weight::Sl2(*a)),
                (GroupKind::GL2, WeightJson::Gl2([a, b])) => Ok(Weight::Gl2(*a, *b)),
                _ => Err(RepError::Json(format!("weight {w:?} does not match kind {}", j.kind))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let labels = if j.labels.is_empty() { (0..j.dim).map(|i| format!("v{i}")).collect() } else { j.labels.clone() };
        let e = j.e.iter().map(|m| matrix_from_json(ctx, j.dim, m)).collect::<Result<_, _>>()?;
        let f = j.f.iter().map(|m| matrix_from_json(ctx, j.dim, m)).collect::<Result<_, _>>()?;
        WeightModule::new(j.kind, ctx, labels, weights, e, f)
    }

    pub fn to_json(&self) -> Result<String, RepError> {
        serde_json::to_string(&self.to_json_value()?).map_err(|e| RepError::Json(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self, RepError> {
        let j: WeightModuleJson = serde_json::from_str(s).map_err(|e| RepError::Json(e.to_string()))?;
        Self::from_json_value(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn round_trip_is_exact() {
        let ctx = FieldCtx::new(5).unwrap();
        for m in [
            sym_power(4, GroupKind::SL2, ctx),
            dual(&simple_module(Weight::Gl2(3, -1), ctx).unwrap()),
            sym_power(2, GroupKind::GL2, FieldCtx::rationals()),
        ] {
            let s = m.to_json().unwrap();
            let back = WeightModule::from_json(&s).unwrap();
            assert_eq!(back, m);
            assert_eq!(back.to_json().unwrap(), s);
        }
    }

    #[test]
    fn rejects_kind_mismatch() {
        let ctx = FieldCtx::rationals();
        let mut j = sym_power(1, GroupKind::SL2, ctx).to_json_value().unwrap();
        j.kind = GroupKind::GL2;
        assert!(WeightModule::from_json_value(&j).is_err());
    }
}
