use serde::{Deserialize, Serialize};

use super::{EvenAlgebra, EvenKind, HCPair, HcError};
use crate::exactla::FieldCtx;
use crate::homsolve::BracketTensor;
use crate::rep::{WeightModule, WeightModuleJson};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenJson {
    pub kind: String,
    #[serde(default)]
    pub extra_torus: usize,
}

/// Bracket coefficient c[i][j][x] = numerator / denominator.
pub type BracketEntry = (usize, usize, usize, i64, i64);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcPairJson {
    pub even: EvenJson,
    pub odd: WeightModuleJson,
    pub bracket: Vec<BracketEntry>,
}

impl HCPair {
    pub fn to_json_value(&self) -> Result<HcPairJson, HcError> {
        let (kind, extra_torus) = match self.even().kind() {
            EvenKind::Sl2 => ("sl2", 0),
            EvenKind::Gl2 => ("gl2", 0),
            EvenKind::Gl2PlusTorus(r) => ("gl2_plus_torus", r),
        };
        let bracket = self
            .bracket()
            .entries()
            .into_iter()
            .map(|(i, j, x, v)| {
                let [n, d] = crate::rep::scalar_to_fraction(&v)?;
                Ok((i, j, x, n, d))
            })
            .collect::<Result<Vec<_>, crate::rep::RepError>>()?;
        Ok(HcPairJson { even: EvenJson { kind: kind.into(), extra_torus }, odd: self.odd().to_json_value()?, bracket })
    }

    pub fn from_json_value(j: &HcPairJson) -> Result<Self, HcError> {
        let odd = WeightModule::from_json_value(&j.odd)?;
        let ctx: FieldCtx = odd.ctx();
        let kind = match (j.even.kind.as_str(), j.even.extra_torus) {
            ("sl2", 0) => EvenKind::Sl2,
            ("gl2", 0) => EvenKind::Gl2,
            ("gl2_plus_torus", r) => EvenKind::Gl2PlusTorus(r),
            (k, r) => return Err(HcError::Json(format!("unknown even part {k} with {r} extra torus directions"))),
        };
        let even = EvenAlgebra::new(kind, ctx);
        let mut b = BracketTensor::zero_square(ctx, odd.dim(), even.dim());
        for &(i, j, x, n, d) in &j.bracket {
            if i >= odd.dim() || j >= odd.dim() || x >= even.dim() {
                return Err(HcError::Json(format!("bracket entry ({i}, {j}, {x}) out of range")));
            }
            b.set(i, j, x, crate::rep::fraction_to_scalar(ctx, [n, d])?);
        }
        HCPair::new(even, odd, b)
    }

    pub fn to_json(&self) -> Result<String, HcError> {
        serde_json::to_string(&self.to_json_value()?).map_err(|e| HcError::Json(e.to_string()))
    }

    pub fn to_json_pretty(&self) -> Result<String, HcError> {
        serde_json::to_string_pretty(&self.to_json_value()?).map_err(|e| HcError::Json(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self, HcError> {
        let j: HcPairJson = serde_json::from_str(s).map_err(|e| HcError::Json(e.to_string()))?;
        Self::from_json_value(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homsolve::circ_circ_map;
    use crate::rep::{dual, sym_power, GroupKind};

    #[test]
    fn round_trip() {
        let ctx = FieldCtx::new(7).unwrap();
        let odd = dual(&sym_power(1, GroupKind::SL2, ctx));
        let p = HCPair::new(EvenAlgebra::sl2(ctx), odd, circ_circ_map(1, &ctx.int(3)).unwrap()).unwrap();
        let s = p.to_json().unwrap();
        let back = HCPair::from_json(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json().unwrap(), s);
    }
}
