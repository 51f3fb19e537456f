use std::collections::{BTreeMap, BTreeSet};

use super::{divides, FamilyError};
use crate::exactla::{FieldCtx, Subspace};
use crate::hcpair::{EvenAlgebra, HCPair, E, F, H, I};
use crate::homsolve::BracketTensor;
use crate::rep::{self, GroupKind, WeightModule};

/// Blocks M_k + M_k* with [x, f] = f(x) I.
pub fn z_family(blocks: &[(i64, WeightModule)], ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    if blocks.is_empty() {
        return Err(FamilyError::Parameter("no blocks: the pair would be split".into()));
    }
    let mut parts = Vec::new();
    for (k, m) in blocks {
        if m.kind() != GroupKind::GL2 || m.ctx() != ctx {
            return Err(FamilyError::Parameter("blocks must be GL2 modules over the given field".into()));
        }
        if let Some(w) = m.weights().iter().find(|w| w.charge() != *k) {
            return Err(FamilyError::Parameter(format!("block of charge {k} contains the weight {w}")));
        }
        if !divides(ctx, *k) {
            return Err(FamilyError::Characteristic(format!(
                "central blocks need p | k, here p = {} and k = {k}",
                ctx.characteristic()
            )));
        }
        parts.push(m.clone());
        parts.push(rep::dual(m));
    }
    let odd = rep::direct_sum(&parts.iter().collect::<Vec<_>>())?;
    let mut b = BracketTensor::zero_square(ctx, odd.dim(), 4);
    let mut off = 0;
    for (_, m) in blocks {
        let d = m.dim();
        for i in 0..d {
            let mut v = vec![ctx.zero(); 4];
            v[I] = ctx.one();
            b.set_sym(off + i, off + d + i, &v);
        }
        off += 2 * d;
    }
    Ok(HCPair::new(EvenAlgebra::gl2(ctx), odd, b)?)
}

/// Type of [M_k, M_-k] inside gl2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChargeClass {
    Centre,
    Sl2,
    Gl2,
}

/// For each k >= 0 with [M_k, M_-k] != 0, the span of that bracket.
pub fn charge_classes(p: &HCPair) -> Result<BTreeMap<i64, ChargeClass>, FamilyError> {
    let ctx = p.ctx();
    let m = p.odd();
    let comps = rep::central_charge_components(m)?;
    let centre = Subspace::coordinate(ctx, 4, &[I]);
    let sl2 = Subspace::coordinate(ctx, 4, &[E, F, H]);
    let mut out = BTreeMap::new();
    for (&k, space) in &comps {
        if k < 0 {
            continue;
        }
        let Some(dual_space) = comps.get(&-k) else { continue };
        let mut vecs = Vec::new();
        for v in space.basis_vectors() {
            for w in dual_space.basis_vectors() {
                vecs.push(p.bracket().eval(&v, &w));
            }
        }
        let img = Subspace::from_vectors(ctx, p.even().dim(), vecs);
        if img.dim() == 0 {
            continue;
        }
        let class = if centre.contains_subspace(&img) {
            ChargeClass::Centre
        } else if img == sl2 {
            ChargeClass::Sl2
        } else if img.dim() == 4 {
            ChargeClass::Gl2
        } else {
            return Err(FamilyError::Clause(format!("[M_{k}, M_-{k}] is not a GL2-submodule of gl2")));
        };
        out.insert(k, class);
    }
    Ok(out)
}

/// Lie-trivial: E, F, H, I all act by zero on the coordinate block.
fn trivial_lie_action(m: &WeightModule, block: &Subspace, ctx: FieldCtx) -> bool {
    let e = m.e_full(1);
    let f = m.f_full(1);
    block.pivots().iter().all(|&i| {
        let w = m.weight(i);
        (0..m.dim()).all(|r| e[(r, i)].is_zero() && f[(r, i)].is_zero())
            && divides(ctx, w.sl2())
            && divides(ctx, w.charge())
    })
}

/// Direct sum of an optional core pair and central blocks, validated against the grading
/// conditions: at most one pair of charges with sl2 or gl2 image, and when such a pair is mixed
/// with central blocks, p > 0 divides every charge and the central blocks are trivial for gl2.
pub fn assemble_graded(core: Option<&HCPair>, z_blocks: &[(i64, WeightModule)], ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    let z = if z_blocks.is_empty() { None } else { Some(z_family(z_blocks, ctx)?) };
    let pair = match (core, &z) {
        (Some(c), Some(z)) => HCPair::direct_sum(&[c, z])?,
        (Some(c), None) => c.clone(),
        (None, Some(z)) => z.clone(),
        (None, None) => return Err(FamilyError::Parameter("nothing to assemble".into())),
    };
    if pair.even() != &EvenAlgebra::gl2(ctx) {
        return Err(FamilyError::Parameter("assembly needs the even part gl2".into()));
    }
    let classes = charge_classes(&pair)?;
    let of = |c: ChargeClass| classes.iter().filter(|(_, &v)| v == c).map(|(&k, _)| k).collect::<BTreeSet<_>>();
    let (i1, i2, i3) = (of(ChargeClass::Centre), of(ChargeClass::Sl2), of(ChargeClass::Gl2));
    if i2.len() + i3.len() > 1 {
        return Err(FamilyError::Clause(format!(
            "at most one pair of charges +-k may have bracket image sl2 or gl2, found |k| in {:?}",
            i2.union(&i3).collect::<Vec<_>>()
        )));
    }
    if !i1.is_empty() && !(i2.is_empty() && i3.is_empty()) {
        if ctx.is_char_zero() {
            return Err(FamilyError::Clause("mixing central and non-central charges needs p > 0".into()));
        }
        if let Some(k) = classes.keys().find(|&&k| !divides(ctx, k)) {
            return Err(FamilyError::Clause(format!("all charges must lie in pZ, {k} does not")));
        }
        let comps = rep::central_charge_components(pair.odd())?;
        for k in &i1 {
            for c in [*k, -*k] {
                if let Some(s) = comps.get(&c) {
                    if !trivial_lie_action(pair.odd(), s, ctx) {
                        return Err(FamilyError::Clause(format!("the central block of charge {c} is not a trivial gl2-module")));
                    }
                }
            }
        }
    }
    if i2.is_empty() && i3.is_empty() {
        if let Some(k) = i1.iter().find(|&&k| !divides(ctx, k)) {
            return Err(FamilyError::Clause(format!("central brackets need p | k, {k} fails")));
        }
    }
    Ok(pair)
}
