//! Submodules, quotients, socles and Loewy series of weight modules.
//!
//! A submodule is represented by its coordinate subspace in the ambient module.

use std::collections::BTreeMap;

use super::{simple_module, GroupKind, RepError, Weight, WeightModule};
use crate::exactla::{LinearSystem, Matrix, Scalar, Subspace};

/// Basis of Hom(a, b) as matrices of shape dim(b) x dim(a).
pub fn equivariant_maps(a: &WeightModule, b: &WeightModule) -> Result<Vec<Matrix>, RepError> {
    a.same_family(b)?;
    let ctx = a.ctx();
    let b_spaces = b.weight_spaces();
    let mut var = BTreeMap::new();
    for c in 0..a.dim() {
        if let Some(rows) = b_spaces.get(&a.weight(c)) {
            for &r in rows {
                let n = var.len();
                var.insert((r, c), n);
            }
        }
    }
    let nvars = var.len();
    if nvars == 0 {
        return Ok(vec![]);
    }
    let mut sys = LinearSystem::new(ctx, nvars);
    let k_max = a.max_power().max(b.max_power());
    for k in 1..=k_max {
        for raising in [true, false] {
            let sign = if raising { k as i64 } else { -(k as i64) };
            let ak = a.op_full(k, raising);
            let bk = b.op_full(k, raising);
            for c in 0..a.dim() {
                let target = a.weight(c).raise(sign);
                let Some(rows) = b_spaces.get(&target) else { continue };
                for &r in rows {
                    // (M A)_{r c} - (B M)_{r c}
                    let mut terms: Vec<(usize, Scalar)> = Vec::new();
                    for j in 0..a.dim() {
                        let x = &ak[(j, c)];
                        if !x.is_zero() {
                            if let Some(&v) = var.get(&(r, j)) {
                                terms.push((v, x.clone()));
                            }
                        }
                    }
                    for j in 0..b.dim() {
                        let x = &bk[(r, j)];
                        if !x.is_zero() {
                            if let Some(&v) = var.get(&(j, c)) {
                                terms.push((v, -x));
                            }
                        }
                    }
                    if !terms.is_empty() {
                        sys.add_homogeneous(terms);
                    }
                }
            }
        }
    }
    Ok(sys
        .kernel()
        .basis_vectors()
        .into_iter()
        .map(|sol| {
            let mut m = Matrix::zeros(ctx, b.dim(), a.dim());
            for (&(r, c), &v) in &var {
                m[(r, c)] = sol[v].clone();
            }
            m
        })
        .collect())
}

/// True when every basis row of `s` lives in a single weight space.
pub fn is_homogeneous(m: &WeightModule, s: &Subspace) -> bool {
    s.basis_vectors().iter().all(|v| {
        let mut ws = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| m.weight(i));
        match ws.next() {
            Some(w) => ws.all(|u| u == w),
            None => true,
        }
    })
}

pub fn is_submodule(m: &WeightModule, s: &Subspace) -> bool {
    s.ambient_dim() == m.dim()
        && is_homogeneous(m, s)
        && (1..=m.max_power()).all(|k| s.is_invariant(m.e(k).unwrap()) && s.is_invariant(m.f(k).unwrap()))
}

fn check_submodule(m: &WeightModule, s: &Subspace) -> Result<(), RepError> {
    if s.ambient_dim() != m.dim() {
        return Err(RepError::InvalidModule(format!(
            "subspace of a {}-dimensional space in a {}-dimensional module",
            s.ambient_dim(),
            m.dim()
        )));
    }
    if !is_homogeneous(m, s) {
        return Err(RepError::NotHomogeneous);
    }
    if !is_submodule(m, s) {
        return Err(RepError::NotInvariant);
    }
    Ok(())
}

/// The submodule as a module in its reduced basis (weight of a row is the weight of its pivot).
pub fn restrict(m: &WeightModule, s: &Subspace) -> Result<WeightModule, RepError> {
    check_submodule(m, s)?;
    let ctx = m.ctx();
    let d = s.dim();
    let basis = s.basis_vectors();
    let piv = s.pivots().to_vec();
    let weights: Vec<Weight> = piv.iter().map(|&p| m.weight(p)).collect();
    let labels = piv.iter().map(|&p| m.labels()[p].clone()).collect();
    let op = |a: &Matrix| {
        let mut out = Matrix::zeros(ctx, d, d);
        for (i, b) in basis.iter().enumerate() {
            let img = a.mul_vec(b);
            for (j, &p) in piv.iter().enumerate() {
                out[(j, i)] = img[p].clone();
            }
        }
        out
    };
    let e = (1..=m.max_power()).map(|k| op(m.e(k).unwrap())).collect();
    let f = (1..=m.max_power()).map(|k| op(m.f(k).unwrap())).collect();
    WeightModule::new(m.kind(), ctx, labels, weights, e, f)
}

/// M / N with basis the classes of the non-pivot coordinate vectors of N.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: WeightModule,
    /// Matrix of the quotient map, shape dim(M/N) x dim(M).
    pub projection: Matrix,
    /// Ambient coordinate of each quotient basis vector.
    pub lift_cols: Vec<usize>,
}

impl Quotient {
    /// Lifts a subspace of the quotient to the ambient coordinates (without adding the kernel).
    pub fn lift(&self, s: &Subspace) -> Subspace {
        let n = self.projection.cols();
        let vecs = s
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut out = vec![self.module.ctx().zero(); n];
                for (x, &c) in v.into_iter().zip(&self.lift_cols) {
                    out[c] = x;
                }
                out
            })
            .collect();
        Subspace::from_vectors(self.module.ctx(), n, vecs)
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }
}

pub fn quotient(m: &WeightModule, s: &Subspace) -> Result<Quotient, RepError> {
    check_submodule(m, s)?;
    let ctx = m.ctx();
    let cols = s.non_pivots();
    let d = cols.len();
    let mut projection = Matrix::zeros(ctx, d, m.dim());
    for c in 0..m.dim() {
        let mut e = vec![ctx.zero(); m.dim()];
        e[c] = ctx.one();
        let r = s.reduce(&e);
        for (i, &q) in cols.iter().enumerate() {
            projection[(i, c)] = r[q].clone();
        }
    }
    let op = |a: &Matrix| {
        let mut out = Matrix::zeros(ctx, d, d);
        for (i, &q) in cols.iter().enumerate() {
            let img = projection.mul_vec(&a.col(q));
            for (j, x) in img.into_iter().enumerate() {
                out[(j, i)] = x;
            }
        }
        out
    };
    let e = (1..=m.max_power()).map(|k| op(m.e(k).unwrap())).collect();
    let f = (1..=m.max_power()).map(|k| op(m.f(k).unwrap())).collect();
    let module = WeightModule::new(
        m.kind(),
        ctx,
        cols.iter().map(|&c| m.labels()[c].clone()).collect(),
        cols.iter().map(|&c| m.weight(c)).collect(),
        e,
        f,
    )?;
    Ok(Quotient { module, projection, lift_cols: cols })
}

/// Vectors killed by every E^(k).
pub fn primitive_vectors(m: &WeightModule) -> Subspace {
    let ctx = m.ctx();
    let mut stacked = Matrix::zeros(ctx, 0, m.dim());
    for k in 1..=m.max_power() {
        stacked = stacked.vstack(m.e(k).unwrap());
    }
    if stacked.rows() == 0 {
        return Subspace::full(ctx, m.dim());
    }
    stacked.kernel_basis()
}

/// Primitive vectors split by weight.
pub fn primitive_vectors_by_weight(m: &WeightModule) -> BTreeMap<Weight, Subspace> {
    let prim = primitive_vectors(m);
    m.weight_spaces()
        .into_iter()
        .filter_map(|(w, idx)| {
            let s = prim.intersect(&Subspace::coordinate(m.ctx(), m.dim(), &idx)).expect("same ambient");
            (!s.is_zero()).then_some((w, s))
        })
        .collect()
}

/// The weight components of v.
pub fn weight_components(m: &WeightModule, v: &[Scalar]) -> Vec<Vec<Scalar>> {
    m.weight_spaces()
        .into_values()
        .filter_map(|idx| {
            let mut out = vec![m.ctx().zero(); m.dim()];
            for i in idx {
                out[i] = v[i].clone();
            }
            out.iter().any(|x| !x.is_zero()).then_some(out)
        })
        .collect()
}

/// Smallest submodule containing the given vectors.
pub fn generated_submodule(m: &WeightModule, vectors: &[Vec<Scalar>]) -> Subspace {
    let ctx = m.ctx();
    let mut frontier: Vec<Vec<Scalar>> = vectors.iter().flat_map(|v| weight_components(m, v)).collect();
    let mut span = Subspace::zero(ctx, m.dim());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in frontier {
            if span.contains(&v) {
                continue;
            }
            span = span.sum(&Subspace::from_vectors(ctx, m.dim(), vec![v.clone()])).expect("same ambient");
            for k in 1..=m.max_power() {
                next.push(m.e(k).unwrap().mul_vec(&v));
                next.push(m.f(k).unwrap().mul_vec(&v));
            }
        }
        frontier = next.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
    }
    span
}

/// Sum of the images of all maps L(lambda) -> m for the listed weights.
fn isotypic_socle(m: &WeightModule, lambdas: &[Weight]) -> Result<Subspace, RepError> {
    let mut acc = Subspace::zero(m.ctx(), m.dim());
    let prim = primitive_vectors_by_weight(m);
    for &lambda in lambdas {
        if !prim.contains_key(&lambda) {
            continue;
        }
        let l = simple_module(lambda, m.ctx())?;
        for map in equivariant_maps(&l, m)? {
            acc = acc.sum(&Subspace::row_space(&map.transpose()))?;
        }
    }
    Ok(acc)
}

/// The largest semisimple submodule.
pub fn socle(m: &WeightModule) -> Result<Subspace, RepError> {
    isotypic_socle(m, &m.dominant_weights())
}

/// Intersection of the maximal submodules, via the socle of the dual.
pub fn radical(m: &WeightModule) -> Result<Subspace, RepError> {
    Ok(socle(&super::dual(m))?.annihilator())
}

pub fn is_semisimple(m: &WeightModule) -> Result<bool, RepError> {
    Ok(socle(m)?.dim() == m.dim())
}

/// Ascending socle series 0 = N_0 < N_1 < ... < N_l = M; returns N_1, ..., N_l.
pub fn loewy_filtration(m: &WeightModule) -> Result<Vec<Subspace>, RepError> {
    filtration_by(m, socle)
}

fn filtration_by(
    m: &WeightModule,
    step: impl Fn(&WeightModule) -> Result<Subspace, RepError>,
) -> Result<Vec<Subspace>, RepError> {
    let mut out = Vec::new();
    let mut n = Subspace::zero(m.ctx(), m.dim());
    while n.dim() < m.dim() {
        let q = quotient(m, &n)?;
        let s = step(&q.module)?;
        if s.is_zero() {
            break;
        }
        n = n.sum(&q.lift(&s))?;
        out.push(n.clone());
    }
    Ok(out)
}

/// The semisimple subquotients N_i / N_{i-1} of the socle series, bottom first.
pub fn loewy_layers(m: &WeightModule) -> Result<Vec<WeightModule>, RepError> {
    let filt = loewy_filtration(m)?;
    let mut prev = Subspace::zero(m.ctx(), m.dim());
    let mut out = Vec::new();
    for n in filt {
        let sub = restrict(m, &n)?;
        let prev_in_sub = Subspace::from_vectors(
            m.ctx(),
            n.dim(),
            prev.basis_vectors().iter().map(|v| n.pivots().iter().map(|&p| v[p].clone()).collect()).collect(),
        );
        out.push(quotient(&sub, &prev_in_sub)?.module);
        prev = n;
    }
    Ok(out)
}

pub fn loewy_length(m: &WeightModule) -> Result<usize, RepError> {
    Ok(loewy_filtration(m)?.len())
}

/// Descending radical series M > rad M > rad^2 M > ... > 0; returns rad^0 M = M, rad M, ...
/// down to the last nonzero term.
pub fn radical_series(m: &WeightModule) -> Result<Vec<Subspace>, RepError> {
    let mut out = Vec::new();
    let mut cur = Subspace::full(m.ctx(), m.dim());
    while !cur.is_zero() {
        out.push(cur.clone());
        let sub = restrict(m, &cur)?;
        let r = radical(&sub)?;
        let basis = cur.basis_vectors();
        let vecs = r
            .basis_vectors()
            .into_iter()
            .map(|c| {
                let mut v = vec![m.ctx().zero(); m.dim()];
                for (x, b) in c.iter().zip(&basis) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = &*vi + &(x * bi);
                    }
                }
                v
            })
            .collect();
        cur = Subspace::from_vectors(m.ctx(), m.dim(), vecs);
    }
    Ok(out)
}

/// Factors of the radical layers rad^i M / rad^(i+1) M, listed bottom first.
pub fn radical_layer_factors(m: &WeightModule) -> Result<Vec<Vec<Weight>>, RepError> {
    let series = radical_series(m)?;
    let mut out = Vec::new();
    for (i, top) in series.iter().enumerate() {
        let sub = restrict(m, top)?;
        let below = series.get(i + 1).map_or_else(
            || Subspace::zero(m.ctx(), top.dim()),
            |b| {
                Subspace::from_vectors(
                    m.ctx(),
                    top.dim(),
                    b.basis_vectors().iter().map(|v| top.pivots().iter().map(|&p| v[p].clone()).collect()).collect(),
                )
            },
        );
        out.push(semisimple_factors(&quotient(&sub, &below)?.module)?);
    }
    out.reverse();
    Ok(out)
}

/// Highest weights of a semisimple module with multiplicity, sorted.
pub fn semisimple_factors(s: &WeightModule) -> Result<Vec<Weight>, RepError> {
    let mut out = Vec::new();
    for (lambda, _) in primitive_vectors_by_weight(s) {
        if !lambda.is_dominant() {
            continue;
        }
        let l = simple_module(lambda, s.ctx())?;
        let mult = equivariant_maps(&l, s)?.len();
        out.extend(std::iter::repeat_n(lambda, mult));
    }
    Ok(out)
}

/// Composition factors of each Loewy layer, bottom first.
pub fn layer_factors(m: &WeightModule) -> Result<Vec<Vec<Weight>>, RepError> {
    loewy_layers(m)?.iter().map(semisimple_factors).collect()
}

/// Composition factors with multiplicity, sorted.
pub fn composition_factors(m: &WeightModule) -> Result<Vec<Weight>, RepError> {
    let mut all: Vec<Weight> = layer_factors(m)?.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

pub fn is_simple(m: &WeightModule) -> Result<bool, RepError> {
    Ok(m.dim() > 0 && composition_factors(m)?.len() == 1)
}

/// Formal character: weight multiplicities.
pub fn character(m: &WeightModule) -> BTreeMap<Weight, usize> {
    m.weight_spaces().into_iter().map(|(w, v)| (w, v.len())).collect()
}

/// Linkage of SL2 highest weights in characteristic p (equality in characteristic 0).
pub fn linked(a: i64, b: i64, p: u64) -> bool {
    if p == 0 {
        return a == b;
    }
    let q = 2 * p as i64;
    (a - b).rem_euclid(q) == 0 || (a + b + 2).rem_euclid(q) == 0
}

/// One linkage block: the factors it carries and the corresponding summand.
#[derive(Clone, Debug)]
pub struct LinkageComponent {
    pub factors: Vec<Weight>,
    pub space: Subspace,
}

/// Decomposition of an SL2-module into linkage blocks.
pub fn linkage_components(m: &WeightModule) -> Result<Vec<LinkageComponent>, RepError> {
    if m.kind() != GroupKind::SL2 {
        return Err(RepError::KindMismatch { expected: GroupKind::SL2, found: m.kind() });
    }
    let p = m.ctx().characteristic();
    let factors = composition_factors(m)?;
    let mut classes: Vec<Vec<Weight>> = Vec::new();
    for w in factors {
        match classes.iter_mut().find(|c| linked(c[0].sl2(), w.sl2(), p)) {
            Some(c) => c.push(w),
            None => classes.push(vec![w]),
        }
    }
    let mut out = Vec::new();
    let mut total = Subspace::zero(m.ctx(), m.dim());
    for class in classes {
        let first = class[0].sl2();
        let space = filtration_by(m, |q| {
            let lambdas: Vec<Weight> =
                q.dominant_weights().into_iter().filter(|w| linked(first, w.sl2(), p)).collect();
            isotypic_socle(q, &lambdas)
        })?
        .pop()
        .unwrap_or_else(|| Subspace::zero(m.ctx(), m.dim()));
        total = total.sum(&space)?;
        out.push(LinkageComponent { factors: class, space });
    }
    let dims: usize = out.iter().map(|c| c.space.dim()).sum();
    if dims != m.dim() || total.dim() != m.dim() {
        return Err(RepError::InvalidModule("linkage blocks do not span the module".into()));
    }
    Ok(out)
}

/// Splitting of a GL2-module by the eigenvalue l1 + l2 of the centre.
pub fn central_charge_components(m: &WeightModule) -> Result<BTreeMap<i64, Subspace>, RepError> {
    if m.kind() != GroupKind::GL2 {
        return Err(RepError::KindMismatch { expected: GroupKind::GL2, found: m.kind() });
    }
    let mut by: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, w) in m.weights().iter().enumerate() {
        by.entry(w.charge()).or_default().push(i);
    }
    Ok(by.into_iter().map(|(c, idx)| (c, Subspace::coordinate(m.ctx(), m.dim(), &idx))).collect())
}

/// M^(+s) modulo {(n_1..n_s) : n_i in N, sum n_i = 0}: s copies of M glued along N.
pub fn amalgamated_sum(m: &WeightModule, n: &Subspace, s: usize) -> Result<WeightModule, RepError> {
    check_submodule(m, n)?;
    if s == 0 {
        return Err(RepError::InvalidModule("amalgamated sum needs at least one copy".into()));
    }
    let copies: Vec<&WeightModule> = std::iter::repeat_n(m, s).collect();
    let big = super::direct_sum(&copies)?;
    let d = m.dim();
    let mut rel = Vec::new();
    for v in n.basis_vectors() {
        for i in 1..s {
            let mut x = vec![m.ctx().zero(); d * s];
            for (j, c) in v.iter().enumerate() {
                x[j] = c.clone();
                x[i * d + j] = -c;
            }
            rel.push(x);
        }
    }
    let relations = Subspace::from_vectors(m.ctx(), d * s, rel);
    let q = quotient(&big, &relations)?;
    let labels = q.lift_cols.iter().map(|&c| format!("{}#{}", m.labels()[c % d], c / d)).collect();
    Ok(q.module.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::exactla::FieldCtx;

    fn fp(p: u64) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    fn sl(ws: &[i64]) -> Vec<Weight> {
        ws.iter().map(|&w| Weight::Sl2(w)).collect()
    }

    #[test]
    fn hom_between_simples() {
        let ctx = fp(5);
        let l2 = simple_sl2(2, ctx);
        assert_eq!(equivariant_maps(&l2, &l2).unwrap().len(), 1);
        assert_eq!(equivariant_maps(&l2, &simple_sl2(4, ctx)).unwrap().len(), 0);
    }

    #[test]
    fn sym3_char3_structure() {
        let s3 = sym_power(3, GroupKind::SL2, fp(3));
        let soc = socle(&s3).unwrap();
        assert_eq!(soc.dim(), 2);
        assert_eq!(loewy_length(&s3).unwrap(), 2);
        assert_eq!(layer_factors(&s3).unwrap(), vec![sl(&[3]), sl(&[1])]);
        assert_eq!(composition_factors(&s3).unwrap(), sl(&[1, 3]));
        assert_eq!(radical(&s3).unwrap().dim(), 2);
    }

    #[test]
    fn semisimple_in_char_zero() {
        let q = FieldCtx::rationals();
        let s3 = sym_power(3, GroupKind::SL2, q);
        assert_eq!(loewy_length(&s3).unwrap(), 1);
        let v = sym_power(1, GroupKind::SL2, q);
        let vv = tensor(&v, &v).unwrap();
        assert_eq!(composition_factors(&vv).unwrap(), sl(&[0, 2]));
        assert!(is_semisimple(&vv).unwrap());
    }

    #[test]
    fn socle_of_simple_is_everything() {
        let l = simple_sl2(4, fp(3));
        assert_eq!(socle(&l).unwrap().dim(), l.dim());
        assert!(is_simple(&l).unwrap());
    }

    #[test]
    fn quotient_and_restrict_are_modules() {
        let s3 = sym_power(3, GroupKind::SL2, fp(3));
        let soc = socle(&s3).unwrap();
        let sub = restrict(&s3, &soc).unwrap();
        sub.check_invariants().unwrap();
        let q = quotient(&s3, &soc).unwrap();
        q.module.check_invariants().unwrap();
        assert_eq!(q.module.dim(), 2);
        let bad = Subspace::coordinate(fp(3), 4, &[1]);
        assert!(restrict(&s3, &bad).is_err());
    }

    #[test]
    fn primitive_vectors_of_sym() {
        let s = sym_power(4, GroupKind::SL2, FieldCtx::rationals());
        let p = primitive_vectors_by_weight(&s);
        assert_eq!(p.keys().copied().collect::<Vec<_>>(), sl(&[4]));
        let s3 = sym_power(3, GroupKind::SL2, fp(3));
        let p3 = primitive_vectors_by_weight(&s3);
        assert_eq!(p3.keys().copied().collect::<Vec<_>>(), sl(&[3]));
    }

    #[test]
    fn generated_by_lowest_vector() {
        let s3 = sym_power(3, GroupKind::SL2, fp(3));
        let ctx = fp(3);
        let mut v = vec![ctx.zero(); 4];
        v[1] = ctx.one();
        assert_eq!(generated_submodule(&s3, &[v]).dim(), 4);
        let mut w = vec![ctx.zero(); 4];
        w[3] = ctx.one();
        assert_eq!(generated_submodule(&s3, &[w]).dim(), 2);
    }

    #[test]
    fn linkage_blocks_char_three() {
        let ctx = fp(3);
        let m = direct_sum(&[&simple_sl2(0, ctx), &simple_sl2(1, ctx)]).unwrap();
        let comps = linkage_components(&m).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(linked(0, 4, 3));
        assert!(linked(1, 3, 3));
        assert!(!linked(0, 1, 3));
        let s3 = sym_power(3, GroupKind::SL2, ctx);
        assert_eq!(linkage_components(&s3).unwrap().len(), 1);
        let g = sym_power(1, GroupKind::GL2, ctx);
        assert!(linkage_components(&g).is_err());
    }

    #[test]
    fn central_charges() {
        let ctx = FieldCtx::rationals();
        let m = direct_sum(&[&det_line(1, ctx), &sym_power(1, GroupKind::GL2, ctx)]).unwrap();
        let cc = central_charge_components(&m).unwrap();
        assert_eq!(cc.keys().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(cc[&1].dim(), 2);
    }

    #[test]
    fn amalgamation_dimensions() {
        let s3 = sym_power(3, GroupKind::SL2, fp(3));
        let soc = socle(&s3).unwrap();
        let a = amalgamated_sum(&s3, &soc, 3).unwrap();
        assert_eq!(a.dim(), 3 * 4 - 2 * 2);
        a.check_invariants().unwrap();
        assert_eq!(socle(&a).unwrap().dim(), 6);
        assert_eq!(amalgamated_sum(&s3, &soc, 1).unwrap().dim(), 4);
    }

    #[test]
    fn amalgamated_v3_along_l1() {
        let ctx = fp(3);
        let v3 = dual(&sym_power(3, GroupKind::SL2, ctx));
        let soc = socle(&v3).unwrap();
        assert_eq!(soc.dim(), 2);
        assert_eq!(layer_factors(&v3).unwrap(), vec![sl(&[1]), sl(&[3])]);
        let a = amalgamated_sum(&v3, &soc, 2).unwrap();
        assert_eq!(a.dim(), 6);
        // w3^(1) - w3^(2) and w-3^(1) - w-3^(2) span an extra copy of L(3) in the socle
        assert_eq!(socle(&a).unwrap().dim(), 4);
        let q = quotient(&a, &restricted_copy_of_socle(&a)).unwrap();
        assert_eq!(composition_factors(&q.module).unwrap(), sl(&[3, 3]));
        assert_eq!(radical_layer_factors(&a).unwrap(), vec![sl(&[1]), sl(&[3, 3])]);
        assert_eq!(layer_factors(&a).unwrap(), vec![sl(&[1, 3]), sl(&[3])]);
    }

    fn restricted_copy_of_socle(a: &WeightModule) -> Subspace {
        let prim = primitive_vectors_by_weight(a);
        generated_submodule(a, &prim[&Weight::Sl2(1)].basis_vectors())
    }
}

