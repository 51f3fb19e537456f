//! Equivariant linear and bilinear maps as exact linear systems, closed-form bracket formulas,
//! and the search for all admissible brackets on a module.

mod problem;
mod search;
mod tensor;

pub use problem::Symmetry;
pub use search::{bracket_search, BracketConstraint, BracketSpace};
pub use tensor::BracketTensor;

use thiserror::Error;

use crate::exactla::{FieldCtx, Matrix, Scalar};
use crate::hcpair::{EvenAlgebra, EvenKind};
use crate::rep::{self, GroupKind, RepError, Weight, WeightModule};
use problem::BilinearProblem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// A basis of Hom(source, target).
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source_dim: usize,
    pub target_dim: usize,
    pub maps: Vec<Matrix>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

pub fn hom_space(a: &WeightModule, b: &WeightModule) -> Result<HomBasis, HomError> {
    Ok(HomBasis { source_dim: a.dim(), target_dim: b.dim(), maps: rep::equivariant_maps(a, b)? })
}

/// Even targets for bilinear maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvenTarget {
    Z,
    Sl2,
    Gl2,
}

/// The target as a module of the given group kind; basis orders are (z), (E, F, H), (E, F, H, I).
pub fn target_module(target: EvenTarget, kind: GroupKind, ctx: FieldCtx) -> WeightModule {
    let gl2 = EvenAlgebra::new(EvenKind::Gl2, ctx).adjoint().clone();
    let m = match target {
        EvenTarget::Z => gl2.coordinate_submodule(&[3]),
        EvenTarget::Sl2 => gl2.coordinate_submodule(&[0, 1, 2]),
        EvenTarget::Gl2 => gl2,
    };
    match kind {
        GroupKind::GL2 => m,
        GroupKind::SL2 => m.restrict_to_sl2(),
    }
}

/// Basis of equivariant bilinear maps a x b -> target.
pub fn bilinear_maps(
    a: &WeightModule,
    b: &WeightModule,
    target: &WeightModule,
    symmetry: Symmetry,
) -> Result<Vec<BracketTensor>, HomError> {
    let problem = BilinearProblem::new(a, b, target, symmetry)?;
    let mut sys = problem.system();
    problem.add_equivariance(&mut sys);
    Ok(problem.kernel_tensors(&sys))
}

/// Equivariant bilinear maps a x b into z, sl2 or gl2.
pub fn hom_pair_to_even(a: &WeightModule, b: &WeightModule, target: EvenTarget) -> Result<Vec<BracketTensor>, HomError> {
    bilinear_maps(a, b, &target_module(target, a.kind(), a.ctx()), Symmetry::None)
}

/// Symmetric or alternating equivariant maps a x a -> target.
pub fn hom_square_to_even(a: &WeightModule, target: EvenTarget, symmetry: Symmetry) -> Result<Vec<BracketTensor>, HomError> {
    bilinear_maps(a, a, &target_module(target, a.kind(), a.ctx()), symmetry)
}

fn sign(i: i64) -> i64 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The pairing V(m) x V(n) -> sl2 for n = m + 2 in the dual bases s*_i, t*_j (targets E, F, H):
/// [s*_i, t*_(k-i)] = a_i H, [s*_i, t*_(k-1-i)] = b_i E, [s*_i, t*_(k+1-i)] = c_i F with k = m + 1.
pub fn star_star_map(m: usize, n: usize, a: &Scalar) -> Result<BracketTensor, HomError> {
    if n != m + 2 {
        return Err(HomError::Precondition(format!("needs n - m = 2, got m = {m}, n = {n}")));
    }
    let ctx = a.ctx();
    let k = (m + n) as i64 / 2;
    let mut t = BracketTensor::zero(ctx, m + 1, n + 1, 3);
    for i in 0..k {
        let w = &ctx.binom(k - 1, i) * a;
        let iu = i as usize;
        let ku = k as usize;
        t.set(iu, ku - iu, 2, &ctx.int(sign(i + 1)) * &w);
        t.set(iu, ku - 1 - iu, 0, &ctx.int(sign(i + 1)) * &w);
        t.set(iu, ku + 1 - iu, 1, &ctx.int(sign(i)) * &w);
    }
    Ok(t)
}

fn circ_circ_into(t: &mut BracketTensor, n: usize, a: &Scalar, idx_e: usize, idx_f: usize, idx_h: usize) {
    let ctx = a.ctx();
    let ni = n as i64;
    let half = ctx.int(2).inv().expect("odd characteristic");
    for i in 0..=ni {
        let c = &ctx.binom(ni - 1, i) - &ctx.binom(ni - 1, i - 1);
        let v = &(&(&ctx.int(sign(i)) * &half) * &c) * a;
        t.set(i as usize, (ni - i) as usize, idx_h, v);
    }
    for j in 0..ni {
        let v = &(&ctx.int(sign(j)) * &ctx.binom(ni - 1, j)) * a;
        t.set(j as usize, (ni - 1 - j) as usize, idx_e, v);
    }
    for k in 1..=ni {
        let v = &(&ctx.int(sign(k)) * &ctx.binom(ni - 1, k - 1)) * a;
        t.set(k as usize, (ni + 1 - k) as usize, idx_f, v);
    }
}

/// The pairing V(n) x V(n) -> sl2 in the dual basis (targets E, F, H): [s*_i, s*_(n-i)] = a_i H,
/// [s*_j, s*_(n-1-j)] = b_j E, [s*_k, s*_(n+1-k)] = c_k F.
pub fn circ_circ_map(n: usize, a: &Scalar) -> Result<BracketTensor, HomError> {
    if n == 0 {
        return Err(HomError::Precondition("needs n >= 1".into()));
    }
    let mut t = BracketTensor::zero(a.ctx(), n + 1, n + 1, 3);
    circ_circ_into(&mut t, n, a, 0, 1, 2);
    Ok(t)
}

/// Two-parameter pairing V(lambda) x V(lambda*) -> gl2 (targets E, F, H, I): a central part
/// [s*_i, t*_(n-i)] = (-1)^i C(n, i) d I2 plus the sl2 part of circ_circ_map.
pub fn gl2_pairing_map(lambda: Weight, d: &Scalar, a: &Scalar) -> Result<BracketTensor, HomError> {
    let Weight::Gl2(l1, l2) = lambda else {
        return Err(HomError::Precondition("needs a GL2 weight".into()));
    };
    if l1 < l2 {
        return Err(HomError::Rep(RepError::NotDominant(lambda)));
    }
    let n = (l1 - l2) as usize;
    if n == 0 && !a.is_zero() {
        return Err(HomError::Precondition("n = 0 admits no sl2 part".into()));
    }
    let ctx = d.ctx();
    let mut t = BracketTensor::zero(ctx, n + 1, n + 1, 4);
    if n > 0 {
        circ_circ_into(&mut t, n, a, 0, 1, 2);
    }
    for i in 0..=n as i64 {
        let v = &(&ctx.int(sign(i)) * &ctx.binom(n as i64, i)) * d;
        t.set(i as usize, n - i as usize, 3, v);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{dual, simple_sl2, sym_power, weyl_module};

    fn q() -> FieldCtx {
        FieldCtx::rationals()
    }

    fn v(n: usize, ctx: FieldCtx) -> WeightModule {
        dual(&sym_power(n, GroupKind::SL2, ctx))
    }

    #[test]
    fn hom_space_examples() {
        let ctx = q();
        assert_eq!(hom_space(&simple_sl2(2, ctx), &simple_sl2(2, ctx)).unwrap().dim(), 1);
        assert_eq!(hom_space(&simple_sl2(1, ctx), &simple_sl2(3, ctx)).unwrap().dim(), 0);
        let f3 = FieldCtx::new(3).unwrap();
        assert_eq!(hom_space(&simple_sl2(1, f3), &v(3, f3)).unwrap().dim(), 1);
    }

    #[test]
    fn pair_to_even_examples() {
        let ctx = q();
        assert_eq!(hom_pair_to_even(&v(1, ctx), &v(3, ctx), EvenTarget::Sl2).unwrap().len(), 1);
        assert_eq!(hom_pair_to_even(&v(5, ctx), &v(5, ctx), EvenTarget::Sl2).unwrap().len(), 1);
        let lam = Weight::Gl2(2, -1);
        let a = weyl_module(lam, ctx).unwrap();
        let b = weyl_module(lam.dual_dominant(), ctx).unwrap();
        assert_eq!(hom_pair_to_even(&a, &b, EvenTarget::Gl2).unwrap().len(), 2);
    }

    fn in_span(t: &BracketTensor, basis: &[BracketTensor]) -> bool {
        let s = crate::exactla::Subspace::from_vectors(
            t.ctx(),
            t.flat().len(),
            basis.iter().map(|b| b.flat().to_vec()).collect(),
        );
        s.contains(t.flat())
    }

    #[test]
    fn star_star_examples() {
        let ctx = q();
        let a = ctx.int(1);
        let t = star_star_map(1, 3, &a).unwrap();
        assert_eq!(t.pair(0, 2), &[ctx.zero(), ctx.zero(), ctx.int(-1)]);
        assert_eq!(t.pair(1, 1), &[ctx.zero(), ctx.zero(), ctx.int(1)]);
        let t0 = star_star_map(0, 2, &a).unwrap();
        assert_eq!(t0.pair(0, 1), &[ctx.zero(), ctx.zero(), ctx.int(-1)]);
        assert_eq!(t0.pair(0, 0), &[ctx.int(-1), ctx.zero(), ctx.zero()]);
        assert_eq!(t0.pair(0, 2), &[ctx.zero(), ctx.int(1), ctx.zero()]);
        assert!(star_star_map(0, 2, &ctx.zero()).unwrap().is_zero());
        assert!(star_star_map(1, 2, &a).is_err());
        let basis = hom_pair_to_even(&v(1, ctx), &v(3, ctx), EvenTarget::Sl2).unwrap();
        assert!(in_span(&t, &basis));
    }

    #[test]
    fn circ_circ_examples() {
        let ctx = q();
        let a = ctx.int(1);
        let t = circ_circ_map(1, &a).unwrap();
        assert_eq!(t.pair(0, 1), &[ctx.zero(), ctx.zero(), ctx.frac(1, 2).unwrap()]);
        assert_eq!(t.pair(0, 0), &[ctx.int(1), ctx.zero(), ctx.zero()]);
        assert_eq!(t.pair(1, 1), &[ctx.zero(), ctx.int(-1), ctx.zero()]);
        assert!(t.is_symmetric());
        assert!(circ_circ_map(2, &a).unwrap().is_alternating());
        let basis = hom_pair_to_even(&v(4, ctx), &v(4, ctx), EvenTarget::Sl2).unwrap();
        assert!(in_span(&circ_circ_map(4, &a).unwrap(), &basis));
    }

    #[test]
    fn gl2_pairing_examples() {
        let ctx = q();
        let (d, a) = (ctx.int(3), ctx.int(2));
        let t = gl2_pairing_map(Weight::Gl2(1, 0), &d, &a).unwrap();
        assert_eq!(t.pair(0, 1), &[ctx.zero(), ctx.zero(), ctx.int(1), ctx.int(3)]);
        let t2 = gl2_pairing_map(Weight::Gl2(2, 0), &d, &ctx.zero()).unwrap();
        assert_eq!(t2.get(1, 1, 3), &ctx.int(-6));
        let lam = Weight::Gl2(3, 1);
        let basis = hom_pair_to_even(
            &weyl_module(lam, ctx).unwrap(),
            &weyl_module(lam.dual_dominant(), ctx).unwrap(),
            EvenTarget::Gl2,
        )
        .unwrap();
        assert!(in_span(&gl2_pairing_map(lam, &d, &a).unwrap(), &basis));
        assert!(gl2_pairing_map(Weight::Gl2(1, 1), &d, &a).is_err());
    }

    fn search_dim(m: &WeightModule) -> usize {
        let even = EvenAlgebra::sl2(m.ctx());
        bracket_search(&even, m, &[]).unwrap().dim().unwrap()
    }

    #[test]
    fn bracket_search_dimensions() {
        let ctx = q();
        assert_eq!(search_dim(&simple_sl2(1, ctx)), 1);
        let f3 = FieldCtx::new(3).unwrap();
        assert_eq!(search_dim(&v(3, f3)), 1);
        let f5 = FieldCtx::new(5).unwrap();
        assert_eq!(search_dim(&simple_sl2(3, f5)), 0);
        let sum = rep::direct_sum(&[&simple_sl2(0, ctx), &simple_sl2(2, ctx)]).unwrap();
        assert_eq!(search_dim(&sum), 1);
    }

    #[test]
    fn fixed_constraint_pins_scalar() {
        let ctx = q();
        let m = v(1, ctx);
        let even = EvenAlgebra::sl2(ctx);
        let target = circ_circ_map(1, &ctx.int(5)).unwrap();
        let fixed = BracketConstraint::Fixed { pairs: vec![(0, 1)], values: target.clone() };
        let space = bracket_search(&even, &m, &[fixed]).unwrap();
        assert_eq!(space.dim(), Some(0));
        assert_eq!(space.particular.unwrap(), target);
        let mut wrong = BracketTensor::zero_square(ctx, 2, 3);
        wrong.set_sym(0, 1, &[ctx.zero(), ctx.zero(), ctx.one()]);
        wrong.set(0, 0, 0, ctx.one());
        let fixed = BracketConstraint::Fixed { pairs: vec![(0, 0), (0, 1)], values: wrong };
        assert!(bracket_search(&even, &m, &[fixed]).unwrap().is_empty());
    }
}
