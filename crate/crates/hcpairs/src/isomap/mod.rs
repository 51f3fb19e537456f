//! Morphisms of Harish-Chandra pairs, isomorphism criteria for the GL2 families and their witnesses.

mod witness;

pub use witness::{
    find_witness, find_witness_among, h_iso_decide, lie_iso_to_sl21, pm_iso_decide, q2_iso_decide, standard_candidates, LieIso, PmKind,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::{FieldCtx, Matrix, Scalar};
use crate::families::FamilyError;
use crate::hcpair::{EvenAlgebra, EvenKind, HCPair, HcError, E, F, H, I};
use crate::rep::{Fraction, GroupKind, RepError, Weight, WeightModule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unsupported automorphism: {0}")]
    Unsupported(String),
    #[error("no witness found: {0}")]
    NoWitness(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hc(#[from] HcError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// f = sigma^m tau^k Ad(g) with tau(x) = (x^T)^-1 and sigma(x) = x / det(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenAutomorphism {
    pub conj: Matrix,
    pub tau: bool,
    pub det_twist: bool,
}

enum Monomial {
    Diag(Scalar, Scalar),
    Anti(Scalar, Scalar),
}

impl EvenAutomorphism {
    pub fn identity(ctx: FieldCtx) -> Self {
        EvenAutomorphism { conj: Matrix::identity(ctx, 2), tau: false, det_twist: false }
    }

    pub fn graph(ctx: FieldCtx) -> Self {
        EvenAutomorphism { tau: true, ..Self::identity(ctx) }
    }

    /// Ad(w) with w = [[0, 1], [-1, 0]].
    pub fn weyl(ctx: FieldCtx) -> Self {
        EvenAutomorphism { conj: Matrix::from_ints(ctx, &[&[0, 1], &[-1, 0]]), ..Self::identity(ctx) }
    }

    pub fn with_tau(mut self, tau: bool) -> Self {
        self.tau = tau;
        self
    }

    pub fn with_det_twist(mut self, s: bool) -> Self {
        self.det_twist = s;
        self
    }

    fn monomial(&self) -> Result<Monomial, IsoError> {
        let g = &self.conj;
        if g.rows() != 2 || g.cols() != 2 || !g.is_invertible() {
            return Err(IsoError::Unsupported("the conjugator must be an invertible 2x2 matrix".into()));
        }
        if g[(0, 1)].is_zero() && g[(1, 0)].is_zero() {
            Ok(Monomial::Diag(g[(0, 0)].clone(), g[(1, 1)].clone()))
        } else if g[(0, 0)].is_zero() && g[(1, 1)].is_zero() {
            Ok(Monomial::Anti(g[(0, 1)].clone(), g[(1, 0)].clone()))
        } else {
            Err(IsoError::Unsupported("only diagonal or antidiagonal conjugators are handled".into()))
        }
    }

    fn check_kind(&self, kind: GroupKind) -> Result<(), IsoError> {
        if self.det_twist && kind == GroupKind::SL2 {
            return Err(IsoError::Unsupported("the determinant twist needs GL2".into()));
        }
        Ok(())
    }

    /// f_*(E^(k)) (raising) or f_*(F^(k)) as (raising', c) meaning c E^(k) or c F^(k).
    pub fn push_root(&self, raising: bool, k: usize) -> Result<(bool, Scalar), IsoError> {
        let ctx = self.conj.ctx();
        let ke = k as i64;
        let (mut up, mut c) = match self.monomial()? {
            Monomial::Diag(d1, d2) => {
                let r = &d1 * &d2.inv().expect("invertible");
                (raising, if raising { r.pow(ke) } else { r.inv().expect("invertible").pow(ke) })
            }
            Monomial::Anti(b, c) => {
                let r = &c * &b.inv().expect("invertible");
                (!raising, if raising { r.pow(ke) } else { r.inv().expect("invertible").pow(ke) })
            }
        };
        if self.tau {
            up = !up;
            c = &c * &ctx.int(-1).pow(ke);
        }
        Ok((up, c))
    }

    /// The character chi o f.
    pub fn pull_weight(&self, w: Weight) -> Result<Weight, IsoError> {
        self.check_kind(w.kind())?;
        let mut w = w;
        if self.det_twist {
            if let Weight::Gl2(a, b) = w {
                w = Weight::Gl2(-b, -a);
            }
        }
        if self.tau {
            w = w.neg();
        }
        if let Monomial::Anti(..) = self.monomial()? {
            w = match w {
                Weight::Sl2(n) => Weight::Sl2(-n),
                Weight::Gl2(a, b) => Weight::Gl2(b, a),
            };
        }
        Ok(w)
    }

    /// dₑf on the even basis; columns are images of basis vectors.
    pub fn differential(&self, even: &EvenAlgebra) -> Result<Matrix, IsoError> {
        let ctx = even.ctx();
        self.check_kind(even.group_kind())?;
        self.monomial()?;
        let g = &self.conj;
        let ginv = g.inverse().ok_or_else(|| IsoError::Unsupported("singular conjugator".into()))?;
        let gl = even.dim() > 3;
        let mut d = Matrix::identity(ctx, even.dim());
        let basis: &[usize] = if gl { &[E, F, H, I] } else { &[E, F, H] };
        for &x in basis {
            let mut m = g.dot(&to_matrix(ctx, x)).dot(&ginv);
            if self.tau {
                m = m.transpose().scale(&ctx.int(-1));
            }
            if self.det_twist {
                let tr = &m[(0, 0)] + &m[(1, 1)];
                m = m.sub(&Matrix::identity(ctx, 2).scale(&tr));
            }
            let v = from_matrix(&m);
            if !gl && !v[3].is_zero() {
                return Err(IsoError::Unsupported("image leaves sl2".into()));
            }
            for (r, &y) in basis.iter().enumerate() {
                d[(y, x)] = v[r].clone();
            }
        }
        Ok(d)
    }

    /// The module m with g acting through f(g).
    pub fn twist(&self, m: &WeightModule) -> Result<WeightModule, IsoError> {
        let weights = m.weights().iter().map(|w| self.pull_weight(*w)).collect::<Result<Vec<_>, _>>()?;
        let k = m.max_power();
        let mut e = Vec::new();
        let mut f = Vec::new();
        for j in 1..=k {
            for (raising, out) in [(true, &mut e), (false, &mut f)] {
                let (up, c) = self.push_root(raising, j)?;
                let op = if up { m.e_full(j) } else { m.f_full(j) };
                out.push(op.scale(&c));
            }
        }
        Ok(WeightModule::new(m.kind(), m.ctx(), m.labels().to_vec(), weights, e, f)?)
    }
}

fn to_matrix(ctx: FieldCtx, x: usize) -> Matrix {
    match x {
        E => Matrix::from_ints(ctx, &[&[0, 1], &[0, 0]]),
        F => Matrix::from_ints(ctx, &[&[0, 0], &[1, 0]]),
        H => Matrix::from_ints(ctx, &[&[1, 0], &[0, -1]]),
        _ => Matrix::identity(ctx, 2),
    }
}

/// Coordinates (E, F, H, I) of a 2x2 matrix.
fn from_matrix(m: &Matrix) -> [Scalar; 4] {
    let half = m.ctx().int(2).inv().expect("odd characteristic");
    [
        m[(0, 1)].clone(),
        m[(1, 0)].clone(),
        &(&m[(0, 0)] - &m[(1, 1)]) * &half,
        &(&m[(0, 0)] + &m[(1, 1)]) * &half,
    ]
}

/// (f, u) with u = sqrt(s) u0 when odd_scale_sq = s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCMorphism {
    pub even: EvenAutomorphism,
    pub odd: Matrix,
    pub odd_scale_sq: Option<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub equivariant: bool,
    pub bracket: bool,
}

impl MorphismReport {
    pub fn all(&self) -> bool {
        self.equivariant && self.bracket
    }
}

pub fn morphism_report(src: &HCPair, dst: &HCPair, m: &HCMorphism) -> Result<MorphismReport, IsoError> {
    if src.even().kind() != dst.even().kind() {
        return Err(IsoError::Dimension("even parts differ".into()));
    }
    let (n, n2) = (src.odd().dim(), dst.odd().dim());
    if m.odd.rows() != n2 || m.odd.cols() != n {
        return Err(IsoError::Dimension(format!("odd map is {}x{}, expected {n2}x{n}", m.odd.rows(), m.odd.cols())));
    }
    if m.odd.ctx() != src.ctx() || src.ctx() != dst.ctx() {
        return Err(IsoError::Hc(HcError::CtxMismatch));
    }
    let u = &m.odd;
    let tw = m.even.twist(dst.odd())?;
    let weights_ok = (0..n2).all(|r| (0..n).all(|c| u[(r, c)].is_zero() || tw.weight(r) == src.odd().weight(c)));
    let k = src.odd().max_power().max(tw.max_power());
    let ops_ok = (1..=k).all(|j| {
        u.dot(&src.odd().e_full(j)) == tw.e_full(j).dot(u) && u.dot(&src.odd().f_full(j)) == tw.f_full(j).dot(u)
    });
    let d = m.even.differential(src.even())?;
    let s = m.odd_scale_sq.clone().unwrap_or_else(|| src.ctx().one());
    let cols: Vec<Vec<Scalar>> = (0..n).map(|c| u.col(c)).collect();
    let bracket = (0..n).all(|i| {
        (i..n).all(|j| {
            let lhs: Vec<Scalar> = dst.bracket().eval(&cols[i], &cols[j]).iter().map(|x| &s * x).collect();
            lhs == d.mul_vec(src.bracket().pair(i, j))
        })
    });
    Ok(MorphismReport { equivariant: weights_ok && ops_ok, bracket })
}

/// Both morphism conditions, checked exactly on divided powers and on the bracket.
pub fn verify_hc_morphism(src: &HCPair, dst: &HCPair, m: &HCMorphism) -> Result<bool, IsoError> {
    Ok(morphism_report(src, dst, m)?.all())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcMorphismJson {
    pub conj: Vec<Vec<Fraction>>,
    pub tau: bool,
    pub det_twist: bool,
    pub odd: Vec<Vec<Fraction>>,
    pub odd_scale_sq: Option<Fraction>,
}

fn matrix_json(m: &Matrix) -> Result<Vec<Vec<Fraction>>, RepError> {
    m.row_vecs().iter().map(|r| r.iter().map(crate::rep::scalar_to_fraction).collect()).collect()
}

impl HCMorphism {
    pub fn identity(p: &HCPair) -> Self {
        HCMorphism {
            even: EvenAutomorphism::identity(p.ctx()),
            odd: Matrix::identity(p.ctx(), p.odd().dim()),
            odd_scale_sq: None,
        }
    }

    pub fn to_json_value(&self) -> Result<HcMorphismJson, IsoError> {
        Ok(HcMorphismJson {
            conj: matrix_json(&self.even.conj)?,
            tau: self.even.tau,
            det_twist: self.even.det_twist,
            odd: matrix_json(&self.odd)?,
            odd_scale_sq: self.odd_scale_sq.as_ref().map(crate::rep::scalar_to_fraction).transpose()?,
        })
    }
}

/// Even part kinds that admit the GL2 automorphisms used here.
pub(crate) fn is_gl2(kind: EvenKind) -> bool {
    !matches!(kind, EvenKind::Sl2)
}

#[cfg(test)]
mod tests;
