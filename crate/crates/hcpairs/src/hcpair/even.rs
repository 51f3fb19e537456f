use std::fmt;

use serde::{Deserialize, Serialize};

use super::HcError;
use crate::exactla::{FieldCtx, Matrix, Scalar, Subspace};
use crate::rep::{GroupKind, Weight, WeightModule};

/// Index of E in every even basis.
pub const E: usize = 0;
/// Index of F.
pub const F: usize = 1;
/// Index of H.
pub const H: usize = 2;
/// Index of I2 (gl2 and gl2 plus torus only).
pub const I: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "extra_torus")]
pub enum EvenKind {
    Sl2,
    Gl2,
    Gl2PlusTorus(usize),
}

impl fmt::Display for EvenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvenKind::Sl2 => f.write_str("sl2"),
            EvenKind::Gl2 => f.write_str("gl2"),
            EvenKind::Gl2PlusTorus(r) => write!(f, "gl2+t{r}"),
        }
    }
}

/// Lie algebra of SL2, GL2 or GL2 x T' with basis (E, F, H [, I2] [, T_1..T_r]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenAlgebra {
    kind: EvenKind,
    ctx: FieldCtx,
    names: Vec<String>,
    /// consts[a][b] = coordinates of [e_a, e_b].
    consts: Vec<Vec<Vec<Scalar>>>,
    central: Subspace,
    adjoint: WeightModule,
}

impl EvenAlgebra {
    pub fn new(kind: EvenKind, ctx: FieldCtx) -> Self {
        let extra = match kind {
            EvenKind::Sl2 => 0,
            EvenKind::Gl2 => 1,
            EvenKind::Gl2PlusTorus(r) => 1 + r,
        };
        let dim = 3 + extra;
        let mut names: Vec<String> = ["E", "F", "H"].iter().map(|s| s.to_string()).collect();
        if extra > 0 {
            names.push("I".into());
        }
        for t in 1..extra {
            names.push(format!("T{t}"));
        }
        let mut consts = vec![vec![vec![ctx.zero(); dim]; dim]; dim];
        let mut set = |a: usize, b: usize, x: usize, v: i64| {
            consts[a][b][x] = ctx.int(v);
            consts[b][a][x] = ctx.int(-v);
        };
        set(E, F, H, 1);
        set(H, E, E, 2);
        set(H, F, F, -2);
        let group = if kind == EvenKind::Sl2 { GroupKind::SL2 } else { GroupKind::GL2 };
        let wt = |a: i64| match group {
            GroupKind::SL2 => Weight::Sl2(2 * a),
            GroupKind::GL2 => Weight::Gl2(a, -a),
        };
        let mut weights = vec![wt(1), wt(-1), wt(0)];
        weights.extend(std::iter::repeat_n(wt(0), extra));
        let op = |entries: &[(usize, usize, i64)]| {
            let mut m = Matrix::zeros(ctx, dim, dim);
            for &(r, c, v) in entries {
                m[(r, c)] = ctx.int(v);
            }
            m
        };
        let e = vec![op(&[(H, F, 1), (E, H, -2)]), op(&[(E, F, -1)])];
        let f = vec![op(&[(H, E, -1), (F, H, 2)]), op(&[(F, E, -1)])];
        let adjoint = WeightModule::new(group, ctx, names.clone(), weights, e, f).expect("adjoint module");
        let central = Subspace::coordinate(ctx, dim, &(3..dim).collect::<Vec<_>>());
        EvenAlgebra { kind, ctx, names, consts, central, adjoint }
    }

    pub fn sl2(ctx: FieldCtx) -> Self {
        Self::new(EvenKind::Sl2, ctx)
    }

    pub fn gl2(ctx: FieldCtx) -> Self {
        Self::new(EvenKind::Gl2, ctx)
    }

    pub fn kind(&self) -> EvenKind {
        self.kind
    }

    pub fn group_kind(&self) -> GroupKind {
        self.adjoint.kind()
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Coordinates of [e_a, e_b].
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[Scalar] {
        &self.consts[a][b]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.ctx.zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xa * yb;
                for (o, c) in out.iter_mut().zip(&self.consts[a][b]) {
                    if !c.is_zero() {
                        *o = &*o + &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad(e_a) acting on the even basis.
    pub fn ad(&self, a: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.ctx, n, n);
        for b in 0..n {
            for x in 0..n {
                m[(x, b)] = self.consts[a][b][x].clone();
            }
        }
        m
    }

    /// The adjoint module with its divided powers.
    pub fn adjoint(&self) -> &WeightModule {
        &self.adjoint
    }

    /// The designated centre: span of I2 and the extra torus.
    pub fn central(&self) -> &Subspace {
        &self.central
    }

    /// Span of E, F, H.
    pub fn sl2_part(&self) -> Subspace {
        Subspace::coordinate(self.ctx, self.dim(), &[E, F, H])
    }

    /// Everything that commutes with the whole algebra.
    pub fn centre(&self) -> Subspace {
        let n = self.dim();
        let mut rows = Matrix::zeros(self.ctx, 0, n);
        for b in 0..n {
            // x -> [x, e_b]
            let mut m = Matrix::zeros(self.ctx, n, n);
            for a in 0..n {
                for x in 0..n {
                    m[(x, a)] = self.consts[a][b][x].clone();
                }
            }
            rows = rows.vstack(&m);
        }
        rows.kernel_basis()
    }

    pub fn weight(&self, x: usize) -> Weight {
        self.adjoint.weight(x)
    }

    /// Antisymmetry and the Jacobi identity on basis triples.
    pub fn check_lie_axioms(&self) -> bool {
        let n = self.dim();
        let unit = |i: usize| {
            let mut v = vec![self.ctx.zero(); n];
            v[i] = self.ctx.one();
            v
        };
        for a in 0..n {
            for b in 0..n {
                let ab: Vec<Scalar> = self.consts[a][b].clone();
                let ba: Vec<Scalar> = self.consts[b][a].iter().map(|x| -x).collect();
                if ab != ba {
                    return false;
                }
                for c in 0..n {
                    let t1 = self.bracket(&unit(a), &self.bracket(&unit(b), &unit(c)));
                    let t2 = self.bracket(&unit(b), &self.bracket(&unit(c), &unit(a)));
                    let t3 = self.bracket(&unit(c), &self.bracket(&unit(a), &unit(b)));
                    if t1.iter().zip(&t2).zip(&t3).any(|((x, y), z)| !(&(x + y) + z).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Action matrices rho(e_x) of the even basis on a module: E, F by the first divided powers,
    /// H and I2 diagonally, the extra torus by zero.
    pub fn module_action(&self, m: &WeightModule) -> Result<Vec<Matrix>, HcError> {
        if m.kind() != self.group_kind() {
            return Err(HcError::KindMismatch(format!("{} module for {} even part", m.kind(), self.kind)));
        }
        if m.ctx() != self.ctx {
            return Err(HcError::CtxMismatch);
        }
        let mut out = vec![m.e_full(1), m.f_full(1), m.h()];
        if self.dim() > 3 {
            out.push(m.central());
        }
        for _ in 4..self.dim() {
            out.push(Matrix::zeros(self.ctx, m.dim(), m.dim()));
        }
        Ok(out)
    }

    pub fn unit(&self, x: usize) -> Vec<Scalar> {
        let mut v = vec![self.ctx.zero(); self.dim()];
        v[x] = self.ctx.one();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_axioms_and_adjoint() {
        for ctx in [FieldCtx::rationals(), FieldCtx::new(3).unwrap()] {
            for kind in [EvenKind::Sl2, EvenKind::Gl2, EvenKind::Gl2PlusTorus(2)] {
                let g = EvenAlgebra::new(kind, ctx);
                assert!(g.check_lie_axioms());
                g.adjoint().check_invariants().unwrap();
                assert!(g.centre().contains_subspace(g.central()));
                assert_eq!(g.module_action(g.adjoint()).unwrap()[E], g.ad(E));
                assert_eq!(g.module_action(g.adjoint()).unwrap()[F], g.ad(F));
                assert_eq!(g.module_action(g.adjoint()).unwrap()[H], g.ad(H));
            }
        }
    }

    #[test]
    fn gl2_splits_as_centre_plus_sl2() {
        let g = EvenAlgebra::gl2(FieldCtx::rationals());
        assert_eq!(g.centre(), *g.central());
        assert_eq!(g.central().sum(&g.sl2_part()).unwrap().dim(), 4);
        assert_eq!(g.central().intersect(&g.sl2_part()).unwrap().dim(), 0);
    }
}
