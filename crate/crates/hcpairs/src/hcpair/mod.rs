//! Harish-Chandra pairs: even Lie algebra, odd module and symmetric bracket, with the axiom checks.

mod even;
mod json;
mod kernel;

pub use even::{EvenAlgebra, EvenKind, E, F, H, I};
pub use json::{BracketEntry, EvenJson, HcPairJson};
pub use kernel::*;

use thiserror::Error;

use crate::exactla::{FieldCtx, Matrix, Scalar};
use crate::homsolve::BracketTensor;
use crate::rep::{RepError, WeightModule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HcError {
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("field mismatch")]
    CtxMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace is not central in the even part")]
    NotCentral,
    #[error("malformed subpair: {0}")]
    Malformed(String),
    #[error("{0}")]
    Hom(String),
    #[error("json: {0}")]
    Json(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// (G, V, [ , ]): even part, odd module and a bracket V x V -> Lie(G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCPair {
    even: EvenAlgebra,
    odd: WeightModule,
    bracket: BracketTensor,
}

/// Outcome of the four axiom checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub symmetric: bool,
    pub equivariant: bool,
    pub cubic: bool,
    pub jacobi: bool,
}

impl Verification {
    pub fn all(&self) -> bool {
        self.symmetric && self.equivariant && self.cubic && self.jacobi
    }

    pub fn named(&self) -> [(&'static str, bool); 4] {
        [
            ("symmetric", self.symmetric),
            ("equivariant", self.equivariant),
            ("cubic", self.cubic),
            ("jacobi", self.jacobi),
        ]
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.named().into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect()
    }
}

fn sparse_cols(m: &WeightModule, k_max: usize, raising: bool) -> Vec<Vec<Vec<(usize, Scalar)>>> {
    (0..=k_max)
        .map(|u| {
            let op = if raising { m.e_full(u) } else { m.f_full(u) };
            (0..m.dim())
                .map(|c| (0..m.dim()).filter(|&r| !op[(r, c)].is_zero()).map(|r| (r, op[(r, c)].clone())).collect())
                .collect()
        })
        .collect()
}

fn add_scaled(acc: &mut [Scalar], v: &[Scalar], s: &Scalar) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(x * s);
        }
    }
}

impl HCPair {
    pub fn new(even: EvenAlgebra, odd: WeightModule, bracket: BracketTensor) -> Result<Self, HcError> {
        if odd.kind() != even.group_kind() {
            return Err(HcError::KindMismatch(format!("{} module for {} even part", odd.kind(), even.kind())));
        }
        if odd.ctx() != even.ctx() || bracket.ctx() != even.ctx() {
            return Err(HcError::CtxMismatch);
        }
        if bracket.left() != odd.dim() || bracket.right() != odd.dim() || bracket.even() != even.dim() {
            return Err(HcError::Dimension(format!(
                "bracket of shape {}x{}x{} for odd dimension {} and even dimension {}",
                bracket.left(),
                bracket.right(),
                bracket.even(),
                odd.dim(),
                even.dim()
            )));
        }
        Ok(HCPair { even, odd, bracket })
    }

    /// The split pair with zero bracket.
    pub fn split(even: EvenAlgebra, odd: WeightModule) -> Result<Self, HcError> {
        let b = BracketTensor::zero_square(even.ctx(), odd.dim(), even.dim());
        Self::new(even, odd, b)
    }

    pub fn even(&self) -> &EvenAlgebra {
        &self.even
    }

    pub fn odd(&self) -> &WeightModule {
        &self.odd
    }

    pub fn bracket(&self) -> &BracketTensor {
        &self.bracket
    }

    pub fn ctx(&self) -> FieldCtx {
        self.even.ctx()
    }

    pub fn with_bracket(&self, bracket: BracketTensor) -> Result<Self, HcError> {
        Self::new(self.even.clone(), self.odd.clone(), bracket)
    }

    /// Action matrices of the even basis on the odd module.
    pub fn rho(&self) -> Vec<Matrix> {
        self.even.module_action(&self.odd).expect("validated at construction")
    }

    /// rho(y) for an even vector y.
    pub fn rho_of(&self, y: &[Scalar]) -> Matrix {
        let rho = self.rho();
        let n = self.odd.dim();
        let mut m = Matrix::zeros(self.ctx(), n, n);
        for (x, c) in y.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&rho[x].scale(c));
            }
        }
        m
    }

    pub fn check_symmetric(&self) -> bool {
        self.bracket.is_symmetric()
    }

    /// Weight preservation and the divided-power Leibniz rule for all orders.
    pub fn check_equivariance(&self) -> bool {
        let n = self.odd.dim();
        let adj = self.even.adjoint();
        for (i, j, x, _) in self.bracket.entries() {
            if self.odd.weight(i).add(&self.odd.weight(j)) != self.even.weight(x) {
                return false;
            }
        }
        let k_max = (2 * self.odd.max_power()).max(adj.max_power());
        for raising in [true, false] {
            let cols = sparse_cols(&self.odd, k_max, raising);
            for k in 1..=k_max {
                let ak = if raising { adj.e_full(k) } else { adj.f_full(k) };
                for i in 0..n {
                    for j in 0..n {
                        let lhs = ak.mul_vec(self.bracket.pair(i, j));
                        let mut rhs = vec![self.ctx().zero(); self.even.dim()];
                        for u in 0..=k {
                            for (a, ca) in &cols[u][i] {
                                for (b, cb) in &cols[k - u][j] {
                                    add_scaled(&mut rhs, self.bracket.pair(*a, *b), &(ca * cb));
                                }
                            }
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// T(i, j, k) = rho([e_i, e_j]) e_k.
    fn cubic_terms(&self) -> Vec<Vec<Vec<Vec<Scalar>>>> {
        let n = self.odd.dim();
        let rho = self.rho();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let r = {
                            let mut m = Matrix::zeros(self.ctx(), n, n);
                            for (x, c) in self.bracket.pair(i, j).iter().enumerate() {
                                if !c.is_zero() {
                                    m = m.add(&rho[x].scale(c));
                                }
                            }
                            m
                        };
                        (0..n).map(|k| r.col(k)).collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Vanishing of every monomial coefficient of v -> [[v, v], v].
    pub fn check_cubic(&self) -> bool {
        let n = self.odd.dim();
        let t = self.cubic_terms();
        let ctx = self.ctx();
        let two = ctx.int(2);
        let zero = |v: &[Scalar]| v.iter().all(Scalar::is_zero);
        let combo = |parts: &[(&Vec<Scalar>, &Scalar)]| {
            let mut acc = vec![ctx.zero(); n];
            for (v, s) in parts {
                add_scaled(&mut acc, v, s);
            }
            acc
        };
        let one = ctx.one();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let ok = if i < j && j < k {
                        zero(&combo(&[(&t[i][j][k], &one), (&t[i][k][j], &one), (&t[j][k][i], &one)]))
                    } else if i == j && j == k {
                        zero(&t[i][i][i])
                    } else {
                        let (d, s) = if i == j { (i, k) } else { (k, i) };
                        zero(&combo(&[(&t[d][d][s], &one), (&t[d][s][d], &two)]))
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Names of the failing components of the graded Jacobi identity.
    pub fn jacobi_failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.even.check_lie_axioms() {
            out.push("even-even-even");
        }
        let rho = self.rho();
        let d = self.even.dim();
        'eeo: for a in 0..d {
            for b in 0..d {
                let lhs = self.rho_of(self.even.bracket_basis(a, b));
                let rhs = rho[a].dot(&rho[b]).sub(&rho[b].dot(&rho[a]));
                if lhs != rhs {
                    out.push("even-even-odd");
                    break 'eeo;
                }
            }
        }
        let n = self.odd.dim();
        'eoo: for a in 0..d {
            let ad = self.even.ad(a);
            for i in 0..n {
                for j in 0..n {
                    let lhs = ad.mul_vec(self.bracket.pair(i, j));
                    let rhs: Vec<Scalar> = self
                        .bracket
                        .eval(&rho[a].col(i), &unit(self.ctx(), n, j))
                        .iter()
                        .zip(self.bracket.eval(&unit(self.ctx(), n, i), &rho[a].col(j)))
                        .map(|(x, y)| x + &y)
                        .collect();
                    if lhs != rhs {
                        out.push("even-odd-odd");
                        break 'eoo;
                    }
                }
            }
        }
        let t = self.cubic_terms();
        'ooo: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = t[j][k][i].iter().zip(&t[k][i][j]).zip(&t[i][j][k]).any(|((x, y), z)| !(&(x + y) + z).is_zero());
                    if s {
                        out.push("odd-odd-odd");
                        break 'ooo;
                    }
                }
            }
        }
        out
    }

    pub fn check_jacobi(&self) -> bool {
        self.jacobi_failures().is_empty()
    }

    pub fn verify(&self) -> Verification {
        Verification {
            symmetric: self.check_symmetric(),
            equivariant: self.check_equivariance(),
            cubic: self.check_cubic(),
            jacobi: self.check_jacobi(),
        }
    }

    /// Direct sum of pairs over the same even algebra; cross brackets vanish.
    pub fn direct_sum(parts: &[&HCPair]) -> Result<HCPair, HcError> {
        let first = parts.first().ok_or_else(|| HcError::Malformed("empty direct sum".into()))?;
        if parts.iter().any(|p| p.even != first.even) {
            return Err(HcError::KindMismatch("direct sum needs a common even part".into()));
        }
        let odd = crate::rep::direct_sum(&parts.iter().map(|p| &p.odd).collect::<Vec<_>>())?;
        let n = odd.dim();
        let mut bracket = BracketTensor::zero_square(first.ctx(), n, first.even.dim());
        let mut off = 0;
        for p in parts {
            let d = p.odd.dim();
            for i in 0..d {
                for j in 0..d {
                    bracket.set_pair(off + i, off + j, p.bracket.pair(i, j));
                }
            }
            off += d;
        }
        HCPair::new(first.even.clone(), odd, bracket)
    }

    /// Replaces the even algebra by a larger one with the same first basis vectors (E, F, H, ...).
    pub fn extend_even(&self, even: EvenAlgebra) -> Result<HCPair, HcError> {
        if even.dim() < self.even.dim() || even.group_kind() != self.even.group_kind() {
            return Err(HcError::KindMismatch("even part cannot be extended".into()));
        }
        let pad = Matrix::from_rows(
            self.ctx(),
            self.even.dim(),
            (0..even.dim())
                .map(|r| (0..self.even.dim()).map(|c| if r == c { self.ctx().one() } else { self.ctx().zero() }).collect())
                .collect(),
        )
        .expect("shape");
        HCPair::new(even, self.odd.clone(), self.bracket.push(&pad))
    }
}

pub(crate) fn unit(ctx: FieldCtx, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![ctx.zero(); n];
    v[i] = ctx.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homsolve::circ_circ_map;
    use crate::rep::{dual, sym_power, GroupKind};

    fn spo(ctx: FieldCtx) -> HCPair {
        let odd = dual(&sym_power(1, GroupKind::SL2, ctx));
        HCPair::new(EvenAlgebra::sl2(ctx), odd, circ_circ_map(1, &ctx.one()).unwrap()).unwrap()
    }

    #[test]
    fn zero_bracket_passes() {
        let ctx = FieldCtx::rationals();
        let p = HCPair::split(EvenAlgebra::sl2(ctx), sym_power(2, GroupKind::SL2, ctx)).unwrap();
        assert!(p.verify().all());
    }

    #[test]
    fn spo21_bracket_passes() {
        for c in [0, 3, 5] {
            let ctx = FieldCtx::new(c).unwrap();
            assert!(spo(ctx).verify().all(), "char {c}");
        }
    }

    #[test]
    fn wrong_weight_fails_equivariance() {
        let ctx = FieldCtx::rationals();
        let p = spo(ctx);
        let mut b = p.bracket().clone();
        b.set(0, 0, F, ctx.one());
        let bad = p.with_bracket(b).unwrap();
        assert!(!bad.check_equivariance());
    }

    #[test]
    fn alternating_tensor_is_not_symmetric() {
        let ctx = FieldCtx::rationals();
        let odd = dual(&sym_power(2, GroupKind::SL2, ctx));
        let p = HCPair::new(EvenAlgebra::sl2(ctx), odd, circ_circ_map(2, &ctx.one()).unwrap()).unwrap();
        assert!(!p.check_symmetric());
        assert!(p.check_equivariance());
    }

    #[test]
    fn shape_errors() {
        let ctx = FieldCtx::rationals();
        let odd = sym_power(1, GroupKind::SL2, ctx);
        assert!(HCPair::new(EvenAlgebra::sl2(ctx), odd.clone(), BracketTensor::zero_square(ctx, 3, 3)).is_err());
        assert!(HCPair::split(EvenAlgebra::gl2(ctx), odd).is_err());
    }
}
