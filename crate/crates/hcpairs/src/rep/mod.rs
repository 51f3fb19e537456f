//! Torus-graded SL2/GL2 modules carrying divided-power operators E^(k), F^(k).
//!
//! Operators act on column vectors: `e(k) * x` is E^(k) applied to the coordinate vector x.

mod json;
mod structure;

pub use json::{Fraction, WeightModuleJson};
pub(crate) use json::{fraction_to_scalar, scalar_to_fraction};
pub use structure::*;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::{FieldCtx, LinalgError, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    SL2,
    GL2,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::SL2 => "SL2",
            GroupKind::GL2 => "GL2",
        })
    }
}

/// Torus weight: an integer for SL2, a pair (l1, l2) for GL2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Weight {
    Sl2(i64),
    Gl2(i64, i64),
}

impl Weight {
    pub fn kind(&self) -> GroupKind {
        match self {
            Weight::Sl2(_) => GroupKind::SL2,
            Weight::Gl2(..) => GroupKind::GL2,
        }
    }

    /// Pairing with the coroot: the eigenvalue of H.
    pub fn sl2(&self) -> i64 {
        match *self {
            Weight::Sl2(m) => m,
            Weight::Gl2(a, b) => a - b,
        }
    }

    /// l1 + l2 for GL2; zero for SL2.
    pub fn charge(&self) -> i64 {
        match *self {
            Weight::Sl2(_) => 0,
            Weight::Gl2(a, b) => a + b,
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.sl2() >= 0
    }

    pub fn add(&self, o: &Weight) -> Weight {
        match (*self, *o) {
            (Weight::Sl2(a), Weight::Sl2(b)) => Weight::Sl2(a + b),
            (Weight::Gl2(a, b), Weight::Gl2(c, d)) => Weight::Gl2(a + c, b + d),
            _ => panic!("weight kinds differ"),
        }
    }

    pub fn neg(&self) -> Weight {
        match *self {
            Weight::Sl2(a) => Weight::Sl2(-a),
            Weight::Gl2(a, b) => Weight::Gl2(-a, -b),
        }
    }

    /// The weight of E^(k) applied to a vector of this weight.
    pub fn raise(&self, k: i64) -> Weight {
        match *self {
            Weight::Sl2(a) => Weight::Sl2(a + 2 * k),
            Weight::Gl2(a, b) => Weight::Gl2(a + k, b - k),
        }
    }

    pub fn scale(&self, p: i64) -> Weight {
        match *self {
            Weight::Sl2(a) => Weight::Sl2(a * p),
            Weight::Gl2(a, b) => Weight::Gl2(a * p, b * p),
        }
    }

    /// Forgets the central part.
    pub fn restrict(&self) -> Weight {
        Weight::Sl2(self.sl2())
    }

    /// The dual highest weight: n for SL2, (-l2, -l1) for GL2.
    pub fn dual_dominant(&self) -> Weight {
        match *self {
            Weight::Sl2(a) => Weight::Sl2(a),
            Weight::Gl2(a, b) => Weight::Gl2(-b, -a),
        }
    }

    pub fn zero(kind: GroupKind) -> Weight {
        match kind {
            GroupKind::SL2 => Weight::Sl2(0),
            GroupKind::GL2 => Weight::Gl2(0, 0),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Sl2(a) => write!(f, "{a}"),
            Weight::Gl2(a, b) => write!(f, "({a},{b})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("group kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: GroupKind, found: GroupKind },
    #[error("field mismatch between modules")]
    CtxMismatch,
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("operation needs positive characteristic")]
    NeedsPrimeCharacteristic,
    #[error("subspace is not invariant under the divided-power operators")]
    NotInvariant,
    #[error("subspace is not spanned by weight vectors")]
    NotHomogeneous,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("json: {0}")]
    Json(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Finite-dimensional weight module with divided powers E^(k), F^(k), 1 <= k <= K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightModule {
    kind: GroupKind,
    ctx: FieldCtx,
    labels: Vec<String>,
    weights: Vec<Weight>,
    e: Vec<Matrix>,
    f: Vec<Matrix>,
}

/// Half the difference between the largest and smallest H-eigenvalue.
pub fn weight_spread(weights: &[Weight]) -> usize {
    let (lo, hi) = weights.iter().fold((i64::MAX, i64::MIN), |(lo, hi), w| (lo.min(w.sl2()), hi.max(w.sl2())));
    if weights.is_empty() {
        0
    } else {
        ((hi - lo) / 2) as usize
    }
}

impl WeightModule {
    /// Builds a module from operator lists; missing operators up to the spread are zero.
    pub fn new(
        kind: GroupKind,
        ctx: FieldCtx,
        labels: Vec<String>,
        weights: Vec<Weight>,
        mut e: Vec<Matrix>,
        mut f: Vec<Matrix>,
    ) -> Result<Self, RepError> {
        let n = weights.len();
        if labels.len() != n {
            return Err(RepError::InvalidModule(format!("{} labels for {} basis vectors", labels.len(), n)));
        }
        if let Some(w) = weights.iter().find(|w| w.kind() != kind) {
            return Err(RepError::KindMismatch { expected: kind, found: w.kind() });
        }
        let k = weight_spread(&weights);
        for ops in [&mut e, &mut f] {
            if ops.len() > k && ops[k..].iter().any(|m| !m.is_zero()) {
                return Err(RepError::InvalidModule("nonzero divided power beyond the weight spread".into()));
            }
            ops.truncate(k);
            while ops.len() < k {
                ops.push(Matrix::zeros(ctx, n, n));
            }
            if ops.iter().any(|m| m.rows() != n || m.cols() != n || m.ctx() != ctx) {
                return Err(RepError::InvalidModule("operator shape or field mismatch".into()));
            }
        }
        Ok(WeightModule { kind, ctx, labels, weights, e, f })
    }

    pub fn zero(kind: GroupKind, ctx: FieldCtx) -> Self {
        WeightModule { kind, ctx, labels: vec![], weights: vec![], e: vec![], f: vec![] }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> Weight {
        self.weights[i]
    }

    /// Largest k with a stored divided power.
    pub fn max_power(&self) -> usize {
        self.e.len()
    }

    /// E^(k) for k >= 1; `None` when k exceeds the stored range (the operator is zero).
    pub fn e(&self, k: usize) -> Option<&Matrix> {
        k.checked_sub(1).and_then(|i| self.e.get(i))
    }

    pub fn f(&self, k: usize) -> Option<&Matrix> {
        k.checked_sub(1).and_then(|i| self.f.get(i))
    }

    /// E^(k) including E^(0) = identity and zero beyond the spread.
    pub fn e_full(&self, k: usize) -> Matrix {
        self.op_full(k, true)
    }

    pub fn f_full(&self, k: usize) -> Matrix {
        self.op_full(k, false)
    }

    fn op_full(&self, k: usize, raising: bool) -> Matrix {
        if k == 0 {
            return Matrix::identity(self.ctx, self.dim());
        }
        let ops = if raising { &self.e } else { &self.f };
        ops.get(k - 1).cloned().unwrap_or_else(|| Matrix::zeros(self.ctx, self.dim(), self.dim()))
    }

    /// Action of the Lie algebra element H (diagonal with the H-eigenvalues).
    pub fn h(&self) -> Matrix {
        Matrix::diagonal(self.ctx, &self.weights.iter().map(|w| self.ctx.int(w.sl2())).collect::<Vec<_>>())
    }

    /// Action of the central element I2 (diagonal with l1 + l2).
    pub fn central(&self) -> Matrix {
        Matrix::diagonal(self.ctx, &self.weights.iter().map(|w| self.ctx.int(w.charge())).collect::<Vec<_>>())
    }

    /// Distinct weights with the basis indices carrying them.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut map: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            map.entry(*w).or_default().push(i);
        }
        map
    }

    /// Dominant weights occurring in the module, in increasing order.
    pub fn dominant_weights(&self) -> Vec<Weight> {
        self.weight_spaces().into_keys().filter(Weight::is_dominant).collect()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    fn same_family(&self, o: &WeightModule) -> Result<(), RepError> {
        if self.kind != o.kind {
            return Err(RepError::KindMismatch { expected: self.kind, found: o.kind });
        }
        if self.ctx != o.ctx {
            return Err(RepError::CtxMismatch);
        }
        Ok(())
    }

    /// Checks weight additivity, divided-power composition and the [E, F] = H relation.
    pub fn check_invariants(&self) -> Result<(), RepError> {
        let n = self.dim();
        let k_max = self.max_power();
        for k in 1..=k_max {
            for (ops, sign) in [(&self.e, 1i64), (&self.f, -1i64)] {
                let m = &ops[k - 1];
                for r in 0..n {
                    for c in 0..n {
                        if !m[(r, c)].is_zero() && self.weights[r] != self.weights[c].raise(sign * k as i64) {
                            return Err(RepError::InvalidModule(format!(
                                "operator of order {k} maps weight {} to {}",
                                self.weights[c], self.weights[r]
                            )));
                        }
                    }
                }
            }
        }
        for i in 1..=k_max {
            for j in 1..=k_max {
                let c = self.ctx.binom((i + j) as i64, i as i64);
                for raising in [true, false] {
                    let lhs = self.op_full(i, raising).dot(&self.op_full(j, raising));
                    let rhs = self.op_full(i + j, raising).scale(&c);
                    if lhs != rhs {
                        return Err(RepError::InvalidModule(format!("divided-power composition fails for ({i}, {j})")));
                    }
                }
            }
        }
        if k_max >= 1 {
            let comm = self.e[0].dot(&self.f[0]).sub(&self.f[0].dot(&self.e[0]));
            if comm != self.h() {
                return Err(RepError::InvalidModule("[E, F] differs from H on some weight space".into()));
            }
        }
        Ok(())
    }

    /// Restriction of a GL2-module to SL2.
    pub fn restrict_to_sl2(&self) -> WeightModule {
        WeightModule {
            kind: GroupKind::SL2,
            weights: self.weights.iter().map(Weight::restrict).collect(),
            ..self.clone()
        }
    }

    /// Keeps the basis vectors in `idx` (assumed to span a submodule) in that order.
    pub fn coordinate_submodule(&self, idx: &[usize]) -> WeightModule {
        let pick = |m: &Matrix| {
            let mut out = Matrix::zeros(self.ctx, idx.len(), idx.len());
            for (a, &r) in idx.iter().enumerate() {
                for (b, &c) in idx.iter().enumerate() {
                    out[(a, b)] = m[(r, c)].clone();
                }
            }
            out
        };
        WeightModule::new(
            self.kind,
            self.ctx,
            idx.iter().map(|&i| self.labels[i].clone()).collect(),
            idx.iter().map(|&i| self.weights[i]).collect(),
            self.e.iter().map(pick).collect(),
            self.f.iter().map(pick).collect(),
        )
        .expect("coordinate submodule is well formed")
    }

    /// Applies a basis permutation: new basis vector i is old basis vector perm[i].
    pub fn permuted(&self, perm: &[usize]) -> WeightModule {
        self.coordinate_submodule(perm)
    }
}

fn kind_weight(kind: GroupKind, a: i64, b: i64) -> Weight {
    match kind {
        GroupKind::SL2 => Weight::Sl2(a - b),
        GroupKind::GL2 => Weight::Gl2(a, b),
    }
}

/// Sym_n(V) with basis s_i = v1^i v_{-1}^(n-i); the GL2 version is the natural action on polynomials.
pub fn sym_power(n: usize, kind: GroupKind, ctx: FieldCtx) -> WeightModule {
    let d = n + 1;
    let ni = n as i64;
    let weights = (0..=ni).map(|i| kind_weight(kind, i, ni - i)).collect();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for k in 1..=n {
        let mut em = Matrix::zeros(ctx, d, d);
        let mut fm = Matrix::zeros(ctx, d, d);
        for i in 0..d {
            if i + k < d {
                em[(i + k, i)] = ctx.binom(ni - i as i64, k as i64);
            }
            if i >= k {
                fm[(i - k, i)] = ctx.binom(i as i64, k as i64);
            }
        }
        e.push(em);
        f.push(fm);
    }
    let labels = (0..d).map(|i| format!("s{i}")).collect();
    WeightModule::new(kind, ctx, labels, weights, e, f).expect("symmetric power is well formed")
}

/// Contragredient module on the dual basis; E^(k) acts by (-1)^k times the transpose.
pub fn dual(m: &WeightModule) -> WeightModule {
    let sign = |k: usize| if k.is_multiple_of(2) { m.ctx.one() } else { -m.ctx.one() };
    WeightModule {
        kind: m.kind,
        ctx: m.ctx,
        labels: m.labels.iter().map(|l| format!("{l}*")).collect(),
        weights: m.weights.iter().map(Weight::neg).collect(),
        e: m.e.iter().enumerate().map(|(i, x)| x.transpose().scale(&sign(i + 1))).collect(),
        f: m.f.iter().enumerate().map(|(i, x)| x.transpose().scale(&sign(i + 1))).collect(),
    }
}

/// Tensor with det^t: shifts every weight by (t, t).
pub fn det_twist(m: &WeightModule, t: i64) -> Result<WeightModule, RepError> {
    if m.kind != GroupKind::GL2 {
        return Err(RepError::KindMismatch { expected: GroupKind::GL2, found: m.kind });
    }
    let mut out = m.clone();
    out.weights = m.weights.iter().map(|w| w.add(&Weight::Gl2(t, t))).collect();
    if t != 0 {
        out.labels = m.labels.iter().map(|l| format!("{l}.det^{t}")).collect();
    }
    Ok(out)
}

/// The one-dimensional module det^t (GL2).
pub fn det_line(t: i64, ctx: FieldCtx) -> WeightModule {
    let mut m = sym_power(0, GroupKind::GL2, ctx);
    m.weights = vec![Weight::Gl2(t, t)];
    m.labels = vec![format!("det^{t}")];
    m
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let ctx = a.ctx();
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = Matrix::zeros(ctx, ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out[(i * rb + k, j * cb + l)] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// Tensor product; basis index i * dim(b) + j stands for a_i (x) b_j.
pub fn tensor(a: &WeightModule, b: &WeightModule) -> Result<WeightModule, RepError> {
    a.same_family(b)?;
    let mut weights = Vec::with_capacity(a.dim() * b.dim());
    let mut labels = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            weights.push(a.weights[i].add(&b.weights[j]));
            labels.push(format!("{}(x){}", a.labels[i], b.labels[j]));
        }
    }
    let k_max = weight_spread(&weights);
    let coproduct = |raising: bool| -> Vec<Matrix> {
        (1..=k_max)
            .map(|k| {
                let mut acc = Matrix::zeros(a.ctx, weights.len(), weights.len());
                for u in 0..=k {
                    let v = k - u;
                    if u > a.max_power() || v > b.max_power() {
                        continue;
                    }
                    acc = acc.add(&kron(&a.op_full(u, raising), &b.op_full(v, raising)));
                }
                acc
            })
            .collect()
    };
    let e = coproduct(true);
    let f = coproduct(false);
    WeightModule::new(a.kind, a.ctx, labels, weights, e, f)
}

/// Direct sum in the given order.
pub fn direct_sum(parts: &[&WeightModule]) -> Result<WeightModule, RepError> {
    let Some(first) = parts.first() else {
        return Err(RepError::InvalidModule("empty direct sum".into()));
    };
    for p in parts {
        first.same_family(p)?;
    }
    let weights: Vec<Weight> = parts.iter().flat_map(|p| p.weights.iter().copied()).collect();
    let labels = parts.iter().flat_map(|p| p.labels.iter().cloned()).collect();
    let k_max = weight_spread(&weights);
    let ops = |raising: bool| -> Vec<Matrix> {
        (1..=k_max)
            .map(|k| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.op_full(k, raising)).collect();
                let refs: Vec<&Matrix> = blocks.iter().collect();
                Matrix::block_diag(&refs, first.ctx)
            })
            .collect()
    };
    WeightModule::new(first.kind, first.ctx, labels, weights, ops(true), ops(false))
}

/// Frobenius twist: weights times p, E^(k) replaced by E^(k/p) when p | k and zero otherwise.
pub fn frobenius_twist(m: &WeightModule) -> Result<WeightModule, RepError> {
    let p = m.ctx.characteristic() as usize;
    if p == 0 {
        return Err(RepError::NeedsPrimeCharacteristic);
    }
    let weights: Vec<Weight> = m.weights.iter().map(|w| w.scale(p as i64)).collect();
    let k_max = weight_spread(&weights);
    let ops = |raising: bool| -> Vec<Matrix> {
        (1..=k_max)
            .map(|k| if k % p == 0 { m.op_full(k / p, raising) } else { Matrix::zeros(m.ctx, m.dim(), m.dim()) })
            .collect()
    };
    let labels = m.labels.iter().map(|l| format!("{l}^[1]")).collect();
    WeightModule::new(m.kind, m.ctx, labels, weights, ops(true), ops(false))
}

/// Base-p digits of n, least significant first.
pub fn p_adic_digits(n: u64, p: u64) -> Vec<u64> {
    let mut digits = Vec::new();
    let mut n = n;
    while n > 0 {
        digits.push(n % p);
        n /= p;
    }
    digits
}

/// The simple module L(lambda): Sym_n in characteristic 0, a twisted tensor product of
/// restricted symmetric powers in characteristic p; GL2 weights carry a det twist.
pub fn simple_module(lambda: Weight, ctx: FieldCtx) -> Result<WeightModule, RepError> {
    if !lambda.is_dominant() {
        return Err(RepError::NotDominant(lambda));
    }
    let kind = lambda.kind();
    let n = lambda.sl2() as u64;
    let mut module = if ctx.is_char_zero() {
        sym_power(n as usize, kind, ctx)
    } else {
        let p = ctx.characteristic();
        let mut acc = sym_power(0, kind, ctx);
        for (i, d) in p_adic_digits(n, p).into_iter().enumerate() {
            let mut piece = sym_power(d as usize, kind, ctx);
            for _ in 0..i {
                piece = frobenius_twist(&piece)?;
            }
            acc = tensor(&acc, &piece)?;
        }
        acc
    };
    if let Weight::Gl2(_, l2) = lambda {
        module = det_twist(&module, l2)?;
    }
    let labels = (0..module.dim()).map(|i| format!("L{lambda}_{i}")).collect();
    Ok(module.with_labels(labels))
}

/// The Weyl module V(lambda) = Sym_n(V)* (twisted by det^l1 for GL2), basis s*_i of weight n - 2i.
pub fn weyl_module(lambda: Weight, ctx: FieldCtx) -> Result<WeightModule, RepError> {
    if !lambda.is_dominant() {
        return Err(RepError::NotDominant(lambda));
    }
    let n = lambda.sl2() as usize;
    match lambda {
        Weight::Sl2(_) => Ok(dual(&sym_power(n, GroupKind::SL2, ctx))),
        Weight::Gl2(l1, _) => det_twist(&dual(&sym_power(n, GroupKind::GL2, ctx)), l1),
    }
}

/// Restricted form of simple_module for SL2 highest weight n.
pub fn simple_sl2(n: u64, ctx: FieldCtx) -> WeightModule {
    simple_module(Weight::Sl2(n as i64), ctx).expect("dominant")
}

/// Adds basis-vector names for display.
pub fn relabel(m: &WeightModule, prefix: &str) -> WeightModule {
    let labels = (0..m.dim()).map(|i| format!("{prefix}{i}")).collect();
    m.clone().with_labels(labels)
}

/// Convenience: the scalar H-eigenvalue of a basis vector.
pub fn h_eigen(m: &WeightModule, i: usize) -> Scalar {
    m.ctx.int(m.weights[i].sl2())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldCtx {
        FieldCtx::new(3).unwrap()
    }

    #[test]
    fn standard_module() {
        let v = sym_power(1, GroupKind::SL2, FieldCtx::rationals());
        assert_eq!(v.weights(), &[Weight::Sl2(-1), Weight::Sl2(1)]);
        v.check_invariants().unwrap();
    }

    #[test]
    fn trivial_module_has_no_operators() {
        let t = sym_power(0, GroupKind::SL2, FieldCtx::rationals());
        assert_eq!(t.max_power(), 0);
        assert!(t.e(1).is_none());
    }

    #[test]
    fn sym3_mod_three_entries() {
        let s = sym_power(3, GroupKind::SL2, f3());
        let ctx = f3();
        // E^(1) s1 = C(2,1) s2 = 2 s2; E^(3) s0 = s3
        assert_eq!(s.e(1).unwrap()[(2, 1)], ctx.int(2));
        assert_eq!(s.e(3).unwrap()[(3, 0)], ctx.int(1));
        s.check_invariants().unwrap();
    }

    #[test]
    fn dual_formula_matches_closed_form() {
        for ctx in [FieldCtx::rationals(), f3(), FieldCtx::new(5).unwrap()] {
            let n = 5usize;
            let d = dual(&sym_power(n, GroupKind::SL2, ctx));
            d.check_invariants().unwrap();
            for k in 1..=n {
                for i in 0..=n {
                    let sign = if k % 2 == 0 { ctx.one() } else { -ctx.one() };
                    for j in 0..=n {
                        let expect_e = if i >= k && j == i - k {
                            &sign * &ctx.binom((n - i + k) as i64, k as i64)
                        } else {
                            ctx.zero()
                        };
                        assert_eq!(d.e(k).unwrap()[(j, i)], expect_e);
                        let expect_f =
                            if j == i + k { &sign * &ctx.binom((i + k) as i64, k as i64) } else { ctx.zero() };
                        assert_eq!(d.f(k).unwrap()[(j, i)], expect_f);
                    }
                }
            }
            let w: Vec<i64> = d.weights().iter().map(Weight::sl2).collect();
            assert_eq!(w, vec![5, 3, 1, -1, -3, -5]);
        }
    }

    #[test]
    fn twist_and_charge() {
        let ctx = FieldCtx::rationals();
        let v = sym_power(2, GroupKind::GL2, ctx);
        assert_eq!(det_twist(&v, 0).unwrap(), v);
        let t = det_twist(&v, 3).unwrap();
        assert!(t.weights().iter().all(|w| w.charge() == 2 + 6));
        assert!(det_twist(&sym_power(1, GroupKind::SL2, ctx), 1).is_err());
        assert_eq!(det_line(-2, ctx).weights(), &[Weight::Gl2(-2, -2)]);
    }

    #[test]
    fn tensor_weights() {
        let ctx = FieldCtx::rationals();
        let v = sym_power(1, GroupKind::SL2, ctx);
        let vv = tensor(&v, &v).unwrap();
        let mut w: Vec<i64> = vv.weights().iter().map(Weight::sl2).collect();
        w.sort();
        assert_eq!(w, vec![-2, 0, 0, 2]);
        vv.check_invariants().unwrap();
        let triv = sym_power(0, GroupKind::SL2, ctx);
        assert_eq!(tensor(&v, &triv).unwrap().weights(), v.weights());
        let v13 = tensor(&v, &sym_power(3, GroupKind::SL2, ctx)).unwrap();
        assert_eq!(v13.weights().iter().filter(|w| w.sl2() == 2).count(), 2);
    }

    #[test]
    fn frobenius_of_standard() {
        let v = sym_power(1, GroupKind::SL2, f3());
        let t = frobenius_twist(&v).unwrap();
        assert_eq!(t.weights(), &[Weight::Sl2(-3), Weight::Sl2(3)]);
        assert!(t.e(1).unwrap().is_zero() && t.e(2).unwrap().is_zero());
        assert!(!t.e(3).unwrap().is_zero());
        t.check_invariants().unwrap();
        assert!(frobenius_twist(&v.clone()).is_ok());
        let q = sym_power(1, GroupKind::SL2, FieldCtx::rationals());
        assert_eq!(frobenius_twist(&q), Err(RepError::NeedsPrimeCharacteristic));
    }

    #[test]
    fn simple_dimensions() {
        for p in [3u64, 5, 7] {
            let ctx = FieldCtx::new(p).unwrap();
            for n in 0..=30u64 {
                let l = simple_sl2(n, ctx);
                let expect: u64 = p_adic_digits(n, p).iter().map(|d| d + 1).product();
                assert_eq!(l.dim() as u64, expect, "L({n}) in char {p}");
                l.check_invariants().unwrap();
            }
        }
        assert_eq!(simple_sl2(3, f3()).dim(), 2);
        assert_eq!(simple_sl2(2, FieldCtx::new(5).unwrap()).dim(), 3);
        assert!(simple_module(Weight::Sl2(-1), f3()).is_err());
    }

    #[test]
    fn gl2_simple_is_twisted() {
        let ctx = FieldCtx::new(5).unwrap();
        let l = simple_module(Weight::Gl2(2, -1), ctx).unwrap();
        assert_eq!(l.dim(), 4);
        assert!(l.weights().iter().all(|w| w.charge() == 1));
        assert!(l.weights().contains(&Weight::Gl2(2, -1)));
    }
}
