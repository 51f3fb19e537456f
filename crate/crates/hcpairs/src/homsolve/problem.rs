use std::collections::BTreeMap;

use super::{BracketTensor, HomError};
use crate::exactla::{LinearSystem, Matrix, Scalar, Subspace};
use crate::rep::{RepError, WeightModule};

/// Symmetry imposed on square bilinear maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Symmetric,
    Alternating,
}

/// Unknown coefficients c[i][j][x] of an equivariant bilinear map, restricted to weight-compatible
/// triples, together with the linear conditions on them.
pub(crate) struct BilinearProblem<'a> {
    pub left: &'a WeightModule,
    pub right: &'a WeightModule,
    pub target: &'a WeightModule,
    symmetry: Symmetry,
    vars: BTreeMap<(usize, usize, usize), usize>,
    /// Unknowns beyond the tensor coefficients (auxiliary scalars of constraints).
    pub extra: usize,
}

type Terms = Vec<(usize, Scalar)>;

/// For each operator order u and each column, the nonzero entries (row, value).
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

impl<'a> BilinearProblem<'a> {
    pub fn new(
        left: &'a WeightModule,
        right: &'a WeightModule,
        target: &'a WeightModule,
        symmetry: Symmetry,
    ) -> Result<Self, HomError> {
        for m in [right, target] {
            if m.kind() != left.kind() {
                return Err(RepError::KindMismatch { expected: left.kind(), found: m.kind() }.into());
            }
            if m.ctx() != left.ctx() {
                return Err(RepError::CtxMismatch.into());
            }
        }
        if symmetry != Symmetry::None && left != right {
            return Err(HomError::Precondition("symmetry needs identical factors".into()));
        }
        let t_spaces = target.weight_spaces();
        let mut vars = BTreeMap::new();
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                let canonical = match symmetry {
                    Symmetry::None => true,
                    Symmetry::Symmetric => i <= j,
                    Symmetry::Alternating => i < j,
                };
                if !canonical {
                    continue;
                }
                if let Some(xs) = t_spaces.get(&left.weight(i).add(&right.weight(j))) {
                    for &x in xs {
                        let n = vars.len();
                        vars.insert((i, j, x), n);
                    }
                }
            }
        }
        Ok(BilinearProblem { left, right, target, symmetry, vars, extra: 0 })
    }

    pub fn ntensor_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len() + self.extra
    }

    pub fn system(&self) -> LinearSystem {
        LinearSystem::new(self.left.ctx(), self.nvars())
    }

    /// The unknown for c[i][j][x] with its sign, or None if the coefficient is forced to vanish.
    pub fn var(&self, i: usize, j: usize, x: usize) -> Option<(usize, Scalar)> {
        let ctx = self.left.ctx();
        match self.symmetry {
            Symmetry::None => self.vars.get(&(i, j, x)).map(|&v| (v, ctx.one())),
            Symmetry::Symmetric => self.vars.get(&(i.min(j), i.max(j), x)).map(|&v| (v, ctx.one())),
            Symmetry::Alternating => {
                if i == j {
                    None
                } else if i < j {
                    self.vars.get(&(i, j, x)).map(|&v| (v, ctx.one()))
                } else {
                    self.vars.get(&(j, i, x)).map(|&v| (v, -ctx.one()))
                }
            }
        }
    }

    fn push(&self, terms: &mut Terms, i: usize, j: usize, x: usize, coeff: Scalar) {
        if let Some((v, s)) = self.var(i, j, x) {
            terms.push((v, &coeff * &s));
        }
    }

    /// Divided-power Leibniz rule: T^(k) c(v, w) = sum_{u + w = k} c(A^(u) v, B^(w) w).
    pub fn add_equivariance(&self, sys: &mut LinearSystem) {
        let k_max = (self.left.max_power() + self.right.max_power()).max(self.target.max_power());
        let t_spaces = self.target.weight_spaces();
        let only_upper = self.symmetry != Symmetry::None;
        for raising in [true, false] {
            let lc = sparse_cols(self.left, k_max, raising);
            let rc = sparse_cols(self.right, k_max, raising);
            let tc = sparse_cols(self.target, k_max, raising);
            for k in 1..=k_max {
                let shift = if raising { k as i64 } else { -(k as i64) };
                for i in 0..self.left.dim() {
                    for j in 0..self.right.dim() {
                        if only_upper && i > j {
                            continue;
                        }
                        let w = self.left.weight(i).add(&self.right.weight(j));
                        let Some(ys) = t_spaces.get(&w.raise(shift)) else { continue };
                        for &y in ys {
                            let mut terms = Vec::new();
                            if let Some(xs) = t_spaces.get(&w) {
                                for &x in xs {
                                    if let Some((_, c)) = tc[k][x].iter().find(|(r, _)| *r == y) {
                                        self.push(&mut terms, i, j, x, c.clone());
                                    }
                                }
                            }
                            for u in 0..=k {
                                for (a, ca) in &lc[u][i] {
                                    for (b, cb) in &rc[k - u][j] {
                                        self.push(&mut terms, *a, *b, y, -(ca * cb));
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
        }
    }

    /// Coefficient identities of v -> rho([v, v]) v, with rho[x] the action of target basis x.
    pub fn add_cubic(&self, sys: &mut LinearSystem, rho: &[Matrix]) {
        let n = self.left.dim();
        let ctx = self.left.ctx();
        // rho_cols[k] = list of (x, r, value) with rho[x][(r, k)] != 0
        let rho_cols: Vec<Vec<(usize, usize, Scalar)>> = (0..n)
            .map(|k| {
                let mut out = Vec::new();
                for (x, m) in rho.iter().enumerate() {
                    for r in 0..n {
                        if !m[(r, k)].is_zero() {
                            out.push((x, r, m[(r, k)].clone()));
                        }
                    }
                }
                out
            })
            .collect();
        // T(i, j, k)[r] = sum_x c[i][j][x] rho_x[r][k]
        let add_t = |rows: &mut BTreeMap<usize, Terms>, i: usize, j: usize, k: usize, mult: &Scalar| {
            for (x, r, val) in &rho_cols[k] {
                if let Some((v, s)) = self.var(i, j, *x) {
                    rows.entry(*r).or_default().push((v, &(val * &s) * mult));
                }
            }
        };
        let one = ctx.one();
        let two = ctx.int(2);
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let mut rows: BTreeMap<usize, Terms> = BTreeMap::new();
                    if i < j && j < k {
                        add_t(&mut rows, i, j, k, &one);
                        add_t(&mut rows, i, k, j, &one);
                        add_t(&mut rows, j, k, i, &one);
                    } else if i == j && j == k {
                        add_t(&mut rows, i, i, i, &one);
                    } else {
                        let (d, s) = if i == j { (i, k) } else { (k, i) };
                        add_t(&mut rows, d, d, s, &one);
                        add_t(&mut rows, d, s, d, &two);
                    }
                    for terms in rows.into_values() {
                        sys.add_homogeneous(terms);
                    }
                }
            }
        }
    }

    pub fn tensor_from(&self, sol: &[Scalar]) -> BracketTensor {
        let ctx = self.left.ctx();
        let mut t = BracketTensor::zero(ctx, self.left.dim(), self.right.dim(), self.target.dim());
        for i in 0..self.left.dim() {
            for j in 0..self.right.dim() {
                for x in 0..self.target.dim() {
                    if let Some((v, s)) = self.var(i, j, x) {
                        if !sol[v].is_zero() {
                            t.set(i, j, x, &sol[v] * &s);
                        }
                    }
                }
            }
        }
        t
    }

    /// Linearly independent tensors spanning the homogeneous solutions.
    pub fn kernel_tensors(&self, sys: &LinearSystem) -> Vec<BracketTensor> {
        self.span_tensors(&sys.kernel())
    }

    pub fn span_tensors(&self, sols: &Subspace) -> Vec<BracketTensor> {
        let tensors: Vec<BracketTensor> = sols.basis_vectors().iter().map(|s| self.tensor_from(s)).collect();
        independent(tensors)
    }
}

/// Keeps a basis of the span (in reduced form).
pub(crate) fn independent(tensors: Vec<BracketTensor>) -> Vec<BracketTensor> {
    let Some(first) = tensors.first() else { return vec![] };
    let (ctx, l, r, e) = (first.ctx(), first.left(), first.right(), first.even());
    let span = Subspace::from_vectors(ctx, l * r * e, tensors.iter().map(|t| t.flat().to_vec()).collect());
    span.basis_vectors().into_iter().map(|v| BracketTensor::from_flat(ctx, l, r, e, v)).collect()
}
