use std::collections::BTreeMap;

use super::{FieldCtx, Scalar, Subspace};

/// Sparse linear equation: sum of coeff * x[var] = rhs.
#[derive(Clone, Debug, Default)]
pub struct Equation {
    pub terms: Vec<(usize, Scalar)>,
    pub rhs: Option<Scalar>,
}

impl Equation {
    pub fn homogeneous(terms: Vec<(usize, Scalar)>) -> Self {
        Equation { terms, rhs: None }
    }
}

/// Incrementally reduced linear system; rows are kept in reduced echelon form.
///
/// Column `nvars` holds the right-hand side.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    ctx: FieldCtx,
    nvars: usize,
    rows: BTreeMap<usize, Vec<Scalar>>,
    inconsistent: bool,
}

/// Solution set of an affine system: particular + span(basis), or empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: Option<Vec<Scalar>>,
    pub directions: Subspace,
}

impl AffineSpace {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn dim(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.directions.dim())
    }
}

impl LinearSystem {
    pub fn new(ctx: FieldCtx, nvars: usize) -> Self {
        LinearSystem { ctx, nvars, rows: BTreeMap::new(), inconsistent: false }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn add(&mut self, eq: &Equation) {
        let mut row = vec![self.ctx.zero(); self.nvars + 1];
        for (v, c) in &eq.terms {
            row[*v] = &row[*v] + c;
        }
        if let Some(r) = &eq.rhs {
            row[self.nvars] = r.clone();
        }
        self.add_dense(row);
    }

    pub fn add_homogeneous(&mut self, terms: Vec<(usize, Scalar)>) {
        self.add(&Equation::homogeneous(terms));
    }

    fn add_dense(&mut self, mut row: Vec<Scalar>) {
        for (&p, prow) in &self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (j, b) in prow.iter().enumerate().skip(p) {
                if !b.is_zero() {
                    row[j] = &row[j] - &(&f * b);
                }
            }
        }
        let Some(p) = (0..self.nvars).find(|&j| !row[j].is_zero()) else {
            if !row[self.nvars].is_zero() {
                self.inconsistent = true;
            }
            return;
        };
        let inv = row[p].inv().expect("nonzero");
        for x in row.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for prow in self.rows.values_mut() {
            if prow[p].is_zero() {
                continue;
            }
            let f = prow[p].clone();
            for (j, b) in row.iter().enumerate().skip(p) {
                if !b.is_zero() {
                    prow[j] = &prow[j] - &(&f * b);
                }
            }
        }
        self.rows.insert(p, row);
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    /// The solution set as particular solution plus null-space directions.
    pub fn solve(&self) -> AffineSpace {
        let free: Vec<usize> = (0..self.nvars).filter(|c| !self.rows.contains_key(c)).collect();
        let directions = Subspace::from_vectors(
            self.ctx,
            self.nvars,
            free.iter()
                .map(|&f| {
                    let mut x = vec![self.ctx.zero(); self.nvars];
                    x[f] = self.ctx.one();
                    for (&p, prow) in &self.rows {
                        x[p] = -&prow[f];
                    }
                    x
                })
                .collect(),
        );
        if self.inconsistent {
            return AffineSpace { particular: None, directions };
        }
        let mut x = vec![self.ctx.zero(); self.nvars];
        for (&p, prow) in &self.rows {
            x[p] = prow[self.nvars].clone();
        }
        AffineSpace { particular: Some(x), directions }
    }

    /// Null space of the homogeneous part.
    pub fn kernel(&self) -> Subspace {
        self.solve().directions
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incremental_matches_dense() {
        let q = FieldCtx::rationals();
        let mut sys = LinearSystem::new(q, 3);
        sys.add_homogeneous(vec![(0, q.int(1)), (1, q.int(-1))]);
        sys.add_homogeneous(vec![(1, q.int(2)), (2, q.int(-2))]);
        let k = sys.kernel();
        assert_eq!(k, Subspace::from_vectors(q, 3, vec![vec![q.int(1), q.int(1), q.int(1)]]));
    }

    #[test]
    fn inconsistent_rhs_detected() {
        let q = FieldCtx::rationals();
        let mut sys = LinearSystem::new(q, 1);
        sys.add(&Equation { terms: vec![(0, q.int(1))], rhs: Some(q.int(1)) });
        sys.add(&Equation { terms: vec![(0, q.int(1))], rhs: Some(q.int(2)) });
        assert!(sys.solve().is_empty());
    }
}
