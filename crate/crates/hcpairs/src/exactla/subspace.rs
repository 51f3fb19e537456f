use super::{FieldCtx, LinalgError, Matrix, Scalar};

/// Subspace of k^n stored by its canonical reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ctx: FieldCtx, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(ctx, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(ctx: FieldCtx, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ctx, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors; each must have length `ambient`.
    pub fn from_vectors(ctx: FieldCtx, ambient: usize, vecs: Vec<Vec<Scalar>>) -> Self {
        let m = Matrix::from_rows(ctx, ambient, vecs).expect("vector length equals ambient dimension");
        Self::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (red, pivots) = m.rref();
        let rows = red.row_vecs().into_iter().take(pivots.len()).collect();
        let basis = Matrix::from_rows(m.ctx(), m.cols(), rows).expect("shape");
        Subspace { ambient: m.cols(), basis, pivots }
    }

    /// Span of the unit vectors e_i for i in `idx`.
    pub fn coordinate(ctx: FieldCtx, ambient: usize, idx: &[usize]) -> Self {
        let vecs = idx
            .iter()
            .map(|&i| {
                let mut v = vec![ctx.zero(); ambient];
                v[i] = ctx.one();
                v
            })
            .collect();
        Self::from_vectors(ctx, ambient, vecs)
    }

    pub fn ctx(&self) -> FieldCtx {
        self.basis.ctx()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of v in the rref basis, or None if v is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![self.ctx().zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    rebuilt[j] = &rebuilt[j] + &(c * b);
                }
            }
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.basis_vectors().iter().all(|v| self.contains(v))
    }

    fn check_ambient(&self, o: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != o.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: o.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(o)?;
        Ok(Self::row_space(&self.basis.vstack(&o.basis)))
    }

    pub fn intersect(&self, o: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(o)?;
        Ok(self.annihilator().sum(&o.annihilator())?.annihilator())
    }

    /// {f : f . v = 0 for all v in self}, under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ctx(), self.ambient);
        }
        self.basis.kernel_basis()
    }

    /// Reduces v modulo the subspace so that its pivot coordinates vanish.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] = &out[j] - &(&f * b);
                }
            }
        }
        out
    }

    /// Columns that are not pivots; they index a basis of the quotient k^n / self.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Image of the subspace under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, a: &Matrix) -> Subspace {
        let vecs = self.basis_vectors().iter().map(|v| a.mul_vec(v)).collect();
        Subspace::from_vectors(self.ctx(), a.rows(), vecs)
    }

    /// {v : a v in target}.
    pub fn preimage(a: &Matrix, target: &Subspace) -> Subspace {
        let ann = target.annihilator();
        if ann.dim() == 0 {
            return Subspace::full(a.ctx(), a.cols());
        }
        ann.basis().dot(a).kernel_basis()
    }

    pub fn is_invariant(&self, a: &Matrix) -> bool {
        self.basis_vectors().iter().all(|v| self.contains(&a.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annihilator_of_zero_is_full() {
        let q = FieldCtx::rationals();
        assert_eq!(Subspace::zero(q, 3).annihilator(), Subspace::full(q, 3));
        assert_eq!(Subspace::full(q, 3).annihilator(), Subspace::zero(q, 3));
    }

    #[test]
    fn reduce_and_coordinates() {
        let q = FieldCtx::rationals();
        let s = Subspace::from_vectors(q, 3, vec![vec![q.int(1), q.int(2), q.int(0)]]);
        let v = vec![q.int(2), q.int(4), q.int(0)];
        assert_eq!(s.coordinates(&v), Some(vec![q.int(2)]));
        assert!(s.reduce(&v).iter().all(Scalar::is_zero));
        assert_eq!(s.non_pivots(), vec![1, 2]);
    }
}
