//! Exact arithmetic over Q and F_p and dense linear algebra on top of it.

mod matrix;
mod scalar;
mod subspace;
mod system;

pub use matrix::Matrix;
pub use scalar::{binom_int, FieldCtx, ModP, Scalar};
pub use subspace::Subspace;
pub use system::{AffineSpace, Equation, LinearSystem};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("characteristic {0} is not 0 or an odd prime")]
    InvalidCharacteristic(u64),
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Rank-nullity style helper: dim(a) + dim(b) - dim(a + b).
pub fn intersection_dim(a: &Subspace, b: &Subspace) -> Result<usize, LinalgError> {
    Ok(a.dim() + b.dim() - a.sum(b)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldCtx {
        FieldCtx::rationals()
    }

    #[test]
    fn rref_identity_and_rank_one() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));
        let m = Matrix::from_ints(q(), &[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_ints(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_mod_three() {
        let f3 = FieldCtx::new(3).unwrap();
        let m = Matrix::from_ints(f3, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.rref().0, Matrix::from_ints(f3, &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn kernels() {
        assert_eq!(Matrix::identity(q(), 3).kernel_basis().dim(), 0);
        assert_eq!(Matrix::zeros(q(), 3, 3).kernel_basis().dim(), 3);
        let k = Matrix::from_ints(q(), &[&[1, -1]]).kernel_basis();
        assert_eq!(k, Subspace::from_vectors(q(), 2, vec![vec![q().int(1), q().int(1)]]));
    }

    #[test]
    fn solving() {
        let id = Matrix::identity(q(), 2);
        let rhs = vec![q().int(3), q().int(-1)];
        assert_eq!(id.solve(&rhs).unwrap(), Some(rhs.clone()));
        let col = Matrix::from_ints(q(), &[&[1], &[1]]);
        assert_eq!(col.solve(&[q().int(1), q().int(2)]).unwrap(), None);
        let f5 = FieldCtx::new(5).unwrap();
        let two = Matrix::from_ints(f5, &[&[2]]);
        assert_eq!(two.solve(&[f5.int(1)]).unwrap(), Some(vec![f5.int(3)]));
    }

    #[test]
    fn subspace_lattice() {
        let v = |x: &[i64]| x.iter().map(|&i| q().int(i)).collect::<Vec<_>>();
        let a = Subspace::from_vectors(q(), 3, vec![v(&[1, 1, 0])]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        let b = Subspace::from_vectors(q(), 3, vec![v(&[1, 1, 1]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b).unwrap(), a);
        let e1 = Subspace::coordinate(q(), 2, &[0]);
        let e2 = Subspace::coordinate(q(), 2, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(q(), 2));
        assert!(a.sum(&e1).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.dot(&inv), Matrix::identity(q(), 2));
        assert!(Matrix::from_ints(q(), &[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
