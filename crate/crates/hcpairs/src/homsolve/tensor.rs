use std::fmt;

use crate::exactla::{FieldCtx, Matrix, Scalar};

/// Bilinear map k^left x k^right -> k^even stored densely as c[i][j][x].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketTensor {
    ctx: FieldCtx,
    left: usize,
    right: usize,
    even: usize,
    data: Vec<Scalar>,
}

impl BracketTensor {
    pub fn zero(ctx: FieldCtx, left: usize, right: usize, even: usize) -> Self {
        BracketTensor { ctx, left, right, even, data: vec![ctx.zero(); left * right * even] }
    }

    /// Square tensor on a single module.
    pub fn zero_square(ctx: FieldCtx, n: usize, even: usize) -> Self {
        Self::zero(ctx, n, n, even)
    }

    pub fn from_flat(ctx: FieldCtx, left: usize, right: usize, even: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), left * right * even);
        BracketTensor { ctx, left, right, even, data }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn even(&self) -> usize {
        self.even
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn index(&self, i: usize, j: usize, x: usize) -> usize {
        (i * self.right + j) * self.even + x
    }

    pub fn get(&self, i: usize, j: usize, x: usize) -> &Scalar {
        &self.data[self.index(i, j, x)]
    }

    /// The even vector [e_i, e_j].
    pub fn pair(&self, i: usize, j: usize) -> &[Scalar] {
        let s = self.index(i, j, 0);
        &self.data[s..s + self.even]
    }

    pub fn set(&mut self, i: usize, j: usize, x: usize, v: Scalar) {
        let k = self.index(i, j, x);
        self.data[k] = v;
    }

    pub fn set_pair(&mut self, i: usize, j: usize, v: &[Scalar]) {
        for (x, s) in v.iter().enumerate() {
            self.set(i, j, x, s.clone());
        }
    }

    /// Sets c[i][j] and c[j][i] to the same vector.
    pub fn set_sym(&mut self, i: usize, j: usize, v: &[Scalar]) {
        self.set_pair(i, j, v);
        self.set_pair(j, i, v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.left == self.right
            && (0..self.left).all(|i| (0..i).all(|j| self.pair(i, j) == self.pair(j, i)))
    }

    pub fn is_alternating(&self) -> bool {
        self.left == self.right
            && (0..self.left).all(|i| {
                self.pair(i, i).iter().all(Scalar::is_zero)
                    && (0..i).all(|j| self.pair(i, j).iter().zip(self.pair(j, i)).all(|(a, b)| (a + b).is_zero()))
            })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        BracketTensor { data: self.data.iter().map(|x| x * s).collect(), ..self.clone() }
    }

    pub fn add(&self, o: &BracketTensor) -> Self {
        assert_eq!((self.left, self.right, self.even), (o.left, o.right, o.even));
        BracketTensor { data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(), ..self.clone() }
    }

    /// [v, w] for coordinate vectors.
    pub fn eval(&self, v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.ctx.zero(); self.even];
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, wj) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let s = vi * wj;
                for (o, c) in out.iter_mut().zip(self.pair(i, j)) {
                    if !c.is_zero() {
                        *o = &*o + &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// Pulls back along linear maps: (v, w) -> self(a v, b w).
    pub fn pullback(&self, a: &Matrix, b: &Matrix) -> Self {
        let mut out = Self::zero(self.ctx, a.cols(), b.cols(), self.even);
        for i in 0..a.cols() {
            for j in 0..b.cols() {
                let v = self.eval(&a.col(i), &b.col(j));
                out.set_pair(i, j, &v);
            }
        }
        out
    }

    /// Pushes forward along a linear map of the even space.
    pub fn push(&self, f: &Matrix) -> Self {
        let mut out = Self::zero(self.ctx, self.left, self.right, f.rows());
        for i in 0..self.left {
            for j in 0..self.right {
                out.set_pair(i, j, &f.mul_vec(self.pair(i, j)));
            }
        }
        out
    }

    /// Nonzero entries (i, j, x, value).
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.left {
            for j in 0..self.right {
                for (x, v) in self.pair(i, j).iter().enumerate() {
                    if !v.is_zero() {
                        out.push((i, j, x, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// Span of all values [e_i, e_j].
    pub fn image(&self) -> crate::exactla::Subspace {
        let vecs = (0..self.left).flat_map(|i| (0..self.right).map(move |j| (i, j))).map(|(i, j)| self.pair(i, j).to_vec()).collect();
        crate::exactla::Subspace::from_vectors(self.ctx, self.even, vecs)
    }

    /// Block embedding: places this tensor at offsets inside a larger zero tensor.
    pub fn embed(&self, left: usize, right: usize, off_l: usize, off_r: usize) -> Self {
        let mut out = Self::zero(self.ctx, left, right, self.even);
        for i in 0..self.left {
            for j in 0..self.right {
                out.set_pair(off_l + i, off_r + j, self.pair(i, j));
            }
        }
        out
    }

    /// Symmetric square tensor (v, w) -> self(v0, w1) + self(w0, v1) on the direct sum of the
    /// two sides, for a tensor pairing two different modules.
    pub fn symmetrize_blocks(&self) -> Self {
        let n = self.left + self.right;
        let mut out = Self::zero(self.ctx, n, n, self.even);
        for i in 0..self.left {
            for j in 0..self.right {
                out.set_sym(i, self.left + j, self.pair(i, j));
            }
        }
        out
    }
}

impl fmt::Display for BracketTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, x, v) in self.entries() {
            writeln!(f, "[{i},{j}]_{x} = {v}")?;
        }
        Ok(())
    }
}
