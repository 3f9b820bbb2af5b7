//! Dense square complex matrices for representation blocks.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CMatrix {
    pub dim: usize,
    /// row-major
    pub data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        CMatrix { dim, data }
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    pub fn mul(&self, o: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let d = self.dim;
        CMatrix::from_fn(d, |r, c| (0..d).map(|k| self.get(r, k) * o.get(k, c)).sum())
    }

    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    /// Largest entry modulus of `self - o`.
    pub fn max_diff(&self, o: &CMatrix) -> f64 {
        self.data.iter().zip(&o.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `‖A A† − I‖` in the max-entry norm.
    pub fn unitarity_defect(&self) -> f64 {
        self.mul(&self.adjoint()).max_diff(&CMatrix::identity(self.dim))
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.data.chunks(self.dim.max(1)).map(|r| r.to_vec()).collect()
    }
}
