//! Minimal dense row-major `f64` matrix.
//!
//! Only what the classifier and embedding need: allocation, row access, and
//! the three matrix-product shapes used by forward/backward passes. The inner
//! loops keep the innermost axis contiguous so the compiler can vectorize
//! them; no BLAS.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "shape does not match data length");
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn fill(&mut self, v: f64) {
        self.data.iter_mut().for_each(|x| *x = v);
    }

    /// `out += a * b` with `a: [m×k]`, `b: [k×n]`, `out: [m×n]`.
    pub fn gemm_nn(out: &mut Mat, a: &Mat, b: &Mat) {
        assert_eq!(a.cols, b.rows);
        assert_eq!(out.rows, a.rows);
        assert_eq!(out.cols, b.cols);
        let n = b.cols;
        for i in 0..a.rows {
            let arow = a.row(i);
            let orow = &mut out.data[i * n..(i + 1) * n];
            for (k, &aik) in arow.iter().enumerate() {
                if aik == 0.0 {
                    continue;
                }
                let brow = &b.data[k * n..(k + 1) * n];
                for (o, &bv) in orow.iter_mut().zip(brow) {
                    *o += aik * bv;
                }
            }
        }
    }

    /// `out += a * bᵀ` with `a: [m×k]`, `b: [n×k]`, `out: [m×n]`.
    pub fn gemm_nt(out: &mut Mat, a: &Mat, b: &Mat) {
        assert_eq!(a.cols, b.cols);
        assert_eq!(out.rows, a.rows);
        assert_eq!(out.cols, b.rows);
        for i in 0..a.rows {
            let arow = a.row(i);
            let orow = out.row_mut(i);
            for (j, o) in orow.iter_mut().enumerate() {
                let brow = b.row(j);
                let mut acc = 0.0;
                for (&av, &bv) in arow.iter().zip(brow) {
                    acc += av * bv;
                }
                *o += acc;
            }
        }
    }

    /// `out += aᵀ * b` with `a: [k×m]`, `b: [k×n]`, `out: [m×n]`.
    pub fn gemm_tn(out: &mut Mat, a: &Mat, b: &Mat) {
        assert_eq!(a.rows, b.rows);
        assert_eq!(out.rows, a.cols);
        assert_eq!(out.cols, b.cols);
        let n = b.cols;
        for k in 0..a.rows {
            let arow = a.row(k);
            let brow = &b.data[k * n..(k + 1) * n];
            for (i, &aki) in arow.iter().enumerate() {
                if aki == 0.0 {
                    continue;
                }
                let orow = &mut out.data[i * n..(i + 1) * n];
                for (o, &bv) in orow.iter_mut().zip(brow) {
                    *o += aki * bv;
                }
            }
        }
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_mul(a: &Mat, b: &Mat) -> Mat {
        let mut out = Mat::zeros(a.rows(), b.cols());
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                let mut s = 0.0;
                for k in 0..a.cols() {
                    s += a.row(i)[k] * b.row(k)[j];
                }
                out.row_mut(i)[j] = s;
            }
        }
        out
    }

    fn transpose(a: &Mat) -> Mat {
        let mut t = Mat::zeros(a.cols(), a.rows());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                t.row_mut(j)[i] = a.row(i)[j];
            }
        }
        t
    }

    fn random_mat(rows: usize, cols: usize, seed: u64) -> Mat {
        let mut r = crate::rng::Rng::new(seed);
        let data = (0..rows * cols).map(|_| r.uniform(-1.0, 1.0)).collect();
        Mat::from_vec(rows, cols, data)
    }

    #[test]
    fn gemm_variants_match_naive_reference() {
        let a = random_mat(4, 7, 1);
        let b = random_mat(7, 5, 2);
        let expect = naive_mul(&a, &b);

        let mut nn = Mat::zeros(4, 5);
        Mat::gemm_nn(&mut nn, &a, &b);
        let mut nt = Mat::zeros(4, 5);
        Mat::gemm_nt(&mut nt, &a, &transpose(&b));
        let mut tn = Mat::zeros(4, 5);
        Mat::gemm_tn(&mut tn, &transpose(&a), &b);

        for out in [&nn, &nt, &tn] {
            for i in 0..4 {
                for j in 0..5 {
                    assert!((out.row(i)[j] - expect.row(i)[j]).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn gemm_accumulates_into_out() {
        let a = random_mat(3, 3, 3);
        let b = random_mat(3, 3, 4);
        let mut out = Mat::zeros(3, 3);
        out.fill(1.0);
        Mat::gemm_nn(&mut out, &a, &b);
        let expect = naive_mul(&a, &b);
        for i in 0..3 {
            for j in 0..3 {
                assert!((out.row(i)[j] - (expect.row(i)[j] + 1.0)).abs() < 1e-12);
            }
        }
    }
}
