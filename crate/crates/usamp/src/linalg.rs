//! Small dense complex-matrix kernels: Hermitian eigendecomposition
//! (cyclic Jacobi), LU determinant/inverse, spectral norm, and the
//! Moore-Penrose pseudo-inverse.
//!
//! Everything here runs on per-character matrices whose sizes stay in the
//! single digits, so robustness and determinism win over speed.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Relative rank threshold: eigenvalues of `A* A` below
/// `DEFAULT_RANK_TOL * lambda_max` are treated as zero.
pub const DEFAULT_RANK_TOL: f64 = 1e-12;

const MAX_JACOBI_SWEEPS: usize = 64;

/// A dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        CMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Contract("ragged rows in matrix literal".into()));
        }
        Ok(CMatrix { rows: r, cols: c, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must match");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn scale(&self, k: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * k)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max |H - H*|` entrywise.
    pub fn hermitian_deviation(&self) -> f64 {
        if self.rows != self.cols {
            return f64::INFINITY;
        }
        let mut dev = 0.0_f64;
        for r in 0..self.rows {
            for c in 0..self.cols {
                dev = dev.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        dev
    }
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(h: &CMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(h)?.0)
}

/// Full Hermitian eigendecomposition by cyclic Jacobi. Returns the
/// eigenvalues ascending and the unitary matrix whose columns are the
/// matching eigenvectors.
pub fn hermitian_eigen(h: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    if h.rows != h.cols {
        return Err(Error::Contract(format!(
            "hermitian_eigen requires a square matrix, got {}x{}",
            h.rows, h.cols
        )));
    }
    let n = h.rows;
    let scale = h.max_abs().max(1.0);
    let dev = h.hermitian_deviation();
    if dev > 1e-10 * scale {
        return Err(Error::NonHermitian { deviation: dev });
    }

    // Work on the exactly-Hermitian average of H and H*.
    let mut a = CMatrix::from_fn(n, n, |r, c| 0.5 * (h.get(r, c) + h.get(c, r).conj()));
    let mut q = CMatrix::identity(n);
    if n > 1 {
        let fro = a.frobenius();
        let stop = (f64::EPSILON * fro).max(f64::MIN_POSITIVE);
        for _sweep in 0..MAX_JACOBI_SWEEPS {
            let mut off = 0.0_f64;
            for r in 0..n {
                for c in (r + 1)..n {
                    off += a.get(r, c).norm_sqr();
                }
            }
            if (2.0 * off).sqrt() <= stop {
                break;
            }
            for p in 0..n - 1 {
                for r in p + 1..n {
                    jacobi_rotate(&mut a, &mut q, p, r);
                }
            }
        }
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a.get(i, i).re, i)).collect();
    pairs.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite eigenvalues"));
    let values: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| q.get(r, pairs[c].1));
    Ok((values, vectors))
}

/// One Jacobi rotation zeroing the (p, r) pivot of the Hermitian matrix
/// `a`, accumulated into `q`.
fn jacobi_rotate(a: &mut CMatrix, q: &mut CMatrix, p: usize, r: usize) {
    let n = a.rows;
    let gamma = a.get(p, r);
    let g = gamma.norm();
    if g == 0.0 {
        return;
    }
    let u = gamma / g;
    let alpha = a.get(p, p).re;
    let beta = a.get(r, r).re;
    let tau = (beta - alpha) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let su = u * s;

    for k in 0..n {
        if k == p || k == r {
            continue;
        }
        let akp = a.get(k, p);
        let akr = a.get(k, r);
        let new_p = akp * c - akr * su.conj();
        let new_r = akp * su + akr * c;
        a.set(k, p, new_p);
        a.set(k, r, new_r);
        a.set(p, k, new_p.conj());
        a.set(r, k, new_r.conj());
    }
    a.set(p, p, Complex64::new(alpha - t * g, 0.0));
    a.set(r, r, Complex64::new(beta + t * g, 0.0));
    a.set(p, r, Complex64::new(0.0, 0.0));
    a.set(r, p, Complex64::new(0.0, 0.0));

    for k in 0..n {
        let qkp = q.get(k, p);
        let qkr = q.get(k, r);
        q.set(k, p, qkp * c - qkr * su.conj());
        q.set(k, r, qkp * su + qkr * c);
    }
}

/// Determinant via LU with partial pivoting.
pub fn det(a: &CMatrix) -> Result<Complex64> {
    if a.rows != a.cols {
        return Err(Error::Contract(format!(
            "det requires a square matrix, got {}x{}",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    let mut m = a.clone();
    let mut d = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let (pivot, pmag) = (k..n)
            .map(|i| (i, m.get(i, k).norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).expect("finite entries"))
            .expect("non-empty column");
        if pmag == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if pivot != k {
            for j in 0..n {
                let tmp = m.get(k, j);
                m.set(k, j, m.get(pivot, j));
                m.set(pivot, j, tmp);
            }
            d = -d;
        }
        let diag = m.get(k, k);
        d *= diag;
        for i in k + 1..n {
            let f = m.get(i, k) / diag;
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in k..n {
                let v = m.get(i, j) - f * m.get(k, j);
                m.set(i, j, v);
            }
        }
    }
    Ok(d)
}

/// Inverse of a square matrix via LU with partial pivoting.
pub fn inverse(a: &CMatrix) -> Result<CMatrix> {
    if a.rows != a.cols {
        return Err(Error::Contract(format!(
            "inverse requires a square matrix, got {}x{}",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    let mut m = a.clone();
    let mut inv = CMatrix::identity(n);
    for k in 0..n {
        let (pivot, pmag) = (k..n)
            .map(|i| (i, m.get(i, k).norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).expect("finite entries"))
            .expect("non-empty column");
        if pmag == 0.0 {
            return Err(Error::SingularMatrix { lambda_min: 0.0 });
        }
        if pivot != k {
            for j in 0..n {
                let tmp = m.get(k, j);
                m.set(k, j, m.get(pivot, j));
                m.set(pivot, j, tmp);
                let tmp = inv.get(k, j);
                inv.set(k, j, inv.get(pivot, j));
                inv.set(pivot, j, tmp);
            }
        }
        let diag = m.get(k, k);
        for j in 0..n {
            m.set(k, j, m.get(k, j) / diag);
            inv.set(k, j, inv.get(k, j) / diag);
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = m.get(i, k);
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                let v = m.get(i, j) - f * m.get(k, j);
                m.set(i, j, v);
                let v = inv.get(i, j) - f * inv.get(k, j);
                inv.set(i, j, v);
            }
        }
    }
    Ok(inv)
}

/// Largest singular value, `sqrt(lambda_max(A* A))`.
pub fn spectral_norm(a: &CMatrix) -> f64 {
    if a.rows == 0 || a.cols == 0 {
        return 0.0;
    }
    // Use the smaller Gram matrix of the two.
    let gram = if a.rows < a.cols {
        a.mul(&a.adjoint())
    } else {
        a.adjoint().mul(a)
    };
    let eig = hermitian_eigenvalues(&gram).expect("Gram matrices are Hermitian");
    eig.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Moore-Penrose pseudo-inverse `(A* A)^{-1} A*` of a full-column-rank
/// matrix, with the default rank tolerance.
pub fn pseudo_inverse(a: &CMatrix) -> Result<CMatrix> {
    pseudo_inverse_tol(a, DEFAULT_RANK_TOL)
}

/// Pseudo-inverse with an explicit relative rank tolerance against
/// `lambda_max(A* A)`.
pub fn pseudo_inverse_tol(a: &CMatrix, rank_rel_tol: f64) -> Result<CMatrix> {
    let gram = a.adjoint().mul(a);
    let (values, vectors) = hermitian_eigen(&gram)?;
    let lambda_min = values.first().copied().unwrap_or(0.0);
    let lambda_max = values.last().copied().unwrap_or(0.0);
    if lambda_min <= rank_rel_tol * lambda_max || lambda_max == 0.0 {
        return Err(Error::SingularMatrix { lambda_min });
    }
    // (A* A)^{-1} = V diag(1/lambda) V*.
    let n = gram.rows();
    let mut gram_inv = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, lambda) in values.iter().enumerate() {
                acc += vectors.get(i, k) * vectors.get(j, k).conj() / lambda;
            }
            gram_inv.set(i, j, acc);
        }
    }
    Ok(gram_inv.mul(&a.adjoint()))
}
