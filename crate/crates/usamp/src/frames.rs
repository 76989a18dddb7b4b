//! Frame-theoretic analysis of translate systems and construction of left
//! inverses.
//!
//! For a system `A` the translates of the involuted columns form a frame
//! for `l^2_N(G)` exactly when `delta_A = min_xi det[A^* A^] > 0`; the
//! optimal bounds are the extreme eigenvalues of `A^(xi)* A^(xi)` over the
//! characters. Left inverses are parametrized by
//! `B^ = A^+ + C (I - A^ A^+)`; the pure pseudo-inverse (`C = 0`)
//! minimizes the Bessel bound of the reconstruction family.

use crate::convops::ConvMatrix;
use crate::error::{Error, Result};
use crate::group::DualIndex;
use crate::linalg::{self, CMatrix};
use crate::spectral::{fourier, inverse_fourier, transfer_field, Signal, SignalBundle, Spectrum, TransferField};
use num_complex::Complex64;
use serde::Serialize;

/// Two systems are accepted as a dual pair when
/// `max_xi ||B^ A^ - I||_max` stays below this.
pub const DUALITY_TOL: f64 = 1e-9;

/// Spectral summary of a translate system.
#[derive(Debug, Clone, Serialize)]
pub struct FrameReport {
    /// Optimal upper (Bessel) bound `beta = max_xi lambda_max`.
    pub bessel: f64,
    /// Optimal lower bound `alpha = min_xi lambda_min`.
    pub lower: f64,
    /// Recoverability constant `delta = min_xi det[A^* A^]`.
    pub delta: f64,
    pub is_bessel: bool,
    pub is_frame: bool,
    pub is_riesz: bool,
    /// Character attaining the minimal eigenvalue; the stability
    /// bottleneck of the design.
    pub worst_xi: DualIndex,
}

/// Optimal Bessel bound of the translate family synthesized by `B`:
/// `beta_B = max_xi ||B^(xi)||_2^2`.
pub fn bessel_bound(b: &ConvMatrix) -> f64 {
    transfer_field(b)
        .matrices()
        .iter()
        .map(|m| {
            let s = linalg::spectral_norm(m);
            s * s
        })
        .fold(0.0, f64::max)
}

/// Exact min/max scan of the frame criteria over all characters; flags are
/// decided against `tol`.
pub fn frame_analysis(a: &ConvMatrix, tol: f64) -> FrameReport {
    let t = transfer_field(a);
    frame_analysis_of_transfer(&t, a.rows() == a.cols(), tol)
}

pub(crate) fn frame_analysis_of_transfer(
    t: &TransferField,
    square: bool,
    tol: f64,
) -> FrameReport {
    let mut lower = f64::INFINITY;
    let mut upper = 0.0_f64;
    let mut delta = f64::INFINITY;
    let mut min_abs_det = f64::INFINITY;
    let mut worst = 0usize;
    for (i, m) in t.matrices().iter().enumerate() {
        let gram = m.adjoint().mul(m);
        let eig = linalg::hermitian_eigenvalues(&gram).expect("Gram is Hermitian");
        let lo = eig.first().copied().unwrap_or(0.0);
        let hi = eig.last().copied().unwrap_or(0.0);
        if lo < lower {
            lower = lo;
            worst = i;
        }
        upper = upper.max(hi);
        delta = delta.min(linalg::det(&gram).expect("square").re);
        if square {
            min_abs_det = min_abs_det.min(linalg::det(m).expect("square").norm());
        }
    }
    FrameReport {
        bessel: upper,
        lower: lower.max(0.0),
        delta,
        is_bessel: upper.is_finite(),
        is_frame: delta > tol,
        is_riesz: square && min_abs_det > tol,
        worst_xi: t.group().dual(worst),
    }
}

/// Checks `B^(xi) A^(xi) = I_N` across all characters and returns the
/// maximal entrywise deviation next to the verdict at [`DUALITY_TOL`].
pub fn is_dual_pair(a: &ConvMatrix, b: &ConvMatrix) -> Result<(bool, f64)> {
    if b.cols() != a.rows() || b.rows() != a.cols() {
        return Err(Error::Contract(format!(
            "dual candidate must be {}x{}, got {}x{}",
            a.cols(),
            a.rows(),
            b.rows(),
            b.cols()
        )));
    }
    if a.group() != b.group() {
        return Err(Error::Contract("systems live on different groups".into()));
    }
    let ta = transfer_field(a);
    let tb = transfer_field(b);
    let id = CMatrix::identity(a.cols());
    let mut dev = 0.0_f64;
    for xi in 0..a.group().cardinality() {
        dev = dev.max(tb.at(xi).mul(ta.at(xi)).sub(&id).max_abs());
    }
    Ok((dev <= DUALITY_TOL, dev))
}

/// Builds a left inverse `B` of `A` from the family
/// `B^ = A^+ + C (I_M - A^ A^+)`; `C = None` selects the Moore-Penrose
/// choice, whose Bessel bound `1/alpha_A` is the best possible.
pub fn left_inverse(a: &ConvMatrix, c: Option<&TransferField>, tol: f64) -> Result<ConvMatrix> {
    let t = transfer_field(a);
    if let Some(cf) = c {
        if cf.rows() != a.cols() || cf.cols() != a.rows() {
            return Err(Error::Contract(format!(
                "C must be {}x{}, got {}x{}",
                a.cols(),
                a.rows(),
                cf.rows(),
                cf.cols()
            )));
        }
        if cf.group() != a.group() {
            return Err(Error::Contract("C lives on a different group".into()));
        }
        if cf.matrices().iter().any(|m| !m.max_abs().is_finite()) {
            return Err(Error::Contract("C must have finite (bounded) entries".into()));
        }
    }
    let report = frame_analysis_of_transfer(&t, a.rows() == a.cols(), tol);
    if report.delta <= tol {
        return Err(Error::NotRecoverable {
            delta: report.delta,
            worst: report.worst_xi,
        });
    }
    let id = CMatrix::identity(a.rows());
    let mats: Vec<CMatrix> = (0..a.group().cardinality())
        .map(|xi| {
            let ahat = t.at(xi);
            let pinv = linalg::pseudo_inverse(ahat).expect("full rank by the margin check");
            match c {
                None => pinv,
                Some(cf) => {
                    let proj = id.sub(&ahat.mul(&pinv));
                    let corr = cf.at(xi).mul(&proj);
                    CMatrix::from_fn(pinv.rows(), pinv.cols(), |r, cc| {
                        pinv.get(r, cc) + corr.get(r, cc)
                    })
                }
            }
        })
        .collect();
    let field = TransferField::new(a.group().clone(), a.cols(), a.rows(), mats)?;
    Ok(ConvMatrix::from_transfer(&field))
}

/// Which frame bound a witness should attain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremal {
    Lower,
    Upper,
}

/// A bundle whose Rayleigh quotient `||A * x||^2 / ||x||^2` attains the
/// requested optimal frame bound: its spectrum is supported on the
/// extremal character, along the extremal eigenvector of `A^* A^` there.
pub fn extremal_witness(a: &ConvMatrix, which: Extremal) -> Result<SignalBundle> {
    let t = transfer_field(a);
    let card = a.group().cardinality();
    let mut best = match which {
        Extremal::Lower => f64::INFINITY,
        Extremal::Upper => f64::NEG_INFINITY,
    };
    let mut arg = 0usize;
    let mut vector = vec![Complex64::new(0.0, 0.0); a.cols()];
    for xi in 0..card {
        let gram = t.at(xi).adjoint().mul(t.at(xi));
        let (values, vectors) = linalg::hermitian_eigen(&gram)?;
        let (lambda, col) = match which {
            Extremal::Lower => (values[0], 0),
            Extremal::Upper => (*values.last().expect("non-empty"), values.len() - 1),
        };
        let better = match which {
            Extremal::Lower => lambda < best,
            Extremal::Upper => lambda > best,
        };
        if better {
            best = lambda;
            arg = xi;
            vector = (0..a.cols()).map(|i| vectors.get(i, col)).collect();
        }
    }
    let scale = Complex64::new(card as f64, 0.0);
    let channels = (0..a.cols())
        .map(|n| {
            let mut values = vec![Complex64::new(0.0, 0.0); card];
            values[arg] = vector[n] * scale;
            inverse_fourier(&Spectrum::new(a.group().clone(), values).expect("length"))
        })
        .collect();
    SignalBundle::new(channels)
}

/// `[A(x)]_m(g) = <x, T_g a*_m>`: evaluates the analysis pairing directly
/// from inner products against translated adjoint columns. Slow; used to
/// confirm the analysis-synthesis identity.
pub fn analysis_inner_products(a: &ConvMatrix, x: &SignalBundle) -> Result<SignalBundle> {
    if x.len() != a.cols() || x.group() != a.group() {
        return Err(Error::Contract("dimension or group mismatch".into()));
    }
    let adj = crate::convops::adjoint(a);
    let spec = a.group().clone();
    let channels: Vec<Signal> = (0..a.rows())
        .map(|m| {
            let col = adj.column_bundle(m);
            Signal::from_fn(spec.clone(), |g| {
                let shifted = crate::convops::translate_bundle(&col, g);
                x.channels()
                    .iter()
                    .zip(shifted.channels())
                    .map(|(u, v)| u.inner(v))
                    .sum()
            })
        })
        .collect();
    SignalBundle::new(channels)
}

/// Convenience: is the spectrum of `x` supported at a single character?
/// Used by tests that reason about witnesses.
pub fn spectrum_support(x: &Signal, tol: f64) -> Vec<usize> {
    fourier(x)
        .values()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.norm() > tol)
        .map(|(i, _)| i)
        .collect()
}
