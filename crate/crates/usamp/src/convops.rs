//! Convolution systems `A: l^2_N(G) -> l^2_M(G)` and their operator
//! algebra: translation, adjoint (via the involution `a*(g) = conj(a(-g))`),
//! composition, inversion, and the spectral criteria read off the transfer
//! field.
//!
//! On a finite group every "essential inf/sup" is an exact min/max over
//! the `|G|` characters; the margins reported here are raw numbers and the
//! caller decides recoverability against a tolerance.

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::linalg::{self, CMatrix};
use crate::spectral::{inverse_fourier, transfer_field, Signal, SignalBundle, Spectrum, TransferField};
use num_complex::Complex64;

/// An `M x N` matrix of signals defining a convolution system.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvMatrix {
    group: GroupSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Signal>, // row-major
}

impl ConvMatrix {
    pub fn new(group: GroupSpec, rows: usize, cols: usize, entries: Vec<Signal>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Contract("convolution matrix needs positive dimensions".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Contract(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|s| *s.group() != group) {
            return Err(Error::Contract("all entries must live on the same group".into()));
        }
        Ok(ConvMatrix { group, rows, cols, entries })
    }

    pub fn from_fn<F>(group: GroupSpec, rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Signal,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for m in 0..rows {
            for n in 0..cols {
                entries.push(f(m, n));
            }
        }
        ConvMatrix { group, rows, cols, entries }
    }

    /// The identity system: deltas at 0 on the diagonal.
    pub fn identity(group: GroupSpec, n: usize) -> Self {
        let zero = group.zero();
        ConvMatrix::from_fn(group.clone(), n, n, |r, c| {
            if r == c {
                Signal::delta(group.clone(), &zero)
            } else {
                Signal::zeros(group.clone())
            }
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, m: usize, n: usize) -> &Signal {
        &self.entries[m * self.cols + n]
    }

    pub fn entries(&self) -> &[Signal] {
        &self.entries
    }

    /// Column `m` as an `N`-channel bundle (the vector `b_m` whose
    /// translates the system synthesizes).
    pub fn column_bundle(&self, col: usize) -> SignalBundle {
        let channels = (0..self.rows).map(|r| self.entry(r, col).clone()).collect();
        SignalBundle::new(channels).expect("entries share the group")
    }

    pub fn transfer(&self) -> TransferField {
        transfer_field(self)
    }

    /// Reconstructs the time-domain matrix from a transfer field by
    /// entrywise inverse Fourier transform.
    pub fn from_transfer(t: &TransferField) -> Self {
        let group = t.group().clone();
        ConvMatrix::from_fn(group, t.rows(), t.cols(), |r, c| {
            inverse_fourier(&t.entry_spectrum(r, c))
        })
    }
}

/// `(T_g x)(h) = x(h - g)`.
pub fn translate(x: &Signal, g: &GroupElement) -> Signal {
    let spec = x.group().clone();
    let gi = spec.index_of(g);
    let n = spec.cardinality();
    let mut values = vec![Complex64::new(0.0, 0.0); n];
    for h in 0..n {
        values[h] = x.values()[spec.index_sub(h, gi)];
    }
    Signal::new(spec, values).expect("translate preserves length")
}

/// Applies `T_g` to every channel.
pub fn translate_bundle(x: &SignalBundle, g: &GroupElement) -> SignalBundle {
    SignalBundle::new(x.channels().iter().map(|s| translate(s, g)).collect())
        .expect("translation preserves the group")
}

/// Scalar convolution `(a * x)(g) = sum_{g'} a(g - g') x(g')`.
pub fn convolve_signals(a: &Signal, x: &Signal) -> Signal {
    assert_eq!(a.group(), x.group(), "convolution operands must share the group");
    let spec = a.group().clone();
    let n = spec.cardinality();
    let mut values = vec![Complex64::new(0.0, 0.0); n];
    for g in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for gp in 0..n {
            acc += a.values()[spec.index_sub(g, gp)] * x.values()[gp];
        }
        values[g] = acc;
    }
    Signal::new(spec, values).expect("convolution preserves length")
}

/// Matrix convolution: channel `m` of the output is
/// `sum_n (a_{m,n} * x_n)`.
pub fn convolve(a: &ConvMatrix, x: &SignalBundle) -> Result<SignalBundle> {
    if x.len() != a.cols() {
        return Err(Error::Contract(format!(
            "system expects {} input channels, got {}",
            a.cols(),
            x.len()
        )));
    }
    if x.group() != a.group() {
        return Err(Error::Contract("system and input live on different groups".into()));
    }
    let mut channels = Vec::with_capacity(a.rows());
    for m in 0..a.rows() {
        let mut acc = Signal::zeros(a.group().clone());
        for n in 0..a.cols() {
            acc = acc.add(&convolve_signals(a.entry(m, n), x.channel(n)));
        }
        channels.push(acc);
    }
    SignalBundle::new(channels)
}

/// The matrix of the adjoint operator: transposed, with each entry run
/// through the involution `a*(g) = conj(a(-g))`. Its transfer field is
/// `A^(xi)*`.
pub fn adjoint(a: &ConvMatrix) -> ConvMatrix {
    let spec = a.group().clone();
    let n = spec.cardinality();
    ConvMatrix::from_fn(spec.clone(), a.cols(), a.rows(), |r, c| {
        let src = a.entry(c, r);
        let values = (0..n)
            .map(|g| src.values()[spec.index_neg(g)].conj())
            .collect();
        Signal::new(spec.clone(), values).expect("involution preserves length")
    })
}

/// Composition `(B A)(x) = B * (A * x)`; the transfer field is the
/// pointwise product `B^(xi) A^(xi)`.
pub fn compose(b: &ConvMatrix, a: &ConvMatrix) -> Result<ConvMatrix> {
    if b.cols() != a.rows() {
        return Err(Error::Contract(format!(
            "inner dimensions mismatch: {}x{} after {}x{}",
            b.rows(),
            b.cols(),
            a.rows(),
            a.cols()
        )));
    }
    if b.group() != a.group() {
        return Err(Error::Contract("composed systems live on different groups".into()));
    }
    let spec = a.group().clone();
    Ok(ConvMatrix::from_fn(spec.clone(), b.rows(), a.cols(), |k, n| {
        let mut acc = Signal::zeros(spec.clone());
        for m in 0..b.cols() {
            acc = acc.add(&convolve_signals(b.entry(k, m), a.entry(m, n)));
        }
        acc
    }))
}

/// `||A|| = max_xi ||A^(xi)||_2`.
pub fn operator_norm(a: &ConvMatrix) -> f64 {
    transfer_field(a)
        .matrices()
        .iter()
        .map(linalg::spectral_norm)
        .fold(0.0, f64::max)
}

/// `delta_A = min_xi det[A^(xi)* A^(xi)]`, the recoverability constant.
/// Real up to rounding; strictly positive iff the system is injective
/// with closed range.
pub fn injectivity_margin(a: &ConvMatrix) -> f64 {
    gram_det_margin(&transfer_field(a), false).0
}

/// `min_xi det[A^(xi) A^(xi)*]`; strictly positive iff the system is onto.
pub fn surjectivity_margin(a: &ConvMatrix) -> f64 {
    gram_det_margin(&transfer_field(a), true).0
}

/// Shared scan for the two margins; `flip` selects `A A*` over `A* A`.
/// Returns the minimum determinant and the index of the attaining
/// character.
pub(crate) fn gram_det_margin(t: &TransferField, flip: bool) -> (f64, usize) {
    let mut best = f64::INFINITY;
    let mut arg = 0;
    for (i, m) in t.matrices().iter().enumerate() {
        let gram = if flip {
            m.mul(&m.adjoint())
        } else {
            m.adjoint().mul(m)
        };
        let d = linalg::det(&gram).expect("Gram matrices are square").re;
        if d < best {
            best = d;
            arg = i;
        }
    }
    (best, arg)
}

/// Inverse of a square convolution system. Requires `M = N` and
/// `min_xi |det A^(xi)|` above the tolerance; the result has transfer
/// field `A^(xi)^{-1}`.
pub fn invert(a: &ConvMatrix, tol: f64) -> Result<ConvMatrix> {
    if a.rows() != a.cols() {
        return Err(Error::Contract(format!(
            "only square systems can be inverted, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let t = transfer_field(a);
    let singular: Vec<usize> = t
        .matrices()
        .iter()
        .enumerate()
        .filter(|(_, m)| linalg::det(m).expect("square").norm() <= tol)
        .map(|(i, _)| i)
        .collect();
    if let Some(&first) = singular.first() {
        return Err(Error::SingularSystem {
            count: singular.len(),
            first: a.group().dual(first),
        });
    }
    let mats: Vec<CMatrix> = t
        .matrices()
        .iter()
        .map(|m| linalg::inverse(m).expect("non-singular by the scan above"))
        .collect();
    let inv_field = TransferField::new(a.group().clone(), a.cols(), a.rows(), mats)?;
    Ok(ConvMatrix::from_transfer(&inv_field))
}

/// Fourier-domain application of a system: per character,
/// `y^(xi) = A^(xi) x^(xi)`. Used as an independent evaluation route in
/// tests and kept close to the operator definition.
pub fn apply_via_transfer(a: &ConvMatrix, x: &SignalBundle) -> Result<SignalBundle> {
    if x.len() != a.cols() || x.group() != a.group() {
        return Err(Error::Contract("dimension or group mismatch".into()));
    }
    let t = transfer_field(a);
    let spectra: Vec<Spectrum> = x.channels().iter().map(crate::spectral::fourier).collect();
    let card = a.group().cardinality();
    let mut out_specs: Vec<Vec<Complex64>> = vec![vec![Complex64::new(0.0, 0.0); card]; a.rows()];
    for xi in 0..card {
        let vin: Vec<Complex64> = spectra.iter().map(|s| s.values()[xi]).collect();
        let vout = t.at(xi).mul_vec(&vin);
        for (m, v) in vout.into_iter().enumerate() {
            out_specs[m][xi] = v;
        }
    }
    let channels = out_specs
        .into_iter()
        .map(|vals| inverse_fourier(&Spectrum::new(a.group().clone(), vals).expect("length")))
        .collect();
    SignalBundle::new(channels)
}
