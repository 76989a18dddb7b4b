//! Signals on `l^2(G)`, the Fourier transform on finite abelian groups,
//! and transfer fields `xi -> A^(xi)` of convolution systems.
//!
//! The DFT is evaluated by direct summation, `X(xi) = sum_g x(g) <-g, xi>`;
//! at desk scale this is both fast enough and the easiest form to audit
//! against the definition. A transfer field stores all `|G|` matrices
//! explicitly so spectral min/max criteria are exact scans.

use crate::convops::ConvMatrix;
use crate::error::{Error, Result};
use crate::group::{DualIndex, GroupElement, GroupSpec};
use crate::linalg::CMatrix;
use num_complex::Complex64;

/// A complex-valued function on `G`, stored in enumeration order.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    group: GroupSpec,
    values: Vec<Complex64>,
}

impl Signal {
    pub fn new(group: GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != group.cardinality() {
            return Err(Error::Contract(format!(
                "signal length {} does not match |G| = {}",
                values.len(),
                group.cardinality()
            )));
        }
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Contract("signal entries must be finite".into()));
        }
        Ok(Signal { group, values })
    }

    pub fn zeros(group: GroupSpec) -> Self {
        let n = group.cardinality();
        Signal { group, values: vec![Complex64::new(0.0, 0.0); n] }
    }

    /// The delta at `g`.
    pub fn delta(group: GroupSpec, g: &GroupElement) -> Self {
        let mut s = Signal::zeros(group);
        let idx = s.group.index_of(g);
        s.values[idx] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn from_fn<F>(group: GroupSpec, mut f: F) -> Self
    where
        F: FnMut(&GroupElement) -> Complex64,
    {
        let values = group.elements().map(|g| f(&g)).collect();
        Signal { group, values }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value_at(&self, g: &GroupElement) -> Complex64 {
        self.values[self.group.index_of(g)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `<x, y> = sum_g x(g) conj(y(g))`, conjugate-linear in the second
    /// argument.
    pub fn inner(&self, other: &Signal) -> Complex64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    pub fn add(&self, other: &Signal) -> Signal {
        Signal {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Signal) -> Signal {
        Signal {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: Complex64) -> Signal {
        Signal {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }
}

/// An `N`-channel signal, an element of `l^2_N(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalBundle {
    group: GroupSpec,
    channels: Vec<Signal>,
}

impl SignalBundle {
    pub fn new(channels: Vec<Signal>) -> Result<Self> {
        let group = channels
            .first()
            .ok_or_else(|| Error::Contract("bundle needs at least one channel".into()))?
            .group()
            .clone();
        if channels.iter().any(|s| *s.group() != group) {
            return Err(Error::Contract("all channels must share one group".into()));
        }
        Ok(SignalBundle { group, channels })
    }

    pub fn zeros(group: GroupSpec, n: usize) -> Self {
        let channels = (0..n).map(|_| Signal::zeros(group.clone())).collect();
        SignalBundle { group, channels }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.channels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.channels.is_empty()
    }

    pub fn channel(&self, n: usize) -> &Signal {
        &self.channels[n]
    }

    pub fn channels(&self) -> &[Signal] {
        &self.channels
    }

    pub fn norm_sqr(&self) -> f64 {
        self.channels.iter().map(Signal::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn sub(&self, other: &SignalBundle) -> SignalBundle {
        SignalBundle {
            group: self.group.clone(),
            channels: self
                .channels
                .iter()
                .zip(&other.channels)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

/// A complex-valued function on the dual group, in enumeration order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    group: GroupSpec,
    values: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(group: GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != group.cardinality() {
            return Err(Error::Contract(format!(
                "spectrum length {} does not match |G^| = {}",
                values.len(),
                group.cardinality()
            )));
        }
        Ok(Spectrum { group, values })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value_at(&self, xi: &DualIndex) -> Complex64 {
        self.values[self.group.dual_index_of(xi)]
    }
}

/// `X(xi) = sum_g x(g) <-g, xi>`.
pub fn fourier(x: &Signal) -> Spectrum {
    let g = x.group();
    let n = g.cardinality();
    let mut values = vec![Complex64::new(0.0, 0.0); n];
    let elems: Vec<GroupElement> = g.elements().collect();
    for (xi_idx, xi) in g.duals().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (g_idx, e) in elems.iter().enumerate() {
            acc += x.values[g_idx] * g.character_unchecked(e.coords(), xi.coords()).conj();
        }
        values[xi_idx] = acc;
    }
    Spectrum { group: g.clone(), values }
}

/// `x(g) = (1/|G|) sum_xi X(xi) <g, xi>`.
pub fn inverse_fourier(x: &Spectrum) -> Signal {
    let g = x.group();
    let n = g.cardinality();
    let scale = 1.0 / n as f64;
    let mut values = vec![Complex64::new(0.0, 0.0); n];
    let duals: Vec<DualIndex> = g.duals().collect();
    for (g_idx, e) in g.elements().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (xi_idx, xi) in duals.iter().enumerate() {
            acc += x.values[xi_idx] * g.character_unchecked(e.coords(), xi.coords());
        }
        values[g_idx] = acc * scale;
    }
    Signal { group: g.clone(), values }
}

/// The field of per-character matrices of a convolution system; all
/// spectral criteria read from it.
#[derive(Debug, Clone)]
pub struct TransferField {
    group: GroupSpec,
    rows: usize,
    cols: usize,
    mats: Vec<CMatrix>,
}

impl TransferField {
    pub fn new(group: GroupSpec, rows: usize, cols: usize, mats: Vec<CMatrix>) -> Result<Self> {
        if mats.len() != group.cardinality() {
            return Err(Error::Contract(format!(
                "expected {} matrices, got {}",
                group.cardinality(),
                mats.len()
            )));
        }
        if mats.iter().any(|m| m.rows() != rows || m.cols() != cols) {
            return Err(Error::Contract("transfer matrices must share dimensions".into()));
        }
        Ok(TransferField { group, rows, cols, mats })
    }

    pub fn zeros(group: GroupSpec, rows: usize, cols: usize) -> Self {
        let n = group.cardinality();
        TransferField {
            group,
            rows,
            cols,
            mats: vec![CMatrix::zeros(rows, cols); n],
        }
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

    /// Matrix at the character with enumeration index `xi_idx`.
    pub fn at(&self, xi_idx: usize) -> &CMatrix {
        &self.mats[xi_idx]
    }

    pub fn at_dual(&self, xi: &DualIndex) -> &CMatrix {
        &self.mats[self.group.dual_index_of(xi)]
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.mats
    }

    /// The scalar field of one entry, as a spectrum.
    pub fn entry_spectrum(&self, r: usize, c: usize) -> Spectrum {
        Spectrum {
            group: self.group.clone(),
            values: self.mats.iter().map(|m| m.get(r, c)).collect(),
        }
    }
}

/// Entrywise Fourier transform of a convolution matrix:
/// `A^(xi) = [a^_{m,n}(xi)]`.
pub fn transfer_field(a: &ConvMatrix) -> TransferField {
    let group = a.group().clone();
    let n = group.cardinality();
    let (rows, cols) = (a.rows(), a.cols());
    let spectra: Vec<Spectrum> = (0..rows * cols)
        .map(|i| fourier(a.entry(i / cols, i % cols)))
        .collect();
    let mats = (0..n)
        .map(|xi| CMatrix::from_fn(rows, cols, |r, c| spectra[r * cols + c].values[xi]))
        .collect();
    TransferField { group, rows, cols, mats }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn delta_transforms_to_constant() {
        let z2 = GroupSpec::new(&[2]).unwrap();
        let x = Signal::delta(z2.clone(), &z2.zero());
        let spec = fourier(&x);
        assert!((spec.values()[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((spec.values()[1] - c(1.0, 0.0)).norm() < 1e-15);

        let g1 = z2.element_from_coords(&[1]).unwrap();
        let x = Signal::delta(z2, &g1);
        let spec = fourier(&x);
        assert!((spec.values()[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((spec.values()[1] - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn z4_dft_matches_direct_four_term_sum() {
        // Oracle: X(xi) = sum_g x(g) exp(-2 pi i g xi / 4) expanded by hand.
        let z4 = GroupSpec::new(&[4]).unwrap();
        let vals = vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)];
        let x = Signal::new(z4, vals).unwrap();
        let spec = fourier(&x);
        let expected = [c(10.0, 0.0), c(-2.0, 2.0), c(-2.0, 0.0), c(-2.0, -2.0)];
        for (got, want) in spec.values().iter().zip(expected) {
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn inverse_of_constant_spectrum_is_delta() {
        let z8 = GroupSpec::new(&[8]).unwrap();
        let spec = Spectrum::new(z8.clone(), vec![c(1.0, 0.0); 8]).unwrap();
        let x = inverse_fourier(&spec);
        let delta = Signal::delta(z8, &GroupSpec::new(&[8]).unwrap().zero());
        assert!(x.sub(&delta).norm() < 1e-13);
    }

    #[test]
    fn inverse_of_two_point_example() {
        let z2 = GroupSpec::new(&[2]).unwrap();
        let spec = Spectrum::new(z2.clone(), vec![c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        let x = inverse_fourier(&spec);
        assert!((x.values()[0]).norm() < 1e-15);
        assert!((x.values()[1] - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn round_trip_random_16() {
        let g = GroupSpec::new(&[4, 4]).unwrap();
        let x = Signal::from_fn(g, |e| {
            let k = e.coords()[0] * 4 + e.coords()[1];
            c((k as f64 * 0.37).sin(), (k as f64 * 0.91).cos())
        });
        let back = inverse_fourier(&fourier(&x));
        assert!(x.sub(&back).norm() <= 1e-12 * x.norm().max(1.0));
    }

    #[test]
    fn plancherel_identity() {
        let g = GroupSpec::new(&[16]).unwrap();
        let x = Signal::from_fn(g.clone(), |e| {
            let k = e.coords()[0] as f64;
            c((k * 1.3).sin() + 0.2, (k * 0.7).cos())
        });
        let spec = fourier(&x);
        let lhs = x.norm_sqr();
        let rhs = spec.values().iter().map(|z| z.norm_sqr()).sum::<f64>() / g.cardinality() as f64;
        assert!((lhs - rhs).abs() <= 1e-10 * lhs);
    }

    #[test]
    fn transfer_field_of_identity_filter() {
        let z4 = GroupSpec::new(&[4]).unwrap();
        let a = ConvMatrix::identity(z4.clone(), 1);
        let t = transfer_field(&a);
        for xi in 0..4 {
            assert!((t.at(xi).get(0, 0) - c(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn transfer_field_matches_entrywise_fourier() {
        let z4 = GroupSpec::new(&[4]).unwrap();
        let entries = vec![
            Signal::from_fn(z4.clone(), |e| c(e.coords()[0] as f64, 0.5)),
            Signal::from_fn(z4.clone(), |e| c(1.0, e.coords()[0] as f64 * -0.25)),
        ];
        let a = ConvMatrix::new(z4.clone(), 2, 1, entries.clone()).unwrap();
        let t = transfer_field(&a);
        for (m, entry) in entries.iter().enumerate() {
            let spec = fourier(entry);
            for xi in 0..4 {
                assert!((t.at(xi).get(m, 0) - spec.values()[xi]).norm() < 1e-13);
            }
        }
    }
}
