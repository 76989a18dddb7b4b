//! Finite abelian groups `G = Z_{s_1} x ... x Z_{s_d}`, their characters,
//! Haar integration on the (self-dual) character set, coset decompositions
//! for subgroup sampling, and finite point-group actions used by the
//! crystallographic reduction.
//!
//! Infinite groups such as `Z^d` are modelled by periodization: pick orders
//! `s_i` and work on the finite torus. Every "essential inf/sup over the
//! dual group" then becomes an exact min/max over the `|G|` characters.
//!
//! Elements and characters are enumerated lexicographically in coordinates
//! (last coordinate fastest); this order is part of the file format.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::fmt;

/// A finite abelian group given as a product of cyclic factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    orders: Vec<usize>,
}

/// An element of a [`GroupSpec`], stored as one residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<usize>);

/// A character index; finite abelian groups are self-dual, so the index
/// space coincides with the element space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DualIndex(Vec<usize>);

impl GroupElement {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl DualIndex {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for DualIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, coords: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

impl GroupSpec {
    /// Builds `Z_{s_1} x ... x Z_{s_d}`. Every order must be at least 1.
    pub fn new(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidGroup("at least one cyclic factor required".into()));
        }
        if let Some(bad) = orders.iter().find(|&&s| s == 0) {
            return Err(Error::InvalidGroup(format!("cyclic order must be >= 1, got {bad}")));
        }
        Ok(GroupSpec { orders: orders.to_vec() })
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// `|G|`.
    pub fn cardinality(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Validates coordinates against the factor orders.
    pub fn element_from_coords(&self, coords: &[usize]) -> Result<GroupElement> {
        self.check_coords(coords)?;
        Ok(GroupElement(coords.to_vec()))
    }

    pub fn dual_from_coords(&self, coords: &[usize]) -> Result<DualIndex> {
        self.check_coords(coords)?;
        Ok(DualIndex(coords.to_vec()))
    }

    fn check_coords(&self, coords: &[usize]) -> Result<()> {
        if coords.len() != self.rank() {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        for (i, (&c, &s)) in coords.iter().zip(&self.orders).enumerate() {
            if c >= s {
                return Err(Error::Domain(format!(
                    "coordinate {i} out of range: {c} >= {s}"
                )));
            }
        }
        Ok(())
    }

    /// Element at position `index` in the lexicographic enumeration.
    pub fn element(&self, index: usize) -> GroupElement {
        GroupElement(self.decompose(index))
    }

    pub fn dual(&self, index: usize) -> DualIndex {
        DualIndex(self.decompose(index))
    }

    fn decompose(&self, index: usize) -> Vec<usize> {
        assert!(index < self.cardinality(), "index {index} out of range");
        let mut coords = vec![0; self.rank()];
        let mut rem = index;
        for i in (0..self.rank()).rev() {
            coords[i] = rem % self.orders[i];
            rem /= self.orders[i];
        }
        coords
    }

    fn compose(&self, coords: &[usize]) -> usize {
        let mut idx = 0;
        for (c, s) in coords.iter().zip(&self.orders) {
            idx = idx * s + c;
        }
        idx
    }

    /// Position of `g` in the lexicographic enumeration.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        self.compose(&g.0)
    }

    pub fn dual_index_of(&self, xi: &DualIndex) -> usize {
        self.compose(&xi.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.cardinality()).map(|i| self.element(i))
    }

    pub fn duals(&self) -> impl Iterator<Item = DualIndex> + '_ {
        (0..self.cardinality()).map(|i| self.dual(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert_eq!(a.0.len(), self.rank());
        debug_assert_eq!(b.0.len(), self.rank());
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &s)| (x + y) % s)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &s)| (s - x) % s)
                .collect(),
        )
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &s)| (x + s - y) % s)
                .collect(),
        )
    }

    /// Index arithmetic shortcut for `element(i) - element(j)`.
    pub fn index_sub(&self, i: usize, j: usize) -> usize {
        let a = self.decompose(i);
        let b = self.decompose(j);
        let mut idx = 0;
        for ((x, y), s) in a.iter().zip(&b).zip(&self.orders) {
            idx = idx * s + (x + s - y) % s;
        }
        idx
    }

    /// Index arithmetic shortcut for `element(i) + element(j)`.
    pub fn index_add(&self, i: usize, j: usize) -> usize {
        let a = self.decompose(i);
        let b = self.decompose(j);
        let mut idx = 0;
        for ((x, y), s) in a.iter().zip(&b).zip(&self.orders) {
            idx = idx * s + (x + y) % s;
        }
        idx
    }

    pub fn index_neg(&self, i: usize) -> usize {
        let a = self.decompose(i);
        let mut idx = 0;
        for (x, s) in a.iter().zip(&self.orders) {
            idx = idx * s + (s - x) % s;
        }
        idx
    }

    /// The pairing `<g, xi> = prod_i exp(2 pi i g_i xi_i / s_i)`, a unit
    /// complex number.
    pub fn character_value(&self, g: &GroupElement, xi: &DualIndex) -> Result<Complex64> {
        self.check_coords(&g.0)?;
        self.check_coords(&xi.0)?;
        Ok(self.character_unchecked(&g.0, &xi.0))
    }

    pub(crate) fn character_unchecked(&self, g: &[usize], xi: &[usize]) -> Complex64 {
        // Reduce each factor's phase mod s_i before converting to radians.
        let mut frac = 0.0_f64;
        for ((&gi, &xii), &s) in g.iter().zip(xi).zip(&self.orders) {
            frac += ((gi * xii) % s) as f64 / s as f64;
        }
        Complex64::from_polar(1.0, TAU * frac.fract())
    }

    /// `(1/|G|) sum_xi X(xi)` — the normalized Haar integral over the dual
    /// group (`mu(G^) = 1`).
    pub fn haar_integral<F>(&self, mut x: F) -> Complex64
    where
        F: FnMut(&DualIndex) -> Complex64,
    {
        let mut acc = Complex64::new(0.0, 0.0);
        for xi in self.duals() {
            acc += x(&xi);
        }
        acc / self.cardinality() as f64
    }

    /// Decomposes `G` into cosets of the subgroup `H = t_1 Z_{s_1} x ... x
    /// t_d Z_{s_d}` picked out by the strides `t_i` (each must divide its
    /// order). The index is `L = prod t_i` and the canonical representatives
    /// are all coordinate tuples with `coords[i] < t_i`.
    pub fn coset_decompose(&self, strides: &[usize]) -> Result<CosetDecomposition> {
        if strides.len() != self.rank() {
            return Err(Error::InvalidSubgroup(format!(
                "expected {} strides, got {}",
                self.rank(),
                strides.len()
            )));
        }
        for (&t, &s) in strides.iter().zip(&self.orders) {
            if t == 0 || s % t != 0 {
                return Err(Error::InvalidSubgroup(format!(
                    "stride {t} does not divide order {s}"
                )));
            }
        }
        let sub_orders: Vec<usize> = self
            .orders
            .iter()
            .zip(strides)
            .map(|(&s, &t)| s / t)
            .collect();
        let subgroup = GroupSpec::new(&sub_orders)?;
        let rep_spec = GroupSpec::new(strides)?;
        let representatives: Vec<GroupElement> = rep_spec.elements().collect();
        Ok(CosetDecomposition {
            parent: self.clone(),
            strides: strides.to_vec(),
            subgroup,
            representatives,
        })
    }
}

/// A partition of `G` into `L` cosets `g_l + H` of a stride subgroup `H`.
#[derive(Debug, Clone)]
pub struct CosetDecomposition {
    parent: GroupSpec,
    strides: Vec<usize>,
    subgroup: GroupSpec,
    representatives: Vec<GroupElement>,
}

impl CosetDecomposition {
    pub fn parent(&self) -> &GroupSpec {
        &self.parent
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    /// `H` as a group in its own right, `H ~ Z_{s_1/t_1} x ...`.
    pub fn subgroup(&self) -> &GroupSpec {
        &self.subgroup
    }

    /// The index `L = prod t_i`.
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// Coset representatives in lexicographic order, starting with 0.
    pub fn representatives(&self) -> &[GroupElement] {
        &self.representatives
    }

    /// Maps an element of the abstract subgroup into the parent group.
    pub fn embed(&self, h: &GroupElement) -> GroupElement {
        GroupElement(
            h.coords()
                .iter()
                .zip(&self.strides)
                .map(|(&c, &t)| c * t)
                .collect(),
        )
    }

    /// Writes `g = g_l + embed(h)` and returns `(l, h)`; the decomposition
    /// is unique, which is exactly the coset partition property.
    pub fn decompose(&self, g: &GroupElement) -> (usize, GroupElement) {
        let mut rep = Vec::with_capacity(g.coords().len());
        let mut h = Vec::with_capacity(g.coords().len());
        for (&c, &t) in g.coords().iter().zip(&self.strides) {
            rep.push(c % t);
            h.push(c / t);
        }
        let rep_spec = GroupSpec { orders: self.strides.clone() };
        (rep_spec.compose(&rep), GroupElement(h))
    }
}

/// A finite group of integer matrices acting on group coordinates; the
/// discretized point group `Gamma` of a crystallographic group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointAction {
    orders: Vec<usize>,
    matrices: Vec<Vec<Vec<i64>>>,
}

impl PointAction {
    /// Validates that the matrices form a group of integer-orthogonal maps
    /// compatible with the torus: the first entry must be the identity, the
    /// list must be closed under products and inverses, and each map must
    /// descend to the quotient `Z_{s_1} x ... x Z_{s_d}`.
    pub fn new(orders: &[usize], matrices: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let d = orders.len();
        if matrices.is_empty() {
            return Err(Error::InvalidAction("empty point group".into()));
        }
        for (k, m) in matrices.iter().enumerate() {
            if m.len() != d || m.iter().any(|row| row.len() != d) {
                return Err(Error::InvalidAction(format!("matrix {k} is not {d}x{d}")));
            }
        }
        if !is_identity(&matrices[0]) {
            return Err(Error::InvalidAction("first element must be the identity".into()));
        }
        for (k, m) in matrices.iter().enumerate() {
            if !is_identity(&mat_mul(&transpose(m), m)) {
                return Err(Error::InvalidAction(format!(
                    "matrix {k} is not orthogonal over the integers"
                )));
            }
            // Well-defined on the quotient: s_j * m[i][j] = 0 mod s_i.
            for i in 0..d {
                for j in 0..d {
                    let v = (orders[j] as i64) * m[i][j];
                    if v.rem_euclid(orders[i] as i64) != 0 {
                        return Err(Error::InvalidAction(format!(
                            "matrix {k} does not preserve the torus lattice"
                        )));
                    }
                }
            }
        }
        let action = PointAction { orders: orders.to_vec(), matrices };
        for i in 0..action.matrices.len() {
            for j in 0..action.matrices.len() {
                if action.compose_index(i, j).is_none() {
                    return Err(Error::InvalidAction(format!(
                        "not closed under composition: product of elements {i} and {j} missing"
                    )));
                }
            }
            if action.inverse_index(i).is_none() {
                return Err(Error::InvalidAction(format!("element {i} has no listed inverse")));
            }
        }
        Ok(action)
    }

    /// The cyclic rotation group C_4 = {I, R, R^2, R^3} on `Z_s x Z_s`.
    pub fn c4(s: usize) -> Result<Self> {
        let i = vec![vec![1, 0], vec![0, 1]];
        let r = vec![vec![0, -1], vec![1, 0]];
        let r2 = vec![vec![-1, 0], vec![0, -1]];
        let r3 = vec![vec![0, 1], vec![-1, 0]];
        PointAction::new(&[s, s], vec![i, r, r2, r3])
    }

    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn matrices(&self) -> &[Vec<Vec<i64>>] {
        &self.matrices
    }

    /// Index of `matrices[i] * matrices[j]` in the list, if present.
    pub fn compose_index(&self, i: usize, j: usize) -> Option<usize> {
        let prod = mat_mul(&self.matrices[i], &self.matrices[j]);
        self.matrices.iter().position(|m| *m == prod)
    }

    pub fn inverse_index(&self, i: usize) -> Option<usize> {
        let inv = transpose(&self.matrices[i]); // orthogonal: inverse = transpose
        self.matrices.iter().position(|m| *m == inv)
    }

    /// `gamma_k * g` reduced modulo the orders.
    pub fn act(&self, k: usize, g: &GroupElement) -> GroupElement {
        GroupElement(apply_mod(&self.matrices[k], g.coords(), &self.orders))
    }

    /// `gamma_k^T * g` reduced modulo the orders.
    pub fn act_transpose(&self, k: usize, g: &GroupElement) -> GroupElement {
        let t = transpose(&self.matrices[k]);
        GroupElement(apply_mod(&t, g.coords(), &self.orders))
    }

    /// Applies `gamma_k` to raw coordinates modulo an arbitrary modulus
    /// vector; used to act on sampling grids finer than the group itself.
    pub(crate) fn act_raw(&self, k: usize, coords: &[usize], moduli: &[usize]) -> Vec<usize> {
        apply_mod(&self.matrices[k], coords, moduli)
    }

    pub(crate) fn act_transpose_raw(&self, k: usize, coords: &[usize], moduli: &[usize]) -> Vec<usize> {
        let t = transpose(&self.matrices[k]);
        apply_mod(&t, coords, moduli)
    }
}

fn apply_mod(m: &[Vec<i64>], coords: &[usize], moduli: &[usize]) -> Vec<usize> {
    let d = coords.len();
    let mut out = vec![0usize; d];
    for i in 0..d {
        let mut acc: i64 = 0;
        for j in 0..d {
            acc += m[i][j] * coords[j] as i64;
        }
        out[i] = acc.rem_euclid(moduli[i] as i64) as usize;
    }
    out
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = m.len();
    (0..d).map(|i| (0..d).map(|j| m[j][i]).collect()).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = a.len();
    (0..d)
        .map(|i| (0..d).map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn is_identity(m: &[Vec<i64>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_group_cardinalities() {
        assert_eq!(GroupSpec::new(&[4]).unwrap().cardinality(), 4);
        assert_eq!(GroupSpec::new(&[2, 3]).unwrap().cardinality(), 6);
        assert_eq!(GroupSpec::new(&[16, 16]).unwrap().cardinality(), 256);
    }

    #[test]
    fn zero_order_rejected() {
        assert!(matches!(GroupSpec::new(&[4, 0]), Err(Error::InvalidGroup(_))));
        assert!(matches!(GroupSpec::new(&[]), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let g = GroupSpec::new(&[2, 3]).unwrap();
        let coords: Vec<Vec<usize>> = g.elements().map(|e| e.coords().to_vec()).collect();
        assert_eq!(
            coords,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2]
            ]
        );
        for (i, e) in g.elements().enumerate() {
            assert_eq!(g.index_of(&e), i);
        }
    }

    #[test]
    fn character_values() {
        let z4 = GroupSpec::new(&[4]).unwrap();
        let g = z4.element_from_coords(&[1]).unwrap();
        let xi = z4.dual_from_coords(&[1]).unwrap();
        let w = z4.character_value(&g, &xi).unwrap();
        assert!((w - Complex64::new(0.0, 1.0)).norm() < 1e-14);

        // g = 0 pairs to 1 with every character.
        for xi in z4.duals() {
            let v = z4.character_value(&z4.zero(), &xi).unwrap();
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        }

        let z22 = GroupSpec::new(&[2, 2]).unwrap();
        let g = z22.element_from_coords(&[1, 1]).unwrap();
        let xi = z22.dual_from_coords(&[1, 1]).unwrap();
        let v = z22.character_value(&g, &xi).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn character_out_of_range_is_domain_error() {
        let z4 = GroupSpec::new(&[4]).unwrap();
        let z8 = GroupSpec::new(&[8]).unwrap();
        let g = z8.element_from_coords(&[5]).unwrap();
        let xi = z4.dual_from_coords(&[1]).unwrap();
        assert!(matches!(z4.character_value(&g, &xi), Err(Error::Domain(_))));
    }

    #[test]
    fn haar_integral_examples() {
        let z2 = GroupSpec::new(&[2]).unwrap();
        let one = z2.haar_integral(|_| Complex64::new(1.0, 0.0));
        assert!((one - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        let mean = z2.haar_integral(|xi| {
            if xi.coords()[0] == 0 {
                Complex64::new(2.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        assert!((mean - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        // Character orthogonality: the mean of a nontrivial character is 0.
        let z4 = GroupSpec::new(&[4]).unwrap();
        let g = z4.element_from_coords(&[1]).unwrap();
        let v = z4.haar_integral(|xi| z4.character_unchecked(g.coords(), xi.coords()));
        assert!(v.norm() < 1e-14);
    }

    #[test]
    fn character_orthogonality_small_groups() {
        for orders in [vec![5], vec![2, 3], vec![4, 4], vec![2, 2, 2]] {
            let g = GroupSpec::new(&orders).unwrap();
            for a in g.elements() {
                for b in g.elements() {
                    let v = g.haar_integral(|xi| {
                        g.character_unchecked(a.coords(), xi.coords())
                            * g.character_unchecked(b.coords(), xi.coords()).conj()
                    });
                    let expected = if a == b { 1.0 } else { 0.0 };
                    assert!(
                        (v - Complex64::new(expected, 0.0)).norm() < 1e-12,
                        "orthogonality failed for {a} vs {b} on {orders:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn coset_decompose_z12() {
        let z12 = GroupSpec::new(&[12]).unwrap();
        let d = z12.coset_decompose(&[3]).unwrap();
        assert_eq!(d.index(), 3);
        assert_eq!(d.subgroup().orders(), &[4]);
        let reps: Vec<usize> = d.representatives().iter().map(|r| r.coords()[0]).collect();
        assert_eq!(reps, vec![0, 1, 2]);
        // H = {0, 3, 6, 9}.
        let h: Vec<usize> = d
            .subgroup()
            .elements()
            .map(|e| d.embed(&e).coords()[0])
            .collect();
        assert_eq!(h, vec![0, 3, 6, 9]);
    }

    #[test]
    fn coset_decompose_trivial_and_z2xz2() {
        let z4 = GroupSpec::new(&[4]).unwrap();
        let d = z4.coset_decompose(&[1]).unwrap();
        assert_eq!(d.index(), 1);
        assert_eq!(d.representatives()[0], z4.zero());

        let z22 = GroupSpec::new(&[2, 2]).unwrap();
        let d = z22.coset_decompose(&[1, 2]).unwrap();
        assert_eq!(d.index(), 2);
        let reps: Vec<Vec<usize>> = d.representatives().iter().map(|r| r.coords().to_vec()).collect();
        assert_eq!(reps, vec![vec![0, 0], vec![0, 1]]);
        // H = {(0,0), (1,0)}.
        let h: Vec<Vec<usize>> = d
            .subgroup()
            .elements()
            .map(|e| d.embed(&e).coords().to_vec())
            .collect();
        assert_eq!(h, vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn coset_partition_is_exact() {
        let g = GroupSpec::new(&[12, 4]).unwrap();
        let d = g.coset_decompose(&[3, 2]).unwrap();
        assert_eq!(d.index(), 6);
        for e in g.elements() {
            let (l, h) = d.decompose(&e);
            let back = g.add(&d.representatives()[l], &d.embed(&h));
            assert_eq!(back, e);
            // Membership in exactly one coset.
            let mut hits = 0;
            for rep in d.representatives() {
                let diff = g.sub(&e, rep);
                let in_h = diff
                    .coords()
                    .iter()
                    .zip(d.strides())
                    .all(|(&c, &t)| c % t == 0);
                if in_h {
                    hits += 1;
                }
            }
            assert_eq!(hits, 1, "element {e} must lie in exactly one coset");
        }
    }

    #[test]
    fn non_dividing_stride_rejected() {
        let z12 = GroupSpec::new(&[12]).unwrap();
        assert!(matches!(z12.coset_decompose(&[5]), Err(Error::InvalidSubgroup(_))));
        assert!(matches!(z12.coset_decompose(&[0]), Err(Error::InvalidSubgroup(_))));
    }

    #[test]
    fn c4_action_on_z4_squared() {
        let act = PointAction::c4(4).unwrap();
        assert_eq!(act.order(), 4);
        let g = GroupSpec::new(&[4, 4]).unwrap();
        let e = g.element_from_coords(&[1, 0]).unwrap();
        // Identity leaves elements alone.
        assert_eq!(act.act(0, &e), e);
        // 90-degree rotation: (1,0) -> (0,1).
        let r = act.act(1, &e);
        assert_eq!(r.coords(), &[0, 1]);
        // Fourth power is the identity on every element.
        for e in g.elements() {
            let mut cur = e.clone();
            for _ in 0..4 {
                cur = act.act(1, &cur);
            }
            assert_eq!(cur, e);
        }
    }

    #[test]
    fn point_action_closure_and_inverses() {
        let act = PointAction::c4(8).unwrap();
        for i in 0..act.order() {
            assert!(act.inverse_index(i).is_some());
            for j in 0..act.order() {
                let k = act.compose_index(i, j).expect("closed");
                // Composed action equals the listed element's action.
                let g = GroupSpec::new(&[8, 8]).unwrap();
                for e in g.elements().take(16) {
                    assert_eq!(act.act(i, &act.act(j, &e)), act.act(k, &e));
                }
            }
        }
    }

    #[test]
    fn non_orthogonal_matrix_rejected() {
        let shear = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1], vec![0, 1]]];
        assert!(matches!(
            PointAction::new(&[4, 4], shear),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn incompatible_orders_rejected() {
        // A 90-degree rotation cannot act on Z_4 x Z_2.
        let rot = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, -1], vec![1, 0]]];
        assert!(matches!(
            PointAction::new(&[4, 2], rot),
            Err(Error::InvalidAction(_))
        ));
    }
}
