//! Matrices over the integral group ring of a finite group.
//!
//! These express boundary maps of free resolutions. An entry is a
//! coefficient vector indexed by group elements. Three "flattenings" turn
//! them into integer matrices:
//!
//! * [`GRingMatrix::flatten`] — the map on underlying free Z-modules, with
//!   the basis of `ZG^r` ordered as `(j, g) ↦ j·|G| + g`;
//! * [`GRingMatrix::chain_matrix`] — the induced map on `M ⊗_{ZG} ZG^r ≅
//!   M^r` for a left module `M` (group elements act through their
//!   inverses);
//! * [`GRingMatrix::cochain_matrix`] — the induced map on
//!   `Hom_{ZG}(ZG^r, M) ≅ M^r`, which transposes the block layout.
//!
//! Module maps here send `e_j ↦ Σ_i a_{ij}·e_i` (entries act as right
//! multiplication on coordinates, since coordinates are left-module
//! scalars); all three flattenings are functorial for [`GRingMatrix::compose`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::matrix::IntMatrix;

/// An element of `Z[G]`: one coefficient per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVec {
    pub coeffs: Vec<BigInt>,
}

impl GVec {
    pub fn zero(order: usize) -> GVec {
        GVec { coeffs: vec![BigInt::zero(); order] }
    }

    pub fn delta(order: usize, g: usize) -> GVec {
        let mut v = GVec::zero(order);
        v.coeffs[g] = BigInt::from(1);
        v
    }

    pub fn scaled_delta(order: usize, g: usize, c: i64) -> GVec {
        let mut v = GVec::zero(order);
        v.coeffs[g] = BigInt::from(c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &GVec) -> GVec {
        GVec {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> GVec {
        GVec { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// Ring product `self · other` in `Z[G]`.
    pub fn convolve(&self, group: &FiniteGroup, other: &GVec) -> GVec {
        let mut out = GVec::zero(group.order());
        for (g, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (h, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[group.mul(g, h)] += a * b;
            }
        }
        out
    }

    /// Push forward along a group homomorphism.
    pub fn pushforward(&self, hom: &GroupHom) -> GVec {
        let mut out = GVec::zero(hom.target().order());
        for (g, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out.coeffs[hom.apply(g)] += a;
            }
        }
        out
    }

    /// Sum of coefficients (the augmentation `Z[G] → Z`).
    pub fn augment(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Matrix of right multiplication `x ↦ x·self` on `Z[G]` in the group
    /// element basis: entry `(g', g)` is `self[g⁻¹g']`.
    pub fn right_mult_matrix(&self, group: &FiniteGroup) -> IntMatrix {
        let n = group.order();
        IntMatrix::from_fn(n, n, |gp, g| self.coeffs[group.mul(group.inv(g), gp)].clone())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GRingMatrix {
    group: FiniteGroup,
    rows: usize,
    cols: usize,
    data: Vec<GVec>,
}

impl GRingMatrix {
    pub fn zeros(group: &FiniteGroup, rows: usize, cols: usize) -> GRingMatrix {
        GRingMatrix {
            group: group.clone(),
            rows,
            cols,
            data: vec![GVec::zero(group.order()); rows * cols],
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GVec {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GVec) {
        assert_eq!(v.coeffs.len(), self.group.order());
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &GVec) {
        let cur = self.get(i, j).add(v);
        self.set(i, j, cur);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Composition `self ∘ first` of free-module maps (`first` applied
    /// first). Entry `(l, j)` is `Σ_i first_{ij} · self_{li}`, which matches
    /// the flattenings: `flatten(self ∘ first) = flatten(self)·flatten(first)`.
    pub fn compose(&self, first: &GRingMatrix) -> Result<GRingMatrix> {
        if self.group != first.group || self.cols != first.rows {
            return Err(Error::Mismatch("group-ring matrix composition shape mismatch".into()));
        }
        let mut out = GRingMatrix::zeros(&self.group, self.rows, first.cols);
        for l in 0..self.rows {
            for j in 0..first.cols {
                let mut acc = GVec::zero(self.group.order());
                for i in 0..self.cols {
                    let term = first.get(i, j).convolve(&self.group, self.get(l, i));
                    acc = acc.add(&term);
                }
                out.set(l, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &GRingMatrix) -> Result<GRingMatrix> {
        if self.group != other.group || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Mismatch("group-ring matrix addition shape mismatch".into()));
        }
        let mut out = GRingMatrix::zeros(&self.group, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).add(other.get(i, j)));
            }
        }
        Ok(out)
    }

    /// The map on underlying Z-modules, basis `(j, g) ↦ j·|G| + g`.
    pub fn flatten(&self) -> IntMatrix {
        let n = self.group.order();
        let mut out = IntMatrix::zeros(self.rows * n, self.cols * n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = self.get(i, j).right_mult_matrix(&self.group);
                for r in 0..n {
                    for c in 0..n {
                        out.set(i * n + r, j * n + c, block.get(r, c).clone());
                    }
                }
            }
        }
        out
    }

    /// Block `Σ_g α[g]·ρ(g⁻¹)` of an entry α, the action on `M ⊗_{ZG} ZG`.
    fn chain_block(v: &GVec, module: &GModule) -> IntMatrix {
        let mut out = IntMatrix::zeros(module.rank(), module.rank());
        for (g, a) in v.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out = out.add(&module.act_inv(g).scale(a));
            }
        }
        out
    }

    /// Block `Σ_g α[g]·ρ(g)` of an entry α, the action on `Hom_{ZG}(ZG, M)`.
    fn cochain_block(v: &GVec, module: &GModule) -> IntMatrix {
        let mut out = IntMatrix::zeros(module.rank(), module.rank());
        for (g, a) in v.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out = out.add(&module.act(g).scale(a));
            }
        }
        out
    }

    /// Induced map `M^{cols} → M^{rows}` on coefficient chains.
    pub fn chain_matrix(&self, module: &GModule) -> Result<IntMatrix> {
        if module.group() != &self.group {
            return Err(Error::Mismatch("module over a different group".into()));
        }
        let m = module.rank();
        let mut out = IntMatrix::zeros(self.rows * m, self.cols * m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = Self::chain_block(self.get(i, j), module);
                for r in 0..m {
                    for c in 0..m {
                        out.set(i * m + r, j * m + c, block.get(r, c).clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Induced map `M^{rows} → M^{cols}` on coefficient cochains (note the
    /// transposed block layout: cochains are contravariant).
    pub fn cochain_matrix(&self, module: &GModule) -> Result<IntMatrix> {
        if module.group() != &self.group {
            return Err(Error::Mismatch("module over a different group".into()));
        }
        let m = module.rank();
        let mut out = IntMatrix::zeros(self.cols * m, self.rows * m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = Self::cochain_block(self.get(i, j), module);
                for r in 0..m {
                    for c in 0..m {
                        out.set(j * m + r, i * m + c, block.get(r, c).clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Integer matrix of coefficient sums (augmentation of every entry).
    pub fn augmentation_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).augment())
    }

    /// Push every entry forward along a group homomorphism.
    pub fn pushforward(&self, hom: &GroupHom) -> Result<GRingMatrix> {
        if hom.source() != &self.group {
            return Err(Error::Mismatch("pushforward source mismatch".into()));
        }
        let mut out = GRingMatrix::zeros(hom.target(), self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).pushforward(hom));
            }
        }
        Ok(out)
    }

    /// Reassemble a column from a flattened coefficient vector of length
    /// `rows·|G|`.
    pub fn column_from_flat(group: &FiniteGroup, rows: usize, flat: &IntMatrix, col: usize) -> GRingMatrix {
        let n = group.order();
        assert_eq!(flat.rows(), rows * n);
        let mut out = GRingMatrix::zeros(group, rows, 1);
        for i in 0..rows {
            let mut v = GVec::zero(n);
            for g in 0..n {
                v.coeffs[g] = flat.get(i * n + g, col).clone();
            }
            out.set(i, 0, v);
        }
        out
    }

    /// Paste a single-column group-ring matrix into column `col` of `self`.
    pub fn set_column(&mut self, col: usize, column: &GRingMatrix) {
        assert_eq!(column.cols, 1);
        assert_eq!(column.rows, self.rows);
        for i in 0..self.rows {
            self.set(i, col, column.get(i, 0).clone());
        }
    }
}
