//! Comparison maps between free resolutions.
//!
//! [`lift_chain_map`] lifts a group homomorphism `φ: G → G'` to an
//! equivariant chain map between resolutions, degree by degree: each
//! component is one integer linear solve against the flattened target
//! boundary, so it exists whenever the target is exact. Different pivot
//! seeds give different (chain-homotopic) lifts.
//!
//! [`DiagonalApprox`] stores an approximation to the diagonal `R → R ⊗ R`
//! as explicit tensors `c·(g₁ e_s ⊗ g₂ e_t)`; it is built either by
//! lifting the identity into the restriction of `R ⊗ R` along `G → G × G`
//! (small groups) or, for tensor resolutions, by combining the factors'
//! diagonals with the middle-interchange Koszul sign.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gring::GRingMatrix;
use crate::group::{product, FiniteGroup, GroupStructure};
use crate::hom::GroupHom;
use crate::matrix::IntMatrix;
use crate::resolution::{
    restrict_resolution, tensor_resolution, FreeResolution, TensorLayout,
};
use crate::snf::LinearSystem;

/// An equivariant chain map `f: R_source → R_target` over a group
/// homomorphism, with components `f_0 .. f_n` as matrices over the target
/// group ring.
#[derive(Clone, Debug)]
pub struct ChainMap {
    hom: GroupHom,
    components: Vec<GRingMatrix>,
}

impl ChainMap {
    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, k: usize) -> &GRingMatrix {
        &self.components[k]
    }
}

fn ring_column_flat(m: &GRingMatrix, j: usize) -> Vec<BigInt> {
    let n = m.group().order();
    let mut out = Vec::with_capacity(m.rows() * n);
    for i in 0..m.rows() {
        out.extend(m.get(i, j).coeffs.iter().cloned());
    }
    out
}

/// Lift `hom` to a chain map `source → target` in degrees `0..=up_to`.
pub fn lift_chain_map(
    source: &FreeResolution,
    target: &FreeResolution,
    hom: &GroupHom,
    up_to: usize,
    seed: u64,
) -> Result<ChainMap> {
    if hom.source() != source.group() || hom.target() != target.group() {
        return Err(Error::Mismatch("homomorphism does not connect the resolutions".into()));
    }
    if source.length() < up_to || target.length() < up_to {
        return Err(Error::Mismatch(format!(
            "resolutions too short for a lift to degree {up_to}"
        )));
    }
    let gt = target.group();
    let nt = gt.order();

    // degree 0: ε_target ∘ f_0 = ε_source
    let aug_sys = LinearSystem::new(target.augmentation_flat());
    let mut f0 = GRingMatrix::zeros(gt, target.rank(0), source.rank(0));
    for j in 0..source.rank(0) {
        let rhs = vec![source.augmentation()[j].clone()];
        let y = aug_sys
            .solve(&rhs, seed)
            .ok_or_else(|| Error::Unsolvable("augmentation cannot be matched".into()))?;
        let col = IntMatrix::from_columns(target.rank(0) * nt, vec![y]);
        let col_ring = GRingMatrix::column_from_flat(gt, target.rank(0), &col, 0);
        f0.set_column(j, &col_ring);
    }
    let mut components = vec![f0];

    for k in 1..=up_to {
        let pushed = source.boundary(k).pushforward(hom)?;
        let rhs_ring = components[k - 1].compose(&pushed)?;
        let sys = LinearSystem::new(target.boundary(k).flatten());
        let mut fk = GRingMatrix::zeros(gt, target.rank(k), source.rank(k));
        for j in 0..source.rank(k) {
            let rhs = ring_column_flat(&rhs_ring, j);
            let y = sys.solve(&rhs, seed).ok_or_else(|| {
                Error::Unsolvable(format!("no lift in degree {k}: target not exact?"))
            })?;
            let col = IntMatrix::from_columns(target.rank(k) * nt, vec![y]);
            let col_ring = GRingMatrix::column_from_flat(gt, target.rank(k), &col, 0);
            fk.set_column(j, &col_ring);
        }
        // chain condition f_{k-1} ∘ d_k = d_k ∘ f_k
        let lhs = rhs_ring;
        let rhs2 = target.boundary(k).compose(&fk)?;
        if lhs != rhs2 {
            return Err(Error::Unsolvable(format!("lift at degree {k} is not a chain map")));
        }
        components.push(fk);
    }
    Ok(ChainMap { hom: hom.clone(), components })
}

/// One tensor `c · (g₁ e_s ⊗ g₂ e_t)` is keyed by `(p₁, s, t, g₁, g₂)`
/// inside a fixed total degree `k` (so `e_s` has degree `p₁`, `e_t` degree
/// `k − p₁`).
pub type DiagTerms = BTreeMap<(usize, usize, usize, usize, usize), BigInt>;

fn add_term(map: &mut DiagTerms, key: (usize, usize, usize, usize, usize), c: BigInt) {
    let entry = map.entry(key).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&key);
    }
}

/// A diagonal approximation for a resolution `R` of a group `G`: a chain
/// map `R → R ⊗ R` lifting the identity, stored termwise.
#[derive(Clone, Debug)]
pub struct DiagonalApprox {
    group: FiniteGroup,
    ranks: Vec<usize>,
    /// `terms[k][j]` describes the image of the degree-`k` basis element
    /// `e_j`.
    terms: Vec<Vec<DiagTerms>>,
}

impl DiagonalApprox {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn max_degree(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn image_of(&self, k: usize, j: usize) -> &DiagTerms {
        &self.terms[k][j]
    }

    /// Verify the chain-map identity `Δ∘d = (d⊗1 ± 1⊗d)∘Δ` in all stored
    /// degrees and the counit normalization in degree 0.
    pub fn validate(&self, res: &FreeResolution) -> Result<()> {
        if res.group() != &self.group || res.ranks()[..self.ranks.len()] != self.ranks[..] {
            return Err(Error::Mismatch("diagonal does not belong to this resolution".into()));
        }
        if res.rank(0) != 1 {
            return Err(Error::Mismatch("diagonal needs a rank-1 degree 0".into()));
        }
        let total: BigInt = self.terms[0][0].values().sum();
        if !total.is_one() {
            return Err(Error::InvalidGroup("diagonal counit is not 1".into()));
        }
        let g = &self.group;
        for k in 1..=self.max_degree() {
            let d = res.boundary(k);
            for j in 0..res.rank(k) {
                // left side: Δ_{k-1}(d_k e_j), acting diagonally
                let mut lhs = DiagTerms::new();
                for i in 0..res.rank(k - 1) {
                    let alpha = d.get(i, j);
                    for (gg, c) in alpha.coeffs.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (&(p1, s, t, g1, g2), c2) in &self.terms[k - 1][i] {
                            add_term(
                                &mut lhs,
                                (p1, s, t, g.mul(gg, g1), g.mul(gg, g2)),
                                c * c2,
                            );
                        }
                    }
                }
                // right side: boundary of R⊗R applied to Δ_k(e_j)
                let mut rhs = DiagTerms::new();
                for (&(p1, s, t, g1, g2), c) in &self.terms[k][j] {
                    let p2 = k - p1;
                    if p1 >= 1 {
                        let da = res.boundary(p1);
                        for s2 in 0..res.rank(p1 - 1) {
                            let beta = da.get(s2, s);
                            for (h, cb) in beta.coeffs.iter().enumerate() {
                                if !cb.is_zero() {
                                    add_term(&mut rhs, (p1 - 1, s2, t, g.mul(g1, h), g2), c * cb);
                                }
                            }
                        }
                    }
                    if p2 >= 1 {
                        let db = res.boundary(p2);
                        let sign = if p1 % 2 == 1 { -BigInt::one() } else { BigInt::one() };
                        for t2 in 0..res.rank(p2 - 1) {
                            let beta = db.get(t2, t);
                            for (h, cb) in beta.coeffs.iter().enumerate() {
                                if !cb.is_zero() {
                                    add_term(&mut rhs, (p1, s, t2, g1, g.mul(g2, h)), c * cb * &sign);
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::InvalidGroup(format!(
                        "diagonal fails the chain condition at degree {k}, column {j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Build a diagonal approximation by lifting the identity into the
/// restriction of `R ⊗ R` along the diagonal embedding `G → G × G`.
/// Requires `|G|² ≤ 64`.
pub fn diagonal_by_restriction(
    res: &FreeResolution,
    up_to: usize,
    seed: u64,
) -> Result<DiagonalApprox> {
    let g = res.group();
    let n = g.order();
    if res.length() < up_to {
        return Err(Error::Mismatch("resolution too short for the requested diagonal".into()));
    }
    let square = product(g, g)?; // enforces the order budget
    let r2 = tensor_resolution(&square, res, res, up_to.max(1))?;
    // diagonal subgroup; element (x, x) sits at index x·(n+1), ascending in x
    let diag_gens: Vec<usize> = g
        .generators()
        .iter()
        .map(|(_, x)| square.product_index(*x, *x))
        .collect();
    let (h, elems) = square.subgroup(&diag_gens)?;
    if h.order() != n {
        return Err(Error::InvalidGroup("diagonal subgroup has unexpected order".into()));
    }
    for (i, &e) in elems.iter().enumerate() {
        debug_assert_eq!(e, square.product_index(i, i));
    }
    let restricted = restrict_resolution(&r2, &h, &elems)?;
    // G ≅ H by x ↦ (x,x), which is index-preserving
    let iso = GroupHom::from_images(g, &h, &(0..n).collect::<Vec<_>>())?;
    let lift = lift_chain_map(res, &restricted, &iso, up_to, seed)?;

    let layout = TensorLayout::new(
        res.ranks()[..=up_to].to_vec(),
        res.ranks()[..=up_to].to_vec(),
    );
    let cosets_reps: Vec<usize> = {
        // recompute the coset data used by restrict_resolution
        crate::resolution::CosetDecomposition::new(&square, &elems)?.reps
    };
    let t_count = cosets_reps.len();
    let mut terms = Vec::with_capacity(up_to + 1);
    for k in 0..=up_to {
        let fk = lift.component(k);
        let mut per_col = Vec::with_capacity(res.rank(k));
        for j in 0..res.rank(k) {
            let mut map = DiagTerms::new();
            for row in 0..fk.rows() {
                let i2 = row / t_count;
                let t = row % t_count;
                let (a_t, b_t) = (cosets_reps[t] / n, cosets_reps[t] % n);
                // locate (p1, s, t') for tensor index i2 in degree k
                let (p1, s, tp) = {
                    let mut found = None;
                    for (p, q) in layout.segments(k) {
                        let off = layout.offset(k, p);
                        let size = res.rank(p) * res.rank(q);
                        if i2 >= off && i2 < off + size {
                            let rel = i2 - off;
                            found = Some((p, rel / res.rank(q), rel % res.rank(q)));
                            break;
                        }
                    }
                    found.ok_or_else(|| Error::Dimension("tensor index out of range".into()))?
                };
                let v = fk.get(row, j);
                for (x, c) in v.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        // fiber element x of H corresponds to (x, x) in G×G
                        add_term(
                            &mut map,
                            (p1, s, tp, g.mul(x, a_t), g.mul(x, b_t)),
                            c.clone(),
                        );
                    }
                }
            }
            per_col.push(map);
        }
        terms.push(per_col);
    }
    let out = DiagonalApprox {
        group: g.clone(),
        ranks: res.ranks()[..=up_to].to_vec(),
        terms,
    };
    out.validate(res)?;
    Ok(out)
}

/// Combine diagonals of the two factors of a tensor resolution:
/// `Δ = (1 ⊗ swap ⊗ 1)(Δ_left ⊗ Δ_right)`, where the middle swap
/// contributes the Koszul sign `(−1)^{p₂·q₁}`.
pub fn diagonal_tensor_combine(
    res: &FreeResolution,
    left_res: &FreeResolution,
    right_res: &FreeResolution,
    left_diag: &DiagonalApprox,
    right_diag: &DiagonalApprox,
    up_to: usize,
) -> Result<DiagonalApprox> {
    let g = res.group();
    let GroupStructure::Product { left: gl, right: gr } = g.structure() else {
        return Err(Error::Mismatch("tensor combination needs a product group".into()));
    };
    if gl.as_ref() != left_res.group() || gr.as_ref() != right_res.group() {
        return Err(Error::Mismatch("factor resolutions do not match the product".into()));
    }
    if left_diag.max_degree() < up_to || right_diag.max_degree() < up_to {
        return Err(Error::Mismatch("factor diagonals too short".into()));
    }
    let layout = TensorLayout::new(
        left_res.ranks()[..=up_to].to_vec(),
        right_res.ranks()[..=up_to].to_vec(),
    );
    if res.ranks()[..=up_to] != (0..=up_to).map(|k| layout.rank(k)).collect::<Vec<_>>()[..] {
        return Err(Error::Mismatch("resolution is not the tensor of the factors".into()));
    }
    let nb = right_res.group().order();
    let pair = |a: usize, b: usize| a * nb + b;

    let mut terms = Vec::with_capacity(up_to + 1);
    for k in 0..=up_to {
        let mut per_col = vec![DiagTerms::new(); res.rank(k)];
        for (p, q) in layout.segments(k) {
            for i in 0..left_res.rank(p) {
                for j in 0..right_res.rank(q) {
                    let col = layout.index(k, p, i, j);
                    let map = &mut per_col[col];
                    for (&(p1, sa, ta, a1, a2), ca) in left_diag.image_of(p, i) {
                        let p2 = p - p1;
                        for (&(q1, sb, tb, b1, b2), cb) in right_diag.image_of(q, j) {
                            let q2 = q - q1;
                            let sign_neg = (p2 * q1) % 2 == 1;
                            let idx1 = layout.index(p1 + q1, p1, sa, sb);
                            let idx2 = layout.index(p2 + q2, p2, ta, tb);
                            let mut c = ca * cb;
                            if sign_neg {
                                c = -c;
                            }
                            add_term(
                                map,
                                (p1 + q1, idx1, idx2, pair(a1, b1), pair(a2, b2)),
                                c,
                            );
                        }
                    }
                }
            }
        }
        terms.push(per_col);
    }
    let out = DiagonalApprox {
        group: g.clone(),
        ranks: res.ranks()[..=up_to].to_vec(),
        terms,
    };
    out.validate(res)?;
    Ok(out)
}
