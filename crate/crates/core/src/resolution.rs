//! Free resolutions of the trivial module over the integral group ring.
//!
//! Builders:
//! * [`periodic_resolution`] — the standard 2-periodic resolution for a
//!   cyclic group (alternating `g − 1` and norm boundaries);
//! * [`tensor_resolution`] — the tensor product of resolutions of the two
//!   factors of a product group, with Koszul signs;
//! * [`generic_resolution`] — degree-by-degree kernel computation with a
//!   greedy choice of module generators; works for any group;
//! * [`restrict_resolution`] — view a resolution over `G` as a resolution
//!   over a subgroup `H` (every free `ZG`-module is free over `ZH` with one
//!   basis vector per right coset).
//!
//! A resolution of length `L` stores boundaries `d_1 .. d_L`; homology in
//! degree `q` needs length at least `q + 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gring::{GRingMatrix, GVec};
use crate::group::{FiniteGroup, GroupStructure};
use crate::matrix::IntMatrix;
use crate::snf::{kernel_basis, mix64, ColumnLattice, LinearSystem};

pub const MAX_LENGTH: usize = 8;

fn check_length(length: usize) -> Result<()> {
    if length == 0 || length > MAX_LENGTH {
        return Err(Error::ResourceLimit(format!(
            "resolution length {length} outside 1..={MAX_LENGTH}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResolutionKind {
    Periodic,
    Tensor { left_ranks: Vec<usize>, right_ranks: Vec<usize> },
    Generic,
    Restricted { ambient: String },
}

impl ResolutionKind {
    pub fn builder_name(&self) -> &'static str {
        match self {
            ResolutionKind::Periodic => "periodic",
            ResolutionKind::Tensor { .. } => "tensor",
            ResolutionKind::Generic => "generic",
            ResolutionKind::Restricted { .. } => "restricted",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FreeResolution {
    group: FiniteGroup,
    ranks: Vec<usize>,
    boundaries: Vec<GRingMatrix>,
    augmentation: Vec<BigInt>,
    kind: ResolutionKind,
    seed: u64,
}

impl FreeResolution {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn length(&self) -> usize {
        self.boundaries.len()
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks[k]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Boundary `d_k : F_k → F_{k−1}`, for `1 ≤ k ≤ length`.
    pub fn boundary(&self, k: usize) -> &GRingMatrix {
        assert!(k >= 1 && k <= self.length(), "boundary index {k} out of range");
        &self.boundaries[k - 1]
    }

    /// Coefficients of the augmentation `F_0 → Z` on the free basis.
    pub fn augmentation(&self) -> &[BigInt] {
        &self.augmentation
    }

    /// The augmentation as a map of underlying Z-modules `Z^{r_0·|G|} → Z`.
    pub fn augmentation_flat(&self) -> IntMatrix {
        let n = self.group.order();
        IntMatrix::from_fn(1, self.ranks[0] * n, |_, c| self.augmentation[c / n].clone())
    }

    pub fn kind(&self) -> &ResolutionKind {
        &self.kind
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub(crate) fn from_parts(
        group: FiniteGroup,
        ranks: Vec<usize>,
        boundaries: Vec<GRingMatrix>,
        augmentation: Vec<BigInt>,
        kind: ResolutionKind,
        seed: u64,
    ) -> FreeResolution {
        FreeResolution { group, ranks, boundaries, augmentation, kind, seed }
    }

    /// Full validation: shapes, `d∘d = 0` over the group ring, `ε∘d_1 = 0`,
    /// surjectivity of ε, and exactness of the underlying Z-complex in
    /// degrees `0 .. length−1`.
    pub fn validate(&self) -> Result<()> {
        let l = self.length();
        if self.ranks.len() != l + 1 || self.augmentation.len() != self.ranks[0] {
            return Err(Error::InvalidGroup("resolution bookkeeping is inconsistent".into()));
        }
        for k in 1..=l {
            let d = self.boundary(k);
            if d.rows() != self.ranks[k - 1] || d.cols() != self.ranks[k] {
                return Err(Error::Dimension(format!("boundary {k} has wrong shape")));
            }
        }
        for k in 2..=l {
            if !self.boundary(k - 1).compose(self.boundary(k))?.is_zero() {
                return Err(Error::InvalidGroup(format!("d_{} ∘ d_{} ≠ 0", k - 1, k)));
            }
        }
        let aug_row = IntMatrix::from_fn(1, self.ranks[0], |_, j| self.augmentation[j].clone());
        if !aug_row.mul(&self.boundary(1).augmentation_matrix()).is_zero() {
            return Err(Error::InvalidGroup("ε ∘ d_1 ≠ 0".into()));
        }
        // ε must hit 1 ∈ Z
        let eps = self.augmentation_flat();
        let gcd = (0..eps.cols())
            .map(|c| eps.get(0, c).clone())
            .fold(BigInt::zero(), |a, b| a.gcd(&b));
        if !gcd.is_one() {
            return Err(Error::InvalidGroup("augmentation is not surjective".into()));
        }
        // exactness of ... → F_1 → F_0 → Z in the flattened complex
        let mut flats: Vec<IntMatrix> = Vec::with_capacity(l + 1);
        flats.push(eps);
        for k in 1..=l {
            flats.push(self.boundary(k).flatten());
        }
        for k in 0..l {
            let ker = kernel_basis(&flats[k]);
            let sys = LinearSystem::new(flats[k + 1].clone());
            if sys.solve_matrix(&ker, 0).is_none() {
                return Err(Error::InvalidGroup(format!(
                    "complex is not exact at degree {k}"
                )));
            }
        }
        Ok(())
    }
}

/// Layout of the degree-`k` piece of a tensor-product resolution: segments
/// `(p, q = k−p)` in increasing `p`, each of size `left_rank(p) ×
/// right_rank(q)`, with basis `(p, i, j)` at offset `i·right_rank(q) + j`
/// inside the segment.
#[derive(Clone, Debug)]
pub struct TensorLayout {
    left_ranks: Vec<usize>,
    right_ranks: Vec<usize>,
}

impl TensorLayout {
    pub fn new(left_ranks: Vec<usize>, right_ranks: Vec<usize>) -> TensorLayout {
        TensorLayout { left_ranks, right_ranks }
    }

    /// The `(p, q)` pairs contributing to degree `k`, increasing in `p`.
    pub fn segments(&self, k: usize) -> Vec<(usize, usize)> {
        (0..=k)
            .filter(|&p| p < self.left_ranks.len() && (k - p) < self.right_ranks.len())
            .map(|p| (p, k - p))
            .collect()
    }

    pub fn rank(&self, k: usize) -> usize {
        self.segments(k)
            .iter()
            .map(|&(p, q)| self.left_ranks[p] * self.right_ranks[q])
            .sum()
    }

    pub fn offset(&self, k: usize, p: usize) -> usize {
        self.segments(k)
            .iter()
            .take_while(|&&(p2, _)| p2 < p)
            .map(|&(p2, q2)| self.left_ranks[p2] * self.right_ranks[q2])
            .sum()
    }

    pub fn index(&self, k: usize, p: usize, i: usize, j: usize) -> usize {
        self.offset(k, p) + i * self.right_ranks[k - p] + j
    }
}

/// The 2-periodic resolution of a cyclic group: `d_odd = g − 1`,
/// `d_even = 1 + g + … + g^{n−1}` for a fixed full-order generator `g`.
pub fn periodic_resolution(group: &FiniteGroup, length: usize) -> Result<FreeResolution> {
    check_length(length)?;
    let g = group.cyclic_generator().ok_or(Error::NotCyclic)?;
    let n = group.order();
    let mut diff = GVec::zero(n);
    diff.coeffs[g] += 1;
    diff.coeffs[group.identity()] -= 1;
    let mut norm = GVec::zero(n);
    let mut x = group.identity();
    for _ in 0..n {
        norm.coeffs[x] += 1;
        x = group.mul(x, g);
    }
    let boundaries: Vec<GRingMatrix> = (1..=length)
        .map(|k| {
            let mut m = GRingMatrix::zeros(group, 1, 1);
            m.set(0, 0, if k % 2 == 1 { diff.clone() } else { norm.clone() });
            m
        })
        .collect();
    Ok(FreeResolution {
        group: group.clone(),
        ranks: vec![1; length + 1],
        boundaries,
        augmentation: vec![BigInt::one()],
        kind: ResolutionKind::Periodic,
        seed: 0,
    })
}

fn embed_product(v: &GVec, group: &FiniteGroup, left: bool) -> GVec {
    let GroupStructure::Product { right, .. } = group.structure() else {
        panic!("embed_product needs a product group");
    };
    let nb = right.order();
    let mut out = GVec::zero(group.order());
    for (g, c) in v.coeffs.iter().enumerate() {
        if !c.is_zero() {
            let idx = if left { g * nb } else { g };
            out.coeffs[idx] += c;
        }
    }
    out
}

/// Tensor product of resolutions of the factors of a product group.
pub fn tensor_resolution(
    group: &FiniteGroup,
    left: &FreeResolution,
    right: &FreeResolution,
    length: usize,
) -> Result<FreeResolution> {
    check_length(length)?;
    let GroupStructure::Product { left: gl, right: gr } = group.structure() else {
        return Err(Error::Mismatch("tensor resolution needs a product group".into()));
    };
    if gl.as_ref() != left.group() || gr.as_ref() != right.group() {
        return Err(Error::Mismatch("factor resolutions do not match the product".into()));
    }
    if left.length() < length || right.length() < length {
        return Err(Error::Mismatch("factor resolutions are too short".into()));
    }
    if left.augmentation() != [BigInt::one()] || right.augmentation() != [BigInt::one()] {
        return Err(Error::Mismatch("tensor factors must have standard augmentations".into()));
    }
    let layout = TensorLayout::new(
        left.ranks()[..=length].to_vec(),
        right.ranks()[..=length].to_vec(),
    );
    let ranks: Vec<usize> = (0..=length).map(|k| layout.rank(k)).collect();
    let mut boundaries = Vec::with_capacity(length);
    for k in 1..=length {
        let mut d = GRingMatrix::zeros(group, ranks[k - 1], ranks[k]);
        for (p, q) in layout.segments(k) {
            for i in 0..left.rank(p) {
                for j in 0..right.rank(q) {
                    let col = layout.index(k, p, i, j);
                    if p >= 1 {
                        let da = left.boundary(p);
                        for i2 in 0..left.rank(p - 1) {
                            let a = da.get(i2, i);
                            if !a.is_zero() {
                                let row = layout.index(k - 1, p - 1, i2, j);
                                d.add_to(row, col, &embed_product(a, group, true));
                            }
                        }
                    }
                    if q >= 1 {
                        let db = right.boundary(q);
                        for j2 in 0..right.rank(q - 1) {
                            let b = db.get(j2, j);
                            if !b.is_zero() {
                                let row = layout.index(k - 1, p, i, j2);
                                let mut e = embed_product(b, group, false);
                                if p % 2 == 1 {
                                    e = e.neg();
                                }
                                d.add_to(row, col, &e);
                            }
                        }
                    }
                }
            }
        }
        boundaries.push(d);
    }
    Ok(FreeResolution {
        group: group.clone(),
        ranks,
        boundaries,
        augmentation: vec![BigInt::one()],
        kind: ResolutionKind::Tensor {
            left_ranks: left.ranks()[..=length].to_vec(),
            right_ranks: right.ranks()[..=length].to_vec(),
        },
        seed: 0,
    })
}

/// Left translation of a flattened free-module vector by a group element.
fn translate_flat(group: &FiniteGroup, rank: usize, v: &[BigInt], g: usize) -> Vec<BigInt> {
    let n = group.order();
    let mut out = vec![BigInt::zero(); rank * n];
    for i in 0..rank {
        for gp in 0..n {
            let c = &v[i * n + gp];
            if !c.is_zero() {
                out[i * n + group.mul(g, gp)] = c.clone();
            }
        }
    }
    out
}

/// Resolution built degree by degree: compute a Z-basis of the kernel of
/// the previous boundary, then greedily pick kernel vectors whose
/// translates span the kernel lattice. The seed permutes the candidate
/// order (seed 0 keeps the canonical order), changing the presentation but
/// not what it resolves.
pub fn generic_resolution(group: &FiniteGroup, length: usize, seed: u64) -> Result<FreeResolution> {
    check_length(length)?;
    let n = group.order();
    let mut ranks = vec![1usize];
    let mut boundaries: Vec<GRingMatrix> = Vec::new();
    // flattened map out of the current degree (starts with the augmentation)
    let mut prev_flat = IntMatrix::from_fn(1, n, |_, _| BigInt::one());
    for k in 1..=length {
        let r_prev = ranks[k - 1];
        let ker = kernel_basis(&prev_flat);
        let m = ker.cols();
        let mut order: Vec<usize> = (0..m).collect();
        if seed != 0 {
            for i in (1..m).rev() {
                let j = (mix64(seed ^ ((k as u64) << 40) ^ (i as u64)) % (i as u64 + 1)) as usize;
                order.swap(i, j);
            }
        }
        let mut chosen: Vec<Vec<BigInt>> = Vec::new();
        let mut translates: Vec<Vec<BigInt>> = Vec::new();
        let mut lattice: Option<ColumnLattice> = None;
        for &c in &order {
            let cand = ker.column(c);
            let contained = lattice.as_ref().map_or(false, |l| l.contains(&cand));
            if !contained {
                for g in 0..n {
                    translates.push(translate_flat(group, r_prev, &cand, g));
                }
                let mat = IntMatrix::from_columns(r_prev * n, translates.clone());
                lattice = Some(ColumnLattice::from_columns(&mat));
                chosen.push(cand);
            }
        }
        let r_new = chosen.len();
        let mut d = GRingMatrix::zeros(group, r_prev, r_new);
        for (l, col) in chosen.iter().enumerate() {
            let as_mat = IntMatrix::from_columns(r_prev * n, vec![col.clone()]);
            let col_ring = GRingMatrix::column_from_flat(group, r_prev, &as_mat, 0);
            d.set_column(l, &col_ring);
        }
        prev_flat = d.flatten();
        ranks.push(r_new);
        boundaries.push(d);
    }
    Ok(FreeResolution {
        group: group.clone(),
        ranks,
        boundaries,
        augmentation: vec![BigInt::one()],
        kind: ResolutionKind::Generic,
        seed,
    })
}

/// Right-coset decomposition of a group relative to a subgroup given by its
/// (sorted) ambient element list.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    /// Representatives `c_t`, ascending; `c_0` is the identity.
    pub reps: Vec<usize>,
    /// For each ambient `g`, the index `t` with `g ∈ H·c_t`.
    pub coset_of: Vec<usize>,
    /// For each ambient `g`, its index in the subgroup if it lies there.
    pub sub_index: Vec<Option<usize>>,
}

impl CosetDecomposition {
    pub fn new(ambient: &FiniteGroup, sub_elements: &[usize]) -> Result<CosetDecomposition> {
        let n = ambient.order();
        let mut sub_index = vec![None; n];
        for (i, &g) in sub_elements.iter().enumerate() {
            sub_index[g] = Some(i);
        }
        if sub_index[ambient.identity()].is_none() {
            return Err(Error::InvalidGroup("subgroup misses the identity".into()));
        }
        let mut reps = Vec::new();
        let mut coset_of = vec![usize::MAX; n];
        for g in 0..n {
            let mut found = None;
            for (t, &c) in reps.iter().enumerate() {
                if sub_index[ambient.mul(g, ambient.inv(c))].is_some() {
                    found = Some(t);
                    break;
                }
            }
            coset_of[g] = match found {
                Some(t) => t,
                None => {
                    reps.push(g);
                    reps.len() - 1
                }
            };
        }
        Ok(CosetDecomposition { reps, coset_of, sub_index })
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Decompose `g = h·c_t`: returns `(t, subgroup index of h)`.
    pub fn decompose(&self, ambient: &FiniteGroup, g: usize) -> (usize, usize) {
        let t = self.coset_of[g];
        let h = ambient.mul(g, ambient.inv(self.reps[t]));
        (t, self.sub_index[h].expect("h lies in the subgroup"))
    }
}

/// View a resolution over `G` as a resolution over the subgroup generated
/// by `sub_elements` (ambient indices, as produced by
/// [`FiniteGroup::subgroup`]): each `ZG^r` is free over `ZH` on the basis
/// `(i, t) ↦ i·T + t` running over the original basis and the right-coset
/// representatives.
pub fn restrict_resolution(
    res: &FreeResolution,
    sub: &FiniteGroup,
    sub_elements: &[usize],
) -> Result<FreeResolution> {
    let ambient = res.group();
    if sub_elements.len() != sub.order() {
        return Err(Error::Mismatch("subgroup element list has wrong size".into()));
    }
    for a in 0..sub.order() {
        for b in 0..sub.order() {
            if sub_elements[sub.mul(a, b)] != ambient.mul(sub_elements[a], sub_elements[b]) {
                return Err(Error::Mismatch("element list is not a subgroup embedding".into()));
            }
        }
    }
    let cosets = CosetDecomposition::new(ambient, sub_elements)?;
    let t_count = cosets.count();
    let ranks: Vec<usize> = res.ranks().iter().map(|r| r * t_count).collect();
    let mut boundaries = Vec::with_capacity(res.length());
    for k in 1..=res.length() {
        let d = res.boundary(k);
        let mut out = GRingMatrix::zeros(sub, d.rows() * t_count, d.cols() * t_count);
        for j in 0..d.cols() {
            for s in 0..t_count {
                let c_s = cosets.reps[s];
                for i in 0..d.rows() {
                    let a = d.get(i, j);
                    let mut targets: Vec<GVec> = vec![GVec::zero(sub.order()); t_count];
                    let mut touched = vec![false; t_count];
                    for (g, coeff) in a.coeffs.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let x = ambient.mul(c_s, g);
                        let (t, h) = cosets.decompose(ambient, x);
                        targets[t].coeffs[h] += coeff;
                        touched[t] = true;
                    }
                    for t in 0..t_count {
                        if touched[t] {
                            out.add_to(i * t_count + t, j * t_count + s, &targets[t]);
                        }
                    }
                }
            }
        }
        boundaries.push(out);
    }
    let augmentation: Vec<BigInt> = (0..ranks[0])
        .map(|idx| res.augmentation()[idx / t_count].clone())
        .collect();
    Ok(FreeResolution {
        group: sub.clone(),
        ranks,
        boundaries,
        augmentation,
        kind: ResolutionKind::Restricted { ambient: ambient.name().to_string() },
        seed: res.seed(),
    })
}
