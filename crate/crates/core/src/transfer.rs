//! Wrong-way (transfer) maps for index-2 subgroups.
//!
//! For an index-2 subgroup `H ⊂ G` a free `ZG`-resolution `R` is also a free
//! `ZH`-resolution on twice as many generators (one per right coset).  The
//! chain-level transfer
//!
//! ```text
//! tr(m ⊗_G x) = Σ_t  m·c_t⁻¹ ⊗_H  c_t·x
//! ```
//!
//! (sum over right-coset representatives `c_t`) is a well-defined chain map
//! `M ⊗_G R → M ⊗_H R`, and the covering projection
//! `π(m ⊗_H c_t·x) = m·c_t ⊗_G x` goes the other way.  On homology these
//! satisfy the two classical contracts
//!
//! * `π_* ∘ tr = ×2` on `H_q(G; M)`, and
//! * `tr ∘ π_* = 1 + deck_*` on `H_q(H; M|_H)`,
//!
//! where `deck` is conjugation by the nontrivial coset representative `w`
//! paired with the action of `w` on `M`.  Both composites are verified by the
//! test suite rather than assumed.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::FiniteGroup;
use crate::hom::{GroupAut, GroupHom};
use crate::homology::{homology, induced_map, map_on_classes, HMap, HomologyGroup};
use crate::lift::lift_chain_map;
use crate::matrix::IntMatrix;
use crate::resolution::{restrict_resolution, CosetDecomposition, FreeResolution};

/// An index-2 subgroup embedding `H ⊂ G` together with its coset data.
#[derive(Clone, Debug)]
pub struct IndexTwoCover {
    ambient: FiniteGroup,
    sub: FiniteGroup,
    sub_elements: Vec<usize>,
    cosets: CosetDecomposition,
}

impl IndexTwoCover {
    /// `sub_elements[i]` is the ambient element realising element `i` of
    /// `sub`; the embedding must have index 2.
    pub fn new(ambient: &FiniteGroup, sub: &FiniteGroup, sub_elements: &[usize]) -> Result<IndexTwoCover> {
        if ambient.order() != 2 * sub.order() {
            return Err(Error::BadIndexTwo("subgroup order is not half the ambient order".into()));
        }
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
        if cosets.count() != 2 {
            return Err(Error::BadIndexTwo("embedding does not have index 2".into()));
        }
        Ok(IndexTwoCover {
            ambient: ambient.clone(),
            sub: sub.clone(),
            sub_elements: sub_elements.to_vec(),
            cosets,
        })
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn sub(&self) -> &FiniteGroup {
        &self.sub
    }

    pub fn sub_elements(&self) -> &[usize] {
        &self.sub_elements
    }

    /// The distinguished representative of the nontrivial coset (the smallest
    /// ambient element outside the subgroup).
    pub fn deck_rep(&self) -> usize {
        self.cosets.reps[1]
    }

    /// The inclusion `H → G` as a group homomorphism.
    pub fn inclusion(&self) -> GroupHom {
        GroupHom::from_images(&self.sub, &self.ambient, &self.sub_elements)
            .expect("subgroup embedding is a homomorphism")
    }

    /// Conjugation `h ↦ w·h·w⁻¹` by the deck representative, as an
    /// automorphism of the subgroup.  (Index 2 makes the subgroup normal, so
    /// this is well defined.)
    pub fn deck_aut(&self) -> GroupAut {
        let w = self.deck_rep();
        let w_inv = self.ambient.inv(w);
        let images: Vec<usize> = (0..self.sub.order())
            .map(|h| {
                let conj = self.ambient.mul(self.ambient.mul(w, self.sub_elements[h]), w_inv);
                self.cosets.sub_index[conj].expect("index-2 subgroups are normal")
            })
            .collect();
        GroupAut::from_images(&self.sub, &images).expect("conjugation restricts to an automorphism")
    }

    /// The module restricted along the inclusion.
    pub fn restrict_module(&self, module: &GModule) -> Result<GModule> {
        module.restrict(&self.inclusion())
    }

    /// Chain-level transfer in one degree: `M^r → M^(r·2)` sending the `m`
    /// in slot `j` to `ρ(c_t)·m` in slot `(j,t)` for each coset.
    pub fn chain_transfer(&self, module: &GModule, rank: usize) -> IntMatrix {
        let t_count = self.cosets.count();
        let dim = module.rank();
        let mut out = IntMatrix::zeros(rank * t_count * dim, rank * dim);
        for j in 0..rank {
            for (t, &c) in self.cosets.reps.iter().enumerate() {
                let act = module.act(c);
                for r in 0..dim {
                    for s in 0..dim {
                        out.set((j * t_count + t) * dim + r, j * dim + s, act.get(r, s).clone());
                    }
                }
            }
        }
        out
    }

    /// Chain-level covering projection in one degree: `M^(r·2) → M^r`
    /// sending `m` in slot `(j,t)` to `ρ(c_t⁻¹)·m` in slot `j`.
    pub fn chain_projection(&self, module: &GModule, rank: usize) -> IntMatrix {
        let t_count = self.cosets.count();
        let dim = module.rank();
        let mut out = IntMatrix::zeros(rank * dim, rank * t_count * dim);
        for j in 0..rank {
            for (t, &c) in self.cosets.reps.iter().enumerate() {
                let act = module.act_inv(c);
                for r in 0..dim {
                    for s in 0..dim {
                        out.set(j * dim + r, (j * t_count + t) * dim + s, act.get(r, s).clone());
                    }
                }
            }
        }
        out
    }
}

/// The homology-level transfer package for one degree: the transfer, the
/// covering projection (inclusion-induced map), and the deck action, all in
/// the canonical coordinates of the two homology groups.
#[derive(Clone, Debug)]
pub struct TransferMaps {
    /// `H_q(G; M)` in the coordinates of the ambient resolution.
    pub ambient_h: HomologyGroup,
    /// `H_q(H; M|_H)` in the coordinates of the subgroup's own resolution.
    pub sub_h: HomologyGroup,
    /// `tr: H_q(G; M) → H_q(H; M|_H)`.
    pub transfer: HMap,
    /// `π_* = (inclusion)_*: H_q(H; M|_H) → H_q(G; M)`.
    pub pushforward: HMap,
    /// `deck_*` on `H_q(H; M|_H)`: conjugation by the deck representative
    /// paired with its module action.
    pub deck: HMap,
}

/// Compute transfer, pushforward and deck action on `H_q` for an index-2
/// cover.  `ambient_res` resolves `G`, `sub_res` independently resolves `H`;
/// the two coordinate systems are reconciled by lifting the identity between
/// `sub_res` and the restriction of `ambient_res`.
pub fn transfer_index2(
    cover: &IndexTwoCover,
    ambient_res: &FreeResolution,
    sub_res: &FreeResolution,
    module: &GModule,
    q: usize,
    seed: u64,
) -> Result<TransferMaps> {
    if ambient_res.group() != &cover.ambient || sub_res.group() != &cover.sub {
        return Err(Error::Mismatch("resolutions do not match the cover".into()));
    }
    if module.group() != &cover.ambient {
        return Err(Error::Mismatch("module is not over the ambient group".into()));
    }
    if q + 1 > ambient_res.length() || q + 1 > sub_res.length() {
        return Err(Error::ResourceLimit(format!(
            "degree {q} needs resolutions of length {}",
            q + 1
        )));
    }
    let restricted = restrict_resolution(ambient_res, &cover.sub, &cover.sub_elements)?;
    let m_sub = cover.restrict_module(module)?;

    let ambient_h = homology(ambient_res, module, q, seed)?;
    let restricted_h = homology(&restricted, &m_sub, q, seed)?;
    let sub_h = homology(sub_res, &m_sub, q, seed)?;

    // The transfer and projection are chain maps; check commutation with the
    // boundaries before trusting them on classes.
    for k in 1..=(q + 1).min(ambient_res.length()) {
        let rank_hi = ambient_res.rank(k);
        let rank_lo = ambient_res.rank(k - 1);
        let up = ambient_res.boundary(k).chain_matrix(module)?;
        let down = restricted.boundary(k).chain_matrix(&m_sub)?;
        let tr_hi = cover.chain_transfer(module, rank_hi);
        let tr_lo = cover.chain_transfer(module, rank_lo);
        if down.mul(&tr_hi) != tr_lo.mul(&up) {
            return Err(Error::Mismatch("transfer is not a chain map".into()));
        }
        let pr_hi = cover.chain_projection(module, rank_hi);
        let pr_lo = cover.chain_projection(module, rank_lo);
        if up.mul(&pr_hi) != pr_lo.mul(&down) {
            return Err(Error::Mismatch("covering projection is not a chain map".into()));
        }
    }

    // Transfer and projection in the restricted coordinates.
    let tr_classes = map_on_classes(&cover.chain_transfer(module, ambient_res.rank(q)), &ambient_h, &restricted_h)?;
    let pr_classes = map_on_classes(&cover.chain_projection(module, ambient_res.rank(q)), &restricted_h, &ambient_h)?;

    // Reconcile the restricted resolution with the subgroup's own one by
    // lifting the identity both ways.
    let id_h = GroupHom::identity(&cover.sub);
    let mu_id = IntMatrix::identity(m_sub.rank());
    let to_canonical = lift_chain_map(&restricted, sub_res, &id_h, q + 1, seed)?;
    let to_restricted = lift_chain_map(sub_res, &restricted, &id_h, q + 1, seed)?;
    let compare = induced_map(&to_canonical, &m_sub, &m_sub, &mu_id, &restricted_h, &sub_h)?;
    let compare_back = induced_map(&to_restricted, &m_sub, &m_sub, &mu_id, &sub_h, &restricted_h)?;
    if !compare.compose(&compare_back)?.is_identity() || !compare_back.compose(&compare)?.is_identity() {
        return Err(Error::Mismatch("resolution comparison maps are not mutually inverse".into()));
    }

    let transfer = compare.compose(&tr_classes)?;
    let pushforward = pr_classes.compose(&compare_back)?;

    // Deck action: conjugation by w with module map ρ(w).
    let deck = deck_action(cover, sub_res, module, &sub_h, q, seed)?;

    Ok(TransferMaps { ambient_h, sub_h, transfer, pushforward, deck })
}

/// The deck action on `H_q(H; M|_H)`: the map induced by conjugation
/// `h ↦ w·h·w⁻¹` together with the module map `ρ(w)`.
pub fn deck_action(
    cover: &IndexTwoCover,
    sub_res: &FreeResolution,
    module: &GModule,
    sub_h: &HomologyGroup,
    q: usize,
    seed: u64,
) -> Result<HMap> {
    let m_sub = cover.restrict_module(module)?;
    let aut = cover.deck_aut();
    let mu = module.act(cover.deck_rep()).clone();
    let f = lift_chain_map(sub_res, sub_res, aut.hom(), q + 1, seed)?;
    induced_map(&f, &m_sub, &m_sub, &mu, sub_h, sub_h)
}

/// Check that a class written in canonical coordinates is divisible by 2 in
/// its group, i.e. lies in `2·H`.
pub fn is_even_class(shape: &crate::homology::GroupShape, class: &[BigInt]) -> bool {
    // x ∈ 2·H  ⟺  the system 2·y + relations·z = x is solvable.
    let dim = shape.dim();
    let two = IntMatrix::identity(dim).scale(&BigInt::from(2));
    let rels = shape.relations();
    let stacked = two.hstack(&rels);
    crate::snf::solve_integer(&stacked, class, 0).is_some()
}
