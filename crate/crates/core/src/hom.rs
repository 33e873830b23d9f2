//! Group homomorphisms, stored as full image tables.
//!
//! A homomorphism is built from images of the source's generators: the table
//! is extended by breadth-first search over products and then every pair
//! `(a, b)` is checked, so an inconsistent assignment is always rejected.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Vec<usize>,
    injective: bool,
    surjective: bool,
}

impl GroupHom {
    /// Build from images of the source generators, listed in the same order
    /// as `source.generators()`.
    pub fn from_gen_images(
        source: &FiniteGroup,
        target: &FiniteGroup,
        gen_images: &[usize],
    ) -> Result<GroupHom> {
        let gens = source.generators();
        if gen_images.len() != gens.len() {
            return Err(Error::NotAHomomorphism {
                witness: format!("expected {} generator images, got {}", gens.len(), gen_images.len()),
            });
        }
        if gen_images.iter().any(|&x| x >= target.order()) {
            return Err(Error::NotAHomomorphism { witness: "image index out of range".into() });
        }
        let mut images = vec![usize::MAX; source.order()];
        images[source.identity()] = target.identity();
        let mut frontier = vec![source.identity()];
        while let Some(g) = frontier.pop() {
            for (k, (_, s)) in gens.iter().enumerate() {
                let h = source.mul(g, *s);
                let img = target.mul(images[g], gen_images[k]);
                if images[h] == usize::MAX {
                    images[h] = img;
                    frontier.push(h);
                } else if images[h] != img {
                    return Err(Error::NotAHomomorphism {
                        witness: format!("inconsistent image for {}", source.label(h)),
                    });
                }
            }
        }
        GroupHom::from_images(source, target, &images)
    }

    /// Build from a complete image table and verify multiplicativity on all
    /// pairs.
    pub fn from_images(source: &FiniteGroup, target: &FiniteGroup, images: &[usize]) -> Result<GroupHom> {
        if images.len() != source.order() || images.iter().any(|&x| x >= target.order()) {
            return Err(Error::NotAHomomorphism { witness: "bad image table".into() });
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::NotAHomomorphism {
                        witness: format!("f({}·{}) ≠ f({})·f({})", source.label(a), source.label(b), source.label(a), source.label(b)),
                    });
                }
            }
        }
        let mut seen = vec![false; target.order()];
        for &x in images {
            seen[x] = true;
        }
        let image_size = seen.iter().filter(|&&s| s).count();
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            injective: image_size == source.order(),
            surjective: image_size == target.order(),
            images: images.to_vec(),
        })
    }

    pub fn identity(g: &FiniteGroup) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            images: (0..g.order()).collect(),
            injective: true,
            surjective: true,
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if other.target != self.source {
            return Err(Error::Mismatch("composition of incompatible homomorphisms".into()));
        }
        let images: Vec<usize> = other.images.iter().map(|&g| self.images[g]).collect();
        GroupHom::from_images(&other.source, &self.target, &images)
    }
}

/// An automorphism: a bijective endomorphism together with its inverse table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAut {
    hom: GroupHom,
    inverse: Vec<usize>,
}

impl GroupAut {
    pub fn from_images(g: &FiniteGroup, images: &[usize]) -> Result<GroupAut> {
        let hom = GroupHom::from_images(g, g, images)?;
        if !hom.injective {
            return Err(Error::NotAHomomorphism { witness: "not bijective".into() });
        }
        let mut inverse = vec![0; g.order()];
        for (x, &y) in images.iter().enumerate() {
            inverse[y] = x;
        }
        Ok(GroupAut { hom, inverse })
    }

    pub fn identity(g: &FiniteGroup) -> GroupAut {
        GroupAut { hom: GroupHom::identity(g), inverse: (0..g.order()).collect() }
    }

    /// Conjugation `x ↦ w x w⁻¹`.
    pub fn conjugation(g: &FiniteGroup, w: usize) -> GroupAut {
        let images: Vec<usize> = (0..g.order()).map(|x| g.mul(g.mul(w, x), g.inv(w))).collect();
        GroupAut::from_images(g, &images).expect("conjugation is an automorphism")
    }

    pub fn group(&self) -> &FiniteGroup {
        self.hom.source()
    }

    pub fn apply(&self, g: usize) -> usize {
        self.hom.apply(g)
    }

    pub fn apply_inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn images(&self) -> &[usize] {
        self.hom.images()
    }

    pub fn inverse(&self) -> GroupAut {
        GroupAut::from_images(self.group(), &self.inverse).expect("inverse of automorphism")
    }

    pub fn is_identity(&self) -> bool {
        self.hom.images().iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_involution(&self) -> bool {
        (0..self.group().order()).all(|x| self.apply(self.apply(x)) == x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, product, quaternion8};

    #[test]
    fn hom_from_generators_and_validation() {
        let z4 = cyclic(4).unwrap();
        let z2 = cyclic(2).unwrap();
        // reduction mod 2: b ↦ t
        let f = GroupHom::from_gen_images(&z4, &z2, &[1]).unwrap();
        assert_eq!(f.apply(3), 1);
        assert!(f.is_surjective());
        assert!(!f.is_injective());
        // b ↦ generator of Z2 twisted inconsistently is impossible for cyclic,
        // but a non-homomorphic full table must be rejected:
        assert!(GroupHom::from_images(&z4, &z4, &[0, 1, 1, 3]).is_err());
    }

    #[test]
    fn embedding_of_cyclic_in_quaternion() {
        let z4 = cyclic(4).unwrap();
        let q8 = quaternion8();
        // b ↦ i
        let f = GroupHom::from_gen_images(&z4, &q8, &[2]).unwrap();
        assert!(f.is_injective());
        assert_eq!(f.apply(2), 1); // b² ↦ -1
        assert_eq!(f.apply(3), 3); // b³ ↦ -i
    }

    #[test]
    fn conjugation_in_quaternion_inverts_i() {
        let q8 = quaternion8();
        let tau = GroupAut::conjugation(&q8, 4); // conjugate by j
        assert_eq!(tau.apply(2), 3); // j i j⁻¹ = -i
        // τ² = conjugation by j² = -1, which is central, so τ is an involution
        assert!(tau.is_involution());
    }

    #[test]
    fn compose_and_inverse() {
        let z4 = cyclic(4).unwrap();
        let inv = GroupAut::from_images(&z4, &[0, 3, 2, 1]).unwrap();
        assert!(inv.is_involution());
        let both = inv.hom().compose(inv.hom()).unwrap();
        assert_eq!(both.images(), GroupHom::identity(&z4).images());
        assert_eq!(inv.inverse().images(), inv.images());
    }

    #[test]
    fn diagonal_embedding_in_product() {
        let z4 = cyclic(4).unwrap();
        let z44 = product(&z4, &z4).unwrap();
        let alpha = GroupHom::from_gen_images(&z4, &z44, &[z44.product_index(1, 3)]).unwrap();
        assert!(alpha.is_injective());
        assert_eq!(alpha.apply(2), z44.product_index(2, 2));
    }
}
