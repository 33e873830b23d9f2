//! Groups of the form `G ⋊_θ Z`: a finite fiber group together with the
//! monodromy automorphism θ describing how the infinite generator acts.
//!
//! These are infinite groups, so they are never stored as tables; all
//! homological computations factor through the fiber and θ.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::{GroupAut, GroupHom};

#[derive(Clone, Debug)]
pub struct ZExtension {
    name: String,
    fiber: FiniteGroup,
    theta: GroupAut,
    theta_name: String,
}

impl ZExtension {
    pub fn new(fiber: FiniteGroup, theta: GroupAut, theta_name: String) -> Result<ZExtension> {
        if theta.group() != &fiber {
            return Err(Error::Mismatch("monodromy is not an automorphism of the fiber".into()));
        }
        let name = format!("zext({},{theta_name})", fiber.name());
        Ok(ZExtension { name, fiber, theta, theta_name })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn fiber(&self) -> &FiniteGroup {
        &self.fiber
    }

    pub fn theta(&self) -> &GroupAut {
        &self.theta
    }

    pub fn theta_name(&self) -> &str {
        &self.theta_name
    }

    /// Restrict the extension to the sub-extension `H ⋊_θ Z` where `H` is
    /// the subgroup of the fiber generated by `gens`. Fails unless θ maps
    /// `H` onto itself. Returns the restricted extension together with the
    /// inclusion.
    pub fn restrict(&self, gens: &[usize]) -> Result<(ZExtension, ExtensionHom)> {
        let (h, elems) = self.fiber.subgroup(gens)?;
        let pos: std::collections::BTreeMap<usize, usize> =
            elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut theta_images = Vec::with_capacity(h.order());
        for &g in &elems {
            let img = self.theta.apply(g);
            match pos.get(&img) {
                Some(&i) => theta_images.push(i),
                None => return Err(Error::NotThetaInvariant(format!(
                    "subgroup is not invariant: θ({}) lies outside",
                    self.fiber.label(g)
                ))),
            }
        }
        let theta_h = GroupAut::from_images(&h, &theta_images)?;
        let sub = ZExtension::new(h.clone(), theta_h, format!("{}|sub", self.theta_name))?;
        let incl_fiber = GroupHom::from_images(&h, &self.fiber, &elems)?;
        let incl = ExtensionHom::new(sub.clone(), self.clone(), incl_fiber)?;
        Ok((sub, incl))
    }
}

/// A homomorphism of Z-extensions covering the identity of Z: determined by
/// a fiber homomorphism φ with `φ ∘ θ_src = θ_tgt ∘ φ`.
#[derive(Clone, Debug)]
pub struct ExtensionHom {
    source: ZExtension,
    target: ZExtension,
    fiber_hom: GroupHom,
}

impl ExtensionHom {
    pub fn new(source: ZExtension, target: ZExtension, fiber_hom: GroupHom) -> Result<ExtensionHom> {
        if fiber_hom.source() != source.fiber() || fiber_hom.target() != target.fiber() {
            return Err(Error::Mismatch("fiber homomorphism endpoints do not match".into()));
        }
        for g in 0..source.fiber().order() {
            if fiber_hom.apply(source.theta.apply(g)) != target.theta.apply(fiber_hom.apply(g)) {
                return Err(Error::NotThetaInvariant(format!(
                    "fiber map does not commute with monodromy at {}",
                    source.fiber().label(g)
                )));
            }
        }
        Ok(ExtensionHom { source, target, fiber_hom })
    }

    pub fn source(&self) -> &ZExtension {
        &self.source
    }

    pub fn target(&self) -> &ZExtension {
        &self.target
    }

    pub fn fiber_hom(&self) -> &GroupHom {
        &self.fiber_hom
    }
}
