//! Modules over group rings: a finite group acting on `Z^r` by unimodular
//! integer matrices, optionally together with a compatible action of the
//! infinite generator of a Z-extension.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::extension::{ExtensionHom, ZExtension};
use crate::group::{BuiltGroup, FiniteGroup};
use crate::hom::{GroupAut, GroupHom};
use crate::matrix::IntMatrix;
use crate::rep::{extend_by_generators, MatrixRep};

/// Action of the infinite generator on a module over a Z-extension's fiber:
/// a matrix `T` with `T·ρ(g) = ρ(θ(g))·T`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleTheta {
    aut: GroupAut,
    t: IntMatrix,
}

impl ModuleTheta {
    pub fn aut(&self) -> &GroupAut {
        &self.aut
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.t
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GModule {
    name: String,
    group: FiniteGroup,
    rank: usize,
    action: Vec<IntMatrix>,
    theta: Option<ModuleTheta>,
}

impl GModule {
    pub fn trivial(group: &FiniteGroup) -> GModule {
        GModule {
            name: "Z".into(),
            group: group.clone(),
            rank: 1,
            action: vec![IntMatrix::identity(1); group.order()],
            theta: None,
        }
    }

    pub fn from_gen_images(
        name: &str,
        group: &FiniteGroup,
        rank: usize,
        gen_images: &[IntMatrix],
    ) -> Result<GModule> {
        let action = extend_by_generators(group, gen_images, rank)
            .map_err(|e| Error::InvalidModule(e.to_string()))?;
        Ok(GModule { name: name.into(), group: group.clone(), rank, action, theta: None })
    }

    /// Module carried by a matrix representation; for extension
    /// representations the infinite generator's matrix is installed as the
    /// θ-action.
    pub fn from_rep(rep: &MatrixRep) -> Result<GModule> {
        let base = GModule {
            name: rep.name().to_string(),
            group: rep.group().clone(),
            rank: rep.dim(),
            action: (0..rep.group().order()).map(|g| rep.matrix(g).clone()).collect(),
            theta: None,
        };
        match (rep.z_image(), rep.theta()) {
            (Some(z), Some(aut)) => base.with_theta(aut, z.clone()),
            _ => Ok(base),
        }
    }

    /// Install an action of the infinite generator, checking the
    /// compatibility `T·ρ(g) = ρ(θ(g))·T` and unimodularity of `T`.
    pub fn with_theta(mut self, aut: &GroupAut, t: IntMatrix) -> Result<GModule> {
        if aut.group() != &self.group {
            return Err(Error::Mismatch("θ lives on a different group".into()));
        }
        if t.rows() != self.rank || t.cols() != self.rank {
            return Err(Error::InvalidModule("θ-action matrix has wrong shape".into()));
        }
        if !t.is_unimodular() {
            return Err(Error::InvalidModule("θ-action matrix is not invertible over Z".into()));
        }
        for g in 0..self.group.order() {
            if t.mul(&self.action[g]) != self.action[aut.apply(g)].mul(&t) {
                return Err(Error::InvalidModule(format!(
                    "θ-action does not intertwine the group action at {}",
                    self.group.label(g)
                )));
            }
        }
        self.theta = Some(ModuleTheta { aut: aut.clone(), t });
        Ok(self)
    }

    /// Trivial rank-1 module over the fiber of an extension, with the
    /// infinite generator acting by `+1`.
    pub fn trivial_ext(ext: &ZExtension) -> GModule {
        GModule::trivial(ext.fiber())
            .with_theta(ext.theta(), IntMatrix::identity(1))
            .expect("trivial θ-action")
    }

    /// Rank-1 module over the fiber of an extension where the fiber acts
    /// trivially and the infinite generator acts by `(-1)^k`.
    pub fn sign_ext_power(ext: &ZExtension, k: usize) -> GModule {
        let sign = if k % 2 == 0 { IntMatrix::identity(1) } else { IntMatrix::identity(1).neg() };
        let name = if k == 1 { "Ztw".to_string() } else { format!("Ztw^{k}") };
        let mut m = GModule::trivial(ext.fiber())
            .with_theta(ext.theta(), sign)
            .expect("sign θ-action");
        m.name = name;
        m
    }

    pub fn sign_ext(ext: &ZExtension) -> GModule {
        GModule::sign_ext_power(ext, 1)
    }

    pub fn tensor(&self, other: &GModule) -> Result<GModule> {
        if self.group != other.group {
            return Err(Error::Mismatch("tensor product of modules over different groups".into()));
        }
        let action: Vec<IntMatrix> = (0..self.group.order())
            .map(|g| self.action[g].kron(&other.action[g]))
            .collect();
        let theta = match (&self.theta, &other.theta) {
            (Some(a), Some(b)) => {
                if a.aut != b.aut {
                    return Err(Error::Mismatch("tensor factors disagree on θ".into()));
                }
                Some(ModuleTheta { aut: a.aut.clone(), t: a.t.kron(&b.t) })
            }
            (None, None) => None,
            _ => return Err(Error::Mismatch("tensor factors disagree on θ".into())),
        };
        Ok(GModule {
            name: format!("{}(x){}", self.name, other.name),
            group: self.group.clone(),
            rank: self.rank * other.rank,
            action,
            theta,
        })
    }

    /// Restrict along a homomorphism of finite groups (θ-data is dropped).
    pub fn restrict(&self, hom: &GroupHom) -> Result<GModule> {
        if hom.target() != &self.group {
            return Err(Error::Mismatch("restriction target mismatch".into()));
        }
        Ok(GModule {
            name: self.name.clone(),
            group: hom.source().clone(),
            rank: self.rank,
            action: (0..hom.source().order()).map(|h| self.action[hom.apply(h)].clone()).collect(),
            theta: None,
        })
    }

    /// Restrict along a homomorphism of Z-extensions covering the identity
    /// of Z: the θ-action matrix is inherited.
    pub fn restrict_ext(&self, hom: &ExtensionHom) -> Result<GModule> {
        let theta = self
            .theta
            .as_ref()
            .ok_or_else(|| Error::InvalidModule("module carries no θ-action".into()))?;
        if hom.target().fiber() != &self.group {
            return Err(Error::Mismatch("restriction target mismatch".into()));
        }
        let base = self.restrict(hom.fiber_hom())?;
        let mut out = base.with_theta(hom.source().theta(), theta.t.clone())?;
        out.name = self.name.clone();
        Ok(out)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn act(&self, g: usize) -> &IntMatrix {
        &self.action[g]
    }

    pub fn act_inv(&self, g: usize) -> &IntMatrix {
        &self.action[self.group.inv(g)]
    }

    pub fn theta(&self) -> Option<&ModuleTheta> {
        self.theta.as_ref()
    }

    pub fn is_trivial_action(&self) -> bool {
        self.action.iter().all(|m| m.is_identity())
    }

    /// Determinant (sign) module of this module's action, with θ-data
    /// carried along when present.
    pub fn determinant_module(&self) -> Result<GModule> {
        let one_by_one = |d: BigInt| {
            let mut m = IntMatrix::zeros(1, 1);
            m.set(0, 0, d);
            m
        };
        let action: Vec<IntMatrix> = self
            .action
            .iter()
            .map(|m| m.det().map(one_by_one))
            .collect::<Result<_>>()?;
        if action.iter().any(|m| !m.get(0, 0).abs().is_one()) {
            return Err(Error::InvalidModule("action has non-unit determinant".into()));
        }
        let base = GModule {
            name: format!("det({})", self.name),
            group: self.group.clone(),
            rank: 1,
            action,
            theta: None,
        };
        match &self.theta {
            Some(th) => {
                let mut out = base.with_theta(&th.aut, one_by_one(th.t.det()?))?;
                out.name = format!("det({})", self.name);
                Ok(out)
            }
            None => Ok(base),
        }
    }
}

/// Resolve a module name relative to a built group: `"Z"` always works;
/// `"Ztw"` and `"Ztw^k"` are the sign modules of a Z-extension.
pub fn module_by_name(group: &BuiltGroup, name: &str) -> Result<GModule> {
    match (group, name.trim()) {
        (BuiltGroup::Finite(g), "Z") => Ok(GModule::trivial(g)),
        (BuiltGroup::Extension(e), "Z") => Ok(GModule::trivial_ext(e)),
        (BuiltGroup::Extension(e), "Ztw") => Ok(GModule::sign_ext(e)),
        (BuiltGroup::Extension(e), s) if s.starts_with("Ztw^") => {
            let k: usize = s[4..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad twist power in module name {s:?}")))?;
            Ok(GModule::sign_ext_power(e, k))
        }
        (BuiltGroup::Finite(_), s) if s.starts_with("Ztw") => Err(Error::Parse(
            "twisted coefficients need a Z-extension ambient group".into(),
        )),
        (_, s) => Err(Error::Parse(format!("unknown module name {s:?}"))),
    }
}
