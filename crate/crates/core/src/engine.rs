//! Session facade tying the layers together: parses group specs, owns the
//! per-session resolution and diagonal caches (plus an optional disk
//! cache), resolves coefficient-module names, and packages computations as
//! plain serializable data for the CLI.
//!
//! Every resolution is built once per `(group, seed)` at the full length
//! budget, so all computations in a session share a single coordinate
//! system.  The cache is write-once per key with freely concurrent readers;
//! all computations are pure given the cached resolutions.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::cache;
use crate::error::{Error, Result};
use crate::extension::ZExtension;
use crate::gmodule::GModule;
use crate::group::{build_group, BuiltGroup, FiniteGroup, GroupExpr, GroupStructure};
use crate::homology::{cohomology, homology, GroupShape, HMap, HomologyGroup};
use crate::lift::{diagonal_by_restriction, diagonal_tensor_combine, DiagonalApprox};
use crate::resolution::{
    generic_resolution, periodic_resolution, tensor_resolution, FreeResolution,
};
use crate::wang::{wang_cohomology, wang_homology, WangResult};

/// Highest homological degree the length budget can serve.
pub const MAX_DEGREE: usize = 7;
/// Resolutions are always built to full length (`MAX_DEGREE + 1`).
pub const RESOLUTION_LENGTH: usize = MAX_DEGREE + 1;

pub struct Engine {
    cache_dir: Option<PathBuf>,
    seed: u64,
    resolutions: RwLock<BTreeMap<String, Arc<FreeResolution>>>,
    diagonals: RwLock<BTreeMap<String, Arc<DiagonalApprox>>>,
}

impl Engine {
    pub fn new(cache_dir: Option<PathBuf>, seed: u64) -> Engine {
        Engine {
            cache_dir,
            seed,
            resolutions: RwLock::new(BTreeMap::new()),
            diagonals: RwLock::new(BTreeMap::new()),
        }
    }

    /// In-memory engine with the canonical pivot seed.
    pub fn default_session() -> Engine {
        Engine::new(None, 0)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    /// Parse and build a group spec (preset name or inline JSON).
    pub fn build(&self, spec: &str) -> Result<BuiltGroup> {
        build_group(&GroupExpr::parse(spec)?)
    }

    fn check_degree(&self, q: usize) -> Result<()> {
        if q > MAX_DEGREE {
            return Err(Error::ResourceLimit(format!(
                "degree {q} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        Ok(())
    }

    fn builder_for(group: &FiniteGroup) -> &'static str {
        match group.structure() {
            GroupStructure::Cyclic(_) => "periodic",
            GroupStructure::Product { .. } => "tensor",
            _ => "generic",
        }
    }

    /// The session resolution of a finite group: periodic for cyclic groups,
    /// a tensor of the factor resolutions for products, generic otherwise.
    pub fn resolution(&self, group: &FiniteGroup) -> Result<Arc<FreeResolution>> {
        let key = format!("{}#{}", group.name(), self.seed);
        if let Some(hit) = self.resolutions.read().expect("resolution cache").get(&key) {
            return Ok(hit.clone());
        }
        let builder = Self::builder_for(group);
        let mut from_disk = false;
        let res = match self
            .cache_dir
            .as_deref()
            .and_then(|dir| cache::load(dir, group, builder, RESOLUTION_LENGTH, self.seed))
        {
            Some(res) => {
                from_disk = true;
                res
            }
            None => self.build_resolution(group)?,
        };
        if !from_disk {
            if let Some(dir) = self.cache_dir.as_deref() {
                cache::store(dir, &res)?;
            }
        }
        let arc = Arc::new(res);
        let mut map = self.resolutions.write().expect("resolution cache");
        Ok(map.entry(key).or_insert(arc).clone())
    }

    fn build_resolution(&self, group: &FiniteGroup) -> Result<FreeResolution> {
        match group.structure() {
            GroupStructure::Cyclic(_) => periodic_resolution(group, RESOLUTION_LENGTH),
            GroupStructure::Product { left, right } => {
                let rl = self.resolution(left)?;
                let rr = self.resolution(right)?;
                tensor_resolution(group, &rl, &rr, RESOLUTION_LENGTH)
            }
            _ => generic_resolution(group, RESOLUTION_LENGTH, self.seed),
        }
    }

    /// The session diagonal approximation, to the full degree budget.
    /// Products combine the factor diagonals; everything else lifts into the
    /// restricted tensor square (which bounds the order by 8).
    pub fn diagonal(&self, group: &FiniteGroup) -> Result<Arc<DiagonalApprox>> {
        let key = format!("{}#{}", group.name(), self.seed);
        if let Some(hit) = self.diagonals.read().expect("diagonal cache").get(&key) {
            return Ok(hit.clone());
        }
        let res = self.resolution(group)?;
        let diag = match group.structure() {
            GroupStructure::Product { left, right } => {
                let dl = self.diagonal(left)?;
                let dr = self.diagonal(right)?;
                let rl = self.resolution(left)?;
                let rr = self.resolution(right)?;
                diagonal_tensor_combine(&res, &rl, &rr, &dl, &dr, RESOLUTION_LENGTH)?
            }
            _ => diagonal_by_restriction(&res, RESOLUTION_LENGTH, self.seed)?,
        };
        let arc = Arc::new(diag);
        let mut map = self.diagonals.write().expect("diagonal cache");
        Ok(map.entry(key).or_insert(arc).clone())
    }

    /// Resolve a coefficient-module name relative to an ambient group:
    /// `"Z"` everywhere; `"Ztw"` and `"Ztw^k"` over Z-extensions only.
    pub fn module(&self, built: &BuiltGroup, name: &str) -> Result<GModule> {
        match built {
            BuiltGroup::Finite(g) => match name {
                "Z" => Ok(GModule::trivial(g)),
                "Ztw" => Err(Error::InvalidModule(
                    "Ztw twists through a Z-extension; this group has none".into(),
                )),
                other => Err(Error::Parse(format!("unknown module name {other:?}"))),
            },
            BuiltGroup::Extension(e) => {
                if name == "Z" {
                    Ok(GModule::trivial_ext(e))
                } else if name == "Ztw" {
                    Ok(GModule::sign_ext(e))
                } else if let Some(k) =
                    name.strip_prefix("Ztw^").and_then(|s| s.parse::<usize>().ok())
                {
                    Ok(GModule::sign_ext_power(e, k))
                } else {
                    Err(Error::Parse(format!("unknown module name {name:?}")))
                }
            }
        }
    }

    pub fn homology_of(&self, group: &FiniteGroup, module: &GModule, q: usize) -> Result<HomologyGroup> {
        self.check_degree(q)?;
        let res = self.resolution(group)?;
        homology(&res, module, q, self.seed)
    }

    pub fn cohomology_of(&self, group: &FiniteGroup, module: &GModule, q: usize) -> Result<HomologyGroup> {
        self.check_degree(q)?;
        let res = self.resolution(group)?;
        cohomology(&res, module, q, self.seed)
    }

    pub fn wang_of(
        &self,
        ext: &ZExtension,
        module: &GModule,
        q: usize,
        on_cohomology: bool,
    ) -> Result<WangResult> {
        self.check_degree(q)?;
        let res = self.resolution(ext.fiber())?;
        if on_cohomology {
            wang_cohomology(ext, &res, module, q, self.seed)
        } else {
            wang_homology(ext, &res, module, q, self.seed)
        }
    }

    /// The computation behind `compute`: homology or cohomology of a group
    /// spec with a named module, Wang data included for Z-extensions.
    pub fn compute(
        &self,
        group_spec: &str,
        module_name: &str,
        degree: usize,
        on_cohomology: bool,
    ) -> Result<ComputeReport> {
        let expr = GroupExpr::parse(group_spec)?;
        let built = build_group(&expr)?;
        let module = self.module(&built, module_name)?;
        let kind = if on_cohomology { "cohomology" } else { "homology" };
        match &built {
            BuiltGroup::Finite(g) => {
                let h = if on_cohomology {
                    self.cohomology_of(g, &module, degree)?
                } else {
                    self.homology_of(g, &module, degree)?
                };
                let shape = GroupShape::of(h.presentation());
                Ok(ComputeReport {
                    group: expr.canonical_name(),
                    module: module.name().to_string(),
                    degree,
                    kind: kind.to_string(),
                    result: Some(ShapeData::of(&shape)?),
                    wang: None,
                })
            }
            BuiltGroup::Extension(e) => {
                let w = self.wang_of(e, &module, degree, on_cohomology)?;
                let total = match w.total() {
                    Ok(t) => Some(ShapeData::of(&t)?),
                    Err(_) => None,
                };
                let wang = WangData {
                    status: if w.is_resolved() { "resolved" } else { "ambiguous" }.to_string(),
                    left: ShapeData::of(&w.left_shape())?,
                    right: ShapeData::of(&w.right_shape())?,
                    total: total.clone(),
                };
                Ok(ComputeReport {
                    group: expr.canonical_name(),
                    module: module.name().to_string(),
                    degree,
                    kind: kind.to_string(),
                    result: total,
                    wang: Some(wang),
                })
            }
        }
    }
}

fn small(v: &num_bigint::BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::ResourceLimit("integer too large for the report encoding".into()))
}

/// Invariant-factor description of a finitely generated abelian group, as
/// emitted in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeData {
    pub invariant_factors: Vec<i64>,
    pub free_rank: usize,
    pub structure: String,
}

impl ShapeData {
    pub fn of(shape: &GroupShape) -> Result<ShapeData> {
        Ok(ShapeData {
            invariant_factors: shape
                .invariant_factors
                .iter()
                .map(small)
                .collect::<Result<_>>()?,
            free_rank: shape.free_rank,
            structure: shape.structure(),
        })
    }
}

/// A map of abelian groups in canonical coordinates, with its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapData {
    pub source: ShapeData,
    pub target: ShapeData,
    /// Row-major matrix, one inner array per row.
    pub matrix: Vec<Vec<i64>>,
}

impl MapData {
    pub fn of(map: &HMap) -> Result<MapData> {
        let m = map.matrix();
        let mut rows = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            let mut row = Vec::with_capacity(m.cols());
            for j in 0..m.cols() {
                row.push(small(m.get(i, j))?);
            }
            rows.push(row);
        }
        Ok(MapData {
            source: ShapeData::of(map.source())?,
            target: ShapeData::of(map.target())?,
            matrix: rows,
        })
    }
}

/// Two-column Wang description for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WangData {
    /// `"resolved"` when one column vanishes, `"ambiguous"` otherwise.
    pub status: String,
    pub left: ShapeData,
    pub right: ShapeData,
    pub total: Option<ShapeData>,
}

/// Result of a `compute` invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub group: String,
    pub module: String,
    pub degree: usize,
    pub kind: String,
    /// The computed group, when determined (always for finite groups;
    /// for Z-extensions only when the Wang sequence resolves).
    pub result: Option<ShapeData>,
    /// Present exactly for Z-extension computations.
    pub wang: Option<WangData>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::ResolutionKind;

    #[test]
    fn picks_the_right_builder_per_group() {
        let engine = Engine::default_session();
        let BuiltGroup::Finite(z4) = engine.build("Z4").unwrap() else { panic!() };
        assert!(matches!(engine.resolution(&z4).unwrap().kind(), ResolutionKind::Periodic));
        let BuiltGroup::Finite(prod) = engine.build("Z4xZ2").unwrap() else { panic!() };
        assert!(matches!(engine.resolution(&prod).unwrap().kind(), ResolutionKind::Tensor { .. }));
        let BuiltGroup::Finite(q8) = engine.build("Q8").unwrap() else { panic!() };
        assert!(matches!(engine.resolution(&q8).unwrap().kind(), ResolutionKind::Generic));
        // The session cache returns the same resolution object.
        let a = engine.resolution(&z4).unwrap();
        let b = engine.resolution(&z4).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn computes_the_classic_values() {
        let engine = Engine::default_session();
        let odd = engine.compute("Z4", "Z", 5, false).unwrap();
        assert_eq!(odd.result.unwrap().structure, "Z/4");
        let even = engine.compute("Z4", "Z", 4, false).unwrap();
        assert_eq!(even.result.unwrap().structure, "0");
        let q8 = engine.compute("Q8", "Z", 3, false).unwrap();
        assert_eq!(q8.result.unwrap().structure, "Z/8");
        let h2 = engine.compute("Z4", "Z", 2, true).unwrap();
        assert_eq!(h2.result.unwrap().structure, "Z/4");
    }

    #[test]
    fn computes_wang_data_for_extensions() {
        let engine = Engine::default_session();
        let resolved = engine.compute("Z4_sd_Z", "Ztw", 5, false).unwrap();
        let wang = resolved.wang.unwrap();
        assert_eq!(wang.status, "resolved");
        assert_eq!(wang.total.unwrap().structure, "Z/4");
        assert_eq!(resolved.result.unwrap().structure, "Z/4");

        let ambiguous = engine.compute("Z4xZ2_sd_Z", "Z", 2, false).unwrap();
        let wang = ambiguous.wang.unwrap();
        assert_eq!(wang.status, "ambiguous");
        assert!(wang.total.is_none());
        assert!(ambiguous.result.is_none());
    }

    #[test]
    fn module_names_resolve_per_ambient_group() {
        let engine = Engine::default_session();
        let ext = engine.build("Z4_sd_Z").unwrap();
        assert_eq!(engine.module(&ext, "Z").unwrap().name(), "Z");
        assert_eq!(engine.module(&ext, "Ztw").unwrap().name(), "Ztw");
        assert_eq!(engine.module(&ext, "Ztw^3").unwrap().name(), "Ztw^3");
        let finite = engine.build("Z4").unwrap();
        assert!(engine.module(&finite, "Ztw").is_err());
        assert!(engine.module(&finite, "bogus").is_err());
        assert!(engine.module(&ext, "bogus").is_err());
    }

    #[test]
    fn budget_violations_are_resource_errors() {
        let engine = Engine::default_session();
        assert!(matches!(
            engine.compute("Z4", "Z", 8, false),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn disk_cache_is_reused_across_engines() {
        let dir = std::env::temp_dir().join(format!("herbert-engine-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let first = Engine::new(Some(dir.clone()), 0);
        let before = first.compute("Q8", "Z", 3, false).unwrap();
        let file = cache::cache_file(&dir, "Q8", "generic", RESOLUTION_LENGTH, 0);
        assert!(file.exists(), "resolution was persisted");

        let second = Engine::new(Some(dir.clone()), 0);
        let after = second.compute("Q8", "Z", 3, false).unwrap();
        assert_eq!(before, after);
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn seeds_change_pivoting_but_not_structure() {
        let a = Engine::new(None, 0);
        let b = Engine::new(None, 12345);
        for q in 0..=5 {
            let x = a.compute("Z4xZ2", "Z", q, false).unwrap();
            let y = b.compute("Z4xZ2", "Z", q, false).unwrap();
            assert_eq!(x.result.unwrap().structure, y.result.unwrap().structure);
        }
    }
}
