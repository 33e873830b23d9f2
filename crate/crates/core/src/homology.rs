//! Homology and cohomology of a finite group with matrix-module
//! coefficients, plus maps between the resulting abelian groups.
//!
//! A degree-`q` group is computed from a resolution of length ≥ `q+1`:
//! cycles are the saturated kernel of the outgoing differential, boundaries
//! are expressed in cycle coordinates by an exact solve, and the quotient
//! is put in Smith normal form. Classes are vectors in presentation
//! coordinates; [`HMap`] moves them between groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::lift::ChainMap;
use crate::matrix::IntMatrix;
use crate::resolution::FreeResolution;
use crate::snf::{cokernel_presentation, kernel_basis, AbelianPresentation, ColumnLattice, LinearSystem};

#[derive(Clone, Debug)]
pub struct HomologyGroup {
    label: String,
    degree: usize,
    cohomology: bool,
    /// Rank of the coefficient chain group the classes live in.
    chain_rank: usize,
    /// Columns: a basis of the (co)cycle lattice inside the chain group.
    cycles: IntMatrix,
    /// Presentation of cycles modulo boundaries, in cycle coordinates.
    pres: AbelianPresentation,
}

impl HomologyGroup {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_cohomology(&self) -> bool {
        self.cohomology
    }

    pub fn chain_rank(&self) -> usize {
        self.chain_rank
    }

    pub fn presentation(&self) -> &AbelianPresentation {
        &self.pres
    }

    pub fn structure(&self) -> String {
        self.pres.structure()
    }

    /// Class of a chain known to be a cycle; errors otherwise.
    pub fn class_of_chain(&self, chain: &[BigInt]) -> Result<Vec<BigInt>> {
        if chain.len() != self.chain_rank {
            return Err(Error::Dimension("chain has wrong length".into()));
        }
        let lat = ColumnLattice::from_columns(&self.cycles);
        let coords = lat
            .coordinates(chain)
            .ok_or_else(|| Error::Mismatch("chain is not a cycle".into()))?;
        Ok(self.pres.reduce(&self.pres.projection.mul_vec(&coords)))
    }

    /// A chain representing the given class (in presentation coordinates).
    pub fn chain_of_class(&self, class: &[BigInt]) -> Result<Vec<BigInt>> {
        if class.len() != self.pres.dim() {
            return Err(Error::Dimension("class has wrong length".into()));
        }
        let cycle_coords = self.pres.lift.mul_vec(class);
        Ok(self.cycles.mul_vec(&cycle_coords))
    }

    /// All classes of the group; errors when infinite.
    pub fn elements(&self) -> Result<Vec<Vec<BigInt>>> {
        if self.pres.free_rank > 0 {
            return Err(Error::ResourceLimit("cannot enumerate an infinite group".into()));
        }
        Ok(self.pres.elements())
    }
}

fn assemble(
    label: String,
    degree: usize,
    cohomology: bool,
    outgoing: &IntMatrix,
    incoming: &IntMatrix,
    seed: u64,
) -> Result<HomologyGroup> {
    let chain_rank = outgoing.cols();
    if incoming.rows() != chain_rank {
        return Err(Error::Dimension("differentials do not match".into()));
    }
    let cycles = if outgoing.rows() == 0 {
        IntMatrix::identity(chain_rank)
    } else {
        kernel_basis(outgoing)
    };
    let sys = LinearSystem::new(cycles.clone());
    let in_cycle_coords = sys
        .solve_matrix(incoming, seed)
        .ok_or_else(|| Error::InvalidGroup("boundaries do not lie among cycles".into()))?;
    let pres = cokernel_presentation(cycles.cols(), &in_cycle_coords)?;
    Ok(HomologyGroup { label, degree, cohomology, chain_rank, cycles, pres })
}

/// `H_q(G; M)` from a resolution of length ≥ `q+1`.
pub fn homology(res: &FreeResolution, module: &GModule, q: usize, seed: u64) -> Result<HomologyGroup> {
    if res.length() < q + 1 {
        return Err(Error::ResourceLimit(format!(
            "resolution length {} cannot reach homology degree {q}",
            res.length()
        )));
    }
    let m = module.rank();
    let outgoing = if q == 0 {
        IntMatrix::zeros(0, res.rank(0) * m)
    } else {
        res.boundary(q).chain_matrix(module)?
    };
    let incoming = res.boundary(q + 1).chain_matrix(module)?;
    let label = format!("H_{q}({}; {})", res.group().name(), module.name());
    assemble(label, q, false, &outgoing, &incoming, seed)
}

/// `H^q(G; M)` from a resolution of length ≥ `q+1`.
pub fn cohomology(res: &FreeResolution, module: &GModule, q: usize, seed: u64) -> Result<HomologyGroup> {
    if res.length() < q + 1 {
        return Err(Error::ResourceLimit(format!(
            "resolution length {} cannot reach cohomology degree {q}",
            res.length()
        )));
    }
    let m = module.rank();
    let outgoing = res.boundary(q + 1).cochain_matrix(module)?;
    let incoming = if q == 0 {
        IntMatrix::zeros(res.rank(0) * m, 0)
    } else {
        res.boundary(q).cochain_matrix(module)?
    };
    let label = format!("H^{q}({}; {})", res.group().name(), module.name());
    assemble(label, q, true, &outgoing, &incoming, seed)
}

/// Shape of an abelian group as carried by an [`HMap`] endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupShape {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl GroupShape {
    pub fn of(pres: &AbelianPresentation) -> GroupShape {
        GroupShape {
            invariant_factors: pres.invariant_factors.clone(),
            free_rank: pres.free_rank,
        }
    }

    pub fn dim(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    /// Relation lattice in presentation coordinates: one column `f_i·e_i`
    /// per invariant factor.
    pub fn relations(&self) -> IntMatrix {
        let d = self.dim();
        let t = self.invariant_factors.len();
        let mut m = IntMatrix::zeros(d, t);
        for (i, f) in self.invariant_factors.iter().enumerate() {
            m.set(i, i, f.clone());
        }
        m
    }

    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = v.to_vec();
        for (i, f) in self.invariant_factors.iter().enumerate() {
            out[i] = out[i].mod_floor(f);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    /// All elements in presentation coordinates; errors when infinite.
    pub fn elements(&self) -> Result<Vec<Vec<BigInt>>> {
        if self.free_rank > 0 {
            return Err(Error::ResourceLimit("cannot enumerate an infinite group".into()));
        }
        let mut out = vec![Vec::new()];
        for f in &self.invariant_factors {
            let top = f.to_usize().ok_or_else(|| {
                Error::ResourceLimit("invariant factor too large to enumerate".into())
            })?;
            let mut next = Vec::with_capacity(out.len() * top);
            for prefix in &out {
                for v in 0..top {
                    let mut e = prefix.clone();
                    e.push(BigInt::from(v));
                    next.push(e);
                }
            }
            out = next;
        }
        Ok(out)
    }

    pub fn structure(&self) -> String {
        let mut parts: Vec<String> =
            self.invariant_factors.iter().map(|f| format!("Z/{f}")).collect();
        if self.free_rank > 0 {
            let z = if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) };
            parts.insert(0, z);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// A homomorphism between finitely generated abelian groups given in
/// presentation coordinates.
#[derive(Clone, Debug)]
pub struct HMap {
    source: GroupShape,
    target: GroupShape,
    /// `target.dim() × source.dim()`, columns reduced mod target relations.
    matrix: IntMatrix,
}

impl HMap {
    pub fn new(source: GroupShape, target: GroupShape, matrix: IntMatrix) -> Result<HMap> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Dimension("map matrix has wrong shape".into()));
        }
        // well-definedness: each source relation must land in target relations
        let rel_t = target.relations();
        let lat = if rel_t.cols() > 0 { Some(ColumnLattice::from_columns(&rel_t)) } else { None };
        for (i, f) in source.invariant_factors.iter().enumerate() {
            let mut img: Vec<BigInt> = matrix.column(i);
            for x in img.iter_mut() {
                *x *= f;
            }
            let ok = match &lat {
                Some(l) => l.contains(&img),
                None => img.iter().all(|x| x.is_zero()),
            };
            if !ok {
                return Err(Error::Mismatch(format!(
                    "map is not well defined on torsion generator {i}"
                )));
            }
        }
        let reduced = IntMatrix::from_fn(matrix.rows(), matrix.cols(), |r, c| {
            if r < target.invariant_factors.len() {
                matrix.get(r, c).mod_floor(&target.invariant_factors[r])
            } else {
                matrix.get(r, c).clone()
            }
        });
        Ok(HMap { source, target, matrix: reduced })
    }

    pub fn identity(shape: &GroupShape) -> HMap {
        HMap {
            source: shape.clone(),
            target: shape.clone(),
            matrix: IntMatrix::identity(shape.dim()),
        }
    }

    pub fn zero(source: &GroupShape, target: &GroupShape) -> HMap {
        HMap {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &GroupShape {
        &self.source
    }

    pub fn target(&self) -> &GroupShape {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.target.reduce(&self.matrix.mul_vec(v))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HMap) -> Result<HMap> {
        if other.target != self.source {
            return Err(Error::Mismatch("map composition shape mismatch".into()));
        }
        HMap::new(other.source.clone(), self.target.clone(), self.matrix.mul(&other.matrix))
    }

    pub fn add(&self, other: &HMap) -> Result<HMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Mismatch("map addition shape mismatch".into()));
        }
        HMap::new(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    pub fn neg(&self) -> HMap {
        HMap::new(self.source.clone(), self.target.clone(), self.matrix.neg())
            .expect("negation stays well defined")
    }

    pub fn scale(&self, k: i64) -> HMap {
        HMap::new(
            self.source.clone(),
            self.target.clone(),
            self.matrix.scale(&BigInt::from(k)),
        )
        .expect("scaling stays well defined")
    }

    pub fn equal(&self, other: &HMap) -> bool {
        self.source == other.source && self.target == other.target && self.matrix == other.matrix
    }

    pub fn is_zero_map(&self) -> bool {
        // the stored matrix is reduced modulo the target relations
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && {
            let id = HMap::identity(&self.source);
            self.equal(&id)
        }
    }

    /// Kernel subgroup: presentation plus its inclusion into the source.
    pub fn kernel(&self) -> Result<(GroupShape, HMap)> {
        let rel_t = self.target.relations();
        let stacked = self.matrix.hstack(&rel_t.neg());
        let ker = kernel_basis(&stacked);
        // project to the source block and saturate
        let proj = ker.submatrix(0..self.source.dim(), 0..ker.cols());
        let pre = crate::snf::column_hermite(&proj);
        // relations of the kernel: source relations expressed in `pre` coords
        let rel_s = self.source.relations();
        let coords = if pre.cols() == 0 {
            IntMatrix::zeros(0, rel_s.cols())
        } else {
            LinearSystem::new(pre.clone())
                .solve_matrix(&rel_s, 0)
                .ok_or_else(|| Error::InvalidGroup("source relations escape the kernel".into()))?
        };
        let pres = cokernel_presentation(pre.cols(), &coords)?;
        let shape = GroupShape::of(&pres);
        let incl_matrix = pre.mul(&pres.lift);
        let incl = HMap::new(shape.clone(), self.source.clone(), incl_matrix)?;
        Ok((shape, incl))
    }

    /// Cokernel quotient: presentation plus the projection from the target.
    pub fn cokernel(&self) -> Result<(GroupShape, HMap)> {
        let rel_t = self.target.relations();
        let all = self.matrix.hstack(&rel_t);
        let pres = cokernel_presentation(self.target.dim(), &all)?;
        let shape = GroupShape::of(&pres);
        let proj = HMap::new(self.target.clone(), shape.clone(), pres.projection.clone())?;
        Ok((shape, proj))
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        let (coker, _) = self.cokernel()?;
        if !coker.is_trivial() {
            return Ok(false);
        }
        let (ker, _) = self.kernel()?;
        Ok(ker.is_trivial())
    }
}

/// The map `H_q(G_s; M_s) → H_q(G_t; M_t)` induced by a chain map over
/// `φ` together with a compatible module map `μ` (`μ·ρ_s(g) =
/// ρ_t(φ(g))·μ`).
pub fn induced_map(
    f: &ChainMap,
    source_module: &GModule,
    target_module: &GModule,
    mu: &IntMatrix,
    source_h: &HomologyGroup,
    target_h: &HomologyGroup,
) -> Result<HMap> {
    let q = source_h.degree();
    if target_h.degree() != q || source_h.is_cohomology() || target_h.is_cohomology() {
        return Err(Error::Mismatch("induced map endpoints disagree".into()));
    }
    if f.max_degree() < q {
        return Err(Error::Mismatch("chain map too short for this degree".into()));
    }
    if mu.rows() != target_module.rank() || mu.cols() != source_module.rank() {
        return Err(Error::Dimension("module map has wrong shape".into()));
    }
    let phi = f.hom();
    if phi.source() != source_module.group() || phi.target() != target_module.group() {
        return Err(Error::Mismatch("modules do not match the chain map".into()));
    }
    for g in 0..source_module.group().order() {
        if mu.mul(source_module.act(g)) != target_module.act(phi.apply(g)).mul(mu) {
            return Err(Error::InvalidModule(format!(
                "module map does not intertwine the actions at {}",
                source_module.group().label(g)
            )));
        }
    }
    let fq = f.component(q);
    let mt = target_module.rank();
    let ms = source_module.rank();
    let mut big = IntMatrix::zeros(fq.rows() * mt, fq.cols() * ms);
    for i in 0..fq.rows() {
        for j in 0..fq.cols() {
            let alpha = fq.get(i, j);
            let mut block = IntMatrix::zeros(mt, mt);
            for (g, c) in alpha.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    block = block.add(&target_module.act_inv(g).scale(c));
                }
            }
            let block = block.mul(mu);
            for r in 0..mt {
                for c in 0..ms {
                    big.set(i * mt + r, j * ms + c, block.get(r, c).clone());
                }
            }
        }
    }
    map_on_classes(&big, source_h, target_h)
}

/// The map `H^q(G_t; M_t) → H^q(G_s; M_s)` induced contravariantly by a
/// chain map over `φ` and a module map `ν: M_t → M_s` with
/// `ν·ρ_t(φ(g)) = ρ_s(g)·ν`.
pub fn cohomology_induced_map(
    f: &ChainMap,
    source_module: &GModule,
    target_module: &GModule,
    nu: &IntMatrix,
    target_h: &HomologyGroup,
    source_h: &HomologyGroup,
) -> Result<HMap> {
    let q = target_h.degree();
    if source_h.degree() != q || !source_h.is_cohomology() || !target_h.is_cohomology() {
        return Err(Error::Mismatch("induced map endpoints disagree".into()));
    }
    if f.max_degree() < q {
        return Err(Error::Mismatch("chain map too short for this degree".into()));
    }
    if nu.rows() != source_module.rank() || nu.cols() != target_module.rank() {
        return Err(Error::Dimension("module map has wrong shape".into()));
    }
    let phi = f.hom();
    if phi.source() != source_module.group() || phi.target() != target_module.group() {
        return Err(Error::Mismatch("modules do not match the chain map".into()));
    }
    for g in 0..source_module.group().order() {
        if nu.mul(target_module.act(phi.apply(g))) != source_module.act(g).mul(nu) {
            return Err(Error::InvalidModule(format!(
                "module map does not intertwine the actions at {}",
                source_module.group().label(g)
            )));
        }
    }
    let fq = f.component(q);
    let mt = target_module.rank();
    let ms = source_module.rank();
    // block (j, i) = ν · Σ_g α_{ij}[g]·ρ_t(g)
    let mut big = IntMatrix::zeros(fq.cols() * ms, fq.rows() * mt);
    for i in 0..fq.rows() {
        for j in 0..fq.cols() {
            let alpha = fq.get(i, j);
            let mut block = IntMatrix::zeros(mt, mt);
            for (g, c) in alpha.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    block = block.add(&target_module.act(g).scale(c));
                }
            }
            let block = nu.mul(&block);
            for r in 0..ms {
                for c in 0..mt {
                    big.set(j * ms + r, i * mt + c, block.get(r, c).clone());
                }
            }
        }
    }
    map_on_classes(&big, target_h, source_h)
}

/// Turn a chain-level matrix into a map of presentations by pushing each
/// source generator through.
pub fn map_on_classes(
    chain_matrix: &IntMatrix,
    source_h: &HomologyGroup,
    target_h: &HomologyGroup,
) -> Result<HMap> {
    if chain_matrix.cols() != source_h.chain_rank() || chain_matrix.rows() != target_h.chain_rank() {
        return Err(Error::Dimension("chain matrix does not match the groups".into()));
    }
    let s_dim = source_h.pres.dim();
    let mut cols = Vec::with_capacity(s_dim);
    for a in 0..s_dim {
        let mut unit = vec![BigInt::zero(); s_dim];
        unit[a] = BigInt::one();
        let chain = source_h.chain_of_class(&unit)?;
        let image = chain_matrix.mul_vec(&chain);
        cols.push(target_h.class_of_chain(&image)?);
    }
    let matrix = IntMatrix::from_columns(target_h.pres.dim(), cols);
    HMap::new(
        GroupShape::of(&source_h.pres),
        GroupShape::of(&target_h.pres),
        matrix,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmodule::GModule;
    use crate::group::{cyclic, product, quaternion8};
    use crate::hom::GroupHom;
    use crate::lift::lift_chain_map;
    use crate::resolution::{generic_resolution, periodic_resolution, tensor_resolution};

    fn z4_res() -> (crate::group::FiniteGroup, FreeResolution) {
        let z4 = cyclic(4).unwrap();
        let res = periodic_resolution(&z4, 8).unwrap();
        (z4, res)
    }

    #[test]
    fn homology_of_cyclic_group_with_trivial_coefficients() {
        let (z4, res) = z4_res();
        let m = GModule::trivial(&z4);
        assert_eq!(homology(&res, &m, 0, 0).unwrap().structure(), "Z");
        for q in [1usize, 3, 5, 7] {
            assert_eq!(homology(&res, &m, q, 0).unwrap().structure(), "Z/4", "degree {q}");
        }
        for q in [2usize, 4, 6] {
            assert_eq!(homology(&res, &m, q, 0).unwrap().structure(), "0", "degree {q}");
        }
    }

    #[test]
    fn cohomology_of_cyclic_group() {
        let (z4, res) = z4_res();
        let m = GModule::trivial(&z4);
        assert_eq!(cohomology(&res, &m, 0, 0).unwrap().structure(), "Z");
        for q in [2usize, 4, 6] {
            assert_eq!(cohomology(&res, &m, q, 0).unwrap().structure(), "Z/4", "degree {q}");
        }
        for q in [1usize, 3, 5] {
            assert_eq!(cohomology(&res, &m, q, 0).unwrap().structure(), "0", "degree {q}");
        }
    }

    #[test]
    fn homology_of_quaternion_group() {
        let q8 = quaternion8();
        let res = generic_resolution(&q8, 4, 0).unwrap();
        let m = GModule::trivial(&q8);
        assert_eq!(homology(&res, &m, 0, 0).unwrap().structure(), "Z");
        assert_eq!(homology(&res, &m, 1, 0).unwrap().structure(), "Z/2 + Z/2");
        assert_eq!(homology(&res, &m, 2, 0).unwrap().structure(), "0");
        assert_eq!(homology(&res, &m, 3, 0).unwrap().structure(), "Z/8");
    }

    #[test]
    fn homology_of_product_matches_kunneth() {
        let z4 = cyclic(4).unwrap();
        let z2 = cyclic(2).unwrap();
        let g = product(&z4, &z2).unwrap();
        let ra = periodic_resolution(&z4, 6).unwrap();
        let rb = periodic_resolution(&z2, 6).unwrap();
        let res = tensor_resolution(&g, &ra, &rb, 6).unwrap();
        let m = GModule::trivial(&g);
        let expect = ["Z", "Z/2 + Z/4", "Z/2", "Z/2 + Z/2 + Z/4", "Z/2 + Z/2", "Z/2 + Z/2 + Z/2 + Z/4"];
        for (q, e) in expect.iter().enumerate() {
            assert_eq!(homology(&res, &m, q, 0).unwrap().structure(), *e, "degree {q}");
        }
    }

    #[test]
    fn seed_does_not_change_answers() {
        let q8 = quaternion8();
        let res = generic_resolution(&q8, 4, 0).unwrap();
        let m = GModule::trivial(&q8);
        let a = homology(&res, &m, 3, 0).unwrap();
        let b = homology(&res, &m, 3, 99).unwrap();
        assert_eq!(a.structure(), b.structure());
    }

    #[test]
    fn class_chain_round_trip() {
        let (z4, res) = z4_res();
        let m = GModule::trivial(&z4);
        let h = homology(&res, &m, 3, 0).unwrap();
        let class = vec![BigInt::from(3)];
        let chain = h.chain_of_class(&class).unwrap();
        assert_eq!(h.class_of_chain(&chain).unwrap(), class);
    }

    #[test]
    fn induced_map_of_inversion_negates_odd_homology() {
        let (z4, res) = z4_res();
        let m = GModule::trivial(&z4);
        let inv = GroupHom::from_gen_images(&z4, &z4, &[3]).unwrap();
        let lift = lift_chain_map(&res, &res, &inv, 3, 0).unwrap();
        let h1 = homology(&res, &m, 1, 0).unwrap();
        let h3 = homology(&res, &m, 3, 0).unwrap();
        let mu = IntMatrix::identity(1);
        let f1 = induced_map(&lift, &m, &m, &mu, &h1, &h1).unwrap();
        let f3 = induced_map(&lift, &m, &m, &mu, &h3, &h3).unwrap();
        // inversion acts by (−1)^k on H_{2k−1}: by −1 on H_1, by +1 on H_3
        assert!(f1.equal(&HMap::identity(f1.source()).neg()));
        assert!(f3.is_identity());
        assert!(f1.is_isomorphism().unwrap());
    }

    #[test]
    fn hmap_kernel_and_cokernel() {
        // multiplication by 2 on Z/4: kernel Z/2, cokernel Z/2
        let shape = GroupShape { invariant_factors: vec![BigInt::from(4)], free_rank: 0 };
        let two = HMap::new(shape.clone(), shape.clone(), IntMatrix::from_rows(vec![vec![2]])).unwrap();
        let (ker, incl) = two.kernel().unwrap();
        assert_eq!(ker.structure(), "Z/2");
        // the kernel generator includes as the element 2 ∈ Z/4
        assert_eq!(incl.apply(&[BigInt::one()]), vec![BigInt::from(2)]);
        let (coker, proj) = two.cokernel().unwrap();
        assert_eq!(coker.structure(), "Z/2");
        assert_eq!(proj.apply(&[BigInt::one()]), vec![BigInt::one()]);
        // zero map on Z/4: kernel is everything
        let zero = HMap::zero(&shape, &shape);
        assert_eq!(zero.kernel().unwrap().0.structure(), "Z/4");
        assert!(!zero.is_identity());
        assert!(zero.is_zero_map());
    }

    #[test]
    fn hmap_well_definedness_enforced() {
        // Z/2 → Z/4 sending the generator to 1 is not a homomorphism
        let s = GroupShape { invariant_factors: vec![BigInt::from(2)], free_rank: 0 };
        let t = GroupShape { invariant_factors: vec![BigInt::from(4)], free_rank: 0 };
        assert!(HMap::new(s.clone(), t.clone(), IntMatrix::from_rows(vec![vec![1]])).is_err());
        assert!(HMap::new(s, t, IntMatrix::from_rows(vec![vec![2]])).is_ok());
    }

    #[test]
    fn twisted_coefficients_over_cyclic_group() {
        // Z with b acting by −1 over Z/4: H_q alternates 0 / Z/2
        let z4 = cyclic(4).unwrap();
        let res = periodic_resolution(&z4, 5).unwrap();
        let neg = IntMatrix::identity(1).neg();
        let m = GModule::from_gen_images("Zsign", &z4, 1, &[neg]).unwrap();
        assert_eq!(homology(&res, &m, 0, 0).unwrap().structure(), "Z/2");
        assert_eq!(homology(&res, &m, 1, 0).unwrap().structure(), "0");
        assert_eq!(homology(&res, &m, 2, 0).unwrap().structure(), "Z/2");
        assert_eq!(homology(&res, &m, 3, 0).unwrap().structure(), "0");
    }
}
