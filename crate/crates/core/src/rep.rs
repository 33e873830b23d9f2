//! Integer matrix representations of finite groups and Z-extensions.
//!
//! A representation is tabulated on the whole finite group (extended from
//! generator images by breadth-first search, with consistency checks); for
//! Z-extensions it additionally carries the matrix of the infinite
//! generator, validated against the monodromy.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::extension::ZExtension;
use crate::group::FiniteGroup;
use crate::hom::{GroupAut, GroupHom};
use crate::matrix::IntMatrix;

#[derive(Clone, Debug)]
pub struct MatrixRep {
    name: String,
    dim: usize,
    group: FiniteGroup,
    matrices: Vec<IntMatrix>,
    /// For Z-extension representations: the matrix of the infinite generator.
    z_image: Option<IntMatrix>,
    /// Monodromy the z-image was validated against.
    theta: Option<GroupAut>,
}

pub(crate) fn extend_by_generators(
    group: &FiniteGroup,
    gen_images: &[IntMatrix],
    dim: usize,
) -> Result<Vec<IntMatrix>> {
    let gens = group.generators();
    if gen_images.len() != gens.len() {
        return Err(Error::InvalidRep(format!(
            "expected {} generator matrices, got {}",
            gens.len(),
            gen_images.len()
        )));
    }
    for m in gen_images {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::InvalidRep("generator matrix has wrong shape".into()));
        }
    }
    let mut matrices: Vec<Option<IntMatrix>> = vec![None; group.order()];
    matrices[group.identity()] = Some(IntMatrix::identity(dim));
    let mut frontier = vec![group.identity()];
    while let Some(g) = frontier.pop() {
        for (k, (_, s)) in gens.iter().enumerate() {
            let h = group.mul(g, *s);
            let img = matrices[g].as_ref().unwrap().mul(&gen_images[k]);
            match &matrices[h] {
                None => {
                    matrices[h] = Some(img);
                    frontier.push(h);
                }
                Some(existing) => {
                    if existing != &img {
                        return Err(Error::InvalidRep(format!(
                            "generator matrices violate a relation at {}",
                            group.label(h)
                        )));
                    }
                }
            }
        }
    }
    // A second full pass catches relations not on the search tree.
    let mats: Vec<IntMatrix> = matrices.into_iter().map(|m| m.unwrap()).collect();
    for a in 0..group.order() {
        for b in 0..group.order() {
            if mats[a].mul(&mats[b]) != mats[group.mul(a, b)] {
                return Err(Error::InvalidRep(format!(
                    "matrices are not multiplicative at ({}, {})",
                    group.label(a),
                    group.label(b)
                )));
            }
        }
    }
    Ok(mats)
}

impl MatrixRep {
    pub fn from_gen_images(
        name: &str,
        group: &FiniteGroup,
        dim: usize,
        gen_images: &[IntMatrix],
    ) -> Result<MatrixRep> {
        let matrices = extend_by_generators(group, gen_images, dim)?;
        Ok(MatrixRep {
            name: name.to_string(),
            dim,
            group: group.clone(),
            matrices,
            z_image: None,
            theta: None,
        })
    }

    /// Representation of a Z-extension: fiber generator images plus the
    /// matrix `A` of the infinite generator, which must satisfy
    /// `A·ρ(g) = ρ(θ(g))·A` and be unimodular.
    pub fn for_extension(
        name: &str,
        ext: &ZExtension,
        dim: usize,
        gen_images: &[IntMatrix],
        z_image: IntMatrix,
    ) -> Result<MatrixRep> {
        let matrices = extend_by_generators(ext.fiber(), gen_images, dim)?;
        if z_image.rows() != dim || z_image.cols() != dim {
            return Err(Error::InvalidRep("infinite-generator matrix has wrong shape".into()));
        }
        if !z_image.det()?.abs().is_one() {
            return Err(Error::InvalidRep("infinite-generator matrix is not unimodular".into()));
        }
        for g in 0..ext.fiber().order() {
            if z_image.mul(&matrices[g]) != matrices[ext.theta().apply(g)].mul(&z_image) {
                return Err(Error::InvalidRep(format!(
                    "infinite generator does not intertwine the monodromy at {}",
                    ext.fiber().label(g)
                )));
            }
        }
        Ok(MatrixRep {
            name: name.to_string(),
            dim,
            group: ext.fiber().clone(),
            matrices,
            z_image: Some(z_image),
            theta: Some(ext.theta().clone()),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn matrix(&self, g: usize) -> &IntMatrix {
        &self.matrices[g]
    }

    pub fn z_image(&self) -> Option<&IntMatrix> {
        self.z_image.as_ref()
    }

    pub fn theta(&self) -> Option<&GroupAut> {
        self.theta.as_ref()
    }

    /// Restrict along a homomorphism into the (finite part of the) context
    /// group. The result is a representation of `hom.source()`.
    pub fn restrict(&self, name: &str, hom: &GroupHom) -> Result<MatrixRep> {
        if hom.target() != &self.group {
            return Err(Error::Mismatch("restriction target does not match representation group".into()));
        }
        let gen_images: Vec<IntMatrix> = hom
            .source()
            .generators()
            .iter()
            .map(|(_, g)| self.matrices[hom.apply(*g)].clone())
            .collect();
        MatrixRep::from_gen_images(name, hom.source(), self.dim, &gen_images)
    }

    pub fn is_orthogonal(&self) -> bool {
        let check = |m: &IntMatrix| m.transpose().mul(m).is_identity();
        self.matrices.iter().all(check) && self.z_image.as_ref().map_or(true, check)
    }

    pub fn is_signed_permutation(&self) -> bool {
        let check = |m: &IntMatrix| {
            (0..m.rows()).all(|r| {
                (0..m.cols()).filter(|&c| !m.get(r, c).is_zero()).count() == 1
            }) && (0..m.cols()).all(|c| {
                (0..m.rows())
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| m.get(r, c))
                    .all(|x| x.abs().is_one())
            })
        };
        self.matrices.iter().all(check) && self.z_image.as_ref().map_or(true, check)
    }

    /// Determinant character: `(generator name, det)` for each generator,
    /// with the infinite generator listed as `"z"` when present.
    pub fn det_character(&self) -> Vec<(String, i64)> {
        let as_i64 = |m: &IntMatrix| -> i64 {
            let d = m.det().expect("representation matrices are square");
            if d.is_one() {
                1
            } else if (-d.clone()).is_one() {
                -1
            } else {
                0
            }
        };
        let mut out: Vec<(String, i64)> = self
            .group
            .generators()
            .iter()
            .map(|(name, g)| (name.clone(), as_i64(&self.matrices[*g])))
            .collect();
        if let Some(z) = &self.z_image {
            out.push(("z".to_string(), as_i64(z)));
        }
        out
    }
}

/// 2×2 rotation by `w` quarter-, half-, or full turns: the `w`-th power of
/// the order-`n` standard rotation, for `n ∈ {1, 2, 4}`.
pub fn rotation_matrix(n: usize, w: usize) -> Result<IntMatrix> {
    let base = match n {
        1 => IntMatrix::identity(2),
        2 => IntMatrix::identity(2).neg(),
        4 => IntMatrix::from_rows(vec![vec![0, -1], vec![1, 0]]),
        _ => return Err(Error::NotRotation(format!("no integral rotation of order {n}"))),
    };
    let mut out = IntMatrix::identity(2);
    for _ in 0..(w % n) {
        out = out.mul(&base);
    }
    Ok(out)
}

/// If `m` is a power of the standard order-`n` rotation, return the
/// exponent.
pub fn rotation_weight(m: &IntMatrix, n: usize) -> Result<usize> {
    for w in 0..n {
        if &rotation_matrix(n, w)? == m {
            return Ok(w);
        }
    }
    Err(Error::NotRotation(format!("matrix is not an order-{n} rotation power")))
}

fn j_rot() -> IntMatrix {
    IntMatrix::from_rows(vec![vec![0, -1], vec![1, 0]])
}

fn s_flip() -> IntMatrix {
    IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]])
}

fn block_swap_4() -> IntMatrix {
    IntMatrix::from_rows(vec![
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
    ])
}

/// The standard 2-dimensional representation of `Z/4 ⋊ Z` (rotation for the
/// fiber generator, reflection for the infinite one).
pub fn rep_klein(ext: &ZExtension) -> Result<MatrixRep> {
    MatrixRep::for_extension("A", ext, 2, &[j_rot()], s_flip())
}

/// The 4-dimensional representation of `(Z/4 × Z/2) ⋊ Z`: the fiber rotates
/// both planes at once, the order-2 generator swaps them.
pub fn rep_mid(ext: &ZExtension) -> Result<MatrixRep> {
    let b = IntMatrix::block_diag(&[&j_rot(), &j_rot()]);
    let s2 = s_flip();
    let z = IntMatrix::block_diag(&[&s2, &s2]);
    MatrixRep::for_extension("A_mid", ext, 4, &[b, block_swap_4()], z)
}

/// The 4-dimensional representation of `((Z/4 × Z/4) ⋊ Z/2) ⋊ Z`: each
/// fiber factor rotates its own plane, the order-2 generator swaps planes.
pub fn rep_double(ext: &ZExtension) -> Result<MatrixRep> {
    let i2 = IntMatrix::identity(2);
    let b1 = IntMatrix::block_diag(&[&j_rot(), &i2]);
    let b2 = IntMatrix::block_diag(&[&i2, &j_rot()]);
    let s2 = s_flip();
    let z = IntMatrix::block_diag(&[&s2, &s2]);
    MatrixRep::for_extension("A_double", ext, 4, &[b1, b2, block_swap_4()], z)
}

/// The 4-dimensional fixed-point-free representation of the quaternion
/// group.
pub fn rep_quaternion(q8: &FiniteGroup) -> Result<MatrixRep> {
    let j = j_rot();
    let j_inv = j.mul(&j).mul(&j);
    let i_img = IntMatrix::block_diag(&[&j, &j_inv]);
    let j_img = IntMatrix::block_diag(&[&j, &j]).mul(&block_swap_4());
    MatrixRep::from_gen_images("A_q8", q8, 4, &[i_img, j_img])
}
