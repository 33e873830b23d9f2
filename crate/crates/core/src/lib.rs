//! Exact-arithmetic homological algebra for finite groups and their
//! semidirect extensions by Z.
//!
//! The crate is organized bottom-up:
//!
//! * [`matrix`], [`snf`] — dense BigInt matrices, Smith/Hermite normal
//!   forms, integer kernels and solving, abelian-group presentations.
//! * [`group`], [`hom`], [`extension`], [`rep`] — finite groups as
//!   multiplication tables, validated homomorphisms, Z-extensions given by
//!   an involution of the fiber, and signed-permutation matrix models.
//! * [`gmodule`], [`gring`] — coefficient systems (integer lattices with a
//!   group action) and group-ring matrices.
//! * [`resolution`], [`lift`] — free resolutions (periodic, tensor,
//!   generic) and chain-map lifting, including diagonal approximations.
//! * [`homology`], [`transfer`], [`product`], [`wang`] — homology and
//!   cohomology with canonical coordinates, induced maps, index-2
//!   transfers, cup/cap products, Euler classes, and the Wang sequence for
//!   extensions by Z.
//! * [`engine`] — a caching facade tying the layers together, plus the
//!   JSON-able result types used by the CLI.

pub mod cache;
pub mod engine;
pub mod error;
pub mod extension;
pub mod gmodule;
pub mod gring;
pub mod group;
pub mod hom;
pub mod homology;
pub mod lift;
pub mod matrix;
pub mod product;
pub mod rep;
pub mod resolution;
pub mod snf;
pub mod transfer;
pub mod wang;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use snf::{
    cokernel_presentation, hermite_normal_form, kernel_basis, smith_normal_form, solve_integer,
    AbelianPresentation, ColumnLattice, LinearSystem, SmithDecomposition,
};
