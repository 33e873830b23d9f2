use thiserror::Error;

/// Errors surfaced by the algebra layers.
///
/// `ResourceLimit` is the only variant callers are expected to branch on
/// programmatically (the CLI maps it to its own exit code); the rest carry
/// human-readable context for reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular or unsolvable system: {0}")]
    Unsolvable(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("not a homomorphism: image of {witness} is inconsistent")]
    NotAHomomorphism { witness: String },

    #[error("generators do not generate the group (reached {reached} of {order} elements)")]
    NotGenerating { reached: usize, order: usize },

    #[error("invalid module action: {0}")]
    InvalidModule(String),

    #[error("invalid representation: {0}")]
    InvalidRep(String),

    #[error("representation is not of rotation type: {0}")]
    NotRotation(String),

    #[error("group is not cyclic; periodic resolutions need a full-order generator")]
    NotCyclic,

    #[error("subgroup is not normal or not index 2: {0}")]
    BadIndexTwo(String),

    #[error("not compatible with the extension automorphism: {0}")]
    NotThetaInvariant(String),

    #[error("Wang term does not vanish in degree {degree}: extension-ambiguous")]
    ExtensionAmbiguous { degree: usize },

    #[error("degree or module mismatch: {0}")]
    Mismatch(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("malformed spec: {0}")]
    Parse(String),

    #[error("cache I/O: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
