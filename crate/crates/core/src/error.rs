//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gram matrix is not symmetric at entry ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("gram matrix is degenerate; kernel vector {0:?}")]
    Degenerate(Vec<String>),
    #[error("rescale by zero is not a lattice operation")]
    ZeroScale,
    #[error("operation requires an even lattice")]
    OddLattice,
    #[error("operation requires a positive definite lattice")]
    NotPositiveDefinite,
    #[error("lattice is not 2-elementary: invariant factors {0:?}")]
    NotTwoElementary(Vec<u64>),
    #[error("sublattice rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("invalid root type {0}{1}")]
    BadRootType(char, usize),
    #[error("kodaira type {0} has no reducible-fiber diagram")]
    IrreducibleKodaira(String),
    #[error("component index {0} is not a simple component of {1}")]
    BadComponentIndex(usize, String),
    #[error("unknown kodaira tag: {0}")]
    BadKodairaTag(String),
    #[error("niemeier glue word {0:?} produces a non-integral pairing")]
    BadGlueWord(Vec<u32>),
    #[error("{0} admits no embedding lemma; supported: A8, D8, E8")]
    UnsupportedT0(String),
    #[error("no primitive embedding found in {0} (component {1}); data bug")]
    NoEmbedding(String, usize),
    #[error("config error: {0}")]
    Config(String),
    #[error("divisor is not a section of this fibration: {0}")]
    NotSection(String),
    #[error("fiber geometry underdetermined: {0}")]
    PartialFiber(String),
    #[error("class span is rank-deficient")]
    RankDeficient,
    #[error("index computation does not yield a perfect square: {0}")]
    NotSquare(String),
    #[error("action {0} does not preserve the intersection matrix")]
    BadAction(String),
    #[error("operation requires the smooth-branch double-cover hypothesis")]
    NoSmoothBranch,
    #[error("curve {0} is not in the configuration")]
    UnknownCurve(String),
    #[error("weierstrass: {0}")]
    Weierstrass(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
