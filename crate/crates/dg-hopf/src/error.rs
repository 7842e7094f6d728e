//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by graded-algebra operations.
///
/// Verification failures are *not* errors — they are reported through
/// [`crate::report::Report`] with witnesses. Errors mark ill-posed inputs:
/// mismatched spaces, wrong degrees, structures missing a required property.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("space mismatch in {context}: expected {expected}, found {found}")]
    SpaceMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },
    #[error("degree error in {context}: expected degree {expected}, found {found}")]
    DegreeError {
        context: &'static str,
        expected: i64,
        found: i64,
    },
    #[error("window overflow in {context}: tensor power would have dimension {dim}, cap is {cap}")]
    WindowOverflow {
        context: &'static str,
        dim: usize,
        cap: usize,
    },
    #[error("{context} requires non-negative degrees, but degree {found} is populated")]
    WindowError {
        context: &'static str,
        found: i64,
    },
    #[error("the linear system for {context} is inconsistent")]
    NoSolution { context: &'static str },
    #[error("not a cochain complex: {0}")]
    NotACochainComplex(String),
    #[error("{context} needs a structure with {needed} data")]
    MissingStructure {
        context: &'static str,
        needed: &'static str,
    },
    #[error("structure is not a bialgebra: {0}")]
    NotABialgebra(String),
    #[error("structure is not a Hopf algebra: {0}")]
    NotHopf(String),
    #[error("map is not a group element: {0}")]
    NotGroupElement(String),
    #[error("map is not tangential: {0}")]
    NotTangential(String),
    #[error("coalgebra is not conilpotent within its degree window")]
    NotConilpotent,
    #[error("map is not an algebra morphism: {0}")]
    NotAlgebraMorphism(String),
    #[error("map is not a module morphism: {0}")]
    NotModuleMorphism(String),
    #[error("universal element does not define a comodule: {0}")]
    NotRepresentation(String),
    #[error("homotopy-pair flavors do not match: {0}")]
    FlavorMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
