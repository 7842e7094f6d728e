//! Cochain complexes: a graded space with a square-zero degree `+1` map.

use crate::error::{Error, Result};
use crate::map::GradedMap;
use crate::scalar::Scalar;
use crate::space::Space;

#[derive(Clone, Debug)]
pub struct CochainComplex<K> {
    space: Space,
    d: GradedMap<K>,
}

impl<K: Scalar> PartialEq for CochainComplex<K> {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.d == other.d
    }
}

impl<K: Scalar> CochainComplex<K> {
    /// Validates that `d` is an endomorphism of `space` of degree `+1` with
    /// `d² = 0`.
    pub fn new(space: Space, d: GradedMap<K>) -> Result<CochainComplex<K>> {
        if d.source() != &space || d.target() != &space {
            return Err(Error::SpaceMismatch {
                context: "cochain complex differential",
                expected: space.to_string(),
                found: format!("{} → {}", d.source(), d.target()),
            });
        }
        if d.degree() != 1 {
            return Err(Error::DegreeError {
                context: "cochain complex differential",
                expected: 1,
                found: d.degree(),
            });
        }
        let dd = d.compose(&d).expect("endomorphism composes with itself");
        if !dd.is_zero() {
            return Err(Error::NotACochainComplex("d² ≠ 0".into()));
        }
        Ok(CochainComplex { space, d })
    }

    /// The complex with zero differential.
    pub fn with_zero_differential(space: Space) -> CochainComplex<K> {
        let d = GradedMap::zero(&space, &space, 1);
        CochainComplex { space, d }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn d(&self) -> &GradedMap<K> {
        &self.d
    }
}
