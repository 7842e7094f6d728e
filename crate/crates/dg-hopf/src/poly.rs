//! Polynomial families of graded maps in a formal time variable.
//!
//! A [`MapPoly`] is `f(t) = Σᵢ fᵢ·tⁱ` where every coefficient `fᵢ` is a
//! [`GradedMap`] of one common shape. Homotopy flows are stated as identities
//! between such polynomials, compared coefficient by coefficient — no
//! numerical evaluation is ever involved.

use crate::error::{Error, Result};
use crate::map::{GradedMap, MapShape, check_maps_equal};
use crate::report::Check;
use crate::scalar::Scalar;

/// A polynomial in `t` with coefficients in a fixed hom space.
#[derive(Clone, Debug)]
pub struct MapPoly<K: Scalar> {
    shape: MapShape,
    /// `coeffs[i]` multiplies `tⁱ`; trailing zero coefficients are trimmed.
    coeffs: Vec<GradedMap<K>>,
}

impl<K: Scalar> MapPoly<K> {
    /// The zero polynomial in the hom space described by `shape`.
    pub fn zero(shape: MapShape) -> MapPoly<K> {
        MapPoly { shape, coeffs: Vec::new() }
    }

    /// The constant polynomial `f(t) = map`.
    pub fn constant(map: GradedMap<K>) -> MapPoly<K> {
        let mut poly = MapPoly { shape: map.shape(), coeffs: vec![map] };
        poly.trim();
        poly
    }

    /// Build from explicit coefficients `coeffs[i]·tⁱ`; all coefficients must
    /// share one shape.
    pub fn from_coeffs(coeffs: Vec<GradedMap<K>>) -> Result<MapPoly<K>> {
        let first = coeffs.first().ok_or(Error::NoSolution { context: "empty polynomial" })?;
        let shape = first.shape();
        for c in &coeffs {
            if c.shape() != shape {
                return Err(Error::SpaceMismatch {
                    context: "polynomial coefficients",
                    expected: format!("{}→{} of degree {}", shape.source, shape.target, shape.degree),
                    found: format!(
                        "{}→{} of degree {}",
                        c.shape().source,
                        c.shape().target,
                        c.shape().degree
                    ),
                });
            }
        }
        let mut poly = MapPoly { shape, coeffs };
        poly.trim();
        Ok(poly)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(GradedMap::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn shape(&self) -> &MapShape {
        &self.shape
    }

    /// Coefficient of `tⁱ` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> GradedMap<K> {
        self.coeffs.get(i).cloned().unwrap_or_else(|| GradedMap::zero_of(&self.shape))
    }

    /// Degree in `t`; the zero polynomial reports 0.
    pub fn degree_in_t(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at time 0, i.e. the constant coefficient.
    pub fn at_zero(&self) -> GradedMap<K> {
        self.coeff(0)
    }

    /// Exact evaluation at time `t`.
    pub fn evaluate(&self, t: &K) -> GradedMap<K> {
        let mut acc = GradedMap::zero_of(&self.shape);
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(t).add(c);
        }
        acc
    }

    pub fn add(&self, other: &MapPoly<K>) -> MapPoly<K> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        let mut poly = MapPoly { shape: self.shape.clone(), coeffs };
        poly.trim();
        poly
    }

    pub fn sub(&self, other: &MapPoly<K>) -> MapPoly<K> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MapPoly<K> {
        MapPoly { shape: self.shape.clone(), coeffs: self.coeffs.iter().map(GradedMap::neg).collect() }
    }

    pub fn scale(&self, c: &K) -> MapPoly<K> {
        let mut poly = MapPoly {
            shape: self.shape.clone(),
            coeffs: self.coeffs.iter().map(|m| m.scale(c)).collect(),
        };
        poly.trim();
        poly
    }

    /// `d/dt`: the coefficient of `tⁱ` becomes `(i+1)·f_{i+1}`.
    pub fn derivative(&self) -> MapPoly<K> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&K::from_usize(i).expect("small integer fits in scalar")))
            .collect();
        let mut poly = MapPoly { shape: self.shape.clone(), coeffs };
        poly.trim();
        poly
    }

    /// Apply a linear operator on maps to every coefficient, e.g. pre- or
    /// post-composition with a fixed map or the hom differential.
    pub fn apply(&self, op: impl Fn(&GradedMap<K>) -> Result<GradedMap<K>>) -> Result<MapPoly<K>> {
        let out_shape = op(&GradedMap::zero_of(&self.shape))?.shape();
        let coeffs = self.coeffs.iter().map(&op).collect::<Result<Vec<_>>>()?;
        let mut poly = MapPoly { shape: out_shape, coeffs };
        poly.trim();
        Ok(poly)
    }

    /// Cauchy product along a bilinear pairing of maps: the coefficient of
    /// `tⁿ` in the result is `Σ_{i+j=n} op(fᵢ, gⱼ)`.
    pub fn bilinear(
        &self,
        other: &MapPoly<K>,
        op: impl Fn(&GradedMap<K>, &GradedMap<K>) -> Result<GradedMap<K>>,
    ) -> Result<MapPoly<K>> {
        let out_shape =
            op(&GradedMap::zero_of(&self.shape), &GradedMap::zero_of(&other.shape))?.shape();
        if self.is_zero() || other.is_zero() {
            return Ok(MapPoly::zero(out_shape));
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = Vec::with_capacity(n);
        for total in 0..n {
            let mut acc = GradedMap::zero_of(&out_shape);
            for i in 0..=total {
                let j = total - i;
                if i < self.coeffs.len() && j < other.coeffs.len() {
                    acc = acc.add(&op(&self.coeffs[i], &other.coeffs[j])?);
                }
            }
            coeffs.push(acc);
        }
        let mut poly = MapPoly { shape: out_shape, coeffs };
        poly.trim();
        Ok(poly)
    }
}

impl<K: Scalar> PartialEq for MapPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.coeffs == other.coeffs
    }
}

/// Compare two map polynomials coefficient by coefficient; on failure the
/// witness names the offending power of `t` and basis element.
pub fn check_polys_equal<K: Scalar>(
    name: impl Into<String>,
    lhs: &MapPoly<K>,
    rhs: &MapPoly<K>,
) -> Check {
    let name = name.into();
    let n = lhs.coeffs.len().max(rhs.coeffs.len()).max(1);
    for i in 0..n {
        let mut check = check_maps_equal(name.clone(), &lhs.coeff(i), &rhs.coeff(i));
        if !check.pass {
            if let Some(w) = &mut check.witness {
                w.element = format!("t^{i} · {}", w.element);
            }
            return check;
        }
    }
    Check { name, pass: true, witness: None }
}
