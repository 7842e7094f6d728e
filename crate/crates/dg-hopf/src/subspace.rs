//! Graded subspaces as reduced echelon spans, one per degree.
//!
//! Used for conilpotency filtrations (kernels of iterated reduced
//! coproducts), finite subcomodule closures, and inclusion checks between
//! layers. Membership and comparison are exact.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::map::{GradedMap, Vect};
use crate::matrix::SpanBuilder;
use crate::scalar::Scalar;
use crate::space::{Basis, Space};

pub struct Subspace<K> {
    basis: Arc<Basis>,
    spans: BTreeMap<i64, SpanBuilder<K>>,
}

impl<K: Scalar> Subspace<K> {
    pub fn empty(space: &Space) -> Subspace<K> {
        Subspace { basis: Basis::shared(space), spans: BTreeMap::new() }
    }

    pub fn space(&self) -> &Space {
        self.basis.space()
    }

    /// Insert every homogeneous component of `v`; returns `true` if the
    /// subspace grew.
    pub fn insert(&mut self, v: &Vect<K>) -> bool {
        assert_eq!(v.space(), self.space(), "vector lives in the wrong space");
        let mut grew = false;
        let mut by_degree: BTreeMap<i64, Vec<K>> = BTreeMap::new();
        for ((n, i), c) in v.terms() {
            let comp = by_degree.entry(n).or_insert_with(|| vec![K::zero(); self.basis.dim(n)]);
            comp[i] = c;
        }
        for (n, comp) in by_degree {
            let dim = self.basis.dim(n);
            let span = self.spans.entry(n).or_insert_with(|| SpanBuilder::new(dim));
            if span.insert(&comp).is_ok() {
                grew = true;
            }
        }
        grew
    }

    pub fn contains(&self, v: &Vect<K>) -> bool {
        assert_eq!(v.space(), self.space(), "vector lives in the wrong space");
        let mut by_degree: BTreeMap<i64, Vec<K>> = BTreeMap::new();
        for ((n, i), c) in v.terms() {
            let comp = by_degree.entry(n).or_insert_with(|| vec![K::zero(); self.basis.dim(n)]);
            comp[i] = c;
        }
        by_degree.into_iter().all(|(n, comp)| match self.spans.get(&n) {
            Some(span) => span.contains(&comp),
            None => comp.iter().all(K::is_zero),
        })
    }

    pub fn dim_in_degree(&self, n: i64) -> usize {
        self.spans.get(&n).map_or(0, SpanBuilder::rank)
    }

    pub fn total_dim(&self) -> usize {
        self.spans.values().map(SpanBuilder::rank).sum()
    }

    /// Dimensions per degree, ascending, omitting zero entries.
    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.spans
            .iter()
            .filter(|(_, s)| s.rank() > 0)
            .map(|(n, s)| (*n, s.rank()))
            .collect()
    }

    /// Echelon basis vectors in canonical degree order.
    pub fn vectors(&self) -> Vec<Vect<K>> {
        let mut out = Vec::new();
        for (n, span) in &self.spans {
            for b in span.basis() {
                let mut v = Vect::zero_in(&self.basis);
                for (i, c) in b.iter().enumerate() {
                    if !c.is_zero() {
                        v.add_term(*n, i, c.clone());
                    }
                }
                out.push(v);
            }
        }
        out
    }

    pub fn is_contained_in(&self, other: &Subspace<K>) -> bool {
        self.vectors().iter().all(|v| other.contains(v))
    }

    pub fn equals(&self, other: &Subspace<K>) -> bool {
        self.is_contained_in(other) && other.is_contained_in(self)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace<K>) -> Subspace<K> {
        let mut out = Subspace::empty(self.space());
        for v in self.vectors().into_iter().chain(other.vectors()) {
            out.insert(&v);
        }
        out
    }

    /// Span of all `v⊗w` for `v` here and `w` in `other`, inside the basis
    /// of the tensor product space.
    pub fn tensor_span(&self, other: &Subspace<K>, joint: &Arc<Basis>) -> Subspace<K> {
        let mut out = Subspace { basis: joint.clone(), spans: BTreeMap::new() };
        for v in self.vectors() {
            for w in other.vectors() {
                out.insert(&v.tensor(&w, joint));
            }
        }
        out
    }
}

/// The joint kernel `{v : fᵢ(v) = 0 for all i}` of maps sharing a source.
pub fn kernel_of_maps<K: Scalar>(maps: &[&GradedMap<K>]) -> Subspace<K> {
    assert!(!maps.is_empty(), "kernel of an empty family");
    let source = maps[0].source().clone();
    for m in maps {
        assert_eq!(m.source(), &source, "kernel maps must share a source");
    }
    let mut out = Subspace::empty(&source);
    let basis = out.basis.clone();
    for n in basis.degrees().collect::<Vec<_>>() {
        let dim = basis.dim(n);
        // Stack the images of each basis vector under every map.
        let mut cols: Vec<Vec<K>> = vec![Vec::new(); dim];
        let mut total_rows = 0;
        for m in maps {
            let rows = m.target_basis().dim(n + m.degree());
            for (stacked, col) in cols.iter_mut().zip(0..dim) {
                let mut dense = vec![K::zero(); rows];
                let image = m.image_of_basis(n, col);
                for ((deg, i), c) in image.terms() {
                    debug_assert_eq!(deg, n + m.degree());
                    dense[i] = c;
                }
                stacked.extend(dense);
            }
            total_rows += rows;
        }
        for x in crate::matrix::kernel_basis(&cols, total_rows) {
            let mut v = Vect::zero_in(&basis);
            for (i, c) in x.into_iter().enumerate() {
                if !c.is_zero() {
                    v.add_term(n, i, c);
                }
            }
            out.insert(&v);
        }
    }
    out
}
