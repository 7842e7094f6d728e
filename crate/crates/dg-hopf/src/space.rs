//! Graded vector spaces and their tensor products.
//!
//! A [`Space`] is a finite list of *atoms*; an atom is a named graded space
//! with an explicit basis per degree and a declared degree window. Tensor
//! products are kept flattened, so `(U⊗V)⊗W` and `U⊗(V⊗W)` are the same
//! space and the monoidal structure is strictly associative, exactly as the
//! paper's string-diagram calculus assumes. The ground field `k` is *not*
//! absorbed: `M⊗k ≠ M`, and the unit isomorphisms ȷ, ι live in
//! [`crate::map`] as honest maps.
//!
//! Basis enumeration is deterministic: atoms list their basis by ascending
//! degree in declaration order, and a tensor space enumerates basis tuples
//! lexicographically with the leftmost factor slowest. Every matrix in the
//! crate is written against this order, which is what makes serialized
//! bundles reproducible byte for byte.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Symbol used to join tensor-factor labels; forbidden inside atom labels.
pub const TENSOR_SYMBOL: char = '⊗';

/// A named atomic graded space with explicit basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    name: String,
    /// Flat basis in canonical order: ascending degree, then declaration order.
    flat: Vec<(i64, String)>,
    window: (i64, i64),
}

impl Atom {
    fn new(name: &str, window: (i64, i64), basis: &[(&str, i64)]) -> Result<Atom> {
        if window.0 > window.1 {
            return Err(Error::DegreeError {
                context: "atom window",
                expected: window.0,
                found: window.1,
            });
        }
        let mut by_degree: BTreeMap<i64, Vec<String>> = BTreeMap::new();
        let mut seen = HashMap::new();
        for &(label, degree) in basis {
            if label.is_empty() || label.contains(TENSOR_SYMBOL) {
                return Err(Error::SpaceMismatch {
                    context: "atom basis label",
                    expected: "nonempty label without ⊗".into(),
                    found: label.into(),
                });
            }
            if seen.insert(label.to_string(), ()).is_some() {
                return Err(Error::SpaceMismatch {
                    context: "atom basis label",
                    expected: "globally unique labels".into(),
                    found: format!("duplicate {label}"),
                });
            }
            if degree < window.0 || degree > window.1 {
                return Err(Error::DegreeError {
                    context: "atom basis degree outside window",
                    expected: window.0,
                    found: degree,
                });
            }
            by_degree.entry(degree).or_default().push(label.to_string());
        }
        let flat = by_degree
            .into_iter()
            .flat_map(|(d, ls)| ls.into_iter().map(move |l| (d, l)))
            .collect();
        Ok(Atom { name: name.to_string(), flat, window })
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    factors: Vec<Atom>,
}

/// A graded vector space: one atom or a flattened tensor product of atoms.
#[derive(Clone, Debug)]
pub struct Space {
    inner: Arc<Inner>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}
impl Eq for Space {}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.inner.factors.iter().map(|a| a.name.as_str()).collect();
        write!(f, "{}", names.join("⊗"))
    }
}

impl Space {
    /// A new atomic space. Degrees must lie inside `window`; labels must be
    /// unique and free of `⊗`.
    pub fn atom(name: &str, window: (i64, i64), basis: &[(&str, i64)]) -> Result<Space> {
        Ok(Space { inner: Arc::new(Inner { factors: vec![Atom::new(name, window, basis)?] }) })
    }

    /// The ground field as a one-dimensional space `k = span{1}` in degree 0.
    pub fn ground() -> Space {
        Space::atom("k", (0, 0), &[("1", 0)]).expect("ground field space")
    }

    pub fn is_ground(&self) -> bool {
        self == &Space::ground()
    }

    /// Flattened tensor product.
    pub fn tensor(&self, other: &Space) -> Space {
        let mut factors = self.inner.factors.clone();
        factors.extend(other.inner.factors.iter().cloned());
        Space { inner: Arc::new(Inner { factors }) }
    }

    pub fn tensor_all(factors: &[&Space]) -> Space {
        assert!(!factors.is_empty(), "empty tensor product");
        let mut it = factors.iter();
        let mut acc = (*it.next().unwrap()).clone();
        for s in it {
            acc = acc.tensor(s);
        }
        acc
    }

    pub fn tensor_power(&self, n: usize) -> Space {
        assert!(n >= 1, "tensor power needs n ≥ 1");
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.tensor(self);
        }
        acc
    }

    pub fn factor_count(&self) -> usize {
        self.inner.factors.len()
    }

    /// The sub-tensor spanned by factors `lo..hi`.
    pub fn factor_range(&self, lo: usize, hi: usize) -> Space {
        assert!(lo < hi && hi <= self.factor_count());
        Space { inner: Arc::new(Inner { factors: self.inner.factors[lo..hi].to_vec() }) }
    }

    /// Degree window `[min, max]`; for a tensor product, the sums of the
    /// factor windows.
    pub fn window(&self) -> (i64, i64) {
        self.inner
            .factors
            .iter()
            .fold((0, 0), |(lo, hi), a| (lo + a.window.0, hi + a.window.1))
    }

    /// Total dimension (product of atom dimensions).
    pub fn total_dim(&self) -> usize {
        self.inner.factors.iter().map(|a| a.flat.len()).product()
    }

    fn factors(&self) -> &[Atom] {
        &self.inner.factors
    }
}

/// The enumerated basis of a [`Space`]: tuples of per-factor flat indices,
/// bucketed by total degree, in the canonical deterministic order.
#[derive(Debug)]
pub struct Basis {
    space: Space,
    per_degree: BTreeMap<i64, Vec<Vec<u32>>>,
    index: HashMap<Vec<u32>, (i64, usize)>,
}

impl Basis {
    /// A reference-counted basis, for sharing across maps on the same space.
    pub fn shared(space: &Space) -> Arc<Basis> {
        Arc::new(Basis::of(space))
    }

    pub fn of(space: &Space) -> Basis {
        let mut tuples: Vec<(i64, Vec<u32>)> = vec![(0, Vec::new())];
        for atom in space.factors() {
            let mut next = Vec::with_capacity(tuples.len() * atom.flat.len().max(1));
            for (deg, tuple) in &tuples {
                for (i, (d, _)) in atom.flat.iter().enumerate() {
                    let mut t = tuple.clone();
                    t.push(i as u32);
                    next.push((deg + d, t));
                }
            }
            tuples = next;
        }
        let mut per_degree: BTreeMap<i64, Vec<Vec<u32>>> = BTreeMap::new();
        for (deg, tuple) in tuples {
            per_degree.entry(deg).or_default().push(tuple);
        }
        let mut index = HashMap::new();
        for (deg, ts) in &per_degree {
            for (i, t) in ts.iter().enumerate() {
                index.insert(t.clone(), (*deg, i));
            }
        }
        Basis { space: space.clone(), per_degree, index }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.per_degree.get(&degree).map_or(0, Vec::len)
    }

    /// Degrees with at least one basis element, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.per_degree.iter().filter(|(_, v)| !v.is_empty()).map(|(d, _)| *d)
    }

    /// All `(degree, index)` pairs in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.per_degree.iter().flat_map(|(d, v)| (0..v.len()).map(move |i| (*d, i)))
    }

    pub fn tuple(&self, degree: i64, idx: usize) -> &[u32] {
        &self.per_degree[&degree][idx]
    }

    pub fn position(&self, tuple: &[u32]) -> (i64, usize) {
        self.index[tuple]
    }

    /// Printable label, factors joined by `⊗`.
    pub fn label(&self, degree: i64, idx: usize) -> String {
        let tuple = self.tuple(degree, idx);
        let parts: Vec<&str> = tuple
            .iter()
            .zip(self.space.factors())
            .map(|(&i, atom)| atom.flat[i as usize].1.as_str())
            .collect();
        parts.join("⊗")
    }

    /// Resolve a label of the form `a⊗b⊗…` (one part per factor).
    pub fn find_label(&self, label: &str) -> Option<(i64, usize)> {
        let parts: Vec<&str> = label.split(TENSOR_SYMBOL).collect();
        if parts.len() != self.space.factor_count() {
            return None;
        }
        let mut tuple = Vec::with_capacity(parts.len());
        for (part, atom) in parts.iter().zip(self.space.factors()) {
            let i = atom.flat.iter().position(|(_, l)| l == part)?;
            tuple.push(i as u32);
        }
        self.index.get(&tuple).copied()
    }

    /// Split a basis tuple of `V⊗W` into the `V` part and the `W` part,
    /// where `V` owns the first `left_factors` factors. Returns
    /// `((deg_left, idx_left), (deg_right, idx_right))` relative to the two
    /// sub-bases.
    pub fn split(
        &self,
        left: &Basis,
        right: &Basis,
        degree: i64,
        idx: usize,
    ) -> ((i64, usize), (i64, usize)) {
        let tuple = self.tuple(degree, idx);
        let nl = left.space.factor_count();
        let l = left.position(&tuple[..nl]);
        let r = right.position(&tuple[nl..]);
        (l, r)
    }

    /// Index of the concatenation of a `V`-tuple and a `W`-tuple inside this
    /// (the `V⊗W`) basis.
    pub fn join(&self, left: &Basis, l: (i64, usize), right: &Basis, r: (i64, usize)) -> (i64, usize) {
        let mut tuple = left.tuple(l.0, l.1).to_vec();
        tuple.extend_from_slice(right.tuple(r.0, r.1));
        self.position(&tuple)
    }
}
