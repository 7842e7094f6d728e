//! Graded linear maps, vectors, and the Koszul-signed tensor calculus.
//!
//! A [`GradedMap`] of degree `d` sends degree `n` to degree `n+d`; it stores
//! one sparse block per populated source degree. All sign conventions of the
//! graded symmetric monoidal category live in this module and nowhere else:
//!
//! * braiding: `τ(v⊗w) = (−1)^{|v||w|} w⊗v`;
//! * tensor product of maps: `(f⊗g)(v⊗w) = (−1)^{|g||v|} f(v)⊗g(w)`;
//! * hom differential: `d(f) = d_W∘f − (−1)^{|f|} f∘d_V`.
//!
//! The interchange law `(f⊗g)∘(h⊗k) = (−1)^{|g||h|} (f∘h)⊗(g∘k)` and the
//! derivation property of the hom differential are consequences and are kept
//! true by the property tests.
//!
//! [`solve_linear_maps`] is the one generic solver: it probes a linear
//! map-valued equation with elementary maps and solves the resulting exact
//! linear system, which is how antipodes, chain homotopies and infinitesimal
//! homotopy pairs are all found.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{solve_columns, Block};
use crate::report::{Check, Witness};
use crate::scalar::{sign, Scalar};
use crate::space::{Basis, Space};

/// The signature of a graded map: where it goes and by how much it shifts.
#[derive(Clone, Debug, PartialEq)]
pub struct MapShape {
    pub source: Space,
    pub target: Space,
    pub degree: i64,
}

/// A degree-homogeneous linear map between graded spaces.
#[derive(Clone, Debug)]
pub struct GradedMap<K> {
    source: Arc<Basis>,
    target: Arc<Basis>,
    degree: i64,
    /// Key: source degree `n`; block has `dim target^{n+degree}` rows and
    /// `dim source^n` columns. Blocks that become all-zero are pruned.
    blocks: BTreeMap<i64, Block<K>>,
}

impl<K: Scalar> PartialEq for GradedMap<K> {
    fn eq(&self, other: &Self) -> bool {
        if self.source.space() != other.source.space()
            || self.target.space() != other.target.space()
            || self.degree != other.degree
        {
            return false;
        }
        let keys: Vec<i64> = self.blocks.keys().chain(other.blocks.keys()).copied().collect();
        keys.iter().all(|n| self.block_or_zero(*n) == other.block_or_zero(*n))
    }
}

impl<K: Scalar> GradedMap<K> {
    pub fn zero(source: &Space, target: &Space, degree: i64) -> GradedMap<K> {
        GradedMap {
            source: Basis::shared(source),
            target: Basis::shared(target),
            degree,
            blocks: BTreeMap::new(),
        }
    }

    pub fn zero_of(shape: &MapShape) -> GradedMap<K> {
        GradedMap::zero(&shape.source, &shape.target, shape.degree)
    }

    pub fn identity(space: &Space) -> GradedMap<K> {
        let basis = Basis::shared(space);
        let mut blocks = BTreeMap::new();
        for n in basis.degrees() {
            blocks.insert(n, Block::identity(basis.dim(n)));
        }
        GradedMap { source: basis.clone(), target: basis, degree: 0, blocks }
    }

    pub fn source(&self) -> &Space {
        self.source.space()
    }

    pub fn target(&self) -> &Space {
        self.target.space()
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn shape(&self) -> MapShape {
        MapShape { source: self.source().clone(), target: self.target().clone(), degree: self.degree }
    }

    pub fn source_basis(&self) -> &Arc<Basis> {
        &self.source
    }

    pub fn target_basis(&self) -> &Arc<Basis> {
        &self.target
    }

    fn block_or_zero(&self, n: i64) -> Block<K> {
        self.blocks.get(&n).cloned().unwrap_or_else(|| {
            Block::zero(self.target.dim(n + self.degree), self.source.dim(n))
        })
    }

    fn prune(&mut self) {
        self.blocks.retain(|_, b| !b.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(Block::is_zero)
    }

    /// Set the matrix entry at source degree `n`, target row, source column.
    pub fn set_entry(&mut self, n: i64, row: usize, col: usize, value: K) {
        let rows = self.target.dim(n + self.degree);
        let cols = self.source.dim(n);
        assert!(row < rows && col < cols, "entry outside block at degree {n}");
        let block = self.blocks.entry(n).or_insert_with(|| Block::zero(rows, cols));
        block.set(row, col, value);
        if self.blocks.get(&n).is_some_and(Block::is_zero) {
            self.blocks.remove(&n);
        }
    }

    pub fn get_entry(&self, n: i64, row: usize, col: usize) -> K {
        self.blocks.get(&n).map_or_else(K::zero, |b| b.get(row, col))
    }

    /// Set an entry by basis labels. The target label's degree must be the
    /// source label's degree plus the map degree.
    pub fn try_set_label(&mut self, from: &str, to: &str, value: K) -> Result<()> {
        let (dn, col) = self.source.find_label(from).ok_or_else(|| Error::SpaceMismatch {
            context: "map entry source label",
            expected: format!("basis label of {}", self.source()),
            found: from.into(),
        })?;
        let (dm, row) = self.target.find_label(to).ok_or_else(|| Error::SpaceMismatch {
            context: "map entry target label",
            expected: format!("basis label of {}", self.target()),
            found: to.into(),
        })?;
        if dm != dn + self.degree {
            return Err(Error::DegreeError {
                context: "map entry degree",
                expected: dn + self.degree,
                found: dm,
            });
        }
        self.set_entry(dn, row, col, value);
        Ok(())
    }

    /// Panicking form of [`Self::try_set_label`], for statically known bases.
    pub fn set_label(&mut self, from: &str, to: &str, value: K) {
        self.try_set_label(from, to, value).expect("valid basis labels");
    }

    /// Image of the `col`-th basis element of source degree `n`.
    pub fn image_of_basis(&self, n: i64, col: usize) -> Vect<K> {
        let mut v = Vect::zero_in(&self.target);
        if let Some(block) = self.blocks.get(&n) {
            for (row, value) in block.column(col) {
                v.add_term(n + self.degree, *row, value.clone());
            }
        }
        v
    }

    pub fn apply(&self, v: &Vect<K>) -> Vect<K> {
        assert_eq!(v.space(), self.source(), "vector lives in the wrong space");
        let mut out = Vect::zero_in(&self.target);
        for (n, comps) in &v.comps {
            if let Some(block) = self.blocks.get(n) {
                let image = block.apply(comps);
                for (row, value) in image.into_iter().enumerate() {
                    if !value.is_zero() {
                        out.add_term(n + self.degree, row, value);
                    }
                }
            }
        }
        out
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &GradedMap<K>) -> Result<GradedMap<K>> {
        if self.source() != other.target() {
            return Err(Error::SpaceMismatch {
                context: "composition",
                expected: self.source().to_string(),
                found: other.target().to_string(),
            });
        }
        let mut blocks = BTreeMap::new();
        for (n, b) in &other.blocks {
            if let Some(a) = self.blocks.get(&(n + other.degree)) {
                let prod = a.matmul(b);
                if !prod.is_zero() {
                    blocks.insert(*n, prod);
                }
            }
        }
        Ok(GradedMap {
            source: other.source.clone(),
            target: self.target.clone(),
            degree: self.degree + other.degree,
            blocks,
        })
    }

    pub fn add(&self, other: &GradedMap<K>) -> GradedMap<K> {
        assert_eq!(self.source(), other.source(), "sum of maps with different sources");
        assert_eq!(self.target(), other.target(), "sum of maps with different targets");
        assert_eq!(self.degree, other.degree, "sum of maps with different degrees");
        let mut out = self.clone();
        for (n, b) in &other.blocks {
            let merged = out.block_or_zero(*n).add(b);
            out.blocks.insert(*n, merged);
        }
        out.prune();
        out
    }

    pub fn sub(&self, other: &GradedMap<K>) -> GradedMap<K> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedMap<K> {
        self.scale(&-K::one())
    }

    pub fn scale(&self, c: &K) -> GradedMap<K> {
        let mut out = self.clone();
        if c.is_zero() {
            out.blocks.clear();
            return out;
        }
        for b in out.blocks.values_mut() {
            *b = b.scale(c);
        }
        out
    }

    /// Tensor product of maps with the Koszul sign:
    /// `(f⊗g)(v⊗w) = (−1)^{|g||v|} f(v)⊗g(w)`.
    pub fn tensor_map(&self, other: &GradedMap<K>) -> GradedMap<K> {
        let source = self.source().tensor(other.source());
        let target = self.target().tensor(other.target());
        let degree = self.degree + other.degree;
        let mut out = GradedMap::zero(&source, &target, degree);
        let src_basis = out.source.clone();
        let tgt_basis = out.target.clone();
        for (n, col) in src_basis.elements().collect::<Vec<_>>() {
            let ((dv, iv), (dw, iw)) = src_basis.split(&self.source, &other.source, n, col);
            let fb = match self.blocks.get(&dv) {
                Some(b) => b,
                None => continue,
            };
            let gb = match other.blocks.get(&dw) {
                Some(b) => b,
                None => continue,
            };
            let koszul: K = sign::<K>(other.degree * dv);
            for (fi, fc) in fb.column(iv) {
                for (gi, gc) in gb.column(iw) {
                    let (dt, row) = tgt_basis.join(
                        &self.target,
                        (dv + self.degree, *fi),
                        &other.target,
                        (dw + other.degree, *gi),
                    );
                    debug_assert_eq!(dt, n + degree);
                    let value = koszul.clone() * fc.clone() * gc.clone();
                    let current = out.get_entry(n, row, col);
                    out.set_entry(n, row, col, current + value);
                }
            }
        }
        out
    }

    pub fn tensor_all(maps: &[&GradedMap<K>]) -> GradedMap<K> {
        assert!(!maps.is_empty(), "empty tensor product of maps");
        let mut it = maps.iter();
        let mut acc = (*it.next().unwrap()).clone();
        for m in it {
            acc = acc.tensor_map(m);
        }
        acc
    }

    /// Entry positions `(source degree, row, col)` in canonical order.
    pub fn positions(&self) -> Vec<(i64, usize, usize)> {
        let mut out = Vec::new();
        for n in self.source.degrees() {
            let rows = self.target.dim(n + self.degree);
            let cols = self.source.dim(n);
            for col in 0..cols {
                for row in 0..rows {
                    out.push((n, row, col));
                }
            }
        }
        out
    }
}

impl<K: Scalar> fmt::Display for GradedMap<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, col) in self.source.elements() {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{} ↦ {}", self.source.label(n, col), self.image_of_basis(n, col))?;
        }
        if first {
            write!(f, "(map from the zero space)")?;
        }
        Ok(())
    }
}

/// Compose a list right-to-left: `chain(&[f, g, h]) = f∘g∘h`.
///
/// Panics on space mismatch; reserve for statically known composites.
pub fn chain<K: Scalar>(maps: &[&GradedMap<K>]) -> GradedMap<K> {
    assert!(!maps.is_empty(), "empty composition");
    let mut it = maps.iter().rev();
    let mut acc = (*it.next().unwrap()).clone();
    for m in it {
        acc = m.compose(&acc).expect("composable chain");
    }
    acc
}

/// The braiding `τ: V⊗W → W⊗V`, `τ(v⊗w) = (−1)^{|v||w|} w⊗v`.
pub fn braiding<K: Scalar>(v: &Space, w: &Space) -> GradedMap<K> {
    let source = v.tensor(w);
    let target = w.tensor(v);
    let mut out = GradedMap::zero(&source, &target, 0);
    let vb = Basis::shared(v);
    let wb = Basis::shared(w);
    let src = out.source.clone();
    let tgt = out.target.clone();
    for (n, col) in src.elements().collect::<Vec<_>>() {
        let ((dv, iv), (dw, iw)) = src.split(&vb, &wb, n, col);
        let (_, row) = tgt.join(&wb, (dw, iw), &vb, (dv, iv));
        out.set_entry(n, row, col, sign::<K>(dv * dw));
    }
    out
}

/// Left unitor `ι_M : k⊗M → M`.
pub fn unitor_left<K: Scalar>(m: &Space) -> GradedMap<K> {
    let source = Space::ground().tensor(m);
    let mut out = GradedMap::zero(&source, m, 0);
    let src = out.source.clone();
    for (n, col) in src.elements().collect::<Vec<_>>() {
        out.set_entry(n, col, col, K::one());
    }
    out
}

/// Inverse left unitor `ι⁻¹_M : M → k⊗M`.
pub fn unitor_left_inv<K: Scalar>(m: &Space) -> GradedMap<K> {
    let target = Space::ground().tensor(m);
    let mut out = GradedMap::zero(m, &target, 0);
    let src = out.source.clone();
    for (n, col) in src.elements().collect::<Vec<_>>() {
        out.set_entry(n, col, col, K::one());
    }
    out
}

/// Right unitor `ȷ_M : M⊗k → M`.
pub fn unitor_right<K: Scalar>(m: &Space) -> GradedMap<K> {
    let source = m.tensor(&Space::ground());
    let mut out = GradedMap::zero(&source, m, 0);
    let src = out.source.clone();
    for (n, col) in src.elements().collect::<Vec<_>>() {
        out.set_entry(n, col, col, K::one());
    }
    out
}

/// Inverse right unitor `ȷ⁻¹_M : M → M⊗k`.
pub fn unitor_right_inv<K: Scalar>(m: &Space) -> GradedMap<K> {
    let target = m.tensor(&Space::ground());
    let mut out = GradedMap::zero(m, &target, 0);
    let src = out.source.clone();
    for (n, col) in src.elements().collect::<Vec<_>>() {
        out.set_entry(n, col, col, K::one());
    }
    out
}

fn expect_differential<K: Scalar>(d: &GradedMap<K>, space: &Space, context: &'static str) -> Result<()> {
    if d.source() != space || d.target() != space {
        return Err(Error::SpaceMismatch {
            context,
            expected: space.to_string(),
            found: format!("{} → {}", d.source(), d.target()),
        });
    }
    if d.degree() != 1 {
        return Err(Error::DegreeError { context, expected: 1, found: d.degree() });
    }
    Ok(())
}

/// The hom-complex differential `d(f) = d_W∘f − (−1)^{|f|} f∘d_V`.
pub fn hom_differential<K: Scalar>(
    f: &GradedMap<K>,
    d_source: &GradedMap<K>,
    d_target: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    expect_differential(d_source, f.source(), "hom differential (source)")?;
    expect_differential(d_target, f.target(), "hom differential (target)")?;
    let left = d_target.compose(f)?;
    let right = f.compose(d_source)?.scale(&sign::<K>(f.degree()));
    Ok(left.sub(&right))
}

/// Is `f` a degree-0 cochain map, i.e. `d_W∘f = f∘d_V`?
pub fn is_cochain_map<K: Scalar>(
    f: &GradedMap<K>,
    d_source: &GradedMap<K>,
    d_target: &GradedMap<K>,
) -> Result<bool> {
    if f.degree() != 0 {
        return Err(Error::DegreeError { context: "cochain map", expected: 0, found: f.degree() });
    }
    Ok(hom_differential(f, d_source, d_target)?.is_zero())
}

/// Solve `d(λ) = g` in the hom complex, i.e. find a chain homotopy `λ` of
/// degree `|g|−1` with `d_W∘λ − (−1)^{|λ|} λ∘d_V = g`.
pub fn solve_chain_homotopy<K: Scalar>(
    g: &GradedMap<K>,
    d_source: &GradedMap<K>,
    d_target: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    expect_differential(d_source, g.source(), "chain homotopy (source)")?;
    expect_differential(d_target, g.target(), "chain homotopy (target)")?;
    let shape = MapShape { source: g.source().clone(), target: g.target().clone(), degree: g.degree() - 1 };
    let solution = solve_linear_maps(
        &[shape],
        std::slice::from_ref(g),
        |unknowns| vec![hom_differential(&unknowns[0], d_source, d_target).expect("validated shapes")],
    );
    solution
        .map(|mut v| v.remove(0))
        .ok_or(Error::NoSolution { context: "chain homotopy" })
}

/// Solve a linear map-valued equation by probing with elementary maps.
///
/// `equation` must be affine-linear in the unknown maps and return outputs
/// shaped exactly like `rhs`. Returns the unknowns satisfying
/// `equation(X) = rhs`, or `None` if the system is inconsistent.
pub fn solve_linear_maps<K: Scalar>(
    unknowns: &[MapShape],
    rhs: &[GradedMap<K>],
    equation: impl Fn(&[GradedMap<K>]) -> Vec<GradedMap<K>>,
) -> Option<Vec<GradedMap<K>>> {
    let zeros: Vec<GradedMap<K>> = unknowns.iter().map(GradedMap::zero_of).collect();
    let base = equation(&zeros);
    assert_eq!(base.len(), rhs.len(), "equation output count must match rhs");
    for (b, r) in base.iter().zip(rhs) {
        assert_eq!(b.shape(), r.shape(), "equation output shape must match rhs");
    }
    let out_positions: Vec<Vec<(i64, usize, usize)>> = rhs.iter().map(GradedMap::positions).collect();
    let flatten = |outs: &[GradedMap<K>]| -> Vec<K> {
        outs.iter()
            .zip(&out_positions)
            .flat_map(|(m, ps)| ps.iter().map(|(n, r, c)| m.get_entry(*n, *r, *c)))
            .collect()
    };
    let base_flat = flatten(&base);
    let mut cols: Vec<Vec<K>> = Vec::new();
    let mut col_pos: Vec<(usize, i64, usize, usize)> = Vec::new();
    for (slot, z) in zeros.iter().enumerate() {
        for (n, row, col) in z.positions() {
            let mut probe = zeros.clone();
            probe[slot].set_entry(n, row, col, K::one());
            let flat = flatten(&equation(&probe));
            let column: Vec<K> =
                flat.into_iter().zip(&base_flat).map(|(a, b)| a - b.clone()).collect();
            cols.push(column);
            col_pos.push((slot, n, row, col));
        }
    }
    let target: Vec<K> =
        flatten(rhs).into_iter().zip(&base_flat).map(|(a, b)| a - b.clone()).collect();
    let x = solve_columns(&cols, &target)?;
    let mut solution = zeros;
    for (value, (slot, n, row, col)) in x.into_iter().zip(col_pos) {
        if !value.is_zero() {
            solution[slot].set_entry(n, row, col, value);
        }
    }
    Some(solution)
}

/// Compare two maps; on failure the witness names the first basis element
/// (in canonical order) where the images differ.
pub fn check_maps_equal<K: Scalar>(
    name: impl Into<String>,
    lhs: &GradedMap<K>,
    rhs: &GradedMap<K>,
) -> Check {
    let name = name.into();
    if lhs.source() != rhs.source() || lhs.target() != rhs.target() || lhs.degree() != rhs.degree()
    {
        return Check {
            name,
            pass: false,
            witness: Some(Witness {
                element: "(signature)".into(),
                lhs: format!("{} → {} degree {}", lhs.source(), lhs.target(), lhs.degree()),
                rhs: format!("{} → {} degree {}", rhs.source(), rhs.target(), rhs.degree()),
            }),
        };
    }
    for (n, col) in lhs.source_basis().elements() {
        let a = lhs.image_of_basis(n, col);
        let b = rhs.image_of_basis(n, col);
        if a != b {
            return Check {
                name,
                pass: false,
                witness: Some(Witness {
                    element: lhs.source_basis().label(n, col),
                    lhs: a.to_string(),
                    rhs: b.to_string(),
                }),
            };
        }
    }
    Check { name, pass: true, witness: None }
}

/// An element of a graded space, split into homogeneous components.
#[derive(Clone, Debug)]
pub struct Vect<K> {
    basis: Arc<Basis>,
    comps: BTreeMap<i64, Vec<K>>,
}

impl<K: Scalar> PartialEq for Vect<K> {
    fn eq(&self, other: &Self) -> bool {
        if self.space() != other.space() {
            return false;
        }
        let keys: Vec<i64> = self.comps.keys().chain(other.comps.keys()).copied().collect();
        keys.iter().all(|n| {
            let dim = self.basis.dim(*n);
            (0..dim).all(|i| self.coefficient(*n, i) == other.coefficient(*n, i))
        })
    }
}

impl<K: Scalar> Vect<K> {
    pub fn zero_in(basis: &Arc<Basis>) -> Vect<K> {
        Vect { basis: basis.clone(), comps: BTreeMap::new() }
    }

    pub fn zero(space: &Space) -> Vect<K> {
        Vect::zero_in(&Basis::shared(space))
    }

    pub fn basis_vector(space: &Space, label: &str) -> Option<Vect<K>> {
        let basis = Basis::shared(space);
        let (n, idx) = basis.find_label(label)?;
        let mut v = Vect::zero_in(&basis);
        v.add_term(n, idx, K::one());
        Some(v)
    }

    pub fn space(&self) -> &Space {
        self.basis.space()
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn add_term(&mut self, degree: i64, idx: usize, value: K) {
        let dim = self.basis.dim(degree);
        assert!(idx < dim, "basis index out of range");
        let comps = self.comps.entry(degree).or_insert_with(|| vec![K::zero(); dim]);
        comps[idx] = comps[idx].clone() + value;
    }

    pub fn coefficient(&self, degree: i64, idx: usize) -> K {
        self.comps.get(&degree).map_or_else(K::zero, |c| c[idx].clone())
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> Vec<((i64, usize), K)> {
        let mut out = Vec::new();
        for (n, comps) in &self.comps {
            for (i, c) in comps.iter().enumerate() {
                if !c.is_zero() {
                    out.push(((*n, i), c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(|c| c.iter().all(K::is_zero))
    }

    pub fn add(&self, other: &Vect<K>) -> Vect<K> {
        assert_eq!(self.space(), other.space(), "sum of vectors in different spaces");
        let mut out = self.clone();
        for ((n, i), c) in other.terms() {
            out.add_term(n, i, c);
        }
        out
    }

    pub fn sub(&self, other: &Vect<K>) -> Vect<K> {
        self.add(&other.scale(&-K::one()))
    }

    pub fn scale(&self, c: &K) -> Vect<K> {
        let mut out = self.clone();
        for comps in out.comps.values_mut() {
            for x in comps.iter_mut() {
                *x = x.clone() * c.clone();
            }
        }
        out
    }

    /// Tensor product of elements (no Koszul sign: elements, not maps).
    /// `joint` must be the basis of `self.space() ⊗ other.space()`.
    pub fn tensor(&self, other: &Vect<K>, joint: &Arc<Basis>) -> Vect<K> {
        assert_eq!(
            joint.space(),
            &self.space().tensor(other.space()),
            "joint basis must enumerate the tensor product space"
        );
        let mut out = Vect::zero_in(joint);
        for ((n, i), a) in self.terms() {
            for ((m, j), b) in other.terms() {
                let (deg, idx) = joint.join(&self.basis, (n, i), &other.basis, (m, j));
                out.add_term(deg, idx, a.clone() * b);
            }
        }
        out
    }
}

impl<K: Scalar> fmt::Display for Vect<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((n, idx), c)) in terms.iter().enumerate() {
            let cs = c.to_string();
            let (negative, magnitude) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let label = self.basis.label(*n, *idx);
            if magnitude == "1" {
                write!(f, "{label}")?;
            } else {
                write!(f, "{magnitude}·{label}")?;
            }
        }
        Ok(())
    }
}
