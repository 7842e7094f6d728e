//! The on-disk bundle format and its resolution into library objects.
//!
//! A *bundle* is a self-describing JSON document carrying named graded
//! spaces, named maps between (tensor products of) those spaces, and
//! structure declarations that assemble the maps into complexes, algebras,
//! coalgebras, bialgebras, Hopf algebras, comodules, and comodule
//! morphisms. Every scalar is an exact rational written as `"p/q"` (or
//! `"p"` when the denominator is 1); floating point never appears.
//!
//! Parsing is strict and total: [`parse_bundle`] either returns a fully
//! resolved [`Bundle`] — every label looked up, every degree checked, every
//! structure constructor run — or one of three errors:
//!
//! * [`BundleError::Parse`] — malformed JSON or a malformed scalar, with
//!   the line and column of the offending token;
//! * [`BundleError::Reference`] — a name that resolves to nothing (unknown
//!   space, map, basis label, or comodule);
//! * [`BundleError::Dimension`] — shapes that do not fit (an entry that
//!   shifts degree differently than its map declares, `d² ≠ 0`, structure
//!   maps on the wrong spaces).
//!
//! Serialization is canonical: `parse ∘ serialize` is the identity on
//! documents, and the shipped corpus files round-trip byte-for-byte.

use dg_hopf::complex::CochainComplex;
use dg_hopf::comodule::Comodule;
use dg_hopf::dg::{CdgAlgebra, CdgBialgebra, CdgHopf, DgCoalgebra};
use dg_hopf::space::Basis;
use dg_hopf::{GradedMap, Rat, Space, Vect};
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const BUNDLE_FORMAT: &str = "dg-hopf-bundle";
pub const BUNDLE_VERSION: u32 = 1;

/// Errors produced while reading a bundle, in increasing depth of analysis.
#[derive(Debug, thiserror::Error)]
pub enum BundleError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("reference error: {0}")]
    Reference(String),
    #[error("dimension error: {0}")]
    Dimension(String),
}

// ---------------------------------------------------------------------------
// The document model (what the JSON says, verbatim).
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDoc {
    pub format: String,
    pub version: u32,
    pub name: String,
    pub spaces: Vec<SpaceDoc>,
    pub maps: Vec<MapDoc>,
    pub structures: Vec<StructureDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub name: String,
    pub basis: Vec<BasisDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDoc {
    pub label: String,
    pub degree: i64,
}

/// A map between tensor products of declared spaces. `source` and `target`
/// are space expressions: atom names joined by `⊗`, with `k` denoting the
/// ground field. Only nonzero entries are listed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
    pub entries: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub from: String,
    pub to: String,
    pub value: ScalarDoc,
}

/// An exact rational, serialized as `"p/q"` (or `"p"` when `q = 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarDoc(pub Rat);

impl Serialize for ScalarDoc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ScalarDoc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rat(&text).map(ScalarDoc).map_err(serde::de::Error::custom)
    }
}

fn parse_rat(text: &str) -> Result<Rat, String> {
    let (p, q) = match text.split_once('/') {
        None => (text, "1"),
        Some(parts) => parts,
    };
    let numer: BigInt = p
        .trim()
        .parse()
        .map_err(|_| format!("scalar `{text}` has a non-integer numerator `{p}`"))?;
    let denom: BigInt = q
        .trim()
        .parse()
        .map_err(|_| format!("scalar `{text}` has a non-integer denominator `{q}`"))?;
    if denom == BigInt::from(0) {
        return Err(format!("scalar `{text}` has a zero denominator"));
    }
    Ok(Rat::new(numer, denom))
}

/// One structure declaration. All fields name maps from the bundle's `maps`
/// list except `space`/`over`/`source`/`target`, which are space
/// expressions or (for morphisms) comodule names.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StructureDoc {
    Complex {
        space: String,
        differential: String,
    },
    Algebra {
        space: String,
        differential: String,
        product: String,
        unit: String,
    },
    Coalgebra {
        space: String,
        differential: String,
        coproduct: String,
        counit: String,
    },
    Bialgebra {
        space: String,
        differential: String,
        product: String,
        unit: String,
        coproduct: String,
        counit: String,
    },
    Hopf {
        space: String,
        differential: String,
        product: String,
        unit: String,
        coproduct: String,
        counit: String,
        antipode: String,
    },
    Comodule {
        name: String,
        space: String,
        over: String,
        differential: String,
        coaction: String,
    },
    Morphism {
        map: String,
        source: String,
        target: String,
    },
}

// ---------------------------------------------------------------------------
// The resolved bundle (what the document means).
// ---------------------------------------------------------------------------

/// A comodule declaration resolved against its Hopf algebra.
pub struct NamedComodule {
    pub name: String,
    /// Index into [`Bundle::hopfs`] of the coacting Hopf algebra.
    pub hopf: usize,
    pub comodule: Comodule<Rat>,
}

/// A declared comodule morphism, by index into [`Bundle::comodules`].
pub struct MorphismDecl {
    pub map_name: String,
    pub map: GradedMap<Rat>,
    pub source: usize,
    pub target: usize,
}

/// A parsed and fully resolved bundle.
pub struct Bundle {
    pub doc: BundleDoc,
    maps: Vec<(String, GradedMap<Rat>)>,
    pub complexes: Vec<CochainComplex<Rat>>,
    pub algebras: Vec<CdgAlgebra<Rat>>,
    pub coalgebras: Vec<DgCoalgebra<Rat>>,
    pub bialgebras: Vec<CdgBialgebra<Rat>>,
    pub hopfs: Vec<CdgHopf<Rat>>,
    pub comodules: Vec<NamedComodule>,
    pub morphisms: Vec<MorphismDecl>,
}

/// Parse a bundle from JSON text and resolve every declaration.
pub fn parse_bundle(text: &str) -> Result<Bundle, BundleError> {
    let doc: BundleDoc = serde_json::from_str(text).map_err(|e| {
        // serde_json appends its own ` at line L column C`; the variant
        // carries the position in structured form already.
        let full = e.to_string();
        let message = full.split(" at line ").next().unwrap_or(&full).to_string();
        BundleError::Parse { line: e.line(), column: e.column(), message }
    })?;
    if doc.format != BUNDLE_FORMAT || doc.version != BUNDLE_VERSION {
        return Err(BundleError::Reference(format!(
            "unsupported bundle format `{} v{}` (expected `{BUNDLE_FORMAT} v{BUNDLE_VERSION}`)",
            doc.format, doc.version
        )));
    }
    Bundle::resolve(doc)
}

/// Canonical serialization: pretty JSON plus a trailing newline.
pub fn serialize_bundle(doc: &BundleDoc) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("bundle documents serialize");
    text.push('\n');
    text
}

fn dim_err(e: dg_hopf::Error) -> BundleError {
    BundleError::Dimension(e.to_string())
}

/// Degree of a (possibly composite) basis label, if it exists in `space`.
fn degree_of_label(space: &Space, label: &str) -> Option<i64> {
    let v: Vect<Rat> = Vect::basis_vector(space, label)?;
    v.terms().first().map(|((n, _), _)| *n)
}

impl Bundle {
    fn resolve(doc: BundleDoc) -> Result<Bundle, BundleError> {
        let mut spaces: Vec<(String, Space)> = Vec::new();
        for sd in &doc.spaces {
            if sd.name == "k" {
                return Err(BundleError::Reference(
                    "space name `k` is reserved for the ground field".into(),
                ));
            }
            if sd.name.contains('⊗') {
                return Err(BundleError::Reference(format!(
                    "space name `{}` may not contain `⊗`; declare atoms and use tensor expressions in maps",
                    sd.name
                )));
            }
            if spaces.iter().any(|(n, _)| n == &sd.name) {
                return Err(BundleError::Reference(format!("duplicate space name `{}`", sd.name)));
            }
            if sd.basis.is_empty() {
                return Err(BundleError::Dimension(format!(
                    "space `{}` declares an empty basis",
                    sd.name
                )));
            }
            let lo = sd.basis.iter().map(|b| b.degree).min().expect("nonempty");
            let hi = sd.basis.iter().map(|b| b.degree).max().expect("nonempty");
            let labels: Vec<(&str, i64)> =
                sd.basis.iter().map(|b| (b.label.as_str(), b.degree)).collect();
            let space = Space::atom(&sd.name, (lo, hi), &labels).map_err(dim_err)?;
            spaces.push((sd.name.clone(), space));
        }

        let resolve_space = |expr: &str, context: &str| -> Result<Space, BundleError> {
            let mut factors: Vec<Space> = Vec::new();
            for part in expr.split('⊗') {
                let part = part.trim();
                if part == "k" {
                    factors.push(Space::ground());
                } else {
                    match spaces.iter().find(|(n, _)| n == part) {
                        Some((_, s)) => factors.push(s.clone()),
                        None => {
                            return Err(BundleError::Reference(format!(
                                "{context}: unknown space `{part}` in expression `{expr}`"
                            )));
                        }
                    }
                }
            }
            let refs: Vec<&Space> = factors.iter().collect();
            Ok(Space::tensor_all(&refs))
        };

        let mut maps: Vec<(String, GradedMap<Rat>)> = Vec::new();
        for md in &doc.maps {
            if maps.iter().any(|(n, _)| n == &md.name) {
                return Err(BundleError::Reference(format!("duplicate map name `{}`", md.name)));
            }
            let context = format!("map `{}`", md.name);
            let source = resolve_space(&md.source, &context)?;
            let target = resolve_space(&md.target, &context)?;
            let mut map = GradedMap::zero(&source, &target, md.degree);
            let mut seen: Vec<(&str, &str)> = Vec::new();
            for e in &md.entries {
                let from_deg = degree_of_label(&source, &e.from).ok_or_else(|| {
                    BundleError::Reference(format!(
                        "{context}: unknown basis label `{}` in source {source}",
                        e.from
                    ))
                })?;
                let to_deg = degree_of_label(&target, &e.to).ok_or_else(|| {
                    BundleError::Reference(format!(
                        "{context}: unknown basis label `{}` in target {target}",
                        e.to
                    ))
                })?;
                if to_deg - from_deg != md.degree {
                    return Err(BundleError::Dimension(format!(
                        "{context}: entry {} ↦ {} shifts degree by {} but the map declares degree {}",
                        e.from,
                        e.to,
                        to_deg - from_deg,
                        md.degree
                    )));
                }
                if seen.contains(&(e.from.as_str(), e.to.as_str())) {
                    return Err(BundleError::Dimension(format!(
                        "{context}: duplicate entry {} ↦ {}",
                        e.from, e.to
                    )));
                }
                seen.push((e.from.as_str(), e.to.as_str()));
                map.set_label(&e.from, &e.to, e.value.0.clone());
            }
            maps.push((md.name.clone(), map));
        }

        let get_map = |name: &str, context: &str| -> Result<GradedMap<Rat>, BundleError> {
            maps.iter()
                .find(|(n, _)| n == name)
                .map(|(_, m)| m.clone())
                .ok_or_else(|| BundleError::Reference(format!("{context}: unknown map `{name}`")))
        };

        let mut complexes: Vec<CochainComplex<Rat>> = Vec::new();
        let mut algebras: Vec<CdgAlgebra<Rat>> = Vec::new();
        let mut coalgebras: Vec<DgCoalgebra<Rat>> = Vec::new();
        let mut bialgebras: Vec<CdgBialgebra<Rat>> = Vec::new();
        let mut hopfs: Vec<CdgHopf<Rat>> = Vec::new();
        let mut comodules: Vec<NamedComodule> = Vec::new();
        let mut morphisms: Vec<MorphismDecl> = Vec::new();

        // First pass: everything except comodules and morphisms.
        for sd in &doc.structures {
            match sd {
                StructureDoc::Complex { space, differential } => {
                    let context = format!("complex on `{space}`");
                    let s = resolve_space(space, &context)?;
                    let d = get_map(differential, &context)?;
                    complexes.push(CochainComplex::new(s, d).map_err(dim_err)?);
                }
                StructureDoc::Algebra { space, differential, product, unit } => {
                    let context = format!("algebra on `{space}`");
                    let s = resolve_space(space, &context)?;
                    let complex =
                        CochainComplex::new(s, get_map(differential, &context)?).map_err(dim_err)?;
                    let a = CdgAlgebra::new(
                        complex,
                        get_map(product, &context)?,
                        get_map(unit, &context)?,
                    )
                    .map_err(dim_err)?;
                    algebras.push(a);
                }
                StructureDoc::Coalgebra { space, differential, coproduct, counit } => {
                    let context = format!("coalgebra on `{space}`");
                    let s = resolve_space(space, &context)?;
                    let complex =
                        CochainComplex::new(s, get_map(differential, &context)?).map_err(dim_err)?;
                    let c = DgCoalgebra::new(
                        complex,
                        get_map(coproduct, &context)?,
                        get_map(counit, &context)?,
                    )
                    .map_err(dim_err)?;
                    coalgebras.push(c);
                }
                StructureDoc::Bialgebra { space, differential, product, unit, coproduct, counit } => {
                    let context = format!("bialgebra on `{space}`");
                    let s = resolve_space(space, &context)?;
                    let complex = CochainComplex::new(s, get_map(differential, &context)?)
                        .map_err(dim_err)?;
                    let algebra = CdgAlgebra::new(
                        complex.clone(),
                        get_map(product, &context)?,
                        get_map(unit, &context)?,
                    )
                    .map_err(dim_err)?;
                    let coalgebra = DgCoalgebra::new(
                        complex,
                        get_map(coproduct, &context)?,
                        get_map(counit, &context)?,
                    )
                    .map_err(dim_err)?;
                    bialgebras.push(CdgBialgebra::new(algebra, coalgebra).map_err(dim_err)?);
                }
                StructureDoc::Hopf {
                    space,
                    differential,
                    product,
                    unit,
                    coproduct,
                    counit,
                    antipode,
                } => {
                    let context = format!("hopf algebra on `{space}`");
                    let s = resolve_space(space, &context)?;
                    let complex = CochainComplex::new(s, get_map(differential, &context)?)
                        .map_err(dim_err)?;
                    let algebra = CdgAlgebra::new(
                        complex.clone(),
                        get_map(product, &context)?,
                        get_map(unit, &context)?,
                    )
                    .map_err(dim_err)?;
                    let coalgebra = DgCoalgebra::new(
                        complex,
                        get_map(coproduct, &context)?,
                        get_map(counit, &context)?,
                    )
                    .map_err(dim_err)?;
                    let bialgebra = CdgBialgebra::new(algebra, coalgebra).map_err(dim_err)?;
                    hopfs.push(CdgHopf::new(bialgebra, get_map(antipode, &context)?).map_err(dim_err)?);
                }
                StructureDoc::Comodule { .. } | StructureDoc::Morphism { .. } => {}
            }
        }

        // Second pass: comodules (they reference a declared Hopf algebra).
        for sd in &doc.structures {
            if let StructureDoc::Comodule { name, space, over, differential, coaction } = sd {
                let context = format!("comodule `{name}`");
                if comodules.iter().any(|c| &c.name == name) {
                    return Err(BundleError::Reference(format!("duplicate comodule name `{name}`")));
                }
                let over_space = resolve_space(over, &context)?;
                let hopf_idx = hopfs
                    .iter()
                    .position(|h| h.space() == &over_space)
                    .ok_or_else(|| {
                        BundleError::Reference(format!(
                            "{context}: no hopf structure is declared on `{over}`"
                        ))
                    })?;
                let s = resolve_space(space, &context)?;
                let complex =
                    CochainComplex::new(s, get_map(differential, &context)?).map_err(dim_err)?;
                let comodule =
                    Comodule::new(&hopfs[hopf_idx], complex, get_map(coaction, &context)?)
                        .map_err(dim_err)?;
                comodules.push(NamedComodule {
                    name: name.clone(),
                    hopf: hopf_idx,
                    comodule,
                });
            }
        }

        // Third pass: morphisms between declared comodules.
        for sd in &doc.structures {
            if let StructureDoc::Morphism { map, source, target } = sd {
                let context = format!("morphism `{map}`");
                let find = |name: &str| -> Result<usize, BundleError> {
                    comodules.iter().position(|c| c.name == name).ok_or_else(|| {
                        BundleError::Reference(format!("{context}: unknown comodule `{name}`"))
                    })
                };
                let (src, tgt) = (find(source)?, find(target)?);
                let f = get_map(map, &context)?;
                if f.source() != comodules[src].comodule.space()
                    || f.target() != comodules[tgt].comodule.space()
                {
                    return Err(BundleError::Dimension(format!(
                        "{context}: map has shape {} → {} but the comodules live on {} → {}",
                        f.source(),
                        f.target(),
                        comodules[src].comodule.space(),
                        comodules[tgt].comodule.space()
                    )));
                }
                morphisms.push(MorphismDecl {
                    map_name: map.clone(),
                    map: f,
                    source: src,
                    target: tgt,
                });
            }
        }

        Ok(Bundle {
            doc,
            maps,
            complexes,
            algebras,
            coalgebras,
            bialgebras,
            hopfs,
            comodules,
            morphisms,
        })
    }

    pub fn name(&self) -> &str {
        &self.doc.name
    }

    pub fn map_named(&self, name: &str) -> Result<&GradedMap<Rat>, BundleError> {
        self.maps
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| BundleError::Reference(format!("the bundle has no map named `{name}`")))
    }

    pub fn first_hopf(&self) -> Result<&CdgHopf<Rat>, BundleError> {
        self.hopfs
            .first()
            .ok_or_else(|| BundleError::Reference("the bundle declares no hopf structure".into()))
    }

    pub fn hopf_on(&self, space: &Space) -> Result<&CdgHopf<Rat>, BundleError> {
        self.hopfs.iter().find(|h| h.space() == space).ok_or_else(|| {
            BundleError::Reference(format!("no hopf structure is declared on {space}"))
        })
    }

    /// The bialgebra declared on `space`, from a bialgebra or Hopf
    /// declaration.
    pub fn bialgebra_on(&self, space: &Space) -> Result<CdgBialgebra<Rat>, BundleError> {
        if let Some(h) = self.hopfs.iter().find(|h| h.space() == space) {
            return Ok(h.bialgebra().clone());
        }
        if let Some(b) = self.bialgebras.iter().find(|b| b.space() == space) {
            return Ok(b.clone());
        }
        Err(BundleError::Reference(format!(
            "no bialgebra or hopf structure is declared on {space}"
        )))
    }

    /// The cdg-algebra declared on `space`, from an algebra, bialgebra, or
    /// Hopf declaration.
    pub fn algebra_on(&self, space: &Space) -> Result<CdgAlgebra<Rat>, BundleError> {
        if let Some(a) = self.algebras.iter().find(|a| a.space() == space) {
            return Ok(a.clone());
        }
        if let Some(b) = self.bialgebras.iter().find(|b| b.space() == space) {
            return Ok(b.algebra().clone());
        }
        if let Some(h) = self.hopfs.iter().find(|h| h.space() == space) {
            return Ok(h.algebra().clone());
        }
        Err(BundleError::Reference(format!(
            "no algebra, bialgebra, or hopf structure is declared on {space}"
        )))
    }

    pub fn first_comodule(&self) -> Result<&NamedComodule, BundleError> {
        self.comodules
            .first()
            .ok_or_else(|| BundleError::Reference("the bundle declares no comodule".into()))
    }
}

// ---------------------------------------------------------------------------
// Converting library objects back into documents (for output and corpus).
// ---------------------------------------------------------------------------

/// Serialize a map as a document fragment, entries in canonical basis order.
pub fn map_to_doc(name: &str, f: &GradedMap<Rat>) -> MapDoc {
    let src = f.source_basis();
    let tgt = f.target_basis();
    let mut entries = Vec::new();
    for (n, i) in src.elements() {
        for ((m, j), value) in f.image_of_basis(n, i).terms() {
            entries.push(EntryDoc {
                from: src.label(n, i),
                to: tgt.label(m, j),
                value: ScalarDoc(value),
            });
        }
    }
    MapDoc {
        name: name.to_string(),
        source: f.source().to_string(),
        target: f.target().to_string(),
        degree: f.degree(),
        entries,
    }
}

/// Serialize an atomic space as a document fragment.
pub fn space_to_doc(space: &Space) -> SpaceDoc {
    let basis = Basis::shared(space);
    SpaceDoc {
        name: space.to_string(),
        basis: basis
            .elements()
            .map(|(n, i)| BasisDoc { label: basis.label(n, i), degree: n })
            .collect(),
    }
}
