//! Exact computer algebra for finite-dimensional differential graded Hopf
//! algebras over a field of characteristic zero.
//!
//! Everything is cohomologically graded and every scalar is an exact
//! rational, so axiom checks are equalities, not approximations. The crate
//! builds up in layers:
//!
//! * [`space`], [`map`], [`matrix`], [`complex`], [`subspace`] — the graded
//!   symmetric monoidal category with Koszul signs, sparse blocks, and exact
//!   elimination;
//! * [`dg`] — cdg-algebras, dg-coalgebras, bialgebras and Hopf algebras,
//!   with axiom reports, antipode solving, iterated (co)products and
//!   conilpotency filtrations;
//! * [`free_module`] — free right dg-modules `M⊗A`, the `𝔭,𝔮,𝔯,𝔰`
//!   operator calculus, and transport of endomorphisms along algebra maps;
//! * [`convolution`] — convolution groups `Hom_{cdgA}(B,A)` and their Lie
//!   algebras, `exp`/`ln` for conilpotent `B`, and polynomial homotopy
//!   pairs with their transports;
//! * [`comodule`] — dg-comodules, the standard examples, and the mutually
//!   inverse functors between comodules and free-module representations;
//! * [`rigidity`] — tensor-natural endomorphisms, rigid duals, and the two
//!   antipode constructions whose agreement is the flagship check;
//! * [`cohomology`] — strong deformation retracts onto cohomology and the
//!   induced Hopf structure on `H(B)`;
//! * [`sampling`] — deterministic random generators for property tests.
//!
//! All structure maps are plain [`map::GradedMap`]s, so every axiom is a
//! finite matrix identity; failures come back as [`report::Report`]s with a
//! named basis element witnessing the discrepancy.

pub mod cohomology;
pub mod comodule;
pub mod complex;
pub mod convolution;
pub mod corpus;
pub mod dg;
pub mod error;
pub mod free_module;
pub mod map;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod rigidity;
pub mod sampling;
pub mod scalar;
pub mod space;
pub mod subspace;

/// The default exact scalar type: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

pub use error::{Error, Result};
pub use map::{GradedMap, Vect};
pub use report::Report;
pub use scalar::Scalar;
pub use space::Space;
