//! The shipped corpus: three bundles that together exercise every command.
//!
//! Each bundle declares a Hopf algebra, a convolution target algebra, group
//! and tangent elements, at least two comodules, and a comodule morphism,
//! so that every documented `dghopf` command has meaningful work to do on
//! every corpus file:
//!
//! * `exterior-one` — `Λ(x)` coacting on itself and on the ground field,
//!   with the contractible algebra `k[t,dt]` as convolution target;
//! * `exterior-two` — `Λ(x,y)` as both source and target, with the
//!   antipode-twisted (star) comodule listed first;
//! * `ground-interval` — the ground field as Hopf algebra over the interval
//!   algebra `k[t,dt]`, whose cohomology retraction is nontrivial.
//!
//! Structure maps are serialized from the library's own corpus
//! constructors, so the files cannot drift from the objects the test suite
//! reasons about.

use crate::bundle::{map_to_doc, space_to_doc, BundleDoc, StructureDoc, BUNDLE_FORMAT, BUNDLE_VERSION};
use dg_hopf::comodule::{standard_comodule, ComoduleKind};
use dg_hopf::corpus::{exterior_one, exterior_two, ground_hopf, interval_algebra};
use dg_hopf::scalar::int;
use dg_hopf::{GradedMap, Rat};

/// Names and documents of the full corpus, in canonical order.
pub fn corpus_docs() -> Vec<(&'static str, BundleDoc)> {
    vec![
        ("exterior-one", exterior_one_doc()),
        ("exterior-two", exterior_two_doc()),
        ("ground-interval", ground_interval_doc()),
    ]
}

fn doc_shell(name: &str) -> BundleDoc {
    BundleDoc {
        format: BUNDLE_FORMAT.to_string(),
        version: BUNDLE_VERSION,
        name: name.to_string(),
        spaces: Vec::new(),
        maps: Vec::new(),
        structures: Vec::new(),
    }
}

/// `Λ(x)` with the interval algebra as convolution target.
///
/// Elements: `g(x) = dt` (a group element), `e` (the convolution unit),
/// and `xi(x) = dt` (tangential; `Λ(x)` has conilpotency index 1, so
/// `exp(xi) = e + xi = g` exactly). Comodules: the regular one on `Λ(x)`
/// and the trivial one on `k`, with the unit `u` as a comodule morphism
/// between them.
fn exterior_one_doc() -> BundleDoc {
    let b = exterior_one::<Rat>();
    let a = interval_algebra::<Rat>();
    let trivial = standard_comodule(ComoduleKind::Trivial, &b, None).expect("trivial comodule");

    let mut g = GradedMap::zero(b.space(), a.space(), 0);
    g.set_label("1", "1", int(1));
    g.set_label("x", "dt", int(1));
    let mut e = GradedMap::zero(b.space(), a.space(), 0);
    e.set_label("1", "1", int(1));
    let mut xi = GradedMap::zero(b.space(), a.space(), 0);
    xi.set_label("x", "dt", int(1));

    let mut doc = doc_shell("exterior-one");
    doc.spaces = vec![space_to_doc(b.space()), space_to_doc(a.space())];
    doc.maps = vec![
        map_to_doc("d", b.d()),
        map_to_doc("m", b.m()),
        map_to_doc("u", b.u()),
        map_to_doc("delta", b.delta()),
        map_to_doc("eps", b.counit()),
        map_to_doc("sigma", b.antipode()),
        map_to_doc("dA", a.d()),
        map_to_doc("mA", a.m()),
        map_to_doc("uA", a.u()),
        map_to_doc("dk", trivial.d()),
        map_to_doc("gamma_triv", trivial.coaction()),
        map_to_doc("g", &g),
        map_to_doc("e", &e),
        map_to_doc("xi", &xi),
    ];
    doc.structures = vec![
        StructureDoc::Hopf {
            space: "Λ(x)".into(),
            differential: "d".into(),
            product: "m".into(),
            unit: "u".into(),
            coproduct: "delta".into(),
            counit: "eps".into(),
            antipode: "sigma".into(),
        },
        StructureDoc::Algebra {
            space: "k[t,dt]".into(),
            differential: "dA".into(),
            product: "mA".into(),
            unit: "uA".into(),
        },
        StructureDoc::Comodule {
            name: "regular".into(),
            space: "Λ(x)".into(),
            over: "Λ(x)".into(),
            differential: "d".into(),
            coaction: "delta".into(),
        },
        StructureDoc::Comodule {
            name: "trivial".into(),
            space: "k".into(),
            over: "Λ(x)".into(),
            differential: "dk".into(),
            coaction: "gamma_triv".into(),
        },
        StructureDoc::Morphism {
            map: "u".into(),
            source: "trivial".into(),
            target: "regular".into(),
        },
    ];
    doc
}

/// `Λ(x,y)` acting as its own convolution target.
///
/// Elements: the identity `idb`, the swap `sw` (`x ↔ y`, `xy ↦ −xy`), and
/// the tangent elements `v` (`x ↦ y, y ↦ x`) and `w` (`x ↦ x`). The
/// antipode-twisted comodule `star` is listed first so the comodule-valued
/// commands run on a non-regular coaction.
fn exterior_two_doc() -> BundleDoc {
    let b = exterior_two::<Rat>();
    let star = standard_comodule(ComoduleKind::Star, &b, None).expect("star comodule");

    let idb = GradedMap::identity(b.space());
    let mut sw = GradedMap::zero(b.space(), b.space(), 0);
    sw.set_label("1", "1", int(1));
    sw.set_label("x", "y", int(1));
    sw.set_label("y", "x", int(1));
    sw.set_label("xy", "xy", int(-1));
    let mut v = GradedMap::zero(b.space(), b.space(), 0);
    v.set_label("x", "y", int(1));
    v.set_label("y", "x", int(1));
    let mut w = GradedMap::zero(b.space(), b.space(), 0);
    w.set_label("x", "x", int(1));

    let mut doc = doc_shell("exterior-two");
    doc.spaces = vec![space_to_doc(b.space())];
    doc.maps = vec![
        map_to_doc("d", b.d()),
        map_to_doc("m", b.m()),
        map_to_doc("u", b.u()),
        map_to_doc("delta", b.delta()),
        map_to_doc("eps", b.counit()),
        map_to_doc("sigma", b.antipode()),
        map_to_doc("gamma_star", star.coaction()),
        map_to_doc("idb", &idb),
        map_to_doc("sw", &sw),
        map_to_doc("v", &v),
        map_to_doc("w", &w),
    ];
    doc.structures = vec![
        StructureDoc::Hopf {
            space: "Λ(x,y)".into(),
            differential: "d".into(),
            product: "m".into(),
            unit: "u".into(),
            coproduct: "delta".into(),
            counit: "eps".into(),
            antipode: "sigma".into(),
        },
        StructureDoc::Comodule {
            name: "star".into(),
            space: "Λ(x,y)".into(),
            over: "Λ(x,y)".into(),
            differential: "d".into(),
            coaction: "gamma_star".into(),
        },
        StructureDoc::Comodule {
            name: "regular".into(),
            space: "Λ(x,y)".into(),
            over: "Λ(x,y)".into(),
            differential: "d".into(),
            coaction: "delta".into(),
        },
        StructureDoc::Morphism {
            map: "idb".into(),
            source: "regular".into(),
            target: "regular".into(),
        },
    ];
    doc
}

/// The ground field as Hopf algebra, with the interval algebra `k[t,dt]` as
/// target.
///
/// Over `k` the convolution group is trivial — `g` is the unit inclusion
/// and the only tangent element is `z = 0` — which makes this bundle the
/// degenerate sanity case for every group-theoretic command, while its
/// interval algebra gives the cohomology command a nontrivial retraction.
/// The point comodule on `k[t,dt]` is listed first.
fn ground_interval_doc() -> BundleDoc {
    let b = ground_hopf::<Rat>();
    let a = interval_algebra::<Rat>();
    let point =
        standard_comodule(ComoduleKind::Point, &b, Some(a.complex())).expect("point comodule");
    let trivial = standard_comodule(ComoduleKind::Trivial, &b, None).expect("trivial comodule");

    let mut g = GradedMap::zero(b.space(), a.space(), 0);
    g.set_label("1", "1", int(1));
    let z = GradedMap::zero(b.space(), a.space(), 0);

    let mut doc = doc_shell("ground-interval");
    doc.spaces = vec![space_to_doc(a.space())];
    doc.maps = vec![
        map_to_doc("dk", b.d()),
        map_to_doc("mk", b.m()),
        map_to_doc("uk", b.u()),
        map_to_doc("deltak", b.delta()),
        map_to_doc("epsk", b.counit()),
        map_to_doc("sigmak", b.antipode()),
        map_to_doc("dA", a.d()),
        map_to_doc("mA", a.m()),
        map_to_doc("uA", a.u()),
        map_to_doc("gammaP", point.coaction()),
        map_to_doc("gamma_triv", trivial.coaction()),
        map_to_doc("g", &g),
        map_to_doc("z", &z),
    ];
    doc.structures = vec![
        StructureDoc::Hopf {
            space: "k".into(),
            differential: "dk".into(),
            product: "mk".into(),
            unit: "uk".into(),
            coproduct: "deltak".into(),
            counit: "epsk".into(),
            antipode: "sigmak".into(),
        },
        StructureDoc::Algebra {
            space: "k[t,dt]".into(),
            differential: "dA".into(),
            product: "mA".into(),
            unit: "uA".into(),
        },
        StructureDoc::Comodule {
            name: "point".into(),
            space: "k[t,dt]".into(),
            over: "k".into(),
            differential: "dA".into(),
            coaction: "gammaP".into(),
        },
        StructureDoc::Comodule {
            name: "trivial".into(),
            space: "k".into(),
            over: "k".into(),
            differential: "dk".into(),
            coaction: "gamma_triv".into(),
        },
        StructureDoc::Morphism {
            map: "g".into(),
            source: "trivial".into(),
            target: "point".into(),
        },
    ];
    doc
}
