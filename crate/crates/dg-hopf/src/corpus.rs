//! The worked examples used across tests and the CLI corpus.
//!
//! * `Λ(x)` — the exterior algebra on one degree-1 generator, zero
//!   differential, primitive coproduct, antipode `ς(x) = −x`;
//! * `Λ(x,y)` — two degree-1 generators; `Δ(xy) = xy⊗1 + x⊗y − y⊗x + 1⊗xy`
//!   and `ς(xy) = xy`;
//! * the ground field `k` as the trivial Hopf algebra;
//! * `k[t,dt]` — the contractible cdg-algebra spanned by `{1, t, dt}` with
//!   `d(t) = dt` and `t² = t·dt = dt·dt = 0`, the standard convolution
//!   target. (Keeping `t² = 0` preserves associativity in a bounded window;
//!   `t² = t` would force `t·dt = ½dt` and break `(t·t)·dt = t·(t·dt)`.)

use crate::complex::CochainComplex;
use crate::dg::{CdgAlgebra, CdgBialgebra, CdgHopf, DgCoalgebra};
use crate::map::GradedMap;
use crate::scalar::{int, Scalar};
use crate::space::Space;

/// The exterior Hopf algebra `Λ(x)`, `|x| = 1`, `d = 0`.
pub fn exterior_one<K: Scalar>() -> CdgHopf<K> {
    let b = Space::atom("Λ(x)", (0, 1), &[("1", 0), ("x", 1)]).expect("valid atom");
    let complex = CochainComplex::with_zero_differential(b.clone());

    let mut m = GradedMap::zero(&b.tensor(&b), &b, 0);
    m.set_label("1⊗1", "1", int(1));
    m.set_label("1⊗x", "x", int(1));
    m.set_label("x⊗1", "x", int(1));

    let mut u = GradedMap::zero(&Space::ground(), &b, 0);
    u.set_label("1", "1", int(1));

    let mut delta = GradedMap::zero(&b, &b.tensor(&b), 0);
    delta.set_label("1", "1⊗1", int(1));
    delta.set_label("x", "x⊗1", int(1));
    delta.set_label("x", "1⊗x", int(1));

    let mut counit = GradedMap::zero(&b, &Space::ground(), 0);
    counit.set_label("1", "1", int(1));

    let mut antipode = GradedMap::zero(&b, &b, 0);
    antipode.set_label("1", "1", int(1));
    antipode.set_label("x", "x", int(-1));

    let algebra = CdgAlgebra::new(complex.clone(), m, u).expect("well-shaped algebra");
    let coalgebra = DgCoalgebra::new(complex, delta, counit).expect("well-shaped coalgebra");
    let bialgebra = CdgBialgebra::new(algebra, coalgebra).expect("matching parts");
    CdgHopf::new(bialgebra, antipode).expect("well-shaped antipode")
}

/// The exterior Hopf algebra `Λ(x,y)`, `|x| = |y| = 1`, `d = 0`.
pub fn exterior_two<K: Scalar>() -> CdgHopf<K> {
    let b = Space::atom("Λ(x,y)", (0, 2), &[("1", 0), ("x", 1), ("y", 1), ("xy", 2)])
        .expect("valid atom");
    let complex = CochainComplex::with_zero_differential(b.clone());

    let mut m = GradedMap::zero(&b.tensor(&b), &b, 0);
    for g in ["1", "x", "y", "xy"] {
        m.set_label(&format!("1⊗{g}"), g, int(1));
        if g != "1" {
            m.set_label(&format!("{g}⊗1"), g, int(1));
        }
    }
    m.set_label("x⊗y", "xy", int(1));
    m.set_label("y⊗x", "xy", int(-1));

    let mut u = GradedMap::zero(&Space::ground(), &b, 0);
    u.set_label("1", "1", int(1));

    let mut delta = GradedMap::zero(&b, &b.tensor(&b), 0);
    delta.set_label("1", "1⊗1", int(1));
    for g in ["x", "y", "xy"] {
        delta.set_label(g, &format!("{g}⊗1"), int(1));
        delta.set_label(g, &format!("1⊗{g}"), int(1));
    }
    delta.set_label("xy", "x⊗y", int(1));
    delta.set_label("xy", "y⊗x", int(-1));

    let mut counit = GradedMap::zero(&b, &Space::ground(), 0);
    counit.set_label("1", "1", int(1));

    let mut antipode = GradedMap::zero(&b, &b, 0);
    antipode.set_label("1", "1", int(1));
    antipode.set_label("x", "x", int(-1));
    antipode.set_label("y", "y", int(-1));
    antipode.set_label("xy", "xy", int(1));

    let algebra = CdgAlgebra::new(complex.clone(), m, u).expect("well-shaped algebra");
    let coalgebra = DgCoalgebra::new(complex, delta, counit).expect("well-shaped coalgebra");
    let bialgebra = CdgBialgebra::new(algebra, coalgebra).expect("matching parts");
    CdgHopf::new(bialgebra, antipode).expect("well-shaped antipode")
}

/// The ground field as a Hopf algebra.
pub fn ground_hopf<K: Scalar>() -> CdgHopf<K> {
    let k = Space::ground();
    let complex = CochainComplex::with_zero_differential(k.clone());

    let mut m = GradedMap::zero(&k.tensor(&k), &k, 0);
    m.set_label("1⊗1", "1", int(1));
    let u = GradedMap::identity(&k);
    let mut delta = GradedMap::zero(&k, &k.tensor(&k), 0);
    delta.set_label("1", "1⊗1", int(1));
    let counit = GradedMap::identity(&k);
    let antipode = GradedMap::identity(&k);

    let algebra = CdgAlgebra::new(complex.clone(), m, u).expect("well-shaped algebra");
    let coalgebra = DgCoalgebra::new(complex, delta, counit).expect("well-shaped coalgebra");
    let bialgebra = CdgBialgebra::new(algebra, coalgebra).expect("matching parts");
    CdgHopf::new(bialgebra, antipode).expect("well-shaped antipode")
}

/// The contractible cdg-algebra `k[t,dt]` with `d(t) = dt` and all products
/// of `{t, dt}` equal to zero.
pub fn interval_algebra<K: Scalar>() -> CdgAlgebra<K> {
    let a = Space::atom("k[t,dt]", (0, 1), &[("1", 0), ("t", 0), ("dt", 1)]).expect("valid atom");
    let mut d = GradedMap::zero(&a, &a, 1);
    d.set_label("t", "dt", int(1));
    let complex = CochainComplex::new(a.clone(), d).expect("d² = 0");

    let mut m = GradedMap::zero(&a.tensor(&a), &a, 0);
    for g in ["1", "t", "dt"] {
        m.set_label(&format!("1⊗{g}"), g, int(1));
        if g != "1" {
            m.set_label(&format!("{g}⊗1"), g, int(1));
        }
    }
    let mut u = GradedMap::zero(&Space::ground(), &a, 0);
    u.set_label("1", "1", int(1));
    CdgAlgebra::new(complex, m, u).expect("well-shaped algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn all_corpus_structures_are_well_formed() {
        assert!(exterior_one::<Rat>().verify().passed());
        assert!(exterior_two::<Rat>().verify().passed());
        assert!(ground_hopf::<Rat>().verify().passed());
        assert!(interval_algebra::<Rat>().verify().passed());
    }
}
