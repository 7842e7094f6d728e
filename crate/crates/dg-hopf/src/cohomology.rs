//! Splittings, strong deformation retracts, and the induced structure on
//! cohomology.
//!
//! Over a field every cochain complex splits: a degree −1 map `χ` with
//! `d = d∘χ∘d` yields a strong deformation retract onto the cohomology
//! `(H, 0)` with projections `q∘p = id_H` and `p∘q = id − d∘χ − χ∘d`. The
//! splitting is built by exact per-degree elimination with a selectable
//! pivot scan order, so a second, genuinely different splitting is always
//! available to witness that the induced structure on `H` does not depend
//! on the choice.

use crate::complex::CochainComplex;
use crate::dg::{CdgAlgebra, CdgBialgebra, CdgHopf, DgCoalgebra};
use crate::error::{Error, Result};
use crate::map::{chain, check_maps_equal, GradedMap, Vect};
use crate::matrix::{kernel_basis, PivotOrder, SpanBuilder};
use crate::report::{Report, Witness};
use crate::scalar::Scalar;
use crate::space::{Basis, Space};

/// A strong deformation retract `(H, 0) ⇄ (B, d)` produced by a splitting:
/// `χ` of degree −1 with `d = d∘χ∘d`, `q∘p = id_H`,
/// `p∘q = id_B − d∘χ − χ∘d`, and `p`, `q` cochain maps.
#[derive(Clone, Debug)]
pub struct SDR<K> {
    /// The splitting homotopy `χ : B → B` of degree −1.
    pub chi: GradedMap<K>,
    /// Cohomology with the zero differential.
    pub h: CochainComplex<K>,
    /// Cocycle representatives `p : H → B`.
    pub p: GradedMap<K>,
    /// Projection onto cohomology `q : B → H`.
    pub q: GradedMap<K>,
}

impl<K: Scalar> SDR<K> {
    /// Check the five retract identities against the complex they came from.
    pub fn verify(&self, c: &CochainComplex<K>) -> Report {
        let mut report = Report::new(format!("strong deformation retract of {}", c.space()));
        let shape_ok = self.chi.source() == c.space()
            && self.chi.target() == c.space()
            && self.chi.degree() == -1
            && self.p.source() == self.h.space()
            && self.p.target() == c.space()
            && self.q.source() == c.space()
            && self.q.target() == self.h.space();
        report.push("χ: B → B has degree −1 and p, q connect H and B", shape_ok);
        if !shape_ok {
            return report;
        }
        let d = c.d();
        report.checks.push(check_maps_equal("d = d∘χ∘d", d, &chain(&[d, &self.chi, d])));
        report.checks.push(check_maps_equal(
            "q∘p = id_H",
            &chain(&[&self.q, &self.p]),
            &GradedMap::identity(self.h.space()),
        ));
        let homotopy_side = GradedMap::identity(c.space())
            .sub(&chain(&[d, &self.chi]))
            .sub(&chain(&[&self.chi, d]));
        report.checks.push(check_maps_equal(
            "p∘q = id_B − d∘χ − χ∘d",
            &chain(&[&self.p, &self.q]),
            &homotopy_side,
        ));
        report.checks.push(check_maps_equal(
            "p is a cochain map (d∘p = 0)",
            &chain(&[d, &self.p]),
            &GradedMap::zero(self.h.space(), c.space(), 1),
        ));
        report.checks.push(check_maps_equal(
            "q is a cochain map (q∘d = 0)",
            &chain(&[&self.q, d]),
            &GradedMap::zero(c.space(), self.h.space(), 1),
        ));
        report
    }
}

fn dense<K: Scalar>(v: &Vect<K>, n: i64, dim: usize) -> Vec<K> {
    (0..dim).map(|i| v.coefficient(n, i)).collect()
}

/// Per-degree elimination record: how many leading columns are boundaries,
/// the chosen harmonic representatives, which standard basis vectors form
/// the section, and the builder holding everyone's coordinates.
struct DegreeChoice<K> {
    boundary_count: usize,
    harmonic_reps: Vec<Vec<K>>,
    section_idx: Vec<usize>,
    builder: SpanBuilder<K>,
}

/// Compute a strong deformation retract with the default (forward) pivot
/// scan. When `unit` is supplied the splitting is arranged so that
/// `χ∘unit = 0` by seeding the degree-0 harmonic complement with the unit.
pub fn compute_sdr<K: Scalar>(
    c: &CochainComplex<K>,
    unit: Option<&GradedMap<K>>,
) -> Result<SDR<K>> {
    compute_sdr_with(c, unit, PivotOrder::Forward)
}

/// [`compute_sdr`] with an explicit pivot scan order. `Reverse` produces a
/// second, independent splitting whenever any choice is available, which the
/// splitting-independence tests rely on.
pub fn compute_sdr_with<K: Scalar>(
    c: &CochainComplex<K>,
    unit: Option<&GradedMap<K>>,
    order: PivotOrder,
) -> Result<SDR<K>> {
    let space = c.space();
    if let Some(u) = unit {
        if u.source() != &Space::ground() || u.target() != space {
            return Err(Error::SpaceMismatch {
                context: "compute_sdr",
                expected: format!("{} → {}", Space::ground(), space),
                found: format!("{} → {}", u.source(), u.target()),
            });
        }
        if u.degree() != 0 {
            return Err(Error::DegreeError { context: "compute_sdr", expected: 0, found: u.degree() });
        }
    }
    let d = c.d();

    // A zero differential retracts onto itself: H literally is the complex.
    if d.is_zero() {
        return Ok(SDR {
            chi: GradedMap::zero(space, space, -1),
            h: c.clone(),
            p: GradedMap::identity(space),
            q: GradedMap::identity(space),
        });
    }

    let basis = Basis::shared(space);
    let unit_vect = unit.map(|u| {
        u.apply(&Vect::basis_vector(&Space::ground(), "1").expect("ground space has basis 1"))
    });
    let (lo, hi) = space.window();

    // Pass 1, ascending degree: order each C^n as
    //   [image of the previous section | harmonic complement | new section].
    // The image columns are d of the previous section's standard vectors, so
    // χ inverts d on them literally.
    let mut choices: Vec<DegreeChoice<K>> = Vec::new();
    let mut prev_section: Vec<usize> = Vec::new();
    let mut prev_d_cols: Vec<Vec<K>> = Vec::new();
    for n in lo..=hi {
        let dim_n = basis.dim(n);
        let dim_up = basis.dim(n + 1);
        let d_cols: Vec<Vec<K>> =
            (0..dim_n).map(|i| dense(&d.image_of_basis(n, i), n + 1, dim_up)).collect();
        let mut builder = SpanBuilder::new(dim_n);
        let mut boundary_count = 0;
        for &i in &prev_section {
            builder
                .insert(&prev_d_cols[i])
                .expect("d is injective on the chosen section");
            boundary_count += 1;
        }
        let mut harmonic_reps: Vec<Vec<K>> = Vec::new();
        if n == 0 {
            if let Some(uv) = &unit_vect {
                if d.apply(uv).is_zero() {
                    let uv_dense = dense(uv, 0, dim_n);
                    if builder.insert(&uv_dense).is_ok() {
                        harmonic_reps.push(uv_dense);
                    }
                }
            }
        }
        let cocycles = kernel_basis(&d_cols, dim_up);
        for j in order.scan(cocycles.len()) {
            if builder.insert(&cocycles[j]).is_ok() {
                harmonic_reps.push(cocycles[j].clone());
            }
        }
        let mut section_idx: Vec<usize> = Vec::new();
        for i in order.scan(dim_n) {
            let mut e = vec![K::zero(); dim_n];
            e[i] = K::one();
            if builder.insert(&e).is_ok() {
                section_idx.push(i);
            }
        }
        debug_assert_eq!(builder.rank(), dim_n);
        prev_section = section_idx.clone();
        prev_d_cols = d_cols;
        choices.push(DegreeChoice { boundary_count, harmonic_reps, section_idx, builder });
    }

    // Pass 2: assemble H and the three maps from the recorded choices.
    let mut labels: Vec<(String, i64)> = Vec::new();
    let mut h_lo = i64::MAX;
    let mut h_hi = i64::MIN;
    for (offset, choice) in choices.iter().enumerate() {
        let n = lo + offset as i64;
        for j in 0..choice.harmonic_reps.len() {
            labels.push((format!("h{n}_{j}"), n));
            h_lo = h_lo.min(n);
            h_hi = h_hi.max(n);
        }
    }
    if labels.is_empty() {
        (h_lo, h_hi) = (0, 0);
    }
    let refs: Vec<(&str, i64)> = labels.iter().map(|(s, n)| (s.as_str(), *n)).collect();
    let h_space = Space::atom(&format!("H({space})"), (h_lo, h_hi), &refs)?;

    let mut chi = GradedMap::zero(space, space, -1);
    let mut p = GradedMap::zero(&h_space, space, 0);
    let mut q = GradedMap::zero(space, &h_space, 0);
    for (offset, choice) in choices.iter().enumerate() {
        let n = lo + offset as i64;
        let dim_n = basis.dim(n);
        for (j, rep) in choice.harmonic_reps.iter().enumerate() {
            for (row, val) in rep.iter().enumerate() {
                if !val.is_zero() {
                    p.set_entry(n, row, j, val.clone());
                }
            }
        }
        let harmonic_count = choice.harmonic_reps.len();
        for i in 0..dim_n {
            let mut e = vec![K::zero(); dim_n];
            e[i] = K::one();
            let coords = choice.builder.coordinates(&e).expect("the chosen columns span C^n");
            for (j, val) in coords[..choice.boundary_count].iter().enumerate() {
                if !val.is_zero() {
                    // Column j is d of the previous degree's j-th section
                    // vector; χ sends it back there.
                    let section = &choices[offset - 1].section_idx;
                    chi.set_entry(n, section[j], i, val.clone());
                }
            }
            for (j, val) in
                coords[choice.boundary_count..choice.boundary_count + harmonic_count]
                    .iter()
                    .enumerate()
            {
                if !val.is_zero() {
                    q.set_entry(n, j, i, val.clone());
                }
            }
        }
    }

    Ok(SDR { chi, h: CochainComplex::with_zero_differential(h_space), p, q })
}

/// The induced graded Hopf structure on cohomology:
/// `u_H = q∘u`, `ε_H = ε∘p`, `m_H = q∘m∘(p⊗p)`, `Δ_H = (q⊗q)∘Δ∘p`,
/// `ς_H = q∘ς∘p`. Independent of the splitting.
pub fn induced_hopf_on_h<K: Scalar>(b: &CdgHopf<K>, sdr: &SDR<K>) -> Result<CdgHopf<K>> {
    let gate = b.verify();
    if !gate.passed() {
        let first = gate.failures().next().map_or_else(String::new, |c| c.name.clone());
        return Err(Error::NotHopf(format!(
            "the induced structure on H needs a verified Hopf algebra; first failure: {first}"
        )));
    }
    expect_retract_of("induced_hopf_on_h", b.space(), sdr)?;
    let p = &sdr.p;
    let q = &sdr.q;
    let algebra = CdgAlgebra::new(
        sdr.h.clone(),
        chain(&[q, b.m(), &p.tensor_map(p)]),
        chain(&[q, b.u()]),
    )?;
    let coalgebra = DgCoalgebra::new(
        sdr.h.clone(),
        chain(&[&q.tensor_map(q), b.delta(), p]),
        chain(&[b.counit(), p]),
    )?;
    let hopf = CdgHopf::new(CdgBialgebra::new(algebra, coalgebra)?, chain(&[q, b.antipode(), p]))?;
    let post = hopf.verify();
    if !post.passed() {
        let first = post.failures().next().map_or_else(String::new, |c| c.name.clone());
        return Err(Error::NotHopf(format!(
            "the induced structure on H failed verification; first failure: {first}"
        )));
    }
    Ok(hopf)
}

/// Algebra-level transport of [`induced_hopf_on_h`]: `m_H = q∘m∘(p⊗p)`,
/// `u_H = q∘u` on the cohomology of a cdg-algebra. This is where splitting
/// independence is exercised non-vacuously (the Hopf corpus has `d = 0`).
pub fn induced_algebra_on_h<K: Scalar>(a: &CdgAlgebra<K>, sdr: &SDR<K>) -> Result<CdgAlgebra<K>> {
    expect_retract_of("induced_algebra_on_h", a.space(), sdr)?;
    let p = &sdr.p;
    let q = &sdr.q;
    CdgAlgebra::new(
        sdr.h.clone(),
        chain(&[q, a.m(), &p.tensor_map(p)]),
        chain(&[q, a.u()]),
    )
}

fn expect_retract_of<K: Scalar>(context: &'static str, space: &Space, sdr: &SDR<K>) -> Result<()> {
    if sdr.p.target() != space || sdr.q.source() != space {
        return Err(Error::SpaceMismatch {
            context,
            expected: space.to_string(),
            found: format!("retract of {}", sdr.p.target()),
        });
    }
    Ok(())
}

/// Compare two maps on the degree-`n` part of their common source, reporting
/// the first basis element where they differ.
fn check_on_degree<K: Scalar>(
    report: &mut Report,
    name: &str,
    n: i64,
    lhs: &GradedMap<K>,
    rhs: &GradedMap<K>,
) {
    let basis = lhs.source_basis().clone();
    for i in 0..basis.dim(n) {
        let l = lhs.image_of_basis(n, i);
        let r = rhs.image_of_basis(n, i);
        if l != r {
            report.push_witnessed(
                name,
                false,
                Some(Witness { element: basis.label(n, i), lhs: l.to_string(), rhs: r.to_string() }),
            );
            return;
        }
    }
    report.push(name, true);
}

/// For a Hopf algebra concentrated in non-negative degrees, confirm the
/// degree-0 half of the reduction: `χ` vanishes in degree 0, `q₀∘p₀ = id`,
/// `p₀∘q₀ = id − χ∘d`, and `p₀`, `q₀` are Hopf-algebra maps in degree 0.
pub fn verify_nonneg_reduction<K: Scalar>(b: &CdgHopf<K>, sdr: &SDR<K>) -> Result<Report> {
    let basis = Basis::shared(b.space());
    for n in basis.degrees() {
        if n < 0 && basis.dim(n) > 0 {
            return Err(Error::WindowError { context: "verify_nonneg_reduction", found: n });
        }
    }
    let h = induced_hopf_on_h(b, sdr)?;
    let mut report = Report::new(format!("non-negative reduction of {}", b.space()));
    check_on_degree(
        &mut report,
        "χ vanishes in degree 0",
        0,
        &sdr.chi,
        &GradedMap::zero(b.space(), b.space(), -1),
    );
    check_on_degree(
        &mut report,
        "q₀∘p₀ = id_{H⁰}",
        0,
        &chain(&[&sdr.q, &sdr.p]),
        &GradedMap::identity(h.space()),
    );
    check_on_degree(
        &mut report,
        "p₀∘q₀ = id_{B⁰} − χ∘d",
        0,
        &chain(&[&sdr.p, &sdr.q]),
        &GradedMap::identity(b.space()).sub(&chain(&[&sdr.chi, b.d()])),
    );
    check_on_degree(
        &mut report,
        "q₀ is an algebra map",
        0,
        &chain(&[&sdr.q, b.m()]),
        &chain(&[h.m(), &sdr.q.tensor_map(&sdr.q)]),
    );
    report.checks.push(check_maps_equal(
        "q preserves the unit",
        &chain(&[&sdr.q, b.u()]),
        h.u(),
    ));
    check_on_degree(
        &mut report,
        "p₀ is a coalgebra map",
        0,
        &chain(&[b.delta(), &sdr.p]),
        &chain(&[&sdr.p.tensor_map(&sdr.p), h.delta()]),
    );
    report.checks.push(check_maps_equal(
        "p preserves the counit",
        &chain(&[b.counit(), &sdr.p]),
        h.counit(),
    ));
    check_on_degree(
        &mut report,
        "q₀∘ς = ς_H∘q₀",
        0,
        &chain(&[&sdr.q, b.antipode()]),
        &chain(&[h.antipode(), &sdr.q]),
    );
    check_on_degree(
        &mut report,
        "p₀∘ς_H = ς∘p₀",
        0,
        &chain(&[&sdr.p, h.antipode()]),
        &chain(&[b.antipode(), &sdr.p]),
    );
    Ok(report)
}

/// Measure how far `p` and `q` are from being (co)algebra and antipode maps
/// in all degrees. Failures here are measurements, not errors: the paper
/// only promises these morphisms up to homotopy.
pub fn measure_reduction_defects<K: Scalar>(b: &CdgHopf<K>, sdr: &SDR<K>) -> Result<Report> {
    let h = induced_hopf_on_h(b, sdr)?;
    let p = &sdr.p;
    let q = &sdr.q;
    let mut report =
        Report::new(format!("up-to-homotopy defects of p and q on {}", b.space()));
    report.checks.push(check_maps_equal(
        "q is an algebra map (measured)",
        &chain(&[q, b.m()]),
        &chain(&[h.m(), &q.tensor_map(q)]),
    ));
    report.checks.push(check_maps_equal(
        "p is an algebra map (measured)",
        &chain(&[p, h.m()]),
        &chain(&[b.m(), &p.tensor_map(p)]),
    ));
    report.checks.push(check_maps_equal(
        "q is a coalgebra map (measured)",
        &chain(&[h.delta(), q]),
        &chain(&[&q.tensor_map(q), b.delta()]),
    ));
    report.checks.push(check_maps_equal(
        "p is a coalgebra map (measured)",
        &chain(&[b.delta(), p]),
        &chain(&[&p.tensor_map(p), h.delta()]),
    ));
    report.checks.push(check_maps_equal(
        "q commutes with the antipodes (measured)",
        &chain(&[q, b.antipode()]),
        &chain(&[h.antipode(), q]),
    ));
    report.checks.push(check_maps_equal(
        "p commutes with the antipodes (measured)",
        &chain(&[p, h.antipode()]),
        &chain(&[b.antipode(), p]),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{exterior_one, exterior_two, interval_algebra};
    use crate::scalar::int;
    use crate::Rat;

    #[test]
    fn zero_differential_complexes_retract_onto_themselves() {
        let b = exterior_one::<Rat>();
        let sdr = compute_sdr(b.algebra().complex(), Some(b.u())).unwrap();
        assert!(sdr.chi.is_zero());
        assert_eq!(sdr.h.space(), b.space());
        assert_eq!(sdr.p, GradedMap::identity(b.space()));
        assert_eq!(sdr.q, GradedMap::identity(b.space()));
        assert!(sdr.verify(b.algebra().complex()).passed());
    }

    #[test]
    fn interval_retracts_onto_its_unit_with_frozen_splitting() {
        let a = interval_algebra::<Rat>();
        let sdr = compute_sdr(a.complex(), Some(a.u())).unwrap();
        let report = sdr.verify(a.complex());
        assert!(report.passed(), "{report}");

        // H = span{[1]} in degree 0.
        assert_eq!(sdr.h.space().total_dim(), 1);
        let h_gen = Vect::<Rat>::basis_vector(sdr.h.space(), "h0_0").unwrap();
        assert_eq!(sdr.p.apply(&h_gen), Vect::basis_vector(a.space(), "1").unwrap());

        // Frozen splitting: χ(dt) = t, χ(1) = χ(t) = 0, q(t) = 0, q(1) = [1].
        let one = Vect::<Rat>::basis_vector(a.space(), "1").unwrap();
        let t = Vect::<Rat>::basis_vector(a.space(), "t").unwrap();
        let dt = Vect::<Rat>::basis_vector(a.space(), "dt").unwrap();
        assert_eq!(sdr.chi.apply(&dt), t);
        assert!(sdr.chi.apply(&one).is_zero());
        assert!(sdr.chi.apply(&t).is_zero());
        assert!(sdr.q.apply(&t).is_zero());
        assert_eq!(sdr.q.apply(&one), h_gen);

        // χ∘u = 0 as a map.
        assert!(chain(&[&sdr.chi, a.u()]).is_zero());

        // The induced algebra on H is the ground field's: m_H([1]⊗[1]) = [1].
        let induced = induced_algebra_on_h(&a, &sdr).unwrap();
        assert!(induced.verify().passed());
        let hh = sdr.h.space().tensor(sdr.h.space());
        assert_eq!(
            induced.m().apply(&Vect::basis_vector(&hh, "h0_0⊗h0_0").unwrap()),
            h_gen
        );
    }

    #[test]
    fn acyclic_two_step_complex_has_no_cohomology() {
        let space = Space::atom("E", (0, 1), &[("a", 0), ("c", 1)]).unwrap();
        let mut d = GradedMap::<Rat>::zero(&space, &space, 1);
        d.set_label("a", "c", int(1));
        let complex = CochainComplex::new(space.clone(), d).unwrap();
        let sdr = compute_sdr(&complex, None).unwrap();
        assert_eq!(sdr.h.space().total_dim(), 0);
        assert!(sdr.q.is_zero());
        assert!(sdr.p.is_zero());
        let report = sdr.verify(&complex);
        assert!(report.passed(), "{report}");
        // p∘q = 0 forces id = d∘χ + χ∘d: the complex is contractible.
        let a = Vect::<Rat>::basis_vector(&space, "a").unwrap();
        assert_eq!(sdr.chi.apply(&d_of(&complex, &a)), a);
    }

    fn d_of(c: &CochainComplex<Rat>, v: &Vect<Rat>) -> Vect<Rat> {
        c.d().apply(v)
    }

    #[test]
    fn reversed_pivots_give_a_different_splitting_but_the_same_induced_algebra() {
        // (k[t,dt])⊗² has a one-dimensional cohomology and a genuine choice
        // of section in degree 1: t⊗dt versus dt⊗t.
        let a = interval_algebra::<Rat>();
        let a2 = a.tensor_square().unwrap();
        let forward = compute_sdr_with(a2.complex(), Some(a2.u()), PivotOrder::Forward).unwrap();
        let reverse = compute_sdr_with(a2.complex(), Some(a2.u()), PivotOrder::Reverse).unwrap();
        assert!(forward.verify(a2.complex()).passed());
        assert!(reverse.verify(a2.complex()).passed());
        assert_ne!(forward.chi, reverse.chi, "the two splittings must differ");

        // Both sections invert d on dt⊗dt, from opposite sides.
        let dtdt = Vect::<Rat>::basis_vector(a2.space(), "dt⊗dt").unwrap();
        let lift_f = forward.chi.apply(&dtdt);
        let lift_r = reverse.chi.apply(&dtdt);
        assert_ne!(lift_f, lift_r);
        assert_eq!(a2.d().apply(&lift_f), dtdt);
        assert_eq!(a2.d().apply(&lift_r), dtdt);

        // Same H and identical induced algebra structure.
        assert_eq!(forward.h.space(), reverse.h.space());
        assert_eq!(forward.h.space().total_dim(), 1);
        let alg_f = induced_algebra_on_h(&a2, &forward).unwrap();
        let alg_r = induced_algebra_on_h(&a2, &reverse).unwrap();
        assert_eq!(alg_f.m(), alg_r.m());
        assert_eq!(alg_f.u(), alg_r.u());
        assert!(alg_f.verify().passed());
    }

    #[test]
    fn induced_hopf_on_h_reproduces_zero_differential_corpus() {
        for b in [exterior_one::<Rat>(), exterior_two::<Rat>()] {
            let sdr = compute_sdr(b.algebra().complex(), Some(b.u())).unwrap();
            let h = induced_hopf_on_h(&b, &sdr).unwrap();
            assert!(h.verify().passed());
            assert_eq!(h.m(), b.m());
            assert_eq!(h.u(), b.u());
            assert_eq!(h.delta(), b.delta());
            assert_eq!(h.counit(), b.counit());
            assert_eq!(h.antipode(), b.antipode());

            // Splitting independence is vacuous here (d = 0 forces the
            // trivial retract), recorded as an exact equality of bundles.
            let sdr_rev =
                compute_sdr_with(b.algebra().complex(), Some(b.u()), PivotOrder::Reverse).unwrap();
            let h_rev = induced_hopf_on_h(&b, &sdr_rev).unwrap();
            assert_eq!(h.m(), h_rev.m());
            assert_eq!(h.delta(), h_rev.delta());
            assert_eq!(h.antipode(), h_rev.antipode());
        }
    }

    #[test]
    fn unverified_hopf_input_is_rejected() {
        let b = exterior_one::<Rat>();
        let sdr = compute_sdr(b.algebra().complex(), Some(b.u())).unwrap();
        // An identity "antipode" breaks the antipode axiom.
        let broken = CdgHopf::new(b.bialgebra().clone(), GradedMap::identity(b.space())).unwrap();
        assert!(matches!(induced_hopf_on_h(&broken, &sdr), Err(Error::NotHopf(_))));
    }

    #[test]
    fn nonneg_reduction_verifies_on_the_corpus_and_rejects_negative_degrees() {
        for b in [exterior_one::<Rat>(), exterior_two::<Rat>()] {
            let sdr = compute_sdr(b.algebra().complex(), Some(b.u())).unwrap();
            let report = verify_nonneg_reduction(&b, &sdr).unwrap();
            assert!(report.passed(), "{report}");
        }

        // Λ(θ) with θ in degree −1 is a perfectly good cdg-Hopf algebra,
        // but the non-negative lemma does not apply to it.
        let theta = negative_exterior();
        assert!(theta.verify().passed());
        let sdr = compute_sdr(theta.algebra().complex(), Some(theta.u())).unwrap();
        assert!(matches!(
            verify_nonneg_reduction(&theta, &sdr),
            Err(Error::WindowError { context: "verify_nonneg_reduction", found: -1 })
        ));
    }

    /// Exterior algebra on one generator of degree −1, zero differential.
    fn negative_exterior() -> CdgHopf<Rat> {
        let space = Space::atom("Λ(θ)", (-1, 0), &[("θ", -1), ("1", 0)]).unwrap();
        let complex = CochainComplex::with_zero_differential(space.clone());
        let sq = space.tensor(&space);
        let mut m = GradedMap::<Rat>::zero(&sq, &space, 0);
        m.set_label("1⊗1", "1", int(1));
        m.set_label("1⊗θ", "θ", int(1));
        m.set_label("θ⊗1", "θ", int(1));
        let mut u = GradedMap::<Rat>::zero(&Space::ground(), &space, 0);
        u.set_label("1", "1", int(1));
        let mut delta = GradedMap::<Rat>::zero(&space, &sq, 0);
        delta.set_label("1", "1⊗1", int(1));
        delta.set_label("θ", "θ⊗1", int(1));
        delta.set_label("θ", "1⊗θ", int(1));
        let mut counit = GradedMap::<Rat>::zero(&space, &Space::ground(), 0);
        counit.set_label("1", "1", int(1));
        let mut antipode = GradedMap::<Rat>::zero(&space, &space, 0);
        antipode.set_label("1", "1", int(1));
        antipode.set_label("θ", "θ", int(-1));
        let algebra = CdgAlgebra::new(complex.clone(), m, u).unwrap();
        let coalgebra = DgCoalgebra::new(complex, delta, counit).unwrap();
        CdgHopf::new(CdgBialgebra::new(algebra, coalgebra).unwrap(), antipode).unwrap()
    }

    #[test]
    fn reduction_defects_are_reported_not_raised() {
        // On the d = 0 corpus p and q are exact morphisms, so every measured
        // defect is zero — the point of this test is that the measurement
        // comes back as a report either way.
        let b = exterior_two::<Rat>();
        let sdr = compute_sdr(b.algebra().complex(), Some(b.u())).unwrap();
        let report = measure_reduction_defects(&b, &sdr).unwrap();
        assert_eq!(report.checks.len(), 6);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn malformed_units_are_rejected() {
        let a = interval_algebra::<Rat>();
        let b = exterior_one::<Rat>();
        assert!(matches!(
            compute_sdr(a.complex(), Some(b.u())),
            Err(Error::SpaceMismatch { context: "compute_sdr", .. })
        ));
    }
}
