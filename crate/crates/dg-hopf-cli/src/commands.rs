//! The eleven `dghopf` subcommands.
//!
//! Every command follows the same contract: it resolves its inputs from the
//! bundle, performs the construction, and packages verification reports and
//! result maps into a [`CommandOutput`]. The process exit code is derived
//! from the output: 0 when every check passes, 1 when some identity fails
//! (the report carries a witness), and 2 when the request itself is
//! malformed (unknown names, unparseable bundles) — see [`crate::run`].

use crate::bundle::{Bundle, BundleError};
use crate::output::CommandOutput;
use dg_hopf::cohomology::{
    compute_sdr, compute_sdr_with, induced_algebra_on_h, induced_hopf_on_h,
    verify_nonneg_reduction,
};
use dg_hopf::comodule::{
    comodule_from_rep, finite_subcomodule, rep_from_comodule, standard_comodule,
    tensor_comodule, verify_comodule, verify_comodule_morphism, Comodule, ComoduleKind,
    RepresentationData,
};
use dg_hopf::complex::CochainComplex;
use dg_hopf::convolution::{
    exp_conv, is_group_element, lie_bracket, ln_conv, search_homotopy, star,
    verify_group_element, verify_homotopy_pair, verify_tangent_element,
};
use dg_hopf::dg::{solve_antipode, CdgHopf, Structure};
use dg_hopf::map::{chain, check_maps_equal, unitor_left, unitor_left_inv, unitor_right,
    unitor_right_inv};
use dg_hopf::matrix::PivotOrder;
use dg_hopf::report::Report;
use dg_hopf::rigidity::{dual_comodule, extract_alpha, is_tensor_nat, nat_component, NatEndo};
use dg_hopf::space::Basis;
use dg_hopf::{GradedMap, Rat, Vect};

/// A command failed before any identity could be checked.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    /// The bundle or the request names something unknown or ill-shaped
    /// (exit code 2).
    #[error("{0}")]
    Bundle(#[from] BundleError),
    /// The construction itself rejected the input — e.g. `exp` of a
    /// non-tangent element (exit code 1).
    #[error("{0}")]
    Lib(#[from] dg_hopf::Error),
}

type CmdResult = Result<CommandOutput, RunError>;

/// Structure kinds accepted by `verify --kind`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    #[default]
    All,
    Complex,
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Comodule,
    Morphism,
}

impl Kind {
    fn label(self) -> &'static str {
        match self {
            Kind::All => "all",
            Kind::Complex => "complex",
            Kind::Algebra => "algebra",
            Kind::Coalgebra => "coalgebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Hopf => "hopf",
            Kind::Comodule => "comodule",
            Kind::Morphism => "morphism",
        }
    }
}

/// `verify`: re-check the axioms of the declared structures.
pub fn verify(bundle: &Bundle, kind: Kind) -> CmdResult {
    let mut out = CommandOutput::new("verify", bundle.name());
    let want = |k: Kind| kind == Kind::All || kind == k;

    if want(Kind::Complex) {
        for c in &bundle.complexes {
            let mut report = Report::new(format!("cochain complex on {}", c.space()));
            let dd = c.d().compose(c.d())?;
            report.checks.push(check_maps_equal(
                "d² = 0",
                &dd,
                &GradedMap::zero(c.space(), c.space(), dd.degree()),
            ));
            out.reports.push(report);
        }
    }
    if want(Kind::Algebra) {
        for a in &bundle.algebras {
            out.reports.push(a.verify());
        }
    }
    if want(Kind::Coalgebra) {
        for c in &bundle.coalgebras {
            out.reports.push(c.verify());
        }
    }
    if want(Kind::Bialgebra) {
        for b in &bundle.bialgebras {
            out.reports.push(b.verify());
        }
    }
    if want(Kind::Hopf) {
        for h in &bundle.hopfs {
            out.reports.push(h.verify());
        }
    }
    if want(Kind::Comodule) {
        for nc in &bundle.comodules {
            let mut report = verify_comodule(&bundle.hopfs[nc.hopf], &nc.comodule);
            report.subject = format!("comodule `{}` ({})", nc.name, report.subject);
            out.reports.push(report);
        }
    }
    if want(Kind::Morphism) {
        for m in &bundle.morphisms {
            let src = &bundle.comodules[m.source];
            let tgt = &bundle.comodules[m.target];
            let mut report = verify_comodule_morphism(
                &bundle.hopfs[src.hopf],
                &m.map,
                &src.comodule,
                &tgt.comodule,
            )?;
            report.subject = format!(
                "morphism `{}`: `{}` → `{}` ({})",
                m.map_name, src.name, tgt.name, report.subject
            );
            out.reports.push(report);
        }
    }
    if out.reports.is_empty() {
        out.notes.push(format!(
            "no structures of kind `{}` are declared; nothing to verify",
            kind.label()
        ));
    }
    Ok(out)
}

/// `antipode`: solve `ς⋆id = u∘ε = id⋆ς` on the declared bialgebra.
pub fn antipode(bundle: &Bundle) -> CmdResult {
    let mut out = CommandOutput::new("antipode", bundle.name());
    let (bi, declared) = match bundle.hopfs.first() {
        Some(h) => (h.bialgebra().clone(), Some(h.antipode().clone())),
        None => match bundle.bialgebras.first() {
            Some(b) => (b.clone(), None),
            None => {
                return Err(BundleError::Reference(
                    "the bundle declares no bialgebra or hopf structure".into(),
                )
                .into());
            }
        },
    };
    let solved = solve_antipode(&bi)?;
    let hopf = CdgHopf::new(bi.clone(), solved.clone())?;
    let mut report = hopf.verify();
    report.subject = format!("solved antipode on {}", bi.space());
    if let Some(decl) = declared {
        report.checks.push(check_maps_equal("solved ς matches the declared antipode", &solved, &decl));
    }
    let basis = Basis::shared(bi.space());
    for (n, i) in basis.elements() {
        out.notes.push(format!("ς({}) = {}", basis.label(n, i), solved.image_of_basis(n, i)));
    }
    out.reports.push(report);
    out.results.push(("ς".to_string(), solved));
    Ok(out)
}

/// Resolve the convolution setting `Hom(B, A)` shared by `star`, `exp`,
/// `ln`, `bracket`, and `homotopy`: `B` must carry a declared bialgebra or
/// Hopf structure and `A` an algebra-like structure.
fn convolution_setting(
    bundle: &Bundle,
    f: &GradedMap<Rat>,
) -> Result<(dg_hopf::dg::CdgBialgebra<Rat>, dg_hopf::dg::CdgAlgebra<Rat>), BundleError> {
    let bi = bundle.bialgebra_on(f.source())?;
    let a = bundle.algebra_on(f.target())?;
    Ok((bi, a))
}

/// `star`: convolution product of group elements, left to right.
pub fn star_cmd(bundle: &Bundle, elements: &[String]) -> CmdResult {
    let mut out = CommandOutput::new("star", bundle.name());
    let factors: Vec<&GradedMap<Rat>> =
        elements.iter().map(|n| bundle.map_named(n)).collect::<Result<_, _>>()?;
    let (bi, a) = convolution_setting(bundle, factors[0])?;
    for (name, f) in elements.iter().zip(&factors) {
        let mut report = verify_group_element(&bi, &a, f)?;
        if !report.passed() {
            report.subject = format!("input `{name}` must be a group element ({})", report.subject);
            out.reports.push(report);
            return Ok(out);
        }
    }
    let product = star(bi.coalgebra(), &a, &factors)?;
    let mut report = verify_group_element(&bi, &a, &product)?;
    report.subject = format!("convolution product {}", elements.join(" ⋆ "));
    out.reports.push(report);
    out.results.push((elements.join(" ⋆ "), product));
    Ok(out)
}

/// `exp`: exponentiate a tangent element into the convolution group.
pub fn exp_cmd(bundle: &Bundle, element: &str) -> CmdResult {
    let mut out = CommandOutput::new("exp", bundle.name());
    let v = bundle.map_named(element)?;
    let (bi, a) = convolution_setting(bundle, v)?;
    let mut input_report = verify_tangent_element(&bi, &a, v)?;
    if !input_report.passed() {
        input_report.subject =
            format!("input `{element}` must be tangential ({})", input_report.subject);
        out.reports.push(input_report);
        return Ok(out);
    }
    let g = exp_conv(&bi, &a, v)?;
    let mut report = verify_group_element(&bi, &a, &g)?;
    report.subject = format!("exp({element}) is a group element ({})", report.subject);
    let back = ln_conv(&bi, &a, &g)?;
    report.checks.push(check_maps_equal("ln(exp(υ)) = υ", &back, v));
    out.reports.push(report);
    out.results.push((format!("exp({element})"), g));
    Ok(out)
}

/// `ln`: logarithm of a group element into the convolution Lie algebra.
pub fn ln_cmd(bundle: &Bundle, element: &str) -> CmdResult {
    let mut out = CommandOutput::new("ln", bundle.name());
    let g = bundle.map_named(element)?;
    let (bi, a) = convolution_setting(bundle, g)?;
    let mut input_report = verify_group_element(&bi, &a, g)?;
    if !input_report.passed() {
        input_report.subject =
            format!("input `{element}` must be a group element ({})", input_report.subject);
        out.reports.push(input_report);
        return Ok(out);
    }
    let v = ln_conv(&bi, &a, g)?;
    let mut report = verify_tangent_element(&bi, &a, &v)?;
    report.subject = format!("ln({element}) is tangential ({})", report.subject);
    let back = exp_conv(&bi, &a, &v)?;
    report.checks.push(check_maps_equal("exp(ln(g)) = g", &back, g));
    out.reports.push(report);
    out.results.push((format!("ln({element})"), v));
    Ok(out)
}

/// `bracket`: the convolution Lie bracket of two tangent elements.
pub fn bracket_cmd(bundle: &Bundle, left: &str, right: &str) -> CmdResult {
    let mut out = CommandOutput::new("bracket", bundle.name());
    let v1 = bundle.map_named(left)?;
    let v2 = bundle.map_named(right)?;
    let (bi, a) = convolution_setting(bundle, v1)?;
    for (name, v) in [(left, v1), (right, v2)] {
        let mut report = verify_tangent_element(&bi, &a, v)?;
        if !report.passed() {
            report.subject = format!("input `{name}` must be tangential ({})", report.subject);
            out.reports.push(report);
            return Ok(out);
        }
    }
    let w = lie_bracket(&bi, &a, v1, v2)?;
    let mut report = verify_tangent_element(&bi, &a, &w)?;
    report.subject = format!("[{left},{right}] is tangential ({})", report.subject);
    out.reports.push(report);
    out.results.push((format!("[{left},{right}]"), w));
    Ok(out)
}

/// `homotopy`: search for a polynomial homotopy pair between two group
/// elements along the straight-line path and verify it.
pub fn homotopy_cmd(bundle: &Bundle, from: &str, to: &str, flow_degree: usize) -> CmdResult {
    let mut out = CommandOutput::new("homotopy", bundle.name());
    let g = bundle.map_named(from)?;
    let h = bundle.map_named(to)?;
    let (bi, a) = convolution_setting(bundle, g)?;
    let mut report = Report::new(format!("homotopy search `{from}` → `{to}`"));
    match search_homotopy(&bi, &a, g, h, flow_degree)? {
        None => {
            report.push(
                format!(
                    "a homotopy pair exists on the straight-line path (ξ(t) of t-degree ≤ {flow_degree})"
                ),
                false,
            );
            out.notes.push(
                "no generator found; a higher --flow-degree or a different path may still work"
                    .to_string(),
            );
            out.reports.push(report);
        }
        Some(pair) => {
            report.push(
                format!(
                    "a homotopy pair exists on the straight-line path (ξ(t) of t-degree ≤ {flow_degree})"
                ),
                true,
            );
            let checks = verify_homotopy_pair(
                &pair,
                &Structure::Bialgebra(bi.clone()),
                &Structure::Algebra(a.clone()),
            )?;
            report.absorb("pair verification", checks);
            out.notes.push(format!("pair flavor: {}", pair.flavor));
            for i in 0..=pair.f.degree_in_t() {
                out.results.push((format!("f(t): coefficient of t^{i}"), pair.f.coeff(i)));
            }
            for i in 0..=pair.xi.degree_in_t() {
                out.results.push((format!("ξ(t): coefficient of t^{i}"), pair.xi.coeff(i)));
            }
            out.reports.push(report);
        }
    }
    Ok(out)
}

/// `dualize`: the rigid dual of the first declared comodule, with triangle
/// identities and comodule-morphism checks for the pairings.
pub fn dualize_cmd(bundle: &Bundle) -> CmdResult {
    let mut out = CommandOutput::new("dualize", bundle.name());
    let nc = bundle.first_comodule()?;
    let hopf = &bundle.hopfs[nc.hopf];
    let c = &nc.comodule;
    let dual = dual_comodule(hopf, c)?;

    let mut report = Report::new(format!("rigid dual of comodule `{}` on {}", nc.name, c.space()));
    report.absorb("dual comodule axioms", verify_comodule(hopf, &dual.dual));

    let m = c.space();
    let md = dual.dual.space();
    let id_m = GradedMap::identity(m);
    let id_md = GradedMap::identity(md);
    let tri_m = chain(&[
        &unitor_right(m),
        &id_m.tensor_map(&dual.ev),
        &dual.cv.tensor_map(&id_m),
        &unitor_left_inv(m),
    ]);
    report.checks.push(check_maps_equal("(I⊗ev)∘(cv⊗I) = id_M (triangle)", &tri_m, &id_m));
    let tri_md = chain(&[
        &unitor_left(md),
        &dual.ev.tensor_map(&id_md),
        &id_md.tensor_map(&dual.cv),
        &unitor_right_inv(md),
    ]);
    report.checks.push(check_maps_equal("(ev⊗I)∘(I⊗cv) = id_M∨ (triangle)", &tri_md, &id_md));

    let trivial = standard_comodule(ComoduleKind::Trivial, hopf, None)?;
    let dual_tensor_primal = tensor_comodule(hopf, &dual.dual, c)?;
    let primal_tensor_dual = tensor_comodule(hopf, c, &dual.dual)?;
    report.absorb(
        "ev is a comodule morphism",
        verify_comodule_morphism(hopf, &dual.ev, &dual_tensor_primal, &trivial)?,
    );
    report.absorb(
        "cv is a comodule morphism",
        verify_comodule_morphism(hopf, &dual.cv, &trivial, &primal_tensor_dual)?,
    );

    out.notes.push(format!("dual space {md} has total dimension {}", md.total_dim()));
    out.reports.push(report);
    out.results.push(("dual differential".to_string(), dual.dual.d().clone()));
    out.results.push(("dual coaction γ∨".to_string(), dual.dual.coaction().clone()));
    out.results.push(("ev".to_string(), dual.ev.clone()));
    out.results.push(("cv".to_string(), dual.cv.clone()));
    Ok(out)
}

/// The standard comodules used as tensor-naturality probes, in a fixed
/// order.
fn probe_comodules(hopf: &CdgHopf<Rat>) -> Result<Vec<Comodule<Rat>>, dg_hopf::Error> {
    Ok(vec![
        standard_comodule(ComoduleKind::Regular, hopf, None)?,
        standard_comodule(ComoduleKind::Star, hopf, None)?,
        standard_comodule(ComoduleKind::Trivial, hopf, None)?,
        standard_comodule(ComoduleKind::Point, hopf, Some(hopf.algebra().complex()))?,
    ])
}

/// `reconstruct`: the comodule ↔ representation and element ↔ natural
/// endomorphism correspondences, probed on the declared comodules.
pub fn reconstruct_cmd(bundle: &Bundle, element: &str, probe_pairs: usize) -> CmdResult {
    let mut out = CommandOutput::new("reconstruct", bundle.name());
    let alpha = bundle.map_named(element)?;
    let hopf = bundle.hopf_on(alpha.source())?;
    let a = bundle.algebra_on(alpha.target())?;
    let eta = NatEndo::new(hopf, &a, alpha.clone())?;

    let mut report =
        Report::new(format!("reconstruction for `{element}` ∈ Hom({}, {})", hopf.space(), a.space()));

    // η̆ and ğ are mutually inverse.
    let regular = standard_comodule(ComoduleKind::Regular, hopf, None)?;
    let component = nat_component(&eta, &regular)?;
    let back = extract_alpha(hopf, &a, &component)?;
    report.checks.push(check_maps_equal("ğ(η̆(α)) = α", &back, alpha));

    // Finite probe evidence for tensor naturality, cross-checked against
    // the group-element test (the two are equivalent).
    let probes = probe_comodules(hopf)?;
    let pair_indices: &[(usize, usize)] =
        &[(0, 0), (0, 1), (1, 1), (2, 0), (0, 3), (3, 1), (1, 0), (3, 3)];
    let chosen: Vec<(&Comodule<Rat>, &Comodule<Rat>)> = pair_indices
        .iter()
        .take(probe_pairs.max(1))
        .map(|&(i, j)| (&probes[i], &probes[j]))
        .collect();
    let natural = is_tensor_nat(&eta, &chosen)?;
    let group = is_group_element(hopf.bialgebra(), &a, alpha)?;
    report.push(
        format!("tensor naturality on {} probe pairs agrees with the group-element test", chosen.len()),
        natural == group,
    );
    report.push("α is a group element", group);
    report.push("η̆(α) is tensor-natural", natural);

    // Tannakian roundtrip X∘Y = id on every declared comodule over this
    // Hopf algebra, using the universal element of the identity.
    let id_b = GradedMap::identity(hopf.space());
    for nc in &bundle.comodules {
        if bundle.hopfs[nc.hopf].space() != hopf.space() {
            continue;
        }
        let universal = rep_from_comodule(hopf, &nc.comodule, hopf.algebra(), &id_b)?;
        let rebuilt = comodule_from_rep(
            hopf,
            &RepresentationData { complex: nc.comodule.complex().clone(), universal },
        )?;
        report.checks.push(check_maps_equal(
            format!("X∘Y = id on comodule `{}`", nc.name),
            rebuilt.coaction(),
            nc.comodule.coaction(),
        ));
    }

    out.notes.push(format!(
        "probes drawn in order from: regular, star, trivial, point({})",
        hopf.algebra().space()
    ));
    out.reports.push(report);
    out.results.push((format!("η̆({element}) on the regular comodule"), component));
    Ok(out)
}

/// `subcomodule`: the smallest subcomodule containing a basis vector of the
/// first declared comodule.
pub fn subcomodule_cmd(bundle: &Bundle, generator: &str) -> CmdResult {
    let mut out = CommandOutput::new("subcomodule", bundle.name());
    let nc = bundle.first_comodule()?;
    let hopf = &bundle.hopfs[nc.hopf];
    let c = &nc.comodule;
    let v: Vect<Rat> = Vect::basis_vector(c.space(), generator).ok_or_else(|| {
        BundleError::Reference(format!("unknown basis label `{generator}` in {}", c.space()))
    })?;
    let (sub, inclusion) = finite_subcomodule(hopf, c, &v)?;
    let mut report =
        Report::new(format!("subcomodule of `{}` generated by {generator}", nc.name));
    report.absorb("subcomodule axioms", verify_comodule(hopf, &sub));
    report.absorb(
        "inclusion is a comodule morphism",
        verify_comodule_morphism(hopf, &inclusion, &sub, c)?,
    );
    out.notes.push(format!(
        "closure of {generator} has total dimension {} inside {} (dimension {})",
        sub.space().total_dim(),
        c.space(),
        c.space().total_dim()
    ));
    out.reports.push(report);
    out.results.push(("inclusion".to_string(), inclusion));
    Ok(out)
}

/// `cohomology`: strong deformation retract onto cohomology for every
/// declared complex-bearing structure, with induced structure on `H` where
/// one exists.
pub fn cohomology_cmd(bundle: &Bundle) -> CmdResult {
    let mut out = CommandOutput::new("cohomology", bundle.name());

    let mut run_one = |label: String,
                       complex: &CochainComplex<Rat>,
                       unit: Option<&GradedMap<Rat>>,
                       hopf: Option<&CdgHopf<Rat>>,
                       algebra: Option<&dg_hopf::dg::CdgAlgebra<Rat>>|
     -> Result<(), RunError> {
        let sdr = compute_sdr(complex, unit)?;
        let mut report = sdr.verify(complex);
        report.subject = format!("SDR for {label}");

        let h_basis = Basis::shared(sdr.h.space());
        let dims: Vec<String> =
            h_basis.degrees().map(|n| format!("dim H^{n} = {}", h_basis.dim(n))).collect();
        out.notes.push(format!(
            "{label}: H has total dimension {}{}",
            sdr.h.space().total_dim(),
            if dims.is_empty() { String::new() } else { format!(" ({})", dims.join(", ")) }
        ));

        if let Some(h) = hopf {
            let induced = induced_hopf_on_h(h, &sdr)?;
            report.absorb("induced Hopf structure on H", induced.verify());
            let sdr_rev = compute_sdr_with(complex, unit, PivotOrder::Reverse)?;
            let induced_rev = induced_hopf_on_h(h, &sdr_rev)?;
            for (name, lhs, rhs) in [
                ("product", induced.m(), induced_rev.m()),
                ("unit", induced.u(), induced_rev.u()),
                ("coproduct", induced.delta(), induced_rev.delta()),
                ("counit", induced.counit(), induced_rev.counit()),
                ("antipode", induced.antipode(), induced_rev.antipode()),
            ] {
                report.checks.push(check_maps_equal(
                    format!("induced {name} is splitting-independent"),
                    lhs,
                    rhs,
                ));
            }
            let nonneg = h_nonneg(complex);
            if nonneg {
                report.absorb("non-negative reduction", verify_nonneg_reduction(h, &sdr)?);
            }
        } else if let Some(a) = algebra {
            let induced = induced_algebra_on_h(a, &sdr)?;
            report.absorb("induced algebra on H", induced.verify());
            let sdr_rev = compute_sdr_with(complex, unit, PivotOrder::Reverse)?;
            let induced_rev = induced_algebra_on_h(a, &sdr_rev)?;
            report.checks.push(check_maps_equal(
                "induced product is splitting-independent",
                induced.m(),
                induced_rev.m(),
            ));
        }

        out.reports.push(report);
        out.results.push((format!("χ for {label}"), sdr.chi.clone()));
        out.results.push((format!("p for {label}"), sdr.p.clone()));
        out.results.push((format!("q for {label}"), sdr.q.clone()));
        Ok(())
    };

    for h in &bundle.hopfs {
        run_one(
            format!("the hopf algebra on {}", h.space()),
            h.algebra().complex(),
            Some(h.u()),
            Some(h),
            None,
        )?;
    }
    for b in &bundle.bialgebras {
        run_one(
            format!("the bialgebra on {}", b.space()),
            b.algebra().complex(),
            Some(b.u()),
            None,
            Some(b.algebra()),
        )?;
    }
    for a in &bundle.algebras {
        run_one(
            format!("the algebra on {}", a.space()),
            a.complex(),
            Some(a.u()),
            None,
            Some(a),
        )?;
    }
    for c in &bundle.coalgebras {
        run_one(format!("the coalgebra on {}", c.space()), c.complex(), None, None, None)?;
    }
    for c in &bundle.complexes {
        run_one(format!("the complex on {}", c.space()), c, None, None, None)?;
    }

    if out.reports.is_empty() {
        return Err(BundleError::Reference(
            "the bundle declares no complex-bearing structure".into(),
        )
        .into());
    }
    Ok(out)
}

/// Whether every populated degree of the complex is non-negative.
fn h_nonneg(complex: &CochainComplex<Rat>) -> bool {
    Basis::shared(complex.space()).degrees().all(|n| n >= 0)
}
