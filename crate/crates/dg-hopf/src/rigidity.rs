//! Tensor-natural endomorphisms of the forgetful functor and rigidity.
//!
//! A natural endomorphism of the functor (comodules) → (modules over `A`)
//! is stored by its representing convolution element `α : B → A` — the
//! representation is lossless, every component is the finite composite
//! `η̆(α)^M = (I⊗m_A)∘(I⊗α⊗I)∘(γ^M⊗I)`, and `ğ` recovers `α` from the
//! component at the regular comodule. On top of this sit rigid duals
//! `(M∨, ev, cv)` with their graded-sign bookkeeping, and the two
//! antipode-driven inverse constructions: `ς(η)` through the star comodule
//! and `S(η)` through the dual — whose componentwise agreement is the
//! sharpest sign-consistency check in the crate.

use crate::comodule::{
    standard_comodule, tensor_comodule, Comodule, ComoduleKind,
};
use crate::complex::CochainComplex;
use crate::dg::{CdgAlgebra, CdgHopf};
use crate::error::{Error, Result};
use crate::free_module::{module_differential, p_op, q_op, tensor_module_morphism};
use crate::map::{
    braiding, chain, check_maps_equal, hom_differential, unitor_left, unitor_right,
    unitor_right_inv, GradedMap,
};
use crate::poly::check_polys_equal;
use crate::convolution::HomotopyPair;
use crate::report::Report;
use crate::scalar::{sign, Scalar};
use crate::space::{Basis, Space};

/// A natural endomorphism of the forgetful functor, represented by
/// `α : B → A` (its `ğ`-image). Components at arbitrary comodules are
/// produced by [`nat_component`].
#[derive(Clone, Debug)]
pub struct NatEndo<K> {
    alpha: GradedMap<K>,
    a: CdgAlgebra<K>,
    b: CdgHopf<K>,
}

impl<K: Scalar> NatEndo<K> {
    pub fn new(b: &CdgHopf<K>, a: &CdgAlgebra<K>, alpha: GradedMap<K>) -> Result<NatEndo<K>> {
        if alpha.source() != b.space() || alpha.target() != a.space() {
            return Err(Error::SpaceMismatch {
                context: "natural endomorphism",
                expected: format!("{} → {}", b.space(), a.space()),
                found: format!("{} → {}", alpha.source(), alpha.target()),
            });
        }
        if alpha.degree() != 0 {
            return Err(Error::DegreeError {
                context: "natural endomorphism",
                expected: 0,
                found: alpha.degree(),
            });
        }
        Ok(NatEndo { alpha, a: a.clone(), b: b.clone() })
    }

    pub fn alpha(&self) -> &GradedMap<K> {
        &self.alpha
    }

    pub fn algebra(&self) -> &CdgAlgebra<K> {
        &self.a
    }

    pub fn hopf(&self) -> &CdgHopf<K> {
        &self.b
    }
}

/// The component formula for an arbitrary `α` (any degree): `𝔭((I⊗α)∘γ)`.
fn component_of<K: Scalar>(
    alpha: &GradedMap<K>,
    c: &Comodule<K>,
    b: &CdgHopf<K>,
    a: &CdgAlgebra<K>,
) -> Result<GradedMap<K>> {
    let expected = c.space().tensor(b.space());
    if c.coaction().target() != &expected {
        return Err(Error::SpaceMismatch {
            context: "nat_component",
            expected: expected.to_string(),
            found: c.coaction().target().to_string(),
        });
    }
    let id_m = GradedMap::identity(c.space());
    p_op(&chain(&[&id_m.tensor_map(alpha), c.coaction()]), a)
}

/// Component of `η` at a comodule:
/// `η̆(α)^M = (I⊗m_A)∘(I⊗α⊗I)∘(γ^M⊗I) : M⊗A → M⊗A`.
pub fn nat_component<K: Scalar>(eta: &NatEndo<K>, c: &Comodule<K>) -> Result<GradedMap<K>> {
    component_of(&eta.alpha, c, &eta.b, &eta.a)
}

/// Recover `α` from the component at the regular comodule:
/// `ğ(η) = ι_A∘(ε⊗I)∘𝔮(η^B)`. Inverse to [`nat_component`] at `(B, Δ)`.
pub fn extract_alpha<K: Scalar>(
    b: &CdgHopf<K>,
    a: &CdgAlgebra<K>,
    component_at_b: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    let free = b.space().tensor(a.space());
    if component_at_b.source() != &free || component_at_b.target() != &free {
        return Err(Error::SpaceMismatch {
            context: "extract_alpha",
            expected: format!("{free} → {free}"),
            found: format!("{} → {}", component_at_b.source(), component_at_b.target()),
        });
    }
    let id_a = GradedMap::identity(a.space());
    let q = q_op(component_at_b, a)?;
    Ok(chain(&[&unitor_left(a.space()), &b.counit().tensor_map(&id_a), &q]))
}

/// Probe-based tensor-naturality: `η^k = id` and
/// `η^{M⊗M′} = η^M ⊗_{m_A} η^{M′}` on every supplied pair.
///
/// This is finite evidence, not the universal statement; the latter is
/// certified through the equivalence with `is_group_element(α)`.
pub fn is_tensor_nat<K: Scalar>(
    eta: &NatEndo<K>,
    probes: &[(&Comodule<K>, &Comodule<K>)],
) -> Result<bool> {
    let trivial = standard_comodule(ComoduleKind::Trivial, &eta.b, None)?;
    let unit_component = nat_component(eta, &trivial)?;
    if unit_component != GradedMap::identity(&Space::ground().tensor(eta.a.space())) {
        return Ok(false);
    }
    for (c1, c2) in probes {
        let joint = tensor_comodule(&eta.b, c1, c2)?;
        let lhs = nat_component(eta, &joint)?;
        let rhs = tensor_module_morphism(
            &nat_component(eta, c1)?,
            &nat_component(eta, c2)?,
            &eta.a,
        )?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The linear dual of a space as a fresh atom with basis `{eⁱ}`,
/// `|eⁱ| = −|xᵢ|`, listed so that index `i` in degree `−n` matches primal
/// index `i` in degree `n`.
///
/// Labels gain a `∨` suffix; a label already ending in `∨` has it stripped
/// instead, so the dual is involutive on atoms with plain labels (tensor
/// symbols in composite labels are rewritten to `·` and are not recovered).
pub fn dual_space(m: &Space) -> Result<Space> {
    let basis = Basis::shared(m);
    let mut labels: Vec<(String, i64)> = Vec::new();
    for n in basis.degrees().collect::<Vec<_>>() {
        for i in 0..basis.dim(n) {
            labels.push((dual_label(&basis.label(n, i)), -n));
        }
    }
    let refs: Vec<(&str, i64)> = labels.iter().map(|(s, n)| (s.as_str(), *n)).collect();
    let name = m.to_string();
    let name = name.strip_suffix('∨').map_or_else(|| format!("{name}∨"), String::from);
    let (lo, hi) = m.window();
    Space::atom(&name, (-hi, -lo), &refs)
}

fn dual_label(label: &str) -> String {
    match label.strip_suffix('∨') {
        Some(stripped) => stripped.to_string(),
        None => format!("{}∨", label.replace(crate::space::TENSOR_SYMBOL, "·")),
    }
}

/// A rigid dual `(M∨, γ^{M∨})` with its evaluation `ev : M∨⊗M → k` and
/// coevaluation `cv : k → M⊗M∨`.
#[derive(Clone, Debug)]
pub struct DualComodule<K> {
    pub dual: Comodule<K>,
    pub ev: GradedMap<K>,
    pub cv: GradedMap<K>,
}

impl<K: Scalar> DualComodule<K> {
    fn primal_space(&self) -> Space {
        let s = self.ev.source();
        s.factor_range(self.dual.space().factor_count(), s.factor_count())
    }

    /// The declared pairing exhibiting `M` as the dual of `M∨`:
    /// `ev_{M∨} = ev_M∘τ : M⊗M∨ → k`.
    pub fn ev_dual(&self) -> GradedMap<K> {
        chain(&[&self.ev, &braiding(&self.primal_space(), self.dual.space())])
    }

    /// The companion coevaluation `cv_{M∨} = τ∘cv_M : k → M∨⊗M`.
    pub fn cv_dual(&self) -> GradedMap<K> {
        chain(&[&braiding(&self.primal_space(), self.dual.space()), &self.cv])
    }
}

/// Dual comodule of a finite-dimensional comodule, with the antipode-twisted
/// coaction `γ^{M∨}(eⁱ) = Σₖ (−1)^{|xₖ|+|xᵢ||xₖ|} eᵏ⊗ς(γⁱₖ)` for
/// `γ(xₖ) = Σᵢ xᵢ⊗γⁱₖ`, the dual differential `d(h) = −(−1)^{|h|} h∘d_M`,
/// and the standard `ev`/`cv` of the dual basis.
pub fn dual_comodule<K: Scalar>(b: &CdgHopf<K>, c: &Comodule<K>) -> Result<DualComodule<K>> {
    let hopf_report = b.verify();
    if !hopf_report.passed() {
        let first = hopf_report.failures().next().map_or_else(String::new, |c| c.name.clone());
        return Err(Error::NotHopf(format!(
            "dual comodules need a verified Hopf algebra; first failure: {first}"
        )));
    }
    let m_space = c.space();
    let expected = m_space.tensor(b.space());
    if c.coaction().target() != &expected {
        return Err(Error::SpaceMismatch {
            context: "dual_comodule",
            expected: expected.to_string(),
            found: c.coaction().target().to_string(),
        });
    }
    let dual = dual_space(m_space)?;
    let m_basis = Basis::shared(m_space);
    let b_basis = Basis::shared(b.space());
    let dual_basis = Basis::shared(&dual);
    let degrees: Vec<i64> = m_basis.degrees().collect();

    // d_{M∨}(eⁱ) = −(−1)^{|eⁱ|} eⁱ∘d_M, entrywise the signed transpose.
    let mut d_dual = GradedMap::zero(&dual, &dual, 1);
    for &n in &degrees {
        for k in 0..m_basis.dim(n) {
            for ((n1, i), coeff) in c.d().image_of_basis(n, k).terms() {
                debug_assert_eq!(n1, n + 1);
                d_dual.set_entry(-n1, k, i, sign::<K>(n) * coeff);
            }
        }
    }

    let joint_primal = c.coaction().target_basis().clone();
    let joint_dual = Basis::shared(&dual.tensor(b.space()));
    let mut gamma_dual = GradedMap::zero(&dual, &dual.tensor(b.space()), 0);
    for &nk in &degrees {
        for k in 0..m_basis.dim(nk) {
            for ((nt, idx), coeff) in c.coaction().image_of_basis(nk, k).terms() {
                let ((ni, i), (nb, jb)) = joint_primal.split(&m_basis, &b_basis, nt, idx);
                let twisted = b.antipode().image_of_basis(nb, jb);
                for ((nb2, jb2), s_coeff) in twisted.terms() {
                    let (row_deg, row) =
                        joint_dual.join(&dual_basis, (-nk, k), &b_basis, (nb2, jb2));
                    debug_assert_eq!(row_deg, -ni);
                    let value = sign::<K>(nk + ni * nk) * coeff.clone() * s_coeff;
                    gamma_dual.set_entry(-ni, row, i, gamma_dual_entry(&gamma_dual, -ni, row, i) + value);
                }
            }
        }
    }

    let joint_ev = Basis::shared(&dual.tensor(m_space));
    let mut ev = GradedMap::zero(&dual.tensor(m_space), &Space::ground(), 0);
    let joint_cv = Basis::shared(&m_space.tensor(&dual));
    let mut cv = GradedMap::zero(&Space::ground(), &m_space.tensor(&dual), 0);
    for &n in &degrees {
        for j in 0..m_basis.dim(n) {
            let (deg_ev, col) = joint_ev.join(&dual_basis, (-n, j), &m_basis, (n, j));
            debug_assert_eq!(deg_ev, 0);
            ev.set_entry(0, 0, col, K::one());
            let (deg_cv, row) = joint_cv.join(&m_basis, (n, j), &dual_basis, (-n, j));
            debug_assert_eq!(deg_cv, 0);
            cv.set_entry(0, row, 0, K::one());
        }
    }

    let complex = CochainComplex::new(dual.clone(), d_dual)?;
    let dual_comodule = Comodule::new(b, complex, gamma_dual)?;
    Ok(DualComodule { dual: dual_comodule, ev, cv })
}

/// Read an entry back out of a map under construction (coaction columns can
/// receive several contributions when `ς` mixes basis vectors).
fn gamma_dual_entry<K: Scalar>(map: &GradedMap<K>, n: i64, row: usize, col: usize) -> K {
    map.image_of_basis(n, col).coefficient(n + map.degree(), row)
}

/// Dual of a morphism `ψ : M → N` against chosen pairings:
/// `ψ∨ = ι∘(ev_N⊗I)∘(I⊗ψ⊗I)∘(I⊗cv_M)∘ȷ⁻¹ : N∨ → M∨`.
///
/// Passing the computed pairings of [`dual_comodule`] gives the first dual;
/// passing the declared pairings `ev_dual`/`cv_dual` of the dual objects
/// gives the second, and makes `ψ∨∨ = ψ` hold on the nose.
pub fn dual_morphism<K: Scalar>(
    psi: &GradedMap<K>,
    ev_target: &GradedMap<K>,
    cv_source: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    let n_space = psi.target();
    let m_space = psi.source();
    let n_dual = ev_target
        .source()
        .factor_range(0, ev_target.source().factor_count() - n_space.factor_count());
    let m_dual = cv_source
        .target()
        .factor_range(m_space.factor_count(), cv_source.target().factor_count());
    let id_nd = GradedMap::identity(&n_dual);
    let id_md = GradedMap::identity(&m_dual);
    Ok(chain(&[
        &unitor_left(&m_dual),
        &ev_target.tensor_map(&id_md),
        &GradedMap::tensor_all(&[&id_nd, psi, &id_md]),
        &id_nd.tensor_map(cv_source),
        &unitor_right_inv(&n_dual),
    ]))
}

/// The inverse-via-duals component of Lemma "rigidity":
/// `S(ξ)^M = τ∘ι∘(ev_{M∨}⊗I)∘(I⊗ξ^{M∨}⊗I)∘(I⊗τ)∘(I⊗cv_{M∨}⊗I)∘(ȷ⁻¹⊗I)`,
/// i.e. the `⊗_{m_A}`-dual of the component at `M∨`, transported back to
/// `M⊗A` through the declared pairings.
pub fn s_component<K: Scalar>(eta: &NatEndo<K>, c: &Comodule<K>) -> Result<GradedMap<K>> {
    let dual_data = dual_comodule(&eta.b, c)?;
    let xi_dual = nat_component(eta, &dual_data.dual)?;
    let m = c.space();
    let a_space = eta.a.space();
    let id_m = GradedMap::identity(m);
    let id_a = GradedMap::identity(a_space);
    let ev_d = dual_data.ev_dual(); // M⊗M∨ → k
    let cv_d = dual_data.cv_dual(); // k → M∨⊗M
    let id_m_dual = GradedMap::identity(&m.tensor(dual_data.dual.space()));
    Ok(chain(&[
        &braiding(a_space, m),
        &unitor_left(&a_space.tensor(m)),
        &ev_d.tensor_map(&GradedMap::identity(&a_space.tensor(m))),
        &GradedMap::tensor_all(&[&id_m, &xi_dual, &id_m]),
        &id_m_dual.tensor_map(&braiding(m, a_space)),
        &GradedMap::tensor_all(&[&id_m, &cv_d, &id_a]),
        &unitor_right_inv(m).tensor_map(&id_a),
    ]))
}

/// The inverse-via-star component of Prop. "group valued":
/// `ς(η)^M = (ȷ⊗I)∘(I⊗ε⊗I)∘(I⊗η^{B*})∘(γ^M⊗I)`.
///
/// Through the `α`-representation this is `η̆(α∘ς)^M`; for group `α` it is
/// the two-sided inverse of `η^M`, and componentwise it agrees with
/// [`s_component`].
pub fn sigma_component<K: Scalar>(eta: &NatEndo<K>, c: &Comodule<K>) -> Result<GradedMap<K>> {
    let star = standard_comodule(ComoduleKind::Star, &eta.b, None)?;
    let eta_star = nat_component(eta, &star)?; // B⊗A → B⊗A
    let m = c.space();
    let id_m = GradedMap::identity(m);
    let id_a = GradedMap::identity(eta.a.space());
    Ok(chain(&[
        &unitor_right(m).tensor_map(&id_a),
        &GradedMap::tensor_all(&[&id_m, eta.b.counit(), &id_a]),
        &id_m.tensor_map(&eta_star),
        &c.coaction().tensor_map(&id_a),
    ]))
}

/// Transport along a cdg-algebra morphism `f : A → A′`: the representing
/// element becomes `f∘α`. Componentwise this matches
/// [`crate::free_module::transport_endo`].
pub fn nat_transport<K: Scalar>(
    f: &GradedMap<K>,
    a_prime: &CdgAlgebra<K>,
    eta: &NatEndo<K>,
) -> Result<NatEndo<K>> {
    if f.source() != eta.a.space() || f.target() != a_prime.space() || f.degree() != 0 {
        return Err(Error::SpaceMismatch {
            context: "nat_transport",
            expected: format!("{} → {} in degree 0", eta.a.space(), a_prime.space()),
            found: format!("{} → {} in degree {}", f.source(), f.target(), f.degree()),
        });
    }
    let mut checks = Report::new("cdg-algebra morphism");
    checks.checks.push(check_maps_equal(
        "f∘d = d′∘f",
        &chain(&[f, eta.a.d()]),
        &chain(&[a_prime.d(), f]),
    ));
    checks.checks.push(check_maps_equal("f∘u = u′", &chain(&[f, eta.a.u()]), a_prime.u()));
    checks.checks.push(check_maps_equal(
        "f∘m = m′∘(f⊗f)",
        &chain(&[f, eta.a.m()]),
        &chain(&[a_prime.m(), &f.tensor_map(f)]),
    ));
    if !checks.passed() {
        let first = checks.failures().next().map_or_else(String::new, |c| c.name.clone());
        return Err(Error::NotAlgebraMorphism(format!(
            "nat_transport needs a cdg-algebra morphism; first failure: {first}"
        )));
    }
    NatEndo::new(&eta.b, a_prime, chain(&[f, &eta.alpha]))
}

/// Verify that a convolution-level homotopy pair induces a homotopy pair of
/// natural endomorphisms: componentwise flow `d/dt η(t)^M = D(λ(t)^M)` on
/// every probe comodule, triviality `λ(t)^k = 0`, and the `⊗_{m_A}`
/// co-Leibniz rule `λ^{M⊗N} = λ^M⊗f^N + f^M⊗λ^N` on every probe pair — all
/// checked coefficientwise in `t`.
pub fn verify_nat_homotopy_pair<K: Scalar>(
    b: &CdgHopf<K>,
    a: &CdgAlgebra<K>,
    pair: &HomotopyPair<K>,
    probes: &[(&Comodule<K>, &Comodule<K>)],
) -> Result<Report> {
    let mut report = Report::new(format!(
        "natural homotopy pair on Hom({}, {})",
        b.space(),
        a.space()
    ));

    let component_poly = |poly: &crate::poly::MapPoly<K>, c: &Comodule<K>| {
        poly.apply(|alpha| component_of(alpha, c, b, a))
    };

    // Distinct probe comodules, compared by coaction.
    let mut singles: Vec<&Comodule<K>> = Vec::new();
    for (c1, c2) in probes {
        for c in [*c1, *c2] {
            if !singles.iter().any(|s| s.coaction() == c.coaction()) {
                singles.push(c);
            }
        }
    }

    for c in &singles {
        let f_comp = component_poly(&pair.f, c)?;
        let xi_comp = component_poly(&pair.xi, c)?;
        let d_free = module_differential(c.complex(), a);
        let d_of_xi = xi_comp.apply(|x| hom_differential(x, &d_free, &d_free))?;
        report.checks.push(check_polys_equal(
            format!("d/dt η(t) = D(λ(t)) at {}", c.space()),
            &f_comp.derivative(),
            &d_of_xi,
        ));
    }

    let trivial = standard_comodule(ComoduleKind::Trivial, b, None)?;
    let xi_at_k = component_poly(&pair.xi, &trivial)?;
    let zero_shape = crate::poly::MapPoly::zero(xi_at_k.shape().clone());
    report.checks.push(check_polys_equal("λ(t)^k = 0", &xi_at_k, &zero_shape));

    for (c1, c2) in probes {
        let joint = tensor_comodule(b, c1, c2)?;
        let lhs = component_poly(&pair.xi, &joint)?;
        let f1 = component_poly(&pair.f, c1)?;
        let f2 = component_poly(&pair.f, c2)?;
        let xi1 = component_poly(&pair.xi, c1)?;
        let xi2 = component_poly(&pair.xi, c2)?;
        let term1 = xi1.bilinear(&f2, |x, y| tensor_module_morphism(x, y, a))?;
        let term2 = f1.bilinear(&xi2, |x, y| tensor_module_morphism(x, y, a))?;
        report.checks.push(check_polys_equal(
            format!("λ^{{M⊗N}} = λ^M⊗f^N + f^M⊗λ^N at {} ⊗ {}", c1.space(), c2.space()),
            &lhs,
            &term1.add(&term2),
        ));
    }
    Ok(report)
}
