//! The convolution algebra `𝓔^B(A) = Hom(B,A)` attached to a dg-coalgebra
//! `B` and a cdg-algebra `A`, with product `α⋆β = m_A∘(α⊗β)∘Δ_B` and unit
//! `e = u_A∘ε_B`.
//!
//! On top of it: the group `𝓖^B(A)` of convolution-invertible algebra maps,
//! its tangent Lie algebra `THom(B,A)`, the exponential and logarithm
//! (truncated exactly at the conilpotency index of `B`), polynomial homotopy
//! pairs `(f(t), ξ(t))` with their flavor-specific infinitesimal conditions,
//! a bounded-degree homotopy search along the straight-line path, and the
//! transport lemmas that push homotopy pairs through products, antipodes,
//! compositions, brackets, exp and ln.

use crate::complex::CochainComplex;
use crate::dg::{
    CdgAlgebra, CdgBialgebra, CdgHopf, MorphismKind, Structure, conilpotency_filtration,
    iterated_coproduct, iterated_product, verify_morphism,
};
use crate::dg::{CoproductVariant, DgCoalgebra};
use crate::error::{Error, Result};
use crate::map::{GradedMap, MapShape, check_maps_equal, hom_differential, solve_linear_maps};
use crate::poly::{MapPoly, check_polys_equal};
use crate::report::Report;
use crate::scalar::{Scalar, frac, int};
use crate::space::Space;

fn expect_hom<K: Scalar>(
    context: &'static str,
    f: &GradedMap<K>,
    source: &Space,
    target: &Space,
) -> Result<()> {
    if f.source() != source || f.target() != target {
        return Err(Error::SpaceMismatch {
            context,
            expected: format!("{source}→{target}"),
            found: format!("{}→{}", f.source(), f.target()),
        });
    }
    Ok(())
}

/// The convolution unit `e = u_A∘ε_B`.
pub fn convolution_unit<K: Scalar>(b: &DgCoalgebra<K>, a: &CdgAlgebra<K>) -> GradedMap<K> {
    a.u().compose(b.counit()).expect("ground field shapes agree")
}

/// The n-fold convolution product `α₁⋆…⋆αₙ = m_A⁽ⁿ⁾∘(α₁⊗…⊗αₙ)∘Δ_B⁽ⁿ⁾`.
///
/// The empty product is `e`; intermediate tensor powers respect the global
/// dimension cap, so oversized requests fail with `WindowOverflow` instead of
/// exhausting memory.
pub fn star<K: Scalar>(
    b: &DgCoalgebra<K>,
    a: &CdgAlgebra<K>,
    factors: &[&GradedMap<K>],
) -> Result<GradedMap<K>> {
    for f in factors {
        expect_hom("convolution product", f, b.space(), a.space())?;
    }
    match factors.len() {
        0 => Ok(convolution_unit(b, a)),
        1 => Ok(factors[0].clone()),
        n => {
            let spread = GradedMap::tensor_all(factors);
            let m_n = iterated_product(a, n)?;
            let delta_n = iterated_coproduct(b, n, CoproductVariant::Plain, None)?;
            m_n.compose(&spread)?.compose(&delta_n)
        }
    }
}

fn star2<K: Scalar>(
    b: &DgCoalgebra<K>,
    a: &CdgAlgebra<K>,
    x: &GradedMap<K>,
    y: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    star(b, a, &[x, y])
}

/// The conditions for `g ∈ 𝓖^B(A)`: a degree-0 cochain map that sends unit
/// to unit and is multiplicative.
pub fn verify_group_element<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    g: &GradedMap<K>,
) -> Result<Report> {
    expect_hom("group element", g, b.space(), a.space())?;
    let mut report = Report::new(format!("group element in Hom({}, {})", b.space(), a.space()));
    report.push("degree 0", g.degree() == 0);
    let dg = hom_differential(g, b.d(), a.d())?;
    report.checks.push(check_maps_equal("d_{B,A}(g) = 0", &dg, &GradedMap::zero_of(&dg.shape())));
    report.checks.push(check_maps_equal("g∘u_B = u_A", &g.compose(b.u())?, a.u()));
    let lhs = g.compose(b.m())?;
    let rhs = a.m().compose(&g.tensor_map(g))?;
    report.checks.push(check_maps_equal("g∘m_B = m_A∘(g⊗g)", &lhs, &rhs));
    Ok(report)
}

pub fn is_group_element<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    g: &GradedMap<K>,
) -> Result<bool> {
    Ok(verify_group_element(b, a, g)?.passed())
}

/// The convolution inverse `g⁻¹ = g∘ς_B` of a group element.
pub fn group_inverse<K: Scalar>(
    b: &CdgHopf<K>,
    a: &CdgAlgebra<K>,
    g: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    if !is_group_element(b.bialgebra(), a, g)? {
        return Err(Error::NotGroupElement("convolution inverse needs a group element".into()));
    }
    g.compose(b.antipode())
}

/// The conditions for `υ ∈ THom(B,A)`: a degree-0 cocycle vanishing on the
/// unit and multiplicative in the infinitesimal sense about `e`.
pub fn verify_tangent_element<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    v: &GradedMap<K>,
) -> Result<Report> {
    expect_hom("tangent element", v, b.space(), a.space())?;
    let mut report = Report::new(format!("tangent element in Hom({}, {})", b.space(), a.space()));
    report.push("degree 0", v.degree() == 0);
    let dv = hom_differential(v, b.d(), a.d())?;
    report.checks.push(check_maps_equal("d_{B,A}(υ) = 0", &dv, &GradedMap::zero_of(&dv.shape())));
    let vu = v.compose(b.u())?;
    report.checks.push(check_maps_equal("υ∘u_B = 0", &vu, &GradedMap::zero_of(&vu.shape())));
    let e = convolution_unit(b.coalgebra(), a);
    let lhs = v.compose(b.m())?;
    let rhs = a.m().compose(&e.tensor_map(v).add(&v.tensor_map(&e)))?;
    report.checks.push(check_maps_equal("υ∘m_B = m_A∘(e⊗υ + υ⊗e)", &lhs, &rhs));
    Ok(report)
}

pub fn is_tangential<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    v: &GradedMap<K>,
) -> Result<bool> {
    Ok(verify_tangent_element(b, a, v)?.passed())
}

/// `[υ₁,υ₂] = υ₁⋆υ₂ − υ₂⋆υ₁` on tangent elements.
pub fn lie_bracket<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    v1: &GradedMap<K>,
    v2: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    if !is_tangential(b, a, v1)? || !is_tangential(b, a, v2)? {
        return Err(Error::NotTangential("Lie bracket needs tangent elements".into()));
    }
    Ok(star2(b.coalgebra(), a, v1, v2)?.sub(&star2(b.coalgebra(), a, v2, v1)?))
}

/// Smallest `n` with `B̄ₙ = B̄ = Ker ε`; all convolution powers `β^{⋆m}` of
/// maps with `β∘u_B = 0` vanish for `m > n`, which makes exp and ln finite
/// sums.
pub fn conilpotency_index<K: Scalar>(b: &CdgBialgebra<K>) -> Result<usize> {
    conilpotency_filtration(b.coalgebra(), b.u())?.index.ok_or(Error::NotConilpotent)
}

/// `exp(υ) = e + Σ_{n=1}^{N} (1/n!)·υ^{⋆n}`, truncated at the conilpotency
/// index `N` of `B`.
pub fn exp_conv<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    v: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    if !is_tangential(b, a, v)? {
        return Err(Error::NotTangential("exp needs a tangent element".into()));
    }
    let n_max = conilpotency_index(b)?;
    let mut acc = convolution_unit(b.coalgebra(), a);
    let mut factorial: K = K::one();
    let mut power = v.clone();
    for n in 1..=n_max {
        factorial = factorial * int::<K>(n as i64);
        acc = acc.add(&power.scale(&(K::one() / factorial.clone())));
        if n < n_max {
            power = star2(b.coalgebra(), a, &power, v)?;
        }
    }
    Ok(acc)
}

/// `ln(g) = −Σ_{n=1}^{N} ((−1)ⁿ/n)·ḡ^{⋆n}` with `ḡ = g − e`, truncated at
/// the conilpotency index `N` of `B`.
pub fn ln_conv<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    g: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    if !is_group_element(b, a, g)? {
        return Err(Error::NotGroupElement("ln needs a group element".into()));
    }
    let n_max = conilpotency_index(b)?;
    let gbar = g.sub(&convolution_unit(b.coalgebra(), a));
    let mut acc = GradedMap::zero(b.space(), a.space(), 0);
    let mut power = gbar.clone();
    for n in 1..=n_max {
        let c: K = frac(if n % 2 == 1 { 1 } else { -1 }, n as i64);
        acc = acc.add(&power.scale(&c));
        if n < n_max {
            power = star2(b.coalgebra(), a, &power, &gbar)?;
        }
    }
    Ok(acc)
}

/// Which infinitesimal conditions a homotopy pair satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairFlavor {
    /// `f(0)` is a cdg-algebra morphism and `ξ(t)` an infinitesimal algebra
    /// map along `f(t)`.
    Algebra,
    /// Algebra conditions plus the coalgebra-side conditions; `f(0)` is a
    /// bialgebra morphism.
    Hopf,
    /// Flow through `THom(B,A)`: `υ(0)` tangential, `σ(t)` infinitesimally
    /// multiplicative about `e`.
    Tangential,
}

impl std::fmt::Display for PairFlavor {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let label = match self {
            PairFlavor::Algebra => "algebra",
            PairFlavor::Hopf => "hopf",
            PairFlavor::Tangential => "tangential",
        };
        write!(out, "{label}")
    }
}

/// A polynomial homotopy flow `(f(t), ξ(t))` with `d/dt f(t) = d_{B,A} ξ(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomotopyPair<K: Scalar> {
    /// Degree-0 path `f(t)`.
    pub f: MapPoly<K>,
    /// Degree-(−1) generator `ξ(t)`.
    pub xi: MapPoly<K>,
    pub flavor: PairFlavor,
}

impl<K: Scalar> HomotopyPair<K> {
    /// The flow that stays at a single morphism: `(f, 0)`.
    pub fn constant(f: GradedMap<K>, flavor: PairFlavor) -> HomotopyPair<K> {
        let mut shape = f.shape();
        shape.degree -= 1;
        HomotopyPair { f: MapPoly::constant(f), xi: MapPoly::zero(shape), flavor }
    }
}

/// Check the flow equation and the flavor-specific conditions of a homotopy
/// pair, coefficient by coefficient in `t`.
pub fn verify_homotopy_pair<K: Scalar>(
    pair: &HomotopyPair<K>,
    source: &Structure<K>,
    target: &Structure<K>,
) -> Result<Report> {
    let b_alg = source
        .as_algebra()
        .ok_or(Error::MissingStructure { context: "homotopy pair", needed: "source algebra" })?;
    let a_alg = target
        .as_algebra()
        .ok_or(Error::MissingStructure { context: "homotopy pair", needed: "target algebra" })?;
    let b = source.space();
    let a = target.space();
    expect_hom("homotopy pair f(t)", &pair.f.coeff(0), b, a)?;
    expect_hom("homotopy pair ξ(t)", &pair.xi.coeff(0), b, a)?;
    for (name, poly, want) in [("f(t)", &pair.f, 0), ("ξ(t)", &pair.xi, -1)] {
        if poly.shape().degree != want {
            return Err(Error::DegreeError {
                context: if name == "f(t)" { "homotopy pair f(t)" } else { "homotopy pair ξ(t)" },
                expected: want,
                found: poly.shape().degree,
            });
        }
    }

    let mut report = Report::new(format!("homotopy pair ({} flavor) on Hom({b}, {a})", pair.flavor));
    let flow_lhs = pair.f.derivative();
    let flow_rhs = pair.xi.apply(|c| hom_differential(c, source.d(), target.d()))?;
    report.checks.push(check_polys_equal("flow: d/dt f(t) = d_{B,A} ξ(t)", &flow_lhs, &flow_rhs));

    // `f(t)⊗ξ(t) + ξ(t)⊗f(t)`, shared by the algebra- and coalgebra-side
    // infinitesimal conditions.
    let mixed = pair
        .f
        .bilinear(&pair.xi, |x, y| Ok(x.tensor_map(y)))?
        .add(&pair.xi.bilinear(&pair.f, |x, y| Ok(x.tensor_map(y)))?);

    match pair.flavor {
        PairFlavor::Algebra | PairFlavor::Hopf => {
            let kind = match pair.flavor {
                PairFlavor::Hopf => MorphismKind::Bialgebra,
                _ => MorphismKind::Algebra,
            };
            report.absorb("f(0)", verify_morphism(kind, &pair.f.at_zero(), source, target)?);

            let xu = pair.xi.apply(|c| c.compose(b_alg.u()))?;
            report.checks.push(check_polys_equal(
                "ξ(t)∘u_B = 0",
                &xu,
                &MapPoly::zero(xu.shape().clone()),
            ));
            let lhs = pair.xi.apply(|c| c.compose(b_alg.m()))?;
            let rhs = mixed.apply(|c| a_alg.m().compose(c))?;
            report.checks.push(check_polys_equal(
                "ξ(t)∘m_B = m_A∘(f(t)⊗ξ(t) + ξ(t)⊗f(t))",
                &lhs,
                &rhs,
            ));

            if pair.flavor == PairFlavor::Hopf {
                let b_co = source.as_coalgebra().ok_or(Error::MissingStructure {
                    context: "homotopy pair",
                    needed: "source coalgebra",
                })?;
                let a_co = target.as_coalgebra().ok_or(Error::MissingStructure {
                    context: "homotopy pair",
                    needed: "target coalgebra",
                })?;
                let ex = pair.xi.apply(|c| a_co.counit().compose(c))?;
                report.checks.push(check_polys_equal(
                    "ε_{B′}∘ξ(t) = 0",
                    &ex,
                    &MapPoly::zero(ex.shape().clone()),
                ));
                let lhs = pair.xi.apply(|c| a_co.delta().compose(c))?;
                let rhs = mixed.apply(|c| c.compose(b_co.delta()))?;
                report.checks.push(check_polys_equal(
                    "Δ_{B′}∘ξ(t) = (f(t)⊗ξ(t) + ξ(t)⊗f(t))∘Δ_B",
                    &lhs,
                    &rhs,
                ));
            }
        }
        PairFlavor::Tangential => {
            let b_bi = source.as_bialgebra().ok_or(Error::MissingStructure {
                context: "homotopy pair",
                needed: "source bialgebra",
            })?;
            report.absorb("υ(0)", verify_tangent_element(b_bi, a_alg, &pair.f.at_zero())?);

            let su = pair.xi.apply(|c| c.compose(b_bi.u()))?;
            report.checks.push(check_polys_equal(
                "σ(t)∘u_B = 0",
                &su,
                &MapPoly::zero(su.shape().clone()),
            ));
            let e = convolution_unit(b_bi.coalgebra(), a_alg);
            let lhs = pair.xi.apply(|c| c.compose(b_bi.m()))?;
            let rhs = pair
                .xi
                .apply(|c| a_alg.m().compose(&e.tensor_map(c).add(&c.tensor_map(&e))))?;
            report.checks.push(check_polys_equal(
                "σ(t)∘m_B = m_A∘(e⊗σ(t) + σ(t)⊗e)",
                &lhs,
                &rhs,
            ));
        }
    }
    Ok(report)
}

/// Search for a homotopy between two group elements along the straight-line
/// path `f(t) = (1−t)·g + t·g̃`, with `ξ(t)` of degree at most `flow_degree`.
///
/// This is sound but incomplete: `Ok(Some(pair))` always verifies, while
/// `Ok(None)` only means no generator exists on this particular path within
/// the degree bound — not that `g` and `g̃` have different homotopy types.
pub fn search_homotopy<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    g: &GradedMap<K>,
    g_tilde: &GradedMap<K>,
    flow_degree: usize,
) -> Result<Option<HomotopyPair<K>>> {
    if !is_group_element(b, a, g)? || !is_group_element(b, a, g_tilde)? {
        return Err(Error::NotGroupElement("homotopy search endpoints must be group elements".into()));
    }
    let f = MapPoly::from_coeffs(vec![g.clone(), g_tilde.sub(g)])?;
    let xi_shape =
        MapShape { source: b.space().clone(), target: a.space().clone(), degree: -1 };
    let unknowns = vec![xi_shape; flow_degree + 1];

    let mut rhs = vec![g_tilde.sub(g)];
    rhs.extend((0..flow_degree).map(|_| GradedMap::zero(b.space(), a.space(), 0)));
    rhs.extend((0..=flow_degree).map(|_| GradedMap::zero(&Space::ground(), a.space(), -1)));
    let b_sq = b.space().tensor(b.space());
    rhs.extend((0..=flow_degree + 1).map(|_| GradedMap::zero(&b_sq, a.space(), -1)));

    let solution = solve_linear_maps(&unknowns, &rhs, |xs| {
        let xi = MapPoly::from_coeffs(xs.to_vec()).expect("uniform probe shapes");
        let dxi = xi.apply(|c| hom_differential(c, b.d(), a.d())).expect("validated shapes");
        let xu = xi.apply(|c| c.compose(b.u())).expect("validated shapes");
        let mixed = f
            .bilinear(&xi, |x, y| Ok(x.tensor_map(y)))
            .expect("validated shapes")
            .add(&xi.bilinear(&f, |x, y| Ok(x.tensor_map(y))).expect("validated shapes"));
        let residual = xi
            .apply(|c| c.compose(b.m()))
            .expect("validated shapes")
            .sub(&mixed.apply(|c| a.m().compose(c)).expect("validated shapes"));
        let mut out = Vec::with_capacity(3 * flow_degree + 4);
        out.extend((0..=flow_degree).map(|i| dxi.coeff(i)));
        out.extend((0..=flow_degree).map(|i| xu.coeff(i)));
        out.extend((0..=flow_degree + 1).map(|i| residual.coeff(i)));
        out
    });
    match solution {
        None => Ok(None),
        Some(xs) => {
            let xi = MapPoly::from_coeffs(xs)?;
            Ok(Some(HomotopyPair { f, xi, flavor: PairFlavor::Algebra }))
        }
    }
}

fn reject_tangential<K: Scalar>(context: &str, pair: &HomotopyPair<K>) -> Result<()> {
    if pair.flavor == PairFlavor::Tangential {
        return Err(Error::FlavorMismatch(format!(
            "{context} expects a group-side pair, got a tangential one"
        )));
    }
    Ok(())
}

fn expect_tangential<K: Scalar>(context: &str, pair: &HomotopyPair<K>) -> Result<()> {
    if pair.flavor != PairFlavor::Tangential {
        return Err(Error::FlavorMismatch(format!(
            "{context} expects a tangential pair, got a {} one",
            pair.flavor
        )));
    }
    Ok(())
}

/// Transport along the convolution product:
/// `(g₁⋆g₂, λ₁⋆g₂ + g₁⋆λ₂)`.
pub fn transport_star<K: Scalar>(
    b: &DgCoalgebra<K>,
    a: &CdgAlgebra<K>,
    p1: &HomotopyPair<K>,
    p2: &HomotopyPair<K>,
) -> Result<HomotopyPair<K>> {
    reject_tangential("star transport", p1)?;
    reject_tangential("star transport", p2)?;
    let op = |x: &GradedMap<K>, y: &GradedMap<K>| star2(b, a, x, y);
    let f = p1.f.bilinear(&p2.f, op)?;
    let xi = p1.xi.bilinear(&p2.f, op)?.add(&p1.f.bilinear(&p2.xi, op)?);
    Ok(HomotopyPair { f, xi, flavor: PairFlavor::Algebra })
}

/// Transport along the inverse: `(g∘ς_B, λ∘ς_B)`.
pub fn transport_antipode<K: Scalar>(
    b: &CdgHopf<K>,
    p: &HomotopyPair<K>,
) -> Result<HomotopyPair<K>> {
    reject_tangential("antipode transport", p)?;
    let f = p.f.apply(|c| c.compose(b.antipode()))?;
    let xi = p.xi.apply(|c| c.compose(b.antipode()))?;
    Ok(HomotopyPair { f, xi, flavor: PairFlavor::Algebra })
}

/// Transport along composition: from `(p(t), π(t))` on `Hom(M,N)` and
/// `(q(t), κ(t))` on `Hom(L,M)` build `(p∘q, p∘κ + π∘q)` on `Hom(L,N)`.
///
/// Covers all four composition lemmas: algebra∘algebra, algebra∘hopf
/// (postcomposing a Hopf flow with an algebra flow), algebra∘tangential and
/// tangential∘hopf (which stay tangential).
pub fn transport_compose<K: Scalar>(
    outer: &HomotopyPair<K>,
    inner: &HomotopyPair<K>,
) -> Result<HomotopyPair<K>> {
    use PairFlavor::*;
    let flavor = match (outer.flavor, inner.flavor) {
        (Algebra, Algebra) | (Algebra, Hopf) => Algebra,
        (Hopf, Hopf) => Hopf,
        (Algebra, Tangential) | (Tangential, Hopf) => Tangential,
        (o, i) => {
            return Err(Error::FlavorMismatch(format!(
                "cannot compose a {o} pair with a {i} pair"
            )));
        }
    };
    let op = |x: &GradedMap<K>, y: &GradedMap<K>| x.compose(y);
    let f = outer.f.bilinear(&inner.f, op)?;
    let xi = outer.f.bilinear(&inner.xi, op)?.add(&outer.xi.bilinear(&inner.f, op)?);
    Ok(HomotopyPair { f, xi, flavor })
}

/// Transport along the Lie bracket: `([υ₁,υ₂], [σ₁,υ₂] + [υ₁,σ₂])`.
pub fn transport_bracket<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    p1: &HomotopyPair<K>,
    p2: &HomotopyPair<K>,
) -> Result<HomotopyPair<K>> {
    expect_tangential("bracket transport", p1)?;
    expect_tangential("bracket transport", p2)?;
    let op = |x: &GradedMap<K>, y: &GradedMap<K>| {
        Ok(star2(b.coalgebra(), a, x, y)?.sub(&star2(b.coalgebra(), a, y, x)?))
    };
    let f = p1.f.bilinear(&p2.f, op)?;
    let xi = p1.xi.bilinear(&p2.f, op)?.add(&p1.f.bilinear(&p2.xi, op)?);
    Ok(HomotopyPair { f, xi, flavor: PairFlavor::Tangential })
}

/// Convolution powers `υ(t)^{⋆0}, …, υ(t)^{⋆n}` of a polynomial path, with
/// `υ^{⋆0} = e`.
fn star_powers<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    v: &MapPoly<K>,
    n: usize,
) -> Result<Vec<MapPoly<K>>> {
    let mut powers = vec![MapPoly::constant(convolution_unit(b.coalgebra(), a))];
    for i in 1..=n {
        let next = powers[i - 1].bilinear(v, |x, y| star2(b.coalgebra(), a, x, y))?;
        powers.push(next);
    }
    Ok(powers)
}

/// Transport a tangential pair `(υ(t), σ(t))` along exp:
/// `f = exp(υ(t))` and `λ(t) = Σ_{n=1}^{N} (1/n!) Σ_{j=1}^{n}
/// υ^{⋆(j−1)}⋆σ⋆υ^{⋆(n−j)}`.
pub fn transport_exp<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    p: &HomotopyPair<K>,
) -> Result<HomotopyPair<K>> {
    expect_tangential("exp transport", p)?;
    let n_max = conilpotency_index(b)?;
    let powers = star_powers(b, a, &p.f, n_max)?;
    let op = |x: &GradedMap<K>, y: &GradedMap<K>| star2(b.coalgebra(), a, x, y);

    let mut f = powers[0].clone();
    let mut xi = MapPoly::zero(p.xi.shape().clone());
    let mut factorial: K = K::one();
    for n in 1..=n_max {
        factorial = factorial * int::<K>(n as i64);
        let inv_fact = K::one() / factorial.clone();
        f = f.add(&powers[n].scale(&inv_fact));
        for j in 1..=n {
            let sandwich = powers[j - 1].bilinear(&p.xi, op)?.bilinear(&powers[n - j], op)?;
            xi = xi.add(&sandwich.scale(&inv_fact));
        }
    }
    Ok(HomotopyPair { f, xi, flavor: PairFlavor::Algebra })
}

/// Transport a group-side pair `(g(t), λ(t))` along ln:
/// `υ = ln(g(t))` and `σ(t) = −Σ_{n=1}^{N} ((−1)ⁿ/n) Σ_{j=1}^{n}
/// ḡ^{⋆(j−1)}⋆λ⋆ḡ^{⋆(n−j)}` with `ḡ(t) = g(t) − e`.
pub fn transport_ln<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    p: &HomotopyPair<K>,
) -> Result<HomotopyPair<K>> {
    reject_tangential("ln transport", p)?;
    if !is_group_element(b, a, &p.f.at_zero())? {
        return Err(Error::NotGroupElement("ln transport needs a group-element base point f(0)".into()));
    }
    let n_max = conilpotency_index(b)?;
    let gbar = p.f.sub(&MapPoly::constant(convolution_unit(b.coalgebra(), a)));
    let powers = star_powers(b, a, &gbar, n_max)?;
    let op = |x: &GradedMap<K>, y: &GradedMap<K>| star2(b.coalgebra(), a, x, y);

    let mut f = MapPoly::zero(p.f.shape().clone());
    let mut xi = MapPoly::zero(p.xi.shape().clone());
    for n in 1..=n_max {
        let c: K = frac(if n % 2 == 1 { 1 } else { -1 }, n as i64);
        // ḡ^{⋆n} = ḡ^{⋆(n−1)} ⋆ ḡ, available as powers[n−1]⋆gbar = powers[n].
        f = f.add(&powers[n].scale(&c));
        for j in 1..=n {
            let sandwich = powers[j - 1].bilinear(&p.xi, op)?.bilinear(&powers[n - j], op)?;
            xi = xi.add(&sandwich.scale(&c));
        }
    }
    Ok(HomotopyPair { f, xi, flavor: PairFlavor::Tangential })
}

fn ground_algebra<K: Scalar>() -> CdgAlgebra<K> {
    let k = Space::ground();
    let complex = CochainComplex::with_zero_differential(k.clone());
    let m = crate::map::unitor_left::<K>(&k);
    CdgAlgebra::new(complex, m, GradedMap::identity(&k)).expect("well-shaped ground algebra")
}

/// Action of the character group on `𝓖^B(A)`: for a group element
/// `g: B → k` and `x ∈ 𝓖^B(A)`, `g.x = (u_A∘g) ⋆ x`.
pub fn group_action<K: Scalar>(
    b: &CdgBialgebra<K>,
    a: &CdgAlgebra<K>,
    g: &GradedMap<K>,
    x: &GradedMap<K>,
) -> Result<GradedMap<K>> {
    if !is_group_element(b, &ground_algebra(), g)? || !is_group_element(b, a, x)? {
        return Err(Error::NotGroupElement("group action needs a character and a group element".into()));
    }
    let lifted = a.u().compose(g)?;
    star2(b.coalgebra(), a, &lifted, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use crate::corpus::{exterior_one, exterior_two, ground_hopf, interval_algebra};

    fn g_dt() -> (CdgHopf<Rat>, CdgAlgebra<Rat>, GradedMap<Rat>) {
        let b = exterior_one::<Rat>();
        let a = interval_algebra::<Rat>();
        let mut g = GradedMap::zero(b.space(), a.space(), 0);
        g.set_label("1", "1", int(1));
        g.set_label("x", "dt", int(1));
        (b, a, g)
    }

    /// `x ↦ x, y ↦ y` on `Λ(x,y)`, the tangent direction whose exp is the
    /// identity.
    fn euler_tangent(b: &CdgHopf<Rat>) -> GradedMap<Rat> {
        let mut v = GradedMap::zero(b.space(), b.space(), 0);
        v.set_label("x", "x", int(1));
        v.set_label("y", "y", int(1));
        v
    }

    #[test]
    fn star_unit_laws_and_small_products() {
        let (b, a, g) = g_dt();
        let e = convolution_unit(b.coalgebra(), &a);
        assert_eq!(star(b.coalgebra(), &a, &[]).unwrap(), e);
        assert_eq!(star(b.coalgebra(), &a, &[&g]).unwrap(), g);
        assert_eq!(star(b.coalgebra(), &a, &[&e, &g]).unwrap(), g);
        assert_eq!(star(b.coalgebra(), &a, &[&g, &e]).unwrap(), g);
        // Non-degree-0 factors are fine: e is still a two-sided unit.
        let mut alpha = GradedMap::zero(b.space(), a.space(), -1);
        alpha.set_label("x", "t", int(1));
        assert_eq!(star(b.coalgebra(), &a, &[&e, &alpha]).unwrap(), alpha);
        assert_eq!(star(b.coalgebra(), &a, &[&alpha, &e]).unwrap(), alpha);
    }

    #[test]
    fn star_of_three_reduced_identities_vanishes() {
        let b = exterior_two::<Rat>();
        let alg = b.algebra();
        assert_eq!(conilpotency_index(b.bialgebra()).unwrap(), 2);
        let p = GradedMap::identity(b.space()).sub(&b.unit_counit());
        let s3 = star(b.coalgebra(), alg, &[&p, &p, &p]).unwrap();
        // Conilpotency index 2 kills the triple product everywhere, in
        // particular on xy.
        let xy = s3.image_of_basis(2, 0);
        assert!(xy.is_zero());
        assert!(s3.is_zero());
        // The double product survives: (id−e)⋆(id−e) at xy is x⊗y−y⊗x → 2xy.
        let s2 = star(b.coalgebra(), alg, &[&p, &p]).unwrap();
        assert!(!s2.is_zero());
    }

    #[test]
    fn star_is_a_dg_algebra_with_unit_e() {
        let b = exterior_two::<Rat>();
        let a = interval_algebra::<Rat>();
        let mut alpha = GradedMap::zero(b.space(), a.space(), -1);
        alpha.set_label("x", "t", int(1));
        alpha.set_label("y", "t", int(2));
        alpha.set_label("xy", "dt", int(1));
        let mut beta = GradedMap::zero(b.space(), a.space(), 0);
        beta.set_label("1", "1", int(1));
        beta.set_label("x", "dt", int(1));
        beta.set_label("y", "dt", int(-3));
        let mut gamma = GradedMap::zero(b.space(), a.space(), -1);
        gamma.set_label("x", "t", int(5));
        gamma.set_label("xy", "dt", int(-2));

        let bc = b.coalgebra();
        // Associativity and agreement of the n-fold product with iterated ⋆.
        let left = star2(bc, &a, &star2(bc, &a, &alpha, &beta).unwrap(), &gamma).unwrap();
        let right = star2(bc, &a, &alpha, &star2(bc, &a, &beta, &gamma).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(star(bc, &a, &[&alpha, &beta, &gamma]).unwrap(), left);

        // d_{B,A} is a derivation of ⋆.
        let d = |f: &GradedMap<Rat>| hom_differential(f, b.d(), a.d()).unwrap();
        let lhs = d(&star2(bc, &a, &alpha, &beta).unwrap());
        let rhs = star2(bc, &a, &d(&alpha), &beta)
            .unwrap()
            .add(&star2(bc, &a, &alpha, &d(&beta)).unwrap().scale(&int(-1)));
        assert_eq!(check_maps_equal("derivation", &lhs, &rhs).pass, true);
        // The unit is closed: d(e) = 0.
        assert!(d(&convolution_unit(bc, &a)).is_zero());
    }

    #[test]
    fn gusl_b_product_identity_up_to_three() {
        let a = interval_algebra::<Rat>();
        let sq = a.tensor_square().unwrap();
        assert!(sq.verify().passed());
        for n in 1..=3 {
            let lhs = a.m().compose(&iterated_product(&sq, n).unwrap()).unwrap();
            let spread: Vec<&GradedMap<Rat>> = vec![a.m(); n];
            let rhs = iterated_product(&a, n)
                .unwrap()
                .compose(&GradedMap::tensor_all(&spread))
                .unwrap();
            let check = check_maps_equal(format!("gusl(b) n = {n}"), &lhs, &rhs);
            assert!(check.pass, "{}: {:?}", check.name, check.witness);
        }
    }

    #[test]
    fn group_elements_and_inverses() {
        let (b, a, g) = g_dt();
        let report = verify_group_element(b.bialgebra(), &a, &g).unwrap();
        assert!(report.passed(), "{report}");

        // g⁻¹ = g∘ς sends x to −dt, and g ⋆ g⁻¹ = e on both sides.
        let inv = group_inverse(&b, &a, &g).unwrap();
        let mut expected = GradedMap::zero(b.space(), a.space(), 0);
        expected.set_label("1", "1", int(1));
        expected.set_label("x", "dt", int(-1));
        assert_eq!(inv, expected);
        let e = convolution_unit(b.coalgebra(), &a);
        assert_eq!(star2(b.coalgebra(), &a, &g, &inv).unwrap(), e);
        assert_eq!(star2(b.coalgebra(), &a, &inv, &g).unwrap(), e);

        // e⁻¹ = e, and the inverse of id_B is the antipode.
        assert_eq!(group_inverse(&b, &a, &e).unwrap(), e);
        let b2 = exterior_two::<Rat>();
        let id = GradedMap::identity(b2.space());
        assert_eq!(group_inverse(&b2, b2.algebra(), &id).unwrap(), *b2.antipode());

        // Failing the unit condition is caught and reported with a witness.
        let mut h = g.clone();
        h.set_label("1", "1", int(2));
        let bad = verify_group_element(b.bialgebra(), &a, &h).unwrap();
        assert!(!bad.passed());
        let failure = bad.failures().next().unwrap();
        assert_eq!(failure.name, "g∘u_B = u_A");
        assert!(failure.witness.is_some());
        assert!(matches!(group_inverse(&b, &a, &h), Err(Error::NotGroupElement(_))));
    }

    #[test]
    fn tangent_elements_brackets_and_jacobi() {
        let (b, a, g) = g_dt();
        let e = convolution_unit(b.coalgebra(), &a);
        let v = g.sub(&e); // x ↦ dt, vanishing on the unit
        assert!(verify_tangent_element(b.bialgebra(), &a, &v).unwrap().passed());
        assert!(lie_bracket(b.bialgebra(), &a, &v, &v).unwrap().is_zero());

        // Any two tangent directions on Λ(x) commute.
        let w = v.scale(&frac(7, 3));
        assert!(lie_bracket(b.bialgebra(), &a, &v, &w).unwrap().is_zero());

        // A non-tangential input is rejected.
        assert!(matches!(lie_bracket(b.bialgebra(), &a, &g, &v), Err(Error::NotTangential(_))));

        // Antisymmetry and Jacobi on Λ(x,y) (graded-commutative target, so
        // every bracket vanishes — the identities still have to hold).
        let b2 = exterior_two::<Rat>();
        let alg = b2.algebra();
        let mut v1 = GradedMap::zero(b2.space(), b2.space(), 0);
        v1.set_label("x", "y", int(1));
        v1.set_label("y", "x", int(1));
        let mut v2 = GradedMap::zero(b2.space(), b2.space(), 0);
        v2.set_label("x", "x", int(1));
        v2.set_label("y", "y", int(-1));
        let v3 = euler_tangent(&b2);
        for v in [&v1, &v2, &v3] {
            assert!(is_tangential(b2.bialgebra(), alg, v).unwrap());
        }
        let br = |x: &GradedMap<Rat>, y: &GradedMap<Rat>| {
            lie_bracket(b2.bialgebra(), alg, x, y).unwrap()
        };
        assert_eq!(br(&v1, &v2), br(&v2, &v1).neg());
        let jacobi =
            br(&br(&v1, &v2), &v3).add(&br(&br(&v2, &v3), &v1)).add(&br(&br(&v3, &v1), &v2));
        assert!(jacobi.is_zero());
    }

    #[test]
    fn exp_and_ln_oracles() {
        let (b, a, g) = g_dt();
        assert_eq!(conilpotency_index(b.bialgebra()).unwrap(), 1);
        assert_eq!(conilpotency_index(ground_hopf::<Rat>().bialgebra()).unwrap(), 0);

        let e = convolution_unit(b.coalgebra(), &a);
        let zero = GradedMap::zero(b.space(), a.space(), 0);
        assert_eq!(exp_conv(b.bialgebra(), &a, &zero).unwrap(), e);
        assert_eq!(ln_conv(b.bialgebra(), &a, &e).unwrap(), zero);

        // exp(υ) with υ(x) = dt sends 1 ↦ 1 and x ↦ dt, i.e. equals g.
        let v = g.sub(&e);
        let exp_v = exp_conv(b.bialgebra(), &a, &v).unwrap();
        assert_eq!(exp_v, g);
        assert!(is_group_element(b.bialgebra(), &a, &exp_v).unwrap());
        assert_eq!(ln_conv(b.bialgebra(), &a, &exp_v).unwrap(), v);

        // On Λ(x,y): exp(x↦x, y↦y) = id_B, and ln inverts it exactly.
        let b2 = exterior_two::<Rat>();
        let alg = b2.algebra();
        let v2 = euler_tangent(&b2);
        let id = GradedMap::identity(b2.space());
        let exp_v2 = exp_conv(b2.bialgebra(), alg, &v2).unwrap();
        assert_eq!(exp_v2, id);
        assert_eq!(ln_conv(b2.bialgebra(), alg, &id).unwrap(), v2);
        let back = exp_conv(b2.bialgebra(), alg, &ln_conv(b2.bialgebra(), alg, &id).unwrap())
            .unwrap();
        assert_eq!(back, id);

        // Wrong kind of input is reported, not silently accepted.
        assert!(matches!(exp_conv(b.bialgebra(), &a, &g), Err(Error::NotTangential(_))));
        assert!(matches!(ln_conv(b.bialgebra(), &a, &v), Err(Error::NotGroupElement(_))));
    }

    /// The worked pair from the interval: f(t) = g + t·d(ξ̂) with ξ̂(x) = −t
    /// flows g to e.
    fn interval_pair() -> (CdgHopf<Rat>, CdgAlgebra<Rat>, HomotopyPair<Rat>) {
        let (b, a, g) = g_dt();
        let mut xi_hat = GradedMap::zero(b.space(), a.space(), -1);
        xi_hat.set_label("x", "t", int(-1));
        let d_xi = hom_differential(&xi_hat, b.d(), a.d()).unwrap();
        let f = MapPoly::from_coeffs(vec![g, d_xi]).unwrap();
        let pair =
            HomotopyPair { f, xi: MapPoly::constant(xi_hat), flavor: PairFlavor::Algebra };
        (b, a, pair)
    }

    #[test]
    fn homotopy_pairs_verify_or_fail_with_witness() {
        let (b, a, g) = g_dt();
        let source = Structure::Hopf(b.clone());
        let target = Structure::Algebra(a.clone());

        // Constant pair (g, 0).
        let constant = HomotopyPair::constant(g.clone(), PairFlavor::Algebra);
        assert!(verify_homotopy_pair(&constant, &source, &target).unwrap().passed());

        // The linear pair flows g to e by time 1.
        let (_, _, pair) = interval_pair();
        let report = verify_homotopy_pair(&pair, &source, &target).unwrap();
        assert!(report.passed(), "{report}");
        let e = convolution_unit(b.coalgebra(), &a);
        assert_eq!(pair.f.evaluate(&int(1)), e);

        // Hopf flavor: the constant pair at id_B on Λ(x,y).
        let b2 = exterior_two::<Rat>();
        let hopf_pair =
            HomotopyPair::constant(GradedMap::identity(b2.space()), PairFlavor::Hopf);
        let s2 = Structure::Hopf(b2.clone());
        assert!(verify_homotopy_pair(&hopf_pair, &s2, &s2).unwrap().passed());
        // ...but its target must carry a coalgebra.
        assert!(matches!(
            verify_homotopy_pair(
                &HomotopyPair { flavor: PairFlavor::Hopf, ..pair.clone() },
                &source,
                &target
            ),
            Err(Error::MissingStructure { needed, .. }) if needed.contains("coalgebra")
        ));

        // A generator that hits the unit violates ξ(t)∘u_B = 0, with the
        // witness naming the offending coefficient and basis element.
        let theta = Space::atom("Λ(θ)", (-1, 0), &[("θ", -1), ("1", 0)]).unwrap();
        let complex = CochainComplex::with_zero_differential(theta.clone());
        let mut m = GradedMap::zero(&theta.tensor(&theta), &theta, 0);
        m.set_label("1⊗1", "1", int(1));
        m.set_label("1⊗θ", "θ", int(1));
        m.set_label("θ⊗1", "θ", int(1));
        let mut u = GradedMap::zero(&Space::ground(), &theta, 0);
        u.set_label("1", "1", int(1));
        let a_theta = CdgAlgebra::new(complex, m, u).unwrap();
        assert!(a_theta.verify().passed());

        let e_theta = a_theta.u().compose(b.counit()).unwrap();
        let mut bad_xi = GradedMap::zero(b.space(), a_theta.space(), -1);
        bad_xi.set_label("1", "θ", int(1));
        let bad = HomotopyPair {
            f: MapPoly::constant(e_theta),
            xi: MapPoly::constant(bad_xi),
            flavor: PairFlavor::Algebra,
        };
        let report =
            verify_homotopy_pair(&bad, &source, &Structure::Algebra(a_theta)).unwrap();
        assert!(!report.passed());
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"ξ(t)∘u_B = 0"));
        let unit_failure = report.failures().find(|c| c.name == "ξ(t)∘u_B = 0").unwrap();
        let witness = unit_failure.witness.as_ref().unwrap();
        assert_eq!(witness.element, "t^0 · 1");
    }

    #[test]
    fn tangential_pairs_verify() {
        let (b, a, g) = g_dt();
        let e = convolution_unit(b.coalgebra(), &a);
        let v = g.sub(&e);
        let mut sigma = GradedMap::zero(b.space(), a.space(), -1);
        sigma.set_label("x", "t", int(1));
        // υ(t) = (1+t)·υ flows with generator σ since d(σ) = υ.
        let pair = HomotopyPair {
            f: MapPoly::from_coeffs(vec![v.clone(), v.clone()]).unwrap(),
            xi: MapPoly::constant(sigma),
            flavor: PairFlavor::Tangential,
        };
        let source = Structure::Hopf(b.clone());
        let target = Structure::Algebra(a.clone());
        let report = verify_homotopy_pair(&pair, &source, &target).unwrap();
        assert!(report.passed(), "{report}");

        // Breaking the flow equation is detected.
        let broken = HomotopyPair {
            f: MapPoly::from_coeffs(vec![v.clone(), v.scale(&int(2))]).unwrap(),
            ..pair.clone()
        };
        let report = verify_homotopy_pair(&broken, &source, &target).unwrap();
        assert!(!report.passed());
        assert_eq!(report.failures().next().unwrap().name, "flow: d/dt f(t) = d_{B,A} ξ(t)");
    }

    #[test]
    fn search_finds_the_interval_homotopy() {
        let (b, a, g) = g_dt();
        let e = convolution_unit(b.coalgebra(), &a);

        // Trivial search: identical endpoints give the constant pair.
        let found = search_homotopy(b.bialgebra(), &a, &g, &g, 1).unwrap().unwrap();
        assert!(found.xi.is_zero());
        assert_eq!(found.f, MapPoly::constant(g.clone()));

        // g(x) = dt is homotopic to e with generator ξ(x) = −t.
        let found = search_homotopy(b.bialgebra(), &a, &g, &e, 1).unwrap().unwrap();
        let source = Structure::Hopf(b.clone());
        let target = Structure::Algebra(a.clone());
        assert!(verify_homotopy_pair(&found, &source, &target).unwrap().passed());
        assert_eq!(found.f.evaluate(&int(0)), g);
        assert_eq!(found.f.evaluate(&int(1)), e);
        let mut expected_xi = GradedMap::zero(b.space(), a.space(), -1);
        expected_xi.set_label("x", "t", int(-1));
        assert_eq!(found.xi, MapPoly::constant(expected_xi));

        // With a zero target differential distinct group elements admit no
        // flow at any generator degree.
        let b2 = exterior_one::<Rat>();
        let alg2 = b2.algebra();
        let id = GradedMap::identity(b2.space());
        let e2 = b2.unit_counit();
        assert!(search_homotopy(b2.bialgebra(), alg2, &id, &e2, 1).unwrap().is_none());
        assert!(search_homotopy(b2.bialgebra(), alg2, &id, &e2, 3).unwrap().is_none());

        // Non-group endpoints are rejected outright.
        let broken = g.scale(&int(2));
        assert!(matches!(
            search_homotopy(b.bialgebra(), &a, &broken, &e, 1),
            Err(Error::NotGroupElement(_))
        ));
    }

    #[test]
    fn transports_preserve_the_pair_conditions() {
        let (b, a, pair) = interval_pair();
        let source = Structure::Hopf(b.clone());
        let target = Structure::Algebra(a.clone());
        let e = convolution_unit(b.coalgebra(), &a);

        // ⋆-transport with the unit pair is the identity on pairs.
        let unit_pair = HomotopyPair::constant(e.clone(), PairFlavor::Algebra);
        let same = transport_star(b.coalgebra(), &a, &pair, &unit_pair).unwrap();
        assert_eq!(same.f, pair.f);
        assert_eq!(same.xi, pair.xi);

        // ⋆ of the pair with itself still verifies.
        let squared = transport_star(b.coalgebra(), &a, &pair, &pair).unwrap();
        assert!(verify_homotopy_pair(&squared, &source, &target).unwrap().passed());

        // Antipode transport.
        let inv = transport_antipode(&b, &pair).unwrap();
        assert!(verify_homotopy_pair(&inv, &source, &target).unwrap().passed());

        // Composition transport with the projection π: k[t,dt] → k.
        let ground = ground_hopf::<Rat>();
        let mut pi = GradedMap::zero(a.space(), ground.space(), 0);
        pi.set_label("1", "1", int(1));
        let outer = HomotopyPair::constant(pi, PairFlavor::Algebra);
        let composed = transport_compose(&outer, &pair).unwrap();
        let ground_target = Structure::Algebra(ground.algebra().clone());
        assert!(verify_homotopy_pair(&composed, &source, &ground_target).unwrap().passed());

        // Precomposition with a Hopf pair (id on Λ(x), constant).
        let hopf_pair =
            HomotopyPair::constant(GradedMap::identity(b.space()), PairFlavor::Hopf);
        let through = transport_compose(&pair, &hopf_pair).unwrap();
        assert_eq!(through.flavor, PairFlavor::Algebra);
        assert!(verify_homotopy_pair(&through, &source, &target).unwrap().passed());

        // Tangential flavors: bracket transport and composition on either
        // side keep the tangential conditions.
        let v = pair.f.coeff(0).sub(&e);
        let t1 = HomotopyPair::constant(v.clone(), PairFlavor::Tangential);
        let bracketed = transport_bracket(b.bialgebra(), &a, &t1, &t1).unwrap();
        assert_eq!(bracketed.flavor, PairFlavor::Tangential);
        assert!(verify_homotopy_pair(&bracketed, &source, &target).unwrap().passed());
        let lifted = transport_compose(&outer, &t1).unwrap();
        assert_eq!(lifted.flavor, PairFlavor::Tangential);
        assert!(verify_homotopy_pair(&lifted, &source, &ground_target).unwrap().passed());
        let pulled = transport_compose(&t1, &hopf_pair).unwrap();
        assert_eq!(pulled.flavor, PairFlavor::Tangential);
        assert!(verify_homotopy_pair(&pulled, &source, &target).unwrap().passed());

        // Mixing flavors the wrong way round is refused.
        assert!(matches!(
            transport_star(b.coalgebra(), &a, &t1, &pair),
            Err(Error::FlavorMismatch(_))
        ));
        assert!(matches!(
            transport_bracket(b.bialgebra(), &a, &pair, &t1),
            Err(Error::FlavorMismatch(_))
        ));
        assert!(matches!(transport_compose(&t1, &pair), Err(Error::FlavorMismatch(_))));
    }

    #[test]
    fn exp_and_ln_transports_roundtrip() {
        let (b, a, g) = g_dt();
        let source = Structure::Hopf(b.clone());
        let target = Structure::Algebra(a.clone());
        let e = convolution_unit(b.coalgebra(), &a);
        let v = g.sub(&e);
        let mut sigma = GradedMap::zero(b.space(), a.space(), -1);
        sigma.set_label("x", "t", int(1));
        let tangential = HomotopyPair {
            f: MapPoly::from_coeffs(vec![v.clone(), v.clone()]).unwrap(),
            xi: MapPoly::constant(sigma),
            flavor: PairFlavor::Tangential,
        };
        assert!(verify_homotopy_pair(&tangential, &source, &target).unwrap().passed());

        let grouped = transport_exp(b.bialgebra(), &a, &tangential).unwrap();
        assert_eq!(grouped.flavor, PairFlavor::Algebra);
        assert!(verify_homotopy_pair(&grouped, &source, &target).unwrap().passed());
        // Conilpotency index 1: exp adds e and keeps the generator.
        assert_eq!(grouped.f, tangential.f.add(&MapPoly::constant(e.clone())));
        assert_eq!(grouped.xi, tangential.xi);

        let back = transport_ln(b.bialgebra(), &a, &grouped).unwrap();
        assert_eq!(back.flavor, PairFlavor::Tangential);
        assert_eq!(back.f, tangential.f);
        assert_eq!(back.xi, tangential.xi);

        // Index-2 case: transport the constant Euler pair on Λ(x,y); exp
        // lands on the constant pair at id_B.
        let b2 = exterior_two::<Rat>();
        let alg2 = b2.algebra();
        let s2 = Structure::Hopf(b2.clone());
        let t2 = Structure::Algebra(alg2.clone());
        let euler = HomotopyPair::constant(euler_tangent(&b2), PairFlavor::Tangential);
        let exp_euler = transport_exp(b2.bialgebra(), alg2, &euler).unwrap();
        assert!(verify_homotopy_pair(&exp_euler, &s2, &t2).unwrap().passed());
        assert_eq!(exp_euler.f, MapPoly::constant(GradedMap::identity(b2.space())));
        let ln_back = transport_ln(b2.bialgebra(), alg2, &exp_euler).unwrap();
        assert!(verify_homotopy_pair(&ln_back, &s2, &t2).unwrap().passed());
        assert_eq!(ln_back.f, euler.f);

        // exp transport refuses group-side pairs, ln refuses tangential ones.
        assert!(matches!(
            transport_exp(b.bialgebra(), &a, &grouped),
            Err(Error::FlavorMismatch(_))
        ));
        assert!(matches!(
            transport_ln(b.bialgebra(), &a, &tangential),
            Err(Error::FlavorMismatch(_))
        ));
    }

    #[test]
    fn character_group_acts_on_group_elements() {
        let (b, a, g) = g_dt();
        let e = convolution_unit(b.coalgebra(), &a);
        // The only character Λ(x) → k is the counit; it acts trivially.
        let chi = b.counit().clone();
        assert_eq!(group_action(b.bialgebra(), &a, &chi, &g).unwrap(), g);
        assert_eq!(group_action(b.bialgebra(), &a, &chi, &e).unwrap(), e);
        // g.e = u_A∘g.
        let lifted = a.u().compose(&chi).unwrap();
        assert_eq!(group_action(b.bialgebra(), &a, &chi, &e).unwrap(), lifted);
        // Composition law (g₁⋆g₂).x = g₁.(g₂.x) for characters.
        let chi2 = star2(b.coalgebra(), &ground_algebra::<Rat>(), &chi, &chi).unwrap();
        let lhs = group_action(b.bialgebra(), &a, &chi2, &g).unwrap();
        let inner = group_action(b.bialgebra(), &a, &chi, &g).unwrap();
        let rhs = group_action(b.bialgebra(), &a, &chi, &inner).unwrap();
        assert_eq!(lhs, rhs);
        // Non-characters are rejected.
        let bad = chi.scale(&int(2));
        assert!(matches!(
            group_action(b.bialgebra(), &a, &bad, &g),
            Err(Error::NotGroupElement(_))
        ));
    }
}
