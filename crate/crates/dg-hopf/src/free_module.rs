//! Free right dg-modules `M⊗A` and the `𝔭,𝔮,𝔯,𝔰` operator calculus.
//!
//! For a complex `M` and a cdg-algebra `A`, maps `M⊗A → N⊗A` of right
//! `A`-modules are exactly the kernel of `𝔯`, and the four operators
//!
//! * `𝔭(α₁) = (I_N⊗m_A)∘(α₁⊗I_A)` for `α₁ : M → N⊗A`,
//! * `𝔮(α₂) = α₂∘(I_M⊗u_A)∘ȷ⁻¹_M` for `α₂ : M⊗A → N⊗A`,
//! * `𝔯(α₂) = α₂∘(I_M⊗m_A) − (I_N⊗m_A)∘(α₂⊗I_A)`,
//! * `𝔰(α₃) = α₃∘(I_M⊗u_A⊗I_A)∘(ȷ⁻¹_M⊗I_A)` for `α₃ : M⊗A⊗A → N⊗A`,
//!
//! satisfy `𝔯𝔭 = 0`, `𝔮𝔭 = I` and `𝔭𝔮 + 𝔰𝔯 = I`, so `𝔭` and `𝔮` are
//! inverse isomorphisms `Hom(M, N⊗A) ≅ Hom_{m_A}(M⊗A, N⊗A)`.
//!
//! A cdg-algebra map `f : A → A′` transports module endomorphisms by
//! `𝓔^M(f)(φ) = (I_M⊗m_{A′})∘(I_M⊗f⊗I_{A′})∘(𝔮(φ)⊗I_{A′})`, a dg-algebra
//! morphism `End_{m_A}(M⊗A) → End_{m_{A′}}(M⊗A′)` that therefore preserves
//! graded commutators and homotopy classes.

use crate::complex::CochainComplex;
use crate::dg::CdgAlgebra;
use crate::error::{Error, Result};
use crate::map::{
    braiding, chain, hom_differential, solve_linear_maps, unitor_right_inv, GradedMap, MapShape,
};
use crate::scalar::{sign, Scalar};
use crate::space::Space;

/// Strip the trailing `A`-factors: `M⊗A ↦ M`.
fn module_part(space: &Space, a: &Space, context: &'static str) -> Result<Space> {
    let n = space.factor_count();
    let k = a.factor_count();
    if n <= k || &space.factor_range(n - k, n) != a {
        return Err(Error::SpaceMismatch {
            context,
            expected: format!("(…)⊗{a}"),
            found: space.to_string(),
        });
    }
    Ok(space.factor_range(0, n - k))
}

/// `𝔭(α₁) = (I_N⊗m_A)∘(α₁⊗I_A) : M⊗A → N⊗A` for `α₁ : M → N⊗A`.
pub fn p_op<K: Scalar>(alpha1: &GradedMap<K>, a: &CdgAlgebra<K>) -> Result<GradedMap<K>> {
    let n_space = module_part(alpha1.target(), a.space(), "𝔭: target must be N⊗A")?;
    let id_a = GradedMap::identity(a.space());
    let id_n = GradedMap::identity(&n_space);
    Ok(chain(&[&id_n.tensor_map(a.m()), &alpha1.tensor_map(&id_a)]))
}

/// `𝔮(α₂) = α₂∘(I_M⊗u_A)∘ȷ⁻¹_M : M → N⊗A` for `α₂ : M⊗A → N⊗A`.
pub fn q_op<K: Scalar>(alpha2: &GradedMap<K>, a: &CdgAlgebra<K>) -> Result<GradedMap<K>> {
    let m_space = module_part(alpha2.source(), a.space(), "𝔮: source must be M⊗A")?;
    let id_m = GradedMap::identity(&m_space);
    Ok(chain(&[alpha2, &id_m.tensor_map(a.u()), &unitor_right_inv(&m_space)]))
}

/// `𝔯(α₂) = α₂∘(I_M⊗m_A) − (I_N⊗m_A)∘(α₂⊗I_A) : M⊗A⊗A → N⊗A`.
/// Vanishes exactly on right `A`-module morphisms.
pub fn r_op<K: Scalar>(alpha2: &GradedMap<K>, a: &CdgAlgebra<K>) -> Result<GradedMap<K>> {
    let m_space = module_part(alpha2.source(), a.space(), "𝔯: source must be M⊗A")?;
    let n_space = module_part(alpha2.target(), a.space(), "𝔯: target must be N⊗A")?;
    let id_m = GradedMap::identity(&m_space);
    let id_n = GradedMap::identity(&n_space);
    let id_a = GradedMap::identity(a.space());
    let left = chain(&[alpha2, &id_m.tensor_map(a.m())]);
    let right = chain(&[&id_n.tensor_map(a.m()), &alpha2.tensor_map(&id_a)]);
    Ok(left.sub(&right))
}

/// `𝔰(α₃) = α₃∘(I_M⊗u_A⊗I_A)∘(ȷ⁻¹_M⊗I_A) : M⊗A → N⊗A` for
/// `α₃ : M⊗A⊗A → N⊗A`.
pub fn s_op<K: Scalar>(alpha3: &GradedMap<K>, a: &CdgAlgebra<K>) -> Result<GradedMap<K>> {
    let ma = module_part(alpha3.source(), a.space(), "𝔰: source must be (M⊗A)⊗A")?;
    let m_space = module_part(&ma, a.space(), "𝔰: source must be M⊗A⊗A")?;
    let id_m = GradedMap::identity(&m_space);
    let id_a = GradedMap::identity(a.space());
    let insert_unit = id_m.tensor_map(a.u()).tensor_map(&id_a);
    let expand = unitor_right_inv::<K>(&m_space).tensor_map(&id_a);
    Ok(chain(&[alpha3, &insert_unit, &expand]))
}

/// Is `φ : M⊗A → N⊗A` a morphism of right `A`-modules, i.e. `𝔯(φ) = 0`?
pub fn is_module_morphism<K: Scalar>(phi: &GradedMap<K>, a: &CdgAlgebra<K>) -> Result<bool> {
    Ok(r_op(phi, a)?.is_zero())
}

/// `φ⊗_{m_A}φ′ = (I_{N⊗N′}⊗m_A)∘(I_N⊗τ_{A,N′}⊗I_A)∘(𝔮(φ)⊗φ′)`, the tensor
/// product of module morphisms over `A`: `(M⊗M′)⊗A → (N⊗N′)⊗A`.
pub fn tensor_module_morphism<K: Scalar>(
    phi: &GradedMap<K>,
    phi_prime: &GradedMap<K>,
    a: &CdgAlgebra<K>,
) -> Result<GradedMap<K>> {
    let n_space = module_part(phi.target(), a.space(), "⊗_m: target must be N⊗A")?;
    let n_prime = module_part(phi_prime.target(), a.space(), "⊗_m: target must be N′⊗A")?;
    let q_phi = q_op(phi, a)?;
    let id_n = GradedMap::identity(&n_space);
    let id_a = GradedMap::identity(a.space());
    let id_nn = GradedMap::identity(&n_space.tensor(&n_prime));
    let shuffle = GradedMap::tensor_all(&[&id_n, &braiding(a.space(), &n_prime), &id_a]);
    Ok(chain(&[&id_nn.tensor_map(a.m()), &shuffle, &q_phi.tensor_map(phi_prime)]))
}

/// Transport `𝓔^M(f)(φ) = (I_M⊗m_{A′})∘(I_M⊗f⊗I_{A′})∘(𝔮(φ)⊗I_{A′})` of a
/// module endomorphism of `M⊗A` along a cdg-algebra map `f : A → A′`.
pub fn transport_endo<K: Scalar>(
    f: &GradedMap<K>,
    phi: &GradedMap<K>,
    a: &CdgAlgebra<K>,
    a_prime: &CdgAlgebra<K>,
) -> Result<GradedMap<K>> {
    if f.source() != a.space() || f.target() != a_prime.space() {
        return Err(Error::SpaceMismatch {
            context: "transport along f",
            expected: format!("{} → {}", a.space(), a_prime.space()),
            found: format!("{} → {}", f.source(), f.target()),
        });
    }
    if phi.source() != phi.target() {
        return Err(Error::SpaceMismatch {
            context: "transport of a non-endomorphism",
            expected: phi.source().to_string(),
            found: phi.target().to_string(),
        });
    }
    let m_space = module_part(phi.source(), a.space(), "𝓔: endomorphism of M⊗A")?;
    let q_phi = q_op(phi, a)?;
    let id_m = GradedMap::identity(&m_space);
    let id_ap = GradedMap::identity(a_prime.space());
    Ok(chain(&[
        &id_m.tensor_map(a_prime.m()),
        &GradedMap::tensor_all(&[&id_m, f, &id_ap]),
        &q_phi.tensor_map(&id_ap),
    ]))
}

/// The differential `d_{M⊗A} = d_M⊗I_A + I_M⊗d_A` on the free module.
pub fn module_differential<K: Scalar>(
    m_complex: &CochainComplex<K>,
    a: &CdgAlgebra<K>,
) -> GradedMap<K> {
    let id_m = GradedMap::identity(m_complex.space());
    let id_a = GradedMap::identity(a.space());
    m_complex.d().tensor_map(&id_a).add(&id_m.tensor_map(a.d()))
}

/// Graded commutator in the endomorphism algebra:
/// `[φ,ψ] = φ∘ψ − (−1)^{|φ||ψ|} ψ∘φ`.
pub fn composition_bracket<K: Scalar>(phi: &GradedMap<K>, psi: &GradedMap<K>) -> Result<GradedMap<K>> {
    let fg = phi.compose(psi)?;
    let gf = psi.compose(phi)?;
    Ok(fg.sub(&gf.scale(&sign::<K>(phi.degree() * psi.degree()))))
}

/// Do `φ` and `ψ` (degree-0 module endomorphisms of `M⊗A`) agree in
/// `H⁰End_{m_A}(M⊗A)`? Solves for `λ ∈ End⁻¹_{m_A}` with `d(λ) = ψ − φ`;
/// returns the homotopy `λ` when the classes agree.
pub fn homotopy_class_equal<K: Scalar>(
    phi: &GradedMap<K>,
    psi: &GradedMap<K>,
    m_complex: &CochainComplex<K>,
    a: &CdgAlgebra<K>,
) -> Result<Option<GradedMap<K>>> {
    let ma = m_complex.space().tensor(a.space());
    if phi.source() != &ma || phi.target() != &ma || psi.source() != &ma || psi.target() != &ma {
        return Err(Error::SpaceMismatch {
            context: "homotopy class comparison",
            expected: format!("{ma} → {ma}"),
            found: format!("{} → {}", phi.source(), phi.target()),
        });
    }
    if phi.degree() != 0 || psi.degree() != 0 {
        return Err(Error::DegreeError {
            context: "homotopy class comparison",
            expected: 0,
            found: if phi.degree() != 0 { phi.degree() } else { psi.degree() },
        });
    }
    let d = module_differential(m_complex, a);
    let difference = psi.sub(phi);
    let r_shape = r_op(&GradedMap::zero(&ma, &ma, -1), a)?.shape();
    let shape = MapShape { source: ma.clone(), target: ma.clone(), degree: -1 };
    let solution = solve_linear_maps(
        &[shape],
        &[difference, GradedMap::zero_of(&r_shape)],
        |unknown| {
            let lambda = &unknown[0];
            vec![
                hom_differential(lambda, &d, &d).expect("validated shapes"),
                r_op(lambda, a).expect("validated shapes"),
            ]
        },
    );
    Ok(solution.map(|mut v| v.remove(0)))
}
