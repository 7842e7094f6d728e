//! Commutative dg-algebras, dg-coalgebras, bialgebras and Hopf algebras.
//!
//! Constructors validate shapes only (sources, targets, degrees); the axioms
//! are checked by `verify`, which returns a [`Report`] with a witness basis
//! element for every failing identity. [`solve_antipode`] finds the antipode
//! of a bialgebra — unique when it exists — by solving both sides of the
//! antipode axiom as one exact linear system.
//!
//! Iterated products `m⁽ⁿ⁾` and coproducts `Δ⁽ⁿ⁾` follow the recursions
//! `m⁽ⁿ⁺¹⁾ = m∘(m⁽ⁿ⁾⊗I)` and `Δ⁽ⁿ⁺¹⁾ = (Δ⁽ⁿ⁾⊗I)∘Δ`; the reduced coproduct
//! is `Δ̄ = Δ − (u⊗I)∘ι⁻¹ − (I⊗u)∘ȷ⁻¹`, and the conilpotency filtration is
//! `B̄ₙ = Ker Δ̄⁽ⁿ⁺¹⁾ ∩ Ker ε` with conilpotency index the smallest `n`
//! exhausting `Ker ε`.

use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::map::{
    braiding, check_maps_equal, chain, hom_differential, solve_linear_maps, unitor_left,
    unitor_left_inv, unitor_right_inv, GradedMap, MapShape,
};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::space::Space;
use crate::subspace::{kernel_of_maps, Subspace};

/// Largest tensor-space dimension the iterated operations will build.
pub const TENSOR_DIM_CAP: usize = 1 << 20;

fn guard_tensor_dim(context: &'static str, base: usize, power: usize) -> Result<()> {
    let mut dim: usize = 1;
    for _ in 0..power {
        dim = dim.saturating_mul(base);
        if dim > TENSOR_DIM_CAP {
            return Err(Error::WindowOverflow { context, dim, cap: TENSOR_DIM_CAP });
        }
    }
    Ok(())
}

fn expect_shape<K: Scalar>(
    context: &'static str,
    f: &GradedMap<K>,
    source: &Space,
    target: &Space,
) -> Result<()> {
    if f.source() != source || f.target() != target {
        return Err(Error::SpaceMismatch {
            context,
            expected: format!("{source} → {target}"),
            found: format!("{} → {}", f.source(), f.target()),
        });
    }
    if f.degree() != 0 {
        return Err(Error::DegreeError { context, expected: 0, found: f.degree() });
    }
    Ok(())
}

/// A commutative dg-algebra `(B, d, m, u)`.
#[derive(Clone, Debug)]
pub struct CdgAlgebra<K> {
    complex: CochainComplex<K>,
    m: GradedMap<K>,
    u: GradedMap<K>,
}

impl<K: Scalar> CdgAlgebra<K> {
    pub fn new(complex: CochainComplex<K>, m: GradedMap<K>, u: GradedMap<K>) -> Result<Self> {
        let b = complex.space().clone();
        expect_shape("algebra product", &m, &b.tensor(&b), &b)?;
        expect_shape("algebra unit", &u, &Space::ground(), &b)?;
        Ok(CdgAlgebra { complex, m, u })
    }

    pub fn space(&self) -> &Space {
        self.complex.space()
    }

    pub fn complex(&self) -> &CochainComplex<K> {
        &self.complex
    }

    pub fn d(&self) -> &GradedMap<K> {
        self.complex.d()
    }

    pub fn m(&self) -> &GradedMap<K> {
        &self.m
    }

    pub fn u(&self) -> &GradedMap<K> {
        &self.u
    }

    /// `m_{B⊗B} = (m⊗m)∘(I⊗τ⊗I) : (B⊗B)⊗(B⊗B) → B⊗B`.
    pub fn product_on_tensor_square(&self) -> GradedMap<K> {
        let b = self.space();
        let id = GradedMap::identity(b);
        let tau = braiding(b, b);
        let middle = GradedMap::tensor_all(&[&id, &tau, &id]);
        self.m.tensor_map(&self.m).compose(&middle).expect("shapes agree")
    }

    /// `u_{B⊗B} = (u⊗u)∘ι⁻¹_k : k → B⊗B`.
    pub fn unit_on_tensor_square(&self) -> GradedMap<K> {
        let dup = unitor_left_inv::<K>(&Space::ground());
        self.u.tensor_map(&self.u).compose(&dup).expect("shapes agree")
    }

    /// The cdg-algebra `(B⊗B, d⊗I + I⊗d, m_{B⊗B}, u_{B⊗B})`.
    pub fn tensor_square(&self) -> Result<CdgAlgebra<K>> {
        let b = self.space();
        guard_tensor_dim("tensor-square algebra", b.total_dim(), 2)?;
        let id = GradedMap::identity(b);
        let d_sq = self.d().tensor_map(&id).add(&id.tensor_map(self.d()));
        let complex = CochainComplex::new(b.tensor(b), d_sq)?;
        CdgAlgebra::new(complex, self.product_on_tensor_square(), self.unit_on_tensor_square())
    }

    /// Axioms: unit laws, associativity, graded commutativity `m∘τ = m`,
    /// the Leibniz rule, and `d∘u = 0`.
    pub fn verify(&self) -> Report {
        let b = self.space();
        let mut report = Report::new(format!("cdg-algebra axioms on {b}"));
        let id = GradedMap::identity(b);
        let d = self.d();

        let left_unit = chain(&[&self.m, &self.u.tensor_map(&id), &unitor_left_inv(b)]);
        report.checks.push(check_maps_equal("left unit: m∘(u⊗I)∘ι⁻¹ = I", &left_unit, &id));
        let right_unit = chain(&[&self.m, &id.tensor_map(&self.u), &unitor_right_inv(b)]);
        report.checks.push(check_maps_equal("right unit: m∘(I⊗u)∘ȷ⁻¹ = I", &right_unit, &id));

        let assoc_l = chain(&[&self.m, &self.m.tensor_map(&id)]);
        let assoc_r = chain(&[&self.m, &id.tensor_map(&self.m)]);
        report.checks.push(check_maps_equal("associativity: m∘(m⊗I) = m∘(I⊗m)", &assoc_l, &assoc_r));

        let commuted = chain(&[&self.m, &braiding(b, b)]);
        report.checks.push(check_maps_equal("commutativity: m∘τ = m", &commuted, &self.m));

        let dm = chain(&[d, &self.m]);
        let leibniz = chain(&[&self.m, &d.tensor_map(&id).add(&id.tensor_map(d))]);
        report.checks.push(check_maps_equal("Leibniz: d∘m = m∘(d⊗I + I⊗d)", &dm, &leibniz));

        let du = chain(&[d, &self.u]);
        let zero = GradedMap::zero(&Space::ground(), b, 1);
        report.checks.push(check_maps_equal("d∘u = 0", &du, &zero));
        report
    }
}

/// A dg-coalgebra `(B, d, Δ, ε)`.
#[derive(Clone, Debug)]
pub struct DgCoalgebra<K> {
    complex: CochainComplex<K>,
    delta: GradedMap<K>,
    counit: GradedMap<K>,
}

impl<K: Scalar> DgCoalgebra<K> {
    pub fn new(complex: CochainComplex<K>, delta: GradedMap<K>, counit: GradedMap<K>) -> Result<Self> {
        let b = complex.space().clone();
        expect_shape("coproduct", &delta, &b, &b.tensor(&b))?;
        expect_shape("counit", &counit, &b, &Space::ground())?;
        Ok(DgCoalgebra { complex, delta, counit })
    }

    pub fn space(&self) -> &Space {
        self.complex.space()
    }

    pub fn complex(&self) -> &CochainComplex<K> {
        &self.complex
    }

    pub fn d(&self) -> &GradedMap<K> {
        self.complex.d()
    }

    pub fn delta(&self) -> &GradedMap<K> {
        &self.delta
    }

    pub fn counit(&self) -> &GradedMap<K> {
        &self.counit
    }

    /// `Δ_{B⊗B} = (I⊗τ⊗I)∘(Δ⊗Δ) : B⊗B → (B⊗B)⊗(B⊗B)`.
    pub fn coproduct_on_tensor_square(&self) -> GradedMap<K> {
        let b = self.space();
        let id = GradedMap::identity(b);
        let tau = braiding(b, b);
        let middle = GradedMap::tensor_all(&[&id, &tau, &id]);
        middle.compose(&self.delta.tensor_map(&self.delta)).expect("shapes agree")
    }

    /// `ε_{B⊗B} = ι_k∘(ε⊗ε) : B⊗B → k`.
    pub fn counit_on_tensor_square(&self) -> GradedMap<K> {
        let fold = unitor_left::<K>(&Space::ground());
        fold.compose(&self.counit.tensor_map(&self.counit)).expect("shapes agree")
    }

    /// The reduced coproduct `Δ̄ = Δ − (u⊗I)∘ι⁻¹ − (I⊗u)∘ȷ⁻¹`, taking the
    /// unit from a companion algebra structure. On `Ker ε` this is the usual
    /// `Δ̄(x) = Δ(x) − u(1)⊗x − x⊗u(1)`.
    pub fn reduced_coproduct(&self, u: &GradedMap<K>) -> GradedMap<K> {
        let b = self.space();
        let id = GradedMap::identity(b);
        let left = chain(&[&u.tensor_map(&id), &unitor_left_inv(b)]);
        let right = chain(&[&id.tensor_map(u), &unitor_right_inv(b)]);
        self.delta.sub(&left).sub(&right)
    }

    /// Axioms: counit laws, coassociativity, the co-Leibniz rule, `ε∘d = 0`.
    pub fn verify(&self) -> Report {
        let b = self.space();
        let mut report = Report::new(format!("dg-coalgebra axioms on {b}"));
        let id = GradedMap::identity(b);
        let d = self.d();

        let left_counit = chain(&[&self.counit.tensor_map(&id), &self.delta]);
        report.checks.push(check_maps_equal(
            "left counit: (ε⊗I)∘Δ = ι⁻¹",
            &left_counit,
            &unitor_left_inv(b),
        ));
        let right_counit = chain(&[&id.tensor_map(&self.counit), &self.delta]);
        report.checks.push(check_maps_equal(
            "right counit: (I⊗ε)∘Δ = ȷ⁻¹",
            &right_counit,
            &unitor_right_inv(b),
        ));

        let coassoc_l = chain(&[&self.delta.tensor_map(&id), &self.delta]);
        let coassoc_r = chain(&[&id.tensor_map(&self.delta), &self.delta]);
        report.checks.push(check_maps_equal(
            "coassociativity: (Δ⊗I)∘Δ = (I⊗Δ)∘Δ",
            &coassoc_l,
            &coassoc_r,
        ));

        let delta_d = chain(&[&self.delta, d]);
        let coleibniz = chain(&[&d.tensor_map(&id).add(&id.tensor_map(d)), &self.delta]);
        report.checks.push(check_maps_equal(
            "co-Leibniz: Δ∘d = (d⊗I + I⊗d)∘Δ",
            &delta_d,
            &coleibniz,
        ));

        let ed = chain(&[&self.counit, d]);
        let zero = GradedMap::zero(b, &Space::ground(), 1);
        report.checks.push(check_maps_equal("ε∘d = 0", &ed, &zero));
        report
    }
}

/// A cdg-bialgebra: compatible algebra and coalgebra structures on one
/// complex.
#[derive(Clone, Debug)]
pub struct CdgBialgebra<K> {
    algebra: CdgAlgebra<K>,
    coalgebra: DgCoalgebra<K>,
}

impl<K: Scalar> CdgBialgebra<K> {
    pub fn new(algebra: CdgAlgebra<K>, coalgebra: DgCoalgebra<K>) -> Result<Self> {
        if algebra.space() != coalgebra.space() {
            return Err(Error::SpaceMismatch {
                context: "bialgebra parts",
                expected: algebra.space().to_string(),
                found: coalgebra.space().to_string(),
            });
        }
        if algebra.d() != coalgebra.d() {
            return Err(Error::NotABialgebra(
                "algebra and coalgebra differentials differ".into(),
            ));
        }
        Ok(CdgBialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &CdgAlgebra<K> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &DgCoalgebra<K> {
        &self.coalgebra
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn d(&self) -> &GradedMap<K> {
        self.algebra.d()
    }

    pub fn m(&self) -> &GradedMap<K> {
        self.algebra.m()
    }

    pub fn u(&self) -> &GradedMap<K> {
        self.algebra.u()
    }

    pub fn delta(&self) -> &GradedMap<K> {
        self.coalgebra.delta()
    }

    pub fn counit(&self) -> &GradedMap<K> {
        self.coalgebra.counit()
    }

    /// Both sets of axioms plus the compatibilities making `u` and `m`
    /// coalgebra maps.
    pub fn verify(&self) -> Report {
        let b = self.space();
        let mut report = Report::new(format!("cdg-bialgebra axioms on {b}"));
        report.absorb("algebra", self.algebra.verify());
        report.absorb("coalgebra", self.coalgebra.verify());

        let delta_m = chain(&[self.delta(), self.m()]);
        let m_sq_delta = chain(&[
            &self.algebra.product_on_tensor_square(),
            &self.delta().tensor_map(self.delta()),
        ]);
        report.checks.push(check_maps_equal(
            "compatibility: Δ∘m = m_{B⊗B}∘(Δ⊗Δ)",
            &delta_m,
            &m_sq_delta,
        ));

        let eps_m = chain(&[self.counit(), self.m()]);
        report.checks.push(check_maps_equal(
            "compatibility: ε∘m = ε_{B⊗B}",
            &eps_m,
            &self.coalgebra.counit_on_tensor_square(),
        ));

        let delta_u = chain(&[self.delta(), self.u()]);
        report.checks.push(check_maps_equal(
            "compatibility: Δ∘u = u_{B⊗B}",
            &delta_u,
            &self.algebra.unit_on_tensor_square(),
        ));

        let eps_u = chain(&[self.counit(), self.u()]);
        report.checks.push(check_maps_equal(
            "compatibility: ε∘u = I_k",
            &eps_u,
            &GradedMap::identity(&Space::ground()),
        ));
        report
    }
}

/// A cdg-Hopf algebra: a bialgebra with its antipode.
#[derive(Clone, Debug)]
pub struct CdgHopf<K> {
    bialgebra: CdgBialgebra<K>,
    antipode: GradedMap<K>,
}

impl<K: Scalar> CdgHopf<K> {
    pub fn new(bialgebra: CdgBialgebra<K>, antipode: GradedMap<K>) -> Result<Self> {
        let b = bialgebra.space().clone();
        expect_shape("antipode", &antipode, &b, &b)?;
        Ok(CdgHopf { bialgebra, antipode })
    }

    pub fn bialgebra(&self) -> &CdgBialgebra<K> {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &CdgAlgebra<K> {
        self.bialgebra.algebra()
    }

    pub fn coalgebra(&self) -> &DgCoalgebra<K> {
        self.bialgebra.coalgebra()
    }

    pub fn space(&self) -> &Space {
        self.bialgebra.space()
    }

    pub fn d(&self) -> &GradedMap<K> {
        self.bialgebra.d()
    }

    pub fn m(&self) -> &GradedMap<K> {
        self.bialgebra.m()
    }

    pub fn u(&self) -> &GradedMap<K> {
        self.bialgebra.u()
    }

    pub fn delta(&self) -> &GradedMap<K> {
        self.bialgebra.delta()
    }

    pub fn counit(&self) -> &GradedMap<K> {
        self.bialgebra.counit()
    }

    pub fn antipode(&self) -> &GradedMap<K> {
        &self.antipode
    }

    /// The convolution unit `e = u∘ε : B → B`.
    pub fn unit_counit(&self) -> GradedMap<K> {
        chain(&[self.u(), self.counit()])
    }

    /// Bialgebra axioms plus both sides of the antipode axiom.
    pub fn verify(&self) -> Report {
        let mut report = self.bialgebra.verify();
        report.subject = format!("cdg-Hopf axioms on {}", self.space());
        let id = GradedMap::identity(self.space());
        let e = self.unit_counit();
        let left = chain(&[self.m(), &self.antipode.tensor_map(&id), self.delta()]);
        report.checks.push(check_maps_equal("antipode: m∘(ς⊗I)∘Δ = u∘ε", &left, &e));
        let right = chain(&[self.m(), &id.tensor_map(&self.antipode), self.delta()]);
        report.checks.push(check_maps_equal("antipode: m∘(I⊗ς)∘Δ = u∘ε", &right, &e));
        report
    }
}

/// One of the four structure levels the CLI can verify.
#[derive(Clone, Debug)]
pub enum Structure<K> {
    Algebra(CdgAlgebra<K>),
    Coalgebra(DgCoalgebra<K>),
    Bialgebra(CdgBialgebra<K>),
    Hopf(CdgHopf<K>),
}

impl<K: Scalar> Structure<K> {
    pub fn space(&self) -> &Space {
        match self {
            Structure::Algebra(a) => a.space(),
            Structure::Coalgebra(c) => c.space(),
            Structure::Bialgebra(b) => b.space(),
            Structure::Hopf(h) => h.space(),
        }
    }

    pub fn d(&self) -> &GradedMap<K> {
        match self {
            Structure::Algebra(a) => a.d(),
            Structure::Coalgebra(c) => c.d(),
            Structure::Bialgebra(b) => b.d(),
            Structure::Hopf(h) => h.d(),
        }
    }

    pub fn as_algebra(&self) -> Option<&CdgAlgebra<K>> {
        match self {
            Structure::Algebra(a) => Some(a),
            Structure::Bialgebra(b) => Some(b.algebra()),
            Structure::Hopf(h) => Some(h.algebra()),
            Structure::Coalgebra(_) => None,
        }
    }

    pub fn as_coalgebra(&self) -> Option<&DgCoalgebra<K>> {
        match self {
            Structure::Coalgebra(c) => Some(c),
            Structure::Bialgebra(b) => Some(b.coalgebra()),
            Structure::Hopf(h) => Some(h.coalgebra()),
            Structure::Algebra(_) => None,
        }
    }

    pub fn as_bialgebra(&self) -> Option<&CdgBialgebra<K>> {
        match self {
            Structure::Bialgebra(b) => Some(b),
            Structure::Hopf(h) => Some(h.bialgebra()),
            _ => None,
        }
    }

    pub fn as_hopf(&self) -> Option<&CdgHopf<K>> {
        match self {
            Structure::Hopf(h) => Some(h),
            _ => None,
        }
    }
}

/// Verify the axioms of whichever structure level is present.
pub fn verify_structure<K: Scalar>(structure: &Structure<K>) -> Report {
    match structure {
        Structure::Algebra(a) => a.verify(),
        Structure::Coalgebra(c) => c.verify(),
        Structure::Bialgebra(b) => b.verify(),
        Structure::Hopf(h) => h.verify(),
    }
}

/// Solve both sides of the antipode axiom for `ς`. The antipode of a
/// bialgebra is unique when it exists; inconsistent systems (e.g. a
/// perturbed coproduct) come back as [`Error::NoSolution`].
pub fn solve_antipode<K: Scalar>(b: &CdgBialgebra<K>) -> Result<GradedMap<K>> {
    let space = b.space().clone();
    let id = GradedMap::identity(&space);
    let e = chain(&[b.u(), b.counit()]);
    let shape = MapShape { source: space.clone(), target: space, degree: 0 };
    let solution = solve_linear_maps(&[shape], &[e.clone(), e], |unknown| {
        let s = &unknown[0];
        vec![
            chain(&[b.m(), &s.tensor_map(&id), b.delta()]),
            chain(&[b.m(), &id.tensor_map(s), b.delta()]),
        ]
    });
    solution.map(|mut v| v.remove(0)).ok_or(Error::NoSolution { context: "antipode" })
}

/// The antipode consequences of Eq. `antialgandcoalg`: `ς` is an algebra
/// morphism, an anti-morphism of coalgebras, and a cochain map.
pub fn verify_antipode_properties<K: Scalar>(h: &CdgHopf<K>) -> Report {
    let b = h.space();
    let s = h.antipode();
    let mut report = Report::new(format!("antipode properties on {b}"));

    let su = chain(&[s, h.u()]);
    report.checks.push(check_maps_equal("ς∘u = u", &su, h.u()));

    let sm = chain(&[s, h.m()]);
    let mss = chain(&[h.m(), &s.tensor_map(s)]);
    report.checks.push(check_maps_equal("ς∘m = m∘(ς⊗ς)", &sm, &mss));

    let es = chain(&[h.counit(), s]);
    report.checks.push(check_maps_equal("ε∘ς = ε", &es, h.counit()));

    let ds = chain(&[h.delta(), s]);
    let tssd = chain(&[&braiding(b, b), &s.tensor_map(s), h.delta()]);
    report.checks.push(check_maps_equal("Δ∘ς = τ∘(ς⊗ς)∘Δ", &ds, &tssd));

    let d = h.d();
    let dsig = chain(&[d, s]);
    let sigd = chain(&[s, d]);
    report.checks.push(check_maps_equal("d∘ς = ς∘d", &dsig, &sigd));
    report
}

/// Morphism levels, mirroring the structure levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

/// Verify that `f` is a morphism of the requested kind between the given
/// structures. Fails with [`Error::MissingStructure`] if either side lacks
/// the needed data, and with a degree/space error for ill-shaped `f`.
pub fn verify_morphism<K: Scalar>(
    kind: MorphismKind,
    f: &GradedMap<K>,
    source: &Structure<K>,
    target: &Structure<K>,
) -> Result<Report> {
    expect_shape("morphism", f, source.space(), target.space())?;
    let mut report = Report::new(format!(
        "{:?} morphism {} → {}",
        kind,
        source.space(),
        target.space()
    ));
    let cochain = hom_differential(f, source.d(), target.d())?;
    report.checks.push(check_maps_equal(
        "cochain map: d′∘f = f∘d",
        &chain(&[target.d(), f]),
        &chain(&[f, source.d()]),
    ));
    debug_assert_eq!(cochain.is_zero(), report.checks.last().unwrap().pass);

    let need_algebra = matches!(kind, MorphismKind::Algebra | MorphismKind::Bialgebra | MorphismKind::Hopf);
    let need_coalgebra =
        matches!(kind, MorphismKind::Coalgebra | MorphismKind::Bialgebra | MorphismKind::Hopf);

    if need_algebra {
        let (sa, ta) = match (source.as_algebra(), target.as_algebra()) {
            (Some(sa), Some(ta)) => (sa, ta),
            _ => return Err(Error::MissingStructure { context: "verify_morphism", needed: "algebra" }),
        };
        report.checks.push(check_maps_equal("f∘u = u′", &chain(&[f, sa.u()]), ta.u()));
        report.checks.push(check_maps_equal(
            "f∘m = m′∘(f⊗f)",
            &chain(&[f, sa.m()]),
            &chain(&[ta.m(), &f.tensor_map(f)]),
        ));
    }
    if need_coalgebra {
        let (sc, tc) = match (source.as_coalgebra(), target.as_coalgebra()) {
            (Some(sc), Some(tc)) => (sc, tc),
            _ => {
                return Err(Error::MissingStructure { context: "verify_morphism", needed: "coalgebra" })
            }
        };
        report.checks.push(check_maps_equal("ε′∘f = ε", &chain(&[tc.counit(), f]), sc.counit()));
        report.checks.push(check_maps_equal(
            "Δ′∘f = (f⊗f)∘Δ",
            &chain(&[tc.delta(), f]),
            &chain(&[&f.tensor_map(f), sc.delta()]),
        ));
    }
    if kind == MorphismKind::Hopf {
        let (sh, th) = match (source.as_hopf(), target.as_hopf()) {
            (Some(sh), Some(th)) => (sh, th),
            _ => return Err(Error::MissingStructure { context: "verify_morphism", needed: "antipode" }),
        };
        report.checks.push(check_maps_equal(
            "f∘ς = ς′∘f",
            &chain(&[f, sh.antipode()]),
            &chain(&[th.antipode(), f]),
        ));
    }
    Ok(report)
}

/// `m⁽ⁿ⁾ : B^{⊗n} → B` with `m⁽¹⁾ = I`, `m⁽ⁿ⁺¹⁾ = m∘(m⁽ⁿ⁾⊗I)`.
pub fn iterated_product<K: Scalar>(a: &CdgAlgebra<K>, n: usize) -> Result<GradedMap<K>> {
    assert!(n >= 1, "iterated product needs n ≥ 1");
    guard_tensor_dim("iterated product", a.space().total_dim(), n)?;
    let id = GradedMap::identity(a.space());
    let mut acc = id.clone();
    for _ in 1..n {
        acc = a.m().compose(&acc.tensor_map(&id)).expect("shapes agree");
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoproductVariant {
    /// `Δ⁽ⁿ⁾ : B → B^{⊗n}`.
    Plain,
    /// `Δ̄⁽ⁿ⁾ : B → B^{⊗n}` built from the reduced coproduct; needs a unit.
    Reduced,
    /// `Δ⁽ⁿ⁾_{B⊗B} : B⊗B → B^{⊗2n}` for the tensor-square coalgebra.
    OnTensorSquare,
}

/// Iterated coproducts, `Δ⁽¹⁾ = I`, `Δ⁽ⁿ⁺¹⁾ = (Δ⁽ⁿ⁾⊗I)∘Δ`. The `Reduced`
/// variant iterates `Δ̄` and needs the algebra unit; pass it via `unit`.
pub fn iterated_coproduct<K: Scalar>(
    c: &DgCoalgebra<K>,
    n: usize,
    variant: CoproductVariant,
    unit: Option<&GradedMap<K>>,
) -> Result<GradedMap<K>> {
    assert!(n >= 1, "iterated coproduct needs n ≥ 1");
    let b = c.space();
    match variant {
        CoproductVariant::Plain => {
            guard_tensor_dim("iterated coproduct", b.total_dim(), n)?;
            let id = GradedMap::identity(b);
            let mut acc = id.clone();
            for _ in 1..n {
                acc = acc.tensor_map(&id).compose(c.delta()).expect("shapes agree");
            }
            Ok(acc)
        }
        CoproductVariant::Reduced => {
            let u = unit.ok_or(Error::MissingStructure {
                context: "reduced iterated coproduct",
                needed: "algebra unit",
            })?;
            guard_tensor_dim("iterated coproduct", b.total_dim(), n)?;
            let reduced = c.reduced_coproduct(u);
            let id = GradedMap::identity(b);
            let mut acc = id.clone();
            for _ in 1..n {
                acc = acc.tensor_map(&id).compose(&reduced).expect("shapes agree");
            }
            Ok(acc)
        }
        CoproductVariant::OnTensorSquare => {
            guard_tensor_dim("iterated coproduct", b.total_dim(), 2 * n)?;
            let sq = b.tensor(b);
            let delta_sq = c.coproduct_on_tensor_square();
            let id = GradedMap::identity(&sq);
            let mut acc = id.clone();
            for _ in 1..n {
                acc = acc.tensor_map(&id).compose(&delta_sq).expect("shapes agree");
            }
            Ok(acc)
        }
    }
}

/// The conilpotency filtration `0 = B̄₀ ⊆ B̄₁ ⊆ …` of `B̄ = Ker ε`.
pub struct ConilpotencyFiltration<K> {
    /// `layers[n] = B̄ₙ`; `layers[0]` is the zero subspace.
    pub layers: Vec<Subspace<K>>,
    /// Smallest `n` with `B̄ₙ = B̄`, or `None` if the filtration stalls.
    pub index: Option<usize>,
}

/// Compute the filtration `B̄ₙ = Ker Δ̄⁽ⁿ⁺¹⁾ ∩ Ker ε`.
pub fn conilpotency_filtration<K: Scalar>(
    c: &DgCoalgebra<K>,
    u: &GradedMap<K>,
) -> Result<ConilpotencyFiltration<K>> {
    let b = c.space();
    let kbar = kernel_of_maps(&[c.counit()]);
    let mut layers = vec![Subspace::empty(b)];
    if kbar.total_dim() == 0 {
        return Ok(ConilpotencyFiltration { layers, index: Some(0) });
    }
    let bound = kbar.total_dim() + 1;
    let mut index = None;
    for n in 1..=bound {
        let power = iterated_coproduct(c, n + 1, CoproductVariant::Reduced, Some(u))?;
        let layer = kernel_of_maps(&[&power, c.counit()]);
        let done = layer.equals(&kbar);
        layers.push(layer);
        if done {
            index = Some(n);
            break;
        }
    }
    Ok(ConilpotencyFiltration { layers, index })
}

impl<K: Scalar> ConilpotencyFiltration<K> {
    /// Verify nestedness, `d`-stability of each layer, and the coproduct
    /// inclusion `Δ̄(B̄ₙ) ⊆ Σ_{r=1}^{n−1} B̄ᵣ⊗B̄_{n−r}`.
    pub fn verify(&self, c: &DgCoalgebra<K>, u: &GradedMap<K>) -> Report {
        let b = c.space();
        let mut report = Report::new(format!("conilpotency filtration on {b}"));
        report.push(
            format!("index = {:?}", self.index),
            self.index.is_some(),
        );
        let reduced = c.reduced_coproduct(u);
        let joint = reduced.target_basis().clone();
        for n in 1..self.layers.len() {
            let layer = &self.layers[n];
            report.push(
                format!("B̄_{} ⊆ B̄_{}", n - 1, n),
                self.layers[n - 1].is_contained_in(layer),
            );
            let d_stable = layer.vectors().iter().all(|v| layer.contains(&c.d().apply(v)));
            report.push(format!("d(B̄_{n}) ⊆ B̄_{n}"), d_stable);
            let mut span = Subspace::empty(reduced.target());
            for r in 1..n {
                span = span.sum(&self.layers[r].tensor_span(&self.layers[n - r], &joint));
            }
            let included = layer.vectors().iter().all(|v| span.contains(&reduced.apply(v)));
            report.push(
                format!("Δ̄(B̄_{n}) ⊆ Σ_{{r=1}}^{{{}}} B̄_r⊗B̄_{{{n}−r}}", n - 1),
                included,
            );
        }
        report
    }
}
