//! Bosonization `𝓗 = R#H` of a graded Hopf algebra `R` in Yetter–Drinfeld
//! modules over `H`, scalar cocycles on `𝓗` satisfying the reduction
//! `σ(r⊗h, r'⊗h') = σ(r⊗1, h·r'⊗1)ε(h')`, the maps `Φ: Z(R) → Z'(𝓗)` and
//! `Ψ: C(R) → C'(𝓗)`, cocycle deformation `𝓗_σ` and its associated graded.

use std::sync::Arc;

use crate::braidmod::{
    check_comodule_algebra, module_morphism_sides, Ambient, ComoduleAlgebra, Measuring, Module,
    YdModule,
};
use crate::cleft::{functor_f, section_cocycle, CleftExtension};
use crate::cocycle::Cocycle;
use crate::error::{Error, Result};
use crate::hopfcore::{
    check_hopf, convolution, convolution_inverse, iterated_comul, Algebra, Bialgebra, Coalgebra,
    HopfAlgebra,
};
use crate::linspace::{format_vector, inverse, LinearMap, TensorSpace};
use crate::oracle::{enumerate_cocycles, gauge_equivalence};
use crate::report::Report;

pub const EQ_8: &str = "Eq. (8) σ(r⊗h, r'⊗h') = σ(r⊗1, h·r'⊗1)ε(h')";
pub const EQ_9: &str = "Eq. (9) γ((1⊗h)(r⊗h')(1⊗h'')) = γ(1⊗h)γ(r⊗h')γ(1⊗h'')";
pub const COCYCLE_IDENTITY: &str = "σ(x1,y1)σ(x2y2,z) = σ(y1,z1)σ(x,y2z2)";
pub const SCALAR_INVERTIBLE: &str = "σ convolution invertible";

/// A Hopf algebra `R` in Yetter–Drinfeld modules over `H` with a grading
/// `R = ⊕ R_(k)` by basis element.
#[derive(Debug, Clone)]
pub struct GradedYdHopf {
    pub r: Arc<HopfAlgebra>,
    pub grading: Vec<usize>,
    /// Recorded hypothesis on `H`; not verified.
    pub cosemisimple: bool,
}

/// Checks that every nonzero entry of `map` goes from a basis element of
/// degree `d` to one of degree `d`, with degrees given per side.
fn homogeneous(
    map: &LinearMap,
    src: impl Fn(usize) -> usize,
    tgt: impl Fn(usize) -> usize,
) -> Option<String> {
    map.entries()
        .find(|&(i, j, _)| src(j) != tgt(i))
        .map(|(i, j, _)| {
            format!(
                "{} -> {} (degree {} -> {})",
                map.source().label(j),
                map.target().label(i),
                src(j),
                tgt(i)
            )
        })
}

impl GradedYdHopf {
    /// Validates the Hopf axioms, connectedness `R_(0) = 𝕜1`, and that the
    /// structure maps, action and coaction respect the grading.
    pub fn new(r: Arc<HopfAlgebra>, grading: Vec<usize>, cosemisimple: bool) -> Result<Self> {
        if r.ambient().hopf().is_none() {
            return Err(Error::Validation(
                "R must live over an ambient Hopf algebra H".into(),
            ));
        }
        if grading.len() != r.space().dim() {
            return Err(Error::shape("grading", r.space().dim(), grading.len()));
        }
        let g = GradedYdHopf {
            r,
            grading,
            cosemisimple,
        };
        let mut rep = check_hopf(&g.r);
        rep.absorb("", g.check_grading());
        if let Some(bad) = rep.failures().next() {
            return Err(Error::AxiomFailure {
                relation: bad.name.clone(),
                witness: bad.witness.clone().unwrap_or_default(),
            });
        }
        Ok(g)
    }

    /// The trivial `R = 𝕜` over `h`.
    pub fn trivial(h: Arc<HopfAlgebra>) -> Result<Self> {
        let field = h.field();
        let amb = Ambient::over(h)?;
        let bialg = Bialgebra::new(
            "1",
            Algebra::unit_algebra(field),
            Coalgebra::unit_coalgebra(field),
            YdModule::unit(amb),
        )?;
        GradedYdHopf::new(Arc::new(HopfAlgebra::new(bialg, None)?), vec![0], true)
    }

    pub fn ambient(&self) -> Arc<HopfAlgebra> {
        self.r
            .ambient()
            .hopf()
            .expect("checked on construction")
            .clone()
    }

    pub fn check_grading(&self) -> Report {
        let r = &self.r;
        let d = r.space().dim();
        let deg = |i: usize| self.grading[i];
        let deg2 = |i: usize| self.grading[i / d] + self.grading[i % d];
        let deg_kr = |i: usize| self.grading[i % d];
        let mut rep = Report::new(format!("grading of {}", r.name));
        let zero: Vec<usize> = (0..d).filter(|&i| deg(i) == 0).collect();
        let unit_col = r.alg.unit.column(0);
        if zero.len() == 1 && unit_col.len() == 1 && unit_col[0].0 == zero[0] {
            rep.pass("R_(0) = 𝕜1");
        } else {
            rep.fail("R_(0) = 𝕜1", format!("degree-0 basis {zero:?}"));
        }
        let checks: [(&str, Option<String>); 5] = [
            (
                "μ_R respects the grading",
                homogeneous(&r.alg.mul, deg2, deg),
            ),
            (
                "Δ_R respects the grading",
                homogeneous(&r.coalg.comul, deg, deg2),
            ),
            (
                "S_R respects the grading",
                homogeneous(&r.antipode, deg, deg),
            ),
            (
                "H-action preserves degree",
                homogeneous(&r.module().action, deg_kr, deg),
            ),
            (
                "H-coaction preserves degree",
                homogeneous(&r.yd.coaction, deg, deg_kr),
            ),
        ];
        for (name, bad) in checks {
            match bad {
                None => rep.pass(name),
                Some(w) => rep.fail(name, w),
            }
        }
        rep
    }
}

/// The classical Hopf algebra `𝓗 = R#H` on `R⊗H` with `𝓗_(k) = R_(k)⊗H`.
#[derive(Debug, Clone)]
pub struct Bosonization {
    pub hopf: Arc<HopfAlgebra>,
    pub r: Arc<HopfAlgebra>,
    pub h: Arc<HopfAlgebra>,
    /// Degree of each basis element `r⊗h` of `𝓗`.
    pub grading: Vec<usize>,
}

impl Bosonization {
    fn kr(&self) -> usize {
        self.r.arity()
    }

    fn kh(&self) -> usize {
        self.h.arity()
    }

    /// `j: H → 𝓗`, `h ↦ 1⊗h`.
    pub fn j_h(&self) -> Result<LinearMap> {
        LinearMap::identity(self.h.space()).then(&self.r.alg.unit, 0)
    }

    /// `r ↦ r⊗1`.
    pub fn j_r(&self) -> Result<LinearMap> {
        LinearMap::identity(self.r.space()).then(&self.h.alg.unit, self.kr())
    }

    /// Maximal degree of a basis element.
    pub fn top_degree(&self) -> usize {
        self.grading.iter().copied().max().unwrap_or(0)
    }
}

/// Builds `R#H` with `μ(r⊗h, r'⊗h') = r(h1·r')⊗h2h'`,
/// `Δ(r⊗h) = (r1⊗r2(-1)h1)⊗(r2(0)⊗h2)`, and checks the antipode against
/// `(η_Rε_R⊗S_H) ∗ (S_R⊗η_Hε_H)`, the Hopf axioms and the grading.
pub fn bosonize(g: &GradedYdHopf) -> Result<Bosonization> {
    let r = g.r.clone();
    let h = g.ambient();
    let (kr, kh) = (r.arity(), h.arity());
    let rh = r.space().tensor(h.space());
    let action = &r.module().action;
    let mul = LinearMap::identity(&TensorSpace::power(&rh, 2))
        .then(&h.coalg.comul, kr)?
        .then_permute_blocks(kr + kh, &[kh, kr], &[1, 0])?
        .then(action, kr)?
        .then(&r.alg.mul, 0)?
        .then(&h.alg.mul, kr)?;
    let unit = r.alg.unit.tensor(&h.alg.unit)?;
    let comul = LinearMap::identity(&rh)
        .then(&r.coalg.comul, 0)?
        .then(&r.yd.coaction, kr)?
        .then(&h.coalg.comul, 2 * kr + kh)?
        .then_permute_blocks(kr, &[kh, kr, kh], &[0, 2, 1])?
        .then(&h.alg.mul, kr)?;
    let counit = LinearMap::identity(&rh)
        .then(&r.coalg.counit, 0)?
        .then(&h.coalg.counit, 0)?;
    let name = format!("{}#{}", r.name, h.name);
    let hopf = HopfAlgebra::classical(
        name,
        Algebra::new(mul, unit)?,
        Coalgebra::new(comul, counit)?,
        None,
    )
    .map_err(|e| match e {
        Error::NotHopf(n) => Error::AxiomFailure {
            relation: "R#H has an antipode".into(),
            witness: n,
        },
        other => other,
    })?;
    let dh = h.space().dim();
    let grading = (0..rh.dim()).map(|i| g.grading[i / dh]).collect();
    let b = Bosonization {
        hopf: Arc::new(hopf),
        r,
        h,
        grading,
    };
    let rep = check_bosonization(&b);
    if let Some(bad) = rep.failures().next() {
        return Err(Error::AxiomFailure {
            relation: format!("bosonization: {}", bad.name),
            witness: bad.witness.clone().unwrap_or_default(),
        });
    }
    Ok(b)
}

/// Hopf axioms of `𝓗`, the antipode formula, and the Hopf grading.
pub fn check_bosonization(b: &Bosonization) -> Report {
    let (r, h) = (&b.r, &b.h);
    let kr = b.kr();
    let mut rep = check_hopf(&b.hopf);
    rep.check_result(
        "S = (η_Rε_R⊗S_H) ∗ (S_R⊗η_Hε_H)",
        (|| {
            let id = LinearMap::identity(b.hopf.space());
            let f1 = id
                .then(&r.coalg.counit, 0)?
                .then(&h.antipode, 0)?
                .then(&r.alg.unit, 0)?;
            let f2 = id
                .then(&h.coalg.counit, kr)?
                .then(&r.antipode, 0)?
                .then(&h.alg.unit, kr)?;
            Ok((
                b.hopf.antipode.clone(),
                convolution(&f1, &f2, &b.hopf.coalg, &b.hopf.alg)?,
            ))
        })(),
    );
    let n = b.hopf.space().dim();
    let deg = |i: usize| b.grading[i];
    let deg2 = |i: usize| b.grading[i / n] + b.grading[i % n];
    for (name, bad) in [
        (
            "μ(𝓗_(k)⊗𝓗_(l)) ⊆ 𝓗_(k+l)",
            homogeneous(&b.hopf.alg.mul, deg2, deg),
        ),
        (
            "Δ(𝓗_(k)) ⊆ ⊕_{i+j=k} 𝓗_(i)⊗𝓗_(j)",
            homogeneous(&b.hopf.coalg.comul, deg, deg2),
        ),
        ("S(𝓗_(k)) ⊆ 𝓗_(k)", homogeneous(&b.hopf.antipode, deg, deg)),
    ] {
        match bad {
            None => rep.pass(name),
            Some(w) => rep.fail(name, w),
        }
    }
    rep
}

fn check_scalar_shape(hopf: &HopfAlgebra, sigma: &LinearMap) -> Result<()> {
    let src = TensorSpace::power(hopf.space(), 2);
    let one = TensorSpace::unit(hopf.field());
    if sigma.source() != &src || sigma.target() != &one {
        return Err(Error::shape(
            "scalar cocycle",
            format!("{src} -> {one}"),
            format!("{} -> {}", sigma.source(), sigma.target()),
        ));
    }
    Ok(())
}

/// Invertibility, unitality and the classical cocycle identity for
/// `σ: 𝓗⊗𝓗 → 𝕜` on a classical Hopf algebra.
pub fn check_classical_cocycle(hopf: &HopfAlgebra, sigma: &LinearMap) -> Result<Report> {
    check_scalar_shape(hopf, sigma)?;
    let k = hopf.arity();
    let mut rep = Report::new(format!("classical cocycle on {}", hopf.name));
    let sq = hopf.tensor_square_coalgebra()?;
    match convolution_inverse(sigma, &sq, &Algebra::unit_algebra(hopf.field())) {
        Ok(_) => rep.pass(SCALAR_INVERTIBLE),
        Err(e) => rep.fail(SCALAR_INVERTIBLE, e.to_string()),
    }
    let id = LinearMap::identity(hopf.space());
    rep.check_result(
        "σ(1,x) = ε(x)",
        (|| {
            Ok((
                id.then(&hopf.alg.unit, 0)?.then(sigma, 0)?,
                hopf.coalg.counit.clone(),
            ))
        })(),
    );
    rep.check_result(
        "σ(x,1) = ε(x)",
        (|| {
            Ok((
                id.then(&hopf.alg.unit, k)?.then(sigma, 0)?,
                hopf.coalg.counit.clone(),
            ))
        })(),
    );
    rep.check_result(
        COCYCLE_IDENTITY,
        (|| {
            let (d, m) = (&hopf.coalg.comul, &hopf.alg.mul);
            let id3 = LinearMap::identity(&TensorSpace::power(hopf.space(), 3));
            let lhs = id3
                .then(d, 0)?
                .then(d, 2 * k)?
                .then_permute_blocks(k, &[k, k], &[1, 0])?
                .then(sigma, 0)?
                .then(m, 0)?
                .then(sigma, 0)?;
            let rhs = id3
                .then(d, k)?
                .then(d, 3 * k)?
                .then_permute_blocks(k, &[k, k, k], &[0, 2, 1])?
                .then(sigma, k)?
                .then(m, k)?
                .then(sigma, 0)?;
            Ok((lhs, rhs))
        })(),
    );
    Ok(rep)
}

/// A scalar cocycle candidate on `𝓗` with its membership flags.
#[derive(Debug, Clone)]
pub struct ScalarCocycleH {
    pub sigma: LinearMap,
    pub sigma_inv: Option<LinearMap>,
    /// `σ ∈ Z(𝓗)`.
    pub in_z: bool,
    /// `σ ∈ Z'(𝓗)`.
    pub in_zprime: bool,
    pub report: Report,
}

/// `(r⊗h, r'⊗h') ↦ τ(r⊗1, h·r'⊗1)ε(h')` for `τ` on `𝓗⊗𝓗`.
fn reduced(b: &Bosonization, tau: &LinearMap) -> Result<LinearMap> {
    let (kr, kh) = (b.kr(), b.kh());
    LinearMap::identity(&TensorSpace::power(b.hopf.space(), 2))
        .then(&b.h.coalg.counit, 2 * kr + kh)?
        .then(&b.r.module().action, kr)?
        .then(&b.h.alg.unit, kr)?
        .then(&b.h.alg.unit, 2 * kr + kh)?
        .then(tau, 0)
}

/// `(r⊗h, r'⊗h') ↦ π(r, h·r')ε(h')` for `π` on `R⊗R`.
fn phi_map(b: &Bosonization, pi: &LinearMap) -> Result<LinearMap> {
    let (kr, kh) = (b.kr(), b.kh());
    LinearMap::identity(&TensorSpace::power(b.hopf.space(), 2))
        .then(&b.h.coalg.counit, 2 * kr + kh)?
        .then(&b.r.module().action, kr)?
        .then(pi, 0)
}

/// Checks `σ ∈ Z(𝓗)` and `Eq. (8)`; for members of `Z'(𝓗)` also the four
/// consequences
/// `σ(r⊗h, r'⊗h') = σ(r⊗h, r'⊗1)ε(h')`,
/// `σ(r⊗h, 1⊗h') = ε(r)ε(h)ε(h')`, `σ(1⊗h, r⊗h') = ε(r)ε(h)ε(h')`, and
/// `σ^{-1}(r⊗h, r'⊗h') = σ^{-1}(r⊗1, h·r'⊗1)ε(h')`.
pub fn check_zprime(b: &Bosonization, sigma: &LinearMap) -> Result<ScalarCocycleH> {
    let hopf = &b.hopf;
    let mut report = check_classical_cocycle(hopf, sigma)?;
    let in_z = report.all_passed();
    report.check_result(EQ_8, (|| Ok((sigma.clone(), reduced(b, sigma)?)))());
    let in_zprime = in_z && report.passed(EQ_8);
    let sq = hopf.tensor_square_coalgebra()?;
    let sigma_inv = convolution_inverse(sigma, &sq, &Algebra::unit_algebra(hopf.field())).ok();
    if in_zprime {
        let inv = sigma_inv.clone().expect("invertibility checked");
        let (kr, kh) = (b.kr(), b.kh());
        let (r, h) = (&b.r, &b.h);
        let eps_all = |space: &TensorSpace, order: &[&LinearMap]| -> Result<LinearMap> {
            let mut m = LinearMap::identity(space);
            for e in order {
                m = m.then(e, 0)?;
            }
            Ok(m)
        };
        let mut derived = Report::new("derived");
        derived.check_result(
            "σ(r⊗h, r'⊗h') = σ(r⊗h, r'⊗1)ε(h')",
            (|| {
                let rhs = LinearMap::identity(sigma.source())
                    .then(&h.coalg.counit, 2 * kr + kh)?
                    .then(&h.alg.unit, 2 * kr + kh)?
                    .then(sigma, 0)?;
                Ok((sigma.clone(), rhs))
            })(),
        );
        let rhh = r.space().tensor(&TensorSpace::power(h.space(), 2));
        derived.check_result(
            "σ(r⊗h, 1⊗h') = ε(r)ε(h)ε(h')",
            (|| {
                let lhs = LinearMap::identity(&rhh)
                    .then(&r.alg.unit, kr + kh)?
                    .then(sigma, 0)?;
                Ok((
                    lhs,
                    eps_all(&rhh, &[&r.coalg.counit, &h.coalg.counit, &h.coalg.counit])?,
                ))
            })(),
        );
        let hrh = h.space().tensor(r.space()).tensor(h.space());
        derived.check_result(
            "σ(1⊗h, r⊗h') = ε(r)ε(h)ε(h')",
            (|| {
                let lhs = LinearMap::identity(&hrh)
                    .then(&r.alg.unit, 0)?
                    .then(sigma, 0)?;
                Ok((
                    lhs,
                    eps_all(&hrh, &[&h.coalg.counit, &r.coalg.counit, &h.coalg.counit])?,
                ))
            })(),
        );
        derived.check_result(
            "σ^{-1}(r⊗h, r'⊗h') = σ^{-1}(r⊗1, h·r'⊗1)ε(h')",
            (|| Ok((inv.clone(), reduced(b, &inv)?)))(),
        );
        if let Some(bad) = derived.failures().next() {
            return Err(Error::TheoremViolation(format!(
                "σ ∈ Z'(𝓗) but {} fails: {}",
                bad.name,
                bad.witness.clone().unwrap_or_default()
            )));
        }
        report.absorb("derived", derived);
    }
    Ok(ScalarCocycleH {
        sigma: sigma.clone(),
        sigma_inv,
        in_z,
        in_zprime,
        report,
    })
}

fn same_r(b: &Bosonization, m: &Measuring) -> Result<()> {
    if m.hopf.space() != b.r.space() || m.space().dim() != 1 {
        return Err(Error::BaseMismatch(format!(
            "expected a cocycle R⊗R → 𝕜 over {}, got one over {} with values in {}",
            b.r.name,
            m.hopf.name,
            m.space()
        )));
    }
    Ok(())
}

/// `Φ(π)(r⊗h, r'⊗h') = π(r, h·r')ε(h')`, verified to lie in `Z'(𝓗)` with
/// inverse `π^{-1}(r, h·r')ε(h')`.
pub fn phi(b: &Bosonization, pi: &Cocycle) -> Result<ScalarCocycleH> {
    same_r(b, &pi.measuring)?;
    let one = TensorSpace::unit(b.hopf.field());
    let to_scalar = |m: &LinearMap| m.reinterpret(m.source().clone(), one.clone());
    let sigma = phi_map(b, &to_scalar(&pi.sigma)?)?;
    let inv = phi_map(b, &to_scalar(&pi.sigma_inv)?)?;
    let s = check_zprime(b, &sigma)?;
    if !s.in_zprime {
        let bad = s
            .report
            .failures()
            .next()
            .map(|c| c.name.clone())
            .unwrap_or_default();
        return Err(Error::TheoremViolation(format!("Φ(π) ∉ Z'(𝓗): {bad}")));
    }
    if s.sigma_inv.as_ref() != Some(&inv) {
        return Err(Error::TheoremViolation(
            "Φ(π)^{-1} differs from Φ applied to π^{-1}".into(),
        ));
    }
    Ok(s)
}

/// `π(r, r') = σ(r⊗1, r'⊗1)`, verified as a cocycle in `Z(R)` with
/// `Φ(π) = σ`.
pub fn phi_inverse(b: &Bosonization, s: &ScalarCocycleH) -> Result<Cocycle> {
    if !s.in_zprime {
        return Err(Error::Validation("Φ^{-1} needs σ ∈ Z'(𝓗)".into()));
    }
    let kr = b.kr();
    let kh = b.kh();
    let m = Measuring::unit(b.r.clone());
    let pi = LinearMap::identity(&TensorSpace::power(b.r.space(), 2))
        .then(&b.h.alg.unit, kr)?
        .then(&b.h.alg.unit, 2 * kr + kh)?
        .then(&s.sigma, 0)?;
    let pi = pi.reinterpret(pi.source().clone(), m.space().clone())?;
    let c = Cocycle::new(&m, pi)
        .map_err(|e| Error::TheoremViolation(format!("restriction of σ ∈ Z'(𝓗): {e}")))?;
    if phi(b, &c)?.sigma != s.sigma {
        return Err(Error::TheoremViolation("Φ(Φ^{-1}(σ)) ≠ σ".into()));
    }
    Ok(c)
}

/// Checks `Eq. (9)` for a section `γ: 𝓗 → E` and, when it holds, the
/// consequences `γ(r⊗hh') = γ(r⊗h)γ(1⊗h')`, `γ(1⊗S(h)) = γ^{-1}(1⊗h)` and
/// `γ^{-1}((1⊗h)(r⊗h')(1⊗h'')) = γ^{-1}(1⊗h'')γ^{-1}(r⊗h')γ^{-1}(1⊗h)`.
pub fn check_cprime_section(b: &Bosonization, e: &CleftExtension) -> Result<Report> {
    if e.comod_alg.hopf.space() != b.hopf.space() {
        return Err(Error::BaseMismatch(format!(
            "extension of {} is not over {}",
            e.comod_alg.hopf.name, b.hopf.name
        )));
    }
    let (kr, kh) = (b.kr(), b.kh());
    let ke = e.comod_alg.alg.arity();
    let k = kr + kh;
    let (mu, mu_e) = (&b.hopf.alg.mul, &e.comod_alg.alg.mul);
    let j = b.j_h()?;
    let hhh = b.h.space().tensor(b.hopf.space()).tensor(b.h.space());
    // h ⊗ (r⊗h') ⊗ h'' ↦ three elements of 𝓗
    let spread = LinearMap::identity(&hhh).then(&j, 0)?.then(&j, 2 * k)?;
    let product_then =
        |g: &LinearMap| -> Result<LinearMap> { spread.then(mu, 0)?.then(mu, 0)?.then(g, 0) };
    let each_then = |g: &LinearMap, reverse: bool| -> Result<LinearMap> {
        let mut m = spread.then(g, 0)?.then(g, ke)?.then(g, 2 * ke)?;
        if reverse {
            m = m.then_permute_blocks(0, &[ke, ke, ke], &[2, 1, 0])?;
        }
        m.then(mu_e, 0)?.then(mu_e, 0)
    };
    let (g, gi) = (&e.section, &e.section_inv);
    let mut rep = Report::new(format!("section of {}", e.space()));
    rep.check_result(EQ_9, (|| Ok((product_then(g)?, each_then(g, false)?)))());
    if rep.all_passed() {
        let mut derived = Report::new("derived");
        derived.check_result(
            "γ(r⊗hh') = γ(r⊗h)γ(1⊗h')",
            (|| {
                let id = LinearMap::identity(&b.hopf.space().tensor(b.h.space()));
                let lhs = id.then(&b.h.alg.mul, kr)?.then(g, 0)?;
                let rhs = id.then(&j, k)?.then(g, 0)?.then(g, ke)?.then(mu_e, 0)?;
                Ok((lhs, rhs))
            })(),
        );
        derived.check_result(
            "γ(1⊗S(h)) = γ^{-1}(1⊗h)",
            (|| Ok((b.h.antipode.then(&j, 0)?.then(g, 0)?, j.then(gi, 0)?)))(),
        );
        derived.check_result(
            "γ^{-1}((1⊗h)(r⊗h')(1⊗h'')) = γ^{-1}(1⊗h'')γ^{-1}(r⊗h')γ^{-1}(1⊗h)",
            (|| Ok((product_then(gi)?, each_then(gi, true)?)))(),
        );
        if let Some(bad) = derived.failures().next() {
            return Err(Error::TheoremViolation(format!(
                "section satisfies Eq. (9) but {} fails: {}",
                bad.name,
                bad.witness.clone().unwrap_or_default()
            )));
        }
        rep.absorb("derived", derived);
    }
    Ok(rep)
}

/// `σ_γ` of an `𝓗`-cleft object as a scalar cocycle, with the check that
/// an `Eq. (9)` section yields a member of `Z'(𝓗)`.
pub fn sigma_gamma_restricts(
    b: &Bosonization,
    e: &CleftExtension,
) -> Result<(Report, ScalarCocycleH)> {
    let mut rep = check_cprime_section(b, e)?;
    let sc = section_cocycle(e)?;
    let unit = &sc.coinvariants.alg.unit;
    if unit.target().dim() != 1 {
        return Err(Error::Validation(format!(
            "coinvariants of {} have dimension {}, not a cleft object",
            e.space(),
            unit.target().dim()
        )));
    }
    let sigma = sc.cocycle.sigma.then(&inverse(unit)?, 0)?;
    let s = check_zprime(b, &sigma)?;
    if rep.passed(EQ_9) && !s.in_zprime {
        return Err(Error::TheoremViolation(
            "σ_γ of an Eq. (9) section violates Eq. (8)".into(),
        ));
    }
    if s.in_zprime {
        rep.pass("σ_γ ∈ Z'(𝓗)");
    } else {
        rep.fail(
            "σ_γ ∈ Z'(𝓗)",
            s.report
                .failures()
                .map(|c| c.name.clone())
                .collect::<Vec<_>>()
                .join("; "),
        );
    }
    Ok((rep, s))
}

/// `Ψ(𝓔, γ) = (𝓔#H, γ⊗id)` for a cleft object `𝓔` over `R` whose section
/// is `H`-linear, with coaction `e⊗h ↦ e0 ⊗ e1(-1)h1 ⊗ e1(0) ⊗ h2` and
/// section inverse `(η_𝓔ε_R⊗S_H) ∗ (γ^{-1}⊗η_Hε_H)`.
pub fn psi(b: &Bosonization, e: &CleftExtension) -> Result<CleftExtension> {
    let ca = &e.comod_alg;
    if ca.hopf.space() != b.r.space() || ca.hopf.name != b.r.name {
        return Err(Error::BaseMismatch(format!(
            "extension of {} is not over {}",
            ca.hopf.name, b.r.name
        )));
    }
    if !e.is_cleft_object()? {
        return Err(Error::Validation(
            "Ψ needs a cleft object (one-dimensional coinvariants)".into(),
        ));
    }
    let e = if e.normalized {
        e.clone()
    } else {
        crate::cleft::normalize_section(e)?
    };
    let ca = &e.comod_alg;
    let (l, r) = module_morphism_sides(&e.section, b.r.module(), &ca.module)?;
    if l != r {
        return Err(Error::Validation("Ψ needs an H-linear section".into()));
    }
    let (h, rr) = (&b.h, &b.r);
    let (kr, kh, ke) = (b.kr(), b.kh(), ca.alg.arity());
    let eh = ca.space().tensor(h.space());
    let mul = LinearMap::identity(&TensorSpace::power(&eh, 2))
        .then(&h.coalg.comul, ke)?
        .then_permute_blocks(ke + kh, &[kh, ke], &[1, 0])?
        .then(&ca.module.action, ke)?
        .then(&ca.alg.mul, 0)?
        .then(&h.alg.mul, ke)?;
    let unit = ca.alg.unit.tensor(&h.alg.unit)?;
    let alg = Algebra::new(mul, unit)?;
    let coaction = LinearMap::identity(&eh)
        .then(&ca.coaction, 0)?
        .then(&rr.yd.coaction, ke)?
        .then(&h.coalg.comul, ke + kh + kr)?
        .then_permute_blocks(ke, &[kh, kr, kh], &[0, 2, 1])?
        .then(&h.alg.mul, ke)?;
    let big = ComoduleAlgebra::new(
        b.hopf.clone(),
        alg.clone(),
        Module::classical(&eh),
        coaction,
    )?;
    let rep = check_comodule_algebra(&big);
    if let Some(bad) = rep.failures().next() {
        return Err(Error::TheoremViolation(format!(
            "𝓔#H is not an 𝓗-comodule algebra: {} {}",
            bad.name,
            bad.witness.clone().unwrap_or_default()
        )));
    }
    let section = e.section.tensor(&LinearMap::identity(h.space()))?;
    let id = LinearMap::identity(b.hopf.space());
    let f1 = id
        .then(&rr.coalg.counit, 0)?
        .then(&h.antipode, 0)?
        .then(&ca.alg.unit, 0)?;
    let f2 = id
        .then(&h.coalg.counit, kr)?
        .then(&e.section_inv, 0)?
        .then(&h.alg.unit, ke)?;
    let section_inv = convolution(&f1, &f2, &b.hopf.coalg, &alg)?;
    let out = CleftExtension::new(big, section, Some(section_inv))
        .map_err(|err| Error::TheoremViolation(format!("section γ⊗id of 𝓔#H: {err}")))?;
    if !out.is_cleft_object()? {
        return Err(Error::TheoremViolation(
            "𝓔#H has coinvariants larger than 𝕜".into(),
        ));
    }
    if !check_cprime_section(b, &out)?.passed(EQ_9) {
        return Err(Error::TheoremViolation("γ⊗id violates Eq. (9)".into()));
    }
    Ok(out)
}

/// `𝓗_σ`: the coalgebra of `𝓗` with `μ_σ(x,y) = σ(x1,y1) x2y2 σ^{-1}(x3,y3)`.
pub fn deform(b: &Bosonization, s: &ScalarCocycleH) -> Result<HopfAlgebra> {
    if !s.in_z {
        return Err(Error::Validation("deformation needs σ ∈ Z(𝓗)".into()));
    }
    let inv = s
        .sigma_inv
        .as_ref()
        .expect("members of Z(𝓗) are invertible");
    let hopf = &b.hopf;
    let k = hopf.arity();
    let d2 = iterated_comul(&hopf.coalg, 2)?;
    let mul = LinearMap::identity(&TensorSpace::power(hopf.space(), 2))
        .then(&d2, 0)?
        .then(&d2, 3 * k)?
        .then_permute_blocks(0, &[k; 6], &[0, 3, 1, 4, 2, 5])?
        .then(&s.sigma, 0)?
        .then(inv, 2 * k)?
        .then(&hopf.alg.mul, 0)?;
    let deformed = HopfAlgebra::classical(
        format!("{}_σ", hopf.name),
        Algebra::new(mul, hopf.alg.unit.clone())?,
        hopf.coalg.clone(),
        None,
    )
    .map_err(|e| Error::AxiomFailure {
        relation: "𝓗_σ is a Hopf algebra".into(),
        witness: e.to_string(),
    })?;
    let rep = check_hopf(&deformed);
    if let Some(bad) = rep.failures().next() {
        return Err(Error::AxiomFailure {
            relation: format!("𝓗_σ: {}", bad.name),
            witness: bad.witness.clone().unwrap_or_default(),
        });
    }
    Ok(deformed)
}

/// A product `x·_σ y` whose lower-degree part is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correction {
    pub x: String,
    pub y: String,
    pub lower: String,
}

/// Result of [`gr_check`].
#[derive(Debug, Clone)]
pub struct GrCheck {
    pub report: Report,
    pub corrections: Vec<Correction>,
}

/// For all homogeneous basis elements `x ∈ 𝓗_(k)`, `y ∈ 𝓗_(l)`: `x·_σ y`
/// lies in `⊕_{i≤k+l} 𝓗_(i)` and its degree-`(k+l)` part is `xy`. Reports
/// one pair of checks per pair of degrees.
pub fn gr_check(b: &Bosonization, deformed: &HopfAlgebra) -> Result<GrCheck> {
    let hopf = &b.hopf;
    if deformed.space() != hopf.space() {
        return Err(Error::shape(
            "deformed algebra",
            hopf.space(),
            deformed.space(),
        ));
    }
    let n = hopf.space().dim();
    let top = b.top_degree();
    let mut report = Report::new(format!("associated graded of {}", deformed.name));
    let mut corrections = Vec::new();
    let space = hopf.space();
    for k in 0..=top {
        for l in 0..=top {
            let mut above = None;
            let mut mismatch = None;
            for x in (0..n).filter(|&x| b.grading[x] == k) {
                for y in (0..n).filter(|&y| b.grading[y] == l) {
                    let col = deformed.alg.mul.column(x * n + y);
                    let orig = hopf.alg.mul.column(x * n + y);
                    let part =
                        |pred: &dyn Fn(usize) -> bool| -> Vec<(usize, crate::scalar::Scalar)> {
                            col.iter()
                                .filter(|(i, _)| pred(b.grading[*i]))
                                .cloned()
                                .collect()
                        };
                    let high = part(&|d| d > k + l);
                    let same = part(&|d| d == k + l);
                    let low = part(&|d| d < k + l);
                    let pair = || format!("{} · {}", space.label(x), space.label(y));
                    if !high.is_empty() && above.is_none() {
                        above = Some(format!("{} has {}", pair(), format_vector(space, &high)));
                    }
                    if same.as_slice() != orig && mismatch.is_none() {
                        mismatch = Some(format!(
                            "{}: top part {} but undeformed {}",
                            pair(),
                            format_vector(space, &same),
                            format_vector(space, orig)
                        ));
                    }
                    if !low.is_empty() {
                        corrections.push(Correction {
                            x: space.label(x),
                            y: space.label(y),
                            lower: format_vector(space, &low),
                        });
                    }
                }
            }
            let name = format!("degrees ({k},{l}): product in ⊕_{{i≤{}}} 𝓗_(i)", k + l);
            match above {
                None => report.pass(name),
                Some(w) => report.fail(name, w),
            }
            let name = format!(
                "degrees ({k},{l}): degree-{} part equals the product of 𝓗",
                k + l
            );
            match mismatch {
                None => report.pass(name),
                Some(w) => report.fail(name, w),
            }
        }
    }
    report.note(format!(
        "{} products with nonzero lower-degree part",
        corrections.len()
    ));
    for c in &corrections {
        report.note(format!("  {} · {} lower part {}", c.x, c.y, c.lower));
    }
    Ok(GrCheck {
        report,
        corrections,
    })
}

/// One isomorphism class of `𝓗`-cleft objects in the census.
#[derive(Debug, Clone)]
pub struct CensusClass {
    /// Indices into [`Census::cocycles`].
    pub members: Vec<usize>,
    /// `Φ(π)` of the first member.
    pub representative: LinearMap,
}

/// Result of [`cleft_prime_census`].
#[derive(Debug, Clone)]
pub struct Census {
    pub cocycles: Vec<Cocycle>,
    pub classes: Vec<CensusClass>,
    pub report: Report,
}

/// Partition of `items` by gauge equivalence, in order of first members.
fn gauge_classes(hopf: &HopfAlgebra, items: &[LinearMap], bound: u64) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for (i, s) in items.iter().enumerate() {
        for class in classes.iter_mut() {
            if gauge_equivalence(hopf, &items[class[0]], s, bound)?.is_some() {
                class.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}

/// Nonzero values of a map into `𝕜`, as `label↦value` pairs.
pub fn format_scalar_map(m: &LinearMap) -> String {
    let parts: Vec<String> = (0..m.source().dim())
        .filter_map(|j| {
            let v = m.entry(0, j);
            (!v.is_zero()).then(|| format!("{}↦{}", m.source().label(j), v))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

/// Enumerates `Z(R)`, builds both `{𝕜#_{Φ(π)}𝓗}` and `{Ψ(𝟙#_πR)}`,
/// canonicalizes each object through its section cocycle, and groups the
/// results into comodule algebra isomorphism classes.
pub fn cleft_prime_census(b: &Bosonization, bound: u64) -> Result<Census> {
    let sweep = enumerate_cocycles(&Measuring::unit(b.r.clone()), bound, None)?;
    let mut report = Report::new(format!("Cleft'({}) census", b.hopf.name));
    report.note(format!(
        "Z(R): {} cocycles among {} candidates",
        sweep.cocycles.len(),
        sweep.candidates
    ));
    let unit_h = Measuring::unit(b.hopf.clone());
    let mut via_phi = Vec::new();
    let mut via_psi = Vec::new();
    for (i, pi) in sweep.cocycles.iter().enumerate() {
        let s = phi(b, pi)?;
        let crossed = functor_f(&Cocycle::new(&unit_h, s.sigma.clone())?)?;
        let (_, canon_a) = sigma_gamma_restricts(b, &crossed)?;
        let e = psi(b, &functor_f(pi)?)?;
        let (_, canon_b) = sigma_gamma_restricts(b, &e)?;
        report.check_maps(
            format!("π{i}: σ of 𝕜#_Φ(π)𝓗 = Φ(π)"),
            &canon_a.sigma,
            &s.sigma,
        );
        report.check_maps(
            format!("π{i}: σ of Ψ(𝟙#_πR) = Φ(π)"),
            &canon_b.sigma,
            &s.sigma,
        );
        via_phi.push(canon_a.sigma);
        via_psi.push(canon_b.sigma);
    }
    let classes_a = gauge_classes(&b.hopf, &via_phi, bound)?;
    let classes_b = gauge_classes(&b.hopf, &via_psi, bound)?;
    let canon = |cl: &[Vec<usize>], items: &[LinearMap]| -> Vec<LinearMap> {
        cl.iter().map(|c| items[c[0]].clone()).collect()
    };
    if classes_a == classes_b && canon(&classes_a, &via_phi) == canon(&classes_b, &via_psi) {
        report.pass("{𝓔#H} and {𝕜#_Φ(π)𝓗} give the same classes");
    } else {
        report.fail(
            "{𝓔#H} and {𝕜#_Φ(π)𝓗} give the same classes",
            format!("{classes_a:?} vs {classes_b:?}"),
        );
    }
    let classes: Vec<CensusClass> = classes_a
        .iter()
        .map(|members| CensusClass {
            members: members.clone(),
            representative: via_phi[members[0]].clone(),
        })
        .collect();
    report.note(format!("{} isomorphism classes", classes.len()));
    for (n, c) in classes.iter().enumerate() {
        let members: Vec<String> = c.members.iter().map(|i| format!("π{i}")).collect();
        let pi = &sweep.cocycles[c.members[0]].sigma;
        let one = TensorSpace::unit(b.hopf.field());
        let pi = pi.reinterpret(pi.source().clone(), one)?;
        report.note(format!(
            "class {n}: {{{}}} representative π = {}",
            members.join(", "),
            format_scalar_map(&pi)
        ));
    }
    Ok(Census {
        cocycles: sweep.cocycles,
        classes,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{group_algebra, quantum_line_grading, quantum_line_over_cyclic};
    use crate::oracle::{enumerate_zprime, DEFAULT_BOUND};
    use crate::scalar::FieldSpec;

    fn graded_line(f: FieldSpec, n: usize) -> GradedYdHopf {
        let (_, r) = quantum_line_over_cyclic(f, n, 2).unwrap();
        let g = quantum_line_grading(&r);
        GradedYdHopf::new(Arc::new(r), g, true).unwrap()
    }

    fn pi_lambda(b: &Bosonization, lambda: i64) -> Cocycle {
        let m = Measuring::unit(b.r.clone());
        let f = b.hopf.field();
        let src = TensorSpace::power(b.r.space(), 2);
        let s = LinearMap::from_fn(src, m.space().clone(), |j| {
            Ok(match j {
                0 => vec![(0, f.one())],
                3 if lambda != 0 => vec![(0, f.from_i64(lambda))],
                _ => vec![],
            })
        })
        .unwrap();
        Cocycle::new(&m, s).unwrap()
    }

    #[test]
    fn bosonization_of_trivial_r_is_h() {
        let h = Arc::new(group_algebra(FieldSpec::Prime(5), 4).unwrap());
        let b = bosonize(&GradedYdHopf::trivial(h.clone()).unwrap()).unwrap();
        assert_eq!(b.hopf.alg, h.alg);
        assert_eq!(b.hopf.coalg, h.coalg);
        let census = cleft_prime_census(&b, DEFAULT_BOUND).unwrap();
        assert_eq!(census.classes.len(), 1);
        assert!(census.report.all_passed(), "{}", census.report);
    }

    #[test]
    fn sweedler_type_bosonization() {
        let b = bosonize(&graded_line(FieldSpec::Prime(3), 2)).unwrap();
        assert_eq!(b.hopf.space().dim(), 4);
        let s = b.hopf.space();
        let x1 = s.index_of_label("x⊗1").unwrap();
        assert_eq!(b.hopf.coalg.comul.format_column(x1), "1⊗g⊗x⊗1 + x⊗1⊗1⊗1");
        let sq = TensorSpace::power(s, 2);
        let gx = sq.index_of_label("1⊗g⊗x⊗1").unwrap();
        assert_eq!(b.hopf.alg.mul.format_column(gx), "2·x⊗g");
        assert!(check_bosonization(&b).all_passed());
    }

    #[test]
    fn phi_lands_in_zprime_and_inverts() {
        let b = bosonize(&graded_line(FieldSpec::Prime(5), 4)).unwrap();
        assert_eq!(b.hopf.space().dim(), 8);
        for lambda in 0..5 {
            let pi = pi_lambda(&b, lambda);
            let s = phi(&b, &pi).unwrap();
            assert!(s.in_zprime, "{}", s.report);
            let xx = TensorSpace::power(b.hopf.space(), 2)
                .index_of_label("x⊗1⊗x⊗1")
                .unwrap();
            assert_eq!(s.sigma.entry(0, xx), b.hopf.field().from_i64(lambda));
            let back = phi_inverse(&b, &s).unwrap();
            assert_eq!(back.sigma, pi.sigma);
        }
    }

    #[test]
    fn eq8_violation_is_reported() {
        let b = bosonize(&graded_line(FieldSpec::Prime(3), 2)).unwrap();
        let f = b.hopf.field();
        let s = phi(&b, &pi_lambda(&b, 1)).unwrap();
        let sq = TensorSpace::power(b.hopf.space(), 2);
        let j = sq.index_of_label("x⊗1⊗1⊗g").unwrap();
        let bump =
            LinearMap::from_entries(sq, TensorSpace::unit(f), vec![(0, j, f.one())]).unwrap();
        let bad = check_zprime(&b, &s.sigma.add(&bump).unwrap()).unwrap();
        assert!(!bad.in_zprime);
        assert!(!bad.report.passed(EQ_8));
    }

    #[test]
    fn psi_and_deformation_on_kc4() {
        let b = bosonize(&graded_line(FieldSpec::Prime(5), 4)).unwrap();
        for lambda in 0..5 {
            let pi = pi_lambda(&b, lambda);
            let e = psi(&b, &functor_f(&pi).unwrap()).unwrap();
            assert_eq!(e.space().dim(), 8);
            let (rep, s) = sigma_gamma_restricts(&b, &e).unwrap();
            assert!(rep.all_passed(), "{rep}");
            assert_eq!(s.sigma, phi(&b, &pi).unwrap().sigma);
            let d = deform(&b, &s).unwrap();
            let gr = gr_check(&b, &d).unwrap();
            assert!(gr.report.all_passed(), "{}", gr.report);
            assert_eq!(gr.corrections.is_empty(), lambda == 0);
        }
    }

    #[test]
    fn zprime_enumeration_matches_phi_images() {
        let b = bosonize(&graded_line(FieldSpec::Prime(3), 2)).unwrap();
        let zp = enumerate_zprime(&b, DEFAULT_BOUND).unwrap();
        let z = enumerate_cocycles(&Measuring::unit(b.r.clone()), DEFAULT_BOUND, None).unwrap();
        let images: Vec<LinearMap> = z
            .cocycles
            .iter()
            .map(|c| phi(&b, c).unwrap().sigma)
            .collect();
        assert_eq!(zp, images);
    }

    #[test]
    fn census_over_f5() {
        let b = bosonize(&graded_line(FieldSpec::Prime(5), 4)).unwrap();
        let census = cleft_prime_census(&b, DEFAULT_BOUND).unwrap();
        assert!(census.report.all_passed(), "{}", census.report);
        let classes: Vec<Vec<usize>> = census.classes.iter().map(|c| c.members.clone()).collect();
        assert_eq!(classes, vec![vec![0], vec![1, 4], vec![2, 3]]);
    }
}
