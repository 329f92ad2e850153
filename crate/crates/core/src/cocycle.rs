//! Two-cocycles `σ: H̄ ⊗ H̄ → A` over a measuring, the maps `σ̂` and `μ_σ`,
//! and the crossed product `A #_σ H̄`.
//!
//! All convolutions in `Hom(H̄⊗H̄, A)` and `Hom(H̄⊗H̄⊗H̄, A)` use the braided
//! coalgebra structure on tensor powers of `H̄`.

use std::sync::Arc;

use crate::braidmod::{
    braided_tensor_coalgebra, braiding, check_comodule_algebra, module_morphism_sides, yd_tensor,
    ComoduleAlgebra, Measuring,
};
use crate::error::{Error, Result};
use crate::hopfcore::{
    check_algebra, convolution, convolution_inverse, Algebra, Coalgebra, HopfAlgebra,
};
use crate::linspace::{LinearMap, TensorSpace};
use crate::report::Report;

pub const REL_5: &str = "(5) μ_A(id⊗σ)(σ̂⊗id) = μ_A(id⊗σ)(c^ν⊗id)(id⊗σ̂)";
pub const REL_6: &str = "(6) μ_A(id⊗ν)(σ̂⊗id) = μ_A(id⊗σ)(c^ν⊗id)(id⊗c^ν)";
pub const REL_7: &str = "(7) σ(η̄⊗η̄) = η_A";
pub const INVERTIBLE: &str = "σ convolution invertible";
pub const K_LINEAR: &str = "σ is K-linear";

/// `H̄ ⊗ H̄` with its braided coalgebra structure.
pub fn square_coalgebra(h: &HopfAlgebra) -> Result<Coalgebra> {
    h.tensor_square_coalgebra()
}

/// `H̄ ⊗ H̄ ⊗ H̄` with its braided coalgebra structure.
pub fn cube_coalgebra(h: &HopfAlgebra) -> Result<Coalgebra> {
    let yd2 = yd_tensor(&h.yd, &h.yd)?;
    let c = braiding(&yd2, h.module())?;
    braided_tensor_coalgebra(&h.tensor_square_coalgebra()?, &h.coalg, &c)
}

fn check_sigma_shape(m: &Measuring, sigma: &LinearMap) -> Result<()> {
    let src = TensorSpace::power(m.hopf.space(), 2);
    if sigma.source() != &src || sigma.target() != m.space() {
        return Err(Error::shape(
            "cocycle",
            format!("{src} -> {}", m.space()),
            format!("{} -> {}", sigma.source(), sigma.target()),
        ));
    }
    Ok(())
}

/// `σ̂ = (σ⊗μ̄)Δ_{H̄⊗H̄}: H̄⊗H̄ → A⊗H̄`.
pub fn sigma_hat(m: &Measuring, sigma: &LinearMap) -> Result<LinearMap> {
    check_sigma_shape(m, sigma)?;
    square_coalgebra(&m.hopf)?
        .comul
        .then(sigma, 0)?
        .then(&m.hopf.alg.mul, m.alg.arity())
}

/// `μ_σ = (μ_A⊗id)(μ_A⊗σ̂)(id⊗c^ν⊗id)` on `(A⊗H̄)⊗(A⊗H̄)`.
pub fn mu_sigma(m: &Measuring, sigma: &LinearMap) -> Result<LinearMap> {
    let ka = m.alg.arity();
    let ah = m.space().tensor(m.hopf.space());
    LinearMap::identity(&TensorSpace::power(&ah, 2))
        .then(&m.c_nu()?, ka)?
        .then(&m.alg.mul, 0)?
        .then(&sigma_hat(m, sigma)?, ka)?
        .then(&m.alg.mul, 0)
}

/// `η_A(ε̄⊗ε̄)`, a cocycle exactly when `A` is a module algebra.
pub fn trivial_sigma(m: &Measuring) -> Result<LinearMap> {
    let h = &m.hopf;
    LinearMap::identity(&TensorSpace::power(h.space(), 2))
        .then(&h.coalg.counit, 0)?
        .then(&h.coalg.counit, 0)?
        .then(&m.alg.unit, 0)
}

/// The two sides of each cocycle relation, for reporting.
struct Sides<'a> {
    m: &'a Measuring,
    sigma: &'a LinearMap,
    kh: usize,
    ka: usize,
}

impl Sides<'_> {
    fn rel5(&self) -> Result<(LinearMap, LinearMap)> {
        let (m, kh, ka) = (self.m, self.kh, self.ka);
        let hat = sigma_hat(m, self.sigma)?;
        let id = LinearMap::identity(&TensorSpace::power(m.hopf.space(), 3));
        let lhs = id
            .then(&hat, 0)?
            .then(self.sigma, ka)?
            .then(&m.alg.mul, 0)?;
        let rhs = id
            .then(&hat, kh)?
            .then(&m.c_nu()?, 0)?
            .then(self.sigma, ka)?
            .then(&m.alg.mul, 0)?;
        Ok((lhs, rhs))
    }

    fn rel6(&self) -> Result<(LinearMap, LinearMap)> {
        let (m, kh, ka) = (self.m, self.kh, self.ka);
        let hat = sigma_hat(m, self.sigma)?;
        let cn = m.c_nu()?;
        let id = LinearMap::identity(&TensorSpace::power(m.hopf.space(), 2).tensor(m.space()));
        let lhs = id.then(&hat, 0)?.then(&m.nu, ka)?.then(&m.alg.mul, 0)?;
        let rhs = id
            .then(&cn, kh)?
            .then(&cn, 0)?
            .then(self.sigma, ka)?
            .then(&m.alg.mul, 0)?;
        Ok((lhs, rhs))
    }

    fn rel7(&self) -> Result<(LinearMap, LinearMap)> {
        let h = &self.m.hopf;
        let lhs = h.alg.unit.then(&h.alg.unit, self.kh)?.then(self.sigma, 0)?;
        Ok((lhs, self.m.alg.unit.clone()))
    }
}

/// Outcome of [`check_cocycle`]: the report, and the cocycle when every
/// defining relation holds.
#[derive(Debug, Clone)]
pub struct CocycleCheck {
    pub report: Report,
    pub cocycle: Option<Cocycle>,
}

/// A verified two-cocycle with its convolution inverse.
#[derive(Debug, Clone)]
pub struct Cocycle {
    pub measuring: Measuring,
    pub sigma: LinearMap,
    pub sigma_inv: LinearMap,
}

impl Cocycle {
    /// Verifies `sigma`, returning the first failed relation as an error.
    pub fn new(m: &Measuring, sigma: LinearMap) -> Result<Self> {
        let check = check_cocycle(m, &sigma)?;
        match check.cocycle {
            Some(c) => Ok(c),
            None => {
                let bad = check
                    .report
                    .failures()
                    .next()
                    .expect("a rejected cocycle has a failure");
                if bad.name == INVERTIBLE {
                    Err(Error::NotInvertible("cocycle σ".into()))
                } else {
                    Err(Error::AxiomFailure {
                        relation: bad.name.clone(),
                        witness: bad.witness.clone().unwrap_or_default(),
                    })
                }
            }
        }
    }

    /// `η_A(ε̄⊗ε̄)` on a module algebra.
    pub fn trivial(m: &Measuring) -> Result<Self> {
        Cocycle::new(m, trivial_sigma(m)?)
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.measuring.hopf
    }

    pub fn sigma_hat(&self) -> Result<LinearMap> {
        sigma_hat(&self.measuring, &self.sigma)
    }

    pub fn mu_sigma(&self) -> Result<LinearMap> {
        mu_sigma(&self.measuring, &self.sigma)
    }
}

/// Checks convolution invertibility, `K`-linearity, relations (5)–(7), the
/// identities `(id⊗ε̄)σ̂ = σ`, `(id⊗ε̄)c^ν = ν`, `c^ν(id⊗η_A) = η_A⊗id`, and
/// (when the defining relations hold) the derived relations
/// `σ(η̄⊗id) = η_A ε̄ = σ(id⊗η̄)`, their analogues for `σ^{-1}`, and the
/// three convolution identities over `H̄⊗H̄⊗H̄`.
pub fn check_cocycle(m: &Measuring, sigma: &LinearMap) -> Result<CocycleCheck> {
    check_sigma_shape(m, sigma)?;
    let h = m.hopf.clone();
    let kh = h.arity();
    let ka = m.alg.arity();
    let mut r = Report::new(format!("cocycle on {} over {}", m.space(), h.name));
    let sq = square_coalgebra(&h)?;
    let inv = match convolution_inverse(sigma, &sq, &m.alg) {
        Ok(g) => {
            r.pass(INVERTIBLE);
            Some(g)
        }
        Err(Error::NotInvertible(w)) => {
            r.fail(INVERTIBLE, w);
            None
        }
        Err(e) => return Err(e),
    };
    if !h.is_classical() {
        let hh = h.module().tensor(h.module())?;
        r.check_result(K_LINEAR, module_morphism_sides(sigma, &hh, &m.module));
    }
    let s = Sides { m, sigma, kh, ka };
    r.check_result(REL_5, s.rel5());
    r.check_result(REL_6, s.rel6());
    r.check_result(REL_7, s.rel7());
    r.check_result(
        "(id⊗ε̄)σ̂ = σ",
        (|| {
            Ok((
                sigma_hat(m, sigma)?.then(&h.coalg.counit, ka)?,
                sigma.clone(),
            ))
        })(),
    );
    r.check_result(
        "(id⊗ε̄)c^ν = ν",
        (|| Ok((m.c_nu()?.then(&h.coalg.counit, ka)?, m.nu.clone())))(),
    );
    r.check_result(
        "c^ν(id⊗η_A) = η_A⊗id",
        (|| {
            let id = LinearMap::identity(h.space());
            Ok((
                id.then(&m.alg.unit, kh)?.then(&m.c_nu()?, 0)?,
                id.then(&m.alg.unit, 0)?,
            ))
        })(),
    );
    let cocycle = match inv {
        Some(sigma_inv) if r.all_passed() => {
            derived_relations(&mut r, m, sigma, &sigma_inv)?;
            Some(Cocycle {
                measuring: m.clone(),
                sigma: sigma.clone(),
                sigma_inv,
            })
        }
        _ => None,
    };
    if cocycle.is_some() && !r.all_passed() {
        let bad: Vec<String> = r.failures().map(|c| c.name.clone()).collect();
        return Err(Error::TheoremViolation(format!(
            "cocycle relations hold but derived relations fail: {}",
            bad.join("; ")
        )));
    }
    Ok(CocycleCheck { report: r, cocycle })
}

fn derived_relations(
    r: &mut Report,
    m: &Measuring,
    sigma: &LinearMap,
    sigma_inv: &LinearMap,
) -> Result<()> {
    let h = &m.hopf;
    let kh = h.arity();
    let ka = m.alg.arity();
    let eps_eta = h.coalg.counit.then(&m.alg.unit, 0)?;
    let id = LinearMap::identity(h.space());
    for (name, s) in [("σ", sigma), ("σ^{-1}", sigma_inv)] {
        r.check_result(
            format!("derived: {name}(η̄⊗id) = η_A ε̄"),
            (|| Ok((id.then(&h.alg.unit, 0)?.then(s, 0)?, eps_eta.clone())))(),
        );
        r.check_result(
            format!("derived: {name}(id⊗η̄) = η_A ε̄"),
            (|| Ok((id.then(&h.alg.unit, kh)?.then(s, 0)?, eps_eta.clone())))(),
        );
    }
    let cube = cube_coalgebra(h)?;
    let id3 = LinearMap::identity(&TensorSpace::power(h.space(), 3));
    let conv = |f: &LinearMap, g: &LinearMap| convolution(f, g, &cube, &m.alg);
    let tensor_eps = |s: &LinearMap| id3.then(s, 0)?.then(&h.coalg.counit, ka);
    let mul_left = |s: &LinearMap| id3.then(&h.alg.mul, 0)?.then(s, 0);
    let mul_right = |s: &LinearMap| id3.then(&h.alg.mul, kh)?.then(s, 0);
    let nu_of = |s: &LinearMap| id3.then(s, kh)?.then(&m.nu, 0);
    r.check_result(
        "derived: (σ⊗ε̄)∗σ(μ̄⊗id) = ν(id⊗σ)∗σ(id⊗μ̄)",
        (|| {
            Ok((
                conv(&tensor_eps(sigma)?, &mul_left(sigma)?)?,
                conv(&nu_of(sigma)?, &mul_right(sigma)?)?,
            ))
        })(),
    );
    r.check_result(
        "derived: σ(μ̄⊗id)∗σ^{-1}(id⊗μ̄) = (σ^{-1}⊗ε̄)∗ν(id⊗σ)",
        (|| {
            Ok((
                conv(&mul_left(sigma)?, &mul_right(sigma_inv)?)?,
                conv(&tensor_eps(sigma_inv)?, &nu_of(sigma)?)?,
            ))
        })(),
    );
    r.check_result(
        "derived: σ(id⊗μ̄)∗σ^{-1}(μ̄⊗id) = ν(id⊗σ^{-1})∗(σ⊗ε̄)",
        (|| {
            Ok((
                conv(&mul_right(sigma)?, &mul_left(sigma_inv)?)?,
                conv(&nu_of(sigma_inv)?, &tensor_eps(sigma)?)?,
            ))
        })(),
    );
    Ok(())
}

pub const MU_ASSOC: &str = "μ_σ associative";
pub const MU_LEFT_UNIT: &str = "μ_σ(η_A⊗η̄⊗id) = id";
pub const MU_RIGHT_UNIT: &str = "μ_σ(id⊗η_A⊗η̄) = id";

/// Tests associativity and unitality of `μ_σ` directly.
pub fn mu_sigma_report(m: &Measuring, sigma: &LinearMap) -> Result<Report> {
    let mu = mu_sigma(m, sigma)?;
    let ah = m.space().tensor(m.hopf.space());
    let k = ah.len();
    let mut r = Report::new(format!("crossed product multiplication on {ah}"));
    let id3 = LinearMap::identity(&TensorSpace::power(&ah, 3));
    r.check_result(
        MU_ASSOC,
        (|| {
            Ok((
                id3.then(&mu, 0)?.then(&mu, 0)?,
                id3.then(&mu, k)?.then(&mu, 0)?,
            ))
        })(),
    );
    let unit = m.alg.unit.then(&m.hopf.alg.unit, m.alg.arity())?;
    let id = LinearMap::identity(&ah);
    r.check_result(
        MU_LEFT_UNIT,
        (|| Ok((id.then(&unit, 0)?.then(&mu, 0)?, id.clone())))(),
    );
    r.check_result(
        MU_RIGHT_UNIT,
        (|| Ok((id.then(&unit, k)?.then(&mu, 0)?, id.clone())))(),
    );
    Ok(r)
}

/// Compares the cocycle relations with associativity and unitality of
/// `μ_σ` for a convolution-invertible `σ`. The two must agree; a
/// disagreement is reported as [`Error::TheoremViolation`].
///
/// Returns the `μ_σ` report and whether `σ` is a cocycle.
pub fn check_mu_sigma_associativity(m: &Measuring, sigma: &LinearMap) -> Result<(Report, bool)> {
    let check = check_cocycle(m, sigma)?;
    if !check.report.passed(INVERTIBLE) {
        return Err(Error::NotInvertible(
            "σ is not convolution invertible".into(),
        ));
    }
    let rels = [REL_5, REL_6, REL_7].iter().all(|n| check.report.passed(n));
    let r = mu_sigma_report(m, sigma)?;
    let assoc = r.all_passed();
    if rels != assoc {
        return Err(Error::TheoremViolation(format!(
            "relations (5)-(7) {} but μ_σ {} associative and unital",
            if rels { "hold" } else { "fail" },
            if assoc { "is" } else { "is not" }
        )));
    }
    Ok((r, rels))
}

/// `(id⊗ε̄)μ_σ(η_A⊗id⊗η_A⊗id)`, which recovers `σ`.
pub fn recover_sigma(m: &Measuring, mu: &LinearMap) -> Result<LinearMap> {
    let (ka, kh) = (m.alg.arity(), m.hopf.arity());
    LinearMap::identity(&TensorSpace::power(m.hopf.space(), 2))
        .then(&m.alg.unit, kh)?
        .then(&m.alg.unit, 0)?
        .then(mu, 0)?
        .then(&m.hopf.coalg.counit, ka)
}

/// The crossed product `A #_σ H̄` as an algebra and right `H̄`-comodule algebra.
#[derive(Debug, Clone)]
pub struct CrossedProduct {
    pub cocycle: Cocycle,
    /// The algebra `A ⊗ H̄` with product `μ_σ` and unit `η_A ⊗ η̄`.
    pub algebra: Algebra,
    /// The same algebra with coaction `id_A ⊗ Δ̄`.
    pub comodule_algebra: ComoduleAlgebra,
}

/// Builds `A #_σ H̄`, checking the intermediate identities
/// `c^ν(id⊗μ_A) = (μ_A⊗id)(id⊗c^ν)(c^ν⊗id)` and
/// `μ_σ(σ̂⊗id⊗id) = μ_σ(c^ν⊗σ̂)(id⊗c^ν⊗id)`, then the algebra and
/// comodule-algebra axioms.
pub fn crossed_product(c: &Cocycle) -> Result<CrossedProduct> {
    let m = &c.measuring;
    let h = c.hopf().clone();
    let (ka, kh) = (m.alg.arity(), h.arity());
    let cn = m.c_nu()?;
    let hat = c.sigma_hat()?;
    let mu = c.mu_sigma()?;
    let mut r = Report::new("crossed product construction");
    r.check_result(
        "c^ν(id⊗μ_A) = (μ_A⊗id)(id⊗c^ν)(c^ν⊗id)",
        (|| {
            let id = LinearMap::identity(&h.space().tensor(&TensorSpace::power(m.space(), 2)));
            Ok((
                id.then(&m.alg.mul, kh)?.then(&cn, 0)?,
                id.then(&cn, 0)?.then(&cn, ka)?.then(&m.alg.mul, 0)?,
            ))
        })(),
    );
    r.check_result(
        "μ_σ(σ̂⊗id⊗id) = μ_σ(c^ν⊗σ̂)(id⊗c^ν⊗id)",
        (|| {
            let id = LinearMap::identity(
                &TensorSpace::power(h.space(), 2)
                    .tensor(m.space())
                    .tensor(h.space()),
            );
            let lhs = id.then(&hat, 0)?.then(&mu, 0)?;
            let rhs = id
                .then(&cn, kh)?
                .then(&cn, 0)?
                .then(&hat, ka + kh)?
                .then(&mu, 0)?;
            Ok((lhs, rhs))
        })(),
    );
    if let Some(bad) = r.failures().next() {
        return Err(Error::TheoremViolation(format!(
            "{}: {}",
            bad.name,
            bad.witness.clone().unwrap_or_default()
        )));
    }
    let unit = m.alg.unit.then(&h.alg.unit, ka)?;
    let algebra = Algebra::new(mu, unit)?;
    let module = m.module.tensor(h.module())?;
    let coaction = LinearMap::identity(&algebra.space).then(&h.coalg.comul, ka)?;
    let comodule_algebra = ComoduleAlgebra::new(h, algebra.clone(), module, coaction)?;
    let mut checks = check_algebra(&algebra);
    checks.absorb("", check_comodule_algebra(&comodule_algebra));
    if let Some(bad) = checks.failures().next() {
        return Err(Error::AxiomFailure {
            relation: format!("crossed product: {}", bad.name),
            witness: bad.witness.clone().unwrap_or_default(),
        });
    }
    Ok(CrossedProduct {
        cocycle: c.clone(),
        algebra,
        comodule_algebra,
    })
}

/// The smash product `A # H̄` of a module algebra.
pub fn smash_product(m: &Measuring) -> Result<CrossedProduct> {
    crossed_product(&Cocycle::trivial(m)?)
}
