//! Modules and Yetter–Drinfeld modules over an ambient Hopf algebra `K`,
//! the left braiding `c_{X,V}(x ⊗ v) = x(-1)·v ⊗ x(0)`, and the structures
//! built from it: braided tensor (co)algebras, tensor products of modules
//! and comodules over a braided Hopf algebra `H̄`, measurings, comodule
//! algebras and their coinvariants.
//!
//! With the trivial ambient (`K = 𝕜` on `𝟙`) every action and coaction is
//! the identity of `V` and every braiding is the flip.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopfcore::{Algebra, Coalgebra, HopfAlgebra};
use crate::linspace::{equalizer, factor_through, inverse, LinearMap, TensorSpace};
use crate::report::Report;
use crate::scalar::FieldSpec;

/// The Hopf algebra `K` over which objects are modules and Yetter–Drinfeld
/// modules. `None` stands for the ground field.
#[derive(Clone)]
pub struct Ambient {
    field: FieldSpec,
    hopf: Option<Arc<HopfAlgebra>>,
}

impl Ambient {
    pub fn trivial(field: FieldSpec) -> Self {
        Ambient { field, hopf: None }
    }

    /// Modules over a classical Hopf algebra.
    pub fn over(hopf: Arc<HopfAlgebra>) -> Result<Self> {
        if !hopf.is_classical() {
            return Err(Error::Validation(format!(
                "ambient Hopf algebra {} must have the trivial ambient itself",
                hopf.name
            )));
        }
        Ok(Ambient {
            field: hopf.field(),
            hopf: Some(hopf),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn hopf(&self) -> Option<&Arc<HopfAlgebra>> {
        self.hopf.as_ref()
    }

    pub fn is_trivial(&self) -> bool {
        self.hopf.is_none()
    }

    pub fn space(&self) -> TensorSpace {
        match &self.hopf {
            Some(h) => h.space().clone(),
            None => TensorSpace::unit(self.field),
        }
    }

    /// Number of tensor factors of `K` (zero for the trivial ambient).
    pub fn arity(&self) -> usize {
        self.hopf.as_ref().map_or(0, |h| h.arity())
    }

    fn one(&self) -> LinearMap {
        LinearMap::identity(&TensorSpace::unit(self.field))
    }

    pub fn mul(&self) -> LinearMap {
        self.hopf
            .as_ref()
            .map_or_else(|| self.one(), |h| h.alg.mul.clone())
    }

    pub fn unit(&self) -> LinearMap {
        self.hopf
            .as_ref()
            .map_or_else(|| self.one(), |h| h.alg.unit.clone())
    }

    pub fn comul(&self) -> LinearMap {
        self.hopf
            .as_ref()
            .map_or_else(|| self.one(), |h| h.coalg.comul.clone())
    }

    pub fn counit(&self) -> LinearMap {
        self.hopf
            .as_ref()
            .map_or_else(|| self.one(), |h| h.coalg.counit.clone())
    }

    pub fn antipode(&self) -> LinearMap {
        self.hopf
            .as_ref()
            .map_or_else(|| self.one(), |h| h.antipode.clone())
    }

    fn require_same(&self, other: &Ambient, context: &str) -> Result<()> {
        if self != other {
            return Err(Error::BaseMismatch(format!(
                "{context}: {self:?} vs {other:?}"
            )));
        }
        Ok(())
    }
}

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && match (&self.hopf, &other.hopf) {
                (None, None) => true,
                (Some(a), Some(b)) => {
                    Arc::ptr_eq(a, b)
                        || (a.alg == b.alg && a.coalg == b.coalg && a.antipode == b.antipode)
                }
                _ => false,
            }
    }
}

impl fmt::Debug for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.hopf {
            Some(h) => write!(f, "{}", h.name),
            None => write!(f, "{}", self.field),
        }
    }
}

/// A left `K`-module: an object of the category the braiding lands in.
#[derive(Debug, Clone, PartialEq)]
pub struct Module {
    pub ambient: Ambient,
    pub space: TensorSpace,
    /// `K ⊗ V → V`.
    pub action: LinearMap,
}

impl Module {
    pub fn new(ambient: Ambient, space: TensorSpace, action: LinearMap) -> Result<Self> {
        let src = ambient.space().tensor(&space);
        if action.source() != &src || action.target() != &space {
            return Err(Error::shape(
                "module action",
                format!("{src} -> {space}"),
                format!("{} -> {}", action.source(), action.target()),
            ));
        }
        Ok(Module {
            ambient,
            space,
            action,
        })
    }

    /// `V` with `K` acting through the counit.
    pub fn trivial(ambient: Ambient, space: TensorSpace) -> Self {
        let action = LinearMap::identity(&ambient.space().tensor(&space))
            .then(&ambient.counit(), 0)
            .expect("counit acts on the first factor");
        Module {
            ambient,
            space,
            action,
        }
    }

    /// `V` over the ground field.
    pub fn classical(space: &TensorSpace) -> Self {
        Module::trivial(Ambient::trivial(space.field()), space.clone())
    }

    pub fn unit(ambient: Ambient) -> Self {
        let one = TensorSpace::unit(ambient.field());
        Module::trivial(ambient, one)
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field()
    }

    /// `M ⊗ N` with the diagonal action `k·(m⊗n) = k1·m ⊗ k2·n`.
    pub fn tensor(&self, other: &Module) -> Result<Module> {
        self.ambient.require_same(&other.ambient, "module tensor")?;
        let kk = self.ambient.arity();
        let km = self.space.len();
        let space = self.space.tensor(&other.space);
        let action = LinearMap::identity(&self.ambient.space().tensor(&space))
            .then(&self.ambient.comul(), 0)?
            .then_swap(kk, kk, km)?
            .then(&self.action, 0)?
            .then(&other.action, km)?;
        Module::new(self.ambient.clone(), space, action)
    }
}

/// `f ∘ act_M` and `act_N ∘ (id ⊗ f)`; equal exactly when `f` is `K`-linear.
pub fn module_morphism_sides(
    f: &LinearMap,
    m: &Module,
    n: &Module,
) -> Result<(LinearMap, LinearMap)> {
    let lhs = m.action.then(f, 0)?;
    let rhs = LinearMap::identity(&m.ambient.space().tensor(&m.space))
        .then(f, m.ambient.arity())?
        .then(&n.action, 0)?;
    Ok((lhs, rhs))
}

pub fn is_module_morphism(f: &LinearMap, m: &Module, n: &Module) -> Result<bool> {
    let (l, r) = module_morphism_sides(f, m, n)?;
    Ok(l == r)
}

/// Checks associativity and unitality of a `K`-action.
pub fn check_module(m: &Module) -> Report {
    let mut r = Report::new(format!("module {} over {:?}", m.space, m.ambient));
    let k = m.ambient.space();
    let kk = m.ambient.arity();
    r.check_result(
        "action associative",
        (|| {
            let id = LinearMap::identity(&k.tensor(&k).tensor(&m.space));
            Ok((
                id.then(&m.ambient.mul(), 0)?.then(&m.action, 0)?,
                id.then(&m.action, kk)?.then(&m.action, 0)?,
            ))
        })(),
    );
    r.check_result(
        "action unital",
        (|| {
            let id = LinearMap::identity(&m.space);
            Ok((id.then(&m.ambient.unit(), 0)?.then(&m.action, 0)?, id))
        })(),
    );
    r
}

/// A left-left Yetter–Drinfeld module over the ambient `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct YdModule {
    pub module: Module,
    /// `δ: V → K ⊗ V`.
    pub coaction: LinearMap,
}

impl YdModule {
    pub fn new(module: Module, coaction: LinearMap) -> Result<Self> {
        let tgt = module.ambient.space().tensor(&module.space);
        if coaction.source() != &module.space || coaction.target() != &tgt {
            return Err(Error::shape(
                "Yetter–Drinfeld coaction",
                format!("{} -> {tgt}", module.space),
                format!("{} -> {}", coaction.source(), coaction.target()),
            ));
        }
        Ok(YdModule { module, coaction })
    }

    /// Trivial action and coaction.
    pub fn trivial(ambient: Ambient, space: TensorSpace) -> Self {
        let coaction = LinearMap::identity(&space)
            .then(&ambient.unit(), 0)
            .expect("unit inserts a factor");
        YdModule {
            module: Module::trivial(ambient, space),
            coaction,
        }
    }

    pub fn classical(space: &TensorSpace) -> Self {
        YdModule::trivial(Ambient::trivial(space.field()), space.clone())
    }

    pub fn unit(ambient: Ambient) -> Self {
        let one = TensorSpace::unit(ambient.field());
        YdModule::trivial(ambient, one)
    }

    pub fn space(&self) -> &TensorSpace {
        &self.module.space
    }

    pub fn ambient(&self) -> &Ambient {
        &self.module.ambient
    }
}

/// `X ⊗ Y` with diagonal action and coaction `x(-1)y(-1) ⊗ x(0) ⊗ y(0)`.
pub fn yd_tensor(x: &YdModule, y: &YdModule) -> Result<YdModule> {
    let module = x.module.tensor(&y.module)?;
    let kk = x.ambient().arity();
    let kx = x.space().len();
    let coaction = LinearMap::identity(&module.space)
        .then(&x.coaction, 0)?
        .then(&y.coaction, kk + kx)?
        .then_swap(kk, kx, kk)?
        .then(&x.ambient().mul(), 0)?;
    YdModule::new(module, coaction)
}

/// Checks module and comodule axioms and the compatibility
/// `δ(h·x) = h1 x(-1) S(h3) ⊗ h2·x(0)`.
pub fn check_yd(y: &YdModule) -> Report {
    let mut r = check_module(&y.module);
    r.title = format!(
        "Yetter–Drinfeld module {} over {:?}",
        y.space(),
        y.ambient()
    );
    let amb = y.ambient();
    let kk = amb.arity();
    let kv = y.space().len();
    r.check_result(
        "coaction coassociative",
        (|| {
            Ok((
                y.coaction.then(&amb.comul(), 0)?,
                y.coaction.then(&y.coaction, kk)?,
            ))
        })(),
    );
    r.check_result(
        "coaction counital",
        (|| {
            Ok((
                y.coaction.then(&amb.counit(), 0)?,
                LinearMap::identity(y.space()),
            ))
        })(),
    );
    r.check_result(
        "Yetter–Drinfeld compatibility",
        (|| {
            let lhs = y.module.action.then(&y.coaction, 0)?;
            // h1 h2 h3 x(-1) x(0) -> h1 x(-1) h3 h2 x(0)
            let rhs = LinearMap::identity(&amb.space().tensor(y.space()))
                .then(&amb.comul(), 0)?
                .then(&amb.comul(), 0)?
                .then(&y.coaction, 3 * kk)?
                .then_permute_blocks(0, &[kk, kk, kk, kk, kv], &[0, 3, 2, 1, 4])?
                .then(&amb.antipode(), 2 * kk)?
                .then(&amb.mul(), 0)?
                .then(&amb.mul(), 0)?
                .then(&y.module.action, kk)?;
            Ok((lhs, rhs))
        })(),
    );
    r
}

/// Records whether `f: src → tgt` is `K`-linear and `K`-colinear.
pub fn check_yd_morphism(
    r: &mut Report,
    name: &str,
    f: &LinearMap,
    src: &YdModule,
    tgt: &YdModule,
) {
    r.check_result(
        format!("{name} is K-linear"),
        module_morphism_sides(f, &src.module, &tgt.module),
    );
    r.check_result(
        format!("{name} is K-colinear"),
        (|| {
            Ok((
                src.coaction.then(f, src.ambient().arity())?,
                f.then(&tgt.coaction, 0)?,
            ))
        })(),
    );
}

/// The left braiding `c_{X,V}: X ⊗ V → V ⊗ X`, `x ⊗ v ↦ x(-1)·v ⊗ x(0)`.
pub fn braiding(x: &YdModule, v: &Module) -> Result<LinearMap> {
    x.ambient().require_same(&v.ambient, "braiding")?;
    let kk = v.ambient.arity();
    LinearMap::identity(&x.space().tensor(&v.space))
        .then(&x.coaction, 0)?
        .then_swap(kk, x.space().len(), v.space.len())?
        .then(&v.action, 0)
}

/// `c_{X,V}^{-1}` by exact inversion.
pub fn braiding_inverse(x: &YdModule, v: &Module) -> Result<LinearMap> {
    let c = braiding(x, v)?;
    inverse(&c).map_err(|_| {
        Error::CorruptFixture(format!("braiding {} ⊗ {} is singular", x.space(), v.space))
    })
}

/// Checks the left-braiding axioms on concrete objects: invertibility and
/// `K`-linearity of `c_{X,V}`, naturality in `f: X → Y` and `g: V → W`,
/// the two composition axioms, and `c_{𝟙,V} = id`, `c_{X,𝟙} = id`.
pub fn check_braiding_axioms(
    x: &YdModule,
    y: &YdModule,
    v: &Module,
    w: &Module,
    f: &LinearMap,
    g: &LinearMap,
) -> Report {
    let mut r = Report::new(format!("left braiding on {} ⊗ {}", x.space(), v.space));
    let amb = v.ambient.clone();
    check_yd_morphism(&mut r, "f", f, x, y);
    r.check_result("g is K-linear", module_morphism_sides(g, v, w));
    r.check_result(
        "c invertible",
        (|| {
            let c = braiding(x, v)?;
            let ci = braiding_inverse(x, v)?;
            let id = LinearMap::identity(c.source());
            Ok((ci.compose(&c)?, id))
        })(),
    );
    r.check_result(
        "c is K-linear",
        (|| {
            let c = braiding(x, v)?;
            module_morphism_sides(&c, &x.module.tensor(v)?, &v.tensor(&x.module)?)
        })(),
    );
    let (kx, kv) = (x.space().len(), v.space.len());
    r.check_result(
        "(1) naturality c(f⊗g) = (g⊗f)c",
        (|| {
            let lhs = LinearMap::identity(&x.space().tensor(&v.space))
                .then(f, 0)?
                .then(g, y.space().len())?
                .then(&braiding(y, w)?, 0)?;
            let rhs = braiding(x, v)?.then(g, 0)?.then(f, w.space.len())?;
            Ok((lhs, rhs))
        })(),
    );
    r.check_result(
        "(2) c_{X⊗Y,V} = (c_{X,V}⊗id)(id⊗c_{Y,V})",
        (|| {
            let xy = yd_tensor(x, y)?;
            let lhs = braiding(&xy, v)?;
            let rhs = LinearMap::identity(&xy.space().tensor(&v.space))
                .then(&braiding(y, v)?, kx)?
                .then(&braiding(x, v)?, 0)?;
            Ok((lhs, rhs))
        })(),
    );
    r.check_result(
        "(3) c_{X,V⊗W} = (id⊗c_{X,W})(c_{X,V}⊗id)",
        (|| {
            let vw = v.tensor(w)?;
            let lhs = braiding(x, &vw)?;
            let rhs = LinearMap::identity(&x.space().tensor(&vw.space))
                .then(&braiding(x, v)?, 0)?
                .then(&braiding(x, w)?, kv)?;
            Ok((lhs, rhs))
        })(),
    );
    r.check_result(
        "c_{𝟙,V} = id",
        (|| {
            Ok((
                braiding(&YdModule::unit(amb.clone()), v)?,
                LinearMap::identity(&v.space),
            ))
        })(),
    );
    r.check_result(
        "c_{X,𝟙} = id",
        (|| {
            Ok((
                braiding(x, &Module::unit(amb.clone()))?,
                LinearMap::identity(x.space()),
            ))
        })(),
    );
    r
}

/// `A ⊗ B` with unit `η_A ⊗ η_B` and product `(μ_A⊗μ_B)(id⊗c_{B,A}⊗id)`.
pub fn braided_tensor_algebra(a: &Algebra, b: &Algebra, c_ba: &LinearMap) -> Result<Algebra> {
    let ka = a.arity();
    let space = a.space.tensor(&b.space);
    let mul = LinearMap::identity(&TensorSpace::power(&space, 2))
        .then(c_ba, ka)?
        .then(&a.mul, 0)?
        .then(&b.mul, ka)?;
    let unit = a.unit.then(&b.unit, ka)?;
    Algebra::new(mul, unit)
}

/// `B ⊗ A` with counit `ε_B ⊗ ε_A` and coproduct `(id⊗c_{B,A}⊗id)(Δ_B⊗Δ_A)`.
pub fn braided_tensor_coalgebra(
    b: &Coalgebra,
    a: &Coalgebra,
    c_ba: &LinearMap,
) -> Result<Coalgebra> {
    let kb = b.arity();
    let space = b.space.tensor(&a.space);
    let comul = LinearMap::identity(&space)
        .then(&b.comul, 0)?
        .then(&a.comul, 2 * kb)?
        .then(c_ba, kb)?;
    let counit = LinearMap::identity(&space)
        .then(&b.counit, 0)?
        .then(&a.counit, 0)?;
    Coalgebra::new(comul, counit)
}

fn require_same_hopf(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>, context: &str) -> Result<()> {
    if Arc::ptr_eq(a, b) || (a.alg == b.alg && a.coalg == b.coalg) {
        Ok(())
    } else {
        Err(Error::BaseMismatch(format!(
            "{context}: {} vs {}",
            a.name, b.name
        )))
    }
}

/// A left `H̄`-module in the category of `K`-modules.
#[derive(Debug, Clone)]
pub struct HModule {
    pub hopf: Arc<HopfAlgebra>,
    pub object: Module,
    /// `H̄ ⊗ V → V`.
    pub action: LinearMap,
}

impl HModule {
    pub fn new(hopf: Arc<HopfAlgebra>, object: Module, action: LinearMap) -> Result<Self> {
        hopf.ambient().require_same(&object.ambient, "H̄-module")?;
        let src = hopf.space().tensor(&object.space);
        if action.source() != &src || action.target() != &object.space {
            return Err(Error::shape(
                "H̄-module action",
                format!("{src} -> {}", object.space),
                format!("{} -> {}", action.source(), action.target()),
            ));
        }
        Ok(HModule {
            hopf,
            object,
            action,
        })
    }

    /// `V` with `H̄` acting through `ε̄`.
    pub fn trivial(hopf: Arc<HopfAlgebra>, object: Module) -> Result<Self> {
        let action =
            LinearMap::identity(&hopf.space().tensor(&object.space)).then(&hopf.coalg.counit, 0)?;
        HModule::new(hopf, object, action)
    }

    pub fn regular(hopf: Arc<HopfAlgebra>) -> Self {
        let object = hopf.module().clone();
        let action = hopf.alg.mul.clone();
        HModule {
            hopf,
            object,
            action,
        }
    }

    pub fn space(&self) -> &TensorSpace {
        &self.object.space
    }
}

/// Checks the module axioms and that the action is `K`-linear.
pub fn check_hmodule(m: &HModule) -> Report {
    let mut r = Report::new(format!("{}-module {}", m.hopf.name, m.space()));
    let h = &m.hopf;
    let kh = h.arity();
    r.check_result(
        "action associative",
        (|| {
            let id = LinearMap::identity(&TensorSpace::power(h.space(), 2).tensor(m.space()));
            Ok((
                id.then(&h.alg.mul, 0)?.then(&m.action, 0)?,
                id.then(&m.action, kh)?.then(&m.action, 0)?,
            ))
        })(),
    );
    r.check_result(
        "action unital",
        (|| {
            let id = LinearMap::identity(m.space());
            Ok((id.then(&h.alg.unit, 0)?.then(&m.action, 0)?, id))
        })(),
    );
    if !h.is_classical() {
        r.check_result(
            "action is K-linear",
            (|| module_morphism_sides(&m.action, &h.module().tensor(&m.object)?, &m.object))(),
        );
    }
    r
}

/// `M ⊗ N` with action `(φ_M⊗φ_N)(id⊗c_{H,M}⊗id)(Δ̄⊗id⊗id)`.
pub fn module_tensor(m: &HModule, n: &HModule) -> Result<HModule> {
    require_same_hopf(&m.hopf, &n.hopf, "module tensor")?;
    let h = &m.hopf;
    let kh = h.arity();
    let km = m.space().len();
    let object = m.object.tensor(&n.object)?;
    let c = braiding(&h.yd, &m.object)?;
    let action = LinearMap::identity(&h.space().tensor(&object.space))
        .then(&h.coalg.comul, 0)?
        .then(&c, kh)?
        .then(&m.action, 0)?
        .then(&n.action, km)?;
    HModule::new(h.clone(), object, action)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An `H̄`-comodule in the category of `K`-modules.
#[derive(Debug, Clone)]
pub struct HComodule {
    pub hopf: Arc<HopfAlgebra>,
    pub object: Module,
    /// `V → V ⊗ H̄` for [`Side::Right`], `V → H̄ ⊗ V` for [`Side::Left`].
    pub coaction: LinearMap,
    pub side: Side,
}

impl HComodule {
    pub fn new(
        hopf: Arc<HopfAlgebra>,
        object: Module,
        coaction: LinearMap,
        side: Side,
    ) -> Result<Self> {
        hopf.ambient().require_same(&object.ambient, "H̄-comodule")?;
        let tgt = match side {
            Side::Right => object.space.tensor(hopf.space()),
            Side::Left => hopf.space().tensor(&object.space),
        };
        if coaction.source() != &object.space || coaction.target() != &tgt {
            return Err(Error::shape(
                "H̄-comodule coaction",
                format!("{} -> {tgt}", object.space),
                format!("{} -> {}", coaction.source(), coaction.target()),
            ));
        }
        Ok(HComodule {
            hopf,
            object,
            coaction,
            side,
        })
    }

    pub fn regular(hopf: Arc<HopfAlgebra>, side: Side) -> Self {
        let object = hopf.module().clone();
        let coaction = hopf.coalg.comul.clone();
        HComodule {
            hopf,
            object,
            coaction,
            side,
        }
    }

    pub fn space(&self) -> &TensorSpace {
        &self.object.space
    }
}

/// Checks coassociativity and counitality on the declared side.
pub fn check_hcomodule(m: &HComodule) -> Report {
    let mut r = Report::new(format!("{}-comodule {}", m.hopf.name, m.space()));
    let h = &m.hopf;
    let (kh, kv) = (h.arity(), m.space().len());
    let id = LinearMap::identity(m.space());
    match m.side {
        Side::Right => {
            r.check_result(
                "coaction coassociative",
                (|| {
                    Ok((
                        m.coaction.then(&m.coaction, 0)?,
                        m.coaction.then(&h.coalg.comul, kv)?,
                    ))
                })(),
            );
            r.check_result(
                "coaction counital",
                (|| Ok((m.coaction.then(&h.coalg.counit, kv)?, id.clone())))(),
            );
        }
        Side::Left => {
            r.check_result(
                "coaction coassociative",
                (|| {
                    Ok((
                        m.coaction.then(&m.coaction, kh)?,
                        m.coaction.then(&h.coalg.comul, 0)?,
                    ))
                })(),
            );
            r.check_result(
                "coaction counital",
                (|| Ok((m.coaction.then(&h.coalg.counit, 0)?, id.clone())))(),
            );
        }
    }
    r
}

/// `M ⊗ N` with coaction `(id⊗id⊗μ̄)(id⊗c_{H,N}⊗id)(ρ_M⊗ρ_N)`; right comodules only.
pub fn comodule_tensor(m: &HComodule, n: &HComodule) -> Result<HComodule> {
    require_same_hopf(&m.hopf, &n.hopf, "comodule tensor")?;
    if m.side != Side::Right || n.side != Side::Right {
        return Err(Error::SideMismatch(
            "tensor products exist only for right H̄-comodules".into(),
        ));
    }
    let h = &m.hopf;
    let kh = h.arity();
    let (km, kn) = (m.space().len(), n.space().len());
    let object = m.object.tensor(&n.object)?;
    let c = braiding(&h.yd, &n.object)?;
    let coaction = LinearMap::identity(&object.space)
        .then(&m.coaction, 0)?
        .then(&n.coaction, km + kh)?
        .then(&c, km)?
        .then(&h.alg.mul, km + kn)?;
    HComodule::new(h.clone(), object, coaction, Side::Right)
}

/// An algebra `A` in `K`-modules with a measuring `ν: H̄ ⊗ A → A`.
#[derive(Debug, Clone)]
pub struct Measuring {
    pub hopf: Arc<HopfAlgebra>,
    pub alg: Algebra,
    pub module: Module,
    pub nu: LinearMap,
}

impl Measuring {
    pub fn new(
        hopf: Arc<HopfAlgebra>,
        alg: Algebra,
        module: Module,
        nu: LinearMap,
    ) -> Result<Self> {
        hopf.ambient().require_same(&module.ambient, "measuring")?;
        if module.space != alg.space {
            return Err(Error::shape("measuring module", &alg.space, &module.space));
        }
        let src = hopf.space().tensor(&alg.space);
        if nu.source() != &src || nu.target() != &alg.space {
            return Err(Error::shape(
                "measuring ν",
                format!("{src} -> {}", alg.space),
                format!("{} -> {}", nu.source(), nu.target()),
            ));
        }
        Ok(Measuring {
            hopf,
            alg,
            module,
            nu,
        })
    }

    /// `𝟙` with `ν = ε̄`.
    pub fn unit(hopf: Arc<HopfAlgebra>) -> Self {
        let amb = hopf.ambient().clone();
        let alg = Algebra::unit_algebra(amb.field());
        let nu = hopf.coalg.counit.clone();
        Measuring {
            module: Module::unit(amb),
            hopf,
            alg,
            nu,
        }
    }

    /// A module algebra, whose action is its measuring.
    pub fn from_module_algebra(m: &HModule, alg: Algebra) -> Result<Self> {
        Measuring::new(m.hopf.clone(), alg, m.object.clone(), m.action.clone())
    }

    pub fn space(&self) -> &TensorSpace {
        &self.alg.space
    }

    /// `c_{H,A}`.
    pub fn c_ha(&self) -> Result<LinearMap> {
        braiding(&self.hopf.yd, &self.module)
    }

    /// `c^ν_{H,A} = (ν⊗id)(id⊗c_{H,A})(Δ̄⊗id)`.
    pub fn c_nu(&self) -> Result<LinearMap> {
        let kh = self.hopf.arity();
        LinearMap::identity(&self.hopf.space().tensor(self.space()))
            .then(&self.hopf.coalg.comul, 0)?
            .then(&self.c_ha()?, kh)?
            .then(&self.nu, 0)
    }

    /// Whether `ν(id⊗ν) = ν(μ̄⊗id)`.
    pub fn is_module_algebra(&self) -> Result<bool> {
        let (l, r) = self.associativity_sides()?;
        Ok(l == r)
    }

    fn associativity_sides(&self) -> Result<(LinearMap, LinearMap)> {
        let h = &self.hopf;
        let id = LinearMap::identity(&TensorSpace::power(h.space(), 2).tensor(self.space()));
        Ok((
            id.then(&self.nu, h.arity())?.then(&self.nu, 0)?,
            id.then(&h.alg.mul, 0)?.then(&self.nu, 0)?,
        ))
    }
}

/// `c^ν_{H,A}` of a measuring.
pub fn c_nu(m: &Measuring) -> Result<LinearMap> {
    m.c_nu()
}

/// Checks the measuring relations (1)–(3), the rewritten form (4), and
/// that `ν`, `μ_A`, `η_A` are `K`-linear.
pub fn check_measuring(m: &Measuring) -> Report {
    let mut r = Report::new(format!("measuring on {}", m.space()));
    let h = &m.hopf;
    let kh = h.arity();
    let ka = m.alg.arity();
    let ha = h.space().tensor(m.space());
    r.check_result(
        "(1) ν(η̄⊗id) = id",
        (|| {
            let id = LinearMap::identity(m.space());
            Ok((id.then(&h.alg.unit, 0)?.then(&m.nu, 0)?, id))
        })(),
    );
    r.check_result(
        "(2) ν(id⊗η_A) = η_A ε̄",
        (|| {
            let id = LinearMap::identity(h.space());
            Ok((
                id.then(&m.alg.unit, kh)?.then(&m.nu, 0)?,
                h.coalg.counit.then(&m.alg.unit, 0)?,
            ))
        })(),
    );
    let haa = ha.tensor(m.space());
    r.check_result(
        "(3) ν(id⊗μ_A) = μ_A(ν⊗ν)(id⊗c_{H,A}⊗id)(Δ̄⊗id⊗id)",
        (|| {
            let id = LinearMap::identity(&haa);
            let lhs = id.then(&m.alg.mul, kh)?.then(&m.nu, 0)?;
            let rhs = id
                .then(&h.coalg.comul, 0)?
                .then(&m.c_ha()?, kh)?
                .then(&m.nu, 0)?
                .then(&m.nu, ka)?
                .then(&m.alg.mul, 0)?;
            Ok((lhs, rhs))
        })(),
    );
    r.check_result(
        "(4) ν(id⊗μ_A) = μ_A(id⊗ν)(c^ν⊗id)",
        (|| {
            let id = LinearMap::identity(&haa);
            let lhs = id.then(&m.alg.mul, kh)?.then(&m.nu, 0)?;
            let rhs = id
                .then(&m.c_nu()?, 0)?
                .then(&m.nu, ka)?
                .then(&m.alg.mul, 0)?;
            Ok((lhs, rhs))
        })(),
    );
    if !h.is_classical() {
        r.check_result(
            "ν is K-linear",
            (|| module_morphism_sides(&m.nu, &h.module().tensor(&m.module)?, &m.module))(),
        );
        r.check_result(
            "μ_A is K-linear",
            (|| module_morphism_sides(&m.alg.mul, &m.module.tensor(&m.module)?, &m.module))(),
        );
        r.check_result(
            "η_A is K-linear",
            module_morphism_sides(
                &m.alg.unit,
                &Module::unit(m.module.ambient.clone()),
                &m.module,
            ),
        );
    }
    r
}

/// A right `H̄`-comodule algebra `B` in `K`-modules.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebra {
    pub hopf: Arc<HopfAlgebra>,
    pub alg: Algebra,
    pub module: Module,
    /// `ρ_B: B → B ⊗ H̄`.
    pub coaction: LinearMap,
}

impl ComoduleAlgebra {
    pub fn new(
        hopf: Arc<HopfAlgebra>,
        alg: Algebra,
        module: Module,
        coaction: LinearMap,
    ) -> Result<Self> {
        hopf.ambient()
            .require_same(&module.ambient, "comodule algebra")?;
        if module.space != alg.space {
            return Err(Error::shape(
                "comodule algebra module",
                &alg.space,
                &module.space,
            ));
        }
        let tgt = alg.space.tensor(hopf.space());
        if coaction.source() != &alg.space || coaction.target() != &tgt {
            return Err(Error::shape(
                "comodule algebra coaction",
                format!("{} -> {tgt}", alg.space),
                format!("{} -> {}", coaction.source(), coaction.target()),
            ));
        }
        Ok(ComoduleAlgebra {
            hopf,
            alg,
            module,
            coaction,
        })
    }

    /// `H̄` coacting on itself by `Δ̄`.
    pub fn regular(hopf: Arc<HopfAlgebra>) -> Self {
        ComoduleAlgebra {
            alg: hopf.alg.clone(),
            module: hopf.module().clone(),
            coaction: hopf.coalg.comul.clone(),
            hopf,
        }
    }

    pub fn space(&self) -> &TensorSpace {
        &self.alg.space
    }

    pub fn comodule(&self) -> HComodule {
        HComodule {
            hopf: self.hopf.clone(),
            object: self.module.clone(),
            coaction: self.coaction.clone(),
            side: Side::Right,
        }
    }

    /// `c_{H,B}`.
    pub fn c_hb(&self) -> Result<LinearMap> {
        braiding(&self.hopf.yd, &self.module)
    }

    /// The algebra `B ⊗ H̄` that `ρ_B` maps into.
    pub fn target_algebra(&self) -> Result<Algebra> {
        braided_tensor_algebra(&self.alg, &self.hopf.alg, &self.c_hb()?)
    }
}

/// Checks the comodule axioms, that `ρ_B` is an algebra morphism into
/// `B ⊗ H̄`, and `K`-linearity of the structure maps.
pub fn check_comodule_algebra(b: &ComoduleAlgebra) -> Report {
    let mut r = Report::new(format!("{}-comodule algebra {}", b.hopf.name, b.space()));
    r.absorb("", crate::hopfcore::check_algebra(&b.alg));
    r.absorb("", check_hcomodule(&b.comodule()));
    let kb = b.alg.arity();
    match b.target_algebra() {
        Ok(t) => {
            r.check_result(
                "ρ_B μ_B = μ_{B⊗H̄}(ρ_B⊗ρ_B)",
                (|| {
                    let lhs = b.alg.mul.then(&b.coaction, 0)?;
                    let rhs = LinearMap::identity(&TensorSpace::power(b.space(), 2))
                        .then(&b.coaction, 0)?
                        .then(&b.coaction, kb + b.hopf.arity())?
                        .then(&t.mul, 0)?;
                    Ok((lhs, rhs))
                })(),
            );
            r.check_result(
                "ρ_B η_B = η_B ⊗ η̄",
                (|| Ok((b.alg.unit.then(&b.coaction, 0)?, t.unit.clone())))(),
            );
        }
        Err(e) => r.fail("B ⊗ H̄ is an algebra", e.to_string()),
    }
    if !b.hopf.is_classical() {
        let m = &b.module;
        r.check_result(
            "μ_B is K-linear",
            (|| module_morphism_sides(&b.alg.mul, &m.tensor(m)?, m))(),
        );
        r.check_result(
            "η_B is K-linear",
            module_morphism_sides(&b.alg.unit, &Module::unit(m.ambient.clone()), m),
        );
        r.check_result(
            "ρ_B is K-linear",
            (|| module_morphism_sides(&b.coaction, m, &m.tensor(b.hopf.module())?))(),
        );
    }
    r
}

/// The coinvariants `B^co` with their induced algebra and `K`-module
/// structure and the equalizer map `ι: B^co → B`.
#[derive(Debug, Clone)]
pub struct Coinvariants {
    pub alg: Algebra,
    pub module: Module,
    pub iota: LinearMap,
}

/// Equalizer of `ρ_B` and `id⊗η̄` with the unique unit, multiplication and
/// `K`-action making `ι` a morphism.
pub fn coinvariants(b: &ComoduleAlgebra) -> Result<Coinvariants> {
    let kb = b.alg.arity();
    let id_eta = LinearMap::identity(b.space()).then(&b.hopf.alg.unit, kb)?;
    let (space, iota) = equalizer("Bco", &b.coaction, &id_eta)?;
    let induced = |what: &str, e: Error| Error::InducedStructureFailure(format!("{what}: {e}"));
    let unit = factor_through(&iota, &b.alg.unit).map_err(|e| induced("unit", e))?;
    let mul_b = iota.tensor(&iota)?.then(&b.alg.mul, 0)?;
    let mul = factor_through(&iota, &mul_b).map_err(|e| induced("multiplication", e))?;
    let amb = b.module.ambient.clone();
    let act_b = LinearMap::identity(&amb.space().tensor(&space))
        .then(&iota, amb.arity())?
        .then(&b.module.action, 0)?;
    let action = factor_through(&iota, &act_b).map_err(|e| induced("K-action", e))?;
    let module = Module::new(amb, space, action)?;
    Ok(Coinvariants {
        alg: Algebra::new(mul, unit)?,
        module,
        iota,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{group_algebra, quantum_line_over_cyclic};
    use crate::hopfcore::{check_algebra, check_coalgebra};
    use crate::linspace::BasedSpace;

    fn f3() -> FieldSpec {
        FieldSpec::Prime(3)
    }

    #[test]
    fn quantum_line_braiding() {
        let (_, r) = quantum_line_over_cyclic(f3(), 2, 2).unwrap();
        let c = braiding(&r.yd, r.module()).unwrap();
        let xx = c.source().index_of_label("x⊗x").unwrap();
        assert_eq!(c.format_column(xx), "2·x⊗x");
        let x1 = c.source().index_of_label("x⊗1").unwrap();
        assert_eq!(c.format_column(x1), "1⊗x");
        assert_eq!(c, r.braiding);
    }

    #[test]
    fn braiding_with_unit_is_identity() {
        let (k, r) = quantum_line_over_cyclic(f3(), 2, 2).unwrap();
        let amb = Ambient::over(k).unwrap();
        let one = YdModule::unit(amb.clone());
        assert_eq!(
            braiding(&one, r.module()).unwrap(),
            LinearMap::identity(r.space())
        );
        assert_eq!(
            braiding(&r.yd, &Module::unit(amb)).unwrap(),
            LinearMap::identity(r.space())
        );
    }

    #[test]
    fn braiding_axioms_on_quantum_lines() {
        for (field, n, order) in [
            (f3(), 2, 2),
            (FieldSpec::Prime(5), 4, 2),
            (FieldSpec::Prime(5), 4, 4),
        ] {
            let (k, r) = quantum_line_over_cyclic(field, n, order).unwrap();
            let amb = Ambient::over(k.clone()).unwrap();
            let regular = Module::new(amb.clone(), k.space().clone(), k.alg.mul.clone()).unwrap();
            let g = LinearMap::identity(r.space());
            let rep = check_braiding_axioms(&r.yd, &r.yd, r.module(), r.module(), &r.antipode, &g);
            assert!(rep.all_passed(), "{rep}");
            let id = LinearMap::identity(k.space());
            let rep = check_braiding_axioms(
                &r.yd,
                &r.yd,
                &regular,
                &regular,
                &LinearMap::identity(r.space()),
                &id,
            );
            assert!(rep.all_passed(), "{rep}");
            let rep = check_yd(&r.yd);
            assert!(rep.all_passed(), "{rep}");
        }
    }

    #[test]
    fn broken_yd_condition_is_detected() {
        let k = Arc::new(group_algebra(f3(), 2).unwrap());
        let amb = Ambient::over(k.clone()).unwrap();
        let v = TensorSpace::single(&BasedSpace::new("V", ["a", "b"], f3()).unwrap());
        let kv = amb.space().tensor(&v);
        // g swaps a and b while δ(a) = 1⊗a, δ(b) = g⊗b
        let action = LinearMap::from_fn(kv.clone(), v.clone(), |j| {
            let (i, x) = (j / 2, j % 2);
            Ok(vec![(if i == 0 { x } else { 1 - x }, f3().one())])
        })
        .unwrap();
        let coaction =
            LinearMap::from_fn(v.clone(), kv, |x| Ok(vec![(x * 2 + x, f3().one())])).unwrap();
        let y = YdModule::new(Module::new(amb, v.clone(), action).unwrap(), coaction).unwrap();
        let rep = check_yd(&y);
        assert!(!rep.passed("Yetter–Drinfeld compatibility"));
        let id = LinearMap::identity(&v);
        let rep = check_braiding_axioms(&y, &y, &y.module, &y.module, &id, &id);
        assert!(!rep.passed("c is K-linear"), "{rep}");
    }

    #[test]
    fn braided_tensor_algebra_of_group_and_line() {
        let (k, r) = quantum_line_over_cyclic(f3(), 2, 2).unwrap();
        let amb = Ambient::over(k.clone()).unwrap();
        // kC_2 is commutative, so its adjoint action is trivial
        let a_mod = Module::trivial(amb, k.space().clone());
        let c = braiding(&r.yd, &a_mod).unwrap();
        let t = braided_tensor_algebra(&k.alg, &r.alg, &c).unwrap();
        assert!(check_algebra(&t).all_passed());
        let sq = TensorSpace::power(&t.space, 2);
        let j = sq.index_of_label("1⊗x⊗g⊗1").unwrap();
        assert_eq!(t.mul.format_column(j), "g⊗x");
        let one = Algebra::unit_algebra(f3());
        let trivial =
            braided_tensor_algebra(&one, &r.alg, &LinearMap::identity(r.space())).unwrap();
        assert_eq!(trivial, r.alg);
    }

    #[test]
    fn braided_square_coalgebra() {
        let (_, r) = quantum_line_over_cyclic(f3(), 2, 2).unwrap();
        let c = r.tensor_square_coalgebra().unwrap();
        assert!(check_coalgebra(&c).all_passed());
        let col = |l: &str| c.comul.format_column(c.space.index_of_label(l).unwrap());
        assert_eq!(col("x⊗1"), "1⊗1⊗x⊗1 + x⊗1⊗1⊗1");
        assert_eq!(col("x⊗x"), "1⊗1⊗x⊗x + 2·1⊗x⊗x⊗1 + x⊗1⊗1⊗x + x⊗x⊗1⊗1");
        let k = group_algebra(f3(), 2).unwrap();
        let kk = k.tensor_square_coalgebra().unwrap();
        assert_eq!(col("1⊗1"), "1⊗1⊗1⊗1");
        assert_eq!(kk.comul.format_column(3), "g⊗g⊗g⊗g");
        assert!(check_algebra(&r.tensor_square_algebra().unwrap()).all_passed());
    }

    #[test]
    fn module_and_comodule_tensors() {
        let (_, r) = quantum_line_over_cyclic(FieldSpec::Prime(5), 4, 2).unwrap();
        let r = Arc::new(r);
        let reg = HModule::regular(r.clone());
        assert!(check_hmodule(&reg).all_passed());
        let t = module_tensor(&reg, &reg).unwrap();
        let rep = check_hmodule(&t);
        assert!(rep.all_passed(), "{rep}");
        let one = HModule::trivial(r.clone(), Module::unit(r.ambient().clone())).unwrap();
        assert_eq!(module_tensor(&one, &reg).unwrap().action, reg.action);
        assert_eq!(module_tensor(&reg, &one).unwrap().action, reg.action);

        let co = HComodule::regular(r.clone(), Side::Right);
        let t = comodule_tensor(&co, &co).unwrap();
        let rep = check_hcomodule(&t);
        assert!(rep.all_passed(), "{rep}");
        let left = HComodule::regular(r, Side::Left);
        assert!(check_hcomodule(&left).all_passed());
        assert!(matches!(
            comodule_tensor(&co, &left),
            Err(Error::SideMismatch(_))
        ));
    }

    #[test]
    fn diagonal_action_on_tensor_square() {
        let (_, r) = quantum_line_over_cyclic(f3(), 2, 2).unwrap();
        let m = r.module().tensor(r.module()).unwrap();
        let j = m.action.source().index_of_label("g⊗x⊗x").unwrap();
        assert_eq!(m.action.format_column(j), "x⊗x");
        assert!(check_module(&m).all_passed());
    }

    fn functions_on_c2(h: &Arc<HopfAlgebra>) -> (Algebra, LinearMap) {
        let f = h.field();
        let a = TensorSpace::single(&BasedSpace::new("A", ["e0", "e1"], f).unwrap());
        let aa = a.tensor(&a);
        let mul = LinearMap::from_fn(aa, a.clone(), |j| {
            Ok(if j / 2 == j % 2 {
                vec![(j / 2, f.one())]
            } else {
                vec![]
            })
        })
        .unwrap();
        let unit = LinearMap::from_fn(TensorSpace::unit(f), a.clone(), |_| {
            Ok(vec![(0, f.one()), (1, f.one())])
        })
        .unwrap();
        let nu = LinearMap::from_fn(h.space().tensor(&a), a, |j| {
            let (g, x) = (j / 2, j % 2);
            Ok(vec![((x + g) % 2, f.one())])
        })
        .unwrap();
        (Algebra::new(mul, unit).unwrap(), nu)
    }

    #[test]
    fn measurings() {
        let h = Arc::new(group_algebra(f3(), 2).unwrap());
        let unit = Measuring::unit(h.clone());
        assert!(check_measuring(&unit).all_passed());
        assert_eq!(unit.c_nu().unwrap(), LinearMap::identity(h.space()));

        let (alg, nu) = functions_on_c2(&h);
        let module = Module::classical(&alg.space);
        let m = Measuring::new(h.clone(), alg.clone(), module.clone(), nu.clone()).unwrap();
        assert!(check_measuring(&m).all_passed());
        assert!(m.is_module_algebra().unwrap());
        let cn = m.c_nu().unwrap();
        assert_eq!(cn.then(&h.coalg.counit, 1).unwrap(), nu);

        let mut cols = nu.columns().to_vec();
        cols[2] = vec![(0, f3().one()), (1, f3().one())];
        let bad_nu =
            LinearMap::from_columns(nu.source().clone(), nu.target().clone(), cols).unwrap();
        let bad = Measuring::new(h, alg, module, bad_nu).unwrap();
        let rep = check_measuring(&bad);
        assert!(!rep.passed("(3) ν(id⊗μ_A) = μ_A(ν⊗ν)(id⊗c_{H,A}⊗id)(Δ̄⊗id⊗id)"));
        assert!(rep
            .find("(3) ν(id⊗μ_A) = μ_A(ν⊗ν)(id⊗c_{H,A}⊗id)(Δ̄⊗id⊗id)")
            .unwrap()
            .witness
            .is_some());
    }

    #[test]
    fn regular_coinvariants_are_trivial() {
        let h = Arc::new(group_algebra(f3(), 2).unwrap());
        let b = ComoduleAlgebra::regular(h);
        assert!(check_comodule_algebra(&b).all_passed());
        let co = coinvariants(&b).unwrap();
        assert_eq!(co.alg.space.dim(), 1);
        assert!(check_algebra(&co.alg).all_passed());
        assert_eq!(co.iota.format_column(0), "1");

        let (_, r) = quantum_line_over_cyclic(FieldSpec::Prime(5), 4, 2).unwrap();
        let b = ComoduleAlgebra::regular(Arc::new(r));
        let rep = check_comodule_algebra(&b);
        assert!(rep.all_passed(), "{rep}");
        assert_eq!(coinvariants(&b).unwrap().alg.space.dim(), 1);
    }
}
