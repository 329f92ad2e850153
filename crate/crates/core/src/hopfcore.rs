//! Algebras, coalgebras, bialgebras and Hopf algebras by structure constants.
//!
//! A bialgebra lives in the category of Yetter–Drinfeld modules over an
//! ambient Hopf algebra `K` (see [`crate::braidmod`]); its compatibility
//! axiom uses the braiding `c_{H,H}` rather than the flip. With the trivial
//! ambient `K = 𝕜` the braiding is the flip and everything is classical.

use std::ops::Deref;
use std::sync::Arc;

use crate::braidmod::{braiding, Ambient, Module, YdModule};
use crate::error::{Error, Result};
use crate::linspace::{solve_rows, LinearMap, TensorSpace};
use crate::report::Report;
use crate::scalar::FieldSpec;

/// An associative unital algebra `(A, μ, η)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub space: TensorSpace,
    pub mul: LinearMap,
    pub unit: LinearMap,
}

impl Algebra {
    pub fn new(mul: LinearMap, unit: LinearMap) -> Result<Self> {
        let space = unit.target().clone();
        let sq = space.tensor(&space);
        if mul.source() != &sq || mul.target() != &space {
            return Err(Error::shape(
                "algebra multiplication",
                format!("{sq} -> {space}"),
                format!("{} -> {}", mul.source(), mul.target()),
            ));
        }
        if !unit.source().is_unit() {
            return Err(Error::shape("algebra unit", "𝟙", unit.source()));
        }
        Ok(Algebra { space, mul, unit })
    }

    /// The unit object `𝟙` as an algebra.
    pub fn unit_algebra(field: FieldSpec) -> Self {
        let one = TensorSpace::unit(field);
        let id = LinearMap::identity(&one);
        Algebra {
            space: one,
            mul: id.clone(),
            unit: id,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field()
    }

    /// Number of tensor factors of the underlying space.
    pub fn arity(&self) -> usize {
        self.space.len()
    }
}

/// A coassociative counital coalgebra `(C, Δ, ε)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    pub space: TensorSpace,
    pub comul: LinearMap,
    pub counit: LinearMap,
}

impl Coalgebra {
    pub fn new(comul: LinearMap, counit: LinearMap) -> Result<Self> {
        let space = counit.source().clone();
        let sq = space.tensor(&space);
        if comul.source() != &space || comul.target() != &sq {
            return Err(Error::shape(
                "comultiplication",
                format!("{space} -> {sq}"),
                format!("{} -> {}", comul.source(), comul.target()),
            ));
        }
        if !counit.target().is_unit() {
            return Err(Error::shape("counit", "𝟙", counit.target()));
        }
        Ok(Coalgebra {
            space,
            comul,
            counit,
        })
    }

    pub fn unit_coalgebra(field: FieldSpec) -> Self {
        let one = TensorSpace::unit(field);
        let id = LinearMap::identity(&one);
        Coalgebra {
            space: one,
            comul: id.clone(),
            counit: id,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field()
    }

    pub fn arity(&self) -> usize {
        self.space.len()
    }
}

/// Checks associativity and both unit laws on the full basis.
pub fn check_algebra(a: &Algebra) -> Report {
    let mut r = Report::new(format!("algebra on {}", a.space));
    let k = a.arity();
    let cube = TensorSpace::power(&a.space, 3);
    let id3 = LinearMap::identity(&cube);
    r.check_result(
        "associativity μ(μ⊗id) = μ(id⊗μ)",
        (|| {
            Ok((
                id3.then(&a.mul, 0)?.then(&a.mul, 0)?,
                id3.then(&a.mul, k)?.then(&a.mul, 0)?,
            ))
        })(),
    );
    let id = LinearMap::identity(&a.space);
    r.check_result(
        "left unit μ(η⊗id) = id",
        (|| Ok((id.then(&a.unit, 0)?.then(&a.mul, 0)?, id.clone())))(),
    );
    r.check_result(
        "right unit μ(id⊗η) = id",
        (|| Ok((id.then(&a.unit, k)?.then(&a.mul, 0)?, id.clone())))(),
    );
    r
}

/// Checks coassociativity and both counit laws on the full basis.
pub fn check_coalgebra(c: &Coalgebra) -> Report {
    let mut r = Report::new(format!("coalgebra on {}", c.space));
    let k = c.arity();
    r.check_result(
        "coassociativity (Δ⊗id)Δ = (id⊗Δ)Δ",
        (|| Ok((c.comul.then(&c.comul, 0)?, c.comul.then(&c.comul, k)?)))(),
    );
    let id = LinearMap::identity(&c.space);
    r.check_result(
        "left counit (ε⊗id)Δ = id",
        (|| Ok((c.comul.then(&c.counit, 0)?, id.clone())))(),
    );
    r.check_result(
        "right counit (id⊗ε)Δ = id",
        (|| Ok((c.comul.then(&c.counit, k)?, id.clone())))(),
    );
    r
}

/// `μ^n: A^{⊗(n+1)} → A`, nested to the left.
pub fn iterated_mul(a: &Algebra, n: usize) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::Validation(
            "iterated multiplication needs n ≥ 1".into(),
        ));
    }
    let mut m = LinearMap::identity(&TensorSpace::power(&a.space, n + 1));
    for _ in 0..n {
        m = m.then(&a.mul, 0)?;
    }
    Ok(m)
}

/// `Δ^n: C → C^{⊗(n+1)}`, always splitting the leftmost factor.
pub fn iterated_comul(c: &Coalgebra, n: usize) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::Validation(
            "iterated comultiplication needs n ≥ 1".into(),
        ));
    }
    let mut m = c.comul.clone();
    for _ in 1..n {
        m = m.then(&c.comul, 0)?;
    }
    Ok(m)
}

fn check_hom(f: &LinearMap, c: &Coalgebra, a: &Algebra, what: &str) -> Result<()> {
    if f.source() != &c.space || f.target() != &a.space {
        return Err(Error::shape(
            what,
            format!("{} -> {}", c.space, a.space),
            format!("{} -> {}", f.source(), f.target()),
        ));
    }
    Ok(())
}

/// `f ∗ g = μ_A (f ⊗ g) Δ_C`.
pub fn convolution(f: &LinearMap, g: &LinearMap, c: &Coalgebra, a: &Algebra) -> Result<LinearMap> {
    check_hom(f, c, a, "convolution left factor")?;
    check_hom(g, c, a, "convolution right factor")?;
    c.comul.then(f, 0)?.then(g, a.arity())?.then(&a.mul, 0)
}

/// The unit `η_A ε_C` of the convolution algebra.
pub fn convolution_unit(c: &Coalgebra, a: &Algebra) -> Result<LinearMap> {
    c.counit.then(&a.unit, 0)
}

/// Two-sided convolution inverse of `f`.
///
/// Solves the linear system `f ∗ g = η ε` for `g` in one exact elimination
/// and then checks `g ∗ f = η ε` explicitly.
pub fn convolution_inverse(f: &LinearMap, c: &Coalgebra, a: &Algebra) -> Result<LinearMap> {
    check_hom(f, c, a, "convolution inverse")?;
    let dc = c.space.dim();
    let da = a.space.dim();
    let n = dc * da;
    // Unknown g[b][c] sits at variable c * da + b; row (c, out) is the
    // `out` coordinate of (f ∗ g)(c).
    let mut rows: Vec<Vec<(usize, crate::scalar::Scalar)>> = vec![Vec::new(); n];
    for col in 0..dc {
        for (idx, alpha) in c.comul.column(col) {
            let (ci, cj) = (idx / dc, idx % dc);
            for (k, beta) in f.column(ci) {
                let ab = alpha * beta;
                for b in 0..da {
                    for (out, m) in a.mul.column(k * da + b) {
                        rows[col * da + out].push((cj * da + b, &ab * m));
                    }
                }
            }
        }
    }
    let unit = convolution_unit(c, a)?;
    for col in 0..dc {
        for (out, v) in unit.column(col) {
            rows[col * da + out].push((n, v.clone()));
        }
    }
    let rows = rows.into_iter().map(crate::linspace::normalize).collect();
    let singular = || Error::NotInvertible(format!("{} -> {}", f.source(), f.target()));
    let (x, unique) = solve_rows(rows, n).map_err(|_| singular())?;
    if !unique {
        return Err(singular());
    }
    let mut cols = vec![Vec::new(); dc];
    for (var, v) in x {
        cols[var / da].push((var % da, v));
    }
    let g = LinearMap::from_columns(c.space.clone(), a.space.clone(), cols)?;
    if convolution(&g, f, c, a)? != unit {
        return Err(Error::NotInvertible(format!(
            "right inverse of {} -> {} is not a left inverse",
            f.source(),
            f.target()
        )));
    }
    Ok(g)
}

/// A bialgebra in Yetter–Drinfeld modules over its ambient Hopf algebra.
#[derive(Debug, Clone)]
pub struct Bialgebra {
    pub name: String,
    pub alg: Algebra,
    pub coalg: Coalgebra,
    /// The Yetter–Drinfeld structure of the underlying space.
    pub yd: YdModule,
    /// `c_{H,H}`, used for the algebra structure on `H ⊗ H`.
    pub braiding: LinearMap,
}

impl Bialgebra {
    pub fn new(
        name: impl Into<String>,
        alg: Algebra,
        coalg: Coalgebra,
        yd: YdModule,
    ) -> Result<Self> {
        if alg.space != coalg.space || alg.space != yd.module.space {
            return Err(Error::shape(
                "bialgebra",
                &alg.space,
                format!("{} / {}", coalg.space, yd.module.space),
            ));
        }
        let braiding = braiding(&yd, &yd.module)?;
        Ok(Bialgebra {
            name: name.into(),
            alg,
            coalg,
            yd,
            braiding,
        })
    }

    /// A bialgebra with trivial ambient, braided by the flip.
    pub fn classical(name: impl Into<String>, alg: Algebra, coalg: Coalgebra) -> Result<Self> {
        let yd = YdModule::classical(&alg.space);
        Self::new(name, alg, coalg, yd)
    }

    pub fn space(&self) -> &TensorSpace {
        &self.alg.space
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn arity(&self) -> usize {
        self.alg.arity()
    }

    pub fn ambient(&self) -> &Ambient {
        &self.yd.module.ambient
    }

    pub fn is_classical(&self) -> bool {
        self.ambient().is_trivial()
    }

    /// The algebra `H ⊗ H` with multiplication `(μ⊗μ)(id⊗c⊗id)`.
    pub fn tensor_square_algebra(&self) -> Result<Algebra> {
        crate::braidmod::braided_tensor_algebra(&self.alg, &self.alg, &self.braiding)
    }

    /// The coalgebra `H ⊗ H` with comultiplication `(id⊗c⊗id)(Δ⊗Δ)`.
    pub fn tensor_square_coalgebra(&self) -> Result<Coalgebra> {
        crate::braidmod::braided_tensor_coalgebra(&self.coalg, &self.coalg, &self.braiding)
    }

    /// The underlying object as a module over the ambient Hopf algebra.
    pub fn module(&self) -> &Module {
        &self.yd.module
    }
}

/// Checks the algebra, coalgebra and braided compatibility axioms, and that
/// the structure maps are morphisms of Yetter–Drinfeld modules.
pub fn check_bialgebra(b: &Bialgebra) -> Report {
    let mut r = Report::new(format!("bialgebra {}", b.name));
    r.absorb("", check_algebra(&b.alg));
    r.absorb("", check_coalgebra(&b.coalg));
    let k = b.arity();
    let cmp = || -> Result<(LinearMap, LinearMap)> {
        let lhs = b.alg.mul.then(&b.coalg.comul, 0)?;
        let sq = b.tensor_square_algebra()?;
        let rhs = LinearMap::identity(&TensorSpace::power(b.space(), 2))
            .then(&b.coalg.comul, 0)?
            .then(&b.coalg.comul, 2 * k)?
            .then(&sq.mul, 0)?;
        Ok((lhs, rhs))
    };
    r.check_result("Δμ = (μ⊗μ)(id⊗c⊗id)(Δ⊗Δ)", cmp());
    r.check_result(
        "Δη = η⊗η",
        (|| {
            Ok((
                b.alg.unit.then(&b.coalg.comul, 0)?,
                b.alg.unit.then(&b.alg.unit, k)?,
            ))
        })(),
    );
    r.check_result(
        "εμ = ε⊗ε",
        (|| {
            let two = LinearMap::identity(&TensorSpace::power(b.space(), 2));
            Ok((
                b.alg.mul.then(&b.coalg.counit, 0)?,
                two.then(&b.coalg.counit, 0)?.then(&b.coalg.counit, 0)?,
            ))
        })(),
    );
    r.check_result(
        "εη = 1",
        (|| {
            Ok((
                b.alg.unit.then(&b.coalg.counit, 0)?,
                LinearMap::identity(&TensorSpace::unit(b.field())),
            ))
        })(),
    );
    if !b.is_classical() {
        r.absorb("", crate::braidmod::check_yd(&b.yd));
        let sq = crate::braidmod::yd_tensor(&b.yd, &b.yd);
        match sq {
            Ok(sq) => {
                let one = YdModule::unit(b.ambient().clone());
                crate::braidmod::check_yd_morphism(&mut r, "μ", &b.alg.mul, &sq, &b.yd);
                crate::braidmod::check_yd_morphism(&mut r, "η", &b.alg.unit, &one, &b.yd);
                crate::braidmod::check_yd_morphism(&mut r, "Δ", &b.coalg.comul, &b.yd, &sq);
                crate::braidmod::check_yd_morphism(&mut r, "ε", &b.coalg.counit, &b.yd, &one);
            }
            Err(e) => r.fail("H⊗H is a Yetter–Drinfeld module", e.to_string()),
        }
    }
    r
}

/// The convolution inverse of the identity, or [`Error::NotHopf`].
pub fn antipode(b: &Bialgebra) -> Result<LinearMap> {
    let id = LinearMap::identity(b.space());
    convolution_inverse(&id, &b.coalg, &b.alg).map_err(|e| match e {
        Error::NotInvertible(_) => Error::NotHopf(b.name.clone()),
        other => other,
    })
}

/// A Hopf algebra: a bialgebra whose identity has the convolution inverse `antipode`.
#[derive(Debug, Clone)]
pub struct HopfAlgebra {
    pub bialg: Bialgebra,
    pub antipode: LinearMap,
}

impl Deref for HopfAlgebra {
    type Target = Bialgebra;
    fn deref(&self) -> &Bialgebra {
        &self.bialg
    }
}

impl HopfAlgebra {
    /// Attaches an antipode, computing it when `antipode` is `None`.
    pub fn new(bialg: Bialgebra, antipode: Option<LinearMap>) -> Result<Self> {
        let antipode = match antipode {
            Some(s) => {
                let id = LinearMap::identity(bialg.space());
                if s.source() != id.source() || s.target() != id.target() {
                    return Err(Error::shape("antipode", bialg.space(), s.source()));
                }
                s
            }
            None => self::antipode(&bialg)?,
        };
        Ok(HopfAlgebra { bialg, antipode })
    }

    /// A classical Hopf algebra (trivial ambient, flip braiding).
    pub fn classical(
        name: impl Into<String>,
        alg: Algebra,
        coalg: Coalgebra,
        s: Option<LinearMap>,
    ) -> Result<Self> {
        Self::new(Bialgebra::classical(name, alg, coalg)?, s)
    }

    /// The ground field `𝕜` as a Hopf algebra on `𝟙`.
    pub fn trivial(field: FieldSpec) -> Self {
        let alg = Algebra::unit_algebra(field);
        let coalg = Coalgebra::unit_coalgebra(field);
        let id = alg.mul.clone();
        HopfAlgebra::classical("k", alg, coalg, Some(id))
            .expect("the unit object is a Hopf algebra")
    }

    pub fn into_arc(self) -> Arc<HopfAlgebra> {
        Arc::new(self)
    }
}

/// Checks the bialgebra axioms, both antipode equations, and the braided
/// antimorphism identities `μ(S⊗S)c = Sμ` and `ΔS = c(S⊗S)Δ`.
pub fn check_hopf(h: &HopfAlgebra) -> Report {
    let mut r = check_bialgebra(&h.bialg);
    r.title = format!("Hopf algebra {}", h.name);
    let id = LinearMap::identity(h.space());
    let unit = match convolution_unit(&h.coalg, &h.alg) {
        Ok(u) => u,
        Err(e) => {
            r.fail("convolution unit", e.to_string());
            return r;
        }
    };
    r.check_result(
        "id ∗ S = ηε",
        (|| {
            Ok((
                convolution(&id, &h.antipode, &h.coalg, &h.alg)?,
                unit.clone(),
            ))
        })(),
    );
    r.check_result(
        "S ∗ id = ηε",
        (|| {
            Ok((
                convolution(&h.antipode, &id, &h.coalg, &h.alg)?,
                unit.clone(),
            ))
        })(),
    );
    let k = h.arity();
    r.check_result(
        "μ(S⊗S)c = Sμ",
        (|| {
            let lhs = h
                .braiding
                .then(&h.antipode, 0)?
                .then(&h.antipode, k)?
                .then(&h.alg.mul, 0)?;
            Ok((lhs, h.alg.mul.then(&h.antipode, 0)?))
        })(),
    );
    r.check_result(
        "ΔS = c(S⊗S)Δ",
        (|| {
            let rhs = h
                .coalg
                .comul
                .then(&h.antipode, 0)?
                .then(&h.antipode, k)?
                .then(&h.braiding, 0)?;
            Ok((h.antipode.then(&h.coalg.comul, 0)?, rhs))
        })(),
    );
    r
}

/// Whether `psi: A → A'` is an algebra morphism.
pub fn is_algebra_morphism(psi: &LinearMap, a: &Algebra, a2: &Algebra) -> Result<bool> {
    let lhs = a.mul.then(psi, 0)?;
    let rhs = LinearMap::identity(&TensorSpace::power(&a.space, 2))
        .then(psi, 0)?
        .then(psi, a2.arity())?
        .then(&a2.mul, 0)?;
    Ok(lhs == rhs && a.unit.then(psi, 0)? == a2.unit)
}

/// Whether `phi: C' → C` is a coalgebra morphism.
pub fn is_coalgebra_morphism(phi: &LinearMap, c2: &Coalgebra, c: &Coalgebra) -> Result<bool> {
    let lhs = phi.then(&c.comul, 0)?;
    let rhs = c2.comul.then(phi, 0)?.then(phi, c.arity())?;
    Ok(lhs == rhs && phi.then(&c.counit, 0)? == c2.counit)
}

/// Checks `ψ(f ∗ g)φ = (ψfφ) ∗ (ψgφ)` and, when `f` is convolution
/// invertible, `(ψfφ)^{-1} = ψ f^{-1} φ`.
#[allow(clippy::too_many_arguments)]
pub fn check_conv_naturality(
    psi: &LinearMap,
    f: &LinearMap,
    g: &LinearMap,
    phi: &LinearMap,
    c: &Coalgebra,
    a: &Algebra,
    c2: &Coalgebra,
    a2: &Algebra,
) -> Report {
    let mut r = Report::new("convolution naturality");
    match is_algebra_morphism(psi, a, a2) {
        Ok(true) => r.pass("ψ is an algebra morphism"),
        Ok(false) => r.fail("ψ is an algebra morphism", "hypothesis fails"),
        Err(e) => r.fail("ψ is an algebra morphism", e.to_string()),
    }
    match is_coalgebra_morphism(phi, c2, c) {
        Ok(true) => r.pass("φ is a coalgebra morphism"),
        Ok(false) => r.fail("φ is a coalgebra morphism", "hypothesis fails"),
        Err(e) => r.fail("φ is a coalgebra morphism", e.to_string()),
    }
    let sandwich = |m: &LinearMap| phi.then(m, 0)?.then(psi, 0);
    r.check_result(
        "ψ(f∗g)φ = (ψfφ)∗(ψgφ)",
        (|| {
            let lhs = sandwich(&convolution(f, g, c, a)?)?;
            let rhs = convolution(&sandwich(f)?, &sandwich(g)?, c2, a2)?;
            Ok((lhs, rhs))
        })(),
    );
    if let Ok(finv) = convolution_inverse(f, c, a) {
        r.check_result(
            "(ψfφ)^{-1} = ψf^{-1}φ",
            (|| {
                Ok((
                    convolution_inverse(&sandwich(f)?, c2, a2)?,
                    sandwich(&finv)?,
                ))
            })(),
        );
    } else {
        r.note("f is not convolution invertible; inverse compatibility skipped");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{group_algebra, idempotent_monoid_bialgebra, quantum_line_over_cyclic};
    use crate::scalar::Scalar;
    use proptest::prelude::*;

    fn f3() -> FieldSpec {
        FieldSpec::Prime(3)
    }

    #[test]
    fn group_algebra_axioms() {
        for n in [1, 2, 3, 4] {
            let h = group_algebra(f3(), n).unwrap();
            let r = check_hopf(&h);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn corrupted_product_fails_associativity() {
        let h = group_algebra(f3(), 2).unwrap();
        // g·1 = 1 instead of g
        let mut cols: Vec<_> = h.alg.mul.columns().to_vec();
        cols[2] = vec![(0, f3().one())];
        let mul =
            LinearMap::from_columns(h.alg.mul.source().clone(), h.alg.mul.target().clone(), cols)
                .unwrap();
        let bad = Algebra::new(mul, h.alg.unit.clone()).unwrap();
        let r = check_algebra(&bad);
        assert!(!r.passed("associativity μ(μ⊗id) = μ(id⊗μ)"));
        assert!(!r.passed("right unit μ(id⊗η) = id"));
    }

    #[test]
    fn unit_object_is_hopf() {
        let k = HopfAlgebra::trivial(f3());
        assert!(check_hopf(&k).all_passed());
        assert_eq!(
            antipode(&k).unwrap(),
            LinearMap::identity(&TensorSpace::unit(f3()))
        );
        let m3 = iterated_mul(&k.alg, 3).unwrap();
        assert_eq!(m3, LinearMap::identity(&TensorSpace::unit(f3())));
    }

    #[test]
    fn iterated_structure() {
        let h = group_algebra(f3(), 2).unwrap();
        assert_eq!(iterated_mul(&h.alg, 1).unwrap(), h.alg.mul);
        assert_eq!(iterated_comul(&h.coalg, 1).unwrap(), h.coalg.comul);
        let m2 = iterated_mul(&h.alg, 2).unwrap();
        let ggg = m2.source().index_of_label("g⊗g⊗g").unwrap();
        assert_eq!(m2.format_column(ggg), "g");
        let d2 = iterated_comul(&h.coalg, 2).unwrap();
        assert_eq!(d2.format_column(1), "g⊗g⊗g");
        let (_, r) = quantum_line_over_cyclic(f3(), 2, 2).unwrap();
        let d2 = iterated_comul(&r.coalg, 2).unwrap();
        assert_eq!(d2.format_column(1), "1⊗1⊗x + 1⊗x⊗1 + x⊗1⊗1");
    }

    #[test]
    fn convolution_unit_and_antipode() {
        let h = group_algebra(f3(), 2).unwrap();
        let id = LinearMap::identity(h.space());
        let u = convolution_unit(&h.coalg, &h.alg).unwrap();
        assert_eq!(convolution(&id, &u, &h.coalg, &h.alg).unwrap(), id);
        assert_eq!(convolution(&u, &id, &h.coalg, &h.alg).unwrap(), id);
        assert_eq!(convolution(&id, &h.antipode, &h.coalg, &h.alg).unwrap(), u);
        assert_eq!(convolution_inverse(&u, &h.coalg, &h.alg).unwrap(), u);
        assert_eq!(convolution_inverse(&id, &h.coalg, &h.alg).unwrap(), id);
    }

    #[test]
    fn antipode_of_cyclic_group_inverts() {
        let h = group_algebra(FieldSpec::Rationals, 5).unwrap();
        let s = antipode(&h).unwrap();
        for i in 0..5 {
            assert_eq!(s.column(i), &[((5 - i) % 5, FieldSpec::Rationals.one())]);
        }
    }

    #[test]
    fn idempotent_monoid_is_not_hopf() {
        let b = idempotent_monoid_bialgebra(f3()).unwrap();
        assert!(check_bialgebra(&b).all_passed());
        assert!(matches!(antipode(&b), Err(Error::NotHopf(_))));
        assert!(HopfAlgebra::new(b, None).is_err());
    }

    #[test]
    fn quantum_lines_are_braided_hopf_algebras() {
        for (field, n, order) in [
            (f3(), 2, 2),
            (FieldSpec::Prime(5), 4, 2),
            (FieldSpec::Prime(5), 4, 4),
        ] {
            let (_, r) = quantum_line_over_cyclic(field, n, order).unwrap();
            let rep = check_hopf(&r);
            assert!(rep.all_passed(), "{rep}");
            // x is primitive and the antipode is -x
            assert_eq!(
                r.antipode.format_column(1),
                format!("{}·x", field.from_i64(-1))
            );
        }
    }

    #[test]
    fn quantum_line_needs_braided_compatibility() {
        let (_, r) = quantum_line_over_cyclic(f3(), 2, 2).unwrap();
        let flipped = Bialgebra::classical("flip", r.alg.clone(), r.coalg.clone()).unwrap();
        let rep = check_bialgebra(&flipped);
        assert!(!rep.passed("Δμ = (μ⊗μ)(id⊗c⊗id)(Δ⊗Δ)"));
    }

    #[test]
    fn naturality_with_counit() {
        let h = group_algebra(f3(), 2).unwrap();
        let k = HopfAlgebra::trivial(f3());
        let id = LinearMap::identity(h.space());
        let rep = check_conv_naturality(
            &h.coalg.counit,
            &id,
            &id,
            &id,
            &h.coalg,
            &h.alg,
            &h.coalg,
            &k.alg,
        );
        assert!(rep.all_passed(), "{rep}");
        let lhs = convolution(&h.coalg.counit, &h.coalg.counit, &h.coalg, &k.alg).unwrap();
        assert_eq!(lhs, h.coalg.counit);
    }

    fn arb_map(n: usize, p: u64) -> impl Strategy<Value = Vec<u64>> {
        proptest::collection::vec(0..p, n * n)
    }

    fn map_from(h: &HopfAlgebra, vals: &[u64]) -> LinearMap {
        let f = h.field();
        let n = h.space().dim();
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| f.from_i64(vals[i * n + j] as i64)).collect())
            .collect();
        LinearMap::from_dense(h.space().clone(), h.space().clone(), &rows).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn convolution_is_associative(a in arb_map(3, 7), b in arb_map(3, 7), c in arb_map(3, 7)) {
            let h = group_algebra(FieldSpec::Prime(7), 3).unwrap();
            let (f, g, k) = (map_from(&h, &a), map_from(&h, &b), map_from(&h, &c));
            let conv = |x: &LinearMap, y: &LinearMap| convolution(x, y, &h.coalg, &h.alg).unwrap();
            prop_assert_eq!(conv(&conv(&f, &g), &k), conv(&f, &conv(&g, &k)));
        }

        #[test]
        fn convolution_inverse_is_two_sided(a in arb_map(2, 5)) {
            let (_, r) = quantum_line_over_cyclic(FieldSpec::Prime(5), 4, 2).unwrap();
            let f = map_from(&r, &a);
            let u = convolution_unit(&r.coalg, &r.alg).unwrap();
            if let Ok(g) = convolution_inverse(&f, &r.coalg, &r.alg) {
                prop_assert_eq!(convolution(&f, &g, &r.coalg, &r.alg).unwrap(), u.clone());
                prop_assert_eq!(convolution(&g, &f, &r.coalg, &r.alg).unwrap(), u);
            }
        }
    }
}
