//! Built-in example structures: group algebras of cyclic groups, the
//! idempotent monoid bialgebra, and quantum lines `k[x]/(x^N)` as Hopf
//! algebras in Yetter–Drinfeld modules over `kC_n`.

use std::sync::Arc;

use crate::braidmod::{Ambient, Module, YdModule};
use crate::error::{Error, Result};
use crate::hopfcore::{Algebra, Bialgebra, Coalgebra, HopfAlgebra};
use crate::linspace::{BasedSpace, LinearMap, TensorSpace};
use crate::scalar::{root_of_unity, FieldSpec, Scalar};

/// Basis label of `g^i`.
pub fn group_label(i: usize) -> String {
    match i {
        0 => "1".to_string(),
        1 => "g".to_string(),
        _ => format!("g^{i}"),
    }
}

/// Basis label of `x^k`.
pub fn power_label(k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    }
}

/// The group algebra `kC_n` on a space named `H` with basis `1, g, …, g^{n-1}`.
pub fn group_algebra(field: FieldSpec, n: usize) -> Result<HopfAlgebra> {
    group_algebra_named(field, n, "H")
}

pub fn group_algebra_named(field: FieldSpec, n: usize, space_name: &str) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::Validation(
            "cyclic group order must be positive".into(),
        ));
    }
    let space = BasedSpace::new(space_name, (0..n).map(group_label), field)?;
    let h = TensorSpace::single(&space);
    let hh = h.tensor(&h);
    let one = TensorSpace::unit(field);
    let e = || field.one();
    let mul = LinearMap::from_fn(hh.clone(), h.clone(), |j| {
        Ok(vec![(((j / n) + (j % n)) % n, e())])
    })?;
    let unit = LinearMap::from_fn(one.clone(), h.clone(), |_| Ok(vec![(0, e())]))?;
    let comul = LinearMap::from_fn(h.clone(), hh, |i| Ok(vec![(i * n + i, e())]))?;
    let counit = LinearMap::from_fn(h.clone(), one, |_| Ok(vec![(0, e())]))?;
    let s = LinearMap::from_fn(h.clone(), h, |i| Ok(vec![((n - i) % n, e())]))?;
    HopfAlgebra::classical(
        format!("kC{n}"),
        Algebra::new(mul, unit)?,
        Coalgebra::new(comul, counit)?,
        Some(s),
    )
}

/// The monoid algebra of `{1, e}` with `e² = e` and both elements grouplike:
/// a bialgebra that is not a Hopf algebra.
pub fn idempotent_monoid_bialgebra(field: FieldSpec) -> Result<Bialgebra> {
    let space = BasedSpace::new("M", ["1", "e"], field)?;
    let m = TensorSpace::single(&space);
    let mm = m.tensor(&m);
    let one = TensorSpace::unit(field);
    let e = || field.one();
    let mul = LinearMap::from_fn(mm.clone(), m.clone(), |j| {
        Ok(vec![(usize::from(j != 0), e())])
    })?;
    let unit = LinearMap::from_fn(one.clone(), m.clone(), |_| Ok(vec![(0, e())]))?;
    let comul = LinearMap::from_fn(m.clone(), mm, |i| Ok(vec![(i * 2 + i, e())]))?;
    let counit = LinearMap::from_fn(m, one, |_| Ok(vec![(0, e())]))?;
    Bialgebra::classical(
        "monoid{1,e}",
        Algebra::new(mul, unit)?,
        Coalgebra::new(comul, counit)?,
    )
}

/// Multiplicative order of a nonzero scalar, if it is at most `limit`.
pub fn multiplicative_order(q: &Scalar, limit: usize) -> Option<usize> {
    let mut p = q.clone();
    for k in 1..=limit {
        if p.is_one() {
            return Some(k);
        }
        p = &p * q;
    }
    None
}

/// Gaussian binomial coefficients `[k choose j]_q` for `0 ≤ j ≤ k < n`.
pub fn q_binomials(q: &Scalar, n: usize) -> Vec<Vec<Scalar>> {
    let field = q.field();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = vec![field.one(); k + 1];
        for j in 1..k {
            // q-Pascal rule: [k, j] = [k-1, j-1] + q^j [k-1, j]
            row[j] = &rows[k - 1][j - 1] + &(&q.pow(j as u64) * &rows[k - 1][j]);
        }
        rows.push(row);
    }
    rows
}

/// The quantum line `R = k[x]/(x^N)` in Yetter–Drinfeld modules over
/// `K = kC_n`, with `g·x = q x`, `δ(x) = g ⊗ x`, `x` primitive, where `N`
/// is the order of `q`. Needs `q ≠ 1` and `q^n = 1`.
pub fn quantum_line(ambient: Arc<HopfAlgebra>, q: &Scalar) -> Result<HopfAlgebra> {
    let field = ambient.field();
    let n = ambient.space().dim();
    let order = multiplicative_order(q, n).ok_or_else(|| {
        Error::Validation(format!("q = {q} is not an n-th root of unity for n = {n}"))
    })?;
    if order < 2 || !n.is_multiple_of(order) {
        return Err(Error::Validation(format!(
            "q = {q} must be a nontrivial root of unity of order dividing {n}"
        )));
    }
    let big_n = order;
    let amb = Ambient::over(ambient.clone())?;
    let space = BasedSpace::new("R", (0..big_n).map(power_label), field)?;
    let r = TensorSpace::single(&space);
    let rr = r.tensor(&r);
    let one = TensorSpace::unit(field);
    let e = || field.one();
    let mul = LinearMap::from_fn(rr.clone(), r.clone(), |j| {
        let (a, b) = (j / big_n, j % big_n);
        Ok(if a + b < big_n {
            vec![(a + b, e())]
        } else {
            vec![]
        })
    })?;
    let unit = LinearMap::from_fn(one.clone(), r.clone(), |_| Ok(vec![(0, e())]))?;
    let binom = q_binomials(q, big_n);
    let comul = LinearMap::from_fn(r.clone(), rr, |k| {
        Ok((0..=k)
            .map(|j| (j * big_n + (k - j), binom[k][j].clone()))
            .collect())
    })?;
    let counit = LinearMap::from_fn(r.clone(), one, |k| {
        Ok(if k == 0 { vec![(0, e())] } else { vec![] })
    })?;
    let kr = amb.space().tensor(&r);
    let action = LinearMap::from_fn(kr.clone(), r.clone(), |j| {
        let (i, k) = (j / big_n, j % big_n);
        Ok(vec![(k, q.pow((i * k) as u64))])
    })?;
    let coaction = LinearMap::from_fn(r.clone(), kr, |k| Ok(vec![((k % n) * big_n + k, e())]))?;
    let yd = YdModule::new(Module::new(amb, r, action)?, coaction)?;
    let name = format!("R(q={q})/kC{n}");
    let bialg = Bialgebra::new(
        name,
        Algebra::new(mul, unit)?,
        Coalgebra::new(comul, counit)?,
        yd,
    )?;
    HopfAlgebra::new(bialg, None)
}

/// Degrees of the quantum line basis: `deg x^k = k`.
pub fn quantum_line_grading(r: &HopfAlgebra) -> Vec<usize> {
    (0..r.space().dim()).collect()
}

/// `kC_n` over `field` together with the quantum line for `q = root`,
/// where `root` is a primitive `order`-th root of unity.
pub fn quantum_line_over_cyclic(
    field: FieldSpec,
    n: usize,
    order: u64,
) -> Result<(Arc<HopfAlgebra>, HopfAlgebra)> {
    let k = Arc::new(group_algebra(field, n)?);
    let q = root_of_unity(field, order)?;
    let r = quantum_line(k.clone(), &q)?;
    Ok((k, r))
}

/// The main example families: `(kC_2, F_3, q = -1)` and `(kC_4, F_5, q = -1)`.
pub fn standard_quantum_lines() -> Result<Vec<(Arc<HopfAlgebra>, HopfAlgebra)>> {
    Ok(vec![
        quantum_line_over_cyclic(FieldSpec::Prime(3), 2, 2)?,
        quantum_line_over_cyclic(FieldSpec::Prime(5), 4, 2)?,
    ])
}
