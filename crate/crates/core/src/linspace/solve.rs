//! Exact Gauss–Jordan elimination on sparse rows.

use super::map::{normalize, Vector};
use super::{BasedSpace, LinearMap, TensorSpace};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Reduced row-echelon form: `rows[k]` has its pivot (entry 1) at `pivots[k]`.
struct Rref {
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

fn lookup(row: &[(usize, Scalar)], col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|k| &row[k].1)
}

/// `row - factor * pivot_row`.
fn axpy(row: &[(usize, Scalar)], factor: &Scalar, pivot_row: &[(usize, Scalar)]) -> Vector {
    let mut out = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut i, mut k) = (0, 0);
    while i < row.len() || k < pivot_row.len() {
        let ca = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = pivot_row.get(k).map(|e| e.0).unwrap_or(usize::MAX);
        if ca == cb {
            let v = &row[i].1 - &(factor * &pivot_row[k].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            k += 1;
        } else if ca < cb {
            out.push(row[i].clone());
            i += 1;
        } else {
            out.push((cb, -(factor * &pivot_row[k].1)));
            k += 1;
        }
    }
    out
}

/// Row-reduces; only columns `< pivot_limit` are eligible as pivots.
fn rref(mut rows: Vec<Vector>, pivot_limit: usize) -> Rref {
    rows.retain(|r| !r.is_empty());
    let mut done: Vec<Vector> = Vec::new();
    let mut pivots = Vec::new();
    // Rows are reduced lazily: each pending row is reduced against pivots
    // in increasing column order as its leading entry is reached.
    rows.sort_by_key(|r| r[0].0);
    let mut pending = rows;
    loop {
        pending.retain(|r| !r.is_empty());
        let Some(col) = pending.iter().map(|r| r[0].0).min() else {
            break;
        };
        if col >= pivot_limit {
            break;
        }
        // Choose the sparsest row with this leading column as pivot.
        let (pos, _) = pending
            .iter()
            .enumerate()
            .filter(|(_, r)| r[0].0 == col)
            .min_by_key(|(_, r)| r.len())
            .expect("some row leads at the minimum column");
        let mut pivot = pending.swap_remove(pos);
        let inv = pivot[0].1.inv().expect("pivot entries are nonzero");
        for (_, v) in pivot.iter_mut() {
            *v = &*v * &inv;
        }
        for r in pending.iter_mut() {
            if r[0].0 == col {
                let f = r[0].1.clone();
                *r = axpy(r, &f, &pivot);
            }
        }
        done.push(pivot);
        pivots.push(col);
    }
    // Back substitution for full reduction.
    for k in (0..done.len()).rev() {
        let col = pivots[k];
        let pivot = done[k].clone();
        for r in done.iter_mut().take(k) {
            if let Some(f) = lookup(r, col).cloned() {
                *r = axpy(r, &f, &pivot);
            }
        }
    }
    // Leftover rows have no pivot below the limit; keep them to detect inconsistency.
    for r in pending {
        if !r.is_empty() {
            pivots.push(r[0].0);
            done.push(r);
        }
    }
    Rref { rows: done, pivots }
}

fn rows_of(map: &LinearMap) -> Vec<Vector> {
    let t = map.transpose();
    t.columns().to_vec()
}

pub fn rank(map: &LinearMap) -> usize {
    rref(rows_of(map), map.source().dim()).pivots.len()
}

/// Basis of the kernel of `map` in reduced-echelon form: one vector per free
/// column, with a 1 at that column.
pub fn kernel(map: &LinearMap) -> Vec<Vector> {
    kernel_with_free(map).into_iter().map(|(_, v)| v).collect()
}

fn kernel_with_free(map: &LinearMap) -> Vec<(usize, Vector)> {
    let n = map.source().dim();
    let r = rref(rows_of(map), n);
    let one = map.field().one();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![(f, one.clone())];
            for (row, &p) in r.rows.iter().zip(&r.pivots) {
                if let Some(c) = lookup(row, f) {
                    v.push((p, -c));
                }
            }
            (f, normalize(v))
        })
        .collect()
}

/// Result of [`solve_linear`].
#[derive(Debug, Clone)]
pub struct Solution {
    pub x: LinearMap,
    /// Whether `a` has trivial kernel, so that `x` is the only solution.
    pub unique: bool,
}

/// Solves `a ∘ x = b` for `x`; free variables are set to zero.
pub fn solve_linear(a: &LinearMap, b: &LinearMap) -> Result<Solution> {
    if a.target() != b.target() {
        return Err(Error::shape("solve_linear", a.target(), b.target()));
    }
    let n = a.source().dim();
    let mut rows = rows_of(a);
    for (j, col) in b.columns().iter().enumerate() {
        for (i, c) in col {
            rows[*i].push((n + j, c.clone()));
        }
    }
    let r = rref(rows, n);
    if r.pivots.iter().any(|&p| p >= n) {
        return Err(Error::NoSolution);
    }
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); b.source().dim()];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        for (c, v) in row.iter().filter(|(c, _)| *c >= n) {
            cols[c - n].push((p, v.clone()));
        }
    }
    let x = LinearMap::from_columns(b.source().clone(), a.source().clone(), cols)?;
    Ok(Solution {
        x,
        unique: r.pivots.len() == n,
    })
}

/// Solves a system given as sparse rows over `n` unknowns, where entries at
/// column `n` hold the right-hand side. Returns one solution (free variables
/// zero) and whether it is unique.
pub(crate) fn solve_rows(rows: Vec<Vector>, n: usize) -> Result<(Vector, bool)> {
    let r = rref(rows, n);
    if r.pivots.iter().any(|&p| p >= n) {
        return Err(Error::NoSolution);
    }
    let mut x = Vec::new();
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        if let Some(v) = lookup(row, n) {
            x.push((p, v.clone()));
        }
    }
    x.sort_by_key(|(i, _)| *i);
    Ok((x, r.pivots.len() == n))
}

/// Two-sided inverse of a square map.
pub fn inverse(a: &LinearMap) -> Result<LinearMap> {
    if a.source().dim() != a.target().dim() {
        return Err(Error::Singular(format!(
            "{} -> {} is not square",
            a.source(),
            a.target()
        )));
    }
    let id = LinearMap::identity(a.target());
    match solve_linear(a, &id) {
        Ok(s) if s.unique => Ok(s.x),
        _ => Err(Error::Singular(format!("{} -> {}", a.source(), a.target()))),
    }
}

/// Equalizer of `f` and `g`: a space `E` and an injective `ι: E → source`
/// with `f ι = g ι`, spanned by the reduced-echelon kernel basis of `f - g`.
///
/// Basis labels of `E` are the source labels of the free columns with `⊗`
/// replaced by `.`.
pub fn equalizer(name: &str, f: &LinearMap, g: &LinearMap) -> Result<(TensorSpace, LinearMap)> {
    let d = f.sub(g)?;
    let basis = kernel_with_free(&d);
    let src = f.source();
    let mut labels: Vec<String> = basis
        .iter()
        .map(|(free, _)| src.label(*free).replace(super::TENSOR_SEP, "."))
        .collect();
    let mut uniq = std::collections::HashSet::new();
    if !labels.iter().all(|l| uniq.insert(l.clone())) {
        labels = (0..basis.len()).map(|i| format!("e{i}")).collect();
    }
    let space = BasedSpace::new(name, labels, f.field())?;
    let e = TensorSpace::single(&space);
    let iota = LinearMap::from_columns(
        e.clone(),
        src.clone(),
        basis.into_iter().map(|(_, v)| v).collect(),
    )?;
    Ok((e, iota))
}

/// The unique `ψ` with `ι ψ = φ`, for injective `ι`.
pub fn factor_through(iota: &LinearMap, phi: &LinearMap) -> Result<LinearMap> {
    match solve_linear(iota, phi) {
        Ok(s) if s.unique => Ok(s.x),
        Ok(_) => Err(Error::FactorizationFailure(format!(
            "{} -> {} is not injective",
            iota.source(),
            iota.target()
        ))),
        Err(Error::NoSolution) => Err(Error::FactorizationFailure(format!(
            "image of {} -> {} is not contained in the image of {}",
            phi.source(),
            phi.target(),
            iota.source()
        ))),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;
    use proptest::prelude::*;

    fn q(k: i64) -> Scalar {
        FieldSpec::Rationals.from_i64(k)
    }

    fn sp(name: &str, dim: usize) -> TensorSpace {
        let labels: Vec<String> = (0..dim).map(|i| format!("{name}{i}")).collect();
        TensorSpace::single(&BasedSpace::new(name, labels, FieldSpec::Rationals).unwrap())
    }

    fn dense(s: &TensorSpace, t: &TensorSpace, rows: &[&[i64]]) -> LinearMap {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect();
        LinearMap::from_dense(s.clone(), t.clone(), &rows).unwrap()
    }

    #[test]
    fn diagonal_solve() {
        let v = sp("V", 2);
        let one = TensorSpace::unit(FieldSpec::Rationals);
        let a = dense(&v, &v, &[&[2, 0], &[0, 3]]);
        let b = dense(&one, &v, &[&[1], &[1]]);
        let s = solve_linear(&a, &b).unwrap();
        assert!(s.unique);
        let half = FieldSpec::Rationals.parse_scalar("1/2").unwrap();
        let third = FieldSpec::Rationals.parse_scalar("1/3").unwrap();
        assert_eq!(s.x.entry(0, 0), half);
        assert_eq!(s.x.entry(1, 0), third);
    }

    #[test]
    fn identity_solve() {
        let v = sp("V", 3);
        let w = sp("W", 2);
        let b = dense(&w, &v, &[&[1, 2], &[0, 5], &[7, 0]]);
        assert_eq!(solve_linear(&LinearMap::identity(&v), &b).unwrap().x, b);
    }

    #[test]
    fn inconsistent_system() {
        let v = sp("V", 2);
        let one = TensorSpace::unit(FieldSpec::Rationals);
        let a = dense(&v, &v, &[&[1, 1], &[1, 1]]);
        let b = dense(&one, &v, &[&[1], &[2]]);
        assert_eq!(solve_linear(&a, &b).unwrap_err(), Error::NoSolution);
    }

    #[test]
    fn equalizer_of_equal_maps_is_everything() {
        let v = sp("V", 3);
        let f = dense(&v, &v, &[&[1, 2, 0], &[0, 1, 0], &[4, 0, 1]]);
        let (e, iota) = equalizer("E", &f, &f).unwrap();
        assert_eq!(e.dim(), 3);
        assert!(iota.same_matrix(&LinearMap::identity(&v)));
    }

    #[test]
    fn equalizer_of_id_and_zero_is_empty() {
        let v = sp("V", 2);
        let (e, iota) = equalizer(
            "E",
            &LinearMap::identity(&v),
            &LinearMap::zero(v.clone(), v.clone()),
        )
        .unwrap();
        assert_eq!(e.dim(), 0);
        assert_eq!(iota.source().dim(), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let v = sp("V", 3);
        let a = dense(&v, &v, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.compose(&inv).unwrap(), LinearMap::identity(&v));
        assert!(inverse(&dense(&v, &v, &[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]])).is_err());
    }

    fn arb_square(n: usize) -> impl Strategy<Value = LinearMap> {
        proptest::collection::vec(-2i64..3, n * n).prop_map(move |vals| {
            let s = sp("V", n);
            let rows: Vec<Vec<Scalar>> = vals
                .chunks(n)
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect();
            LinearMap::from_dense(s.clone(), s, &rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn equalizer_equalizes(f in arb_square(4), g in arb_square(4)) {
            let (e, iota) = equalizer("E", &f, &g).unwrap();
            prop_assert_eq!(f.compose(&iota).unwrap(), g.compose(&iota).unwrap());
            prop_assert_eq!(rank(&iota), e.dim());
            prop_assert_eq!(e.dim() + rank(&f.sub(&g).unwrap()), 4);
        }

        #[test]
        fn kernel_vectors_vanish(f in arb_square(5)) {
            for v in kernel(&f) {
                prop_assert!(f.apply(&v).is_empty());
            }
        }
    }
}
