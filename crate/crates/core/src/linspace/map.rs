use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::TensorSpace;
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A sparse vector: `(basis index, nonzero coefficient)` sorted by index.
pub type Vector = Vec<(usize, Scalar)>;

/// A linear map between tensor spaces, stored column by column.
///
/// Column `j` is the image of source basis vector `j`. Entries are exact and
/// zero entries are never stored, so two maps with the same spaces are equal
/// exactly when their columns are.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    source: TensorSpace,
    target: TensorSpace,
    cols: Arc<Vec<Vector>>,
}

/// Sorts, merges duplicates, and drops zeros.
pub(crate) fn normalize(mut v: Vec<(usize, Scalar)>) -> Vector {
    if v.len() <= 1 {
        v.retain(|(_, c)| !c.is_zero());
        return v;
    }
    v.sort_by_key(|(i, _)| *i);
    let mut out: Vector = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = &*acc + &c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn accumulate(acc: &mut HashMap<usize, Scalar>, i: usize, c: Scalar) {
    match acc.get_mut(&i) {
        Some(v) => *v = &*v + &c,
        None => {
            acc.insert(i, c);
        }
    }
}

fn finish(acc: HashMap<usize, Scalar>) -> Vector {
    let mut v: Vector = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Applies the columns of `m` to a sparse vector.
pub(crate) fn apply_columns(cols: &[Vector], v: &[(usize, Scalar)]) -> Vector {
    let mut acc = HashMap::new();
    for (j, c) in v {
        for (i, e) in &cols[*j] {
            accumulate(&mut acc, *i, c * e);
        }
    }
    finish(acc)
}

impl LinearMap {
    /// Builds a map from columns, normalizing each one.
    pub fn from_columns(
        source: TensorSpace,
        target: TensorSpace,
        cols: Vec<Vec<(usize, Scalar)>>,
    ) -> Result<Self> {
        if source.field() != target.field() {
            return Err(Error::Scalar(crate::scalar::ScalarError::FieldMismatch {
                left: source.field(),
                right: target.field(),
            }));
        }
        if cols.len() != source.dim() {
            return Err(Error::shape("from_columns", source.dim(), cols.len()));
        }
        let field = source.field();
        let tdim = target.dim();
        let mut out = Vec::with_capacity(cols.len());
        for col in cols {
            for (i, c) in &col {
                if *i >= tdim {
                    return Err(Error::shape("from_columns row", format!("< {tdim}"), i));
                }
                if c.field() != field {
                    return Err(Error::Scalar(crate::scalar::ScalarError::FieldMismatch {
                        left: field,
                        right: c.field(),
                    }));
                }
            }
            out.push(normalize(col));
        }
        Ok(LinearMap {
            source,
            target,
            cols: Arc::new(out),
        })
    }

    /// Builds a map whose column `j` is `f(j)`.
    pub fn from_fn(
        source: TensorSpace,
        target: TensorSpace,
        mut f: impl FnMut(usize) -> Result<Vec<(usize, Scalar)>>,
    ) -> Result<Self> {
        let cols = (0..source.dim()).map(&mut f).collect::<Result<Vec<_>>>()?;
        Self::from_columns(source, target, cols)
    }

    /// Builds a map from `(row, column, value)` triples; repeated positions add.
    pub fn from_entries(
        source: TensorSpace,
        target: TensorSpace,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut cols = vec![Vec::new(); source.dim()];
        for (i, j, c) in entries {
            if j >= cols.len() {
                return Err(Error::shape(
                    "from_entries column",
                    format!("< {}", cols.len()),
                    j,
                ));
            }
            cols[j].push((i, c));
        }
        Self::from_columns(source, target, cols)
    }

    /// Builds a map from dense rows (`rows[i][j]` is the entry at row `i`, column `j`).
    pub fn from_dense(
        source: TensorSpace,
        target: TensorSpace,
        rows: &[Vec<Scalar>],
    ) -> Result<Self> {
        if rows.len() != target.dim() {
            return Err(Error::shape("from_dense rows", target.dim(), rows.len()));
        }
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != source.dim() {
                return Err(Error::shape("from_dense columns", source.dim(), row.len()));
            }
            for (j, c) in row.iter().enumerate() {
                entries.push((i, j, c.clone()));
            }
        }
        Self::from_entries(source, target, entries)
    }

    pub fn zero(source: TensorSpace, target: TensorSpace) -> Self {
        let n = source.dim();
        LinearMap {
            source,
            target,
            cols: Arc::new(vec![Vec::new(); n]),
        }
    }

    pub fn identity(space: &TensorSpace) -> Self {
        let one = space.field().one();
        let cols = (0..space.dim()).map(|j| vec![(j, one.clone())]).collect();
        LinearMap {
            source: space.clone(),
            target: space.clone(),
            cols: Arc::new(cols),
        }
    }

    /// The scalar `c` as a map `𝟙 → 𝟙`.
    pub fn scalar(field: FieldSpec, c: Scalar) -> Self {
        let unit = TensorSpace::unit(field);
        LinearMap::from_columns(unit.clone(), unit, vec![vec![(0, c)]])
            .expect("scalar lives in the unit's field")
    }

    /// Reorders factors: factor `k` of the target is factor `perm[k]` of `space`.
    pub fn permutation(space: &TensorSpace, perm: &[usize]) -> Result<Self> {
        let n = space.len();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::shape(
                "permutation",
                format!("a permutation of {n} factors"),
                format!("{perm:?}"),
            ));
        }
        let target = TensorSpace::new(
            space.field(),
            perm.iter().map(|&p| space.factors()[p].clone()).collect(),
        )?;
        let one = space.field().one();
        let cols = (0..space.dim())
            .map(|j| {
                let parts = space.decompose(j);
                let permuted: Vec<usize> = perm.iter().map(|&p| parts[p]).collect();
                vec![(target.compose_index(&permuted), one.clone())]
            })
            .collect();
        Ok(LinearMap {
            source: space.clone(),
            target,
            cols: Arc::new(cols),
        })
    }

    /// The flip `X ⊗ Y → Y ⊗ X` of two blocks of factors.
    pub fn swap(x: &TensorSpace, y: &TensorSpace) -> Self {
        let (a, b) = (x.len(), y.len());
        let perm: Vec<usize> = (a..a + b).chain(0..a).collect();
        Self::permutation(&x.tensor(y), &perm).expect("block swap is a permutation")
    }

    pub fn source(&self) -> &TensorSpace {
        &self.source
    }

    pub fn target(&self) -> &TensorSpace {
        &self.target
    }

    pub fn field(&self) -> FieldSpec {
        self.source.field()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        let col = &self.cols[j];
        match col.binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => col[k].1.clone(),
            Err(_) => self.field().zero(),
        }
    }

    /// Entry addressed by composite labels.
    pub fn entry_by_label(&self, row: &str, col: &str) -> Result<Scalar> {
        let i = self.target.index_of_label(row)?;
        let j = self.source.index_of_label(col)?;
        Ok(self.entry(i, j))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field().zero(); self.source.dim()]; self.target.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                rows[*i][j] = c.clone();
            }
        }
        rows
    }

    /// All nonzero entries as `(row, column, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, c)| (*i, j, c)))
    }

    pub fn apply(&self, v: &[(usize, Scalar)]) -> Vector {
        apply_columns(&self.cols, v)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap> {
        if g.target != self.source {
            return Err(Error::shape("compose", &self.source, &g.target));
        }
        let cols = g
            .cols
            .iter()
            .map(|col| apply_columns(&self.cols, col))
            .collect();
        Ok(LinearMap {
            source: g.source.clone(),
            target: self.target.clone(),
            cols: Arc::new(cols),
        })
    }

    /// Kronecker product `self ⊗ g`.
    pub fn tensor(&self, g: &LinearMap) -> Result<LinearMap> {
        if self.field() != g.field() {
            return Err(Error::Scalar(crate::scalar::ScalarError::FieldMismatch {
                left: self.field(),
                right: g.field(),
            }));
        }
        let source = self.source.tensor(&g.source);
        let target = self.target.tensor(&g.target);
        let gt = g.target.dim();
        let mut cols = Vec::with_capacity(source.dim());
        for a in self.cols.iter() {
            for b in g.cols.iter() {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (k, y) in b {
                        col.push((i * gt + k, x * y));
                    }
                }
                cols.push(col);
            }
        }
        Ok(LinearMap {
            source,
            target,
            cols: Arc::new(cols),
        })
    }

    /// `(id ⊗ g ⊗ id) ∘ self`, with `g` acting on target factors starting at `at`.
    pub fn then(&self, g: &LinearMap, at: usize) -> Result<LinearMap> {
        let k = g.source.len();
        let t = &self.target;
        if at + k > t.len() || t.factors()[at..at + k] != *g.source.factors() {
            return Err(Error::shape(&format!("then at factor {at}"), &g.source, t));
        }
        let ds: usize = t.factors()[at + k..].iter().map(|f| f.dim()).product();
        let dm = g.source.dim();
        let dt = g.target.dim();
        let mut factors = t.factors()[..at].to_vec();
        factors.extend(g.target.factors().iter().cloned());
        factors.extend(t.factors()[at + k..].iter().cloned());
        let target = TensorSpace::new(t.field(), factors)?;
        let cols = self
            .cols
            .iter()
            .map(|col| {
                let mut acc = HashMap::new();
                for (idx, c) in col {
                    let s = idx % ds;
                    let m = (idx / ds) % dm;
                    let p = idx / (ds * dm);
                    for (r, v) in &g.cols[m] {
                        accumulate(&mut acc, (p * dt + r) * ds + s, c * v);
                    }
                }
                finish(acc)
            })
            .collect();
        Ok(LinearMap {
            source: self.source.clone(),
            target,
            cols: Arc::new(cols),
        })
    }

    /// `self ∘ (id ⊗ g ⊗ id)`, with `g` feeding source factors starting at `at`.
    pub fn after(&self, g: &LinearMap, at: usize) -> Result<LinearMap> {
        let k = g.target.len();
        let s = &self.source;
        if at + k > s.len() || s.factors()[at..at + k] != *g.target.factors() {
            return Err(Error::shape(&format!("after at factor {at}"), &g.target, s));
        }
        let pre = s.slice(0..at);
        let post = s.slice(at + k..s.len());
        let padded = LinearMap::identity(&pre)
            .tensor(g)?
            .tensor(&LinearMap::identity(&post))?;
        self.compose(&padded)
    }

    /// Reorders target factors: new factor `k` is old factor `perm[k]`.
    pub fn then_permute(&self, perm: &[usize]) -> Result<LinearMap> {
        LinearMap::permutation(&self.target, perm)?.compose(self)
    }

    /// Swaps the adjacent target blocks `[at, at+a)` and `[at+a, at+a+b)`.
    pub fn then_swap(&self, at: usize, a: usize, b: usize) -> Result<LinearMap> {
        let n = self.target.len();
        if at + a + b > n {
            return Err(Error::shape(
                "then_swap",
                format!("≤ {n} factors"),
                at + a + b,
            ));
        }
        let perm: Vec<usize> = (0..at)
            .chain(at + a..at + a + b)
            .chain(at..at + a)
            .chain(at + a + b..n)
            .collect();
        self.then_permute(&perm)
    }

    /// Reorders consecutive target blocks starting at factor `at`: the blocks
    /// have `sizes` factors each, and new block `k` is old block `perm[k]`.
    pub fn then_permute_blocks(
        &self,
        at: usize,
        sizes: &[usize],
        perm: &[usize],
    ) -> Result<LinearMap> {
        let n = self.target.len();
        let total: usize = sizes.iter().sum();
        if at + total > n || perm.len() != sizes.len() {
            return Err(Error::shape(
                "then_permute_blocks",
                format!("≤ {n} factors"),
                at + total,
            ));
        }
        let mut starts = Vec::with_capacity(sizes.len());
        let mut s = at;
        for &k in sizes {
            starts.push(s);
            s += k;
        }
        let mut factor_perm: Vec<usize> = (0..at).collect();
        for &b in perm {
            factor_perm.extend(starts[b]..starts[b] + sizes[b]);
        }
        factor_perm.extend(at + total..n);
        self.then_permute(&factor_perm)
    }

    /// The same matrix between different spaces of equal dimensions.
    pub fn reinterpret(&self, source: TensorSpace, target: TensorSpace) -> Result<LinearMap> {
        if source.dim() != self.source.dim() || target.dim() != self.target.dim() {
            return Err(Error::shape(
                "reinterpret",
                format!("{}x{}", self.target.dim(), self.source.dim()),
                format!("{}x{}", target.dim(), source.dim()),
            ));
        }
        Ok(LinearMap {
            source,
            target,
            cols: Arc::clone(&self.cols),
        })
    }

    fn zip_with(
        &self,
        other: &LinearMap,
        op: &str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<LinearMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::shape(
                op,
                format!("{} -> {}", self.source, self.target),
                format!("{} -> {}", other.source, other.target),
            ));
        }
        let zero = self.field().zero();
        let cols = self
            .cols
            .iter()
            .zip(other.cols.iter())
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut k) = (0, 0);
                while i < a.len() || k < b.len() {
                    let ra = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                    let rb = b.get(k).map(|e| e.0).unwrap_or(usize::MAX);
                    let (r, v) = if ra == rb {
                        i += 1;
                        k += 1;
                        (ra, f(&a[i - 1].1, &b[k - 1].1))
                    } else if ra < rb {
                        i += 1;
                        (ra, f(&a[i - 1].1, &zero))
                    } else {
                        k += 1;
                        (rb, f(&zero, &b[k - 1].1))
                    };
                    if !v.is_zero() {
                        out.push((r, v));
                    }
                }
                out
            })
            .collect();
        Ok(LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            cols: Arc::new(cols),
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(i, v)| (*i, v * c))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            cols: Arc::new(cols),
        }
    }

    /// Whether the two maps have the same entries, ignoring space names and labels.
    pub fn same_matrix(&self, other: &LinearMap) -> bool {
        self.source.dim() == other.source.dim()
            && self.target.dim() == other.target.dim()
            && self.cols == other.cols
    }

    /// First source basis index where the two maps differ.
    pub fn first_difference(&self, other: &LinearMap) -> Option<usize> {
        self.cols
            .iter()
            .zip(other.cols.iter())
            .position(|(a, b)| a != b)
    }

    pub fn transpose(&self) -> LinearMap {
        let mut cols = vec![Vec::new(); self.target.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                cols[*i].push((j, c.clone()));
            }
        }
        LinearMap {
            source: self.target.clone(),
            target: self.source.clone(),
            cols: Arc::new(cols),
        }
    }

    /// Renders column `j` as a linear combination of target basis labels.
    pub fn format_column(&self, j: usize) -> String {
        format_vector(&self.target, &self.cols[j])
    }
}

/// Renders a sparse vector as `c·label + ...`, or `0`.
pub fn format_vector(space: &TensorSpace, v: &[(usize, Scalar)]) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    v.iter()
        .map(|(i, c)| {
            if c.is_one() {
                space.label(*i)
            } else {
                format!("{c}·{}", space.label(*i))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {} -> {}", self.source, self.target)?;
        for j in 0..self.source.dim() {
            writeln!(f, "  {} ↦ {}", self.source.label(j), self.format_column(j))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linspace::BasedSpace;
    use proptest::prelude::*;

    fn q(k: i64) -> Scalar {
        FieldSpec::Rationals.from_i64(k)
    }

    fn sp(name: &str, dim: usize) -> TensorSpace {
        let labels: Vec<String> = (0..dim).map(|i| format!("{name}{i}")).collect();
        TensorSpace::single(&BasedSpace::new(name, labels, FieldSpec::Rationals).unwrap())
    }

    fn diag(space: &TensorSpace, d: &[i64]) -> LinearMap {
        LinearMap::from_entries(
            space.clone(),
            space.clone(),
            d.iter().enumerate().map(|(i, &v)| (i, i, q(v))),
        )
        .unwrap()
    }

    #[test]
    fn identity_laws() {
        let v = sp("V", 3);
        let w = sp("W", 2);
        let f =
            LinearMap::from_entries(v.clone(), w.clone(), [(0, 0, q(1)), (1, 2, q(5))]).unwrap();
        assert_eq!(LinearMap::identity(&w).compose(&f).unwrap(), f);
        assert_eq!(f.compose(&LinearMap::identity(&v)).unwrap(), f);
    }

    #[test]
    fn swap_is_an_involution() {
        let v = sp("V", 2);
        let s = LinearMap::swap(&v, &v);
        assert_eq!(s.compose(&s).unwrap(), LinearMap::identity(&v.tensor(&v)));
    }

    #[test]
    fn kronecker_of_diagonals() {
        let x = sp("X", 2);
        let y = sp("Y", 2);
        let k = diag(&x, &[1, 2]).tensor(&diag(&y, &[3, 4])).unwrap();
        let d: Vec<Scalar> = (0..4).map(|i| k.entry(i, i)).collect();
        assert_eq!(d, vec![q(3), q(4), q(6), q(8)]);
        assert_eq!(k.nnz(), 4);
    }

    #[test]
    fn scalar_tensor() {
        let a = LinearMap::scalar(FieldSpec::Rationals, q(2));
        let b = LinearMap::scalar(FieldSpec::Rationals, q(7));
        assert_eq!(
            a.tensor(&b).unwrap(),
            LinearMap::scalar(FieldSpec::Rationals, q(14))
        );
    }

    #[test]
    fn then_matches_padded_composition() {
        let x = sp("X", 2);
        let y = sp("Y", 3);
        let z = sp("Z", 2);
        let g = LinearMap::from_entries(
            y.clone(),
            z.clone(),
            [(0, 0, q(1)), (1, 1, q(2)), (0, 2, q(3))],
        )
        .unwrap();
        let src = x.tensor(&y).tensor(&x);
        let padded = LinearMap::identity(&x)
            .tensor(&g)
            .unwrap()
            .tensor(&LinearMap::identity(&x))
            .unwrap();
        let via_then = LinearMap::identity(&src).then(&g, 1).unwrap();
        assert_eq!(via_then, padded);
        let h = LinearMap::identity(&x.tensor(&z).tensor(&x));
        assert_eq!(h.after(&g, 1).unwrap(), padded);
    }

    fn arb_map(src: TensorSpace, tgt: TensorSpace) -> impl Strategy<Value = LinearMap> {
        let n = src.dim() * tgt.dim();
        proptest::collection::vec(-3i64..4, n).prop_map(move |vals| {
            let rows: Vec<Vec<Scalar>> = vals
                .chunks(src.dim())
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect();
            LinearMap::from_dense(src.clone(), tgt.clone(), &rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn bifunctoriality(
            f in arb_map(sp("A", 2), sp("B", 2)),
            f2 in arb_map(sp("C", 3), sp("A", 2)),
            g in arb_map(sp("D", 2), sp("E", 3)),
            g2 in arb_map(sp("F", 2), sp("D", 2)),
        ) {
            let lhs = f.compose(&f2).unwrap().tensor(&g.compose(&g2).unwrap()).unwrap();
            let rhs = f.tensor(&g).unwrap().compose(&f2.tensor(&g2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn tensor_associativity(
            f in arb_map(sp("A", 2), sp("B", 2)),
            g in arb_map(sp("C", 2), sp("D", 1)),
            h in arb_map(sp("E", 1), sp("F", 3)),
        ) {
            let l = f.tensor(&g).unwrap().tensor(&h).unwrap();
            let r = f.tensor(&g.tensor(&h).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }
    }
}
