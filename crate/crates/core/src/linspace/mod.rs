//! Based finite-dimensional vector spaces and linear maps between their
//! tensor products.
//!
//! Every object is a [`TensorSpace`]: an ordered list of [`BasedSpace`]
//! factors whose basis is ordered lexicographically with the leftmost factor
//! most significant. The monoidal unit is the empty list, so `𝟙 ⊗ X` and
//! `X` are literally the same space and re-associating never changes a
//! flat index.

mod map;
mod solve;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::FieldSpec;

pub(crate) use map::normalize;
pub use map::{format_vector, LinearMap, Vector};
pub(crate) use solve::solve_rows;
pub use solve::{equalizer, factor_through, inverse, kernel, rank, solve_linear, Solution};

/// Separator between factor labels in a composite basis label.
pub const TENSOR_SEP: &str = "⊗";

/// Characters that may not appear in a basis label.
const RESERVED: &[char] = &[',', '(', ')', '⊗', '*', '=', ':', '[', ']', '#'];

#[derive(Debug)]
struct SpaceInner {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    field: FieldSpec,
}

/// A named vector space with an ordered basis of distinct labels.
#[derive(Clone)]
pub struct BasedSpace(Arc<SpaceInner>);

impl BasedSpace {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        labels: impl IntoIterator<Item = S>,
        field: FieldSpec,
    ) -> Result<Self> {
        let name = name.into();
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            check_label(l)?;
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidSpace(format!(
                    "space {name} repeats basis label `{l}`"
                )));
            }
        }
        Ok(BasedSpace(Arc::new(SpaceInner {
            name,
            labels,
            index,
            field,
        })))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field
    }

    /// The same space with a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        BasedSpace(Arc::new(SpaceInner {
            name: name.into(),
            labels: self.0.labels.clone(),
            index: self.0.index.clone(),
            field: self.0.field,
        }))
    }
}

/// Validates a basis label.
pub fn check_label(l: &str) -> Result<()> {
    if l.is_empty()
        || l.chars()
            .any(|c| c.is_whitespace() || RESERVED.contains(&c))
    {
        return Err(Error::InvalidSpace(format!("invalid basis label `{l}`")));
    }
    Ok(())
}

impl PartialEq for BasedSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.name == other.0.name
                && self.0.labels == other.0.labels)
    }
}

impl Eq for BasedSpace {}

impl fmt::Debug for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.0.name, self.0.labels)
    }
}

impl fmt::Display for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

/// An ordered tensor product of based spaces; the empty product is `𝟙`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorSpace {
    field: FieldSpec,
    factors: Vec<BasedSpace>,
}

impl TensorSpace {
    /// The monoidal unit `𝟙`: dimension one, basis label `1`.
    pub fn unit(field: FieldSpec) -> Self {
        TensorSpace {
            field,
            factors: Vec::new(),
        }
    }

    pub fn single(space: &BasedSpace) -> Self {
        TensorSpace {
            field: space.field(),
            factors: vec![space.clone()],
        }
    }

    pub fn new(field: FieldSpec, factors: Vec<BasedSpace>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|s| s.field() != field) {
            return Err(Error::Scalar(crate::scalar::ScalarError::FieldMismatch {
                left: field,
                right: bad.field(),
            }));
        }
        Ok(TensorSpace { field, factors })
    }

    /// `space^{⊗n}`.
    pub fn power(space: &TensorSpace, n: usize) -> Self {
        let mut factors = Vec::with_capacity(space.len() * n);
        for _ in 0..n {
            factors.extend(space.factors.iter().cloned());
        }
        TensorSpace {
            field: space.field,
            factors,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn factors(&self) -> &[BasedSpace] {
        &self.factors
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Whether this is the unit object `𝟙`, the empty tensor product.
    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_unit()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(BasedSpace::dim).product()
    }

    pub fn tensor(&self, other: &TensorSpace) -> TensorSpace {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        TensorSpace {
            field: self.field,
            factors,
        }
    }

    /// Factors `range` as their own tensor space.
    pub fn slice(&self, range: std::ops::Range<usize>) -> TensorSpace {
        TensorSpace {
            field: self.field,
            factors: self.factors[range].to_vec(),
        }
    }

    /// Per-factor basis indices of a flat index.
    pub fn decompose(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (k, f) in self.factors.iter().enumerate().rev() {
            out[k] = idx % f.dim();
            idx /= f.dim();
        }
        out
    }

    /// Flat index of a tuple of per-factor basis indices.
    pub fn compose_index(&self, parts: &[usize]) -> usize {
        debug_assert_eq!(parts.len(), self.factors.len());
        self.factors
            .iter()
            .zip(parts)
            .fold(0, |acc, (f, &p)| acc * f.dim() + p)
    }

    /// Composite label of a basis element, factors joined by `⊗`.
    pub fn label(&self, idx: usize) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.decompose(idx)
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f.label(i))
            .collect::<Vec<_>>()
            .join(TENSOR_SEP)
    }

    /// Inverse of [`TensorSpace::label`]; `*` is accepted as a separator too.
    pub fn index_of_label(&self, label: &str) -> Result<usize> {
        let unknown = || Error::UnknownLabel {
            space: self.to_string(),
            label: label.to_string(),
        };
        if self.factors.is_empty() {
            return if label.trim() == "1" {
                Ok(0)
            } else {
                Err(unknown())
            };
        }
        let parts: Vec<&str> = label.split(['⊗', '*']).map(str::trim).collect();
        if parts.len() != self.factors.len() {
            return Err(unknown());
        }
        let mut idx = Vec::with_capacity(parts.len());
        for (p, f) in parts.iter().zip(&self.factors) {
            idx.push(f.index_of(p).ok_or_else(unknown)?);
        }
        Ok(self.compose_index(&idx))
    }
}

impl fmt::Debug for TensorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("𝟙");
        }
        let names: Vec<&str> = self.factors.iter().map(BasedSpace::name).collect();
        f.write_str(&names.join(TENSOR_SEP))
    }
}

impl From<&BasedSpace> for TensorSpace {
    fn from(s: &BasedSpace) -> Self {
        TensorSpace::single(s)
    }
}
