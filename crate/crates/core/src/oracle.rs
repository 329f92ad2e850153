//! Brute-force searches over prime fields that cross-check the closed-form
//! constructions: cocycle enumeration, convolution inverses by search, the
//! reduced enumeration of `Z'(𝓗)`, and gauge equivalence of scalar cocycles.
//!
//! Searches run over residues in `u64`. Equations are polynomial (degree at
//! most two) in the unknowns; the search assigns unknowns in a fixed order
//! and rejects a partial assignment as soon as an equation whose unknowns are
//! all assigned fails.

use crate::braidmod::Measuring;
use crate::cocycle::{check_cocycle, Cocycle, INVERTIBLE};
use crate::error::{Error, Result};
use crate::hopfcore::{convolution_inverse, convolution_unit, Algebra, Coalgebra, HopfAlgebra};
use crate::lifting::{check_classical_cocycle, Bosonization};
use crate::linspace::{LinearMap, TensorSpace};
use crate::scalar::{FieldSpec, Scalar};

/// Default cap on candidates or search nodes.
pub const DEFAULT_BOUND: u64 = 1_000_000;

fn prime(field: FieldSpec) -> Result<u64> {
    match field {
        FieldSpec::Prime(p) => Ok(p),
        other => Err(Error::Validation(format!(
            "oracle searches need a prime field, got {other}"
        ))),
    }
}

fn residue(s: &Scalar) -> u64 {
    s.residue().expect("prime field scalar")
}

/// `Σ lin + Σ quad = rhs` over `F_p`, with coefficients as residues.
#[derive(Debug, Clone, Default)]
struct Equation {
    lin: Vec<(usize, u64)>,
    quad: Vec<(usize, usize, u64)>,
    rhs: u64,
}

impl Equation {
    fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.lin
            .iter()
            .map(|t| t.0)
            .chain(self.quad.iter().flat_map(|t| [t.0, t.1]))
    }

    fn holds(&self, x: &[u64], p: u64) -> bool {
        let mut acc = 0u64;
        for &(v, c) in &self.lin {
            acc = (acc + c * x[v]) % p;
        }
        for &(a, b, c) in &self.quad {
            acc = (acc + c * x[a] % p * x[b]) % p;
        }
        acc == self.rhs % p
    }
}

/// Depth-first search over assignments in `F_p^n` satisfying `eqs`,
/// collecting at most `limit` solutions in lexicographic order of the
/// search order.
struct Search {
    p: u64,
    order: Vec<usize>,
    /// Equations that become fully assigned at each depth.
    due: Vec<Vec<usize>>,
    eqs: Vec<Equation>,
    nodes: u64,
    bound: u64,
}

impl Search {
    fn new(n: usize, eqs: Vec<Equation>, p: u64, bound: u64) -> Self {
        // Greedy order: repeatedly take the equation with the fewest
        // unordered unknowns, so equations close as early as possible.
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut open: Vec<usize> = (0..eqs.len()).collect();
        while !open.is_empty() {
            let (pos, _) = open
                .iter()
                .enumerate()
                .min_by_key(|(_, &e)| {
                    let mut vs: Vec<usize> = eqs[e].vars().filter(|&v| !placed[v]).collect();
                    vs.sort_unstable();
                    vs.dedup();
                    (vs.len(), e)
                })
                .expect("nonempty");
            let e = open.swap_remove(pos);
            let mut vs: Vec<usize> = eqs[e].vars().filter(|&v| !placed[v]).collect();
            vs.sort_unstable();
            vs.dedup();
            for v in vs {
                placed[v] = true;
                order.push(v);
            }
        }
        order.extend((0..n).filter(|&v| !placed[v]));
        let mut depth_of = vec![0; n];
        for (d, &v) in order.iter().enumerate() {
            depth_of[v] = d;
        }
        let mut due = vec![Vec::new(); n.max(1)];
        for (i, e) in eqs.iter().enumerate() {
            let d = e.vars().map(|v| depth_of[v]).max().unwrap_or(0);
            due[d].push(i);
        }
        Search {
            p,
            order,
            due,
            eqs,
            nodes: 0,
            bound,
        }
    }

    fn run(&mut self, limit: usize) -> Result<Vec<Vec<u64>>> {
        let n = self.order.len();
        let mut out = Vec::new();
        if n == 0 {
            if self.eqs.iter().all(|e| e.holds(&[], self.p)) {
                out.push(Vec::new());
            }
            return Ok(out);
        }
        let mut x = vec![0u64; n];
        self.descend(0, &mut x, &mut out, limit)?;
        Ok(out)
    }

    fn descend(
        &mut self,
        depth: usize,
        x: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        limit: usize,
    ) -> Result<()> {
        let var = self.order[depth];
        for value in 0..self.p {
            self.nodes += 1;
            if self.nodes > self.bound {
                return Err(Error::SearchSpaceTooLarge {
                    candidates: format!("more than {} search nodes", self.nodes),
                    bound: self.bound,
                });
            }
            x[var] = value;
            if !self.due[depth]
                .iter()
                .all(|&e| self.eqs[e].holds(x, self.p))
            {
                continue;
            }
            if depth + 1 == self.order.len() {
                out.push(x.clone());
            } else {
                self.descend(depth + 1, x, out, limit)?;
            }
            if out.len() >= limit {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Equations `(f ∗ g)(c) = (g ∗ f)(c) = η ε(c)` in the entries of `g`, with
/// `g[b][c]` at variable `c * dim A + b`.
fn inverse_equations(f: &LinearMap, c: &Coalgebra, a: &Algebra, p: u64) -> Result<Vec<Equation>> {
    let (dc, da) = (c.space.dim(), a.space.dim());
    let unit = convolution_unit(c, a)?;
    let mut eqs = Vec::new();
    for left in [true, false] {
        let mut rows: Vec<Vec<(usize, u64)>> = vec![Vec::new(); dc * da];
        for col in 0..dc {
            for (idx, alpha) in c.comul.column(col) {
                let (ci, cj) = (idx / dc, idx % dc);
                let (known, unknown) = if left { (ci, cj) } else { (cj, ci) };
                for (k, beta) in f.column(known) {
                    let ab = residue(alpha) * residue(beta) % p;
                    for b in 0..da {
                        let prod = if left { k * da + b } else { b * da + k };
                        for (out, m) in a.mul.column(prod) {
                            rows[col * da + out].push((unknown * da + b, ab * residue(m) % p));
                        }
                    }
                }
            }
        }
        for (r, lin) in rows.into_iter().enumerate() {
            let (col, out) = (r / da, r % da);
            let rhs = unit
                .column(col)
                .iter()
                .find(|(i, _)| *i == out)
                .map(|(_, v)| residue(v))
                .unwrap_or(0);
            eqs.push(Equation {
                lin,
                quad: Vec::new(),
                rhs,
            });
        }
    }
    Ok(eqs)
}

/// The two-sided convolution inverse of `f: C → A` found by search.
///
/// `bound` caps the number of search nodes visited.
pub fn oracle_convolution_inverse(
    f: &LinearMap,
    c: &Coalgebra,
    a: &Algebra,
    bound: u64,
) -> Result<LinearMap> {
    let p = prime(f.field())?;
    let (dc, da) = (c.space.dim(), a.space.dim());
    let eqs = inverse_equations(f, c, a, p)?;
    let mut search = Search::new(dc * da, eqs, p, bound);
    let sols = search.run(2)?;
    match sols.as_slice() {
        [x] => {
            let field = f.field();
            let cols = (0..dc)
                .map(|col| {
                    (0..da)
                        .filter(|&b| x[col * da + b] != 0)
                        .map(|b| (b, field.from_i64(x[col * da + b] as i64)))
                        .collect()
                })
                .collect();
            LinearMap::from_columns(c.space.clone(), a.space.clone(), cols)
        }
        [] => Err(Error::NotInvertible(format!(
            "no inverse of {} -> {} by search",
            f.source(),
            f.target()
        ))),
        _ => Err(Error::TheoremViolation(
            "two distinct two-sided convolution inverses".into(),
        )),
    }
}

/// Which entries `(row, col)` of `σ` are unknown; all others are zero.
pub type Pattern = Vec<(usize, usize)>;

/// Result of [`enumerate_cocycles`].
#[derive(Debug, Clone)]
pub struct CocycleSweep {
    pub cocycles: Vec<Cocycle>,
    pub candidates: u64,
    /// Candidates passing the invertibility check.
    pub invertible: usize,
    /// The declared support, if the sweep was restricted.
    pub pattern: Option<Pattern>,
}

fn count_candidates(p: u64, unknowns: usize, bound: u64) -> Result<u64> {
    let n = u32::try_from(unknowns).ok().and_then(|k| p.checked_pow(k));
    match n {
        Some(n) if n <= bound => {}
        Some(n) => {
            return Err(Error::SearchSpaceTooLarge {
                candidates: n.to_string(),
                bound,
            })
        }
        None => {
            return Err(Error::SearchSpaceTooLarge {
                candidates: format!("{p}^{unknowns}"),
                bound,
            })
        }
    }
    let n = n.expect("checked above");
    Ok(n)
}

/// Calls `visit` on every assignment of `unknowns` values in `F_p`, first
/// unknown most significant.
fn for_each_assignment(
    p: u64,
    unknowns: usize,
    mut visit: impl FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    let mut x = vec![0u64; unknowns];
    loop {
        visit(&x)?;
        let mut i = unknowns;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
        }
    }
}

/// All cocycles `σ: H̄⊗H̄ → A` on the unknowns of `pattern` (default: every
/// entry), in lexicographic order of the unknown values.
pub fn enumerate_cocycles(
    m: &Measuring,
    bound: u64,
    pattern: Option<Pattern>,
) -> Result<CocycleSweep> {
    let field = m.alg.field();
    let p = prime(field)?;
    let src = TensorSpace::power(m.hopf.space(), 2);
    let da = m.space().dim();
    let unknowns: Pattern = match &pattern {
        Some(pat) => {
            let mut pat = pat.clone();
            pat.sort_by_key(|&(r, c)| (c, r));
            pat.dedup();
            if let Some(&(r, c)) = pat.iter().find(|&&(r, c)| r >= da || c >= src.dim()) {
                return Err(Error::Validation(format!(
                    "pattern entry ({r}, {c}) outside {src} -> {}",
                    m.space()
                )));
            }
            pat
        }
        None => (0..src.dim())
            .flat_map(|c| (0..da).map(move |r| (r, c)))
            .collect(),
    };
    let candidates = count_candidates(p, unknowns.len(), bound)?;
    let unit_target = m.alg.unit.clone();
    let eta2 = m.hopf.alg.unit.then(&m.hopf.alg.unit, m.hopf.arity())?;
    let mut cocycles = Vec::new();
    let mut invertible = 0;
    for_each_assignment(p, unknowns.len(), |x| {
        let mut cols = vec![Vec::new(); src.dim()];
        for (&(r, c), &v) in unknowns.iter().zip(x) {
            if v != 0 {
                cols[c].push((r, field.from_i64(v as i64)));
            }
        }
        let sigma = LinearMap::from_columns(src.clone(), m.space().clone(), cols)?;
        // (7) is cheap and discards most candidates before the full check
        if eta2.then(&sigma, 0)? != unit_target {
            return Ok(());
        }
        let check = check_cocycle(m, &sigma)?;
        if check.report.passed(INVERTIBLE) {
            invertible += 1;
        }
        if let Some(c) = check.cocycle {
            cocycles.push(c);
        }
        Ok(())
    })?;
    Ok(CocycleSweep {
        cocycles,
        candidates,
        invertible,
        pattern,
    })
}

/// All `σ ∈ Z'(𝓗)`, searching over the values `σ(r⊗1, r'⊗1)` and extending
/// by `σ(r⊗h, r'⊗h') = σ(r⊗1, h·r'⊗1)ε(h')`.
pub fn enumerate_zprime(b: &Bosonization, bound: u64) -> Result<Vec<LinearMap>> {
    let field = b.hopf.field();
    let p = prime(field)?;
    let r = &b.r;
    let h = &b.h;
    let (dr, dh) = (r.space().dim(), h.space().dim());
    let big = b.hopf.space().clone();
    let src = TensorSpace::power(&big, 2);
    let one = TensorSpace::unit(field);
    let action = &r.module().action;
    count_candidates(p, dr * dr, bound)?;
    let mut out = Vec::new();
    for_each_assignment(p, dr * dr, |x| {
        // basis of 𝓗 is r * dh + h
        let sigma = LinearMap::from_fn(src.clone(), one.clone(), |j| {
            let (left, right) = (j / (dr * dh), j % (dr * dh));
            let (ri, hi) = (left / dh, left % dh);
            let (rj, hj) = (right / dh, right % dh);
            let eps: Scalar = b.h.coalg.counit.entry(0, hj);
            if eps.is_zero() {
                return Ok(vec![]);
            }
            let mut v = field.zero();
            for (k, c) in action.column(hi * dr + rj) {
                v = &v + &(c * &field.from_i64(x[ri * dr + k] as i64));
            }
            Ok(vec![(0, &v * &eps)])
        })?;
        if check_classical_cocycle(&b.hopf, &sigma)?.all_passed() {
            out.push(sigma);
        }
        Ok(())
    })?;
    Ok(out)
}

/// A convolution invertible `u: 𝓗 → 𝕜` with `u(1) = 1` and
/// `σ(x1,y1) u(x2y2) = u(x1) u(y1) τ(x2,y2)`, if one exists. Such `u` are
/// exactly the comodule algebra isomorphisms `𝕜#_σ𝓗 → 𝕜#_τ𝓗`,
/// `x ↦ u(x1) x2`.
pub fn gauge_equivalence(
    h: &HopfAlgebra,
    sigma: &LinearMap,
    tau: &LinearMap,
    bound: u64,
) -> Result<Option<LinearMap>> {
    if !h.is_classical() {
        return Err(Error::Validation(
            "gauge equivalence needs a classical Hopf algebra".into(),
        ));
    }
    let field = h.field();
    let p = prime(field)?;
    let d = h.space().dim();
    let val = |m: &LinearMap, a: usize, b: usize| -> u64 {
        m.column(a * d + b)
            .iter()
            .find(|(i, _)| *i == 0)
            .map(|(_, v)| residue(v))
            .unwrap_or(0)
    };
    let comul: Vec<Vec<(usize, usize, u64)>> = (0..d)
        .map(|x| {
            h.coalg
                .comul
                .column(x)
                .iter()
                .map(|(i, c)| (i / d, i % d, residue(c)))
                .collect()
        })
        .collect();
    let mut eqs = Vec::new();
    for x in 0..d {
        for y in 0..d {
            let mut e = Equation::default();
            for &(a, b_, c1) in &comul[x] {
                for &(dd, e_, c2) in &comul[y] {
                    let c = c1 * c2 % p;
                    let s = val(sigma, a, dd);
                    if s != 0 {
                        for (k, m) in h.alg.mul.column(b_ * d + e_) {
                            e.lin.push((*k, c * s % p * residue(m) % p));
                        }
                    }
                    let t = val(tau, b_, e_);
                    if t != 0 {
                        e.quad.push((a, dd, (p - c * t % p) % p));
                    }
                }
            }
            eqs.push(e);
        }
    }
    let unit_eq = Equation {
        lin: h
            .alg
            .unit
            .column(0)
            .iter()
            .map(|(k, v)| (*k, residue(v)))
            .collect(),
        quad: Vec::new(),
        rhs: 1,
    };
    eqs.push(unit_eq);
    let mut search = Search::new(d, eqs, p, bound);
    let one = Algebra::unit_algebra(field);
    // Search for solutions one at a time until an invertible one shows up.
    let mut limit = 1;
    loop {
        search.nodes = 0;
        let sols = search.run(limit)?;
        let found = sols.len();
        for x in sols.iter().skip(limit - 1) {
            let u = LinearMap::from_fn(h.space().clone(), TensorSpace::unit(field), |k| {
                Ok(if x[k] == 0 {
                    vec![]
                } else {
                    vec![(0, field.from_i64(x[k] as i64))]
                })
            })?;
            if convolution_inverse(&u, &h.coalg, &one).is_ok() {
                return Ok(Some(u));
            }
        }
        if found < limit {
            return Ok(None);
        }
        limit += 1;
    }
}
