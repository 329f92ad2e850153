//! Exact field arithmetic.
//!
//! Three kinds of fields are supported: the rationals, prime fields `F_p`,
//! and cyclotomic fields `Q(ζ_n)`. Cyclotomic elements are stored as residues
//! of rational polynomials modulo the `n`-th cyclotomic polynomial `Φ_n`, so
//! every element has exactly one representation and equality is structural.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

/// Largest prime accepted for `F_p`; residues are multiplied in `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// Largest cyclotomic order accepted.
pub const MAX_CYCLOTOMIC_ORDER: u32 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{field} has no primitive {n}-th root of unity")]
    NoSuchRoot { field: FieldSpec, n: u64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar `{text}` in {field}: {reason}")]
    Parse {
        text: String,
        field: FieldSpec,
        reason: String,
    },
}

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    Cyclotomic(u32),
}

impl FieldSpec {
    /// `F_p`; fails unless `p` is a prime not exceeding [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(ScalarError::InvalidField(format!(
                "{p} is not a supported prime"
            )));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// `Q(ζ_n)`.
    pub fn cyclotomic(n: u32) -> Result<Self, ScalarError> {
        if n == 0 || n > MAX_CYCLOTOMIC_ORDER {
            return Err(ScalarError::InvalidField(format!(
                "cyclotomic order {n} outside 1..={MAX_CYCLOTOMIC_ORDER}"
            )));
        }
        Ok(FieldSpec::Cyclotomic(n))
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(Box::new(BigRational::zero())),
            FieldSpec::Prime(p) => Scalar::Mod { value: 0, p },
            FieldSpec::Cyclotomic(n) => Scalar::Cyc {
                n,
                coeffs: vec![BigRational::zero(); cyclotomic_degree(n)].into_boxed_slice(),
            },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical ring map `Z -> field`.
    pub fn from_i64(self, k: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(k.into()))),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: k.rem_euclid(p as i64) as u64,
                p,
            },
            FieldSpec::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); cyclotomic_degree(n)];
                coeffs[0] = BigRational::from_integer(k.into());
                Scalar::Cyc {
                    n,
                    coeffs: coeffs.into_boxed_slice(),
                }
            }
        }
    }

    /// Image of a rational number; fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, ScalarError> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(Box::new(q.clone()))),
            FieldSpec::Prime(p) => {
                let pm = BigInt::from(p);
                let num = q.numer().mod_floor(&pm).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&pm).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                Scalar::Mod { value: num, p }.checked_div(&Scalar::Mod { value: den, p })
            }
            FieldSpec::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); cyclotomic_degree(n)];
                coeffs[0] = q.clone();
                Ok(Scalar::Cyc {
                    n,
                    coeffs: coeffs.into_boxed_slice(),
                })
            }
        }
    }

    /// All elements of a prime field in increasing residue order.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Prime(p) => Some((0..p).map(|value| Scalar::Mod { value, p }).collect()),
            _ => None,
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Prime(p) => p,
            _ => 0,
        }
    }

    /// Parses a scalar written in this field's textual form.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, ScalarError> {
        let err = |reason: &str| ScalarError::Parse {
            text: text.to_string(),
            field: self,
            reason: reason.to_string(),
        };
        let t = text.trim();
        match self {
            FieldSpec::Cyclotomic(n) if t.starts_with('[') => {
                let inner = t
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| err("unbalanced brackets"))?;
                let parts: Vec<&str> = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner.split(',').collect()
                };
                let mut poly = Vec::with_capacity(parts.len());
                for part in parts {
                    poly.push(parse_rational(part.trim()).ok_or_else(|| err("bad coefficient"))?);
                }
                Ok(Scalar::Cyc {
                    n,
                    coeffs: reduce_cyclotomic(n, poly),
                })
            }
            _ => {
                let q = parse_rational(t).ok_or_else(|| err("expected an integer or a/b"))?;
                self.from_rational(&q)
                    .map_err(|_| err("denominator vanishes in this field"))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F({p})"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let bad = || ScalarError::InvalidField(s.to_string());
        if let Some(rest) = t.strip_prefix("Q(") {
            let rest = rest.strip_suffix(')').ok_or_else(bad)?;
            let digits = rest
                .trim_start_matches("zeta")
                .trim_start_matches('ζ')
                .trim_start_matches('_');
            let n: u32 = digits.parse().map_err(|_| bad())?;
            return FieldSpec::cyclotomic(n);
        }
        let rest = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(bad)?;
        let rest = rest.trim_start_matches('_');
        let digits = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(rest);
        let p: u64 = digits.parse().map_err(|_| bad())?;
        FieldSpec::prime(p)
    }
}

/// An exact field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Residue in `[0, p)`.
    Mod { value: u64, p: u64 },
    /// Reduced fraction.
    Rat(Box<BigRational>),
    /// Coefficients of the residue modulo `Φ_n`, exactly `φ(n)` of them.
    Cyc { n: u32, coeffs: Box<[BigRational]> },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Mod { p, .. } => FieldSpec::Prime(*p),
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Cyc { n, .. } => FieldSpec::Cyclotomic(*n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Cyc { coeffs, .. } => coeffs.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(q) => q.is_one(),
            Scalar::Cyc { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(Zero::is_zero)
            }
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + b) % p,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() + b.as_ref())),
            (Scalar::Cyc { n, coeffs: a }, Scalar::Cyc { coeffs: b, .. }) => Scalar::Cyc {
                n: *n,
                coeffs: a.iter().zip(b.iter()).map(|(x, y)| x + y).collect(),
            },
            _ => unreachable!("fields already compared"),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a * b) % p,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() * b.as_ref())),
            (Scalar::Cyc { n, coeffs: a }, Scalar::Cyc { coeffs: b, .. }) => {
                let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::Cyc {
                    n: *n,
                    coeffs: reduce_cyclotomic(*n, prod),
                }
            }
            _ => unreachable!("fields already compared"),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        let inv = other.inv()?;
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Mod { value, p } => Scalar::Mod {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
            Scalar::Rat(q) => Scalar::Rat(Box::new(q.recip())),
            Scalar::Cyc { n, coeffs } => Scalar::Cyc {
                n: *n,
                coeffs: cyclotomic_inverse(*n, coeffs),
            },
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
            Scalar::Rat(q) => Scalar::Rat(Box::new(-q.as_ref())),
            Scalar::Cyc { n, coeffs } => Scalar::Cyc {
                n: *n,
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Residue of a prime-field element; `None` for other fields.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rat(q) => write!(f, "{}", fmt_rational(q)),
            Scalar::Cyc { coeffs, .. } => {
                write!(f, "[")?;
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", fmt_rational(c))?;
                }
                write!(f, "]")
            }
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(t: &str) -> Option<BigRational> {
    match t.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                None
            } else {
                Some(BigRational::new(a, b))
            }
        }
        None => t.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

// Operators panic on mixed fields; library code only combines scalars that
// come from one validated field.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .expect("scalar operands from different fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// A primitive `n`-th root of unity in `field`.
///
/// In `F_p` this needs `n | p - 1`; in `Q(ζ_m)` it needs `n | m` (or `n <= 2`);
/// in `Q` only `n ∈ {1, 2}` work.
pub fn root_of_unity(field: FieldSpec, n: u64) -> Result<Scalar, ScalarError> {
    let none = ScalarError::NoSuchRoot { field, n };
    if n == 0 {
        return Err(none);
    }
    match field {
        FieldSpec::Rationals => match n {
            1 => Ok(field.one()),
            2 => Ok(field.from_i64(-1)),
            _ => Err(none),
        },
        FieldSpec::Prime(p) => {
            if (p - 1) % n != 0 {
                return Err(none);
            }
            let g = primitive_root(p);
            Ok(Scalar::Mod {
                value: pow_mod(g, (p - 1) / n, p),
                p,
            })
        }
        FieldSpec::Cyclotomic(m) => {
            let m = m as u64;
            if n == 1 {
                return Ok(field.one());
            }
            if n == 2 {
                return Ok(field.from_i64(-1));
            }
            if !m.is_multiple_of(n) {
                return Err(none);
            }
            let zeta = cyclotomic_generator(m as u32);
            Ok(zeta.pow(m / n))
        }
    }
}

/// The class of `x` in `Q(ζ_n)`.
pub fn cyclotomic_generator(n: u32) -> Scalar {
    let d = cyclotomic_degree(n);
    let mut poly = vec![BigRational::zero(); 2];
    poly[1] = BigRational::one();
    if d == 1 {
        // Φ_1 = x - 1 and Φ_2 = x + 1 make ζ rational.
        let v = if n == 1 { 1 } else { -1 };
        return FieldSpec::Cyclotomic(n).from_i64(v);
    }
    Scalar::Cyc {
        n,
        coeffs: reduce_cyclotomic(n, poly),
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Smallest generator of `F_p^*`.
fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let order = p - 1;
    let mut factors = Vec::new();
    let mut m = order;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, order / q, p) != 1))
        .expect("every prime field has a primitive root")
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    if let Some(p) = cyclotomic_cache().lock().expect("poisoned").get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &phi_d);
        }
    }
    let result = Arc::new(num);
    cyclotomic_cache()
        .lock()
        .expect("poisoned")
        .insert(n, Arc::clone(&result));
    result
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &di) in den.iter().enumerate() {
            rem[k + i] -= c * di;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub fn cyclotomic_degree(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

fn reduce_cyclotomic(n: u32, mut poly: Vec<BigRational>) -> Box<[BigRational]> {
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    if poly.len() > d {
        for k in (d..poly.len()).rev() {
            let c = std::mem::take(&mut poly[k]);
            if c.is_zero() {
                continue;
            }
            for (i, &pi) in phi.iter().enumerate().take(d) {
                if pi != 0 {
                    poly[k - d + i] -= &c * BigRational::from_integer(pi.into());
                }
            }
        }
        poly.truncate(d);
    }
    poly.resize(d, BigRational::zero());
    poly.into_boxed_slice()
}

/// Inverse in `Q[x]/Φ_n` by solving the multiplication-matrix system.
fn cyclotomic_inverse(n: u32, a: &[BigRational]) -> Box<[BigRational]> {
    let d = a.len();
    // Column j of the multiplication matrix is a * x^j reduced.
    let mut cols: Vec<Box<[BigRational]>> = Vec::with_capacity(d);
    for j in 0..d {
        let mut shifted = vec![BigRational::zero(); j];
        shifted.extend(a.iter().cloned());
        cols.push(reduce_cyclotomic(n, shifted));
    }
    // Augmented rows [M | e_0].
    let mut rows: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..d).map(|j| cols[j][i].clone()).collect();
            row.push(if i == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            });
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d)
            .find(|&r| !rows[r][col].is_zero())
            .expect("nonzero elements of a field are invertible");
        rows.swap(col, piv);
        let inv = rows[col][col].recip();
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (v, pv) in rows[r].iter_mut().zip(pivot_row.iter()) {
                    *v -= &factor * pv;
                }
            }
        }
    }
    rows.into_iter().map(|mut r| r.pop().unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> Scalar {
        FieldSpec::Rationals
            .from_rational(&BigRational::new(a.into(), b.into()))
            .unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn prime_product() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.from_i64(3) * f.from_i64(4), f.from_i64(2));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = FieldSpec::cyclotomic(4).unwrap();
        let z = cyclotomic_generator(4);
        assert_eq!(&z * &z, f.from_i64(-1));
    }

    #[test]
    fn roots_of_unity() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(root_of_unity(f5, 4).unwrap(), f5.from_i64(2));
        let c4 = FieldSpec::cyclotomic(4).unwrap();
        assert_eq!(root_of_unity(c4, 2).unwrap(), c4.from_i64(-1));
        assert!(matches!(
            root_of_unity(FieldSpec::Rationals, 3),
            Err(ScalarError::NoSuchRoot { .. })
        ));
    }

    #[test]
    fn primitive_roots_are_primitive() {
        for (field, n) in [
            (FieldSpec::Prime(7), 6),
            (FieldSpec::Prime(13), 4),
            (FieldSpec::Cyclotomic(12), 12),
            (FieldSpec::Cyclotomic(5), 5),
        ] {
            let z = root_of_unity(field, n).unwrap();
            assert!(z.pow(n).is_one());
            for k in 1..n {
                assert!(!z.pow(k).is_one(), "{field} order {n} power {k}");
            }
        }
    }

    #[test]
    fn errors() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(
            f5.one().checked_add(&FieldSpec::Rationals.one()),
            Err(ScalarError::FieldMismatch { .. })
        ));
        assert_eq!(
            f5.one().checked_div(&f5.zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert!(FieldSpec::prime(9).is_err());
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn parse_and_display() {
        let c4 = FieldSpec::cyclotomic(4).unwrap();
        let z = c4.parse_scalar("[0, 1]").unwrap();
        assert_eq!(z, cyclotomic_generator(4));
        assert_eq!(z.to_string(), "[0, 1]");
        assert_eq!(
            FieldSpec::Rationals
                .parse_scalar("-3/6")
                .unwrap()
                .to_string(),
            "-1/2"
        );
        assert_eq!(
            FieldSpec::Prime(5).parse_scalar("-1").unwrap().to_string(),
            "4"
        );
        assert_eq!(
            FieldSpec::Prime(5).parse_scalar("1/2").unwrap().to_string(),
            "3"
        );
        for s in ["Q", "F(5)", "Q(zeta_4)"] {
            assert_eq!(s.parse::<FieldSpec>().unwrap().to_string(), s);
        }
        assert_eq!("F5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
    }

    fn arb_scalar(field: FieldSpec) -> impl Strategy<Value = Scalar> {
        let d = match field {
            FieldSpec::Cyclotomic(n) => cyclotomic_degree(n),
            _ => 1,
        };
        proptest::collection::vec((-20i64..20, 1i64..6), d).prop_map(move |parts| match field {
            FieldSpec::Cyclotomic(n) => Scalar::Cyc {
                n,
                coeffs: parts
                    .into_iter()
                    .map(|(a, b)| BigRational::new(a.into(), b.into()))
                    .collect(),
            },
            _ => {
                let (a, b) = parts[0];
                field
                    .from_rational(&BigRational::new(a.into(), b.into()))
                    .unwrap_or_else(|_| field.from_i64(a))
            }
        })
    }

    fn field_axioms(a: Scalar, b: Scalar, c: Scalar) {
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert!((&(&a + &b) - &b) - &a == a.field().zero());
        if !a.is_zero() {
            assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    proptest! {
        #[test]
        fn axioms_rationals(a in arb_scalar(FieldSpec::Rationals), b in arb_scalar(FieldSpec::Rationals), c in arb_scalar(FieldSpec::Rationals)) {
            field_axioms(a, b, c);
        }

        #[test]
        fn axioms_f7(a in arb_scalar(FieldSpec::Prime(7)), b in arb_scalar(FieldSpec::Prime(7)), c in arb_scalar(FieldSpec::Prime(7))) {
            field_axioms(a, b, c);
        }

        #[test]
        fn axioms_q_zeta12(a in arb_scalar(FieldSpec::Cyclotomic(12)), b in arb_scalar(FieldSpec::Cyclotomic(12)), c in arb_scalar(FieldSpec::Cyclotomic(12))) {
            field_axioms(a, b, c);
        }

        #[test]
        fn zeta_power_is_one(n in 1u32..40) {
            let z = cyclotomic_generator(n);
            prop_assert!(z.pow(n as u64).is_one());
        }
    }
}
