//! Non-archimedean local fields `Q_p` and `F_p((T))`.
//!
//! Two element types live here. [`FiniteElement`] is an exact element with a
//! finite `π`-adic expansion (a `p`-power-denominator rational, or a Laurent
//! polynomial in `T`); the grid, zeta and operator engines evaluate
//! polynomials on these. [`LocalFieldElement`] is the user-facing
//! fixed-precision element: a valuation plus a window of residue digits.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    /// The `p`-adic numbers, uniformizer `p`.
    Qp,
    /// Laurent series over `F_p`, uniformizer `T`.
    LaurentFp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub p: u32,
}

impl FieldSpec {
    pub fn new(kind: FieldKind, p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(FieldSpec { kind, p })
    }

    pub fn qp(p: u32) -> Self {
        FieldSpec::new(FieldKind::Qp, p).expect("prime")
    }

    pub fn laurent(p: u32) -> Self {
        FieldSpec::new(FieldKind::LaurentFp, p).expect("prime")
    }

    /// Cardinality of the residue field. Only prime residue fields are
    /// supported, so this is `p`.
    pub fn q(&self) -> u64 {
        self.p as u64
    }

    pub fn qf(&self) -> f64 {
        self.p as f64
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Qp => write!(f, "Q_{}", self.p),
            FieldKind::LaurentFp => write!(f, "F_{}((T))", self.p),
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `q^e` as an exact rational (e may be negative).
pub fn q_pow(q: u64, e: i64) -> BigRational {
    let base = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

/// Haar measure of the ball `π^l R^n`, i.e. `q^{-ln}`.
pub fn ball_measure(l: i64, n: u32, q: u64) -> BigRational {
    q_pow(q, -l * n as i64)
}

/// Haar measure of the sphere `{‖x‖ = q^{-l}}` in `K^n`.
pub fn sphere_measure(l: i64, n: u32, q: u64) -> BigRational {
    ball_measure(l, n, q) * (BigRational::one() - q_pow(q, -(n as i64)))
}

// ---------------------------------------------------------------------------
// F_p[T] helpers (coefficient vectors, lowest degree first)

fn fp_trim(c: &mut Vec<u32>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

fn fp_add(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0);
        out.push(x % p);
    }
    fp_trim(&mut out);
    out
}

fn fp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = (acc[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = acc.into_iter().map(|v| v as u32).collect();
    fp_trim(&mut out);
    out
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Inverse of a power series with nonzero constant term, modulo `T^prec`.
fn fp_series_inverse(u: &[u32], p: u32, prec: usize) -> Vec<u32> {
    let inv0 = inv_mod_p(u[0], p) as u64;
    let mut w = vec![0u32; prec];
    for k in 0..prec {
        // coefficient k of u*w must be [k == 0]
        let mut s: u64 = if k == 0 { 1 } else { 0 };
        for j in 1..=k.min(u.len().saturating_sub(1)) {
            s = (s + (p as u64 - (u[j] as u64 * w[k - j] as u64) % p as u64)) % p as u64;
        }
        w[k] = (s * inv0 % p as u64) as u32;
    }
    w
}

// ---------------------------------------------------------------------------
// FiniteElement

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Zero,
    /// `unit * p^shift`, `unit` not divisible by `p`.
    Int { unit: BigInt, shift: i64 },
    /// `Σ coeffs[i] T^{shift+i}`, `coeffs[0] != 0`.
    Poly { coeffs: Vec<u32>, shift: i64 },
}

/// Exact element of `K` with a finite `π`-adic expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteElement {
    field: FieldSpec,
    repr: Repr,
}

impl FiniteElement {
    pub fn zero(field: FieldSpec) -> Self {
        FiniteElement { field, repr: Repr::Zero }
    }

    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        match field.kind {
            FieldKind::Qp => Self::from_int(field, BigInt::from(v), 0),
            FieldKind::LaurentFp => {
                let r = v.rem_euclid(field.p as i64) as u32;
                Self::from_poly(field, vec![r], 0)
            }
        }
    }

    fn from_int(field: FieldSpec, mut unit: BigInt, mut shift: i64) -> Self {
        if unit.is_zero() {
            return Self::zero(field);
        }
        let p = BigInt::from(field.p);
        loop {
            let (q, r) = unit.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            unit = q;
            shift += 1;
        }
        FiniteElement { field, repr: Repr::Int { unit, shift } }
    }

    fn from_poly(field: FieldSpec, mut coeffs: Vec<u32>, mut shift: i64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.p;
        }
        fp_trim(&mut coeffs);
        let lead = coeffs.iter().position(|&c| c != 0);
        match lead {
            None => Self::zero(field),
            Some(k) => {
                coeffs.drain(..k);
                shift += k as i64;
                FiniteElement { field, repr: Repr::Poly { coeffs, shift } }
            }
        }
    }

    /// `Σ digits[i] π^{val+i}`.
    pub fn from_digits(field: FieldSpec, val: i64, digits: &[u32]) -> Self {
        match field.kind {
            FieldKind::Qp => {
                let p = BigInt::from(field.p);
                let mut acc = BigInt::zero();
                for &d in digits.iter().rev() {
                    acc = acc * &p + BigInt::from(d);
                }
                Self::from_int(field, acc, val)
            }
            FieldKind::LaurentFp => Self::from_poly(field, digits.to_vec(), val),
        }
    }

    /// Element of the finite grid group `π^{-lo} R / π^{hi} R` encoded as a
    /// base-`p` integer whose digit `i` is the coefficient of `π^{i-lo}`.
    pub fn from_index(field: FieldSpec, index: u64, lo: i64) -> Self {
        let p = field.p as u64;
        let mut digits = Vec::new();
        let mut x = index;
        while x > 0 {
            digits.push((x % p) as u32);
            x /= p;
        }
        Self::from_digits(field, -lo, &digits)
    }

    pub fn pi(field: FieldSpec) -> Self {
        Self::from_digits(field, 1, &[1])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    /// Valuation; `None` for zero.
    pub fn ord(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Int { shift, .. } | Repr::Poly { shift, .. } => Some(*shift),
        }
    }

    /// Normalized absolute value `q^{-ord}` as a float.
    pub fn abs_f64(&self) -> f64 {
        match self.ord() {
            None => 0.0,
            Some(v) => self.field.qf().powi(-(v as i32)),
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field, other.field, "elements of different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        match (&self.repr, &other.repr) {
            (Repr::Zero, _) => other.clone(),
            (_, Repr::Zero) => self.clone(),
            (Repr::Int { unit: a, shift: sa }, Repr::Int { unit: b, shift: sb }) => {
                let m = (*sa).min(*sb);
                let p = BigInt::from(self.field.p);
                let a2 = a * p.pow((sa - m) as u32);
                let b2 = b * p.pow((sb - m) as u32);
                Self::from_int(self.field, a2 + b2, m)
            }
            (Repr::Poly { coeffs: a, shift: sa }, Repr::Poly { coeffs: b, shift: sb }) => {
                let m = (*sa).min(*sb);
                let mut a2 = vec![0u32; (sa - m) as usize];
                a2.extend_from_slice(a);
                let mut b2 = vec![0u32; (sb - m) as usize];
                b2.extend_from_slice(b);
                Self::from_poly(self.field, fp_add(&a2, &b2, self.field.p), m)
            }
            _ => unreachable!("representation does not match field kind"),
        }
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::Int { unit, shift } => FiniteElement {
                field: self.field,
                repr: Repr::Int { unit: -unit, shift: *shift },
            },
            Repr::Poly { coeffs, shift } => {
                let p = self.field.p;
                let c = coeffs.iter().map(|&x| (p - x) % p).collect();
                Self::from_poly(self.field, c, *shift)
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        match (&self.repr, &other.repr) {
            (Repr::Zero, _) | (_, Repr::Zero) => Self::zero(self.field),
            (Repr::Int { unit: a, shift: sa }, Repr::Int { unit: b, shift: sb }) => {
                FiniteElement {
                    field: self.field,
                    repr: Repr::Int { unit: a * b, shift: sa + sb },
                }
            }
            (Repr::Poly { coeffs: a, shift: sa }, Repr::Poly { coeffs: b, shift: sb }) => {
                Self::from_poly(self.field, fp_mul(a, b, self.field.p), sa + sb)
            }
            _ => unreachable!("representation does not match field kind"),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::from_i64(self.field, 1);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Multiply by `π^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        match &mut out.repr {
            Repr::Zero => {}
            Repr::Int { shift, .. } | Repr::Poly { shift, .. } => *shift += k,
        }
        out
    }

    /// Coefficient of `π^j` in the canonical digit expansion.
    pub fn digit(&self, j: i64) -> u32 {
        match &self.repr {
            Repr::Zero => 0,
            Repr::Int { unit, shift } => {
                if j < *shift {
                    return 0;
                }
                let p = BigInt::from(self.field.p);
                let d = unit.div_floor(&p.pow((j - shift) as u32));
                d.mod_floor(&p).to_u32().unwrap()
            }
            Repr::Poly { coeffs, shift } => {
                let k = j - shift;
                if k < 0 {
                    0
                } else {
                    coeffs.get(k as usize).copied().unwrap_or(0)
                }
            }
        }
    }

    /// Digits of `π^lo .. π^{hi-1}`.
    pub fn digits_range(&self, lo: i64, hi: i64) -> Vec<u32> {
        match &self.repr {
            Repr::Int { unit, shift } if hi > lo => {
                // one division chain instead of a power per digit
                let p = BigInt::from(self.field.p);
                let mut out = Vec::with_capacity((hi - lo) as usize);
                let mut x = if lo >= *shift {
                    unit.div_floor(&p.pow((lo - shift) as u32))
                } else {
                    unit * p.pow((shift - lo) as u32)
                };
                for _ in lo..hi {
                    let (q, r) = x.div_mod_floor(&p);
                    out.push(r.to_u32().unwrap());
                    x = q;
                }
                out
            }
            _ => (lo..hi).map(|j| self.digit(j)).collect(),
        }
    }

    /// Base-`p` index of the class of `self` in `π^{-lo} R / π^{hi} R`.
    /// Returns `None` when `ord(self) < -lo`.
    pub fn grid_index(&self, lo: i64, hi: i64) -> Option<u64> {
        if let Some(v) = self.ord() {
            if v < -lo {
                return None;
            }
        }
        let p = self.field.p as u64;
        let mut idx = 0u64;
        for d in self.digits_range(-lo, hi).iter().rev() {
            idx = idx * p + *d as u64;
        }
        Some(idx)
    }

    /// Residue class in `F_p`; requires `ord >= 0`.
    pub fn residue(&self) -> u32 {
        debug_assert!(self.ord().is_none_or(|v| v >= 0));
        self.digit(0)
    }

    /// Fractional part `{x}` as an exact rational in `[0,1)`: the additive
    /// character is `χ(x) = exp(2πi {x})`.
    pub fn char_fraction(&self) -> BigRational {
        match &self.repr {
            Repr::Zero => BigRational::zero(),
            Repr::Int { unit, shift } => {
                if *shift >= 0 {
                    return BigRational::zero();
                }
                let den = BigInt::from(self.field.p).pow((-shift) as u32);
                BigRational::new(unit.mod_floor(&den), den)
            }
            Repr::Poly { .. } => BigRational::new(
                BigInt::from(self.digit(-1)),
                BigInt::from(self.field.p),
            ),
        }
    }

    /// Inverse of a unit modulo `π^prec`, as a digit vector of length `prec`.
    fn unit_inverse_digits(&self, prec: usize) -> Vec<u32> {
        match &self.repr {
            Repr::Zero => panic!("inverse of zero"),
            Repr::Int { unit, .. } => {
                let m = BigInt::from(self.field.p).pow(prec as u32);
                let g = unit.mod_floor(&m).extended_gcd(&m);
                let inv = g.x.mod_floor(&m);
                FiniteElement::from_int(self.field, inv, 0).digits_range(0, prec as i64)
            }
            Repr::Poly { coeffs, .. } => fp_series_inverse(coeffs, self.field.p, prec),
        }
    }

    pub fn to_local(&self, precision: usize) -> LocalFieldElement {
        match self.ord() {
            None => LocalFieldElement::zero(self.field),
            Some(v) => LocalFieldElement {
                field: self.field,
                val: Some(v),
                digits: self.digits_range(v, v + precision as i64),
            },
        }
    }
}

// ---------------------------------------------------------------------------
// LocalFieldElement

/// Fixed-precision element: `π^val · Σ digits[i] π^i` with `digits[0] != 0`,
/// known modulo `π^{val + digits.len()}`. Zero is exact and has `val = None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFieldElement {
    pub field: FieldSpec,
    pub val: Option<i64>,
    pub digits: Vec<u32>,
}

impl LocalFieldElement {
    pub fn zero(field: FieldSpec) -> Self {
        LocalFieldElement { field, val: None, digits: Vec::new() }
    }

    /// Validate the digit window and normalize leading zero digits.
    pub fn new(field: FieldSpec, val: i64, digits: Vec<u32>) -> Result<Self> {
        if let Some(d) = digits.iter().find(|&&d| d >= field.p) {
            return Err(Error::InvalidInput(format!("digit {d} out of range for p = {}", field.p)));
        }
        let Some(k) = digits.iter().position(|&d| d != 0) else {
            return Err(Error::Inexact);
        };
        Ok(LocalFieldElement { field, val: Some(val + k as i64), digits: digits[k..].to_vec() })
    }

    pub fn from_i64(field: FieldSpec, v: i64, precision: usize) -> Self {
        FiniteElement::from_i64(field, v).to_local(precision)
    }

    /// `num/den` to the given relative precision. In `F_p((T))` the integers
    /// are reduced into the constant field.
    pub fn from_ratio(field: FieldSpec, num: i64, den: i64, precision: usize) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let a = Self::from_i64(field, num, precision);
        let b = Self::from_i64(field, den, precision);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        a.div(&b)
    }

    pub fn is_zero(&self) -> bool {
        self.val.is_none()
    }

    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    /// Absolute precision `val + precision`; infinite for exact zero.
    fn abs_precision(&self) -> Option<i64> {
        self.val.map(|v| v + self.digits.len() as i64)
    }

    pub fn to_finite(&self) -> FiniteElement {
        match self.val {
            None => FiniteElement::zero(self.field),
            Some(v) => FiniteElement::from_digits(self.field, v, &self.digits),
        }
    }

    /// `(ord x, |x|)` with `|x| = q^{-ord x}`; zero maps to `(None, 0)`.
    pub fn valuation_and_norm(&self) -> (Option<i64>, BigRational) {
        match self.val {
            None => (None, BigRational::zero()),
            Some(v) => (Some(v), q_pow(self.field.q(), -v)),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    fn truncate(field: FieldSpec, exact: &FiniteElement, abs: i64) -> Result<Self> {
        match exact.ord() {
            Some(v) if v < abs => Ok(LocalFieldElement {
                field,
                val: Some(v),
                digits: exact.digits_range(v, abs),
            }),
            _ => Err(Error::Inexact),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let abs = self.abs_precision().unwrap().min(other.abs_precision().unwrap());
        let exact = self.to_finite().add(&other.to_finite());
        Self::truncate(self.field, &exact, abs)
    }

    pub fn neg(&self) -> Self {
        match (self.val, self.abs_precision()) {
            (Some(_), Some(abs)) => Self::truncate(self.field, &self.to_finite().neg(), abs)
                .expect("negation preserves valuation"),
            _ => self.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let prec = self.precision().min(other.precision()) as i64;
        let val = self.val.unwrap() + other.val.unwrap();
        let exact = self.to_finite().mul(&other.to_finite());
        Self::truncate(self.field, &exact, val + prec)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let prec = self.precision().min(other.precision());
        let unit_b = FiniteElement::from_digits(self.field, 0, &other.digits);
        let inv = FiniteElement::from_digits(self.field, 0, &unit_b.unit_inverse_digits(prec));
        let unit_a = FiniteElement::from_digits(self.field, 0, &self.digits);
        let val = self.val.unwrap() - other.val.unwrap();
        let exact = unit_a.mul(&inv).shift(val);
        Self::truncate(self.field, &exact, val + prec as i64)
    }

    /// Fractional part of `x` with `χ(x) = exp(2πi · char_fraction(x))`:
    /// `Σ_{j<0} a_j p^j` in `Q_p`, `a_{-1}/p` in `F_p((T))`.
    pub fn char_fraction(&self) -> Result<BigRational> {
        if let Some(v) = self.val {
            if v < 0 && self.abs_precision().unwrap() < 0 {
                return Err(Error::InsufficientPrecision(format!(
                    "digits below π^0 are unknown (val {v}, precision {})",
                    self.precision()
                )));
            }
        }
        Ok(self.to_finite().char_fraction())
    }
}

impl fmt::Display for LocalFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(v) = self.val else {
            return write!(f, "0");
        };
        let sym = match self.field.kind {
            FieldKind::Qp => self.field.p.to_string(),
            FieldKind::LaurentFp => "T".to_string(),
        };
        let mut first = true;
        for (i, d) in self.digits.iter().enumerate() {
            if *d == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{d}*{sym}^{}", v + i as i64)?;
        }
        write!(f, " + O({sym}^{})", v + self.digits.len() as i64)
    }
}

/// Vector in `K^n` with the sup norm.
pub type FieldVector = Vec<LocalFieldElement>;

/// `min ord` over coordinates, i.e. `‖x‖ = q^{-ord}`; `None` for the zero vector.
pub fn vector_ord(x: &[LocalFieldElement]) -> Option<i64> {
    x.iter().filter_map(|e| e.val).min()
}

/// Compare two absolute values given as valuations (`None` = zero).
pub fn cmp_abs(a: Option<i64>, b: Option<i64>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some(x), Some(y)) => y.cmp(&x),
    }
}

/// `p`-adic valuation of a nonzero integer.
pub fn int_ord(x: &BigInt, p: u32) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    while x.is_multiple_of(&p) {
        x /= &p;
        v += 1;
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn valuation_examples() {
        let f3 = FieldSpec::qp(3);
        let x = LocalFieldElement::from_i64(f3, 12, 32);
        assert_eq!(x.valuation_and_norm(), (Some(1), r(1, 3)));
        assert_eq!(LocalFieldElement::zero(f3).valuation_and_norm(), (None, r(0, 1)));

        let f5 = FieldSpec::laurent(5);
        let x = LocalFieldElement::new(f5, -2, vec![1, 1]).unwrap();
        assert_eq!(x.valuation_and_norm(), (Some(-2), r(25, 1)));
    }

    #[test]
    fn twelve_in_q3_digits() {
        // 12 = 1*3 + 1*9
        let x = LocalFieldElement::from_i64(FieldSpec::qp(3), 12, 4);
        assert_eq!(x.val, Some(1));
        assert_eq!(x.digits, vec![1, 1, 0, 0]);
    }

    #[test]
    fn negative_integers_have_complement_digits() {
        let x = LocalFieldElement::from_i64(FieldSpec::qp(3), -1, 5);
        assert_eq!(x.digits, vec![2, 2, 2, 2, 2]);
        let one = LocalFieldElement::from_i64(FieldSpec::qp(3), 1, 5);
        assert_eq!(x.add(&one), Err(Error::Inexact));
    }

    #[test]
    fn division_round_trip() {
        let f = FieldSpec::qp(5);
        let a = LocalFieldElement::from_ratio(f, 7, 3, 20).unwrap();
        let b = LocalFieldElement::from_i64(f, 3, 20);
        assert_eq!(a.mul(&b).unwrap(), LocalFieldElement::from_i64(f, 7, 20));
        assert_eq!(a.div(&LocalFieldElement::zero(f)), Err(Error::DivisionByZero));
    }

    #[test]
    fn char_fraction_examples() {
        let f3 = FieldSpec::qp(3);
        let x = LocalFieldElement::from_ratio(f3, 1, 3, 8).unwrap();
        assert_eq!(x.char_fraction().unwrap(), r(1, 3));
        let x = LocalFieldElement::from_ratio(f3, 5, 9, 8).unwrap();
        assert_eq!(x.char_fraction().unwrap(), r(5, 9));
        let x = LocalFieldElement::from_ratio(f3, -1, 3, 8).unwrap();
        assert_eq!(x.char_fraction().unwrap(), r(2, 3));

        let f5 = FieldSpec::laurent(5);
        let x = LocalFieldElement::new(f5, -2, vec![4, 3, 1]).unwrap();
        assert_eq!(x.char_fraction().unwrap(), r(3, 5));
    }

    #[test]
    fn laurent_arithmetic_has_no_carries() {
        let f = FieldSpec::laurent(3);
        let a = LocalFieldElement::new(f, 0, vec![2, 2, 0, 0]).unwrap();
        let s = a.add(&a).unwrap();
        assert_eq!(s.digits, vec![1, 1, 0, 0]);
        // (1 - T)^{-1} = 1 + T + T^2 + ...
        let one = LocalFieldElement::from_i64(f, 1, 6);
        let u = LocalFieldElement::new(f, 0, vec![1, 2, 0, 0, 0, 0]).unwrap();
        assert_eq!(one.div(&u).unwrap().digits, vec![1; 6]);
    }

    #[test]
    fn measures() {
        assert_eq!(ball_measure(0, 2, 3), r(1, 1));
        assert_eq!(ball_measure(-1, 1, 3), r(3, 1));
        assert_eq!(ball_measure(1, 1, 3), r(1, 3));
        assert_eq!(sphere_measure(0, 2, 3), r(8, 9));
    }

    #[test]
    fn grid_index_round_trip() {
        let f = FieldSpec::qp(3);
        for idx in 0..81u64 {
            let x = FiniteElement::from_index(f, idx, 1);
            assert_eq!(x.grid_index(1, 3), Some(idx));
        }
        let f = FieldSpec::laurent(2);
        for idx in 0..16u64 {
            let x = FiniteElement::from_index(f, idx, 2);
            assert_eq!(x.grid_index(2, 2), Some(idx));
        }
    }

    #[test]
    fn json_shape() {
        let x = LocalFieldElement::from_i64(FieldSpec::qp(3), 12, 3);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"field":{"kind":"Qp","p":3},"val":1,"digits":[1,1,0]}"#);
        let back: LocalFieldElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
