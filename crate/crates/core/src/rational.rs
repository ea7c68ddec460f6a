//! Rational functions of `t = q^{-s}`: exact arithmetic, Padé reconstruction
//! from truncated power series, and Laurent expansion in `s` around a point.
//!
//! Laurent coefficients in `s - s0` are Laurent polynomials in `λ = ln q`
//! with rational coefficients, so they stay exact until evaluated.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::q_pow;
use crate::upoly::{fmt_rational, rat_to_f64, Poly, Scalar};

/// Reduced quotient `numer(t) / denom(t)` with exact rational coefficients.
/// Normalization: the lowest nonzero coefficient of the denominator is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunctionT {
    pub q: u64,
    numer: Poly<BigRational>,
    denom: Poly<BigRational>,
}

impl RationalFunctionT {
    pub fn new(q: u64, numer: Poly<BigRational>, denom: Poly<BigRational>) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(RationalFunctionT { q, numer, denom: Poly::one() });
        }
        let g = Poly::gcd(&numer, &denom);
        let (n, _) = numer.div_rem(&g);
        let (d, _) = denom.div_rem(&g);
        let low = d.coeff(d.low_degree().unwrap());
        let inv = BigRational::one() / low;
        Ok(RationalFunctionT { q, numer: n.scale(&inv), denom: d.scale(&inv) })
    }

    pub fn from_poly(q: u64, p: Poly<BigRational>) -> Self {
        RationalFunctionT { q, numer: p, denom: Poly::one() }
    }

    pub fn constant(q: u64, c: BigRational) -> Self {
        Self::from_poly(q, Poly::constant(c))
    }

    /// `1 - c t^k`
    pub fn one_minus(c: BigRational, k: usize) -> Poly<BigRational> {
        &Poly::one() - &Poly::monomial(c, k)
    }

    pub fn numer(&self) -> &Poly<BigRational> {
        &self.numer
    }

    pub fn denom(&self) -> &Poly<BigRational> {
        &self.denom
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.degree() == Some(0)
    }

    fn same_q(&self, o: &Self) -> Result<()> {
        if self.q != o.q {
            return Err(Error::InvalidInput(format!("q mismatch: {} vs {}", self.q, o.q)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_q(o)?;
        let n = &(&self.numer * &o.denom) + &(&o.numer * &self.denom);
        Self::new(self.q, n, &self.denom * &o.denom)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_q(o)?;
        let n = &(&self.numer * &o.denom) - &(&o.numer * &self.denom);
        Self::new(self.q, n, &self.denom * &o.denom)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_q(o)?;
        Self::new(self.q, &self.numer * &o.numer, &self.denom * &o.denom)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.same_q(o)?;
        if o.numer.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.q, &self.numer * &o.denom, &self.denom * &o.numer)
    }

    /// Substitute `t -> c t`.
    pub fn scale_t(&self, c: &BigRational) -> Self {
        let sc = |p: &Poly<BigRational>| {
            let mut pow = BigRational::one();
            let mut v = Vec::new();
            for a in p.coeffs() {
                v.push(a * &pow);
                pow *= c;
            }
            Poly::new(v)
        };
        Self::new(self.q, sc(&self.numer), sc(&self.denom)).expect("nonzero denominator")
    }

    /// Power series coefficients `c_0 .. c_{terms-1}`.
    pub fn series(&self, terms: usize) -> Result<Vec<BigRational>> {
        if self.denom.coeff(0).is_zero() {
            return Err(Error::Unsupported("denominator vanishes at t = 0".into()));
        }
        Ok(self.numer.series_div(&self.denom, terms))
    }

    pub fn eval(&self, t: &BigRational) -> Result<BigRational> {
        let d = self.denom.eval(t);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.numer.eval(t) / d)
    }

    pub fn eval_t(&self, t: Complex64) -> Complex64 {
        self.numer.eval_complex(t) / self.denom.eval_complex(t)
    }

    /// Value at `s` with `t = q^{-s}`.
    pub fn eval_s(&self, s: Complex64) -> Complex64 {
        self.eval_t(t_of_s(self.q, s))
    }

    /// Denominator with coefficients as a product of `(1 - c t^k)` factors
    /// where possible, used for display and divisibility checks.
    pub fn factored(&self) -> String {
        format!("({}) / ({})", factor_string(&self.numer, self.q), factor_string(&self.denom, self.q))
    }

    /// True when `self.denom` divides `d`.
    pub fn denominator_divides(&self, d: &Poly<BigRational>) -> bool {
        let (_, r) = d.div_rem(&self.denom);
        r.is_zero()
    }
}

impl fmt::Display for RationalFunctionT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            let c = self.denom.coeff(0);
            write!(f, "{}", self.numer.scale(&(BigRational::one() / c)))
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

pub fn t_of_s(q: u64, s: Complex64) -> Complex64 {
    (-s * (q as f64).ln()).exp()
}

/// Split off rational content, powers of `t` and factors `1 - q^{-a} t^b`.
fn factor_string(p: &Poly<BigRational>, q: u64) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut rest = p.clone();
    let mut parts: Vec<String> = Vec::new();
    let low = rest.low_degree().unwrap();
    if low > 0 {
        rest = Poly::new(rest.coeffs()[low..].to_vec());
    }
    let c0 = rest.coeff(0);
    rest = rest.scale(&(BigRational::one() / c0.clone()));
    if !c0.is_one() {
        parts.push(fmt_rational(&c0));
    }
    match low {
        0 => {}
        1 => parts.push("t".into()),
        k => parts.push(format!("t^{k}")),
    }
    let max_deg = rest.degree().unwrap_or(0);
    'outer: while rest.degree().unwrap_or(0) > 0 {
        for b in 1..=max_deg {
            for a in -8i64..=16 {
                let f = RationalFunctionT::one_minus(q_pow(q, -a), b);
                if f.degree() > rest.degree() {
                    continue;
                }
                let (quo, r) = rest.div_rem(&f);
                if r.is_zero() {
                    let ca = if a == 0 { "1".to_string() } else { format!("{q}^{}", -a) };
                    let tb = if b == 1 { "t".to_string() } else { format!("t^{b}") };
                    parts.push(format!("(1 - {ca}*{tb})"));
                    rest = quo;
                    continue 'outer;
                }
            }
        }
        break;
    }
    if rest.degree().unwrap_or(0) > 0 {
        parts.push(format!("({rest})"));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

// ---------------------------------------------------------------------------
// Padé reconstruction

/// Null space basis of a rational matrix (rows × cols).
fn null_space(mut m: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = BigRational::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - y * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Recover `P/Q` with `deg P <= dn`, `deg Q <= dd` from series coefficients
/// `c_0 .. c_K`, `K >= dn + dd + 1`. Terms beyond `dn + dd` are held out and
/// must match the expansion of the candidate.
pub fn reconstruct_from_series(
    q: u64,
    series: &[BigRational],
    dn: usize,
    dd: usize,
) -> Result<RationalFunctionT> {
    if series.len() < dn + dd + 2 {
        return Err(Error::InvalidInput(format!(
            "need at least {} series terms for degrees ({dn}, {dd}), got {}",
            dn + dd + 2,
            series.len()
        )));
    }
    let c = |k: isize| -> BigRational {
        if k < 0 {
            BigRational::zero()
        } else {
            series[k as usize].clone()
        }
    };
    // Σ_j Q_j c_{k-j} = 0 for k = dn+1 ..= dn+dd
    let rows: Vec<Vec<BigRational>> = (dn + 1..=dn + dd)
        .map(|k| (0..=dd).map(|j| c(k as isize - j as isize)).collect())
        .collect();
    let basis = if dd == 0 { vec![vec![BigRational::one()]] } else { null_space(rows, dd + 1) };

    let mut candidate: Option<RationalFunctionT> = None;
    for v in &basis {
        let qpoly = Poly::new(v.clone());
        let full = &Poly::new(series[..=dn].to_vec()) * &qpoly;
        let ppoly = Poly::new(full.coeffs().iter().take(dn + 1).cloned().collect());
        if ppoly.is_zero() && qpoly.is_zero() {
            continue;
        }
        let r = RationalFunctionT::new(q, ppoly, qpoly)?;
        match &candidate {
            None => candidate = Some(r),
            Some(prev) if *prev == r => {}
            Some(prev) => {
                // Different basis vectors can only disagree if one of them
                // fails to reproduce the series; keep the one that does.
                let ok_prev = matches_series(prev, series);
                let ok_new = matches_series(&r, series);
                match (ok_prev, ok_new) {
                    (true, true) => {
                        return Err(Error::AmbiguousSolution(format!("{prev} and {r} both fit")))
                    }
                    (false, true) => candidate = Some(r),
                    _ => {}
                }
            }
        }
    }
    let cand = candidate.ok_or(Error::NoSolution)?;
    if !matches_series(&cand, series) {
        return Err(Error::NoSolution);
    }
    Ok(cand)
}

fn matches_series(r: &RationalFunctionT, series: &[BigRational]) -> bool {
    match r.series(series.len()) {
        Ok(s) => s == series,
        Err(_) => false,
    }
}

// ---------------------------------------------------------------------------
// Laurent expansion

/// Laurent polynomial in `λ = ln q`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaPoly<C: Scalar> {
    pub terms: BTreeMap<i32, C>,
}

impl<C: Scalar> LambdaPoly<C> {
    pub fn zero() -> Self {
        LambdaPoly { terms: BTreeMap::new() }
    }

    pub fn term(c: C, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    fn add_term(&mut self, e: i32, c: C) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.remove(&e).map_or(c.clone(), |x| x + c);
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        r
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Self::zero();
        for (e, x) in &self.terms {
            r.add_term(*e, x.clone() * c.clone());
        }
        r
    }

    pub fn eval(&self, lambda: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_complex() * lambda.powi(*e))
            .sum()
    }
}

impl LambdaPoly<BigRational> {
    pub fn to_complex(&self) -> LambdaPoly<Complex64> {
        let mut r = LambdaPoly::zero();
        for (e, c) in &self.terms {
            r.add_term(*e, c.to_complex());
        }
        r
    }
}

impl fmt::Display for LambdaPoly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => fmt_rational(c),
                1 => format!("{}*λ", fmt_rational(c)),
                _ => format!("{}*λ^{e}", fmt_rational(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ_{r >= lowest} coeffs[r - lowest] (s - s0)^r`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentExpansion<C: Scalar> {
    pub q: u64,
    pub center: i64,
    pub lowest: i32,
    pub coeffs: Vec<LambdaPoly<C>>,
}

impl<C: Scalar> LaurentExpansion<C> {
    /// Order of the pole at the center (0 when regular).
    pub fn pole_order(&self) -> u32 {
        let first = self.coeffs.iter().position(|c| !c.is_zero());
        match first {
            Some(i) => (-(self.lowest + i as i32)).max(0) as u32,
            None => 0,
        }
    }

    pub fn coeff(&self, r: i32) -> LambdaPoly<C> {
        let i = r - self.lowest;
        if i < 0 {
            return LambdaPoly::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    pub fn coeff_value(&self, r: i32) -> Complex64 {
        self.coeff(r).eval((self.q as f64).ln())
    }

    /// Truncated sum at `s = center + h`.
    pub fn eval_partial(&self, h: Complex64) -> Complex64 {
        let lam = (self.q as f64).ln();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.eval(lam) * h.powi(self.lowest + i as i32))
            .sum()
    }

    pub fn max_order(&self) -> i32 {
        self.lowest + self.coeffs.len() as i32 - 1
    }
}

type SSeries = Vec<LambdaPoly<BigRational>>;

fn sseries_mul(a: &SSeries, b: &SSeries, len: usize) -> SSeries {
    let mut out = vec![LambdaPoly::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn factorial(n: usize) -> BigRational {
    let mut r = BigRational::one();
    for k in 2..=n {
        r *= BigRational::from_integer(k.into());
    }
    r
}

/// Laurent data of `t^k / denom` at `s0` for every `k` in `0..=max_k`,
/// coefficients of orders `-ord ..= max_order`.
fn monomial_expansions(
    denom: &Poly<BigRational>,
    q: u64,
    s0: i64,
    max_k: usize,
    max_order: i32,
) -> (i32, Vec<Vec<LambdaPoly<BigRational>>>) {
    let t0 = q_pow(q, -s0);
    let dshift = denom.taylor_shift(&t0);
    let k = dshift.low_degree().expect("nonzero denominator");
    let dt = Poly::new(dshift.coeffs()[k..].to_vec());
    let lowest = -(k as i32);
    let len = (max_order - lowest + 1).max(0) as usize;

    // w(σ) = Σ_i (-λσ)^i / (i+1)!, so u = -t0 λ σ w(σ)
    let w: SSeries = (0..len)
        .map(|i| {
            let c = (if i % 2 == 0 { BigRational::one() } else { -BigRational::one() }) / factorial(i + 1);
            LambdaPoly::term(c, i as i32)
        })
        .collect();
    // 1/w, w(0) = 1
    let mut winv: SSeries = vec![LambdaPoly::zero(); len];
    if len > 0 {
        winv[0] = LambdaPoly::term(BigRational::one(), 0);
        for r in 1..len {
            let mut acc = LambdaPoly::zero();
            for j in 1..=r {
                acc = acc.add(&w[j].mul(&winv[r - j]));
            }
            winv[r] = acc.scale(&-BigRational::one());
        }
    }
    // (u/σ)^e for e in lowest..=max_order, e ranges over j - k
    let lead = -t0.clone(); // times λ
    let mut powers: BTreeMap<i32, SSeries> = BTreeMap::new();
    let unit = {
        let mut v = vec![LambdaPoly::zero(); len];
        if len > 0 {
            v[0] = LambdaPoly::term(BigRational::one(), 0);
        }
        v
    };
    powers.insert(0, unit.clone());
    let up: SSeries = w.iter().map(|c| c.mul(&LambdaPoly::term(lead.clone(), 1))).collect();
    let um: SSeries = winv
        .iter()
        .map(|c| c.mul(&LambdaPoly::term(BigRational::one() / lead.clone(), -1)))
        .collect();
    for e in 1..=(max_order.max(0) - lowest) {
        let prev = powers[&(e - 1)].clone();
        powers.insert(e, sseries_mul(&prev, &up, len));
    }
    for e in 1..=k as i32 {
        let prev = powers[&(1 - e)].clone();
        powers.insert(-e, sseries_mul(&prev, &um, len));
    }

    let mut out = Vec::with_capacity(max_k + 1);
    for m in 0..=max_k {
        // t^m = (t0 + u)^m
        let num = Poly::monomial(BigRational::one(), m).taylor_shift(&t0);
        let a = num.series_div(&dt, len);
        let mut coeffs = vec![LambdaPoly::zero(); len];
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            let e = j as i32 - k as i32;
            let Some(pw) = powers.get(&e) else { continue };
            // contributes a_j σ^e (u/σ)^e
            for (i, c) in pw.iter().enumerate() {
                let r = e + i as i32;
                if r < lowest || r > max_order {
                    continue;
                }
                let idx = (r - lowest) as usize;
                coeffs[idx] = coeffs[idx].add(&c.scale(aj));
            }
        }
        out.push(coeffs);
    }
    (lowest, out)
}

/// Laurent expansion of `numer(t)/denom(t)` in `s - s0`, `t = q^{-s}`, up to
/// order `max_order`. The denominator is exact; the numerator may be complex,
/// in which case each coefficient is an exact expansion weighted by the
/// numerator's coefficients.
pub fn laurent_of<C: Scalar>(
    numer: &Poly<C>,
    denom: &Poly<BigRational>,
    q: u64,
    s0: i64,
    max_order: i32,
) -> LaurentExpansion<C> {
    let max_k = numer.degree().unwrap_or(0);
    let (lowest, mono) = monomial_expansions(denom, q, s0, max_k, max_order);
    let len = mono.first().map_or(0, |v| v.len());
    let mut coeffs: Vec<LambdaPoly<C>> = vec![LambdaPoly::zero(); len];
    for (m, nm) in numer.coeffs().iter().enumerate() {
        if nm.is_zero() {
            continue;
        }
        for (i, lp) in mono[m].iter().enumerate() {
            for (e, c) in &lp.terms {
                coeffs[i].add_term(*e, C::from_rational(c) * nm.clone());
            }
        }
    }
    LaurentExpansion { q, center: s0, lowest, coeffs }
}

/// Exact Laurent expansion of a rational function around an integer `s0`.
pub fn laurent_at(r: &RationalFunctionT, s0: i64, max_order: i32) -> LaurentExpansion<BigRational> {
    laurent_of(r.numer(), r.denom(), r.q, s0, max_order)
}

/// Floating-point Laurent coefficients around an arbitrary complex center.
/// `tol` decides when a shifted denominator coefficient counts as zero.
pub fn laurent_at_complex(
    r: &RationalFunctionT,
    s0: Complex64,
    max_order: i32,
    tol: f64,
) -> (i32, Vec<Complex64>) {
    let lam = (r.q as f64).ln();
    let t0 = t_of_s(r.q, s0);
    let dc = r.denom().to_complex().taylor_shift(&t0);
    let scale = dc.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let k = dc.coeffs().iter().position(|c| c.norm() > tol * scale).unwrap_or(0);
    let dt = Poly::new(dc.coeffs()[k..].to_vec());
    let nc = r.numer().to_complex().taylor_shift(&t0);
    let lowest = -(k as i32);
    let len = (max_order - lowest + 1).max(0) as usize;
    let a = nc.series_div(&dt, len);
    // u(σ) = t0 (e^{-λσ} - 1) = σ U(σ)
    let mut uu = vec![Complex64::new(0.0, 0.0); len];
    let mut fact = 1.0;
    for (i, x) in uu.iter_mut().enumerate() {
        fact *= (i + 1) as f64;
        *x = t0 * (-lam).powi(i as i32 + 1) / fact;
    }
    let mul = |x: &[Complex64], y: &[Complex64]| -> Vec<Complex64> {
        let mut o = vec![Complex64::new(0.0, 0.0); len];
        for i in 0..len {
            for j in 0..len - i {
                o[i + j] += x[i] * y[j];
            }
        }
        o
    };
    let mut uinv = vec![Complex64::new(0.0, 0.0); len];
    if len > 0 {
        uinv[0] = Complex64::new(1.0, 0.0) / uu[0];
        for m in 1..len {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=m {
                acc += uu[j] * uinv[m - j];
            }
            uinv[m] = -acc / uu[0];
        }
    }
    let mut out = vec![Complex64::new(0.0, 0.0); len];
    for (j, aj) in a.iter().enumerate() {
        let e = j as i32 - k as i32;
        let mut pw = vec![Complex64::new(0.0, 0.0); len];
        if len > 0 {
            pw[0] = Complex64::new(1.0, 0.0);
        }
        let base = if e >= 0 { &uu } else { &uinv };
        for _ in 0..e.unsigned_abs() {
            pw = mul(&pw, base);
        }
        for (i, c) in pw.iter().enumerate() {
            let rr = e + i as i32;
            if rr >= lowest && rr <= max_order {
                out[(rr - lowest) as usize] += aj * c;
            }
        }
    }
    (lowest, out)
}

/// JSON view of a rational function.
#[derive(Serialize)]
pub struct RationalFunctionJson {
    pub q: u64,
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub factored: String,
}

impl From<&RationalFunctionT> for RationalFunctionJson {
    fn from(r: &RationalFunctionT) -> Self {
        RationalFunctionJson {
            q: r.q,
            numerator: r.numer().coeffs().iter().map(fmt_rational).collect(),
            denominator: r.denom().coeffs().iter().map(fmt_rational).collect(),
            factored: r.factored(),
        }
    }
}

pub fn rational_abs_f64(r: &BigRational) -> f64 {
    rat_to_f64(&r.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::rat;

    fn geom(q: u64) -> RationalFunctionT {
        // (1 - 1/q) / (1 - t/q)
        let c = BigRational::one() - q_pow(q, -1);
        RationalFunctionT::new(
            q,
            Poly::constant(c),
            RationalFunctionT::one_minus(q_pow(q, -1), 1),
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_reduces() {
        let g = geom(3);
        let inv = RationalFunctionT::constant(3, rat(1, 1)).div(&g).unwrap();
        assert!(inv.is_polynomial());
        assert_eq!(g.mul(&inv).unwrap(), RationalFunctionT::constant(3, rat(1, 1)));
    }

    #[test]
    fn reconstruct_geometric() {
        let g = geom(3);
        let s = g.series(10).unwrap();
        assert_eq!(reconstruct_from_series(3, &s, 0, 1).unwrap(), g);
        // over-provisioned degrees reduce to the same function
        assert_eq!(reconstruct_from_series(3, &s, 2, 3).unwrap(), g);
    }

    #[test]
    fn too_small_denominator_is_rejected() {
        let d = &RationalFunctionT::one_minus(rat(1, 3), 1) * &RationalFunctionT::one_minus(rat(1, 9), 2);
        let r = RationalFunctionT::new(3, Poly::one(), d).unwrap();
        let s = r.series(12).unwrap();
        assert_eq!(reconstruct_from_series(3, &s, 0, 1), Err(Error::NoSolution));
        assert_eq!(reconstruct_from_series(3, &s, 0, 3).unwrap(), r);
    }

    #[test]
    fn laurent_of_geometric_at_minus_one() {
        let e = laurent_at(&geom(3), -1, 2);
        assert_eq!(e.pole_order(), 1);
        assert_eq!(e.coeff(-1), LambdaPoly::term(rat(2, 3), -1));
        assert_eq!(e.coeff(0), LambdaPoly::term(rat(1, 3), 0));
    }

    #[test]
    fn double_pole_order() {
        let d = &RationalFunctionT::one_minus(rat(1, 3), 1) * &RationalFunctionT::one_minus(rat(1, 3), 1);
        let r = RationalFunctionT::new(3, Poly::one(), d).unwrap();
        assert_eq!(laurent_at(&r, -1, 1).pole_order(), 2);
    }

    #[test]
    fn complex_center_matches_exact() {
        let r = geom(5);
        let exact = laurent_at(&r, -1, 3);
        let (lo, num) = laurent_at_complex(&r, Complex64::new(-1.0, 0.0), 3, 1e-12);
        assert_eq!(lo, exact.lowest);
        for (i, c) in num.iter().enumerate() {
            let e = exact.coeff_value(lo + i as i32);
            assert!((c - e).norm() < 1e-10, "{c} vs {e}");
        }
    }

    #[test]
    fn factored_display() {
        assert_eq!(geom(3).factored(), "(2/3) / ((1 - 3^-1*t))");
    }
}
