//! Truncated Igusa series `Z(s, f) = ∫_{R^n} |f|^s = Σ_k c_k t^k`, where
//! `c_k` is the measure of `{x ∈ R^n : ord f(x) = k}`.
//!
//! The measure is computed by walking residue classes: a class where the
//! reduction of `f / π^c` is nonzero contributes to `c_c`; a class at a smooth
//! zero of the reduction has a Hensel-determined tail; only classes at
//! singular zeros are refined, via `x = x0 + π y`. Refined polynomials are
//! memoized modulo the precision still needed.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{q_pow, FieldSpec, FiniteElement};
use crate::poly::{binomial, IntPolynomial};
use crate::rational::RationalFunctionT;
use crate::upoly::{fmt_rational, Poly};

/// Default limit on refined residue classes.
pub const DEFAULT_NODE_BUDGET: usize = 500_000;

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaSeries {
    pub q: u64,
    pub coeffs: Vec<BigRational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaSeriesJson {
    pub q: u64,
    pub terms: usize,
    pub coefficients: Vec<String>,
}

impl ZetaSeries {
    pub fn terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn total_mass(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn to_json(&self) -> ZetaSeriesJson {
        ZetaSeriesJson {
            q: self.q,
            terms: self.terms(),
            coefficients: self.coeffs.iter().map(fmt_rational).collect(),
        }
    }
}

/// Polynomial over `R` with exact coefficients, kept modulo `π^prec`.
#[derive(Clone, Debug)]
struct LocalPoly {
    field: FieldSpec,
    n: usize,
    terms: BTreeMap<Vec<u32>, FiniteElement>,
}

type Key = (i64, Vec<(Vec<u32>, Vec<u32>)>);

impl LocalPoly {
    fn from_int(field: FieldSpec, f: &IntPolynomial) -> Self {
        let terms = f
            .terms()
            .map(|(e, c)| (e.clone(), FiniteElement::from_i64(field, *c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LocalPoly { field, n: f.nvars(), terms }
    }

    fn content(&self) -> Option<i64> {
        self.terms.values().filter_map(|c| c.ord()).min()
    }

    /// `self / π^c` reduced modulo `π^prec`.
    fn normalize(&self, c: i64, prec: i64) -> LocalPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| {
                let digits = a.shift(-c).digits_range(0, prec);
                (e.clone(), FiniteElement::from_digits(self.field, 0, &digits))
            })
            .filter(|(_, a)| !a.is_zero())
            .collect();
        LocalPoly { field: self.field, n: self.n, terms }
    }

    fn key(&self, prec: i64) -> Key {
        (prec, self.terms.iter().map(|(e, a)| (e.clone(), a.digits_range(0, prec))).collect())
    }

    fn residue_at(&self, x0: &[u32]) -> u32 {
        let p = self.field.p as u64;
        let mut acc = 0u64;
        for (e, a) in &self.terms {
            let mut t = a.residue() as u64;
            for (x, &k) in x0.iter().zip(e) {
                for _ in 0..k {
                    t = t * *x as u64 % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc as u32
    }

    fn gradient_vanishes_at(&self, x0: &[u32]) -> bool {
        let p = self.field.p as u64;
        (0..self.n).all(|i| {
            let mut acc = 0u64;
            for (e, a) in &self.terms {
                if e[i] == 0 {
                    continue;
                }
                let mut t = a.residue() as u64 * (e[i] as u64 % p) % p;
                for (j, (x, &k)) in x0.iter().zip(e).enumerate() {
                    let k = if j == i { k - 1 } else { k };
                    for _ in 0..k {
                        t = t * *x as u64 % p;
                    }
                }
                acc = (acc + t) % p;
            }
            acc == 0
        })
    }

    /// `g(x0 + π y)` as a polynomial in `y`.
    fn recentre(&self, x0: &[u32]) -> LocalPoly {
        let field = self.field;
        let pi = FiniteElement::pi(field);
        let mut out: BTreeMap<Vec<u32>, FiniteElement> = BTreeMap::new();
        for (e, a) in &self.terms {
            // ∏_i Σ_b C(e_i, b) x0_i^{e_i - b} π^b y_i^b
            let mut partial: Vec<(Vec<u32>, FiniteElement)> = vec![(Vec::new(), a.clone())];
            for (i, &ei) in e.iter().enumerate() {
                let x = FiniteElement::from_i64(field, x0[i] as i64);
                let mut next = Vec::new();
                for (beta, c) in &partial {
                    for b in 0..=ei {
                        let coef = FiniteElement::from_i64(field, binomial(ei, b))
                            .mul(&x.pow(ei - b))
                            .mul(&pi.pow(b));
                        if coef.is_zero() {
                            continue;
                        }
                        let mut nb = beta.clone();
                        nb.push(b);
                        next.push((nb, c.mul(&coef)));
                    }
                }
                partial = next;
            }
            for (beta, c) in partial {
                let slot = out.entry(beta).or_insert_with(|| FiniteElement::zero(field));
                *slot = slot.add(&c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        LocalPoly { field, n: self.n, terms: out }
    }
}

struct Walker {
    q: u64,
    n: usize,
    memo: HashMap<Key, Vec<BigRational>>,
    nodes: usize,
    budget: usize,
    /// `q^{-n}` and `q^{-n}(1 - q^{-1}) q^{-(j-1)}` for `j >= 1`
    cell: BigRational,
    smooth_tail: Vec<BigRational>,
}

impl Walker {
    /// Measures of `{y ∈ R^n : ord g(y) = k}` for `k < prec`.
    fn walk(&mut self, g: &LocalPoly, prec: i64) -> Result<Vec<BigRational>> {
        let mut out = vec![BigRational::zero(); prec.max(0) as usize];
        let Some(c) = g.content() else {
            return Ok(out);
        };
        if c >= prec {
            return Ok(out);
        }
        let rest = prec - c;
        let h = g.normalize(c, rest);
        let key = h.key(rest);
        let inner = match self.memo.get(&key) {
            Some(v) => v.clone(),
            None => {
                let v = self.walk_unit(&h, rest)?;
                self.memo.insert(key, v.clone());
                v
            }
        };
        for (k, v) in inner.into_iter().enumerate() {
            out[k + c as usize] = v;
        }
        Ok(out)
    }

    /// As `walk`, for `h` with content 0.
    fn walk_unit(&mut self, h: &LocalPoly, prec: i64) -> Result<Vec<BigRational>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "more than {} refined residue classes",
                self.budget
            )));
        }
        let p = h.field.p;
        let mut out = vec![BigRational::zero(); prec as usize];
        let total = (p as u64).pow(self.n as u32);
        let mut x0 = vec![0u32; self.n];
        for idx in 0..total {
            let mut r = idx;
            for x in x0.iter_mut() {
                *x = (r % p as u64) as u32;
                r /= p as u64;
            }
            if h.residue_at(&x0) != 0 {
                out[0] += &self.cell;
            } else if !h.gradient_vanishes_at(&x0) {
                for (j, slot) in out.iter_mut().enumerate().skip(1) {
                    *slot += &self.smooth_tail[j];
                }
            } else {
                let sub = self.walk(&h.recentre(&x0), prec)?;
                for (slot, v) in out.iter_mut().zip(sub) {
                    *slot += v * &self.cell;
                }
            }
        }
        Ok(out)
    }
}

/// Exact coefficients `c_0 .. c_{terms-1}` of `Z(s, f)` over `R^n`.
pub fn igusa_series(field: FieldSpec, f: &IntPolynomial, terms: usize) -> Result<ZetaSeries> {
    igusa_series_with_budget(field, f, terms, DEFAULT_NODE_BUDGET)
}

pub fn igusa_series_with_budget(
    field: FieldSpec,
    f: &IntPolynomial,
    terms: usize,
    budget: usize,
) -> Result<ZetaSeries> {
    if f.degree() == 0 {
        return Err(Error::InvalidInput(format!("{f} is constant")));
    }
    let g = LocalPoly::from_int(field, f);
    if g.terms.is_empty() {
        return Err(Error::InvalidInput(format!("{f} vanishes identically in characteristic {}", field.p)));
    }
    let q = field.q();
    let n = f.nvars();
    let cell = q_pow(q, -(n as i64));
    let one_minus = BigRational::one() - q_pow(q, -1);
    let smooth_tail = (0..terms.max(1) as i64)
        .map(|j| if j == 0 { BigRational::zero() } else { &cell * &one_minus * q_pow(q, -(j - 1)) })
        .collect();
    let mut w = Walker { q, n, memo: HashMap::new(), nodes: 0, budget, cell, smooth_tail };
    let coeffs = w.walk(&g, terms as i64)?;
    Ok(ZetaSeries { q: w.q, coeffs })
}

/// `∫_{R^n} ∏ |x_i|^{N_i s + v_i - 1} = ∏ (1 - q^{-1}) / (1 - q^{-v_i} t^{N_i})`.
pub fn monomial_zeta_closed(q: u64, exps: &[u32], offsets: &[i64]) -> Result<RationalFunctionT> {
    if exps.len() != offsets.len() {
        return Err(Error::InvalidInput("exponent and offset vectors differ in length".into()));
    }
    let mut acc = RationalFunctionT::constant(q, BigRational::one());
    for (&nn, &v) in exps.iter().zip(offsets) {
        if v < 1 {
            return Err(Error::InvalidInput(format!("offset {v} must be at least 1")));
        }
        let numer = Poly::constant(BigRational::one() - q_pow(q, -1));
        let denom = RationalFunctionT::one_minus(q_pow(q, -v), nn as usize);
        acc = acc.mul(&RationalFunctionT::new(q, numer, denom)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::rat;

    /// `c_k = q^{-n(k+1)} #{x mod π^{k+1} : ord f(x) = k}` by enumeration.
    fn brute_force(field: FieldSpec, f: &IntPolynomial, terms: usize) -> Vec<BigRational> {
        let p = field.p as u64;
        let n = f.nvars();
        (0..terms)
            .map(|k| {
                let modulus = p.pow(k as u32 + 1);
                let total = modulus.pow(n as u32);
                let mut count = 0u64;
                for idx in 0..total {
                    let mut r = idx;
                    let x: Vec<FiniteElement> = (0..n)
                        .map(|_| {
                            let d = r % modulus;
                            r /= modulus;
                            FiniteElement::from_index(field, d, 0)
                        })
                        .collect();
                    let v = f.eval(&x).ord();
                    if v == Some(k as i64) {
                        count += 1;
                    }
                }
                BigRational::new(count.into(), total.into())
            })
            .collect()
    }

    #[test]
    fn square_in_q3() {
        let f = IntPolynomial::parse("x1^2", None).unwrap();
        let s = igusa_series(FieldSpec::qp(3), &f, 6).unwrap();
        assert_eq!(s.coeffs[..4], [rat(2, 3), rat(0, 1), rat(2, 9), rat(0, 1)]);
    }

    #[test]
    fn matches_enumeration() {
        for (field, poly, terms) in [
            (FieldSpec::qp(3), "x1^2 + x2^2", 4),
            (FieldSpec::qp(5), "x1^2 + x2^2", 3),
            (FieldSpec::qp(2), "x1^3 - x2^2", 5),
            (FieldSpec::qp(3), "x1*x2 + 3*x1", 4),
            (FieldSpec::laurent(3), "x1^2 - x2^3", 4),
            (FieldSpec::laurent(2), "x1^2 + x1*x2 + x2^2", 4),
        ] {
            let f = IntPolynomial::parse(poly, None).unwrap();
            let s = igusa_series(field, &f, terms).unwrap();
            assert_eq!(s.coeffs, brute_force(field, &f, terms), "{poly} over {field}");
        }
    }

    #[test]
    fn monomials_match_closed_form() {
        for (poly, exps) in [("x1", vec![1]), ("x1*x2", vec![1, 1]), ("x1^3*x2^2", vec![3, 2])] {
            let f = IntPolynomial::parse(poly, None).unwrap();
            for p in [2, 3, 5] {
                let s = igusa_series(FieldSpec::qp(p), &f, 12).unwrap();
                let closed = monomial_zeta_closed(p as u64, &exps, &vec![1; exps.len()]).unwrap();
                assert_eq!(s.coeffs, closed.series(12).unwrap());
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = IntPolynomial::parse("x1^2*x2^2", None).unwrap();
        let r = igusa_series_with_budget(FieldSpec::qp(5), &f, 12, 3);
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }
}
