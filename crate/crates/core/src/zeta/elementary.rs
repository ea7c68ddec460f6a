//! Elementary integrals `E(s; N, v) = ∫ ∏_{i<r} |ξ_i|^{N_i s + v_i - 1} ĝ(ξ) dξ`
//! and mixed integrals `∫ ∏_I |ξ_i|^{α_i} ∏_J |ξ_j|^{-β_j} ĝ(ξ) dξ`.
//!
//! For a grid function `g` every cell of `ĝ` contributes a monomial in
//! `t = q^{-s}` per coordinate, except along `ξ_i = 0` where the cell is a
//! ball around the hyperplane and contributes a geometric factor
//! `(1 - q^{-1}) q^{-m v} t^{N m} / (1 - q^{-v} t^N)`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::q_pow;
use crate::grid::{Geometry, GridFunction};
use crate::poly::IntPolynomial;
use crate::rational::{laurent_of, t_of_s, LaurentExpansion, RationalFunctionT};
use crate::spectral::{Certified, Multiplier, SpectralFunction};
use crate::upoly::{Poly, Scalar};

/// `numer(t) / denom(t)` with exact denominator and scalar numerator.
#[derive(Clone, Debug, PartialEq)]
pub struct TRational<C: Scalar> {
    pub q: u64,
    pub numer: Poly<C>,
    pub denom: Poly<BigRational>,
}

impl<C: Scalar> TRational<C> {
    pub fn eval_t(&self, t: Complex64) -> Complex64 {
        self.numer.eval_complex(t) / self.denom.to_complex().eval(&t)
    }

    pub fn eval_s(&self, s: Complex64) -> Complex64 {
        self.eval_t(t_of_s(self.q, s))
    }

    /// True when the denominator is a power of `t` (no poles in `s`).
    pub fn is_entire(&self) -> bool {
        self.denom.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
    }

    pub fn laurent_at(&self, s0: i64, max_order: i32) -> LaurentExpansion<C> {
        laurent_of(&self.numer, &self.denom, self.q, s0, max_order)
    }

    /// Substitute `s -> s + 1`, i.e. `t -> t / q`.
    pub fn shift_s_by_one(&self) -> Self {
        let inv = q_pow(self.q, -1);
        let scale_c = |p: &Poly<C>| {
            let mut pow = BigRational::one();
            let mut v = Vec::new();
            for a in p.coeffs() {
                v.push(a.clone() * C::from_rational(&pow));
                pow *= &inv;
            }
            Poly::new(v)
        };
        let scale_r = |p: &Poly<BigRational>| {
            let mut pow = BigRational::one();
            let mut v = Vec::new();
            for a in p.coeffs() {
                v.push(a * &pow);
                pow *= &inv;
            }
            Poly::new(v)
        };
        TRational { q: self.q, numer: scale_c(&self.numer), denom: scale_r(&self.denom) }
    }
}

/// Checked integer data `(N, v)` padded to `n` coordinates with `(0, 1)`.
fn padded(n: usize, exps: &[u32], offsets: &[i64]) -> Result<(Vec<u32>, Vec<i64>)> {
    if exps.len() != offsets.len() || exps.len() > n {
        return Err(Error::InvalidInput(format!(
            "need equal-length N and v with at most {n} entries, got {} and {}",
            exps.len(),
            offsets.len()
        )));
    }
    if let Some(v) = offsets.iter().find(|&&v| v < 1) {
        return Err(Error::InvalidInput(format!("offset {v} must be at least 1")));
    }
    let mut nn = exps.to_vec();
    let mut vv = offsets.to_vec();
    nn.resize(n, 0);
    vv.resize(n, 1);
    Ok((nn, vv))
}

/// Exact form of `Σ_cells w(cell) ∫_cell ∏ |ξ_i|^{N_i s + v_i - 1}` over the
/// cells of `geom`, `w` supplying the value of `ĝ` on each cell.
pub fn elementary_exact_cells<C: Scalar>(
    geom: &Geometry,
    weight: impl Fn(usize) -> C,
    exps: &[u32],
    offsets: &[i64],
) -> Result<TRational<C>> {
    let q = geom.field.q();
    let n = geom.n;
    let (nn, vv) = padded(n, exps, offsets)?;
    let m = geom.m;
    let one_m_qinv = BigRational::one() - q_pow(q, -1);
    // group cells by (t-exponent, hyperplane mask) before touching polynomials
    let weights: Vec<C> = (0..geom.len()).map(&weight).collect();
    // transforms computed in floating point leave rounding noise on cells
    // that vanish exactly
    let scale = weights.iter().map(|w| w.to_complex().norm()).fold(0.0, f64::max);
    let mut groups: BTreeMap<(i64, u64), C> = BTreeMap::new();
    for (idx, w) in weights.into_iter().enumerate() {
        if w.is_zero() || w.to_complex().norm() <= 1e-13 * scale {
            continue;
        }
        let coords = geom.coords(idx);
        let mut coef = BigRational::one();
        let mut texp = 0i64;
        let mut mask = 0u64;
        for i in 0..n {
            let (ni, vi) = (nn[i] as i64, vv[i]);
            match geom.coord_ord(coords[i]) {
                Some(o) => {
                    texp += ni * o;
                    coef *= q_pow(q, -o * (vi - 1) - m);
                }
                None => {
                    texp += ni * m;
                    coef *= &one_m_qinv * q_pow(q, -m * vi);
                    if ni > 0 {
                        mask |= 1 << i;
                    } else {
                        coef /= BigRational::one() - q_pow(q, -vi);
                    }
                }
            }
        }
        let slot = groups.entry((texp, mask)).or_insert_with(C::zero);
        *slot = slot.clone() + w * C::from_rational(&coef);
    }
    let low = groups.keys().map(|k| k.0).min().unwrap_or(0).min(0);
    let factor = |i: usize| RationalFunctionT::one_minus(q_pow(q, -vv[i]), nn[i] as usize);
    let used = groups.keys().fold(0u64, |a, k| a | k.1);
    let hyper: Vec<usize> = (0..n).filter(|&i| used & (1 << i) != 0).collect();
    let mut denom = Poly::monomial(BigRational::one(), (-low) as usize);
    for &i in &hyper {
        denom = &denom * &factor(i);
    }
    let mut numer: Poly<C> = Poly::zero();
    for ((texp, mask), w) in groups {
        if w.is_zero() {
            continue;
        }
        let mut term: Poly<BigRational> = Poly::monomial(BigRational::one(), (texp - low) as usize);
        for &i in &hyper {
            if mask & (1 << i) == 0 {
                term = &term * &factor(i);
            }
        }
        numer = &numer + &term.map(|c| C::from_rational(c) * w.clone());
    }
    Ok(TRational { q, numer, denom })
}

/// `E(s; N, v)` as a rational function of `t` with complex coefficients.
pub fn elementary_integral_exact(g: &GridFunction, exps: &[u32], offsets: &[i64]) -> Result<TRational<Complex64>> {
    let gh = g.fourier();
    let vals = gh.values();
    elementary_exact_cells(&gh.geometry(), |i| vals[i], exps, offsets)
}

/// `E(s; N, v)` by certified cell integration, for
/// `Re s > max_i (-v_i / N_i)`.
pub fn elementary_integral(g: &GridFunction, exps: &[u32], offsets: &[i64], s: Complex64) -> Result<Certified<Complex64>> {
    let n = g.n;
    let (nn, vv) = padded(n, exps, offsets)?;
    let mults = (0..n)
        .filter(|&i| nn[i] > 0 || vv[i] != 1)
        .map(|i| Multiplier::new(IntPolynomial::var(n, i), nn[i] as f64 * s + (vv[i] - 1) as f64))
        .collect();
    SpectralFunction::new(g.fourier(), mults)?.integral()
}

/// `∫ ∏_{i∈I} |ξ_i|^{α_i} ∏_{j∈J} |ξ_j|^{-β_j} ĝ(ξ) dξ` with `Re α_i > 0`
/// and `0 < Re β_j < 1`. Indices are 0-based.
pub fn mixed_integral(
    g: &GridFunction,
    idx_i: &[usize],
    alpha: &[Complex64],
    idx_j: &[usize],
    beta: &[Complex64],
) -> Result<Certified<Complex64>> {
    let n = g.n;
    if idx_i.len() != alpha.len() || idx_j.len() != beta.len() {
        return Err(Error::InvalidInput("index sets and exponents differ in length".into()));
    }
    let mut seen = vec![false; n];
    for &i in idx_i.iter().chain(idx_j) {
        if i >= n || seen[i] {
            return Err(Error::InvalidInput(format!("index {i} repeated or out of range for n = {n}")));
        }
        seen[i] = true;
    }
    let mut mults = Vec::new();
    for (&i, &a) in idx_i.iter().zip(alpha) {
        if a.re <= 0.0 {
            return Err(Error::Divergent(format!("|ξ_{}|^{a} needs Re α > 0", i + 1)));
        }
        mults.push(Multiplier::new(IntPolynomial::var(n, i), a));
    }
    for (&j, &b) in idx_j.iter().zip(beta) {
        if b.re <= 0.0 || b.re >= 1.0 {
            return Err(Error::Divergent(format!("|ξ_{}|^-({b}) needs 0 < Re β < 1", j + 1)));
        }
        mults.push(Multiplier::new(IntPolynomial::var(n, j), -b));
    }
    SpectralFunction::new(g.fourier(), mults)?.integral()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::zeta::igusa::monomial_zeta_closed;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn indicator_of_ring_matches_closed_form() {
        for (n, exps, offsets) in [(1usize, vec![1u32], vec![1i64]), (2, vec![1, 2], vec![1, 3]), (2, vec![2], vec![1])] {
            let g = GridFunction::indicator_ball(FieldSpec::qp(3), n, 0, 1, 2).unwrap();
            let e = elementary_integral_exact(&g, &exps, &offsets).unwrap();
            let mut full_n = exps.clone();
            let mut full_v = offsets.clone();
            full_n.resize(n, 0);
            full_v.resize(n, 1);
            let closed = monomial_zeta_closed(3, &full_n, &full_v).unwrap();
            for s in [c(0.3, 0.0), c(1.2, -2.0)] {
                assert!((e.eval_s(s) - closed.eval_s(s)).norm() < 1e-12, "{n} {exps:?} {s}: {} vs {}", e.eval_s(s), closed.eval_s(s));
            }
        }
    }

    #[test]
    fn support_off_zero_is_entire() {
        // 1_{1+3Z_3} in frequency space, as the transform of its inverse transform
        let field = FieldSpec::qp(3);
        let geom = Geometry { field, n: 1, l: 0, m: 1 };
        let gh = GridFunction::from_fn(geom, |a| if a[0] == 1 { c(1.0, 0.0) } else { c(0.0, 0.0) }).unwrap();
        let g = gh.inverse_fourier();
        let e = elementary_integral_exact(&g, &[1], &[1]).unwrap();
        assert!(e.is_entire());
        assert!((e.eval_s(c(-7.3, 0.4)) - c(1.0 / 3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn exact_form_matches_cell_integration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for field in [FieldSpec::qp(2), FieldSpec::qp(3), FieldSpec::laurent(3)] {
            let g = GridFunction::random(field, 2, 1, 1, &mut rng).unwrap();
            let e = elementary_integral_exact(&g, &[2, 1], &[1, 2]).unwrap();
            for s in [c(0.2, 0.0), c(-0.3, 1.0), c(1.5, -0.7)] {
                let d = elementary_integral(&g, &[2, 1], &[1, 2], s).unwrap();
                assert!((e.eval_s(s) - d.value).norm() < 1e-10 + d.error_bound, "{s}");
            }
        }
    }

    #[test]
    fn mixed_integral_examples() {
        let q: f64 = 3.0;
        let g = GridFunction::indicator_ball(FieldSpec::qp(3), 1, 0, 0, 1).unwrap();
        let v = mixed_integral(&g, &[0], &[c(1.0, 0.0)], &[], &[]).unwrap();
        let sphere: f64 = (0..200).map(|j| q.powi(-j) * (1.0 - 1.0 / q) * q.powi(-j)).sum();
        assert!((v.value.re - sphere).abs() < 1e-14);
        let v = mixed_integral(&g, &[], &[], &[0], &[c(0.5, 0.0)]).unwrap();
        assert!((v.value.re - (1.0 - 1.0 / q) / (1.0 - q.powf(-0.5))).abs() < 1e-13);
        let v = mixed_integral(&g, &[], &[], &[0], &[c(1e-9, 0.0)]).unwrap();
        assert!((v.value - g.at_zero()).norm() < 1e-8);
        assert!(matches!(mixed_integral(&g, &[], &[], &[0], &[c(1.0, 0.0)]), Err(Error::Divergent(_))));
    }

    #[test]
    fn shift_by_one_matches_evaluation() {
        let g = GridFunction::indicator_ball(FieldSpec::qp(5), 1, 0, 1, 1).unwrap();
        let e = elementary_integral_exact(&g, &[1], &[1]).unwrap();
        let s = c(0.4, 0.2);
        assert!((e.shift_s_by_one().eval_s(s) - e.eval_s(s + 1.0)).norm() < 1e-14);
    }
}
