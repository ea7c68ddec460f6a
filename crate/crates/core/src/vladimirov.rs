//! The local gamma factor, Riesz kernels, Vladimirov operators and general
//! pseudodifferential operators with symbols `∏ |h_i(ξ)|^{α_i}`.
//!
//! Operator images stay on the frequency side as [`SpectralFunction`]s;
//! space-side values are computed on demand by a certified cell integral.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::q_pow;
use crate::grid::{root_table, GridFunction};
use crate::poly::IntPolynomial;
use crate::spectral::{Certified, Multiplier, SpectralFunction};

/// Distance in the `α`-plane below which `Γ` reports a pole.
pub const GAMMA_POLE_GUARD: f64 = 1e-9;

/// `Γ(α) = (1 - q^{α-1}) / (1 - q^{-α})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaFactor {
    pub q: u64,
}

fn qpow(q: u64, z: Complex64) -> Complex64 {
    (z * (q as f64).ln()).exp()
}

impl GammaFactor {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidInput(format!("q = {q}")));
        }
        Ok(GammaFactor { q })
    }

    /// Nearest point of `{μ_j} ∪ {1 + μ_j}`, `μ_j = 2πij / ln q`, and its distance.
    pub fn nearest_pole(&self, alpha: Complex64) -> (Complex64, f64) {
        let step = 2.0 * PI / (self.q as f64).ln();
        let j = (alpha.im / step).round();
        let mu = Complex64::new(0.0, j * step);
        let d0 = (alpha - mu).norm();
        let d1 = (alpha - mu - 1.0).norm();
        if d0 <= d1 {
            (mu, d0)
        } else {
            (mu + 1.0, d1)
        }
    }

    pub fn eval(&self, alpha: Complex64) -> Result<Complex64> {
        let (_, d) = self.nearest_pole(alpha);
        if d < GAMMA_POLE_GUARD || !alpha.re.is_finite() || !alpha.im.is_finite() {
            return Err(Error::PoleOfGamma { re: alpha.re, im: alpha.im });
        }
        Ok((1.0 - qpow(self.q, alpha - 1.0)) / (1.0 - qpow(self.q, -alpha)))
    }

    /// Exact value at an integer `k ∉ {0, 1}`.
    pub fn eval_int(&self, k: i64) -> Result<BigRational> {
        if k == 0 || k == 1 {
            return Err(Error::PoleOfGamma { re: k as f64, im: 0.0 });
        }
        let one = BigRational::one();
        Ok((&one - q_pow(self.q, k - 1)) / (&one - q_pow(self.q, -k)))
    }
}

pub fn gamma(q: u64, alpha: Complex64) -> Result<Complex64> {
    GammaFactor::new(q)?.eval(alpha)
}

/// `P g = 𝓕^{-1}(∏ |h_i|^{α_i} 𝓕 g)` with `Re α_i > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct PseudoDiffOp {
    pub n: usize,
    pub symbols: Vec<Multiplier>,
}

impl PseudoDiffOp {
    pub fn new(n: usize, symbols: Vec<Multiplier>) -> Result<Self> {
        if symbols.len() > n {
            return Err(Error::InvalidInput(format!("{} symbols in dimension {n}", symbols.len())));
        }
        for mu in &symbols {
            if mu.poly.nvars() != n {
                return Err(Error::InvalidInput(format!("symbol {} is not in {n} variables", mu.poly)));
            }
            if mu.poly.degree() == 0 {
                return Err(Error::InvalidInput(format!("symbol {} is constant", mu.poly)));
            }
            if mu.alpha.re.is_nan() || mu.alpha.re <= 0.0 {
                return Err(Error::InvalidInput(format!("exponent {} needs a positive real part", mu.alpha)));
            }
        }
        Ok(PseudoDiffOp { n, symbols })
    }

    /// Parses `"x1^2+x2^2:1.5; x1:0.5"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let symbols = s
            .split(';')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|part| {
                let (poly, a) = part
                    .rsplit_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected 'poly:alpha', got '{part}'")))?;
                let alpha: f64 = a.trim().parse().map_err(|_| Error::Parse(format!("bad exponent '{a}'")))?;
                Ok(Multiplier::new(IntPolynomial::parse(poly, Some(n))?, Complex64::new(alpha, 0.0)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, symbols)
    }

    /// `D^α` for `α_i` with positive real part; zero entries are skipped.
    pub fn vladimirov(alpha: &[Complex64]) -> Result<Self> {
        let n = alpha.len();
        let symbols = alpha
            .iter()
            .enumerate()
            .filter(|(_, a)| **a != Complex64::zero())
            .map(|(i, a)| Multiplier::new(IntPolynomial::var(n, i), *a))
            .collect();
        Self::new(n, symbols)
    }

    /// Symbol with conjugated exponents, so that `[P* T, g] = [T, P g]`.
    pub fn adjoint(&self) -> Self {
        let symbols = self.symbols.iter().map(|m| Multiplier::new(m.poly.clone(), m.alpha.conj())).collect();
        PseudoDiffOp { n: self.n, symbols }
    }

    /// `2 Σ d_i ⌈Re α_i⌉`, the Sobolev index lost by `P`.
    pub fn order_shift(&self) -> f64 {
        2.0 * self.symbols.iter().map(|m| m.poly.degree() as f64 * m.alpha.re.ceil()).sum::<f64>()
    }

    pub fn apply(&self, g: &GridFunction) -> Result<SpectralFunction> {
        self.apply_spectral(SpectralFunction::from_grid(g))
    }

    pub fn apply_spectral(&self, mut t: SpectralFunction) -> Result<SpectralFunction> {
        if t.dim() != self.n {
            return Err(Error::InvalidInput(format!("operator on K^{}, input on K^{}", self.n, t.dim())));
        }
        for m in &self.symbols {
            t = t.with_multiplier(m.clone())?;
        }
        Ok(t)
    }

    /// `|h_i(ξ)|^{Re α_i} <= [ξ]^{d_i ⌈Re α_i⌉}` at every point of a grid,
    /// i.e. at the representative of each cell.
    pub fn symbol_bound_holds(&self, g: &GridFunction) -> bool {
        let geom = g.fourier().geometry();
        (0..geom.len()).all(|i| {
            let c = geom.coords(i);
            let x: Vec<_> = c.iter().map(|&a| geom.element(a)).collect();
            let br = geom.bracket(&c);
            self.symbols.iter().all(|m| {
                let h = m.poly.eval(&x).abs_f64();
                h.powf(m.alpha.re) <= br.powf(m.poly.degree() as f64 * m.alpha.re.ceil()) * (1.0 + 1e-12)
            })
        })
    }
}

pub fn apply_pseudodiff(op: &PseudoDiffOp, g: &GridFunction) -> Result<SpectralFunction> {
    op.apply(g)
}

/// `D^α g` with `Re α_i >= 0`.
pub fn vladimirov(alpha: &[Complex64], g: &GridFunction) -> Result<SpectralFunction> {
    if alpha.len() != g.n {
        return Err(Error::InvalidInput(format!("{} exponents for K^{}", alpha.len(), g.n)));
    }
    if let Some(a) = alpha.iter().find(|a| a.re < 0.0) {
        return Err(Error::InvalidInput(format!("exponent {a} has negative real part")));
    }
    PseudoDiffOp::vladimirov(alpha)?.apply(g)
}

/// `(𝓕^{-1} T̂)(x)` for `x` a cell of the space grid dual to `T`'s base.
pub fn space_value(t: &SpectralFunction, x: &[u64]) -> Result<Certified<Complex64>> {
    let fgeom = t.base.geometry();
    let sgeom = fgeom.dual();
    if x.len() != fgeom.n || x.iter().any(|&a| a >= sgeom.side()) {
        return Err(Error::InvalidInput("point is not a cell of the dual grid".into()));
    }
    let side = sgeom.side();
    let table = root_table(side, 1.0);
    let phased = GridFunction::from_fn(fgeom, |c| {
        let ph = c.iter().zip(x).fold(0u64, |acc, (&b, &a)| (acc + sgeom.phase(a, b)) % side);
        t.base.get(c) * table[ph as usize]
    })?;
    SpectralFunction::new(phased, t.multipliers.clone())?.integral()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RieszCheck {
    /// `∫ f_α(ξ) φ̂(ξ) dξ` by cell integration on the frequency side.
    pub frequency_side: Complex64,
    /// `∫ ∏ |x_i|^{-α_i} φ(x) dx` from per-cell closed forms, continued past
    /// `Re α_i = 1`.
    pub space_side: Complex64,
    pub discrepancy: f64,
    pub error_bound: f64,
}

/// `∫_{|x| <= q^{-m}} |x|^{-α} dx` continued in `α`.
fn ball_moment(q: u64, m: i64, alpha: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    (1.0 - 1.0 / q as f64) * qpow(q, -(m as f64) * (one - alpha)) / (one - qpow(q, -(one - alpha)))
}

fn check_riesz_exponent(q: u64, a: Complex64) -> Result<()> {
    if (a.re - 1.0).abs() < GAMMA_POLE_GUARD {
        return Err(Error::InvalidInput(format!("Re α = 1 is excluded (α = {a})")));
    }
    if a.re <= 0.0 && a != Complex64::zero() {
        return Err(Error::InvalidInput(format!("α = {a} needs a positive real part")));
    }
    GammaFactor::new(q)?.eval(a).map(|_| ())
}

/// Both sides of `∫ f_α φ̂ = ∫ |x|^{-α} φ` with
/// `f_α(ξ) = ∏ |ξ_i|^{α_i - 1} / Γ(α_i)`.
pub fn riesz_pairing(alpha: &[Complex64], phi: &GridFunction) -> Result<RieszCheck> {
    let n = phi.n;
    let q = phi.field.q();
    if alpha.len() != n {
        return Err(Error::InvalidInput(format!("{} exponents for K^{n}", alpha.len())));
    }
    for a in alpha {
        check_riesz_exponent(q, *a)?;
    }
    let gf = GammaFactor::new(q)?;
    let mut norm = Complex64::new(1.0, 0.0);
    let mut mults = Vec::new();
    for (i, a) in alpha.iter().enumerate() {
        norm /= gf.eval(*a)?;
        mults.push(Multiplier::new(IntPolynomial::var(n, i), *a - 1.0));
    }
    let lhs = SpectralFunction::new(phi.fourier(), mults)?.integral()?;
    let frequency_side = lhs.value * norm;

    let geom = phi.geometry();
    let vol1 = (q as f64).powf(-(geom.m as f64));
    let mut space_side = Complex64::new(0.0, 0.0);
    for (i, v) in phi.values().iter().enumerate() {
        if v.norm_sqr() == 0.0 {
            continue;
        }
        let c = geom.coords(i);
        let mut w = *v;
        for (k, a) in alpha.iter().enumerate() {
            w *= match geom.coord_ord(c[k]) {
                Some(o) => vol1 * qpow(q, *a * o as f64),
                None => ball_moment(q, geom.m, *a),
            };
        }
        space_side += w;
    }
    Ok(RieszCheck {
        frequency_side,
        space_side,
        discrepancy: (frequency_side - space_side).norm(),
        error_bound: lhs.error_bound * norm.norm(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MultiplierShiftReport {
    /// `[D^{β*} 𝓕{∏ |x_i|^{ᾱ_i - 1}}, g]`.
    pub lhs: Complex64,
    /// `[𝓕{∏ |x_i|^{ᾱ_i + β̄_i - 1}}, g]`.
    pub rhs: Complex64,
    pub discrepancy: f64,
    /// Left side with `D^{β*}` taken as multiplication by `|ξ|^{β̄}` after the
    /// pairing's conjugation, i.e. without conjugating `β`.
    pub lhs_unconjugated: Complex64,
    pub discrepancy_unconjugated: f64,
    pub error_bound: f64,
}

/// Both pairings of the multiplier identity, by cell integration over the
/// support of `ĝ`.
pub fn multiplier_shift_check(alpha: &[Complex64], beta: &[Complex64], g: &GridFunction) -> Result<MultiplierShiftReport> {
    let n = g.n;
    if alpha.len() != n || beta.len() != n {
        return Err(Error::InvalidInput(format!("exponent vectors must have length {n}")));
    }
    if alpha.iter().chain(beta).any(|a| a.re.is_nan() || a.re <= 0.0) {
        return Err(Error::InvalidInput("Re α_i and Re β_i must be positive".into()));
    }
    let gh = g.fourier();
    let ones = gh.map(|_| Complex64::new(1.0, 0.0));
    let gs = SpectralFunction::new(gh, Vec::new())?;
    let var = |i: usize| IntPolynomial::var(n, i);
    // T̂ = 𝓕𝓕{|x|^{ᾱ-1}} = |ξ|^{ᾱ-1}
    let kernel: Vec<Multiplier> = (0..n).map(|i| Multiplier::new(var(i), alpha[i].conj() - 1.0)).collect();
    let t = SpectralFunction::new(ones.clone(), kernel)?;
    let dstar = PseudoDiffOp::vladimirov(beta)?.adjoint();
    let lhs = dstar.apply_spectral(t.clone())?.pairing(&gs)?;
    let lhs_u = PseudoDiffOp::vladimirov(beta)?.apply_spectral(t)?.pairing(&gs)?;
    let combined: Vec<Multiplier> =
        (0..n).map(|i| Multiplier::new(var(i), alpha[i].conj() + beta[i].conj() - 1.0)).collect();
    let rhs = SpectralFunction::new(ones, combined)?.pairing(&gs)?;
    Ok(MultiplierShiftReport {
        lhs: lhs.value,
        rhs: rhs.value,
        discrepancy: (lhs.value - rhs.value).norm(),
        lhs_unconjugated: lhs_u.value,
        discrepancy_unconjugated: (lhs_u.value - rhs.value).norm(),
        error_bound: lhs.error_bound + rhs.error_bound + lhs_u.error_bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShiftIdentityCheck {
    /// `∏ Γ(a_i) ∫ ∏ |x_i|^{-a_i} (D^γ g)(x) dx` through the transform of
    /// `D^γ g`.
    pub lhs: Complex64,
    /// `∏ Γ(a_i + γ_i) ∫ ∏ |x_i|^{-a_i - γ_i} g(x) dx` on the space side.
    pub rhs: Complex64,
    pub discrepancy: f64,
}

/// The `Γ`-weighted identity between `a_i = N_i s + v_i` and `a_i + β N_i`.
///
/// The left integral is `∫ f_a · |ξ|^γ ĝ` times `∏ Γ(a_i)`; the right one is
/// evaluated from space-side closed forms, continued in `a`.
pub fn shift_identity_check(
    g: &GridFunction,
    exps: &[u32],
    offsets: &[i64],
    beta: u32,
    s: Complex64,
) -> Result<ShiftIdentityCheck> {
    let n = g.n;
    if exps.len() != n || offsets.len() != n || exps.contains(&0) || beta == 0 {
        return Err(Error::InvalidInput("need N_i >= 1 and β >= 1 in every coordinate".into()));
    }
    let q = g.field.q();
    let gf = GammaFactor::new(q)?;
    let a: Vec<Complex64> = (0..n).map(|i| exps[i] as f64 * s + offsets[i] as f64).collect();
    let shifted: Vec<Complex64> = (0..n).map(|i| a[i] + (beta * exps[i]) as f64).collect();
    // Γ(a) ∫|x|^{-a} D^γ g = Γ(a) ∫ f_a |ξ|^γ ĝ = ∫ |ξ|^{a+γ-1} ĝ
    for x in &a {
        gf.eval(*x)?;
    }
    let mults = (0..n)
        .map(|i| Multiplier::new(IntPolynomial::var(n, i), shifted[i] - 1.0))
        .collect();
    let lhs = SpectralFunction::new(g.fourier(), mults)?.integral()?.value;
    let rc = riesz_pairing(&shifted, g)?;
    let mut gam_b = Complex64::new(1.0, 0.0);
    for x in &shifted {
        gam_b *= gf.eval(*x)?;
    }
    let rhs = gam_b * rc.space_side;
    Ok(ShiftIdentityCheck { lhs, rhs, discrepancy: (lhs - rhs).norm() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::upoly::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gamma_values() {
        let g = GammaFactor::new(2).unwrap();
        assert_eq!(g.eval_int(2).unwrap(), rat(-4, 3));
        assert!((g.eval(c(2.0, 0.0)).unwrap() - c(-4.0 / 3.0, 0.0)).norm() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2u64, 3, 5, 9] {
            let g = GammaFactor::new(q).unwrap();
            for _ in 0..20 {
                let a = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                let prod = g.eval(a).unwrap() * g.eval(c(1.0, 0.0) - a).unwrap();
                assert!((prod - 1.0).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn gamma_poles() {
        for q in [2u64, 3, 7] {
            let g = GammaFactor::new(q).unwrap();
            let step = 2.0 * PI / (q as f64).ln();
            for j in -3..=3 {
                for base in [0.0, 1.0] {
                    let mu = c(base, j as f64 * step);
                    assert!(matches!(g.eval(mu + c(5e-10, 0.0)), Err(Error::PoleOfGamma { .. })));
                    assert!(g.eval(mu + c(1e-8, 0.0)).is_ok());
                }
            }
        }
        // α → 0 blows up
        let g = GammaFactor::new(3).unwrap();
        assert!(g.eval(c(1e-7, 0.0)).unwrap().norm() > 1e6);
    }

    #[test]
    fn vladimirov_zero_is_identity() {
        let field = FieldSpec::qp(3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = GridFunction::random(field, 1, 1, 1, &mut rng).unwrap();
        let d0 = vladimirov(&[c(0.0, 0.0)], &g).unwrap();
        let sgeom = d0.base.geometry().dual();
        for i in 0..sgeom.len() {
            let x = sgeom.coords(i);
            let v = space_value(&d0, &x).unwrap();
            assert!((v.value - g.values()[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn vladimirov_at_origin() {
        // (D^1 1_R)(0) = ∫_R |ξ| dξ = Σ_j (1 - q^{-1}) q^{-2j}
        for p in [2u32, 3, 5] {
            let q = p as f64;
            let g = GridFunction::indicator_ball(FieldSpec::qp(p), 1, 0, 1, 1).unwrap();
            let d = vladimirov(&[c(1.0, 0.0)], &g).unwrap();
            let sgeom = d.base.geometry().dual();
            let zero = vec![0u64; 1];
            let v = space_value(&d, &zero).unwrap();
            let oracle: f64 = (0..200).map(|j| (1.0 - 1.0 / q) * q.powi(-2 * j)).sum();
            assert!((v.value.re - oracle).abs() < 1e-13, "{} vs {oracle}", v.value);
            assert!(sgeom.len() > 1);
        }
    }

    #[test]
    fn composition_adds_exponents() {
        let field = FieldSpec::qp(3);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = GridFunction::random(field, 2, 1, 1, &mut rng).unwrap();
        let a = [c(0.4, 0.2), c(0.7, 0.0)];
        let b = [c(0.3, -0.1), c(1.1, 0.5)];
        let sum: Vec<_> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let ab = PseudoDiffOp::vladimirov(&b).unwrap().apply_spectral(vladimirov(&a, &g).unwrap()).unwrap();
        let direct = vladimirov(&sum, &g).unwrap();
        let h = GridFunction::random(field, 2, 1, 1, &mut rng).unwrap();
        let x = ab.pairing_grid(&h).unwrap().value;
        let y = direct.pairing_grid(&h).unwrap().value;
        assert!((x - y).norm() < 1e-12 * x.norm().max(1.0));
    }

    #[test]
    fn adjoint_identity() {
        let field = FieldSpec::qp(2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let op = PseudoDiffOp::vladimirov(&[c(0.6, 0.3), c(1.2, -0.4)]).unwrap();
        for _ in 0..5 {
            let base = GridFunction::random(field, 2, 1, 2, &mut rng).unwrap().fourier();
            let t = SpectralFunction::new(base, vec![Multiplier::new(IntPolynomial::var(2, 0), c(0.5, 0.0))]).unwrap();
            let g = GridFunction::random(field, 2, 1, 2, &mut rng).unwrap();
            let left = op.adjoint().apply_spectral(t.clone()).unwrap().pairing_grid(&g).unwrap().value;
            let right = t.pairing(&op.apply(&g).unwrap()).unwrap().value;
            assert!((left - right).norm() < 1e-12 * left.norm().max(1.0));
        }
    }

    #[test]
    fn norm_bound() {
        let field = FieldSpec::qp(3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let op = PseudoDiffOp::parse(2, "x1^2+x2^2:1.3").unwrap();
        assert_eq!(op.order_shift(), 8.0);
        for _ in 0..5 {
            let g = GridFunction::random(field, 2, 1, 1, &mut rng).unwrap();
            assert!(op.symbol_bound_holds(&g));
            let pg = op.apply(&g).unwrap();
            for l in [0.0, 2.0] {
                let lhs = pg.sobolev_norm(l).unwrap();
                let rhs = g.sobolev_norm(l + op.order_shift());
                assert!(lhs.value <= rhs * (1.0 + 1e-12), "{} > {rhs}", lhs.value);
            }
        }
    }

    #[test]
    fn riesz_unit_ball() {
        for p in [2u32, 3, 5] {
            let q = p as f64;
            let phi = GridFunction::indicator_ball(FieldSpec::qp(p), 1, 0, 1, 2).unwrap();
            let r = riesz_pairing(&[c(0.5, 0.0)], &phi).unwrap();
            let oracle = (1.0 - 1.0 / q) / (1.0 - q.powf(-0.5));
            assert!((r.space_side.re - oracle).abs() < 1e-13);
            assert!(r.discrepancy < 1e-10, "{r:?}");
        }
    }

    #[test]
    fn riesz_random_and_limit() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (p, n) in [(2u32, 1usize), (3, 1), (3, 2)] {
            let field = FieldSpec::qp(p);
            for a in [c(0.3, 0.0), c(0.7, 0.0), c(0.5, 1.0), c(1.6, 0.0)] {
                let phi = GridFunction::random(field, n, 1, 1, &mut rng).unwrap();
                let r = riesz_pairing(&vec![a; n], &phi).unwrap();
                assert!(r.discrepancy < 1e-10 * r.space_side.norm().max(1.0), "{p} {n} {a}: {r:?}");
            }
            // f_α → δ: both sides tend to ∫ φ = φ̂(0)
            let phi = GridFunction::random(field, n, 1, 1, &mut rng).unwrap();
            let r = riesz_pairing(&vec![c(1e-7, 0.0); n], &phi).unwrap();
            let mass = phi.fourier().at_zero();
            assert!((r.frequency_side - mass).norm() < 1e-5, "{} vs {mass}", r.frequency_side);
        }
        let phi = GridFunction::indicator_ball(FieldSpec::qp(3), 1, 0, 1, 1).unwrap();
        assert!(riesz_pairing(&[c(1.0, 0.2)], &phi).is_err());
    }

    #[test]
    fn multiplier_shift_cases() {
        let g = GridFunction::indicator_ball(FieldSpec::qp(3), 1, 0, 1, 2).unwrap();
        let r = multiplier_shift_check(&[c(0.5, 0.0)], &[c(0.5, 0.0)], &g).unwrap();
        assert!(r.discrepancy <= 1e-10);
        // ∫_R |ξ|^{0} dξ = 1
        assert!((r.rhs - 1.0).norm() < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = GridFunction::random(FieldSpec::qp(3), 2, 1, 1, &mut rng).unwrap();
        let r = multiplier_shift_check(&[c(0.5, 0.0), c(1.5, 0.0)], &[c(1.0, 0.0), c(1.0, 0.0)], &g).unwrap();
        assert!(r.discrepancy <= 1e-10 * r.rhs.norm().max(1.0));
        assert!(r.discrepancy_unconjugated <= 1e-10 * r.rhs.norm().max(1.0));
        // complex β separates the two readings
        let r = multiplier_shift_check(&[c(0.5, 0.0), c(0.5, 0.0)], &[c(1.0, 0.7), c(1.0, 0.0)], &g).unwrap();
        assert!(r.discrepancy <= 1e-10 * r.rhs.norm().max(1.0));
        assert!(r.discrepancy_unconjugated > 1e-6);
    }

    #[test]
    fn shift_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = GridFunction::random(FieldSpec::qp(3), 1, 1, 1, &mut rng).unwrap();
        for beta in [1u32, 2] {
            for k in 0..10 {
                // a + βN inside (0, 1): s in (-1 - β, -β) for N = v = 1
                let s = c(-(beta as f64) - 0.05 - 0.09 * k as f64, 0.3 * (k % 3) as f64);
                let r = shift_identity_check(&g, &[1], &[1], beta, s).unwrap();
                assert!(r.discrepancy < 1e-10 * r.rhs.norm().max(1.0), "{beta} {s}: {r:?}");
            }
        }
    }
}
