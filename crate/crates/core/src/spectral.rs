//! Frequency-side objects `T̂(ξ) = b(ξ) ∏ |h_i(ξ)|^{α_i}` where `b` is a grid
//! function and `h_i` are integer polynomials, and the cell integrals that
//! norms and pairings of such objects reduce to.
//!
//! On a cell where every `|h_i|` is constant the integral is a product of
//! values; coordinate monomials are integrated in closed form over balls
//! through the origin. Remaining cells are split into `q^n` children until
//! the unresolved mass is certified below the requested tolerance.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{int_ord, FieldKind, FieldSpec, FiniteElement};
use crate::grid::{Geometry, GridFunction};
use crate::poly::IntPolynomial;

/// Refinement depth below the grid resolution before giving up.
const MAX_REFINE: usize = 48;

#[derive(Clone, Debug, PartialEq)]
pub struct Multiplier {
    pub poly: IntPolynomial,
    pub alpha: Complex64,
}

impl Multiplier {
    pub fn new(poly: IntPolynomial, alpha: Complex64) -> Self {
        Multiplier { poly, alpha }
    }

    pub fn label(&self) -> String {
        format!("|{}|^({}{:+}i)", self.poly, self.alpha.re, self.alpha.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Space,
    Frequency,
}

/// `T̂ = base · ∏ |h_i|^{α_i}`, with `base` stored on the frequency side.
#[derive(Clone, Debug)]
pub struct SpectralFunction {
    pub base: GridFunction,
    pub multipliers: Vec<Multiplier>,
    pub side: Side,
}

/// Value with a certified bound on the discarded part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Certified<T> {
    pub value: T,
    pub error_bound: f64,
}

impl SpectralFunction {
    pub fn new(base: GridFunction, multipliers: Vec<Multiplier>) -> Result<Self> {
        for mu in &multipliers {
            check_multiplier(base.field, base.n, mu)?;
        }
        // local integrability of coordinate-monomial factors near 0
        let mono: Vec<Factor> = multipliers
            .iter()
            .map(|mu| Factor::new(base.field, &mu.poly, mu.alpha))
            .collect();
        if mono.iter().all(|f| f.monomial.is_some()) {
            let gamma = combined_exponents(&mono, base.n);
            for (i, g) in gamma.iter().enumerate() {
                if g.re <= -1.0 {
                    return Err(Error::Divergent(format!(
                        "∏ multipliers has exponent {} on |ξ_{}|, not locally integrable",
                        g.re,
                        i + 1
                    )));
                }
            }
        }
        Ok(SpectralFunction { base, multipliers, side: Side::Frequency })
    }

    pub fn from_grid(g: &GridFunction) -> Self {
        SpectralFunction { base: g.fourier(), multipliers: Vec::new(), side: Side::Space }
    }

    /// `δ` as the functional with `T̂ ≡ 1` on `π^{-l} R^n` (frequency support),
    /// resolved to `π^m`.
    pub fn dirac(field: FieldSpec, n: usize, l: i64, m: i64) -> Result<Self> {
        let base = GridFunction::indicator_ball(field, n, -l, l, m)?;
        Ok(SpectralFunction { base, multipliers: Vec::new(), side: Side::Frequency })
    }

    pub fn with_multiplier(mut self, mu: Multiplier) -> Result<Self> {
        check_multiplier(self.base.field, self.base.n, &mu)?;
        self.multipliers.push(mu);
        Self::new(self.base, self.multipliers)
    }

    pub fn field(&self) -> FieldSpec {
        self.base.field
    }

    pub fn dim(&self) -> usize {
        self.base.n
    }

    fn factors(&self, conj: bool) -> Vec<Factor> {
        self.multipliers
            .iter()
            .map(|mu| Factor::new(self.field(), &mu.poly, if conj { mu.alpha.conj() } else { mu.alpha }))
            .collect()
    }

    /// `‖T‖_l² = ∫ [ξ]^l |T̂(ξ)|² dξ`.
    pub fn sobolev_norm(&self, l: f64) -> Result<Certified<f64>> {
        let factors: Vec<Factor> = self
            .multipliers
            .iter()
            .map(|mu| Factor::new(self.field(), &mu.poly, Complex64::new(2.0 * mu.alpha.re, 0.0)))
            .collect();
        let geom = self.base.geometry();
        let items = weighted_cells(&self.base, |b| b.norm_sqr());
        let parts = integrate_cells(&geom, &items, &factors, |c| geom.bracket(c).powf(l))?;
        let sq = parts.value.re;
        let value = sq.max(0.0).sqrt();
        // d√x <= dx / (2√x) for x > 0
        let error_bound = if value > 0.0 { parts.error_bound / (2.0 * value) } else { parts.error_bound.sqrt() };
        Ok(Certified { value, error_bound })
    }

    /// `[T, G] = ∫ conj(T̂) Ĝ`.
    pub fn pairing(&self, other: &SpectralFunction) -> Result<Certified<Complex64>> {
        let (a, b) = self.base.common_grid(&other.base)?;
        let prod = a.conj().mul(&b)?;
        let mut factors = self.factors(true);
        factors.extend(other.factors(false));
        let geom = prod.geometry();
        let items = weighted_cells(&prod, |v| v);
        integrate_cells(&geom, &items, &factors, |_| 1.0)
    }

    pub fn pairing_grid(&self, g: &GridFunction) -> Result<Certified<Complex64>> {
        self.pairing(&SpectralFunction::from_grid(g))
    }

    /// `∫ T̂(ξ) dξ`, i.e. the value of `𝓕^{-1} T̂` at the origin.
    pub fn integral(&self) -> Result<Certified<Complex64>> {
        let geom = self.base.geometry();
        let items = weighted_cells(&self.base, |v| v);
        integrate_cells(&geom, &items, &self.factors(false), |_| 1.0)
    }

    /// Inverse transform back to a grid function; only multiplier-free
    /// functions are locally constant.
    pub fn to_grid(&self) -> Result<GridFunction> {
        if !self.multipliers.is_empty() {
            return Err(Error::Unsupported(
                "a spectral function with multipliers is not a grid function".into(),
            ));
        }
        Ok(self.base.inverse_fourier())
    }
}

fn check_multiplier(field: FieldSpec, n: usize, mu: &Multiplier) -> Result<()> {
    if mu.poly.nvars() != n {
        return Err(Error::InvalidInput(format!(
            "multiplier {} has {} variables, space has {n}",
            mu.poly,
            mu.poly.nvars()
        )));
    }
    if field.kind == FieldKind::LaurentFp && mu.poly.terms().all(|(_, c)| c.rem_euclid(field.p as i64) == 0) {
        return Err(Error::InvalidInput(format!("{} vanishes identically in characteristic {}", mu.poly, field.p)));
    }
    Ok(())
}

fn weighted_cells<T: Copy + Send + Sync>(g: &GridFunction, w: impl Fn(Complex64) -> T) -> Vec<(usize, T)> {
    g.values()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.norm_sqr() > 0.0)
        .map(|(i, v)| (i, w(*v)))
        .collect()
}

/// `Σ_cells weight · extra(cell) · ∫_cell ∏|h|^β`, in grid order.
fn integrate_cells<T>(
    geom: &Geometry,
    items: &[(usize, T)],
    factors: &[Factor],
    extra: impl Fn(&[u64]) -> f64 + Sync,
) -> Result<Certified<Complex64>>
where
    T: Copy + Send + Sync + Into<Complex64>,
{
    let vol = geom.cell_volume();
    let tol = 1e-15 * vol;
    let parts: Vec<Result<(Complex64, f64)>> = items
        .par_iter()
        .map(|(i, w)| {
            let c = geom.coords(*i);
            let ball = Ball { center: c.iter().map(|&a| geom.element(a)).collect(), r: geom.m };
            let (v, e) = integrate_ball(geom.field, &ball, factors, tol)?;
            let x = extra(&c);
            let w: Complex64 = (*w).into();
            Ok((w * v * x, w.norm() * e * x))
        })
        .collect();
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for p in parts {
        let (v, e) = p?;
        value += v;
        err += e;
    }
    Ok(Certified { value, error_bound: err })
}

// ---------------------------------------------------------------------------

/// `|h|^exp` with precomputed Taylor data.
#[derive(Clone, Debug)]
pub struct Factor {
    pub poly: IntPolynomial,
    pub exp: Complex64,
    /// `(ord |c|, e)` when `h = c x^e`.
    pub monomial: Option<(i64, Vec<u32>)>,
    taylor: Vec<(Vec<u32>, IntPolynomial)>,
}

impl Factor {
    pub fn new(field: FieldSpec, poly: &IntPolynomial, exp: Complex64) -> Self {
        let monomial = poly.as_monomial().map(|(c, e)| {
            let v = match field.kind {
                FieldKind::Qp => int_ord(&c.into(), field.p).unwrap(),
                FieldKind::LaurentFp => 0,
            };
            (v, e.clone())
        });
        Factor { poly: poly.clone(), exp, monomial, taylor: poly.taylor_coefficients() }
    }

    fn label(&self) -> String {
        format!("|{}|^({}{:+}i)", self.poly, self.exp.re, self.exp.im)
    }
}

/// Sum of the per-coordinate exponents of monomial factors.
fn combined_exponents(factors: &[Factor], n: usize) -> Vec<Complex64> {
    let mut g = vec![Complex64::new(0.0, 0.0); n];
    for f in factors {
        if let Some((_, e)) = &f.monomial {
            for i in 0..n {
                g[i] += f.exp * e[i] as f64;
            }
        }
    }
    g
}

/// `c + π^r R^n`
#[derive(Clone, Debug)]
pub struct Ball {
    pub center: Vec<FiniteElement>,
    pub r: i64,
}

fn qpow_c(q: f64, z: Complex64) -> Complex64 {
    (z * q.ln()).exp()
}

/// `∫_{π^r R} |ξ|^γ dξ = (1-q^{-1}) q^{-r(1+γ)} / (1 - q^{-(1+γ)})`.
pub fn ball_power_integral(q: f64, r: i64, gamma: Complex64) -> Option<Complex64> {
    if gamma.re <= -1.0 {
        return None;
    }
    let one = Complex64::new(1.0, 0.0);
    Some((1.0 - 1.0 / q) * qpow_c(q, -(one + gamma) * r as f64) / (one - qpow_c(q, -(one + gamma))))
}

/// `∫_ball ∏_i |ξ_i|^{γ_i}` for a product ball.
fn monomial_ball_integral(field: FieldSpec, ball: &Ball, gamma: &[Complex64]) -> Option<Complex64> {
    let q = field.qf();
    let mut acc = Complex64::new(1.0, 0.0);
    for (c, g) in ball.center.iter().zip(gamma) {
        match c.ord() {
            Some(v) if v < ball.r => {
                acc *= qpow_c(q, -g * v as f64) * q.powi(-ball.r as i32);
            }
            _ => acc *= ball_power_integral(q, ball.r, *g)?,
        }
    }
    Some(acc)
}

enum FactorState {
    /// `|h(c + π^r y)| = q^{-w} |y^β|` on the whole ball; `β = 0` means
    /// `|h|` is constant there.
    Monomial(i64, Vec<u32>),
    /// The linear Taylor term dominates: on the ball `h = π^w u(y)` with `u`
    /// pushing Haar measure of `R^n` forward to Haar measure of `R`.
    Smooth(i64),
    /// Only `|h| <= q^{-w}` is known (`i64::MAX` when `h` vanishes on it).
    Bounded(i64),
}

fn factor_state(f: &Factor, ball: &Ball) -> FactorState {
    let n = ball.center.len();
    // h(c + π^r y) = Σ_γ a_γ y^γ with ord a_γ = ord T_γ(c) + r|γ|
    let mut terms: Vec<(Vec<u32>, i64)> = Vec::with_capacity(f.taylor.len() + 1);
    if let Some(v) = f.poly.eval(&ball.center).ord() {
        terms.push((vec![0; n], v));
    }
    for (g, t) in &f.taylor {
        if let Some(v) = t.eval(&ball.center).ord() {
            terms.push((g.clone(), v + ball.r * g.iter().sum::<u32>() as i64));
        }
    }
    let Some(w) = terms.iter().map(|t| t.1).min() else {
        return FactorState::Bounded(i64::MAX);
    };
    let lead: Vec<&(Vec<u32>, i64)> = terms.iter().filter(|t| t.1 == w).collect();
    if lead.len() == 1 {
        let beta = &lead[0].0;
        let divides = terms
            .iter()
            .all(|(g, v)| g == beta || (*v > w && g.iter().zip(beta).all(|(a, b)| a >= b)));
        if divides {
            return FactorState::Monomial(w, beta.clone());
        }
    }
    let lin = terms.iter().filter(|t| t.0.iter().sum::<u32>() == 1).map(|t| t.1).min();
    let higher = terms.iter().filter(|t| t.0.iter().sum::<u32>() > 1).map(|t| t.1).min().unwrap_or(i64::MAX);
    let h0 = terms.iter().find(|t| t.0.iter().all(|&a| a == 0)).map_or(i64::MAX, |t| t.1);
    match lin {
        Some(l) if l < higher && h0 >= l => FactorState::Smooth(l),
        _ => FactorState::Bounded(w),
    }
}

/// Outcome of examining one ball.
enum BallStep {
    Done(Complex64),
    /// Unresolved, with a bound on `∫ |integrand|` (infinite when a factor
    /// with negative exponent may vanish in the ball).
    Open(f64),
}

fn examine_ball(field: FieldSpec, ball: &Ball, factors: &[Factor]) -> Result<BallStep> {
    let q = field.qf();
    let n = ball.center.len();
    let divergent = |fs: &[&Factor]| {
        let labels: Vec<String> = fs.iter().map(|f| f.label()).collect();
        Error::Divergent(labels.join(" * "))
    };

    // Try to write the integrand as C ∏ |y_i|^{Γ_i}, possibly times one
    // smooth factor.
    let mut constant = Complex64::new(1.0, 0.0);
    let mut big_gamma = vec![Complex64::new(0.0, 0.0); n];
    let mut exact = true;
    let mut smooth: Vec<(&Factor, i64)> = Vec::new();
    // sup of |integrand| / ∏|ξ_i|^{Re γ_i}, as a log_q
    let mut sup_log = 0.0f64;
    let mut unbounded = false;
    let mono: Vec<Factor> = factors.iter().filter(|f| f.monomial.is_some()).cloned().collect();
    let gamma = combined_exponents(&mono, n);
    let mono_const: Complex64 = mono
        .iter()
        .map(|f| qpow_c(q, -f.exp * f.monomial.as_ref().unwrap().0 as f64))
        .product();
    constant *= mono_const;
    for (i, c) in ball.center.iter().enumerate() {
        if gamma[i].norm() == 0.0 {
            continue;
        }
        match c.ord() {
            Some(v) if v < ball.r => constant *= qpow_c(q, -gamma[i] * v as f64),
            None => {
                constant *= qpow_c(q, -gamma[i] * ball.r as f64);
                big_gamma[i] += gamma[i];
            }
            Some(_) => exact = false,
        }
    }
    for f in factors.iter().filter(|f| f.monomial.is_none()) {
        match factor_state(f, ball) {
            FactorState::Monomial(w, beta) => {
                constant *= qpow_c(q, -f.exp * w as f64);
                sup_log -= w as f64 * f.exp.re;
                if beta.iter().any(|&b| b > 0) {
                    if f.exp.re < 0.0 {
                        unbounded = true;
                    }
                    for i in 0..n {
                        big_gamma[i] += f.exp * beta[i] as f64;
                    }
                }
            }
            FactorState::Smooth(w) => {
                smooth.push((f, w));
                if f.exp.re < 0.0 {
                    unbounded = true;
                } else {
                    sup_log -= w as f64 * f.exp.re;
                }
            }
            FactorState::Bounded(w) => {
                exact = false;
                if w == i64::MAX {
                    // h vanishes identically on the ball
                    if f.exp.re > 0.0 {
                        return Ok(BallStep::Done(Complex64::new(0.0, 0.0)));
                    }
                    return Err(divergent(&[f]));
                }
                if f.exp.re < 0.0 {
                    unbounded = true;
                } else {
                    sup_log -= w as f64 * f.exp.re;
                }
            }
        }
    }
    let vol = q.powi(-(ball.r * n as i64) as i32);
    let all: Vec<&Factor> = factors.iter().collect();
    if exact && smooth.is_empty() {
        let mut v = constant * vol;
        for g in &big_gamma {
            v *= ball_power_integral(q, 0, *g).ok_or_else(|| divergent(&all))?;
        }
        return Ok(BallStep::Done(v));
    }
    if exact && smooth.len() == 1 && big_gamma.iter().all(|g| g.norm() == 0.0) {
        let (f, w) = smooth[0];
        let line = ball_power_integral(q, 0, f.exp).ok_or_else(|| divergent(&[f]))?;
        return Ok(BallStep::Done(constant * vol * qpow_c(q, -f.exp * w as f64) * line));
    }
    if unbounded {
        return Ok(BallStep::Open(f64::INFINITY));
    }
    let re_gamma: Vec<Complex64> = gamma.iter().map(|g| Complex64::new(g.re, 0.0)).collect();
    let mono_mass = if mono.is_empty() {
        vol
    } else {
        monomial_ball_integral(field, ball, &re_gamma).ok_or_else(|| divergent(&all))?.re
    };
    Ok(BallStep::Open(q.powf(sup_log) * mono_const.norm() * mono_mass))
}

fn children(field: FieldSpec, ball: &Ball) -> Vec<Ball> {
    let p = field.p as u64;
    let n = ball.center.len();
    let step = FiniteElement::from_i64(field, 1).shift(ball.r);
    (0..p.pow(n as u32))
        .map(|k| {
            let mut kk = k;
            let center = ball
                .center
                .iter()
                .map(|c| {
                    let d = (kk % p) as i64;
                    kk /= p;
                    c.add(&step.mul(&FiniteElement::from_i64(field, d)))
                })
                .collect();
            Ball { center, r: ball.r + 1 }
        })
        .collect()
}

/// Open balls allowed on one refinement level.
const MAX_OPEN: usize = 1 << 16;

/// Integral of `∏ |h_k|^{β_k}` over a ball. Refines level by level; the
/// returned error bounds the mass of the balls left open.
pub fn integrate_ball(field: FieldSpec, ball: &Ball, factors: &[Factor], tol: f64) -> Result<(Complex64, f64)> {
    let mut value = Complex64::new(0.0, 0.0);
    let mut open = vec![ball.clone()];
    for _ in 0..=MAX_REFINE {
        let mut next = Vec::new();
        let mut bound = 0.0;
        for b in &open {
            match examine_ball(field, b, factors)? {
                BallStep::Done(v) => value += v,
                BallStep::Open(e) => {
                    bound += e;
                    next.push(b.clone());
                }
            }
        }
        if next.is_empty() {
            return Ok((value, 0.0));
        }
        if bound <= tol {
            return Ok((value, bound));
        }
        let p_n = (field.p as usize).pow(ball.center.len() as u32);
        if next.len() * p_n > MAX_OPEN {
            let labels: Vec<String> = factors.iter().map(|f| f.label()).collect();
            return Err(if bound.is_infinite() {
                Error::Divergent(format!("{} near its zero set", labels.join(" * ")))
            } else {
                Error::BudgetExceeded(format!(
                    "{} open balls at error bound {bound:e} > {tol:e}",
                    next.len()
                ))
            });
        }
        open = next.iter().flat_map(|b| children(field, b)).collect();
    }
    Err(Error::BudgetExceeded("refinement depth exhausted".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn sphere_sum(q: f64, gamma: f64) -> f64 {
        // ∫_{R} |ξ|^γ = Σ_j q^{-j} (1 - 1/q) q^{-jγ}
        (0..400).map(|j| q.powi(-j) * (1.0 - 1.0 / q) * q.powf(-(j as f64) * gamma)).sum()
    }

    #[test]
    fn closed_form_ball_integral() {
        for q in [2.0, 3.0, 5.0] {
            for g in [-0.5, 0.0, 1.0, 2.6] {
                let v = ball_power_integral(q, 0, Complex64::new(g, 0.0)).unwrap();
                assert!((v.re - sphere_sum(q, g)).abs() < 1e-13);
            }
        }
        assert!(ball_power_integral(3.0, 0, Complex64::new(-1.0, 0.0)).is_none());
    }

    #[test]
    fn general_polynomial_matches_monomial_route() {
        // x1 written as x1 + 0 is still a monomial; x1*x1 + 0*x2 checks the
        // adaptive path against the closed form through |x1|^2 = |x1^2|.
        let field = FieldSpec::qp(3);
        let general = IntPolynomial::parse("x1^2 + 3*x1^3", Some(2)).unwrap();
        let mono = IntPolynomial::parse("x1^2", Some(2)).unwrap();
        let ball = Ball { center: vec![FiniteElement::zero(field), FiniteElement::zero(field)], r: 0 };
        let a = integrate_ball(field, &ball, &[Factor::new(field, &general, Complex64::new(0.7, 0.0))], 1e-14).unwrap();
        let b = integrate_ball(field, &ball, &[Factor::new(field, &mono, Complex64::new(0.7, 0.0))], 1e-14).unwrap();
        assert!((a.0 - b.0).norm() < 1e-12 + a.1, "{:?} {:?}", a, b);
    }

    #[test]
    fn anisotropic_norm_form() {
        // over Q_3, |x1^2 + x2^2| = ‖x‖^2, so ∫_{R^2} |h|^β = Σ_j q^{-2j}(1-q^{-2}) q^{-2jβ}
        let field = FieldSpec::qp(3);
        let h = IntPolynomial::parse("x1^2 + x2^2", None).unwrap();
        let ball = Ball { center: vec![FiniteElement::zero(field), FiniteElement::zero(field)], r: 0 };
        let beta = 1.3;
        let (v, e) = integrate_ball(field, &ball, &[Factor::new(field, &h, Complex64::new(beta, 0.0))], 1e-14).unwrap();
        let q: f64 = 3.0;
        let expect = (1.0 - q.powi(-2)) / (1.0 - q.powf(-2.0 - 2.0 * beta));
        assert!((v.re - expect).abs() < 1e-12 + e);
        assert!(e < 1e-13);
    }

    #[test]
    fn isotropic_form_refines_near_lines() {
        // over Q_5, x1^2 + x2^2 = (x1 + i x2)(x1 - i x2) with i² = -1; after a
        // linear change of variables of determinant a unit this is x1*x2.
        let field = FieldSpec::qp(5);
        let h = IntPolynomial::parse("x1^2 + x2^2", None).unwrap();
        let ball = Ball { center: vec![FiniteElement::zero(field), FiniteElement::zero(field)], r: 0 };
        let beta = 1.0;
        let (v, e) = integrate_ball(field, &ball, &[Factor::new(field, &h, Complex64::new(beta, 0.0))], 1e-13).unwrap();
        let one = ball_power_integral(5.0, 0, Complex64::new(beta, 0.0)).unwrap().re;
        assert!((v.re - one * one).abs() < 1e-11 + e, "{v} vs {}", one * one);
    }

    #[test]
    fn negative_exponent_near_zero_set_diverges() {
        let field = FieldSpec::qp(3);
        let h = IntPolynomial::parse("x1 + x2", None).unwrap();
        let ball = Ball { center: vec![FiniteElement::zero(field), FiniteElement::zero(field)], r: 0 };
        let r = integrate_ball(field, &ball, &[Factor::new(field, &h, Complex64::new(-1.0, 0.0))], 1e-12);
        assert!(matches!(r, Err(Error::Divergent(_))));
        let h = IntPolynomial::parse("x1^2 + x2^3", None).unwrap();
        let r = integrate_ball(field, &ball, &[Factor::new(field, &h, Complex64::new(-2.0, 0.0))], 1e-12);
        assert!(matches!(r, Err(Error::Divergent(_))));
    }

    #[test]
    fn smooth_zero_set_uses_line_integral() {
        // x1 + x2 is a unit linear form: ∫_{R^2} |x1 + x2|^β = ∫_R |y|^β
        let field = FieldSpec::qp(3);
        let h = IntPolynomial::parse("x1 + x2", None).unwrap();
        let ball = Ball { center: vec![FiniteElement::zero(field), FiniteElement::zero(field)], r: 0 };
        for beta in [-0.5, 0.4] {
            let b = Complex64::new(beta, 0.0);
            let (v, e) = integrate_ball(field, &ball, &[Factor::new(field, &h, b)], 1e-14).unwrap();
            assert_eq!(e, 0.0);
            assert!((v - ball_power_integral(3.0, 0, b).unwrap()).norm() < 1e-14);
        }
    }
}
