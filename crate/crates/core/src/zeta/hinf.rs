//! `Z(s) = ∫_{K^n} |f(ξ)|^s e^{-‖ξ‖^α} dξ` for a form `f` that is strongly
//! non-degenerate mod `π`.
//!
//! Writing `K^n∖0` as the union of the shells `π^j S₀` gives
//! `Z(s) = Z₀(s) Z₁(s)` with `Z₁(s) = Σ_{j∈ℤ} q^{-j(n+ds)} e^{-q^{-jα}}`.
//! The sum over `j >= 0` is continued by splitting `e^{-x}` into its Taylor
//! polynomial of degree `L` and the remainder; the `j < 0` part is entire.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::IntPolynomial;
use crate::rational::{laurent_at, RationalFunctionT};
use crate::zeta::igusa::igusa_series;
use crate::zeta::snc::snc_form_z0;

/// Distance below which evaluation refuses to approach a candidate pole.
pub const POLE_GUARD: f64 = 1e-6;
/// Minimum degree of the Taylor split.
const MIN_SPLIT: usize = 17;
/// Series terms used to rebuild `Z₀`.
const Z0_TERMS: usize = 10;
const TAIL_TARGET: f64 = 1e-18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HinfMode {
    SphereSeries,
    FactoredContinuation,
}

#[derive(Clone, Debug, Serialize)]
pub struct HinfValue {
    pub re: f64,
    pub im: f64,
    pub mode: HinfMode,
    /// Bound on the discarded tails, in absolute value.
    pub tail_bound: f64,
    /// Shells summed (sphere series) or Taylor degree `L` (factored).
    pub truncation: usize,
}

impl HinfValue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Clone, Debug)]
pub struct HinfZeta {
    pub q: u64,
    pub n: usize,
    pub d: u32,
    pub alpha: f64,
    pub z0: RationalFunctionT,
}

/// `x1^d + ... + xn^d`
pub fn diagonal_form(n: usize, d: u32) -> IntPolynomial {
    IntPolynomial::new(
        n,
        (0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = d;
            (e, 1)
        }),
    )
    .expect("consistent arity")
}

fn qpow(q: f64, z: Complex64) -> Complex64 {
    (z * q.ln()).exp()
}

impl HinfZeta {
    pub fn new(field: FieldSpec, f: &IntPolynomial, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidInput(format!("alpha = {alpha} must be positive")));
        }
        let series = igusa_series(field, f, Z0_TERMS)?;
        let form = snc_form_z0(field, f, &series)?;
        Ok(HinfZeta { q: field.q(), n: form.n, d: form.d, alpha, z0: form.z0 })
    }

    fn qf(&self) -> f64 {
        self.q as f64
    }

    /// `n + d s`
    fn shell_exp(&self, s: Complex64) -> Complex64 {
        self.n as f64 + self.d as f64 * s
    }

    /// Candidate poles: `-1` and `-(n + αl)/d`, each with its vertical period.
    pub fn nearest_pole(&self, s: Complex64) -> (Complex64, f64) {
        let two_pi_ln = 2.0 * std::f64::consts::PI / self.qf().ln();
        let snap = |re: f64, period: f64| {
            let k = (s.im / period).round();
            Complex64::new(re, k * period)
        };
        let mut best = snap(-1.0, two_pi_ln);
        let d = self.d as f64;
        let l0 = ((-d * s.re - self.n as f64) / self.alpha).round().max(0.0) as i64;
        for l in (l0 - 1).max(0)..=l0 + 1 {
            let c = snap(-(self.n as f64 + self.alpha * l as f64) / d, two_pi_ln / d);
            if (c - s).norm() < (best - s).norm() {
                best = c;
            }
        }
        (best, (best - s).norm())
    }

    fn guard(&self, s: Complex64) -> Result<()> {
        let (p, dist) = self.nearest_pole(s);
        if dist < POLE_GUARD {
            return Err(Error::PoleProximity { pole_re: p.re, pole_im: p.im, distance: dist });
        }
        Ok(())
    }

    /// `Σ_{k>=1} q^{k(n+ds)} e^{-q^{kα}}`, entire in `s`.
    fn outer_shells(&self, s: Complex64) -> (Complex64, f64, usize) {
        let q = self.qf();
        let e = self.shell_exp(s);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut k = 1usize;
        loop {
            let x = q.powf(self.alpha * k as f64);
            let term = qpow(q, e * k as f64) * (-x).exp();
            acc += term;
            // successive ratios shrink once e^{-x} dominates
            let next_x = q.powf(self.alpha * (k + 1) as f64);
            let next = q.powf(e.re * (k + 1) as f64) * (-next_x).exp();
            let ratio = if term.norm() > 0.0 { next / term.norm() } else { 0.0 };
            if next_x > x + 1.0 && ratio < 0.5 && next < TAIL_TARGET {
                return (acc, 2.0 * next, k);
            }
            k += 1;
        }
    }

    fn z0_at(&self, s: Complex64) -> Complex64 {
        self.z0.eval_s(s)
    }

    /// Direct sum over shells; requires `Re s > max(-1, -n/d)`.
    pub fn eval_sphere_series(&self, s: Complex64) -> Result<HinfValue> {
        let lower = (-1.0f64).max(-(self.n as f64) / self.d as f64);
        if s.re <= lower {
            return Err(Error::InvalidInput(format!(
                "sphere series needs Re s > {lower}, got {}",
                s.re
            )));
        }
        self.guard(s)?;
        let q = self.qf();
        let e = self.shell_exp(s);
        let rho = q.powf(-e.re);
        let (mut acc, outer_tail, outer_k) = self.outer_shells(s);
        let mut j = 0usize;
        let mut inner_tail;
        loop {
            let x = q.powf(-self.alpha * j as f64);
            acc += qpow(q, -e * j as f64) * (-x).exp();
            j += 1;
            inner_tail = rho.powi(j as i32) / (1.0 - rho);
            if inner_tail < TAIL_TARGET || j > 1_000_000 {
                break;
            }
        }
        let z0 = self.z0_at(s);
        let v = z0 * acc;
        Ok(HinfValue {
            re: v.re,
            im: v.im,
            mode: HinfMode::SphereSeries,
            tail_bound: z0.norm() * (inner_tail + outer_tail),
            truncation: j + outer_k,
        })
    }

    /// Split degree making the remainder sum converge at `s`.
    fn split_degree(&self, s: Complex64) -> usize {
        let need = (1.0 - self.shell_exp(s).re) / self.alpha;
        (need.ceil().max(0.0) as usize).max(MIN_SPLIT)
    }

    fn z1_factored(&self, s: Complex64) -> (Complex64, f64, usize) {
        let q = self.qf();
        let e = self.shell_exp(s);
        let l_max = self.split_degree(s);
        let one = Complex64::new(1.0, 0.0);
        // Σ_{l<=L} (-1)^l / l! · 1 / (1 - q^{-(n+ds+αl)})
        let mut head = Complex64::new(0.0, 0.0);
        let mut fact = 1.0f64;
        for l in 0..=l_max {
            if l > 0 {
                fact *= l as f64;
            }
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            head += sign / fact * (one / (one - qpow(q, -(e + self.alpha * l as f64))));
        }
        // Σ_{j>=0} q^{-j(n+ds)} r_L(q^{-jα}), r_L(x) = Σ_{l>L} (-x)^l / l!
        let remainder = |x: f64| -> f64 {
            let mut term = 1.0f64;
            for l in 1..=l_max + 1 {
                term *= -x / l as f64;
            }
            let mut sum = 0.0f64;
            let mut l = l_max + 1;
            while term.abs() > 1e-40 * sum.abs().max(1e-300) && l < l_max + 200 {
                sum += term;
                l += 1;
                term *= -x / l as f64;
            }
            sum
        };
        let rho = q.powf(-(e.re + self.alpha * (l_max + 1) as f64));
        let mut rest = Complex64::new(0.0, 0.0);
        let mut j = 0usize;
        let mut fact_l1 = 1.0f64;
        for l in 1..=l_max + 1 {
            fact_l1 *= l as f64;
        }
        let tail = loop {
            let x = q.powf(-self.alpha * j as f64);
            rest += qpow(q, -e * j as f64) * remainder(x);
            j += 1;
            // |r_L(x)| <= x^{L+1} / (L+1)!
            let bound = rho.powi(j as i32) / fact_l1 / (1.0 - rho);
            if bound < TAIL_TARGET || j > 100_000 {
                break bound;
            }
        };
        let (outer, outer_tail, _) = self.outer_shells(s);
        (head + rest + outer, tail + outer_tail, l_max)
    }

    /// Continued form, valid away from the candidate poles.
    pub fn eval_factored(&self, s: Complex64) -> Result<HinfValue> {
        self.guard(s)?;
        let (z1, tail, l_max) = self.z1_factored(s);
        let z0 = self.z0_at(s);
        let v = z0 * z1;
        Ok(HinfValue {
            re: v.re,
            im: v.im,
            mode: HinfMode::FactoredContinuation,
            tail_bound: z0.norm() * tail,
            truncation: l_max,
        })
    }

    pub fn eval(&self, s: Complex64, mode: HinfMode) -> Result<HinfValue> {
        match mode {
            HinfMode::SphereSeries => self.eval_sphere_series(s),
            HinfMode::FactoredContinuation => self.eval_factored(s),
        }
    }

    /// Unguarded real evaluation for the pole scan.
    fn raw_real(&self, s: f64) -> f64 {
        let s = Complex64::new(s, 0.0);
        (self.z0_at(s) * self.z1_factored(s).0).norm()
    }

    /// Real poles in `[lo, hi]`, found as maxima of `|Z|` on a grid and
    /// refined by golden-section search on `1/|Z|`.
    pub fn locate_real_poles(&self, lo: f64, hi: f64, step: f64) -> Vec<f64> {
        let n = ((hi - lo) / step).ceil() as usize;
        // offset keeps grid points off the rational candidates
        let xs: Vec<f64> = (0..=n).map(|i| lo + (i as f64 + 0.371) * step).filter(|&x| x < hi).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| self.raw_real(x)).collect();
        let mut out = Vec::new();
        for i in 1..xs.len().saturating_sub(1) {
            if !(ys[i] >= ys[i - 1] && ys[i] >= ys[i + 1]) {
                continue;
            }
            let inv = |x: f64| 1.0 / self.raw_real(x);
            let (mut a, mut b) = (xs[i - 1], xs[i + 1]);
            let g = (5f64.sqrt() - 1.0) / 2.0;
            let mut c = b - g * (b - a);
            let mut d = a + g * (b - a);
            let (mut fc, mut fd) = (inv(c), inv(d));
            for _ in 0..200 {
                if b - a < 1e-12 {
                    break;
                }
                if fc < fd {
                    b = d;
                    d = c;
                    fd = fc;
                    c = b - g * (b - a);
                    fc = inv(c);
                } else {
                    a = c;
                    c = d;
                    fc = fd;
                    d = a + g * (b - a);
                    fd = inv(d);
                }
            }
            let x = 0.5 * (a + b);
            if self.raw_real(x) > 1e6 {
                out.push(x);
            }
        }
        out
    }

    /// Residue at `s = -1`, assuming `Z₁` is regular there: the residue of
    /// `Z₀` from its exact Laurent expansion times `Z₁(-1)`.
    pub fn residue_at_minus_one(&self) -> Result<Complex64> {
        let s = Complex64::new(-1.0, 0.0);
        let (p, dist) = self.nearest_pole(s);
        let z1_pole = (0..).map(|l| (self.n as f64 + self.alpha * l as f64) / self.d as f64).take_while(|&x| x <= 1.0 + 1e-12).any(|x| (x - 1.0).abs() < 1e-12);
        if z1_pole {
            return Err(Error::PoleProximity { pole_re: p.re, pole_im: p.im, distance: dist });
        }
        let c = laurent_at(&self.z0, -1, 0).coeff_value(-1);
        Ok(c * self.z1_factored(s).0)
    }
}

/// Candidate real parts `-1` and `-(n + αl)/d` for `l < depth`, sorted
/// decreasingly without repeats.
pub fn predicted_real_poles(n: usize, d: u32, alpha: f64, depth: usize) -> Vec<f64> {
    let mut v: Vec<f64> = std::iter::once(-1.0)
        .chain((0..depth).map(|l| -(n as f64 + alpha * l as f64) / d as f64))
        .collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(n: usize, d: u32, alpha: f64) -> HinfZeta {
        HinfZeta::new(FieldSpec::qp(3), &diagonal_form(n, d), alpha).unwrap()
    }

    #[test]
    fn modes_agree_on_right_half_plane() {
        let z = engine(2, 2, 1.0);
        for s in [Complex64::new(0.7, 0.0), Complex64::new(0.2, 3.0), Complex64::new(2.9, -1.1)] {
            let a = z.eval_sphere_series(s).unwrap().value();
            let b = z.eval_factored(s).unwrap().value();
            assert!((a - b).norm() < 1e-12, "{s}: {a} vs {b}");
        }
    }

    #[test]
    fn linear_case_against_direct_integral() {
        // f = x over Q_3, α = 1: Z(s) = Σ_j (1 - 1/3) 3^{-j(1+s)} e^{-3^{-j}}
        let z = engine(1, 1, 1.0);
        let s = 0.4;
        let direct: f64 = (-60..400)
            .map(|j: i32| (2.0 / 3.0) * 3f64.powf(-(j as f64) * (1.0 + s)) * (-(3f64.powi(-j))).exp())
            .sum();
        let v = z.eval_factored(Complex64::new(s, 0.0)).unwrap();
        assert!((v.re - direct).abs() < 1e-13);
    }

    #[test]
    fn guard_rejects_points_near_poles() {
        let z = engine(2, 2, 1.0);
        let r = z.eval_factored(Complex64::new(-1.5 + 1e-8, 0.0));
        assert!(matches!(r, Err(Error::PoleProximity { .. })));
        let period = 2.0 * std::f64::consts::PI / 3f64.ln();
        let r = z.eval_factored(Complex64::new(-1.0, period + 1e-9));
        assert!(matches!(r, Err(Error::PoleProximity { .. })));
        assert!(z.eval_factored(Complex64::new(-1.25, 0.0)).is_ok());
    }

    #[test]
    fn poles_lie_in_predicted_set() {
        for (n, d, alpha) in [(1usize, 2u32, 1.0), (2, 2, 1.0), (2, 2, 2.0)] {
            let z = engine(n, d, alpha);
            let found = z.locate_real_poles(-3.2, -0.3, 0.01);
            assert!(!found.is_empty());
            let predicted = predicted_real_poles(n, d, alpha, 20);
            for x in found {
                assert!(predicted.iter().any(|p| (p - x).abs() < 1e-4), "{x} for {:?}", (n, d, alpha));
            }
        }
    }

    #[test]
    fn residue_at_minus_one_matches_limit() {
        let z = engine(3, 2, 1.0);
        let r = z.residue_at_minus_one().unwrap();
        for h in [1e-3, 1e-4] {
            let v = z.eval_factored(Complex64::new(-1.0 + h, 0.0)).unwrap().value() * h;
            assert!((v - r).norm() < 20.0 * h * r.norm(), "{v} vs {r}");
        }
    }
}
