//! The heat kernel `ĝ_t(ξ) = e^{-t ‖ξ‖^α}` on the frequency side.
//!
//! It is radial, so every quantity is a sum over spheres
//! `S_j = {‖ξ‖ = q^j}` of volume `(1 - q^{-n}) q^{jn}`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::GridFunction;
use crate::spectral::Certified;

/// Tail target for every series below.
const TAIL_TARGET: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HeatKernel {
    pub q: u64,
    pub n: usize,
    pub t: f64,
    pub alpha: f64,
}

/// `‖g_t‖_0²` computed once by the direct sphere sum and once with the
/// spheres inside `R^n` expanded through the exponential series.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HeatNormCheck {
    pub direct: f64,
    pub expanded: f64,
    pub tail_bound: f64,
}

impl HeatKernel {
    pub fn new(q: u64, n: usize, t: f64, alpha: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) || !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidInput(format!("need t > 0 and alpha > 0, got t = {t}, alpha = {alpha}")));
        }
        if q < 2 || n == 0 {
            return Err(Error::InvalidInput(format!("bad space: q = {q}, n = {n}")));
        }
        Ok(HeatKernel { q, n, t, alpha })
    }

    fn qf(&self) -> f64 {
        self.q as f64
    }

    fn sphere_volume(&self, j: i64) -> f64 {
        let n = self.n as f64;
        (1.0 - self.qf().powf(-n)) * self.qf().powf(j as f64 * n)
    }

    /// Value on the sphere `‖ξ‖ = q^j`.
    pub fn on_sphere(&self, j: i64) -> f64 {
        (-self.t * self.qf().powf(j as f64 * self.alpha)).exp()
    }

    /// Value at `‖ξ‖ = q^{-ord}`; `None` is the origin.
    pub fn at_ord(&self, ord: Option<i64>) -> f64 {
        match ord {
            None => 1.0,
            Some(o) => self.on_sphere(-o),
        }
    }

    /// `Σ_{j <= top} vol(S_j) w_j e^{-c q^{jα}}` with `w_j = 1` for `j <= 0`:
    /// the part below `j = 1` with its certified tail.
    fn inner_sum(&self, top: i64, c: f64) -> (f64, f64) {
        let n = self.n as f64;
        let mut sum = 0.0;
        let mut j = top;
        // Σ_{j < J} vol(S_j) = q^{(J-1) n} bounds everything below J
        loop {
            sum += self.sphere_volume(j) * (-c * self.qf().powf(j as f64 * self.alpha)).exp();
            let rest = self.qf().powf((j - 1) as f64 * n);
            if rest < TAIL_TARGET * 1e-3 {
                return (sum, rest);
            }
            j -= 1;
        }
    }

    /// `Σ_{j >= 1} vol(S_j) q^{jl} e^{-2t q^{jα}}`, stopped once the term
    /// ratio is below one and the geometric tail is negligible.
    fn outer_sum(&self, l: f64) -> Result<(f64, f64)> {
        let n = self.n as f64;
        let qa = self.qf().powf(self.alpha);
        let mut sum = 0.0;
        for j in 1..100_000i64 {
            let x = self.qf().powf(j as f64 * self.alpha);
            let term = self.sphere_volume(j) * self.qf().powf(j as f64 * l) * (-2.0 * self.t * x).exp();
            sum += term;
            // term_{i+1} / term_i = q^{n+l} e^{-2t x_i (q^α - 1)} decreases in i
            let ratio = self.qf().powf(n + l) * (-2.0 * self.t * x * (qa - 1.0)).exp();
            if ratio < 0.5 {
                let tail = term * ratio / (1.0 - ratio);
                if tail <= TAIL_TARGET * 1e-3 {
                    return Ok((sum, tail));
                }
            }
            if !x.is_finite() {
                break;
            }
        }
        Err(Error::BudgetExceeded("heat kernel sphere series did not settle".into()))
    }

    /// `‖g_t‖_l` with `‖g‖_l² = ∫ [ξ]^l |ĝ(ξ)|² dξ`.
    pub fn sobolev_norm(&self, l: f64) -> Result<Certified<f64>> {
        let (inner, e1) = self.inner_sum(0, 2.0 * self.t);
        let (outer, e2) = self.outer_sum(l)?;
        let sq = inner + outer;
        let value = sq.sqrt();
        Ok(Certified { value, error_bound: (e1 + e2) / (2.0 * value) })
    }

    /// Squared `L²` norm two ways.
    pub fn l2_check(&self) -> Result<HeatNormCheck> {
        let (inner, e1) = self.inner_sum(0, 2.0 * self.t);
        let (outer, e2) = self.outer_sum(0.0)?;
        // Σ_{j <= 0} vol(S_j) e^{-2t q^{jα}}
        //   = (1 - q^{-n}) Σ_k (-2t)^k / k! / (1 - q^{-(n + αk)})
        let n = self.n as f64;
        let a = 2.0 * self.t;
        let mut series = 0.0;
        let mut coeff = 1.0;
        let mut k = 0u32;
        let e3 = loop {
            series += coeff * (1.0 - self.qf().powf(-n)) / (1.0 - self.qf().powf(-(n + self.alpha * k as f64)));
            k += 1;
            coeff *= -a / k as f64;
            // remaining terms are bounded by Σ_{i >= k} a^i / i!
            let next = coeff.abs();
            if (k as f64) > 2.0 * a && next < TAIL_TARGET * 1e-3 {
                break next / (1.0 - a / (k as f64 + 1.0));
            }
        };
        Ok(HeatNormCheck {
            direct: inner + outer,
            expanded: series + outer,
            tail_bound: e1 + e2 + e3,
        })
    }

    /// `[G_t, g] = ∫ e^{-t‖ξ‖^α} ĝ(ξ) dξ` for a real kernel.
    pub fn pairing_grid(&self, g: &GridFunction) -> Result<Certified<Complex64>> {
        if g.field.q() != self.q || g.n != self.n {
            return Err(Error::FieldMismatch(format!(
                "kernel lives on q = {}, n = {}; grid on q = {}, n = {}",
                self.q,
                self.n,
                g.field.q(),
                g.n
            )));
        }
        let gh = g.fourier();
        let geom = gh.geometry();
        let vol = geom.cell_volume();
        let mut value = Complex64::new(0.0, 0.0);
        let mut err = 0.0;
        for (i, v) in gh.values().iter().enumerate() {
            if v.norm_sqr() == 0.0 {
                continue;
            }
            let c = geom.coords(i);
            match geom.cell_ord(&c) {
                Some(o) => value += v * self.on_sphere(-o) * vol,
                None => {
                    // the cell is the ball ‖ξ‖ <= q^{-m}
                    let (s, e) = self.inner_sum(-geom.m, self.t);
                    value += v * s;
                    err += v.norm() * e;
                }
            }
        }
        Ok(Certified { value, error_bound: err })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn l2_norm_two_ways() {
        for q in [2u64, 3, 5] {
            for n in [1usize, 2] {
                for t in [0.1, 1.0, 3.0] {
                    for alpha in [0.5, 1.0, 2.0] {
                        let k = HeatKernel::new(q, n, t, alpha).unwrap();
                        let c = k.l2_check().unwrap();
                        assert!((c.direct - c.expanded).abs() < 1e-12, "{q} {n} {t} {alpha}: {c:?}");
                        assert!(c.tail_bound < 1e-12);
                        let norm = k.sobolev_norm(0.0).unwrap();
                        assert!((norm.value * norm.value - c.direct).abs() < 1e-13 * c.direct.max(1.0));
                    }
                }
            }
        }
    }

    #[test]
    fn norms_grow_with_l() {
        for (t, alpha, n) in [(0.1, 1.0, 1usize), (1.0, 2.0, 2), (0.1, 2.0, 2)] {
            let k = HeatKernel::new(3, n, t, alpha).unwrap();
            let norms: Vec<_> = (0..=20).map(|l| k.sobolev_norm(l as f64).unwrap()).collect();
            for w in norms.windows(2) {
                assert!(w[1].value.is_finite() && w[1].value > w[0].value);
                assert!(w[1].error_bound < 1e-12 * w[1].value.max(1.0));
            }
        }
    }

    #[test]
    fn time_scaling() {
        let k = HeatKernel::new(2, 1, 0.7, 1.5).unwrap();
        let unit = HeatKernel::new(2, 1, 1.0, 1.5).unwrap();
        for j in -5..5 {
            let x = 0.7 * 2f64.powf(1.5 * j as f64);
            assert_eq!(k.on_sphere(j), (-unit.t * x).exp());
        }
    }

    #[test]
    fn pairing_with_unit_ball() {
        // ĝ = 1_{R}: ∫_R e^{-t|ξ|} = (1 - q^{-1}) Σ_{j <= 0} q^j e^{-t q^j}
        let field = FieldSpec::qp(3);
        let g = GridFunction::indicator_ball(field, 1, 0, 2, 2).unwrap();
        let k = HeatKernel::new(3, 1, 0.5, 1.0).unwrap();
        let got = k.pairing_grid(&g).unwrap();
        let oracle: f64 = (0..200).map(|i| (2.0 / 3.0) * 3f64.powi(-i) * (-0.5 * 3f64.powi(-i)).exp()).sum();
        assert!((got.value.re - oracle).abs() < 1e-13, "{} vs {oracle}", got.value);
        assert!(got.value.im.abs() < 1e-13);
    }
}
