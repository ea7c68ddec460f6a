//! Fundamental solutions of `A(∂, f) = 𝓕^{-1} |f| 𝓕` for monomials `f`,
//! obtained as the constant term `T₀` of the Laurent expansion of
//! `Z_ĝ(s, f) = ∫ |f(ξ)|^s ĝ(ξ) dξ` at `s = -1`.
//!
//! `T₀` is kept as an evaluation rule `g ↦ T₀(g)`; its transform is the
//! finite part of `|f|^{-1}`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{int_ord, FieldKind, FieldSpec};
use crate::grid::{Geometry, GridFunction};
use crate::poly::IntPolynomial;
use crate::rational::LambdaPoly;
use crate::spectral::{Multiplier, SpectralFunction};
use crate::upoly::Scalar;
use crate::zeta::elementary::{elementary_exact_cells, TRational};

/// Laurent terms kept around `s = -1`.
const LAURENT_ORDER: i32 = 2;
/// Tolerance for the floating-point checks.
pub const CHECK_TOL: f64 = 1e-8;

/// `f = c ∏ ξ_i^{N_i}` split into `ord c` and `N`.
fn monomial_data(field: FieldSpec, f: &IntPolynomial, n: usize) -> Result<(i64, Vec<u32>)> {
    if f.nvars() != n {
        return Err(Error::InvalidInput(format!("{f} is not in {n} variables")));
    }
    let (c, exps) = f
        .as_monomial()
        .ok_or_else(|| Error::Unsupported(format!("{f} is not a monomial; general f needs a resolution")))?;
    if exps.iter().all(|&e| e == 0) {
        return Err(Error::InvalidInput(format!("{f} is constant")));
    }
    let ord = match field.kind {
        FieldKind::Qp => int_ord(&BigInt::from(c), field.p),
        FieldKind::LaurentFp if c.rem_euclid(field.p as i64) != 0 => Some(0),
        FieldKind::LaurentFp => None,
    }
    .ok_or_else(|| Error::InvalidInput(format!("{f} vanishes in {field}")))?;
    Ok((ord, exps.clone()))
}

fn times_t_power<C: Scalar>(z: TRational<C>, k: i64) -> TRational<C> {
    if k == 0 {
        return z;
    }
    TRational { q: z.q, numer: z.numer.shift(k as usize), denom: z.denom }
}

/// `Z_ĝ(s, f)` for frequency-side cell values `weight` on `geom`.
pub fn zeta_exact_cells<C: Scalar>(
    field: FieldSpec,
    geom: &Geometry,
    weight: impl Fn(usize) -> C,
    f: &IntPolynomial,
) -> Result<TRational<C>> {
    if geom.field != field {
        return Err(Error::FieldMismatch(format!("{} vs {field}", geom.field)));
    }
    let (ord_c, exps) = monomial_data(field, f, geom.n)?;
    let ones = vec![1i64; geom.n];
    let z = elementary_exact_cells(geom, weight, &exps, &ones)?;
    Ok(times_t_power(z, ord_c))
}

/// `Z_ĝ(s, f)` as a rational function of `t = q^{-s}`.
pub fn zeta_exact_in_t(g: &GridFunction, f: &IntPolynomial) -> Result<TRational<Complex64>> {
    let gh = g.fourier();
    let vals = gh.values();
    zeta_exact_cells(g.field, &gh.geometry(), |i| vals[i], f)
}

/// Order-zero Laurent coefficient at `s = -1`, as a polynomial in `λ = ln q`.
pub fn t0_coefficient<C: Scalar>(z: &TRational<C>) -> LambdaPoly<C> {
    z.laurent_at(-1, LAURENT_ORDER).coeff(0)
}

/// `T₀(g)`.
pub fn extract_t0(g: &GridFunction, f: &IntPolynomial) -> Result<Complex64> {
    let z = zeta_exact_in_t(g, f)?;
    Ok(z.laurent_at(-1, LAURENT_ORDER).coeff_value(0))
}

/// `T₀` on exact rational frequency-side data.
pub fn extract_t0_exact(
    field: FieldSpec,
    geom: &Geometry,
    weights: &[BigRational],
    f: &IntPolynomial,
) -> Result<LambdaPoly<BigRational>> {
    if weights.len() != geom.len() {
        return Err(Error::InvalidInput(format!("{} weights for {} cells", weights.len(), geom.len())));
    }
    let z = zeta_exact_cells(field, geom, |i| weights[i].clone(), f)?;
    Ok(t0_coefficient(&z))
}

/// `lim_{s→-1} [Z(s) - principal part]` from symmetric samples at
/// `s = -1 ± h, ± h/2, ± h/4`, Richardson-extrapolated twice. Samples much
/// closer to the pole lose digits to cancellation.
pub fn t0_numeric_limit(z: &TRational<Complex64>, h: f64) -> Complex64 {
    let lx = z.laurent_at(-1, LAURENT_ORDER);
    let principal = |d: f64| -> Complex64 {
        (lx.lowest..0).map(|r| lx.coeff_value(r) * d.powi(r)).sum()
    };
    let sym = |d: f64| {
        let a = z.eval_s(Complex64::new(-1.0 + d, 0.0)) - principal(d);
        let b = z.eval_s(Complex64::new(-1.0 - d, 0.0)) - principal(-d);
        (a + b) / 2.0
    };
    let r1 = |d: f64| (sym(d / 2.0) * 4.0 - sym(d)) / 3.0;
    (r1(h / 2.0) * 16.0 - r1(h)) / 15.0
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub trial: usize,
    pub g_at_zero: Complex64,
    /// `[T₀, A g]` from the shifted zeta function.
    pub t0_of_ag: Complex64,
    pub delta_error: f64,
    /// Same quantity from the cell integral of `|f|^{s+1} ĝ` at a sample
    /// `s` compared with the shifted rational function there.
    pub shift_error: f64,
    /// `|[A* u - g, h]|` for `u = E ∗ g` and a random probe `h`.
    pub convolution_residual: f64,
    pub t0_limit_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FundsolReport {
    pub poly: String,
    pub field: String,
    pub n: usize,
    pub seed: u64,
    pub trials: Vec<TrialReport>,
    /// Cells off `f^{-1}(0)` on which `Ê |f| = 1` was checked exactly.
    pub division_cells: usize,
    pub division_failures: usize,
    pub delta_pass: bool,
    pub division_pass: bool,
    pub convolution_pass: bool,
    pub tolerance: f64,
}

impl FundsolReport {
    pub fn pass(&self) -> bool {
        self.delta_pass && self.division_pass && self.convolution_pass
    }
}

/// `Ê` on every grid cell off `f^{-1}(0)`, as `T₀` of the cell indicator
/// divided by the cell volume; returns `(cells, failures of Ê|f| = 1)`.
pub fn division_check(field: FieldSpec, geom: &Geometry, f: &IntPolynomial) -> Result<(usize, usize)> {
    let (ord_c, exps) = monomial_data(field, f, geom.n)?;
    let q = field.q();
    let vol = crate::field::q_pow(q, -(geom.m * geom.n as i64));
    let mut cells = 0;
    let mut failures = 0;
    for idx in 0..geom.len() {
        let c = geom.coords(idx);
        let ords: Option<Vec<i64>> = c.iter().map(|&a| geom.coord_ord(a)).collect();
        let Some(ords) = ords else { continue };
        cells += 1;
        let mut w = vec![BigRational::from_integer(0.into()); geom.len()];
        w[idx] = BigRational::from_integer(1.into());
        let t0 = extract_t0_exact(field, geom, &w, f)?;
        let e_hat = t0.terms.get(&0).cloned().unwrap_or_else(|| BigRational::from_integer(0.into())) / &vol;
        // |f| on the cell
        let ord_f = ord_c + ords.iter().zip(&exps).map(|(o, &e)| o * e as i64).sum::<i64>();
        let abs_f = crate::field::q_pow(q, -ord_f);
        let exact_one = t0.terms.len() <= 1 && e_hat * abs_f == BigRational::from_integer(1.into());
        if !exact_one {
            failures += 1;
        }
    }
    Ok((cells, failures))
}

/// Checks `[T₀, A g] = g(0)`, `Ê |f| = 1` and the convolution identity on
/// `trials` random grid functions on `π^{-l} R^n / π^m R^n`.
pub fn fundamental_solution_check(
    field: FieldSpec,
    f: &IntPolynomial,
    trials: usize,
    seed: u64,
    l: i64,
    m: i64,
) -> Result<FundsolReport> {
    let n = f.nvars();
    monomial_data(field, f, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(trials);
    let sample_s = Complex64::new(0.4, 0.3);
    for trial in 0..trials {
        let g = GridFunction::random(field, n, l, m, &mut rng)?;
        let h = GridFunction::random(field, n, l, m, &mut rng)?;
        let z = zeta_exact_in_t(&g, f)?;
        let shifted = z.shift_s_by_one();
        let t0_of_ag = t0_coefficient(&shifted).eval((field.q() as f64).ln());
        let g0 = g.at_zero();

        let mult = Multiplier::new(f.clone(), sample_s + 1.0);
        let direct = SpectralFunction::new(g.fourier(), vec![mult])?.integral()?.value;
        let shift_error = (direct - shifted.eval_s(sample_s)).norm();

        // [A* (E ∗ g), h] = T₀ of the function with transform |f| conj(ĝ) ĥ
        let (gh, hh) = (g.fourier(), h.fourier());
        let geom = gh.geometry();
        let w: Vec<Complex64> = gh.values().iter().zip(hh.values()).map(|(a, b)| a.conj() * b).collect();
        let zw = zeta_exact_cells(field, &geom, |i| w[i], f)?.shift_s_by_one();
        let lhs = t0_coefficient(&zw).eval((field.q() as f64).ln());
        let convolution_residual = (lhs - g.pairing(&h)?).norm();

        let t0 = z.laurent_at(-1, LAURENT_ORDER).coeff_value(0);
        let t0_limit_error = (t0 - t0_numeric_limit(&z, 0.1)).norm();

        reports.push(TrialReport {
            trial,
            g_at_zero: g0,
            t0_of_ag,
            delta_error: (t0_of_ag - g0).norm(),
            shift_error,
            convolution_residual,
            t0_limit_error,
        });
    }
    let geom = GridFunction::zeros(field, n, l, m)?.fourier().geometry();
    let (division_cells, division_failures) = division_check(field, &geom, f)?;
    let scale = |r: &TrialReport| r.g_at_zero.norm().max(1.0);
    Ok(FundsolReport {
        poly: f.to_string(),
        field: field.to_string(),
        n,
        seed,
        delta_pass: reports.iter().all(|r| r.delta_error <= CHECK_TOL * scale(r) && r.shift_error <= CHECK_TOL),
        division_pass: division_failures == 0,
        convolution_pass: reports.iter().all(|r| r.convolution_residual <= CHECK_TOL * scale(r)),
        trials: reports,
        division_cells,
        division_failures,
        tolerance: CHECK_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::rat;

    fn unit_ball_weights(field: FieldSpec, n: usize, l: i64, m: i64) -> (Geometry, Vec<BigRational>) {
        let geom = GridFunction::indicator_ball(field, n, 0, l, m).unwrap().fourier().geometry();
        let w = (0..geom.len())
            .map(|i| {
                let inside = geom.coords(i).iter().all(|&a| geom.coord_ord(a).is_none_or(|o| o >= 0));
                rat(inside as i64, 1)
            })
            .collect();
        (geom, w)
    }

    #[test]
    fn t0_of_unit_ball_is_one_third() {
        let field = FieldSpec::qp(3);
        let f = IntPolynomial::parse("x1", None).unwrap();
        let (geom, w) = unit_ball_weights(field, 1, 1, 2);
        let t0 = extract_t0_exact(field, &geom, &w, &f).unwrap();
        assert_eq!(t0, LambdaPoly::term(rat(1, 3), 0));
        let g = GridFunction::indicator_ball(field, 1, 0, 1, 2).unwrap();
        assert!((extract_t0(&g, &f).unwrap() - Complex64::new(1.0 / 3.0, 0.0)).norm() < 1e-12);
        let z = zeta_exact_in_t(&g, &f).unwrap();
        assert!((t0_numeric_limit(&z, 0.1) - 1.0 / 3.0).norm() < 1e-9);
    }

    #[test]
    fn zeta_of_unit_ball() {
        let field = FieldSpec::qp(3);
        let g = GridFunction::indicator_ball(field, 2, 0, 1, 1).unwrap();
        let f = IntPolynomial::parse("x1*x2", None).unwrap();
        let z = zeta_exact_in_t(&g, &f).unwrap();
        for s in [0.3, 1.0, 2.5] {
            let one = (2.0 / 3.0) / (1.0 - 3f64.powf(-1.0 - s));
            assert!((z.eval_s(Complex64::new(s, 0.0)).re - one * one).abs() < 1e-12);
        }
        // coefficient 3 has ord 1 over Q_3: |3 x1 x2|^s = q^{-s} |x1 x2|^s
        let f3 = IntPolynomial::parse("3*x1*x2", None).unwrap();
        let z3 = zeta_exact_in_t(&g, &f3).unwrap();
        let s = Complex64::new(0.7, 0.0);
        assert!((z3.eval_s(s) - z.eval_s(s) * 3f64.powf(-0.7)).norm() < 1e-12);
    }

    #[test]
    fn off_hyperplane_support_is_entire() {
        let field = FieldSpec::qp(3);
        // ĝ = 1_{1 + 3R}
        let base = GridFunction::from_fn(Geometry { field, n: 1, l: 1, m: 1 }, |c| {
            Complex64::new(if c[0] == 3 { 1.0 } else { 0.0 }, 0.0)
        })
        .unwrap();
        let g = base.inverse_fourier();
        let f = IntPolynomial::parse("x1", None).unwrap();
        let z = zeta_exact_in_t(&g, &f).unwrap();
        assert!(z.is_entire());
        // no pole: T₀ is Z(-1) = ∫ |ξ|^{-1} ĝ = 1/3
        let t0 = extract_t0(&g, &f).unwrap();
        assert!((t0 - z.eval_s(Complex64::new(-1.0, 0.0))).norm() < 1e-12);
        assert!((t0.re - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn t0_is_linear() {
        let field = FieldSpec::qp(2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = IntPolynomial::parse("x1*x2^2", None).unwrap();
        let a = GridFunction::random(field, 2, 1, 1, &mut rng).unwrap();
        let b = GridFunction::random(field, 2, 1, 1, &mut rng).unwrap();
        let sum = extract_t0(&a.add(&b).unwrap(), &f).unwrap();
        let parts = extract_t0(&a, &f).unwrap() + extract_t0(&b, &f).unwrap();
        assert!((sum - parts).norm() < 1e-10);
    }

    #[test]
    fn non_monomials_are_unsupported() {
        let g = GridFunction::indicator_ball(FieldSpec::qp(3), 1, 0, 1, 1).unwrap();
        let f = IntPolynomial::parse("x1 + x1^2", None).unwrap();
        assert!(matches!(zeta_exact_in_t(&g, &f), Err(Error::Unsupported(_))));
    }

    #[test]
    fn full_checks() {
        let field = FieldSpec::qp(3);
        for (poly, l, m) in [("x1", 1, 2), ("x1*x2", 1, 1)] {
            let f = IntPolynomial::parse(poly, None).unwrap();
            let r = fundamental_solution_check(field, &f, 4, 17, l, m).unwrap();
            assert!(r.pass(), "{r:#?}");
            assert!(r.division_cells > 0);
            for t in &r.trials {
                assert!(t.t0_limit_error < 1e-8, "{t:?}");
            }
        }
    }
}
