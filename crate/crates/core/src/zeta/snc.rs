//! Homogeneous forms that are strongly non-degenerate mod `π`.
//!
//! For such `f` of degree `d` in `n` variables, splitting `R^n` into `π R^n`
//! and the unit sphere gives `Z = q^{-n} t^d Z + Z₀` where `Z₀` is the integral
//! over the unit sphere, and `Z₀ = L(t) / (1 - q^{-1} t)` with `L` polynomial.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{q_pow, FieldSpec};
use crate::poly::IntPolynomial;
use crate::rational::{reconstruct_from_series, RationalFunctionT};
use crate::upoly::Poly;
use crate::zeta::igusa::ZetaSeries;

/// Series terms consumed by the reconstruction; the rest are held out.
const FIT_TERMS: usize = 4;

#[derive(Clone, Debug)]
pub struct SncForm {
    pub n: usize,
    pub d: u32,
    /// Integral over the unit sphere.
    pub z0: RationalFunctionT,
    /// `(1 - q^{-1} t) Z₀`.
    pub l_poly: Poly<BigRational>,
    /// `Z₀ / (1 - q^{-n} t^d)`.
    pub zeta: RationalFunctionT,
    /// Series coefficients checked against the reconstruction but not used
    /// to build it.
    pub held_out: usize,
}

/// Degree of `f` after checking it is a form with unit coefficients.
pub fn check_unit_form(field: FieldSpec, f: &IntPolynomial) -> Result<u32> {
    let d = f
        .is_homogeneous()
        .ok_or_else(|| Error::InvalidInput(format!("{f} is not homogeneous")))?;
    if d == 0 {
        return Err(Error::InvalidInput(format!("{f} is constant")));
    }
    if let Some((_, c)) = f.terms().find(|(_, c)| c.rem_euclid(field.p as i64) == 0) {
        return Err(Error::InvalidInput(format!("coefficient {c} of {f} is not a unit")));
    }
    Ok(d)
}

/// Looks for `a ≠ 0` in `F_p^n` with `f̄(a) = ∇f̄(a) = 0`.
pub fn singular_point_mod_p(f: &IntPolynomial, p: u32) -> Option<Vec<u32>> {
    let n = f.nvars();
    let grads: Vec<IntPolynomial> = (0..n).map(|i| f.partial(i)).collect();
    let total = (p as u64).pow(n as u32);
    let mut a = vec![0u32; n];
    for idx in 1..total {
        let mut r = idx;
        for x in a.iter_mut() {
            *x = (r % p as u64) as u32;
            r /= p as u64;
        }
        if f.eval_mod_p(&a, p) == 0 && grads.iter().all(|g| g.eval_mod_p(&a, p) == 0) {
            return Some(a.clone());
        }
    }
    None
}

/// Rebuilds `Z₀` and `Z` from a truncated series of `Z(s, f)`.
pub fn snc_form_z0(field: FieldSpec, f: &IntPolynomial, series: &ZetaSeries) -> Result<SncForm> {
    let d = check_unit_form(field, f)?;
    if let Some(a) = singular_point_mod_p(f, field.p) {
        return Err(Error::NondegeneracyFailed(a));
    }
    let q = field.q();
    let n = f.nvars();
    if series.q != q {
        return Err(Error::FieldMismatch(format!("series has q = {}, field has q = {q}", series.q)));
    }
    if series.terms() < FIT_TERMS + 1 {
        return Err(Error::InvalidInput(format!(
            "need more than {FIT_TERMS} series terms, got {}",
            series.terms()
        )));
    }
    let qn = q_pow(q, -(n as i64));
    let z0_series: Vec<BigRational> = (0..series.terms())
        .map(|k| {
            let back = if k >= d as usize { &series.coeffs[k - d as usize] * &qn } else { BigRational::zero() };
            &series.coeffs[k] - back
        })
        .collect();
    let z0 = reconstruct_from_series(q, &z0_series, 1, 1)?;
    let sphere_pole = RationalFunctionT::one_minus(q_pow(q, -1), 1);
    if !z0.denominator_divides(&sphere_pole) {
        return Err(Error::NoSolution);
    }
    let l_poly = {
        let prod = z0.mul(&RationalFunctionT::from_poly(q, sphere_pole.clone()))?;
        if !prod.is_polynomial() {
            return Err(Error::NoSolution);
        }
        // denominators are normalized to constant term 1
        prod.numer().clone()
    };
    let cone = RationalFunctionT::one_minus(qn, d as usize);
    let zeta = z0.div(&RationalFunctionT::from_poly(q, cone.clone()))?;
    if !zeta.denominator_divides(&(&sphere_pole * &cone)) {
        return Err(Error::NoSolution);
    }
    if zeta.series(series.terms())? != series.coeffs {
        return Err(Error::NoSolution);
    }
    Ok(SncForm { n, d, z0, l_poly, zeta, held_out: series.terms() - FIT_TERMS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::rat;
    use crate::zeta::igusa::igusa_series;

    #[test]
    fn sum_of_two_squares() {
        for p in [3u32, 5] {
            let field = FieldSpec::qp(p);
            let f = IntPolynomial::parse("x1^2 + x2^2", None).unwrap();
            let s = igusa_series(field, &f, 10).unwrap();
            let form = snc_form_z0(field, &f, &s).unwrap();
            assert!(form.l_poly.degree().unwrap() <= 1);
            assert_eq!(form.held_out, 6);
            // Z₀ by counting residues: points of F_p^2∖0 where f̄ ≠ 0 have
            // |f| = 1; smooth zeros contribute (1 - q^{-1}) t / (1 - q^{-1} t).
            let zeros = if p % 4 == 1 { 2 * (p as i64 - 1) } else { 0 };
            let pp = (p * p) as i64;
            let units = pp - 1 - zeros;
            let direct = RationalFunctionT::new(
                p as u64,
                Poly::new(vec![rat(units, pp), rat(zeros, pp) * (rat(1, 1) - rat(1, p as i64)) - rat(units, pp * p as i64)]),
                RationalFunctionT::one_minus(rat(1, p as i64), 1),
            )
            .unwrap();
            assert_eq!(form.z0, direct);
        }
    }

    #[test]
    fn linear_form_has_constant_z0() {
        let field = FieldSpec::qp(3);
        let f = IntPolynomial::parse("x1", None).unwrap();
        let form = snc_form_z0(field, &f, &igusa_series(field, &f, 8).unwrap()).unwrap();
        assert_eq!(form.z0, RationalFunctionT::constant(3, rat(2, 3)));
    }

    #[test]
    fn degenerate_forms_are_rejected() {
        let field = FieldSpec::qp(3);
        let f = IntPolynomial::parse("x1^2 + 2*x1*x2 + x2^2", None).unwrap();
        let s = igusa_series(field, &f, 8).unwrap();
        assert!(matches!(snc_form_z0(field, &f, &s), Err(Error::NondegeneracyFailed(_))));
        let f = IntPolynomial::parse("x1^2 + x2^3", None).unwrap();
        assert!(matches!(snc_form_z0(field, &f, &s), Err(Error::InvalidInput(_))));
        let f = IntPolynomial::parse("x1^2 + 3*x2^2", None).unwrap();
        assert!(matches!(snc_form_z0(field, &f, &s), Err(Error::InvalidInput(_))));
    }
}
