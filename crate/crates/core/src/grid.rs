//! Locally constant, compactly supported functions on `K^n` stored on the
//! finite group `(π^{-L} R / π^m R)^n`.
//!
//! A coordinate class is encoded by its base-`p` index: digit `i` is the
//! coefficient of `π^{i-L}`, `i < N = L + m`. The Fourier transform swaps the
//! roles of `L` and `m`. Character values are taken from a table of
//! `p^N`-th roots of unity indexed by the exact phase, so every term of a
//! character sum is converted to floating point exactly once.

use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldKind, FieldSpec, FiniteElement, LocalFieldElement};

#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    pub field: FieldSpec,
    pub n: usize,
    /// Support exponent: values vanish off `π^{-L} R^n`.
    pub l: i64,
    /// Resolution exponent: values are constant on cosets of `π^m R^n`.
    pub m: i64,
    values: Vec<Complex64>,
}

/// Geometry shared by all grids with the same field, dimension and exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Geometry {
    pub field: FieldSpec,
    pub n: usize,
    pub l: i64,
    pub m: i64,
}

impl Geometry {
    pub fn digits(&self) -> u32 {
        (self.l + self.m) as u32
    }

    /// Number of classes per coordinate.
    pub fn side(&self) -> u64 {
        (self.field.p as u64).pow(self.digits())
    }

    pub fn len(&self) -> usize {
        (self.side() as usize).pow(self.n as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Haar measure of one cell, `q^{-nm}`.
    pub fn cell_volume(&self) -> f64 {
        self.field.qf().powi(-(self.m * self.n as i64) as i32)
    }

    pub fn dual(&self) -> Geometry {
        Geometry { field: self.field, n: self.n, l: self.m, m: self.l }
    }

    pub fn coords(&self, mut flat: usize) -> Vec<u64> {
        let side = self.side() as usize;
        let mut out = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            out.push((flat % side) as u64);
            flat /= side;
        }
        out
    }

    pub fn flat(&self, coords: &[u64]) -> usize {
        let side = self.side() as usize;
        coords.iter().rev().fold(0usize, |acc, &c| acc * side + c as usize)
    }

    pub fn coord_add(&self, a: u64, b: u64) -> u64 {
        match self.field.kind {
            FieldKind::Qp => (a + b) % self.side(),
            FieldKind::LaurentFp => self.digitwise(a, b, |x, y, p| (x + y) % p),
        }
    }

    pub fn coord_neg(&self, a: u64) -> u64 {
        match self.field.kind {
            FieldKind::Qp => (self.side() - a) % self.side(),
            FieldKind::LaurentFp => self.digitwise(a, 0, |x, _, p| (p - x) % p),
        }
    }

    pub fn coord_sub(&self, a: u64, b: u64) -> u64 {
        self.coord_add(a, self.coord_neg(b))
    }

    fn digitwise(&self, mut a: u64, mut b: u64, f: impl Fn(u64, u64, u64) -> u64) -> u64 {
        let p = self.field.p as u64;
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.digits() {
            out += f(a % p, b % p, p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }

    /// Valuation of a coordinate class; `None` for the class of 0 (all of
    /// whose elements have valuation `>= m`).
    pub fn coord_ord(&self, a: u64) -> Option<i64> {
        if a == 0 {
            return None;
        }
        let p = self.field.p as u64;
        let mut k = 0;
        let mut x = a;
        while x.is_multiple_of(p) {
            x /= p;
            k += 1;
        }
        Some(k - self.l)
    }

    /// `min_i ord` over coordinates, `None` when every coordinate class is 0.
    pub fn cell_ord(&self, coords: &[u64]) -> Option<i64> {
        coords.iter().filter_map(|&a| self.coord_ord(a)).min()
    }

    /// `[ξ] = max(1, ‖ξ‖)` on a cell; exact because cells of positive
    /// valuation never meet `‖ξ‖ > 1`.
    pub fn bracket(&self, coords: &[u64]) -> f64 {
        match self.cell_ord(coords) {
            Some(v) if v < 0 => self.field.qf().powi(-v as i32),
            _ => 1.0,
        }
    }

    pub fn element(&self, a: u64) -> FiniteElement {
        FiniteElement::from_index(self.field, a, self.l)
    }

    /// Phase `k` with `χ(x ξ) = exp(2πi k / p^N)` for `x` of class `a` in this
    /// grid and `ξ` of class `b` in the dual grid.
    pub fn phase(&self, a: u64, b: u64) -> u64 {
        let side = self.side();
        match self.field.kind {
            FieldKind::Qp => ((a as u128 * b as u128) % side as u128) as u64,
            FieldKind::LaurentFp => {
                let p = self.field.p as u64;
                let nd = self.digits() as usize;
                let da = digits_of(a, p, nd);
                let db = digits_of(b, p, nd);
                let mut s = 0;
                for i in 0..nd {
                    s = (s + da[i] * db[nd - 1 - i]) % p;
                }
                s * side / p
            }
        }
    }
}

fn digits_of(mut a: u64, p: u64, nd: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(nd);
    for _ in 0..nd {
        out.push(a % p);
        a /= p;
    }
    out
}

/// `exp(sign · 2πi k / size)` for `k in 0..size`.
pub fn root_table(size: u64, sign: f64) -> Arc<Vec<Complex64>> {
    Arc::new(
        (0..size)
            .map(|k| {
                let th = sign * 2.0 * std::f64::consts::PI * (k as f64) / (size as f64);
                Complex64::new(th.cos(), th.sin())
            })
            .collect(),
    )
}

/// `X[b] = Σ_a x[a] w^{ab}` on `Z/p^N`, radix-`p` decimation in time.
fn dft_cyclic(x: &[Complex64], p: usize, table: &[Complex64], total: usize) -> Vec<Complex64> {
    let n = x.len();
    if n == 1 {
        return x.to_vec();
    }
    let sub_n = n / p;
    let subs: Vec<Vec<Complex64>> = (0..p)
        .map(|r| {
            let s: Vec<Complex64> = (0..sub_n).map(|j| x[r + p * j]).collect();
            dft_cyclic(&s, p, table, total)
        })
        .collect();
    let step = total / n;
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (k, o) in out.iter_mut().enumerate() {
        let mut acc = subs[0][k % sub_n];
        for (r, sub) in subs.iter().enumerate().skip(1) {
            acc += table[(r * k % n) * step] * sub[k % sub_n];
        }
        *o = acc;
    }
    out
}

/// Transform on `F_p^N` with pairing `Σ a_i b_{N-1-i}`.
fn dft_digits(x: &[Complex64], p: usize, nd: usize, table: &[Complex64], total: usize) -> Vec<Complex64> {
    let mut cur = x.to_vec();
    let step = total / p;
    let mut stride = 1;
    for _ in 0..nd {
        let mut next = vec![Complex64::new(0.0, 0.0); cur.len()];
        for base in 0..cur.len() {
            if (base / stride) % p != 0 {
                continue;
            }
            for c in 0..p {
                let mut acc = Complex64::new(0.0, 0.0);
                for a in 0..p {
                    acc += table[(a * c % p) * step] * cur[base + a * stride];
                }
                next[base + c * stride] = acc;
            }
        }
        cur = next;
        stride *= p;
    }
    // digit c_i pairs with b_{N-1-i}
    let mut out = vec![Complex64::new(0.0, 0.0); cur.len()];
    for (idx, v) in cur.into_iter().enumerate() {
        let d = digits_of(idx as u64, p as u64, nd);
        let rev = d.iter().fold(0u64, |acc, &x| acc * p as u64 + x);
        out[rev as usize] = v;
    }
    out
}

impl GridFunction {
    pub fn zeros(field: FieldSpec, n: usize, l: i64, m: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if l + m < 0 {
            return Err(Error::InvalidInput(format!("empty grid: L + m = {} < 0", l + m)));
        }
        let g = Geometry { field, n, l, m };
        if g.len() > 1 << 26 {
            return Err(Error::BudgetExceeded(format!("grid with {} cells", g.len())));
        }
        Ok(GridFunction { field, n, l, m, values: vec![Complex64::new(0.0, 0.0); g.len()] })
    }

    pub fn from_values(geom: Geometry, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != geom.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} values, got {}",
                geom.len(),
                values.len()
            )));
        }
        Ok(GridFunction { field: geom.field, n: geom.n, l: geom.l, m: geom.m, values })
    }

    pub fn from_fn(geom: Geometry, f: impl Fn(&[u64]) -> Complex64) -> Result<Self> {
        let mut g = Self::zeros(geom.field, geom.n, geom.l, geom.m)?;
        for i in 0..g.values.len() {
            g.values[i] = f(&geom.coords(i));
        }
        Ok(g)
    }

    /// Indicator of the ball `π^k R^n`; requires `-L <= k <= m`.
    pub fn indicator_ball(field: FieldSpec, n: usize, k: i64, l: i64, m: i64) -> Result<Self> {
        if k < -l || k > m {
            return Err(Error::InvalidInput(format!("ball π^{k} not resolved by grid (L={l}, m={m})")));
        }
        let geom = Geometry { field, n, l, m };
        Self::from_fn(geom, |c| {
            let inside = geom.cell_ord(c).is_none_or(|v| v >= k);
            Complex64::new(if inside { 1.0 } else { 0.0 }, 0.0)
        })
    }

    /// `q^{mn} 1_{π^m R^n}`, the approximate identity at resolution `m`.
    pub fn delta_approx(field: FieldSpec, n: usize, l: i64, m: i64) -> Result<Self> {
        let mut g = Self::zeros(field, n, l, m)?;
        g.values[0] = Complex64::new(field.qf().powi((m * n as i64) as i32), 0.0);
        Ok(g)
    }

    /// Uniform random values in the unit square on every cell.
    pub fn random<R: Rng>(field: FieldSpec, n: usize, l: i64, m: i64, rng: &mut R) -> Result<Self> {
        let mut g = Self::zeros(field, n, l, m)?;
        for v in g.values.iter_mut() {
            *v = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        Ok(g)
    }

    pub fn geometry(&self) -> Geometry {
        Geometry { field: self.field, n: self.n, l: self.l, m: self.m }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn get(&self, coords: &[u64]) -> Complex64 {
        self.values[self.geometry().flat(coords)]
    }

    /// Value at a point of `K^n`.
    pub fn eval(&self, x: &[LocalFieldElement]) -> Result<Complex64> {
        if x.len() != self.n {
            return Err(Error::InvalidInput(format!("point has {} coordinates, grid has {}", x.len(), self.n)));
        }
        let mut coords = Vec::with_capacity(self.n);
        for xi in x {
            if xi.field != self.field {
                return Err(Error::FieldMismatch(format!("{} vs {}", xi.field, self.field)));
            }
            if let Some(v) = xi.val {
                if v < -self.l {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                if v + (xi.precision() as i64) < self.m {
                    return Err(Error::InsufficientPrecision(format!(
                        "coordinate known modulo π^{}, grid resolves π^{}",
                        v + xi.precision() as i64,
                        self.m
                    )));
                }
            }
            coords.push(xi.to_finite().grid_index(self.l, self.m).unwrap());
        }
        Ok(self.get(&coords))
    }

    /// Value at the origin.
    pub fn at_zero(&self) -> Complex64 {
        self.values[0]
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut g = self.clone();
        g.values.iter_mut().for_each(|v| *v = f(*v));
        g
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|v| v * c)
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    /// `x -> g(-x)`
    pub fn reflect(&self) -> Self {
        let geom = self.geometry();
        let mut out = self.clone();
        for (i, v) in self.values.iter().enumerate() {
            let c: Vec<u64> = geom.coords(i).iter().map(|&a| geom.coord_neg(a)).collect();
            out.values[geom.flat(&c)] = *v;
        }
        out
    }

    /// Same function on a finer/larger grid; requires `l >= self.l`, `m >= self.m`.
    pub fn regrid(&self, l: i64, m: i64) -> Result<Self> {
        if l < self.l || m < self.m {
            return Err(Error::InvalidInput(format!(
                "cannot coarsen grid (L={}, m={}) to (L={l}, m={m})",
                self.l, self.m
            )));
        }
        if l == self.l && m == self.m {
            return Ok(self.clone());
        }
        let old = self.geometry();
        let new = Geometry { field: self.field, n: self.n, l, m };
        let pad = (self.field.p as u64).pow((l - self.l) as u32);
        let old_side = old.side();
        Self::from_fn(new, |c| {
            let mut oc = Vec::with_capacity(c.len());
            for &a in c {
                if a % pad != 0 {
                    return Complex64::new(0.0, 0.0);
                }
                oc.push((a / pad) % old_side);
            }
            self.get(&oc)
        })
    }

    pub fn common_grid(&self, o: &Self) -> Result<(Self, Self)> {
        if self.field != o.field || self.n != o.n {
            return Err(Error::FieldMismatch(format!(
                "{} in dim {} vs {} in dim {}",
                self.field, self.n, o.field, o.n
            )));
        }
        let l = self.l.max(o.l);
        let m = self.m.max(o.m);
        Ok((self.regrid(l, m)?, o.regrid(l, m)?))
    }

    fn zip(&self, o: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        let (a, b) = self.common_grid(o)?;
        let mut out = a.clone();
        for (i, v) in out.values.iter_mut().enumerate() {
            *v = f(a.values[i], b.values[i]);
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip(o, |x, y| x + y)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip(o, |x, y| x - y)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.zip(o, |x, y| x * y)
    }

    /// `(𝓕g)(ξ) = ∫ g(x) χ(-x·ξ) dx`, returned on the dual grid.
    pub fn fourier(&self) -> GridFunction {
        self.transform(-1.0)
    }

    /// `(𝓕^{-1}g)(x) = ∫ g(ξ) χ(x·ξ) dξ`.
    pub fn inverse_fourier(&self) -> GridFunction {
        self.transform(1.0)
    }

    fn transform(&self, sign: f64) -> GridFunction {
        let geom = self.geometry();
        let side = geom.side() as usize;
        let p = self.field.p as usize;
        let nd = geom.digits() as usize;
        let table = root_table(side as u64, sign);
        let mut data = self.values.clone();
        let mut stride = 1usize;
        for _ in 0..self.n {
            let block = stride * side;
            let lines: Vec<(usize, Vec<Complex64>)> = (0..data.len() / side)
                .into_par_iter()
                .map(|line| {
                    let base = (line / stride) * block + line % stride;
                    let x: Vec<Complex64> = (0..side).map(|j| data[base + j * stride]).collect();
                    let y = match self.field.kind {
                        FieldKind::Qp => dft_cyclic(&x, p, &table, side),
                        FieldKind::LaurentFp => dft_digits(&x, p, nd, &table, side),
                    };
                    (base, y)
                })
                .collect();
            for (base, y) in lines {
                for (j, v) in y.into_iter().enumerate() {
                    data[base + j * stride] = v;
                }
            }
            stride *= side;
        }
        let vol = geom.cell_volume();
        data.iter_mut().for_each(|v| *v *= vol);
        GridFunction { field: self.field, n: self.n, l: self.m, m: self.l, values: data }
    }

    /// `‖g‖_{L²}` from the space-side values.
    pub fn l2_norm(&self) -> f64 {
        let vol = self.geometry().cell_volume();
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * vol).sqrt()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `‖g‖_l² = ∫ [ξ]^l |ĝ(ξ)|² dξ`; negative `l` gives the dual norms.
    pub fn sobolev_norm(&self, l: f64) -> f64 {
        self.fourier().spectral_weighted_norm(l)
    }

    /// Same weighted sum evaluated directly on frequency-side values.
    pub fn spectral_weighted_norm(&self, l: f64) -> f64 {
        let geom = self.geometry();
        let vol = geom.cell_volume();
        let s: f64 = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| geom.bracket(&geom.coords(i)).powf(l) * v.norm_sqr())
            .sum();
        (s * vol).sqrt()
    }

    /// `[f, g] = ∫ conj(f̂) ĝ`.
    pub fn pairing(&self, o: &Self) -> Result<Complex64> {
        let (a, b) = self.common_grid(o)?;
        let (fa, fb) = (a.fourier(), b.fourier());
        let vol = fa.geometry().cell_volume();
        Ok(fa.values.iter().zip(&fb.values).map(|(x, y)| x.conj() * y).sum::<Complex64>() * vol)
    }

    /// `(f * g)(x) = ∫ f(y) g(x - y) dy`, summed directly over the group.
    pub fn convolve(&self, o: &Self) -> Result<Self> {
        let (a, b) = self.common_grid(o)?;
        let geom = a.geometry();
        let vol = geom.cell_volume();
        let nz: Vec<(Vec<u64>, Complex64)> = a
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.norm_sqr() > 0.0)
            .map(|(i, v)| (geom.coords(i), *v))
            .collect();
        let values: Vec<Complex64> = (0..geom.len())
            .into_par_iter()
            .map(|i| {
                let x = geom.coords(i);
                let mut acc = Complex64::new(0.0, 0.0);
                let mut diff = vec![0u64; geom.n];
                for (y, fy) in &nz {
                    for k in 0..geom.n {
                        diff[k] = geom.coord_sub(x[k], y[k]);
                    }
                    acc += fy * b.values[geom.flat(&diff)];
                }
                acc * vol
            })
            .collect();
        GridFunction::from_values(geom, values)
    }

    /// `(P g)(x_I) = ∫ χ(x_J · ξ⁰_J) g(x_I, x_J) dx_J` for the coordinates `J`.
    pub fn partial_fourier_restrict(&self, j: &[usize], xi0: &[LocalFieldElement]) -> Result<Self> {
        if j.is_empty() || j.len() >= self.n || j.len() != xi0.len() {
            return Err(Error::InvalidInput(
                "J must be a nonempty proper subset with one ξ⁰ coordinate each".into(),
            ));
        }
        if j.iter().any(|&k| k >= self.n) {
            return Err(Error::InvalidInput("coordinate index out of range".into()));
        }
        let geom = self.geometry();
        let dual = geom.dual();
        let mut b = Vec::with_capacity(j.len());
        for x in xi0 {
            if x.field != self.field {
                return Err(Error::FieldMismatch(format!("{} vs {}", x.field, self.field)));
            }
            if let Some(v) = x.val {
                if v < -self.m {
                    return Err(Error::InvalidInput(format!(
                        "‖ξ⁰‖ = q^{} exceeds the grid's frequency support q^{}",
                        -v, self.m
                    )));
                }
                if v + (x.precision() as i64) < self.l {
                    return Err(Error::InsufficientPrecision(format!(
                        "ξ⁰ must be known modulo π^{}",
                        self.l
                    )));
                }
            }
            b.push(x.to_finite().grid_index(dual.l, dual.m).unwrap());
        }
        let i_coords: Vec<usize> = (0..self.n).filter(|k| !j.contains(k)).collect();
        let out_geom = Geometry { field: self.field, n: i_coords.len(), l: self.l, m: self.m };
        let side = geom.side();
        let table = root_table(side, 1.0);
        let vol_j = self.field.qf().powi(-(self.m * j.len() as i64) as i32);
        let mut out = GridFunction::zeros(self.field, out_geom.n, self.l, self.m)?;
        for (idx, v) in self.values.iter().enumerate() {
            let c = geom.coords(idx);
            let mut ph = 0u64;
            for (k, &jj) in j.iter().enumerate() {
                ph = (ph + geom.phase(c[jj], b[k])) % side;
            }
            let ci: Vec<u64> = i_coords.iter().map(|&k| c[k]).collect();
            out.values[out_geom.flat(&ci)] += v * table[ph as usize] * vol_j;
        }
        Ok(out)
    }

    /// `d(f,g) = max_{l <= l_max} 2^{-l} ‖f-g‖_l / (1 + ‖f-g‖_l)`. Terms with
    /// `2^{-l}` below the running maximum cannot exceed it, so the scan stops
    /// there.
    pub fn hinf_metric(&self, o: &Self, l_max: u32) -> Result<f64> {
        let d = self.sub(o)?.fourier();
        let mut best = 0.0f64;
        for l in 0..=l_max {
            let w = 0.5f64.powi(l as i32);
            if w <= best {
                break;
            }
            let x = d.spectral_weighted_norm(l as f64);
            best = best.max(w * x / (1.0 + x));
        }
        Ok(best)
    }
}

/// `C(n,l)` with `‖g‖_∞ <= ‖ĝ‖_{L¹} <= C(n,l) ‖g‖_l`, finite for `l > n`:
/// `C² = ∫ [ξ]^{-l} dξ = 1 + (1 - q^{-n}) q^{n-l} / (1 - q^{n-l})`.
pub fn sup_bound_constant(q: f64, n: usize, l: f64) -> Option<f64> {
    let n = n as f64;
    if l <= n {
        return None;
    }
    let r = q.powf(n - l);
    Some((1.0 + (1.0 - q.powf(-n)) * r / (1.0 - r)).sqrt())
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize)]
pub struct CellValue {
    pub coset: Vec<Vec<u32>>,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize)]
pub struct GridFunctionJson {
    pub field: FieldSpec,
    pub n: usize,
    #[serde(rename = "L")]
    pub l: i64,
    pub m: i64,
    pub values: Vec<CellValue>,
}

impl GridFunction {
    pub fn to_json(&self, dense: bool) -> GridFunctionJson {
        let geom = self.geometry();
        let p = self.field.p as u64;
        let nd = geom.digits() as usize;
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| dense || v.norm_sqr() > 0.0)
            .map(|(i, v)| CellValue {
                coset: geom
                    .coords(i)
                    .iter()
                    .map(|&a| digits_of(a, p, nd).into_iter().map(|d| d as u32).collect())
                    .collect(),
                re: v.re,
                im: v.im,
            })
            .collect();
        GridFunctionJson { field: self.field, n: self.n, l: self.l, m: self.m, values }
    }

    pub fn from_json(j: &GridFunctionJson) -> Result<Self> {
        let field = FieldSpec::new(j.field.kind, j.field.p)?;
        let mut g = GridFunction::zeros(field, j.n, j.l, j.m)?;
        let geom = g.geometry();
        let nd = geom.digits() as usize;
        for cell in &j.values {
            if cell.coset.len() != j.n {
                return Err(Error::InvalidInput(format!("coset {:?} has wrong dimension", cell.coset)));
            }
            let mut c = Vec::with_capacity(j.n);
            for d in &cell.coset {
                if d.len() > nd || d.iter().any(|&x| x >= field.p) {
                    return Err(Error::InvalidInput(format!("bad coset digits {d:?}")));
                }
                c.push(d.iter().rev().fold(0u64, |acc, &x| acc * field.p as u64 + x as u64));
            }
            g.values[geom.flat(&c)] = Complex64::new(cell.re, cell.im);
        }
        Ok(g)
    }
}
