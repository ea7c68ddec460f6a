//! Multivariate polynomials with integer coefficients in `x1 .. xn`.
//!
//! Text grammar (whitespace ignored):
//!
//! ```text
//! poly   ::= ['-'] term (('+' | '-') term)*
//! term   ::= coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor ::= var ['^' int]
//! var    ::= 'x' int            (1-based)
//! ```
//!
//! Juxtaposed factors such as `3x1^2x2` are accepted too.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FiniteElement;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl IntPolynomial {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, i64)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::InvalidInput(format!(
                    "exponent vector {e:?} has wrong length for n = {n}"
                )));
            }
            *map.entry(e).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        Ok(IntPolynomial { n, terms: map })
    }

    /// `c ∏ x_i^{e_i}`
    pub fn monomial(c: i64, exps: Vec<u32>) -> Self {
        let n = exps.len();
        IntPolynomial::new(n, [(exps, c)]).expect("consistent length")
    }

    /// The coordinate `x_i` (0-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(1, e)
    }

    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let parsed = Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }.poly()?;
        let max_var = parsed.iter().flat_map(|(e, _)| e.keys().copied()).max().unwrap_or(0);
        let n = match n {
            Some(n) if n < max_var => {
                return Err(Error::Parse(format!("variable x{max_var} exceeds n = {n}")))
            }
            Some(n) => n,
            None => max_var.max(1),
        };
        let terms = parsed.into_iter().map(|(e, c)| {
            let mut v = vec![0u32; n];
            for (k, p) in e {
                v[k - 1] += p;
            }
            (v, c)
        });
        let p = IntPolynomial::new(n, terms)?;
        if p.terms.is_empty() {
            return Err(Error::Parse("polynomial is identically zero".into()));
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &i64)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> Option<u32> {
        let d = self.degree();
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d).then_some(d)
    }

    /// `Some((c, e))` when the polynomial is a single term `c x^e`.
    pub fn as_monomial(&self) -> Option<(i64, &Vec<u32>)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*c, e))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &[FiniteElement]) -> FiniteElement {
        let field = x[0].field();
        let mut acc = FiniteElement::zero(field);
        for (e, c) in &self.terms {
            let mut t = FiniteElement::from_i64(field, *c);
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&xi.pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Reduction mod `p` evaluated at a point of `F_p^n`.
    pub fn eval_mod_p(&self, x: &[u32], p: u32) -> u32 {
        let p64 = p as u64;
        let mut acc = 0u64;
        for (e, c) in &self.terms {
            let mut t = c.rem_euclid(p as i64) as u64;
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t = t * *xi as u64 % p64;
                }
            }
            acc = (acc + t) % p64;
        }
        acc as u32
    }

    pub fn partial(&self, i: usize) -> IntPolynomial {
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut e2 = e.clone();
            e2[i] -= 1;
            (e2, c * e[i] as i64)
        });
        IntPolynomial::new(self.n, terms).expect("same arity")
    }

    /// Taylor coefficient polynomials: `h(ξ + y) = Σ_β T_β(ξ) y^β`, returned
    /// for `|β| >= 1`. Each `T_β` has integer coefficients.
    pub fn taylor_coefficients(&self) -> Vec<(Vec<u32>, IntPolynomial)> {
        let mut out: BTreeMap<Vec<u32>, BTreeMap<Vec<u32>, i64>> = BTreeMap::new();
        for (e, c) in &self.terms {
            // ∏ (ξ_i + y_i)^{e_i} = Σ_β ∏ C(e_i, β_i) ξ_i^{e_i-β_i} y_i^{β_i}
            let mut stack: Vec<(usize, Vec<u32>, i64)> = vec![(0, Vec::new(), *c)];
            while let Some((i, beta, coef)) = stack.pop() {
                if i == self.n {
                    if beta.iter().sum::<u32>() == 0 {
                        continue;
                    }
                    let rest: Vec<u32> = e.iter().zip(&beta).map(|(a, b)| a - b).collect();
                    *out.entry(beta).or_default().entry(rest).or_insert(0) += coef;
                    continue;
                }
                for b in 0..=e[i] {
                    let mut nb = beta.clone();
                    nb.push(b);
                    stack.push((i + 1, nb, coef * binomial(e[i], b)));
                }
            }
        }
        out.into_iter()
            .map(|(b, t)| (b, IntPolynomial::new(self.n, t).expect("same arity")))
            .filter(|(_, t)| !t.terms.is_empty())
            .collect()
    }
}

pub fn binomial(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k as i64 {
        r = r * (n as i64 - i) / (i + 1);
    }
    r
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut body = Vec::new();
            for (i, k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => body.push(format!("x{}", i + 1)),
                    _ => body.push(format!("x{}^{k}", i + 1)),
                }
            }
            let mag = c.unsigned_abs();
            let mut s = if body.is_empty() {
                mag.to_string()
            } else if mag == 1 {
                body.join("*")
            } else {
                format!("{mag}*{}", body.join("*"))
            };
            if first {
                if *c < 0 {
                    s = format!("-{s}");
                }
            } else {
                s = format!(" {} {s}", if *c < 0 { "-" } else { "+" });
            }
            first = false;
            write!(f, "{s}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

type RawTerm = (BTreeMap<usize, u32>, i64);

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at position {} in '{s}'", self.pos))
    }

    fn int(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("integer out of range"))
    }

    fn poly(mut self) -> Result<Vec<RawTerm>> {
        let mut out = Vec::new();
        let mut sign = 1i64;
        if self.peek() == Some('-') {
            sign = -1;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let (e, c) = self.term()?;
            out.push((e, sign * c));
            match self.peek() {
                None => break,
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(_) => return Err(self.err("unexpected character")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff: i64 = 1;
        let mut exps = BTreeMap::new();
        let mut saw_any = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.int()? as i64;
            saw_any = true;
            if self.peek() == Some('*') {
                self.pos += 1;
                if self.peek() != Some('x') {
                    return Err(self.err("expected variable after '*'"));
                }
            }
        }
        while self.peek() == Some('x') {
            self.pos += 1;
            let v = self.int()? as usize;
            if v == 0 {
                return Err(self.err("variables are numbered from 1"));
            }
            let mut k = 1u32;
            if self.peek() == Some('^') {
                self.pos += 1;
                k = self.int()? as u32;
            }
            *exps.entry(v).or_insert(0) += k;
            saw_any = true;
            if self.peek() == Some('*') {
                self.pos += 1;
                if self.peek() != Some('x') {
                    return Err(self.err("expected variable after '*'"));
                }
            }
        }
        if !saw_any {
            return Err(self.err("expected term"));
        }
        Ok((exps, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn parse_and_display() {
        let p = IntPolynomial::parse("x1^2 + x2^2", None).unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.is_homogeneous(), Some(2));
        assert_eq!(p.to_string(), "x1^2 + x2^2");
        let p = IntPolynomial::parse("3*x1*x2^2 - 2x1 + 5", Some(3)).unwrap();
        assert_eq!(p.nvars(), 3);
        assert_eq!(p.degree(), 3);
        assert_eq!(p.eval_mod_p(&[1, 1, 0], 7), 6);
        assert!(IntPolynomial::parse("x0", None).is_err());
        assert!(IntPolynomial::parse("x1 +", None).is_err());
        assert!(IntPolynomial::parse("x3", Some(2)).is_err());
        assert!(IntPolynomial::parse("x1 - x1", None).is_err());
    }

    #[test]
    fn monomial_detection() {
        let p = IntPolynomial::parse("x1x2", None).unwrap();
        assert_eq!(p.as_monomial(), Some((1, &vec![1, 1])));
    }

    #[test]
    fn taylor_coefficients_reassemble() {
        let p = IntPolynomial::parse("x1^3 - 2*x1*x2 + x2^2", None).unwrap();
        let t = p.taylor_coefficients();
        // h(ξ + y) - h(ξ) at ξ = (2, -1), y = (1, 3) over the integers via Q_5
        let f = FieldSpec::qp(5);
        let e = |v: i64| FiniteElement::from_i64(f, v);
        let xi = [e(2), e(-1)];
        let y = [e(1), e(3)];
        let shifted = [e(3), e(2)];
        let mut sum = FiniteElement::zero(f);
        for (beta, tb) in &t {
            let mut term = tb.eval(&xi);
            for (yi, &b) in y.iter().zip(beta) {
                term = term.mul(&yi.pow(b));
            }
            sum = sum.add(&term);
        }
        assert_eq!(sum, p.eval(&shifted).sub(&p.eval(&xi)));
    }
}
