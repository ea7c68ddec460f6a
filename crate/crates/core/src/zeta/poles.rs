//! Candidate real parts of poles from numerical data `(N_E, v_E)` and
//! generalized arithmetic progressions.

use serde::Serialize;

use crate::error::{Error, Result};

/// Progression built from steps `γ_1, γ_2, ...` with `γ_1 >= 1`:
/// `m_0 = 0` and `m_l = γ_1 + ... + γ_l - 1` for `l >= 1`.
///
/// With `repeat_last` the final step repeats forever, so `[α + 1, α]`
/// yields `m_l = α l`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneralizedProgression {
    pub gammas: Vec<f64>,
    pub repeat_last: bool,
}

impl GeneralizedProgression {
    pub fn new(gammas: Vec<f64>, repeat_last: bool) -> Result<Self> {
        if let Some(g) = gammas.iter().find(|g| !(**g > 0.0 && g.is_finite())) {
            return Err(Error::InvalidInput(format!("progression step {g} must be positive")));
        }
        if let Some(&g1) = gammas.first() {
            if g1 < 1.0 {
                return Err(Error::InvalidInput(format!("first step {g1} must be at least 1")));
            }
        } else if repeat_last {
            return Err(Error::InvalidInput("an empty progression cannot repeat".into()));
        }
        Ok(GeneralizedProgression { gammas, repeat_last })
    }

    /// Only `m_0 = 0`.
    pub fn trivial() -> Self {
        GeneralizedProgression { gammas: Vec::new(), repeat_last: false }
    }

    /// `m_l = α l`.
    pub fn arithmetic(alpha: f64) -> Result<Self> {
        Self::new(vec![alpha + 1.0, alpha], true)
    }

    /// `m_0 .. m_depth` (fewer if the steps run out).
    pub fn terms(&self, depth: usize) -> Vec<f64> {
        let mut out = vec![0.0];
        let mut acc = 0.0;
        for l in 1..=depth {
            let g = match self.gammas.get(l - 1) {
                Some(g) => *g,
                None if self.repeat_last => *self.gammas.last().unwrap(),
                None => break,
            };
            acc += g;
            out.push(acc - 1.0);
        }
        out
    }

    /// Parses `"2,1,1,..."`; a trailing `...` repeats the last step.
    pub fn parse(s: &str) -> Result<Self> {
        let mut parts: Vec<&str> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        let repeat = parts.last() == Some(&"...");
        if repeat {
            parts.pop();
        }
        let gammas = parts
            .iter()
            .map(|p| p.parse::<f64>().map_err(|_| Error::Parse(format!("bad progression step '{p}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gammas, repeat)
    }
}

/// Pairs `(N_E, v_E)` of positive integers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResolutionData(pub Vec<(u32, u32)>);

impl ResolutionData {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.is_empty() || pairs.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::InvalidInput("numerical data must be nonempty pairs of positive integers".into()));
        }
        Ok(ResolutionData(pairs))
    }

    /// Parses `"(1,1);(2,2)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let pairs = s
            .split(';')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                let inner = p
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("expected '(N,v)', got '{p}'")))?;
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("expected '(N,v)', got '{p}'")))?;
                let parse = |x: &str| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad integer '{x}'")));
                Ok((parse(a)?, parse(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoleSource {
    /// Index into the numerical data.
    pub datum: usize,
    /// Progression index `l` of `m_l`.
    pub term: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoleCandidate {
    pub real_part: f64,
    pub sources: Vec<PoleSource>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolePrediction {
    /// Sorted from the rightmost candidate leftwards.
    pub candidates: Vec<PoleCandidate>,
}

impl PolePrediction {
    pub fn real_parts(&self) -> Vec<f64> {
        self.candidates.iter().map(|c| c.real_part).collect()
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.candidates.iter().any(|c| (c.real_part - x).abs() <= tol)
    }
}

/// All `-(v_E + m_l) / N_E` for `l <= depth`, merged when equal.
pub fn predict_poles(
    data: &ResolutionData,
    progressions: &[GeneralizedProgression],
    depth: usize,
) -> Result<PolePrediction> {
    if data.0.len() != progressions.len() {
        return Err(Error::InvalidInput(format!(
            "{} data pairs but {} progressions",
            data.0.len(),
            progressions.len()
        )));
    }
    let mut raw: Vec<(f64, PoleSource)> = Vec::new();
    for (datum, (&(nn, v), prog)) in data.0.iter().zip(progressions).enumerate() {
        for (term, m) in prog.terms(depth).into_iter().enumerate() {
            raw.push((-(v as f64 + m) / nn as f64, PoleSource { datum, term }));
        }
    }
    raw.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.datum.cmp(&b.1.datum)));
    let mut candidates: Vec<PoleCandidate> = Vec::new();
    for (x, src) in raw {
        match candidates.last_mut() {
            Some(c) if (c.real_part - x).abs() < 1e-12 => c.sources.push(src),
            _ => candidates.push(PoleCandidate { real_part: x, sources: vec![src] }),
        }
    }
    Ok(PolePrediction { candidates })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snc_forms_reproduce_known_set() {
        // data {(1,1), (d,n)} with m_l = αl on the second datum
        for (n, d, alpha) in [(2u32, 2u32, 1.0), (3, 2, 1.0), (2, 3, 2.0)] {
            let data = ResolutionData::new(vec![(1, 1), (d, n)]).unwrap();
            let progs = [GeneralizedProgression::trivial(), GeneralizedProgression::arithmetic(alpha).unwrap()];
            let pred = predict_poles(&data, &progs, 8).unwrap();
            let mut expect: Vec<f64> = std::iter::once(-1.0)
                .chain((0..=8).map(|l| -(n as f64 + alpha * l as f64) / d as f64))
                .collect();
            expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
            expect.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
            assert_eq!(pred.real_parts(), expect);
        }
    }

    #[test]
    fn single_datum_substitution() {
        let data = ResolutionData::new(vec![(1, 3)]).unwrap();
        let prog = GeneralizedProgression::new(vec![2.5, 0.5, 1.0], false).unwrap();
        let pred = predict_poles(&data, &[prog], 10).unwrap();
        assert_eq!(pred.real_parts(), vec![-3.0, -4.5, -5.0, -6.0]);
        assert!(pred.real_parts().iter().all(|x| *x < 0.0));
    }

    #[test]
    fn parsing() {
        let d = ResolutionData::parse("(1,1);(2,2)").unwrap();
        assert_eq!(d.0, vec![(1, 1), (2, 2)]);
        let p = GeneralizedProgression::parse("2,1,...").unwrap();
        assert_eq!(p.terms(3), vec![0.0, 1.0, 2.0, 3.0]);
        assert!(GeneralizedProgression::parse("0.5,1").is_err());
        assert!(ResolutionData::parse("(0,1)").is_err());
    }
}
