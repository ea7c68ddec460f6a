//! Local zeta functions and pseudodifferential operators over
//! non-archimedean local fields (`Q_p` and `F_p((T))`).
//!
//! Test functions are locally constant with compact support and live on a
//! finite coset grid ([`grid::GridFunction`]); their Fourier transforms are
//! exact character sums. On top of that:
//!
//! - [`zeta`] computes Igusa series exactly, rebuilds rational zeta
//!   functions, evaluates zeta functions against `e^{-‖ξ‖^α}` and predicts
//!   candidate poles;
//! - [`vladimirov`] applies operators with symbols `∏ |h_i(ξ)|^{α_i}` and
//!   checks the Riesz kernel identities;
//! - [`fundsol`] extracts fundamental solutions of monomial operators and
//!   verifies them;
//! - [`cli`] wraps everything in a JSON-reporting command line.
//!
//! Conventions: `|x| = q^{-ord x}`, the Haar measure gives `R^n` volume 1,
//! `𝓕g(ξ) = ∫ g(x) χ(-x·ξ) dx`, `[ξ] = max(1, ‖ξ‖)` and
//! `‖g‖_l² = ∫ [ξ]^l |ĝ(ξ)|² dξ`.

pub mod cli;
pub mod error;
pub mod field;
pub mod fundsol;
pub mod grid;
pub mod poly;
pub mod rational;
pub mod spectral;
pub mod upoly;
pub mod vladimirov;
pub mod zeta;

pub use error::{Error, Result};
